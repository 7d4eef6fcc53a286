//! Replica-count (degree) distributions.
//!
//! Active terminals draw the number of packet copies to send from a
//! distribution shared by the whole network, written in polynomial form as
//! `Λ(x) = Σ_ℓ Λ_ℓ x^ℓ` where `Λ_ℓ` is the probability of sending `ℓ`
//! copies. The text syntax accepted by config files and the CLI is
//! comma-separated `degree:probability` pairs, e.g. `3:1.0` or
//! `2:0.5,3:0.5`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::stream::Stream;

/// Tolerance on the probability sum. Probabilities are validated, never
/// renormalized: a sum off by more than this is a config error.
pub const PROBABILITY_SUM_TOL: f64 = 1e-12;

/// A validated replica-count distribution.
///
/// Entries are stored sorted by ascending degree; sampling walks the
/// cumulative sum in that order and consumes exactly one draw from the
/// stream.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    entries: Vec<(u32, f64)>,
    max_degree: u32,
}

impl DegreeDistribution {
    /// Validate a raw list of `(degree, probability)` pairs.
    ///
    /// Rejects empty lists, duplicate degrees, degrees < 1, probabilities
    /// <= 0, and probability sums that differ from 1 by more than
    /// [`PROBABILITY_SUM_TOL`]. Probabilities are preserved exactly.
    pub fn new(raw: &[(u32, f64)]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidDistribution("no entries".into()));
        }
        let mut entries = raw.to_vec();
        entries.sort_by_key(|&(degree, _)| degree);
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::InvalidDistribution(format!(
                    "duplicate degree {}",
                    window[0].0
                )));
            }
        }
        let mut sum = 0.0;
        for &(degree, prob) in &entries {
            if degree < 1 {
                return Err(Error::InvalidDistribution("degree must be >= 1".into()));
            }
            if !prob.is_finite() || prob <= 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "probability for degree {degree} must be positive and finite, got {prob}"
                )));
            }
            sum += prob;
        }
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        let max_degree = entries.last().map(|&(degree, _)| degree).unwrap_or(0);
        Ok(Self {
            entries,
            max_degree,
        })
    }

    /// The regular distribution `Λ(x) = x^degree` (a single entry with
    /// probability 1).
    pub fn regular(degree: u32) -> Result<Self> {
        Self::new(&[(degree, 1.0)])
    }

    /// Entries sorted by ascending degree.
    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    /// Largest degree with positive probability.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Draw a degree with probability `Λ_ℓ`.
    ///
    /// Consumes exactly one uniform draw regardless of where the walk stops,
    /// so stream consumption is deterministic per sample.
    pub fn sample(&self, stream: &mut Stream) -> u32 {
        let u: f64 = stream.gen();
        let mut cum = 0.0;
        for &(degree, prob) in &self.entries {
            cum += prob;
            if u < cum {
                return degree;
            }
        }
        // Rounding in the cumulative sum can leave u just below 1 uncovered.
        self.max_degree
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (degree, prob)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{degree}:{prob}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::InvalidDistribution(format!(
                    "empty entry in \"{s}\""
                )));
            }
            let (degree, prob) = part.split_once(':').ok_or_else(|| {
                Error::InvalidDistribution(format!(
                    "entry \"{part}\" is not of the form degree:probability"
                ))
            })?;
            let degree: u32 = degree.trim().parse().map_err(|_| {
                Error::InvalidDistribution(format!("bad degree in \"{part}\""))
            })?;
            let prob: f64 = prob.trim().parse().map_err(|_| {
                Error::InvalidDistribution(format!("bad probability in \"{part}\""))
            })?;
            raw.push((degree, prob));
        }
        Self::new(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::derive_stream;

    #[test]
    fn regular_three_is_valid() {
        let dist = DegreeDistribution::new(&[(3, 1.0)]).unwrap();
        assert_eq!(dist.entries(), &[(3, 1.0)]);
        assert_eq!(dist.max_degree(), 3);
    }

    #[test]
    fn two_point_distribution_is_valid() {
        let dist = DegreeDistribution::new(&[(2, 0.5), (3, 0.5)]).unwrap();
        assert_eq!(dist.max_degree(), 3);
    }

    #[test]
    fn sum_below_one_rejected() {
        assert!(DegreeDistribution::new(&[(3, 0.9)]).is_err());
    }

    #[test]
    fn invalid_entries_rejected() {
        // duplicate degrees
        assert!(DegreeDistribution::new(&[(2, 0.5), (2, 0.5)]).is_err());
        // degree < 1
        assert!(DegreeDistribution::new(&[(0, 1.0)]).is_err());
        // zero and negative probabilities
        assert!(DegreeDistribution::new(&[(1, 0.0), (2, 1.0)]).is_err());
        assert!(DegreeDistribution::new(&[(1, -0.5), (2, 1.5)]).is_err());
        // empty
        assert!(DegreeDistribution::new(&[]).is_err());
        // sum off beyond tolerance
        assert!(DegreeDistribution::new(&[(1, 0.5), (2, 0.5 + 1e-9)]).is_err());
        // sum off within tolerance is fine
        assert!(DegreeDistribution::new(&[(1, 0.5), (2, 0.5 + 1e-14)]).is_ok());
    }

    #[test]
    fn degenerate_distributions_sample_their_degree() {
        let mut stream = derive_stream(7, &[]);
        let x3 = DegreeDistribution::regular(3).unwrap();
        let x1 = DegreeDistribution::regular(1).unwrap();
        for _ in 0..100 {
            assert_eq!(x3.sample(&mut stream), 3);
            assert_eq!(x1.sample(&mut stream), 1);
        }
    }

    #[test]
    fn sampling_matches_probabilities() {
        // Λ(x) = 0.5 x^2 + 0.5 x^3, 1e6 samples: frequency of 2 within
        // 0.5 +/- 0.005 (about 3 sigma for a fair coin at this n).
        let dist = DegreeDistribution::new(&[(2, 0.5), (3, 0.5)]).unwrap();
        let mut stream = derive_stream(11, &[]);
        let n = 1_000_000u64;
        let twos = (0..n).filter(|_| dist.sample(&mut stream) == 2).count();
        let freq = twos as f64 / n as f64;
        assert!(
            (freq - 0.5).abs() < 0.005,
            "frequency of degree 2 was {freq}"
        );
    }

    #[test]
    fn chi_square_goodness_of_fit() {
        // Three-entry distribution, df = 2. Critical value of the chi-square
        // distribution at significance 0.001 with 2 degrees of freedom.
        const CHI2_CRIT_DF2_P999: f64 = 13.8155;
        let dist = DegreeDistribution::new(&[(1, 0.2), (2, 0.3), (3, 0.5)]).unwrap();
        let mut stream = derive_stream(13, &[]);
        let n = 1_000_000u64;
        let mut counts = [0u64; 4];
        for _ in 0..n {
            counts[dist.sample(&mut stream) as usize] += 1;
        }
        let mut chi2 = 0.0;
        for &(degree, prob) in dist.entries() {
            let expected = prob * n as f64;
            let observed = counts[degree as usize] as f64;
            chi2 += (observed - expected).powi(2) / expected;
        }
        assert!(chi2 < CHI2_CRIT_DF2_P999, "chi2 = {chi2}");
    }

    #[test]
    fn parse_round_trip() {
        let dist: DegreeDistribution = "2:0.5, 3:0.5".parse().unwrap();
        assert_eq!(dist.entries(), &[(2, 0.5), (3, 0.5)]);
        assert_eq!(dist.to_string().parse::<DegreeDistribution>().unwrap(), dist);
        assert!("3:0.9".parse::<DegreeDistribution>().is_err());
        assert!("3".parse::<DegreeDistribution>().is_err());
        assert!("a:1.0".parse::<DegreeDistribution>().is_err());
        assert!("".parse::<DegreeDistribution>().is_err());
    }

    #[test]
    fn identical_streams_identical_samples() {
        let dist = DegreeDistribution::new(&[(1, 0.25), (2, 0.25), (3, 0.5)]).unwrap();
        let mut a = derive_stream(5, &[1]);
        let mut b = derive_stream(5, &[1]);
        for _ in 0..1000 {
            assert_eq!(dist.sample(&mut a), dist.sample(&mut b));
        }
    }
}
