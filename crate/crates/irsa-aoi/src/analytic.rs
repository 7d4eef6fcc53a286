//! Closed-form and semi-analytic AoI models.
//!
//! For IRSA under i.i.d. activation the average network AoI is exactly
//! `m/2 + U/S`; the slotted ALOHA baseline obeys `1/2 + U/S`. For AT-IRSA an
//! approximation treats the inter-update time as `Y = m (A + B)` slots:
//! a round-robin wait of `A = U / (m G*)` frames until the age threshold is
//! exceeded, plus `B` further frames until a delivery succeeds, with `B`
//! geometric on {0, 1, ...} with success parameter `p_s` (the probability
//! that a packet sent in a frame at the target load is decoded). The model
//! is evaluated both through the closed-form expression and through the
//! moments of `Y`; the two routes are algebraically identical.

use rand::Rng;
use rayon::prelude::*;

use crate::decoder::decode_frame;
use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};
use crate::frame::{place_replicas, FrameOccupancy, Transmission};
use crate::stream::{derive_stream, purpose, Stream};

/// Average network AoI of IRSA at throughput `S`: `m/2 + U/S` slots.
pub fn irsa_aoi(frame_slots: u32, num_users: u32, throughput: f64) -> Result<f64> {
    if throughput <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "throughput must be positive, got {throughput}"
        )));
    }
    Ok(frame_slots as f64 / 2.0 + num_users as f64 / throughput)
}

/// Average network AoI of slotted ALOHA at throughput `S`: `1/2 + U/S` slots.
pub fn sa_aoi(num_users: u32, throughput: f64) -> Result<f64> {
    if throughput <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "throughput must be positive, got {throughput}"
        )));
    }
    Ok(0.5 + num_users as f64 / throughput)
}

/// First and second moments of the inter-update time `Y = m (A + B)`,
/// normalized by `m` and `m^2`: with `q = 1 - p_s`,
/// `E[Y]/m = A + q/p_s` and `E[Y^2]/m^2 = A^2 + 2A q/p_s + q (2 - p_s)/p_s^2`.
pub fn inter_update_moments(cycle_frames: f64, success_prob: f64) -> Result<(f64, f64)> {
    if !(success_prob > 0.0 && success_prob <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "success probability must be in (0, 1], got {success_prob}"
        )));
    }
    if cycle_frames <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "cycle length must be positive, got {cycle_frames}"
        )));
    }
    let p = success_prob;
    let q = 1.0 - p;
    let a = cycle_frames;
    let mean = a + q / p;
    let second = a * a + 2.0 * a * q / p + q * (2.0 - p) / (p * p);
    Ok((mean, second))
}

/// Inputs of the AT-IRSA AoI approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticInput {
    pub frame_slots: u32,
    pub num_users: u32,
    /// Load set point G*.
    pub target_load: f64,
    /// Per-frame decoding probability p_s at that load.
    pub success_prob: f64,
}

impl AnalyticInput {
    pub fn new(
        frame_slots: u32,
        num_users: u32,
        target_load: f64,
        success_prob: f64,
    ) -> Result<Self> {
        if !(success_prob > 0.0 && success_prob <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "success probability must be in (0, 1], got {success_prob}"
            )));
        }
        if !target_load.is_finite() || target_load <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "target load must be positive, got {target_load}"
            )));
        }
        let input = Self {
            frame_slots,
            num_users,
            target_load,
            success_prob,
        };
        if input.cycle_frames() < 1.0 {
            return Err(Error::InvalidArgument(format!(
                "population {} cannot sustain {} transmitters per frame",
                num_users,
                frame_slots as f64 * target_load
            )));
        }
        Ok(input)
    }

    /// Round-robin cycle length `A = U / (m G*)`, frames.
    pub fn cycle_frames(&self) -> f64 {
        self.num_users as f64 / (self.frame_slots as f64 * self.target_load)
    }

    /// Throughput at the set point, `S* = G* p_s`.
    pub fn peak_throughput(&self) -> f64 {
        self.target_load * self.success_prob
    }
}

/// AT-IRSA average network AoI, closed form:
/// `m/2 + (m G* + p_s U) / (2 S*) + (m^2/2) (G* - S*) / (m (1 - p_s) S* + p_s^2 U)`
/// with `S* = G* p_s`, in slots.
pub fn at_irsa_aoi_approx(input: &AnalyticInput) -> f64 {
    let m = input.frame_slots as f64;
    let users = input.num_users as f64;
    let g = input.target_load;
    let p = input.success_prob;
    let s = input.peak_throughput();
    m / 2.0
        + (m * g + p * users) / (2.0 * s)
        + (m * m / 2.0) * (g - s) / (m * (1.0 - p) * s + p * p * users)
}

/// The same approximation evaluated through `Δ = m + E[Y^2] / (2 E[Y])` with
/// the moments of [`inter_update_moments`]. Algebraically identical to
/// [`at_irsa_aoi_approx`]; kept as an independent route for verification.
pub fn at_irsa_aoi_from_moments(input: &AnalyticInput) -> f64 {
    let m = input.frame_slots as f64;
    let (mean, second) = inter_update_moments(input.cycle_frames(), input.success_prob)
        .expect("validated input");
    m + m * second / (2.0 * mean)
}

/// A Monte Carlo estimate of the per-frame decoding probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsEstimate {
    /// Decoded transmissions / attempted transmissions.
    pub p_s: f64,
    /// Standard error of the per-trial decoded fraction mean.
    pub std_error: f64,
    pub trials: u64,
    /// Transmitters per trial under the fixed-count convention.
    pub transmitters_per_trial: u32,
}

/// How many transmitters contend in each estimation trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialLoad {
    /// Fixed count `round(m G*)` per trial: the load pinned at the target,
    /// matching the approximation's premise. Default.
    Fixed,
    /// Binomial draw, each of `num_users` nodes active with probability
    /// `G* m / U`; for sensitivity analysis against the fixed convention.
    Binomial { num_users: u32 },
}

/// Estimate `p_s` at load `target_load` by peeling `trials` independent
/// frames of `round(m G*)` transmitters each.
///
/// Trials are parallelized over chunks with sub-streams drawn from `stream`;
/// the estimate is a deterministic function of the inputs and the stream
/// state.
pub fn estimate_ps(
    frame_slots: u32,
    dist: &DegreeDistribution,
    target_load: f64,
    trials: u64,
    stream: &mut Stream,
) -> Result<PsEstimate> {
    estimate_ps_with_load(frame_slots, dist, target_load, trials, TrialLoad::Fixed, stream)
}

/// [`estimate_ps`] with an explicit per-trial load model.
pub fn estimate_ps_with_load(
    frame_slots: u32,
    dist: &DegreeDistribution,
    target_load: f64,
    trials: u64,
    load_model: TrialLoad,
    stream: &mut Stream,
) -> Result<PsEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be >= 1".into()));
    }
    let per_frame = frame_slots as f64 * target_load;
    let fixed_count = per_frame.round() as u32;
    if fixed_count < 1 {
        return Err(Error::InvalidArgument(format!(
            "round(m G*) = round({per_frame}) is zero; nothing to transmit"
        )));
    }
    if dist.max_degree() > frame_slots {
        return Err(Error::InvalidArgument(format!(
            "max replica count {} exceeds frame_slots {frame_slots}",
            dist.max_degree()
        )));
    }
    if let TrialLoad::Binomial { num_users } = load_model {
        if per_frame > num_users as f64 {
            return Err(Error::InvalidArgument(format!(
                "m G* = {per_frame} exceeds the population {num_users}"
            )));
        }
    }

    const CHUNK: u64 = 256;
    let chunk_count = trials.div_ceil(CHUNK);
    let chunk_seeds: Vec<u64> = (0..chunk_count).map(|_| stream.gen()).collect();

    let totals: Vec<(u64, u64, f64, f64)> = chunk_seeds
        .par_iter()
        .enumerate()
        .map(|(chunk_idx, &seed)| {
            let mut local = derive_stream(seed, &[purpose::PS_ESTIMATE]);
            let lo = chunk_idx as u64 * CHUNK;
            let hi = (lo + CHUNK).min(trials);
            let mut decoded = 0u64;
            let mut attempted = 0u64;
            let mut frac_sum = 0.0;
            let mut frac_sq_sum = 0.0;
            for _ in lo..hi {
                let k = match load_model {
                    TrialLoad::Fixed => fixed_count,
                    TrialLoad::Binomial { num_users } => crate::sim::sample_trial_count(
                        num_users,
                        per_frame / num_users as f64,
                        &mut local,
                    ),
                };
                let frame = trial_frame(k, frame_slots, dist, &mut local);
                let got = decode_frame(&frame).decode_order.len() as u64;
                decoded += got;
                attempted += k as u64;
                if k > 0 {
                    let frac = got as f64 / k as f64;
                    frac_sum += frac;
                    frac_sq_sum += frac * frac;
                }
            }
            (decoded, attempted, frac_sum, frac_sq_sum)
        })
        .collect();

    let decoded: u64 = totals.iter().map(|t| t.0).sum();
    let attempted: u64 = totals.iter().map(|t| t.1).sum();
    let frac_sum: f64 = totals.iter().map(|t| t.2).sum();
    let frac_sq_sum: f64 = totals.iter().map(|t| t.3).sum();

    let p_s = if attempted == 0 {
        0.0
    } else {
        decoded as f64 / attempted as f64
    };
    let n = trials as f64;
    let std_error = if trials > 1 {
        let mean = frac_sum / n;
        let var = ((frac_sq_sum - n * mean * mean) / (n - 1.0)).max(0.0);
        (var / n).sqrt()
    } else {
        0.0
    };
    Ok(PsEstimate {
        p_s,
        std_error,
        trials,
        transmitters_per_trial: fixed_count,
    })
}

fn trial_frame(
    transmitters: u32,
    frame_slots: u32,
    dist: &DegreeDistribution,
    stream: &mut Stream,
) -> FrameOccupancy {
    let m = frame_slots as usize;
    let transmissions = (0..transmitters)
        .map(|user_id| {
            let degree = dist.sample(stream) as usize;
            Transmission {
                user_id,
                replica_slots: place_replicas(degree, m, stream).expect("degree <= m"),
            }
        })
        .collect();
    FrameOccupancy::from_parts_unchecked(m, transmissions)
}

/// One point of a throughput-vs-load curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadPoint {
    pub load: f64,
    pub success_prob: f64,
    /// `S = G p_s(G)`.
    pub throughput: f64,
}

/// Result of a peak-throughput search over a load grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PeakLoad {
    /// Grid load maximizing `S = G p_s(G)`.
    pub load: f64,
    pub throughput: f64,
    pub success_prob: f64,
    /// The full curve, one entry per grid load, for curve reproduction.
    pub curve: Vec<LoadPoint>,
}

/// Locate the peak-throughput load G* on a grid.
///
/// Uses the fixed-count trial convention of [`estimate_ps`]. Grid points with
/// `round(m G) = 0` contribute `S = 0` without running trials. Points are
/// estimated in parallel with independent streams derived from `seed`.
pub fn find_peak_load(
    frame_slots: u32,
    dist: &DegreeDistribution,
    grid: &[f64],
    trials: u64,
    seed: u64,
) -> Result<PeakLoad> {
    find_peak_load_with_load(frame_slots, dist, grid, trials, TrialLoad::Fixed, seed)
}

/// [`find_peak_load`] with an explicit per-trial load model.
///
/// The binomial model reproduces the throughput curve of a finite population
/// with i.i.d. activation, whose load fluctuations pull the peak slightly
/// below the fixed-count one.
pub fn find_peak_load_with_load(
    frame_slots: u32,
    dist: &DegreeDistribution,
    grid: &[f64],
    trials: u64,
    load_model: TrialLoad,
    seed: u64,
) -> Result<PeakLoad> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty load grid".into()));
    }
    let curve: Vec<LoadPoint> = grid
        .par_iter()
        .enumerate()
        .map(|(i, &load)| {
            if (frame_slots as f64 * load).round() < 1.0 {
                return Ok(LoadPoint {
                    load,
                    success_prob: 0.0,
                    throughput: 0.0,
                });
            }
            let mut stream = derive_stream(seed, &[purpose::PEAK_SEARCH, i as u64]);
            let est =
                estimate_ps_with_load(frame_slots, dist, load, trials, load_model, &mut stream)?;
            Ok(LoadPoint {
                load,
                success_prob: est.p_s,
                throughput: load * est.p_s,
            })
        })
        .collect::<Result<_>>()?;

    let best = curve
        .iter()
        .copied()
        .max_by(|a, b| a.throughput.total_cmp(&b.throughput))
        .expect("non-empty grid");
    Ok(PeakLoad {
        load: best.load,
        throughput: best.throughput,
        success_prob: best.success_prob,
        curve,
    })
}
