//! Contention frames and replica placement.
//!
//! A frame is `m` contiguous slots; each active terminal places its replicas
//! in distinct slots chosen uniformly at random. Slot indices are 0-based
//! internally; human-facing trace output numbers slots from 1.

use rand::Rng;

use crate::error::{Error, Result};
use crate::stream::Stream;

/// One terminal's transmission within a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transmission {
    pub user_id: u32,
    /// Distinct slot indices in `[0, frame_slots)`, sorted ascending.
    pub replica_slots: Vec<usize>,
}

/// The user <-> slot incidence structure of one contention frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameOccupancy {
    frame_slots: usize,
    transmissions: Vec<Transmission>,
}

impl FrameOccupancy {
    /// Build a frame, validating that each user appears at most once and that
    /// every replica set is non-empty with distinct in-range slots.
    pub fn new(frame_slots: usize, transmissions: Vec<Transmission>) -> Result<Self> {
        if frame_slots == 0 {
            return Err(Error::InvalidFrame("frame_slots must be >= 1".into()));
        }
        let mut seen_users = std::collections::HashSet::new();
        for tx in &transmissions {
            if !seen_users.insert(tx.user_id) {
                return Err(Error::InvalidFrame(format!(
                    "user {} appears more than once",
                    tx.user_id
                )));
            }
            if tx.replica_slots.is_empty() {
                return Err(Error::InvalidFrame(format!(
                    "user {} has no replica slots",
                    tx.user_id
                )));
            }
            let mut sorted = tx.replica_slots.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidFrame(format!(
                    "user {} has duplicate replica slots",
                    tx.user_id
                )));
            }
            if *sorted.last().unwrap() >= frame_slots {
                return Err(Error::InvalidFrame(format!(
                    "user {} has a replica slot outside [0, {frame_slots})",
                    tx.user_id
                )));
            }
        }
        Ok(Self {
            frame_slots,
            transmissions,
        })
    }

    /// Fast path for the simulation engines, which construct transmissions
    /// from sampling primitives that already guarantee the invariants.
    pub(crate) fn from_parts_unchecked(
        frame_slots: usize,
        transmissions: Vec<Transmission>,
    ) -> Self {
        debug_assert!(frame_slots >= 1);
        debug_assert!(transmissions
            .iter()
            .all(|tx| !tx.replica_slots.is_empty()
                && tx.replica_slots.iter().all(|&s| s < frame_slots)));
        Self {
            frame_slots,
            transmissions,
        }
    }

    pub fn frame_slots(&self) -> usize {
        self.frame_slots
    }

    pub fn transmissions(&self) -> &[Transmission] {
        &self.transmissions
    }
}

/// Choose `degree` distinct slot indices uniformly over all size-`degree`
/// subsets of `[0, frame_slots)`, returned sorted ascending.
///
/// Uses Floyd's subset sampling, consuming exactly `degree` draws.
pub fn place_replicas(
    degree: usize,
    frame_slots: usize,
    stream: &mut Stream,
) -> Result<Vec<usize>> {
    if degree < 1 || degree > frame_slots {
        return Err(Error::InvalidArgument(format!(
            "replica count {degree} not in [1, {frame_slots}]"
        )));
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(degree);
    for j in (frame_slots - degree)..frame_slots {
        let t = stream.gen_range(0..=j);
        if chosen.contains(&t) {
            chosen.push(j);
        } else {
            chosen.push(t);
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::derive_stream;

    #[test]
    fn full_occupancy_forced() {
        let mut stream = derive_stream(1, &[]);
        let slots = place_replicas(5, 5, &mut stream).unwrap();
        assert_eq!(slots, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cardinality_and_range() {
        let mut stream = derive_stream(2, &[]);
        for _ in 0..100 {
            let slots = place_replicas(3, 100, &mut stream).unwrap();
            assert_eq!(slots.len(), 3);
            assert!(slots.windows(2).all(|w| w[0] < w[1]));
            assert!(slots.iter().all(|&s| s < 100));
        }
    }

    #[test]
    fn degree_larger_than_frame_rejected() {
        let mut stream = derive_stream(3, &[]);
        assert!(place_replicas(6, 5, &mut stream).is_err());
        assert!(place_replicas(0, 5, &mut stream).is_err());
    }

    #[test]
    fn single_replica_uniform_over_two_slots() {
        // degree=1, m=2, 1e6 trials: slot 0 frequency 0.5 +/- 0.005.
        let mut stream = derive_stream(4, &[]);
        let n = 1_000_000u64;
        let mut zero = 0u64;
        for _ in 0..n {
            if place_replicas(1, 2, &mut stream).unwrap()[0] == 0 {
                zero += 1;
            }
        }
        let freq = zero as f64 / n as f64;
        assert!((freq - 0.5).abs() < 0.005, "slot 0 frequency {freq}");
    }

    #[test]
    fn per_slot_frequency_matches_subset_uniformity() {
        // Over n samples of place_replicas(d, m), every slot appears with
        // frequency d/m within 4 binomial sigmas.
        let (d, m, n) = (3usize, 10usize, 200_000u64);
        let mut stream = derive_stream(5, &[]);
        let mut counts = vec![0u64; m];
        for _ in 0..n {
            for s in place_replicas(d, m, &mut stream).unwrap() {
                counts[s] += 1;
            }
        }
        let p = d as f64 / m as f64;
        let tol = 4.0 * (p * (1.0 - p) / n as f64).sqrt();
        for (slot, &count) in counts.iter().enumerate() {
            let freq = count as f64 / n as f64;
            assert!(
                (freq - p).abs() < tol,
                "slot {slot}: frequency {freq}, expected {p} +/- {tol}"
            );
        }
    }

    #[test]
    fn frame_validation_rejects_bad_input() {
        let tx = |user_id, replica_slots: Vec<usize>| Transmission {
            user_id,
            replica_slots,
        };
        assert!(FrameOccupancy::new(0, vec![]).is_err());
        assert!(FrameOccupancy::new(5, vec![tx(1, vec![]), ]).is_err());
        assert!(FrameOccupancy::new(5, vec![tx(1, vec![0, 0])]).is_err());
        assert!(FrameOccupancy::new(5, vec![tx(1, vec![5])]).is_err());
        assert!(FrameOccupancy::new(5, vec![tx(1, vec![0]), tx(1, vec![1])]).is_err());
        assert!(FrameOccupancy::new(5, vec![tx(1, vec![0, 4]), tx(2, vec![1])]).is_ok());
    }
}
