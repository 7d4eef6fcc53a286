//! Age-threshold selection at the receiver.
//!
//! At each frame boundary the sink picks the age threshold for the next
//! frame: with `n(θ)` the number of terminals whose instantaneous AoI
//! strictly exceeds `θ`, it selects the *largest* candidate `θ` that still
//! admits enough contenders to hit the load set point,
//! `Θ = max{ θ : n(θ) >= m G* }`, over the candidates 0 and the distinct AoI
//! values present. Eligible terminals then transmit with barring probability
//! `p = m G* / n(Θ)`, so the expected number of transmitters per frame is
//! exactly `m G*`.

use std::collections::BTreeMap;

/// The `(Θ, p)` pair broadcast at a frame boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdFeedback {
    /// Age threshold in slots; only terminals with AoI strictly above it may
    /// contend in the next frame.
    pub threshold_slots: u64,
    /// Probability with which an eligible terminal actually transmits.
    pub barring_probability: f64,
    /// Number of eligible terminals, `n(Θ)`.
    pub eligible_count: u32,
}

/// Select the threshold from the full AoI vector at a frame boundary.
///
/// `target_load` is interpreted against `frame_slots`: the constraint is
/// `n(θ) >= frame_slots * target_load`. With any positive target the
/// candidate `θ = 0` always satisfies the constraint, since every post-warmup
/// AoI is at least one frame. A zero target admits nobody
/// (`barring_probability = 0`).
pub fn compute_threshold(
    aoi_values: &[u64],
    frame_slots: u32,
    target_load: f64,
) -> ThresholdFeedback {
    assert!(!aoi_values.is_empty(), "empty AoI vector");
    let target = frame_slots as f64 * target_load;

    let mut counts: BTreeMap<u64, u32> = BTreeMap::new();
    for &aoi in aoi_values {
        *counts.entry(aoi).or_insert(0) += 1;
    }

    // Walk candidates in descending AoI order; the running prefix is exactly
    // n(candidate) because n counts strictly greater values. A zero AoI can
    // never make a node eligible (eligibility is strict), so zeros are not
    // folded into the prefix.
    let mut prefix: u32 = 0;
    for (&aoi, &count) in counts.iter().rev() {
        if prefix as f64 >= target {
            return ThresholdFeedback {
                threshold_slots: aoi,
                barring_probability: barring(target, prefix),
                eligible_count: prefix,
            };
        }
        if aoi == 0 {
            break;
        }
        prefix += count;
    }
    ThresholdFeedback {
        threshold_slots: 0,
        barring_probability: barring(target, prefix),
        eligible_count: prefix,
    }
}

/// `p = m G* / n(Θ)`. Whenever a feasible threshold exists the eligible count
/// meets the target and the ratio is at most 1; if a caller supplies an AoI
/// vector that cannot field the target (possible only with zero entries),
/// every eligible node transmits.
#[inline]
pub(crate) fn barring(target: f64, eligible: u32) -> f64 {
    if eligible == 0 {
        0.0
    } else {
        (target / eligible as f64).min(1.0)
    }
}
