//! Exact piecewise-linear AoI accounting.
//!
//! The instantaneous AoI of a node grows at slope 1 during a frame and, at
//! the frame boundary, either resets to `m` slots (its update was decoded;
//! the receiver buffers the whole frame before cancelling) or continues. The
//! time integral of the sawtooth over one frame is the trapezoid
//! `m * aoi_at_frame_start + m^2 / 2`, in slot^2 units. All increments are
//! multiples of 0.5, which f64 represents exactly at the magnitudes reached
//! here.

use std::collections::BTreeSet;

/// Per-terminal instantaneous AoI as seen at the sink, sampled at frame
/// boundaries. After the first boundary `aoi_slots` is always a positive
/// multiple of the frame duration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeState {
    pub user_id: u32,
    pub aoi_slots: u64,
}

/// Per-node AoI integrals over a measurement window.
#[derive(Debug, Clone, PartialEq)]
pub struct AoiAccumulator {
    areas: Vec<f64>,
    update_counts: Vec<u64>,
    window_slots: u64,
}

impl AoiAccumulator {
    pub fn new(num_nodes: usize) -> Self {
        Self {
            areas: vec![0.0; num_nodes],
            update_counts: vec![0; num_nodes],
            window_slots: 0,
        }
    }

    /// Time integral of each node's AoI over the window, slot^2.
    pub fn areas(&self) -> &[f64] {
        &self.areas
    }

    /// Decodes observed per node inside the window.
    pub fn update_counts(&self) -> &[u64] {
        &self.update_counts
    }

    /// Slots covered by the window so far.
    pub fn window_slots(&self) -> u64 {
        self.window_slots
    }

    /// Per-node time-averaged AoI, slots.
    pub fn node_averages(&self) -> Vec<f64> {
        self.areas
            .iter()
            .map(|&a| a / self.window_slots as f64)
            .collect()
    }
}

/// Fold one frame into the accumulator.
///
/// `states` holds each node's AoI at the *start* of the frame; `decoded` the
/// users whose update was decoded at the frame's end. Adds the trapezoid
/// `m * aoi + m^2 / 2` to every node's area and bumps the update count of
/// decoded nodes. Callers apply the boundary AoI update (reset to `m` or grow
/// by `m`) themselves, after accumulating. Call once per frame boundary
/// inside the measurement window.
pub fn accumulate_aoi(
    states: &[NodeState],
    decoded: &BTreeSet<u32>,
    frame_slots: u32,
    acc: &mut AoiAccumulator,
) {
    assert_eq!(states.len(), acc.areas.len(), "node count mismatch");
    let m = frame_slots as f64;
    for (i, state) in states.iter().enumerate() {
        acc.areas[i] += m * state.aoi_slots as f64 + m * m / 2.0;
        if decoded.contains(&state.user_id) {
            acc.update_counts[i] += 1;
        }
    }
    acc.window_slots += frame_slots as u64;
}

/// Closed form for the trapezoid sum of `span` consecutive frames during
/// which a node is never decoded, starting `start_age` frames after its last
/// update (0 if the interval opens at the update itself):
/// `sum_{i=1..span} [ m * (start_age + i) * m + m^2/2 ]`.
#[inline]
pub(crate) fn interval_area(frame_slots: u64, start_age: u64, span: u64) -> f64 {
    let m = frame_slots as f64;
    let s = start_age as f64;
    let k = span as f64;
    m * m * k * (2.0 * s + k + 2.0) / 2.0
}

/// Lazy per-node area bookkeeping used by the engines.
///
/// Boundaries are numbered 0..=total; frame `f` spans boundary `f-1` to `f`.
/// `last_update[u]` is the boundary at which node `u` last delivered (0 at
/// start: every node behaves as if it had just updated, so its AoI at
/// boundary `b` is `(b - last_update + 1) * m`). Areas accrue only over
/// frames after `warmup`; the final partial sawtooth is included by
/// `finalize`.
#[derive(Debug, Clone)]
pub(crate) struct AgeLedger {
    pub last_update: Vec<u64>,
    areas: Vec<f64>,
    update_counts: Vec<u64>,
    warmup: u64,
    frame_slots: u64,
}

impl AgeLedger {
    pub fn new(num_nodes: usize, warmup: u64, frame_slots: u64) -> Self {
        Self {
            last_update: vec![0; num_nodes],
            areas: vec![0.0; num_nodes],
            update_counts: vec![0; num_nodes],
            warmup,
            frame_slots,
        }
    }

    /// AoI of a node at boundary `b`, slots.
    #[inline]
    pub fn aoi_at(&self, node: usize, boundary: u64) -> u64 {
        (boundary - self.last_update[node] + 1) * self.frame_slots
    }

    /// Record that `node` was decoded at boundary `b`, materializing the
    /// closed interval's area if it reaches into the window.
    pub fn on_decode(&mut self, node: usize, boundary: u64) {
        let last = self.last_update[node];
        if boundary > self.warmup {
            let open = last.max(self.warmup);
            self.areas[node] += interval_area(self.frame_slots, open - last, boundary - open);
            self.update_counts[node] += 1;
        }
        self.last_update[node] = boundary;
    }

    /// Materialize every node's trailing partial interval up to
    /// `end_boundary` and return (areas, update_counts).
    pub fn finalize(mut self, end_boundary: u64) -> (Vec<f64>, Vec<u64>) {
        for node in 0..self.last_update.len() {
            let last = self.last_update[node];
            if end_boundary > self.warmup {
                let open = last.max(self.warmup);
                self.areas[node] +=
                    interval_area(self.frame_slots, open - last, end_boundary - open);
            }
        }
        (self.areas, self.update_counts)
    }

    /// Non-destructive view of per-node window areas up to `boundary`.
    pub fn areas_at(&self, boundary: u64) -> Vec<f64> {
        self.clone().finalize(boundary).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezoid_arithmetic() {
        // aoi 100 at frame start, m = 100, no decode: area grows by 15000.
        let states = [NodeState {
            user_id: 0,
            aoi_slots: 100,
        }];
        let mut acc = AoiAccumulator::new(1);
        accumulate_aoi(&states, &BTreeSet::new(), 100, &mut acc);
        assert_eq!(acc.areas(), &[15_000.0]);
        assert_eq!(acc.update_counts(), &[0]);
        assert_eq!(acc.window_slots(), 100);
    }

    #[test]
    fn node_decoded_every_frame_averages_one_and_a_half_frames() {
        // A node decoded at every boundary keeps aoi = m at each frame start;
        // the long-run time average is m + m/2.
        let m = 100u32;
        let mut acc = AoiAccumulator::new(1);
        let decoded: BTreeSet<u32> = [0].into();
        let states = [NodeState {
            user_id: 0,
            aoi_slots: m as u64,
        }];
        for _ in 0..1000 {
            accumulate_aoi(&states, &decoded, m, &mut acc);
        }
        let avg = acc.node_averages()[0];
        assert_eq!(avg, 150.0);
        assert_eq!(acc.update_counts(), &[1000]);
    }

    #[test]
    fn empty_window_leaves_accumulator_unchanged() {
        let acc = AoiAccumulator::new(3);
        assert_eq!(acc.window_slots(), 0);
        assert!(acc.areas().iter().all(|&a| a == 0.0));
    }

    #[test]
    fn interval_area_closed_form_matches_frame_sum() {
        for m in [1u64, 5, 100] {
            for start_age in [0u64, 1, 7] {
                for span in [0u64, 1, 2, 13] {
                    let direct: f64 = (1..=span)
                        .map(|i| {
                            let aoi = (start_age + i) * m;
                            m as f64 * aoi as f64 + (m * m) as f64 / 2.0
                        })
                        .sum();
                    assert_eq!(interval_area(m, start_age, span), direct);
                }
            }
        }
    }

    #[test]
    fn ledger_matches_literal_accumulation() {
        // Drive a small ledger with a fixed decode pattern and compare with
        // the frame-by-frame accumulate_aoi oracle.
        let m = 10u32;
        let warmup = 3u64;
        let total = 20u64;
        let decode_pattern: Vec<(u64, usize)> =
            vec![(2, 0), (5, 0), (5, 1), (9, 0), (17, 1), (20, 0)];

        let mut ledger = AgeLedger::new(2, warmup, m as u64);
        let mut acc = AoiAccumulator::new(2);
        let mut states = vec![
            NodeState {
                user_id: 0,
                aoi_slots: m as u64,
            },
            NodeState {
                user_id: 1,
                aoi_slots: m as u64,
            },
        ];
        for f in 1..=total {
            let decoded: BTreeSet<u32> = decode_pattern
                .iter()
                .filter(|&&(frame, _)| frame == f)
                .map(|&(_, node)| node as u32)
                .collect();
            if f > warmup {
                accumulate_aoi(&states, &decoded, m, &mut acc);
            }
            for state in states.iter_mut() {
                state.aoi_slots = if decoded.contains(&state.user_id) {
                    m as u64
                } else {
                    state.aoi_slots + m as u64
                };
            }
            for &(frame, node) in &decode_pattern {
                if frame == f {
                    ledger.on_decode(node, f);
                }
            }
        }
        let (areas, counts) = ledger.finalize(total);
        assert_eq!(areas, acc.areas());
        assert_eq!(counts, acc.update_counts());
    }
}
