//! Receiver-side successive interference cancellation.
//!
//! After buffering a whole frame the receiver classifies slots as idle,
//! singleton or collided, decodes singleton slots, and cancels each decoded
//! packet's replicas from every slot in which they were sent. Cancellation
//! can expose further singletons; the procedure iterates until all packets
//! are decoded or only collided slots remain. Collisions are strictly
//! destructive: a slot holding two or more un-cancelled packets yields
//! nothing.
//!
//! The decoded set is a fixed point independent of the order in which
//! available singletons are consumed. For deterministic traces the peeler
//! scans slots in ascending index, round by round; `decode_order` is the
//! witness that scan produces.

use std::collections::BTreeSet;

use crate::frame::FrameOccupancy;

/// Slot occupancy census of a frame before any cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotCensus {
    pub idle: usize,
    pub singleton: usize,
    pub collided: usize,
}

/// One peeling event: `user_id` was decoded from `slot` during `round`
/// (both the round counter and `decode_order` are 1-based in trace output,
/// slots 0-based here).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelEvent {
    pub round: u32,
    pub user_id: u32,
    pub slot: usize,
}

/// Result of peeling one frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    /// Peeling events in the order they occurred.
    pub decode_order: Vec<PeelEvent>,
    /// Slots still holding two or more un-cancelled packets at termination.
    pub residual_collided_slots: usize,
}

impl DecodeOutcome {
    /// The set of decoded users (same members as `decode_order`).
    pub fn decoded_users(&self) -> BTreeSet<u32> {
        self.decode_order.iter().map(|e| e.user_id).collect()
    }

    /// Human-readable trace, one `round,user,slot` line per peeling event
    /// with 1-based slot numbering.
    pub fn trace_lines(&self) -> Vec<String> {
        self.decode_order
            .iter()
            .map(|e| format!("{},{},{}", e.round, e.user_id, e.slot + 1))
            .collect()
    }
}

/// Count idle, singleton and collided slots before any cancellation.
pub fn classify_slots(frame: &FrameOccupancy) -> SlotCensus {
    let mut occupancy = vec![0u32; frame.frame_slots()];
    for tx in frame.transmissions() {
        for &slot in &tx.replica_slots {
            occupancy[slot] += 1;
        }
    }
    let mut census = SlotCensus {
        idle: 0,
        singleton: 0,
        collided: 0,
    };
    for &count in &occupancy {
        match count {
            0 => census.idle += 1,
            1 => census.singleton += 1,
            _ => census.collided += 1,
        }
    }
    census
}

/// Peel a frame to its fixed point, scanning slots in ascending index.
pub fn decode_frame(frame: &FrameOccupancy) -> DecodeOutcome {
    peel(frame, false)
}

/// Peel scanning slots in descending index. The decoded set equals that of
/// [`decode_frame`]; only the event order may differ. Verification aid.
#[doc(hidden)]
pub fn decode_frame_descending(frame: &FrameOccupancy) -> DecodeOutcome {
    peel(frame, true)
}

fn peel(frame: &FrameOccupancy, descending: bool) -> DecodeOutcome {
    let m = frame.frame_slots();
    let transmissions = frame.transmissions();
    // Per-slot occupant count plus XOR of transmission indices: when the
    // count drops to 1 the XOR is exactly the remaining occupant.
    let mut count = vec![0u32; m];
    let mut xor = vec![0usize; m];
    for (idx, tx) in transmissions.iter().enumerate() {
        for &slot in &tx.replica_slots {
            count[slot] += 1;
            xor[slot] ^= idx;
        }
    }

    let mut decode_order = Vec::new();
    let mut round = 0u32;
    loop {
        round += 1;
        let mut decoded_this_round = false;
        for i in 0..m {
            let slot = if descending { m - 1 - i } else { i };
            if count[slot] != 1 {
                continue;
            }
            let idx = xor[slot];
            let tx = &transmissions[idx];
            // If several slots are currently singleton for this user, the
            // lowest index is recorded as the resolving slot.
            let resolving = tx
                .replica_slots
                .iter()
                .copied()
                .filter(|&s| count[s] == 1)
                .min()
                .unwrap_or(slot);
            decode_order.push(PeelEvent {
                round,
                user_id: tx.user_id,
                slot: resolving,
            });
            for &s in &tx.replica_slots {
                count[s] -= 1;
                xor[s] ^= idx;
            }
            decoded_this_round = true;
        }
        if !decoded_this_round {
            break;
        }
    }

    let residual_collided_slots = count.iter().filter(|&&c| c >= 2).count();
    DecodeOutcome {
        decode_order,
        residual_collided_slots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Transmission;

    fn frame(m: usize, txs: &[(u32, &[usize])]) -> FrameOccupancy {
        FrameOccupancy::new(
            m,
            txs.iter()
                .map(|&(user_id, slots)| Transmission {
                    user_id,
                    replica_slots: slots.to_vec(),
                })
                .collect(),
        )
        .unwrap()
    }

    /// Four users, five slots: u1 -> {1,4,5}, u2 -> {1,2,5}, u3 -> {2,3,4},
    /// u4 -> {2,5} in 1-based numbering.
    fn worked_example() -> FrameOccupancy {
        frame(
            5,
            &[
                (1, &[0, 3, 4]),
                (2, &[0, 1, 4]),
                (3, &[1, 2, 3]),
                (4, &[1, 4]),
            ],
        )
    }

    #[test]
    fn census_of_worked_example() {
        let census = classify_slots(&worked_example());
        assert_eq!(
            census,
            SlotCensus {
                idle: 0,
                singleton: 1,
                collided: 4
            }
        );
    }

    #[test]
    fn census_of_empty_frame() {
        let census = classify_slots(&frame(5, &[]));
        assert_eq!(
            census,
            SlotCensus {
                idle: 5,
                singleton: 0,
                collided: 0
            }
        );
    }

    #[test]
    fn census_without_contention() {
        let census = classify_slots(&frame(5, &[(1, &[0, 2, 4])]));
        assert_eq!(
            census,
            SlotCensus {
                idle: 2,
                singleton: 3,
                collided: 0
            }
        );
    }

    #[test]
    fn worked_example_decodes_all_four_users() {
        let outcome = decode_frame(&worked_example());
        let order: Vec<(u32, usize)> = outcome
            .decode_order
            .iter()
            .map(|e| (e.user_id, e.slot))
            .collect();
        // u3 from slot 3, u1 from slot 4, u2 from slot 1, u4 from slot 2
        // (1-based); u4 could equally resolve in slot 5, the tie rule picks
        // the lower index.
        assert_eq!(order, vec![(3, 2), (1, 3), (2, 0), (4, 1)]);
        assert_eq!(outcome.residual_collided_slots, 0);
        assert_eq!(
            outcome.trace_lines(),
            vec!["1,3,3", "1,1,4", "2,2,1", "2,4,2"]
        );
    }

    #[test]
    fn empty_frame_decodes_nothing() {
        let outcome = decode_frame(&frame(4, &[]));
        assert!(outcome.decode_order.is_empty());
        assert_eq!(outcome.residual_collided_slots, 0);
    }

    #[test]
    fn smallest_stopping_set() {
        // Two users sharing both slots: no singleton ever appears.
        let outcome = decode_frame(&frame(4, &[(1, &[0, 1]), (2, &[0, 1])]));
        assert!(outcome.decoded_users().is_empty());
        assert_eq!(outcome.residual_collided_slots, 2);
    }

    #[test]
    fn singleton_present_implies_progress() {
        let outcome = decode_frame(&frame(3, &[(7, &[0]), (8, &[1, 2]), (9, &[1, 2])]));
        assert!(outcome.decoded_users().contains(&7));
        assert_eq!(outcome.residual_collided_slots, 2);
    }

    #[test]
    fn decoded_set_has_no_duplicates() {
        let outcome = decode_frame(&worked_example());
        assert_eq!(outcome.decoded_users().len(), outcome.decode_order.len());
    }
}
