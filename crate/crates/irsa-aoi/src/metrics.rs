//! Aggregate metrics of one simulation run.

/// Throughput, AoI and load statistics over the measured frames of a run,
/// plus the raw diagnostic counters they derive from.
///
/// `avg_network_aoi` is the per-node time-averaged instantaneous AoI,
/// averaged across all nodes, in slot units. When no packet at all is decoded
/// inside the measurement window the time average diverges with the window
/// and is reported as `f64::INFINITY`; `per_frame_success_prob` is 0 when
/// nothing was attempted.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    /// Decoded packets per slot (S).
    pub throughput: f64,
    /// Average network AoI in slots.
    pub avg_network_aoi: f64,
    /// `avg_network_aoi / num_users`.
    pub normalized_aoi: f64,
    /// Mean instantaneous channel load over the measured frames.
    pub realized_load: f64,
    /// Decoded transmissions / attempted transmissions.
    pub per_frame_success_prob: f64,
    /// Frames covered by the metrics (slots for slotted ALOHA).
    pub measured_frames: u64,
    /// Total packets decoded inside the window.
    pub decoded_packets: u64,
    /// Total transmissions attempted inside the window.
    pub attempted_transmissions: u64,
}

impl RunMetrics {
    pub(crate) fn from_tallies(
        num_users: u32,
        frame_slots: u32,
        measured_frames: u64,
        decoded_packets: u64,
        attempted_transmissions: u64,
        total_area: f64,
    ) -> Self {
        let window_slots = measured_frames as f64 * frame_slots as f64;
        let throughput = decoded_packets as f64 / window_slots;
        let avg_network_aoi = if decoded_packets == 0 {
            f64::INFINITY
        } else {
            total_area / (num_users as f64 * window_slots)
        };
        let per_frame_success_prob = if attempted_transmissions == 0 {
            0.0
        } else {
            decoded_packets as f64 / attempted_transmissions as f64
        };
        RunMetrics {
            throughput,
            avg_network_aoi,
            normalized_aoi: avg_network_aoi / num_users as f64,
            realized_load: attempted_transmissions as f64 / window_slots,
            per_frame_success_prob,
            measured_frames,
            decoded_packets,
            attempted_transmissions,
        }
    }
}
