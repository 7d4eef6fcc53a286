//! Watch the age-threshold feedback adapt frame by frame.
//!
//! First the threshold rule on a hand-picked AoI vector, then a short
//! age-threshold run printing the `(theta, p)` pair the sink would broadcast
//! at each boundary.
//!
//! Run with: `cargo run --example threshold_feedback`

use irsa_aoi::sim::AtIrsaEngine;
use irsa_aoi::{compute_threshold, DegreeDistribution, Protocol, SimConfig};

fn main() {
    // Eight terminals, m G* = 5: the freshest ages are barred, the rest
    // contend with probability 5/6.
    let aoi = [10, 10, 20, 20, 30, 30, 40, 40];
    let fb = compute_threshold(&aoi, 10, 0.5);
    println!(
        "aoi {aoi:?} -> theta = {} slots, {} eligible, p = {:.3}",
        fb.threshold_slots, fb.eligible_count, fb.barring_probability
    );
    println!();

    let cfg = SimConfig {
        protocol: Protocol::AtIrsa,
        num_users: 30,
        frame_slots: 10,
        target_load: 0.5,
        distribution: DegreeDistribution::regular(3).expect("valid distribution"),
        total_frames: 15,
        warmup_frames: 1,
        seed: 7,
    };
    let mut engine = AtIrsaEngine::new(&cfg).expect("valid config");
    println!("frame,transmitters,decoded,theta,p");
    for _ in 0..cfg.total_frames {
        let s = engine.step();
        let fb = s.feedback.expect("age-threshold run");
        println!(
            "{},{},{},{},{:.3}",
            s.frame,
            s.transmitters,
            s.decoded.len(),
            fb.threshold_slots,
            fb.barring_probability
        );
    }
}
