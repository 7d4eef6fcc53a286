//! Trace the IRSA throughput-vs-load curve at desk scale.
//!
//! Sweeps the channel load G and prints `load,throughput,success_prob` CSV.
//! Throughput tracks G closely up to moderate loads, peaks near the
//! frame-size-dependent optimum, then collapses as collisions defeat the
//! peeler.
//!
//! Run with: `cargo run --example throughput_curve`

use irsa_aoi::{run_irsa, DegreeDistribution, Protocol, SimConfig};

fn main() {
    let dist = DegreeDistribution::regular(3).expect("valid distribution");
    println!("load,throughput,success_prob");
    for i in 0..=16 {
        let load = 0.1 + 0.05 * i as f64;
        let cfg = SimConfig {
            protocol: Protocol::Irsa,
            num_users: 2000,
            frame_slots: 100,
            target_load: load,
            distribution: dist.clone(),
            total_frames: 2000,
            warmup_frames: 0,
            seed: 1,
        };
        let metrics = run_irsa(&cfg).expect("valid config");
        println!(
            "{:.2},{:.4},{:.4}",
            load, metrics.throughput, metrics.per_frame_success_prob
        );
    }
}
