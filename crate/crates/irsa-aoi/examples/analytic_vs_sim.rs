//! Check the age-threshold AoI approximation against full simulations.
//!
//! The model needs only the per-frame decoding probability at the load set
//! point, estimated once per frame size; the simulation runs the complete
//! feedback loop with dynamic thresholds.
//!
//! Run with: `cargo run --example analytic_vs_sim`

use irsa_aoi::analytic::{at_irsa_aoi_approx, estimate_ps, AnalyticInput};
use irsa_aoi::{derive_stream, run_at_irsa, DegreeDistribution, Protocol, SimConfig};

fn main() {
    let dist = DegreeDistribution::regular(3).expect("valid distribution");
    let (m, load) = (100u32, 0.66);

    let mut stream = derive_stream(3, &[m as u64]);
    let ps = estimate_ps(m, &dist, load, 5000, &mut stream)
        .expect("valid estimate")
        .p_s;
    println!("per-frame decoding probability at G*={load}: {ps:.4}");
    println!("{:>6}  {:>12}  {:>12}  {:>8}", "users", "analytic", "simulated", "rel err");

    for users in [500u32, 1000, 2000] {
        let analytic =
            at_irsa_aoi_approx(&AnalyticInput::new(m, users, load, ps).expect("valid input"));
        let warmup = SimConfig::default_warmup_frames(users, m, load);
        let cfg = SimConfig {
            protocol: Protocol::AtIrsa,
            num_users: users,
            frame_slots: m,
            target_load: load,
            distribution: dist.clone(),
            total_frames: warmup + 20_000,
            warmup_frames: warmup,
            seed: 4,
        };
        let sim = run_at_irsa(&cfg).expect("valid config").avg_network_aoi;
        println!(
            "{users:>6}  {analytic:>12.1}  {sim:>12.1}  {:>7.2}%",
            (analytic - sim).abs() / sim * 100.0
        );
    }
}
