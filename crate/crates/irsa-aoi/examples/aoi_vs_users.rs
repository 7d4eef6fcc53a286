//! Compare the normalized network AoI of the three protocols as the
//! population grows.
//!
//! Slotted ALOHA tends to e * U; IRSA improves on it by resolving collisions;
//! the age-threshold variant roughly halves IRSA again by spending the same
//! channel load on the stalest terminals only.
//!
//! Run with: `cargo run --example aoi_vs_users`

use irsa_aoi::{
    run_at_irsa, run_irsa, run_slotted_aloha, DegreeDistribution, Protocol, SimConfig,
};

fn main() {
    let dist = DegreeDistribution::regular(3).expect("valid distribution");
    println!(
        "{:>6}  {:>12}  {:>12}  {:>12}",
        "users", "sa", "irsa", "at-irsa"
    );
    for users in [250u32, 500, 1000, 2000] {
        let frame_cfg = |protocol| {
            let warmup = SimConfig::default_warmup_frames(users, 100, 0.66);
            SimConfig {
                protocol,
                num_users: users,
                frame_slots: 100,
                target_load: 0.66,
                distribution: dist.clone(),
                total_frames: warmup + 20_000,
                warmup_frames: warmup,
                seed: 2,
            }
        };
        let sa_cfg = SimConfig {
            protocol: Protocol::SlottedAloha,
            num_users: users,
            frame_slots: 1,
            target_load: 1.0,
            distribution: DegreeDistribution::regular(1).unwrap(),
            total_frames: 10 * users as u64 + 2_000_000,
            warmup_frames: 10 * users as u64,
            seed: 2,
        };
        let sa = run_slotted_aloha(&sa_cfg).expect("valid config").normalized_aoi;
        let irsa = run_irsa(&frame_cfg(Protocol::Irsa)).expect("valid config").normalized_aoi;
        let at = run_at_irsa(&frame_cfg(Protocol::AtIrsa)).expect("valid config").normalized_aoi;
        println!("{users:>6}  {sa:>12.3}  {irsa:>12.3}  {at:>12.3}");
    }
}
