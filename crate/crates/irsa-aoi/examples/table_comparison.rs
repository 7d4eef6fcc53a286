//! Compute the large-population normalized AoI endpoint and print the
//! benchmark comparison table.
//!
//! Locates the peak load for 800-slot frames, estimates the decoding
//! probability there, evaluates the age-threshold model at 45000 nodes, and
//! places the result next to the published asymptotics of slotted ALOHA and
//! its feedback-based threshold variants.
//!
//! Run with: `cargo run --example table_comparison`

use irsa_aoi::analytic::{at_irsa_aoi_approx, find_peak_load, AnalyticInput};
use irsa_aoi::harness::report_table1;
use irsa_aoi::DegreeDistribution;

fn main() {
    let dist = DegreeDistribution::regular(3).expect("valid distribution");
    let grid: Vec<f64> = (0..=8).map(|i| 0.70 + 0.015 * i as f64).collect();
    let peak = find_peak_load(800, &dist, &grid, 1500, 6).expect("valid search");
    println!(
        "m=800: G* = {:.3}, p_s = {:.4}, S* = {:.4}",
        peak.load, peak.success_prob, peak.throughput
    );

    let users = 45_000u32;
    let input = AnalyticInput::new(800, users, peak.load, peak.success_prob)
        .expect("valid input");
    let normalized = at_irsa_aoi_approx(&input) / users as f64;

    println!();
    print!("{}", report_table1(normalized));
}
