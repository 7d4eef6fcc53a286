//! Locate the peak-throughput load for a frame size.
//!
//! Peels trial frames over a load grid and reports the load maximizing
//! `S = G p_s(G)` together with the full curve.
//!
//! Run with: `cargo run --example peak_search`

use irsa_aoi::analytic::find_peak_load;
use irsa_aoi::DegreeDistribution;

fn main() {
    let dist = DegreeDistribution::regular(3).expect("valid distribution");
    let grid: Vec<f64> = (0..=20).map(|i| 0.5 + 0.02 * i as f64).collect();
    let peak = find_peak_load(100, &dist, &grid, 2000, 5).expect("valid search");

    println!("load,success_prob,throughput");
    for point in &peak.curve {
        println!(
            "{:.2},{:.4},{:.4}",
            point.load, point.success_prob, point.throughput
        );
    }
    println!();
    println!(
        "peak: G* = {:.2} with S* = {:.4} (p_s = {:.4})",
        peak.load, peak.throughput, peak.success_prob
    );
}
