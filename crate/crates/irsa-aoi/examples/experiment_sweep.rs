//! Run a population sweep through the experiment harness.
//!
//! Builds an experiment programmatically (the `sweep` CLI subcommand does the
//! same from a key/value file), runs it with per-replication derived seeds,
//! and reduces the records to a figure-ready CSV.
//!
//! Run with: `cargo run --example experiment_sweep`

use irsa_aoi::harness::{
    emit_fig_data, run_experiment, ExperimentSpec, FigureKind, SweepAxes,
};
use irsa_aoi::{DegreeDistribution, Protocol, SimConfig};

fn main() {
    let output = std::env::temp_dir().join("irsa_aoi_example_sweep.csv");
    let spec = ExperimentSpec {
        base: SimConfig {
            protocol: Protocol::AtIrsa,
            num_users: 200,
            frame_slots: 50,
            target_load: 0.6,
            distribution: DegreeDistribution::regular(3).expect("valid distribution"),
            total_frames: 2100,
            warmup_frames: 100,
            seed: 11,
        },
        sweep: SweepAxes {
            num_users: vec![200, 400, 800],
            frame_slots: vec![],
            target_load: vec![],
        },
        replications: 3,
        output_path: output.clone(),
        include_analytic: false,
        timing: false,
    };

    let records = run_experiment(&spec).expect("valid spec");
    println!(
        "{} records written to {} (plus a .summary.csv next to it)",
        records.len(),
        output.display()
    );
    println!();
    println!("normalized AoI vs population:");
    print!(
        "{}",
        emit_fig_data(FigureKind::AoiVsUsers, &records).expect("records exist")
    );
}
