//! Command-line front end. All real work lives in the library.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use irsa_aoi::analytic::{
    at_irsa_aoi_approx, at_irsa_aoi_from_moments, find_peak_load, irsa_aoi, sa_aoi, AnalyticInput,
};
use irsa_aoi::harness::{
    emit_fig_data, parse_experiment_file, read_records_csv, report_table1, run_experiment,
    summary_path, FigureKind,
};
use irsa_aoi::sim::{AtIrsaEngine, IrsaEngine, SlottedAlohaEngine};
use irsa_aoi::{DegreeDistribution, Protocol, RunMetrics, SimConfig};

#[derive(Parser)]
#[command(
    name = "irsa-aoi",
    about = "Age-of-information simulation and analysis for frame-based random access"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SimArgs {
    /// Protocol: sa, irsa or at-irsa.
    #[arg(long, default_value = "irsa")]
    protocol: Protocol,
    /// Population size U.
    #[arg(long, default_value_t = 4000)]
    users: u32,
    /// Slots per frame m (must be 1 for sa).
    #[arg(long, default_value_t = 100)]
    frame_slots: u32,
    /// Channel load G (load set point G* for at-irsa).
    #[arg(long, default_value_t = 0.66)]
    load: f64,
    /// Replica distribution, e.g. 3:1.0 or 2:0.5,3:0.5.
    #[arg(long, default_value = "3:1.0")]
    lambda: DegreeDistribution,
    /// Measured frames (slots for sa); warm-up is added on top.
    #[arg(long, default_value_t = 10_000)]
    frames: u64,
    /// Warm-up frames. Default: 10 ceil(U / (m G)).
    #[arg(long)]
    warmup: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SimArgs {
    fn config(&self) -> SimConfig {
        let warmup = self.warmup.unwrap_or_else(|| {
            SimConfig::default_warmup_frames(self.users, self.frame_slots, self.load)
        });
        SimConfig {
            protocol: self.protocol,
            num_users: self.users,
            frame_slots: self.frame_slots,
            target_load: self.load,
            distribution: self.lambda.clone(),
            total_frames: warmup + self.frames,
            warmup_frames: warmup,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation and print its metrics.
    Simulate {
        #[command(flatten)]
        sim: SimArgs,
        /// Print one `frame,transmitters,decoded,theta,p` line per frame.
        #[arg(long)]
        trace: bool,
    },
    /// Run an experiment file (sweeps x replications) and write CSV records.
    Sweep {
        /// Experiment file; see the library docs for keys.
        spec: PathBuf,
        /// Override the output path from the file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the replication count from the file.
        #[arg(long)]
        replications: Option<u32>,
        /// Override the master seed from the file.
        #[arg(long)]
        seed: Option<u64>,
        /// Record wall times (breaks byte-reproducibility of the CSV).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate the closed-form AoI models.
    Analytic {
        /// Model: sa, irsa or at-irsa.
        #[arg(long, default_value = "at-irsa")]
        model: Protocol,
        #[arg(long, default_value_t = 4000)]
        users: u32,
        #[arg(long, default_value_t = 100)]
        frame_slots: u32,
        /// Load set point G* (at-irsa only).
        #[arg(long, default_value_t = 0.66)]
        load: f64,
        /// Per-frame decoding probability p_s (at-irsa only).
        #[arg(long, default_value_t = 1.0)]
        ps: f64,
        /// Throughput S (sa and irsa only).
        #[arg(long)]
        throughput: Option<f64>,
    },
    /// Locate the peak-throughput load G* on a grid.
    Peak {
        #[arg(long, default_value_t = 100)]
        frame_slots: u32,
        #[arg(long, default_value = "3:1.0")]
        lambda: DegreeDistribution,
        /// Grid as start:end:step, e.g. 0.5:0.9:0.02.
        #[arg(long, default_value = "0.5:0.9:0.02")]
        grid: String,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full load/throughput curve here as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce experiment records to figure-ready CSV.
    Figdata {
        /// throughput_vs_load, aoi_vs_users or analytic_vs_sim.
        #[arg(long)]
        figure: FigureKind,
        /// Records CSV produced by `sweep`.
        #[arg(long)]
        records: PathBuf,
        /// Output CSV path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the benchmark comparison table for a normalized AoI value.
    Table1 {
        /// Locally measured or computed AT-IRSA normalized AoI (delta/U).
        #[arg(long)]
        value: f64,
    },
}

fn print_metrics(metrics: &RunMetrics) {
    println!("measured_frames        {}", metrics.measured_frames);
    println!("throughput             {:.6}", metrics.throughput);
    println!("avg_network_aoi        {:.3}", metrics.avg_network_aoi);
    println!("normalized_aoi         {:.6}", metrics.normalized_aoi);
    println!("realized_load          {:.6}", metrics.realized_load);
    println!("per_frame_success_prob {:.6}", metrics.per_frame_success_prob);
    println!("decoded_packets        {}", metrics.decoded_packets);
    println!("attempted_tx           {}", metrics.attempted_transmissions);
}

fn simulate(sim: &SimArgs, trace: bool) -> irsa_aoi::Result<()> {
    let cfg = sim.config();
    let metrics = if !trace {
        match cfg.protocol {
            Protocol::SlottedAloha => irsa_aoi::run_slotted_aloha(&cfg)?,
            Protocol::Irsa => irsa_aoi::run_irsa(&cfg)?,
            Protocol::AtIrsa => irsa_aoi::run_at_irsa(&cfg)?,
        }
    } else {
        // Stepped run with a per-frame trace line.
        macro_rules! traced {
            ($engine:expr, $total:expr) => {{
                let mut engine = $engine;
                for _ in 0..$total {
                    let s = engine.step();
                    let (theta, p) = s
                        .feedback
                        .map(|f| (f.threshold_slots.to_string(), format!("{:.6}", f.barring_probability)))
                        .unwrap_or_default();
                    println!("{},{},{},{},{}", s.frame, s.transmitters, s.decoded.len(), theta, p);
                }
                engine.into_metrics()
            }};
        }
        match cfg.protocol {
            Protocol::SlottedAloha => traced!(SlottedAlohaEngine::new(&cfg)?, cfg.total_frames),
            Protocol::Irsa => traced!(IrsaEngine::new(&cfg)?, cfg.total_frames),
            Protocol::AtIrsa => traced!(AtIrsaEngine::new(&cfg)?, cfg.total_frames),
        }
    };
    print_metrics(&metrics);
    Ok(())
}

fn parse_grid(text: &str) -> irsa_aoi::Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(irsa_aoi::Error::InvalidArgument(format!(
            "grid must be start:end:step, got \"{text}\""
        )));
    }
    let parse = |s: &str| -> irsa_aoi::Result<f64> {
        s.parse()
            .map_err(|_| irsa_aoi::Error::InvalidArgument(format!("bad grid number \"{s}\"")))
    };
    let (start, end, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if step <= 0.0 || end < start {
        return Err(irsa_aoi::Error::InvalidArgument(format!(
            "degenerate grid \"{text}\""
        )));
    }
    let count = ((end - start) / step).round() as usize + 1;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

fn real_main() -> irsa_aoi::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Simulate { sim, trace } => simulate(&sim, trace)?,
        Command::Sweep {
            spec,
            out,
            replications,
            seed,
            timing,
        } => {
            let text = fs::read_to_string(&spec)?;
            let mut spec = parse_experiment_file(&text)?;
            if let Some(out) = out {
                spec.output_path = out;
            }
            if let Some(replications) = replications {
                spec.replications = replications;
            }
            if let Some(seed) = seed {
                spec.base.seed = seed;
            }
            spec.timing = spec.timing || timing;
            let records = run_experiment(&spec)?;
            eprintln!(
                "wrote {} records to {} (summary: {})",
                records.len(),
                spec.output_path.display(),
                summary_path(&spec.output_path).display()
            );
        }
        Command::Analytic {
            model,
            users,
            frame_slots,
            load,
            ps,
            throughput,
        } => match model {
            Protocol::AtIrsa => {
                let input = AnalyticInput::new(frame_slots, users, load, ps)?;
                let closed = at_irsa_aoi_approx(&input);
                let moments = at_irsa_aoi_from_moments(&input);
                println!("aoi_slots       {closed:.4}");
                println!("aoi_moment_form {moments:.4}");
                println!("normalized      {:.6}", closed / users as f64);
            }
            Protocol::Irsa => {
                let s = throughput.ok_or_else(|| {
                    irsa_aoi::Error::InvalidArgument("--throughput required for irsa".into())
                })?;
                let aoi = irsa_aoi(frame_slots, users, s)?;
                println!("aoi_slots  {aoi:.4}");
                println!("normalized {:.6}", aoi / users as f64);
            }
            Protocol::SlottedAloha => {
                let s = throughput.ok_or_else(|| {
                    irsa_aoi::Error::InvalidArgument("--throughput required for sa".into())
                })?;
                let aoi = sa_aoi(users, s)?;
                println!("aoi_slots  {aoi:.4}");
                println!("normalized {:.6}", aoi / users as f64);
            }
        },
        Command::Peak {
            frame_slots,
            lambda,
            grid,
            trials,
            seed,
            out,
        } => {
            let grid = parse_grid(&grid)?;
            let peak = find_peak_load(frame_slots, &lambda, &grid, trials, seed)?;
            println!("peak_load       {:.4}", peak.load);
            println!("peak_throughput {:.4}", peak.throughput);
            println!("success_prob    {:.4}", peak.success_prob);
            if let Some(path) = out {
                let mut csv = String::from("load,success_prob,throughput\n");
                for point in &peak.curve {
                    csv.push_str(&format!(
                        "{:.4},{:.6},{:.6}\n",
                        point.load, point.success_prob, point.throughput
                    ));
                }
                fs::write(&path, csv)?;
                eprintln!("wrote curve to {}", path.display());
            }
        }
        Command::Figdata {
            figure,
            records,
            out,
        } => {
            let records = read_records_csv(&records)?;
            let csv = emit_fig_data(figure, &records)?;
            match out {
                Some(path) => fs::write(path, csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Table1 { value } => print!("{}", report_table1(value)),
    }
    Ok(())
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
