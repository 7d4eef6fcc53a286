//! Experiment orchestration: sweeps, replications, CSV emission.
//!
//! An [`ExperimentSpec`] describes a base configuration, optional sweep axes
//! over `num_users`, `frame_slots` and `target_load`, and a replication
//! count. [`run_experiment`] executes the Cartesian product of sweep values
//! times replications on a worker pool, each task with a stream derived from
//! `(master seed, point index, replication index)`, and writes one CSV row
//! per run plus a companion per-point summary CSV. Reruns of the same spec
//! produce byte-identical CSV output.

mod config_file;
mod report;

pub use config_file::parse_experiment_file;
pub use report::{emit_fig_data, report_table1, FigureKind, AT_IRSA_REFERENCE_NORMALIZED_AOI};

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::analytic::{at_irsa_aoi_approx, irsa_aoi, sa_aoi, AnalyticInput};
use crate::config::{Protocol, SimConfig};
use crate::error::{Error, Result};
use crate::metrics::RunMetrics;
use crate::sim::{run_at_irsa, run_irsa, run_slotted_aloha};
use crate::stream::derive_seed;

/// Sweep values per parameter; an empty list means "use the base value".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepAxes {
    pub num_users: Vec<u32>,
    pub frame_slots: Vec<u32>,
    pub target_load: Vec<f64>,
}

/// A full experiment description.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub base: SimConfig,
    pub sweep: SweepAxes,
    pub replications: u32,
    pub output_path: PathBuf,
    /// Also fill `analytic_aoi` for slotted ALOHA and IRSA rows (AT-IRSA rows
    /// always carry it).
    pub include_analytic: bool,
    /// Populate the wall-time column. Off by default so reruns of the same
    /// spec are byte-identical.
    pub timing: bool,
}

impl ExperimentSpec {
    /// Expand the sweep into concrete configurations, in deterministic order
    /// (users, then frame slots, then load), with per-run seeds derived from
    /// the base seed and the (point, replication) indices.
    pub fn points(&self) -> Vec<SimConfig> {
        let users = if self.sweep.num_users.is_empty() {
            vec![self.base.num_users]
        } else {
            self.sweep.num_users.clone()
        };
        let slots = if self.sweep.frame_slots.is_empty() {
            vec![self.base.frame_slots]
        } else {
            self.sweep.frame_slots.clone()
        };
        let loads = if self.sweep.target_load.is_empty() {
            vec![self.base.target_load]
        } else {
            self.sweep.target_load.clone()
        };
        let mut points = Vec::new();
        for &u in &users {
            for &m in &slots {
                for &g in &loads {
                    let mut cfg = self.base.clone();
                    cfg.num_users = u;
                    cfg.frame_slots = m;
                    cfg.target_load = g;
                    points.push(cfg);
                }
            }
        }
        points
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications < 1 {
            return Err(Error::InvalidSpec("replications must be >= 1".into()));
        }
        for (i, point) in self.points().iter().enumerate() {
            point.validate().map_err(|e| {
                Error::InvalidSpec(format!("sweep point {i} is invalid: {e}"))
            })?;
        }
        Ok(())
    }
}

/// One CSV row: the outcome of a single replication at a sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub protocol: Protocol,
    pub num_users: u32,
    pub frame_slots: u32,
    pub target_load: f64,
    pub seed: u64,
    pub measured_frames: u64,
    pub throughput: f64,
    pub avg_network_aoi: f64,
    pub normalized_aoi: f64,
    pub realized_load: f64,
    pub ps_estimate: f64,
    pub analytic_aoi: Option<f64>,
    pub wall_time_seconds: Option<f64>,
}

pub const CSV_HEADER: &str = "protocol,num_users,frame_slots,target_load,seed,measured_frames,\
throughput,avg_network_aoi,normalized_aoi,realized_load,ps_estimate,analytic_aoi,wall_time_seconds";

/// Format a float with 10 significant digits, '.' decimal separator.
pub(crate) fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(9 - exponent);
    let rounded = (x * factor).round() / factor;
    format!("{rounded}")
}

impl ResultRecord {
    pub fn to_csv_row(&self) -> String {
        let analytic = self.analytic_aoi.map(fmt_sig).unwrap_or_default();
        let wall = self.wall_time_seconds.map(fmt_sig).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.protocol,
            self.num_users,
            self.frame_slots,
            fmt_sig(self.target_load),
            self.seed,
            self.measured_frames,
            fmt_sig(self.throughput),
            fmt_sig(self.avg_network_aoi),
            fmt_sig(self.normalized_aoi),
            fmt_sig(self.realized_load),
            fmt_sig(self.ps_estimate),
            analytic,
            wall,
        )
    }

    pub fn from_csv_row(row: &str) -> Result<Self> {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 13 {
            return Err(Error::InvalidSpec(format!(
                "expected 13 CSV fields, got {} in \"{row}\"",
                fields.len()
            )));
        }
        let num = |i: usize, what: &str| -> Result<f64> {
            fields[i]
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad {what} in \"{row}\"")))
        };
        let opt = |i: usize, what: &str| -> Result<Option<f64>> {
            if fields[i].is_empty() {
                Ok(None)
            } else {
                num(i, what).map(Some)
            }
        };
        Ok(ResultRecord {
            protocol: fields[0].parse()?,
            num_users: num(1, "num_users")? as u32,
            frame_slots: num(2, "frame_slots")? as u32,
            target_load: num(3, "target_load")?,
            seed: fields[4]
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad seed in \"{row}\"")))?,
            measured_frames: num(5, "measured_frames")? as u64,
            throughput: num(6, "throughput")?,
            avg_network_aoi: num(7, "avg_network_aoi")?,
            normalized_aoi: num(8, "normalized_aoi")?,
            realized_load: num(9, "realized_load")?,
            ps_estimate: num(10, "ps_estimate")?,
            analytic_aoi: opt(11, "analytic_aoi")?,
            wall_time_seconds: opt(12, "wall_time_seconds")?,
        })
    }
}

/// Serialize records with the canonical header.
pub fn records_to_csv(records: &[ResultRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 96 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for record in records {
        out.push_str(&record.to_csv_row());
        out.push('\n');
    }
    out
}

/// Parse a records CSV produced by [`records_to_csv`].
pub fn records_from_csv(text: &str) -> Result<Vec<ResultRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        _ => return Err(Error::InvalidSpec("missing or unexpected CSV header".into())),
    }
    lines.map(ResultRecord::from_csv_row).collect()
}

/// Load records from a CSV file.
pub fn read_records_csv(path: &Path) -> Result<Vec<ResultRecord>> {
    records_from_csv(&fs::read_to_string(path)?)
}

fn run_one(cfg: &SimConfig) -> Result<RunMetrics> {
    match cfg.protocol {
        Protocol::SlottedAloha => run_slotted_aloha(cfg),
        Protocol::Irsa => run_irsa(cfg),
        Protocol::AtIrsa => run_at_irsa(cfg),
    }
}

fn analytic_for(cfg: &SimConfig, metrics: &RunMetrics, include_for_all: bool) -> Option<f64> {
    match cfg.protocol {
        Protocol::AtIrsa => AnalyticInput::new(
            cfg.frame_slots,
            cfg.num_users,
            cfg.target_load,
            metrics.per_frame_success_prob,
        )
        .ok()
        .map(|input| at_irsa_aoi_approx(&input)),
        Protocol::Irsa if include_for_all => {
            irsa_aoi(cfg.frame_slots, cfg.num_users, metrics.throughput).ok()
        }
        Protocol::SlottedAloha if include_for_all => {
            sa_aoi(cfg.num_users, metrics.throughput).ok()
        }
        _ => None,
    }
}

/// Execute a full experiment.
///
/// Replications of each sweep point run in parallel; rows are appended to the
/// output file point by point, in deterministic order. Returns all records.
/// A per-point aggregate is written next to the output as
/// `<stem>.summary.csv`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ResultRecord>> {
    spec.validate()?;
    let points = spec.points();

    let mut file = fs::File::create(&spec.output_path).map_err(|e| {
        Error::InvalidSpec(format!(
            "cannot write to {}: {e}",
            spec.output_path.display()
        ))
    })?;
    writeln!(file, "{CSV_HEADER}")?;

    let mut records = Vec::with_capacity(points.len() * spec.replications as usize);
    for (point_idx, point) in points.iter().enumerate() {
        let point_records: Vec<ResultRecord> = (0..spec.replications)
            .into_par_iter()
            .map(|rep| {
                let mut cfg = point.clone();
                cfg.seed = derive_seed(spec.base.seed, &[point_idx as u64, rep as u64]);
                let started = Instant::now();
                let metrics = run_one(&cfg)?;
                let wall = started.elapsed().as_secs_f64();
                Ok(ResultRecord {
                    protocol: cfg.protocol,
                    num_users: cfg.num_users,
                    frame_slots: cfg.frame_slots,
                    target_load: cfg.target_load,
                    seed: cfg.seed,
                    measured_frames: metrics.measured_frames,
                    throughput: metrics.throughput,
                    avg_network_aoi: metrics.avg_network_aoi,
                    normalized_aoi: metrics.normalized_aoi,
                    realized_load: metrics.realized_load,
                    ps_estimate: metrics.per_frame_success_prob,
                    analytic_aoi: analytic_for(&cfg, &metrics, spec.include_analytic),
                    wall_time_seconds: spec.timing.then_some(wall),
                })
            })
            .collect::<Result<_>>()?;
        for record in &point_records {
            writeln!(file, "{}", record.to_csv_row())?;
        }
        file.flush()?;
        records.extend(point_records);
    }

    fs::write(
        summary_path(&spec.output_path),
        summarize_records(&records),
    )?;
    Ok(records)
}

pub fn summary_path(output: &Path) -> PathBuf {
    let stem = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "results".into());
    output.with_file_name(format!("{stem}.summary.csv"))
}

/// Mean and sample standard deviation per sweep point.
pub fn summarize_records(records: &[ResultRecord]) -> String {
    let mut out = String::from(
        "protocol,num_users,frame_slots,target_load,replications,\
throughput_mean,throughput_std,avg_network_aoi_mean,avg_network_aoi_std,\
normalized_aoi_mean,normalized_aoi_std,realized_load_mean,ps_mean\n",
    );
    let mut seen: Vec<(Protocol, u32, u32, f64)> = Vec::new();
    for record in records {
        let key = (
            record.protocol,
            record.num_users,
            record.frame_slots,
            record.target_load,
        );
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let group: Vec<&ResultRecord> = records
            .iter()
            .filter(|r| {
                (r.protocol, r.num_users, r.frame_slots, r.target_load) == key
            })
            .collect();
        let stats = |get: fn(&ResultRecord) -> f64| -> (f64, f64) {
            let n = group.len() as f64;
            let mean = group.iter().map(|r| get(r)).sum::<f64>() / n;
            let std = if group.len() > 1 {
                (group.iter().map(|r| (get(r) - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
            } else {
                0.0
            };
            (mean, std)
        };
        let (s_mean, s_std) = stats(|r| r.throughput);
        let (aoi_mean, aoi_std) = stats(|r| r.avg_network_aoi);
        let (norm_mean, norm_std) = stats(|r| r.normalized_aoi);
        let (load_mean, _) = stats(|r| r.realized_load);
        let (ps_mean, _) = stats(|r| r.ps_estimate);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            key.0,
            key.1,
            key.2,
            fmt_sig(key.3),
            group.len(),
            fmt_sig(s_mean),
            fmt_sig(s_std),
            fmt_sig(aoi_mean),
            fmt_sig(aoi_std),
            fmt_sig(norm_mean),
            fmt_sig(norm_std),
            fmt_sig(load_mean),
            fmt_sig(ps_mean),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(5050.0), "5050");
        assert_eq!(fmt_sig(0.66), "0.66");
        assert_eq!(fmt_sig(f64::INFINITY), "inf");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.3333333333");
        assert_eq!(fmt_sig(-1.0 / 3.0), "-0.3333333333");
        assert_eq!(fmt_sig(123456789.123), "123456789.1");
    }

    #[test]
    fn record_row_round_trip() {
        let record = ResultRecord {
            protocol: Protocol::AtIrsa,
            num_users: 4000,
            frame_slots: 400,
            target_load: 0.73,
            seed: 99,
            measured_frames: 1000,
            throughput: 0.6812345678,
            avg_network_aoi: 3152.25,
            normalized_aoi: 3152.25 / 4000.0,
            realized_load: 0.7301,
            ps_estimate: 0.94,
            analytic_aoi: Some(3101.5),
            wall_time_seconds: None,
        };
        let parsed = ResultRecord::from_csv_row(&record.to_csv_row()).unwrap();
        assert_eq!(parsed.protocol, record.protocol);
        assert_eq!(parsed.analytic_aoi, record.analytic_aoi);
        assert_eq!(parsed.wall_time_seconds, None);
        assert!((parsed.normalized_aoi - record.normalized_aoi).abs() < 1e-9);
    }

    #[test]
    fn csv_round_trip_via_text() {
        let record = ResultRecord {
            protocol: Protocol::Irsa,
            num_users: 10,
            frame_slots: 5,
            target_load: 0.4,
            seed: 1,
            measured_frames: 10,
            throughput: 0.2,
            avg_network_aoi: 25.0,
            normalized_aoi: 2.5,
            realized_load: 0.4,
            ps_estimate: 0.5,
            analytic_aoi: None,
            wall_time_seconds: None,
        };
        let text = records_to_csv(std::slice::from_ref(&record));
        let parsed = records_from_csv(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].num_users, 10);
        assert!(records_from_csv("bogus\n1,2,3").is_err());
    }
}
