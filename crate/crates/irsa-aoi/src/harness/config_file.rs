//! Flat key/value experiment files.
//!
//! One `key = value` pair per line, `#` starts a comment. Sweep lists are
//! comma-separated values under `sweep.<parameter>` keys. Unknown keys are
//! rejected rather than ignored: a typo must fail loudly, not silently run
//! the wrong experiment.
//!
//! ```text
//! protocol = at-irsa
//! num_users = 4000
//! frame_slots = 400
//! target_load = 0.73
//! lambda = 3:1.0
//! frames = 200000          # measured frames (warm-up is added on top)
//! warmup = 140             # optional; default 10 ceil(U / (m G))
//! seed = 1
//! replications = 5
//! output = results.csv
//! analytic = true          # optional; fill analytic_aoi for SA/IRSA too
//! sweep.num_users = 500, 1000, 2000, 4000
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::config::{Protocol, SimConfig};
use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};

use super::{ExperimentSpec, SweepAxes};

const KNOWN_KEYS: &[&str] = &[
    "protocol",
    "num_users",
    "frame_slots",
    "target_load",
    "lambda",
    "frames",
    "warmup",
    "seed",
    "replications",
    "output",
    "analytic",
    "timing",
    "sweep.num_users",
    "sweep.frame_slots",
    "sweep.target_load",
];

/// Parse an experiment file into a runnable spec.
pub fn parse_experiment_file(text: &str) -> Result<ExperimentSpec> {
    let mut values: BTreeMap<String, String> = BTreeMap::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::InvalidSpec(format!("line {}: expected key = value", line_no + 1))
        })?;
        let key = key.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Error::InvalidSpec(format!(
                "line {}: unknown key \"{key}\"",
                line_no + 1
            )));
        }
        if values.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(Error::InvalidSpec(format!(
                "line {}: key \"{key}\" given twice",
                line_no + 1
            )));
        }
    }

    let required = |key: &str| -> Result<&String> {
        values
            .get(key)
            .ok_or_else(|| Error::InvalidSpec(format!("missing required key \"{key}\"")))
    };
    let parse_num = |key: &str, value: &str| -> Result<f64> {
        value
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("bad number for \"{key}\": \"{value}\"")))
    };

    let protocol: Protocol = required("protocol")?.parse()?;
    let num_users = parse_num("num_users", required("num_users")?)? as u32;
    let frame_slots = parse_num("frame_slots", required("frame_slots")?)? as u32;
    let target_load: f64 = parse_num("target_load", required("target_load")?)?;
    let distribution: DegreeDistribution = required("lambda")?.parse()?;
    let measured = parse_num("frames", required("frames")?)? as u64;
    let warmup = match values.get("warmup") {
        Some(v) => parse_num("warmup", v)? as u64,
        None => SimConfig::default_warmup_frames(num_users, frame_slots, target_load),
    };
    let seed = match values.get("seed") {
        Some(v) => parse_num("seed", v)? as u64,
        None => 0,
    };
    let replications = match values.get("replications") {
        Some(v) => parse_num("replications", v)? as u32,
        None => 1,
    };
    let output_path = PathBuf::from(
        values
            .get("output")
            .cloned()
            .unwrap_or_else(|| "results.csv".to_string()),
    );
    let parse_bool = |key: &str| -> Result<bool> {
        match values.get(key).map(String::as_str) {
            None => Ok(false),
            Some("true") | Some("1") | Some("yes") => Ok(true),
            Some("false") | Some("0") | Some("no") => Ok(false),
            Some(other) => Err(Error::InvalidSpec(format!(
                "bad boolean for \"{key}\": \"{other}\""
            ))),
        }
    };

    let list = |key: &str| -> Result<Vec<f64>> {
        match values.get(key) {
            None => Ok(Vec::new()),
            Some(v) => v
                .split(',')
                .map(|item| parse_num(key, item.trim()))
                .collect(),
        }
    };
    let sweep = SweepAxes {
        num_users: list("sweep.num_users")?.iter().map(|&x| x as u32).collect(),
        frame_slots: list("sweep.frame_slots")?.iter().map(|&x| x as u32).collect(),
        target_load: list("sweep.target_load")?,
    };

    let spec = ExperimentSpec {
        base: SimConfig {
            protocol,
            num_users,
            frame_slots,
            target_load,
            distribution,
            total_frames: warmup + measured,
            warmup_frames: warmup,
            seed,
        },
        sweep,
        replications,
        output_path,
        include_analytic: parse_bool("analytic")?,
        timing: parse_bool("timing")?,
    };
    spec.validate()?;
    Ok(spec)
}
