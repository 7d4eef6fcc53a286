//! # irsa-aoi
//!
//! Frame-synchronous Monte Carlo simulation and closed-form models for the
//! age-of-information (AoI) behavior of grant-free random access protocols:
//!
//! - **Slotted ALOHA** baseline with per-slot contention.
//! - **IRSA** (irregular repetition slotted ALOHA): each active terminal
//!   sends several replicas of its packet in random slots of a frame and the
//!   receiver resolves collisions by successive interference cancellation.
//! - **AT-IRSA** (age-threshold IRSA): the receiver broadcasts an age
//!   threshold and a barring probability at every frame boundary, admitting
//!   only terminals whose AoI at the sink is stale enough to contend.
//!
//! The crate provides:
//! - Degree distributions, replica placement and a deterministic
//!   stream-splitting contract ([`degree`], [`frame`], [`stream`]).
//! - The peeling decoder and slot classification ([`decoder`]).
//! - Simulation engines with exact piecewise-linear AoI accounting ([`sim`]).
//! - Closed-form and semi-analytic AoI models, plus Monte Carlo estimation of
//!   the per-frame decoding probability and peak-throughput load ([`analytic`]).
//! - An experiment harness: sweeps, replications, CSV emission and the
//!   benchmark comparison table ([`harness`]).
//!
//! Every stochastic routine takes an explicit random stream; runs are
//! bit-reproducible from a master seed. See the `examples/` directory for one
//! runnable program per capability, and the `irsa-aoi` binary for the CLI.

pub mod analytic;
pub mod config;
pub mod decoder;
pub mod degree;
pub mod error;
pub mod frame;
pub mod harness;
pub mod metrics;
pub mod sim;
pub mod stream;

pub use config::{Protocol, SimConfig};
pub use decoder::{classify_slots, decode_frame, DecodeOutcome, PeelEvent, SlotCensus};
pub use degree::DegreeDistribution;
pub use error::{Error, Result};
pub use frame::{place_replicas, FrameOccupancy, Transmission};
pub use metrics::RunMetrics;
pub use sim::{
    accumulate_aoi, compute_threshold, run_at_irsa, run_irsa, run_slotted_aloha, AoiAccumulator,
    NodeState, ThresholdFeedback,
};
pub use stream::{derive_seed, derive_stream, Stream};
