//! Simulation configuration.

use std::fmt;
use std::str::FromStr;

use crate::degree::DegreeDistribution;
use crate::error::{Error, Result};

/// The medium access protocol a run simulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    SlottedAloha,
    Irsa,
    AtIrsa,
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Protocol::SlottedAloha => "sa",
            Protocol::Irsa => "irsa",
            Protocol::AtIrsa => "at-irsa",
        };
        f.write_str(name)
    }
}

impl FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sa" | "slotted-aloha" | "aloha" => Ok(Protocol::SlottedAloha),
            "irsa" => Ok(Protocol::Irsa),
            "at-irsa" | "atirsa" => Ok(Protocol::AtIrsa),
            other => Err(Error::InvalidConfig(format!("unknown protocol \"{other}\""))),
        }
    }
}

/// Parameters of one simulation run.
///
/// `target_load` is the average channel load G for slotted ALOHA and IRSA and
/// the load set point G* for AT-IRSA. Frames `1..=warmup_frames` are excluded
/// from every metric; metrics cover the remaining
/// `total_frames - warmup_frames` frames. For slotted ALOHA a "frame" is a
/// single slot and `frame_slots` must be 1.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub protocol: Protocol,
    pub num_users: u32,
    pub frame_slots: u32,
    pub target_load: f64,
    pub distribution: DegreeDistribution,
    pub total_frames: u64,
    pub warmup_frames: u64,
    pub seed: u64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_users < 1 {
            return Err(Error::InvalidConfig("num_users must be >= 1".into()));
        }
        if self.frame_slots < 1 {
            return Err(Error::InvalidConfig("frame_slots must be >= 1".into()));
        }
        if !self.target_load.is_finite() || self.target_load < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "target_load must be a finite non-negative real, got {}",
                self.target_load
            )));
        }
        if self.total_frames < 1 {
            return Err(Error::InvalidConfig("total_frames must be >= 1".into()));
        }
        if self.warmup_frames >= self.total_frames {
            return Err(Error::InvalidConfig(format!(
                "warmup_frames ({}) must be < total_frames ({})",
                self.warmup_frames, self.total_frames
            )));
        }
        // The system must be able to field the target number of transmitters.
        if self.target_load * self.frame_slots as f64 > self.num_users as f64 {
            return Err(Error::InvalidConfig(format!(
                "target_load * frame_slots = {} exceeds num_users = {}",
                self.target_load * self.frame_slots as f64,
                self.num_users
            )));
        }
        match self.protocol {
            Protocol::SlottedAloha => {
                if self.frame_slots != 1 {
                    return Err(Error::InvalidConfig(
                        "slotted ALOHA runs on single-slot frames; set frame_slots = 1".into(),
                    ));
                }
            }
            Protocol::Irsa | Protocol::AtIrsa => {
                // Replicas occupy distinct slots.
                if self.distribution.max_degree() > self.frame_slots {
                    return Err(Error::InvalidConfig(format!(
                        "max replica count {} exceeds frame_slots {}",
                        self.distribution.max_degree(),
                        self.frame_slots
                    )));
                }
            }
        }
        Ok(())
    }

    /// Frames covered by the metrics.
    pub fn measured_frames(&self) -> u64 {
        self.total_frames - self.warmup_frames
    }

    /// Default warm-up: ten round-robin cycles of the population at the
    /// target load, `10 * ceil(U / (m G))`. Zero when the load is zero.
    pub fn default_warmup_frames(num_users: u32, frame_slots: u32, target_load: f64) -> u64 {
        let per_frame = frame_slots as f64 * target_load;
        if per_frame <= 0.0 {
            return 0;
        }
        10 * (num_users as f64 / per_frame).ceil() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> SimConfig {
        SimConfig {
            protocol: Protocol::Irsa,
            num_users: 100,
            frame_slots: 10,
            target_load: 0.5,
            distribution: DegreeDistribution::regular(3).unwrap(),
            total_frames: 100,
            warmup_frames: 10,
            seed: 0,
        }
    }

    #[test]
    fn valid_config_passes() {
        base().validate().unwrap();
    }

    #[test]
    fn rejects_bad_fields() {
        let mut c = base();
        c.warmup_frames = 100;
        assert!(c.validate().is_err());

        let mut c = base();
        c.target_load = 11.0; // 11 * 10 > 100 users
        assert!(c.validate().is_err());

        let mut c = base();
        c.distribution = DegreeDistribution::regular(11).unwrap();
        assert!(c.validate().is_err());

        let mut c = base();
        c.protocol = Protocol::SlottedAloha;
        assert!(c.validate().is_err()); // frame_slots must be 1 for SA
        c.frame_slots = 1;
        c.target_load = 1.0;
        c.validate().unwrap();
    }

    #[test]
    fn zero_load_is_accepted_as_degenerate() {
        let mut c = base();
        c.target_load = 0.0;
        c.validate().unwrap();
    }

    #[test]
    fn default_warmup_rule() {
        // 10 * ceil(4000 / 66) = 10 * 61 = 610
        assert_eq!(SimConfig::default_warmup_frames(4000, 100, 0.66), 610);
        assert_eq!(SimConfig::default_warmup_frames(1000, 1, 1.0), 10_000);
        assert_eq!(SimConfig::default_warmup_frames(1000, 1, 0.0), 0);
    }

    #[test]
    fn protocol_parsing() {
        assert_eq!("irsa".parse::<Protocol>().unwrap(), Protocol::Irsa);
        assert_eq!("AT-IRSA".parse::<Protocol>().unwrap(), Protocol::AtIrsa);
        assert_eq!("sa".parse::<Protocol>().unwrap(), Protocol::SlottedAloha);
        assert!("tdma".parse::<Protocol>().is_err());
    }
}
