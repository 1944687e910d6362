//! Run configuration: command-line flags over a JSON config file over the
//! per-ring defaults.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use num_rational::BigRational;
use quasiord::ring::{Bounds, Ring};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_PRIME_BOUND: u64 = 5;

/// Flags shared by every command. Unset flags fall through to the config
/// file, then to the defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct SharedArgs {
    /// Ring id: Z, QX or QXY.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Integer bound B: the integer universe is [-B, B].
    #[arg(long, global = true, value_name = "B")]
    pub bound: Option<u64>,
    /// Largest exponent per variable in polynomial universes.
    #[arg(long, global = true, value_name = "D")]
    pub max_exp: Option<u32>,
    /// Largest number of terms in polynomial universes.
    #[arg(long, global = true, value_name = "T")]
    pub max_terms: Option<usize>,
    /// Comma-separated nonzero rational coefficients, e.g. -2,-1,1/2,1.
    #[arg(long, global = true, value_name = "LIST", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Extra random elements added after the exhaustive part.
    #[arg(long, global = true, value_name = "S")]
    pub samples: Option<usize>,
    /// Seed for the random samples.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Primes up to this bound get p-adic valuations and trivials on Z.
    #[arg(long, global = true, value_name = "N")]
    pub prime_bound: Option<u64>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Write Graphviz output here (tree and forest).
    #[arg(long, global = true, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// JSON file with any of the settings above.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub ring: Option<String>,
    pub bound: Option<u64>,
    pub max_exp: Option<u32>,
    pub max_terms: Option<usize>,
    pub coeffs: Option<String>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub prime_bound: Option<u64>,
    pub out: Option<PathBuf>,
    pub dot: Option<PathBuf>,
}

/// The resolved settings. Universe fields stay optional so each ring keeps
/// its own defaults for whatever was not overridden.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub ring: Option<Ring>,
    pub bound: Option<u64>,
    pub max_exp: Option<u32>,
    pub max_terms: Option<usize>,
    pub coeffs: Option<String>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub prime_bound: u64,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub dot: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ring: None,
            bound: None,
            max_exp: None,
            max_terms: None,
            coeffs: None,
            samples: None,
            seed: None,
            prime_bound: DEFAULT_PRIME_BOUND,
            out: None,
            dot: None,
        }
    }
}

pub fn parse_coeffs(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|_| CliError::Usage(format!("bad coefficient {t:?} in --coeffs")))
        })
        .collect()
}

pub fn parse_ring(s: &str) -> Result<Ring, CliError> {
    Ring::from_id(s).map_err(|e| CliError::Usage(e.to_string()))
}

impl SharedArgs {
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str::<ConfigFile>(&text)
                    .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let ring = match self.ring.as_ref().or(file.ring.as_ref()) {
            Some(s) => Some(parse_ring(s)?),
            None => None,
        };
        let cfg = RunConfig {
            ring,
            bound: self.bound.or(file.bound),
            max_exp: self.max_exp.or(file.max_exp),
            max_terms: self.max_terms.or(file.max_terms),
            coeffs: self.coeffs.clone().or(file.coeffs),
            samples: self.samples.or(file.samples),
            seed: self.seed.or(file.seed),
            prime_bound: self.prime_bound.or(file.prime_bound).unwrap_or(DEFAULT_PRIME_BOUND),
            out: self.out.clone().or(file.out),
            dot: self.dot.clone().or(file.dot),
        };
        if let Some(c) = &cfg.coeffs {
            parse_coeffs(c)?;
        }
        Ok(cfg)
    }
}

impl RunConfig {
    pub fn require_ring(&self) -> Result<Ring, CliError> {
        self.ring
            .ok_or_else(|| CliError::Usage("--ring is required (Z, QX or QXY)".into()))
    }

    pub fn bounds(&self, ring: Ring) -> Result<Bounds, CliError> {
        let mut b = Bounds::default_for(ring);
        if let Some(v) = self.bound {
            b.int_bound = v;
        }
        if let Some(v) = self.max_exp {
            b.max_exp = v;
        }
        if let Some(v) = self.max_terms {
            b.max_terms = v;
        }
        if let Some(c) = &self.coeffs {
            b.coeffs = parse_coeffs(c)?;
        }
        if let Some(v) = self.samples {
            b.samples = v;
        }
        if let Some(v) = self.seed {
            b.seed = v;
        }
        b.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(b)
    }

    pub fn universe(&self, ring: Ring) -> Result<quasiord::ring::Universe, CliError> {
        quasiord::ring::Universe::enumerate(ring, self.bounds(ring)?)
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn flags_override_file_and_file_overrides_defaults() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, r#"{{"ring": "QX", "bound": 4, "seed": 9, "prime_bound": 7}}"#).unwrap();
        let args = SharedArgs {
            bound: Some(6),
            config: Some(f.path().to_path_buf()),
            ..Default::default()
        };
        let cfg = args.resolve().unwrap();
        assert_eq!(cfg.ring, Some(Ring::PolyUni));
        assert_eq!(cfg.bound, Some(6));
        assert_eq!(cfg.seed, Some(9));
        assert_eq!(cfg.prime_bound, 7);
        assert_eq!(cfg.max_exp, None);
        let b = cfg.bounds(Ring::PolyUni).unwrap();
        assert_eq!((b.int_bound, b.max_exp, b.seed), (6, 3, 9));
    }

    #[test]
    fn bad_inputs_are_usage_errors() {
        let bad_ring = SharedArgs {
            ring: Some("R".into()),
            ..Default::default()
        };
        assert!(matches!(bad_ring.resolve(), Err(CliError::Usage(_))));
        let bad_coeff = SharedArgs {
            coeffs: Some("1,x".into()),
            ..Default::default()
        };
        assert!(matches!(bad_coeff.resolve(), Err(CliError::Usage(_))));
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, r#"{{"rng": "Z"}}"#).unwrap();
        let unknown = SharedArgs {
            config: Some(f.path().to_path_buf()),
            ..Default::default()
        };
        assert!(matches!(unknown.resolve(), Err(CliError::Usage(_))));
    }

    #[test]
    fn coefficients_accept_fractions() {
        let c = parse_coeffs("-2, 1/2,3").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[1], BigRational::new(1.into(), 2.into()));
    }
}
