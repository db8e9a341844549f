use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{bucketsort_compare, sort_compare, successive_sweep};
use crate::minplus::{CdxzConfig, DEFAULT_BASE_THRESHOLD};
use crate::pareto::{ParetoSet, WitnessedPoint};
use crate::reduction::{bounded_pareto_sum, Backend};

/// Every exact Pareto-sum algorithm, addressable by its command-line name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Sc,
    Sss,
    Bsc,
    ConvNaive,
    ConvEnhanced,
    ConvCp { base_threshold: usize },
    ConvCdxz(CdxzConfig),
}

impl Algorithm {
    pub const NAMES: [&'static str; 7] = [
        "sc",
        "sss",
        "bsc",
        "conv-naive",
        "conv-enhanced",
        "conv-cp",
        "conv-cdxz",
    ];

    pub fn all_default() -> Vec<Algorithm> {
        Self::NAMES.iter().map(|n| n.parse().unwrap()).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Sc => "sc",
            Algorithm::Sss => "sss",
            Algorithm::Bsc => "bsc",
            Algorithm::ConvNaive => "conv-naive",
            Algorithm::ConvEnhanced => "conv-enhanced",
            Algorithm::ConvCp { .. } => "conv-cp",
            Algorithm::ConvCdxz(_) => "conv-cdxz",
        }
    }

    pub fn reports_witnesses(&self) -> bool {
        !matches!(self, Algorithm::ConvCdxz(_))
    }

    fn backend(&self) -> Option<Backend> {
        match self {
            Algorithm::ConvNaive => Some(Backend::Naive),
            Algorithm::ConvEnhanced => Some(Backend::Enhanced),
            Algorithm::ConvCp { base_threshold } => Some(Backend::ConvexPruning {
                base_threshold: *base_threshold,
            }),
            Algorithm::ConvCdxz(cfg) => Some(Backend::Cdxz(cfg.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sc" => Algorithm::Sc,
            "sss" => Algorithm::Sss,
            "bsc" => Algorithm::Bsc,
            "conv-naive" => Algorithm::ConvNaive,
            "conv-enhanced" => Algorithm::ConvEnhanced,
            "conv-cp" => Algorithm::ConvCp {
                base_threshold: DEFAULT_BASE_THRESHOLD,
            },
            "conv-cdxz" => Algorithm::ConvCdxz(CdxzConfig::default()),
            other => {
                return Err(Error::Config(format!(
                    "unknown algorithm `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumOutput {
    pub points: Vec<WitnessedPoint>,
    pub pruned_fraction: Option<f64>,
}

/// Exact Pareto sum with the chosen algorithm.
pub fn pareto_sum(p: &ParetoSet, q: &ParetoSet, algo: &Algorithm) -> Result<SumOutput> {
    let points = match algo {
        Algorithm::Sc => sort_compare(p, q),
        Algorithm::Sss => successive_sweep(p, q),
        Algorithm::Bsc => bucketsort_compare(p, q)?,
        _ => {
            let backend = algo.backend().expect("convolution algorithm");
            let out = bounded_pareto_sum(p, q, &backend)?;
            return Ok(SumOutput {
                points: out.points,
                pruned_fraction: out.pruned_fraction,
            });
        }
    };
    Ok(SumOutput {
        points,
        pruned_fraction: None,
    })
}
