//! JSON scenario configs for the command-line front end.
//!
//! The format is versioned through a top-level `schema` key and is strict:
//! unknown keys are errors, not warnings. A scenario is either the
//! `symmetric` shorthand (one value per parameter, expanded to equal
//! pairs) or explicit `market` + `chain` blocks with per-firm keys.
//!
//! ```json
//! {
//!   "schema": "clsc-config/1",
//!   "symmetric": {
//!     "d_bar": 200.0, "alpha": 4.0, "epsilon": 0.4,
//!     "c": 20.0, "v": 60.0, "k": 10.0,
//!     "theta": 0.3, "beta": 1.2, "gamma_r": 10.0
//!   },
//!   "mode": "inertia",
//!   "solver": { "tol": 1e-10, "max_iter": 10000 }
//! }
//! ```
//!
//! Fixed operating costs (`o_m*`, `o_r*`) and the `solver` block are
//! optional and default to zero cost / `tol = 1e-10`, `max_iter = 10000`.

use std::path::Path;

use serde::Deserialize;

use crate::asymmetric::{solve_asymmetric, solve_asymmetric_proportional};
use crate::error::{Error, Result};
use crate::model::{ChainParams, EquilibriumOutcome, MarketParams};
use crate::symmetric::{solve_symmetric, AllocationMode, SymmetricScenario};

pub const SCHEMA: &str = "clsc-config/1";
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;

/// A parsed, validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    pub mode: AllocationMode,
    pub tol: f64,
    pub max_iter: usize,
}

/// Symmetric configs keep the scalar scenario so closed-form paths stay
/// exact; asymmetric configs carry the full per-firm parameter pair.
#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioKind {
    Symmetric(SymmetricScenario),
    Asymmetric(MarketParams, ChainParams),
}

impl ScenarioConfig {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConfig = serde_json::from_str(text)?;
        raw.build()
    }

    /// The shipped default: the symmetric baseline scenario in inertia
    /// mode with default solver settings.
    pub fn baseline() -> Self {
        ScenarioConfig {
            kind: ScenarioKind::Symmetric(SymmetricScenario::baseline()),
            mode: AllocationMode::InertiaResponsiveness,
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self.kind, ScenarioKind::Symmetric(_))
    }

    pub fn market(&self) -> MarketParams {
        match &self.kind {
            ScenarioKind::Symmetric(s) => s.market(),
            ScenarioKind::Asymmetric(m, _) => *m,
        }
    }

    pub fn chain(&self) -> ChainParams {
        match &self.kind {
            ScenarioKind::Symmetric(s) => s.chain(),
            ScenarioKind::Asymmetric(_, c) => *c,
        }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        self.market().validate().map_err(as_config_error)?;
        self.chain().validate().map_err(as_config_error)?;
        if !(self.tol > 0.0) {
            return Err(Error::config(
                "solver.tol",
                format!("must be > 0 (got {})", self.tol),
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::config("solver.max_iter", "must be >= 1"));
        }
        Ok(())
    }

    /// Solve the scenario under its configured allocation mode.
    pub fn solve(&self) -> Result<EquilibriumOutcome> {
        self.solve_with_mode(self.mode)
    }

    /// Solve the scenario under an explicit allocation mode.
    pub fn solve_with_mode(&self, mode: AllocationMode) -> Result<EquilibriumOutcome> {
        match (&self.kind, mode) {
            (ScenarioKind::Symmetric(s), _) => solve_symmetric(s, mode),
            (ScenarioKind::Asymmetric(m, c), AllocationMode::InertiaResponsiveness) => {
                solve_asymmetric(m, c, self.tol, self.max_iter)
            }
            (ScenarioKind::Asymmetric(m, c), AllocationMode::Proportional) => {
                solve_asymmetric_proportional(m, c)
            }
        }
    }
}

/// Domain errors from the model validators already lead with the field
/// name; re-tag them as config errors so the CLI can report exit code 2.
fn as_config_error(e: Error) -> Error {
    match e {
        Error::Domain(msg) => match msg.split_once(": ") {
            Some((field, rest)) => Error::config(field, rest),
            None => Error::config("scenario", msg),
        },
        other => other,
    }
}

fn parse_mode(token: &str) -> Result<AllocationMode> {
    match token {
        "proportional" => Ok(AllocationMode::Proportional),
        "inertia" => Ok(AllocationMode::InertiaResponsiveness),
        other => Err(Error::config(
            "mode",
            format!("must be `proportional` or `inertia` (got `{other}`)"),
        )),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    schema: String,
    #[serde(default)]
    symmetric: Option<RawSymmetric>,
    #[serde(default)]
    market: Option<RawMarket>,
    #[serde(default)]
    chain: Option<RawChain>,
    mode: String,
    #[serde(default)]
    solver: Option<RawSolver>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSymmetric {
    d_bar: f64,
    alpha: f64,
    epsilon: f64,
    c: f64,
    v: f64,
    k: f64,
    theta: f64,
    beta: f64,
    gamma_r: f64,
    #[serde(default)]
    o_m: f64,
    #[serde(default)]
    o_r: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarket {
    d_bar_1: f64,
    d_bar_2: f64,
    alpha_1: f64,
    alpha_2: f64,
    epsilon: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChain {
    c_1: f64,
    c_2: f64,
    v_1: f64,
    v_2: f64,
    k_1: f64,
    k_2: f64,
    theta: f64,
    beta_1: f64,
    beta_2: f64,
    gamma_r: f64,
    #[serde(default)]
    o_m_1: f64,
    #[serde(default)]
    o_m_2: f64,
    #[serde(default)]
    o_r_1: f64,
    #[serde(default)]
    o_r_2: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolver {
    #[serde(default = "default_tol")]
    tol: f64,
    #[serde(default = "default_max_iter")]
    max_iter: usize,
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

fn default_max_iter() -> usize {
    DEFAULT_MAX_ITER
}

impl RawConfig {
    fn build(self) -> Result<ScenarioConfig> {
        if self.schema != SCHEMA {
            return Err(Error::config(
                "schema",
                format!("expected `{SCHEMA}` (got `{}`)", self.schema),
            ));
        }
        let kind = match (self.symmetric, self.market, self.chain) {
            (Some(s), None, None) => ScenarioKind::Symmetric(SymmetricScenario {
                potential: s.d_bar,
                sensitivity: s.alpha,
                substitutability: s.epsilon,
                production_cost: s.c,
                salvage_value: s.v,
                processing_cost: s.k,
                return_fraction: s.theta,
                responsiveness: s.beta,
                inertia: s.gamma_r,
                manufacturer_fixed_cost: s.o_m,
                retailer_fixed_cost: s.o_r,
            }),
            (None, Some(m), Some(c)) => ScenarioKind::Asymmetric(
                MarketParams {
                    potential: [m.d_bar_1, m.d_bar_2],
                    sensitivity: [m.alpha_1, m.alpha_2],
                    substitutability: m.epsilon,
                },
                ChainParams {
                    production_cost: [c.c_1, c.c_2],
                    salvage_value: [c.v_1, c.v_2],
                    processing_cost: [c.k_1, c.k_2],
                    return_fraction: c.theta,
                    responsiveness: [c.beta_1, c.beta_2],
                    inertia: c.gamma_r,
                    manufacturer_fixed_cost: [c.o_m_1, c.o_m_2],
                    retailer_fixed_cost: [c.o_r_1, c.o_r_2],
                },
            ),
            (Some(_), _, _) => {
                return Err(Error::config(
                    "symmetric",
                    "the `symmetric` shorthand excludes `market`/`chain` blocks",
                ))
            }
            (None, m, _) => {
                let missing = if m.is_none() { "market" } else { "chain" };
                return Err(Error::config(
                    missing,
                    "provide either the `symmetric` block or both `market` and `chain`",
                ));
            }
        };
        let solver = self.solver.unwrap_or(RawSolver {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        });
        let config = ScenarioConfig {
            kind,
            mode: parse_mode(&self.mode)?,
            tol: solver.tol,
            max_iter: solver.max_iter,
        };
        config.validate()?;
        Ok(config)
    }
}
