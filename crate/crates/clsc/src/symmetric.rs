//! Closed-form symmetric equilibria of the leader stage, the coupling
//! comparative statics, and the social-planner wholesale benchmark.
//!
//! With identical firms on both sides the retail stage collapses to
//!
//! ```text
//! p(w) = (d_bar/alpha + w) / (2 - eps),
//! D(w) = (d_bar - alpha (1 - eps) w) / (2 - eps),
//! ```
//!
//! and the leader stage admits closed forms. Leader-stage optimality is
//! evaluated along the parallel-move path: each manufacturer weighs a
//! wholesale change under the premise that its rival moves in step, so the
//! relevant demand slope is `D'(w) = -alpha (1 - eps) / (2 - eps)`. See the
//! crate docs for how this relates to the strict rival-fixed probe exposed
//! by the oracle module.
//!
//! The bonus stage is an ordinary simultaneous game; its symmetric fixed
//! point is
//!
//! ```text
//! b* = (v - k)/3 - 2 gamma_r / (3 beta)   when beta (v - k) > 2 gamma_r,
//! b* = 0                                  otherwise,
//! ```
//!
//! and the wholesale price is
//!
//! ```text
//! w* = d_bar / (2 alpha (1 - eps)) + (c - theta (v - b* - k)) / 2.
//! ```

use crate::error::{Error, Result};
use crate::model::{
    BonusRegime, ChainParams, EquilibriumOutcome, LeaderDecision, MarketParams, OperatingFlags,
    RetailPrices, ValidationWarning,
};

/// Symmetric parameter set: both manufacturers and both retailers identical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricScenario {
    pub potential: f64,
    pub sensitivity: f64,
    pub substitutability: f64,
    pub production_cost: f64,
    pub salvage_value: f64,
    pub processing_cost: f64,
    pub return_fraction: f64,
    pub responsiveness: f64,
    pub inertia: f64,
    pub manufacturer_fixed_cost: f64,
    pub retailer_fixed_cost: f64,
}

impl SymmetricScenario {
    pub fn market(&self) -> MarketParams {
        MarketParams::symmetric(self.potential, self.sensitivity, self.substitutability)
    }

    pub fn chain(&self) -> ChainParams {
        ChainParams::symmetric(
            self.production_cost,
            self.salvage_value,
            self.processing_cost,
            self.return_fraction,
            self.responsiveness,
            self.inertia,
            self.manufacturer_fixed_cost,
            self.retailer_fixed_cost,
        )
    }

    pub fn validate(&self) -> Result<()> {
        self.market().validate()?;
        self.chain().validate()
    }

    /// Net remanufacturing margin `v - k`.
    pub fn net_salvage(&self) -> f64 {
        self.salvage_value - self.processing_cost
    }

    /// The shared baseline parameterization (see [`crate::model::baseline`]).
    pub fn baseline() -> Self {
        SymmetricScenario {
            potential: 200.0,
            sensitivity: 4.0,
            substitutability: 0.4,
            production_cost: 20.0,
            salvage_value: 60.0,
            processing_cost: 10.0,
            return_fraction: 0.3,
            responsiveness: 1.2,
            inertia: 10.0,
            manufacturer_fixed_cost: 0.0,
            retailer_fixed_cost: 0.0,
        }
    }
}

/// How returned products are split between the manufacturers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AllocationMode {
    /// Fixed equal shares; bonuses cannot shift allocation, so the only
    /// equilibrium bonus is zero.
    Proportional,
    /// The inertia-responsiveness rule; bonuses shift allocation at the
    /// margin and can be positive in equilibrium.
    InertiaResponsiveness,
}

impl AllocationMode {
    pub fn token(self) -> &'static str {
        match self {
            AllocationMode::Proportional => "proportional",
            AllocationMode::InertiaResponsiveness => "inertia",
        }
    }
}

/// Decentralized vs planner wholesale prices and the induced quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WelfareComparison {
    pub w_decentralized: f64,
    pub w_planner: f64,
    pub demand_decentralized: f64,
    pub demand_planner: f64,
    pub returns_decentralized: f64,
    pub returns_planner: f64,
}

fn check_scenario(s: &SymmetricScenario) -> Result<()> {
    s.validate()
}

fn wholesale_base(s: &SymmetricScenario) -> f64 {
    s.potential / (2.0 * s.sensitivity * (1.0 - s.substitutability))
}

/// Symmetric retail price and per-retailer demand at a common wholesale
/// price `w`.
pub fn symmetric_retail(w: f64, s: &SymmetricScenario) -> (f64, f64) {
    let two_minus_eps = 2.0 - s.substitutability;
    let p = (s.potential / s.sensitivity + w) / two_minus_eps;
    let d = (s.potential - s.sensitivity * (1.0 - s.substitutability) * w) / two_minus_eps;
    (p, d.max(0.0))
}

/// Symmetric equilibrium bonus and its regime.
pub fn symmetric_bonus(s: &SymmetricScenario) -> (f64, BonusRegime) {
    let net = s.net_salvage();
    if net <= 0.0 {
        return (0.0, BonusRegime::ReverseInactive);
    }
    if s.responsiveness * net <= 2.0 * s.inertia {
        return (0.0, BonusRegime::BoundaryZero);
    }
    let b = net / 3.0 - 2.0 * s.inertia / (3.0 * s.responsiveness);
    (b, BonusRegime::Interior)
}

/// Symmetric equilibrium wholesale price under the given allocation mode.
///
/// When the reverse channel is not viable both modes reduce to the
/// forward-only price `d_bar / (2 alpha (1 - eps)) + c/2`.
pub fn symmetric_wholesale(s: &SymmetricScenario, mode: AllocationMode) -> Result<f64> {
    check_scenario(s)?;
    let base = wholesale_base(s);
    if s.net_salvage() <= 0.0 {
        return Ok(base + s.production_cost / 2.0);
    }
    let b = match mode {
        AllocationMode::Proportional => 0.0,
        AllocationMode::InertiaResponsiveness => symmetric_bonus(s).0,
    };
    let internalized = s.return_fraction * (s.salvage_value - b - s.processing_cost);
    Ok(base + (s.production_cost - internalized) / 2.0)
}

/// Full symmetric equilibrium outcome.
pub fn solve_symmetric(s: &SymmetricScenario, mode: AllocationMode) -> Result<EquilibriumOutcome> {
    check_scenario(s)?;
    let (b, regime) = match mode {
        AllocationMode::Proportional => {
            if s.net_salvage() <= 0.0 {
                (0.0, BonusRegime::ReverseInactive)
            } else {
                // Fixed shares make any positive bonus a pure loss.
                (0.0, BonusRegime::BoundaryZero)
            }
        }
        AllocationMode::InertiaResponsiveness => symmetric_bonus(s),
    };
    let w = symmetric_wholesale(s, mode)?;
    let (p, d) = symmetric_retail(w, s);

    let reverse_active = regime != BonusRegime::ReverseInactive;
    let q_tot = if reverse_active {
        s.return_fraction * 2.0 * d
    } else {
        0.0
    };
    let q_each = q_tot / 2.0;

    let profit_r = (p - w) * d - s.retailer_fixed_cost;
    let reverse_margin = s.salvage_value - b - s.processing_cost;
    let profit_m =
        (w - s.production_cost) * d + reverse_margin * q_each - s.manufacturer_fixed_cost;

    let mut warnings = Vec::new();
    if w < s.production_cost {
        for firm in [1, 2] {
            warnings.push(ValidationWarning::NegativeMargin {
                firm,
                margin: w - s.production_cost,
            });
        }
    }
    if d <= 1e-9 {
        for firm in [1, 2] {
            warnings.push(ValidationWarning::DemandNearClamp { firm, demand: d });
        }
    }

    Ok(EquilibriumOutcome {
        decision: LeaderDecision::new([w, w], [b, b])?,
        prices: RetailPrices::new(p, p),
        demand: [d, d],
        share: [0.5, 0.5],
        q_tot,
        q_r: [q_each, q_each],
        profit_retailer: [profit_r, profit_r],
        profit_manufacturer: [profit_m, profit_m],
        bonus_regime: [regime, regime],
        operating: OperatingFlags {
            manufacturer: [profit_m >= 0.0; 2],
            retailer: [profit_r >= 0.0; 2],
        },
        warnings,
    })
}

/// Sensitivity of the equilibrium wholesale price to the remanufacturing
/// value and the return fraction: `(dw*/dv, dw*/dtheta)`.
///
/// Proportional allocation gives `(-theta/2, -(v-k)/2)`; the
/// inertia-responsiveness interior regime gives `(-theta/3, -(v-b*-k)/2)`,
/// attenuated because part of any extra value is competed away through
/// bonuses.
pub fn coupling_slopes(s: &SymmetricScenario, mode: AllocationMode) -> Result<(f64, f64)> {
    check_scenario(s)?;
    let net = s.net_salvage();
    if net <= 0.0 {
        return Err(Error::regime(
            "coupling slopes need a viable reverse channel (v - k > 0); \
             the wholesale price is flat in v and theta when collection is inactive",
        ));
    }
    match mode {
        AllocationMode::Proportional => Ok((-s.return_fraction / 2.0, -net / 2.0)),
        AllocationMode::InertiaResponsiveness => {
            let (b, regime) = symmetric_bonus(s);
            if regime != BonusRegime::Interior {
                return Err(Error::regime(format!(
                    "inertia-mode coupling slopes are defined only in the interior regime \
                     beta (v - k) > 2 gamma_r (got beta={}, v-k={}, gamma_r={})",
                    s.responsiveness, net, s.inertia
                )));
            }
            Ok((
                -s.return_fraction / 3.0,
                -(s.salvage_value - b - s.processing_cost) / 2.0,
            ))
        }
    }
}

/// Wholesale price chosen by a total-surplus-maximizing planner, which
/// internalizes the full per-unit recovery value `theta * v`:
///
/// ```text
/// w_sp = d_bar / (2 alpha (1 - eps)) + (c - theta v) / 2
/// ```
///
/// the unique root of `D(w) + (w - c + theta v) D'(w) = 0` for linear `D`.
pub fn planner_wholesale(s: &SymmetricScenario) -> f64 {
    wholesale_base(s) + (s.production_cost - s.return_fraction * s.salvage_value) / 2.0
}

/// Decentralized-vs-planner comparison at the given allocation mode.
pub fn welfare_gap(s: &SymmetricScenario, mode: AllocationMode) -> Result<WelfareComparison> {
    let w_d = symmetric_wholesale(s, mode)?;
    let w_sp = planner_wholesale(s);
    let (_, d_d) = symmetric_retail(w_d, s);
    let (_, d_sp) = symmetric_retail(w_sp, s);
    Ok(WelfareComparison {
        w_decentralized: w_d,
        w_planner: w_sp,
        demand_decentralized: d_d,
        demand_planner: d_sp,
        returns_decentralized: s.return_fraction * 2.0 * d_d,
        returns_planner: s.return_fraction * 2.0 * d_sp,
    })
}
