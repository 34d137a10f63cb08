//! Model primitives: demand, return generation, the inertia-responsiveness
//! allocation rule, profit functions, and viability checks.
//!
//! Two manufacturers each supply one dedicated retailer. Demand at retailer
//! `i` is linear with a cross-price term,
//!
//! ```text
//! D_i(p_i, p_j) = max(0, d_bar_i - alpha_i * p_i + eps * alpha_j * p_j)
//! ```
//!
//! a fraction `theta` of total sales comes back as returns, and returns are
//! split between manufacturers by
//!
//! ```text
//! s_i(b_1, b_2) = (beta_i * b_i + gamma_r) / (beta_1 b_1 + beta_2 b_2 + 2 gamma_r)
//! ```
//!
//! where `b_i` is the take-back bonus manufacturer `i` pays consumers per
//! returned unit. Everything in this module is a pure function of its inputs.

use crate::error::{Error, Result};

/// One of the two manufacturer/retailer pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Firm {
    One,
    Two,
}

impl Firm {
    pub const BOTH: [Firm; 2] = [Firm::One, Firm::Two];

    pub fn index(self) -> usize {
        match self {
            Firm::One => 0,
            Firm::Two => 1,
        }
    }

    pub fn rival(self) -> Firm {
        match self {
            Firm::One => Firm::Two,
            Firm::Two => Firm::One,
        }
    }

    /// 1-based label used in CSV headers and reports.
    pub fn label(self) -> usize {
        self.index() + 1
    }
}

impl TryFrom<usize> for Firm {
    type Error = Error;

    fn try_from(i: usize) -> Result<Firm> {
        match i {
            1 => Ok(Firm::One),
            2 => Ok(Firm::Two),
            _ => Err(Error::parameter(format!(
                "firm index must be 1 or 2, got {i}"
            ))),
        }
    }
}

/// Demand-side primitives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarketParams {
    /// Market potential per retailer (`d_bar_i > 0`).
    pub potential: [f64; 2],
    /// Own-price sensitivity per retailer (`alpha_i > 0`).
    pub sensitivity: [f64; 2],
    /// Cross-price substitutability, `0 <= eps < 1`.
    pub substitutability: f64,
}

impl MarketParams {
    pub fn symmetric(potential: f64, sensitivity: f64, substitutability: f64) -> Self {
        MarketParams {
            potential: [potential; 2],
            sensitivity: [sensitivity; 2],
            substitutability,
        }
    }

    // `!(x > 0.0)` rather than `x <= 0.0`: the negated form also rejects NaN.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        for f in Firm::BOTH {
            let i = f.index();
            if !(self.potential[i] > 0.0) {
                return Err(Error::domain(format!(
                    "d_bar_{}: must be > 0 (got {})",
                    f.label(),
                    self.potential[i]
                )));
            }
            if !(self.sensitivity[i] > 0.0) {
                return Err(Error::domain(format!(
                    "alpha_{}: must be > 0 (got {})",
                    f.label(),
                    self.sensitivity[i]
                )));
            }
        }
        let eps = self.substitutability;
        if !(0.0..1.0).contains(&eps) {
            return Err(Error::domain(format!(
                "epsilon: must satisfy 0 <= epsilon < 1 (got {eps})"
            )));
        }
        Ok(())
    }
}

/// Cost, value, and return-behavior parameters for both chains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    /// Unit production cost of new products, `c_i >= 0`.
    pub production_cost: [f64; 2],
    /// Remanufacturing value per returned unit, `v_i`.
    pub salvage_value: [f64; 2],
    /// Per-unit processing cost of returns (bonus excluded), `k_i >= 0`.
    pub processing_cost: [f64; 2],
    /// Fraction of sales returned by consumers, `0 < theta < 1`.
    pub return_fraction: f64,
    /// Consumer responsiveness to each manufacturer's bonus, `beta_i >= 0`.
    pub responsiveness: [f64; 2],
    /// Baseline inertial returns, `gamma_r > 0`.
    pub inertia: f64,
    /// Fixed operating cost per manufacturer.
    pub manufacturer_fixed_cost: [f64; 2],
    /// Fixed operating cost per retailer.
    pub retailer_fixed_cost: [f64; 2],
}

impl ChainParams {
    #[allow(clippy::too_many_arguments)]
    pub fn symmetric(
        production_cost: f64,
        salvage_value: f64,
        processing_cost: f64,
        return_fraction: f64,
        responsiveness: f64,
        inertia: f64,
        manufacturer_fixed_cost: f64,
        retailer_fixed_cost: f64,
    ) -> Self {
        ChainParams {
            production_cost: [production_cost; 2],
            salvage_value: [salvage_value; 2],
            processing_cost: [processing_cost; 2],
            return_fraction,
            responsiveness: [responsiveness; 2],
            inertia,
            manufacturer_fixed_cost: [manufacturer_fixed_cost; 2],
            retailer_fixed_cost: [retailer_fixed_cost; 2],
        }
    }

    // NaN-rejecting comparisons, as in MarketParams::validate.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<()> {
        let theta = self.return_fraction;
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::domain(format!(
                "theta: must satisfy 0 < theta < 1 (got {theta})"
            )));
        }
        if !(self.inertia > 0.0) {
            return Err(Error::domain(format!(
                "gamma_r: must be > 0 (got {})",
                self.inertia
            )));
        }
        for f in Firm::BOTH {
            let i = f.index();
            let n = f.label();
            if !(self.responsiveness[i] >= 0.0) {
                return Err(Error::domain(format!(
                    "beta_{n}: must be >= 0 (got {})",
                    self.responsiveness[i]
                )));
            }
            if !(self.production_cost[i] >= 0.0) {
                return Err(Error::domain(format!(
                    "c_{n}: must be >= 0 (got {})",
                    self.production_cost[i]
                )));
            }
            if !(self.processing_cost[i] >= 0.0) {
                return Err(Error::domain(format!(
                    "k_{n}: must be >= 0 (got {})",
                    self.processing_cost[i]
                )));
            }
            if !(self.manufacturer_fixed_cost[i] >= 0.0) {
                return Err(Error::domain(format!(
                    "o_m_{n}: must be >= 0 (got {})",
                    self.manufacturer_fixed_cost[i]
                )));
            }
            if !(self.retailer_fixed_cost[i] >= 0.0) {
                return Err(Error::domain(format!(
                    "o_r_{n}: must be >= 0 (got {})",
                    self.retailer_fixed_cost[i]
                )));
            }
            if !self.salvage_value[i].is_finite() {
                return Err(Error::domain(format!(
                    "v_{n}: must be finite (got {})",
                    self.salvage_value[i]
                )));
            }
        }
        Ok(())
    }
}

/// Stage-1 strategy profile: wholesale prices and take-back bonuses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeaderDecision {
    pub wholesale: [f64; 2],
    pub bonus: [f64; 2],
}

impl LeaderDecision {
    pub fn new(wholesale: [f64; 2], bonus: [f64; 2]) -> Result<Self> {
        for f in Firm::BOTH {
            if bonus[f.index()] < 0.0 {
                return Err(Error::domain(format!(
                    "b_{}: bonus must be >= 0 (got {})",
                    f.label(),
                    bonus[f.index()]
                )));
            }
        }
        Ok(LeaderDecision { wholesale, bonus })
    }
}

/// Stage-2 retail prices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RetailPrices {
    pub price: [f64; 2],
}

impl RetailPrices {
    pub fn new(p1: f64, p2: f64) -> Self {
        RetailPrices { price: [p1, p2] }
    }
}

/// Which branch of the bonus optimality conditions a firm ended up on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BonusRegime {
    /// Strictly positive bonus solving the interior first-order condition.
    Interior,
    /// Zero bonus because the marginal value of the first bonus unit is
    /// non-positive (inertia dominates responsiveness).
    BoundaryZero,
    /// Zero bonus because collecting destroys value (`v_i - k_i <= 0`);
    /// the firm does not operate its reverse channel at all.
    ReverseInactive,
}

impl BonusRegime {
    pub fn token(self) -> &'static str {
        match self {
            BonusRegime::Interior => "INTERIOR",
            BonusRegime::BoundaryZero => "BOUNDARY_ZERO",
            BonusRegime::ReverseInactive => "REVERSE_INACTIVE",
        }
    }
}

/// Participation flags: profit >= 0 per firm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatingFlags {
    pub manufacturer: [bool; 2],
    pub retailer: [bool; 2],
}

/// Non-fatal conditions noticed while assembling an equilibrium.
#[derive(Debug, Clone, PartialEq)]
pub enum ValidationWarning {
    /// Wholesale price below production cost (loss-leading forward margin).
    NegativeMargin { firm: usize, margin: f64 },
    /// Equilibrium demand within 1e-9 of the zero clamp; interior-solution
    /// formulas are unreliable there.
    DemandNearClamp { firm: usize, demand: f64 },
    /// Negative wholesale input; the algebra is defined but outside the
    /// intended operating range.
    NegativeWholesale { firm: usize, wholesale: f64 },
}

impl std::fmt::Display for ValidationWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValidationWarning::NegativeMargin { firm, margin } => {
                write!(
                    f,
                    "manufacturer {firm}: wholesale margin {margin:.6} is negative"
                )
            }
            ValidationWarning::DemandNearClamp { firm, demand } => {
                write!(
                    f,
                    "retailer {firm}: demand {demand:.3e} is at or near the zero clamp"
                )
            }
            ValidationWarning::NegativeWholesale { firm, wholesale } => {
                write!(
                    f,
                    "manufacturer {firm}: wholesale price {wholesale:.6} is negative"
                )
            }
        }
    }
}

/// Full equilibrium record produced by the solvers.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumOutcome {
    pub decision: LeaderDecision,
    pub prices: RetailPrices,
    pub demand: [f64; 2],
    /// Allocation shares from the inertia-responsiveness rule; always sum
    /// to one.
    pub share: [f64; 2],
    /// Total collected returns. Zero when both reverse channels are
    /// inactive; equals `q_r[0] + q_r[1]` by construction.
    pub q_tot: f64,
    /// Returns collected per manufacturer (zero for an inactive channel).
    pub q_r: [f64; 2],
    pub profit_retailer: [f64; 2],
    pub profit_manufacturer: [f64; 2],
    pub bonus_regime: [BonusRegime; 2],
    pub operating: OperatingFlags,
    pub warnings: Vec<ValidationWarning>,
}

const CLAMP_WARN_TOL: f64 = 1e-9;

/// Demand faced by retailer `firm` at retail prices `p`, clamped at zero.
pub fn demand(firm: Firm, p: RetailPrices, m: &MarketParams) -> f64 {
    let i = firm.index();
    let j = firm.rival().index();
    let raw = m.potential[i] - m.sensitivity[i] * p.price[i]
        + m.substitutability * m.sensitivity[j] * p.price[j];
    raw.max(0.0)
}

/// Share of total returns collected by `firm` under bonuses `(b1, b2)`.
///
/// Strictly inside (0, 1) because `gamma_r > 0`; the two shares sum to one.
pub fn allocation_share(firm: Firm, b1: f64, b2: f64, c: &ChainParams) -> Result<f64> {
    check_bonuses(b1, b2)?;
    let num = c.responsiveness[firm.index()] * [b1, b2][firm.index()] + c.inertia;
    let den = c.responsiveness[0] * b1 + c.responsiveness[1] * b2 + 2.0 * c.inertia;
    Ok(num / den)
}

/// Derivative of `allocation_share` with respect to the firm's own bonus:
///
/// ```text
/// d s_i / d b_i = beta_i (beta_j b_j + gamma_r) / B^2,
/// B = beta_1 b_1 + beta_2 b_2 + 2 gamma_r
/// ```
pub fn allocation_share_gradient(firm: Firm, b1: f64, b2: f64, c: &ChainParams) -> Result<f64> {
    check_bonuses(b1, b2)?;
    let i = firm.index();
    let j = firm.rival().index();
    let big_b = c.responsiveness[0] * b1 + c.responsiveness[1] * b2 + 2.0 * c.inertia;
    Ok(c.responsiveness[i] * (c.responsiveness[j] * [b1, b2][j] + c.inertia) / (big_b * big_b))
}

fn check_bonuses(b1: f64, b2: f64) -> Result<()> {
    if b1 < 0.0 || b2 < 0.0 {
        return Err(Error::domain(format!(
            "bonuses must be >= 0 (got b1={b1}, b2={b2})"
        )));
    }
    Ok(())
}

/// Total returned quantity `theta * (d1 + d2)`.
pub fn total_returns(d1: f64, d2: f64, theta: f64) -> f64 {
    theta * (d1 + d2)
}

/// Retailer profit `(p_i - w_i) * D_i - o_r_i`. May be negative.
pub fn retailer_profit(
    firm: Firm,
    p: RetailPrices,
    wholesale: f64,
    m: &MarketParams,
    c: &ChainParams,
) -> f64 {
    let i = firm.index();
    (p.price[i] - wholesale) * demand(firm, p, m) - c.retailer_fixed_cost[i]
}

/// Manufacturer profit per the two-channel decomposition
///
/// ```text
/// (w_i - c_i) d_i + (v_i - b_i - k_i) * theta * (d1 + d2) * s_i - o_m_i
/// ```
///
/// Demands must already be stage-2 consistent; this function does not
/// re-solve the retail game.
pub fn manufacturer_profit(
    firm: Firm,
    dec: &LeaderDecision,
    d1: f64,
    d2: f64,
    c: &ChainParams,
) -> Result<f64> {
    let i = firm.index();
    let share = allocation_share(firm, dec.bonus[0], dec.bonus[1], c)?;
    let reverse_margin = c.salvage_value[i] - dec.bonus[i] - c.processing_cost[i];
    Ok((dec.wholesale[i] - c.production_cost[i]) * [d1, d2][i]
        + reverse_margin * total_returns(d1, d2, c.return_fraction) * share
        - c.manufacturer_fixed_cost[i])
}

/// Reverse-channel viability: collecting can create value iff `v_i - k_i > 0`.
/// When false, every solver forces `b_i = 0` and the firm collects nothing.
pub fn reverse_viability(firm: Firm, c: &ChainParams) -> bool {
    let i = firm.index();
    c.salvage_value[i] - c.processing_cost[i] > 0.0
}

/// Assemble the full equilibrium record for a stage-1 decision, recomputing
/// the retail stage and flagging anything suspicious.
///
/// `reverse_active[i]` marks whether manufacturer `i` operates its reverse
/// channel; inactive firms collect nothing and earn forward profit only.
pub(crate) fn assemble_outcome(
    m: &MarketParams,
    c: &ChainParams,
    dec: LeaderDecision,
    prices: RetailPrices,
    bonus_regime: [BonusRegime; 2],
) -> EquilibriumOutcome {
    let d = [demand(Firm::One, prices, m), demand(Firm::Two, prices, m)];
    let share = [
        allocation_share(Firm::One, dec.bonus[0], dec.bonus[1], c).expect("bonuses checked"),
        allocation_share(Firm::Two, dec.bonus[0], dec.bonus[1], c).expect("bonuses checked"),
    ];
    let pool = total_returns(d[0], d[1], c.return_fraction);

    let mut q_r = [0.0; 2];
    let mut profit_m = [0.0; 2];
    let mut warnings = Vec::new();
    for f in Firm::BOTH {
        let i = f.index();
        let active = bonus_regime[i] != BonusRegime::ReverseInactive;
        let forward = (dec.wholesale[i] - c.production_cost[i]) * d[i];
        let reverse = if active {
            q_r[i] = pool * share[i];
            (c.salvage_value[i] - dec.bonus[i] - c.processing_cost[i]) * q_r[i]
        } else {
            0.0
        };
        profit_m[i] = forward + reverse - c.manufacturer_fixed_cost[i];

        let margin = dec.wholesale[i] - c.production_cost[i];
        if margin < 0.0 {
            warnings.push(ValidationWarning::NegativeMargin {
                firm: f.label(),
                margin,
            });
        }
        if dec.wholesale[i] < 0.0 {
            warnings.push(ValidationWarning::NegativeWholesale {
                firm: f.label(),
                wholesale: dec.wholesale[i],
            });
        }
        if d[i] <= CLAMP_WARN_TOL {
            warnings.push(ValidationWarning::DemandNearClamp {
                firm: f.label(),
                demand: d[i],
            });
        }
    }
    let q_tot = q_r[0] + q_r[1];

    let profit_r = [
        retailer_profit(Firm::One, prices, dec.wholesale[0], m, c),
        retailer_profit(Firm::Two, prices, dec.wholesale[1], m, c),
    ];

    EquilibriumOutcome {
        decision: dec,
        prices,
        demand: d,
        share,
        q_tot,
        q_r,
        profit_retailer: profit_r,
        profit_manufacturer: profit_m,
        bonus_regime,
        operating: OperatingFlags {
            manufacturer: [profit_m[0] >= 0.0, profit_m[1] >= 0.0],
            retailer: [profit_r[0] >= 0.0, profit_r[1] >= 0.0],
        },
        warnings,
    }
}

/// The shared baseline parameterization used across examples and tests:
/// `d_bar = 200, alpha = 4, eps = 0.4, c = 20, v = 60, k = 10, theta = 0.3,
/// beta = 1.2, gamma_r = 10`, zero fixed costs.
pub fn baseline() -> (MarketParams, ChainParams) {
    (
        MarketParams::symmetric(200.0, 4.0, 0.4),
        ChainParams::symmetric(20.0, 60.0, 10.0, 0.3, 1.2, 10.0, 0.0, 0.0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn baseline_market() -> MarketParams {
        baseline().0
    }

    fn baseline_chain() -> ChainParams {
        baseline().1
    }

    #[test]
    fn demand_at_zero_prices_is_potential() {
        let m = baseline_market();
        assert_eq!(demand(Firm::One, RetailPrices::new(0.0, 0.0), &m), 200.0);
    }

    #[test]
    fn demand_at_symmetric_equilibrium_prices() {
        let m = baseline_market();
        let p = 58.854166666666664; // (d_bar/alpha + 44.1666...) / 1.6
        let d = demand(Firm::One, RetailPrices::new(p, p), &m);
        assert!((d - 58.75).abs() < 1e-9, "d = {d}");
    }

    #[test]
    fn demand_clamps_at_zero() {
        let m = baseline_market();
        assert_eq!(demand(Firm::One, RetailPrices::new(1000.0, 0.0), &m), 0.0);
    }

    #[test]
    fn firm_index_round_trip_and_rejection() {
        assert_eq!(Firm::try_from(1).unwrap(), Firm::One);
        assert_eq!(Firm::try_from(2).unwrap(), Firm::Two);
        assert!(matches!(Firm::try_from(0), Err(Error::Parameter(_))));
        assert!(matches!(Firm::try_from(3), Err(Error::Parameter(_))));
    }

    #[test]
    fn allocation_share_pure_inertia_splits_evenly() {
        let c = baseline_chain();
        assert_eq!(allocation_share(Firm::One, 0.0, 0.0, &c).unwrap(), 0.5);
        assert_eq!(allocation_share(Firm::Two, 0.0, 0.0, &c).unwrap(), 0.5);
    }

    #[test]
    fn allocation_share_symmetric_bonuses_split_evenly() {
        let c = baseline_chain();
        assert_eq!(allocation_share(Firm::One, 8.0, 8.0, &c).unwrap(), 0.5);
    }

    #[test]
    fn allocation_share_hand_value() {
        let c = baseline_chain();
        // (1.2*10 + 10) / (1.2*10 + 0 + 20) = 22/32
        let s = allocation_share(Firm::One, 10.0, 0.0, &c).unwrap();
        assert!((s - 0.6875).abs() < 1e-15);
    }

    #[test]
    fn allocation_share_rejects_negative_bonus() {
        let c = baseline_chain();
        assert!(matches!(
            allocation_share(Firm::One, -1.0, 0.0, &c),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            allocation_share_gradient(Firm::One, 0.0, -0.5, &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gradient_symmetric_closed_form() {
        let c = baseline_chain();
        let b = 100.0 / 9.0;
        let g = allocation_share_gradient(Firm::One, b, b, &c).unwrap();
        let expected = 1.2 / (4.0 * (1.2 * b + 10.0));
        assert!((g - expected).abs() < 1e-15, "g = {g}, expected {expected}");
        assert!((g - 0.012857142857).abs() < 1e-9);
    }

    #[test]
    fn gradient_zero_when_unresponsive() {
        let mut c = baseline_chain();
        c.responsiveness[0] = 0.0;
        assert_eq!(
            allocation_share_gradient(Firm::One, 5.0, 3.0, &c).unwrap(),
            0.0
        );
    }

    #[test]
    fn gradient_at_zero_bonuses() {
        let c = baseline_chain();
        // beta * gamma / (2 gamma)^2 = 1.2 * 10 / 400
        let g = allocation_share_gradient(Firm::One, 0.0, 0.0, &c).unwrap();
        assert!((g - 0.03).abs() < 1e-15);
    }

    #[test]
    fn gradient_matches_central_difference() {
        let c = baseline_chain();
        let h = 1e-6;
        for &(b1, b2) in &[(0.0, 0.0), (3.0, 7.0), (11.0, 11.0), (20.0, 0.5)] {
            let g = allocation_share_gradient(Firm::One, b1, b2, &c).unwrap();
            let fd = (allocation_share(Firm::One, b1 + h, b2, &c).unwrap()
                - allocation_share(Firm::One, (b1 - h).max(0.0), b2, &c).unwrap())
                / (h + (b1 - (b1 - h).max(0.0)));
            assert!((g - fd).abs() / g.abs().max(1e-12) < 1e-6, "at ({b1},{b2})");
        }
    }

    #[test]
    fn total_returns_values() {
        assert_eq!(total_returns(0.0, 0.0, 0.3), 0.0);
        assert!((total_returns(56.25, 56.25, 0.3) - 33.75).abs() < 1e-12);
        assert!((total_returns(100.0, 0.0, 0.3) - 30.0).abs() < 1e-12);
    }

    #[test]
    fn retailer_profit_zero_margin_is_fixed_cost() {
        let m = baseline_market();
        let mut c = baseline_chain();
        c.retailer_fixed_cost = [7.0, 7.0];
        let p = RetailPrices::new(40.0, 45.0);
        assert_eq!(retailer_profit(Firm::One, p, 40.0, &m, &c), -7.0);
    }

    #[test]
    fn retailer_profit_at_inertia_equilibrium() {
        let m = baseline_market();
        let c = baseline_chain();
        let p = RetailPrices::new(59.895833333333336, 59.895833333333336);
        let pi = retailer_profit(Firm::One, p, 45.833333333333336, &m, &c);
        assert!((pi - 791.015625).abs() < 1e-6, "pi = {pi}");
    }

    #[test]
    fn manufacturer_profit_zero_margins() {
        let c = baseline_chain();
        let dec = LeaderDecision::new([20.0, 20.0], [50.0, 50.0]).unwrap();
        let pi = manufacturer_profit(Firm::One, &dec, 60.0, 60.0, &c).unwrap();
        assert_eq!(pi, 0.0);
    }

    #[test]
    fn manufacturer_profit_inertia_equilibrium() {
        let c = baseline_chain();
        let b = 100.0 / 9.0;
        let dec = LeaderDecision::new([45.833333333333336; 2], [b; 2]).unwrap();
        let pi = manufacturer_profit(Firm::One, &dec, 56.25, 56.25, &c).unwrap();
        assert!((pi - 2109.375).abs() < 1e-9, "pi = {pi}");
    }

    #[test]
    fn manufacturer_profit_proportional_equilibrium() {
        // (44.1666..-20)*58.75 + 50*0.3*117.5*0.5 = 1419.791666.. + 881.25
        let c = baseline_chain();
        let dec = LeaderDecision::new([44.166666666666664; 2], [0.0; 2]).unwrap();
        let pi = manufacturer_profit(Firm::One, &dec, 58.75, 58.75, &c).unwrap();
        assert!((pi - 2301.0416666666665).abs() < 1e-9, "pi = {pi}");
    }

    #[test]
    fn reverse_viability_boundary() {
        let mut c = baseline_chain();
        assert!(reverse_viability(Firm::One, &c));
        c.salvage_value[0] = 10.0; // v - k = 0 is not viable
        assert!(!reverse_viability(Firm::One, &c));
        c.salvage_value[0] = 5.0;
        assert!(!reverse_viability(Firm::One, &c));
    }

    #[test]
    fn shares_sum_to_one() {
        let c = baseline_chain();
        for &(b1, b2) in &[(0.0, 0.0), (1.5, 20.0), (33.3, 0.01)] {
            let s1 = allocation_share(Firm::One, b1, b2, &c).unwrap();
            let s2 = allocation_share(Firm::Two, b1, b2, &c).unwrap();
            assert!((s1 + s2 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn equal_bonus_share_is_exactly_half() {
        let c = baseline_chain();
        for b in [0.0, 0.1, 1.0, 11.111111, 49.9] {
            assert_eq!(allocation_share(Firm::One, b, b, &c).unwrap(), 0.5);
        }
    }

    #[test]
    fn proportional_profit_identity_with_zero_bonus() {
        // With b = 0 the Eq-style profit equals the fixed-half-share form
        // (w - c) d_i + theta (v - k) (d1 + d2) / 2.
        let mut rng = crate::oracle::seeded_rng(42);
        use rand::Rng;
        for _ in 0..100 {
            let c = ChainParams::symmetric(
                rng.gen_range(1.0..40.0),
                rng.gen_range(0.0..80.0),
                rng.gen_range(0.0..20.0),
                rng.gen_range(0.05..0.95),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.1..30.0),
                0.0,
                0.0,
            );
            let w = rng.gen_range(10.0..60.0);
            let d1 = rng.gen_range(1.0..200.0);
            let d2 = rng.gen_range(1.0..200.0);
            let dec = LeaderDecision::new([w, w], [0.0, 0.0]).unwrap();
            let lhs = manufacturer_profit(Firm::One, &dec, d1, d2, &c).unwrap();
            let rhs = (w - c.production_cost[0]) * d1
                + c.return_fraction * (c.salvage_value[0] - c.processing_cost[0]) * (d1 + d2) / 2.0;
            assert!(
                (lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0),
                "{lhs} vs {rhs}"
            );
        }
    }
}
