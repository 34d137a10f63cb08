//! Leader-stage equilibrium with heterogeneous manufacturers: quadratic
//! bonus best responses, the bonus Nash fixed point, and the linear
//! wholesale stage.
//!
//! The bonus game separates from the wholesale game because demand does not
//! depend on bonuses: total returns scale every reverse payoff without
//! moving any bonus optimum. So the pipeline is
//!
//! 1. solve the bonus game by best-response iteration,
//! 2. solve the wholesale stage as a 2x2 linear system given the bonuses,
//! 3. recover retail prices and assemble the outcome.
//!
//! Manufacturer `i`'s reverse objective given the rival bonus `b_j` is
//! `(v_i - b - k_i) s_i(b, b_j)` up to a positive factor. Its first-order
//! condition reduces to the quadratic
//!
//! ```text
//! beta_i^2 b^2 + 2 beta_i (C + gamma_r) b + [gamma_r C + gamma_r^2 - beta_i C (v_i - k_i)] = 0,
//! C = beta_j b_j + gamma_r,
//! ```
//!
//! which has exactly one nonnegative root when the constant term is
//! negative; strict concavity of the objective makes that root the global
//! maximizer. The constant term's sign is also the participation test: a
//! positive bonus pays iff `beta_i (v_i - k_i) C > gamma_r (beta_j b_j + 2 gamma_r)`.

use crate::error::{Error, Result};
use crate::model::{
    assemble_outcome, BonusRegime, ChainParams, EquilibriumOutcome, Firm, LeaderDecision,
    MarketParams,
};
use crate::retailer::{reduced_demand_jacobian, retailer_nash_prices};

/// One firm's optimal bonus against a fixed rival bonus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BonusBestResponse {
    pub value: f64,
    pub regime: BonusRegime,
    /// `(a2, a1, a0)` of the first-order-condition quadratic that was solved
    /// (reported even on boundary branches, where it certifies the sign
    /// test `a0 >= 0`).
    pub quadratic_coefficients: (f64, f64, f64),
}

/// Result of the bonus best-response iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BonusNashResult {
    pub bonus: [f64; 2],
    /// Completed Gauss-Seidel sweeps (each sweep updates both firms).
    pub iterations: usize,
    pub converged: bool,
    /// Sup-norm of the last update.
    pub final_step: f64,
}

/// Which share-derivative enters the bonus first-order condition.
///
/// `Exact` is the derivative of the allocation rule and is what every
/// solver uses. `DoubledInertia` replaces the cross term `beta_j b_j +
/// gamma_r` by `beta_j b_j + 2 gamma_r`; it exists so the verification
/// command can demonstrate that the deviation certificates catch a wrong
/// first-order condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BonusFocVariant {
    #[default]
    Exact,
    DoubledInertia,
}

fn quadratic_coefficients(
    firm: Firm,
    b_rival: f64,
    c: &ChainParams,
    variant: BonusFocVariant,
) -> (f64, f64, f64) {
    let i = firm.index();
    let j = firm.rival().index();
    let beta_i = c.responsiveness[i];
    let gamma = c.inertia;
    let net = c.salvage_value[i] - c.processing_cost[i];
    match variant {
        BonusFocVariant::Exact => {
            let cross = c.responsiveness[j] * b_rival + gamma;
            (
                beta_i * beta_i,
                2.0 * beta_i * (cross + gamma),
                gamma * cross + gamma * gamma - beta_i * cross * net,
            )
        }
        BonusFocVariant::DoubledInertia => {
            let cross = c.responsiveness[j] * b_rival + 2.0 * gamma;
            (
                beta_i * beta_i,
                beta_i * (2.0 * cross + gamma),
                gamma * cross - beta_i * cross * net,
            )
        }
    }
}

/// Optimal bonus for `firm` against rival bonus `b_rival`, with the exact
/// share derivative.
///
/// Total demand scales the reverse objective without moving its argmax, so
/// no demand-side inputs are needed.
pub fn bonus_best_response(firm: Firm, b_rival: f64, c: &ChainParams) -> Result<BonusBestResponse> {
    bonus_best_response_with(firm, b_rival, c, BonusFocVariant::Exact)
}

/// [`bonus_best_response`] with an explicit first-order-condition variant.
pub fn bonus_best_response_with(
    firm: Firm,
    b_rival: f64,
    c: &ChainParams,
    variant: BonusFocVariant,
) -> Result<BonusBestResponse> {
    if b_rival < 0.0 {
        return Err(Error::domain(format!(
            "rival bonus must be >= 0 (got {b_rival})"
        )));
    }
    let coeffs = quadratic_coefficients(firm, b_rival, c, variant);
    let net = c.salvage_value[firm.index()] - c.processing_cost[firm.index()];
    if net <= 0.0 {
        return Ok(BonusBestResponse {
            value: 0.0,
            regime: BonusRegime::ReverseInactive,
            quadratic_coefficients: coeffs,
        });
    }
    let (a2, a1, a0) = coeffs;
    if a0 >= 0.0 {
        // Marginal reverse profit at b = 0 is non-positive; includes beta_i = 0.
        return Ok(BonusBestResponse {
            value: 0.0,
            regime: BonusRegime::BoundaryZero,
            quadratic_coefficients: coeffs,
        });
    }
    // a0 < 0 forces beta_i > 0, so a2 > 0 and a1 > 0: one positive root.
    // Take the larger-magnitude root via the stable formula, the other by Vieta.
    let q = -0.5 * (a1 + (a1 * a1 - 4.0 * a2 * a0).sqrt());
    let root = a0 / q;
    debug_assert!(root > 0.0);
    Ok(BonusBestResponse {
        value: root,
        regime: BonusRegime::Interior,
        quadratic_coefficients: coeffs,
    })
}

/// Whether a strictly positive bonus is optimal for `firm` against
/// `b_rival`: the sign test
///
/// ```text
/// beta_i (v_i - k_i) (beta_j b_j + gamma_r) > gamma_r (beta_j b_j + 2 gamma_r)
/// ```
///
/// of the reverse-profit derivative at `b_i = 0`. At `b_rival = 0` this
/// reduces to the symmetric threshold `beta (v - k) > 2 gamma_r`. It is not
/// equivalent to the coarser screen `beta_i (v_i - k_i) > beta_j b_j +
/// 2 gamma_r` away from that point; the sign test is what gates the solver.
pub fn bonus_threshold(firm: Firm, b_rival: f64, c: &ChainParams) -> bool {
    let i = firm.index();
    let j = firm.rival().index();
    let net = c.salvage_value[i] - c.processing_cost[i];
    if net <= 0.0 {
        return false;
    }
    let cross = c.responsiveness[j] * b_rival;
    c.responsiveness[i] * net * (cross + c.inertia) > c.inertia * (cross + 2.0 * c.inertia)
}

/// Bonus Nash equilibrium by Gauss-Seidel best response from `(0, 0)`.
///
/// Non-convergence is reported through the `converged` flag, never papered
/// over; on convergence both bonuses are mutual best responses within `tol`.
pub fn bonus_nash(c: &ChainParams, tol: f64, max_iter: usize) -> Result<BonusNashResult> {
    bonus_nash_with(c, tol, max_iter, BonusFocVariant::Exact)
}

/// [`bonus_nash`] with an explicit first-order-condition variant.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn bonus_nash_with(
    c: &ChainParams,
    tol: f64,
    max_iter: usize,
    variant: BonusFocVariant,
) -> Result<BonusNashResult> {
    if !(tol > 0.0) {
        return Err(Error::parameter(format!("tol must be > 0 (got {tol})")));
    }
    if max_iter == 0 {
        return Err(Error::parameter("max_iter must be >= 1"));
    }
    let mut bonus = [0.0_f64; 2];
    let mut step = f64::INFINITY;
    for sweep in 1..=max_iter {
        let prev = bonus;
        bonus[0] = bonus_best_response_with(Firm::One, bonus[1], c, variant)?.value;
        bonus[1] = bonus_best_response_with(Firm::Two, bonus[0], c, variant)?.value;
        step = (bonus[0] - prev[0]).abs().max((bonus[1] - prev[1]).abs());
        if step <= tol {
            // One extra evaluation certifies mutual best response.
            let recheck = bonus_best_response_with(Firm::One, bonus[1], c, variant)?.value;
            return Ok(BonusNashResult {
                bonus,
                iterations: sweep,
                converged: (recheck - bonus[0]).abs() <= tol,
                final_step: step,
            });
        }
    }
    Ok(BonusNashResult {
        bonus,
        iterations: max_iter,
        converged: false,
        final_step: step,
    })
}

/// Wholesale-stage equilibrium given fixed bonuses.
///
/// Each manufacturer's first-order condition is taken along the
/// parallel-move path (rival wholesale moving in step), which is the
/// concept under which the symmetric closed forms are exact:
///
/// ```text
/// D_i(w) + (w_i - c_i) R_i + theta (v_i - b_i - k_i) s_i G = 0
/// ```
///
/// with `R_i` the parallel demand slope for firm `i` and `G` the parallel
/// slope of total demand. A firm with a non-viable reverse channel
/// (`v_i - k_i <= 0`) collects nothing and its reverse term is dropped.
/// Linear in `(w_1, w_2)`; the system matrix is nonsingular for `eps < 1`.
pub fn wholesale_nash(m: &MarketParams, c: &ChainParams, bonus: [f64; 2]) -> Result<[f64; 2]> {
    let jac = reduced_demand_jacobian(m)?;
    let eps = m.substitutability;
    let delta = jac.delta;
    let intercept = [
        (2.0 * m.potential[0] + eps * m.potential[1]) / delta,
        (eps * m.potential[0] + 2.0 * m.potential[1]) / delta,
    ];
    let row_slope = [jac.parallel_slope(Firm::One), jac.parallel_slope(Firm::Two)];
    let total_slope = jac.total_parallel_slope();

    let mut rhs = [0.0_f64; 2];
    for f in Firm::BOTH {
        let i = f.index();
        let share = crate::model::allocation_share(f, bonus[0], bonus[1], c)?;
        let reverse = if crate::model::reverse_viability(f, c) {
            c.return_fraction
                * (c.salvage_value[i] - bonus[i] - c.processing_cost[i])
                * share
                * total_slope
        } else {
            0.0
        };
        rhs[i] = -intercept[i] + c.production_cost[i] * row_slope[i] - reverse;
    }

    let a11 = jac.dd1_dw1 + row_slope[0];
    let a12 = jac.dd1_dw2;
    let a21 = jac.dd2_dw1;
    let a22 = jac.dd2_dw2 + row_slope[1];
    let det = a11 * a22 - a12 * a21;
    if det.abs() < 1e-12 {
        return Err(Error::domain(format!(
            "wholesale stage system is singular (det = {det:e})"
        )));
    }
    Ok([
        (rhs[0] * a22 - a12 * rhs[1]) / det,
        (a11 * rhs[1] - rhs[0] * a21) / det,
    ])
}

/// Full asymmetric equilibrium: bonus fixed point, wholesale stage, retail
/// stage, assembled outcome.
pub fn solve_asymmetric(
    m: &MarketParams,
    c: &ChainParams,
    tol: f64,
    max_iter: usize,
) -> Result<EquilibriumOutcome> {
    solve_asymmetric_with(m, c, tol, max_iter, BonusFocVariant::Exact)
}

/// [`solve_asymmetric`] with an explicit bonus first-order-condition variant.
pub fn solve_asymmetric_with(
    m: &MarketParams,
    c: &ChainParams,
    tol: f64,
    max_iter: usize,
    variant: BonusFocVariant,
) -> Result<EquilibriumOutcome> {
    m.validate()?;
    c.validate()?;
    let fixed_point = bonus_nash_with(c, tol, max_iter, variant)?;
    if !fixed_point.converged {
        return Err(Error::NonConvergence {
            iterations: fixed_point.iterations,
            last_step: fixed_point.final_step,
        });
    }
    let bonus = fixed_point.bonus;
    let regimes = [
        bonus_best_response_with(Firm::One, bonus[1], c, variant)?.regime,
        bonus_best_response_with(Firm::Two, bonus[0], c, variant)?.regime,
    ];
    let wholesale = wholesale_nash(m, c, bonus)?;
    let prices = retailer_nash_prices(wholesale[0], wholesale[1], m)?;
    let dec = LeaderDecision::new(wholesale, bonus)?;
    Ok(assemble_outcome(m, c, dec, prices, regimes))
}

/// Asymmetric equilibrium under proportional (fixed-equal-share)
/// allocation: bonuses cannot shift returns, so both collapse to zero and
/// only the wholesale stage is solved.
pub fn solve_asymmetric_proportional(
    m: &MarketParams,
    c: &ChainParams,
) -> Result<EquilibriumOutcome> {
    m.validate()?;
    c.validate()?;
    let regimes = [
        if crate::model::reverse_viability(Firm::One, c) {
            BonusRegime::BoundaryZero
        } else {
            BonusRegime::ReverseInactive
        },
        if crate::model::reverse_viability(Firm::Two, c) {
            BonusRegime::BoundaryZero
        } else {
            BonusRegime::ReverseInactive
        },
    ];
    let wholesale = wholesale_nash(m, c, [0.0, 0.0])?;
    let prices = retailer_nash_prices(wholesale[0], wholesale[1], m)?;
    let dec = LeaderDecision::new(wholesale, [0.0, 0.0])?;
    Ok(assemble_outcome(m, c, dec, prices, regimes))
}

/// Sensitivity of the interior bonus best response to the firm's own
/// salvage value and processing cost: `(db/dv_i, db/dk_i)` by the implicit
/// function theorem on the quadratic,
///
/// ```text
/// db/dv_i = beta_i C / F_b,   db/dk_i = -beta_i C / F_b,
/// F_b = 2 beta_i^2 b_i + 2 beta_i (C + gamma_r) > 0.
/// ```
///
/// The two components are equal and opposite because the response depends
/// on `v_i - k_i` only. `bonus[i]` must be the interior best response to
/// `bonus[j]`.
pub fn bonus_comparative_statics(
    firm: Firm,
    bonus: [f64; 2],
    c: &ChainParams,
) -> Result<(f64, f64)> {
    let i = firm.index();
    let j = firm.rival().index();
    let net = c.salvage_value[i] - c.processing_cost[i];
    if net <= 0.0 {
        return Err(Error::regime(
            "comparative statics require a viable reverse channel (v_i - k_i > 0)",
        ));
    }
    let (_, _, a0) = quadratic_coefficients(firm, bonus[j], c, BonusFocVariant::Exact);
    if a0 >= 0.0 {
        return Err(Error::regime(
            "comparative statics are defined only in the interior bonus regime",
        ));
    }
    let beta_i = c.responsiveness[i];
    let cross = c.responsiveness[j] * bonus[j] + c.inertia;
    let f_b = 2.0 * beta_i * beta_i * bonus[i] + 2.0 * beta_i * (cross + c.inertia);
    Ok((beta_i * cross / f_b, -beta_i * cross / f_b))
}
