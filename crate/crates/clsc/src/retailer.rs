//! Stage-2 retailer game: closed-form Nash prices and the reduced-form
//! demands the manufacturers face once retail competition is solved out.
//!
//! The simultaneous price first-order conditions form a linear system whose
//! matrix has determinant `alpha_1 alpha_2 (4 - eps^2) > 0` for `eps < 1`,
//! so the equilibrium exists and is unique:
//!
//! ```text
//! p_1* = [2 (d_bar_1 + alpha_1 w_1) + eps (d_bar_2 + alpha_2 w_2)] / (alpha_1 (4 - eps^2))
//! ```
//!
//! and symmetrically for `p_2*`. Substituting back into demand gives demands
//! that are linear in wholesale prices with constant slopes.

use crate::error::{Error, Result};
use crate::model::{Firm, MarketParams, RetailPrices};

/// Constant slopes of the reduced-form demands with respect to wholesale
/// prices, together with the common denominator `delta = 4 - eps^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedDemandJacobian {
    pub dd1_dw1: f64,
    pub dd1_dw2: f64,
    pub dd2_dw1: f64,
    pub dd2_dw2: f64,
    pub delta: f64,
}

impl ReducedDemandJacobian {
    /// Demand slope seen by firm `i` when both wholesale prices move
    /// together (row sum of the jacobian).
    pub fn parallel_slope(&self, firm: Firm) -> f64 {
        match firm {
            Firm::One => self.dd1_dw1 + self.dd1_dw2,
            Firm::Two => self.dd2_dw1 + self.dd2_dw2,
        }
    }

    /// Slope of total demand `D_1 + D_2` when both wholesale prices move
    /// together (sum of all four entries).
    pub fn total_parallel_slope(&self) -> f64 {
        self.dd1_dw1 + self.dd1_dw2 + self.dd2_dw1 + self.dd2_dw2
    }
}

fn check_epsilon(m: &MarketParams) -> Result<f64> {
    let eps = m.substitutability;
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::domain(format!(
            "epsilon: retailer equilibrium requires 0 <= epsilon < 1 (got {eps})"
        )));
    }
    Ok(eps)
}

/// Unique Nash equilibrium of the retail pricing subgame.
pub fn retailer_nash_prices(w1: f64, w2: f64, m: &MarketParams) -> Result<RetailPrices> {
    let eps = check_epsilon(m)?;
    let delta = 4.0 - eps * eps;
    let h1 = m.potential[0] + m.sensitivity[0] * w1;
    let h2 = m.potential[1] + m.sensitivity[1] * w2;
    Ok(RetailPrices::new(
        (2.0 * h1 + eps * h2) / (m.sensitivity[0] * delta),
        (eps * h1 + 2.0 * h2) / (m.sensitivity[1] * delta),
    ))
}

/// Reduced-form demands at the retail equilibrium induced by `(w1, w2)`.
pub fn reduced_demand(w1: f64, w2: f64, m: &MarketParams) -> Result<(f64, f64)> {
    let eps = check_epsilon(m)?;
    let delta = 4.0 - eps * eps;
    let d1 = (2.0 * m.potential[0] + eps * m.potential[1]
        - m.sensitivity[0] * (2.0 - eps * eps) * w1
        + eps * m.sensitivity[1] * w2)
        / delta;
    let d2 = (eps * m.potential[0] + 2.0 * m.potential[1] + eps * m.sensitivity[0] * w1
        - m.sensitivity[1] * (2.0 - eps * eps) * w2)
        / delta;
    Ok((d1, d2))
}

/// Constant derivatives of the reduced-form demands.
pub fn reduced_demand_jacobian(m: &MarketParams) -> Result<ReducedDemandJacobian> {
    let eps = check_epsilon(m)?;
    let delta = 4.0 - eps * eps;
    Ok(ReducedDemandJacobian {
        dd1_dw1: -m.sensitivity[0] * (2.0 - eps * eps) / delta,
        dd1_dw2: eps * m.sensitivity[1] / delta,
        dd2_dw1: eps * m.sensitivity[0] / delta,
        dd2_dw2: -m.sensitivity[1] * (2.0 - eps * eps) / delta,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{baseline, demand};

    #[test]
    fn decoupled_monopoly_response() {
        let m = MarketParams::symmetric(200.0, 4.0, 0.0);
        let p = retailer_nash_prices(20.0, 0.0, &m).unwrap();
        assert!((p.price[0] - 35.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_baseline_prices() {
        let (m, _) = baseline();
        let w = 44.166666666666664;
        let p = retailer_nash_prices(w, w, &m).unwrap();
        assert!((p.price[0] - 58.854166666666664).abs() < 1e-9);
        assert!((p.price[1] - p.price[0]).abs() < 1e-12);

        let w = 45.833333333333336;
        let p = retailer_nash_prices(w, w, &m).unwrap();
        assert!((p.price[0] - 59.895833333333336).abs() < 1e-9);
    }

    #[test]
    fn prices_satisfy_first_order_conditions() {
        let (m, _) = baseline();
        let (w1, w2) = (31.0, 52.5);
        let p = retailer_nash_prices(w1, w2, &m).unwrap();
        // d_bar_i + alpha_i w_i + eps alpha_j p_j - 2 alpha_i p_i = 0
        let eps = m.substitutability;
        let r1 = m.potential[0] + m.sensitivity[0] * w1 + eps * m.sensitivity[1] * p.price[1]
            - 2.0 * m.sensitivity[0] * p.price[0];
        let r2 = m.potential[1] + m.sensitivity[1] * w2 + eps * m.sensitivity[0] * p.price[0]
            - 2.0 * m.sensitivity[1] * p.price[1];
        assert!(
            r1.abs() <= 1e-10 && r2.abs() <= 1e-10,
            "residuals {r1} {r2}"
        );
    }

    #[test]
    fn rejects_epsilon_at_or_above_one() {
        let mut m = baseline().0;
        m.substitutability = 1.0;
        assert!(matches!(
            retailer_nash_prices(10.0, 10.0, &m),
            Err(Error::Domain(_))
        ));
        m.substitutability = 1.2;
        assert!(matches!(
            reduced_demand(10.0, 10.0, &m),
            Err(Error::Domain(_))
        ));
        assert!(matches!(reduced_demand_jacobian(&m), Err(Error::Domain(_))));
    }

    #[test]
    fn reduced_demand_baseline_values() {
        let (m, _) = baseline();
        let (d1, d2) = reduced_demand(44.166666666666664, 44.166666666666664, &m).unwrap();
        assert!((d1 - 58.75).abs() < 1e-9 && (d2 - 58.75).abs() < 1e-9);
        let (d1, _) = reduced_demand(45.833333333333336, 45.833333333333336, &m).unwrap();
        assert!((d1 - 56.25).abs() < 1e-9);
    }

    #[test]
    fn reduced_demand_decoupled_value() {
        let m = MarketParams::symmetric(200.0, 4.0, 0.0);
        let (d1, _) = reduced_demand(20.0, 0.0, &m).unwrap();
        assert!((d1 - 60.0).abs() < 1e-12); // (400 - 8*20)/4 and d - alpha p at p = 35
    }

    #[test]
    fn reduced_demand_matches_demand_at_nash_prices() {
        let (m, _) = baseline();
        for &(w1, w2) in &[(44.0, 44.0), (10.0, 55.0), (0.0, 0.0), (61.3, 12.7)] {
            let p = retailer_nash_prices(w1, w2, &m).unwrap();
            let (d1, d2) = reduced_demand(w1, w2, &m).unwrap();
            assert!((d1 - demand(Firm::One, p, &m)).abs() <= 1e-10);
            assert!((d2 - demand(Firm::Two, p, &m)).abs() <= 1e-10);
        }
    }

    #[test]
    fn jacobian_baseline_values() {
        let (m, _) = baseline();
        let j = reduced_demand_jacobian(&m).unwrap();
        assert!((j.dd1_dw1 - (-4.0 * 1.84 / 3.84)).abs() < 1e-12);
        assert!((j.dd1_dw2 - (0.4 * 4.0 / 3.84)).abs() < 1e-12);
        assert!((j.delta - 3.84).abs() < 1e-15);
        // column-sum identity: effect of w_1 on total demand
        assert!((j.dd1_dw1 + j.dd2_dw1 - (-1.5)).abs() < 1e-12);
        assert!((j.dd1_dw1 + j.dd2_dw1 + m.sensitivity[0] * 0.6 / 1.6).abs() < 1e-12);
    }

    #[test]
    fn jacobian_segmented_markets() {
        let m = MarketParams::symmetric(200.0, 4.0, 0.0);
        let j = reduced_demand_jacobian(&m).unwrap();
        assert_eq!(j.dd1_dw2, 0.0);
        assert_eq!(j.dd2_dw1, 0.0);
    }

    #[test]
    fn jacobian_signs() {
        for eps in [0.0, 0.2, 0.5, 0.9, 0.95] {
            let m = MarketParams {
                potential: [180.0, 260.0],
                sensitivity: [3.0, 6.5],
                substitutability: eps,
            };
            let j = reduced_demand_jacobian(&m).unwrap();
            assert!(j.dd1_dw1 < 0.0 && j.dd2_dw2 < 0.0);
            assert!(j.dd1_dw2 >= 0.0 && j.dd2_dw1 >= 0.0);
            assert!(j.delta > 0.0);
            if eps == 0.0 {
                assert_eq!(j.dd1_dw2, 0.0);
            } else {
                assert!(j.dd1_dw2 > 0.0);
            }
        }
    }

    #[test]
    fn jacobian_matches_finite_differences_exactly() {
        let (m, _) = baseline();
        let j = reduced_demand_jacobian(&m).unwrap();
        let h = 1.0; // demands are linear in w, any step is exact
        let (d1p, d2p) = reduced_demand(40.0 + h, 30.0, &m).unwrap();
        let (d1m, d2m) = reduced_demand(40.0 - h, 30.0, &m).unwrap();
        assert!(((d1p - d1m) / (2.0 * h) - j.dd1_dw1).abs() < 1e-10);
        assert!(((d2p - d2m) / (2.0 * h) - j.dd2_dw1).abs() < 1e-10);
    }

    #[test]
    fn pass_through_is_monotone() {
        let (m, _) = baseline();
        let base = retailer_nash_prices(40.0, 40.0, &m).unwrap();
        let up_own = retailer_nash_prices(41.0, 40.0, &m).unwrap();
        let up_rival = retailer_nash_prices(40.0, 41.0, &m).unwrap();
        assert!(up_own.price[0] > base.price[0]);
        assert!(up_rival.price[0] > base.price[0]); // eps > 0 here
    }
}
