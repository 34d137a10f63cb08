//! The three experiment commands behind the `clsc` binary: baseline
//! tables, parameter sweeps (via [`crate::sweep`]), and certificate
//! verification runs.

use crate::asymmetric::{solve_asymmetric_proportional, solve_asymmetric_with, BonusFocVariant};
use crate::config::{ScenarioConfig, ScenarioKind};
use crate::error::{Error, Result};
use crate::model::{BonusRegime, EquilibriumOutcome, Firm};
use crate::oracle::{
    foc_residuals, gradient_check, seeded_rng, verify_bonus_optimum, verify_retailer_nash,
    verify_wholesale_optimum, wholesale_rival_fixed_gain,
};
use crate::sweep::fmt6;
use crate::symmetric::{solve_symmetric, AllocationMode};
use rand::Rng;

pub const BASELINE_HEADER: &str =
    "source,mode,w,p,b,q_tot,q_r_per_firm,profit_m,profit_r,regime,deviation_note";

/// Reference block emitted next to the computed rows: externally published
/// benchmark values for the shipped baseline parameterization, quoted
/// verbatim so the difference from the closed forms stays visible.
/// Columns: `(mode, w, p, b, q_tot)`.
const REFERENCE_ROWS: [(&str, f64, f64, f64, f64); 2] = [
    ("proportional", 49.17, 63.17, 0.00, 31.50),
    ("inertia", 47.65, 62.45, 8.33, 36.90),
];

/// Fields are considered to agree when they match at the reference block's
/// two-decimal precision.
const REFERENCE_TOL: f64 = 0.005;

fn computed_row(mode: AllocationMode, out: &EquilibriumOutcome) -> String {
    [
        "computed".to_string(),
        mode.token().to_string(),
        fmt6(out.decision.wholesale[0]),
        fmt6(out.prices.price[0]),
        fmt6(out.decision.bonus[0]),
        fmt6(out.q_tot),
        fmt6(out.q_r[0]),
        fmt6(out.profit_manufacturer[0]),
        fmt6(out.profit_retailer[0]),
        out.bonus_regime[0].token().to_string(),
        String::new(),
    ]
    .join(",")
}

fn reference_row(
    mode: AllocationMode,
    reference: (&str, f64, f64, f64, f64),
    out: &EquilibriumOutcome,
) -> String {
    let (_, w, p, b, q) = reference;
    let mut differs = Vec::new();
    for (name, reference_value, computed) in [
        ("w", w, out.decision.wholesale[0]),
        ("p", p, out.prices.price[0]),
        ("b", b, out.decision.bonus[0]),
        ("q_tot", q, out.q_tot),
    ] {
        if (reference_value - computed).abs() > REFERENCE_TOL {
            differs.push(name);
        }
    }
    let note = if differs.is_empty() {
        String::new()
    } else {
        format!("differs_from_computed:{}", differs.join(";"))
    };
    [
        "paper_reference".to_string(),
        mode.token().to_string(),
        fmt6(w),
        fmt6(p),
        fmt6(b),
        fmt6(q),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        note,
    ]
    .join(",")
}

/// Baseline table: one computed row per requested mode plus the matching
/// reference rows. Defined for symmetric scenarios.
pub fn baseline_csv(config: &ScenarioConfig, modes: &[AllocationMode]) -> Result<String> {
    let ScenarioKind::Symmetric(scenario) = &config.kind else {
        return Err(Error::parameter(
            "the baseline table is a symmetric benchmark; use `sweep` or `verify` \
             for asymmetric configs",
        ));
    };
    let mut out = String::from(BASELINE_HEADER);
    out.push('\n');
    let mut reference_lines = Vec::new();
    for &mode in modes {
        let solved = solve_symmetric(scenario, mode)?;
        out.push_str(&computed_row(mode, &solved));
        out.push('\n');
        for reference in REFERENCE_ROWS {
            if reference.0 == mode.token() {
                reference_lines.push(reference_row(mode, reference, &solved));
            }
        }
    }
    for line in reference_lines {
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

/// One certificate (or diagnostic) evaluation in a verification run.
#[derive(Debug, Clone)]
pub struct CertificateLine {
    pub name: String,
    /// Max gain or residual the check measured.
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Diagnostics are reported but do not gate the exit code.
    pub gating: bool,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub lines: Vec<CertificateLine>,
}

impl VerificationReport {
    pub fn all_gating_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed || !l.gating)
    }

    pub fn first_failure(&self) -> Option<&CertificateLine> {
        self.lines.iter().find(|l| l.gating && !l.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            if line.gating {
                let status = if line.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} {:<44} value={:>12.4e} tol={:.1e}\n",
                    line.name, line.value, line.tolerance
                ));
            } else {
                out.push_str(&format!(
                    "INFO {:<44} value={:>12.4e} (not gated)\n",
                    line.name, line.value
                ));
            }
        }
        let (passed, gating): (usize, usize) = self.lines.iter().fold((0, 0), |(p, g), l| {
            if l.gating {
                (p + usize::from(l.passed), g + 1)
            } else {
                (p, g)
            }
        });
        out.push_str(&format!("{passed}/{gating} certificates passed\n"));
        out
    }

    fn gate(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        self.lines.push(CertificateLine {
            name: name.into(),
            value,
            tolerance,
            passed: value <= tolerance,
            gating: true,
        });
    }

    fn info(&mut self, name: impl Into<String>, value: f64) {
        self.lines.push(CertificateLine {
            name: name.into(),
            value,
            tolerance: f64::NAN,
            passed: true,
            gating: false,
        });
    }
}

const RETAIL_TOL: f64 = 1e-8;
const LEADER_TOL: f64 = 1e-7;
const GRADIENT_TOL: f64 = 1e-6;
const JACOBIAN_TOL: f64 = 1e-8;

fn solve_for_verification(
    config: &ScenarioConfig,
    variant: BonusFocVariant,
) -> Result<EquilibriumOutcome> {
    match (&config.kind, config.mode, variant) {
        (ScenarioKind::Symmetric(s), mode, BonusFocVariant::Exact) => solve_symmetric(s, mode),
        (ScenarioKind::Symmetric(s), AllocationMode::Proportional, _) => {
            solve_symmetric(s, AllocationMode::Proportional)
        }
        (ScenarioKind::Symmetric(s), AllocationMode::InertiaResponsiveness, v) => {
            solve_asymmetric_with(&s.market(), &s.chain(), config.tol, config.max_iter, v)
        }
        (ScenarioKind::Asymmetric(m, c), AllocationMode::InertiaResponsiveness, v) => {
            solve_asymmetric_with(m, c, config.tol, config.max_iter, v)
        }
        (ScenarioKind::Asymmetric(m, c), AllocationMode::Proportional, _) => {
            solve_asymmetric_proportional(m, c)
        }
    }
}

/// Solve the configured scenario and run every certificate on the solution.
///
/// `variant` selects the bonus first-order condition used by the *solver*;
/// the certificates always search the true payoffs, which is exactly how a
/// wrong variant gets caught.
pub fn run_verification(
    config: &ScenarioConfig,
    grid: usize,
    seed: u64,
    variant: BonusFocVariant,
) -> Result<VerificationReport> {
    let m = config.market();
    let c = config.chain();
    let solved = solve_for_verification(config, variant)?;
    let dec = &solved.decision;
    let mode = config.mode;
    let mut report = VerificationReport::default();

    let (r1, r2) = verify_retailer_nash(dec.wholesale, &m, &c, grid)?;
    report.gate(
        "retail_price_deviation_firm_1",
        r1.best_deviation_gain,
        RETAIL_TOL,
    );
    report.gate(
        "retail_price_deviation_firm_2",
        r2.best_deviation_gain,
        RETAIL_TOL,
    );

    for f in Firm::BOTH {
        let w = verify_wholesale_optimum(f, dec, &m, &c, grid)?;
        report.gate(
            format!("wholesale_parallel_deviation_firm_{}", f.label()),
            w.best_deviation_gain,
            LEADER_TOL,
        );
    }

    for f in Firm::BOTH {
        let b = verify_bonus_optimum(f, dec.bonus, &m, &c, grid, mode)?;
        report.gate(
            format!("bonus_deviation_firm_{}", f.label()),
            b.best_deviation_gain,
            LEADER_TOL,
        );
    }

    let residuals = foc_residuals(dec, &m, &c, mode)?;
    report.gate(
        "wholesale_foc_residual_max",
        residuals[0].abs().max(residuals[1].abs()),
        LEADER_TOL,
    );
    for f in Firm::BOTH {
        let r = residuals[2 + f.index()];
        // Interior optima must zero the condition; boundary optima must
        // have non-positive marginal value (KKT).
        let value = match solved.bonus_regime[f.index()] {
            BonusRegime::Interior => r.abs(),
            BonusRegime::BoundaryZero | BonusRegime::ReverseInactive => r,
        };
        report.gate(
            format!("bonus_foc_kkt_firm_{}", f.label()),
            value,
            LEADER_TOL,
        );
    }

    let mut rng = seeded_rng(seed);
    let mut worst = gradient_check(
        "allocation_share",
        &[
            dec.bonus[0],
            dec.bonus[1],
            c.responsiveness[0].max(1e-3),
            c.responsiveness[1].max(1e-3),
            c.inertia,
        ],
        1e-6,
    )?;
    for _ in 0..4 {
        let point = [
            rng.gen_range(0.0..30.0),
            rng.gen_range(0.0..30.0),
            rng.gen_range(0.05..3.0),
            rng.gen_range(0.05..3.0),
            rng.gen_range(0.5..30.0),
        ];
        worst = worst.max(gradient_check("allocation_share", &point, 1e-6)?);
    }
    report.gate("gradient_allocation_share", worst, GRADIENT_TOL);

    let jac_err = gradient_check(
        "reduced_demand_jacobian",
        &[
            m.potential[0],
            m.potential[1],
            m.sensitivity[0],
            m.sensitivity[1],
            m.substitutability,
            dec.wholesale[0],
            dec.wholesale[1],
        ],
        1e-3,
    )?;
    report.gate("gradient_reduced_demand_jacobian", jac_err, JACOBIAN_TOL);

    if let ScenarioKind::Symmetric(s) = &config.kind {
        let point = [
            s.potential,
            s.sensitivity,
            s.substitutability,
            s.production_cost,
            s.salvage_value,
            s.processing_cost,
            s.return_fraction,
            s.responsiveness,
            s.inertia,
        ];
        let tag = match mode {
            AllocationMode::Proportional => "coupling_slopes_proportional",
            AllocationMode::InertiaResponsiveness => "coupling_slopes_inertia",
        };
        match gradient_check(tag, &point, 1e-4) {
            Ok(err) => report.gate(format!("gradient_{tag}"), err, GRADIENT_TOL),
            // Outside the interior regime the slope formula has no domain.
            Err(Error::Regime(_)) => {}
            Err(e) => return Err(e),
        }
    }

    if solved.bonus_regime.contains(&BonusRegime::Interior) {
        let f = if solved.bonus_regime[0] == BonusRegime::Interior {
            Firm::One
        } else {
            Firm::Two
        };
        let i = f.index();
        let j = f.rival().index();
        let err = gradient_check(
            "bonus_response",
            &[
                c.salvage_value[i],
                c.processing_cost[i],
                dec.bonus[j],
                c.responsiveness[i],
                c.responsiveness[j],
                c.inertia,
            ],
            1e-4,
        )?;
        report.gate("gradient_bonus_response", err, GRADIENT_TOL);
    }

    for f in Firm::BOTH {
        let probe = wholesale_rival_fixed_gain(f, dec, &m, &c, grid)?;
        report.info(
            format!("wholesale_rival_fixed_gain_firm_{}", f.label()),
            probe.best_deviation_gain,
        );
    }

    Ok(report)
}
