//! Solve the shipped baseline scenario under both return-allocation rules
//! and print the equilibria side by side.
//!
//! ```bash
//! cargo run --example baseline_equilibria
//! ```

use clsc::symmetric::{solve_symmetric, welfare_gap, AllocationMode, SymmetricScenario};

fn main() -> clsc::Result<()> {
    let scenario = SymmetricScenario::baseline();
    println!(
        "baseline: d_bar={} alpha={} eps={} c={} v={} k={} theta={} beta={} gamma_r={}",
        scenario.potential,
        scenario.sensitivity,
        scenario.substitutability,
        scenario.production_cost,
        scenario.salvage_value,
        scenario.processing_cost,
        scenario.return_fraction,
        scenario.responsiveness,
        scenario.inertia,
    );
    println!();
    println!(
        "{:<14} {:>10} {:>10} {:>10} {:>10} {:>12} {:>12}  regime",
        "mode", "w*", "p*", "b*", "Q_tot", "profit_m", "profit_r"
    );
    for mode in [
        AllocationMode::Proportional,
        AllocationMode::InertiaResponsiveness,
    ] {
        let eq = solve_symmetric(&scenario, mode)?;
        println!(
            "{:<14} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>12.6} {:>12.6}  {}",
            mode.token(),
            eq.decision.wholesale[0],
            eq.prices.price[0],
            eq.decision.bonus[0],
            eq.q_tot,
            eq.profit_manufacturer[0],
            eq.profit_retailer[0],
            eq.bonus_regime[0].token(),
        );
    }

    println!();
    let gap = welfare_gap(&scenario, AllocationMode::InertiaResponsiveness)?;
    println!(
        "planner benchmark: w_sp={:.6} < w_d={:.6}; demand {:.6} -> {:.6}, returns {:.6} -> {:.6}",
        gap.w_planner,
        gap.w_decentralized,
        gap.demand_decentralized,
        gap.demand_planner,
        gap.returns_decentralized,
        gap.returns_planner,
    );
    Ok(())
}
