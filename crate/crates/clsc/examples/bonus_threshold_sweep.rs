//! Sweep consumer responsiveness and locate the take-back incentive
//! threshold: the equilibrium bonus is zero until `beta (v - k)` exceeds
//! `2 gamma_r`, then rises with responsiveness. Also sweeps the
//! two-dimensional `(beta, gamma_r)` surface to CSV.
//!
//! ```bash
//! cargo run --example bonus_threshold_sweep
//! ```

use clsc::config::ScenarioConfig;
use clsc::sweep::{run_sweep, SweepAxis, SweepSpec};

fn main() -> clsc::Result<()> {
    let config = ScenarioConfig::baseline();

    let spec = SweepSpec::one_dimensional(SweepAxis::new("beta", 0.1, 3.0, 59));
    let (_, rows) = run_sweep(&config, &spec)?;
    let threshold = 2.0 * 10.0 / 50.0; // 2 gamma_r / (v - k)
    println!("beta sweep (threshold at beta = {threshold}):");
    println!("{:>8} {:>12} {:>14}", "beta", "b*", "regime");
    for row in rows.iter().step_by(6) {
        let eq = row.outcome.as_ref().unwrap();
        println!(
            "{:>8.4} {:>12.6} {:>14}",
            row.axis1_value,
            eq.decision.bonus[0],
            eq.bonus_regime[0].token()
        );
    }
    let first_positive = rows
        .iter()
        .find(|r| r.outcome.as_ref().unwrap().decision.bonus[0] > 0.0)
        .unwrap();
    println!(
        "first positive bonus at beta = {:.4}",
        first_positive.axis1_value
    );

    let surface = SweepSpec::two_dimensional(
        SweepAxis::new("beta", 0.1, 3.0, 30),
        SweepAxis::new("gamma_r", 1.0, 40.0, 40),
    );
    let (csv, _) = run_sweep(&config, &surface)?;
    std::fs::write("bonus_surface.csv", csv)?;
    println!("wrote bonus_surface.csv (beta x gamma_r grid, 1200 solves)");
    Ok(())
}
