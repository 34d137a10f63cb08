//! Market-structure effects: sweep the substitutability parameter and
//! trace wholesale prices, retail prices, and return volumes, plus the
//! joint `(epsilon, beta)` surface for total returns.
//!
//! ```bash
//! cargo run --example substitutability_sweep
//! ```

use clsc::config::ScenarioConfig;
use clsc::sweep::{run_sweep, SweepAxis, SweepSpec};

fn main() -> clsc::Result<()> {
    let config = ScenarioConfig::baseline();

    let spec = SweepSpec::one_dimensional(SweepAxis::new("epsilon", 0.0, 0.95, 96));
    let (csv, rows) = run_sweep(&config, &spec)?;
    std::fs::write("epsilon_sweep.csv", &csv)?;
    println!("{:>8} {:>12} {:>12} {:>12}", "eps", "w*", "p*", "Q_tot");
    for row in rows.iter().step_by(19) {
        let eq = row.outcome.as_ref().unwrap();
        println!(
            "{:>8.4} {:>12.6} {:>12.6} {:>12.6}",
            row.axis1_value, eq.decision.wholesale[0], eq.prices.price[0], eq.q_tot
        );
    }
    println!("wrote epsilon_sweep.csv (prices rise monotonically with eps)");

    let surface = SweepSpec::two_dimensional(
        SweepAxis::new("epsilon", 0.0, 0.9, 31),
        SweepAxis::new("beta", 0.2, 3.0, 29),
    );
    let (csv, _) = run_sweep(&config, &surface)?;
    std::fs::write("returns_surface.csv", csv)?;
    println!("wrote returns_surface.csv (epsilon x beta grid, 899 solves)");
    Ok(())
}
