//! Run the full certificate suite on the baseline equilibrium, the same
//! checks `clsc verify` performs: deviation searches for every decision
//! variable, first-order-condition residuals, and finite-difference
//! gradient checks. Also shows the rival-fixed wholesale diagnostic and
//! what happens when the solver is fed a wrong bonus condition.
//!
//! ```bash
//! cargo run --example certificates
//! ```

use clsc::asymmetric::BonusFocVariant;
use clsc::config::ScenarioConfig;
use clsc::experiments::run_verification;
use clsc::oracle::DEFAULT_SEED;

fn main() -> clsc::Result<()> {
    let config = ScenarioConfig::baseline();

    println!("== exact bonus first-order condition ==");
    let report = run_verification(&config, 4001, DEFAULT_SEED, BonusFocVariant::Exact)?;
    print!("{}", report.render());
    assert!(report.all_gating_passed());

    println!();
    println!("== doubled-inertia bonus condition (deliberately wrong) ==");
    let report = run_verification(&config, 4001, DEFAULT_SEED, BonusFocVariant::DoubledInertia)?;
    print!("{}", report.render());
    match report.first_failure() {
        Some(failure) => println!("caught by `{}` as intended", failure.name),
        None => println!("unexpected: the wrong condition slipped through"),
    }
    Ok(())
}
