//! Heterogeneous manufacturers: firm 1 extracts more value per returned
//! unit than firm 2, so it bids a higher take-back bonus. Shows the bonus
//! best-response iteration, the fixed point, and the assembled equilibrium.
//!
//! ```bash
//! cargo run --example asymmetric_duopoly
//! ```

use clsc::asymmetric::{bonus_best_response, bonus_nash, solve_asymmetric};
use clsc::model::{baseline, Firm};

fn main() -> clsc::Result<()> {
    let (market, mut chain) = baseline();
    chain.salvage_value = [60.0, 40.0];

    println!(
        "salvage values v = {:?}, processing costs k = {:?}",
        chain.salvage_value, chain.processing_cost
    );
    println!();

    let br1 = bonus_best_response(Firm::One, 0.0, &chain)?;
    let br2 = bonus_best_response(Firm::Two, 0.0, &chain)?;
    println!(
        "best responses to a passive rival: b1 = {:.6}, b2 = {:.6}",
        br1.value, br2.value
    );

    let fixed_point = bonus_nash(&chain, 1e-10, 10_000)?;
    println!(
        "bonus fixed point: b = ({:.6}, {:.6}) after {} sweeps (converged: {})",
        fixed_point.bonus[0], fixed_point.bonus[1], fixed_point.iterations, fixed_point.converged
    );
    println!();

    let eq = solve_asymmetric(&market, &chain, 1e-10, 10_000)?;
    println!("equilibrium:");
    println!(
        "  wholesale  w = ({:.6}, {:.6})",
        eq.decision.wholesale[0], eq.decision.wholesale[1]
    );
    println!(
        "  retail     p = ({:.6}, {:.6})",
        eq.prices.price[0], eq.prices.price[1]
    );
    println!(
        "  bonuses    b = ({:.6}, {:.6})",
        eq.decision.bonus[0], eq.decision.bonus[1]
    );
    println!(
        "  demands    d = ({:.6}, {:.6})",
        eq.demand[0], eq.demand[1]
    );
    println!("  shares     s = ({:.6}, {:.6})", eq.share[0], eq.share[1]);
    println!(
        "  returns    q = ({:.6}, {:.6}) of {:.6}",
        eq.q_r[0], eq.q_r[1], eq.q_tot
    );
    println!(
        "  profits    m = ({:.6}, {:.6}), r = ({:.6}, {:.6})",
        eq.profit_manufacturer[0],
        eq.profit_manufacturer[1],
        eq.profit_retailer[0],
        eq.profit_retailer[1]
    );
    println!(
        "  regimes    {} / {}",
        eq.bonus_regime[0].token(),
        eq.bonus_regime[1].token()
    );
    for warning in &eq.warnings {
        println!("  warning: {warning}");
    }
    Ok(())
}
