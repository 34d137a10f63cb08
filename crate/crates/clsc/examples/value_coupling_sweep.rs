//! Forward-reverse coupling: sweep the remanufacturing value `v` and watch
//! the wholesale price fall, at slope `-theta/2` under proportional
//! allocation and the attenuated `-theta/3` under inertia-responsiveness.
//!
//! ```bash
//! cargo run --example value_coupling_sweep
//! ```

use clsc::config::ScenarioConfig;
use clsc::sweep::{run_sweep, SweepAxis, SweepSpec};
use clsc::symmetric::{coupling_slopes, AllocationMode, SymmetricScenario};

fn fitted_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x: f64 = points.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y: f64 = points.iter().map(|(_, y)| y).sum::<f64>() / n;
    let cov: f64 = points
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let var: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    cov / var
}

fn main() -> clsc::Result<()> {
    let spec = SweepSpec::one_dimensional(SweepAxis::new("v", 20.0, 100.0, 81));
    for mode in [
        AllocationMode::Proportional,
        AllocationMode::InertiaResponsiveness,
    ] {
        let mut config = ScenarioConfig::baseline();
        config.mode = mode;
        let (csv, rows) = run_sweep(&config, &spec)?;
        let points: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|r| {
                r.outcome
                    .as_ref()
                    .map(|o| (r.axis1_value, o.decision.wholesale[0]))
            })
            .collect();
        let slope = fitted_slope(&points);
        println!("{:<14} fitted dw*/dv = {slope:+.9}", mode.token());
        let out = format!("wholesale_vs_value_{}.csv", mode.token());
        std::fs::write(&out, csv)?;
        println!("{:<14} wrote {out}", "");
    }

    let scenario = SymmetricScenario::baseline();
    let (dv_p, dt_p) = coupling_slopes(&scenario, AllocationMode::Proportional)?;
    let (dv_i, dt_i) = coupling_slopes(&scenario, AllocationMode::InertiaResponsiveness)?;
    println!("closed-form slopes: proportional ({dv_p:+.6}, {dt_p:+.6}), inertia ({dv_i:+.6}, {dt_i:+.6})");
    println!("attenuation: |{dv_i:.4}| < |{dv_p:.4}|");
    Ok(())
}
