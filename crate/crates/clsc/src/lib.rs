//! Equilibrium solver for a dual-channel closed-loop supply chain: two
//! Stackelberg-leader manufacturers each supply a dedicated retailer,
//! retailers compete in prices, and a fraction of sales returns for
//! remanufacturing, split between manufacturers by consumer take-back
//! bonuses through an inertia-responsiveness rule.
//!
//! The game runs in three stages. Manufacturers simultaneously commit to
//! wholesale prices and take-back bonuses; retailers then play a pricing
//! Nash game; finally returns realize and payoffs accrue. Everything is
//! solved by backward induction with closed forms wherever they exist and
//! a brute-force oracle certifying each of them.
//!
//! # Modules
//!
//! - [`model`]: demand, return allocation, profit primitives.
//! - [`retailer`]: stage-2 Nash prices and reduced-form demands.
//! - [`symmetric`]: symmetric leader-stage closed forms, coupling
//!   comparative statics, welfare benchmark.
//! - [`asymmetric`]: heterogeneous manufacturers; quadratic bonus best
//!   responses, bonus fixed point, linear wholesale stage.
//! - [`oracle`]: deviation certificates, FOC residuals, gradient checks.
//! - [`config`], [`sweep`], [`experiments`]: JSON scenarios, deterministic
//!   CSV sweeps, and the verification runner behind the `clsc` binary.
//!
//! # Leader-stage optimality concept
//!
//! The wholesale stage is solved under parallel-move optimality: each
//! manufacturer evaluates a wholesale deviation as if its rival moves in
//! step, so the relevant demand slope is the diagonal one. This is the
//! concept under which the symmetric closed forms are exact, and all
//! wholesale certificates probe it. The strict rival-fixed alternative is
//! exposed as a diagnostic ([`oracle::wholesale_rival_fixed_gain`]); with
//! active cross-price effects it reports a small positive gain at the
//! parallel-move solution (about 1e-4 relative at the shipped baseline),
//! which the `verify` command prints rather than hides. The bonus and
//! retail stages are ordinary simultaneous games and their certificates
//! are rival-fixed.
//!
//! # Quick start
//!
//! ```
//! use clsc::symmetric::{solve_symmetric, AllocationMode, SymmetricScenario};
//!
//! let scenario = SymmetricScenario::baseline();
//! let eq = solve_symmetric(&scenario, AllocationMode::InertiaResponsiveness).unwrap();
//! assert!((eq.decision.bonus[0] - 11.111111).abs() < 1e-6);
//! assert!((eq.decision.wholesale[0] - 45.833333).abs() < 1e-6);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example
//! baseline_equilibria` is the natural place to start.

pub mod asymmetric;
pub mod config;
pub mod error;
pub mod experiments;
pub mod model;
pub mod oracle;
pub mod retailer;
pub mod sweep;
pub mod symmetric;

pub use error::{Error, Result};
pub use model::{
    BonusRegime, ChainParams, EquilibriumOutcome, Firm, LeaderDecision, MarketParams,
    OperatingFlags, RetailPrices,
};
pub use symmetric::{AllocationMode, SymmetricScenario};
