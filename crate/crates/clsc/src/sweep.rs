//! Deterministic parameter sweeps over one or two axes, emitted as CSV.
//!
//! Grid points are evaluated and emitted in row-major order (axis 1 outer,
//! axis 2 inner). A point that fails to solve produces a row with its
//! `status` column set and empty value cells; the sweep continues. Output
//! is byte-identical for identical inputs: assembly is index-ordered and
//! every numeric cell is printed as fixed-point with six decimals.

use crate::config::{ScenarioConfig, ScenarioKind};
use crate::error::{Error, Result};
use crate::model::EquilibriumOutcome;
use crate::symmetric::planner_wholesale;

/// Parameter names accepted on a sweep axis for symmetric scenarios; these
/// also work on asymmetric scenarios, where they set both firms' values.
pub const SYMMETRIC_PARAMS: [&str; 9] = [
    "d_bar", "alpha", "epsilon", "c", "v", "k", "theta", "beta", "gamma_r",
];

/// Per-firm parameter names, accepted only for asymmetric scenarios.
pub const PER_FIRM_PARAMS: [&str; 12] = [
    "d_bar_1", "d_bar_2", "alpha_1", "alpha_2", "c_1", "c_2", "v_1", "v_2", "k_1", "k_2", "beta_1",
    "beta_2",
];

/// One sweep axis: a parameter name and an inclusive grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub param: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl SweepAxis {
    pub fn new(param: impl Into<String>, from: f64, to: f64, steps: usize) -> Self {
        SweepAxis {
            param: param.into(),
            from,
            to,
            steps,
        }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn validate(&self, config: &ScenarioConfig) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::parameter(format!(
                "axis `{}`: steps must be >= 2 (got {})",
                self.param, self.steps
            )));
        }
        if !(self.from < self.to) {
            return Err(Error::parameter(format!(
                "axis `{}`: need from < to (got {} .. {})",
                self.param, self.from, self.to
            )));
        }
        let symmetric_ok = SYMMETRIC_PARAMS.contains(&self.param.as_str());
        let per_firm_ok = PER_FIRM_PARAMS.contains(&self.param.as_str());
        if !symmetric_ok && !per_firm_ok {
            return Err(Error::parameter(format!(
                "axis `{}`: not a sweepable parameter (expected one of {:?} or {:?})",
                self.param, SYMMETRIC_PARAMS, PER_FIRM_PARAMS
            )));
        }
        if per_firm_ok && config.is_symmetric() {
            return Err(Error::parameter(format!(
                "axis `{}`: per-firm parameters need an asymmetric (market/chain) config",
                self.param
            )));
        }
        Ok(())
    }

    pub fn value_at(&self, i: usize) -> f64 {
        self.from + (self.to - self.from) * i as f64 / (self.steps - 1) as f64
    }
}

/// Output column groups, in their fixed vocabulary. `parse` accepts the
/// tokens `w, p, b, D, q_tot, q_r_i, profits, regime, w_planner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputColumn {
    Wholesale,
    Retail,
    Bonus,
    Demand,
    ReturnsTotal,
    ReturnsPerFirm,
    Profits,
    Regime,
    PlannerWholesale,
}

impl OutputColumn {
    pub const ALL: [OutputColumn; 9] = [
        OutputColumn::Wholesale,
        OutputColumn::Retail,
        OutputColumn::Bonus,
        OutputColumn::Demand,
        OutputColumn::ReturnsTotal,
        OutputColumn::ReturnsPerFirm,
        OutputColumn::Profits,
        OutputColumn::Regime,
        OutputColumn::PlannerWholesale,
    ];

    pub fn parse(token: &str) -> Result<Self> {
        match token {
            "w" => Ok(OutputColumn::Wholesale),
            "p" => Ok(OutputColumn::Retail),
            "b" => Ok(OutputColumn::Bonus),
            "D" => Ok(OutputColumn::Demand),
            "q_tot" => Ok(OutputColumn::ReturnsTotal),
            "q_r_i" => Ok(OutputColumn::ReturnsPerFirm),
            "profits" => Ok(OutputColumn::Profits),
            "regime" => Ok(OutputColumn::Regime),
            "w_planner" => Ok(OutputColumn::PlannerWholesale),
            other => Err(Error::parameter(format!("unknown output column `{other}`"))),
        }
    }

    fn headers(self) -> &'static [&'static str] {
        match self {
            OutputColumn::Wholesale => &["w_1", "w_2"],
            OutputColumn::Retail => &["p_1", "p_2"],
            OutputColumn::Bonus => &["b_1", "b_2"],
            OutputColumn::Demand => &["d_1", "d_2"],
            OutputColumn::ReturnsTotal => &["q_tot"],
            OutputColumn::ReturnsPerFirm => &["q_r_1", "q_r_2"],
            OutputColumn::Profits => &["profit_m_1", "profit_m_2", "profit_r_1", "profit_r_2"],
            OutputColumn::Regime => &["regime_1", "regime_2"],
            OutputColumn::PlannerWholesale => &["w_planner"],
        }
    }
}

/// A grid definition: one or two axes plus the ordered output columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis1: SweepAxis,
    pub axis2: Option<SweepAxis>,
    pub outputs: Vec<OutputColumn>,
}

impl SweepSpec {
    pub fn one_dimensional(axis: SweepAxis) -> Self {
        SweepSpec {
            axis1: axis,
            axis2: None,
            outputs: OutputColumn::ALL.to_vec(),
        }
    }

    pub fn two_dimensional(axis1: SweepAxis, axis2: SweepAxis) -> Self {
        SweepSpec {
            axis1,
            axis2: Some(axis2),
            outputs: OutputColumn::ALL.to_vec(),
        }
    }

    fn validate(&self, config: &ScenarioConfig) -> Result<()> {
        self.axis1.validate(config)?;
        if let Some(axis2) = &self.axis2 {
            axis2.validate(config)?;
            if axis2.param == self.axis1.param {
                return Err(Error::parameter(format!(
                    "axis 2 sweeps the same parameter `{}` as axis 1",
                    axis2.param
                )));
            }
        }
        if self.outputs.is_empty() {
            return Err(Error::parameter("sweep outputs must not be empty"));
        }
        Ok(())
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub axis1_value: f64,
    pub axis2_value: Option<f64>,
    pub status: &'static str,
    pub outcome: Option<EquilibriumOutcome>,
    pub w_planner: Option<f64>,
}

fn status_token(e: &Error) -> &'static str {
    match e {
        Error::Parameter(_) => "parameter_error",
        Error::Domain(_) => "domain_error",
        Error::Regime(_) => "regime_error",
        Error::NonConvergence { .. } => "no_convergence",
        Error::Config { .. } => "config_error",
        Error::Io(_) | Error::Json(_) => "io_error",
    }
}

fn set_param(config: &mut ScenarioConfig, name: &str, value: f64) -> Result<()> {
    match &mut config.kind {
        ScenarioKind::Symmetric(s) => {
            match name {
                "d_bar" => s.potential = value,
                "alpha" => s.sensitivity = value,
                "epsilon" => s.substitutability = value,
                "c" => s.production_cost = value,
                "v" => s.salvage_value = value,
                "k" => s.processing_cost = value,
                "theta" => s.return_fraction = value,
                "beta" => s.responsiveness = value,
                "gamma_r" => s.inertia = value,
                other => return Err(Error::parameter(format!("unknown parameter `{other}`"))),
            }
            Ok(())
        }
        ScenarioKind::Asymmetric(m, c) => {
            match name {
                "d_bar" => m.potential = [value; 2],
                "alpha" => m.sensitivity = [value; 2],
                "epsilon" => m.substitutability = value,
                "c" => c.production_cost = [value; 2],
                "v" => c.salvage_value = [value; 2],
                "k" => c.processing_cost = [value; 2],
                "theta" => c.return_fraction = value,
                "beta" => c.responsiveness = [value; 2],
                "gamma_r" => c.inertia = value,
                "d_bar_1" => m.potential[0] = value,
                "d_bar_2" => m.potential[1] = value,
                "alpha_1" => m.sensitivity[0] = value,
                "alpha_2" => m.sensitivity[1] = value,
                "c_1" => c.production_cost[0] = value,
                "c_2" => c.production_cost[1] = value,
                "v_1" => c.salvage_value[0] = value,
                "v_2" => c.salvage_value[1] = value,
                "k_1" => c.processing_cost[0] = value,
                "k_2" => c.processing_cost[1] = value,
                "beta_1" => c.responsiveness[0] = value,
                "beta_2" => c.responsiveness[1] = value,
                other => return Err(Error::parameter(format!("unknown parameter `{other}`"))),
            }
            Ok(())
        }
    }
}

fn evaluate_point(config: &ScenarioConfig) -> SweepRow {
    let validated = config
        .market()
        .validate()
        .and_then(|_| config.chain().validate())
        .and_then(|_| config.solve());
    match validated {
        Ok(outcome) => {
            let w_planner = match &config.kind {
                ScenarioKind::Symmetric(s) => Some(planner_wholesale(s)),
                ScenarioKind::Asymmetric(..) => None,
            };
            SweepRow {
                axis1_value: 0.0,
                axis2_value: None,
                status: "ok",
                outcome: Some(outcome),
                w_planner,
            }
        }
        Err(e) => SweepRow {
            axis1_value: 0.0,
            axis2_value: None,
            status: status_token(&e),
            outcome: None,
            w_planner: None,
        },
    }
}

/// Evaluate the grid and return the rows in row-major order.
pub fn sweep_rows(config: &ScenarioConfig, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate(config)?;
    let inner_steps = spec.axis2.as_ref().map_or(1, |a| a.steps);
    let mut rows = Vec::with_capacity(spec.axis1.steps * inner_steps);
    for i in 0..spec.axis1.steps {
        let x1 = spec.axis1.value_at(i);
        for j in 0..inner_steps {
            let mut point = config.clone();
            let mut row_err = set_param(&mut point, &spec.axis1.param, x1).err();
            let x2 = spec.axis2.as_ref().map(|axis2| {
                let x2 = axis2.value_at(j);
                if row_err.is_none() {
                    row_err = set_param(&mut point, &axis2.param, x2).err();
                }
                x2
            });
            let mut row = match row_err {
                None => evaluate_point(&point),
                Some(e) => SweepRow {
                    axis1_value: 0.0,
                    axis2_value: None,
                    status: status_token(&e),
                    outcome: None,
                    w_planner: None,
                },
            };
            row.axis1_value = x1;
            row.axis2_value = x2;
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Fixed-point six-decimal cell format shared by every CSV emitter.
pub(crate) fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn push_pair(cells: &mut Vec<String>, values: [f64; 2]) {
    cells.push(fmt6(values[0]));
    cells.push(fmt6(values[1]));
}

/// Render rows to the CSV contract: header row, LF endings, six-decimal
/// fixed-point numeric cells, uppercase regime tokens, empty cells where a
/// value is undefined (failed rows, planner price in asymmetric sweeps).
pub fn render_sweep_csv(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let mut header: Vec<String> = vec![spec.axis1.param.clone()];
    if let Some(axis2) = &spec.axis2 {
        header.push(axis2.param.clone());
    }
    for col in &spec.outputs {
        header.extend(col.headers().iter().map(|h| h.to_string()));
    }
    header.push("status".to_string());

    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let mut cells: Vec<String> = vec![fmt6(row.axis1_value)];
        if spec.axis2.is_some() {
            cells.push(fmt6(row.axis2_value.unwrap_or(f64::NAN)));
        }
        for col in &spec.outputs {
            match (&row.outcome, col) {
                (Some(o), OutputColumn::Wholesale) => push_pair(&mut cells, o.decision.wholesale),
                (Some(o), OutputColumn::Retail) => push_pair(&mut cells, o.prices.price),
                (Some(o), OutputColumn::Bonus) => push_pair(&mut cells, o.decision.bonus),
                (Some(o), OutputColumn::Demand) => push_pair(&mut cells, o.demand),
                (Some(o), OutputColumn::ReturnsTotal) => cells.push(fmt6(o.q_tot)),
                (Some(o), OutputColumn::ReturnsPerFirm) => push_pair(&mut cells, o.q_r),
                (Some(o), OutputColumn::Profits) => {
                    push_pair(&mut cells, o.profit_manufacturer);
                    push_pair(&mut cells, o.profit_retailer);
                }
                (Some(o), OutputColumn::Regime) => {
                    cells.push(o.bonus_regime[0].token().to_string());
                    cells.push(o.bonus_regime[1].token().to_string());
                }
                (_, OutputColumn::PlannerWholesale) => {
                    cells.push(row.w_planner.map(fmt6).unwrap_or_default());
                }
                (None, col) => cells.extend(col.headers().iter().map(|_| String::new())),
            }
        }
        cells.push(row.status.to_string());
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Run a sweep end to end and render it.
pub fn run_sweep(config: &ScenarioConfig, spec: &SweepSpec) -> Result<(String, Vec<SweepRow>)> {
    let rows = sweep_rows(config, spec)?;
    let csv = render_sweep_csv(spec, &rows);
    Ok((csv, rows))
}
