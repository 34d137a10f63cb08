use thiserror::Error;

/// Errors surfaced by solvers, oracles, and the experiment front end.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is outside its admissible set (bad firm
    /// index, unknown gradient tag, malformed sweep axis, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The mathematical domain of an operation is violated (epsilon >= 1,
    /// negative bonus, singular leader system, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation that is only defined in a particular bonus regime was
    /// called outside it.
    #[error("regime error: {0}")]
    Regime(String),

    /// The bonus fixed-point iteration did not converge within its budget.
    #[error("bonus best-response iteration did not converge: {iterations} sweeps, last step {last_step:e}")]
    NonConvergence { iterations: usize, last_step: f64 },

    /// Config file rejected; `field` names the offending key.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn regime(msg: impl Into<String>) -> Self {
        Error::Regime(msg.into())
    }

    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
