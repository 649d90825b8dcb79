use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Engine(#[from] condinf::Error),

    #[error("cannot read config file: {0}")]
    ConfigFile(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for configuration problems, 3 for degenerate data, 4 for solver
    /// failures, 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        use condinf::Error as E;
        match self {
            CliError::Config(_) | CliError::ConfigFile(_) => 2,
            CliError::Engine(e) if e.is_degenerate_data() => 3,
            CliError::Engine(e) if e.is_solver_failure() => 4,
            CliError::Engine(
                E::InvalidProbability(_)
                | E::InvalidDesign(_)
                | E::InvalidOutcome(_)
                | E::InvalidSpec(_)
                | E::OddBlockLength(_)
                | E::HorizonExceeded { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}
