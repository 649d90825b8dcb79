use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use condinf::{CiMethod, CiMode, CiSpec, DesignSpec, Outcome, PermutedBlockInit, ProbPair, Rule};
use serde::Deserialize;

use crate::error::{config, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "condinf",
    version,
    about = "Exact distributions, conditional estimation and confidence intervals for two-arm response-adaptive designs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate trials at a success-probability pair, one outcome per row.
    Simulate(Flags),
    /// Exact joint law of the terminal outcome.
    Dist(Flags),
    /// Unconditional and conditional estimates with information matrices.
    Estimate(Flags),
    /// Per-arm confidence intervals for an observed outcome.
    Ci(Flags),
    /// Operating-characteristics table over a probability grid.
    Study(Flags),
    /// Distribution of N1 with half the relative-efficiency trace per value.
    Figure(Flags),
    /// Reanalysis of the two fluoxetine strata.
    Fluoxetine(Flags),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Simulate(_) => "simulate",
            Command::Dist(_) => "dist",
            Command::Estimate(_) => "estimate",
            Command::Ci(_) => "ci",
            Command::Study(_) => "study",
            Command::Figure(_) => "figure",
            Command::Fluoxetine(_) => "fluoxetine",
        }
    }

    pub fn flags(&self) -> &Flags {
        match self {
            Command::Simulate(f)
            | Command::Dist(f)
            | Command::Estimate(f)
            | Command::Ci(f)
            | Command::Study(f)
            | Command::Figure(f)
            | Command::Fluoxetine(f) => f,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Options shared by every subcommand. The same keys (snake_case) are
/// accepted in a JSON config file; flags given on the command line win.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Flags {
    /// JSON config file with any of these options.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Allocation rule: rpw, sdd, nad, opt-sd, opt-or, opt-rr.
    #[arg(long)]
    pub design: Option<String>,
    /// Urn parameter alpha (rpw, sdd).
    #[arg(long)]
    pub alpha: Option<u32>,
    /// Urn parameter beta (rpw, sdd).
    #[arg(long)]
    pub beta: Option<u32>,
    /// Trial horizon.
    #[arg(long)]
    pub n: Option<usize>,
    /// Length of a permuted-block initializer.
    #[arg(long)]
    pub block: Option<usize>,
    /// Whether block-phase responses feed the adaptive rule.
    #[arg(long)]
    pub block_feeds: Option<bool>,

    #[arg(long)]
    pub p1: Option<f64>,
    #[arg(long)]
    pub p2: Option<f64>,
    #[arg(long)]
    pub s1: Option<usize>,
    #[arg(long)]
    pub s2: Option<usize>,
    #[arg(long)]
    pub n1: Option<usize>,

    /// Per-arm confidence level.
    #[arg(long)]
    pub level: Option<f64>,
    /// Interval method: wald, uncond, cond.
    #[arg(long)]
    pub method: Option<String>,
    /// Interval mode: exact or mc.
    #[arg(long)]
    pub mode: Option<String>,
    /// Monte Carlo replicates (ci) or number of simulated trials (simulate).
    #[arg(long)]
    pub replicates: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Minimum matching replicates for the Monte Carlo conditional bootstrap.
    #[arg(long)]
    pub min_bc: Option<usize>,
    /// Worker threads.
    #[arg(long, env = "CONDINF_THREADS")]
    #[serde(skip)]
    pub threads: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Study preset such as sdd-25, rpw-50 or opt-rr-25.
    #[arg(long)]
    pub table: Option<String>,
    /// Emit study values rounded to two decimals (four for coverages).
    #[arg(long)]
    pub rounded: bool,
}

macro_rules! prefer {
    ($a:expr, $b:expr, $($f:ident),*) => {
        Flags { $($f: $a.$f.or($b.$f),)* rounded: $a.rounded || $b.rounded, config: $a.config }
    };
}

impl Flags {
    /// Fill unset flags from the config file, if one was given.
    pub fn resolve(self) -> Result<Flags, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let file = read_config(&path)?;
        let threads = self.threads;
        let mut merged = prefer!(
            self, file, design, alpha, beta, n, block, block_feeds, p1, p2, s1, s2, n1, level, method,
            mode, replicates, seed, min_bc, out, format, table, threads
        );
        merged.threads = threads;
        Ok(merged)
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    pub fn rule(&self) -> Result<Rule, CliError> {
        let name = self.design.as_deref().ok_or_else(|| config("--design is required"))?;
        Ok(Rule::parse(name, self.alpha.unwrap_or(1), self.beta.unwrap_or(1))?)
    }

    pub fn design(&self) -> Result<DesignSpec, CliError> {
        let rule = self.rule()?;
        let n = self.n.ok_or_else(|| config("--n is required"))?;
        let block = self.block.map(PermutedBlockInit::new).transpose()?;
        Ok(DesignSpec::with_initializer(rule, n, block)?
            .with_block_feeding_rule(self.block_feeds.unwrap_or(true)))
    }

    fn has_p(&self) -> bool {
        self.p1.is_some() || self.p2.is_some()
    }

    fn has_outcome(&self) -> bool {
        self.s1.is_some() || self.s2.is_some() || self.n1.is_some()
    }

    /// The probability pair; rejects outcome counts, which this command does not take.
    pub fn p(&self) -> Result<ProbPair, CliError> {
        if self.has_outcome() {
            return Err(config("this command takes --p1/--p2, not outcome counts"));
        }
        match (self.p1, self.p2) {
            (Some(a), Some(b)) => Ok(ProbPair::new(a, b)?),
            _ => Err(config("--p1 and --p2 are required")),
        }
    }

    /// The probability pair if given.
    pub fn optional_p(&self) -> Result<Option<ProbPair>, CliError> {
        if self.has_p() {
            self.p().map(Some)
        } else if self.has_outcome() {
            Err(config("this command does not take outcome counts"))
        } else {
            Ok(None)
        }
    }

    /// The observed outcome; rejects a probability pair.
    pub fn outcome(&self) -> Result<Outcome, CliError> {
        if self.has_p() {
            return Err(config("this command takes --s1/--s2/--n1, not --p1/--p2"));
        }
        let n = self.n.ok_or_else(|| config("--n is required"))?;
        match (self.s1, self.s2, self.n1) {
            (Some(s1), Some(s2), Some(n1)) => Ok(Outcome::new(s1, s2, n1, n)?),
            _ => Err(config("--s1, --s2 and --n1 are required")),
        }
    }

    pub fn level_or(&self, default: f64) -> Result<f64, CliError> {
        let level = self.level.unwrap_or(default);
        if !(level > 0.0 && level < 1.0) {
            return Err(config(format!("--level {level} must lie strictly between 0 and 1")));
        }
        Ok(level)
    }

    pub fn ci_spec(&self) -> Result<CiSpec, CliError> {
        let level = self.level_or(0.95)?;
        let method = CiMethod::parse(self.method.as_deref().unwrap_or("cond"))?;
        let mode = match self.mode.as_deref().unwrap_or("exact") {
            "exact" => CiMode::Exact,
            "mc" | "monte-carlo" => CiMode::MonteCarlo {
                replicates: self.replicates.unwrap_or(10_000),
                seed: self.seed.unwrap_or(0),
            },
            other => return Err(config(format!("unknown mode '{other}' (expected exact or mc)"))),
        };
        let mut spec = CiSpec::new(level, method, mode)?;
        if let Some(min) = self.min_bc {
            spec = spec.with_min_conditional_replicates(min);
        }
        spec.validate()?;
        Ok(spec)
    }
}

fn read_config(path: &Path) -> Result<Flags, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::ConfigFile(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::ConfigFile(format!("{}: {e}", path.display())))
}
