use rayon::prelude::*;
use serde::Serialize;

use condinf::designs::simulate_replicate;
use condinf::inference::{
    conditional_expected_info, conditional_observed_info, relative_efficiency,
    unconditional_expected_info, unconditional_observed_info, CMLE_CLAMP, CMLE_TOLERANCE,
};
use condinf::study::{
    default_grid, fluoxetine_case_study_with, releff_histogram, study_table, FluoxetineConfig,
    StudyCell, StudyConfig, COLUMN_NAMES,
};
use condinf::{
    cmle, confidence_interval, joint_distribution, umle, CiPair, CiSpec, CmleResult, DesignSpec,
    InfoMatrix, Outcome, ProbPair, Rule,
};

use crate::args::{Command, Flags, Format};
use crate::error::{config, CliError};
use crate::output::{csv_writer, num, write_json};

pub fn dispatch(command: &Command, flags: &Flags) -> Result<(), CliError> {
    let name = command.name();
    match command {
        Command::Simulate(_) => simulate(name, flags),
        Command::Dist(_) => dist(name, flags),
        Command::Estimate(_) => estimate(name, flags),
        Command::Ci(_) => ci(name, flags),
        Command::Study(_) => study(name, flags),
        Command::Figure(_) => figure(name, flags),
        Command::Fluoxetine(_) => fluoxetine(name, flags),
    }
}

#[derive(Serialize)]
struct SimulateBody {
    design: DesignSpec,
    p: ProbPair,
    seed: u64,
    outcomes: Vec<Outcome>,
}

fn simulate(name: &str, flags: &Flags) -> Result<(), CliError> {
    let design = flags.design()?;
    let p = flags.p()?;
    let seed = flags.seed.unwrap_or(0);
    let replicates = flags.replicates.unwrap_or(1) as u64;
    let outcomes: Vec<Outcome> = (0..replicates)
        .into_par_iter()
        .map(|t| simulate_replicate(&design, &p, seed, t))
        .collect();
    match flags.format_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            w.write_record(["replicate", "s1", "s2", "n1", "n2"])?;
            for (t, o) in outcomes.iter().enumerate() {
                w.write_record([t, o.s1, o.s2, o.n1, o.n2()].map(|v| v.to_string()))?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => write_json(
            flags.out.as_deref(),
            name,
            SimulateBody {
                design,
                p,
                seed,
                outcomes,
            },
        ),
    }
}

#[derive(Serialize)]
struct DistRow {
    s1: usize,
    s2: usize,
    n1: usize,
    probability: f64,
}

#[derive(Serialize)]
struct DistBody {
    design: DesignSpec,
    p: ProbPair,
    horizon: usize,
    total_mass: f64,
    outcomes: Vec<DistRow>,
}

fn dist(name: &str, flags: &Flags) -> Result<(), CliError> {
    let design = flags.design()?;
    let p = flags.p()?;
    let d = joint_distribution(&design, &p);
    match flags.format_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            w.write_record(["s1", "s2", "n1", "probability"])?;
            for (o, m) in d.iter() {
                w.write_record([o.s1.to_string(), o.s2.to_string(), o.n1.to_string(), num(m)])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => write_json(
            flags.out.as_deref(),
            name,
            DistBody {
                design,
                p,
                horizon: d.horizon(),
                total_mass: d.total_mass(),
                outcomes: d
                    .iter()
                    .map(|(o, probability)| DistRow {
                        s1: o.s1,
                        s2: o.s2,
                        n1: o.n1,
                        probability,
                    })
                    .collect(),
            },
        ),
    }
}

#[derive(Serialize)]
struct Tolerances {
    cmle_residual: f64,
    cmle_clamp: f64,
}

/// Information matrices; the expected ones are evaluated at the UMLE.
#[derive(Serialize)]
struct Information {
    unconditional_observed: InfoMatrix,
    unconditional_expected: InfoMatrix,
    conditional_expected: InfoMatrix,
    conditional_observed: InfoMatrix,
    relative_efficiency: InfoMatrix,
}

#[derive(Serialize)]
struct EstimateBody {
    design: DesignSpec,
    outcome: Outcome,
    tolerances: Tolerances,
    umle: ProbPair,
    cmle: CmleResult,
    information: Information,
}

fn estimate(name: &str, flags: &Flags) -> Result<(), CliError> {
    if flags.format_or(Format::Json) != Format::Json {
        return Err(config("estimate writes JSON only"));
    }
    let design = flags.design()?;
    let o = flags.outcome()?;
    let p_hat = umle(&o)?;
    let body = EstimateBody {
        design,
        outcome: o,
        tolerances: Tolerances {
            cmle_residual: CMLE_TOLERANCE,
            cmle_clamp: CMLE_CLAMP,
        },
        umle: p_hat,
        cmle: cmle(&design, &o)?,
        information: Information {
            unconditional_observed: unconditional_observed_info(&o)?,
            unconditional_expected: unconditional_expected_info(&design, &p_hat)?,
            conditional_expected: conditional_expected_info(&design, &p_hat, o.n1)?,
            conditional_observed: conditional_observed_info(&design, &o)?,
            relative_efficiency: relative_efficiency(&design, &p_hat, o.n1)?,
        },
    };
    write_json(flags.out.as_deref(), name, body)
}

#[derive(Serialize)]
struct CiBody {
    design: DesignSpec,
    outcome: Outcome,
    spec: CiSpec,
    interval: CiPair,
}

fn ci(name: &str, flags: &Flags) -> Result<(), CliError> {
    let design = flags.design()?;
    let o = flags.outcome()?;
    let spec = flags.ci_spec()?;
    let interval = confidence_interval(&design, &o, &spec)?;
    match flags.format_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            w.write_record(["arm", "lower", "upper", "level", "conditional_replicates", "excluded"])?;
            for (k, (lo, hi)) in interval.bounds.iter().enumerate() {
                w.write_record([
                    (k + 1).to_string(),
                    num(*lo),
                    num(*hi),
                    num(spec.level),
                    interval.conditional_replicates.map_or(String::new(), |b| b.to_string()),
                    num(interval.excluded),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => write_json(
            flags.out.as_deref(),
            name,
            CiBody {
                design,
                outcome: o,
                spec,
                interval,
            },
        ),
    }
}

/// `sdd-25` or `opt-rr-50`: rule name, a dash, the horizon.
fn parse_table(preset: &str) -> Result<(Rule, usize), CliError> {
    let bad = || config(format!("--table '{preset}' should look like sdd-25 or opt-rr-50"));
    let (rule, n) = preset.rsplit_once('-').ok_or_else(bad)?;
    let n = n.parse().map_err(|_| bad())?;
    Ok((Rule::parse(rule, 1, 1)?, n))
}

#[derive(Serialize)]
struct StudyBody {
    design: DesignSpec,
    mode: &'static str,
    config: StudyConfig,
    rows: Vec<StudyCell>,
}

fn study(name: &str, flags: &Flags) -> Result<(), CliError> {
    if flags.mode.as_deref().is_some_and(|m| m != "exact") {
        return Err(config("study tables are computed in exact mode only"));
    }
    let design = match &flags.table {
        Some(preset) => {
            if flags.design.is_some() || flags.n.is_some() {
                return Err(config("give either --table or --design/--n, not both"));
            }
            let (rule, n) = parse_table(preset)?;
            DesignSpec::new(rule, n)?
        }
        None => flags.design()?,
    };
    let grid = match flags.optional_p()? {
        Some(p) => vec![p],
        None => default_grid(),
    };
    let config = StudyConfig {
        level: flags.level_or(0.975)?,
        ..StudyConfig::default()
    };
    let rows = study_table(&design, &grid, config)?;
    match flags.format_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            let mut header = vec!["design", "n", "mode", "seed"];
            header.extend(COLUMN_NAMES);
            header.extend(["excluded_mass", "error"]);
            w.write_record(&header)?;
            let label = design.label();
            for cell in &rows {
                let mut rec = vec![label.clone(), design.horizon.to_string(), "exact".into(), String::new()];
                match &cell.row {
                    Ok(row) => {
                        if flags.rounded {
                            let r = row.rounded();
                            rec.extend(r.iter().enumerate().map(|(j, v)| match j {
                                0 | 1 => format!("{v:.1}"),
                                7.. => format!("{v:.4}"),
                                _ => format!("{v:.2}"),
                            }));
                            rec.push(format!("{:.4}", row.excluded_mass));
                        } else {
                            rec.extend(row.columns().map(num));
                            rec.push(num(row.excluded_mass));
                        }
                        rec.push(String::new());
                    }
                    Err(e) => {
                        rec.extend([num(cell.p.p1()), num(cell.p.p2())]);
                        rec.extend(std::iter::repeat_n(String::new(), COLUMN_NAMES.len() - 1));
                        rec.push(e.clone());
                    }
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => write_json(
            flags.out.as_deref(),
            name,
            StudyBody {
                design,
                mode: "exact",
                config,
                rows,
            },
        ),
    }
}

fn figure(name: &str, flags: &Flags) -> Result<(), CliError> {
    let design = flags.design()?;
    let p = flags.p()?;
    let bins = releff_histogram(&design, &p)?;
    match flags.format_or(Format::Csv) {
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            w.write_record(["n1", "probability", "trace_half"])?;
            for b in &bins {
                w.write_record([b.n1.to_string(), num(b.probability), num(b.trace_half)])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Body<'a> {
                design: DesignSpec,
                p: ProbPair,
                bins: &'a [condinf::study::HistogramBin],
            }
            write_json(flags.out.as_deref(), name, Body { design, p, bins: &bins })
        }
    }
}

fn fluoxetine(name: &str, flags: &Flags) -> Result<(), CliError> {
    let defaults = FluoxetineConfig::default();
    let config = FluoxetineConfig {
        block_length: flags.block.unwrap_or(defaults.block_length),
        block_feeds_rule: flags.block_feeds.unwrap_or(defaults.block_feeds_rule),
        level: flags.level_or(defaults.level)?,
        ..defaults
    };
    let report = fluoxetine_case_study_with(config)?;
    match flags.format_or(Format::Json) {
        Format::Json => write_json(flags.out.as_deref(), name, &report),
        Format::Csv => {
            let mut w = csv_writer(flags.out.as_deref())?;
            w.write_record(["stratum", "quantity", "arm", "lower", "upper", "published_lower", "published_upper"])?;
            for s in &report.strata {
                for k in 0..2 {
                    let arm = (k + 1).to_string();
                    let point = |q: &str, v: f64, published: f64| {
                        [s.name.clone(), q.into(), arm.clone(), num(v), String::new(), num(published), String::new()]
                    };
                    let range = |q: &str, v: (f64, f64), published: (f64, f64)| {
                        [s.name.clone(), q.into(), arm.clone(), num(v.0), num(v.1), num(published.0), num(published.1)]
                    };
                    w.write_record(point("umle", s.umle.as_array()[k], s.published.umle[k]))?;
                    w.write_record(point("cmle", s.cmle.estimate.as_array()[k], s.published.cmle[k]))?;
                    w.write_record(range("uncond", s.uncond.bounds[k], s.published.uncond[k]))?;
                    w.write_record(range("cond", s.cond.bounds[k], s.published.cond[k]))?;
                }
            }
            w.flush()?;
            Ok(())
        }
    }
}
