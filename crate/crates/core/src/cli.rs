//! The `twonorm` command line.
//!
//! Exit codes: 0 when every outcome matched its expectation, 1 when some
//! probe outcome did not, 2 for usage and config errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::{Overrides, RunConfig};
use crate::error::Error;
use crate::norm::check_axioms;
use crate::probes::{ProbeReport, Status};
use crate::report::{config_digest, RunReport};
use crate::run;
use crate::theorems::{load_cases, run_case, run_published_examples, select_cases, FIXTURE_DIR_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twonorm", version, about = "Quasi-Cauchy sequences and continuity probes in 2-normed spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// TOML run configuration.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Seed for every sampled check.
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Replace the schedule tolerance.
    #[arg(long, global = true, value_name = "F")]
    pub epsilon: Option<f64>,
    /// Replace the schedule window.
    #[arg(long, global = true, value_name = "N:M", value_parser = parse_window)]
    pub window: Option<(u64, u64)>,
    /// Write per-index measured values as CSV (classify and probe).
    #[arg(long, global = true, value_name = "PATH")]
    pub trace: Option<PathBuf>,
    /// Directory of theorem fixtures.
    #[arg(long, global = true, value_name = "DIR", env = FIXTURE_DIR_ENV)]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the four 2-norm axioms on sampled inputs.
    Axioms,
    /// Classify sequences as convergent, Cauchy or quasi-Cauchy on a window.
    Classify,
    /// Run continuity probes on a function.
    Probe,
    /// Run theorem cases whose id matches a glob.
    Theorems {
        #[arg(default_value = "*")]
        selector: String,
    },
    /// Re-run the published examples and write the golden report.
    Reproduce,
}

fn parse_window(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected N:M, got `{s}`"))?;
    let a = a.trim().parse::<u64>().map_err(|e| format!("window start: {e}"))?;
    let b = b.trim().parse::<u64>().map_err(|e| format!("window end: {e}"))?;
    Ok((a, b))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: &Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn overrides(opts: &GlobalOpts) -> Overrides {
    Overrides { seed: opts.seed, epsilon: opts.epsilon, window: opts.window }
}

fn load_config(opts: &GlobalOpts, required: bool) -> Result<(RunConfig, String), Failure> {
    let text = match &opts.config {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None if required => return Err(Failure::Usage("this command needs --config PATH".into())),
        None => String::new(),
    };
    let cfg = RunConfig::from_toml(&text, &overrides(opts))?;
    Ok((cfg, text))
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    let opts = &cli.opts;
    if opts.trace.is_some() && !matches!(cli.command, Command::Classify | Command::Probe) {
        return Err(Failure::Usage("--trace applies to classify and probe".into()));
    }
    let ov = overrides(opts);
    let (report, out) = match &cli.command {
        Command::Axioms => {
            let (cfg, text) = load_config(opts, false)?;
            let axioms = check_axioms(&cfg.space, cfg.axiom_samples, cfg.seed, cfg.axiom_tolerance)?;
            let out = opts.out.clone().or(cfg.out);
            for a in &axioms.axioms {
                let line = format!("{:<5} axiom {} ({}) worst violation {:e}", if a.passed { "pass" } else { "fail" }, a.axiom, a.name, a.worst_violation);
                if out.is_none() {
                    eprintln!("{line}");
                } else {
                    println!("{line}");
                }
            }
            let mut report = RunReport::new("axioms", cfg.seed, config_digest([text.as_str()], &ov));
            report.axioms = Some(axioms);
            (report, out)
        }
        Command::Classify | Command::Probe => {
            let (cfg, text) = load_config(opts, true)?;
            let classify = matches!(cli.command, Command::Classify);
            if classify && cfg.sequences.is_empty() {
                return Err(Failure::Usage("config defines no [sequence.*] entries".into()));
            }
            let reports = if classify { run::classify(&cfg)? } else { run::probe(&cfg)? };
            if let Some(path) = &opts.trace {
                write_trace(path, &run::trace(&cfg)?)?;
            }
            let name = if classify { "classify" } else { "probe" };
            let mut report = RunReport::new(name, cfg.seed, config_digest([text.as_str()], &ov));
            report.reports = reports;
            (report, opts.out.clone().or(cfg.out))
        }
        Command::Theorems { selector } => {
            let cases = load_cases(opts.fixtures.as_deref(), &ov)?;
            let picked = select_cases(&cases, selector)?;
            let mut report = RunReport::new("theorems", opts.seed.unwrap_or(crate::config::DEFAULT_SEED), config_digest(picked.iter().map(|c| c.text.as_str()), &ov));
            for case in picked {
                report.reports.extend(run_case(case)?);
            }
            (report, opts.out.clone())
        }
        Command::Reproduce => {
            let seed = opts.seed.unwrap_or(crate::config::DEFAULT_SEED);
            let cases = load_cases(None, &Overrides::default())?;
            let sources = cases.iter().filter(|c| c.kind().starts_with("example-")).map(|c| c.text.as_str());
            let mut report = RunReport::new("reproduce", seed, config_digest(sources, &Overrides::default()));
            report.reports = run_published_examples()?;
            (report, opts.out.clone())
        }
    };
    summarize(&report.reports, out.is_none());
    match &out {
        Some(path) => report.write(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(report.to_json().as_bytes())?,
    }
    Ok(if report.as_expected() { EXIT_OK } else { EXIT_UNEXPECTED })
}

fn summarize(reports: &[ProbeReport], to_stderr: bool) {
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        let mut line = format!("{status:<12} {}", r.probe_name);
        if let Some(c) = &r.case_id {
            line.push_str(&format!(" [{c}]"));
        }
        if let Some(s) = &r.subject {
            line.push_str(&format!(" {s}"));
        }
        if !r.as_expected() {
            match r.expected {
                Some(e) => line.push_str(&format!("  UNEXPECTED (expected {e:?})")),
                None => line.push_str("  UNEXPECTED"),
            }
        }
        if to_stderr {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }
}

fn write_trace(path: &Path, rows: &[run::TraceRow]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    for row in rows {
        w.serialize(row).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
