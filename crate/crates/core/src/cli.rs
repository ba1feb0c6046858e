//! The `dha` command line. Each subcommand is a thin wrapper over the
//! library and returns a [`CommandOutcome`].
//!
//! Exit codes: 0 success, 1 a negative mathematical verdict, 2 bad usage or
//! input.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classification::{build_h_mu, extract_mu};
use crate::convert::{certificate_json, convert_and_verify, DEFAULT_DEGREE};
use crate::crossval::crossval;
use crate::error::{Error, Result};
use crate::format::{self, deformation_to_string, load_deformation, mu_to_string};
use crate::pbw::{check_pbw, CheckOptions};
use crate::rewrite::{RewriteSystem, DEFAULT_STEP_BUDGET};
use crate::scalars::FieldSpec;

pub const STEP_BUDGET_ENV: &str = "DHA_STEP_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "dha", version, about = "PBW deformations of skew group algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Conditions,
    Confluence,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the PBW property of a parameter file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Run the five conditions in characteristic 2 anyway.
        #[arg(long)]
        force_char2: bool,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a μ file into a parameter file.
    Build {
        #[arg(long)]
        mu: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover μ from a PBW parameter file.
    Extract {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a word to PBW normal form.
    NormalForm {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Convert to a λ = 0 presentation and certify the isomorphism.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        /// Write the converted parameter file here and the certificate
        /// next to it as `<stem>.certificate.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare both verdicts on seeded random samples.
    Crossval {
        #[arg(long)]
        n: usize,
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    /// One human-readable line.
    pub summary: String,
    /// Extra text printed after the summary.
    pub details: Option<String>,
    pub report: Option<serde_json::Value>,
    pub report_path: Option<PathBuf>,
}

impl CommandOutcome {
    fn new(exit_code: i32, summary: impl Into<String>) -> Self {
        Self {
            exit_code,
            summary: summary.into(),
            details: None,
            report: None,
            report_path: None,
        }
    }

    fn error(e: &Error) -> Self {
        let code = if matches!(e, Error::NotPbwInput) { 1 } else { 2 };
        let msg = match e {
            Error::Char2CheckerRefused => {
                "error: characteristic 2 is outside the range of the five-condition checker; \
                 use --method confluence (or --force-char2)"
                    .to_string()
            }
            other => format!("error: {other}"),
        };
        Self::new(code, msg)
    }

    /// Writes `report` to `path` when given.
    fn with_report(mut self, report: serde_json::Value, path: Option<&Path>) -> Result<Self> {
        if let Some(p) = path {
            std::fs::write(p, format::to_pretty(&report))?;
            self.report_path = Some(p.to_path_buf());
        }
        self.report = Some(report);
        Ok(self)
    }
}

fn step_budget() -> Result<u64> {
    match std::env::var(STEP_BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{STEP_BUDGET_ENV} must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_STEP_BUDGET),
    }
}

fn write_or_print(text: String, out: Option<&Path>, outcome: &mut CommandOutcome) -> Result<()> {
    match out {
        Some(p) => {
            std::fs::write(p, text)?;
            outcome.report_path = Some(p.to_path_buf());
        }
        None => outcome.details = Some(text.trim_end().to_string()),
    }
    Ok(())
}

pub fn cmd_check(input: &Path, method: Method, force_char2: bool, out: Option<&Path>) -> Result<CommandOutcome> {
    let d = load_deformation(input)?;
    let grp = d.group().clone();
    let conditions = match method {
        Method::Conditions | Method::Both => Some(check_pbw(&d, CheckOptions { force_char2 })?),
        Method::Confluence => None,
    };
    let confluence = match method {
        Method::Confluence | Method::Both => {
            Some(RewriteSystem::with_budget(d, step_budget()?).check_confluence()?)
        }
        Method::Conditions => None,
    };
    let mut report = serde_json::Map::new();
    let mut verdicts = Vec::new();
    let mut notes = Vec::new();
    if let Some(r) = &conditions {
        verdicts.push(r.is_pbw());
        report.insert("conditions".into(), r.to_json(&grp));
        if let Some(w) = r.witness() {
            notes.push(w.describe(&grp));
        }
    }
    if let Some(r) = &confluence {
        verdicts.push(r.confluent);
        report.insert("confluence".into(), r.to_json(&grp));
        if let Some(w) = &r.witness {
            notes.push(w.describe(&grp));
        }
    }
    let shown: Vec<String> = verdicts.iter().map(|v| v.to_string()).collect();
    let mut summary = format!("PBW: {}", shown.join("/"));
    let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
    if verdicts.len() == 2 {
        summary.push_str(if agree { ", verdicts agree" } else { ", verdicts DISAGREE" });
        report.insert("agree".into(), agree.into());
    }
    if !notes.is_empty() {
        summary.push_str(&format!(" ({})", notes.join("; ")));
    }
    let code = if verdicts.iter().all(|&v| v) && agree { 0 } else { 1 };
    CommandOutcome::new(code, summary).with_report(serde_json::Value::Object(report), out)
}

pub fn cmd_build(mu_path: &Path, out: Option<&Path>) -> Result<CommandOutcome> {
    let mu = format::parse_mu(&std::fs::read_to_string(mu_path)?)?;
    let d = build_h_mu(&mu)?;
    let mut outcome = CommandOutcome::new(0, format!("built H_mu for n = {} over {}", mu.n(), mu.field()));
    write_or_print(deformation_to_string(&d), out, &mut outcome)?;
    Ok(outcome)
}

pub fn cmd_extract(input: &Path, out: Option<&Path>) -> Result<CommandOutcome> {
    let d = load_deformation(input)?;
    let report = check_pbw(&d, CheckOptions::default())?;
    if !report.is_pbw() {
        let w = report.witness().expect("failing report has a witness");
        return Ok(CommandOutcome::new(
            1,
            format!("not PBW, nothing to extract ({})", w.describe(d.group())),
        ));
    }
    let mu = extract_mu(&d)?;
    let mut outcome = CommandOutcome::new(0, format!("extracted mu: c = {}", mu.c));
    write_or_print(mu_to_string(&mu), out, &mut outcome)?;
    Ok(outcome)
}

pub fn cmd_normal_form(input: &Path, word: &str) -> Result<CommandOutcome> {
    let d = load_deformation(input)?;
    let rs = RewriteSystem::with_budget(d, step_budget()?);
    let x = rs.parse(word)?;
    let nf = rs.normal_form(&x)?;
    let mut outcome = CommandOutcome::new(0, nf.display(rs.group()));
    if !rs.check_confluence()?.confluent {
        outcome.details = Some("warning: the system is not confluent, so this normal form depends on the reduction order".into());
    }
    Ok(outcome)
}

pub fn cmd_convert(input: &Path, degree: usize, out: Option<&Path>) -> Result<CommandOutcome> {
    let d = load_deformation(input)?;
    let (result, report) = convert_and_verify(&d, degree)?;
    let cert = certificate_json(&d, &result, &report);
    let code = if report.passed() { 0 } else { 1 };
    let summary = match &report.failure {
        None => format!("conversion certified through degree {degree}"),
        Some(f) => format!("conversion check failed: {f}"),
    };
    let mut outcome = CommandOutcome::new(code, summary);
    match out {
        Some(p) => {
            std::fs::write(p, deformation_to_string(&result.converted()))?;
            let cert_path = certificate_path(p);
            std::fs::write(&cert_path, format::to_pretty(&cert))?;
            outcome.report_path = Some(cert_path);
        }
        None => outcome.details = Some(format::to_pretty(&cert).trim_end().to_string()),
    }
    outcome.report = Some(cert);
    Ok(outcome)
}

/// `dir/name.json` → `dir/name.certificate.json`.
pub fn certificate_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.certificate.json"))
}

pub fn cmd_crossval(n: usize, characteristic: u64, samples: usize, seed: u64, out: Option<&Path>) -> Result<CommandOutcome> {
    let field = FieldSpec::new(characteristic)?;
    let report = crossval(n, field, samples, seed)?;
    let code = if report.all_agree() { 0 } else { 1 };
    CommandOutcome::new(code, report.summary()).with_report(report.to_json(), out)
}

pub fn execute(cli: &Cli) -> CommandOutcome {
    let result = match &cli.command {
        Command::Check {
            input,
            method,
            force_char2,
            out,
        } => cmd_check(input, *method, *force_char2, out.as_deref()),
        Command::Build { mu, out } => cmd_build(mu, out.as_deref()),
        Command::Extract { input, out } => cmd_extract(input, out.as_deref()),
        Command::NormalForm { input, word } => cmd_normal_form(input, word),
        Command::Convert { input, degree, out } => cmd_convert(input, *degree, out.as_deref()),
        Command::Crossval {
            n,
            characteristic,
            samples,
            seed,
            out,
        } => cmd_crossval(*n, *characteristic, *samples, *seed, out.as_deref()),
    };
    result.unwrap_or_else(|e| CommandOutcome::error(&e))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            CommandOutcome::new(code, e.to_string().trim_end().to_string())
        }
    }
}
