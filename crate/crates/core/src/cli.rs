//! Command-line front end. Every payload is JSON; reports go to stdout.
//!
//! Exit codes: 0 success, 1 verification failed (or a claimed solution was
//! ruled out), 2 malformed input or usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::equations::{diagnose, verify, EquationSpec, VerdictKind};
use crate::expfun::{ExpPoly, SampleConfig};
use crate::fixtures::{self, BranchSelect, FixtureReport};
use crate::growth::{estimate_order, OrderConfig};
use crate::solutions::ConstructRequest;
use crate::{SchemaTag, TAU_RES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "fermat-forge",
    version,
    about = "Construct and verify exponential-polynomial solutions of Fermat-type equations"
)]
pub struct Cli {
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 1729)]
    pub seed: u64,
    /// Sample points for numeric zero tests.
    #[arg(long, global = true, default_value_t = 200, value_parser = positive_usize)]
    pub samples: usize,
    /// Polydisc radius for numeric zero tests.
    #[arg(long, global = true, default_value_t = 1.5, value_parser = positive_f64)]
    pub radius: f64,
    /// Relative residual tolerance; fixtures use their own when omitted.
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// `all` or a 0-based branch index.
    #[arg(long, global = true, default_value = "all", value_parser = parse_branches)]
    pub branches: BranchSelect,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Fixture id for `reproduce`.
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Read the payload from this file instead of stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a solution bundle from `{"theorem": …, "params": …}`.
    Construct {
        /// Also verify the bundle; exit 1 if it fails.
        #[arg(long)]
        verify: bool,
    },
    /// Check `{"equation": …, "candidate": …}`.
    Verify,
    /// Classify an equation, optionally wrapped as `{"equation": …, "claims_solution": true}`.
    Diagnose,
    /// Estimate the growth order of an exponential polynomial.
    Order {
        #[arg(long, default_value_t = 2.0)]
        r_min: f64,
        #[arg(long, default_value_t = 20.0)]
        r_max: f64,
        #[arg(long, default_value_t = 12)]
        n_radii: usize,
        #[arg(long, default_value_t = 512)]
        samples_per_radius: usize,
        /// Write `(r, log log M)` rows to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run named fixtures and print a PASS/FAIL table.
    Reproduce {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// List fixture ids and exit.
        #[arg(long)]
        list: bool,
    },
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_branches(s: &str) -> Result<BranchSelect, String> {
    if s == "all" {
        return Ok(BranchSelect::All);
    }
    s.parse::<usize>().map(BranchSelect::Index).map_err(|_| format!("expected `all` or an index, got `{s}`"))
}

#[derive(Deserialize)]
struct VerifyInput {
    equation: EquationSpec,
    candidate: ExpPoly,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DiagnoseInput {
    Wrapped {
        equation: EquationSpec,
        #[serde(default)]
        claims_solution: bool,
    },
    Bare(EquationSpec),
}

#[derive(Serialize)]
struct ErrorReport {
    schema: SchemaTag,
    error: String,
}

/// Failure before a report could be produced.
struct Abort {
    code: i32,
    message: String,
}

impl Abort {
    fn malformed(message: impl Into<String>) -> Self {
        Abort { code: 2, message: message.into() }
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Abort> {
    serde_json::from_str(text)
        .map_err(|e| Abort::malformed(format!("malformed input at line {}, column {}: {e}", e.line(), e.column())))
}

struct Io<'a> {
    input: Option<PathBuf>,
    stdin: &'a mut dyn Read,
    out: String,
}

impl Io<'_> {
    fn read(&mut self) -> Result<String, Abort> {
        let mut text = String::new();
        match &self.input {
            Some(p) => {
                text = std::fs::read_to_string(p)
                    .map_err(|e| Abort::malformed(format!("cannot read {}: {e}", p.display())))?
            }
            None => {
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Abort::malformed(format!("cannot read stdin: {e}")))?;
            }
        }
        Ok(text)
    }

    fn json<T: Serialize>(&mut self, v: &T) {
        self.out.push_str(&serde_json::to_string_pretty(v).expect("reports serialise"));
        self.out.push('\n');
    }
}

/// Parse `args` (including the program name) and run.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdin = std::io::stdin();
    let (code, out, err) = run_with_io(args, &mut stdin);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    code
}

/// Run with an explicit stdin; returns `(exit code, stdout, stderr)`.
pub fn run_with_io<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let mut io = Io { input: cli.input.clone(), stdin, out: String::new() };
    match run(&cli, &mut io) {
        Ok(code) => (code, io.out, String::new()),
        Err(a) => {
            if cli.output == OutputFormat::Json {
                io.json(&ErrorReport { schema: SchemaTag, error: a.message.clone() });
            }
            (a.code, io.out, format!("error: {}\n", a.message))
        }
    }
}

fn sample_config(cli: &Cli, tol: f64) -> SampleConfig {
    SampleConfig { samples: cli.samples, seed: cli.seed, radius: cli.radius, tol }
}

fn run(cli: &Cli, io: &mut Io) -> Result<i32, Abort> {
    let cfg = sample_config(cli, cli.tol.unwrap_or(TAU_RES));
    match &cli.command {
        Command::Construct { verify } => {
            let req: ConstructRequest = parse(&io.read()?)?;
            let bundle = req.construct().map_err(|e| Abort { code: 1, message: e.to_string() })?;
            let report = if *verify {
                Some(bundle.verify(&cfg).map_err(|e| Abort { code: 1, message: e.to_string() })?)
            } else {
                None
            };
            match cli.output {
                OutputFormat::Json => io.json(&bundle),
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "family {}", bundle.theorem);
                    for (k, v) in &bundle.derived {
                        let _ = writeln!(io.out, "  {k} = {v}");
                    }
                    for c in &bundle.checks {
                        let _ = writeln!(
                            io.out,
                            "  check {}: residual {:.3e} ({})",
                            c.name,
                            c.residual,
                            if c.holds { "holds" } else { "fails" }
                        );
                    }
                }
            }
            if let Some(r) = report {
                match cli.output {
                    OutputFormat::Json => io.json(&r),
                    OutputFormat::Text => {
                        let _ = writeln!(
                            io.out,
                            "{} {} max_rel_residual {:.3e}",
                            pass(r.passed),
                            r.equation,
                            r.max_rel_residual
                        );
                    }
                }
                return Ok(if r.passed { 0 } else { 1 });
            }
            Ok(0)
        }
        Command::Verify => {
            let input: VerifyInput = parse(&io.read()?)?;
            let r = verify(&input.equation, &input.candidate, &cfg).map_err(|e| Abort::malformed(e.to_string()))?;
            match cli.output {
                OutputFormat::Json => io.json(&r),
                OutputFormat::Text => {
                    let _ = writeln!(
                        io.out,
                        "{} {} certificate {:?} max_rel_residual {:.3e} over {} points",
                        pass(r.passed),
                        r.equation,
                        r.certificate,
                        r.max_rel_residual,
                        r.n_points
                    );
                    if let Some(w) = &r.witness {
                        let _ = writeln!(io.out, "witness {w:?}");
                    }
                }
            }
            Ok(if r.passed { 0 } else { 1 })
        }
        Command::Diagnose => {
            let (spec, claims) = match parse::<DiagnoseInput>(&io.read()?)? {
                DiagnoseInput::Wrapped { equation, claims_solution } => (equation, claims_solution),
                DiagnoseInput::Bare(e) => (e, false),
            };
            let v = diagnose(&spec);
            match cli.output {
                OutputFormat::Json => io.json(&v),
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "{:?} [{}]: {}", v.kind, v.family, v.reason);
                    if let Some(c) = &v.certificate {
                        let _ = writeln!(io.out, "  {}", c.line);
                    }
                }
            }
            Ok(if claims && v.kind == VerdictKind::NoFiniteOrderSolution { 1 } else { 0 })
        }
        Command::Order { r_min, r_max, n_radii, samples_per_radius, csv } => {
            let f: ExpPoly = parse(&io.read()?)?;
            let ocfg = OrderConfig {
                r_min: *r_min,
                r_max: *r_max,
                n_radii: *n_radii,
                samples_per_radius: *samples_per_radius,
                seed: cli.seed,
            };
            let est = estimate_order(&f, &ocfg).map_err(|e| Abort::malformed(e.to_string()))?;
            if let Some(p) = csv {
                std::fs::write(p, est.to_csv())
                    .map_err(|e| Abort { code: 1, message: format!("cannot write {}: {e}", p.display()) })?;
            }
            match cli.output {
                OutputFormat::Json => io.json(&est),
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "structural order {}, numeric slope {:.4}", est.structural, est.numeric);
                }
            }
            Ok(0)
        }
        Command::Reproduce { id, all, list } => {
            if *list {
                for fx in fixtures::registry() {
                    let _ = writeln!(io.out, "{:<18} {}", fx.id, fx.source);
                }
                return Ok(0);
            }
            let chosen = match (id.as_ref().or(cli.fixture.as_ref()), all) {
                (_, true) => fixtures::registry(),
                (Some(id), false) => {
                    vec![fixtures::find(id).ok_or_else(|| Abort::malformed(format!("unknown fixture `{id}`")))?]
                }
                (None, false) => return Err(Abort::malformed("give a fixture id or --all")),
            };
            let reports: Vec<FixtureReport> = chosen
                .iter()
                .map(|fx| fixtures::run(fx, &sample_config(cli, cli.tol.unwrap_or(fx.tol)), cli.branches))
                .collect();
            match cli.output {
                OutputFormat::Json => io.json(&reports),
                OutputFormat::Text => io.out.push_str(&table(&reports)),
            }
            Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
        }
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// One row per branch, then one summary row per fixture.
pub fn table(reports: &[FixtureReport]) -> String {
    let mut s = String::new();
    let _ =
        writeln!(s, "{:<18} {:<34} {:<16} {:<9} {:>10}  result", "fixture", "branch", "constructor", "cert", "max_rel");
    for r in reports {
        for b in &r.branches {
            let cert = b.certificate.map(|c| format!("{c:?}").to_lowercase()).unwrap_or_else(|| "-".into());
            let res = b.max_rel_residual.map(|x| format!("{x:.2e}")).unwrap_or_else(|| "-".into());
            let _ = write!(
                s,
                "{:<18} {:<34} {:<16} {:<9} {:>10}  {}",
                r.id,
                b.label,
                b.constructor,
                cert,
                res,
                pass(b.passed)
            );
            if let Some(e) = &b.error {
                let _ = write!(s, " ({e})");
            } else if let Some(c) = b.checks.iter().find(|c| c.enforced && !c.holds) {
                let _ = write!(s, " (check `{}` off by {:.2e})", c.name, c.residual);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{:<18} {}", r.id, pass(r.passed));
    }
    s
}
