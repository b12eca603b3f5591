//! `riley`: Riley polynomials, real parabolic representations and
//! signatures of two-bridge knots.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use riley_core::json::PolyJson;
use riley_core::rational::{int, parse_rational, to_fraction_string};
use riley_core::real_roots::{count_real_roots, isolate_roots};
use riley_core::riley::{closed_form_params, riley_closed_form, riley_general, riley_parabolic};
use riley_core::signature::signature_two_bridge;
use riley_core::two_bridge::{family_presentation, schubert_word};
use riley_core::verifier::{
    emit_report, scan_conjecture, sweep_cross_validate, sweep_theorem1, sweep_theorem2, theorem2_default_x0,
    write_report, ReportFormat, TheoremRecord,
};
use riley_core::{DoubleTwist, Error, Family, KnotId, Rational};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "riley", version, about = "Riley polynomials and real parabolic representations of two-bridge knots")]
#[command(after_help = "Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 internal validation error.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normalized id, sign sequence and Schubert word of b(p,q)
    Knot(KnotArgs),
    /// Print the Riley polynomial of b(p,q), bivariate and at x = X
    Poly {
        #[command(flatten)]
        knot: KnotArgs,
        /// Value of the meridian trace x
        #[arg(long, value_parser = rational_arg, default_value = "2")]
        x: Rational,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the closed-form Riley polynomial of a double twist family
    Family {
        /// EE = J(2m,2n), EN = J(2m,-2n), OE = J(2m+1,2n), ON = J(2m+1,-2n)
        #[arg(value_parser = family_arg)]
        family: Family,
        #[arg(value_parser = clap::value_parser!(i64).range(1..))]
        m: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(1..))]
        n: i64,
        /// Value of the meridian trace x
        #[arg(long, value_parser = rational_arg, default_value = "2")]
        x: Rational,
    },
    /// Count the distinct real roots of Phi(x, y) in y
    Roots {
        #[command(flatten)]
        knot: KnotArgs,
        /// Value of the meridian trace x
        #[arg(long, value_parser = rational_arg, default_value = "2")]
        x: Rational,
        /// Also print isolating intervals of width at most 1/64
        #[arg(long)]
        isolate: bool,
    },
    /// Print the signature, even continued fraction and determinant of b(p,q)
    Signature(KnotArgs),
    /// Verify the theorems and the conjecture over parameter ranges
    #[command(subcommand)]
    Verify(Verify),
    /// Compare closed forms with the matrix-product construction
    Crosscheck {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        jobs: JobsArg,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Scan every two-bridge knot with p <= PMAX: real roots of Phi(2, y) >= |σ|/2
    Conjecture {
        /// Largest p to scan; an even value is rounded down
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        pmax: i64,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
        /// Report file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Exactly one / no real root for J(2m,2n) / J(2m,-2n) near x = 2
    Theorem1 {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// At least n-1 / n real roots for J(2m+1,2n) / J(2m+1,-2n)
    Theorem2 {
        #[command(flatten)]
        range: RangeArgs,
        /// Comma-separated values of x0 [default: 2,5/2,3]
        #[arg(long, value_parser = rational_arg, value_delimiter = ',')]
        x0: Vec<Rational>,
        #[command(flatten)]
        jobs: JobsArg,
    },
}

#[derive(Args, Debug)]
struct KnotArgs {
    /// Odd integer p >= 3
    #[arg(allow_negative_numbers = true)]
    p: i64,
    /// Integer q coprime to p
    #[arg(allow_negative_numbers = true)]
    q: i64,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    mmax: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    nmax: i64,
}

#[derive(Args, Debug)]
struct JobsArg {
    /// Worker threads [default: available parallelism]
    #[arg(long, env = "RILEY_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

impl JobsArg {
    fn get(&self) -> usize {
        match self.jobs {
            Some(j) => j as usize,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Jsonl,
    Csv,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn family_arg(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a subcommand that ran to completion.
enum Outcome {
    Pass,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { EXIT_INTERNAL } else { EXIT_USAGE })
        }
    }
}

fn knot(a: &KnotArgs) -> Result<KnotId, Error> {
    KnotId::new(a.p, a.q)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), msg: e.to_string() };
    match cli.command {
        Command::Knot(a) => {
            let k = knot(&a)?;
            let w = schubert_word(&k);
            writeln!(out, "knot: {k}").map_err(io)?;
            writeln!(out, "canonical: {}", k.canonical()).map_err(io)?;
            writeln!(out, "epsilon: {}", render::epsilons(&k.epsilons())).map_err(io)?;
            writeln!(out, "word: {w}").map_err(io)?;
            writeln!(out, "word (ascii): {}", w.to_ascii()).map_err(io)?;
        }
        Command::Poly { knot: a, x, json } => {
            let k = knot(&a)?;
            let phi = riley_general(&k)?;
            let special = phi.specialize(&x);
            if json {
                let v = PolyOutput {
                    knot: KnotOutput { p: k.p(), q: k.q() },
                    phi: PolyJson::from_bipoly(&phi.phi_xy),
                    x: to_fraction_string(&x),
                    specialized: PolyJson::from_y_poly(&special),
                };
                let line = serde_json::to_string(&v).expect("serializable");
                writeln!(out, "{line}").map_err(io)?;
            } else {
                writeln!(out, "Phi(x, y) = {}", render::bivariate(&phi.phi_xy)).map_err(io)?;
                writeln!(out, "Phi({}, y) = {}", render::rational(&x), render::in_y(&special)).map_err(io)?;
            }
        }
        Command::Family { family, m, n, x } => {
            let d = DoubleTwist::new(family, m, n)?;
            let params = closed_form_params(&d);
            let phi = riley_closed_form(&d);
            writeln!(out, "family: {family} {d} = {}", family_presentation(&d)).map_err(io)?;
            writeln!(out, "t = {}", render::bivariate(&params.t)).map_err(io)?;
            writeln!(out, "mu = {}", render::bivariate(&params.mu)).map_err(io)?;
            writeln!(out, "Phi(x, y) = {}", render::bivariate(&phi.phi_xy)).map_err(io)?;
            writeln!(out, "Phi({}, y) = {}", render::rational(&x), render::in_y(&phi.specialize(&x))).map_err(io)?;
        }
        Command::Roots { knot: a, x, isolate } => {
            let k = knot(&a)?;
            let f = if x == int(2) { riley_parabolic(&k)? } else { riley_general(&k)?.specialize(&x) };
            writeln!(out, "Phi({}, y) = {}", render::rational(&x), render::in_y(&f)).map_err(io)?;
            if f.is_constant() {
                writeln!(out, "real roots: 0").map_err(io)?;
            } else if isolate {
                let r = isolate_roots(&f)?;
                writeln!(out, "real roots: {}", r.total_real).map_err(io)?;
                for iv in render::intervals(&r) {
                    writeln!(out, "  {iv}").map_err(io)?;
                }
            } else {
                writeln!(out, "real roots: {}", count_real_roots(&f)?.total_real).map_err(io)?;
            }
        }
        Command::Signature(a) => {
            let k = knot(&a)?;
            let s = signature_two_bridge(&k)?;
            writeln!(out, "{}", render::signature(&s)).map_err(io)?;
        }
        Command::Verify(v) => return verify(v, &mut out),
        Command::Crosscheck { range, jobs } => {
            let results = sweep_cross_validate(range.mmax, range.nmax, jobs.get())?;
            let mismatches = results.iter().filter(|c| !c.equal()).count();
            for c in &results {
                writeln!(out, "{c}").map_err(io)?;
            }
            eprintln!("{} comparisons, {mismatches} mismatches", results.len());
            return Ok(if mismatches == 0 { Outcome::Pass } else { Outcome::Failed });
        }
    }
    Ok(Outcome::Pass)
}

fn verify(v: Verify, out: &mut dyn Write) -> Result<Outcome, Error> {
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), msg: e.to_string() };
    match v {
        Verify::Conjecture { pmax, format, out: dest, jobs } => {
            let pmax = if pmax % 2 == 0 {
                eprintln!("note: pmax {pmax} is even; scanning p <= {}", pmax - 1);
                pmax - 1
            } else {
                pmax
            };
            let format = match format {
                FormatArg::Jsonl => ReportFormat::Jsonl,
                FormatArg::Csv => ReportFormat::Csv,
            };
            let report = scan_conjecture(pmax, jobs.get())?;
            match &dest {
                Some(path) => emit_report(&report.records, format, path)?,
                None => write_report(&report.records, format, out).map_err(io)?,
            }
            let violations = report.violations().count();
            eprintln!(
                "scanned {} knots with p <= {pmax}: {} hold, {violations} violations, {} failures",
                report.records.len() + report.failures.len(),
                report.holds_count(),
                report.failures.len()
            );
            for r in report.violations() {
                eprintln!("counterexample candidate: {} (|σ| = {}, real roots = {})", r.knot, r.sigma_abs, r.real_roots);
            }
            for (k, e) in &report.failures {
                eprintln!("failed: {k}: {e}");
            }
            if let Some((_, e)) = report.failures.first() {
                return Err(e.clone());
            }
            Ok(if violations == 0 { Outcome::Pass } else { Outcome::Failed })
        }
        Verify::Theorem1 { range, jobs } => {
            let records = sweep_theorem1(range.mmax, range.nmax, jobs.get())?;
            theorem_output(&records, out)
        }
        Verify::Theorem2 { range, x0, jobs } => {
            let x0 = if x0.is_empty() { theorem2_default_x0() } else { x0 };
            let records = sweep_theorem2(range.mmax, range.nmax, &x0, jobs.get())?;
            theorem_output(&records, out)
        }
    }
}

fn theorem_output(records: &[TheoremRecord], out: &mut dyn Write) -> Result<Outcome, Error> {
    let io = |e: std::io::Error| Error::Io { path: "<stdout>".into(), msg: e.to_string() };
    for r in records {
        writeln!(out, "{r}").map_err(io)?;
    }
    let failed = records.iter().filter(|r| !r.holds).count();
    let unclaimed = records.iter().filter(|r| !r.in_range).count();
    eprintln!("{} checks, {failed} failed, {unclaimed} outside the theorem's range", records.len());
    Ok(if failed == 0 { Outcome::Pass } else { Outcome::Failed })
}

#[derive(Serialize)]
struct PolyOutput {
    knot: KnotOutput,
    phi: PolyJson,
    x: String,
    specialized: PolyJson,
}

#[derive(Serialize)]
struct KnotOutput {
    p: i64,
    q: i64,
}
