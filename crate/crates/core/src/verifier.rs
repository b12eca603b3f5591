//! Checks of the real-root theorems for double twist knots and of the
//! signature bound for two-bridge knots, with report output.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::bipoly::{eval_bi, BiPoly};
use crate::chebyshev::cheb_poly;
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::real_roots::{count_in_interval, count_real_roots};
use crate::riley::{riley_closed_form, riley_general, riley_parabolic};
use crate::signature::signature_two_bridge;
use crate::two_bridge::{canonical_knots, family_presentation, DoubleTwist, Family, KnotId};

pub const FLAG_COUNTEREXAMPLE: &str = "counterexample-candidate";
pub const FLAG_ROOT_AT_TWO: &str = "root-at-y=2";

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureRecord {
    pub knot: KnotId,
    pub sigma_abs: u64,
    pub parabolic_degree: usize,
    /// Distinct real roots of the parabolic Riley polynomial.
    pub real_roots: usize,
    pub holds: bool,
    pub timing_ms: f64,
    pub flags: Vec<String>,
}

/// Real roots of `Phi(2, y)` against `|sigma| / 2`.
pub fn check_conjecture(k: &KnotId) -> Result<ConjectureRecord> {
    let start = Instant::now();
    let phi = riley_parabolic(k)?;
    let sig = signature_two_bridge(k)?;
    let real_roots = count_real_roots(&phi)?.total_real;
    let holds = 2 * real_roots as u64 >= sig.sigma_abs;
    let mut flags = Vec::new();
    if phi.eval(&int(2)).is_zero() {
        flags.push(FLAG_ROOT_AT_TWO.to_string());
    }
    if !holds {
        flags.push(FLAG_COUNTEREXAMPLE.to_string());
    }
    Ok(ConjectureRecord {
        knot: *k,
        sigma_abs: sig.sigma_abs,
        parabolic_degree: phi.degree().unwrap_or(0),
        real_roots,
        holds,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
        flags,
    })
}

#[derive(Debug, Default)]
pub struct ScanReport {
    /// Sorted by `p`, then `q`.
    pub records: Vec<ConjectureRecord>,
    pub failures: Vec<(KnotId, Error)>,
}

impl ScanReport {
    pub fn holds_count(&self) -> usize {
        self.records.iter().filter(|r| r.holds).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &ConjectureRecord> {
        self.records.iter().filter(|r| !r.holds)
    }
}

/// Every canonical knot with `p <= p_max`, checked on `jobs` threads.
pub fn scan_conjecture(p_max: i64, jobs: usize) -> Result<ScanReport> {
    let knots = canonical_knots(p_max);
    let results: Vec<Result<ConjectureRecord>> = run_parallel(jobs, || {
        knots.par_iter().map(check_conjecture).collect()
    })?;
    let mut report = ScanReport::default();
    for (k, r) in knots.into_iter().zip(results) {
        match r {
            Ok(rec) => report.records.push(rec),
            Err(e) => report.failures.push((k, e)),
        }
    }
    Ok(report)
}

fn run_parallel<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// What a theorem predicts at a given `x0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    ExactlyOne,
    Zero,
    AtLeast(usize),
    /// `x0` is outside the theorem's range.
    NoClaim,
}

impl Expectation {
    pub fn admits(self, observed: usize) -> bool {
        match self {
            Expectation::ExactlyOne => observed == 1,
            Expectation::Zero => observed == 0,
            Expectation::AtLeast(n) => observed >= n,
            Expectation::NoClaim => true,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::ExactlyOne => write!(f, "exactly 1"),
            Expectation::Zero => write!(f, "0"),
            Expectation::AtLeast(n) => write!(f, ">= {n}"),
            Expectation::NoClaim => write!(f, "no claim"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRecord {
    pub family: DoubleTwist,
    pub x0: Rational,
    pub in_range: bool,
    pub expected: Expectation,
    pub observed_roots: usize,
    pub holds: bool,
}

impl fmt::Display for TheoremRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} m={} n={} x0={}: in_range={} expected {} observed {} {}",
            self.family.family,
            self.family,
            self.family.m,
            self.family.n,
            self.x0,
            self.in_range,
            self.expected,
            self.observed_roots,
            if self.holds { "ok" } else { "FAIL" }
        )
    }
}

/// Distinct real roots of the closed-form polynomial at `x = x0`.
fn closed_form_roots(d: &DoubleTwist, x0: &Rational) -> Result<usize> {
    let f = eval_bi(&riley_closed_form(d).phi_xy, x0);
    Ok(count_real_roots(&f)?.total_real)
}

fn theorem_record(d: DoubleTwist, x0: &Rational, in_range: bool, claim: Expectation) -> Result<TheoremRecord> {
    let expected = if in_range { claim } else { Expectation::NoClaim };
    let observed_roots = closed_form_roots(&d, x0)?;
    Ok(TheoremRecord {
        family: d,
        x0: x0.clone(),
        in_range,
        expected,
        observed_roots,
        holds: expected.admits(observed_roots),
    })
}

/// `4 - 1/(mn) < x0^2 <= 4`, compared exactly.
pub fn theorem1_in_range(m: i64, n: i64, x0: &Rational) -> bool {
    let sq = x0 * x0;
    sq > int(4) - frac(1, m * n) && sq <= int(4)
}

/// Both parts of the first theorem at one `x0`: the even-even family has
/// exactly one real root and the even-negative family none.
pub fn check_theorem1(m: i64, n: i64, x0: &Rational) -> Result<(TheoremRecord, TheoremRecord)> {
    let in_range = theorem1_in_range(m, n, x0);
    Ok((
        theorem_record(DoubleTwist::new(Family::EE, m, n)?, x0, in_range, Expectation::ExactlyOne)?,
        theorem_record(DoubleTwist::new(Family::EN, m, n)?, x0, in_range, Expectation::Zero)?,
    ))
}

/// `|x0| >= 2 cos(pi / (4m + 2))`, decided exactly.
///
/// The bound is the largest root of `S_(4m+1)` and is irrational, so it
/// never equals `|x0|`. For `|x0| < 2` the inequality holds iff no root of
/// `S_(4m+1)` lies above `|x0|`; all its roots are below 2.
pub fn theorem2_in_range(m: i64, x0: &Rational) -> Result<bool> {
    let a = num_traits::Signed::abs(x0);
    if a >= int(2) {
        return Ok(true);
    }
    let s = cheb_poly(4 * m + 1);
    if s.eval(&a).is_zero() {
        // a rational root of S_(4m+1) is 0 or 1, both below the bound
        return Ok(false);
    }
    Ok(count_in_interval(&s, &a, &int(3))? == 0)
}

/// Both parts of the second theorem at one `x0`: at least `n - 1` real
/// roots for the odd-even family and at least `n` for odd-negative.
pub fn check_theorem2(m: i64, n: i64, x0: &Rational) -> Result<(TheoremRecord, TheoremRecord)> {
    let in_range = theorem2_in_range(m, x0)?;
    let n_us = n as usize;
    Ok((
        theorem_record(DoubleTwist::new(Family::OE, m, n)?, x0, in_range, Expectation::AtLeast(n_us - 1))?,
        theorem_record(DoubleTwist::new(Family::ON, m, n)?, x0, in_range, Expectation::AtLeast(n_us))?,
    ))
}

/// Default `x0` values for the first theorem: `2` and `2 - 1/(16mn)`.
pub fn theorem1_grid(m: i64, n: i64) -> Vec<Rational> {
    vec![int(2), int(2) - frac(1, 16 * m * n)]
}

pub fn theorem2_default_x0() -> Vec<Rational> {
    vec![int(2), frac(5, 2), int(3)]
}

pub fn sweep_theorem1(m_max: i64, n_max: i64, jobs: usize) -> Result<Vec<TheoremRecord>> {
    let cases: Vec<(i64, i64, Rational)> = grid(m_max, n_max)
        .flat_map(|(m, n)| theorem1_grid(m, n).into_iter().map(move |x| (m, n, x)))
        .collect();
    sweep(cases, jobs, check_theorem1)
}

pub fn sweep_theorem2(m_max: i64, n_max: i64, x0s: &[Rational], jobs: usize) -> Result<Vec<TheoremRecord>> {
    let cases: Vec<(i64, i64, Rational)> = grid(m_max, n_max)
        .flat_map(|(m, n)| x0s.iter().map(move |x| (m, n, x.clone())))
        .collect();
    sweep(cases, jobs, check_theorem2)
}

fn grid(m_max: i64, n_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=m_max).flat_map(move |m| (1..=n_max).map(move |n| (m, n)))
}

type TheoremCheck = fn(i64, i64, &Rational) -> Result<(TheoremRecord, TheoremRecord)>;

fn sweep(cases: Vec<(i64, i64, Rational)>, jobs: usize, check: TheoremCheck) -> Result<Vec<TheoremRecord>> {
    let pairs: Result<Vec<_>> = run_parallel(jobs, || cases.par_iter().map(|(m, n, x)| check(*m, *n, x)).collect())?;
    Ok(pairs?.into_iter().flat_map(|(a, b)| [a, b]).collect())
}

/// Closed form against the matrix product for one double twist knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub family: DoubleTwist,
    pub knot: KnotId,
    /// `(y-degree, x-degree, closed form, matrix product)` for every
    /// coefficient that differs.
    pub differences: Vec<(usize, usize, Rational, Rational)>,
}

impl CrossValidation {
    pub fn equal(&self) -> bool {
        self.differences.is_empty()
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} as {}: ", self.family.family, self.family, self.knot)?;
        if self.equal() {
            return write!(f, "equal");
        }
        write!(f, "{} coefficients differ", self.differences.len())?;
        for (j, i, a, b) in &self.differences {
            write!(f, "\n  y^{j} x^{i}: closed form {a}, matrix product {b}")?;
        }
        Ok(())
    }
}

/// Compares normalized polynomials for the presentation the family's
/// Schubert word comes from.
pub fn cross_validate(d: &DoubleTwist) -> Result<CrossValidation> {
    let knot = family_presentation(d);
    let closed = riley_closed_form(d).phi_xy;
    let general = riley_general(&knot)?.phi_xy;
    Ok(CrossValidation { family: *d, knot, differences: coefficient_diff(&closed, &general) })
}

fn coefficient_diff(a: &BiPoly, b: &BiPoly) -> Vec<(usize, usize, Rational, Rational)> {
    let rows = a.y_coeffs().len().max(b.y_coeffs().len());
    let mut out = Vec::new();
    for j in 0..rows {
        let (ra, rb) = (a.y_coeff(j), b.y_coeff(j));
        let cols = ra.coeffs().len().max(rb.coeffs().len());
        for i in 0..cols {
            let (ca, cb) = (ra.coeff(i), rb.coeff(i));
            if ca != cb {
                out.push((j, i, ca, cb));
            }
        }
    }
    out
}

pub fn sweep_cross_validate(m_max: i64, n_max: i64, jobs: usize) -> Result<Vec<CrossValidation>> {
    let cases: Vec<DoubleTwist> = Family::ALL
        .iter()
        .flat_map(|&f| grid(m_max, n_max).map(move |(m, n)| DoubleTwist { family: f, m, n }))
        .collect();
    run_parallel(jobs, || cases.par_iter().map(cross_validate).collect())?
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown report format {s:?} (expected jsonl or csv)"))),
        }
    }
}

#[derive(Serialize)]
struct KnotRow {
    p: i64,
    q: i64,
}

/// One report line. Timing is left out so reports are reproducible.
#[derive(Serialize)]
struct ReportRow<'a> {
    knot: KnotRow,
    sigma_abs: u64,
    degree: usize,
    real_roots: usize,
    holds: bool,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    flags: &'a [String],
}

pub const CSV_HEADER: &str = "p,q,sigma_abs,degree,real_roots,holds,flags";

/// Writes one line per record; CSV output starts with [`CSV_HEADER`] and
/// joins flags with `;`.
pub fn write_report(records: &[ConjectureRecord], format: ReportFormat, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for r in records {
                let row = ReportRow {
                    knot: KnotRow { p: r.knot.p(), q: r.knot.q() },
                    sigma_abs: r.sigma_abs,
                    degree: r.parabolic_degree,
                    real_roots: r.real_roots,
                    holds: r.holds,
                    flags: &r.flags,
                };
                serde_json::to_writer(&mut *out, &row)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER.split(','))?;
            for r in records {
                w.write_record([
                    r.knot.p().to_string(),
                    r.knot.q().to_string(),
                    r.sigma_abs.to_string(),
                    r.parabolic_degree.to_string(),
                    r.real_roots.to_string(),
                    r.holds.to_string(),
                    r.flags.join(";"),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn emit_report(records: &[ConjectureRecord], format: ReportFormat, destination: &Path) -> Result<()> {
    let io_err = |e: std::io::Error| Error::Io { path: destination.display().to_string(), msg: e.to_string() };
    let file = std::fs::File::create(destination).map_err(io_err)?;
    let mut w = std::io::BufWriter::new(file);
    write_report(records, format, &mut w).map_err(io_err)?;
    w.flush().map_err(io_err)
}
