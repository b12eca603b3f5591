//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are
//! always printed.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use riley_core::bipoly::eval_bi;
use riley_core::chebyshev::{cheb_diff, cheb_eval, cheb_poly};
use riley_core::rational::{frac, int};
use riley_core::real_roots::count_real_roots;
use riley_core::riley::{closed_form_params, riley_general, riley_parabolic};
use riley_core::signature::{signature_family, signature_two_bridge};
use riley_core::two_bridge::{canonical_knots, epsilon, epsilon_fast, family_to_pq};
use riley_core::verifier::{check_theorem1, check_theorem2, cross_validate, theorem1_in_range, theorem2_in_range};
use riley_core::{BiPoly, DoubleTwist, Family, KnotId, UniPoly};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dt(f: Family, m: i64, n: i64) -> DoubleTwist {
    DoubleTwist::new(f, m, n).expect("m, n >= 1")
}

fn real_roots(f: &UniPoly) -> usize {
    count_real_roots(f).expect("nonzero").total_real
}

fn theorem1_part(ee: bool) -> Outcome {
    let mut checks = 0;
    for m in 1..=5 {
        for n in 1..=5 {
            for x0 in [int(2), int(2) - frac(1, 16 * m * n)] {
                ensure(theorem1_in_range(m, n, &x0), || format!("x0 = {x0} not certified for m={m} n={n}"))?;
                let (a, b) = check_theorem1(m, n, &x0).map_err(|e| e.to_string())?;
                let r = if ee { a } else { b };
                let want = if ee { 1 } else { 0 };
                ensure(r.in_range && r.observed_roots == want, || format!("{r}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact counts"))
}

fn criterion_1() -> Outcome {
    theorem1_part(true)
}

fn criterion_2() -> Outcome {
    theorem1_part(false)
}

fn criterion_3() -> Outcome {
    let mut checks = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            for x0 in [int(2), frac(5, 2), int(3)] {
                ensure(theorem2_in_range(m, &x0).unwrap_or(false), || format!("x0 = {x0} not in range"))?;
                let (oe, on) = check_theorem2(m, n, &x0).map_err(|e| e.to_string())?;
                ensure(oe.observed_roots as i64 >= n - 1, || format!("{oe}"))?;
                ensure(on.observed_roots as i64 >= n, || format!("{on}"))?;
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} lower bounds"))
}

/// Canonical `(p, q)` pairs by brute force: `q` is canonical when it is not
/// larger than its inverse mod `p`.
fn brute_force_canonical(p_max: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for p in (3..=p_max).step_by(2) {
        for q in 1..p {
            if let Some(inv) = (1..p).find(|v| (q * v) % p == 1) {
                if q <= inv {
                    out.insert((p, q));
                }
            }
        }
    }
    out
}

fn run_scan(out: &Path, jobs: Option<&str>) -> Result<Duration, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_riley"));
    cmd.args(["verify", "conjecture", "--pmax", "99", "--out"]).arg(out);
    if let Some(j) = jobs {
        cmd.args(["--jobs", j]);
    }
    let start = Instant::now();
    let status = cmd.output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(status.status.success(), || {
        format!("exit {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr))
    })?;
    Ok(elapsed)
}

fn criterion_4(dir: &Path) -> Outcome {
    let path = dir.join("scan.jsonl");
    let elapsed = run_scan(&path, None)?;
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let p = v["knot"]["p"].as_i64().ok_or("missing p")?;
        let q = v["knot"]["q"].as_i64().ok_or("missing q")?;
        ensure(v["holds"] == serde_json::Value::Bool(true), || format!("b({p},{q}) does not hold"))?;
        ensure(v["degree"].as_i64() == Some((p - 1) / 2), || format!("b({p},{q}) has degree {}", v["degree"]))?;
        ensure(seen.insert((p, q)), || format!("b({p},{q}) repeated"))?;
    }
    let expected = brute_force_canonical(99);
    ensure(seen == expected, || format!("{} records, expected {}", seen.len(), expected.len()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} records, all hold, {:.1}s", seen.len(), elapsed.as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let mut checks = 0;
    for f in Family::ALL {
        for m in 1..=3 {
            for n in 1..=3 {
                let cv = cross_validate(&dt(f, m, n)).map_err(|e| e.to_string())?;
                ensure(cv.equal(), || format!("{cv}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact polynomial equalities"))
}

fn criterion_6() -> Outcome {
    for f in Family::ALL {
        for m in 1..=6 {
            for n in 1..=6 {
                let d = dt(f, m, n);
                let s = signature_two_bridge(&family_to_pq(&d)).map_err(|e| e.to_string())?;
                ensure(s.sigma_abs as i64 == signature_family(&d).abs(), || {
                    format!("{f} m={m} n={n}: |σ| = {}, table {}", s.sigma_abs, signature_family(&d))
                })?;
            }
        }
    }
    let knots = canonical_knots(99);
    for k in &knots {
        let s = signature_two_bridge(k).map_err(|e| e.to_string())?;
        ensure(s.det.magnitude().to_string() == k.p().to_string(), || format!("{k}: det {}", s.det))?;
    }
    Ok(format!("144 family signatures, {} determinants", knots.len()))
}

fn float_eval(p: &UniPoly, z: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| {
        acc * z + c.numer().to_string().parse::<f64>().unwrap() / c.denom().to_string().parse::<f64>().unwrap()
    })
}

fn criterion_7() -> Outcome {
    let z = UniPoly::var();
    for k in 1..=20 {
        let (a, b) = (cheb_poly(k), cheb_poly(k - 1));
        let lhs = &(&(&a * &a) + &(&b * &b)) - &(&(&z * &a) * &b);
        ensure(lhs == UniPoly::one(), || format!("S_k^2 + S_(k-1)^2 - z S_k S_(k-1) != 1 at k={k}"))?;
    }
    for k in 1..=30i64 {
        for num in -40..=40 {
            let v = cheb_eval(k - 1, &frac(num, 20));
            ensure(v.numer().magnitude() <= &(v.denom().magnitude() * k as u64), || format!("|S_(k-1)| > k at k={k}"))?;
        }
    }
    let pi = std::f64::consts::PI;
    for k in 1..=10i64 {
        let (s, d) = (cheb_poly(k), cheb_diff(k).map_err(|e| e.to_string())?);
        for j in 1..=k {
            let r1 = 2.0 * (j as f64 * pi / (k + 1) as f64).cos();
            let r2 = 2.0 * ((2 * j - 1) as f64 * pi / (2 * k + 1) as f64).cos();
            ensure(float_eval(&s, r1).abs() < 1e-9, || format!("S_{k} at 2cos({j}pi/{})", k + 1))?;
            ensure(float_eval(&d, r2).abs() < 1e-9, || format!("S_{k} - S_{} at root {j}", k - 1))?;
        }
    }

    let x2 = BiPoly::x().pow(2);
    let c = |v: i64| BiPoly::constant(int(v));
    let shifted = &(&BiPoly::y() + &c(2)) - &x2;
    let s_y = |k: i64| BiPoly::from_y(&cheb_poly(k));
    for m in 1..=4 {
        for n in 1..=4 {
            let ee = closed_form_params(&dt(Family::EE, m, n));
            let lhs = &(&ee.mu.pow(2) + &c(1)) - &(&ee.mu * &ee.t);
            let rhs = &(&shifted * &s_y(m - 1).pow(2)) * &(&(&ee.t + &c(2)) - &x2);
            ensure(lhs == rhs, || format!("mu^2 + 1 - mu t factorization at m={m} n={n}"))?;

            let at_two = ee.phi().eval_y(&int(2));
            let want = &UniPoly::one() - &UniPoly::from_ints(&[4 * m * n, 0, -m * n]);
            ensure(at_two == want, || format!("Phi(x, 2) = {at_two:?} at m={m} n={n}"))?;

            let on = closed_form_params(&dt(Family::ON, m, n)).phi();
            ensure(on.eval_y_poly(&UniPoly::from_ints(&[-2, 0, 1])) == UniPoly::one(), || {
                format!("Phi(x, x^2 - 2) != 1 for the odd-negative family at m={m} n={n}")
            })?;
        }
        let oe = closed_form_params(&dt(Family::OE, m, 1));
        let diff = &s_y(m) - &s_y(m - 1);
        ensure(&c(2) - &oe.t == &shifted * &diff.pow(2), || format!("2 - t identity at m={m}"))?;
    }
    Ok("Chebyshev properties, factorization, 2 - t, boundary value, anchor".into())
}

fn criterion_8() -> Outcome {
    let mut checks = 0;
    for f in Family::ALL {
        for m in 1..=10 {
            for n in 1..=10 {
                let d = dt(f, m, n);
                let (p, q) = d.pq();
                for j in 1..p {
                    let fast = epsilon_fast(&d, j).map_err(|e| e.to_string())?;
                    let slow = epsilon(p, q, j).map_err(|e| e.to_string())?;
                    ensure(fast == slow, || format!("{f} m={m} n={n} j={j}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} signs"))
}

fn criterion_9() -> Outcome {
    let knot = |p, q| KnotId::new(p, q).expect("valid");
    let trefoil = riley_general(&knot(3, 1)).map_err(|e| e.to_string())?.phi_xy;
    let expected = BiPoly::from_terms(&[(1, 2, 0), (-1, 0, 0), (-1, 0, 1)]);
    ensure(trefoil == expected || trefoil == -&expected, || format!("b(3,1): {trefoil:?}"))?;
    ensure(eval_bi(&trefoil, &int(2)) == UniPoly::from_ints(&[-3, 1]), || "b(3,1) at x=2".into())?;
    let f52 = riley_parabolic(&knot(5, 2)).map_err(|e| e.to_string())?;
    ensure(f52 == UniPoly::from_ints(&[3, -3, 1]), || format!("b(5,2): {f52:?}"))?;
    let f75 = riley_parabolic(&knot(7, 5)).map_err(|e| e.to_string())?;
    ensure(f75 == UniPoly::from_ints(&[-1, 2, -3, 1]), || format!("b(7,5): {f75:?}"))?;
    ensure(real_roots(&f52) == 0 && real_roots(&f75) == 1, || "root counts".into())?;
    Ok("b(3,1), b(5,2), b(7,5)".into())
}

fn criterion_10(dir: &Path) -> Outcome {
    let first = dir.join("scan.jsonl");
    let again = dir.join("again.jsonl");
    let single = dir.join("single.jsonl");
    run_scan(&again, None)?;
    run_scan(&single, Some("1"))?;
    let read = |p: &Path| std::fs::read(p).map_err(|e| e.to_string());
    let (a, b, c) = (read(&first)?, read(&again)?, read(&single)?);
    ensure(!a.is_empty() && a == b && a == c, || "scan reports differ".into())?;
    Ok(format!("{} bytes identical across 3 runs", a.len()))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("1 first theorem, even-even: exactly one root", Box::new(criterion_1)),
        ("2 first theorem, even-negative: no roots", Box::new(criterion_2)),
        ("3 second theorem: at least n-1 / n roots", Box::new(criterion_3)),
        ("4 conjecture scan p <= 99", Box::new(|| criterion_4(dir.path()))),
        ("5 closed forms equal matrix products", Box::new(criterion_5)),
        ("6 signatures and determinants", Box::new(criterion_6)),
        ("7 identity suite", Box::new(criterion_7)),
        ("8 closed-form sign sequences", Box::new(criterion_8)),
        ("9 spot values", Box::new(criterion_9)),
        ("10 deterministic reports", Box::new(|| criterion_10(dir.path()))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
