//! Cross-checks of library results against independent computations.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use riley_core::rational::{frac, int};
use riley_core::real_roots::{count_real_roots, isolate_roots};
use riley_core::riley::{riley_general, riley_parabolic};
use riley_core::signature::signature_two_bridge;
use riley_core::two_bridge::{canonical_knots, epsilon, schubert_word, Generator};
use riley_core::{KnotId, Rational, UniPoly};

type M = [[Rational; 2]; 2];

fn mul(a: &M, b: &M) -> M {
    let c = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]
}

/// Numeric `rho(w)` at a point, with explicit inverses.
fn numeric_word(k: &KnotId, s: &Rational, y: &Rational) -> M {
    let si = s.recip();
    let u = int(2) - y;
    let mut acc: M = [[int(1), int(0)], [int(0), int(1)]];
    for l in schubert_word(k).letters() {
        let g: M = match (l.generator, l.exponent > 0) {
            (Generator::A, true) => [[s.clone(), int(1)], [int(0), si.clone()]],
            (Generator::A, false) => [[si.clone(), int(-1)], [int(0), s.clone()]],
            (Generator::B, true) => [[s.clone(), int(0)], [u.clone(), si.clone()]],
            (Generator::B, false) => [[si.clone(), int(0)], [-u.clone(), s.clone()]],
        };
        acc = mul(&acc, &g);
    }
    acc
}

#[test]
fn riley_polynomial_matches_numeric_matrices() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for k in canonical_knots(23) {
        let phi = riley_general(&k).unwrap().phi_xy;
        // Normalization rescales by a constant; recover it from one point.
        let mut ratio: Option<Rational> = None;
        for _ in 0..6 {
            let s = frac(rng.gen_range(1..9), rng.gen_range(1..9));
            let y = frac(rng.gen_range(-20..20), rng.gen_range(1..7));
            let w = numeric_word(&k, &s, &y);
            let direct = &w[0][0] + (s.recip() - &s) * &w[0][1];
            let x = &s + s.recip();
            let ours = phi.eval_x(&x).eval(&y);
            if direct.is_zero() {
                assert!(ours.is_zero(), "{k}");
                continue;
            }
            let r = ours / direct;
            match &ratio {
                None => ratio = Some(r),
                Some(r0) => assert_eq!(&r, r0, "{k}"),
            }
        }
        let r = ratio.expect("some nonzero sample");
        assert!(r == int(1) || r == int(-1), "{k}: scale {r}");
    }
}

#[test]
fn parabolic_polynomial_is_w11_at_s_equal_one() {
    for k in canonical_knots(31) {
        let f = riley_parabolic(&k).unwrap();
        for y in -4..=6 {
            let w = numeric_word(&k, &int(1), &int(y));
            let v = f.eval(&int(y));
            // f is W11 up to sign
            assert!(v == w[0][0] || v == -w[0][0].clone(), "{k} y={y}");
        }
    }
}

#[test]
fn sign_sequences_are_palindromes() {
    for k in canonical_knots(61) {
        let e = k.epsilons();
        let rev: Vec<i8> = e.iter().rev().copied().collect();
        assert_eq!(e, rev, "{k}");
        for (j, &v) in e.iter().enumerate() {
            assert_eq!(v, epsilon(k.p(), k.schubert_q(), j as i64 + 1).unwrap());
        }
    }
}

#[test]
fn torus_knot_signatures() {
    // b(p,1) is the (2,p) torus knot, |sigma| = p - 1.
    for p in (3..=41).step_by(2) {
        let s = signature_two_bridge(&KnotId::new(p, 1).unwrap()).unwrap();
        assert_eq!(s.sigma_abs as i64, p - 1, "p={p}");
    }
    // twist knots 4_1, 6_1 and 8_1 have signature 0
    for (p, q) in [(5, 2), (9, 2), (13, 2)] {
        let s = signature_two_bridge(&KnotId::new(p, q).unwrap()).unwrap();
        assert_eq!(s.sigma_abs, 0, "b({p},{q})");
    }
}

#[test]
fn signature_agrees_across_presentations() {
    // b(p,q) and b(p,q^-1) are the same knot.
    for k in canonical_knots(51) {
        let other = KnotId::new(k.p(), k.q_inverse()).unwrap();
        let (a, b) = (signature_two_bridge(&k).unwrap(), signature_two_bridge(&other).unwrap());
        assert_eq!(a.sigma_abs, b.sigma_abs, "{k}");
    }
}

#[test]
fn root_counts_of_constructed_polynomials() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        // distinct rational roots times irreducible quadratics y^2 + c, c > 0
        let n_real = rng.gen_range(0..5);
        let mut roots: Vec<Rational> = Vec::new();
        while roots.len() < n_real {
            let r = frac(rng.gen_range(-30..30), rng.gen_range(1..6));
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let mut f = UniPoly::one();
        for r in &roots {
            let lin = UniPoly::new(vec![-r.clone(), int(1)]);
            f = &f * &lin;
            if rng.gen_bool(0.3) {
                f = &f * &lin;
            }
        }
        for _ in 0..rng.gen_range(0..3) {
            f = &f * &UniPoly::new(vec![frac(rng.gen_range(1..20), rng.gen_range(1..4)), int(0), int(1)]);
        }
        if f.is_constant() {
            assert_eq!(count_real_roots(&f).unwrap().total_real, 0);
            continue;
        }
        assert_eq!(count_real_roots(&f).unwrap().total_real, roots.len());
        let iv = isolate_roots(&f).unwrap().intervals.unwrap();
        roots.sort();
        for (r, (lo, hi)) in roots.iter().zip(&iv) {
            assert!(lo < r && r < hi);
        }
    }
}
