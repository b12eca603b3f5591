//! Riley polynomials of two-bridge knots.
//!
//! A nonabelian representation is conjugate to
//! `rho(a) = [[s, 1], [0, 1/s]]`, `rho(b) = [[s, 0], [2 - y, 1/s]]`, and
//! `rho(wa) = rho(bw)` cuts out the curve `W11 + (1/s - s) W12 = 0` where
//! `W = rho(w)`. That polynomial is symmetric in `s <-> 1/s` and is
//! rewritten in `x = s + 1/s`.
//!
//! The closed forms for double twist knots are `S_n(t) - mu S_(n-1)(t)`
//! with family-specific `t` and `mu`; they are built from Chebyshev
//! polynomials and never from matrix products, so agreement between the
//! two routes is a real check.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

use crate::bipoly::{compose, BiPoly};
use crate::chebyshev::cheb_poly;
use crate::error::{Error, Result};
use crate::laurent::{symmetrize_to_xy, SymLaurent};
use crate::poly::{zpoly, UniPoly};
use crate::rational::{frac, int, Rational};
use crate::two_bridge::{schubert_word, DoubleTwist, Family, Generator, KnotId, SchubertWord};

/// Row-major 2x2 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<T> {
    pub e: [[T; 2]; 2],
}

impl<T> Mat2<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn identity() -> Self {
        Mat2 { e: [[T::one(), T::zero()], [T::zero(), T::one()]] }
    }

    pub fn mul(&self, rhs: &Mat2<T>) -> Mat2<T> {
        let (a, b) = (&self.e, &rhs.e);
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2 { e: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }

    pub fn sub(&self, rhs: &Mat2<T>) -> Mat2<T> {
        let d = |i: usize, j: usize| &self.e[i][j] - &rhs.e[i][j];
        Mat2 { e: [[d(0, 0), d(0, 1)], [d(1, 0), d(1, 1)]] }
    }

    pub fn det(&self) -> T {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn trace(&self) -> T {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.e.iter().flatten()
    }
}

pub type Mat2Sym = Mat2<SymLaurent>;

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

fn y_poly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

/// `rho(g)^exponent` with entries in `Q[y][s, 1/s]`; inverses are adjugates.
pub fn rho_generator(g: Generator, exponent: i8) -> Mat2Sym {
    let s = SymLaurent::s_pow(1);
    let s_inv = SymLaurent::s_pow(-1);
    let two_minus_y = SymLaurent::term(0, y_poly(&[2, -1]));
    let one = SymLaurent::one();
    let zero = SymLaurent::zero();
    let e = match (g, exponent > 0) {
        (Generator::A, true) => [[s, one], [zero, s_inv]],
        (Generator::A, false) => [[s_inv, -&one], [zero, s]],
        (Generator::B, true) => [[s, zero], [two_minus_y, s_inv]],
        (Generator::B, false) => [[s_inv, zero], [-&two_minus_y, s]],
    };
    Mat2 { e }
}

/// The same images at `s = 1` (meridian trace 2), entries in `Q[y]`.
pub fn rho_parabolic(g: Generator, exponent: i8) -> Mat2<UniPoly> {
    let sign = if exponent > 0 { 1 } else { -1 };
    let e = match g {
        Generator::A => [[y_poly(&[1]), y_poly(&[sign])], [UniPoly::zero(), y_poly(&[1])]],
        Generator::B => [[y_poly(&[1]), UniPoly::zero()], [y_poly(&[2 * sign, -sign]), y_poly(&[1])]],
    };
    Mat2 { e }
}

/// Left-to-right product of generator images.
pub fn word_matrix(w: &SchubertWord) -> Mat2Sym {
    w.letters()
        .iter()
        .fold(Mat2::identity(), |acc, l| acc.mul(&rho_generator(l.generator, l.exponent)))
}

pub fn word_matrix_parabolic(w: &SchubertWord) -> Mat2<UniPoly> {
    w.letters()
        .iter()
        .fold(Mat2::identity(), |acc, l| acc.mul(&rho_parabolic(l.generator, l.exponent)))
}

/// `W11 + (1/s - s) W12`, before symmetrization.
pub fn riley_laurent(w: &Mat2Sym) -> SymLaurent {
    let factor = &SymLaurent::s_pow(-1) - &SymLaurent::s_pow(1);
    &w.e[0][0] + &(&factor * &w.e[0][1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    General,
    ClosedForm,
}

/// Normalized Riley polynomial in `(x, y)`: integer coefficients with
/// content 1, leading `y`-coefficient positive at `x = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RileyPoly {
    pub phi_xy: BiPoly,
    pub source: Source,
}

impl RileyPoly {
    fn new(raw: &BiPoly, source: Source) -> Self {
        RileyPoly { phi_xy: raw.normalized(), source }
    }

    /// `Phi(x0, y)`, made primitive with positive leading coefficient.
    pub fn specialize(&self, x0: &Rational) -> UniPoly {
        self.phi_xy.eval_x(x0).primitive_integer()
    }
}

const VALIDATION_POINTS: usize = 20;

/// Riley polynomial from the matrix product over the Schubert word.
///
/// The reduction to `W11 + (1/s - s) W12` is checked for every knot: the
/// candidate must be symmetric in `s`, `det W = 1`, and every entry of
/// `rho(wa) - rho(bw)` must be divisible by the candidate as a polynomial
/// in `y`, both at `s = 1` and at 20 pseudo-random rational values of `s`.
pub fn riley_general(k: &KnotId) -> Result<RileyPoly> {
    let w = word_matrix(&schubert_word(k));
    let phi = riley_laurent(&w);
    validate_reduction(k, &w, &phi)?;
    let xy = symmetrize_to_xy(&phi)?;
    Ok(RileyPoly::new(&xy, Source::General))
}

fn validate_reduction(k: &KnotId, w: &Mat2Sym, phi: &SymLaurent) -> Result<()> {
    let fail = |reason: String| Error::RileyValidation { p: k.p(), q: k.q(), reason };
    if w.det() != SymLaurent::one() {
        return Err(fail("det rho(w) != 1".into()));
    }
    let a = rho_generator(Generator::A, 1);
    let b = rho_generator(Generator::B, 1);
    let diff = w.mul(&a).sub(&b.mul(w));

    let check_at = |s0: &Rational| -> Result<()> {
        let f = phi.eval_s(s0);
        for (idx, entry) in diff.entries().enumerate() {
            let e = entry.eval_s(s0);
            let ok = if f.is_zero() { e.is_zero() } else { f.divides(&e)? };
            if !ok {
                return Err(fail(format!("entry {idx} of rho(wa) - rho(bw) not divisible at s = {s0}")));
            }
        }
        Ok(())
    };
    if phi.eval_s(&int(1)).is_zero() {
        return Err(fail("candidate vanishes identically at s = 1".into()));
    }
    check_at(&int(1))?;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64((k.p() as u64) << 32 | k.q() as u64);
    for _ in 0..VALIDATION_POINTS {
        let mut num: i64 = rng.gen_range(1..=16);
        let den: i64 = rng.gen_range(1..=16);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        check_at(&frac(num, den))?;
    }
    if let Some(exponent) = phi.asymmetry() {
        return Err(Error::NotSymmetric { exponent });
    }
    Ok(())
}

/// `Phi(2, y)` computed with `s = 1` from the start, primitive with
/// positive leading coefficient.
///
/// At `s = 1` the generator images are elementary matrices over `Z[y]`, so
/// the word product is a sequence of column operations. The candidate is
/// `W11`; `rho(wa) - rho(bw)` has entries `0`, `W11`, `-(2 - y) W11` and
/// `W21 - (2 - y) W12`, so the reduction holds iff `W11` divides the last
/// one, which is checked together with `det W = 1`.
pub fn riley_parabolic(k: &KnotId) -> Result<UniPoly> {
    let one = vec![BigInt::one()];
    let mut w: [[Vec<BigInt>; 2]; 2] = [[one.clone(), Vec::new()], [Vec::new(), one]];
    for l in schubert_word(k).letters() {
        let sign = l.exponent > 0;
        for row in w.iter_mut() {
            match l.generator {
                Generator::A => row[1] = zpoly::add_signed(&row[1], &row[0], sign),
                Generator::B => row[0] = zpoly::add_signed(&row[0], &two_minus_y_times(&row[1]), sign),
            }
        }
    }
    let fail = |reason: &str| Error::RileyValidation { p: k.p(), q: k.q(), reason: reason.into() };
    let [[w11, w12], [w21, w22]] = w;
    let det = zpoly::add_signed(&zpoly::mul(&w11, &w22), &zpoly::mul(&w12, &w21), false);
    if det != [BigInt::one()] {
        return Err(fail("det rho(w) != 1 at s = 1"));
    }
    if w11.is_empty() {
        return Err(fail("W11 vanishes at s = 1"));
    }
    let rest = zpoly::add_signed(&w21, &two_minus_y_times(&w12), false);
    if !zpoly::pseudo_rem(&rest, &w11).is_empty() {
        return Err(fail("W21 - (2 - y) W12 is not a multiple of W11 at s = 1"));
    }
    Ok(UniPoly::from_bigints(w11).primitive_integer())
}

/// `(2 - y) b`.
fn two_minus_y_times(b: &[BigInt]) -> Vec<BigInt> {
    if b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); b.len() + 1];
    for (i, c) in b.iter().enumerate() {
        out[i] += c * 2;
        out[i + 1] -= c;
    }
    out
}

/// The `t` and `mu` of a double twist family, as polynomials in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormParams {
    pub t: BiPoly,
    pub mu: BiPoly,
    pub family: DoubleTwist,
}

impl ClosedFormParams {
    /// `S_n(t) - mu S_(n-1)(t)`, not normalized.
    pub fn phi(&self) -> BiPoly {
        let n = self.family.n;
        let head = compose(&cheb_poly(n), &self.t);
        let tail = &self.mu * &compose(&cheb_poly(n - 1), &self.t);
        &head - &tail
    }
}

fn s_y(k: i64) -> BiPoly {
    BiPoly::from_y(&cheb_poly(k))
}

fn konst(c: i64) -> BiPoly {
    BiPoly::constant(int(c))
}

pub fn closed_form_params(d: &DoubleTwist) -> ClosedFormParams {
    let m = d.m;
    let y = BiPoly::y();
    let x2 = BiPoly::x().pow(2);
    // y + 2 - x^2
    let shifted = &(&y + &konst(2)) - &x2;
    let y_minus_2 = &y - &konst(2);
    let (sm, sm1, sm2) = (s_y(m), s_y(m - 1), s_y(m - 2));

    let (t, mu) = match d.family {
        Family::EE | Family::EN => {
            let t = &konst(2) + &(&(&y_minus_2 * &shifted) * &sm1.pow(2));
            let mu = if d.family == Family::EE {
                &konst(1) + &(&(&shifted * &sm1) * &(&sm - &sm1))
            } else {
                &konst(1) - &(&(&shifted * &sm1) * &(&sm1 - &sm2))
            };
            (t, mu)
        }
        Family::OE | Family::ON => {
            let t = &(&x2 - &y) - &(&(&y_minus_2 * &shifted) * &(&sm * &sm1));
            let mu = if d.family == Family::OE {
                &konst(1) - &(&(&shifted * &sm) * &(&sm - &sm1))
            } else {
                &konst(1) + &(&(&shifted * &sm1) * &(&sm - &sm1))
            };
            (t, mu)
        }
    };
    ClosedFormParams { t, mu, family: *d }
}

pub fn riley_closed_form(d: &DoubleTwist) -> RileyPoly {
    RileyPoly::new(&closed_form_params(d).phi(), Source::ClosedForm)
}
