//! Dense univariate polynomials over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Coefficients in ascending degree, trimmed so the last one is nonzero.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Outer polynomial evaluated at another polynomial, by Horner's rule.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * inner) + &UniPoly::constant(c.clone()))
    }

    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &lc_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn divides(&self, other: &UniPoly) -> Result<bool> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    /// Monic greatest common divisor, computed by a primitive remainder
    /// sequence over the integers.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::GcdOfZeros),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        let (mut a, mut b) = (zpoly::primitive_of(self), zpoly::primitive_of(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = zpoly::pseudo_rem(&a, &b);
            if r.is_empty() {
                return Ok(UniPoly::from_bigints(b).monic());
            }
            a = b;
            b = zpoly::primitive(r);
        }
    }

    /// `a / gcd(a, a')`, made monic.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree_part"));
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.divrem(&g)?.0.monic())
    }

    /// Scales to an integer polynomial with content 1 and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> UniPoly {
        let mut v = zpoly::primitive_of(self);
        if v.last().is_some_and(Signed::is_negative) {
            v.iter_mut().for_each(|c| *c = -&*c);
        }
        UniPoly::from_bigints(v)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Integer polynomial kernels for remainder sequences. Coefficients are
/// ascending and trimmed; the empty vector is zero.
pub(crate) mod zpoly {
    use super::*;

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    /// Positive integer multiple of `p` with coprime coefficients.
    pub fn primitive_of(p: &UniPoly) -> Vec<BigInt> {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        primitive(v)
    }

    /// Divides out the positive content.
    pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
        let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            v.iter_mut().for_each(|c| *c /= &g);
        }
        v
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    /// `a + sign * b`, trimmed.
    pub fn add_signed(a: &[BigInt], b: &[BigInt], plus: bool) -> Vec<BigInt> {
        let mut out = a.to_vec();
        if out.len() < b.len() {
            out.resize(b.len(), BigInt::zero());
        }
        for (o, c) in out.iter_mut().zip(b) {
            if plus {
                *o += c;
            } else {
                *o -= c;
            }
        }
        trim(out)
    }

    /// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` by `b`: a positive
    /// multiple of the true remainder, so signs are preserved.
    pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let db = b.len() - 1;
        let lc = &b[db];
        let lc_abs = lc.abs();
        let lc_pos = lc.is_positive();
        let mut r = a.to_vec();
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top].clone();
            let k = top - db;
            for x in r.iter_mut() {
                *x *= &lc_abs;
            }
            for (i, d) in b.iter().enumerate() {
                if lc_pos {
                    r[k + i] -= &c * d;
                } else {
                    r[k + i] += &c * d;
                }
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            r = trim(r);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[3, -3, 1]) + &UniPoly::zero(), p(&[3, -3, 1]));
        assert_eq!(&p(&[3, -3, 1]) + &p(&[-3, 3]), p(&[0, 0, 1]));
        assert_eq!(-&p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap(), (p(&[1, 1]), UniPoly::zero()));
        assert_eq!(p(&[0, 0, 1]).divrem(&p(&[1, 1])).unwrap(), (p(&[-1, 1]), p(&[1])));
        assert_eq!(p(&[5]).divrem(&p(&[0, 1])).unwrap(), (UniPoly::zero(), p(&[5])));
        assert_eq!(p(&[1, 2]).divrem(&UniPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&UniPoly::zero()).unwrap(), UniPoly::new(vec![crate::rational::frac(1, 2), int(1)]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(), UniPoly::one());
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn squarefree_examples() {
        let y1 = p(&[-1, 1]);
        let y2 = p(&[-2, 1]);
        assert_eq!((&y1 * &y1).squarefree_part().unwrap(), y1);
        assert_eq!(p(&[3, -3, 1]).squarefree_part().unwrap(), p(&[3, -3, 1]));
        assert_eq!((&(&y1 * &y1) * &y2).squarefree_part().unwrap(), &y1 * &y2);
        assert_eq!(UniPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial("squarefree_part")));
    }

    #[test]
    fn eval_and_compose() {
        assert_eq!(p(&[3, -3, 1]).eval(&int(2)), int(1));
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn primitive_integer_normalizes_sign_and_content() {
        let f = UniPoly::new(vec![crate::rational::frac(3, 2), int(-3)]);
        assert_eq!(f.primitive_integer(), p(&[-1, 2]));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((any::<i64>(), 1i64..=i64::MAX), 0..=max_deg + 1).prop_map(|cs| {
            UniPoly::new(cs.into_iter().map(|(n, d)| crate::rational::frac(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms(a in arb_poly(12), b in arb_poly(12), c in arb_poly(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a - &a, UniPoly::zero());
        }

        #[test]
        fn divrem_reconstructs(a in arb_poly(10), b in arb_poly(6)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn gcd_contains_common_factor(a in arb_poly(5), b in arb_poly(5), g in arb_poly(4)) {
            prop_assume!(!g.is_zero() && !(a.is_zero() && b.is_zero()));
            let d = (&a * &g).gcd(&(&b * &g)).unwrap();
            prop_assert!(g.monic().divides(&d).unwrap());
        }

        #[test]
        fn squarefree_part_is_squarefree(a in arb_poly(4), b in arb_poly(3)) {
            let f = &(&a * &a) * &b;
            prop_assume!(!f.is_zero());
            let s = f.squarefree_part().unwrap();
            prop_assert_eq!(s.gcd(&s.derivative()).unwrap(), UniPoly::one());
        }
    }
}
