//! Laurent polynomials in `s` with coefficients in `Q[y]`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::chebyshev::trace_poly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

/// Sparse map from `s`-exponent to `y`-polynomial. Zero coefficients are
/// never stored, so the zero element is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymLaurent {
    terms: BTreeMap<i64, UniPoly>,
}

impl SymLaurent {
    pub fn zero() -> Self {
        SymLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(0, UniPoly::one())
    }

    /// `coeff * s^exp`.
    pub fn term(exp: i64, coeff: UniPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        SymLaurent { terms }
    }

    pub fn s_pow(exp: i64) -> Self {
        Self::term(exp, UniPoly::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, UniPoly)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| &acc + &Self::term(e, c))
    }

    pub fn terms(&self) -> &BTreeMap<i64, UniPoly> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> UniPoly {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `s := s0`; `s0` must be nonzero when negative exponents occur.
    pub fn eval_s(&self, s0: &Rational) -> UniPoly {
        self.terms.iter().fold(UniPoly::zero(), |acc, (&e, c)| {
            let w = if e >= 0 {
                num_traits::pow(s0.clone(), e as usize)
            } else {
                num_traits::pow(s0.recip(), e.unsigned_abs() as usize)
            };
            &acc + &c.scale(&w)
        })
    }

    /// First exponent `k > 0` whose coefficient differs from that at `-k`.
    pub fn asymmetry(&self) -> Option<i64> {
        let exps = self.terms.keys().map(|e| e.abs()).filter(|&e| e > 0);
        let mut seen: Vec<i64> = exps.collect();
        seen.sort_unstable();
        seen.dedup();
        seen.into_iter().find(|&k| self.coeff(k) != self.coeff(-k))
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }
}

/// Rewrites a Laurent polynomial invariant under `s -> 1/s` as a
/// polynomial in `x = s + 1/s` and `y`, using `s^k + s^-k = p_k(x)`.
pub fn symmetrize_to_xy(f: &SymLaurent) -> Result<BiPoly> {
    if let Some(exponent) = f.asymmetry() {
        return Err(Error::NotSymmetric { exponent });
    }
    let mut out = BiPoly::zero();
    for (&k, c) in f.terms.range(0..) {
        let x_part = if k == 0 { UniPoly::one() } else { trace_poly(k as usize) };
        out = &out + &BiPoly::from_y(c).mul_x_poly(&x_part);
    }
    Ok(out)
}

impl Add for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: &SymLaurent) -> SymLaurent {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let sum = match terms.get(e) {
                Some(a) => a + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(e);
            } else {
                terms.insert(*e, sum);
            }
        }
        SymLaurent { terms }
    }
}

impl Neg for &SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        SymLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: &SymLaurent) -> SymLaurent {
        self + &(-rhs)
    }
}

impl Mul for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        let mut acc: BTreeMap<i64, UniPoly> = BTreeMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let slot = acc.entry(ea + eb).or_default();
                *slot = &*slot + &(a * b);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SymLaurent { terms: acc }
    }
}

impl Zero for SymLaurent {
    fn zero() -> Self {
        SymLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: SymLaurent) -> SymLaurent {
        &self + &rhs
    }
}

impl One for SymLaurent {
    fn one() -> Self {
        SymLaurent::one()
    }
}

impl Mul for SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: SymLaurent) -> SymLaurent {
        &self * &rhs
    }
}
