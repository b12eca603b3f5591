//! Distinct real roots of rational polynomials by Sturm sequences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{zpoly, UniPoly};
use crate::rational::{frac, int, sign, Rational};

/// Sturm chain of the squarefree part of a polynomial.
///
/// Each element is a positive rational multiple of the textbook element
/// (negated remainder of the previous two), so sign variations are the
/// same while coefficients stay small integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign changes at a finite point, zeros skipped.
    pub fn variations_at(&self, v: &Rational) -> usize {
        variations(self.polys.iter().map(|p| sign(&p.eval(v))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.polys.iter().map(lead_sign))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| {
            let s = lead_sign(p);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Evaluates the head of the chain, the squarefree part of the input.
    fn head(&self) -> &UniPoly {
        &self.polys[0]
    }
}

fn lead_sign(p: &UniPoly) -> i8 {
    p.leading().map_or(0, sign)
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn sturm_chain(f: &UniPoly) -> Result<SturmChain> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("sturm_chain"));
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial("sturm_chain"));
    }
    // The chain of f itself ends in gcd(f, f'); when that is constant f is
    // already squarefree and the chain is final.
    let chain = remainder_chain(zpoly::primitive_of(f));
    let chain = if chain.last().expect("nonempty").len() == 1 {
        chain
    } else {
        remainder_chain(zpoly::primitive_of(&f.squarefree_part()?))
    };
    Ok(SturmChain { polys: chain.into_iter().map(UniPoly::from_bigints).collect() })
}

/// `f, f', -rem(f, f'), ...` up to positive factors, until the remainder
/// vanishes.
fn remainder_chain(head: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let deriv: Vec<BigInt> = head.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut chain = vec![head, zpoly::primitive(deriv)];
    loop {
        let n = chain.len();
        let r = zpoly::pseudo_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            return chain;
        }
        chain.push(zpoly::primitive(r.into_iter().map(|c| -c).collect()));
    }
}

/// Distinct real roots, optionally with isolating intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub total_real: usize,
    pub intervals: Option<Vec<(Rational, Rational)>>,
}

pub fn count_real_roots(f: &UniPoly) -> Result<RootCount> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("count_real_roots"));
    }
    let total_real = if f.is_constant() {
        0
    } else {
        let chain = sturm_chain(f)?;
        chain.variations_at_neg_inf() - chain.variations_at_pos_inf()
    };
    Ok(RootCount { total_real, intervals: None })
}

/// Distinct roots in the open interval `(lo, hi)`; endpoints must not be roots.
pub fn count_in_interval(f: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    check_interval(f, lo, hi)?;
    if f.is_constant() {
        return Ok(0);
    }
    let chain = sturm_chain(f)?;
    Ok(chain.variations_at(lo) - chain.variations_at(hi))
}

fn check_interval(f: &UniPoly, lo: &Rational, hi: &Rational) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("count_in_interval"));
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    for v in [lo, hi] {
        if f.eval(v).is_zero() {
            return Err(Error::EndpointIsRoot(v.to_string()));
        }
    }
    Ok(())
}

/// Roots in `(lo, hi)` counted with multiplicity, via the chain
/// `f, gcd(f, f'), gcd(gcd(f, f'), ...)`: a root of multiplicity `k`
/// is a distinct root of the first `k` members.
pub fn count_in_interval_with_multiplicity(f: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    check_interval(f, lo, hi)?;
    let mut total = 0;
    let mut g = f.clone();
    while !g.is_constant() {
        total += count_in_interval(&g, lo, hi)?;
        g = g.gcd(&g.derivative())?;
    }
    Ok(total)
}

/// `1 + max |a_i / a_d|`; every complex root has smaller modulus.
pub fn cauchy_bound(f: &UniPoly) -> Result<Rational> {
    let lc = f.leading().ok_or(Error::ZeroPolynomial("cauchy_bound"))?;
    let n = f.coeffs().len() - 1;
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(max + int(1))
}

pub fn default_isolation_width() -> Rational {
    frac(1, 64)
}

pub fn isolate_roots(f: &UniPoly) -> Result<RootCount> {
    isolate_roots_with_width(f, &default_isolation_width())
}

/// Bisects `(-B, B)` until each open interval holds exactly one root and
/// is no wider than `width`. Intervals come back sorted.
pub fn isolate_roots_with_width(f: &UniPoly, width: &Rational) -> Result<RootCount> {
    if !width.is_positive() {
        return Err(Error::InvalidArgument("isolation width must be positive".into()));
    }
    let chain = sturm_chain(f)?;
    let bound = cauchy_bound(chain.head())?;
    let (lo, hi) = (-bound.clone(), bound);
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&hi);
    let mut out = Vec::new();
    let mut stack = vec![(lo, v_lo, hi, v_hi)];
    while let Some((lo, v_lo, hi, v_hi)) = stack.pop() {
        let count = v_lo - v_hi;
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo <= *width {
            out.push((lo, hi));
            continue;
        }
        let mid = split_point(&chain, &lo, &hi);
        let v_mid = chain.variations_at(&mid);
        stack.push((lo, v_lo, mid.clone(), v_mid));
        stack.push((mid, v_mid, hi, v_hi));
    }
    out.sort();
    Ok(RootCount { total_real: out.len(), intervals: Some(out) })
}

/// Midpoint, or a nearby rational that is not a root.
fn split_point(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Rational {
    let span = hi - lo;
    for den in 2i64.. {
        for num in 1..den {
            let t = lo + &span * frac(num, den);
            if !chain.head().eval(&t).is_zero() {
                return t;
            }
        }
    }
    unreachable!()
}

/// Sign of `f(v)` for exact rational `v`, useful to callers checking
/// endpoint conditions without building a chain.
pub fn sign_at(f: &UniPoly, v: &Rational) -> i8 {
    sign(&f.eval(v))
}
