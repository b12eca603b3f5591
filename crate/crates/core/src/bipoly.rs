//! Polynomials in `y` whose coefficients are polynomials in `x`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::UniPoly;
use crate::rational::{int, Rational};

/// `y_coeffs[j]` is the coefficient of `y^j`, a polynomial in `x`.
/// Trimmed in `y`; every coefficient is itself trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    y_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut y_coeffs: Vec<UniPoly>) -> Self {
        while y_coeffs.last().is_some_and(UniPoly::is_zero) {
            y_coeffs.pop();
        }
        BiPoly { y_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { y_coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![UniPoly::constant(c)])
    }

    pub fn x() -> Self {
        Self::from_x(UniPoly::var())
    }

    pub fn y() -> Self {
        Self::from_y(&UniPoly::var())
    }

    /// A polynomial in `x` alone.
    pub fn from_x(p: UniPoly) -> Self {
        Self::new(vec![p])
    }

    /// A polynomial in `y` alone.
    pub fn from_y(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    /// Builds from integer terms `(coefficient, x_degree, y_degree)`.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, i, j)| {
            let mut ys = vec![UniPoly::zero(); j + 1];
            ys[j] = UniPoly::monomial(int(c), i);
            &acc + &BiPoly::new(ys)
        })
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.y_coeffs
    }

    pub fn y_coeff(&self, j: usize) -> UniPoly {
        self.y_coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.y_coeffs.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.y_coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Substitutes `x := x0` in every coefficient.
    pub fn eval_x(&self, x0: &Rational) -> UniPoly {
        UniPoly::new(self.y_coeffs.iter().map(|c| c.eval(x0)).collect())
    }

    /// Substitutes `y := y0`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y0: &Rational) -> UniPoly {
        self.y_coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &acc.scale(y0) + c)
    }

    /// Substitutes `y := q(x)`.
    pub fn eval_y_poly(&self, q: &UniPoly) -> UniPoly {
        self.y_coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| &(&acc * q) + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.y_coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_x_poly(&self, p: &UniPoly) -> Self {
        Self::new(self.y_coeffs.iter().map(|c| c * p).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Clears denominators, divides by the integer content and fixes the
    /// sign so the leading `y`-coefficient is positive at `x = 2` (falling
    /// back to its leading `x`-coefficient when that value is zero).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let all = || self.y_coeffs.iter().flat_map(|c| c.coeffs().iter());
        let lcm = all().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = all().fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&lcm / c.denom()))));
        let mut factor = Rational::new(lcm, content);
        let lead = self.y_coeffs.last().expect("nonzero");
        let at_two = lead.eval(&int(2));
        let negative = if at_two.is_zero() {
            lead.leading().expect("trimmed").is_negative()
        } else {
            at_two.is_negative()
        };
        if negative {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.y_coeffs.len().max(rhs.y_coeffs.len());
        BiPoly::new((0..n).map(|j| &self.y_coeff(j) + &rhs.y_coeff(j)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { y_coeffs: self.y_coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.y_coeffs.len() + rhs.y_coeffs.len() - 1];
        for (i, a) in self.y_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.y_coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// `outer(inner)` for a univariate outer polynomial.
pub fn compose(outer: &UniPoly, inner: &BiPoly) -> BiPoly {
    outer
        .coeffs()
        .iter()
        .rev()
        .fold(BiPoly::zero(), |acc, c| &(&acc * inner) + &BiPoly::constant(c.clone()))
}

/// Substitutes `x := x0`.
pub fn eval_bi(f: &BiPoly, x0: &Rational) -> UniPoly {
    f.eval_x(x0)
}
