//! Chebyshev polynomials of the second kind, `S_0 = 1`, `S_1 = z`,
//! `S_k = z S_(k-1) - S_(k-2)`, extended to negative `k` by running the
//! recurrence backward.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{int, Rational};

fn memo() -> &'static Mutex<HashMap<i64, UniPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<i64, UniPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `S_k(z)` for any integer `k`. `S_(-1) = 0` and `S_(-k-2) = -S_k`.
pub fn cheb_poly(k: i64) -> UniPoly {
    if k == -1 {
        return UniPoly::zero();
    }
    if k < -1 {
        return -&cheb_poly(-k - 2);
    }
    if let Some(p) = memo().lock().expect("memo poisoned").get(&k) {
        return p.clone();
    }
    // Computed outside the lock; racing threads produce identical values.
    let z = UniPoly::var();
    let (mut prev, mut cur) = (UniPoly::zero(), UniPoly::one());
    let mut computed = Vec::with_capacity(k as usize + 1);
    computed.push((0, cur.clone()));
    for i in 1..=k {
        let next = &(&z * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
        computed.push((i, cur.clone()));
    }
    memo().lock().expect("memo poisoned").extend(computed);
    cur
}

/// `S_k(z)` by the linear recurrence, without building the polynomial.
pub fn cheb_eval(k: i64, z: &Rational) -> Rational {
    if k == -1 {
        return Rational::zero();
    }
    if k < -1 {
        return -cheb_eval(-k - 2, z);
    }
    let (mut prev, mut cur) = (Rational::zero(), int(1));
    for _ in 0..k {
        let next = z * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `S_k - S_(k-1)`, whose roots are `2cos((2j-1)pi/(2k+1))`.
pub fn cheb_diff(k: i64) -> Result<UniPoly> {
    if k < 1 {
        return Err(Error::ChebDiffIndex(k));
    }
    Ok(&cheb_poly(k) - &cheb_poly(k - 1))
}

/// `p_k(x) = s^k + s^-k` written in `x = s + 1/s`: `p_0 = 2`, `p_1 = x`,
/// `p_k = x p_(k-1) - p_(k-2)`.
pub fn trace_poly(k: usize) -> UniPoly {
    let x = UniPoly::var();
    let (mut prev, mut cur) = (UniPoly::from_ints(&[2]), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
