//! Knot signatures of two-bridge knots.
//!
//! `p/q*` with `q*` even has an expansion `2b_1 - 1/(2b_2 - 1/(... - 1/2b_k))`
//! with all partial quotients even. The plumbing it describes has the
//! tridiagonal symmetrized Seifert form with diagonal `2b_i` and ones next
//! to the diagonal; its signature is the knot signature up to mirror image.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{frac, int, Rational};
use crate::real_roots::{cauchy_bound, count_in_interval_with_multiplicity};
use crate::two_bridge::{DoubleTwist, Family, KnotId};

/// Even continued fraction entries `2b_1, ..., 2b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCF {
    entries: Vec<i64>,
}

impl EvenCF {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ContinuedFraction("empty expansion".into()));
        }
        if let Some(e) = entries.iter().find(|e| **e == 0 || e.is_odd()) {
            return Err(Error::ContinuedFraction(format!("entry {e} is not a nonzero even integer")));
        }
        Ok(EvenCF { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Folds the expansion back into a rational, innermost term first.
    /// `None` when an intermediate value is zero.
    pub fn value(&self) -> Option<Rational> {
        let mut rev = self.entries.iter().rev();
        let mut acc = int(*rev.next()?);
        for &e in rev {
            if acc.is_zero() {
                return None;
            }
            acc = int(e) - acc.recip();
        }
        Some(acc)
    }
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The representative of `q` or `p - q` that is even.
pub fn even_q(k: &KnotId) -> i64 {
    if k.q() % 2 == 0 {
        k.q()
    } else {
        k.p() - k.q()
    }
}

/// Subtractive expansion of `p/q*`: take `2b = 2 round(v/2)`, recurse on
/// `1/(2b - v)`. Numerator and denominator alternate in parity, so `v/2`
/// is never a half-integer and the loop ends on an even integer.
pub fn even_cf(k: &KnotId) -> Result<EvenCF> {
    let (p, qs) = (k.p(), even_q(k));
    // v = num/den with den possibly negative; kept as a reduced pair.
    let (mut num, mut den) = (BigInt::from(p), BigInt::from(qs));
    let mut entries = Vec::new();
    loop {
        if den.is_zero() {
            return Err(Error::ContinuedFraction(format!("b({p},{qs}): zero denominator")));
        }
        let two_b = 2 * round_half_ratio(&num, &den)?;
        entries.push(two_b);
        // 2b - num/den = (2b den - num)/den
        let r = BigInt::from(two_b) * &den - &num;
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
        if entries.len() > 4 * p as usize {
            return Err(Error::ContinuedFraction(format!("b({p},{qs}): expansion does not terminate")));
        }
    }
    let cf = EvenCF::new(entries)?;
    if cf.value() != Some(frac(p, qs)) {
        return Err(Error::ContinuedFraction(format!("{cf} does not reconstruct {p}/{qs}")));
    }
    if cf.len() % 2 != 0 {
        return Err(Error::ContinuedFraction(format!("{cf} has odd length for the knot b({p},{qs})")));
    }
    Ok(cf)
}

/// Nearest integer to `num / (2 den)`; a tie is an error.
fn round_half_ratio(num: &BigInt, den: &BigInt) -> Result<i64> {
    let two_den: BigInt = den * 2;
    let (n, d) = if two_den.is_negative() { (-num, -two_den) } else { (num.clone(), two_den) };
    let twice: BigInt = &n * 2;
    // floor((2n + d) / 2d) is round-half-up; reject exact halves.
    if twice.mod_floor(&d).is_zero() && !n.mod_floor(&d).is_zero() {
        return Err(Error::ContinuedFraction(format!("tie while rounding {num}/{}", den * 2)));
    }
    let r = (twice + &d).div_floor(&(&d * 2));
    i64::try_from(r).map_err(|_| Error::ContinuedFraction("partial quotient overflow".into()))
}

/// Dense symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    rows: Vec<Vec<i64>>,
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| rows[i][j] != rows[j][i])) {
            return Err(Error::NotSymmetricMatrix);
        }
        Ok(SymMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn is_tridiagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || self.rows[i][j] == 0))
    }
}

pub fn goeritz_like_matrix(cf: &EvenCF) -> SymMatrix {
    let k = cf.len();
    let mut rows = vec![vec![0; k]; k];
    for (i, &e) in cf.entries().iter().enumerate() {
        rows[i][i] = e;
        if i + 1 < k {
            rows[i][i + 1] = 1;
            rows[i + 1][i] = 1;
        }
    }
    SymMatrix { rows }
}

/// `det(lambda I - M)`.
pub fn characteristic_polynomial(m: &SymMatrix) -> UniPoly {
    if m.is_tridiagonal() {
        char_poly_tridiagonal(m)
    } else {
        char_poly_faddeev_leverrier(m)
    }
}

/// Continuant recurrence `f_i = (lambda - a_i) f_(i-1) - b_(i-1)^2 f_(i-2)`.
pub fn char_poly_tridiagonal(m: &SymMatrix) -> UniPoly {
    let r = &m.rows;
    let (mut prev, mut cur) = (UniPoly::zero(), UniPoly::one());
    for i in 0..m.dim() {
        let lin = UniPoly::from_ints(&[-r[i][i], 1]);
        let off = if i > 0 { r[i][i - 1] * r[i][i - 1] } else { 0 };
        let next = &(&lin * &cur) - &prev.scale(&int(off));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Faddeev-LeVerrier: `M_k = A M_(k-1) + c_(n-k+1) I`,
/// `c_(n-k) = -tr(A M_k) / k`.
pub fn char_poly_faddeev_leverrier(m: &SymMatrix) -> UniPoly {
    let n = m.dim();
    let a: Vec<Vec<Rational>> = m.rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = int(1);
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // mk <- A * mk + c_(n-k+1) I
        let mut next = matmul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul(&a, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / int(k as i64);
    }
    UniPoly::new(coeffs)
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|l| &a[i][l] * &b[l][j]).sum()).collect())
        .collect()
}

/// `det M`, from the leading principal minors when `M` is tridiagonal and
/// as `(-1)^n char(0)` otherwise.
pub fn determinant(m: &SymMatrix) -> BigInt {
    if let Some(minors) = minors_if_unreduced_tridiagonal(m) {
        return minors.last().expect("nonempty").clone();
    }
    let c0 = characteristic_polynomial(m).coeff(0);
    debug_assert!(c0.is_integer());
    let d = c0.to_integer();
    if m.dim().is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// Positive minus negative eigenvalues.
///
/// When every off-diagonal entry next to the diagonal is nonzero and the
/// rest are zero, the leading principal minors `det(M_1), ..., det(M_n)`
/// are the continuant Sturm sequence at 0, and their sign changes (zeros
/// skipped) count the negative eigenvalues. Otherwise negative roots of the
/// characteristic polynomial are counted with multiplicity on `(-B, 0)`.
pub fn matrix_signature(m: &SymMatrix) -> Result<i64> {
    let negatives = match minors_if_unreduced_tridiagonal(m) {
        Some(minors) => {
            if minors.last().is_some_and(Zero::is_zero) {
                return Err(Error::SingularMatrix);
            }
            sign_changes(&minors)
        }
        None => negative_eigenvalues_by_char_poly(m)?,
    };
    Ok(m.dim() as i64 - 2 * negatives as i64)
}

/// Negative roots of `det(lambda I - M)` in `(-B, 0)`, with multiplicity.
pub fn negative_eigenvalues_by_char_poly(m: &SymMatrix) -> Result<usize> {
    let chi = characteristic_polynomial(m);
    if chi.coeff(0).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let bound = cauchy_bound(&chi)? + int(1);
    count_in_interval_with_multiplicity(&chi, &-bound, &int(0))
}

/// `1, det(M_1), ..., det(M_n)` by `D_i = a_i D_(i-1) - b_(i-1)^2 D_(i-2)`.
fn minors_if_unreduced_tridiagonal(m: &SymMatrix) -> Option<Vec<BigInt>> {
    if !m.is_tridiagonal() || (1..m.dim()).any(|i| m.rows[i][i - 1] == 0) {
        return None;
    }
    let mut d = vec![BigInt::from(1)];
    let mut prev = BigInt::zero();
    for i in 0..m.dim() {
        let off = if i > 0 { m.rows[i][i - 1] * m.rows[i][i - 1] } else { 0 };
        let next = d.last().expect("nonempty") * m.rows[i][i] - &prev * off;
        prev = d.last().expect("nonempty").clone();
        d.push(next);
    }
    Some(d)
}

fn sign_changes(v: &[BigInt]) -> usize {
    let signs: Vec<bool> = v.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureResult {
    pub sigma_abs: u64,
    /// Signed value for the `p/q*` expansion with `q*` even.
    pub sigma_signed: i64,
    pub cf: EvenCF,
    pub det: BigInt,
}

pub fn signature_two_bridge(k: &KnotId) -> Result<SignatureResult> {
    let cf = even_cf(k)?;
    let m = goeritz_like_matrix(&cf);
    let det = determinant(&m);
    if det.abs() != BigInt::from(k.p()) {
        return Err(Error::DeterminantMismatch { det: det.to_string(), p: k.p() });
    }
    let sigma_signed = matrix_signature(&m)?;
    Ok(SignatureResult { sigma_abs: sigma_signed.unsigned_abs(), sigma_signed, cf, det })
}

/// Table values for the four double twist families.
pub fn signature_family(d: &DoubleTwist) -> i64 {
    match d.family {
        Family::EE => 2,
        Family::EN => 0,
        Family::OE => 2 - 2 * d.n,
        Family::ON => 2 * d.n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_bridge::{canonical_knots, family_to_pq};

    fn knot(p: i64, q: i64) -> KnotId {
        KnotId::new(p, q).unwrap()
    }

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn cf_examples() {
        assert_eq!(even_cf(&knot(3, 1)).unwrap().entries(), &[2, 2]);
        assert_eq!(even_cf(&knot(5, 2)).unwrap().entries(), &[2, -2]);
        assert_eq!(even_cf(&knot(7, 5)).unwrap().entries(), &[4, 2]);
        assert_eq!(even_cf(&knot(9, 7)).unwrap().entries(), &[4, -2]);
        assert!(EvenCF::new(vec![2, 3]).is_err());
        assert!(EvenCF::new(vec![0, 2]).is_err());
    }

    #[test]
    fn matrix_examples() {
        let cf = EvenCF::new(vec![2, -2]).unwrap();
        assert_eq!(goeritz_like_matrix(&cf), sym(&[&[2, 1], &[1, -2]]));
        assert_eq!(matrix_signature(&sym(&[&[2, 1], &[1, 2]])).unwrap(), 2);
        assert_eq!(matrix_signature(&sym(&[&[2, 1], &[1, -2]])).unwrap(), 0);
        assert_eq!(matrix_signature(&sym(&[&[4, 1], &[1, 2]])).unwrap(), 2);
        assert_eq!(matrix_signature(&sym(&[&[1, 1], &[1, 1]])), Err(Error::SingularMatrix));
        assert_eq!(SymMatrix::new(vec![vec![1, 2], vec![3, 1]]), Err(Error::NotSymmetricMatrix));
    }

    #[test]
    fn repeated_eigenvalues_counted_with_multiplicity() {
        let m = sym(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 3]]);
        assert_eq!(matrix_signature(&m).unwrap(), -1);
        let m = sym(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, -5]]);
        assert_eq!(matrix_signature(&m).unwrap(), -1);
    }

    #[test]
    fn knot_examples() {
        let s = signature_two_bridge(&knot(3, 1)).unwrap();
        assert_eq!((s.sigma_abs, s.det.clone()), (2, BigInt::from(3)));
        assert_eq!(signature_two_bridge(&knot(5, 2)).unwrap().sigma_abs, 0);
        let s = signature_two_bridge(&knot(7, 5)).unwrap();
        assert_eq!((s.sigma_abs, s.sigma_signed, s.det), (2, 2, BigInt::from(7)));
        let s = signature_two_bridge(&knot(9, 7)).unwrap();
        assert_eq!((s.sigma_abs, s.det), (0, BigInt::from(-9)));
    }

    #[test]
    fn minor_sequence_matches_char_poly_count() {
        for k in canonical_knots(41) {
            let m = goeritz_like_matrix(&even_cf(&k).unwrap());
            let by_poly = m.dim() as i64 - 2 * negative_eigenvalues_by_char_poly(&m).unwrap() as i64;
            assert_eq!(matrix_signature(&m).unwrap(), by_poly, "{k}");
            let c0 = characteristic_polynomial(&m).coeff(0).to_integer();
            let sign = if m.dim().is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(determinant(&m), c0 * sign, "{k}");
        }
        // zero leading minors inside the sequence
        let m = sym(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(matrix_signature(&m), Err(Error::SingularMatrix));
        let m = sym(&[&[0, 1, 0, 0], &[1, 2, 1, 0], &[0, 1, 0, 3], &[0, 0, 3, -4]]);
        let by_poly = 4 - 2 * negative_eigenvalues_by_char_poly(&m).unwrap() as i64;
        assert_eq!(matrix_signature(&m).unwrap(), by_poly);
    }

    #[test]
    fn char_poly_methods_agree() {
        let mats = [
            sym(&[&[4, 1, 0, 0], &[1, -2, 1, 0], &[0, 1, 6, 1], &[0, 0, 1, -8]]),
            sym(&[&[2, 3, -1], &[3, 0, 5], &[-1, 5, 7]]),
            sym(&[&[0]]),
        ];
        for m in &mats {
            let f = char_poly_faddeev_leverrier(m);
            assert_eq!(characteristic_polynomial(m), f);
            if m.is_tridiagonal() {
                assert_eq!(char_poly_tridiagonal(m), f);
            }
        }
        assert_eq!(
            char_poly_faddeev_leverrier(&sym(&[&[2, 3, -1], &[3, 0, 5], &[-1, 5, 7]])).coeff(0),
            -int(determinant_by_cofactors(&[vec![2, 3, -1], vec![3, 0, 5], vec![-1, 5, 7]]))
        );
    }

    fn determinant_by_cofactors(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * determinant_by_cofactors(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_and_parity_over_scan() {
        for k in canonical_knots(61) {
            let s = signature_two_bridge(&k).unwrap();
            assert_eq!(s.det.abs(), BigInt::from(k.p()));
            assert_eq!(s.sigma_signed % 2, 0);
            assert!(s.sigma_abs as usize <= s.cf.len());
            assert_eq!(s.cf.value(), Some(frac(k.p(), even_q(&k))));
        }
    }

    #[test]
    fn families_match_table() {
        for f in Family::ALL {
            for m in 1..=4 {
                for n in 1..=4 {
                    let d = DoubleTwist::new(f, m, n).unwrap();
                    let s = signature_two_bridge(&family_to_pq(&d)).unwrap();
                    assert_eq!(s.sigma_abs as i64, signature_family(&d).abs(), "{f} m={m} n={n}");
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn minor_sequence_agrees_on_random_tridiagonals(
            diag in proptest::collection::vec(-6i64..6, 1..9),
            off in proptest::collection::vec(prop_oneof_nonzero(), 8),
        ) {
            let n = diag.len();
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n {
                rows[i][i] = diag[i];
                if i + 1 < n {
                    rows[i][i + 1] = off[i];
                    rows[i + 1][i] = off[i];
                }
            }
            let m = SymMatrix::new(rows).unwrap();
            match negative_eigenvalues_by_char_poly(&m) {
                Ok(neg) => proptest::prop_assert_eq!(matrix_signature(&m).unwrap(), n as i64 - 2 * neg as i64),
                Err(e) => proptest::prop_assert_eq!(matrix_signature(&m), Err(e)),
            }
        }
    }

    fn prop_oneof_nonzero() -> impl proptest::strategy::Strategy<Value = i64> {
        proptest::prop_oneof![-3i64..0, 1i64..4]
    }
}
