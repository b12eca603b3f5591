//! JSON form of polynomials.
//!
//! `coeffs[j][i]` is the coefficient of `y^j x^i` as a `"num/den"` string.
//! Rows and each row are trimmed; the zero polynomial is
//! `{"y_degree": 0, "coeffs": []}`. A polynomial in `y` alone uses rows of
//! length one.

use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{parse_rational, to_fraction_string, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub y_degree: usize,
    pub coeffs: Vec<Vec<String>>,
}

impl PolyJson {
    pub fn from_bipoly(f: &BiPoly) -> Self {
        let coeffs: Vec<Vec<String>> = f
            .y_coeffs()
            .iter()
            .map(|c| c.coeffs().iter().map(to_fraction_string).collect())
            .collect();
        PolyJson { y_degree: f.y_degree().unwrap_or(0), coeffs }
    }

    pub fn from_y_poly(p: &UniPoly) -> Self {
        Self::from_bipoly(&BiPoly::from_y(p))
    }

    /// Validates and converts; rejects untrimmed rows and a wrong `y_degree`.
    pub fn to_bipoly(&self) -> Result<BiPoly> {
        let bad = |msg: String| Err(Error::Parse { pos: 0, msg });
        let expected = self.coeffs.len().saturating_sub(1);
        if self.y_degree != expected {
            return bad(format!("y_degree {} but {} rows", self.y_degree, self.coeffs.len()));
        }
        let mut rows = Vec::with_capacity(self.coeffs.len());
        for (j, row) in self.coeffs.iter().enumerate() {
            let vals: Vec<Rational> = row.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
            let p = UniPoly::new(vals);
            if p.coeffs().len() != row.len() {
                return bad(format!("row {j} has trailing zeros"));
            }
            rows.push(p);
        }
        let f = BiPoly::new(rows);
        if f.y_coeffs().len() != self.coeffs.len() {
            return bad("leading row is zero".into());
        }
        Ok(f)
    }

    pub fn to_y_poly(&self) -> Result<UniPoly> {
        let f = self.to_bipoly()?;
        if f.x_degree().unwrap_or(0) > 0 {
            return Err(Error::Parse { pos: 0, msg: "polynomial depends on x".into() });
        }
        Ok(UniPoly::new(f.y_coeffs().iter().map(|c| c.coeff(0)).collect()))
    }
}

pub fn bipoly_to_json(f: &BiPoly) -> String {
    serde_json::to_string(&PolyJson::from_bipoly(f)).expect("serializable")
}

pub fn bipoly_from_json(s: &str) -> Result<BiPoly> {
    let v: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    v.to_bipoly()
}
