//! Plain-text output formats.

use riley_core::real_roots::RootCount;
use riley_core::signature::SignatureResult;
use riley_core::text::{render_bi, render_uni};
use riley_core::{BiPoly, Rational, UniPoly};

/// `+ - - +`
pub fn epsilons(eps: &[i8]) -> String {
    eps.iter().map(|&e| if e > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(" ")
}

pub fn bivariate(f: &BiPoly) -> String {
    render_bi(f)
}

pub fn in_y(f: &UniPoly) -> String {
    render_uni(f, 'y')
}

/// `|σ| = 2 (σ = +2 under q-even convention), CF = [4, 2], det = 7`
pub fn signature(s: &SignatureResult) -> String {
    let signed = if s.sigma_signed > 0 { format!("+{}", s.sigma_signed) } else { s.sigma_signed.to_string() };
    format!(
        "|σ| = {} (σ = {} under q-even convention), CF = {}, det = {}",
        s.sigma_abs,
        signed,
        s.cf,
        s.det.magnitude()
    )
}

pub fn intervals(r: &RootCount) -> Vec<String> {
    r.intervals
        .iter()
        .flatten()
        .map(|(lo, hi)| format!("({lo}, {hi})"))
        .collect()
}

pub fn rational(r: &Rational) -> String {
    r.to_string()
}
