//! Plain-text polynomial format.
//!
//! Terms are printed in descending degree, `y` before `x`:
//!
//! ```text
//! poly   := '0' | ['-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := digits ['/' digits]
//! factor := ('x' | 'y') ['^' digits]
//! ```
//!
//! Whitespace between tokens is ignored. Repeated factors multiply, so
//! `y*y` parses as `y^2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

/// Exponents above this are rejected by the parser.
pub const MAX_PARSE_DEGREE: usize = 4096;

fn push_term(out: &mut String, c: &Rational, monomial: &str) {
    let neg = c.is_negative();
    let abs = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let unit = abs.is_one();
    if !unit || monomial.is_empty() {
        out.push_str(&abs.to_string());
        if !monomial.is_empty() {
            out.push('*');
        }
    }
    out.push_str(monomial);
}

fn power(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Renders `p` as a polynomial in `var`, highest degree first.
pub fn render_uni(p: &UniPoly, var: char) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if !c.is_zero() {
            push_term(&mut out, c, &power(var, i));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a polynomial in `x` and `y`, by descending `y`-degree and then
/// descending `x`-degree.
pub fn render_bi(f: &BiPoly) -> String {
    let mut out = String::new();
    for (j, cx) in f.y_coeffs().iter().enumerate().rev() {
        for (i, c) in cx.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match (power('y', j), power('x', i)) {
                (a, b) if a.is_empty() => b,
                (a, b) if b.is_empty() => a,
                (a, b) => format!("{a}*{b}"),
            };
            push_term(&mut out, c, &mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    let terms = Parser { src: s.as_bytes(), pos: 0 }.poly()?;
    let y_deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); y_deg + 1];
    for (c, j, i) in terms {
        let row = &mut rows[j];
        if row.len() <= i {
            row.resize(i + 1, Rational::zero());
        }
        row[i] += c;
    }
    Ok(BiPoly::new(rows.into_iter().map(UniPoly::new).collect()))
}

/// Parses a univariate polynomial in `var` (`x` or `y`).
pub fn parse_poly(s: &str, var: char) -> Result<UniPoly> {
    if var != 'x' && var != 'y' {
        return Err(Error::InvalidArgument(format!("unsupported variable {var:?}")));
    }
    let f = parse_bipoly(s)?;
    let other = if var == 'y' { f.x_degree() } else { f.y_degree() };
    if other.unwrap_or(0) > 0 {
        return Err(Error::Parse { pos: 0, msg: format!("polynomial is not univariate in {var}") });
    }
    Ok(if var == 'y' {
        UniPoly::new(f.y_coeffs().iter().map(|c| c.coeff(0)).collect())
    } else {
        f.y_coeff(0)
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type Term = (Rational, usize, usize);

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (c, j, i) = self.term()?;
            terms.push((if neg { -c } else { c }, j, i));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else if self.peek().is_none() {
                return Ok(terms);
            } else {
                return self.err("expected '+', '-' or end of input");
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut c = Rational::one();
        let (mut j, mut i) = (0usize, 0usize);
        match self.peek() {
            Some(b) if b.is_ascii_digit() => c = self.coeff()?,
            Some(b'x' | b'y') => self.factor(&mut j, &mut i)?,
            _ => return self.err("expected a coefficient or a variable"),
        }
        while self.eat(b'*') {
            self.factor(&mut j, &mut i)?;
        }
        Ok((c, j, i))
    }

    fn factor(&mut self, j: &mut usize, i: &mut usize) -> Result<()> {
        let var = match self.peek() {
            Some(v @ (b'x' | b'y')) => v,
            _ => return self.err("expected 'x' or 'y'"),
        };
        self.pos += 1;
        let e = if self.eat(b'^') { self.small_uint()? } else { 1 };
        let slot = if var == b'y' { j } else { i };
        *slot += e;
        if *slot > MAX_PARSE_DEGREE {
            return self.err("degree too large");
        }
        Ok(())
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let d = self.digits()?;
        match d.parse::<usize>() {
            Ok(v) if v <= MAX_PARSE_DEGREE => Ok(v),
            _ => self.err("exponent too large"),
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("ascii digits");
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let at = self.pos;
        let den: BigInt = self.digits()?.parse().expect("ascii digits");
        if den.is_zero() {
            return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
        }
        Ok(Rational::new(num, den))
    }
}
