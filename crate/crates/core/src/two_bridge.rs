//! Two-bridge knot identifiers, sign sequences and Schubert relator words.
//!
//! The knot group of `b(p,q)` is `<a, b | wa = bw>` with
//! `w = a^e1 b^e2 ... a^e(p-2) b^e(p-1)` and `e_j = (-1)^floor(jq/p)`.
//! The sign sequence only depends on `q mod 2p`, and it is palindromic
//! exactly when `q` is odd, so words are always built from the odd
//! representative of `q` modulo `p`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A two-bridge knot `b(p,q)` as presented by a particular `q`.
///
/// `p` is odd and at least 3, and `0 < q < p` with `gcd(p,q) = 1`. The
/// Riley polynomial depends on the presentation (`q` versus `q^-1 mod p`
/// give different polynomials of the same knot), so [`KnotId::new`] keeps
/// the given `q`; [`normalize`] picks the canonical `min(q, q^-1 mod p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotId {
    p: i64,
    q: i64,
}

impl KnotId {
    /// Validates `(p, q)` and reduces `q` into `(0, p)` without inverting it.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 3 {
            if p > 0 && p % 2 == 0 {
                return Err(Error::EvenP { p });
            }
            return Err(Error::PTooSmall { p });
        }
        if p % 2 == 0 {
            return Err(Error::EvenP { p });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(KnotId { p, q: q.rem_euclid(p) })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q^-1 mod p`.
    pub fn q_inverse(&self) -> i64 {
        let e = (self.q as i128).extended_gcd(&(self.p as i128));
        e.x.rem_euclid(self.p as i128) as i64
    }

    pub fn canonical(&self) -> KnotId {
        KnotId { p: self.p, q: self.q.min(self.q_inverse()) }
    }

    pub fn is_canonical(&self) -> bool {
        self.q <= self.q_inverse()
    }

    /// The odd representative of `q mod p` that drives the Schubert word:
    /// `q` itself when odd, otherwise `q - p`.
    pub fn schubert_q(&self) -> i64 {
        if self.q % 2 == 1 {
            self.q
        } else {
            self.q - self.p
        }
    }

    pub fn epsilons(&self) -> Vec<i8> {
        let q = self.schubert_q();
        (1..self.p).map(|j| epsilon_unchecked(self.p, q, j)).collect()
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

/// Validated id with `q` replaced by `min(q, q^-1 mod p)`.
pub fn normalize(p: i64, q: i64) -> Result<KnotId> {
    KnotId::new(p, q).map(|k| k.canonical())
}

/// All canonical ids with `p <= p_max`, sorted by `p` then `q`. Mirrors
/// `b(p, p-q)` are separate entries.
pub fn canonical_knots(p_max: i64) -> Vec<KnotId> {
    (3..=p_max)
        .step_by(2)
        .flat_map(|p| {
            (1..p).filter_map(move |q| KnotId::new(p, q).ok().filter(KnotId::is_canonical))
        })
        .collect()
}

/// `(-1)^floor(jq/p)` for `1 <= j <= p-1`; `q` may be any integer.
pub fn epsilon(p: i64, q: i64, j: i64) -> Result<i8> {
    if j < 1 || j > p - 1 {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: p - 1 });
    }
    Ok(epsilon_unchecked(p, q, j))
}

fn epsilon_unchecked(p: i64, q: i64, j: i64) -> i8 {
    let f = ((j as i128) * (q as i128)).div_euclid(p as i128);
    if f.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `J(2m, 2n)`
    EE,
    /// `J(2m, -2n)`
    EN,
    /// `J(2m+1, 2n)`
    OE,
    /// `J(2m+1, -2n)`
    ON,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::EE, Family::EN, Family::OE, Family::ON];
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "EE" => Ok(Family::EE),
            "EN" => Ok(Family::EN),
            "OE" => Ok(Family::OE),
            "ON" => Ok(Family::ON),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}; expected EE, EN, OE or ON"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Double twist knot `J(k, l)` with `kl` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleTwist {
    pub family: Family,
    pub m: i64,
    pub n: i64,
}

impl DoubleTwist {
    pub fn new(family: Family, m: i64, n: i64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidArgument(format!("m and n must be positive, got m={m}, n={n}")));
        }
        Ok(DoubleTwist { family, m, n })
    }

    /// The twist counts `(k, l)`.
    pub fn twists(&self) -> (i64, i64) {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::EE => (2 * m, 2 * n),
            Family::EN => (2 * m, -2 * n),
            Family::OE => (2 * m + 1, 2 * n),
            Family::ON => (2 * m + 1, -2 * n),
        }
    }

    /// `(p, q)` exactly as in the double twist dictionary.
    pub fn pq(&self) -> (i64, i64) {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::EE => (4 * m * n - 1, 4 * m * n - 2 * n - 1),
            Family::EN => (4 * m * n + 1, 4 * m * n - 2 * n + 1),
            Family::OE => (4 * m * n + 2 * n - 1, 4 * m * n - 1),
            Family::ON => (4 * m * n + 2 * n + 1, 4 * m * n + 1),
        }
    }
}

impl fmt::Display for DoubleTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, l) = self.twists();
        write!(f, "J({k},{l})")
    }
}

/// The presentation `b(p,q)` given by the dictionary, `q` not inverted.
/// Its Schubert word is the family word.
pub fn family_presentation(d: &DoubleTwist) -> KnotId {
    let (p, q) = d.pq();
    KnotId::new(p, q).expect("double twist knots have valid (p, q)")
}

/// The dictionary `(p, q)`, normalized.
pub fn family_to_pq(d: &DoubleTwist) -> KnotId {
    family_presentation(d).canonical()
}

/// Closed-form sign `e_j` for the family's own `(p, q)`, valid for
/// `1 <= j <= p - 1`.
pub fn epsilon_fast(d: &DoubleTwist, j: i64) -> Result<i8> {
    let (m, n) = (d.m, d.n);
    let hi = match d.family {
        Family::EE => 4 * m * n - 2,
        Family::EN => 4 * m * n,
        Family::OE => 2 * n * (2 * m + 1) - 2,
        Family::ON => 2 * n * (2 * m + 1),
    };
    if j < 1 || j > hi {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi });
    }
    let parity = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(match d.family {
        Family::EE => {
            let (q, r) = j.div_rem(&(2 * m));
            parity(q + r - 1)
        }
        Family::EN => {
            let (q, r) = j.div_rem(&(2 * m));
            if r == 0 {
                parity(q)
            } else {
                parity(q + r - 1)
            }
        }
        Family::OE => parity(j % (2 * m + 1) - 1),
        Family::ON => {
            let r = j % (2 * m + 1);
            if r == 0 {
                1
            } else {
                parity(r - 1)
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    /// `+1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    fn ascii(self) -> char {
        match (self.generator, self.exponent > 0) {
            (Generator::A, true) => 'a',
            (Generator::A, false) => 'A',
            (Generator::B, true) => 'b',
            (Generator::B, false) => 'B',
        }
    }
}

/// Alternating word `a^e1 b^e2 ... a^e(2k-1) b^e(2k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertWord {
    letters: Vec<Letter>,
}

impl SchubertWord {
    /// Checks that generators alternate starting with `a` and ending with `b`.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() || letters.len() % 2 == 1 {
            return Err(Error::InvalidWord(format!("length {} is not a positive even number", letters.len())));
        }
        for (i, l) in letters.iter().enumerate() {
            let want = if i % 2 == 0 { Generator::A } else { Generator::B };
            if l.generator != want {
                return Err(Error::InvalidWord(format!("letter {} should be {:?}", i + 1, want)));
            }
            if l.exponent != 1 && l.exponent != -1 {
                return Err(Error::InvalidWord(format!("letter {} has exponent {}", i + 1, l.exponent)));
            }
        }
        Ok(SchubertWord { letters })
    }

    pub fn from_epsilons(eps: &[i8]) -> Result<Self> {
        Self::new(
            eps.iter()
                .enumerate()
                .map(|(i, &e)| Letter {
                    generator: if i % 2 == 0 { Generator::A } else { Generator::B },
                    exponent: e,
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn epsilons(&self) -> Vec<i8> {
        self.letters.iter().map(|l| l.exponent).collect()
    }

    /// Compact ASCII form: `a`, `b` for `+1` and `A`, `B` for `-1`.
    pub fn to_ascii(&self) -> String {
        self.letters.iter().map(|l| l.ascii()).collect()
    }
}

/// Renders as `a b⁻¹ a⁻¹ b`.
impl fmt::Display for SchubertWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let g = match l.generator {
                Generator::A => 'a',
                Generator::B => 'b',
            };
            write!(f, "{g}{}", if l.exponent < 0 { "⁻¹" } else { "" })?;
        }
        Ok(())
    }
}

/// Accepts the compact ASCII form (`aBAb`) and the rendered form
/// (`a b⁻¹ a⁻¹ b`); `^-1`, `^{-1}` and a trailing `'` also invert a letter.
/// Whitespace is ignored.
impl FromStr for SchubertWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut letters: Vec<Letter> = Vec::new();
        let mut rest = s;
        while let Some(c) = rest.chars().next() {
            let pos = s.len() - rest.len();
            rest = &rest[c.len_utf8()..];
            let (generator, exponent) = match c {
                c if c.is_whitespace() => continue,
                'a' => (Generator::A, 1),
                'A' => (Generator::A, -1),
                'b' => (Generator::B, 1),
                'B' => (Generator::B, -1),
                _ => return Err(Error::Parse { pos, msg: format!("unexpected {c:?} in word") }),
            };
            let mut letter = Letter { generator, exponent };
            for marker in ["⁻¹", "^{-1}", "^-1", "'"] {
                if let Some(r) = rest.strip_prefix(marker) {
                    letter.exponent = -letter.exponent;
                    rest = r;
                    break;
                }
            }
            letters.push(letter);
        }
        SchubertWord::new(letters)
    }
}

/// The Schubert word of `b(p,q)`, of length `p - 1`.
pub fn schubert_word(k: &KnotId) -> SchubertWord {
    SchubertWord::from_epsilons(&k.epsilons()).expect("p - 1 is even and positive")
}

fn pattern(s: &str) -> Vec<Letter> {
    s.chars()
        .map(|c| match c {
            'a' => Letter { generator: Generator::A, exponent: 1 },
            'A' => Letter { generator: Generator::A, exponent: -1 },
            'b' => Letter { generator: Generator::B, exponent: 1 },
            'B' => Letter { generator: Generator::B, exponent: -1 },
            _ => unreachable!("pattern letter"),
        })
        .collect()
}

fn power(w: &[Letter], e: i64) -> Vec<Letter> {
    w.repeat(e.max(0) as usize)
}

/// Expands the closed-form relator word of a double twist family.
pub fn family_word(d: &DoubleTwist) -> SchubertWord {
    let (m, n) = (d.m, d.n);
    let cat = |parts: &[Vec<Letter>]| parts.concat();
    let letters = match d.family {
        // a (b^-1 a)^(m-1) [(b a^-1)^m (b^-1 a)^m]^(n-1) (b a^-1)^(m-1) b
        Family::EE => cat(&[
            pattern("a"),
            power(&pattern("Ba"), m - 1),
            power(&cat(&[power(&pattern("bA"), m), power(&pattern("Ba"), m)]), n - 1),
            power(&pattern("bA"), m - 1),
            pattern("b"),
        ]),
        // [(a b^-1)^m (a^-1 b)^m]^n
        Family::EN => power(&cat(&[power(&pattern("aB"), m), power(&pattern("Ab"), m)]), n),
        // (a b^-1)^m [(a^-1 b)^m a^-1 b^-1 (a b^-1)^m]^(n-1) (a^-1 b)^m
        Family::OE => cat(&[
            power(&pattern("aB"), m),
            power(&cat(&[power(&pattern("Ab"), m), pattern("AB"), power(&pattern("aB"), m)]), n - 1),
            power(&pattern("Ab"), m),
        ]),
        // [(a b^-1)^m a b (a^-1 b)^m]^n
        Family::ON => power(&cat(&[power(&pattern("aB"), m), pattern("ab"), power(&pattern("Ab"), m)]), n),
    };
    SchubertWord::new(letters).expect("family words alternate")
}
