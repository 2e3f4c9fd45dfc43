//! Truncated power series with coefficients in Z_p.
//!
//! Coefficients are kept in the canonical residue set `{0, …, p-1}` and
//! stored densely with trailing zeros stripped, so two series compare equal
//! exactly when they agree as (finite) polynomials.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on exponents accepted by the parser.
const MAX_EXPONENT: usize = 1 << 16;

/// The modulus `p` of the coefficient ring, with primality decided once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u32,
    prime: bool,
}

impl Modulus {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p as u64));
        }
        Ok(Modulus {
            p,
            prime: is_prime(p),
        })
    }

    pub fn value(self) -> u32 {
        self.p
    }

    pub fn is_prime(self) -> bool {
        self.prime
    }

    /// Fails with [`Error::NonPrimeModulus`] unless `p` is prime.
    pub fn require_prime(self) -> Result<()> {
        if self.prime {
            Ok(())
        } else {
            Err(Error::NonPrimeModulus(self.p))
        }
    }

    pub fn require(self, expected: u32) -> Result<()> {
        if self.p == expected {
            Ok(())
        } else {
            Err(Error::WrongModulus {
                expected,
                found: self.p,
            })
        }
    }

    pub(crate) fn reduce(self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + b as u64)
    }

    fn check_same(self, other: Modulus) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A finite coefficient sequence over Z_p; index `k` holds `[t^k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffSeq {
    modulus: Modulus,
    coeffs: Vec<u32>,
}

impl CoeffSeq {
    pub fn zero(modulus: Modulus) -> Self {
        CoeffSeq {
            modulus,
            coeffs: Vec::new(),
        }
    }

    /// Builds a series from residues, rejecting anything outside `0..p`.
    pub fn from_residues(modulus: Modulus, coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= modulus.p) {
            return Err(Error::ResidueOutOfRange {
                value: bad as u64,
                p: modulus.p,
            });
        }
        Ok(Self::normalized(modulus, coeffs))
    }

    /// Builds a series from arbitrary non-negative integers, reducing mod p.
    pub fn from_ints(modulus: Modulus, coeffs: &[u64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| modulus.reduce(c)).collect();
        Self::normalized(modulus, coeffs)
    }

    fn normalized(modulus: Modulus, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CoeffSeq { modulus, coeffs }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `[t^k]`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Coefficients up to the highest nonzero one.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Keeps coefficients of degree `<= max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        let end = self.coeffs.len().min(max_degree + 1);
        Self::normalized(self.modulus, self.coeffs[..end].to_vec())
    }

    pub fn add(&self, other: &CoeffSeq) -> Result<CoeffSeq> {
        self.modulus.check_same(other.modulus)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let sum = (0..len)
            .map(|k| self.modulus.add(self.coeff(k), other.coeff(k)))
            .collect();
        Ok(Self::normalized(self.modulus, sum))
    }

    /// Product truncated at `max_degree`.
    pub fn mul_truncated(&self, other: &CoeffSeq, max_degree: usize) -> Result<CoeffSeq> {
        self.modulus.check_same(other.modulus)?;
        Ok(Self::normalized(
            self.modulus,
            mul_trunc(self.modulus, &self.coeffs, &other.coeffs, max_degree),
        ))
    }
}

pub(crate) fn mul_trunc(m: Modulus, a: &[u32], b: &[u32], max_degree: usize) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = (a.len() + b.len() - 1).min(max_degree + 1);
    let p = m.p as u64;
    let mut out = vec![0u64; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    out.into_iter().map(|v| v as u32).collect()
}

impl fmt::Display for CoeffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Parses `poly := term ('+' term)*` where a term is `INT`, `INT t`,
/// `INT t^INT`, `t` or `t^INT`. Whitespace is ignored; coefficients are
/// reduced mod p and repeated powers are summed.
pub fn parse_poly(text: &str, modulus: Modulus) -> Result<CoeffSeq> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Ok(CoeffSeq::zero(modulus));
    }
    let mut parser = PolyParser {
        chars: &chars,
        at: 0,
        end: text.len(),
        modulus,
    };
    let mut coeffs: Vec<u32> = Vec::new();
    loop {
        let (c, k) = parser.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] = modulus.add(coeffs[k], c);
        match parser.peek() {
            None => break,
            Some((_, '+')) => parser.at += 1,
            Some((pos, '-')) => return Err(Error::NegativeCoefficient(pos)),
            Some((pos, ch)) => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("expected '+', found {ch:?}"),
                })
            }
        }
    }
    Ok(CoeffSeq::normalized(modulus, coeffs))
}

struct PolyParser<'a> {
    chars: &'a [(usize, char)],
    at: usize,
    end: usize,
    modulus: Modulus,
}

impl PolyParser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    /// One term as (residue, exponent).
    fn term(&mut self) -> Result<(u32, usize)> {
        let coeff = match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => Some(self.int_residue()),
            Some((pos, '-')) => return Err(Error::NegativeCoefficient(pos)),
            Some((_, 't')) => None,
            Some((pos, ch)) => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("expected integer or 't', found {ch:?}"),
                })
            }
            None => {
                return Err(Error::Syntax {
                    pos: self.end,
                    msg: "expected a term".into(),
                })
            }
        };
        if !matches!(self.peek(), Some((_, 't'))) {
            // a bare integer is a constant term
            return Ok((coeff.unwrap_or(0), 0));
        }
        self.at += 1;
        let exponent = if matches!(self.peek(), Some((_, '^'))) {
            self.at += 1;
            self.exponent()?
        } else {
            1
        };
        Ok((coeff.unwrap_or(1), exponent))
    }

    fn int_residue(&mut self) -> u32 {
        let p = self.modulus.p as u64;
        let mut r = 0u64;
        while let Some((_, c)) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            r = (r * 10 + d as u64) % p;
            self.at += 1;
        }
        r as u32
    }

    fn exponent(&mut self) -> Result<usize> {
        let start = self.pos();
        match self.peek() {
            Some((pos, '-')) => return Err(Error::NegativeExponent(pos)),
            Some((_, c)) if c.is_ascii_digit() => {}
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "expected exponent after '^'".into(),
                })
            }
        }
        let mut e = 0usize;
        while let Some((_, c)) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            e = e * 10 + d as usize;
            if e > MAX_EXPONENT {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("exponent exceeds {MAX_EXPONENT}"),
                });
            }
            self.at += 1;
        }
        Ok(e)
    }
}

/// `[t^k] g·f^j mod p`, computed on degree-`k` truncations only.
pub fn product_coeff(g: &CoeffSeq, f: &CoeffSeq, j: usize, k: usize) -> Result<u32> {
    g.modulus.check_same(f.modulus)?;
    let m = g.modulus;
    if f.coeff(0) == 0 && j > k {
        return Ok(0);
    }
    let f_trunc = &f.coeffs[..f.coeffs.len().min(k + 1)];
    let mut power = vec![1u32];
    for _ in 0..j {
        power = mul_trunc(m, &power, f_trunc, k);
    }
    let mut acc = 0u32;
    for (a, &ga) in g.coeffs.iter().enumerate().take(k + 1) {
        let pb = power.get(k - a).copied().unwrap_or(0);
        acc = m.add(acc, m.mul(ga, pb));
    }
    Ok(acc)
}

/// Formal derivative; coefficient `i` is `(i+1)·f_{i+1} mod p`.
pub fn derivative(f: &CoeffSeq) -> CoeffSeq {
    let m = f.modulus;
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| m.mul(m.reduce(i as u64), c))
        .collect();
    CoeffSeq::normalized(m, coeffs)
}

/// The determining data of a p-Riordan graph of order `n`.
///
/// `g` holds `g_{b*}, …, g_{n-2}` (lower coefficients zero) and `f` holds
/// `f_1, …, f_{n-2-b*}`. When `b*` is absent the graph is empty and both
/// series are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PairRepr", try_from = "PairRepr")]
pub struct CanonicalPair {
    modulus: Modulus,
    n: usize,
    bstar: Option<usize>,
    g: CoeffSeq,
    f: CoeffSeq,
}

impl CanonicalPair {
    pub fn empty(modulus: Modulus, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(CanonicalPair {
            modulus,
            n,
            bstar: None,
            g: CoeffSeq::zero(modulus),
            f: CoeffSeq::zero(modulus),
        })
    }

    /// Canonical pair from raw residue vectors (`f[0]` must be zero).
    pub fn from_residues(modulus: Modulus, n: usize, g: Vec<u32>, f: Vec<u32>) -> Result<Self> {
        canonicalize(
            &CoeffSeq::from_residues(modulus, g)?,
            &CoeffSeq::from_residues(modulus, f)?,
            n,
        )
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bstar(&self) -> Option<usize> {
        self.bstar
    }

    pub fn is_empty_graph(&self) -> bool {
        self.bstar.is_none()
    }

    pub fn g(&self) -> &CoeffSeq {
        &self.g
    }

    pub fn f(&self) -> &CoeffSeq {
        &self.f
    }

    /// Number of determining f coefficients, `n-2-b*` (zero for the empty graph).
    pub fn f_span(&self) -> usize {
        self.bstar.map_or(0, |b| self.n - 2 - b)
    }
}

impl fmt::Display for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G_{}({}, {}) mod {}",
            self.n, self.g, self.f, self.modulus
        )
    }
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    n: usize,
    p: u32,
    g: String,
    f: String,
}

impl From<CanonicalPair> for PairRepr {
    fn from(pair: CanonicalPair) -> Self {
        PairRepr {
            n: pair.n,
            p: pair.modulus.p,
            g: pair.g.to_string(),
            f: pair.f.to_string(),
        }
    }
}

impl TryFrom<PairRepr> for CanonicalPair {
    type Error = Error;

    fn try_from(repr: PairRepr) -> Result<Self> {
        let m = Modulus::new(repr.p)?;
        canonicalize(&parse_poly(&repr.g, m)?, &parse_poly(&repr.f, m)?, repr.n)
    }
}

/// Reduces `(g, f)` to the coefficients that determine `G_n(g, f)`.
pub fn canonicalize(g: &CoeffSeq, f: &CoeffSeq, n: usize) -> Result<CanonicalPair> {
    g.modulus.check_same(f.modulus)?;
    let m = g.modulus;
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if f.coeff(0) != 0 {
        return Err(Error::NonzeroConstantTerm(f.coeff(0)));
    }
    let bstar = if n >= 2 {
        (0..=n - 2).find(|&i| g.coeff(i) != 0)
    } else {
        None
    };
    let Some(b) = bstar else {
        return CanonicalPair::empty(m, n);
    };
    let g_kept = g.truncated(n - 2);
    let span = n - 2 - b;
    let f_kept = if span == 0 {
        CoeffSeq::zero(m)
    } else {
        f.truncated(span)
    };
    Ok(CanonicalPair {
        modulus: m,
        n,
        bstar,
        g: g_kept,
        f: f_kept,
    })
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u32 = s.trim().parse().map_err(|_| Error::Syntax {
            pos: 0,
            msg: format!("invalid modulus {s:?}"),
        })?;
        Modulus::new(v)
    }
}
