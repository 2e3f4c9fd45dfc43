//! p-Riordan words and the bijection between graphs of order `n+1` and
//! words of length `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::GraphClass;
use crate::series::{CanonicalPair, Modulus};

/// Letter `a_{g,f}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub g: u32,
    pub f: u32,
}

impl Letter {
    pub const ZERO: Letter = Letter { g: 0, f: 0 };

    pub fn new(g: u32, f: u32) -> Self {
        Letter { g, f }
    }
}

/// A word whose first non-`a_{0,0}` letter, if any, is `a_{b,0}` with `b ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PRiordanWord {
    modulus: Modulus,
    letters: Vec<Letter>,
}

impl PRiordanWord {
    pub fn new(letters: Vec<Letter>, modulus: Modulus) -> Result<Self> {
        if !validate_word(&letters, modulus)? {
            return Err(Error::InvalidWord(
                "first non-a(0,0) letter must be a(b,0) with b >= 1".into(),
            ));
        }
        Ok(PRiordanWord { modulus, letters })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
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

    /// Parses `abcd` text for p = 2, otherwise comma-separated `i:j` tokens.
    pub fn parse(text: &str, modulus: Modulus) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return PRiordanWord::new(Vec::new(), modulus);
        }
        let letters = if modulus.value() == 2 && !text.contains(':') {
            text.chars()
                .enumerate()
                .map(|(pos, c)| match c {
                    'a' => Ok(Letter::new(0, 0)),
                    'b' => Ok(Letter::new(1, 0)),
                    'c' => Ok(Letter::new(0, 1)),
                    'd' => Ok(Letter::new(1, 1)),
                    _ => Err(Error::Syntax {
                        pos,
                        msg: format!("expected one of a, b, c, d, found {c:?}"),
                    }),
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(',')
                .enumerate()
                .map(|(pos, tok)| parse_token(tok.trim(), pos))
                .collect::<Result<Vec<_>>>()?
        };
        PRiordanWord::new(letters, modulus)
    }
}

fn parse_token(tok: &str, pos: usize) -> Result<Letter> {
    let bad = || Error::Syntax {
        pos,
        msg: format!("expected token i:j, found {tok:?}"),
    };
    let (g, f) = tok.split_once(':').ok_or_else(bad)?;
    Ok(Letter::new(
        g.trim().parse().map_err(|_| bad())?,
        f.trim().parse().map_err(|_| bad())?,
    ))
}

impl fmt::Display for PRiordanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.value() == 2 {
            for l in &self.letters {
                let c = match (l.g, l.f) {
                    (0, 0) => 'a',
                    (1, 0) => 'b',
                    (0, 1) => 'c',
                    _ => 'd',
                };
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let toks: Vec<String> = self
                .letters
                .iter()
                .map(|l| format!("{}:{}", l.g, l.f))
                .collect();
            f.write_str(&toks.join(","))
        }
    }
}

/// Checks the prefix condition; out-of-range components are an error.
pub fn validate_word(letters: &[Letter], modulus: Modulus) -> Result<bool> {
    let p = modulus.value();
    if let Some((pos, l)) = letters
        .iter()
        .enumerate()
        .find(|(_, l)| l.g >= p || l.f >= p)
    {
        return Err(Error::LetterOutOfRange {
            pos,
            g: l.g,
            f: l.f,
            p,
        });
    }
    Ok(match letters.iter().find(|&&l| l != Letter::ZERO) {
        None => true,
        Some(l) => l.f == 0,
    })
}

/// Word of length `n-1` for a graph of order `n`: `b*` copies of `a_{0,0}`,
/// the pivot `a_{g_{b*},0}`, then `a_{g_{b*+k}, f_k}` for `k = 1..=n-2-b*`.
pub fn xi(pair: &CanonicalPair) -> Result<PRiordanWord> {
    let m = pair.modulus();
    m.require_prime()?;
    let len = pair.order() - 1;
    let letters = match pair.bstar() {
        None => vec![Letter::ZERO; len],
        Some(b) => {
            let mut v = vec![Letter::ZERO; b];
            v.push(Letter::new(pair.g().coeff(b), 0));
            v.extend(
                (1..=pair.f_span()).map(|k| Letter::new(pair.g().coeff(b + k), pair.f().coeff(k))),
            );
            v
        }
    };
    debug_assert_eq!(letters.len(), len);
    Ok(PRiordanWord {
        modulus: m,
        letters,
    })
}

/// Inverse of [`xi`]; the graph has order `word.len() + 1`.
pub fn xi_inv(word: &PRiordanWord) -> Result<CanonicalPair> {
    let m = word.modulus;
    m.require_prime()?;
    if !validate_word(&word.letters, m)? {
        return Err(Error::InvalidWord("prefix condition violated".into()));
    }
    let n = word.len() + 1;
    let Some(b) = word.letters.iter().position(|&l| l != Letter::ZERO) else {
        return CanonicalPair::empty(m, n);
    };
    let g: Vec<u32> = word.letters.iter().map(|l| l.g).collect();
    let mut f = vec![0u32];
    f.extend(word.letters[b + 1..].iter().map(|l| l.f));
    CanonicalPair::from_residues(m, n, g, f)
}

/// `s_0 = 1`, `s_{n+1} = p²(s_n - 1) + p`.
pub fn count_words(n: usize, modulus: Modulus) -> BigUint {
    let p = BigUint::from(modulus.value());
    let p2 = &p * &p;
    let mut s = BigUint::one();
    for _ in 0..n {
        s = &p2 * (s - 1u32) + &p;
    }
    s
}

/// Syntactic membership in the `(1+f, f)`, proper and Appell families for
/// p = 2 words (letters `a, b, c, d`).
pub fn word_class(word: &PRiordanWord) -> Result<GraphClass> {
    word.modulus.require(2)?;
    let s = word.to_string();
    let mut class = GraphClass::empty();

    // b x_1 … x_k with every x in {a, d}
    if let Some(rest) = s.strip_prefix('b') {
        if rest.chars().all(|c| c == 'a' || c == 'd') {
            class |= GraphClass::ONE_PLUS_F;
        }
    }
    if s == "b" || s.starts_with("bc") || s.starts_with("bd") {
        class |= GraphClass::PROPER;
    }
    // a…a, a…ab, or a…ab x w with x in {c, d} and w over {a, b}
    let rest = s.trim_start_matches('a');
    let appell = match rest.strip_prefix('b') {
        None => rest.is_empty(),
        Some(tail) => {
            let mut chars = tail.chars();
            match chars.next() {
                None => true,
                Some('c' | 'd') => chars.all(|c| c == 'a' || c == 'b'),
                Some(_) => false,
            }
        }
    };
    if appell {
        class |= GraphClass::APPELL;
    }
    Ok(class)
}
