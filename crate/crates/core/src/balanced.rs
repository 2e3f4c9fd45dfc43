//! Balanced words over `{0, 1, 2}`, the maps `h_{x,y}`, the bijection
//! between oriented Riordan graphs (p = 3) of order `n+1` and balanced words
//! of length `2n`, and closed walks on the hypercube.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{CanonicalPair, Modulus};

/// Largest cube dimension accepted by the walk oracles.
pub const MAX_WALK_DIM: usize = 16;

pub fn parse_ternary(text: &str) -> Result<Vec<u8>> {
    text.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            '2' => Ok(2),
            _ => Err(Error::ForeignLetter(c)),
        })
        .collect()
}

fn letter_char(x: u8) -> char {
    char::from_digit(x as u32, 36).unwrap_or('?')
}

/// Even length and an even number of each letter.
pub fn is_balanced(letters: &[u8]) -> Result<bool> {
    let mut parity = [false; 3];
    for &x in letters {
        match parity.get_mut(x as usize) {
            Some(bit) => *bit ^= true,
            None => return Err(Error::ForeignLetter(letter_char(x))),
        }
    }
    Ok(letters.len().is_multiple_of(2) && parity == [false; 3])
}

/// A word over `{0, 1, 2}` with every letter occurring an even number of times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BalancedWord(Vec<u8>);

impl BalancedWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if is_balanced(&letters)? {
            Ok(BalancedWord(letters))
        } else {
            Err(Error::Unbalanced)
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        BalancedWord::new(parse_ternary(text)?)
    }

    pub fn constant(letter: u8, len: usize) -> Self {
        debug_assert!(letter < 3 && len.is_multiple_of(2));
        BalancedWord(vec![letter; len])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn is_constant(&self, letter: u8) -> bool {
        self.0.iter().all(|&x| x == letter)
    }
}

impl fmt::Display for BalancedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn check_pair(x: u8, y: u8) -> Result<()> {
    if x > 2 || y > 2 || x == y {
        return Err(Error::BadLetterPair(x, y));
    }
    Ok(())
}

/// Flips the leftmost letter from `{x, y}` to the other one and appends
/// `xy`. Defined on every balanced word except `z…z` with `z ∉ {x, y}`.
pub fn h_map(w: &BalancedWord, x: u8, y: u8) -> Result<BalancedWord> {
    check_pair(x, y)?;
    let mut out = w.0.clone();
    let at = out
        .iter()
        .position(|&c| c == x || c == y)
        .ok_or(Error::OutsideHDomain(x, y))?;
    out[at] = if out[at] == x { y } else { x };
    out.extend([x, y]);
    Ok(BalancedWord(out))
}

/// Inverse of [`h_map`]; also returns the suffix letters `(x, y)`.
pub fn h_inv(v: &BalancedWord) -> Result<(BalancedWord, u8, u8)> {
    let len = v.len();
    if len < 2 || v.0[len - 2] == v.0[len - 1] {
        return Err(Error::EqualSuffix);
    }
    let (x, y) = (v.0[len - 2], v.0[len - 1]);
    let mut out = v.0[..len - 2].to_vec();
    // a balanced word ending in xy has an odd number of x before the suffix
    let at = out
        .iter()
        .position(|&c| c == x || c == y)
        .ok_or_else(|| Error::Consistency(format!("no letter from {{{x},{y}}} in {v}")))?;
    out[at] = if out[at] == x { y } else { x };
    Ok((BalancedWord(out), x, y))
}

/// Suffix letters used when the new f coefficient is nonzero.
fn suffix_for(f_new: u32, g_new: u32) -> (u8, u8) {
    match (f_new, g_new) {
        (1, 0) => (0, 1),
        (1, 1) => (1, 2),
        (1, 2) => (0, 2),
        (2, 0) => (1, 0),
        (2, 1) => (2, 1),
        (2, 2) => (2, 0),
        _ => unreachable!("residues mod 3 with f nonzero"),
    }
}

/// Inverse of [`suffix_for`] as `(f_new, g_new)`.
fn coeffs_for(x: u8, y: u8) -> (u32, u32) {
    match (x, y) {
        (0, 1) => (1, 0),
        (1, 2) => (1, 1),
        (0, 2) => (1, 2),
        (1, 0) => (2, 0),
        (2, 1) => (2, 1),
        (2, 0) => (2, 2),
        _ => unreachable!("distinct ternary letters"),
    }
}

/// Oriented Riordan graph of order `n+1` to a balanced word of length `2n`.
///
/// Built order by order from `G_2(g_0, 0) ↦ g_0 g_0`. Going from order `m`
/// to `m+1` adds `g_{m-1}` and, once `b*` exists, `f_{m-1-b*}`. A zero
/// (or absent) new f coefficient appends `g_{m-1} g_{m-1}`; otherwise the
/// word goes through `h_{x,y}` with `xy` picked by the pair of new
/// coefficients, substituting `0…0` for the one constant word outside
/// `h_{x,y}`'s domain.
pub fn eta(pair: &CanonicalPair) -> Result<BalancedWord> {
    pair.modulus().require(3)?;
    let order = pair.order();
    if order == 1 {
        return Ok(BalancedWord(Vec::new()));
    }
    let g = |i: usize| pair.g().coeff(i);
    let g0 = g(0) as u8;
    let mut word = BalancedWord(vec![g0, g0]);
    let mut bstar = (g0 != 0).then_some(0);
    for m in 2..order {
        let g_new = g(m - 1);
        let f_new = bstar.map_or(0, |b| pair.f().coeff(m - 1 - b));
        word = if f_new == 0 {
            let mut w = word.0;
            w.extend([g_new as u8, g_new as u8]);
            BalancedWord(w)
        } else {
            let (x, y) = suffix_for(f_new, g_new);
            let z = 3 - x - y;
            let src = if word.is_constant(z) {
                BalancedWord::constant(0, word.len())
            } else {
                word
            };
            h_map(&src, x, y).map_err(|e| match e {
                Error::OutsideHDomain(..) => {
                    Error::Consistency(format!("empty prefix with nonzero f in {pair}"))
                }
                other => other,
            })?
        };
        if bstar.is_none() && g_new != 0 {
            bstar = Some(m - 1);
        }
    }
    Ok(word)
}

/// Inverse of [`eta`]: peels two letters at a time back to the base word.
pub fn eta_inv(word: &BalancedWord) -> Result<CanonicalPair> {
    let m3 = Modulus::new(3)?;
    let order = word.len() / 2 + 1;
    if word.is_empty() {
        return CanonicalPair::empty(m3, 1);
    }
    // (g_new, f_new) per step, last step first
    let mut steps = Vec::with_capacity(order - 2);
    let mut cur = word.clone();
    while cur.len() > 2 {
        let len = cur.len();
        let (x, y) = (cur.0[len - 2], cur.0[len - 1]);
        if x == y {
            steps.push((x as u32, 0));
            cur.0.truncate(len - 2);
        } else {
            let (f_new, g_new) = coeffs_for(x, y);
            let (mut prev, ..) = h_inv(&cur)?;
            if prev.is_constant(0) {
                let z = 3 - x - y;
                if z == 0 {
                    return Err(Error::Consistency(format!(
                        "{word} peels to an empty prefix under suffix {x}{y}"
                    )));
                }
                prev = BalancedWord::constant(z, prev.len());
            }
            steps.push((g_new, f_new));
            cur = prev;
        }
    }
    let g0 = cur.0[0] as u32;
    let mut g = vec![g0];
    let mut f = vec![0u32];
    let mut has_bstar = g0 != 0;
    for (g_new, f_new) in steps.into_iter().rev() {
        if has_bstar {
            f.push(f_new);
        } else if f_new != 0 {
            return Err(Error::Consistency(format!(
                "nonzero f before the first nonzero g in {word}"
            )));
        }
        g.push(g_new);
        has_bstar |= g_new != 0;
    }
    CanonicalPair::from_residues(m3, order, g, f)
}

/// A walk on the `dim`-cube from the origin; each step flips one coordinate
/// (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeWalk {
    dim: usize,
    steps: Vec<usize>,
}

impl CubeWalk {
    pub fn new(dim: usize, steps: Vec<usize>) -> Result<Self> {
        if dim == 0 || dim > 64 {
            return Err(Error::DimensionTooLarge(dim));
        }
        if let Some(&step) = steps.iter().find(|&&s| s == 0 || s > dim) {
            return Err(Error::StepOutOfRange { step, dim });
        }
        Ok(CubeWalk { dim, steps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// Visited vertices as coordinate bitmasks, starting at the origin.
    pub fn vertices(&self) -> Vec<u64> {
        let mut at = 0u64;
        let mut out = vec![at];
        for &s in &self.steps {
            at ^= 1 << (s - 1);
            out.push(at);
        }
        out
    }

    pub fn endpoint(&self) -> u64 {
        self.steps.iter().fold(0, |at, &s| at ^ (1 << (s - 1)))
    }

    pub fn is_closed(&self) -> bool {
        self.endpoint() == 0
    }
}

/// Letter `ℓ` at position `i` becomes a step flipping coordinate `ℓ+1`.
pub fn word_to_walk(word: &[u8]) -> Result<CubeWalk> {
    let steps = word
        .iter()
        .map(|&x| {
            if x > 2 {
                Err(Error::ForeignLetter(letter_char(x)))
            } else {
                Ok(x as usize + 1)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CubeWalk::new(3, steps)
}

pub fn walk_to_word(walk: &CubeWalk) -> Result<Vec<u8>> {
    if walk.dim != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: walk.dim,
        });
    }
    Ok(walk.steps.iter().map(|&s| (s - 1) as u8).collect())
}

/// Closed walks of length `len` at the origin of the `dim`-cube, as the
/// origin entry of the `len`-th power of the adjacency matrix. The power is
/// applied to the origin's indicator vector one factor at a time.
pub fn count_closed_walks_matrix(dim: usize, len: usize) -> Result<BigUint> {
    if dim == 0 || dim > MAX_WALK_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    let size = 1usize << dim;
    let neighbors: Vec<Vec<usize>> = (0..size)
        .map(|v| (0..dim).map(|i| v ^ (1 << i)).collect())
        .collect();
    let mut counts = vec![BigUint::zero(); size];
    counts[0] = BigUint::one();
    for _ in 0..len {
        counts = neighbors
            .iter()
            .map(|row| row.iter().map(|&u| &counts[u]).sum())
            .collect();
    }
    Ok(counts.swap_remove(0))
}

/// `2^{-dim} Σ_j C(dim, j) (dim - 2j)^len`, evaluated exactly.
pub fn count_closed_walks_formula(dim: usize, len: usize) -> Result<BigUint> {
    if dim == 0 {
        return Err(Error::DimensionTooLarge(dim));
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=dim {
        let base = BigInt::from(dim as i64 - 2 * j as i64);
        sum += &binom * num_traits::pow(base, len);
        binom = binom * (dim - j) / (j + 1);
    }
    let denom = BigInt::one() << dim;
    if !(&sum % &denom).is_zero() || sum.sign() == Sign::Minus {
        return Err(Error::Consistency(format!(
            "walk formula not a non-negative multiple of 2^{dim} at length {len}"
        )));
    }
    Ok((sum / denom).to_biguint().expect("non-negative"))
}

/// `b_0 = 1`, `b_{n+1} = 3 b_n + 6 (b_n - 1)`; cross-checked against
/// `(9^n + 3)/4` and both walk counts on the 3-cube.
pub fn count_balanced(n: usize) -> Result<BigUint> {
    let mut b = BigUint::one();
    for _ in 0..n {
        b = 3u32 * &b + 6u32 * (&b - 1u32);
    }
    if n >= 1 {
        let closed = (num_traits::pow(BigUint::from(9u32), n) + 3u32) / 4u32;
        if closed != b {
            return Err(Error::Consistency(format!(
                "recursion {b} != closed form {closed} at n = {n}"
            )));
        }
    }
    let walks = count_closed_walks_matrix(3, 2 * n)?;
    let formula = count_closed_walks_formula(3, 2 * n)?;
    if walks != b || formula != b {
        return Err(Error::Consistency(format!(
            "balanced count {b}, matrix walks {walks}, formula walks {formula} at n = {n}"
        )));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_graphs, enumerate_graphs};
    use crate::series::{canonicalize, parse_poly};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn bw(s: &str) -> BalancedWord {
        BalancedWord::parse(s).unwrap()
    }

    fn pair(g: &str, f: &str, n: usize) -> CanonicalPair {
        let m = Modulus::new(3).unwrap();
        canonicalize(&parse_poly(g, m).unwrap(), &parse_poly(f, m).unwrap(), n).unwrap()
    }

    /// Every balanced word of length `2n`, by brute force.
    fn all_balanced(n: usize) -> Vec<BalancedWord> {
        let len = 2 * n;
        (0..3usize.pow(len as u32))
            .filter_map(|code| {
                let mut c = code;
                let w: Vec<u8> = (0..len)
                    .map(|_| {
                        let x = (c % 3) as u8;
                        c /= 3;
                        x
                    })
                    .collect();
                BalancedWord::new(w).ok()
            })
            .collect()
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&parse_ternary("22012120").unwrap()).unwrap());
        assert!(is_balanced(&[]).unwrap());
        assert!(!is_balanced(&parse_ternary("0012").unwrap()).unwrap());
        assert!(!is_balanced(&[0]).unwrap());
        assert_eq!(is_balanced(&[0, 3]), Err(Error::ForeignLetter('3')));
        assert_eq!(parse_ternary("01x"), Err(Error::ForeignLetter('x')));
        assert_eq!(BalancedWord::parse("0012"), Err(Error::Unbalanced));
    }

    #[test]
    fn h_map_examples() {
        assert_eq!(h_map(&bw("22012120"), 0, 1).unwrap(), bw("2211212001"));
        assert_eq!(h_map(&bw("00"), 0, 1).unwrap(), bw("1001"));
        assert_eq!(h_map(&bw("22"), 1, 2).unwrap(), bw("1212"));
        assert_eq!(h_map(&bw("22"), 0, 1), Err(Error::OutsideHDomain(0, 1)));
        assert_eq!(h_map(&bw(""), 0, 1), Err(Error::OutsideHDomain(0, 1)));
        assert_eq!(h_map(&bw("00"), 1, 1), Err(Error::BadLetterPair(1, 1)));
    }

    #[test]
    fn h_inv_examples() {
        assert_eq!(h_inv(&bw("0021210202")).unwrap().0, bw("20212102"));
        assert_eq!(h_inv(&bw("1001")).unwrap(), (bw("00"), 0, 1));
        assert_eq!(h_inv(&bw("2211212001")).unwrap().0, bw("22012120"));
        assert_eq!(h_inv(&bw("0011")), Err(Error::EqualSuffix));
        assert_eq!(h_inv(&bw("")), Err(Error::EqualSuffix));
    }

    #[test]
    fn h_map_is_a_bijection_onto_words_ending_xy() {
        for n in 0..=4 {
            let shorter = all_balanced(n);
            let longer = all_balanced(n + 1);
            for (x, y) in [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
                let z = 3 - x - y;
                let image: HashSet<BalancedWord> = shorter
                    .iter()
                    .filter(|w| !w.letters().iter().all(|&c| c == z))
                    .map(|w| {
                        let v = h_map(w, x, y).unwrap();
                        assert_eq!(&h_inv(&v).unwrap().0, w);
                        v
                    })
                    .collect();
                let target: HashSet<BalancedWord> = longer
                    .iter()
                    .filter(|v| v.letters()[2 * n..] == [x, y])
                    .cloned()
                    .collect();
                assert_eq!(image.len(), shorter.len() - 1);
                assert_eq!(image, target);
            }
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&pair("0", "0", 2)).unwrap(), bw("00"));
        assert_eq!(eta(&pair("1", "0", 2)).unwrap(), bw("11"));
        assert_eq!(eta(&pair("2", "0", 2)).unwrap(), bw("22"));
        assert_eq!(eta(&pair("1+t+t^2", "0", 4)).unwrap(), bw("111111"));
        assert_eq!(eta(&pair("1+2t^2+t^3", "t^2", 5)).unwrap(), bw("11200211"));
        assert_eq!(eta(&pair("0", "0", 1)).unwrap(), bw(""));
        let m2 = Modulus::new(2).unwrap();
        assert_eq!(
            eta(&CanonicalPair::empty(m2, 3).unwrap()),
            Err(Error::WrongModulus {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn eta_when_bstar_appears_mid_recursion() {
        // b* = 2: the step that introduces g_2 has no f coefficient yet
        let c = pair("2t^2+t^3", "t", 5);
        assert_eq!(c.bstar(), Some(2));
        let w = eta(&c).unwrap();
        // 00 → 0000 → 000022, then h_{1,2} flips the first 2
        assert_eq!(w, bw("00001212"));
        assert_eq!(eta_inv(&w).unwrap(), c);
    }

    #[test]
    fn eta_inv_examples() {
        assert_eq!(eta_inv(&bw("00")).unwrap(), pair("0", "0", 2));
        assert_eq!(
            eta_inv(&bw("11200211")).unwrap(),
            pair("1+2t^2+t^3", "t^2", 5)
        );
        assert_eq!(eta_inv(&bw("1212")).unwrap(), pair("2+t", "t", 3));
        assert_eq!(eta_inv(&bw("")).unwrap(), pair("0", "0", 1));
    }

    #[test]
    fn ten_letter_word_encodes_order_six() {
        // a length-10 word encodes an order-6 graph, not the order-5 one
        let w = bw("2100221200");
        let back = eta_inv(&w).unwrap();
        assert_eq!(back.order(), 6);
        assert_ne!(eta(&pair("1+2t^2+t^3", "t^2", 5)).unwrap(), w);
    }

    #[test]
    fn eta_is_a_bijection() {
        let m3 = Modulus::new(3).unwrap();
        for n in 0..=4 {
            let image: HashSet<BalancedWord> = enumerate_graphs(n + 1, m3)
                .unwrap()
                .map(|c| {
                    let w = eta(&c).unwrap();
                    assert_eq!(w.len(), 2 * n);
                    assert_eq!(eta_inv(&w).unwrap(), c);
                    w
                })
                .collect();
            let all: HashSet<BalancedWord> = all_balanced(n).into_iter().collect();
            assert_eq!(image, all, "n = {n}");
        }
    }

    #[test]
    fn constant_word_anchors() {
        for order in 2..=8 {
            let g1: String = (0..order - 1)
                .map(|i| format!("t^{i}"))
                .collect::<Vec<_>>()
                .join("+");
            let g2: String = (0..order - 1)
                .map(|i| format!("2t^{i}"))
                .collect::<Vec<_>>()
                .join("+");
            let len = 2 * (order - 1);
            assert_eq!(
                eta(&pair("0", "0", order)).unwrap(),
                BalancedWord::constant(0, len)
            );
            assert_eq!(
                eta(&pair(&g1, "0", order)).unwrap(),
                BalancedWord::constant(1, len)
            );
            assert_eq!(
                eta(&pair(&g2, "0", order)).unwrap(),
                BalancedWord::constant(2, len)
            );
        }
    }

    #[test]
    fn walk_examples() {
        let w = word_to_walk(&[0, 0]).unwrap();
        assert_eq!(w.steps(), &[1, 1]);
        assert_eq!(w.vertices(), vec![0, 1, 0]);
        assert!(w.is_closed());
        let w = word_to_walk(&parse_ternary("0012").unwrap()).unwrap();
        assert_eq!(w.endpoint(), 0b110);
        assert!(!w.is_closed());
        let w = word_to_walk(&parse_ternary("22012120").unwrap()).unwrap();
        assert_eq!(w.steps().len(), 8);
        assert!(w.is_closed());
        assert_eq!(
            walk_to_word(&w).unwrap(),
            parse_ternary("22012120").unwrap()
        );
        let w4 = CubeWalk::new(4, vec![4, 4]).unwrap();
        assert_eq!(
            walk_to_word(&w4),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 4
            })
        );
        assert_eq!(
            CubeWalk::new(3, vec![4]),
            Err(Error::StepOutOfRange { step: 4, dim: 3 })
        );
        assert_eq!(
            serde_json::to_string(&CubeWalk::new(3, vec![1, 3]).unwrap()).unwrap(),
            r#"{"dim":3,"steps":[1,3]}"#
        );
    }

    #[test]
    fn closed_iff_balanced() {
        for len in 0..=8u32 {
            for code in 0..3usize.pow(len) {
                let mut c = code;
                let w: Vec<u8> = (0..len)
                    .map(|_| {
                        let x = (c % 3) as u8;
                        c /= 3;
                        x
                    })
                    .collect();
                assert_eq!(
                    word_to_walk(&w).unwrap().is_closed(),
                    is_balanced(&w).unwrap()
                );
            }
        }
    }

    #[test]
    fn walk_count_examples() {
        let big = |v: u32| BigUint::from(v);
        assert_eq!(count_closed_walks_matrix(3, 2).unwrap(), big(3));
        assert_eq!(count_closed_walks_matrix(3, 0).unwrap(), big(1));
        assert_eq!(count_closed_walks_matrix(3, 4).unwrap(), big(21));
        assert_eq!(count_closed_walks_formula(3, 4).unwrap(), big(21));
        assert_eq!(count_closed_walks_formula(3, 2).unwrap(), big(3));
        for m in 0..10 {
            assert_eq!(count_closed_walks_formula(1, 2 * m).unwrap(), big(1));
            assert_eq!(count_closed_walks_matrix(1, 2 * m).unwrap(), big(1));
        }
        assert_eq!(count_closed_walks_matrix(3, 3).unwrap(), big(0));
        assert_eq!(count_closed_walks_formula(3, 3).unwrap(), big(0));
        assert!(count_closed_walks_matrix(MAX_WALK_DIM + 1, 2).is_err());
    }

    #[test]
    fn walk_oracles_agree_in_other_dimensions() {
        for dim in 1..=6 {
            for len in 0..=12 {
                assert_eq!(
                    count_closed_walks_matrix(dim, len).unwrap(),
                    count_closed_walks_formula(dim, len).unwrap()
                );
            }
        }
    }

    #[test]
    fn balanced_counts() {
        assert_eq!(count_balanced(0).unwrap(), BigUint::one());
        assert_eq!(count_balanced(1).unwrap(), BigUint::from(3u32));
        assert_eq!(count_balanced(2).unwrap(), BigUint::from(21u32));
        assert_eq!(count_balanced(4).unwrap(), BigUint::from(1641u32));
        let m3 = Modulus::new(3).unwrap();
        for n in 0..=20 {
            assert_eq!(count_balanced(n).unwrap(), count_graphs(n + 1, m3).unwrap());
        }
        for n in 0..=4 {
            assert_eq!(
                BigUint::from(all_balanced(n).len()),
                count_balanced(n).unwrap()
            );
        }
    }

    proptest! {
        #[test]
        fn eta_roundtrips_on_random_words(seed in prop::collection::vec(0u8..3, 0..10)) {
            // make any ternary word balanced by mirroring it
            let mut w = seed.clone();
            w.extend(seed.iter().rev());
            let w = BalancedWord::new(w).unwrap();
            let c = eta_inv(&w).unwrap();
            prop_assert_eq!(c.order(), w.len() / 2 + 1);
            prop_assert_eq!(eta(&c).unwrap(), w);
        }

        #[test]
        fn h_roundtrip(seed in prop::collection::vec(0u8..3, 1..10), xy in 0usize..6) {
            let (x, y) = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)][xy];
            let mut w = seed.clone();
            w.extend(seed.iter().rev());
            let w = BalancedWord::new(w).unwrap();
            if let Ok(v) = h_map(&w, x, y) {
                prop_assert_eq!(h_inv(&v).unwrap(), (w, x, y));
            } else {
                prop_assert!(w.letters().iter().all(|&c| c == 3 - x - y));
            }
        }
    }
}
