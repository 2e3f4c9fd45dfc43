//! Pattern avoidance, the insertion bijection between binary words and
//! `S_m(123, 132)`, and the bijection between Riordan graphs (p = 2) and
//! `P_2n`, the members of `S_2n(123, 132)` with exactly two fixed points.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::GraphClass;
use crate::series::CanonicalPair;

/// One-line permutation of `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m {
                return Err(Error::NotAPermutation(format!("value {v} outside 1..={m}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based positions `i` with `π_i = i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.values[i - 1] == i)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Permutation::new(Vec::new());
        }
        let values = s
            .split(',')
            .enumerate()
            .map(|(pos, tok)| {
                tok.trim().parse::<usize>().map_err(|_| Error::Syntax {
                    pos,
                    msg: format!("expected a positive integer, found {:?}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Replaces the i-th smallest entry by `i`.
pub fn reduce<T: Ord>(seq: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return Err(Error::DuplicateEntry);
    }
    let mut values = vec![0; seq.len()];
    for (rank, &idx) in order.iter().enumerate() {
        values[idx] = rank + 1;
    }
    Ok(Permutation { values })
}

/// Whether some subsequence of `perm` is order-isomorphic to `pattern`.
/// Exhaustive search over index subsets, pruned on the first mismatch.
pub fn contains_pattern(perm: &Permutation, pattern: &Permutation) -> bool {
    fn extend(perm: &[usize], pattern: &[usize], chosen: &mut Vec<usize>, from: usize) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        for i in from..perm.len() {
            let fits = chosen
                .iter()
                .zip(pattern)
                .all(|(&c, &q)| (perm[c] < perm[i]) == (q < pattern[k]));
            if fits {
                chosen.push(i);
                if extend(perm, pattern, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    pattern.len() <= perm.len() && extend(&perm.values, &pattern.values, &mut Vec::new(), 0)
}

/// Avoids both 123 and 132.
pub fn avoids_123_132(perm: &Permutation) -> bool {
    let p123 = Permutation {
        values: vec![1, 2, 3],
    };
    let p132 = Permutation {
        values: vec![1, 3, 2],
    };
    !contains_pattern(perm, &p123) && !contains_pattern(perm, &p132)
}

pub fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.trim()
        .chars()
        .enumerate()
        .map(|(pos, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Syntax {
                pos,
                msg: format!("expected 0 or 1, found {c:?}"),
            }),
        })
        .collect()
}

pub fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Insertion bijection: elements `1..m-1` go to the left (bit 0) or right
/// (bit 1) of the two rightmost empty slots, and `m` fills the last one.
pub fn psi(bits: &[bool]) -> Permutation {
    let m = bits.len() + 1;
    let mut empty: Vec<usize> = (0..m).collect();
    let mut values = vec![0; m];
    for (i, &bit) in bits.iter().enumerate() {
        let k = empty.len();
        let slot = empty.remove(if bit { k - 1 } else { k - 2 });
        values[slot] = i + 1;
    }
    values[empty[0]] = m;
    Permutation { values }
}

/// Replays the insertion, reading off left/right choices. Fails with
/// [`Error::NotAvoider`] when some element is not in one of the two
/// rightmost empty slots, which happens exactly for permutations containing
/// 123 or 132.
pub fn psi_inv(perm: &Permutation) -> Result<Vec<bool>> {
    let m = perm.len();
    if m == 0 {
        return Err(Error::NotAPermutation("empty permutation".into()));
    }
    let mut pos = vec![0; m + 1];
    for (i, &v) in perm.values.iter().enumerate() {
        pos[v] = i;
    }
    let mut empty: Vec<usize> = (0..m).collect();
    let mut bits = Vec::with_capacity(m - 1);
    for &slot in &pos[1..m] {
        let k = empty.len();
        let at = if slot == empty[k - 1] {
            bits.push(true);
            k - 1
        } else if slot == empty[k - 2] {
            bits.push(false);
            k - 2
        } else {
            return Err(Error::NotAvoider);
        };
        empty.remove(at);
    }
    Ok(bits)
}

/// Membership in `P_2n`: avoids 123 and 132 with exactly two fixed points.
pub fn is_member_p2n(perm: &Permutation) -> Result<bool> {
    if perm.len() % 2 == 1 {
        return Err(Error::OddLength(perm.len()));
    }
    Ok(!perm.is_empty() && perm.fixed_points().len() == 2 && avoids_123_132(perm))
}

/// Shape of a member of `P_2n` with fixed points `n < b`: a prefix block
/// `A` on values above `b`, a descending middle run through `n`, and a
/// suffix block `D` on values `1..=2n-b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub n: usize,
    pub b: usize,
    /// `p_1 … p_{2n-b}`.
    pub prefix: Vec<usize>,
    /// `p_{2n-b+1} … p_{b-1}`, equal to `b-1, b-2, …, 2n-b+1`.
    pub middle: Vec<usize>,
    /// `p_{b+1} … p_{2n}`.
    pub suffix: Vec<usize>,
}

impl BlockDecomposition {
    /// Size of `A` and of `D`.
    pub fn block_len(&self) -> usize {
        2 * self.n - self.b
    }

    pub fn is_empty_graph(&self) -> bool {
        self.b == 2 * self.n
    }

    /// `A` shifted down by `b`.
    pub fn reduced_prefix(&self) -> Permutation {
        Permutation {
            values: self.prefix.iter().map(|v| v - self.b).collect(),
        }
    }

    pub fn suffix_perm(&self) -> Permutation {
        Permutation {
            values: self.suffix.clone(),
        }
    }

    /// Insertion choices encoding `A` and `D` (empty when the blocks are).
    pub fn block_bits(&self) -> Result<(Vec<bool>, Vec<bool>)> {
        if self.block_len() == 0 {
            return Ok((Vec::new(), Vec::new()));
        }
        Ok((
            psi_inv(&self.reduced_prefix())?,
            psi_inv(&self.suffix_perm())?,
        ))
    }
}

/// Splits a member of `P_2n` into its blocks.
pub fn decompose(perm: &Permutation) -> Result<BlockDecomposition> {
    if !is_member_p2n(perm)? {
        return Err(Error::NotInP2n(
            "must avoid 123 and 132 and have exactly two fixed points".into(),
        ));
    }
    let n = perm.len() / 2;
    let fixed = perm.fixed_points();
    let (a, b) = (fixed[0], fixed[1]);
    if a != n || b <= n {
        return Err(Error::FixedPointMismatch { n, found: fixed });
    }
    let v = &perm.values;
    let m = 2 * n - b;
    for i in 1..=(2 * b - 2 * n - 1) {
        let at = 2 * n - b + i;
        if v[at - 1] != b - i {
            return Err(Error::MiddleBlockMismatch(at));
        }
    }
    if v[..m].iter().any(|&x| x <= b) {
        return Err(Error::NotInP2n(
            "prefix block must hold the values above b".into(),
        ));
    }
    Ok(BlockDecomposition {
        n,
        b,
        prefix: v[..m].to_vec(),
        middle: v[m..b - 1].to_vec(),
        suffix: v[b..].to_vec(),
    })
}

/// Riordan graph of order `n` to its permutation in `P_2n`.
pub fn phi(pair: &CanonicalPair) -> Result<Permutation> {
    pair.modulus().require(2)?;
    let n = pair.order();
    let b = pair.bstar().map_or(2 * n, |bs| bs + n + 1);
    let m = 2 * n - b;
    let mut values = vec![0; 2 * n];
    values[n - 1] = n;
    values[b - 1] = b;
    for i in 1..=(2 * b - 2 * n - 1) {
        values[m + i - 1] = b - i;
    }
    if let Some(bs) = pair.bstar() {
        let g_bits: Vec<bool> = (bs + 1..=n - 2).map(|i| pair.g().coeff(i) == 1).collect();
        let f_bits: Vec<bool> = (1..m).map(|i| pair.f().coeff(i) == 1).collect();
        for (slot, v) in psi(&g_bits).values.into_iter().enumerate() {
            values[slot] = v + b;
        }
        for (slot, v) in psi(&f_bits).values.into_iter().enumerate() {
            values[b + slot] = v;
        }
    }
    Ok(Permutation { values })
}

/// Inverse of [`phi`].
pub fn phi_inv(perm: &Permutation) -> Result<CanonicalPair> {
    let blocks = decompose(perm)?;
    let n = blocks.n;
    let m2 = crate::series::Modulus::new(2)?;
    if blocks.is_empty_graph() {
        return CanonicalPair::empty(m2, n);
    }
    let bstar = blocks.b - n - 1;
    let (g_bits, f_bits) = blocks.block_bits()?;
    let mut g = vec![0u32; bstar];
    g.push(1);
    g.extend(g_bits.iter().map(|&x| x as u32));
    let mut f = vec![0u32];
    f.extend(f_bits.iter().map(|&x| x as u32));
    CanonicalPair::from_residues(m2, n, g, f)
}

/// Family membership read off the block structure of a member of `P_2n`.
pub fn perm_class(perm: &Permutation) -> Result<GraphClass> {
    let blocks = decompose(perm)?;
    let n = blocks.n;
    let b = blocks.b;
    let m = blocks.block_len();
    let empty = blocks.is_empty_graph();
    let d = &blocks.suffix;
    let mut class = GraphClass::empty();

    if !empty && b == n + 1 {
        if blocks.reduced_prefix().values == *d {
            class |= GraphClass::ONE_PLUS_F;
        }
        if d.last() == Some(&1) {
            class |= GraphClass::PROPER;
        }
    }

    // D = (m-1)(m-2)…2 m 1
    let appell_d: Vec<usize> = match m {
        0 => vec![],
        1 => vec![1],
        _ => (2..m).rev().chain([m, 1]).collect(),
    };
    if *d == appell_d {
        class |= GraphClass::APPELL;
    }

    let (g_bits, f_bits) = blocks.block_bits()?;
    if empty {
        class |= GraphClass::BELL | GraphClass::DERIVATIVE;
    } else {
        let bstar = b - n - 1;
        // the r+1 rightmost entries of D read r(r-1)…1(r+1); r shrinks
        // below b* when D is too short to hold b*+1 entries
        let r = bstar.min(m - 1);
        let tail: Vec<usize> = (1..=r).rev().chain([r + 1]).collect();
        // past that, D's insertion choices repeat A's: f_{b*+1+k} = g_{b*+k}
        let coupled = f_bits
            .iter()
            .skip(bstar + 1)
            .zip(&g_bits)
            .all(|(x, y)| x == y);
        if d[m - (r + 1)..] == tail[..] && coupled {
            class |= GraphClass::BELL;
        }

        let pascal: Vec<usize> = (n + 2..=2 * n)
            .rev()
            .chain([n, n + 1])
            .chain((1..n).rev())
            .collect();
        if perm.values == pascal {
            class |= GraphClass::PASCAL;
        }

        // derivative: g vanishes at odd degrees (so b* is even and every
        // odd insertion step of A goes left) and each odd step of D repeats
        // the g coefficient one degree lower
        let g_at = |i: usize| -> bool {
            if i < bstar {
                false
            } else if i == bstar {
                true
            } else {
                g_bits[i - bstar - 1]
            }
        };
        let a_ok = bstar % 2 == 0 && g_bits.iter().step_by(2).all(|&x| !x);
        let d_ok = f_bits
            .iter()
            .enumerate()
            .step_by(2)
            .all(|(k, &x)| x == g_at(k));
        if a_ok && d_ok {
            class |= GraphClass::DERIVATIVE;
        }
    }
    Ok(class)
}
