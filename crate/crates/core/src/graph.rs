//! p-Riordan graphs: adjacency matrices, subclass membership, exhaustive
//! enumeration and counting.

use std::fmt;

use bitflags::bitflags;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::series::{mul_trunc, CanonicalPair, CoeffSeq, Modulus};

/// Symmetric `n × n` adjacency matrix with entries in Z_p. Vertices are
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjMatrix {
    n: usize,
    modulus: Modulus,
    entries: Vec<u32>,
}

impl AdjMatrix {
    /// Builds `G_n(g, f)` directly from series, without canonicalizing:
    /// `a_{i,j} = [t^{i-2}] g f^{j-1}` for `i > j`.
    pub fn from_series(g: &CoeffSeq, f: &CoeffSeq, n: usize) -> Result<Self> {
        if g.modulus() != f.modulus() {
            return Err(Error::ModulusMismatch(
                g.modulus().value(),
                f.modulus().value(),
            ));
        }
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let m = g.modulus();
        let mut entries = vec![0u32; n * n];
        if n >= 2 {
            let top = n - 2;
            let f_trunc = &f.coeffs()[..f.coeffs().len().min(top + 1)];
            // column j holds g·f^{j-1}
            let mut column = g.truncated(top).coeffs().to_vec();
            for j in 1..n {
                for i in (j + 1)..=n {
                    let v = column.get(i - 2).copied().unwrap_or(0);
                    entries[(i - 1) * n + (j - 1)] = v;
                    entries[(j - 1) * n + (i - 1)] = v;
                }
                column = mul_trunc(m, &column, f_trunc, top);
            }
        }
        Ok(AdjMatrix {
            n,
            modulus: m,
            entries,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Entry `a_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.n)
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (1..=self.n).all(|i| self.get(i, i) == 0)
    }
}

impl Serialize for AdjMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<&[u32]> = self.rows().collect();
        let mut s = serializer.serialize_struct("AdjMatrix", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("p", &self.modulus.value())?;
        s.serialize_field("matrix", &rows)?;
        s.end()
    }
}

impl fmt::Display for AdjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.modulus.value() - 1).to_string().len();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Adjacency matrix of a canonical pair.
pub fn adjacency(pair: &CanonicalPair) -> AdjMatrix {
    AdjMatrix::from_series(pair.g(), pair.f(), pair.order())
        .expect("canonical pair has consistent modulus and positive order")
}

/// Labelled equality of two graphs, decided on canonical data.
pub fn graphs_equal(x: &CanonicalPair, y: &CanonicalPair) -> Result<bool> {
    if x.modulus() != y.modulus() {
        return Err(Error::ModulusMismatch(
            x.modulus().value(),
            y.modulus().value(),
        ));
    }
    if x.order() != y.order() {
        return Err(Error::OrderMismatch(x.order(), y.order()));
    }
    Ok(x == y)
}

bitflags! {
    /// Named families of p-Riordan graphs a graph belongs to.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct GraphClass: u8 {
        const EMPTY = 1 << 0;
        const STAR = 1 << 1;
        const APPELL = 1 << 2;
        const BELL = 1 << 3;
        const PASCAL = 1 << 4;
        const DERIVATIVE = 1 << 5;
        const PROPER = 1 << 6;
        const ONE_PLUS_F = 1 << 7;
    }
}

const CLASS_NAMES: [(GraphClass, &str); 8] = [
    (GraphClass::EMPTY, "empty"),
    (GraphClass::STAR, "star"),
    (GraphClass::APPELL, "appell"),
    (GraphClass::BELL, "bell"),
    (GraphClass::PASCAL, "pascal"),
    (GraphClass::DERIVATIVE, "derivative"),
    (GraphClass::PROPER, "proper"),
    (GraphClass::ONE_PLUS_F, "one-plus-f"),
];

impl GraphClass {
    /// Classes with a word characterization (p = 2).
    pub const WORD_CLASSES: GraphClass = GraphClass::ONE_PLUS_F
        .union(GraphClass::PROPER)
        .union(GraphClass::APPELL);

    /// Classes with a permutation characterization (p = 2).
    pub const PERM_CLASSES: GraphClass = GraphClass::ONE_PLUS_F
        .union(GraphClass::PROPER)
        .union(GraphClass::APPELL)
        .union(GraphClass::BELL)
        .union(GraphClass::PASCAL)
        .union(GraphClass::DERIVATIVE);

    pub fn from_cli_name(name: &str) -> Option<GraphClass> {
        CLASS_NAMES
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(c, _)| *c)
    }

    pub fn names(self) -> Vec<&'static str> {
        CLASS_NAMES
            .iter()
            .filter(|(c, _)| self.contains(*c))
            .map(|(_, n)| *n)
            .collect()
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

/// Families `pair` belongs to.
///
/// A graph is in a family when some `(g, f)` of that family's form produces
/// it, so only determining coefficients are inspected and coefficients
/// outside the determining range are treated as free. The empty graph is
/// Appell, Bell and derivative (take `g = 0`) and is never star, proper,
/// `(1+f, f)` or Pascal.
pub fn classify(pair: &CanonicalPair) -> GraphClass {
    let Some(b) = pair.bstar() else {
        return GraphClass::EMPTY | GraphClass::APPELL | GraphClass::BELL | GraphClass::DERIVATIVE;
    };
    let n = pair.order();
    let span = pair.f_span();
    let g = |i: usize| pair.g().coeff(i);
    let f = |i: usize| pair.f().coeff(i);

    let mut class = GraphClass::empty();
    if pair.f().is_zero() {
        class |= GraphClass::STAR;
    }
    if (1..=span).all(|i| f(i) == u32::from(i == 1)) {
        class |= GraphClass::APPELL;
    }
    if (1..=span).all(|i| f(i) == g(i - 1)) {
        class |= GraphClass::BELL;
    }
    if b == 0 && (0..=n - 2).all(|i| g(i) == 1) && (1..=span).all(|i| f(i) == 1) {
        class |= GraphClass::PASCAL;
    }
    if is_derivative(pair) {
        class |= GraphClass::DERIVATIVE;
    }
    if b == 0 && (span == 0 || f(1) != 0) {
        class |= GraphClass::PROPER;
    }
    if b == 0 && g(0) == 1 && (1..=n - 2).all(|i| g(i) == f(i)) {
        class |= GraphClass::ONE_PLUS_F;
    }
    class
}

/// Whether some `f` gives `canonicalize(f', f) == pair`: every `j` in
/// `1..n` needs `j·f_j ≡ g_{j-1}`, with `f_j` fixed for `j <= n-2-b*` and
/// free (so only solvability matters) beyond.
fn is_derivative(pair: &CanonicalPair) -> bool {
    let n = pair.order();
    let p = pair.modulus().value() as u64;
    let span = pair.f_span();
    (1..n).all(|j| {
        let target = pair.g().coeff(j - 1) as u64;
        let jr = j as u64 % p;
        if j <= span {
            jr * pair.f().coeff(j) as u64 % p == target
        } else {
            target.is_multiple_of(gcd(jr, p))
        }
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Streams every p-Riordan graph of order `n` exactly once.
///
/// Order: the empty graph first, then `b* = 0, 1, …, n-2`; within a fixed
/// `b*`, the free digits `g_{b*} (nonzero), g_{b*+1}, …, g_{n-2}, f_1, …,
/// f_{n-2-b*}` run lexicographically with the last digit fastest.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    modulus: Modulus,
    n: usize,
    state: EnumState,
}

#[derive(Debug, Clone)]
enum EnumState {
    Empty,
    Running { bstar: usize, digits: Vec<u32> },
    Done,
}

pub fn enumerate_graphs(n: usize, modulus: Modulus) -> Result<GraphEnumerator> {
    modulus.require_prime()?;
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(GraphEnumerator {
        modulus,
        n,
        state: EnumState::Empty,
    })
}

impl GraphEnumerator {
    fn first_digits(&self, bstar: usize) -> Vec<u32> {
        let len = 2 * (self.n - 1 - bstar) - 1;
        let mut d = vec![0; len];
        d[0] = 1;
        d
    }

    fn pair_from(&self, bstar: usize, digits: &[u32]) -> CanonicalPair {
        let g_len = self.n - 1 - bstar;
        let mut g = vec![0u32; bstar];
        g.extend_from_slice(&digits[..g_len]);
        let mut f = vec![0u32];
        f.extend_from_slice(&digits[g_len..]);
        CanonicalPair::from_residues(self.modulus, self.n, g, f)
            .expect("enumerated digits are residues")
    }

    /// Advances `digits` odometer-style; false once it wraps.
    fn bump(&self, digits: &mut [u32]) -> bool {
        let p = self.modulus.value();
        for (idx, d) in digits.iter_mut().enumerate().rev() {
            *d += 1;
            if *d < p {
                return true;
            }
            *d = if idx == 0 { 1 } else { 0 };
        }
        false
    }
}

impl Iterator for GraphEnumerator {
    type Item = CanonicalPair;

    fn next(&mut self) -> Option<CanonicalPair> {
        match std::mem::replace(&mut self.state, EnumState::Done) {
            EnumState::Done => None,
            EnumState::Empty => {
                if self.n >= 2 {
                    self.state = EnumState::Running {
                        bstar: 0,
                        digits: self.first_digits(0),
                    };
                }
                Some(CanonicalPair::empty(self.modulus, self.n).expect("n >= 1"))
            }
            EnumState::Running { bstar, mut digits } => {
                let item = self.pair_from(bstar, &digits);
                if self.bump(&mut digits) {
                    self.state = EnumState::Running { bstar, digits };
                } else if bstar + 2 < self.n {
                    self.state = EnumState::Running {
                        bstar: bstar + 1,
                        digits: self.first_digits(bstar + 1),
                    };
                }
                Some(item)
            }
        }
    }
}

/// `r_n^{(p)} = (p^{2(n-1)} + p)/(p+1)`.
pub fn count_graphs_closed_form(n: usize, modulus: Modulus) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let p = BigUint::from(modulus.value());
    let num = p.pow(2 * (n as u32 - 1)) + &p;
    let den = &p + 1u32;
    if !(&num % &den).is_zero() {
        return Err(Error::Consistency(format!(
            "closed form not integral at n = {n}, p = {p}"
        )));
    }
    Ok(num / den)
}

/// `r_1 = 1`, `r_{n+1} = p²(r_n - 1) + p`.
pub fn count_graphs_recursive(n: usize, modulus: Modulus) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let p = BigUint::from(modulus.value());
    let p2 = &p * &p;
    let mut r = BigUint::one();
    for _ in 1..n {
        r = &p2 * (r - 1u32) + &p;
    }
    Ok(r)
}

/// Number of p-Riordan graphs of order `n`; closed form and recursion are
/// both evaluated and must agree.
pub fn count_graphs(n: usize, modulus: Modulus) -> Result<BigUint> {
    modulus.require_prime()?;
    let closed = count_graphs_closed_form(n, modulus)?;
    let rec = count_graphs_recursive(n, modulus)?;
    if closed != rec {
        return Err(Error::Consistency(format!(
            "closed form {closed} != recursion {rec} at n = {n}, p = {}",
            modulus
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{canonicalize, parse_poly, product_coeff};
    use std::collections::HashSet;

    fn m(p: u32) -> Modulus {
        Modulus::new(p).unwrap()
    }

    fn pair(g: &str, f: &str, n: usize, p: u32) -> CanonicalPair {
        canonicalize(
            &parse_poly(g, m(p)).unwrap(),
            &parse_poly(f, m(p)).unwrap(),
            n,
        )
        .unwrap()
    }

    fn rows(a: &AdjMatrix) -> Vec<Vec<u32>> {
        a.rows().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn adjacency_examples() {
        let a = adjacency(&pair("1", "t", 3, 2));
        assert_eq!(rows(&a), vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);

        for p in [2, 3, 5, 4] {
            let a = adjacency(&CanonicalPair::empty(m(p), 5).unwrap());
            assert!(a.entries().iter().all(|&v| v == 0));
        }

        let a = adjacency(&pair("1+t+t^2", "t+t^2+t^3", 4, 2));
        assert_eq!(
            [
                a.get(2, 1),
                a.get(3, 1),
                a.get(4, 1),
                a.get(3, 2),
                a.get(4, 2),
                a.get(4, 3)
            ],
            [1, 1, 1, 1, 0, 1]
        );
    }

    #[test]
    fn adjacency_matches_product_coeff_entrywise() {
        let g = parse_poly("2+t+2t^3+t^4", m(3)).unwrap();
        let f = parse_poly("t+2t^2+t^5", m(3)).unwrap();
        let n = 7;
        let a = AdjMatrix::from_series(&g, &f, n).unwrap();
        for i in 1..=n {
            for j in 1..i {
                assert_eq!(a.get(i, j), product_coeff(&g, &f, j - 1, i - 2).unwrap());
            }
        }
        assert!(a.is_symmetric() && a.has_zero_diagonal());
    }

    #[test]
    fn text_and_json_output() {
        let a = adjacency(&pair("1", "t", 3, 2));
        assert_eq!(a.to_string(), "0 1 0\n1 0 1\n0 1 0\n");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"n":3,"p":2,"matrix":[[0,1,0],[1,0,1],[0,1,0]]}"#
        );
    }

    #[test]
    fn graphs_equal_examples() {
        assert!(graphs_equal(&pair("t^2+t^5", "t+t^9", 5, 2), &pair("t^2", "t", 5, 2)).unwrap());
        assert!(!graphs_equal(&pair("0", "0", 3, 2), &pair("t", "t", 3, 2)).unwrap());
        assert!(graphs_equal(&pair("1", "t", 4, 2), &pair("1", "t+t^3", 4, 2)).unwrap());
        assert_eq!(
            graphs_equal(&pair("1", "t", 4, 2), &pair("1", "t", 5, 2)),
            Err(Error::OrderMismatch(4, 5))
        );
        assert_eq!(
            graphs_equal(&pair("1", "t", 4, 2), &pair("1", "t", 4, 3)),
            Err(Error::ModulusMismatch(2, 3))
        );
    }

    #[test]
    fn classify_examples() {
        let c = classify(&pair("1+t+t^2", "t+t^2+t^3", 4, 2));
        assert!(c.contains(
            GraphClass::PASCAL | GraphClass::BELL | GraphClass::ONE_PLUS_F | GraphClass::PROPER
        ));
        assert!(!c.contains(GraphClass::EMPTY));

        let c = classify(&pair("0", "0", 5, 2));
        assert!(c.contains(GraphClass::EMPTY));
        assert!(!c.intersects(GraphClass::STAR | GraphClass::PROPER | GraphClass::PASCAL));

        assert_eq!(
            classify(&pair("1", "t", 5, 2)),
            GraphClass::APPELL | GraphClass::PROPER | GraphClass::BELL | GraphClass::DERIVATIVE
        );
    }

    #[test]
    fn class_names_roundtrip() {
        for (c, name) in CLASS_NAMES {
            assert_eq!(GraphClass::from_cli_name(name), Some(c));
        }
        assert_eq!(
            (GraphClass::BELL | GraphClass::EMPTY).to_string(),
            "empty,bell"
        );
        assert_eq!(GraphClass::from_cli_name("bogus"), None);
    }

    /// Every canonical pair reachable from raw series of the given family.
    fn family(
        n: usize,
        p: u32,
        form: impl Fn(&[u32], &[u32]) -> (Vec<u32>, Vec<u32>),
    ) -> HashSet<CanonicalPair> {
        let md = m(p);
        let len = n + 1;
        let total = (p as usize).pow(2 * len as u32);
        let mut out = HashSet::new();
        for code in 0..total {
            let mut c = code;
            let mut digits = Vec::with_capacity(2 * len);
            for _ in 0..2 * len {
                digits.push((c % p as usize) as u32);
                c /= p as usize;
            }
            let (g, f) = form(&digits[..len], &digits[len..]);
            let g = CoeffSeq::from_residues(md, g).unwrap();
            let f = CoeffSeq::from_residues(md, f).unwrap();
            out.insert(canonicalize(&g, &f, n).unwrap());
        }
        out
    }

    fn with_zero_const(f: &[u32]) -> Vec<u32> {
        let mut v = vec![0];
        v.extend_from_slice(&f[1..]);
        v
    }

    #[test]
    fn classify_matches_family_membership() {
        // brute-force the "some (g, f) of this form" definition of each family
        for p in [2u32, 3] {
            let max_n = if p == 2 { 6 } else { 4 };
            for n in 1..=max_n {
                let all: Vec<CanonicalPair> = enumerate_graphs(n, m(p)).unwrap().collect();
                let nonempty = |s: HashSet<CanonicalPair>| -> HashSet<CanonicalPair> {
                    s.into_iter().filter(|c| !c.is_empty_graph()).collect()
                };
                let one_t = {
                    let mut t = vec![0u32; n + 1];
                    t[1] = 1;
                    t
                };
                let appell = family(n, p, |g, _| (g.to_vec(), one_t.clone()));
                let bell = family(n, p, |g, _| {
                    let mut f = vec![0];
                    f.extend_from_slice(&g[..n]);
                    (g.to_vec(), f)
                });
                let star = nonempty(family(n, p, |g, _| (g.to_vec(), vec![])));
                let deriv = family(n, p, |_, f| {
                    let f = with_zero_const(f);
                    let d = derivative_raw(&f, p);
                    (d, f)
                });
                let proper = nonempty(family(n, p, |g, f| {
                    let mut g = g.to_vec();
                    let mut f = with_zero_const(f);
                    if g[0] == 0 {
                        g[0] = 1;
                    }
                    if f[1] == 0 {
                        f[1] = 1;
                    }
                    (g, f)
                }));
                let one_plus_f = nonempty(family(n, p, |_, f| {
                    let f = with_zero_const(f);
                    let mut g = f.clone();
                    g[0] = 1;
                    (g, f)
                }));
                let pascal = nonempty(family(n, p, |_, _| {
                    (vec![1; n + 1], with_zero_const(&vec![1; n + 1]))
                }));
                for c in &all {
                    let got = classify(c);
                    let check = |flag: GraphClass, set: &HashSet<CanonicalPair>| {
                        assert_eq!(got.contains(flag), set.contains(c), "{flag:?} on {c}");
                    };
                    check(GraphClass::APPELL, &appell);
                    check(GraphClass::BELL, &bell);
                    check(GraphClass::STAR, &star);
                    check(GraphClass::DERIVATIVE, &deriv);
                    check(GraphClass::PROPER, &proper);
                    check(GraphClass::ONE_PLUS_F, &one_plus_f);
                    check(GraphClass::PASCAL, &pascal);
                    assert_eq!(got.contains(GraphClass::EMPTY), c.is_empty_graph());
                }
            }
        }
    }

    fn derivative_raw(f: &[u32], p: u32) -> Vec<u32> {
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u32 % p) * c % p)
            .collect()
    }

    #[test]
    fn class_implications() {
        for n in 1..=6 {
            for c in enumerate_graphs(n, m(2)).unwrap() {
                let k = classify(&c);
                if k.contains(GraphClass::PASCAL) {
                    assert!(k.contains(GraphClass::BELL | GraphClass::ONE_PLUS_F));
                }
                if k.contains(GraphClass::EMPTY) {
                    assert!(!k.intersects(GraphClass::STAR | GraphClass::PROPER));
                }
                // Pascal is the only Bell graph of type (1+f, f)
                assert_eq!(
                    k.contains(GraphClass::BELL | GraphClass::ONE_PLUS_F),
                    k.contains(GraphClass::PASCAL)
                );
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let v: Vec<_> = enumerate_graphs(2, m(3)).unwrap().collect();
        assert_eq!(v.len(), 3);
        assert_eq!(
            v.iter().map(|c| c.g().coeff(0)).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(enumerate_graphs(3, m(2)).unwrap().count(), 6);
        let one: Vec<_> = enumerate_graphs(1, m(7)).unwrap().collect();
        assert_eq!(one, vec![CanonicalPair::empty(m(7), 1).unwrap()]);
        assert_eq!(
            enumerate_graphs(3, m(4)).unwrap_err(),
            Error::NonPrimeModulus(4)
        );
    }

    #[test]
    fn enumeration_order() {
        let v: Vec<_> = enumerate_graphs(4, m(2)).unwrap().collect();
        assert!(v[0].is_empty_graph());
        let keys: Vec<(usize, Vec<u32>, Vec<u32>)> = v[1..]
            .iter()
            .map(|c| {
                let b = c.bstar().unwrap();
                let g = (b..=2).map(|i| c.g().coeff(i)).collect();
                let f = (1..=c.f_span()).map(|i| c.f().coeff(i)).collect();
                (b, g, f)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn canonicalization_preserves_graph_exhaustively() {
        for p in [2u32, 3] {
            let md = m(p);
            for n in 1..=6usize {
                if p == 3 && n > 5 {
                    continue;
                }
                let len = n;
                let total = (p as usize).pow((2 * len - 1) as u32);
                for code in 0..total {
                    let mut c = code;
                    let mut digits = Vec::new();
                    for _ in 0..(2 * len - 1) {
                        digits.push((c % p as usize) as u32);
                        c /= p as usize;
                    }
                    let g = digits[..len].to_vec();
                    let mut f = vec![0];
                    f.extend_from_slice(&digits[len..]);
                    let gs = CoeffSeq::from_residues(md, g).unwrap();
                    let fs = CoeffSeq::from_residues(md, f).unwrap();
                    let raw = AdjMatrix::from_series(&gs, &fs, n).unwrap();
                    let canon = canonicalize(&gs, &fs, n).unwrap();
                    assert_eq!(adjacency(&canon), raw);
                    assert_eq!(
                        classify(&canonicalize(canon.g(), canon.f(), n).unwrap()),
                        classify(&canon)
                    );
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_graphs(4, m(2)).unwrap(), BigUint::from(22u32));
        assert_eq!(count_graphs(2, m(5)).unwrap(), BigUint::from(5u32));
        assert_eq!(count_graphs(3, m(3)).unwrap(), BigUint::from(21u32));
        assert_eq!(count_graphs(1, m(11)).unwrap(), BigUint::one());
        assert_eq!(count_graphs(3, m(6)), Err(Error::NonPrimeModulus(6)));
        for p in [2u32, 3, 5, 7, 101] {
            for n in 1..=64 {
                count_graphs(n, m(p)).unwrap();
            }
        }
    }

    #[test]
    fn enumeration_is_injective_and_counted() {
        for (p, max_n) in [(2u32, 6usize), (3, 5), (5, 4)] {
            for n in 1..=max_n {
                let mats: HashSet<AdjMatrix> = enumerate_graphs(n, m(p))
                    .unwrap()
                    .map(|c| adjacency(&c))
                    .collect();
                let expected = count_graphs(n, m(p)).unwrap();
                assert_eq!(BigUint::from(mats.len()), expected, "p={p} n={n}");
                assert_eq!(
                    BigUint::from(enumerate_graphs(n, m(p)).unwrap().count()),
                    expected
                );
            }
        }
    }
}
