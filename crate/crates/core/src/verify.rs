//! Exhaustive checks behind `priordan verify`: counts, determination, and
//! the bijection properties of every codec, each at a bounded size.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::balanced::{
    count_balanced, count_closed_walks_formula, count_closed_walks_matrix, eta, eta_inv, h_inv,
    h_map, is_balanced, BalancedWord,
};
use crate::error::Error;
use crate::graph::{adjacency, classify, count_graphs, enumerate_graphs, AdjMatrix, GraphClass};
use crate::perm::{avoids_123_132, is_member_p2n, perm_class, phi, phi_inv, psi, Permutation};
use crate::series::{canonicalize, parse_poly, CanonicalPair, Modulus};
use crate::word::{count_words, validate_word, word_class, xi, xi_inv, Letter, PRiordanWord};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckReport {
    fn pass(name: &str, detail: String) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            detail,
            counterexample: None,
        }
    }

    fn fail(name: &str, detail: String, counterexample: Value) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: false,
            detail,
            counterexample: Some(counterexample),
        }
    }
}

/// A failed check carries its message and first counterexample.
type Failure = (String, Value);

fn report(name: &str, outcome: std::result::Result<String, Failure>) -> CheckReport {
    match outcome {
        Ok(detail) => CheckReport::pass(name, detail),
        Err((detail, ce)) => CheckReport::fail(name, detail, ce),
    }
}

fn lib_err(e: Error, context: Value) -> Failure {
    (e.to_string(), context)
}

fn pair_json(pair: &CanonicalPair) -> Value {
    serde_json::to_value(pair).unwrap_or(Value::Null)
}

fn modulus(p: u32) -> Modulus {
    Modulus::new(p).expect("small prime")
}

/// Runs every check with sizes capped at `max_n` (and at each check's own
/// bound). Order is fixed.
pub fn run_all(max_n: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut collisions = Vec::new();
    for (p, cap, expected) in [
        (2, 7, &[1u64, 2, 6, 22, 86, 342, 1366][..]),
        (3, 5, &[1, 3, 21, 183, 1641][..]),
        (5, 4, &[1, 5, 105, 2605][..]),
    ] {
        let (count_report, collision) = check_graph_counts(p, cap.min(max_n), expected);
        out.push(count_report);
        collisions.push((p, cap.min(max_n), collision));
    }
    out.push(determination_report(collisions));
    out.push(check_xi(max_n.min(5)));
    out.push(check_psi(12.min(2 * max_n).max(2), 8.min(2 * max_n).max(2)));
    out.push(check_p2n(max_n.min(8)));
    out.push(check_phi(max_n.min(6)));
    out.push(check_balanced_counts(max_n.min(7)));
    out.push(check_h(max_n.min(5)));
    out.push(check_eta(max_n.min(5)));
    out.push(check_walks(max_n.min(10)));
    out.push(check_classes(max_n.min(6)));
    out
}

/// Counts distinct adjacency matrices per order; returns the first
/// collision between two canonical pairs, if any.
fn check_graph_counts(p: u32, max_n: usize, expected: &[u64]) -> (CheckReport, Option<Value>) {
    let name = format!("graph-counts-p{p}");
    let m = modulus(p);
    let mut collision = None;
    let outcome = (|| {
        for n in 1..=max_n {
            let mut seen: HashMap<AdjMatrix, CanonicalPair> = HashMap::new();
            let mut listed = 0u64;
            for pair in enumerate_graphs(n, m).map_err(|e| lib_err(e, json!({"n": n})))? {
                listed += 1;
                if let Some(prev) = seen.insert(adjacency(&pair), pair.clone()) {
                    collision.get_or_insert_with(
                        || json!({"first": pair_json(&prev), "second": pair_json(&pair)}),
                    );
                }
            }
            let distinct = seen.len() as u64;
            let formula = count_graphs(n, m).map_err(|e| lib_err(e, json!({"n": n})))?;
            let want = expected[n - 1];
            if distinct != want || listed != want || formula != BigUint::from(want) {
                return Err((
                    format!("n = {n}: {distinct} distinct, {listed} listed, formula {formula}, expected {want}"),
                    json!({"p": p, "n": n, "distinct": distinct, "listed": listed, "expected": want}),
                ));
            }
        }
        Ok(format!("p = {p}, n = 1..{max_n}: {:?}", &expected[..max_n]))
    })();
    (report(&name, outcome), collision)
}

fn determination_report(results: Vec<(u32, usize, Option<Value>)>) -> CheckReport {
    let checked: Vec<String> = results
        .iter()
        .map(|(p, n, _)| format!("p={p} n≤{n}"))
        .collect();
    match results.into_iter().find_map(|(_, _, c)| c) {
        None => CheckReport::pass(
            "determination",
            format!("no collisions ({})", checked.join(", ")),
        ),
        Some(ce) => CheckReport::fail(
            "determination",
            "two canonical pairs share a matrix".into(),
            ce,
        ),
    }
}

/// All letter sequences of length `len` over `Z_p × Z_p`.
fn all_letter_seqs(p: u32, len: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = (0..p)
        .flat_map(|g| (0..p).map(move |f| Letter::new(g, f)))
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                alphabet.iter().map(move |&a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_xi(max_n: usize) -> CheckReport {
    let outcome = (|| {
        for p in [2u32, 3] {
            let m = modulus(p);
            for n in 0..=max_n {
                let ctx = || json!({"p": p, "n": n});
                let mut image = HashSet::new();
                for pair in enumerate_graphs(n + 1, m).map_err(|e| lib_err(e, ctx()))? {
                    let w = xi(&pair).map_err(|e| lib_err(e, pair_json(&pair)))?;
                    let back =
                        xi_inv(&w).map_err(|e| lib_err(e, json!({"word": w.to_string()})))?;
                    if back != pair {
                        return Err(("xi_inv(xi(G)) != G".into(), pair_json(&pair)));
                    }
                    if !image.insert(w.letters().to_vec()) {
                        return Err(("xi is not injective".into(), json!({"word": w.to_string()})));
                    }
                }
                let mut valid = HashSet::new();
                for letters in all_letter_seqs(p, n) {
                    if validate_word(&letters, m).map_err(|e| lib_err(e, ctx()))? {
                        valid.insert(letters);
                    }
                }
                if let Some(missing) = valid.difference(&image).next() {
                    let w = PRiordanWord::new(missing.clone(), m)
                        .map(|w| w.to_string())
                        .unwrap_or_default();
                    return Err((
                        "valid word outside the image of xi".into(),
                        json!({"p": p, "word": w}),
                    ));
                }
                if image.len() != valid.len() {
                    return Err(("xi image contains invalid words".into(), ctx()));
                }
            }
            for n in 0..=32usize {
                let s = count_words(n, m);
                let pp = BigUint::from(p);
                let closed = (num_traits::pow(pp.clone(), 2 * n) + &pp) / (pp + 1u32);
                let r = count_graphs(n + 1, m).map_err(|e| lib_err(e, json!({"n": n})))?;
                if s != r || s != closed {
                    return Err((
                        format!("word count {s}, graph count {r}, closed form {closed}"),
                        json!({"p": p, "n": n}),
                    ));
                }
            }
        }
        Ok(format!(
            "p ∈ {{2,3}}, n ≤ {max_n} exhaustive; counts agree for n ≤ 32"
        ))
    })();
    report("xi-bijection", outcome)
}

fn bits_of(code: u64, len: usize) -> Vec<bool> {
    (0..len).map(|i| code >> (len - 1 - i) & 1 == 1).collect()
}

/// All permutations of `1..=m` in lexicographic order.
fn all_perms(m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=m).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn check_psi(max_m: usize, brute_m: usize) -> CheckReport {
    let outcome = (|| {
        for m in 1..=max_m {
            let mut image = HashSet::new();
            for code in 0..1u64 << (m - 1) {
                let perm = psi(&bits_of(code, m - 1));
                if !avoids_123_132(&perm) {
                    return Err((
                        "psi output contains 123 or 132".into(),
                        json!({"perm": perm.to_string()}),
                    ));
                }
                image.insert(perm);
            }
            if image.len() != 1 << (m - 1) {
                return Err((
                    format!("psi image has {} elements", image.len()),
                    json!({"m": m}),
                ));
            }
            if m <= brute_m {
                let brute: HashSet<Permutation> = all_perms(m)
                    .into_iter()
                    .map(|v| Permutation::new(v).expect("valid"))
                    .filter(avoids_123_132)
                    .collect();
                if brute != image {
                    return Err((
                        "psi image differs from brute-force avoiders".into(),
                        json!({"m": m}),
                    ));
                }
            }
        }
        Ok(format!(
            "2^(m-1) avoiders for m ≤ {max_m}; brute force for m ≤ {brute_m}"
        ))
    })();
    report("psi-avoiders", outcome)
}

/// Avoiders of length `2n` with exactly two fixed points.
fn p2n_members(n: usize) -> Vec<Permutation> {
    (0..1u64 << (2 * n - 1))
        .map(|code| psi(&bits_of(code, 2 * n - 1)))
        .filter(|perm| perm.fixed_points().len() == 2)
        .collect()
}

fn check_p2n(max_n: usize) -> CheckReport {
    let outcome = (|| {
        for n in 1..=max_n {
            let found = p2n_members(n).len() as u64;
            let want = (4u64.pow(n as u32 - 1) + 2) / 3;
            if found != want {
                return Err((
                    format!("n = {n}: {found} members, expected {want}"),
                    json!({"n": n}),
                ));
            }
        }
        Ok(format!("(4^(n-1)+2)/3 members for n = 1..{max_n}"))
    })();
    report("p2n-count", outcome)
}

fn check_phi(max_n: usize) -> CheckReport {
    let m2 = modulus(2);
    let outcome = (|| {
        for (g, f, want) in [
            ("t+t^3", "t^2", "10,8,9,6,5,4,7,3,1,2"),
            ("t", "t+t^2", "9,8,10,6,5,4,7,3,2,1"),
        ] {
            let pair = parse_poly(g, m2)
                .and_then(|g| canonicalize(&g, &parse_poly(f, m2)?, 5))
                .map_err(|e| lib_err(e, json!({"g": g, "f": f})))?;
            let got = phi(&pair)
                .map_err(|e| lib_err(e, pair_json(&pair)))?
                .to_string();
            if got != want {
                return Err((format!("phi gave {got}, expected {want}"), pair_json(&pair)));
            }
        }
        for n in 1..=max_n {
            let mut image = HashSet::new();
            for pair in enumerate_graphs(n, m2).map_err(|e| lib_err(e, json!({"n": n})))? {
                let perm = phi(&pair).map_err(|e| lib_err(e, pair_json(&pair)))?;
                let member = is_member_p2n(&perm).map_err(|e| lib_err(e, pair_json(&pair)))?;
                let back =
                    phi_inv(&perm).map_err(|e| lib_err(e, json!({"perm": perm.to_string()})))?;
                if !member || back != pair {
                    return Err(("phi is not a bijection onto P_2n".into(), pair_json(&pair)));
                }
                if !image.insert(perm.clone()) {
                    return Err((
                        "phi is not injective".into(),
                        json!({"perm": perm.to_string()}),
                    ));
                }
            }
            let all: HashSet<Permutation> = p2n_members(n).into_iter().collect();
            if all != image {
                return Err((
                    format!("phi image differs from P_2n at n = {n}"),
                    json!({"n": n}),
                ));
            }
        }
        Ok(format!(
            "worked examples reproduce; bijective for n ≤ {max_n}"
        ))
    })();
    report("phi-bijection", outcome)
}

/// Calls `visit` on every word of length `len` over `{0,1,2}`.
fn for_each_ternary(len: usize, mut visit: impl FnMut(&[u8])) {
    let mut word = vec![0u8; len];
    loop {
        visit(&word);
        let Some(i) = word.iter().rposition(|&x| x < 2) else {
            return;
        };
        word[i] += 1;
        word[i + 1..].fill(0);
    }
}

fn balanced_words(n: usize) -> Vec<BalancedWord> {
    let mut out = Vec::new();
    for_each_ternary(2 * n, |w| {
        if let Ok(b) = BalancedWord::new(w.to_vec()) {
            out.push(b);
        }
    });
    out
}

fn check_balanced_counts(brute_n: usize) -> CheckReport {
    let outcome = (|| {
        for n in 0..=brute_n {
            let mut found = 0u64;
            for_each_ternary(2 * n, |w| found += is_balanced(w).unwrap_or(false) as u64);
            let want = (9u64.pow(n as u32) + 3) / 4;
            if found != want {
                return Err((
                    format!("n = {n}: {found} balanced words, expected {want}"),
                    json!({"n": n}),
                ));
            }
        }
        for n in 0..=32 {
            count_balanced(n).map_err(|e| lib_err(e, json!({"n": n})))?;
        }
        Ok(format!(
            "brute force for n ≤ {brute_n}; recursion = closed form for n ≤ 32"
        ))
    })();
    report("balanced-counts", outcome)
}

fn check_h(max_n: usize) -> CheckReport {
    let outcome = (|| {
        let word = |s: &str| BalancedWord::parse(s).expect("literal");
        if h_map(&word("22012120"), 0, 1).ok() != Some(word("2211212001")) {
            return Err((
                "h_{0,1}(22012120) != 2211212001".into(),
                json!({"word": "22012120"}),
            ));
        }
        if h_inv(&word("0021210202")).ok().map(|r| r.0) != Some(word("20212102")) {
            return Err((
                "h_inv(0021210202) != 20212102".into(),
                json!({"word": "0021210202"}),
            ));
        }
        let mut shorter = balanced_words(0);
        for n in 0..=max_n {
            let longer = balanced_words(n + 1);
            for (x, y) in [(0u8, 1u8), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
                let z = 3 - x - y;
                let mut image = HashSet::new();
                for w in shorter
                    .iter()
                    .filter(|w| w.letters().iter().any(|&c| c != z))
                {
                    let v =
                        h_map(w, x, y).map_err(|e| lib_err(e, json!({"word": w.to_string()})))?;
                    if h_inv(&v).ok() != Some((w.clone(), x, y)) {
                        return Err((
                            "h_inv(h(w)) != w".into(),
                            json!({"word": w.to_string(), "x": x, "y": y}),
                        ));
                    }
                    image.insert(v);
                }
                let target: HashSet<BalancedWord> = longer
                    .iter()
                    .filter(|v| v.letters()[2 * n..] == [x, y])
                    .cloned()
                    .collect();
                if image != target {
                    return Err((
                        format!("h_{{{x},{y}}} image differs from words ending {x}{y}"),
                        json!({"n": n, "x": x, "y": y}),
                    ));
                }
            }
            shorter = longer;
        }
        Ok(format!(
            "examples reproduce; bijective for n ≤ {max_n}, all six pairs"
        ))
    })();
    report("h-bijection", outcome)
}

fn check_eta(max_n: usize) -> CheckReport {
    let m3 = modulus(3);
    let outcome = (|| {
        for order in 2..=6usize {
            for letter in 0..3u32 {
                let g = vec![letter; order - 1];
                let pair = CanonicalPair::from_residues(m3, order, g, Vec::new())
                    .map_err(|e| lib_err(e, json!({"order": order})))?;
                let want = BalancedWord::constant(letter as u8, 2 * (order - 1));
                if eta(&pair).ok() != Some(want) {
                    return Err(("constant-word anchor fails".into(), pair_json(&pair)));
                }
            }
        }
        for n in 0..=max_n {
            let mut image = HashSet::new();
            for pair in enumerate_graphs(n + 1, m3).map_err(|e| lib_err(e, json!({"n": n})))? {
                let w = eta(&pair).map_err(|e| lib_err(e, pair_json(&pair)))?;
                if eta_inv(&w).ok().as_ref() != Some(&pair) {
                    return Err(("eta_inv(eta(G)) != G".into(), pair_json(&pair)));
                }
                if !image.insert(w.clone()) {
                    return Err((
                        "eta is not injective".into(),
                        json!({"word": w.to_string()}),
                    ));
                }
            }
            let all: HashSet<BalancedWord> = balanced_words(n).into_iter().collect();
            if all != image {
                return Err((
                    format!("eta image differs from balanced words at n = {n}"),
                    json!({"n": n}),
                ));
            }
        }
        Ok(format!(
            "anchors hold for orders ≤ 6; bijective for n ≤ {max_n}"
        ))
    })();
    report("eta-bijection", outcome)
}

fn check_walks(max_n: usize) -> CheckReport {
    let outcome = (|| {
        for n in 0..=max_n {
            let ctx = || json!({"dim": 3, "length": 2 * n});
            let a = count_closed_walks_matrix(3, 2 * n).map_err(|e| lib_err(e, ctx()))?;
            let b = count_closed_walks_formula(3, 2 * n).map_err(|e| lib_err(e, ctx()))?;
            let c = count_balanced(n).map_err(|e| lib_err(e, ctx()))?;
            if a != b || b != c {
                return Err((format!("matrix {a}, formula {b}, balanced {c}"), ctx()));
            }
        }
        Ok(format!("matrix = formula = balanced count for n ≤ {max_n}"))
    })();
    report("walk-oracles", outcome)
}

fn check_classes(max_n: usize) -> CheckReport {
    let m2 = modulus(2);
    let outcome = (|| {
        let pascal = CanonicalPair::from_residues(m2, 3, vec![1, 1], vec![0, 1])
            .map_err(|e| lib_err(e, json!({"n": 3})))?;
        let perm = phi(&pascal).map_err(|e| lib_err(e, pair_json(&pascal)))?;
        if perm.to_string() != "6,5,3,4,2,1" || !classify(&pascal).contains(GraphClass::PASCAL) {
            return Err((
                format!("Pascal graph of order 3 maps to {perm}"),
                pair_json(&pascal),
            ));
        }
        for n in 1..=max_n {
            for pair in enumerate_graphs(n, m2).map_err(|e| lib_err(e, json!({"n": n})))? {
                let full = classify(&pair);
                let w = xi(&pair)
                    .and_then(|w| word_class(&w))
                    .map_err(|e| lib_err(e, pair_json(&pair)))?;
                let p = phi(&pair)
                    .and_then(|p| perm_class(&p))
                    .map_err(|e| lib_err(e, pair_json(&pair)))?;
                if w != full & GraphClass::WORD_CLASSES || p != full & GraphClass::PERM_CLASSES {
                    return Err((
                        format!("classify {{{full}}}, word {{{w}}}, perm {{{p}}}"),
                        pair_json(&pair),
                    ));
                }
            }
        }
        Ok(format!(
            "classify, word_class and perm_class agree for n ≤ {max_n}"
        ))
    })();
    report("class-coherence", outcome)
}

pub fn first_failure(reports: &[CheckReport]) -> Option<&CheckReport> {
    reports.iter().find(|r| !r.passed)
}
