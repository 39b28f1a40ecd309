//! Finite verification suites for the structural theorems on
//! `R((a+1)^n a^m)`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::binomial::jensen_sides;
use crate::boxdiag::box_diagonal;
use crate::composition::{
    coarsenings, compositions_of, joined_pairs_partition, multiplicity, Composition,
};
use crate::equitable::quasi_profile;
use crate::error::{Error, Result};
use crate::order::certify::{raise_to_short_ends, RaiseStep};
use crate::order::compare::{compare, Verdict};
use crate::order::filters::{filter_quasi_profile, filter_short_ends, FilterVerdict};
use crate::order::poset::{arrangements, build_poset, PosetGraph, PosetOptions};
use crate::partition::Partition;
use crate::schur::engine::ExpansionEngine;
use crate::schur::hbasis::{h_to_s, jt_h_expansion, JT_MAX_ROWS};
use crate::skew::ribbon_to_skew;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub instance: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// Outcome of a suite: one entry per theorem instance checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<ReportEntry>,
}

/// `Ok(detail)` when an instance holds, `Err(detail)` when it fails.
pub type Outcome = std::result::Result<String, String>;

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    /// Times `check` and records its outcome under `instance`.
    pub fn check<F>(&mut self, instance: impl Into<String>, check: F) -> Result<()>
    where
        F: FnOnce() -> Result<Outcome>,
    {
        let start = Instant::now();
        let outcome = check()?;
        let millis = start.elapsed().as_millis();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.entries.push(ReportEntry {
            instance: instance.into(),
            passed,
            detail,
            millis,
        });
        Ok(())
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}

fn comp(parts: Vec<usize>) -> Composition {
    Composition::new(parts).expect("positive parts")
}

fn repeat(part: usize, times: usize) -> Vec<usize> {
    vec![part; times]
}

fn join(pieces: &[Vec<usize>]) -> Composition {
    comp(pieces.concat())
}

fn poset(
    engine: &ExpansionEngine,
    a: usize,
    n: usize,
    m: usize,
    guard: u128,
) -> Result<PosetGraph> {
    build_poset(
        engine,
        a,
        n,
        m,
        PosetOptions {
            guard,
            ..PosetOptions::default()
        },
    )
}

/// `m_alpha(lambda_k) + (-1)^k q_{k-1}(alpha)`, with `q_{-1} = 0`.
pub fn ftom_quantity(alpha: &Composition, a: usize, n: usize, m: usize, k: usize) -> Result<i64> {
    let lambda = joined_pairs_partition(a, n, m, k).ok_or_else(|| {
        Error::InvalidParameter(format!("m = {m} is smaller than 2k = {}", 2 * k))
    })?;
    let mult = multiplicity(alpha, &lambda) as i64;
    let q = if k == 0 {
        0
    } else {
        quasi_profile(alpha, a)?.get(k - 1) as i64
    };
    Ok(if k.is_multiple_of(2) {
        mult + q
    } else {
        mult - q
    })
}

/// Groups `R((a+1)^n a^m)` by `(q_0, ..., q_{k-2})` and checks that the
/// joined-pairs quantity is constant on each group.
pub fn verify_ftom(a: usize, n: usize, m: usize, k: usize) -> Result<Report> {
    if m < 2 * k {
        return Err(Error::InvalidParameter(format!(
            "m = {m} is smaller than 2k = {}",
            2 * k
        )));
    }
    let mut groups: BTreeMap<Vec<usize>, Vec<(Composition, i64)>> = BTreeMap::new();
    for alpha in arrangements(a, n, m) {
        let q = quasi_profile(&alpha, a)?;
        let key: Vec<usize> = (0..k.saturating_sub(1)).map(|j| q.get(j)).collect();
        let value = ftom_quantity(&alpha, a, n, m, k)?;
        groups.entry(key).or_default().push((alpha, value));
    }
    let mut report = Report::new("ftom");
    for (key, members) in groups {
        let key_str = key
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        report.check(format!("a={a} n={n} m={m} k={k} q=({key_str})"), || {
            let c = members[0].1;
            Ok(match members.iter().find(|(_, v)| *v != c) {
                None => Ok(format!("C = {c} over {} ribbons", members.len())),
                Some((alpha, v)) => {
                    Err(format!("{} gives {c} but {alpha} gives {v}", members[0].0))
                }
            })
        })?;
    }
    Ok(report)
}

/// `(a+1)^{ceil(n/2)} a^m (a+1)^{floor(n/2)}`.
pub fn minimal_candidate(a: usize, n: usize, m: usize) -> Composition {
    join(&[
        repeat(a + 1, n.div_ceil(2)),
        repeat(a, m),
        repeat(a + 1, n / 2),
    ])
}

fn mu(a: usize, n: usize, m: usize, k: usize, joined_ends: usize) -> Option<Partition> {
    let long = n.checked_sub(2 * k + joined_ends)?;
    let short = m.checked_sub(joined_ends)?;
    let mut parts = repeat(2 * a + 2, k);
    parts.extend(repeat(2 * a + 1, joined_ends));
    parts.extend(repeat(a + 1, long));
    parts.extend(repeat(a, short));
    Some(Partition::from_parts(parts))
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The multiplicity comparisons between the minimal candidate and
/// `(a+1)^{n-t} a^m (a+1)^t`.
fn minimal_multiplicities(a: usize, n: usize, m: usize, t: usize) -> Outcome {
    let alpha = minimal_candidate(a, n, m);
    let beta = join(&[repeat(a + 1, n - t), repeat(a, m), repeat(a + 1, t)]);
    let diff = |p: &Partition| multiplicity(&alpha, p) as i64 - multiplicity(&beta, p) as i64;
    for (joined_ends, first_diff) in [(0, t + 1), (1, t), (2, t)] {
        for k in 0..=first_diff {
            let Some(p) = mu(a, n, m, k, joined_ends) else {
                continue;
            };
            let expected = if k == first_diff { sign(first_diff) } else { 0 };
            if diff(&p) != expected {
                return Err(format!(
                    "m_alpha - m_beta at {p} is {} not {expected}",
                    diff(&p)
                ));
            }
        }
    }
    let ca = coarsenings(&alpha);
    let cb = coarsenings(&beta);
    let least = ca
        .keys()
        .chain(cb.keys())
        .filter(|p| ca.get(*p) != cb.get(*p))
        .min()
        .cloned();
    let target = mu(a, n, m, t, 1).expect("t < floor(n/2)");
    match least {
        Some(p) if p == target => Ok(format!("{alpha} vs {beta}: first difference at {p}")),
        other => Err(format!(
            "{alpha} vs {beta}: first difference at {other:?}, expected {target}"
        )),
    }
}

/// Minimality of `(a+1)^{ceil(n/2)} a^m (a+1)^{floor(n/2)}` in the poset,
/// together with the coarsening multiplicity comparisons behind it.
pub fn verify_minimal(
    engine: &ExpansionEngine,
    a: usize,
    n: usize,
    m: usize,
    guard: u128,
) -> Result<Report> {
    let mut report = Report::new("minimal");
    let alpha = minimal_candidate(a, n, m);
    report.check(
        format!("{alpha} minimal in R({}^{n} {a}^{m})", a + 1),
        || {
            let p = poset(engine, a, n, m, guard)?;
            let i = p.index_of(&alpha).expect("candidate is an element");
            Ok(match (0..p.len()).find(|&j| p.greater(i, j)) {
                None => Ok(format!("{} elements", p.len())),
                Some(j) => Err(format!("{alpha} > {}", p.elements[j])),
            })
        },
    )?;
    if m >= 2 {
        for t in 1..n / 2 {
            report.check(format!("multiplicities a={a} n={n} m={m} t={t}"), || {
                Ok(minimal_multiplicities(a, n, m, t))
            })?;
        }
    }
    Ok(report)
}

/// `a^i (a+1) a^{m-i}` for `i = floor(m/2)` down to `0`.
pub fn chain_one(a: usize, m: usize) -> Vec<Composition> {
    (0..=m / 2)
        .rev()
        .map(|i| join(&[repeat(a, i), vec![a + 1], repeat(a, m - i)]))
        .collect()
}

/// `(a+1)^i a (a+1)^{n-i}` for `i = 0` up to `floor(n/2)`.
pub fn chain_two(a: usize, n: usize) -> Vec<Composition> {
    (0..=n / 2)
        .map(|i| join(&[repeat(a + 1, i), vec![a], repeat(a + 1, n - i)]))
        .collect()
}

/// The chain of `R((a+1)^2 a^2)`, largest first.
pub fn chain_three(a: usize) -> Vec<Composition> {
    let (s, l) = (a, a + 1);
    [[s, l, l, s], [l, s, l, s], [l, l, s, s], [l, s, s, l]]
        .into_iter()
        .map(|p| comp(p.to_vec()))
        .collect()
}

/// The chain of `R((a+1)^2 a^3)`, largest first.
pub fn chain_four(a: usize) -> Vec<Composition> {
    let (s, l) = (a, a + 1);
    [
        [s, l, s, l, s],
        [s, l, l, s, s],
        [l, s, l, s, s],
        [l, s, s, l, s],
        [l, l, s, s, s],
        [l, s, s, s, l],
    ]
    .into_iter()
    .map(|p| comp(p.to_vec()))
    .collect()
}

/// Checks each consecutive relation of `chain` is a strict inequality and
/// that the poset is exactly this total order.
fn check_chain(
    engine: &ExpansionEngine,
    chain: &[Composition],
    a: usize,
    n: usize,
    m: usize,
    guard: u128,
) -> Result<Outcome> {
    for w in chain.windows(2) {
        let r = compare(engine, &w[0], &w[1])?;
        if r.verdict != Verdict::Greater {
            return Ok(Err(format!("{} vs {} is {:?}", w[0], w[1], r.verdict)));
        }
    }
    let p = poset(engine, a, n, m, guard)?;
    let expected: Vec<Composition> = chain.iter().map(Composition::canonical).collect();
    let label = |c: &[Composition]| {
        c.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" > ")
    };
    Ok(match p.chain() {
        Some(order) if order.iter().copied().eq(expected.iter()) => Ok(label(&expected)),
        Some(order) => Err(format!(
            "poset order {}",
            label(&order.into_iter().cloned().collect::<Vec<_>>())
        )),
        None => Err(format!("R({}^{n} {a}^{m}) is not a chain", a + 1)),
    })
}

/// The four chain families at one value of `a`.
pub fn verify_chains(
    engine: &ExpansionEngine,
    a: usize,
    max_m: usize,
    max_n: usize,
    guard: u128,
) -> Result<Report> {
    let mut report = Report::new("chains");
    for m in 1..=max_m {
        report.check(format!("chain (1) a={a} m={m}"), || {
            check_chain(engine, &chain_one(a, m), a, 1, m, guard)
        })?;
    }
    for n in 1..=max_n {
        report.check(format!("chain (2) a={a} n={n}"), || {
            check_chain(engine, &chain_two(a, n), a, n, 1, guard)
        })?;
    }
    report.check(format!("chain (3) a={a}"), || {
        check_chain(engine, &chain_three(a), a, 2, 2, guard)
    })?;
    report.check(format!("chain (4) a={a}"), || {
        check_chain(engine, &chain_four(a), a, 2, 3, guard)
    })?;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalBounds {
    /// Largest `n` for the families `R((a+1)^n a^2)` and `R((a+1)^n a^{d(n+1)})`.
    pub max_n: usize,
    pub max_d: usize,
    /// Largest `n` and `m` in the box diagonal list checks.
    pub max_box: usize,
}

impl Default for MaximalBounds {
    fn default() -> Self {
        MaximalBounds {
            max_n: 3,
            max_d: 1,
            max_box: 6,
        }
    }
}

/// `a^d (a+1) a^d ... (a+1) a^d` with `n` long rows.
pub fn spread_ribbon(a: usize, n: usize, d: usize) -> Composition {
    let mut parts = repeat(a, d);
    for _ in 0..n {
        parts.push(a + 1);
        parts.extend(repeat(a, d));
    }
    comp(parts)
}

/// The box diagonal of `R((a+1)^n a^m)`: `R = n + m` rows and
/// `S = (a-1)(n+m) + n + 1` columns.
pub fn family_box_diagonal(a: usize, n: usize, m: usize) -> Composition {
    box_diagonal(n + m, (a - 1) * (n + m) + n + 1)
}

/// The listed closed forms of box diagonals, when `(n, m)` is one of the
/// listed families.
pub fn listed_box_diagonal(a: usize, n: usize, m: usize) -> Option<Composition> {
    let (s, l) = (a, a + 1);
    match (n, m) {
        (1, m) => Some(join(&[repeat(s, m / 2), vec![l], repeat(s, m.div_ceil(2))])),
        (n, 1) => Some(join(&[repeat(l, n), vec![s]])),
        (2, 2) => Some(comp(vec![s, l, l, s])),
        (2, 3) => Some(comp(vec![s, l, s, l, s])),
        (n, 2) => Some(join(&[vec![s], repeat(l, n), vec![s]])),
        (n, m) if n > 0 && m % (n + 1) == 0 => Some(spread_ribbon(a, n, m / (n + 1))),
        _ => None,
    }
}

/// Maximal elements of `R((a+1)^n a^2)` and `R((a+1)^n a^{d(n+1)})`, and the
/// closed forms of the box diagonal.
pub fn verify_maximal_corollaries(
    engine: &ExpansionEngine,
    a: usize,
    bounds: MaximalBounds,
    guard: u128,
) -> Result<Report> {
    let mut report = Report::new("maximal");
    for n in 1..=bounds.max_n {
        let top = join(&[vec![a], repeat(a + 1, n), vec![a]]);
        report.check(
            format!("{top} unique maximum of R({}^{n} {a}^2)", a + 1),
            || {
                let p = poset(engine, a, n, 2, guard)?;
                let max: Vec<&Composition> =
                    p.maximal().into_iter().map(|i| &p.elements[i]).collect();
                Ok(if max == [&top.canonical()] {
                    Ok(format!("{} elements", p.len()))
                } else {
                    Err(format!("maximal elements {max:?}"))
                })
            },
        )?;
    }
    for n in 1..=bounds.max_n {
        for d in 1..=bounds.max_d {
            let m = d * (n + 1);
            let top = spread_ribbon(a, n, d);
            report.check(format!("{top} maximal in R({}^{n} {a}^{m})", a + 1), || {
                let p = poset(engine, a, n, m, guard)?;
                let maximal = p.maximal();
                Ok(if maximal.contains(&p.index_of(&top).expect("element")) {
                    Ok(format!("{} maximal elements of {}", maximal.len(), p.len()))
                } else {
                    Err(format!("{top} is below another element"))
                })
            })?;
        }
    }
    for n in 0..=bounds.max_box {
        for m in 0..=bounds.max_box {
            let Some(listed) = listed_box_diagonal(a, n, m) else {
                continue;
            };
            let diag = family_box_diagonal(a, n, m);
            report.check(format!("box diagonal of R({}^{n} {a}^{m})", a + 1), || {
                Ok(if diag.canonical() == listed.canonical() {
                    Ok(diag.to_string())
                } else {
                    Err(format!("box diagonal {diag}, listed {listed}"))
                })
            })?;
        }
    }
    Ok(report)
}

/// The two incomparable pairs: `a(a+1)(a+1)aaa a^t` against
/// `(a+1)aa(a+1)aa a^t`, and `aa(a+1)(a+1)(a+1) gamma` against
/// `(a+1)a(a+1)a(a+1) gamma`.
pub fn incomparable_pairs(
    a: usize,
    t: usize,
    gamma: &Composition,
) -> [(Composition, Composition); 2] {
    let (s, l) = (a, a + 1);
    [
        (
            join(&[vec![s, l, l, s, s, s], repeat(s, t)]),
            join(&[vec![l, s, s, l, s, s], repeat(s, t)]),
        ),
        (
            comp(vec![s, s, l, l, l]).concat(gamma),
            comp(vec![l, s, l, s, l]).concat(gamma),
        ),
    ]
}

fn check_incomparable(
    engine: &ExpansionEngine,
    alpha: &Composition,
    beta: &Composition,
) -> Result<Outcome> {
    let forward = compare(engine, alpha, beta)?;
    let backward = compare(engine, beta, alpha)?;
    let witnessed = |r: &crate::order::compare::ComparisonResult| {
        r.witness_pos.is_some() && r.witness_neg.is_some()
    };
    Ok(
        if forward.verdict == Verdict::Incomparable
            && backward.verdict == Verdict::Incomparable
            && witnessed(&forward)
            && witnessed(&backward)
        {
            let (p, c) = forward.witness_pos.expect("witness");
            let (q, d) = forward.witness_neg.expect("witness");
            Ok(format!("{c}s{p} and {d}s{q}"))
        } else {
            Err(format!("{:?} / {:?}", forward.verdict, backward.verdict))
        },
    )
}

/// Incomparability of the two pair families, with `gamma = a^t` in the second.
pub fn verify_incomparability(engine: &ExpansionEngine, a: usize, t: usize) -> Result<Report> {
    let mut report = Report::new("incomparable");
    let gamma = comp(repeat(a, t));
    for (alpha, beta) in incomparable_pairs(a, t, &gamma) {
        report.check(format!("{alpha} vs {beta}"), || {
            check_incomparable(engine, &alpha, &beta)
        })?;
    }
    Ok(report)
}

/// Soundness of both filters and of the raising certificates on one poset.
pub fn verify_filters(
    engine: &ExpansionEngine,
    a: usize,
    n: usize,
    m: usize,
    guard: u128,
) -> Result<Report> {
    let mut report = Report::new("filters");
    let p = poset(engine, a, n, m, guard)?;
    report.check(format!("R({}^{n} {a}^{m}) axioms", a + 1), || {
        Ok(p.check_axioms().map(|_| format!("{} elements", p.len())))
    })?;
    report.check(format!("R({}^{n} {a}^{m}) filters", a + 1), || {
        let mut pruned = 0;
        for &(i, j) in &p.relations {
            let (x, y) = (&p.elements[i], &p.elements[j]);
            if filter_short_ends(x, y, a)? == FilterVerdict::CannotBeGreater {
                return Ok(Err(format!(
                    "{x} > {y} but the short ends filter rules it out"
                )));
            }
            if filter_quasi_profile(x, y, a)? == FilterVerdict::CannotBeGreater {
                return Ok(Err(format!(
                    "{x} > {y} but the quasi-profile filter rules it out"
                )));
            }
        }
        for i in 0..p.len() {
            for j in 0..p.len() {
                let (x, y) = (&p.elements[i], &p.elements[j]);
                if filter_short_ends(x, y, a)? == FilterVerdict::CannotBeGreater
                    || filter_quasi_profile(x, y, a)? == FilterVerdict::CannotBeGreater
                {
                    pruned += 1;
                }
            }
        }
        Ok(if p.filter_violations().is_empty() {
            Ok(format!(
                "{} relations, {pruned} ordered pairs ruled out",
                p.relations.len()
            ))
        } else {
            Err(format!(
                "{} recorded violations",
                p.filter_violations().len()
            ))
        })
    })?;
    if m >= 2 {
        report.check(format!("R({}^{n} {a}^{m}) raising", a + 1), || {
            for beta in &p.elements {
                let (top, steps) = raise_to_short_ends(beta, a)?;
                for step in &steps {
                    if let RaiseStep::Exchange(cert) = step {
                        let v = compare(engine, &cert.greater, &cert.lesser)?.verdict;
                        if !matches!(v, Verdict::Greater | Verdict::Equal) {
                            return Ok(Err(format!(
                                "{} vs {} is {v:?}",
                                cert.greater, cert.lesser
                            )));
                        }
                    }
                }
                let v = compare(engine, &top, beta)?.verdict;
                if !matches!(v, Verdict::Greater | Verdict::Equal) {
                    return Ok(Err(format!("raised {beta} to {top} but {v:?}")));
                }
            }
            Ok(Ok(format!("{} elements raised", p.len())))
        })?;
    }
    Ok(report)
}

/// Whether `R((a+1)^n a^m)` is one of the chain families.
pub fn is_chain_family(n: usize, m: usize) -> bool {
    n <= 1 || m <= 1 || (n, m) == (2, 2) || (n, m) == (2, 3)
}

/// Every family outside the chain families has an incomparable pair.
pub fn verify_chain_completeness(
    engine: &ExpansionEngine,
    a: usize,
    max_n: usize,
    max_m: usize,
    guard: u128,
) -> Result<Report> {
    let mut report = Report::new("smalls");
    for n in 2..=max_n {
        for m in 2..=max_m {
            if is_chain_family(n, m) {
                continue;
            }
            report.check(format!("R({}^{n} {a}^{m}) is not a chain", a + 1), || {
                let p = poset(engine, a, n, m, guard)?;
                Ok(match p.incomparable_pairs().first() {
                    Some(&(i, j)) => Ok(format!("{} and {}", p.elements[i], p.elements[j])),
                    None => Err("total order".into()),
                })
            })?;
        }
    }
    Ok(report)
}

/// Both sides of the Jensen-type binomial identity on `-range..=range`
/// and `v <= max_v`.
pub fn verify_jensen(range: i64, max_v: u32) -> Report {
    let mut report = Report::new("jensen");
    for v in 0..=max_v {
        report
            .check(format!("v={v} |x|,|y|<={range}"), || {
                let mut count = 0;
                for x in -range..=range {
                    for y in -range..=range {
                        let (lhs, rhs) = jensen_sides(x, y, v);
                        if lhs != rhs {
                            return Ok(Err(format!("x={x} y={y}: {lhs} != {rhs}")));
                        }
                        count += 1;
                    }
                }
                Ok(Ok(format!("{count} points")))
            })
            .expect("infallible");
    }
    report
}

/// LR expansion against `h_to_s` of the coarsening expansion, and the
/// Jacobi-Trudi determinant against the coarsening expansion.
pub fn verify_oracles(engine: &ExpansionEngine, max_cells: usize) -> Result<Report> {
    let mut report = Report::new("oracles");
    for size in 1..=max_cells {
        report.check(format!("|alpha|={size}"), || {
            let mut jt = 0;
            let all = compositions_of(size);
            for alpha in &all {
                let h = engine.h_expand_ribbon(alpha)?;
                if h_to_s(&h)? != engine.ribbon_schur(alpha)? {
                    return Ok(Err(format!(
                        "{alpha}: Pieri image differs from LR expansion"
                    )));
                }
                if alpha.len() <= JT_MAX_ROWS {
                    if jt_h_expansion(&ribbon_to_skew(alpha))? != h {
                        return Ok(Err(format!(
                            "{alpha}: Jacobi-Trudi differs from coarsenings"
                        )));
                    }
                    jt += 1;
                }
            }
            Ok(Ok(format!("{} ribbons, {jt} via Jacobi-Trudi", all.len())))
        })?;
    }
    Ok(report)
}
