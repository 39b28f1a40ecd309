use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::binomial_clamped;
use crate::composition::Composition;
use crate::error::{guard, Error, Result};
use crate::order::compare::{compare, Verdict};
use crate::order::filters::{filter_quasi_profile, filter_short_ends, FilterVerdict};
use crate::schur::engine::ExpansionEngine;

/// Default cap on `C(n + m, m)`, the number of arrangements enumerated.
pub const DEFAULT_POSET_GUARD: u128 = 3003;

/// Every arrangement of `n` parts `a + 1` and `m` parts `a`, in lex order.
pub fn arrangements(a: usize, n: usize, m: usize) -> Vec<Composition> {
    fn rec(a: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 && m == 0 {
            out.push(Composition::new(cur.clone()).expect("positive parts"));
            return;
        }
        if m > 0 {
            cur.push(a);
            rec(a, n, m - 1, cur, out);
            cur.pop();
        }
        if n > 0 {
            cur.push(a + 1);
            rec(a, n - 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, n, m, &mut Vec::new(), &mut out);
    out
}

/// Representatives `min(alpha, alpha*)` of the ribbons with `n` rows of
/// length `a + 1` and `m` rows of length `a`, in lex order.
pub fn equitable_elements(a: usize, n: usize, m: usize, limit: u128) -> Result<Vec<Composition>> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be at least 1".into()));
    }
    let count = binomial_clamped((n + m) as i64, m as u32);
    guard("poset arrangements", count as u128, limit)?;
    let reps: BTreeSet<Composition> = arrangements(a, n, m)
        .iter()
        .map(Composition::canonical)
        .collect();
    Ok(reps.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PosetMode {
    /// Every pair is compared exactly; filter verdicts are only recorded.
    #[default]
    Verify,
    /// Pairs ruled out in both directions by the filters are not expanded.
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetOptions {
    pub guard: u128,
    pub mode: PosetMode,
}

impl Default for PosetOptions {
    fn default() -> Self {
        PosetOptions {
            guard: DEFAULT_POSET_GUARD,
            mode: PosetMode::Verify,
        }
    }
}

/// Filter verdicts for the claim `elements[greater] >_s elements[lesser]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FilterRecord {
    pub greater: usize,
    pub lesser: usize,
    pub short_ends: FilterVerdict,
    pub quasi_profile: FilterVerdict,
}

impl FilterRecord {
    pub fn rules_out(&self) -> bool {
        self.short_ends == FilterVerdict::CannotBeGreater
            || self.quasi_profile == FilterVerdict::CannotBeGreater
    }
}

/// `R((a+1)^n a^m)` under the Schur-positivity order. Indices refer to
/// `elements`, which are canonical representatives in lex order.
#[derive(Debug, Clone)]
pub struct PosetGraph {
    pub a: usize,
    pub n: usize,
    pub m: usize,
    pub elements: Vec<Composition>,
    /// `(i, j)` means `elements[i] >_s elements[j]` strictly.
    pub relations: BTreeSet<(usize, usize)>,
    /// The transitive reduction of `relations`.
    pub covers: Vec<(usize, usize)>,
    /// Distinct representatives with equal expansions.
    pub equal: Vec<(usize, usize)>,
    pub filters: Vec<FilterRecord>,
    /// Ordered pairs settled by the filters without expansion (fast mode).
    pub skipped: usize,
}

pub fn build_poset(
    engine: &ExpansionEngine,
    a: usize,
    n: usize,
    m: usize,
    options: PosetOptions,
) -> Result<PosetGraph> {
    let elements = equitable_elements(a, n, m, options.guard)?;
    let pairs: Vec<(usize, usize)> = (0..elements.len())
        .flat_map(|i| (i + 1..elements.len()).map(move |j| (i, j)))
        .collect();
    let outcomes = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&elements[i], &elements[j]);
            let fwd = record(i, j, x, y, a)?;
            let back = record(j, i, y, x, a)?;
            if options.mode == PosetMode::Fast && fwd.rules_out() && back.rules_out() {
                return Ok((i, j, None, fwd, back));
            }
            let verdict = compare(engine, x, y)?.verdict;
            Ok((i, j, Some(verdict), fwd, back))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut relations = BTreeSet::new();
    let mut equal = Vec::new();
    let mut filters = Vec::new();
    let mut skipped = 0;
    for (i, j, verdict, fwd, back) in outcomes {
        filters.push(fwd);
        filters.push(back);
        match verdict {
            Some(Verdict::Greater) => {
                relations.insert((i, j));
            }
            Some(Verdict::Less) => {
                relations.insert((j, i));
            }
            Some(Verdict::Equal) => equal.push((i, j)),
            Some(Verdict::Incomparable) => {}
            None => skipped += 2,
        }
    }
    let covers = transitive_reduction(&relations);
    Ok(PosetGraph {
        a,
        n,
        m,
        elements,
        relations,
        covers,
        equal,
        filters,
        skipped,
    })
}

fn record(
    greater: usize,
    lesser: usize,
    x: &Composition,
    y: &Composition,
    a: usize,
) -> Result<FilterRecord> {
    Ok(FilterRecord {
        greater,
        lesser,
        short_ends: filter_short_ends(x, y, a)?,
        quasi_profile: filter_quasi_profile(x, y, a)?,
    })
}

/// Pairs `(i, j)` of a strict order with no `k` strictly between them.
pub fn transitive_reduction(relations: &BTreeSet<(usize, usize)>) -> Vec<(usize, usize)> {
    relations
        .iter()
        .filter(|&&(i, j)| {
            !relations
                .iter()
                .any(|&(x, k)| x == i && k != j && relations.contains(&(k, j)))
        })
        .copied()
        .collect()
}

fn transitive_closure(pairs: &[(usize, usize)], size: usize) -> BTreeSet<(usize, usize)> {
    let mut reach = vec![vec![false; size]; size];
    for &(i, j) in pairs {
        reach[i][j] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if reach[i][k] {
                let row = reach[k].clone();
                for (r, through) in reach[i].iter_mut().zip(row) {
                    *r |= through;
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, row) in reach.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                out.insert((i, j));
            }
        }
    }
    out
}

impl PosetGraph {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, alpha: &Composition) -> Option<usize> {
        self.elements.binary_search(&alpha.canonical()).ok()
    }

    pub fn greater(&self, i: usize, j: usize) -> bool {
        self.relations.contains(&(i, j))
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j
            || self.greater(i, j)
            || self.greater(j, i)
            || self.equal.contains(&(i.min(j), i.max(j)))
    }

    /// Elements with nothing strictly above them.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| !self.relations.iter().any(|&(_, y)| y == j))
            .collect()
    }

    /// Elements with nothing strictly below them.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.relations.iter().any(|&(x, _)| x == i))
            .collect()
    }

    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| (i + 1..self.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.comparable(i, j))
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        self.equal.is_empty() && self.incomparable_pairs().is_empty()
    }

    /// The elements from largest to smallest, when the poset is a chain.
    pub fn chain(&self) -> Option<Vec<&Composition>> {
        if !self.is_chain() {
            return None;
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        let below = |i: usize| self.relations.iter().filter(|&&(x, _)| x == i).count();
        order.sort_by_key(|&i| std::cmp::Reverse(below(i)));
        Some(order.into_iter().map(|i| &self.elements[i]).collect())
    }

    /// Checks that `relations` is a strict partial order whose transitive
    /// reduction is `covers`.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        for &(i, j) in &self.relations {
            if i == j {
                return Err(format!("{} > itself", self.elements[i]));
            }
            if self.relations.contains(&(j, i)) {
                return Err(format!(
                    "{} and {} are each above the other",
                    self.elements[i], self.elements[j]
                ));
            }
        }
        if transitive_closure(
            &self.relations.iter().copied().collect::<Vec<_>>(),
            self.len(),
        ) != self.relations
        {
            return Err("relation is not transitive".into());
        }
        if transitive_closure(&self.covers, self.len()) != self.relations {
            return Err("covers do not generate the relation".into());
        }
        Ok(())
    }

    /// Filter records whose `CannotBeGreater` verdict is contradicted by
    /// an exact comparison.
    pub fn filter_violations(&self) -> Vec<FilterRecord> {
        self.filters
            .iter()
            .filter(|r| {
                let (i, j) = (r.greater, r.lesser);
                r.rules_out() && (self.greater(i, j) || self.equal.contains(&(i.min(j), i.max(j))))
            })
            .copied()
            .collect()
    }

    pub fn summary(&self) -> PosetSummary {
        let label = |i: usize| self.elements[i].to_string();
        PosetSummary {
            a: self.a,
            n: self.n,
            m: self.m,
            elements: (0..self.len()).map(label).collect(),
            covers: self
                .covers
                .iter()
                .map(|&(i, j)| (label(i), label(j)))
                .collect(),
            maximal: self.maximal().into_iter().map(label).collect(),
            minimal: self.minimal().into_iter().map(label).collect(),
            is_chain: self.is_chain(),
            chain: self
                .chain()
                .map(|c| c.iter().map(|x| x.to_string()).collect()),
            incomparable: self
                .incomparable_pairs()
                .into_iter()
                .map(|(i, j)| (label(i), label(j)))
                .collect(),
            equal: self
                .equal
                .iter()
                .map(|&(i, j)| (label(i), label(j)))
                .collect(),
        }
    }

    /// Hasse diagram with larger elements drawn above smaller ones.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph poset {{");
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=box];");
        for e in &self.elements {
            let _ = writeln!(out, "  \"{e}\";");
        }
        for &(i, j) in &self.covers {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                self.elements[i], self.elements[j]
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Serializable view of a [`PosetGraph`] with ribbons as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetSummary {
    pub a: usize,
    pub n: usize,
    pub m: usize,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub maximal: Vec<String>,
    pub minimal: Vec<String>,
    pub is_chain: bool,
    pub chain: Option<Vec<String>>,
    pub incomparable: Vec<(String, String)>,
    pub equal: Vec<(String, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;

    fn strings(v: Vec<&Composition>) -> Vec<String> {
        v.into_iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn elements_are_deduplicated_by_reversal() {
        let e = equitable_elements(2, 2, 2, DEFAULT_POSET_GUARD).unwrap();
        assert_eq!(
            e,
            vec![
                composition![2, 2, 3, 3],
                composition![2, 3, 2, 3],
                composition![2, 3, 3, 2],
                composition![3, 2, 2, 3]
            ]
        );
        assert_eq!(
            equitable_elements(4, 2, 0, DEFAULT_POSET_GUARD).unwrap(),
            vec![composition![5, 5]]
        );
        assert_eq!(
            equitable_elements(4, 2, 2, DEFAULT_POSET_GUARD)
                .unwrap()
                .len(),
            4
        );
        let err = equitable_elements(1, 8, 8, DEFAULT_POSET_GUARD).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn chain_4554() {
        let e = ExpansionEngine::default();
        let p = build_poset(&e, 4, 2, 2, PosetOptions::default()).unwrap();
        assert!(p.is_chain());
        assert_eq!(
            strings(p.chain().unwrap()),
            vec!["4,5,5,4", "4,5,4,5", "4,4,5,5", "5,4,4,5"]
        );
        p.check_axioms().unwrap();
        assert_eq!(p.covers.len(), 3);
        assert!(p.filter_violations().is_empty());
    }

    #[test]
    fn single_element() {
        let e = ExpansionEngine::default();
        let p = build_poset(&e, 2, 0, 3, PosetOptions::default()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers.is_empty());
        assert!(p.is_chain());
        assert_eq!(
            p.to_dot(),
            "digraph poset {\n  rankdir=TB;\n  node [shape=box];\n  \"2,2,2\";\n}\n"
        );
    }

    #[test]
    fn fast_mode_agrees() {
        let e = ExpansionEngine::default();
        let slow = build_poset(&e, 2, 3, 2, PosetOptions::default()).unwrap();
        let fast = build_poset(
            &e,
            2,
            3,
            2,
            PosetOptions {
                mode: PosetMode::Fast,
                ..PosetOptions::default()
            },
        )
        .unwrap();
        assert_eq!(slow.relations, fast.relations);
        assert_eq!(slow.skipped, 0);
    }

    #[test]
    fn reduction_drops_implied_pairs() {
        let rel: BTreeSet<_> = [(0, 1), (1, 2), (0, 2), (3, 2)].into_iter().collect();
        assert_eq!(transitive_reduction(&rel), vec![(0, 1), (1, 2), (3, 2)]);
    }
}
