use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::equitable;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite sequence of positive integers, read as the row lengths of a
/// ribbon from top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

/// Inputs longer than this fall back to the closed pair-placement count in
/// [`multiplicity`] when the query has the right form.
pub const SUBSET_ENUMERATION_LIMIT: usize = 24;

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Merges the last part of `self` with the first part of `other`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        let (Some(&last), Some(&first)) = (self.parts.last(), other.parts.first()) else {
            return Err(Error::EmptyOperand { op: "near_concat" });
        };
        let mut parts = self.parts[..self.len() - 1].to_vec();
        parts.push(last + first);
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition { parts })
    }

    /// `self ∘ other`: the concatenation over parts `k` of `self` of `k`
    /// near-concatenated copies of `other`.
    pub fn compose(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand { op: "compose" });
        }
        let mut out = Composition::empty();
        for &k in &self.parts {
            let mut block = other.clone();
            for _ in 1..k {
                block = block.near_concat(other)?;
            }
            out = out.concat(&block);
        }
        Ok(out)
    }

    /// Moves one cell from the first row to row `i` (1-based, `2 <= i <= len`).
    pub fn move_cell(&self, i: usize) -> Result<Composition> {
        if i < 2 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                op: "move_cell",
                index: i,
                len: self.len(),
            });
        }
        if self.parts[0] < 2 {
            return Err(Error::FirstPartTooSmall { op: "move_cell" });
        }
        let mut parts = self.parts.clone();
        parts[0] -= 1;
        parts[i - 1] += 1;
        Ok(Composition { parts })
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_parts(self.parts.clone())
    }

    /// The lexicographically smaller of `self` and its reversal. Ribbons that
    /// are reverses of each other have the same Schur function.
    pub fn canonical(&self) -> Composition {
        let rev = self.reverse();
        if rev < *self {
            rev
        } else {
            self.clone()
        }
    }

    /// Column lengths of the ribbon, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        // Reading rows bottom to top walks the columns left to right; each row
        // of length r closes the current column and opens r - 1 new ones.
        let mut cols = vec![1usize];
        for (idx, &r) in self.parts.iter().rev().enumerate() {
            if idx > 0 {
                *cols.last_mut().unwrap() += 1;
            }
            cols.extend(std::iter::repeat_n(1, r - 1));
        }
        cols
    }
}

/// Every composition of `n`, in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            rec(remaining - first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// The multiset of sorted coarsenings, one entry per subset of merged gaps.
pub fn coarsenings(alpha: &Composition) -> BTreeMap<Partition, u64> {
    fn rec(parts: &[usize], pos: usize, acc: &mut Vec<usize>, out: &mut BTreeMap<Partition, u64>) {
        if pos == parts.len() {
            *out.entry(Partition::from_parts(acc.clone())).or_insert(0) += 1;
            return;
        }
        let mut sum = 0;
        for end in pos..parts.len() {
            sum += parts[end];
            acc.push(sum);
            rec(parts, end + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeMap::new();
    rec(&alpha.parts, 0, &mut Vec::new(), &mut out);
    out
}

/// Multiplicity of `lambda` among the sorted coarsenings of `alpha`.
pub fn multiplicity(alpha: &Composition, lambda: &Partition) -> u64 {
    if alpha.size() != lambda.size() || lambda.len() > alpha.len() {
        return 0;
    }
    if alpha.len() > SUBSET_ENUMERATION_LIMIT {
        if let Some(count) = pair_form_multiplicity(alpha, lambda) {
            return count;
        }
    }
    merge_subset_count(alpha, lambda)
}

/// Depth-first walk over merge subsets, abandoning a branch as soon as a
/// merged block is not among the parts of `lambda` still unused.
pub fn merge_subset_count(alpha: &Composition, lambda: &Partition) -> u64 {
    fn rec(parts: &[usize], pos: usize, remaining: &mut BTreeMap<usize, usize>) -> u64 {
        if pos == parts.len() {
            return 1;
        }
        let mut total = 0;
        let mut sum = 0;
        for end in pos..parts.len() {
            sum += parts[end];
            if let Some(c) = remaining.get_mut(&sum) {
                if *c > 0 {
                    *c -= 1;
                    total += rec(parts, end + 1, remaining);
                    *remaining.get_mut(&sum).unwrap() += 1;
                }
            }
        }
        total
    }
    if alpha.size() != lambda.size() {
        return 0;
    }
    let mut remaining = BTreeMap::new();
    for &p in lambda.parts() {
        *remaining.entry(p).or_insert(0) += 1;
    }
    rec(&alpha.parts, 0, &mut remaining)
}

/// `(2a)^k (a+1)^n a^(m-2k)`, the partitions formed by joining `k` disjoint
/// pairs of adjacent short rows.
pub fn joined_pairs_partition(a: usize, n: usize, m: usize, k: usize) -> Option<Partition> {
    if 2 * k > m {
        return None;
    }
    let mut parts = vec![2 * a; k];
    parts.extend(std::iter::repeat_n(a + 1, n));
    parts.extend(std::iter::repeat_n(a, m - 2 * k));
    Some(Partition::from_parts(parts))
}

/// Closed count for queries of the form `(2a)^k (a+1)^n a^(m-2k)` against an
/// `{a, a+1}` composition: sum over distributions of the `k` pairs among the
/// runs of short rows of the product of per-run placement counts.
fn pair_form_multiplicity(alpha: &Composition, lambda: &Partition) -> Option<u64> {
    let a = alpha.parts.iter().copied().min()?;
    let profile = equitable::profile(alpha, a).ok()?;
    let m = profile.short_rows();
    let n = profile.long_rows();
    let k = alpha.len().checked_sub(lambda.len())?;
    if joined_pairs_partition(a, n, m, k).as_ref() != Some(lambda) {
        return None;
    }
    Some(equitable::pair_distribution_count(profile.entries(), k))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated positive integers; the empty string is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidParameter(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// Shorthand: `composition![1, 2, 1]`.
#[macro_export]
macro_rules! composition {
    ($($p:expr),* $(,)?) => {
        $crate::Composition::new(vec![$($p),*]).expect("valid composition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use proptest::prelude::*;

    #[test]
    fn algebra_examples() {
        let a = composition![1, 2];
        let b = composition![3, 1];
        assert_eq!(a.reverse(), composition![2, 1]);
        assert_eq!(Composition::empty().reverse(), Composition::empty());
        assert_eq!(
            composition![3, 1, 3, 4, 1].reverse(),
            composition![1, 4, 3, 1, 3]
        );
        assert_eq!(a.concat(&b), composition![1, 2, 3, 1]);
        assert_eq!(a.near_concat(&b).unwrap(), composition![1, 5, 1]);
        assert_eq!(Composition::empty().concat(&b), b);
        assert_eq!(a.compose(&b).unwrap(), composition![3, 1, 3, 4, 1]);
        assert_eq!(composition![1].compose(&b).unwrap(), b);
        assert_eq!(
            composition![3].compose(&composition![2]).unwrap(),
            composition![6]
        );
    }

    #[test]
    fn empty_operands_rejected() {
        let b = composition![3, 1];
        assert!(Composition::empty().near_concat(&b).is_err());
        assert!(b.near_concat(&Composition::empty()).is_err());
        assert!(Composition::empty().compose(&b).is_err());
        assert!(b.compose(&Composition::empty()).is_err());
    }

    #[test]
    fn move_cell_examples() {
        assert_eq!(
            composition![9, 5, 4, 4].move_cell(3).unwrap(),
            composition![8, 5, 5, 4]
        );
        let a = composition![10, 4, 4, 4];
        assert_eq!(
            a.move_cell(3).unwrap().move_cell(2).unwrap(),
            composition![8, 5, 5, 4]
        );
        assert_eq!(composition![2, 2].move_cell(2).unwrap(), composition![1, 3]);
        assert!(composition![2, 2].move_cell(3).is_err());
        assert!(composition![2, 2].move_cell(1).is_err());
        assert!(composition![1, 2].move_cell(2).is_err());
    }

    #[test]
    fn coarsenings_of_1212() {
        let m = coarsenings(&composition![1, 2, 1, 2]);
        let expected: BTreeMap<Partition, u64> = [
            (partition![2, 2, 1, 1], 1),
            (partition![3, 2, 1], 3),
            (partition![3, 3], 1),
            (partition![4, 2], 1),
            (partition![5, 1], 1),
            (partition![6], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(m, expected);
        assert_eq!(
            multiplicity(&composition![1, 2, 1, 2], &partition![3, 2, 1]),
            3
        );
    }

    #[test]
    fn small_coarsenings() {
        let single = coarsenings(&composition![5]);
        assert_eq!(
            single.into_iter().collect::<Vec<_>>(),
            vec![(partition![5], 1)]
        );
        let two = coarsenings(&composition![1, 1]);
        assert_eq!(
            two.into_iter().collect::<Vec<_>>(),
            vec![(partition![1, 1], 1), (partition![2], 1)]
        );
    }

    #[test]
    fn multiplicity_trivial_and_paired() {
        let alpha = composition![4, 4, 4, 5, 4, 4, 5, 4, 5];
        assert_eq!(multiplicity(&alpha, &alpha.sorted()), 1);
        assert_eq!(multiplicity(&alpha, &partition![8, 8, 5, 5, 5, 4, 4]), 2);
    }

    #[test]
    fn pair_form_matches_enumeration_on_long_inputs() {
        // 26 rows: beyond the subset limit, so the closed count is used
        let parts: Vec<usize> = "22232222322232223222232222"
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        let alpha = Composition::new(parts).unwrap();
        assert!(alpha.len() > SUBSET_ENUMERATION_LIMIT);
        let n = alpha.parts().iter().filter(|&&p| p == 3).count();
        let m = alpha.len() - n;
        for k in 0..5 {
            let lambda = joined_pairs_partition(2, n, m, k).unwrap();
            assert_eq!(
                multiplicity(&alpha, &lambda),
                merge_subset_count(&alpha, &lambda)
            );
        }
    }

    #[test]
    fn column_lengths_of_1231() {
        assert_eq!(composition![1, 2, 3, 1].column_lengths(), vec![2, 1, 2, 2]);
        assert_eq!(composition![4].column_lengths(), vec![1, 1, 1, 1]);
        assert_eq!(composition![1, 1, 1].column_lengths(), vec![3]);
    }

    #[test]
    fn parse_and_display() {
        let c: Composition = "10, 4,4,4".parse().unwrap();
        assert_eq!(c, composition![10, 4, 4, 4]);
        assert_eq!(c.to_string(), "10,4,4,4");
        assert!("1,0".parse::<Composition>().is_err());
        assert!("1,x".parse::<Composition>().is_err());
    }

    fn arb_composition(max_len: usize) -> impl Strategy<Value = Composition> {
        prop::collection::vec(1usize..5, 0..=max_len).prop_map(|p| Composition::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn reverse_is_involutive(a in arb_composition(10)) {
            prop_assert_eq!(a.reverse().reverse(), a);
        }

        #[test]
        fn compose_multiplies_sizes(a in arb_composition(5), b in arb_composition(5)) {
            prop_assume!(!a.is_empty() && !b.is_empty());
            prop_assert_eq!(a.compose(&b).unwrap().size(), a.size() * b.size());
        }

        #[test]
        fn coarsenings_invariant_under_reversal(a in arb_composition(12)) {
            prop_assert_eq!(coarsenings(&a), coarsenings(&a.reverse()));
        }

        #[test]
        fn coarsening_count_is_power_of_two(a in arb_composition(10)) {
            prop_assume!(!a.is_empty());
            let total: u64 = coarsenings(&a).values().sum();
            prop_assert_eq!(total, 1u64 << (a.len() - 1));
        }

        #[test]
        fn pruned_count_matches_full_multiset(a in arb_composition(9)) {
            for (lambda, count) in coarsenings(&a) {
                prop_assert_eq!(merge_subset_count(&a, &lambda), count);
            }
        }
    }
}
