use serde::Serialize;

use crate::composition::Composition;
use crate::error::Result;
use crate::partition::Partition;
use crate::schur::engine::ExpansionEngine;
use crate::schur::lr::lex_largest_content;
use crate::schur::vector::SchurVector;
use crate::skew::ribbon_to_skew;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Greater,
    Less,
    Incomparable,
}

impl Verdict {
    pub fn flip(self) -> Verdict {
        match self {
            Verdict::Greater => Verdict::Less,
            Verdict::Less => Verdict::Greater,
            v => v,
        }
    }
}

/// Outcome of comparing `r_alpha` with `r_beta`. Witnesses are the
/// lexicographically largest positive and negative terms of
/// `r_alpha - r_beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonResult {
    pub verdict: Verdict,
    pub witness_pos: Option<(Partition, i64)>,
    pub witness_neg: Option<(Partition, i64)>,
}

impl ComparisonResult {
    pub fn from_difference(diff: &SchurVector) -> Self {
        let witness_pos = diff
            .iter()
            .find(|&(_, c)| c > 0)
            .map(|(p, c)| (p.clone(), c));
        let witness_neg = diff
            .iter()
            .find(|&(_, c)| c < 0)
            .map(|(p, c)| (p.clone(), c));
        let verdict = match (&witness_pos, &witness_neg) {
            (None, None) => Verdict::Equal,
            (Some(_), None) => Verdict::Greater,
            (None, Some(_)) => Verdict::Less,
            (Some(_), Some(_)) => Verdict::Incomparable,
        };
        ComparisonResult {
            verdict,
            witness_pos,
            witness_neg,
        }
    }
}

/// Decides `r_alpha` vs `r_beta` in the Schur-positivity order.
///
/// Ribbons of different sizes live in different degrees; their witnesses are
/// the leading terms of each side, which have coefficient 1, so nothing is
/// expanded.
pub fn compare(
    engine: &ExpansionEngine,
    alpha: &Composition,
    beta: &Composition,
) -> Result<ComparisonResult> {
    if alpha.size() != beta.size() {
        return Ok(ComparisonResult {
            verdict: Verdict::Incomparable,
            witness_pos: Some((lex_largest_content(&ribbon_to_skew(alpha)), 1)),
            witness_neg: Some((lex_largest_content(&ribbon_to_skew(beta)), -1)),
        });
    }
    let diff = engine
        .ribbon_schur(alpha)?
        .checked_sub(&engine.ribbon_schur(beta)?)?;
    Ok(ComparisonResult::from_difference(&diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{composition, partition};

    #[test]
    fn examples() {
        let e = ExpansionEngine::default();
        let r = compare(&e, &composition![1, 2, 1], &composition![1, 1, 2]).unwrap();
        assert_eq!(r.verdict, Verdict::Greater);
        assert_eq!(r.witness_pos, Some((partition![2, 2], 1)));
        assert_eq!(r.witness_neg, None);
        let a = composition![3, 1, 2, 2];
        assert_eq!(
            compare(&e, &a, &a.reverse()).unwrap().verdict,
            Verdict::Equal
        );
        let r = compare(
            &e,
            &composition![1, 2, 2, 1, 1, 1],
            &composition![2, 1, 1, 2, 1, 1],
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Incomparable);
        assert!(r.witness_pos.is_some() && r.witness_neg.is_some());
        assert_eq!(
            compare(&e, &composition![1, 1, 2], &composition![1, 2, 1])
                .unwrap()
                .verdict,
            Verdict::Less
        );
    }

    #[test]
    fn different_sizes() {
        let e = ExpansionEngine::default();
        let r = compare(&e, &composition![2, 2], &composition![3]).unwrap();
        assert_eq!(r.verdict, Verdict::Incomparable);
        assert_eq!(r.witness_pos, Some((partition![3, 1], 1)));
        assert_eq!(r.witness_neg, Some((partition![3], -1)));
    }
}
