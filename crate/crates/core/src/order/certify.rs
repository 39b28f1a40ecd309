//! Inequalities that follow from the cell-moving and row-exchange theorems
//! without comparing full expansions.

use serde::Serialize;

use crate::composition::Composition;
use crate::equitable::{profile, short_ends};
use crate::error::{Error, Result};
use crate::schur::lr::restricted_expansion;
use crate::schur::vector::SchurVector;

/// `r_beta >=_s r_alpha` for `beta = M_i(alpha)`, with the difference given
/// by row-`i`-restricted LR tableaux of shape `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveCertificate {
    pub alpha: Composition,
    pub i: usize,
    pub beta: Composition,
    pub difference: SchurVector,
}

/// Whether `beta_1 >= beta_2 + ... + beta_i - i + 1`.
pub fn move_hypothesis(beta: &Composition, i: usize) -> bool {
    let parts = beta.parts();
    let rest: usize = parts[1..i].iter().sum();
    parts[0] + i > rest
}

pub fn certified_move_inequality(alpha: &Composition, i: usize) -> Result<Option<MoveCertificate>> {
    let beta = alpha.move_cell(i)?;
    if !move_hypothesis(&beta, i) {
        return Ok(None);
    }
    let difference = restricted_expansion(&beta, i, None)?;
    Ok(Some(MoveCertificate {
        alpha: alpha.clone(),
        i,
        beta,
        difference,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExchangeCase {
    /// `l(gamma) >= l(delta)` and `delta*` dominates `gamma` up to `l(delta)`.
    Dominant,
    /// `0 < l(gamma) < l(delta)`, dominance up to `l(gamma) - 1`, strict at `l(gamma)`.
    StrictAtEnd,
}

/// `r_greater >=_s r_lesser` with `greater = delta a a' gamma` and
/// `lesser = delta a' a gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeCertificate {
    pub delta: Composition,
    pub gamma: Composition,
    pub a: usize,
    pub a_prime: usize,
    pub case: ExchangeCase,
    pub greater: Composition,
    pub lesser: Composition,
}

fn prefix_sums(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

pub fn certified_exchange_inequality(
    delta: &Composition,
    gamma: &Composition,
    a: usize,
    a_prime: usize,
) -> Option<ExchangeCertificate> {
    if a_prime < a || a == 0 {
        return None;
    }
    let d = prefix_sums(delta.reverse().parts());
    let g = prefix_sums(gamma.parts());
    let (ld, lg) = (d.len(), g.len());
    let dominates_to = |k: usize| (0..k).all(|i| d[i] >= g[i]);
    let case = if lg >= ld && dominates_to(ld) {
        ExchangeCase::Dominant
    } else if 0 < lg && lg < ld && dominates_to(lg - 1) && d[lg - 1] > g[lg - 1] {
        ExchangeCase::StrictAtEnd
    } else {
        return None;
    };
    let pair = |x: usize, y: usize| Composition::new(vec![x, y]).expect("positive parts");
    Some(ExchangeCertificate {
        delta: delta.clone(),
        gamma: gamma.clone(),
        a,
        a_prime,
        case,
        greater: delta.concat(&pair(a, a_prime)).concat(gamma),
        lesser: delta.concat(&pair(a_prime, a)).concat(gamma),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RaiseStep {
    Exchange(ExchangeCertificate),
    /// `r_alpha = r_alpha*`.
    Reverse {
        from: Composition,
        to: Composition,
    },
}

/// Climbs from `beta` to a ribbon with two short end rows, each step an
/// exchange certificate or a reversal.
pub fn raise_to_short_ends(beta: &Composition, a: usize) -> Result<(Composition, Vec<RaiseStep>)> {
    if profile(beta, a)?.short_rows() < 2 {
        return Err(Error::InvalidParameter(
            "raising to two short ends needs at least two short rows".into(),
        ));
    }
    let mut current = beta.clone();
    let mut steps = Vec::new();
    while short_ends(&current, a)? < 2 {
        if current.first() == Some(a) {
            let to = current.reverse();
            steps.push(RaiseStep::Reverse {
                from: current,
                to: to.clone(),
            });
            current = to;
            continue;
        }
        let parts = current.parts();
        let p = parts
            .iter()
            .position(|&x| x == a)
            .expect("at least two short rows");
        let delta = Composition::new(parts[..p - 1].to_vec())?;
        let gamma = Composition::new(parts[p + 1..].to_vec())?;
        let cert = certified_exchange_inequality(&delta, &gamma, a, a + 1).ok_or_else(|| {
            Error::InvalidParameter(format!("no exchange certificate at {current}"))
        })?;
        current = cert.greater.clone();
        steps.push(RaiseStep::Exchange(cert));
    }
    Ok((current, steps))
}
