//! The complete homogeneous basis: ribbon expansions via coarsenings, the
//! Jacobi-Trudi determinant, and conversion back to Schur functions.

use std::collections::HashMap;

use crate::composition::{coarsenings, Composition, SUBSET_ENUMERATION_LIMIT};
use crate::error::{guard, Error, Result};
use crate::partition::Partition;
use crate::schur::vector::{HVector, SchurVector};
use crate::skew::SkewShape;

/// Largest outer length accepted by [`jt_h_expansion`] (`8! = 40320` terms).
pub const JT_MAX_ROWS: usize = 8;

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `r_alpha = (-1)^l(alpha) * sum over coarsenings lambda of (-1)^l(lambda) h_lambda`.
pub fn h_expand_ribbon(alpha: &Composition) -> Result<HVector> {
    guard(
        "ribbon length",
        alpha.len() as u128,
        SUBSET_ENUMERATION_LIMIT as u128,
    )?;
    if alpha.is_empty() {
        return Ok(HVector::basis_element(Partition::empty()));
    }
    let mut out = HVector::zero();
    for (lambda, mult) in coarsenings(alpha) {
        let c = i64::try_from(mult).map_err(|_| Error::Overflow("coarsening multiplicity"))?;
        let s = sign(alpha.len()) * sign(lambda.len());
        out.add_term(lambda, s * c)?;
    }
    Ok(out)
}

/// `s_{lambda/mu} = det(h_{lambda_i - mu_j - i + j})`, expanded over all
/// permutations. `h_0 = 1` and `h` of a negative index kills the term.
pub fn jt_h_expansion(shape: &SkewShape) -> Result<HVector> {
    let n = shape.outer().len();
    guard("Jacobi-Trudi rows", n as u128, JT_MAX_ROWS as u128)?;
    let lambda = shape.outer();
    let mu = shape.inner();
    let entry =
        |i: usize, j: usize| lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
    let mut out = HVector::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    permute(0, n, &mut perm, &mut used, &entry, &mut out)?;
    Ok(out)
}

fn permute(
    i: usize,
    n: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    entry: &dyn Fn(usize, usize) -> i64,
    out: &mut HVector,
) -> Result<()> {
    if i == n {
        let mut parts = Vec::with_capacity(n);
        for (row, &col) in perm.iter().enumerate() {
            let k = entry(row, col);
            if k < 0 {
                return Ok(());
            }
            parts.push(k as usize);
        }
        return out.add_term(Partition::from_parts(parts), permutation_sign(perm));
    }
    for j in 0..n {
        if used[j] || entry(i, j) < 0 {
            continue;
        }
        used[j] = true;
        perm[i] = j;
        permute(i + 1, n, perm, used, entry, out)?;
        used[j] = false;
    }
    Ok(())
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    sign(inversions)
}

/// Partitions `mu` such that `mu / lambda` is a horizontal strip of `k` cells.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        i: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i > lambda.len() {
            if left == 0 {
                out.push(Partition::from_parts(cur.clone()));
            }
            return;
        }
        let base = lambda.part(i);
        let cap = if i == 0 {
            base + left
        } else {
            lambda.part(i - 1).min(base + left)
        };
        for v in base..=cap {
            cur.push(v);
            rec(lambda, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Schur expansion of a single `h_lambda`, by Pieri steps from `s_∅`.
pub fn h_to_s_monomial(lambda: &Partition) -> Result<SchurVector> {
    let mut acc = SchurVector::basis_element(Partition::empty());
    for &k in lambda.parts() {
        let mut next = SchurVector::zero();
        for (mu, c) in acc.iter() {
            for nu in horizontal_strips(mu, k) {
                next.add_term(nu, c)?;
            }
        }
        acc = next;
    }
    Ok(acc)
}

pub fn h_to_s(v: &HVector) -> Result<SchurVector> {
    let mut cache: HashMap<&Partition, SchurVector> = HashMap::new();
    let mut out = SchurVector::zero();
    for (lambda, c) in v.iter() {
        if !cache.contains_key(lambda) {
            cache.insert(lambda, h_to_s_monomial(lambda)?);
        }
        out = out.checked_add(&cache[lambda].checked_scale(c)?)?;
    }
    Ok(out)
}
