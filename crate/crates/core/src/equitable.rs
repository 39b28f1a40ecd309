//! Equitable ribbons and the statistics that order them: short ends,
//! profiles and quasi-profiles.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::binomial::count_disjoint_pairs;
use crate::composition::Composition;
use crate::error::{Error, Result};

/// Row lengths lie in `{a, a+1}` and column lengths in `{b, b+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equitability {
    pub a: usize,
    pub b: usize,
}

fn spread_at_most_one(values: &[usize]) -> Option<usize> {
    let min = *values.iter().min()?;
    let max = *values.iter().max()?;
    (max - min <= 1).then_some(min)
}

/// `Some` when the ribbon is both row- and column-equitable; `a` and `b` are
/// the minimum row and column lengths.
pub fn is_equitable(alpha: &Composition) -> Option<Equitability> {
    let a = spread_at_most_one(alpha.parts())?;
    let b = spread_at_most_one(&alpha.column_lengths())?;
    Some(Equitability { a, b })
}

fn check_parts(alpha: &Composition, a: usize) -> Result<()> {
    if a == 0 || alpha.parts().iter().any(|&p| p != a && p != a + 1) {
        return Err(Error::NotEquitable {
            composition: alpha.parts().to_vec(),
            a,
        });
    }
    Ok(())
}

/// Number of end rows of length `a` (0, 1 or 2). A single row counts once.
pub fn short_ends(alpha: &Composition, a: usize) -> Result<usize> {
    check_parts(alpha, a)?;
    let (Some(first), Some(last)) = (alpha.first(), alpha.last()) else {
        return Err(Error::InvalidParameter(
            "short_ends of the empty ribbon".into(),
        ));
    };
    if alpha.len() == 1 {
        return Ok(usize::from(first == a));
    }
    Ok(usize::from(first == a) + usize::from(last == a))
}

/// Lengths of the runs of short rows around the long rows:
/// `alpha = a^p1 (a+1) a^p2 ... (a+1) a^p(n+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Profile {
    entries: Vec<usize>,
}

impl Profile {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `m`, the number of short rows.
    pub fn short_rows(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `n`, the number of long rows.
    pub fn long_rows(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn quasi(&self) -> QuasiProfile {
        let max = self.entries.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max + 1];
        for &p in &self.entries {
            counts[p] += 1;
        }
        QuasiProfile::from_counts(counts)
    }
}

/// `q_j` = number of runs of exactly `j` short rows. Compared
/// lexicographically with an implicit infinite tail of zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuasiProfile {
    counts: Vec<usize>,
}

impl QuasiProfile {
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        QuasiProfile { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, j: usize) -> usize {
        self.counts.get(j).copied().unwrap_or(0)
    }
}

impl Ord for QuasiProfile {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.counts.len().max(other.counts.len());
        (0..len)
            .map(|j| self.get(j).cmp(&other.get(j)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for QuasiProfile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.entries)
    }
}

impl fmt::Display for QuasiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.counts)
    }
}

// Digit strings when every entry is a single digit, comma lists otherwise.
fn write_digits(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    let sep = if values.iter().all(|&v| v < 10) {
        ""
    } else {
        ","
    };
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub fn profile(alpha: &Composition, a: usize) -> Result<Profile> {
    check_parts(alpha, a)?;
    let mut entries = vec![0];
    for &p in alpha.parts() {
        if p == a {
            *entries.last_mut().unwrap() += 1;
        } else {
            entries.push(0);
        }
    }
    Ok(Profile { entries })
}

pub fn quasi_profile(alpha: &Composition, a: usize) -> Result<QuasiProfile> {
    Ok(profile(alpha, a)?.quasi())
}

/// Ways to choose `k` disjoint adjacent pairs spread over runs of the given
/// lengths: the coefficient of `x^k` in the product over runs `p` of
/// `sum_e C(p - e, e) x^e`.
pub fn pair_distribution_count(runs: &[usize], k: usize) -> u64 {
    let mut poly = vec![0u64; k + 1];
    poly[0] = 1;
    for &p in runs {
        let mut next = vec![0u64; k + 1];
        for (i, &c) in poly.iter().enumerate().filter(|(_, &c)| c != 0) {
            for e in 0..=(k - i) {
                let ways = count_disjoint_pairs(p, e);
                if ways == 0 {
                    break;
                }
                next[i + e] += c * ways;
            }
        }
        poly = next;
    }
    poly[k]
}

/// The `{a, a+1}` ribbon with the given profile.
pub fn from_profile(entries: &[usize], a: usize) -> Composition {
    let mut parts = Vec::new();
    for (i, &p) in entries.iter().enumerate() {
        if i > 0 {
            parts.push(a + 1);
        }
        parts.extend(std::iter::repeat_n(a, p));
    }
    Composition::new(parts).expect("a >= 1")
}
