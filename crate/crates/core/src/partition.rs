use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic after padding the shorter partition with zeros,
/// so `44 > 431 > 422`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// LR content: `counts[i]` is the number of entries equal to `i + 1`.
    /// Callers guarantee the counts are weakly decreasing.
    pub(crate) fn from_content(counts: &[usize]) -> Self {
        let len = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        Partition {
            parts: counts[..len].to_vec(),
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
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

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux of this shape, by the hook length formula.
    pub fn standard_tableaux(&self) -> Result<u128> {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks: Vec<u128> = Vec::with_capacity(n);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j + conj.part(j) - i - 1) as u128);
            }
        }
        let mut num: u128 = 1;
        for k in 1..=n as u128 {
            num = num
                .checked_mul(k)
                .ok_or(Error::Overflow("hook length formula"))?;
        }
        let den = hooks
            .into_iter()
            .try_fold(1u128, |acc, h| acc.checked_mul(h))
            .ok_or(Error::Overflow("hook length formula"))?;
        Ok(num / den)
    }
}

/// Lexicographic comparison with implicit zero padding.
pub fn lex_compare(lambda: &Partition, mu: &Partition) -> Ordering {
    let len = lambda.len().max(mu.len());
    (0..len)
        .map(|i| lambda.part(i).cmp(&mu.part(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests and examples: `partition![4, 3, 1]`.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::Partition::new(vec![$($p),*]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_pads_with_zeros() {
        assert_eq!(
            lex_compare(&partition![4, 4], &partition![4, 3, 1]),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&partition![3, 2, 1], &partition![3, 3]),
            Ordering::Less
        );
        let l = partition![5, 2, 2];
        assert_eq!(lex_compare(&l, &l), Ordering::Equal);
        assert!(partition![3, 2, 1] > partition![3, 2]);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugate_and_hooks() {
        assert_eq!(partition![4, 2, 1].conjugate(), partition![3, 2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![2, 1].standard_tableaux().unwrap(), 2);
        assert_eq!(partition![3, 3].standard_tableaux().unwrap(), 5);
        assert_eq!(partition![4, 3, 2, 1].standard_tableaux().unwrap(), 768);
    }
}
