use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Marker for the basis a [`Vector`] is written in.
pub trait Basis: Copy + Eq + fmt::Debug + Send + Sync + 'static {
    const SYMBOL: &'static str;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schur;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Homogeneous;

impl Basis for Schur {
    const SYMBOL: &'static str = "s";
}

impl Basis for Homogeneous {
    const SYMBOL: &'static str = "h";
}

/// A finite integer combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector<B: Basis> {
    terms: BTreeMap<Partition, i64>,
    basis: PhantomData<B>,
}

pub type SchurVector = Vector<Schur>;
pub type HVector = Vector<Homogeneous>;

impl<B: Basis> Default for Vector<B> {
    fn default() -> Self {
        Vector {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }
}

impl<B: Basis> Vector<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.terms.insert(lambda, 1);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(terms: I) -> Result<Self> {
        let mut v = Self::zero();
        for (lambda, c) in terms {
            v.add_term(lambda, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, lambda: Partition, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry = entry
            .checked_add(c)
            .ok_or(Error::Overflow("coefficient addition"))?;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order of their partitions.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    /// The lexicographically largest term.
    pub fn leading(&self) -> Option<(&Partition, i64)> {
        self.iter().next()
    }

    /// The lexicographically smallest term.
    pub fn trailing(&self) -> Option<(&Partition, i64)> {
        self.iter().next_back()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (p, c) in self.iter() {
            let scaled = c
                .checked_mul(k)
                .ok_or(Error::Overflow("coefficient scaling"))?;
            out.add_term(p.clone(), scaled)?;
        }
        Ok(out)
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// The common size of the indexing partitions, if the vector is homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }
}

impl<B: Basis> fmt::Display for Vector<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{}{}", B::SYMBOL, p)?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for Vector<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as a list of `[partition, coefficient]` pairs in decreasing
/// lexicographic order.
impl<B: Basis> Serialize for Vector<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de, B: Basis> Deserialize<'de> for Vector<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<(Partition, i64)>::deserialize(deserializer)?;
        Vector::from_terms(terms).map_err(serde::de::Error::custom)
    }
}
