use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The cells of `outer` that are not in `inner`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        let contained =
            inner.len() <= outer.len() && (0..inner.len()).all(|i| inner.part(i) <= outer.part(i));
        if !contained {
            return Err(Error::InvalidSkewShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `lambda / ∅`.
    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            outer: lambda,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range `[inner_i, outer_i)` of row `i` (0-based, top-down).
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    /// Number of cells in each row, top to bottom. Empty rows are kept.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    /// Number of cells in each column, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let outer = self.outer.conjugate();
        let inner = self.inner.conjugate();
        (0..outer.len())
            .map(|j| outer.part(j) - inner.part(j))
            .collect()
    }

    /// `(row, column)` pairs, 0-based, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|i| {
                let (lo, hi) = self.row_range(i);
                (lo..hi).map(move |j| (i, j))
            })
            .collect()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        let (lo, hi) = self.row_range(row);
        lo <= col && col < hi
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Outer and inner shapes joined separately (pointwise maximum).
    pub fn union(&self, other: &SkewShape) -> Result<SkewShape> {
        SkewShape::new(
            pointwise(&self.outer, &other.outer, usize::max),
            pointwise(&self.inner, &other.inner, usize::max),
        )
    }

    /// Outer and inner shapes met separately (pointwise minimum).
    pub fn intersection(&self, other: &SkewShape) -> Result<SkewShape> {
        SkewShape::new(
            pointwise(&self.outer, &other.outer, usize::min),
            pointwise(&self.inner, &other.inner, usize::min),
        )
    }

    /// The composition of row lengths if this shape is a ribbon: connected,
    /// no empty rows, consecutive rows sharing exactly one column.
    pub fn to_ribbon(&self) -> Option<Composition> {
        let rows = self.num_rows();
        let first_nonempty = (0..rows).find(|&i| self.inner.part(i) < self.outer.part(i))?;
        if first_nonempty != 0 {
            return None;
        }
        for i in 0..rows {
            let (lo, hi) = self.row_range(i);
            if lo >= hi {
                return None;
            }
            if i + 1 < rows {
                let (_, below_hi) = self.row_range(i + 1);
                if below_hi != lo + 1 {
                    return None;
                }
            }
        }
        Composition::new(self.row_lengths()).ok()
    }

    /// `self` placed strictly above and to the right of `below`, sharing no
    /// row or column. Its skew Schur function is the product of the two.
    pub fn disjoint_product(&self, below: &SkewShape) -> SkewShape {
        let shift = below.outer.part(0);
        let mut outer: Vec<usize> = self.outer.parts().iter().map(|p| p + shift).collect();
        let mut inner: Vec<usize> = (0..self.num_rows())
            .map(|i| self.inner.part(i) + shift)
            .collect();
        outer.extend_from_slice(below.outer.parts());
        inner.extend((0..below.num_rows()).map(|i| below.inner.part(i)));
        SkewShape {
            outer: Partition::from_parts(outer),
            inner: Partition::from_parts(inner),
        }
    }
}

fn pointwise(l: &Partition, m: &Partition, f: fn(usize, usize) -> usize) -> Partition {
    let len = l.len().max(m.len());
    Partition::from_parts((0..len).map(|i| f(l.part(i), m.part(i))).collect())
}

/// The skew shape of a ribbon: the bottom row starts in column 0 and each
/// row begins in the column where the row below it ends.
pub fn ribbon_to_skew(alpha: &Composition) -> SkewShape {
    let parts = alpha.parts();
    let rows = parts.len();
    let mut outer = vec![0; rows];
    let mut inner = vec![0; rows];
    let mut left = 0;
    for i in (0..rows).rev() {
        inner[i] = left;
        outer[i] = left + parts[i];
        left = outer[i] - 1;
    }
    SkewShape {
        outer: Partition::from_parts(outer),
        inner: Partition::from_parts(inner),
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
