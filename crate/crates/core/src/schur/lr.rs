//! Littlewood-Richardson tableaux: semistandard fillings of a skew shape
//! whose reading word (rows top to bottom, each row right to left) is a
//! lattice word.

use std::collections::HashMap;

use crate::composition::Composition;
use crate::equitable;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::vector::SchurVector;
use crate::skew::{ribbon_to_skew, SkewShape};

/// A filled skew shape. Row `i` holds the entries of columns
/// `inner_i .. outer_i`, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl LrTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)`, 0-based, if the cell belongs to the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        let (lo, hi) = self.shape.row_range(row);
        (lo <= col && col < hi).then(|| self.rows[row][col - lo])
    }

    pub fn content(&self) -> Partition {
        let mut counts = Vec::new();
        for &e in self.rows.iter().flatten() {
            if counts.len() < e {
                counts.resize(e, 0);
            }
            counts[e - 1] += 1;
        }
        Partition::from_parts(counts)
    }

    /// Number of entries equal to `e` in row `row`.
    pub fn count_in_row(&self, row: usize, e: usize) -> usize {
        self.rows[row].iter().filter(|&&x| x == e).count()
    }
}

struct Search<'a, F> {
    shape: &'a SkewShape,
    target: Option<&'a [usize]>,
    tableau: LrTableau,
    counts: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&LrTableau)> Search<'_, F> {
    fn cell(&mut self, row: usize, col: Option<usize>) {
        let Some(col) = col else {
            return self.start_row(row + 1);
        };
        let (lo, hi) = self.shape.row_range(row);
        let above = if row > 0 {
            self.tableau.get(row - 1, col)
        } else {
            None
        };
        let right = (col + 1 < hi).then(|| self.tableau.rows[row][col + 1 - lo]);
        let low = above.map_or(1, |e| e + 1);
        let high = right.unwrap_or(self.counts.len() + 1);
        for e in low..=high {
            if !self.can_place(e) {
                continue;
            }
            self.place(e, 1);
            self.tableau.rows[row][col - lo] = e;
            self.cell(row, (col > lo).then(|| col - 1));
            self.place(e, -1);
        }
    }

    /// Continues at the first nonempty row at or below `row`.
    fn start_row(&mut self, mut row: usize) {
        while row < self.shape.num_rows() {
            let (lo, hi) = self.shape.row_range(row);
            if lo < hi {
                return self.cell(row, Some(hi - 1));
            }
            row += 1;
        }
        if self.target.is_none_or(|t| trimmed(&self.counts) == t) {
            (self.visit)(&self.tableau);
        }
    }

    fn can_place(&self, e: usize) -> bool {
        let have = self.counts.get(e - 1).copied().unwrap_or(0);
        if e > 1 && self.counts[e - 2] <= have {
            return false;
        }
        self.target
            .is_none_or(|t| have < t.get(e - 1).copied().unwrap_or(0))
    }

    fn place(&mut self, e: usize, delta: isize) {
        if self.counts.len() < e {
            self.counts.resize(e, 0);
        }
        self.counts[e - 1] = (self.counts[e - 1] as isize + delta) as usize;
        while self.counts.last() == Some(&0) {
            self.counts.pop();
        }
    }
}

fn trimmed(counts: &[usize]) -> &[usize] {
    let len = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
    &counts[..len]
}

/// Calls `visit` on every LR tableau of `shape`, optionally only those with
/// content `content`.
pub fn for_each_lr_tableau<F: FnMut(&LrTableau)>(
    shape: &SkewShape,
    content: Option<&Partition>,
    visit: F,
) {
    let rows = (0..shape.num_rows())
        .map(|i| {
            let (lo, hi) = shape.row_range(i);
            vec![0; hi - lo]
        })
        .collect();
    let mut search = Search {
        shape,
        target: content.map(|c| c.parts()),
        tableau: LrTableau {
            shape: shape.clone(),
            rows,
        },
        counts: Vec::new(),
        visit,
    };
    if let Some(c) = content {
        if c.size() != shape.size() {
            return;
        }
    }
    search.start_row(0);
}

/// Schur expansion of `s_shape`, by a row-by-row dynamic program over LR
/// fillings. A row's options depend only on the row above it and on the
/// letter counts so far, which is what the memo is keyed on.
pub fn lr_expand(shape: &SkewShape) -> Result<SchurVector> {
    let mut memo = HashMap::new();
    let completions = row_completions(shape, 0, &[], &[], &mut memo);
    let mut out = SchurVector::zero();
    for (content, count) in completions.iter() {
        let c = i64::try_from(*count).map_err(|_| Error::Overflow("LR coefficient"))?;
        out.add_term(Partition::from_content(content), c)?;
    }
    Ok(out)
}

type Completions = HashMap<Vec<usize>, u64>;
type Memo = HashMap<(usize, Vec<usize>, Vec<usize>), Completions>;

/// Final contents reachable from the state "rows before `row` are filled,
/// the last of them with `prev`, letters used so far `counts`".
fn row_completions(
    shape: &SkewShape,
    row: usize,
    prev: &[usize],
    counts: &[usize],
    memo: &mut Memo,
) -> Completions {
    if row == shape.num_rows() {
        return Completions::from([(counts.to_vec(), 1)]);
    }
    let key = (row, prev.to_vec(), counts.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (lo, hi) = shape.row_range(row);
    let (prev_lo, prev_hi) = if row > 0 {
        shape.row_range(row - 1)
    } else {
        (0, 0)
    };
    let mut fills = Vec::new();
    let mut current = vec![0; hi - lo];
    let mut counts_now = counts.to_vec();
    fill_row(
        lo,
        hi,
        hi,
        prev,
        prev_lo,
        prev_hi,
        &mut current,
        &mut counts_now,
        &mut fills,
    );
    let mut out = Completions::new();
    for (filled, new_counts) in fills {
        for (content, n) in row_completions(shape, row + 1, &filled, &new_counts, memo) {
            *out.entry(content).or_insert(0) += n;
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Fills columns `lo .. col` of the current row right to left.
#[allow(clippy::too_many_arguments)]
fn fill_row(
    lo: usize,
    hi: usize,
    col: usize,
    prev: &[usize],
    prev_lo: usize,
    prev_hi: usize,
    current: &mut Vec<usize>,
    counts: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    if col == lo {
        out.push((current.clone(), trimmed(counts).to_vec()));
        return;
    }
    let c = col - 1;
    let above = (prev_lo <= c && c < prev_hi).then(|| prev[c - prev_lo]);
    let right = (c + 1 < hi).then(|| current[c + 1 - lo]);
    let low = above.map_or(1, |e| e + 1);
    let high = right.unwrap_or(counts.len() + 1);
    for e in low..=high {
        let have = counts.get(e - 1).copied().unwrap_or(0);
        if e > 1 && counts[e - 2] <= have {
            continue;
        }
        if counts.len() < e {
            counts.push(0);
        }
        counts[e - 1] += 1;
        current[c - lo] = e;
        fill_row(lo, hi, c, prev, prev_lo, prev_hi, current, counts, out);
        counts[e - 1] -= 1;
        if counts.last() == Some(&0) {
            counts.pop();
        }
    }
}

/// Content of the filling that puts `i` in the `i`-th cell of every column:
/// the lexicographically largest content of any LR tableau of the shape.
pub fn lex_largest_content(shape: &SkewShape) -> Partition {
    Partition::from_parts(shape.column_lengths()).conjugate()
}

fn check_row_index(beta: &Composition, i: usize) -> Result<()> {
    if i < 2 || i > beta.len() {
        return Err(Error::IndexOutOfRange {
            op: "restricted_count",
            index: i,
            len: beta.len(),
        });
    }
    Ok(())
}

/// The row-`i` restriction (1-based) on an LR tableau of ribbon shape: if
/// the first cell of row `i` holds a 1, then row `i` is not the last row and
/// the entry right of that cell is at least the entry below it.
pub fn is_row_restricted(t: &LrTableau, i: usize) -> bool {
    let row = i - 1;
    let (lo, _) = t.shape().row_range(row);
    if t.get(row, lo) != Some(1) {
        return true;
    }
    if i >= t.shape().num_rows() {
        return false;
    }
    match (t.get(row, lo + 1), t.get(row + 1, lo)) {
        (Some(right), Some(below)) => right >= below,
        _ => false,
    }
}

/// Sum of `s_{c(T)}` over the row-`i`-restricted LR tableaux of ribbon `beta`
/// (and row-`j`-restricted too when `j` is given).
pub fn restricted_expansion(beta: &Composition, i: usize, j: Option<usize>) -> Result<SchurVector> {
    check_row_index(beta, i)?;
    if let Some(j) = j {
        check_row_index(beta, j)?;
    }
    let shape = ribbon_to_skew(beta);
    let mut counts: HashMap<Partition, i64> = HashMap::new();
    for_each_lr_tableau(&shape, None, |t| {
        if is_row_restricted(t, i) && j.is_none_or(|j| is_row_restricted(t, j)) {
            *counts.entry(t.content()).or_insert(0) += 1;
        }
    });
    SchurVector::from_terms(counts)
}

/// `c'_{beta,i,nu}`: row-`i`-restricted LR tableaux of shape `beta`, content `nu`.
pub fn restricted_count(beta: &Composition, i: usize, nu: &Partition) -> Result<u64> {
    check_row_index(beta, i)?;
    Ok(count_matching(beta, nu, |t| is_row_restricted(t, i)))
}

/// `c'_{beta,i,j,nu}`: restricted in both row `i` and row `j`.
pub fn restricted_count2(beta: &Composition, i: usize, j: usize, nu: &Partition) -> Result<u64> {
    check_row_index(beta, i)?;
    check_row_index(beta, j)?;
    if i >= j {
        return Err(Error::InvalidParameter(format!(
            "restricted rows must satisfy i < j, got {i} and {j}"
        )));
    }
    Ok(count_matching(beta, nu, |t| {
        is_row_restricted(t, i) && is_row_restricted(t, j)
    }))
}

fn count_matching(beta: &Composition, nu: &Partition, pred: impl Fn(&LrTableau) -> bool) -> u64 {
    let mut n = 0;
    for_each_lr_tableau(&ribbon_to_skew(beta), Some(nu), |t| {
        if pred(t) {
            n += 1;
        }
    });
    n
}

/// LR tableaux of one equitable shape and content, split by comfort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComfortSplit {
    pub comfortable: u64,
    pub uncomfortable: u64,
}

/// The two-row content `(aR + n - (a + R - 2), a + R - 2)` used to compare
/// short ends, for a ribbon with `R` rows, `n` of them long.
pub fn two_row_content(alpha: &Composition, a: usize) -> Result<Partition> {
    let p = equitable::profile(alpha, a)?;
    let r = alpha.len();
    let second = a + r - 2;
    let first = (a * r + p.long_rows())
        .checked_sub(second)
        .ok_or_else(|| Error::InvalidParameter("content has a negative part".into()))?;
    Partition::new(vec![first, second].into_iter().filter(|&x| x > 0).collect())
}

/// Counts comfortable and uncomfortable LR tableaux of shape `alpha` with
/// content `nu`. Comfortable: every long row holds a 1, and every long row
/// other than the first and last holds two.
pub fn comfortable_split(alpha: &Composition, a: usize, nu: &Partition) -> Result<ComfortSplit> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!(
            "comfortable tableaux need a >= 2, got {a}"
        )));
    }
    equitable::profile(alpha, a)?;
    let rows = alpha.len();
    let mut split = ComfortSplit {
        comfortable: 0,
        uncomfortable: 0,
    };
    for_each_lr_tableau(&ribbon_to_skew(alpha), Some(nu), |t| {
        let comfortable = alpha.parts().iter().enumerate().all(|(r, &len)| {
            if len != a + 1 {
                return true;
            }
            let ones = t.count_in_row(r, 1);
            let intermediate = r > 0 && r + 1 < rows;
            ones >= if intermediate { 2 } else { 1 }
        });
        if comfortable {
            split.comfortable += 1;
        } else {
            split.uncomfortable += 1;
        }
    });
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{composition, partition};

    fn expand(alpha: &Composition) -> SchurVector {
        lr_expand(&ribbon_to_skew(alpha)).unwrap()
    }

    #[test]
    fn straight_shapes_expand_to_themselves() {
        for lambda in [partition![3, 2], partition![4], partition![2, 2, 1]] {
            let v = lr_expand(&SkewShape::straight(lambda.clone())).unwrap();
            assert_eq!(v, SchurVector::basis_element(lambda));
        }
        let empty = lr_expand(&SkewShape::straight(Partition::empty())).unwrap();
        assert_eq!(empty, SchurVector::basis_element(Partition::empty()));
    }

    #[test]
    fn small_ribbons() {
        let v = expand(&composition![1, 1]);
        assert_eq!(v, SchurVector::basis_element(partition![1, 1]));
        let v = expand(&composition![2, 1]);
        let expected = SchurVector::from_terms([(partition![2, 1], 1)]).unwrap();
        assert_eq!(v, expected);
        let v = expand(&composition![1, 2]);
        assert_eq!(v, SchurVector::from_terms([(partition![2, 1], 1)]).unwrap());
    }

    #[test]
    fn known_differences() {
        let d = expand(&composition![1, 2, 1])
            .checked_sub(&expand(&composition![1, 1, 2]))
            .unwrap();
        assert_eq!(d, SchurVector::basis_element(partition![2, 2]));
        let d = expand(&composition![2, 3, 2])
            .checked_sub(&expand(&composition![2, 2, 3]))
            .unwrap();
        assert_eq!(d, SchurVector::basis_element(partition![4, 3]));
    }

    #[test]
    fn dp_agrees_with_tableau_visitor() {
        for alpha in [
            composition![2, 3, 2],
            composition![1, 3, 1, 2],
            composition![3, 3, 2, 2],
        ] {
            let shape = ribbon_to_skew(&alpha);
            let mut counts: HashMap<Partition, i64> = HashMap::new();
            for_each_lr_tableau(&shape, None, |t| {
                *counts.entry(t.content()).or_insert(0) += 1
            });
            assert_eq!(SchurVector::from_terms(counts).unwrap(), expand(&alpha));
        }
    }

    #[test]
    fn lex_largest_examples() {
        assert_eq!(
            lex_largest_content(&ribbon_to_skew(&composition![2, 1, 2, 1, 2])),
            partition![4, 2, 2]
        );
        assert_eq!(
            lex_largest_content(&ribbon_to_skew(&composition![1, 2, 2, 2, 1])),
            partition![4, 4]
        );
        assert_eq!(
            lex_largest_content(&SkewShape::straight(partition![3, 1])),
            partition![3, 1]
        );
    }

    fn tableau_8554() -> LrTableau {
        // rows top to bottom of shape 8554 with content 11 7 4
        let shape = ribbon_to_skew(&composition![8, 5, 5, 4]);
        let rows = vec![
            vec![1; 8],
            vec![2; 5],
            vec![1, 3, 3, 3, 3],
            vec![1, 1, 2, 2],
        ];
        LrTableau { shape, rows }
    }

    #[test]
    fn restricted_membership_example() {
        let t = tableau_8554();
        assert_eq!(t.content(), partition![11, 7, 4]);
        assert!(is_row_restricted(&t, 2));
        assert!(is_row_restricted(&t, 3));
        assert!(!is_row_restricted(&t, 4));
    }

    #[test]
    fn restricted_expansion_is_move_difference() {
        let beta = composition![8, 5, 5, 4];
        let alpha = composition![9, 5, 4, 4];
        let diff = expand(&beta).checked_sub(&expand(&alpha)).unwrap();
        assert_eq!(restricted_expansion(&beta, 3, None).unwrap(), diff);
        for (nu, c) in diff.iter() {
            assert_eq!(restricted_count(&beta, 3, nu).unwrap(), c as u64);
        }
    }

    #[test]
    fn restricted_index_errors() {
        let beta = composition![3, 2];
        assert!(restricted_count(&beta, 1, &partition![3, 2]).is_err());
        assert!(restricted_count(&beta, 3, &partition![3, 2]).is_err());
        assert!(restricted_count2(&composition![3, 2, 2], 3, 2, &partition![4, 3]).is_err());
    }

    #[test]
    fn comfortable_examples() {
        let alpha = composition![5, 5, 5, 4];
        let nu = two_row_content(&alpha, 4).unwrap();
        assert_eq!(nu, partition![13, 6]);
        let split = comfortable_split(&alpha, 4, &nu).unwrap();
        assert_eq!(split.uncomfortable, 2);
        let alpha = composition![5, 5, 4, 4];
        let nu = two_row_content(&alpha, 4).unwrap();
        assert_eq!(nu, partition![12, 6]);
        assert_eq!(comfortable_split(&alpha, 4, &nu).unwrap().uncomfortable, 1);
        let alpha = composition![3, 3];
        let nu = two_row_content(&alpha, 3).unwrap();
        assert_eq!(comfortable_split(&alpha, 3, &nu).unwrap().uncomfortable, 0);
        assert!(comfortable_split(&composition![2, 4], 2, &partition![4, 2]).is_err());
    }
}
