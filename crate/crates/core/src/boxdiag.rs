//! Box diagonal diagrams: the ribbon of cells met by the diagonal of an
//! `R x S` grid.

use num_rational::Ratio;

use crate::composition::Composition;

fn div_ceil(x: usize, d: usize) -> usize {
    x.div_ceil(d)
}

/// `P_{R,S}` from the closed long-row / long-column formulas. Rows are
/// returned top-down.
pub fn box_diagonal(r: usize, s: usize) -> Composition {
    assert!(r >= 1 && s >= 1, "box_diagonal needs R, S >= 1");
    let bottom_up = if s >= r {
        let a = div_ceil(s, r);
        // 1 - eps = d / R
        let d = s - (a - 1) * r;
        let mut rows = vec![a; r];
        for t in 1.. {
            let i = div_ceil(t * r, d);
            if i > r - 1 {
                break;
            }
            rows[i - 1] = a + 1;
        }
        rows
    } else {
        let b = div_ceil(r, s);
        let d = r - (b - 1) * s;
        let mut cols = vec![b; s];
        for t in 1.. {
            let j = t * s / d + 1;
            if j > s {
                break;
            }
            if j >= 2 {
                cols[j - 1] = b + 1;
            }
        }
        rows_from_columns(&cols)
    };
    let mut rows = bottom_up;
    rows.reverse();
    Composition::new(rows).expect("rows are positive")
}

/// Row lengths, bottom-up, of the ribbon with the given column lengths read
/// left to right; each column starts in the row where the previous one ends.
fn rows_from_columns(cols: &[usize]) -> Vec<usize> {
    let height: usize = cols.iter().sum::<usize>() - (cols.len() - 1);
    let mut rows = vec![0; height];
    let mut start = 0;
    for &c in cols {
        for row in rows.iter_mut().skip(start).take(c) {
            *row += 1;
        }
        start += c - 1;
    }
    rows
}

/// Whether the line `y = (R/S) x` meets the interior or the top-left corner
/// of the unit cell with top-right corner `(x, y)`.
pub fn diagonal_meets_cell(r: usize, s: usize, x: usize, y: usize) -> bool {
    let slope = Ratio::new(r as i64, s as i64);
    let left = slope * Ratio::from_integer(x as i64 - 1);
    let right = slope * Ratio::from_integer(x as i64);
    let (bottom, top) = (
        Ratio::from_integer(y as i64 - 1),
        Ratio::from_integer(y as i64),
    );
    (left < top && right > bottom) || left == top
}

/// `P_{R,S}` straight from the cell-intersection definition.
pub fn box_diagonal_geometric(r: usize, s: usize) -> Composition {
    assert!(r >= 1 && s >= 1, "box_diagonal needs R, S >= 1");
    let rows = (1..=r)
        .rev()
        .map(|y| (1..=s).filter(|&x| diagonal_meets_cell(r, s, x, y)).count())
        .collect();
    Composition::new(rows).expect("every row meets the diagonal")
}
