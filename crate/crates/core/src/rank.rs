//! Exact rank of sparse integer matrices over the rationals.
//!
//! Columns are reduced left to right against earlier pivots keyed by their
//! lowest nonzero row. Eliminating entry `b` of column `v` with pivot
//! column `u` whose lowest entry is `a` uses the fraction-free update
//! `v ← a·v − b·u`, followed by division by the content (gcd of entries)
//! so coefficients stay small. Both steps preserve the rational column
//! span, so the number of surviving nonzero columns is the rank over ℚ.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A sparse column: `(row, value)` pairs sorted by row, no zeros.
pub type SparseColumn = Vec<(usize, i64)>;

pub fn rank(columns: Vec<SparseColumn>) -> Result<usize> {
    let mut pivots: std::collections::HashMap<usize, SparseColumn> = Default::default();
    for mut col in columns {
        while let Some(&(low, b)) = col.last() {
            match pivots.get(&low) {
                None => {
                    normalise(&mut col);
                    pivots.insert(low, col);
                    break;
                }
                Some(pivot) => {
                    let a = pivot.last().expect("pivot is nonzero").1;
                    col = combine(&col, a, pivot, b)?;
                }
            }
        }
    }
    Ok(pivots.len())
}

/// `a·v − b·u`, reduced by its content.
fn combine(v: &SparseColumn, a: i64, u: &SparseColumn, b: i64) -> Result<SparseColumn> {
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    let mut out = Vec::with_capacity(v.len() + u.len());
    let (mut i, mut j) = (0, 0);
    let overflow = || Error::resource("boundary-matrix coefficient magnitude", i64::MAX as u64);
    while i < v.len() || j < u.len() {
        let (row, val) = match (v.get(i), u.get(j)) {
            (Some(&(rv, x)), Some(&(ru, _))) if rv < ru => {
                i += 1;
                (rv, a.checked_mul(x).ok_or_else(overflow)?)
            }
            (Some(&(rv, _)), Some(&(ru, y))) if ru < rv => {
                j += 1;
                (
                    ru,
                    b.checked_mul(y)
                        .ok_or_else(overflow)?
                        .checked_neg()
                        .ok_or_else(overflow)?,
                )
            }
            (Some(&(rv, x)), Some(&(_, y))) => {
                i += 1;
                j += 1;
                let lhs = a.checked_mul(x).ok_or_else(overflow)?;
                let rhs = b.checked_mul(y).ok_or_else(overflow)?;
                (rv, lhs.checked_sub(rhs).ok_or_else(overflow)?)
            }
            (Some(&(rv, x)), None) => {
                i += 1;
                (rv, a.checked_mul(x).ok_or_else(overflow)?)
            }
            (None, Some(&(ru, y))) => {
                j += 1;
                (
                    ru,
                    b.checked_mul(y)
                        .ok_or_else(overflow)?
                        .checked_neg()
                        .ok_or_else(overflow)?,
                )
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    normalise(&mut out);
    Ok(out)
}

fn normalise(col: &mut SparseColumn) {
    let content = col.iter().fold(0i64, |g, &(_, x)| g.gcd(&x));
    if content > 1 {
        for (_, x) in col.iter_mut() {
            *x /= content;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(dense: &[&[i64]]) -> Vec<SparseColumn> {
        // dense is row-major; convert to columns.
        let rows = dense.len();
        let ncols = dense.first().map_or(0, |r| r.len());
        (0..ncols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| dense[r][c] != 0)
                    .map(|r| (r, dense[r][c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![]).unwrap(), 0);
        assert_eq!(rank(cols(&[&[1, 2], &[2, 4]])).unwrap(), 1);
        assert_eq!(rank(cols(&[&[1, 0], &[0, 1]])).unwrap(), 2);
        assert_eq!(rank(cols(&[&[2, 3], &[4, 5]])).unwrap(), 2);
        assert_eq!(rank(cols(&[&[0, 0], &[0, 0]])).unwrap(), 0);
    }

    #[test]
    fn non_unit_pivots_are_exact() {
        // Over Z/2 this matrix would have rank 1; over Q it has rank 2.
        assert_eq!(rank(cols(&[&[1, 1], &[1, -1]])).unwrap(), 2);
        assert_eq!(
            rank(cols(&[&[2, 0, 2], &[0, 3, 3], &[0, 0, 0]])).unwrap(),
            2
        );
    }
}
