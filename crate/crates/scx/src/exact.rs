//! Exact matrix rank over the rationals.
//!
//! Two fraction-free routes: a dense Bareiss elimination (reference, generic
//! over the scalar) and a sparse integer elimination with gcd normalization
//! (production path for boundary matrices). The sparse path runs in `i128`
//! and restarts in arbitrary precision if entries ever threaten to overflow,
//! so the result is always the exact rational rank.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::matrix::Matrix;
use crate::Scalar;

/// Rank by fraction-free Bareiss elimination with full pivoting.
///
/// Exact for integer-like scalars (every interior division is exact).
pub fn bareiss_rank<T: Scalar>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut a = m.clone();
    let mut prev = T::one();
    let steps = rows.min(cols);
    for r in 0..steps {
        // smallest nonzero pivot in the trailing submatrix keeps growth down
        let mut pivot: Option<(usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                if !a.at(i, j).is_zero() {
                    match pivot {
                        Some((pi, pj)) if a.at(pi, pj).abs() <= a.at(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return r;
        };
        a.swap_rows(r, pi);
        a.swap_cols(r, pj);
        let piv = a.at(r, r).clone();
        for i in r + 1..rows {
            for j in r + 1..cols {
                let num = piv.clone() * a.at(i, j).clone()
                    - a.at(i, r).clone() * a.at(r, j).clone();
                *a.at_mut(i, j) = num / prev.clone();
            }
        }
        prev = piv;
    }
    steps
}

/// Largest magnitude the i128 fast path tolerates before restarting in
/// arbitrary precision; products of two such values still fit in i128.
const I128_SAFE: i128 = 1 << 62;

/// Exact rational rank of a sparse integer matrix given as rows of
/// `(column, value)` pairs sorted by column.
pub fn sparse_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    let fast = reduce(
        rows.iter()
            .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect()),
        &|x: &i128| x.abs() > I128_SAFE,
    );
    match fast {
        Some(rank) => rank,
        None => reduce(
            rows.iter()
                .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()),
            &|_: &BigInt| false,
        )
        .expect("arbitrary precision path cannot overflow"),
    }
}

/// Row-by-row elimination keeping one gcd-normalized pivot row per leading
/// column. Returns `None` if `too_big` fires on any produced entry.
fn reduce<T>(
    rows: impl Iterator<Item = Vec<(usize, T)>>,
    too_big: &dyn Fn(&T) -> bool,
) -> Option<usize>
where
    T: Integer + Signed + Clone,
{
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    let mut rank = 0;
    for row in rows {
        let mut row = normalize(row);
        loop {
            let Some(&(lead_col, _)) = row.first() else {
                break;
            };
            match pivots.get(&lead_col) {
                Some(pivot) => {
                    row = combine(&row, pivot);
                    if row.iter().any(|(_, v)| too_big(v)) {
                        return None;
                    }
                    row = normalize(row);
                }
                None => {
                    pivots.insert(lead_col, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `pivot_lead * row - row_lead * pivot`; the shared leading column cancels.
fn combine<T>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Vec<(usize, T)>
where
    T: Integer + Signed + Clone,
{
    let p_lead = pivot[0].1.clone();
    let r_lead = row[0].1.clone();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let e = (row[i].0, p_lead.clone() * row[i].1.clone());
            i += 1;
            e
        } else if take_piv {
            let e = (pivot[j].0, -(r_lead.clone() * pivot[j].1.clone()));
            j += 1;
            e
        } else {
            let e = (
                row[i].0,
                p_lead.clone() * row[i].1.clone() - r_lead.clone() * pivot[j].1.clone(),
            );
            i += 1;
            j += 1;
            e
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Divide by the gcd of the entries and make the leading entry positive.
fn normalize<T>(mut row: Vec<(usize, T)>) -> Vec<(usize, T)>
where
    T: Integer + Signed + Clone,
{
    let mut g = T::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return row;
    }
    let negate = row[0].1.is_negative();
    for (_, v) in &mut row {
        let mut q = v.clone() / g.clone();
        if negate {
            q = -q;
        }
        *v = q;
    }
    row
}

/// Convenience: sparse rank of a dense integer matrix (used in tests to
/// cross-check the two elimination routes).
pub fn sparse_rank_of_dense(m: &Matrix<i64>) -> usize {
    let rows: Vec<Vec<(usize, i64)>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(j, v)| (j, *v))
                .collect()
        })
        .collect();
    sparse_rank(&rows)
}
