//! Exact linear solving over the rationals via fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numutil::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinSolve {
    Inconsistent,
    Solved {
        /// One exact solution; free variables are set to zero.
        x: Vec<Rat>,
        /// Number of non-pivot columns. Zero means the solution is unique.
        free_vars: usize,
    },
}

/// Solves `A x = b` exactly. Rows are cleared of denominators and reduced
/// by Bareiss one-step elimination (all intermediate divisions exact), with
/// pivots chosen in column order taking the topmost usable row, so the
/// outcome is deterministic.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> LinSolve {
    let rows = a.len();
    assert_eq!(rows, b.len(), "matrix/rhs size mismatch");
    let cols = a.first().map_or(0, |r| r.len());
    let width = cols + 1;

    // Integer augmented matrix: scale each row by the lcm of denominators.
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for (row, rhs) in a.iter().zip(b) {
        assert_eq!(row.len(), cols, "ragged matrix");
        let mut lcm = BigInt::one();
        for entry in row.iter().chain(std::iter::once(rhs)) {
            lcm = lcm.lcm(entry.denom());
        }
        let mut int_row: Vec<BigInt> = Vec::with_capacity(width);
        for entry in row.iter().chain(std::iter::once(rhs)) {
            int_row.push(entry.numer() * (&lcm / entry.denom()));
        }
        m.push(int_row);
    }

    let mut rank = 0usize;
    let mut prev = BigInt::one();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot = &upper[rank];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                // Bareiss still rescales untouched rows to keep divisions exact.
                for entry in row[(col + 1)..width].iter_mut() {
                    let num = &*entry * &pivot[col];
                    debug_assert!((&num % &prev).is_zero());
                    *entry = num / &prev;
                }
            } else {
                let lead = row[col].clone();
                for (entry, p_entry) in row[(col + 1)..width]
                    .iter_mut()
                    .zip(&pivot[(col + 1)..width])
                {
                    let num = &*entry * &pivot[col] - &lead * p_entry;
                    debug_assert!((&num % &prev).is_zero());
                    *entry = num / &prev;
                }
                row[col] = BigInt::zero();
            }
        }
        prev = m[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    for row in m.iter().skip(rank) {
        if !row[cols].is_zero() {
            return LinSolve::Inconsistent;
        }
    }

    let mut x = vec![Rat::zero(); cols];
    for i in (0..rank).rev() {
        let col = pivot_cols[i];
        let mut acc = Rat::from_integer(m[i][cols].clone());
        for c in (col + 1)..cols {
            if !m[i][c].is_zero() {
                acc -= Rat::from_integer(m[i][c].clone()) * &x[c];
            }
        }
        x[col] = acc / Rat::from_integer(m[i][col].clone());
    }

    LinSolve::Solved {
        x,
        free_vars: cols - rank,
    }
}

/// Determinant of a square rational matrix by fraction-free elimination.
pub fn determinant(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    if n == 0 {
        return Rat::one();
    }
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of non-square matrix");
    }
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / pivot.clone();
            let pivot_row = m[col].clone();
            for (entry, above) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &factor * above;
            }
        }
    }
    det
}
