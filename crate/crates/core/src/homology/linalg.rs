//! Exact rank and nullspace computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::parallel::{self, Execution};
use crate::rational::Rational;

/// Dense matrix over Q stored by columns; `rows` is the column length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<Rational>>,
}

impl QMatrix {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        QMatrix {
            rows,
            cols: vec![vec![Rational::zero(); rows]; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn push_col(&mut self, col: Vec<Rational>) {
        debug_assert_eq!(col.len(), self.rows);
        self.cols.push(col);
    }

    /// Columns scaled to integers; rank is unchanged.
    fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        self.cols
            .iter()
            .map(|c| {
                let l = c
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                c.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Row-major integer matrix (rows of the original).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let cols = self.integer_columns();
        (0..self.rows)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    /// Rank by fraction-free elimination, pivoting down the columns.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    pub fn rank_with(&self, exec: Execution) -> usize {
        bareiss_rank_with(self.integer_rows(), exec)
    }

    /// Rank computed on the transpose, an independent elimination order.
    pub fn rank_transposed(&self) -> usize {
        bareiss_rank(self.integer_columns())
    }

    /// Basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        nullspace(self)
    }
}

/// Bareiss fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_rank(m: Vec<Vec<BigInt>>) -> usize {
    bareiss_rank_with(m, Execution::Sequential)
}

pub fn bareiss_rank_with(mut m: Vec<Vec<BigInt>>, exec: Execution) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        let prev_ref = &prev;
        parallel::for_each_mut(exec, rest, 16, |row| {
            let f = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let v = pivot * &row[j] - &f * &pivot_row[j];
                row[j] = if prev_ref.is_one() { v } else { v / prev_ref };
            }
        });
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over Q of a row-major matrix; returns pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][col];
        for x in m[r].iter_mut().skip(col) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn nullspace(a: &QMatrix) -> Vec<Vec<Rational>> {
    let n = a.ncols();
    let mut m: Vec<Vec<Rational>> = (0..a.rows)
        .map(|i| a.cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let pivots = rref(&mut m, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        out.push(v);
    }
    out
}
