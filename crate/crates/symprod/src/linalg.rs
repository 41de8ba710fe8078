//! Dense exact matrices over the rationals.
//!
//! Two nontrivial operations live here: rank by fraction-free (Bareiss)
//! elimination over the integers after clearing denominators, and the
//! signature of a symmetric matrix by congruence reduction with symmetric
//! pivoting. Both are exact; intermediate growth is kept in check by the
//! Bareiss exact divisions.

use std::fmt;
use std::ops::Mul;

use num::traits::{One, Signed, Zero};
use num::{BigInt, Integer};

use crate::ring::Rat;

/// A dense `rows x cols` matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` into entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: &Rat) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Rank by Bareiss fraction-free elimination.
    ///
    /// Rows are first scaled to integers (rank is unchanged); the update
    /// `m[i][j] <- (m[r][r] m[i][j] - m[i][r] m[r][j]) / prev` keeps every
    /// intermediate an exact integer of modest size.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        if rows == 0 || cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                let lcm = (0..cols).fold(BigInt::one(), |acc, j| {
                    acc.lcm(self.get(i, j).denom())
                });
                (0..cols)
                    .map(|j| {
                        let v = self.get(i, j);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0;
        while r < rows && r < cols {
            // Find a pivot in the remaining block; swap it into (r, r).
            let pivot = (r..rows)
                .flat_map(|i| (r..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero());
            let Some((pi, pj)) = pivot else { break };
            m.swap(r, pi);
            if pj != r {
                for row in m.iter_mut() {
                    row.swap(r, pj);
                }
            }
            for i in r + 1..rows {
                for j in r + 1..cols {
                    let num = &m[r][r] * &m[i][j] - &m[i][r] * &m[r][j];
                    m[i][j] = num / &prev;
                }
                m[i][r] = BigInt::zero();
            }
            prev = m[r][r].clone();
            r += 1;
        }
        r
    }

    /// Signature (positives minus negatives) of a symmetric matrix, by
    /// congruence reduction.
    ///
    /// A nonzero diagonal entry is used as a 1x1 pivot; when the remaining
    /// diagonal is all zero, a nonzero off-diagonal entry gives a hyperbolic
    /// 2x2 block contributing +1 and -1. Panics if the matrix is not
    /// symmetric.
    pub fn signature(&self) -> i64 {
        assert!(self.is_symmetric(), "signature requires a symmetric matrix");
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..self.rows).collect();
        let mut sig: i64 = 0;
        while !active.is_empty() {
            // Prefer a nonzero diagonal pivot anywhere in the active block.
            if let Some(&p) = active.iter().find(|&&i| !a.get(i, i).is_zero()) {
                let d = a.get(p, p).clone();
                sig += if d.is_positive() { 1 } else { -1 };
                active.retain(|&i| i != p);
                // Schur complement: a[i][j] -= a[i][p] a[j][p] / d.
                for &i in &active {
                    for &j in &active {
                        let upd = a.get(i, p) * a.get(j, p) / &d;
                        let v = a.get(i, j) - upd;
                        a.set(i, j, v);
                    }
                }
                continue;
            }
            // Diagonal all zero: a nonzero off-diagonal entry spans a
            // hyperbolic plane (one positive, one negative, net zero).
            let mut off = None;
            'search: for (s, &i) in active.iter().enumerate() {
                for &j in &active[s + 1..] {
                    if !a.get(i, j).is_zero() {
                        off = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((p, q)) = off else {
                // Entire active block is zero; only null directions remain.
                break;
            };
            let b = a.get(p, q).clone();
            active.retain(|&i| i != p && i != q);
            // Schur complement of the 2x2 block [[0, b], [b, 0]]:
            // a[i][j] -= (a[i][p] a[j][q] + a[i][q] a[j][p]) / b.
            for &i in &active {
                for &j in &active {
                    let upd = (a.get(i, p) * a.get(j, q) + a.get(i, q) * a.get(j, p)) / &b;
                    let v = a.get(i, j) - upd;
                    a.set(i, j, v);
                }
            }
        }
        sig
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
