use std::fmt;

use num_traits::{One, Zero};

use super::GaussianRational;

/// Dense row-major matrix over `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    /// Panics if `entries.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from rows of equal length `cols`. An empty row list
    /// gives a `0 x cols` matrix.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<GaussianRational>>) -> Self {
        let mut entries = Vec::new();
        let mut count = 0;
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
            count += 1;
        }
        Matrix {
            rows: count,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from(v)).collect()),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[GaussianRational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols);
        self.row_iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(GaussianRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination.
///
/// The result is the unique RREF of the row space: pivots are 1, pivot
/// columns are otherwise zero, zero rows sit at the bottom.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].inv().expect("nonzero pivot");
        for j in c..a.cols {
            a[(r, j)] *= &inv;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..a.cols {
                let delta = &factor * &a[(r, j)];
                a[(i, j)] -= &delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivots,
    }
}

/// Solves `m x = rhs`. Returns `None` when inconsistent, otherwise one
/// particular solution (free variables set to zero) and a basis of the
/// kernel of `m`.
pub fn solve_affine(
    m: &Matrix,
    rhs: &[GaussianRational],
) -> Option<(Vec<GaussianRational>, Vec<Vec<GaussianRational>>)> {
    assert_eq!(rhs.len(), m.rows(), "rhs length must equal row count");
    let n = m.cols();
    let mut aug = Matrix::zeros(m.rows(), n + 1);
    for i in 0..m.rows() {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n)] = rhs[i].clone();
    }
    let Rref { matrix, rank, pivots } = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut witness = vec![GaussianRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        witness[c] = matrix[(r, n)].clone();
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![GaussianRational::zero(); n];
            v[free] = GaussianRational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&matrix[(r, free)];
            }
            v
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(kernel.len(), n - rank);
    Some((witness, kernel))
}
