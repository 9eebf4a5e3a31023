use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense row-major integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        IntegerMatrix { rows, cols, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from_col: usize) {
        for j in from_col..self.cols {
            let delta = q * self.at(src, j);
            self.entries[dst * self.cols + j] -= delta;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from_row: usize) {
        for i in from_row..self.rows {
            let delta = q * self.at(i, src);
            self.entries[i * self.cols + dst] -= delta;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.at(i, j)
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Invariant factors `d_1 | d_2 | ...` of `m`, zero-padded to
/// `min(rows, cols)`.
///
/// Elimination always pivots on the entry of smallest nonzero absolute value
/// in the remaining block.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let size = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(size);

    for k in 0..size {
        'pivot: loop {
            let pivot = (k..a.rows)
                .flat_map(|i| (k..a.cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a.at(i, j).is_zero())
                .min_by(|&(i, j), &(p, q)| a.at(i, j).abs().cmp(&a.at(p, q).abs()));
            let Some((pi, pj)) = pivot else {
                // Remaining block is zero.
                diag.resize(size, BigInt::zero());
                return diag;
            };
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);

            let p = a.at(k, k).clone();
            let mut clean = true;
            for i in k + 1..a.rows {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let q = a.at(i, k).div_floor(&p);
                a.row_axpy(i, k, &q, k);
                clean &= a.at(i, k).is_zero();
            }
            for j in k + 1..a.cols {
                if a.at(k, j).is_zero() {
                    continue;
                }
                let q = a.at(k, j).div_floor(&p);
                a.col_axpy(j, k, &q, k);
                clean &= a.at(k, j).is_zero();
            }
            if !clean {
                // A smaller remainder appeared; pivot on it next round.
                continue 'pivot;
            }

            // Row and column k are clear. Enforce p | every remaining entry.
            let offender = (k + 1..a.rows).find(|&i| {
                (k + 1..a.cols).any(|j| !a.at(i, j).is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    // row k += row i; the next round reduces it.
                    let minus_one = BigInt::from(-1);
                    a.row_axpy(k, i, &minus_one, k);
                }
                None => break 'pivot,
            }
        }
        diag.push(a.at(k, k).abs());
    }
    diag
}
