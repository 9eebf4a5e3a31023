//! Affine hyperplane arrangements in `C^n` with exact `Q(i)` coefficients.

mod poset;

pub use poset::{intersection_poset, Flat, FlatId, HyperplaneSet, IntersectionPoset};

use num_traits::{One, Zero};

use crate::error::ArrangementError;
use crate::linalg::GaussianRational;

/// The affine hyperplane `{x : normal · x = constant}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<GaussianRational>,
    constant: GaussianRational,
}

impl Hyperplane {
    pub fn new(
        normal: Vec<GaussianRational>,
        constant: GaussianRational,
    ) -> Result<Self, ArrangementError> {
        if normal.iter().all(Zero::is_zero) {
            return Err(ArrangementError::ZeroNormal { index: 0 });
        }
        Ok(Hyperplane { normal, constant })
    }

    pub fn normal(&self) -> &[GaussianRational] {
        &self.normal
    }

    pub fn constant(&self) -> &GaussianRational {
        &self.constant
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// The augmented row `(normal | constant)`.
    pub fn augmented_row(&self) -> Vec<GaussianRational> {
        let mut row = self.normal.clone();
        row.push(self.constant.clone());
        row
    }

    /// Index of the first nonzero normal coefficient.
    pub fn pivot(&self) -> usize {
        self.normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("normal is nonzero")
    }

    /// Augmented row scaled so the pivot coefficient is 1. Two hyperplanes
    /// are the same subspace iff their canonical rows agree.
    pub fn canonical_row(&self) -> Vec<GaussianRational> {
        let inv = self.normal[self.pivot()].inv().expect("nonzero pivot");
        self.augmented_row().iter().map(|c| c * &inv).collect()
    }

    pub fn is_central(&self) -> bool {
        self.constant.is_zero()
    }
}

/// A finite ordered list of distinct affine hyperplanes in `C^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
    labels: Vec<Option<String>>,
}

/// Validates and builds an arrangement from `(normal, constant)` pairs.
pub fn make_arrangement(
    dim: usize,
    forms: impl IntoIterator<Item = (Vec<GaussianRational>, GaussianRational)>,
) -> Result<Arrangement, ArrangementError> {
    let mut a = Arrangement::empty(dim);
    for (normal, constant) in forms {
        a.push(normal, constant, None)?;
    }
    Ok(a)
}

impl Arrangement {
    pub fn empty(ambient_dim: usize) -> Self {
        Arrangement {
            ambient_dim,
            hyperplanes: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Appends a hyperplane after validating it against the current list.
    pub fn push(
        &mut self,
        normal: Vec<GaussianRational>,
        constant: GaussianRational,
        label: Option<String>,
    ) -> Result<(), ArrangementError> {
        let index = self.hyperplanes.len();
        if normal.len() != self.ambient_dim {
            return Err(ArrangementError::DimensionMismatch {
                index,
                expected: self.ambient_dim,
                found: normal.len(),
            });
        }
        let h = Hyperplane::new(normal, constant).map_err(|_| ArrangementError::ZeroNormal { index })?;
        let key = h.canonical_row();
        if let Some(first) = self.hyperplanes.iter().position(|g| g.canonical_row() == key) {
            return Err(ArrangementError::DuplicateHyperplane {
                first,
                second: index,
            });
        }
        self.hyperplanes.push(h);
        self.labels.push(label);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Self {
        assert_eq!(labels.len(), self.hyperplanes.len());
        self.labels = labels;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// True when every hyperplane passes through the origin.
    pub fn is_linear(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_central)
    }

    /// The same arrangement with hyperplanes reordered so that new position
    /// `k` holds old hyperplane `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Arrangement {
        assert_eq!(order.len(), self.len());
        Arrangement {
            ambient_dim: self.ambient_dim,
            hyperplanes: order.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    fn check_index(&self, h: usize) -> Result<(), ArrangementError> {
        if h >= self.len() {
            return Err(ArrangementError::IndexOutOfRange {
                index: h,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Removes hyperplane `h`.
    pub fn deletion(&self, h: usize) -> Result<Arrangement, ArrangementError> {
        self.check_index(h)?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != h).collect();
        Ok(self.permuted_subset(&keep))
    }

    fn permuted_subset(&self, keep: &[usize]) -> Arrangement {
        Arrangement {
            ambient_dim: self.ambient_dim,
            hyperplanes: keep.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// The arrangement induced on hyperplane `h` by its nonempty
    /// intersections with the others, in the coordinates of `H_h` obtained
    /// by eliminating its pivot variable. Coinciding traces are merged; the
    /// first one keeps its label.
    pub fn restriction(&self, h: usize) -> Result<Arrangement, ArrangementError> {
        self.check_index(h)?;
        let base = &self.hyperplanes[h];
        let p = base.pivot();
        let n = self.ambient_dim;
        let base_row = base.canonical_row();

        let mut out = Arrangement::empty(n - 1);
        let mut seen: Vec<Vec<GaussianRational>> = Vec::new();
        for (j, other) in self.hyperplanes.iter().enumerate() {
            if j == h {
                continue;
            }
            // Substitute x_p = c - sum_{k != p} a_k x_k into other.
            let row = other.augmented_row();
            let factor = row[p].clone();
            let reduced: Vec<GaussianRational> = row
                .iter()
                .zip(&base_row)
                .map(|(r, b)| r - &(&factor * b))
                .collect();
            let normal: Vec<GaussianRational> = (0..n)
                .filter(|&k| k != p)
                .map(|k| reduced[k].clone())
                .collect();
            if normal.iter().all(Zero::is_zero) {
                // Parallel to H_h, so the trace is empty.
                continue;
            }
            let constant = reduced[n].clone();
            let candidate = Hyperplane { normal, constant };
            let key = candidate.canonical_row();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            out.hyperplanes.push(candidate);
            out.labels.push(self.labels[j].clone());
        }
        Ok(out)
    }
}

/// The braid arrangement in `C^(n+1)`: hyperplanes `x_i = x_j` for
/// `0 <= i < j <= n`, labeled `H_{ij}`, listed in lexicographic order of
/// `(i, j)`.
pub fn braid_arrangement(n: usize) -> Result<Arrangement, ArrangementError> {
    if n == 0 {
        return Err(ArrangementError::InvalidParameter(
            "braid arrangement needs n >= 1".into(),
        ));
    }
    let dim = n + 1;
    let mut a = Arrangement::empty(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let mut normal = vec![GaussianRational::zero(); dim];
            normal[i] = GaussianRational::one();
            normal[j] = -GaussianRational::one();
            a.push(normal, GaussianRational::zero(), Some(format!("H_{{{i}{j}}}")))?;
        }
    }
    Ok(a)
}

/// `k` hyperplanes `x_0 = c` for `c = 0..k` in `C^1`: the plane minus `k`
/// points.
pub fn punctured_line(k: usize) -> Arrangement {
    let mut a = Arrangement::empty(1);
    for c in 0..k {
        a.push(
            vec![GaussianRational::one()],
            GaussianRational::from(c as i64),
            None,
        )
        .expect("distinct points");
    }
    a
}

/// Builds an arrangement from small integer forms; the last entry of each row
/// is the constant. Panics on invalid input, for tests and examples.
pub fn from_integer_forms(dim: usize, forms: &[&[i64]]) -> Arrangement {
    make_arrangement(
        dim,
        forms.iter().map(|f| {
            assert_eq!(f.len(), dim + 1, "form needs dim coefficients plus a constant");
            (
                f[..dim].iter().map(|&c| GaussianRational::from(c)).collect(),
                GaussianRational::from(f[dim]),
            )
        }),
    )
    .expect("valid arrangement")
}
