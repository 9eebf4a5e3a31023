use std::collections::HashMap;

use num_traits::Zero;

use super::Arrangement;
use crate::linalg::{rref, GaussianRational, Matrix};

pub type FlatId = usize;

/// A set of hyperplane indices, stored as a bitset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneSet {
    words: Vec<u64>,
}

impl HyperplaneSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &HyperplaneSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(k, &w)| w & !other.words.get(k).copied().unwrap_or(0) == 0)
    }

    pub fn intersection(&self, other: &HyperplaneSet) -> HyperplaneSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        trim(&mut words);
        HyperplaneSet { words }
    }

    pub fn union(&self, other: &HyperplaneSet) -> HyperplaneSet {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|k| {
                self.words.get(k).copied().unwrap_or(0) | other.words.get(k).copied().unwrap_or(0)
            })
            .collect();
        HyperplaneSet { words }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| k * 64 + b)
        })
    }
}

fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

impl FromIterator<usize> for HyperplaneSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = HyperplaneSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A nonempty intersection of hyperplanes.
#[derive(Clone, Debug)]
pub struct Flat {
    pub id: FlatId,
    pub codim: usize,
    /// Every hyperplane containing the flat. Their intersection is the flat.
    pub hyperplanes: HyperplaneSet,
    /// RREF of the augmented defining system, `codim x (n + 1)`. Identical
    /// for every generating set of the same subspace.
    pub subspace: Matrix,
}

impl Flat {
    pub fn generator_count(&self) -> usize {
        self.hyperplanes.len()
    }
}

/// Nonempty intersections ordered by reverse inclusion: `x < y` when the
/// subspace of `y` is strictly inside that of `x`. Flat 0 is the ambient
/// space; flats `1..=N` are the hyperplanes in input order.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    ambient_dim: usize,
    hyperplane_count: usize,
    normals: Vec<Vec<GaussianRational>>,
    flats: Vec<Flat>,
    layers: Vec<Vec<FlatId>>,
    below: Vec<Vec<FlatId>>,
    by_hyperplanes: HashMap<HyperplaneSet, FlatId>,
}

impl IntersectionPoset {
    pub const BOTTOM: FlatId = 0;

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplane_count
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> Option<&Flat> {
        self.flats.get(id)
    }

    pub fn contains(&self, id: FlatId) -> bool {
        id < self.flats.len()
    }

    /// Flats grouped by codimension; `layers()[0] == [BOTTOM]`.
    pub fn layers(&self) -> &[Vec<FlatId>] {
        &self.layers
    }

    /// Maximal codimension of a flat.
    pub fn rank(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn codim(&self, id: FlatId) -> usize {
        self.flats[id].codim
    }

    /// Complex dimension of the flat.
    pub fn dim(&self, id: FlatId) -> usize {
        self.ambient_dim - self.flats[id].codim
    }

    /// Flats strictly below `id`, ascending.
    pub fn below(&self, id: FlatId) -> &[FlatId] {
        &self.below[id]
    }

    /// `x < y`.
    pub fn less(&self, x: FlatId, y: FlatId) -> bool {
        x != y && self.flats[x].hyperplanes.is_subset(&self.flats[y].hyperplanes)
    }

    pub fn leq(&self, x: FlatId, y: FlatId) -> bool {
        x == y || self.less(x, y)
    }

    /// The flat cut out by exactly this set of hyperplanes, if the set is
    /// closed.
    pub fn flat_with_hyperplanes(&self, set: &HyperplaneSet) -> Option<FlatId> {
        self.by_hyperplanes.get(set).copied()
    }

    /// Greatest lower bound: the smallest flat containing both subspaces.
    pub fn meet(&self, x: FlatId, y: FlatId) -> FlatId {
        let common = self.flats[x].hyperplanes.intersection(&self.flats[y].hyperplanes);
        self.by_hyperplanes[&common]
    }

    /// Least upper bound, the intersection of the two subspaces; `None`
    /// when they are disjoint.
    pub fn join(&self, x: FlatId, y: FlatId) -> Option<FlatId> {
        let both = self.flats[x].hyperplanes.union(&self.flats[y].hyperplanes);
        self.flats
            .iter()
            .filter(|z| both.is_subset(&z.hyperplanes))
            .min_by_key(|z| (z.codim, z.id))
            .map(|z| z.id)
    }

    /// The unique maximal flat, present iff all hyperplanes share a point.
    pub fn top(&self) -> Option<FlatId> {
        self.flat_with_hyperplanes(&HyperplaneSet::full(self.hyperplane_count))
    }

    pub fn is_central(&self) -> bool {
        self.top().is_some()
    }

    /// Rank of the linear parts (normal vectors) of a set of hyperplanes.
    pub fn normal_rank(&self, set: &HyperplaneSet) -> usize {
        let rows: Vec<Vec<GaussianRational>> = set.iter().map(|i| self.normals[i].clone()).collect();
        if rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(self.ambient_dim, rows).rank()
    }
}

/// Reduces `row` against an RREF basis; zero result means `row` lies in the
/// row space.
fn in_row_space(basis: &Matrix, row: &[GaussianRational]) -> bool {
    let mut v = row.to_vec();
    for r in 0..basis.rows() {
        let b = basis.row(r);
        let Some(c) = b.iter().position(|e| !e.is_zero()) else {
            continue;
        };
        if v[c].is_zero() {
            continue;
        }
        let f = v[c].clone();
        for (vj, bj) in v.iter_mut().zip(b) {
            *vj -= &(&f * bj);
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Builds the intersection poset by meet-closure, one codimension at a time:
/// every codim `k + 1` flat is `X ∩ H` for some codim `k` flat `X` and
/// hyperplane `H` not containing `X`.
pub fn intersection_poset(a: &Arrangement) -> IntersectionPoset {
    let n = a.ambient_dim();
    let rows: Vec<Vec<GaussianRational>> = a.hyperplanes().iter().map(|h| h.canonical_row()).collect();

    let mut flats = vec![Flat {
        id: 0,
        codim: 0,
        hyperplanes: HyperplaneSet::new(),
        subspace: Matrix::zeros(0, n + 1),
    }];
    let mut layers = vec![vec![0]];

    if !a.is_empty() {
        let mut layer = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let id = flats.len();
            flats.push(Flat {
                id,
                codim: 1,
                hyperplanes: std::iter::once(i).collect(),
                subspace: Matrix::from_rows(n + 1, [row.clone()]),
            });
            layer.push(id);
        }
        layers.push(layer);
    }

    loop {
        let current = layers.last().expect("nonempty").clone();
        let codim = layers.len();
        let mut found: HashMap<Vec<GaussianRational>, (Matrix, HyperplaneSet)> = HashMap::new();
        for &x in &current {
            let mut covered = flats[x].hyperplanes.clone();
            for (h, row) in rows.iter().enumerate() {
                if covered.contains(h) {
                    continue;
                }
                let stacked = flats[x]
                    .subspace
                    .vstack(&Matrix::from_rows(n + 1, [row.clone()]));
                let r = rref(&stacked);
                if r.pivots.last() == Some(&n) {
                    // Inconsistent: X and H are disjoint.
                    covered.insert(h);
                    continue;
                }
                debug_assert_eq!(r.rank, codim);
                let basis = Matrix::from_rows(n + 1, (0..r.rank).map(|i| r.matrix.row(i).to_vec()));
                let key = basis.entries().to_vec();
                let set = match found.get(&key) {
                    Some((_, set)) => set.clone(),
                    None => {
                        let set: HyperplaneSet = rows
                            .iter()
                            .enumerate()
                            .filter(|(_, row)| in_row_space(&basis, row))
                            .map(|(j, _)| j)
                            .collect();
                        found.insert(key, (basis, set.clone()));
                        set
                    }
                };
                covered = covered.union(&set);
            }
        }
        if found.is_empty() {
            break;
        }
        let mut fresh: Vec<(Vec<GaussianRational>, (Matrix, HyperplaneSet))> = found.into_iter().collect();
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        let mut layer = Vec::with_capacity(fresh.len());
        for (_, (subspace, hyperplanes)) in fresh {
            let id = flats.len();
            flats.push(Flat {
                id,
                codim,
                hyperplanes,
                subspace,
            });
            layer.push(id);
        }
        layers.push(layer);
    }

    let below = flats
        .iter()
        .map(|x| {
            flats
                .iter()
                .filter(|y| y.codim < x.codim && y.hyperplanes.is_subset(&x.hyperplanes))
                .map(|y| y.id)
                .collect()
        })
        .collect();
    let by_hyperplanes = flats.iter().map(|f| (f.hyperplanes.clone(), f.id)).collect();
    let normals = a.hyperplanes().iter().map(|h| h.normal().to_vec()).collect();

    IntersectionPoset {
        ambient_dim: n,
        hyperplane_count: a.len(),
        normals,
        flats,
        layers,
        below,
        by_hyperplanes,
    }
}
