//! Order complexes of intersection posets, their integral homology, and the
//! stable wedge models of the suspended complement.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::arrangement::{intersection_poset, Arrangement, FlatId, IntersectionPoset};
use crate::error::LatticeError;
use crate::linalg::{smith_normal_form, IntegerMatrix};

/// A finite abstract simplicial complex, faces stored per dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    /// `faces[k]` holds the `k`-simplices, each a sorted vertex list, in
    /// lexicographic order.
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of the given simplices.
    pub fn from_facets(facets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut by_dim: BTreeMap<usize, std::collections::BTreeSet<Vec<usize>>> = BTreeMap::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            if facet.is_empty() {
                continue;
            }
            let k = facet.len();
            // every nonempty subset
            for mask in 1u64..(1 << k) {
                let face: Vec<usize> = (0..k).filter(|b| mask & (1 << b) != 0).map(|b| facet[b]).collect();
                by_dim.entry(face.len() - 1).or_default().insert(face);
            }
        }
        Self::from_layers(by_dim.into_values().map(|s| s.into_iter().collect()).collect())
    }

    fn from_layers(faces: Vec<Vec<Vec<usize>>>) -> Self {
        let vertices = faces
            .first()
            .map(|f| f.iter().map(|v| v[0]).collect())
            .unwrap_or_default();
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the complex; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Boundary of the `k`-simplex `[0, ..., k]`.
    pub fn simplex_boundary(k: usize) -> Self {
        let all: Vec<usize> = (0..=k).collect();
        Self::from_facets((0..=k).map(|skip| all.iter().copied().filter(|&v| v != skip).collect()))
    }
}

/// The order complex of the proper part of `P` strictly below `x`: vertices
/// are flats `0̂ < q < x`, simplices are chains.
pub fn order_complex_below(p: &IntersectionPoset, x: FlatId) -> Result<SimplicialComplex, LatticeError> {
    if !p.contains(x) {
        return Err(LatticeError::FlatNotFound(x));
    }
    let verts: Vec<FlatId> = p
        .below(x)
        .iter()
        .copied()
        .filter(|&q| q != IntersectionPoset::BOTTOM)
        .collect();
    let mut layers: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    // Ids increase with codim, so chains are enumerated as increasing id lists.
    fn grow(
        p: &IntersectionPoset,
        verts: &[FlatId],
        start: usize,
        stack: &mut Vec<usize>,
        layers: &mut Vec<Vec<Vec<usize>>>,
    ) {
        for (i, &v) in verts.iter().enumerate().skip(start) {
            if let Some(&last) = stack.last() {
                if !p.less(last, v) {
                    continue;
                }
            }
            stack.push(v);
            let k = stack.len() - 1;
            if layers.len() <= k {
                layers.push(Vec::new());
            }
            layers[k].push(stack.clone());
            grow(p, verts, i + 1, stack, layers);
            stack.pop();
        }
    }
    grow(p, &verts, 0, &mut stack, &mut layers);
    for layer in &mut layers {
        layer.sort();
    }
    Ok(SimplicialComplex::from_layers(layers))
}

/// Reduced integral homology `H̃_k` for `k = 0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    groups: Vec<AbelianGroup>,
    empty_complex: bool,
}

impl ReducedHomology {
    /// `H̃_k`; trivial above the dimension of the complex.
    pub fn degree(&self, k: usize) -> AbelianGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn groups(&self) -> &[AbelianGroup] {
        &self.groups
    }

    /// The empty complex, whose only reduced class sits in degree -1 of the
    /// augmented chain complex.
    pub fn is_empty_complex(&self) -> bool {
        self.empty_complex
    }

    pub fn is_acyclic(&self) -> bool {
        !self.empty_complex && self.groups.iter().all(AbelianGroup::is_trivial)
    }
}

struct BoundaryData {
    rank: usize,
    torsion: Vec<u64>,
}

fn analyse(m: &IntegerMatrix) -> BoundaryData {
    let factors = smith_normal_form(m);
    let rank = factors.iter().filter(|d| !d.is_zero()).count();
    let torsion = factors
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.to_u64().expect("torsion order fits in u64"))
        .collect();
    BoundaryData { rank, torsion }
}

/// `∂_k : C_k -> C_{k-1}`; `∂_0` is the augmentation to `Z`.
fn boundary(c: &SimplicialComplex, k: usize) -> IntegerMatrix {
    let cols = c.faces(k);
    if k == 0 {
        return IntegerMatrix::from_vec(1, cols.len(), vec![BigInt::one(); cols.len()]);
    }
    let rows = c.faces(k - 1);
    let index: BTreeMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (j, simplex) in cols.iter().enumerate() {
        for skip in 0..simplex.len() {
            let face: Vec<usize> = simplex
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            m[(index[face.as_slice()], j)] = BigInt::from(sign);
        }
    }
    m
}

/// Reduced homology from the Smith normal forms of the augmented boundary
/// maps.
pub fn reduced_homology(c: &SimplicialComplex) -> ReducedHomology {
    let Some(dim) = c.dim() else {
        return ReducedHomology {
            groups: Vec::new(),
            empty_complex: true,
        };
    };
    let data: Vec<BoundaryData> = (0..=dim).map(|k| analyse(&boundary(c, k))).collect();
    let groups = (0..=dim)
        .map(|k| {
            let chains = c.faces(k).len();
            let out_rank = data[k].rank;
            let (in_rank, torsion) = match data.get(k + 1) {
                Some(d) => (d.rank, d.torsion.clone()),
                None => (0, Vec::new()),
            };
            AbelianGroup::new((chains - out_rank - in_rank) as u64, torsion)
        })
        .collect();
    ReducedHomology {
        groups,
        empty_complex: false,
    }
}

/// A torsion class in the cohomology of some `ΔP_{<p}`; it contributes a
/// Moore space rather than a sphere to the stable model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionClass {
    pub flat: FlatId,
    pub cohomology_degree: usize,
    pub order: u64,
}

/// Multiset of sphere dimensions in a stable wedge model of `ΣX`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WedgeDecomposition {
    /// Sorted ascending.
    pub sphere_dims: Vec<usize>,
    pub torsion: Vec<TorsionClass>,
}

impl WedgeDecomposition {
    pub fn count(&self, dim: usize) -> usize {
        self.sphere_dims.iter().filter(|&&d| d == dim).count()
    }

    pub fn len(&self) -> usize {
        self.sphere_dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sphere_dims.is_empty()
    }

    /// `(dimension, multiplicity)` pairs, ascending.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.sphere_dims {
            match out.last_mut() {
                Some((last, k)) if *last == d => *k += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

/// One `N`-fold wedge of 2-spheres: the poset is taken to be the hyperplanes
/// alone, each of real dimension `2n - 2` with nothing below it.
pub fn suspension_wedge(a: &Arrangement) -> WedgeDecomposition {
    WedgeDecomposition {
        sphere_dims: vec![2; a.len()],
        torsion: Vec::new(),
    }
}

/// What a single flat contributes to the full-poset wedge model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatContribution {
    pub flat: FlatId,
    pub codim: usize,
    /// Real dimension of the flat, `2(n - codim)`.
    pub real_dim: usize,
    /// The sphere `S^(2n - d - 1)` in which the order complex is embedded.
    pub ambient_sphere: usize,
    pub order_complex_simplices: usize,
    pub spheres: Vec<usize>,
}

/// Full-poset evaluation of `Σ ∨_p (S^{2n-d(p)-1} - ΔP_{<p})` with the
/// homology of each piece obtained by Alexander duality: a free class of
/// `H̃^k(ΔP_{<p})` gives a sphere of dimension `2n - d(p) - 2 - k` in the
/// piece, hence `2n - d(p) - 1 - k` after suspension.
pub fn gm_wedge(a: &Arrangement) -> WedgeDecomposition {
    gm_wedge_detailed(&intersection_poset(a)).0
}

pub fn gm_wedge_detailed(p: &IntersectionPoset) -> (WedgeDecomposition, Vec<FlatContribution>) {
    let n = p.ambient_dim();
    let mut out = WedgeDecomposition::default();
    let mut contributions = Vec::new();
    for flat in p.flats().iter().skip(1) {
        let codim = flat.codim;
        let real_dim = 2 * (n - codim);
        let ambient = 2 * n - real_dim - 1;
        let complex = order_complex_below(p, flat.id).expect("flat in poset");
        let h = reduced_homology(&complex);
        let mut spheres = Vec::new();
        if h.is_empty_complex() {
            // H̃^{-1}(∅) = Z
            spheres.push(ambient + 1);
        } else {
            for (k, g) in h.groups().iter().enumerate() {
                // Hom(H̃_k, Z) ⊂ H̃^k
                spheres.extend(std::iter::repeat_n(ambient - k, g.free_rank() as usize));
                // Ext(H̃_k, Z) ⊂ H̃^{k+1}
                out.torsion.extend(g.torsion().iter().map(|&order| TorsionClass {
                    flat: flat.id,
                    cohomology_degree: k + 1,
                    order,
                }));
            }
        }
        out.sphere_dims.extend_from_slice(&spheres);
        contributions.push(FlatContribution {
            flat: flat.id,
            codim,
            real_dim,
            ambient_sphere: ambient,
            order_complex_simplices: complex.simplex_count(),
            spheres,
        });
    }
    out.sphere_dims.sort_unstable();
    (out, contributions)
}
