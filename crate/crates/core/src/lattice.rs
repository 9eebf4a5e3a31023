//! Möbius function, characteristic polynomial, Betti numbers and the
//! modular-chain search that certifies fiber-type arrangements.

use std::cmp::Reverse;
use std::fmt;

use serde::Serialize;

use crate::arrangement::{intersection_poset, Arrangement, FlatId, IntersectionPoset};
use crate::error::LatticeError;

/// `μ(0̂, x)` for every flat, indexed by flat id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i64>,
}

impl MobiusTable {
    pub fn get(&self, x: FlatId) -> i64 {
        self.values[x]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

pub fn mobius(p: &IntersectionPoset) -> MobiusTable {
    let mut values = vec![0i64; p.len()];
    // Flats are numbered in codim order, so everything below x is already set.
    for x in 0..p.len() {
        values[x] = if x == IntersectionPoset::BOTTOM {
            1
        } else {
            -p.below(x).iter().map(|&y| values[y]).sum::<i64>()
        };
    }
    MobiusTable { values }
}

/// Integer polynomial, `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    coeffs: Vec<i64>,
}

impl CharPoly {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    /// `t^shift * Π (t - root)`.
    pub fn from_roots(shift: usize, roots: &[i64]) -> Self {
        let mut coeffs = vec![0i64; shift];
        coeffs.push(1);
        for &r in roots {
            let mut next = vec![0i64; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t + c as i128)
    }

    /// Integer roots with multiplicity, ascending.
    pub fn integer_roots(&self) -> Vec<i64> {
        let mut roots = Vec::new();
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs[0] == 0 {
            roots.push(0);
            coeffs.remove(0);
        }
        'outer: while coeffs.len() > 1 {
            let c0 = coeffs[0].unsigned_abs();
            for d in divisors(c0) {
                for r in [d as i64, -(d as i64)] {
                    if let Some(q) = synthetic_div(&coeffs, r) {
                        roots.push(r);
                        coeffs = q;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        roots.sort_unstable();
        roots
    }

    /// True when the polynomial is a product of monic linear integer factors.
    pub fn splits_over_integers(&self) -> bool {
        self.is_monic() && self.integer_roots().len() == self.degree()
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).flat_map(|d| {
        if d * d == n { vec![d] } else { vec![d, n / d] }
    }).collect()
}

/// Divides by `(t - r)`, returning the quotient when the remainder is zero.
fn synthetic_div(coeffs: &[i64], r: i64) -> Option<Vec<i64>> {
    let deg = coeffs.len() - 1;
    let mut q = vec![0i64; deg];
    let mut carry = 0i64;
    for k in (1..=deg).rev() {
        carry = coeffs[k] + carry * r;
        q[k - 1] = carry;
    }
    (coeffs[0] + carry * r == 0).then_some(q)
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 && !(k == 0 && first) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `χ(t) = Σ_x μ(x) t^{dim x}` over the intersection poset.
pub fn char_poly(a: &Arrangement) -> CharPoly {
    char_poly_of(&intersection_poset(a))
}

pub fn char_poly_of(p: &IntersectionPoset) -> CharPoly {
    let mu = mobius(p);
    let mut coeffs = vec![0i64; p.ambient_dim() + 1];
    for x in 0..p.len() {
        coeffs[p.dim(x)] += mu.get(x);
    }
    CharPoly::from_coeffs(coeffs)
}

/// Betti numbers of the complement, `b_k = Σ_{codim x = k} |μ(x)|`, for
/// `k = 0..=n`.
pub fn betti_numbers(a: &Arrangement) -> Vec<u64> {
    betti_numbers_of(&intersection_poset(a))
}

pub fn betti_numbers_of(p: &IntersectionPoset) -> Vec<u64> {
    let mu = mobius(p);
    let mut b = vec![0u64; p.ambient_dim() + 1];
    for x in 0..p.len() {
        b[p.codim(x)] += mu.get(x).unsigned_abs();
    }
    b
}

/// Whether `x` satisfies the modular rank identity against every flat `y`:
/// `codim x + codim y = codim(x ∧ y) + codim(x ∨ y)`. When `x` and `y` are
/// disjoint there is no join, and the rank of their combined linear parts
/// stands in for `codim(x ∨ y)`.
pub fn is_modular(p: &IntersectionPoset, x: FlatId) -> Result<bool, LatticeError> {
    if !p.contains(x) {
        return Err(LatticeError::FlatNotFound(x));
    }
    Ok(modular_unchecked(p, x))
}

fn modular_unchecked(p: &IntersectionPoset, x: FlatId) -> bool {
    let fx = &p.flats()[x];
    p.flats().iter().all(|fy| {
        let y = fy.id;
        if p.leq(x, y) || p.leq(y, x) {
            return true;
        }
        let meet = p.codim(p.meet(x, y));
        let upper = match p.join(x, y) {
            Some(j) => p.codim(j),
            None => p.normal_rank(&fx.hyperplanes.union(&fy.hyperplanes)),
        };
        fx.codim + fy.codim == meet + upper
    })
}

/// A maximal chain of modular flats, one per codimension, certifying that
/// the complement is an iterated bundle of punctured lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationTower {
    /// `X_1 < X_2 < ...`; `X_k` has codim `k`. For a non-central
    /// arrangement the top stage has no flat and the chain has `r - 1`
    /// entries.
    pub chain: Vec<FlatId>,
    /// `e_k = |A_{X_k}| - |A_{X_{k-1}}|`, the number of points removed from
    /// the fiber at stage `k`; the last stage counts against all `N`
    /// hyperplanes.
    pub fiber_ranks: Vec<usize>,
    /// Set when the arrangement has no common point. The modular-chain
    /// criterion is classical only for central arrangements.
    pub affine: bool,
}

impl FibrationTower {
    pub fn len(&self) -> usize {
        self.fiber_ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fiber_ranks.is_empty()
    }

    pub fn total(&self) -> usize {
        self.fiber_ranks.iter().sum()
    }
}

pub fn fiber_type(a: &Arrangement) -> Option<FibrationTower> {
    fiber_type_of(&intersection_poset(a))
}

/// Depth-first search for a chain `0̂ < X_1 < ... < X_{r-1}` of modular flats
/// (`r` = poset rank), closed by the top flat or, for a non-central
/// arrangement, by the whole arrangement. Candidates at each level are tried
/// by descending `|A_X|`, then ascending id. The search is exhaustive, so
/// `None` means no such chain exists.
pub fn fiber_type_of(p: &IntersectionPoset) -> Option<FibrationTower> {
    let r = p.rank();
    let n_total = p.hyperplane_count();
    if r == 0 {
        return Some(FibrationTower {
            chain: Vec::new(),
            fiber_ranks: Vec::new(),
            affine: false,
        });
    }
    let top = p.top();

    let mut candidates: Vec<Vec<FlatId>> = vec![Vec::new(); r];
    for (codim, layer) in p.layers().iter().enumerate().take(r).skip(1) {
        let mut modular: Vec<FlatId> = layer
            .iter()
            .copied()
            .filter(|&x| modular_unchecked(p, x))
            .collect();
        modular.sort_by_key(|&x| (Reverse(p.flats()[x].generator_count()), x));
        candidates[codim] = modular;
    }

    let mut chain = Vec::with_capacity(r);
    if !extend_chain(p, &candidates, IntersectionPoset::BOTTOM, 1, r, &mut chain) {
        return None;
    }
    if let Some(t) = top {
        chain.push(t);
    }

    let mut fiber_ranks = Vec::with_capacity(r);
    let mut prev = 0;
    for &x in chain.iter().take(r - 1) {
        let count = p.flats()[x].generator_count();
        fiber_ranks.push(count - prev);
        prev = count;
    }
    fiber_ranks.push(n_total - prev);

    Some(FibrationTower {
        chain,
        fiber_ranks,
        affine: top.is_none(),
    })
}

fn extend_chain(
    p: &IntersectionPoset,
    candidates: &[Vec<FlatId>],
    prev: FlatId,
    codim: usize,
    r: usize,
    chain: &mut Vec<FlatId>,
) -> bool {
    if codim == r {
        return true;
    }
    for &x in &candidates[codim] {
        if !p.less(prev, x) {
            continue;
        }
        chain.push(x);
        if extend_chain(p, candidates, x, codim + 1, r, chain) {
            return true;
        }
        chain.pop();
    }
    false
}
