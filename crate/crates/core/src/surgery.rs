//! Surgery groups `L_i` of fiber-type arrangement groups and of the pure
//! braid groups, with the group-theoretic metadata behind them.
//!
//! Everything here is 4-periodic in `i`; negative indices are reduced with
//! true modulo.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::arrangement::braid_arrangement;
use crate::error::SurgeryError;
use crate::lattice::fiber_type;

/// A value of an `L`-group: a finitely generated abelian group.
pub type LGroupValue = AbelianGroup;

/// `i mod 4` in `0..4`.
pub fn residue(i: i64) -> u8 {
    i.rem_euclid(4) as u8
}

/// `L_i` of the trivial group, i.e. `H_i(*; L_0)`: `Z, 0, Z_2, 0`.
pub fn l_point(i: i64) -> LGroupValue {
    match residue(i) {
        0 => AbelianGroup::integers(),
        2 => AbelianGroup::cyclic(2),
        _ => AbelianGroup::trivial(),
    }
}

/// `h_i(X) = h_i(*) ⊕ h_{i-1}(*)^N` with `h = H(-; L_0)`, for a space `X`
/// whose suspension is a wedge of `N` two-spheres. Desuspending once, `X` is
/// stably a wedge of `N` circles, so the reduced part is shifted by one.
pub fn h_of_complement(hyperplanes: u64, i: i64) -> LGroupValue {
    l_point(i).direct_sum(&l_point(i - 1).pow(hyperplanes))
}

/// `⊕_k l_point(i - k)^{b_k}`: generalized homology of a space stably
/// equivalent to a wedge of `b_k` spheres of each dimension `k`.
pub fn assembly_from_betti(betti: &[u64], i: i64) -> Result<LGroupValue, SurgeryError> {
    match betti.first() {
        Some(1) => {}
        Some(b0) => {
            return Err(SurgeryError::MalformedBetti(format!("b_0 = {b0}, expected 1")))
        }
        None => return Err(SurgeryError::MalformedBetti("empty sequence".into())),
    }
    Ok(betti
        .iter()
        .enumerate()
        .map(|(k, &b)| l_point(i - k as i64).pow(b))
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Fundamental group of a fiber-type arrangement complement with `N`
    /// hyperplanes.
    FiberType,
    /// Pure braid group `PB_n`, the braid arrangement case with
    /// `N = n(n+1)/2`.
    PureBraid,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::FiberType => "fiber-type",
            Provenance::PureBraid => "pure-braid",
        })
    }
}

/// `L_i` for `i ≡ 0, 1, 2, 3 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryTable {
    rows: [LGroupValue; 4],
    pub hyperplanes: u64,
    pub provenance: Provenance,
}

impl SurgeryTable {
    pub fn get(&self, i: i64) -> &LGroupValue {
        &self.rows[residue(i) as usize]
    }

    pub fn rows(&self) -> &[LGroupValue; 4] {
        &self.rows
    }
}

impl fmt::Display for SurgeryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, g) in self.rows.iter().enumerate() {
            writeln!(f, "L_i = {g}\tif i ≡ {r} mod 4")?;
        }
        Ok(())
    }
}

/// `L_i(Γ)` for `Γ = π_1` of a fiber-type complement with `N` hyperplanes:
/// `Z, Z^N, Z_2, Z_2^N`. The table is checked against [`h_of_complement`]
/// before it is returned.
pub fn surgery_fiber_type(hyperplanes: u64) -> Result<SurgeryTable, SurgeryError> {
    if hyperplanes == 0 {
        return Err(SurgeryError::InvalidParameter(
            "a fiber-type arrangement needs at least one hyperplane".into(),
        ));
    }
    fiber_type_table(hyperplanes, Provenance::FiberType)
}

fn fiber_type_table(n: u64, provenance: Provenance) -> Result<SurgeryTable, SurgeryError> {
    let rows = [
        AbelianGroup::integers(),
        AbelianGroup::free(n),
        AbelianGroup::cyclic(2),
        AbelianGroup::cyclic(2).pow(n),
    ];
    for (r, row) in rows.iter().enumerate() {
        if *row != h_of_complement(n, r as i64) {
            return Err(SurgeryError::Inconsistent { residue: r as u8 });
        }
    }
    Ok(SurgeryTable {
        rows,
        hyperplanes: n,
        provenance,
    })
}

/// Number of hyperplanes `n(n+1)/2` of the braid arrangement.
pub fn braid_hyperplane_count(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// `L_i(PB_n)`: the fiber-type table at `N = n(n+1)/2`.
pub fn surgery_pure_braid(n: u64) -> Result<SurgeryTable, SurgeryError> {
    if n == 0 {
        return Err(SurgeryError::InvalidParameter("pure braid group needs n >= 1".into()));
    }
    fiber_type_table(braid_hyperplane_count(n), Provenance::PureBraid)
}

/// Filtration data `1 = Γ_0 ⊂ Γ_1 ⊂ ... ⊂ Γ_r = Γ` of a strongly poly-free
/// group: the ranks of the free quotients `Γ_{i+1}/Γ_i`, with normality of
/// each `Γ_i` in `Γ` asserted. Surface-diffeomorphism realization of the
/// conjugation action is recorded as asserted, never checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpfCertificate {
    pub quotient_ranks: Vec<u64>,
    pub normality_asserted: bool,
    pub monodromy_realization_asserted: bool,
    pub rank_bound: usize,
}

impl SpfCertificate {
    pub fn new(quotient_ranks: Vec<u64>) -> Result<Self, SurgeryError> {
        if quotient_ranks.contains(&0) {
            return Err(SurgeryError::InvalidParameter(
                "free quotients must have rank >= 1".into(),
            ));
        }
        Ok(SpfCertificate {
            rank_bound: quotient_ranks.len(),
            quotient_ranks,
            normality_asserted: true,
            monodromy_realization_asserted: true,
        })
    }

    pub fn total_rank(&self) -> u64 {
        self.quotient_ranks.iter().sum()
    }
}

/// Certificate for `PB_n` read off the fibration tower of the braid
/// arrangement: quotient ranks `1, 2, ..., n`.
pub fn spf_pure_braid(n: u64) -> Result<SpfCertificate, SurgeryError> {
    let a = braid_arrangement(n as usize).map_err(|e| SurgeryError::InvalidParameter(e.to_string()))?;
    let tower = fiber_type(&a).expect("braid arrangements are fiber-type");
    SpfCertificate::new(tower.fiber_ranks.iter().map(|&e| e as u64).collect())
}

/// `1 -> PB_n -> B_n -> S_{n+1} -> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidExtension {
    pub n: u64,
    #[serde(serialize_with = "as_string")]
    pub subgroup_index: BigUint,
    #[serde(serialize_with = "as_string")]
    pub quotient_order: BigUint,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn braid_extension(n: u64) -> Result<BraidExtension, SurgeryError> {
    if n == 0 {
        return Err(SurgeryError::InvalidParameter("braid group needs n >= 1".into()));
    }
    let order: BigUint = (1..=n + 1).map(BigUint::from).product();
    Ok(BraidExtension {
        n,
        subgroup_index: order.clone(),
        quotient_order: order,
    })
}

/// Lower K-theory inputs that make all decorations of `L` agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KTheoryMetadata {
    pub whitehead: u8,
    pub reduced_k0: u8,
    pub negative_k: u8,
    pub decoration_independent: bool,
    pub applies_to: &'static str,
}

pub fn k_theory_metadata() -> KTheoryMetadata {
    KTheoryMetadata {
        whitehead: 0,
        reduced_k0: 0,
        negative_k: 0,
        decoration_independent: true,
        applies_to: "torsion-free subgroups of B_n",
    }
}
