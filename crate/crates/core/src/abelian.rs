//! Finitely generated abelian groups in canonical form `Z^r ⊕ Z_{t1} ⊕ ...`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `Z^free_rank ⊕ (⊕ Z_t for t in torsion)`, torsion sorted ascending.
///
/// Torsion is stored as a multiset of cyclic orders, not as invariant
/// factors: `Z_2 ⊕ Z_3` and `Z_6` are kept distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    free_rank: u64,
    torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z_order`. Order 1 gives the trivial group.
    ///
    /// Panics on order 0; use [`AbelianGroup::integers`] for `Z`.
    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [order])
    }

    /// Orders equal to 1 are dropped. Panics on a zero order.
    pub fn new(free_rank: u64, torsion: impl IntoIterator<Item = u64>) -> Self {
        let mut torsion: Vec<u64> = torsion
            .into_iter()
            .inspect(|&t| assert!(t != 0, "torsion order must be positive"))
            .filter(|&t| t > 1)
            .collect();
        torsion.sort_unstable();
        AbelianGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> u64 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        torsion.sort_unstable();
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
    }

    /// `self^copies`, the direct sum of `copies` copies.
    pub fn pow(&self, copies: u64) -> AbelianGroup {
        let mut torsion = Vec::with_capacity(self.torsion.len() * copies as usize);
        for _ in 0..copies {
            torsion.extend_from_slice(&self.torsion);
        }
        torsion.sort_unstable();
        AbelianGroup {
            free_rank: self.free_rank * copies,
            torsion,
        }
    }
}

impl std::iter::Sum for AbelianGroup {
    fn sum<I: Iterator<Item = AbelianGroup>>(iter: I) -> Self {
        iter.fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(&g))
    }
}

/// `0`, `Z`, `Z^3`, `Z_2`, `Z_2^3`, `Z^2 ⊕ Z_2 ⊕ Z_3`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut counts = BTreeMap::new();
        for &t in &self.torsion {
            *counts.entry(t).or_insert(0u64) += 1;
        }
        for (t, k) in counts {
            parts.push(if k == 1 {
                format!("Z_{t}")
            } else {
                format!("Z_{t}^{k}")
            });
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}
