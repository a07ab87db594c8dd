//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

use crate::error::{Error, Result};

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `2 <= d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self::default()
    }

    /// `Z^rank`.
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Builds a group from a free rank and a list of cyclic orders.
    ///
    /// The orders need not form a divisibility chain; they are brought into
    /// invariant-factor form. Orders equal to 1 are dropped; zero or negative
    /// orders are rejected.
    pub fn new(free_rank: usize, orders: &[BigInt]) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|d| !d.is_positive()) {
            return Err(Error::InvalidValue(format!("cyclic order {bad} is not positive")));
        }
        Ok(AbelianGroup { free_rank, torsion: invariant_factors_of(orders) })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors, each at least 2 and dividing the next.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Direct sum of two groups.
    /// Builds a group from factors already forming a divisibility chain.
    pub(crate) fn from_chain(free_rank: usize, factors: impl IntoIterator<Item = BigInt>) -> Self {
        let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup { free_rank, torsion }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        AbelianGroup { free_rank: self.free_rank + other.free_rank, torsion: invariant_factors_of(&orders) }
    }
}

/// Rewrites a list of cyclic orders as invariant factors, dropping ones.
fn invariant_factors_of(orders: &[BigInt]) -> Vec<BigInt> {
    let (factors, _) = smith_normal_form(&IntMatrix::diagonal(orders));
    factors.into_iter().filter(|d| !d.is_one()).collect()
}

impl fmt::Display for AbelianGroup {
    /// Free part first, then cyclic factors in ascending order, joined by ` ⊕ `.
    /// The trivial group renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rendering() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::new(0, &ints(&[3])).unwrap().to_string(), "Z/3");
        assert_eq!(AbelianGroup::new(1, &ints(&[4, 2])).unwrap().to_string(), "Z ⊕ Z/2 ⊕ Z/4");
    }

    #[test]
    fn canonical_form_drops_ones_and_merges_coprime_parts() {
        let g = AbelianGroup::new(0, &ints(&[1, 2, 3])).unwrap();
        assert_eq!(g.torsion(), ints(&[6]).as_slice());
        let h = AbelianGroup::new(0, &ints(&[6, 4])).unwrap();
        assert_eq!(h.torsion(), ints(&[2, 12]).as_slice());
        assert_eq!(h.torsion_order(), BigInt::from(24));
        assert!(AbelianGroup::new(0, &ints(&[0])).is_err());
    }

    #[test]
    fn direct_sum_is_canonical() {
        let a = AbelianGroup::new(1, &ints(&[2])).unwrap();
        let b = AbelianGroup::new(0, &ints(&[3])).unwrap();
        assert_eq!(a.direct_sum(&b), AbelianGroup::new(1, &ints(&[6])).unwrap());
    }
}
