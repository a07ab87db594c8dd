//! Bounded chain complexes of finitely generated free abelian groups.

use super::group::AbelianGroup;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A chain complex `C_hi -> ... -> C_lo` of free abelian groups.
///
/// Each degree carries a labelled basis, and each boundary map is stored as
/// the matrix whose columns are images of basis elements of the higher degree.
/// Construction checks shapes and that consecutive boundaries compose to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisorientedComplex {
    lo: i32,
    bases: Vec<Vec<String>>,
    boundaries: Vec<IntMatrix>,
}

impl DisorientedComplex {
    /// Builds a complex with lowest degree `lo`.
    ///
    /// `bases[i]` labels the generators in degree `lo + i`; `boundaries[i]`
    /// maps degree `lo + i + 1` to degree `lo + i`, so there is one boundary
    /// fewer than there are degrees.
    pub fn new(lo: i32, bases: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::Dimension("a complex needs at least one degree".into()));
        }
        if boundaries.len() + 1 != bases.len() {
            return Err(Error::Dimension(format!(
                "{} degrees need {} boundary maps, got {}",
                bases.len(),
                bases.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let (target, source) = (bases[i].len(), bases[i + 1].len());
            if d.rows() != target || d.cols() != source {
                return Err(Error::Dimension(format!(
                    "boundary from degree {} is {}x{}, expected {target}x{source}",
                    lo + i as i32 + 1,
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for i in 1..boundaries.len() {
            let composite = boundaries[i - 1].mul(&boundaries[i])?;
            if !composite.is_zero() {
                return Err(Error::NotAComplex { from: lo + i as i32 + 1, to: lo + i as i32 - 1 });
            }
        }
        Ok(DisorientedComplex { lo, bases, boundaries })
    }

    /// Builds a complex with generic labels `g0, g1, ...` in each degree.
    pub fn from_ranks(lo: i32, ranks: &[usize], boundaries: Vec<IntMatrix>) -> Result<Self> {
        let bases = ranks.iter().map(|&n| (0..n).map(|i| format!("g{i}")).collect()).collect();
        Self::new(lo, bases, boundaries)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.bases.len() as i32 - 1
    }

    fn index(&self, k: i32) -> Result<usize> {
        if k < self.lo || k > self.hi() {
            return Err(Error::DegreeOutOfRange { degree: k, lo: self.lo, hi: self.hi() });
        }
        Ok((k - self.lo) as usize)
    }

    /// Number of generators in degree `k`.
    pub fn rank(&self, k: i32) -> Result<usize> {
        Ok(self.bases[self.index(k)?].len())
    }

    /// Generator labels in degree `k`.
    pub fn basis(&self, k: i32) -> Result<&[String]> {
        Ok(&self.bases[self.index(k)?])
    }

    /// Boundary map out of degree `k`, or `None` when `k` is the lowest degree.
    pub fn boundary(&self, k: i32) -> Result<Option<&IntMatrix>> {
        let i = self.index(k)?;
        Ok(if i == 0 { None } else { Some(&self.boundaries[i - 1]) })
    }

    /// All boundary maps, lowest first.
    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// Alternating sum of ranks, `sum (-1)^k rank C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi())
            .map(|k| {
                let n = self.bases[(k - self.lo) as usize].len() as i64;
                if k.rem_euclid(2) == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Homology in degree `k`.
    pub fn homology_at(&self, k: i32) -> Result<AbelianGroup> {
        homology_at(self, k)
    }

    /// Homology in every degree, from highest to lowest.
    pub fn homology(&self) -> Vec<(i32, AbelianGroup)> {
        (self.lo..=self.hi()).rev().map(|k| (k, homology_at(self, k).expect("degree within range"))).collect()
    }
}

/// `ker(d_k) / im(d_{k+1})` in invariant-factor form.
pub fn homology_at(c: &DisorientedComplex, k: i32) -> Result<AbelianGroup> {
    let i = c.index(k)?;
    let n = c.bases[i].len();
    let outgoing_rank = if i == 0 { 0 } else { smith_normal_form(&c.boundaries[i - 1]).1 };
    let (factors, incoming_rank) =
        if i + 1 < c.bases.len() { smith_normal_form(&c.boundaries[i]) } else { (Vec::new(), 0) };
    Ok(AbelianGroup::from_chain(n - outgoing_rank - incoming_rank, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn trefoil() -> DisorientedComplex {
        let d1 = m(&[&[1, -1, 2], &[1, 2, -1], &[-2, -1, -1]]);
        let eps = m(&[&[1, 1, 1]]);
        DisorientedComplex::from_ranks(-1, &[1, 3, 3], vec![eps, d1]).unwrap()
    }

    #[test]
    fn trefoil_homology() {
        let c = trefoil();
        assert_eq!(c.homology_at(1).unwrap(), AbelianGroup::free(1));
        assert_eq!(c.homology_at(0).unwrap(), AbelianGroup::new(0, &[BigInt::from(3)]).unwrap());
        assert!(c.homology_at(-1).unwrap().is_trivial());
        assert!(matches!(c.homology_at(2), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn augmentation_alone_kills_degree_zero() {
        let c = DisorientedComplex::from_ranks(-1, &[1, 1], vec![m(&[&[1]])]).unwrap();
        assert!(c.homology_at(0).unwrap().is_trivial());
        assert!(c.homology_at(-1).unwrap().is_trivial());
    }

    #[test]
    fn composite_must_vanish() {
        let eps = m(&[&[1, 1]]);
        let d = m(&[&[1], &[0]]);
        let err = DisorientedComplex::from_ranks(-1, &[1, 2, 1], vec![eps, d]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { from: 1, to: -1 });
        assert!(err.is_internal());
    }

    #[test]
    fn shapes_are_checked() {
        let bad = DisorientedComplex::from_ranks(0, &[2, 1], vec![m(&[&[1, 1]])]);
        assert!(matches!(bad, Err(Error::Dimension(_))));
    }

    #[test]
    fn euler_characteristic_alternates() {
        assert_eq!(trefoil().euler_characteristic(), -1 + 3 - 3);
    }
}
