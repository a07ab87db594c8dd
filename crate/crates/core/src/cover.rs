//! Chain-level handle data of the double branched cover.
//!
//! A disoriented complex on degrees `[-1, hi]` determines a handle
//! decomposition of the cover with two 0-handles and one `(k+1)`-handle for
//! every degree-`k` generator. Each 1-handle joins the two 0-handles, and the
//! higher attaching maps are the disoriented boundary maps.

use num_bigint::BigInt;

use crate::chain_core::{AbelianGroup, DisorientedComplex, IntMatrix};
use crate::error::{Error, Result};

/// Handle counts, cellular boundary matrices and reduced homology of the cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverHandles {
    /// Number of handles in each dimension, starting at 0.
    pub handle_counts: Vec<usize>,
    /// Augmented cellular complex of the cover on degrees `[-1, top]`.
    pub complex: DisorientedComplex,
    /// Reduced homology of the cover, highest dimension first.
    pub reduced_homology: Vec<(i32, AbelianGroup)>,
}

impl CoverHandles {
    /// Builds the cover handle data from a disoriented complex whose lowest
    /// degree is -1, and checks that its reduced homology is the shifted
    /// homology of the disoriented complex.
    pub fn from_disoriented(dc: &DisorientedComplex) -> Result<Self> {
        if dc.lo() != -1 {
            return Err(Error::Dimension(format!("cover data needs a complex starting in degree -1, not {}", dc.lo())));
        }
        let zero_labels: Vec<String> = vec!["x+".into(), "x-".into()];
        let mut bases = vec![vec!["*".to_string()], zero_labels];
        let mut boundaries = vec![IntMatrix::from_rows(&[[1i64, 1]])?];

        let degree_zero = dc.basis(0)?;
        let mut attach = IntMatrix::zeros(2, degree_zero.len());
        for j in 0..degree_zero.len() {
            attach.set(0, j, BigInt::from(1));
            attach.set(1, j, BigInt::from(-1));
        }
        boundaries.push(attach);
        for k in 0..=dc.hi() {
            bases.push(dc.basis(k)?.to_vec());
            if k > 0 {
                boundaries.push(dc.boundary(k)?.expect("positive degree").clone());
            }
        }
        let complex = DisorientedComplex::new(-1, bases, boundaries)?;
        let handle_counts = (0..=complex.hi()).map(|k| complex.rank(k).expect("in range")).collect();
        let reduced_homology: Vec<(i32, AbelianGroup)> =
            complex.homology().into_iter().filter(|(k, _)| *k >= 0).collect();

        for (k, group) in &reduced_homology {
            let expected = dc.homology_at(k - 1)?;
            if *group != expected {
                return Err(Error::Internal(format!(
                    "cover homology in dimension {k} is {group}, shifted complex gives {expected}"
                )));
            }
        }
        Ok(CoverHandles { handle_counts, complex, reduced_homology })
    }
}
