//! Bridge diagrams of tangles and links and their disoriented complexes.
//!
//! Underbridges are the generators in degree 0, overbridges in degree 1, and
//! degree -1 is a single copy of `Z` reached by the augmentation sending each
//! underbridge to 1. An overbridge runs from one underbridge, over a sequence
//! of underbridges, to another; its disoriented core alternates direction at
//! every crossing.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain_core::{AbelianGroup, DisorientedComplex, IntMatrix};
use crate::cover::CoverHandles;
use crate::error::{Error, Result};
use crate::ids::{check_sign, IdIndex};

/// An underbridge, optionally annotated with the number of tangle endpoints on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Underbridge {
    pub id: String,
    pub endpoints: Option<u32>,
}

/// An overbridge with its endpoints and the underbridges it crosses, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overbridge {
    pub id: String,
    pub start: String,
    pub crossings: Vec<String>,
    pub end: String,
    /// +1 when the first subarc points away from `start`, -1 when it points toward it.
    pub disorientation: i64,
}

/// Combinatorial bridge decomposition of a tangle or link projection.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BridgeDiagram {
    pub underbridges: Vec<Underbridge>,
    pub overbridges: Vec<Overbridge>,
}

/// Outcome of a successful validation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub warnings: Vec<String>,
}

/// Homology of a tangle complex and its identification with the cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleHomologyReport {
    pub complex: DisorientedComplex,
    pub h1: AbelianGroup,
    pub h0: AbelianGroup,
    pub hm1: AbelianGroup,
    /// `(k, H_k)` read as the reduced homology of the cover in dimension `k + 1`.
    pub cover_identification: Vec<(i32, AbelianGroup)>,
}

/// Boundary column of a disoriented core meeting the points `p_0, ..., p_{n+1}`.
///
/// Subarc `i` runs from `points[i-1]` to `points[i]` and is traversed forward
/// when `sign * (-1)^(i-1) = +1`. A forward subarc contributes
/// `-u(points[i-1]) + u(points[i])`, a backward one the negative.
pub(crate) fn alternating_column(points: &[usize], sign: i64, n: usize) -> Vec<BigInt> {
    let mut column = vec![BigInt::zero(); n];
    let mut direction = sign;
    for pair in points.windows(2) {
        column[pair[0]] -= direction;
        column[pair[1]] += direction;
        direction = -direction;
    }
    column
}

struct Resolved {
    underbridge_ids: Vec<String>,
    overbridge_ids: Vec<String>,
    /// Point sequences of the overbridges as underbridge positions.
    paths: Vec<Vec<usize>>,
    signs: Vec<i64>,
}

fn resolve(d: &BridgeDiagram) -> Result<(Resolved, ValidationReport)> {
    if d.underbridges.is_empty() {
        return Err(Error::Empty("a bridge diagram needs at least one underbridge".into()));
    }
    let unders = IdIndex::build("underbridge", d.underbridges.iter().map(|u| u.id.as_str()))?;
    IdIndex::build("overbridge", d.overbridges.iter().map(|o| o.id.as_str()))?;
    let mut used = vec![false; d.underbridges.len()];
    let mut paths = Vec::with_capacity(d.overbridges.len());
    let mut signs = Vec::with_capacity(d.overbridges.len());
    for o in &d.overbridges {
        let ctx = || format!("overbridge `{}`", o.id);
        let mut path = vec![unders.get(&o.start, ctx)?];
        for c in &o.crossings {
            path.push(unders.get(c, ctx)?);
        }
        path.push(unders.get(&o.end, ctx)?);
        for &p in &path {
            used[p] = true;
        }
        signs.push(check_sign(o.disorientation, || format!("disorientation of overbridge `{}`", o.id))?);
        paths.push(path);
    }
    let mut report = ValidationReport::default();
    if d.underbridges.len() > 1 {
        for (u, flag) in d.underbridges.iter().zip(&used) {
            if !flag {
                report.warnings.push(format!("underbridge `{}` is isolated", u.id));
            }
        }
    }
    let resolved = Resolved {
        underbridge_ids: d.underbridges.iter().map(|u| u.id.clone()).collect(),
        overbridge_ids: d.overbridges.iter().map(|o| o.id.clone()).collect(),
        paths,
        signs,
    };
    Ok((resolved, report))
}

/// Checks id references, signs and non-emptiness.
pub fn validate_bridge_diagram(d: &BridgeDiagram) -> Result<ValidationReport> {
    resolve(d).map(|(_, report)| report)
}

/// The disoriented complex `C_1 -> C_0 -> Z` on degrees `[-1, 1]`.
pub fn build_tangle_complex(d: &BridgeDiagram) -> Result<DisorientedComplex> {
    let (r, _) = resolve(d)?;
    let n = r.underbridge_ids.len();
    let columns: Vec<Vec<BigInt>> =
        r.paths.iter().zip(&r.signs).map(|(path, &sign)| alternating_column(path, sign, n)).collect();
    let boundary = IntMatrix::from_columns(n, &columns)?;
    let augmentation = IntMatrix::from_rows(&[vec![1i64; n]])?;
    DisorientedComplex::new(
        -1,
        vec![vec!["1".to_string()], r.underbridge_ids, r.overbridge_ids],
        vec![augmentation, boundary],
    )
}

/// Homology of the tangle complex in all degrees.
pub fn tangle_homology(d: &BridgeDiagram) -> Result<TangleHomologyReport> {
    let complex = build_tangle_complex(d)?;
    let h1 = complex.homology_at(1)?;
    let h0 = complex.homology_at(0)?;
    let hm1 = complex.homology_at(-1)?;
    if !hm1.is_trivial() {
        return Err(Error::Internal("augmentation of a nonempty diagram is not onto".into()));
    }
    let cover_identification = vec![(1, h1.clone()), (0, h0.clone()), (-1, hm1.clone())];
    Ok(TangleHomologyReport { complex, h1, h0, hm1, cover_identification })
}

/// Handle data of the cover of the 3-ball: two 0-handles, a 1-handle per
/// underbridge and a 2-handle per overbridge.
pub fn tangle_cover(d: &BridgeDiagram) -> Result<CoverHandles> {
    CoverHandles::from_disoriented(&build_tangle_complex(d)?)
}
