//! Handle descriptions of surfaces in the 4-ball and their disoriented complexes.
//!
//! A description lists 0-handles, 1-handles (with the 0-handles they pass
//! through, in order along the core) and 2-handles (given by the signed,
//! weighted list of 1-handle cores their boundary runs along). The cellular
//! complex lives in degrees `[-1, 2]`.

mod virtual_band;

pub use virtual_band::{
    build_virtual_band_complex, check_virtual_bands, cut_surface, star_virtual_bands, ComponentRef, CutComponent,
    CutSurface, PassingCount, VirtualBand, VirtualBandData, VirtualBandSet,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain_core::{AbelianGroup, DisorientedComplex, IntMatrix};
use crate::cover::CoverHandles;
use crate::error::{Error, Result};
use crate::ids::{check_sign, IdIndex};
use crate::tangle_model::{alternating_column, ValidationReport};

/// A 1-handle running from `start` to `end`, through the 0-handles of
/// `ribbon_word` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneHandle {
    pub id: String,
    pub start: String,
    pub end: String,
    pub ribbon_word: Vec<String>,
    /// +1 when the first subarc of the core points away from `start`.
    pub disorientation: i64,
}

/// One passage of a 2-handle boundary along a 1-handle core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub one_handle: String,
    pub sign: i64,
    /// 1 for an edge on the boundary of the 2-handle graph, 2 for an interior edge.
    pub weight: i64,
}

/// A 2-handle given by its traversal events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoHandle {
    pub id: String,
    pub traversals: Vec<Traversal>,
}

/// Handle description of a surface in the 4-ball.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurfaceDescription {
    pub zero_handles: Vec<String>,
    pub one_handles: Vec<OneHandle>,
    pub two_handles: Vec<TwoHandle>,
}

/// A surface description without 2-handles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDescription(SurfaceDescription);

impl RibbonDescription {
    pub fn new(s: SurfaceDescription) -> Result<Self> {
        if !s.two_handles.is_empty() {
            return Err(Error::InvalidValue("a ribbon description has no 2-handles".into()));
        }
        Ok(RibbonDescription(s))
    }

    pub fn surface(&self) -> &SurfaceDescription {
        &self.0
    }
}

/// Homology of the cellular complex and its identification with the cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceHomologyReport {
    pub complex: DisorientedComplex,
    pub dh2: AbelianGroup,
    pub dh1: AbelianGroup,
    pub dh0: AbelianGroup,
    /// `(k, DH_k)` read as the reduced homology of the cover in dimension `k + 1`.
    pub cover_identification: Vec<(i32, AbelianGroup)>,
    pub cover: CoverHandles,
}

/// Positions of all ids referenced by a valid description.
pub(crate) struct ResolvedSurface {
    /// Point sequence of each 1-handle core as 0-handle positions.
    pub paths: Vec<Vec<usize>>,
    pub signs: Vec<i64>,
    /// For each 2-handle, `(1-handle position, sign * weight)` per traversal.
    pub traversals: Vec<Vec<(usize, i64)>>,
}

pub(crate) fn resolve(s: &SurfaceDescription) -> Result<ResolvedSurface> {
    if s.zero_handles.is_empty() {
        return Err(Error::Empty("a surface description needs at least one 0-handle".into()));
    }
    let zeros = IdIndex::build("0-handle", s.zero_handles.iter().map(String::as_str))?;
    let ones = IdIndex::build("1-handle", s.one_handles.iter().map(|h| h.id.as_str()))?;
    IdIndex::build("2-handle", s.two_handles.iter().map(|d| d.id.as_str()))?;
    let mut paths = Vec::new();
    let mut signs = Vec::new();
    for h in &s.one_handles {
        let ctx = || format!("1-handle `{}`", h.id);
        let mut path = vec![zeros.get(&h.start, ctx)?];
        for r in &h.ribbon_word {
            path.push(zeros.get(r, ctx)?);
        }
        path.push(zeros.get(&h.end, ctx)?);
        paths.push(path);
        signs.push(check_sign(h.disorientation, || format!("disorientation of 1-handle `{}`", h.id))?);
    }
    let mut traversals = Vec::new();
    for d in &s.two_handles {
        let mut events = Vec::new();
        for t in &d.traversals {
            let h = ones.get(&t.one_handle, || format!("2-handle `{}`", d.id))?;
            let sign = check_sign(t.sign, || format!("traversal sign in 2-handle `{}`", d.id))?;
            if t.weight != 1 && t.weight != 2 {
                return Err(Error::InvalidValue(format!(
                    "traversal weight in 2-handle `{}` must be 1 or 2, got {}",
                    d.id, t.weight
                )));
            }
            events.push((h, sign * t.weight));
        }
        traversals.push(events);
    }
    Ok(ResolvedSurface { paths, signs, traversals })
}

fn first_boundary(s: &SurfaceDescription, r: &ResolvedSurface) -> Result<IntMatrix> {
    let n = s.zero_handles.len();
    let columns: Vec<Vec<BigInt>> =
        r.paths.iter().zip(&r.signs).map(|(path, &sign)| alternating_column(path, sign, n)).collect();
    IntMatrix::from_columns(n, &columns)
}

fn second_boundary(s: &SurfaceDescription, r: &ResolvedSurface) -> Result<IntMatrix> {
    let n = s.one_handles.len();
    let columns: Vec<Vec<BigInt>> = r
        .traversals
        .iter()
        .map(|events| {
            let mut col = vec![BigInt::zero(); n];
            for &(h, coefficient) in events {
                col[h] += coefficient;
            }
            col
        })
        .collect();
    IntMatrix::from_columns(n, &columns)
}

/// Checks ids, signs, weights, and that every 2-handle boundary is a cycle.
pub fn validate_surface_description(s: &SurfaceDescription) -> Result<ValidationReport> {
    let r = resolve(s)?;
    let d1 = first_boundary(s, &r)?;
    let d2 = second_boundary(s, &r)?;
    for (j, d) in s.two_handles.iter().enumerate() {
        let image = d1.apply(&d2.column(j))?;
        if image.iter().any(|v| !v.is_zero()) {
            return Err(Error::NotACycle(d.id.clone()));
        }
    }
    let mut report = ValidationReport::default();
    if s.one_handles.is_empty() && s.zero_handles.len() > 1 {
        report.warnings.push("surface has several 0-handles and no 1-handles".into());
    }
    Ok(report)
}

/// The cellular disoriented complex on degrees `[-1, 2]`.
pub fn build_cellular_complex(s: &SurfaceDescription) -> Result<DisorientedComplex> {
    validate_surface_description(s)?;
    let r = resolve(s)?;
    let augmentation = IntMatrix::from_rows(&[vec![1i64; s.zero_handles.len()]])?;
    let d1 = first_boundary(s, &r)?;
    let d2 = second_boundary(s, &r)?;
    DisorientedComplex::new(
        -1,
        vec![
            vec!["1".to_string()],
            s.zero_handles.clone(),
            s.one_handles.iter().map(|h| h.id.clone()).collect(),
            s.two_handles.iter().map(|d| d.id.clone()).collect(),
        ],
        vec![augmentation, d1, d2],
    )
}

/// Euler characteristic of the surface, `#0-handles - #1-handles + #2-handles`.
pub fn euler_characteristic(s: &SurfaceDescription) -> i64 {
    s.zero_handles.len() as i64 - s.one_handles.len() as i64 + s.two_handles.len() as i64
}

/// Disoriented homology in degrees 2, 1, 0 with the cover handle data.
pub fn surface_homology(s: &SurfaceDescription) -> Result<SurfaceHomologyReport> {
    let complex = build_cellular_complex(s)?;
    let dh2 = complex.homology_at(2)?;
    let dh1 = complex.homology_at(1)?;
    let dh0 = complex.homology_at(0)?;
    if !complex.homology_at(-1)?.is_trivial() {
        return Err(Error::Internal("augmentation of a nonempty surface is not onto".into()));
    }
    let cover = CoverHandles::from_disoriented(&complex)?;
    let cover_identification = vec![(2, dh2.clone()), (1, dh1.clone()), (0, dh0.clone())];
    Ok(SurfaceHomologyReport { complex, dh2, dh1, dh0, cover_identification, cover })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn one(id: &str, start: &str, end: &str, word: &[&str], sign: i64) -> OneHandle {
        OneHandle {
            id: id.into(),
            start: start.into(),
            end: end.into(),
            ribbon_word: word.iter().map(|s| s.to_string()).collect(),
            disorientation: sign,
        }
    }

    fn trav(h: &str, sign: i64, weight: i64) -> Traversal {
        Traversal { one_handle: h.into(), sign, weight }
    }

    pub(crate) fn projective_plane() -> SurfaceDescription {
        SurfaceDescription {
            zero_handles: vec!["m".into()],
            one_handles: vec![one("h", "m", "m", &["m"], 1)],
            two_handles: vec![TwoHandle { id: "d".into(), traversals: vec![trav("h", 1, 1), trav("h", -1, 1)] }],
        }
    }

    pub(crate) fn virtual_band_example() -> SurfaceDescription {
        SurfaceDescription {
            zero_handles: vec!["m1".into(), "m2".into()],
            one_handles: vec![one("h", "m1", "m1", &["m2"], 1)],
            two_handles: vec![],
        }
    }

    #[test]
    fn projective_plane_homology() {
        let c = build_cellular_complex(&projective_plane()).unwrap();
        assert!(c.boundary(1).unwrap().unwrap().is_zero());
        assert!(c.boundary(2).unwrap().unwrap().is_zero());
        let r = surface_homology(&projective_plane()).unwrap();
        assert!(r.dh0.is_trivial());
        assert_eq!(r.dh1, AbelianGroup::free(1));
        assert_eq!(r.dh2, AbelianGroup::free(1));
        assert_eq!(r.cover.handle_counts, vec![2, 1, 1, 1]);
    }

    #[test]
    fn ribbon_annulus_has_zero_boundary() {
        let s = SurfaceDescription {
            zero_handles: vec!["m".into()],
            one_handles: vec![one("h", "m", "m", &[], 1)],
            two_handles: vec![],
        };
        let c = build_cellular_complex(&s).unwrap();
        assert!(c.boundary(1).unwrap().unwrap().is_zero());
    }

    #[test]
    fn virtual_band_example_cellular() {
        let c = build_cellular_complex(&virtual_band_example()).unwrap();
        let expected = IntMatrix::from_rows(&[[-2i64], [2]]).unwrap();
        assert_eq!(c.boundary(1).unwrap().unwrap(), &expected);
        let r = surface_homology(&virtual_band_example()).unwrap();
        assert!(r.dh1.is_trivial());
        assert_eq!(r.dh0.to_string(), "Z/2");
    }

    #[test]
    fn single_disk_is_acyclic() {
        let s = SurfaceDescription { zero_handles: vec!["m".into()], ..Default::default() };
        let r = surface_homology(&s).unwrap();
        assert!(r.dh0.is_trivial() && r.dh1.is_trivial() && r.dh2.is_trivial());
    }

    #[test]
    fn validation_rejects_non_cycles_and_empty_input() {
        let mut s = virtual_band_example();
        s.two_handles.push(TwoHandle { id: "d".into(), traversals: vec![trav("h", 1, 1)] });
        assert_eq!(validate_surface_description(&s), Err(Error::NotACycle("d".into())));
        assert!(matches!(validate_surface_description(&SurfaceDescription::default()), Err(Error::Empty(_))));
        let mut s = projective_plane();
        s.two_handles[0].traversals[0].weight = 3;
        assert!(matches!(validate_surface_description(&s), Err(Error::InvalidValue(_))));
    }

    #[test]
    fn euler_characteristic_matches_ranks() {
        let s = projective_plane();
        let c = build_cellular_complex(&s).unwrap();
        // Degrees -1..2 give -1 + 1 - 1 + 1 = 0 and 1 - chi = 1 - 1.
        assert_eq!(euler_characteristic(&s), 1);
        assert_eq!(-c.euler_characteristic(), 1 - euler_characteristic(&s));
    }
}
