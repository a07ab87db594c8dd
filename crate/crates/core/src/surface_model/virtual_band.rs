//! Cut surfaces, virtual bands and the two-term virtual-band complex.
//!
//! Cutting a ribbon surface along the preimage arc of every ribbon
//! singularity splits each 1-handle with `k > 0` singularities into `k + 1`
//! pieces. The two end pieces stay attached to the 0-handles at the ends of the
//! core; the `k - 1` middle pieces are free rectangles (disks with two cuts).
//! Virtual bands are extra embedded bands attached to cut components; the
//! complex they define is `Z^{generators} -> Z^{bands}`, the boundary recording
//! how often each generator runs over each band.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{first_boundary, resolve, RibbonDescription};
use crate::chain_core::{DisorientedComplex, IntMatrix};
use crate::error::{Error, Result};
use crate::ids::{check_sign, IdIndex};

/// Reference to a component of the cut surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentRef {
    /// The component containing this 0-handle.
    ZeroHandle(String),
    /// Middle piece `piece` of a 1-handle, counted from 1 along the core
    /// (piece `i` lies between the `i`-th and `(i+1)`-th ribbon singularity).
    BandPiece { one_handle: String, piece: usize },
}

/// A virtual band joining two cut components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualBand {
    pub id: String,
    pub attaches: (ComponentRef, ComponentRef),
    pub orientation: i64,
}

/// A collection of virtual bands.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VirtualBandSet {
    pub bands: Vec<VirtualBand>,
}

/// Signed number of times a generator runs over a virtual band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassingCount {
    pub generator: String,
    pub band: String,
    pub count: i64,
}

/// Virtual bands together with the generators of the enlarged surface and
/// their passing counts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VirtualBandData {
    pub bands: VirtualBandSet,
    pub generators: Vec<String>,
    pub counts: Vec<PassingCount>,
}

/// One component of the cut surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutComponent {
    /// Human-readable name: the smallest 0-handle id, or `h#i` for a middle piece.
    pub label: String,
    /// Positions of the 0-handles in this component (empty for middle pieces).
    pub zero_handles: Vec<usize>,
    /// Euler characteristic of the component.
    pub euler_characteristic: i64,
    /// Number of cuts on its boundary.
    pub cuts: usize,
    /// Whether it contains the interior arc of some ribbon singularity.
    pub has_interior_arc: bool,
}

impl CutComponent {
    /// Whether the component is a disk with exactly two cuts on its boundary.
    pub fn is_disk_with_two_cuts(&self) -> bool {
        self.euler_characteristic == 1 && self.cuts == 2
    }
}

/// The cut surface of a ribbon description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSurface {
    pub components: Vec<CutComponent>,
    /// Component index of each 0-handle.
    zero_handle_component: Vec<usize>,
    /// Component index of each middle piece, keyed by (1-handle position, piece).
    pieces: BTreeMap<(usize, usize), usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Splits a ribbon description into its cut components.
///
/// Components containing 0-handles come first, ordered by their first
/// 0-handle; middle pieces follow in 1-handle order.
pub fn cut_surface(r: &RibbonDescription) -> Result<CutSurface> {
    let s = r.surface();
    let resolved = resolve(s)?;
    let n = s.zero_handles.len();
    let mut uf = UnionFind::new(n);
    for path in &resolved.paths {
        if path.len() == 2 {
            uf.union(path[0], path[1]);
        }
    }
    let mut root_to_component = BTreeMap::new();
    let mut components: Vec<CutComponent> = Vec::new();
    let mut zero_handle_component = vec![0; n];
    for m in 0..n {
        let root = uf.find(m);
        let idx = *root_to_component.entry(root).or_insert_with(|| {
            components.push(CutComponent {
                label: s.zero_handles[m].clone(),
                zero_handles: Vec::new(),
                euler_characteristic: 0,
                cuts: 0,
                has_interior_arc: false,
            });
            components.len() - 1
        });
        zero_handle_component[m] = idx;
        components[idx].zero_handles.push(m);
        components[idx].euler_characteristic += 1;
    }
    let mut pieces = BTreeMap::new();
    for (h, path) in resolved.paths.iter().enumerate() {
        let (start, end) = (path[0], path[path.len() - 1]);
        if path.len() == 2 {
            components[zero_handle_component[start]].euler_characteristic -= 1;
            continue;
        }
        components[zero_handle_component[start]].cuts += 1;
        components[zero_handle_component[end]].cuts += 1;
        for &arc in &path[1..path.len() - 1] {
            components[zero_handle_component[arc]].has_interior_arc = true;
        }
        let singularities = path.len() - 2;
        for piece in 1..singularities {
            components.push(CutComponent {
                label: format!("{}#{piece}", s.one_handles[h].id),
                zero_handles: Vec::new(),
                euler_characteristic: 1,
                cuts: 2,
                has_interior_arc: false,
            });
            pieces.insert((h, piece), components.len() - 1);
        }
    }
    Ok(CutSurface { components, zero_handle_component, pieces })
}

impl CutSurface {
    fn locate(&self, r: &RibbonDescription, c: &ComponentRef, band: &str) -> Result<usize> {
        let s = r.surface();
        let ctx = || format!("virtual band `{band}`");
        match c {
            ComponentRef::ZeroHandle(id) => {
                let zeros = IdIndex::build("0-handle", s.zero_handles.iter().map(String::as_str))?;
                Ok(self.zero_handle_component[zeros.get(id, ctx)?])
            }
            ComponentRef::BandPiece { one_handle, piece } => {
                let ones = IdIndex::build("1-handle", s.one_handles.iter().map(|h| h.id.as_str()))?;
                let h = ones.get(one_handle, ctx)?;
                self.pieces.get(&(h, *piece)).copied().ok_or_else(|| {
                    Error::VirtualBands(format!(
                        "1-handle `{one_handle}` has no middle piece {piece} (referenced by `{band}`)"
                    ))
                })
            }
        }
    }
}

/// Checks the three attachment conditions and returns, for each band, the
/// pair of component indices it joins.
///
/// 1. Every component that is not a disk with two cuts carries a band.
/// 2. Every component containing an interior arc carries a band.
/// 3. The graph of touched components and bands is connected.
///
/// Bands are only needed when the cut surface is disconnected, so an empty
/// set is accepted for a connected cut surface.
pub fn check_virtual_bands(r: &RibbonDescription, v: &VirtualBandSet) -> Result<Vec<(usize, usize)>> {
    let cut = cut_surface(r)?;
    if v.bands.is_empty() && cut.components.len() == 1 {
        return Ok(Vec::new());
    }
    IdIndex::build("virtual band", v.bands.iter().map(|b| b.id.as_str()))?;
    let mut ends = Vec::new();
    let mut touched = BTreeSet::new();
    for b in &v.bands {
        check_sign(b.orientation, || format!("orientation of virtual band `{}`", b.id))?;
        let a = cut.locate(r, &b.attaches.0, &b.id)?;
        let c = cut.locate(r, &b.attaches.1, &b.id)?;
        touched.insert(a);
        touched.insert(c);
        ends.push((a, c));
    }
    for (i, comp) in cut.components.iter().enumerate() {
        if touched.contains(&i) {
            continue;
        }
        if !comp.is_disk_with_two_cuts() {
            return Err(Error::VirtualBands(format!(
                "cut component `{}` is not a disk with two cuts and carries no virtual band",
                comp.label
            )));
        }
        if comp.has_interior_arc {
            return Err(Error::VirtualBands(format!(
                "cut component `{}` contains an interior arc and carries no virtual band",
                comp.label
            )));
        }
    }
    if let Some(&first) = touched.iter().next() {
        let mut uf = UnionFind::new(cut.components.len());
        for &(a, c) in &ends {
            uf.union(a, c);
        }
        let root = uf.find(first);
        if touched.iter().any(|&t| uf.find(t) != root) {
            return Err(Error::VirtualBands("the graph of virtual bands is not connected".into()));
        }
    }
    Ok(ends)
}

/// First Betti number of the abstract surface obtained by adding the bands.
fn enlarged_betti(r: &RibbonDescription, cut: &CutSurface, ends: &[(usize, usize)]) -> Result<usize> {
    let s = r.surface();
    let resolved = resolve(s)?;
    let n = s.zero_handles.len();
    let mut uf = UnionFind::new(n);
    for path in &resolved.paths {
        uf.union(path[0], path[path.len() - 1]);
    }
    // A middle piece lies in the abstract component of its 1-handle's start.
    let mut anchor = vec![0; cut.components.len()];
    for (m, &c) in cut.zero_handle_component.iter().enumerate() {
        anchor[c] = m;
    }
    for (&(h, _), &c) in &cut.pieces {
        anchor[c] = resolved.paths[h][0];
    }
    for &(a, c) in ends {
        uf.union(anchor[a], anchor[c]);
    }
    let components = (0..n).filter(|&m| uf.find(m) == m).count();
    let betti = components as i64 - n as i64 + s.one_handles.len() as i64 + ends.len() as i64;
    Ok(betti as usize)
}

/// The two-term complex `Z^{generators} -> Z^{bands}` on degrees `[0, 1]`.
///
/// The number of generators must equal the first Betti number of the surface
/// with the virtual bands added; counts not listed are zero.
pub fn build_virtual_band_complex(
    r: &RibbonDescription,
    v: &VirtualBandSet,
    generators: &[String],
    counts: &[PassingCount],
) -> Result<DisorientedComplex> {
    let ends = check_virtual_bands(r, v)?;
    let cut = cut_surface(r)?;
    let expected = enlarged_betti(r, &cut, &ends)?;
    if generators.len() != expected {
        return Err(Error::VirtualBands(format!(
            "the enlarged surface has {expected} generators, {} listed",
            generators.len()
        )));
    }
    let gens = IdIndex::build("generator", generators.iter().map(String::as_str))?;
    let bands = IdIndex::build("virtual band", v.bands.iter().map(|b| b.id.as_str()))?;
    let mut boundary = IntMatrix::zeros(v.bands.len(), generators.len());
    for c in counts {
        let ctx = || "a passing count".to_string();
        let g = gens.get(&c.generator, ctx)?;
        let b = bands.get(&c.band, ctx)?;
        let value = boundary.get(b, g) + BigInt::from(c.count);
        boundary.set(b, g, value);
    }
    DisorientedComplex::new(
        0,
        vec![v.bands.iter().map(|b| b.id.clone()).collect(), generators.to_vec()],
        vec![boundary],
    )
}

/// Standard choice of virtual bands: one band from every other 0-handle to
/// the first one, oriented toward the first. The generators are the 1-handle
/// cores, and a core runs over the band of `m_i` as often as `m_i` appears in
/// its cellular boundary.
pub fn star_virtual_bands(r: &RibbonDescription) -> Result<VirtualBandData> {
    let s = r.surface();
    let resolved = resolve(s)?;
    let d1 = first_boundary(s, &resolved)?;
    let first = &s.zero_handles[0];
    let mut data = VirtualBandData::default();
    for (i, m) in s.zero_handles.iter().enumerate().skip(1) {
        let band = format!("v[{m}]");
        data.bands.bands.push(VirtualBand {
            id: band.clone(),
            attaches: (ComponentRef::ZeroHandle(m.clone()), ComponentRef::ZeroHandle(first.clone())),
            orientation: 1,
        });
        for (j, h) in s.one_handles.iter().enumerate() {
            let count = d1.get(i, j);
            if count != &BigInt::from(0) {
                data.counts.push(PassingCount {
                    generator: h.id.clone(),
                    band: band.clone(),
                    count: i64::try_from(count).map_err(|_| Error::InvalidValue("count overflow".into()))?,
                });
            }
        }
    }
    data.generators = s.one_handles.iter().map(|h| h.id.clone()).collect();
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{one, virtual_band_example};
    use super::super::{surface_homology, SurfaceDescription};
    use super::*;
    use crate::chain_core::AbelianGroup;

    fn example() -> RibbonDescription {
        RibbonDescription::new(virtual_band_example()).unwrap()
    }

    fn band(id: &str, a: ComponentRef, b: ComponentRef) -> VirtualBand {
        VirtualBand { id: id.into(), attaches: (a, b), orientation: 1 }
    }

    fn zero(id: &str) -> ComponentRef {
        ComponentRef::ZeroHandle(id.into())
    }

    #[test]
    fn cut_surface_of_example() {
        let cut = cut_surface(&example()).unwrap();
        assert_eq!(cut.components.len(), 2);
        assert!(cut.components[0].is_disk_with_two_cuts());
        assert!(!cut.components[0].has_interior_arc);
        assert!(cut.components[1].has_interior_arc);
        assert_eq!(cut.components[1].cuts, 0);
    }

    #[test]
    fn example_has_boundary_two() {
        let v = VirtualBandSet { bands: vec![band("V", zero("m2"), zero("m1"))] };
        let counts = vec![PassingCount { generator: "g".into(), band: "V".into(), count: 2 }];
        let c = build_virtual_band_complex(&example(), &v, &["g".into()], &counts).unwrap();
        assert_eq!(c.boundary(1).unwrap().unwrap(), &IntMatrix::from_rows(&[[2i64]]).unwrap());
        assert!(c.homology_at(1).unwrap().is_trivial());
        assert_eq!(c.homology_at(0).unwrap().to_string(), "Z/2");
    }

    #[test]
    fn generator_without_crossings_is_a_cycle() {
        let v = VirtualBandSet { bands: vec![band("V", zero("m2"), zero("m1"))] };
        let c = build_virtual_band_complex(&example(), &v, &["g".into()], &[]).unwrap();
        assert_eq!(c.homology_at(1).unwrap(), AbelianGroup::free(1));
    }

    #[test]
    fn disk_without_bands_gives_zero_complex() {
        let disk = RibbonDescription::new(SurfaceDescription { zero_handles: vec!["m".into()], ..Default::default() })
            .unwrap();
        let c = build_virtual_band_complex(&disk, &VirtualBandSet::default(), &[], &[]).unwrap();
        assert!(c.homology_at(0).unwrap().is_trivial());
        assert!(c.homology_at(1).unwrap().is_trivial());
        // A loop band on the disk adds one generator running over it once.
        let v = VirtualBandSet { bands: vec![band("V", zero("m"), zero("m"))] };
        let counts = vec![PassingCount { generator: "loop".into(), band: "V".into(), count: 1 }];
        let c = build_virtual_band_complex(&disk, &v, &["loop".into()], &counts).unwrap();
        assert!(c.homology_at(0).unwrap().is_trivial());
        assert!(build_virtual_band_complex(&disk, &v, &[], &[]).is_err());
    }

    #[test]
    fn missing_band_on_interior_arc_is_rejected() {
        let err = build_virtual_band_complex(&example(), &VirtualBandSet::default(), &[], &[]);
        assert!(matches!(err, Err(Error::VirtualBands(_))));
    }

    #[test]
    fn disconnected_band_graph_is_rejected() {
        let s =
            SurfaceDescription { zero_handles: vec!["a".into(), "b".into()], one_handles: vec![], two_handles: vec![] };
        let r = RibbonDescription::new(s).unwrap();
        let v = VirtualBandSet { bands: vec![band("A", zero("a"), zero("a")), band("B", zero("b"), zero("b"))] };
        assert!(matches!(check_virtual_bands(&r, &v), Err(Error::VirtualBands(_))));
    }

    #[test]
    fn middle_pieces_are_addressable() {
        let s = SurfaceDescription {
            zero_handles: vec!["m".into(), "n".into()],
            one_handles: vec![one("h", "m", "m", &["n", "n", "n"], 1)],
            two_handles: vec![],
        };
        let r = RibbonDescription::new(s).unwrap();
        let cut = cut_surface(&r).unwrap();
        assert_eq!(cut.components.len(), 4);
        assert_eq!(cut.components[2].label, "h#1");
        let v = VirtualBandSet {
            bands: vec![
                band("A", zero("n"), zero("m")),
                band("B", ComponentRef::BandPiece { one_handle: "h".into(), piece: 2 }, zero("n")),
            ],
        };
        assert_eq!(check_virtual_bands(&r, &v).unwrap(), vec![(1, 0), (3, 1)]);
        let bad = VirtualBandSet {
            bands: vec![band("A", ComponentRef::BandPiece { one_handle: "h".into(), piece: 3 }, zero("n"))],
        };
        assert!(matches!(check_virtual_bands(&r, &bad), Err(Error::VirtualBands(_))));
    }

    #[test]
    fn star_bands_reproduce_cellular_homology() {
        let r = example();
        let data = star_virtual_bands(&r).unwrap();
        let c = build_virtual_band_complex(&r, &data.bands, &data.generators, &data.counts).unwrap();
        let cellular = surface_homology(r.surface()).unwrap();
        assert_eq!(c.homology_at(1).unwrap(), cellular.dh1);
        assert_eq!(c.homology_at(0).unwrap(), cellular.dh0);
    }
}
