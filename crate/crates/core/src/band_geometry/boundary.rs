//! Boundary components of a band surface and the surface framing of its boundary.
//!
//! Each slot of a disk has two corners, `W` and `E`. A band's left edge starts
//! at the `W` corner of its start slot and its right edge at the `E` corner.
//! At the end slot the edges arrive swapped (left edge at `E`) when the band
//! turns over an even number of times, and unswapped otherwise. The boundary
//! circle of a disk with `n` slots is cut by the corners into arcs: arc `a`
//! (for `1 <= a < n`) runs rightward from the `E` corner of slot `a - 1` to the
//! `W` corner of slot `a`, and arc 0 runs from the `E` corner of the last slot
//! around the bottom to the `W` corner of slot 0. A disk with no slots has a
//! single arc 0, a clockwise circle.
//!
//! Band edges are directed along the band and arcs along the directions above.
//! A component's canonical orientation runs along its least element, ordering
//! band edges first (by band, left before right) and then disk arcs.

use std::collections::BTreeMap;
use std::fmt;

use super::diagram::{BandDiagram, Resolved, ResolvedEvent};
use super::weighted::{linking_number, Crossing, Strand, WeightedDiagram};
use crate::error::{Error, Result};

/// The two edges of a band, looking along it from its start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn tag(self) -> &'static str {
        match self {
            Side::Left => "l",
            Side::Right => "r",
        }
    }
}

/// A piece of the boundary: an edge of a band or an arc of a disk boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryElement {
    BandEdge { band: usize, side: Side },
    DiskArc { disk: usize, arc: usize },
}

/// A boundary circle as a cyclic sequence of elements, each with its direction
/// (+1 along its reference direction) in the canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub elements: Vec<(BoundaryElement, i64)>,
}

impl BoundaryComponent {
    /// Direction of `e` in the canonical orientation, if `e` lies on this component.
    pub fn direction_of(&self, e: BoundaryElement) -> Option<i64> {
        self.elements.iter().find(|(x, _)| *x == e).map(|&(_, d)| d)
    }

    /// Human-readable list of the elements, e.g. `h.l m#1- h.r m#0`.
    pub fn describe(&self, b: &BandDiagram) -> String {
        self.elements
            .iter()
            .map(|&(e, d)| {
                let name = match e {
                    BoundaryElement::BandEdge { band, side } => format!("{}.{}", b.bands[band].id, side.tag()),
                    BoundaryElement::DiskArc { disk, arc } => format!("{}#{arc}", b.disks[disk]),
                };
                if d < 0 {
                    format!("{name}-")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Corner {
    W,
    E,
}

type CornerId = (usize, usize, Corner);

fn edge_corners(r: &Resolved, band: usize, side: Side) -> (CornerId, CornerId) {
    let b = &r.bands[band];
    let start = match side {
        Side::Left => Corner::W,
        Side::Right => Corner::E,
    };
    let end = match (side, b.flips_edges) {
        (Side::Left, false) | (Side::Right, true) => Corner::E,
        (Side::Left, true) | (Side::Right, false) => Corner::W,
    };
    ((b.start.0, b.start.1, start), (b.end.0, b.end.1, end))
}

fn arc_corners(r: &Resolved, disk: usize, arc: usize) -> Option<(CornerId, CornerId)> {
    let n = r.slots[disk].len();
    if n == 0 {
        return None;
    }
    Some(if arc == 0 {
        ((disk, n - 1, Corner::E), (disk, 0, Corner::W))
    } else {
        ((disk, arc - 1, Corner::E), (disk, arc, Corner::W))
    })
}

/// Arc of `disk` crossed by a pass through the given gap.
pub(crate) fn gap_arc(r: &Resolved, disk: usize, gap: usize) -> usize {
    if gap == r.slots[disk].len() {
        0
    } else {
        gap
    }
}

fn all_elements(r: &Resolved) -> Vec<BoundaryElement> {
    let mut out = Vec::new();
    for band in 0..r.bands.len() {
        out.push(BoundaryElement::BandEdge { band, side: Side::Left });
        out.push(BoundaryElement::BandEdge { band, side: Side::Right });
    }
    for (disk, slots) in r.slots.iter().enumerate() {
        for arc in 0..slots.len().max(1) {
            out.push(BoundaryElement::DiskArc { disk, arc });
        }
    }
    out
}

fn corners_of(r: &Resolved, e: BoundaryElement) -> Option<(CornerId, CornerId)> {
    match e {
        BoundaryElement::BandEdge { band, side } => Some(edge_corners(r, band, side)),
        BoundaryElement::DiskArc { disk, arc } => arc_corners(r, disk, arc),
    }
}

pub(crate) fn components_of(r: &Resolved) -> Vec<BoundaryComponent> {
    let elements = all_elements(r);
    // Every corner touches exactly one band edge and one disk arc.
    let mut at_corner: BTreeMap<CornerId, Vec<usize>> = BTreeMap::new();
    for (i, &e) in elements.iter().enumerate() {
        if let Some((a, b)) = corners_of(r, e) {
            at_corner.entry(a).or_default().push(i);
            at_corner.entry(b).or_default().push(i);
        }
    }
    let mut used = vec![false; elements.len()];
    let mut components = Vec::new();
    for first in 0..elements.len() {
        if used[first] {
            continue;
        }
        let mut walk = Vec::new();
        let mut current = first;
        let mut direction = 1;
        loop {
            used[current] = true;
            walk.push((elements[current], direction));
            let Some((from, to)) = corners_of(r, elements[current]) else { break };
            let exit = if direction > 0 { to } else { from };
            let next = at_corner[&exit].iter().copied().find(|&j| j != current).expect("corner has two elements");
            if next == first {
                break;
            }
            let (next_from, _) = corners_of(r, elements[next]).expect("element with corners");
            direction = if next_from == exit { 1 } else { -1 };
            current = next;
        }
        components.push(BoundaryComponent { elements: walk });
    }
    components
}

/// Boundary components, ordered by their least element.
pub fn boundary_components(b: &BandDiagram) -> Result<Vec<BoundaryComponent>> {
    Ok(components_of(&b.resolve()?))
}

/// Checks that an orientation choice has one ±1 per boundary component.
pub fn check_orientations(count: usize, orientations: &[i64]) -> Result<()> {
    if orientations.len() != count {
        return Err(Error::Orientation(format!(
            "{} orientations given for {count} boundary components",
            orientations.len()
        )));
    }
    if let Some(x) = orientations.iter().find(|x| x.abs() != 1) {
        return Err(Error::Orientation(format!("orientation {x} is not ±1")));
    }
    Ok(())
}

fn strand_name(prefix: char, e: BoundaryElement) -> String {
    match e {
        BoundaryElement::BandEdge { band, side } => format!("{prefix}:{band}:{side}"),
        BoundaryElement::DiskArc { disk, arc } => format!("{prefix}:disk:{disk}:{arc}"),
    }
}

/// The boundary link and its parallel copy pushed into the surface.
///
/// `orientations` holds one ±1 per boundary component, relative to the
/// canonical orientation. Only the components listed in `subset` are drawn
/// (all of them when `None`).
///
/// The returned pair is `(L, L^F)`; the parallel copy records the crossings
/// between the two.
pub fn boundary_link(
    b: &BandDiagram,
    orientations: &[i64],
    subset: Option<&[usize]>,
) -> Result<(WeightedDiagram, WeightedDiagram)> {
    let r = b.resolve()?;
    let components = components_of(&r);
    check_orientations(components.len(), orientations)?;
    let chosen: Vec<usize> = match subset {
        None => (0..components.len()).collect(),
        Some(s) => {
            if let Some(&bad) = s.iter().find(|&&i| i >= components.len()) {
                return Err(Error::Orientation(format!(
                    "boundary component {bad} does not exist ({} components)",
                    components.len()
                )));
            }
            s.to_vec()
        }
    };
    let mut direction: BTreeMap<BoundaryElement, i64> = BTreeMap::new();
    for &i in &chosen {
        for &(e, d) in &components[i].elements {
            direction.insert(e, d * orientations[i]);
        }
    }
    let strands = |prefix: char| -> Vec<Strand> {
        direction.iter().map(|(&e, &o)| Strand { id: strand_name(prefix, e), weight: 1, orientation: o }).collect()
    };
    let link = WeightedDiagram::new(strands('L'), Vec::new())?;

    let present = |e: &BoundaryElement| direction.contains_key(e);
    let mut crossings = Vec::new();
    let mut pair = |site: &str, over: BoundaryElement, over_set: char, under: BoundaryElement, sign: i64| {
        let under_set = if over_set == 'L' { 'F' } else { 'L' };
        if present(&over) && present(&under) {
            crossings.push(Crossing {
                site: site.to_string(),
                over: strand_name(over_set, over),
                under: strand_name(under_set, under),
                sign,
            });
        }
    };
    let edges = |band: usize| [Side::Left, Side::Right].map(|side| BoundaryElement::BandEdge { band, side });

    for (h, band) in r.bands.iter().enumerate() {
        for (k, event) in band.events.iter().enumerate() {
            match *event {
                ResolvedEvent::HalfTwist { sign, .. } => {
                    let site = format!("twist:{h}:{k}");
                    for e in edges(h) {
                        for f in edges(h) {
                            pair(&site, e, 'L', f, sign);
                        }
                    }
                }
                ResolvedEvent::RibbonPass { disk, config, gap, entry, .. } => {
                    let site = format!("pass:{h}:{k}");
                    for e in edges(h) {
                        for f in edges(h) {
                            pair(&site, e, 'L', f, config.edge_twist());
                        }
                    }
                    let arc = BoundaryElement::DiskArc { disk, arc: gap_arc(&r, disk, gap) };
                    let front = format!("{site}:front");
                    let back = format!("{site}:back");
                    for e in edges(h) {
                        for set in ['L', 'F'] {
                            pair(&front, e, set, arc, entry.sign());
                            pair(&back, arc, set, e, entry.sign());
                        }
                    }
                }
            }
        }
    }
    for x in &r.crossings {
        let site = format!("cross:{}", x.id);
        for e in edges(x.over.0) {
            for f in edges(x.under.0) {
                pair(&site, e, 'L', f, x.sign);
                pair(&site, e, 'F', f, x.sign);
            }
        }
    }
    let parallel = WeightedDiagram::new(strands('F'), crossings)?;
    Ok((link, parallel))
}

/// `lk(L, L^F)` for the boundary (or a subset of its components).
pub fn boundary_parallel_linking(b: &BandDiagram, orientations: &[i64], subset: Option<&[usize]>) -> Result<i64> {
    let (link, parallel) = boundary_link(b, orientations, subset)?;
    linking_number(&link, &parallel)
}

#[cfg(test)]
mod tests {
    use super::super::diagram::tests::{band, cross, pass, single_band, slot, twists};
    use super::super::diagram::{Config, Entry};
    use super::*;

    fn edge(band: usize, side: Side) -> BoundaryElement {
        BoundaryElement::BandEdge { band, side }
    }

    fn arc(disk: usize, arc: usize) -> BoundaryElement {
        BoundaryElement::DiskArc { disk, arc }
    }

    #[test]
    fn lone_disk_is_a_circle() {
        let b = BandDiagram { disks: vec!["m".into()], bands: vec![] };
        let c = boundary_components(&b).unwrap();
        assert_eq!(c, vec![BoundaryComponent { elements: vec![(arc(0, 0), 1)] }]);
        assert_eq!(boundary_parallel_linking(&b, &[1], None).unwrap(), 0);
    }

    #[test]
    fn untwisted_band_gives_two_circles() {
        let c = boundary_components(&single_band(vec![])).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].elements, vec![(edge(0, Side::Left), 1), (arc(0, 0), 1)]);
        assert_eq!(c[1].elements, vec![(edge(0, Side::Right), 1), (arc(0, 1), -1)]);
    }

    #[test]
    fn mobius_band_has_one_circle() {
        let b = single_band(twists(1, 1));
        let c = boundary_components(&b).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(
            c[0].elements,
            vec![(edge(0, Side::Left), 1), (arc(0, 1), -1), (edge(0, Side::Right), 1), (arc(0, 0), 1)]
        );
        assert_eq!(c[0].describe(&b), "h.l m#1- h.r m#0");
    }

    #[test]
    fn twisted_band_framing_is_twice_the_twisting() {
        // Even twisting gives two parallel components, both canonically
        // oriented along the band.
        for k in 1..6 {
            let ones = vec![1; 2 - k % 2];
            assert_eq!(boundary_parallel_linking(&single_band(twists(1, k)), &ones, None).unwrap(), 2 * k as i64);
            assert_eq!(boundary_parallel_linking(&single_band(twists(-1, k)), &ones, None).unwrap(), -2 * k as i64);
        }
    }

    #[test]
    fn hopf_band_orientations() {
        let b = single_band(twists(1, 2));
        assert_eq!(boundary_parallel_linking(&b, &[1, 1], None).unwrap(), 4);
        assert_eq!(boundary_parallel_linking(&b, &[1, -1], None).unwrap(), 0);
        assert_eq!(boundary_parallel_linking(&b, &[1, 1], Some(&[0])).unwrap(), 1);
        assert!(matches!(boundary_parallel_linking(&b, &[1], None), Err(Error::Orientation(_))));
        assert!(matches!(boundary_parallel_linking(&b, &[1, 2], None), Err(Error::Orientation(_))));
    }

    #[test]
    fn projective_plane_boundaries() {
        let positive = single_band(vec![pass("m", Config::R, 1, Entry::Back)]);
        assert_eq!(boundary_parallel_linking(&positive, &[1], None).unwrap(), 2);
        let negative = single_band(vec![pass("m", Config::L, 1, Entry::Front)]);
        assert_eq!(boundary_parallel_linking(&negative, &[1], None).unwrap(), -2);
    }

    #[test]
    fn crossing_bands_contribute_product_of_edge_sums() {
        let b = BandDiagram {
            disks: vec!["m".into()],
            bands: vec![
                band("a", slot("m", 0), slot("m", 2), vec![cross("x", "b", true, 1)]),
                band("b", slot("m", 1), slot("m", 3), vec![cross("x", "a", false, 1)]),
            ],
        };
        let c = boundary_components(&b).unwrap();
        let o = |e| c.iter().find_map(|comp| comp.direction_of(e)).unwrap();
        let sum_a = o(edge(0, Side::Left)) + o(edge(0, Side::Right));
        let sum_b = o(edge(1, Side::Left)) + o(edge(1, Side::Right));
        assert_eq!(boundary_parallel_linking(&b, &[1], None).unwrap(), sum_a * sum_b);
    }
}
