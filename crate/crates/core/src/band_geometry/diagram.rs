//! Band diagrams in preferred position and their validation.
//!
//! Disks (0-handles) sit on a horizontal line; bands leave the top of the
//! disks at numbered slots and run above them. Along its core a band may twist,
//! cross another band (or itself), or pass through a disk. A pass through a
//! disk is drawn as a fold: the band comes down in front of the disk, goes
//! through it, and climbs back up behind it, slightly offset sideways.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ids::{check_sign, IdIndex};
use crate::surface_model::{OneHandle, SurfaceDescription};

/// Which side the front piece of a fold lies on, seen from the viewer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Config {
    /// The piece in front of the disk is left of the piece behind it.
    L,
    /// The piece in front of the disk is right of the piece behind it.
    R,
}

impl Config {
    /// Contribution of one pass to the self-pairing of the band's generator.
    pub fn pairing_contribution(self) -> i64 {
        match self {
            Config::L => -1,
            Config::R => 1,
        }
    }

    /// Sign of the crossings between the two edges of the band at the fold,
    /// both edges oriented along the band.
    pub fn edge_twist(self) -> i64 {
        -self.pairing_contribution()
    }
}

/// Which piece of a fold the band reaches first when followed from its start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Front,
    Back,
}

impl Entry {
    /// +1 when the band reaches the front piece first.
    pub fn sign(self) -> i64 {
        match self {
            Entry::Front => 1,
            Entry::Back => -1,
        }
    }
}

/// Something that happens along a band core, in order from its start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BandEvent {
    /// A half twist; the sign is that of the crossing of the two band edges
    /// when both are oriented along the band.
    HalfTwist { sign: i64 },
    /// One side of a crossing with another band or with itself. Both sides of
    /// a crossing carry the same `id` and `sign`, and opposite `over` flags.
    /// The sign is taken with both bands oriented from start to end.
    Cross { id: String, band: String, over: bool, sign: i64 },
    /// A pass through a disk. `gap` counts the slots of that disk to the left
    /// of the pass; `entry` says which piece of the fold comes first.
    RibbonPass { disk: String, config: Config, gap: usize, entry: Entry },
}

/// A position on top of a disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub disk: String,
    pub position: i64,
}

/// A band with its end slots and events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    pub id: String,
    pub start: Slot,
    pub end: Slot,
    pub events: Vec<BandEvent>,
}

/// Band presentation of a ribbon-immersed surface.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BandDiagram {
    pub disks: Vec<String>,
    pub bands: Vec<Band>,
}

/// Which end of a band occupies a slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    Start,
    Finish,
}

/// A crossing between two band segments, with the sign for reference directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CrossSite {
    pub id: String,
    pub over: (usize, usize),
    pub under: (usize, usize),
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum ResolvedEvent {
    HalfTwist { sign: i64, segment: usize },
    RibbonPass { disk: usize, config: Config, gap: usize, entry: Entry, segment: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ResolvedBand {
    /// (disk, slot rank on that disk).
    pub start: (usize, usize),
    pub end: (usize, usize),
    pub events: Vec<ResolvedEvent>,
    pub passes: usize,
    /// Half twists plus passes, modulo 2.
    pub flips_edges: bool,
    pub pass_disks: Vec<usize>,
}

/// One side of a crossing as listed on a band: (band, other band, segment, over, sign).
type CrossSide = (usize, usize, usize, bool, i64);

/// A band diagram with every reference turned into a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Resolved {
    pub bands: Vec<ResolvedBand>,
    /// Per disk, the band ends occupying its slots from left to right.
    pub slots: Vec<Vec<(usize, End)>>,
    pub crossings: Vec<CrossSite>,
}

/// Direction of disoriented segment `k` relative to the band direction.
pub(crate) fn segment_direction(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl BandDiagram {
    pub(crate) fn resolve(&self) -> Result<Resolved> {
        if self.disks.is_empty() {
            return Err(Error::Empty("a band diagram needs at least one disk".into()));
        }
        let disks = IdIndex::build("disk", self.disks.iter().map(String::as_str))?;
        let bands = IdIndex::build("band", self.bands.iter().map(|b| b.id.as_str()))?;

        let mut by_position: Vec<BTreeMap<i64, (usize, End)>> = vec![BTreeMap::new(); self.disks.len()];
        let mut ends = Vec::new();
        for (h, band) in self.bands.iter().enumerate() {
            let mut place = |slot: &Slot, end: End| -> Result<usize> {
                let d = disks.get(&slot.disk, || format!("band `{}`", band.id))?;
                if by_position[d].insert(slot.position, (h, end)).is_some() {
                    return Err(Error::BandDiagram(format!(
                        "slot {} of disk `{}` is used twice",
                        slot.position, slot.disk
                    )));
                }
                Ok(d)
            };
            let s = place(&band.start, End::Start)?;
            let e = place(&band.end, End::Finish)?;
            ends.push((s, e));
        }
        let slots: Vec<Vec<(usize, End)>> = by_position.into_iter().map(|m| m.into_values().collect()).collect();
        let rank_of = |d: usize, h: usize, end: End| {
            slots[d].iter().position(|&(b, e)| b == h && e == end).expect("slot was placed")
        };

        let mut resolved_bands = Vec::new();
        let mut cross_sides: BTreeMap<String, Vec<CrossSide>> = BTreeMap::new();
        for (h, band) in self.bands.iter().enumerate() {
            let mut events = Vec::new();
            let mut segment = 0;
            let mut half_twists = 0;
            let mut pass_disks = Vec::new();
            for event in &band.events {
                match event {
                    BandEvent::HalfTwist { sign } => {
                        let sign = check_sign(*sign, || format!("half twist on band `{}`", band.id))?;
                        events.push(ResolvedEvent::HalfTwist { sign, segment });
                        half_twists += 1;
                    }
                    BandEvent::Cross { id, band: other, over, sign } => {
                        let sign = check_sign(*sign, || format!("crossing `{id}` on band `{}`", band.id))?;
                        let o = bands.get(other, || format!("crossing `{id}` on band `{}`", band.id))?;
                        cross_sides.entry(id.clone()).or_default().push((h, o, segment, *over, sign));
                    }
                    BandEvent::RibbonPass { disk, config, gap, entry } => {
                        let d = disks.get(disk, || format!("ribbon pass on band `{}`", band.id))?;
                        if *gap > slots[d].len() {
                            return Err(Error::BandDiagram(format!(
                                "ribbon pass of band `{}` uses gap {gap}, but disk `{disk}` has {} slots",
                                band.id,
                                slots[d].len()
                            )));
                        }
                        events.push(ResolvedEvent::RibbonPass {
                            disk: d,
                            config: *config,
                            gap: *gap,
                            entry: *entry,
                            segment,
                        });
                        pass_disks.push(d);
                        segment += 1;
                    }
                }
            }
            let (s, e) = ends[h];
            resolved_bands.push(ResolvedBand {
                start: (s, rank_of(s, h, End::Start)),
                end: (e, rank_of(e, h, End::Finish)),
                events,
                passes: segment,
                flips_edges: (half_twists + segment) % 2 == 1,
                pass_disks,
            });
        }

        let mut crossings = Vec::new();
        for (id, sides) in cross_sides {
            let [a, b] = sides.as_slice() else {
                return Err(Error::BandDiagram(format!(
                    "crossing `{id}` must appear exactly twice, found {} sides",
                    sides.len()
                )));
            };
            if a.1 != b.0 || b.1 != a.0 {
                return Err(Error::BandDiagram(format!("the two sides of crossing `{id}` do not refer to each other")));
            }
            if a.3 == b.3 {
                return Err(Error::BandDiagram(format!("crossing `{id}` needs one over side and one under side")));
            }
            if a.4 != b.4 {
                return Err(Error::BandDiagram(format!("the two sides of crossing `{id}` disagree on the sign")));
            }
            let (over, under) = if a.3 { (a, b) } else { (b, a) };
            crossings.push(CrossSite { id: id.clone(), over: (over.0, over.2), under: (under.0, under.2), sign: a.4 });
        }
        Ok(Resolved { bands: resolved_bands, slots, crossings })
    }

    /// Checks references, slots, signs and crossing reciprocity.
    pub fn validate(&self) -> Result<()> {
        self.resolve().map(|_| ())
    }

    /// Whether any band passes through a disk.
    pub fn has_ribbon_passes(&self) -> bool {
        self.bands.iter().any(|b| b.events.iter().any(|e| matches!(e, BandEvent::RibbonPass { .. })))
    }

    /// The handle description of the same surface: disks become 0-handles and
    /// bands become 1-handles whose disoriented core starts away from the start disk.
    pub fn surface_description(&self) -> Result<SurfaceDescription> {
        self.validate()?;
        let one_handles = self
            .bands
            .iter()
            .map(|b| OneHandle {
                id: b.id.clone(),
                start: b.start.disk.clone(),
                end: b.end.disk.clone(),
                ribbon_word: b
                    .events
                    .iter()
                    .filter_map(|e| match e {
                        BandEvent::RibbonPass { disk, .. } => Some(disk.clone()),
                        _ => None,
                    })
                    .collect(),
                disorientation: 1,
            })
            .collect();
        Ok(SurfaceDescription { zero_handles: self.disks.clone(), one_handles, two_handles: Vec::new() })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn slot(disk: &str, position: i64) -> Slot {
        Slot { disk: disk.into(), position }
    }

    pub(crate) fn band(id: &str, start: Slot, end: Slot, events: Vec<BandEvent>) -> Band {
        Band { id: id.into(), start, end, events }
    }

    pub(crate) fn twists(sign: i64, count: usize) -> Vec<BandEvent> {
        vec![BandEvent::HalfTwist { sign }; count]
    }

    pub(crate) fn cross(id: &str, other: &str, over: bool, sign: i64) -> BandEvent {
        BandEvent::Cross { id: id.into(), band: other.into(), over, sign }
    }

    pub(crate) fn pass(disk: &str, config: Config, gap: usize, entry: Entry) -> BandEvent {
        BandEvent::RibbonPass { disk: disk.into(), config, gap, entry }
    }

    /// One disk and one band with the given events, from slot 0 to slot 1.
    pub(crate) fn single_band(events: Vec<BandEvent>) -> BandDiagram {
        BandDiagram { disks: vec!["m".into()], bands: vec![band("h", slot("m", 0), slot("m", 1), events)] }
    }

    #[test]
    fn crossing_sides_must_match() {
        let mut d = BandDiagram {
            disks: vec!["m".into()],
            bands: vec![
                band("a", slot("m", 0), slot("m", 2), vec![cross("x", "b", true, 1)]),
                band("b", slot("m", 1), slot("m", 3), vec![cross("x", "a", false, 1)]),
            ],
        };
        let r = d.resolve().unwrap();
        assert_eq!(r.crossings[0].over, (0, 0));
        assert_eq!(r.crossings[0].under, (1, 0));

        d.bands[1].events = vec![cross("x", "a", true, 1)];
        assert!(matches!(d.validate(), Err(Error::BandDiagram(_))));
        d.bands[1].events = vec![cross("x", "a", false, -1)];
        assert!(matches!(d.validate(), Err(Error::BandDiagram(_))));
        d.bands[1].events = vec![];
        assert!(matches!(d.validate(), Err(Error::BandDiagram(_))));
    }

    #[test]
    fn self_crossing_is_allowed() {
        let d = single_band(vec![
            cross("x", "h", true, 1),
            pass("m", Config::L, 1, Entry::Front),
            cross("x", "h", false, 1),
        ]);
        let r = d.resolve().unwrap();
        assert_eq!(r.crossings[0].over, (0, 0));
        assert_eq!(r.crossings[0].under, (0, 1));
    }

    #[test]
    fn slots_must_be_distinct_and_gaps_in_range() {
        let d = BandDiagram { disks: vec!["m".into()], bands: vec![band("h", slot("m", 0), slot("m", 0), vec![])] };
        assert!(matches!(d.validate(), Err(Error::BandDiagram(_))));
        let d = single_band(vec![pass("m", Config::R, 3, Entry::Back)]);
        assert!(matches!(d.validate(), Err(Error::BandDiagram(_))));
        let d = single_band(vec![pass("q", Config::R, 0, Entry::Back)]);
        assert!(matches!(d.validate(), Err(Error::DanglingId { .. })));
    }

    #[test]
    fn slot_ranks_follow_positions() {
        let d = BandDiagram { disks: vec!["m".into()], bands: vec![band("h", slot("m", 10), slot("m", -4), vec![])] };
        let r = d.resolve().unwrap();
        assert_eq!(r.bands[0].start, (0, 1));
        assert_eq!(r.bands[0].end, (0, 0));
    }

    #[test]
    fn handle_description_lists_passes() {
        let d = single_band(vec![BandEvent::HalfTwist { sign: 1 }, pass("m", Config::R, 1, Entry::Back)]);
        let s = d.surface_description().unwrap();
        assert_eq!(s.one_handles[0].ribbon_word, vec!["m".to_string()]);
    }
}
