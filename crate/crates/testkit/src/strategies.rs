//! Proptest strategies for random library inputs.
//!
//! Structured inputs are built from a vector of raw numbers, so that shrinking
//! the vector toward zeros shrinks the input toward small, simple diagrams.

use braco_core::band_geometry::{Band, BandDiagram, BandEvent, Config, Crossing, Entry, Slot, Strand, WeightedDiagram};
use braco_core::chain_core::{kernel_basis, IntMatrix};
use braco_core::surface_model::{build_cellular_complex, OneHandle, SurfaceDescription, Traversal, TwoHandle};
use braco_core::tangle_model::{BridgeDiagram, Overbridge, Underbridge};
use num_bigint::BigInt;
use proptest::prelude::*;

use crate::braid::Braid;
use crate::linalg::Matrix;

/// Reads choices from a vector of raw numbers, wrapping around at the end.
pub struct Draw<'a> {
    source: &'a [u32],
    at: usize,
}

impl<'a> Draw<'a> {
    pub fn new(source: &'a [u32]) -> Self {
        Draw { source, at: 0 }
    }

    /// A number in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        let v = if self.source.is_empty() { 0 } else { self.source[self.at % self.source.len()] };
        self.at += 1;
        v as usize % n
    }

    /// A number in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn sign(&mut self) -> i64 {
        if self.below(2) == 0 {
            1
        } else {
            -1
        }
    }
}

fn raw(len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..10_000, len)
}

/// A bridge diagram with 1 to 5 underbridges and up to 6 overbridges.
pub fn bridge_diagram() -> impl Strategy<Value = BridgeDiagram> {
    raw(60).prop_map(|r| build_bridge_diagram(&mut Draw::new(&r)))
}

pub fn build_bridge_diagram(d: &mut Draw) -> BridgeDiagram {
    let u = d.range(1, 5);
    let o = d.range(0, 6);
    let name = |i: usize| format!("u{i}");
    BridgeDiagram {
        underbridges: (0..u).map(|i| Underbridge { id: name(i), endpoints: None }).collect(),
        overbridges: (0..o)
            .map(|k| Overbridge {
                id: format!("o{k}"),
                start: name(d.below(u)),
                crossings: (0..d.range(0, 3)).map(|_| name(d.below(u))).collect(),
                end: name(d.below(u)),
                disorientation: d.sign(),
            })
            .collect(),
    }
}

/// A valid surface description: 1 to 4 zero-handles, up to 5 one-handles with
/// ribbon words, and up to 2 two-handles whose boundaries are cycles.
pub fn surface_description() -> impl Strategy<Value = SurfaceDescription> {
    raw(80).prop_map(|r| build_surface_description(&mut Draw::new(&r)))
}

pub fn build_surface_description(d: &mut Draw) -> SurfaceDescription {
    let z = d.range(1, 4);
    let h = d.range(0, 5);
    let name = |i: usize| format!("m{i}");
    let mut s = SurfaceDescription {
        zero_handles: (0..z).map(name).collect(),
        one_handles: (0..h)
            .map(|k| OneHandle {
                id: format!("h{k}"),
                start: name(d.below(z)),
                end: name(d.below(z)),
                ribbon_word: (0..d.range(0, 2)).map(|_| name(d.below(z))).collect(),
                disorientation: d.sign(),
            })
            .collect(),
        two_handles: Vec::new(),
    };
    let complex = build_cellular_complex(&s).expect("a description without two-handles is valid");
    let kernel = match complex.boundary(1).expect("degree 1 exists") {
        Some(m) if m.cols() > 0 => kernel_basis(m),
        _ => Vec::new(),
    };
    if kernel.is_empty() {
        return s;
    }
    for t in 0..d.range(0, 2) {
        let mut coefficients = vec![BigInt::from(0); h];
        for v in &kernel {
            let w = d.range(0, 2) as i64 - 1;
            for (c, x) in coefficients.iter_mut().zip(v) {
                *c += x * w;
            }
        }
        let mut traversals = Vec::new();
        for (j, c) in coefficients.iter().enumerate() {
            let c: i64 = c.try_into().expect("small coefficient");
            let sign = c.signum();
            let mut left = c.abs();
            while left > 0 {
                let weight = if left >= 2 && d.below(2) == 0 { 2 } else { 1 };
                traversals.push(Traversal { one_handle: format!("h{j}"), sign, weight });
                left -= weight;
            }
        }
        if traversals.len() > 1 {
            let shift = d.below(traversals.len());
            traversals.rotate_left(shift);
        }
        s.two_handles.push(TwoHandle { id: format!("d{t}"), traversals });
    }
    s
}

/// A band diagram with 1 to 3 disks, 1 to 4 bands, half twists, crossings
/// (self-crossings included) and, when `passes` is set, ribbon passes.
pub fn band_diagram(passes: bool) -> impl Strategy<Value = BandDiagram> {
    raw(120).prop_map(move |r| build_band_diagram(&mut Draw::new(&r), passes))
}

pub fn build_band_diagram(d: &mut Draw, passes: bool) -> BandDiagram {
    let disks = d.range(1, 3);
    let bands = d.range(1, 4);
    let disk = |i: usize| format!("m{i}");
    // Distinct positions for all band ends, then a disk for each end.
    let mut positions: Vec<i64> = (0..2 * bands as i64).collect();
    for i in (1..positions.len()).rev() {
        positions.swap(i, d.below(i + 1));
    }
    let end_disk: Vec<usize> = (0..2 * bands).map(|_| d.below(disks)).collect();
    let mut slots = vec![0usize; disks];
    for &e in &end_disk {
        slots[e] += 1;
    }
    let mut events: Vec<Vec<BandEvent>> = vec![Vec::new(); bands];
    for list in events.iter_mut() {
        for _ in 0..d.range(0, 3) {
            if passes && d.below(3) == 0 {
                let m = d.below(disks);
                list.push(BandEvent::RibbonPass {
                    disk: disk(m),
                    config: if d.below(2) == 0 { Config::L } else { Config::R },
                    gap: d.below(slots[m] + 1),
                    entry: if d.below(2) == 0 { Entry::Front } else { Entry::Back },
                });
            } else {
                list.push(BandEvent::HalfTwist { sign: d.sign() });
            }
        }
    }
    for x in 0..d.range(0, 3) {
        let (a, b) = (d.below(bands), d.below(bands));
        let sign = d.sign();
        let id = format!("x{x}");
        let at = d.below(events[a].len() + 1);
        events[a].insert(at, BandEvent::Cross { id: id.clone(), band: format!("b{b}"), over: true, sign });
        let at = d.below(events[b].len() + 1);
        events[b].insert(at, BandEvent::Cross { id, band: format!("b{a}"), over: false, sign });
    }
    BandDiagram {
        disks: (0..disks).map(disk).collect(),
        bands: events
            .into_iter()
            .enumerate()
            .map(|(k, ev)| Band {
                id: format!("b{k}"),
                start: Slot { disk: disk(end_disk[2 * k]), position: positions[2 * k] },
                end: Slot { disk: disk(end_disk[2 * k + 1]), position: positions[2 * k + 1] },
                events: ev,
            })
            .collect(),
    }
}

/// Two weighted diagrams on disjoint strands with crossings between them,
/// each crossing recorded by one of the two diagrams or by both.
pub fn weighted_pair() -> impl Strategy<Value = (WeightedDiagram, WeightedDiagram)> {
    raw(60).prop_map(|r| {
        let d = &mut Draw::new(&r);
        let strands = |d: &mut Draw, prefix: &str| -> Vec<Strand> {
            (0..d.range(1, 3))
                .map(|i| Strand { id: format!("{prefix}{i}"), weight: d.range(1, 3) as i64, orientation: d.sign() })
                .collect()
        };
        let a = strands(d, "a");
        let b = strands(d, "b");
        let (mut in_a, mut in_b) = (Vec::new(), Vec::new());
        for k in 0..d.range(0, 6) {
            let (x, y) = (a[d.below(a.len())].id.clone(), b[d.below(b.len())].id.clone());
            let (over, under) = if d.below(2) == 0 { (x, y) } else { (y, x) };
            let c = Crossing { site: format!("s{k}"), over, under, sign: d.sign() };
            match d.below(3) {
                0 => in_a.push(c),
                1 => in_b.push(c),
                _ => {
                    in_a.push(c.clone());
                    in_b.push(c);
                }
            }
        }
        (WeightedDiagram::new(a, in_a).expect("valid"), WeightedDiagram::new(b, in_b).expect("valid"))
    })
}

/// A unimodular `n × n` matrix and its inverse, as a product of elementary
/// operations.
pub fn unimodular(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    raw(24).prop_map(move |r| build_unimodular(&mut Draw::new(&r), n))
}

pub fn build_unimodular(d: &mut Draw, n: usize) -> (Matrix, Matrix) {
    let identity = |n: usize| -> Matrix { (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect() };
    let (mut u, mut inv) = (identity(n), identity(n));
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..d.range(0, 6) {
        let (i, j) = (d.below(n), d.below(n));
        match d.below(3) {
            // u ← u·E with E adding k · column i to column j; inv ← E⁻¹·inv.
            0 if i != j => {
                let k = d.range(0, 4) as i64 - 2;
                for row in u.iter_mut() {
                    row[j] += k * row[i];
                }
                for c in 0..n {
                    let v = inv[j][c];
                    inv[i][c] -= k * v;
                }
            }
            1 => {
                for row in u.iter_mut() {
                    row.swap(i, j);
                }
                inv.swap(i, j);
            }
            _ => {
                for row in u.iter_mut() {
                    row[i] = -row[i];
                }
                for v in inv[i].iter_mut() {
                    *v = -*v;
                }
            }
        }
    }
    (u, inv)
}

/// A symmetric integer matrix of size up to 4 with entries in `-3..=3`.
pub fn symmetric_matrix() -> impl Strategy<Value = Matrix> {
    (0usize..=4, raw(16)).prop_map(|(n, r)| {
        let d = &mut Draw::new(&r);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = d.range(0, 6) as i64 - 3;
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        m
    })
}

/// An integer matrix of up to 4 × 4 with entries in `-4..=4`, with its
/// column count (needed when there are no rows).
pub fn int_matrix() -> impl Strategy<Value = (Matrix, usize)> {
    (0usize..=4, 0usize..=4, raw(16)).prop_map(|(rows, cols, r)| {
        let d = &mut Draw::new(&r);
        ((0..rows).map(|_| (0..cols).map(|_| d.range(0, 8) as i64 - 4).collect()).collect(), cols)
    })
}

/// A braid on 2 to 4 strands in which every generator occurs.
pub fn braid() -> impl Strategy<Value = Braid> {
    (2usize..=4, raw(12)).prop_map(|(n, r)| {
        let d = &mut Draw::new(&r);
        let mut word: Vec<i32> = (1..n as i32).map(|g| g * d.sign() as i32).collect();
        for _ in 0..d.range(0, 6) {
            word.push((d.range(1, n - 1) as i32) * d.sign() as i32);
        }
        for i in (1..word.len()).rev() {
            word.swap(i, d.below(i + 1));
        }
        Braid::new(n, word)
    })
}

/// The bridge diagram of the mirror image of a closed braid: diagram arcs
/// become underbridges and each crossing becomes an overbridge from its
/// incoming under arc over the over arc to its outgoing under arc.
pub fn braid_bridge_diagram(b: &Braid) -> BridgeDiagram {
    let (arcs, relations) = b.arcs();
    let count = arcs.max(1);
    BridgeDiagram {
        underbridges: (0..count).map(|i| Underbridge { id: format!("a{i}"), endpoints: None }).collect(),
        overbridges: relations
            .iter()
            .enumerate()
            .map(|(k, &(start, over, end))| Overbridge {
                id: format!("c{k}"),
                start: format!("a{start}"),
                crossings: vec![format!("a{over}")],
                end: format!("a{end}"),
                disorientation: 1,
            })
            .collect(),
    }
}

/// Converts a plain matrix to the library type.
pub fn to_int_matrix(m: &Matrix, cols: usize) -> IntMatrix {
    let entries = m.iter().flatten().map(|&x| BigInt::from(x)).collect();
    IntMatrix::new(m.len(), cols, entries).expect("rectangular")
}

/// Converts a library matrix with small entries to a plain matrix.
pub fn from_int_matrix(m: &IntMatrix) -> Matrix {
    m.to_i64_rows().expect("entries fit in i64")
}
