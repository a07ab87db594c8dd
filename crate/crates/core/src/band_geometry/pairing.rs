//! Disoriented cycles on a band surface, their two-sided pushoffs, and the
//! pairing `λ(a, b) = lk(a, τb)`.
//!
//! A band with `k` passes has `k + 1` core segments. The disoriented core runs
//! along the band direction on even segments and against it on odd ones, so it
//! flips at every pass. The pushoff `τb` has two strands per segment, one on
//! each side of the surface, both drawn just to one side of the core.
//!
//! Local crossing tables, with strand directions taken along the band:
//! * a half twist of sign `s`: the core crosses each pushoff strand once, sign `s`;
//! * a pass with config `c`: the core crosses each pushoff strand of the segment
//!   before the pass once, with sign `c.pairing_contribution()`;
//! * a crossing of sign `e` between two segments: the over core crosses both
//!   under pushoff strands, and both over pushoff strands cross the under core,
//!   all with sign `e`.
//!
//! Closure arcs inside the disks are left out of the diagrams: each one meets
//! the two pushoff strands of a band piece above and below the disk with
//! opposite signs, so they never change a linking number.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::diagram::{segment_direction, BandDiagram, Resolved, ResolvedEvent};
use super::weighted::{linking_number, Crossing, Strand, WeightedDiagram};
use crate::chain_core::{kernel_basis, saturation_complement, IntMatrix};
use crate::error::{Error, Result};
use crate::surface_model::{build_cellular_complex, SurfaceDescription};

/// A disoriented 1-cycle, given by its coefficient on every band core.
///
/// The cycle consists of the disoriented band cores with these multiplicities,
/// joined up by arcs inside the disks. That is possible exactly when, at every
/// disk, as many cores point in as point out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DisorientedCycle {
    pub coefficients: Vec<i64>,
}

impl DisorientedCycle {
    pub fn new(coefficients: Vec<i64>) -> Self {
        DisorientedCycle { coefficients }
    }

    /// Integer combination `Σ c_i g_i` of cycles.
    pub fn combination(cycles: &[DisorientedCycle], weights: &[i64]) -> Result<Self> {
        let n = cycles.first().map_or(0, |c| c.coefficients.len());
        if cycles.len() != weights.len() || cycles.iter().any(|c| c.coefficients.len() != n) {
            return Err(Error::Dimension("combination of cycles of different shapes".into()));
        }
        let mut out = vec![0; n];
        for (c, w) in cycles.iter().zip(weights) {
            for (o, x) in out.iter_mut().zip(&c.coefficients) {
                *o += w * x;
            }
        }
        Ok(DisorientedCycle { coefficients: out })
    }
}

/// λ on a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    /// Generators of the disoriented homology of the ribbon surface.
    pub generators: Vec<DisorientedCycle>,
    /// Basis vectors, in generator coordinates, on which `matrix` is written.
    /// Without capped classes this is the standard basis.
    pub basis: Vec<Vec<i64>>,
    /// The symmetric matrix of λ on `basis`.
    pub matrix: IntMatrix,
}

pub(crate) fn cellular_boundary(b: &BandDiagram) -> Result<(SurfaceDescription, IntMatrix)> {
    let s = b.surface_description()?;
    let complex = build_cellular_complex(&s)?;
    let d1 = complex.boundary(1)?.expect("degree 1 has a boundary").clone();
    Ok((s, d1))
}

/// Checks that a cycle has one coefficient per band and closes up in every disk.
pub fn check_cycle(b: &BandDiagram, c: &DisorientedCycle) -> Result<()> {
    if c.coefficients.len() != b.bands.len() {
        return Err(Error::Dimension(format!(
            "cycle has {} coefficients for {} bands",
            c.coefficients.len(),
            b.bands.len()
        )));
    }
    let (_, d1) = cellular_boundary(b)?;
    let v: Vec<BigInt> = c.coefficients.iter().map(|&x| BigInt::from(x)).collect();
    let flow = d1.apply(&v)?;
    if let Some((disk, net)) = flow.iter().enumerate().find(|(_, x)| !x.is_zero()) {
        return Err(Error::Unroutable(format!(
            "cores point into disk `{}` {net} more times than out of it",
            b.disks[disk]
        )));
    }
    Ok(())
}

/// A basis of the disoriented cycles, in canonical (Hermite) form.
///
/// When every band core closes up in its own disks (for instance a single
/// disk), this is one generator per band.
pub fn generator_cycles(b: &BandDiagram) -> Result<Vec<DisorientedCycle>> {
    let (_, d1) = cellular_boundary(b)?;
    kernel_basis(&d1)
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::InvalidValue("generator coefficient overflow".into())))
                .collect::<Result<Vec<i64>>>()
                .map(DisorientedCycle::new)
        })
        .collect()
}

fn core_id(band: usize, segment: usize) -> String {
    format!("core:{band}:{segment}")
}

fn push_id(side: char, band: usize, segment: usize) -> String {
    format!("push{side}:{band}:{segment}")
}

fn segment_strands(r: &Resolved, c: &DisorientedCycle, name: impl Fn(usize, usize) -> String) -> Vec<Strand> {
    let mut strands = Vec::new();
    for (h, band) in r.bands.iter().enumerate() {
        let n = c.coefficients[h];
        if n == 0 {
            continue;
        }
        for k in 0..=band.passes {
            strands.push(Strand { id: name(h, k), weight: n.abs(), orientation: n.signum() * segment_direction(k) });
        }
    }
    strands
}

/// The cycle itself as a weighted diagram of core segments.
pub fn core_diagram(b: &BandDiagram, c: &DisorientedCycle) -> Result<WeightedDiagram> {
    check_cycle(b, c)?;
    let r = b.resolve()?;
    WeightedDiagram::new(segment_strands(&r, c, core_id), Vec::new())
}

/// The two-sided pushoff `τc`, with its crossings against all core segments.
pub fn double_pushoff(b: &BandDiagram, c: &DisorientedCycle) -> Result<WeightedDiagram> {
    check_cycle(b, c)?;
    let r = b.resolve()?;
    let mut strands = segment_strands(&r, c, |h, k| push_id('+', h, k));
    strands.extend(segment_strands(&r, c, |h, k| push_id('-', h, k)));
    let present = |h: usize| c.coefficients[h] != 0;

    let mut crossings = Vec::new();
    let mut add = |site: String, over: String, under: String, sign: i64| {
        crossings.push(Crossing { site, over, under, sign });
    };
    for (h, band) in r.bands.iter().enumerate() {
        if !present(h) {
            continue;
        }
        for (e, event) in band.events.iter().enumerate() {
            let (site, segment, sign) = match event {
                ResolvedEvent::HalfTwist { sign, segment } => (format!("twist:{h}:{e}"), *segment, *sign),
                ResolvedEvent::RibbonPass { config, segment, .. } => {
                    (format!("pass:{h}:{e}"), *segment, config.pairing_contribution())
                }
            };
            add(site.clone(), core_id(h, segment), push_id('+', h, segment), sign);
            add(site, push_id('-', h, segment), core_id(h, segment), sign);
        }
    }
    for x in &r.crossings {
        let ((i, ki), (j, kj)) = (x.over, x.under);
        let site = format!("cross:{}", x.id);
        if present(j) {
            add(site.clone(), core_id(i, ki), push_id('+', j, kj), x.sign);
            add(site.clone(), core_id(i, ki), push_id('-', j, kj), x.sign);
        }
        if present(i) {
            add(site.clone(), push_id('+', i, ki), core_id(j, kj), x.sign);
            add(site, push_id('-', i, ki), core_id(j, kj), x.sign);
        }
    }
    WeightedDiagram::new(strands, crossings)
}

/// `λ(a, b) = lk(a, τb)`.
pub fn pairing(b: &BandDiagram, a: &DisorientedCycle, c: &DisorientedCycle) -> Result<i64> {
    linking_number(&core_diagram(b, a)?, &double_pushoff(b, c)?)
}

/// Matrix of λ on the generators, or on the quotient by capped classes.
///
/// The matrix is computed entry by entry from linking numbers and is required
/// to come out symmetric. Each capped class must be a cycle pairing to zero
/// with every generator; the result is then λ on a basis of a complement of the
/// (saturated) span of the capped classes.
pub fn gl_pairing_matrix(b: &BandDiagram, capped: Option<&[DisorientedCycle]>) -> Result<PairingMatrix> {
    let generators = generator_cycles(b)?;
    let n = generators.len();
    let cores: Vec<WeightedDiagram> = generators.iter().map(|g| core_diagram(b, g)).collect::<Result<_>>()?;
    let pushoffs: Vec<WeightedDiagram> = generators.iter().map(|g| double_pushoff(b, g)).collect::<Result<_>>()?;
    let mut full = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            full.set(i, j, BigInt::from(linking_number(&cores[i], &pushoffs[j])?));
        }
    }
    if let Some((row, col)) = full.asymmetry() {
        return Err(Error::AsymmetricPairing { row, col });
    }
    let capped = capped.unwrap_or(&[]);
    if capped.is_empty() {
        let basis = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        return Ok(PairingMatrix { generators, basis, matrix: full });
    }

    let mut coordinates = Vec::new();
    for (index, beta) in capped.iter().enumerate() {
        check_cycle(b, beta)?;
        let beta_push = double_pushoff(b, beta)?;
        for (generator, core) in cores.iter().enumerate() {
            if linking_number(core, &beta_push)? != 0 {
                return Err(Error::CappedClassNotNull { index, generator });
            }
        }
        coordinates.push(coordinates_in(&generators, beta)?);
    }
    let complement = saturation_complement(n, &coordinates);
    let c = IntMatrix::from_columns(n, &complement)?;
    let matrix = c.transpose().mul(&full)?.mul(&c)?;
    let basis =
        complement.iter().map(|v| v.iter().map(|x| x.to_i64().expect("unimodular entries fit")).collect()).collect();
    Ok(PairingMatrix { generators, basis, matrix })
}

/// Writes `target` in terms of an echelon basis (as returned by [`generator_cycles`]).
fn coordinates_in(basis: &[DisorientedCycle], target: &DisorientedCycle) -> Result<Vec<BigInt>> {
    let mut residual: Vec<i64> = target.coefficients.clone();
    let mut out = Vec::with_capacity(basis.len());
    for g in basis {
        let Some(p) = g.coefficients.iter().position(|&x| x != 0) else {
            out.push(BigInt::zero());
            continue;
        };
        if residual[p] % g.coefficients[p] != 0 {
            return Err(Error::Unroutable("capped class is not an integral combination of generators".into()));
        }
        let q = residual[p] / g.coefficients[p];
        for (r, x) in residual.iter_mut().zip(&g.coefficients) {
            *r -= q * x;
        }
        out.push(BigInt::from(q));
    }
    if residual.iter().any(|&x| x != 0) {
        return Err(Error::Unroutable("capped class is not a combination of generators".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::diagram::tests::{band, cross, pass, single_band, slot, twists};
    use super::super::diagram::{BandEvent, Config, Entry};
    use super::*;

    fn lambda(b: &BandDiagram) -> Vec<Vec<i64>> {
        gl_pairing_matrix(b, None).unwrap().matrix.to_i64_rows().unwrap()
    }

    #[test]
    fn untwisted_annulus_pairs_to_zero() {
        let b = single_band(vec![]);
        assert_eq!(lambda(&b), vec![vec![0]]);
        let g = &generator_cycles(&b).unwrap()[0];
        let tau = double_pushoff(&b, g).unwrap();
        assert_eq!(tau.strands().count(), 2);
        assert_eq!(linking_number(&core_diagram(&b, g).unwrap(), &tau).unwrap(), 0);
    }

    #[test]
    fn projective_planes_have_opposite_signs() {
        let positive = single_band(vec![pass("m", Config::R, 1, Entry::Back)]);
        assert_eq!(lambda(&positive), vec![vec![1]]);
        let negative = single_band(vec![pass("m", Config::L, 1, Entry::Front)]);
        assert_eq!(lambda(&negative), vec![vec![-1]]);
    }

    #[test]
    fn mobius_bands_count_half_twists() {
        for k in 1..6 {
            assert_eq!(lambda(&single_band(twists(1, k))), vec![vec![k as i64]]);
            assert_eq!(lambda(&single_band(twists(-1, k))), vec![vec![-(k as i64)]]);
        }
    }

    #[test]
    fn weight_two_cycle_scales_quadratically() {
        let b = single_band(twists(1, 3));
        let two = DisorientedCycle::new(vec![2]);
        let tau = double_pushoff(&b, &two).unwrap();
        assert!(tau.strands().all(|s| s.weight == 2));
        assert_eq!(pairing(&b, &two, &two).unwrap(), 12);
    }

    #[test]
    fn interleaved_bands_pair_through_their_crossing() {
        let b = BandDiagram {
            disks: vec!["m".into()],
            bands: vec![
                band("a", slot("m", 0), slot("m", 2), [twists(1, 2), vec![cross("x", "b", true, -1)]].concat()),
                band("b", slot("m", 1), slot("m", 3), [vec![cross("x", "a", false, -1)], twists(1, 2)].concat()),
            ],
        };
        assert_eq!(lambda(&b), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn unroutable_cycles_are_reported() {
        let b = BandDiagram {
            disks: vec!["m".into(), "n".into()],
            bands: vec![band("h", slot("m", 0), slot("n", 0), vec![])],
        };
        assert!(generator_cycles(&b).unwrap().is_empty());
        assert!(matches!(check_cycle(&b, &DisorientedCycle::new(vec![1])), Err(Error::Unroutable(_))));
    }

    #[test]
    fn two_disks_joined_twice_give_one_generator() {
        let b = BandDiagram {
            disks: vec!["m".into(), "n".into()],
            bands: vec![band("h", slot("m", 0), slot("n", 0), vec![]), band("k", slot("m", 1), slot("n", 1), vec![])],
        };
        let g = generator_cycles(&b).unwrap();
        assert_eq!(g, vec![DisorientedCycle::new(vec![1, -1])]);
    }

    #[test]
    fn capped_classes_are_quotiented_out() {
        // Two parallel untwisted loops on one disk; the second is capped.
        let b = BandDiagram {
            disks: vec!["m".into()],
            bands: vec![
                band("h", slot("m", 0), slot("m", 3), twists(1, 2)),
                band("k", slot("m", 1), slot("m", 2), vec![]),
            ],
        };
        let p = gl_pairing_matrix(&b, Some(&[DisorientedCycle::new(vec![0, 1])])).unwrap();
        assert_eq!(p.matrix.to_i64_rows().unwrap(), vec![vec![2]]);
        let bad = gl_pairing_matrix(&b, Some(&[DisorientedCycle::new(vec![1, 0])]));
        assert!(matches!(bad, Err(Error::CappedClassNotNull { .. })));
    }

    #[test]
    fn self_crossing_enters_twice() {
        let b =
            single_band(vec![cross("x", "h", true, 1), BandEvent::HalfTwist { sign: 1 }, cross("x", "h", false, 1)]);
        assert_eq!(lambda(&b), vec![vec![3]]);
    }
}
