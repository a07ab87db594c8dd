//! Property checks over random inputs, shared by the property suite and the
//! acceptance run.

use braco_core::band_geometry::{
    boundary_components, generator_cycles, gl_pairing_matrix, linking_number, pairing, Band, BandDiagram, BandEvent,
    BoundaryElement, Config, DisorientedCycle, Entry, Side, Slot, WeightedDiagram,
};
use braco_core::chain_core::{signature, smith_normal_form, DisorientedComplex, IntMatrix};
use braco_core::invariants::{boundary_signature, capped_pairing_matrix, CappedComponent};
use braco_core::surface_model::{build_cellular_complex, SurfaceDescription};
use braco_core::tangle_model::{build_tangle_complex, tangle_homology, BridgeDiagram};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use crate::braid::Braid;
use crate::linalg::{congruent_image, determinant, eigen_signature, multiply, Matrix};
use crate::strategies::{braid_bridge_diagram, build_unimodular, from_int_matrix, to_int_matrix, Draw};

pub type Outcome = Result<(), TestCaseError>;

fn fail<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> TestCaseError + '_ {
    move |e| TestCaseError::fail(format!("{what}: {e}"))
}

fn plain(m: &IntMatrix) -> Matrix {
    from_int_matrix(m)
}

/// Every product of consecutive boundary maps is zero, checked with plain
/// matrix multiplication.
pub fn boundaries_compose_to_zero(c: &DisorientedComplex) -> Outcome {
    for pair in c.boundaries().windows(2) {
        let product = multiply(&plain(&pair[0]), &plain(&pair[1]));
        prop_assert!(product.iter().flatten().all(|&x| x == 0), "nonzero composite {:?}", product);
    }
    Ok(())
}

/// The augmentation kills every boundary from degree 0.
pub fn augmentation_kills_boundaries(c: &DisorientedComplex) -> Outcome {
    let boundaries = c.boundaries();
    prop_assert!(c.lo() == -1);
    let epsilon = plain(&boundaries[0]);
    prop_assert!(epsilon.len() == 1 && epsilon[0].iter().all(|&x| x == 1), "augmentation {:?}", epsilon);
    if let Some(d1) = boundaries.get(1) {
        let product = multiply(&epsilon, &plain(d1));
        prop_assert!(product.iter().flatten().all(|&x| x == 0), "ε∘∂₁ = {:?}", product);
    }
    Ok(())
}

pub fn tangle_complex_is_a_complex(d: &BridgeDiagram) -> Outcome {
    let c = build_tangle_complex(d).map_err(fail("tangle complex"))?;
    boundaries_compose_to_zero(&c)?;
    augmentation_kills_boundaries(&c)?;
    let h = tangle_homology(d).map_err(fail("tangle homology"))?;
    prop_assert!(h.hm1.is_trivial(), "H₋₁ = {}", h.hm1);
    Ok(())
}

pub fn surface_complex_is_a_complex(s: &SurfaceDescription) -> Outcome {
    let c = build_cellular_complex(s).map_err(fail("cellular complex"))?;
    boundaries_compose_to_zero(&c)?;
    augmentation_kills_boundaries(&c)?;
    prop_assert_eq!(c.homology_at(-1).map_err(fail("homology"))?.is_trivial(), true);
    Ok(())
}

/// Replaces the basis of every chain group by a random unimodular change of
/// basis and compares homology.
pub fn basis_change_preserves_homology(c: &DisorientedComplex, raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let ranks: Vec<usize> = (c.lo()..=c.hi()).map(|k| c.rank(k).expect("in range")).collect();
    let changes: Vec<(Matrix, Matrix)> = ranks.iter().map(|&n| build_unimodular(draw, n)).collect();
    let boundaries = c
        .boundaries()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let (_, target_inverse) = &changes[i];
            let (source, _) = &changes[i + 1];
            let image = multiply(&multiply(target_inverse, &plain(d)), source);
            to_int_matrix(&image, ranks[i + 1])
        })
        .collect();
    let changed = DisorientedComplex::from_ranks(c.lo(), &ranks, boundaries).map_err(fail("changed complex"))?;
    prop_assert_eq!(changed.homology(), c.homology());
    Ok(())
}

pub fn tangle_flip_preserves_homology(d: &BridgeDiagram, which: usize) -> Outcome {
    if d.overbridges.is_empty() {
        return Ok(());
    }
    let k = which % d.overbridges.len();
    let mut flipped = d.clone();
    flipped.overbridges[k].disorientation *= -1;
    let (a, b) =
        (build_tangle_complex(d).map_err(fail("complex"))?, build_tangle_complex(&flipped).map_err(fail("complex"))?);
    let (da, db) = (plain(a.boundary(1).unwrap().unwrap()), plain(b.boundary(1).unwrap().unwrap()));
    for (ra, rb) in da.iter().zip(&db) {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            prop_assert_eq!(*y, if j == k { -x } else { *x });
        }
    }
    prop_assert_eq!(
        tangle_homology(d).unwrap().cover_identification,
        tangle_homology(&flipped).unwrap().cover_identification
    );
    Ok(())
}

fn shuffle<T>(items: &mut [T], draw: &mut Draw) {
    for i in (1..items.len()).rev() {
        items.swap(i, draw.below(i + 1));
    }
}

pub fn tangle_relabel_preserves_homology(d: &BridgeDiagram, raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let mut shuffled = d.clone();
    shuffle(&mut shuffled.underbridges, draw);
    shuffle(&mut shuffled.overbridges, draw);
    prop_assert_eq!(
        build_tangle_complex(&shuffled).map_err(fail("complex"))?.homology(),
        build_tangle_complex(d).map_err(fail("complex"))?.homology()
    );
    Ok(())
}

/// Flips the disorientation of one 1-handle (with the traversals over it) or
/// of one 2-handle, and compares homology.
pub fn surface_flip_preserves_homology(s: &SurfaceDescription, which: usize) -> Outcome {
    let mut flipped = s.clone();
    let handles = s.one_handles.len() + s.two_handles.len();
    if handles == 0 {
        return Ok(());
    }
    let k = which % handles;
    if k < s.one_handles.len() {
        let id = flipped.one_handles[k].id.clone();
        flipped.one_handles[k].disorientation *= -1;
        for t in flipped.two_handles.iter_mut().flat_map(|d| d.traversals.iter_mut()) {
            if t.one_handle == id {
                t.sign *= -1;
            }
        }
    } else {
        for t in &mut flipped.two_handles[k - s.one_handles.len()].traversals {
            t.sign *= -1;
        }
    }
    let a = build_cellular_complex(s).map_err(fail("complex"))?;
    let b = build_cellular_complex(&flipped).map_err(fail("flipped complex"))?;
    prop_assert_eq!(a.homology(), b.homology());
    Ok(())
}

pub fn surface_relabel_preserves_homology(s: &SurfaceDescription, raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let mut shuffled = s.clone();
    shuffle(&mut shuffled.zero_handles, draw);
    shuffle(&mut shuffled.one_handles, draw);
    shuffle(&mut shuffled.two_handles, draw);
    prop_assert_eq!(
        build_cellular_complex(&shuffled).map_err(fail("complex"))?.homology(),
        build_cellular_complex(s).map_err(fail("complex"))?.homology()
    );
    Ok(())
}

/// The pairing matrix is symmetric, and so is the pairing of random cycles.
pub fn pairing_is_symmetric(b: &BandDiagram, raw: &[u32]) -> Outcome {
    let m = gl_pairing_matrix(b, None).map_err(fail("pairing matrix"))?;
    prop_assert!(m.matrix.is_symmetric(), "{:?}", m.matrix);
    let generators = generator_cycles(b).map_err(fail("generators"))?;
    if generators.is_empty() {
        return Ok(());
    }
    let draw = &mut Draw::new(raw);
    let mut random_cycle = || {
        let weights: Vec<i64> = generators.iter().map(|_| draw.range(0, 4) as i64 - 2).collect();
        DisorientedCycle::combination(&generators, &weights).expect("same length")
    };
    let (x, y) = (random_cycle(), random_cycle());
    prop_assert_eq!(pairing(b, &x, &y).map_err(fail("pairing"))?, pairing(b, &y, &x).map_err(fail("pairing"))?);
    Ok(())
}

/// Attaches to `b` a new disk carrying an untwisted band `cap_band`, joined to
/// the first disk by a band `bridge`. The inner boundary circle of the new
/// band bounds a disk missing the rest of the surface.
pub fn with_separated_circle(b: &BandDiagram) -> BandDiagram {
    let mut extended = b.clone();
    let far = 1 + b.bands.iter().flat_map(|x| [x.start.position, x.end.position]).max().unwrap_or(0);
    extended.disks.push("cap".into());
    extended.bands.push(Band {
        id: "cap_band".into(),
        start: Slot { disk: "cap".into(), position: 0 },
        end: Slot { disk: "cap".into(), position: 1 },
        events: Vec::new(),
    });
    extended.bands.push(Band {
        id: "bridge".into(),
        start: Slot { disk: b.disks[0].clone(), position: far },
        end: Slot { disk: "cap".into(), position: 2 },
        events: Vec::new(),
    });
    extended
}

/// The class of a separated boundary circle pairs to zero with everything,
/// and the capped pairing matrix accepts it.
pub fn capped_classes_pair_to_zero(b: &BandDiagram) -> Outcome {
    let extended = with_separated_circle(b);
    let cap_band = extended.bands.len() - 2;
    let components = boundary_components(&extended).map_err(fail("boundary"))?;
    let inner = components
        .iter()
        .position(|c| c.direction_of(BoundaryElement::BandEdge { band: cap_band, side: Side::Right }).is_some())
        .expect("every band edge lies on the boundary");
    prop_assert_eq!(components[inner].elements.len(), 2);
    let mut coefficients = vec![0; extended.bands.len()];
    coefficients[cap_band] = 1;
    let beta = DisorientedCycle::new(coefficients);
    for alpha in generator_cycles(&extended).map_err(fail("generators"))? {
        prop_assert_eq!(pairing(&extended, &alpha, &beta).map_err(fail("pairing"))?, 0);
    }
    let capped = [CappedComponent { component: inner, class: Some(beta) }];
    let quotient = capped_pairing_matrix(&extended, &capped).map_err(fail("capped pairing"))?;
    let full = gl_pairing_matrix(b, None).map_err(fail("pairing"))?;
    prop_assert_eq!(signature(&quotient.matrix).unwrap(), signature(&full.matrix).unwrap());
    Ok(())
}

pub fn linking_number_is_symmetric(a: &WeightedDiagram, b: &WeightedDiagram) -> Outcome {
    match (linking_number(a, b), linking_number(b, a)) {
        (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
        (Err(_), Err(_)) => {}
        (x, y) => prop_assert!(false, "one direction failed: {:?} / {:?}", x, y),
    }
    Ok(())
}

/// Adding a band (with twists and crossings over or under old bands) leaves
/// the pairing of old cycles unchanged.
pub fn extension_restricts_pairing(b: &BandDiagram, raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let mut extended = b.clone();
    let far = 1 + b.bands.iter().flat_map(|x| [x.start.position, x.end.position]).max().unwrap_or(0);
    let mut events: Vec<BandEvent> =
        (0..draw.range(0, 3)).map(|_| BandEvent::HalfTwist { sign: draw.sign() }).collect();
    for k in 0..draw.range(0, 2) {
        let other = draw.below(b.bands.len());
        let over = draw.below(2) == 0;
        let sign = draw.sign();
        let id = format!("new_x{k}");
        events.push(BandEvent::Cross { id: id.clone(), band: b.bands[other].id.clone(), over, sign });
        let list = &mut extended.bands[other].events;
        let at = draw.below(list.len() + 1);
        list.insert(at, BandEvent::Cross { id, band: "new".into(), over: !over, sign });
    }
    extended.bands.push(Band {
        id: "new".into(),
        start: Slot { disk: b.disks[draw.below(b.disks.len())].clone(), position: far },
        end: Slot { disk: b.disks[draw.below(b.disks.len())].clone(), position: far + 1 },
        events,
    });
    let old = generator_cycles(b).map_err(fail("generators"))?;
    let lift = |c: &DisorientedCycle| {
        let mut v = c.coefficients.clone();
        v.push(0);
        DisorientedCycle::new(v)
    };
    for x in &old {
        for y in &old {
            prop_assert_eq!(
                pairing(&extended, &lift(x), &lift(y)).map_err(fail("extended pairing"))?,
                pairing(b, x, y).map_err(fail("pairing"))?
            );
        }
    }
    Ok(())
}

/// A single band on one disk with half twists and passes through that disk:
/// the self-pairing is the sum of the twist signs plus +1 for every pass in
/// configuration R and −1 for every pass in configuration L.
pub fn ribbon_pass_contributions(raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let mut events = Vec::new();
    let mut expected = 0;
    let mut passes = 0;
    for _ in 0..draw.range(1, 6) {
        if draw.below(2) == 0 {
            let sign = draw.sign();
            expected += sign;
            events.push(BandEvent::HalfTwist { sign });
        } else {
            let config = if draw.below(2) == 0 { Config::L } else { Config::R };
            expected += if config == Config::R { 1 } else { -1 };
            passes += 1;
            events.push(BandEvent::RibbonPass {
                disk: "m".into(),
                config,
                gap: draw.below(3),
                entry: if draw.below(2) == 0 { Entry::Front } else { Entry::Back },
            });
        }
    }
    let b = BandDiagram {
        disks: vec!["m".into()],
        bands: vec![Band {
            id: "h".into(),
            start: Slot { disk: "m".into(), position: 0 },
            end: Slot { disk: "m".into(), position: 1 },
            events: events.clone(),
        }],
    };
    let m = gl_pairing_matrix(&b, None).map_err(fail("pairing"))?;
    prop_assert_eq!(plain(&m.matrix), vec![vec![expected]], "events {:?}", events);
    if passes == 1 {
        // Switching the configuration of the single pass changes λ by ∓2.
        let mut switched = b.clone();
        for e in &mut switched.bands[0].events {
            if let BandEvent::RibbonPass { config, .. } = e {
                *config = if *config == Config::L { Config::R } else { Config::L };
            }
        }
        let s = gl_pairing_matrix(&switched, None).map_err(fail("pairing"))?;
        prop_assert_eq!((plain(&s.matrix)[0][0] - expected).abs(), 2);
    }
    Ok(())
}

/// Reversing every boundary component leaves the link signature unchanged.
pub fn signature_ignores_reversal(b: &BandDiagram) -> Outcome {
    let count = boundary_components(b).map_err(fail("boundary"))?.len();
    let forward = boundary_signature(b, &[], &vec![1; count]).map_err(fail("signature"))?;
    let backward = boundary_signature(b, &[], &vec![-1; count]).map_err(fail("signature"))?;
    prop_assert_eq!(forward.sigma_link, backward.sigma_link);
    prop_assert_eq!(forward.boundary_framing, backward.boundary_framing);
    Ok(())
}

/// Smith invariant factors do not change under signed row and column permutations.
pub fn smith_form_ignores_signed_permutations(m: &Matrix, cols: usize, raw: &[u32]) -> Outcome {
    let draw = &mut Draw::new(raw);
    let mut rows: Vec<usize> = (0..m.len()).collect();
    let mut columns: Vec<usize> = (0..cols).collect();
    shuffle(&mut rows, draw);
    shuffle(&mut columns, draw);
    let row_signs: Vec<i64> = rows.iter().map(|_| draw.sign()).collect();
    let col_signs: Vec<i64> = columns.iter().map(|_| draw.sign()).collect();
    let permuted: Matrix = rows
        .iter()
        .zip(&row_signs)
        .map(|(&r, &rs)| columns.iter().zip(&col_signs).map(|(&c, &cs)| m[r][c] * rs * cs).collect())
        .collect();
    prop_assert_eq!(smith_normal_form(&to_int_matrix(&permuted, cols)), smith_normal_form(&to_int_matrix(m, cols)));
    Ok(())
}

/// For a square matrix of full rank, |det| is the product of the invariant factors.
pub fn determinant_is_product_of_factors(m: &Matrix, cols: usize) -> Outcome {
    if m.len() != cols {
        return Ok(());
    }
    let det = determinant(m);
    let (factors, rank) = smith_normal_form(&to_int_matrix(m, cols));
    if det != 0 {
        prop_assert_eq!(rank, cols);
        let product: BigInt = factors.iter().product();
        prop_assert_eq!(product, BigInt::from(det.abs()));
    } else {
        prop_assert!(rank < cols);
    }
    Ok(())
}

/// The form signature agrees with an eigenvalue count and is invariant under
/// unimodular congruence.
pub fn form_signature_is_a_congruence_invariant(m: &Matrix, raw: &[u32]) -> Outcome {
    let n = m.len();
    let sigma = signature(&to_int_matrix(m, n)).map_err(fail("signature"))?;
    prop_assert_eq!(sigma, eigen_signature(m));
    let (u, _) = build_unimodular(&mut Draw::new(raw), n);
    let image = congruent_image(m, &u);
    prop_assert_eq!(signature(&to_int_matrix(&image, n)).map_err(fail("signature"))?, sigma);
    Ok(())
}

/// The torsion of H₀ of the bridge diagram of a closed braid has the order of
/// the determinant from the Goeritz form, and H₀ is infinite exactly when that
/// determinant vanishes.
pub fn tangle_torsion_is_the_determinant(b: &Braid) -> Outcome {
    let det = determinant(&b.checkerboard(1).form).abs();
    let h0 = tangle_homology(&braid_bridge_diagram(b)).map_err(fail("homology"))?.h0;
    if det == 0 {
        prop_assert!(h0.free_rank() > 0, "det 0 but H₀ = {}", h0);
    } else {
        prop_assert_eq!(h0.free_rank(), 0);
        prop_assert_eq!(h0.torsion_order(), BigInt::from(det));
    }
    Ok(())
}

/// The two checkerboard surfaces and the braid Seifert surface give one signature.
pub fn oracles_agree(b: &Braid) -> Outcome {
    let sigma = b.seifert_signature();
    prop_assert_eq!(b.checkerboard(0).signature(), sigma);
    prop_assert_eq!(b.checkerboard(1).signature(), sigma);
    Ok(())
}
