//! Link signatures from band surfaces, the signature change across an embedded
//! cobordism, and determinants.
//!
//! For a band surface `F` with boundary link `L` (after capping a separated
//! sublink with disks), `σ(L) = σ(λ) - lk(L, L^F) / 2`, where `λ` is the
//! pairing on the disoriented homology of `F` (taken modulo the capped classes)
//! and `L^F` is the parallel copy of `L` pushed into `F`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::band_geometry::{
    boundary_components, boundary_parallel_linking, check_orientations, gl_pairing_matrix, BandDiagram,
    BoundaryComponent, BoundaryElement, DisorientedCycle, PairingMatrix,
};
use crate::chain_core::signature;
use crate::error::{Error, Result};
use crate::tangle_model::{tangle_homology, BridgeDiagram};

/// A boundary component closed off by a disk in the 4-ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CappedComponent {
    /// Index of the boundary component (in the order of [`boundary_components`]).
    pub component: usize,
    /// Its class as a disoriented cycle. May be omitted when no band passes
    /// through a disk; it is then read off the component.
    pub class: Option<DisorientedCycle>,
}

/// Every ingredient of the signature formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureReport {
    pub pairing: PairingMatrix,
    pub sigma_lambda: i64,
    pub boundary_framing: i64,
    pub sigma_link: i64,
    /// One ±1 per boundary component, as supplied.
    pub orientation_record: Vec<i64>,
    /// Indices of the components forming the link (the uncapped ones).
    pub link_components: Vec<usize>,
}

/// The class of a boundary component: the signed number of times it runs
/// along each band. Only meaningful without ribbon passes, where disoriented
/// and oriented cores agree.
fn component_class(b: &BandDiagram, c: &BoundaryComponent) -> DisorientedCycle {
    let mut coefficients = vec![0; b.bands.len()];
    for &(e, d) in &c.elements {
        if let BoundaryElement::BandEdge { band, .. } = e {
            coefficients[band] += d;
        }
    }
    DisorientedCycle::new(coefficients)
}

/// Surface component (by union of disks along bands) of each boundary component.
fn surface_component_of(b: &BandDiagram, components: &[BoundaryComponent]) -> Vec<usize> {
    let n = b.disks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let index = |id: &str| b.disks.iter().position(|d| d == id).expect("validated disk");
    for band in &b.bands {
        let (x, y) = (find(&mut parent, index(&band.start.disk)), find(&mut parent, index(&band.end.disk)));
        parent[x] = y;
    }
    components
        .iter()
        .map(|c| {
            let disk = match c.elements[0].0 {
                BoundaryElement::BandEdge { band, .. } => index(&b.bands[band].start.disk),
                BoundaryElement::DiskArc { disk, .. } => disk,
            };
            find(&mut parent, disk)
        })
        .collect()
}

/// Resolves capped components to classes and checks that every surface
/// component keeps some boundary.
fn capped_classes(
    b: &BandDiagram,
    components: &[BoundaryComponent],
    capped: &[CappedComponent],
) -> Result<(Vec<DisorientedCycle>, BTreeSet<usize>)> {
    let mut indices = BTreeSet::new();
    let mut classes = Vec::new();
    for cap in capped {
        let Some(component) = components.get(cap.component) else {
            return Err(Error::InvalidValue(format!(
                "capped component {} does not exist ({} components)",
                cap.component,
                components.len()
            )));
        };
        if !indices.insert(cap.component) {
            return Err(Error::InvalidValue(format!("component {} is capped twice", cap.component)));
        }
        let class = match &cap.class {
            Some(c) => c.clone(),
            None if !b.has_ribbon_passes() => component_class(b, component),
            None => {
                return Err(Error::InvalidValue(format!(
                    "capped component {} needs an explicit class because bands pass through disks",
                    cap.component
                )))
            }
        };
        classes.push(class);
    }
    let owner = surface_component_of(b, components);
    let open: BTreeSet<usize> =
        owner.iter().enumerate().filter(|(i, _)| !indices.contains(i)).map(|(_, &s)| s).collect();
    if let Some(closed) = owner.iter().find(|s| !open.contains(s)) {
        let disk = &b.disks[*closed];
        return Err(Error::ClosedSurface(format!(
            "every boundary component of the piece containing `{disk}` is capped"
        )));
    }
    Ok((classes, indices))
}

/// λ modulo the classes of the capped components.
pub fn capped_pairing_matrix(b: &BandDiagram, capped: &[CappedComponent]) -> Result<PairingMatrix> {
    let components = boundary_components(b)?;
    let (classes, _) = capped_classes(b, &components, capped)?;
    gl_pairing_matrix(b, Some(&classes))
}

/// `σ(L) = σ(λ) - lk(L, L^F) / 2` for the uncapped boundary of a band surface.
///
/// `orientations` has one ±1 per boundary component (capped ones included,
/// where it is ignored), relative to the canonical orientations of
/// [`boundary_components`].
pub fn boundary_signature(
    b: &BandDiagram,
    capped: &[CappedComponent],
    orientations: &[i64],
) -> Result<SignatureReport> {
    let components = boundary_components(b)?;
    check_orientations(components.len(), orientations)?;
    let (classes, capped_set) = capped_classes(b, &components, capped)?;
    let link_components: Vec<usize> = (0..components.len()).filter(|i| !capped_set.contains(i)).collect();
    let pairing = gl_pairing_matrix(b, Some(&classes))?;
    let sigma_lambda = signature(&pairing.matrix)?;
    let boundary_framing = boundary_parallel_linking(b, orientations, Some(&link_components))?;
    if boundary_framing % 2 != 0 {
        return Err(Error::InvalidValue(format!("boundary framing {boundary_framing} is odd")));
    }
    Ok(SignatureReport {
        pairing,
        sigma_lambda,
        boundary_framing,
        sigma_link: sigma_lambda - boundary_framing / 2,
        orientation_record: orientations.to_vec(),
        link_components,
    })
}

/// Predicted `σ(L₁) - σ(L₀)` across an embedded cobordism drawn as a band
/// surface whose boundary components split into a lower end `L₀` (listed in
/// `lower`) and an upper end `L₁` (the rest):
/// `σ(λ) + (lk(L₀, L₀^F) - lk(L₁, L₁^F)) / 2`.
///
/// The pairing is taken on the whole first disoriented homology of the
/// surface. Ribbon passes are rejected since the surface must be embedded.
pub fn cobordism_signature_delta(b: &BandDiagram, orientations: &[i64], lower: &[usize]) -> Result<i64> {
    if b.has_ribbon_passes() {
        return Err(Error::RibbonInCobordism);
    }
    let components = boundary_components(b)?;
    check_orientations(components.len(), orientations)?;
    let lower_set: BTreeSet<usize> = lower.iter().copied().collect();
    if let Some(bad) = lower_set.iter().find(|&&i| i >= components.len()) {
        return Err(Error::InvalidValue(format!("boundary component {bad} does not exist")));
    }
    let upper: Vec<usize> = (0..components.len()).filter(|i| !lower_set.contains(i)).collect();
    let lower: Vec<usize> = lower_set.into_iter().collect();
    let pairing = gl_pairing_matrix(b, None)?;
    let sigma = signature(&pairing.matrix)?;
    let lower_framing = boundary_parallel_linking(b, orientations, Some(&lower))?;
    let upper_framing = boundary_parallel_linking(b, orientations, Some(&upper))?;
    let difference = lower_framing - upper_framing;
    if difference % 2 != 0 {
        return Err(Error::InvalidValue(format!("framing difference {difference} is odd")));
    }
    Ok(sigma + difference / 2)
}

/// A determinant, or the statement that the relevant group is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    /// The determinant; zero exactly when `infinite` is set.
    pub value: BigInt,
    pub infinite: bool,
}

impl DeterminantReport {
    fn from_value(value: BigInt) -> Self {
        let infinite = value.is_zero();
        DeterminantReport { value: value.abs(), infinite }
    }
}

/// Order of the torsion of `H_0` of the tangle complex, or infinite when
/// `H_0` has positive rank.
pub fn tangle_determinant(d: &BridgeDiagram) -> Result<DeterminantReport> {
    let h0 = tangle_homology(d)?.h0;
    if h0.free_rank() > 0 {
        return Ok(DeterminantReport { value: BigInt::zero(), infinite: true });
    }
    Ok(DeterminantReport::from_value(h0.torsion_order()))
}

/// `|det λ|` of a band surface (modulo capped classes); zero when λ is singular.
pub fn band_determinant(b: &BandDiagram, capped: &[CappedComponent]) -> Result<DeterminantReport> {
    let pairing = capped_pairing_matrix(b, capped)?;
    Ok(DeterminantReport::from_value(pairing.matrix.determinant()?))
}
