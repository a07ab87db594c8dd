//! Command dispatch: runs one command on a parsed document and builds its report.

use std::fmt;
use std::str::FromStr;

use super::report::{Report, Value};
use super::schema::{InputDocument, Kind};
use crate::band_geometry::{boundary_components, check_orientations, generator_cycles, BandDiagram};
use crate::chain_core::{signature, AbelianGroup, DisorientedComplex};
use crate::cover::CoverHandles;
use crate::error::{Error, Result};
use crate::invariants::{
    band_determinant, boundary_signature, capped_pairing_matrix, cobordism_signature_delta, tangle_determinant,
    DeterminantReport,
};
use crate::surface_model::{
    build_virtual_band_complex, check_virtual_bands, euler_characteristic, surface_homology,
    validate_surface_description, RibbonDescription,
};
use crate::tangle_model::{tangle_cover, tangle_homology, validate_bridge_diagram};

/// The commands of the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Validate,
    Homology,
    Pairing,
    Signature,
    Det,
    Cover,
}

impl Command {
    pub const ALL: [Command; 6] =
        [Command::Validate, Command::Homology, Command::Pairing, Command::Signature, Command::Det, Command::Cover];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Homology => "homology",
            Command::Pairing => "pairing",
            Command::Signature => "signature",
            Command::Det => "det",
            Command::Cover => "cover",
        }
    }

    /// Whether the command accepts documents of this kind.
    pub fn applies_to(self, kind: Kind) -> bool {
        match self {
            Command::Validate | Command::Homology | Command::Cover => true,
            Command::Pairing | Command::Signature => kind == Kind::BandDiagram,
            Command::Det => kind != Kind::Surface,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidValue(format!("unknown command `{s}`")))
    }
}

/// Runs `command` on `doc`.
pub fn run_command(command: Command, doc: &InputDocument) -> Result<Report> {
    if !command.applies_to(doc.kind) {
        return Err(Error::Inapplicable { command: command.as_str().into(), kind: doc.kind.as_str().into() });
    }
    let mut report = Report::new();
    report
        .push("input", Value::record([("name", doc.name.as_str()), ("kind", doc.kind.as_str())]))
        .push("command", command.as_str());
    match (doc.kind, command) {
        (Kind::Tangle, _) => tangle_command(command, doc, &mut report)?,
        (Kind::Surface, _) => surface_command(command, doc, &mut report)?,
        (Kind::BandDiagram, _) => band_command(command, doc, &mut report)?,
    }
    Ok(report)
}

fn complex_value(c: &DisorientedComplex) -> Value {
    let degrees: Vec<i64> = (c.lo()..=c.hi()).map(i64::from).collect();
    let bases = (c.lo()..=c.hi()).map(|k| (k.to_string(), Value::from(c.basis(k).expect("in range").to_vec())));
    let boundaries = (c.lo() + 1..=c.hi())
        .map(|k| (format!("d{k}"), Value::from(c.boundary(k).expect("in range").expect("has boundary").clone())));
    Value::record([
        ("degrees", Value::from(degrees)),
        ("bases", Value::record(bases)),
        ("boundaries", Value::record(boundaries)),
    ])
}

fn groups_value(prefix: &str, groups: &[(i32, AbelianGroup)]) -> Value {
    Value::record(groups.iter().map(|(k, g)| (format!("{prefix}{k}"), Value::from(g))))
}

fn cover_identification(groups: &[(i32, AbelianGroup)]) -> Value {
    Value::record(groups.iter().map(|(k, g)| (format!("H~{}(cover)", k + 1), Value::from(g))))
}

fn cover_value(cover: &CoverHandles) -> Value {
    let c = &cover.complex;
    let handles = (0..=c.hi()).map(|k| (k.to_string(), Value::from(c.basis(k).expect("in range").to_vec())));
    let attaching = (1..=c.hi())
        .map(|k| (format!("d{k}"), Value::from(c.boundary(k).expect("in range").expect("has map").clone())));
    Value::record([
        ("handle_counts", Value::from(cover.handle_counts.clone())),
        ("handles", Value::record(handles)),
        ("attaching", Value::record(attaching)),
        (
            "reduced_homology",
            Value::record(cover.reduced_homology.iter().map(|(k, g)| (format!("H~{k}"), Value::from(g)))),
        ),
    ])
}

fn determinant_value(d: &DeterminantReport) -> Value {
    if d.infinite {
        Value::from("infinite")
    } else {
        Value::from(d.value.clone())
    }
}

fn tangle_command(command: Command, doc: &InputDocument, report: &mut Report) -> Result<()> {
    let diagram = doc.tangle.as_ref().expect("checked by the parser").to_diagram();
    match command {
        Command::Validate => {
            let v = validate_bridge_diagram(&diagram)?;
            report
                .push("status", "valid")
                .push("underbridges", diagram.underbridges.len())
                .push("overbridges", diagram.overbridges.len())
                .push("warnings", v.warnings);
        }
        Command::Homology => {
            let h = tangle_homology(&diagram)?;
            report
                .push("complex", complex_value(&h.complex))
                .push("homology", Value::record([("H1", &h.h1), ("H0", &h.h0), ("H-1", &h.hm1)]))
                .push("cover_identification", cover_identification(&h.cover_identification));
        }
        Command::Det => {
            let d = tangle_determinant(&diagram)?;
            report.push("determinant", determinant_value(&d));
        }
        Command::Cover => {
            report.push("cover", cover_value(&tangle_cover(&diagram)?));
        }
        Command::Pairing | Command::Signature => unreachable!("rejected by applies_to"),
    }
    Ok(())
}

fn surface_command(command: Command, doc: &InputDocument, report: &mut Report) -> Result<()> {
    let payload = doc.surface.as_ref().expect("checked by the parser");
    let description = payload.to_description();
    match command {
        Command::Validate => {
            let v = validate_surface_description(&description)?;
            report.push("status", "valid").push("euler_characteristic", euler_characteristic(&description));
            if let Some(vb) = &payload.virtual_bands {
                let ribbon = RibbonDescription::new(description.clone())?;
                let (set, _, _) = vb.to_parts()?;
                check_virtual_bands(&ribbon, &set)?;
                report.push("virtual_bands", "valid");
            }
            report.push("warnings", v.warnings);
        }
        Command::Homology => {
            let h = surface_homology(&description)?;
            report
                .push("complex", complex_value(&h.complex))
                .push("homology", groups_value("DH", &h.cover_identification))
                .push("cover_identification", cover_identification(&h.cover_identification));
            if let Some(vb) = &payload.virtual_bands {
                let ribbon = RibbonDescription::new(description.clone())?;
                let (set, generators, counts) = vb.to_parts()?;
                let c = build_virtual_band_complex(&ribbon, &set, &generators, &counts)?;
                let groups = [(1, c.homology_at(1)?), (0, c.homology_at(0)?)];
                for (k, g) in &groups {
                    let cellular = if *k == 1 { &h.dh1 } else { &h.dh0 };
                    if g != cellular {
                        return Err(Error::Internal(format!(
                            "virtual-band complex gives DH{k} = {g}, cellular complex gives {cellular}"
                        )));
                    }
                }
                report.push(
                    "virtual_band_complex",
                    Value::record([("complex", complex_value(&c)), ("homology", groups_value("DH", &groups))]),
                );
            }
        }
        Command::Cover => {
            report.push("cover", cover_value(&surface_homology(&description)?.cover));
        }
        Command::Pairing | Command::Signature | Command::Det => unreachable!("rejected by applies_to"),
    }
    Ok(())
}

fn cycles_value(cycles: impl IntoIterator<Item = Vec<i64>>) -> Value {
    Value::List(cycles.into_iter().map(Value::from).collect())
}

fn band_command(command: Command, doc: &InputDocument, report: &mut Report) -> Result<()> {
    let payload = doc.band_diagram.as_ref().expect("checked by the parser");
    let diagram: BandDiagram = payload.to_diagram();
    let capped = payload.capped_components();
    match command {
        Command::Validate => {
            diagram.validate()?;
            let components = boundary_components(&diagram)?;
            if let Some(o) = &payload.orientations {
                check_orientations(components.len(), o)?;
            }
            report
                .push("status", "valid")
                .push("ribbon_passes", diagram.has_ribbon_passes())
                .push("boundary_components", components.len());
        }
        Command::Homology => {
            let h = surface_homology(&diagram.surface_description()?)?;
            let generators = generator_cycles(&diagram)?;
            report
                .push("complex", complex_value(&h.complex))
                .push("homology", groups_value("DH", &h.cover_identification))
                .push("cover_identification", cover_identification(&h.cover_identification))
                .push("generators", cycles_value(generators.into_iter().map(|g| g.coefficients)));
        }
        Command::Pairing => {
            let p = capped_pairing_matrix(&diagram, &capped)?;
            report.push("generators", cycles_value(p.generators.iter().map(|g| g.coefficients.clone())));
            if !capped.is_empty() {
                report.push("basis", cycles_value(p.basis.clone()));
            }
            report.push("signature", signature(&p.matrix)?).push("lambda", p.matrix);
        }
        Command::Signature => {
            let components = boundary_components(&diagram)?;
            let Some(orientations) = &payload.orientations else {
                return Err(Error::Orientation(format!(
                    "`signature` needs `orientations`: one ±1 for each of the {} boundary components",
                    components.len()
                )));
            };
            let s = boundary_signature(&diagram, &capped, orientations)?;
            report
                .push(
                    "boundary_components",
                    Value::List(components.iter().map(|c| Value::from(c.describe(&diagram))).collect()),
                )
                .push("orientations", s.orientation_record.clone())
                .push("link_components", s.link_components.clone())
                .push("lambda", s.pairing.matrix.clone())
                .push("sigma_lambda", s.sigma_lambda)
                .push("boundary_framing", s.boundary_framing)
                .push("sigma_link", s.sigma_link);
            if let Some(cobordism) = &payload.cobordism {
                let delta = cobordism_signature_delta(&diagram, orientations, &cobordism.lower)?;
                report.push(
                    "cobordism",
                    Value::record([("lower", Value::from(cobordism.lower.clone())), ("delta", Value::from(delta))]),
                );
            }
        }
        Command::Det => {
            report.push("determinant", determinant_value(&band_determinant(&diagram, &capped)?));
        }
        Command::Cover => {
            report.push("cover", cover_value(&surface_homology(&diagram.surface_description()?)?.cover));
        }
    }
    Ok(())
}
