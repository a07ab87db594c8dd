//! The JSON input document: strict parsing and conversion to library types.

use serde::{Deserialize, Serialize};

use crate::band_geometry::{self as bg, DisorientedCycle};
use crate::error::{Error, Result};
use crate::invariants::CappedComponent;
use crate::surface_model::{self as sm, ComponentRef, PassingCount, VirtualBand, VirtualBandSet};
use crate::tangle_model::{BridgeDiagram, Overbridge, Underbridge};

/// The only schema version understood.
pub const SCHEMA_VERSION: u32 = 1;

/// Which payload a document carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Tangle,
    Surface,
    BandDiagram,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Tangle => "tangle",
            Kind::Surface => "surface",
            Kind::BandDiagram => "band_diagram",
        }
    }
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema: u32,
    pub kind: Kind,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangle: Option<TangleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub band_diagram: Option<BandDiagramDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TangleDoc {
    pub underbridges: Vec<UnderbridgeDoc>,
    pub overbridges: Vec<OverbridgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnderbridgeDoc {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverbridgeDoc {
    pub id: String,
    pub start: String,
    #[serde(default)]
    pub crossings: Vec<String>,
    pub end: String,
    pub disorientation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub zero_handles: Vec<String>,
    #[serde(default)]
    pub one_handles: Vec<OneHandleDoc>,
    #[serde(default)]
    pub two_handles: Vec<TwoHandleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub virtual_bands: Option<VirtualBandsDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneHandleDoc {
    pub id: String,
    pub start: String,
    pub end: String,
    #[serde(default)]
    pub ribbon_word: Vec<String>,
    pub disorientation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoHandleDoc {
    pub id: String,
    pub traversals: Vec<TraversalDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraversalDoc {
    pub one_handle: String,
    pub sign: i64,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VirtualBandsDoc {
    pub bands: Vec<VirtualBandDoc>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub counts: Vec<PassingCountDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VirtualBandDoc {
    pub id: String,
    pub attaches: [ComponentRefDoc; 2],
    pub orientation: i64,
}

/// `{"zero_handle": "m"}` or `{"one_handle": "h", "piece": 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRefDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_handle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_handle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub piece: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PassingCountDoc {
    pub generator: String,
    pub band: String,
    pub count: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandDiagramDoc {
    pub disks: Vec<String>,
    #[serde(default)]
    pub bands: Vec<BandDoc>,
    /// One ±1 per boundary component, relative to the canonical orientations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientations: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub capped: Vec<CappedDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cobordism: Option<CobordismDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandDoc {
    pub id: String,
    pub start: SlotDoc,
    pub end: SlotDoc,
    #[serde(default)]
    pub events: Vec<EventDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotDoc {
    pub disk: String,
    pub position: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConfigDoc {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryDoc {
    Front,
    Back,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum EventDoc {
    HalfTwist { sign: i64 },
    Cross { id: String, band: String, over: bool, sign: i64 },
    RibbonPass { disk: String, config: ConfigDoc, gap: usize, entry: EntryDoc },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CappedDoc {
    pub component: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobordismDoc {
    /// Boundary components forming the lower end.
    pub lower: Vec<usize>,
}

/// Parses a document, reporting line and column on failure.
pub fn parse_input(bytes: &[u8]) -> Result<InputDocument> {
    let doc: InputDocument = serde_json::from_slice(bytes).map_err(|e| {
        let (line, column, message) = (e.line(), e.column(), strip_position(&e.to_string()));
        match e.classify() {
            serde_json::error::Category::Data => Error::Schema { line, column, message },
            _ => Error::Syntax { line, column, message },
        }
    })?;
    let schema_error = |message: String| Error::Schema { line: 1, column: 1, message };
    if doc.schema != SCHEMA_VERSION {
        return Err(schema_error(format!("unsupported schema version {} (expected {SCHEMA_VERSION})", doc.schema)));
    }
    let present = [
        (Kind::Tangle, doc.tangle.is_some()),
        (Kind::Surface, doc.surface.is_some()),
        (Kind::BandDiagram, doc.band_diagram.is_some()),
    ];
    for (kind, is_present) in present {
        if kind == doc.kind && !is_present {
            return Err(schema_error(format!("kind `{0}` needs a `{0}` payload", kind.as_str())));
        }
        if kind != doc.kind && is_present {
            return Err(schema_error(format!(
                "kind `{}` does not allow a `{}` payload",
                doc.kind.as_str(),
                kind.as_str()
            )));
        }
    }
    Ok(doc)
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

/// Serializes a document back to canonical, pretty-printed JSON.
pub fn document_to_json(doc: &InputDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

impl TangleDoc {
    pub fn to_diagram(&self) -> BridgeDiagram {
        BridgeDiagram {
            underbridges: self
                .underbridges
                .iter()
                .map(|u| Underbridge { id: u.id.clone(), endpoints: u.endpoints })
                .collect(),
            overbridges: self
                .overbridges
                .iter()
                .map(|o| Overbridge {
                    id: o.id.clone(),
                    start: o.start.clone(),
                    crossings: o.crossings.clone(),
                    end: o.end.clone(),
                    disorientation: o.disorientation,
                })
                .collect(),
        }
    }
}

impl SurfaceDoc {
    pub fn to_description(&self) -> sm::SurfaceDescription {
        sm::SurfaceDescription {
            zero_handles: self.zero_handles.clone(),
            one_handles: self
                .one_handles
                .iter()
                .map(|h| sm::OneHandle {
                    id: h.id.clone(),
                    start: h.start.clone(),
                    end: h.end.clone(),
                    ribbon_word: h.ribbon_word.clone(),
                    disorientation: h.disorientation,
                })
                .collect(),
            two_handles: self
                .two_handles
                .iter()
                .map(|d| sm::TwoHandle {
                    id: d.id.clone(),
                    traversals: d
                        .traversals
                        .iter()
                        .map(|t| sm::Traversal { one_handle: t.one_handle.clone(), sign: t.sign, weight: t.weight })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl ComponentRefDoc {
    pub fn to_ref(&self) -> Result<ComponentRef> {
        match (&self.zero_handle, &self.one_handle, self.piece) {
            (Some(m), None, None) => Ok(ComponentRef::ZeroHandle(m.clone())),
            (None, Some(h), Some(piece)) => Ok(ComponentRef::BandPiece { one_handle: h.clone(), piece }),
            _ => {
                Err(Error::VirtualBands("a component reference is either {zero_handle} or {one_handle, piece}".into()))
            }
        }
    }
}

impl VirtualBandsDoc {
    pub fn to_parts(&self) -> Result<(VirtualBandSet, Vec<String>, Vec<PassingCount>)> {
        let bands = self
            .bands
            .iter()
            .map(|b| {
                Ok(VirtualBand {
                    id: b.id.clone(),
                    attaches: (b.attaches[0].to_ref()?, b.attaches[1].to_ref()?),
                    orientation: b.orientation,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let counts = self
            .counts
            .iter()
            .map(|c| PassingCount { generator: c.generator.clone(), band: c.band.clone(), count: c.count })
            .collect();
        Ok((VirtualBandSet { bands }, self.generators.clone(), counts))
    }
}

impl BandDiagramDoc {
    pub fn to_diagram(&self) -> bg::BandDiagram {
        let slot = |s: &SlotDoc| bg::Slot { disk: s.disk.clone(), position: s.position };
        bg::BandDiagram {
            disks: self.disks.clone(),
            bands: self
                .bands
                .iter()
                .map(|b| bg::Band {
                    id: b.id.clone(),
                    start: slot(&b.start),
                    end: slot(&b.end),
                    events: b.events.iter().map(EventDoc::to_event).collect(),
                })
                .collect(),
        }
    }

    pub fn capped_components(&self) -> Vec<CappedComponent> {
        self.capped
            .iter()
            .map(|c| CappedComponent { component: c.component, class: c.class.clone().map(DisorientedCycle::new) })
            .collect()
    }
}

impl EventDoc {
    fn to_event(&self) -> bg::BandEvent {
        match self {
            EventDoc::HalfTwist { sign } => bg::BandEvent::HalfTwist { sign: *sign },
            EventDoc::Cross { id, band, over, sign } => {
                bg::BandEvent::Cross { id: id.clone(), band: band.clone(), over: *over, sign: *sign }
            }
            EventDoc::RibbonPass { disk, config, gap, entry } => bg::BandEvent::RibbonPass {
                disk: disk.clone(),
                config: match config {
                    ConfigDoc::L => bg::Config::L,
                    ConfigDoc::R => bg::Config::R,
                },
                gap: *gap,
                entry: match entry {
                    EntryDoc::Front => bg::Entry::Front,
                    EntryDoc::Back => bg::Entry::Back,
                },
            },
        }
    }
}
