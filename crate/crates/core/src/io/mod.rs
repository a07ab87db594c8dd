//! The JSON document format, command dispatch and report rendering.

mod commands;
mod report;
mod schema;

pub use commands::{run_command, Command};
pub use report::{Format, Report, Value};
pub use schema::{
    document_to_json, parse_input, BandDiagramDoc, BandDoc, CappedDoc, CobordismDoc, ComponentRefDoc, ConfigDoc,
    EntryDoc, EventDoc, InputDocument, Kind, OneHandleDoc, OverbridgeDoc, PassingCountDoc, SlotDoc, SurfaceDoc,
    TangleDoc, TraversalDoc, TwoHandleDoc, UnderbridgeDoc, VirtualBandDoc, VirtualBandsDoc, SCHEMA_VERSION,
};
