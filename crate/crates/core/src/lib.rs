//! Homology and intersection pairings of branched double covers computed from
//! combinatorial diagram data.
//!
//! The crate works with *disoriented* chain complexes: chain complexes whose
//! generators are the handles of a tangle diagram or of a surface description,
//! and whose boundary maps count how disoriented cores run into and out of the
//! lower-dimensional handles. Their homology is the shifted reduced homology of
//! the double branched cover.
//!
//! * [`chain_core`]: integer matrices, Smith normal form, homology, form inertia.
//! * [`tangle_model`]: bridge diagrams of tangles and links.
//! * [`surface_model`]: handle descriptions of surfaces in the 4-ball.
//! * [`band_geometry`]: band diagrams, weighted linking numbers, the pairing.
//! * [`invariants`]: link signatures, cobordism signature change, determinants.
//! * [`io`]: the JSON document format and the report layer behind the CLI.

#![allow(clippy::needless_range_loop)]

pub mod band_geometry;
pub mod chain_core;
pub mod error;
pub mod invariants;
pub mod io;
pub mod surface_model;
pub mod tangle_model;

pub mod cover;

mod ids;

pub use error::{Error, Result};
