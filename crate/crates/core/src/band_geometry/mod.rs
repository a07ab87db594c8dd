//! Band diagrams of ribbon-immersed surfaces, weighted crossing diagrams, the
//! pairing on disoriented cycles, and the framing of the boundary link.

mod boundary;
mod diagram;
mod pairing;
mod weighted;

pub use boundary::{
    boundary_components, boundary_link, boundary_parallel_linking, check_orientations, BoundaryComponent,
    BoundaryElement, Side,
};
pub use diagram::{Band, BandDiagram, BandEvent, Config, Entry, Slot};
pub use pairing::{
    check_cycle, core_diagram, double_pushoff, generator_cycles, gl_pairing_matrix, pairing, DisorientedCycle,
    PairingMatrix,
};
pub use weighted::{linking_number, Crossing, Strand, WeightedDiagram};
