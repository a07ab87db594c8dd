//! Exact integer linear algebra: matrices, Smith normal form, homology of
//! bounded free chain complexes, and inertia of symmetric forms.

mod complex;
mod form;
mod group;
mod lattice;
mod matrix;
mod snf;

pub use complex::{homology_at, DisorientedComplex};
pub use form::{signature, signature_of_form, FormSignature};
pub use group::AbelianGroup;
pub use lattice::{hermite_basis, kernel_basis, saturation_complement, unimodular_inverse};
pub use matrix::IntMatrix;
pub use snf::{smith_form, smith_normal_form, SmithForm};
