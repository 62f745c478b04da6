//! Exact quaternionic constructions of the cubic Coxeter–Weyl groups, the
//! pyritohedral group, the fcc/bcc/sc lattices and the pseudoicosahedron /
//! pyritohedron families.
//!
//! All geometry is carried out in the field Q(√2, √5); nothing here touches
//! floating point except the decimal columns of the exporters.

pub mod algebra;
pub mod coxeter;
pub mod error;
pub mod export;
pub mod lattice;
pub mod par;
pub mod polyhedra;
pub mod qgroups;
pub mod transform;
pub mod verify;

pub use algebra::{FieldScalar, Quaternion};
pub use error::{Error, Result};
