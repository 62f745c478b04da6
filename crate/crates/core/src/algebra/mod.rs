//! Exact arithmetic in Q(√2, √5) and the quaternion algebra over it.

pub mod decimal;
mod field;
mod parse;
mod quaternion;

pub use field::FieldScalar;
pub use quaternion::Quaternion;

/// Shorthand for a pure quaternion with field-literal components.
///
/// Panics on malformed literals; intended for tables and tests.
pub fn vec3(x: &str, y: &str, z: &str) -> Quaternion {
    let p = |s: &str| s.parse::<FieldScalar>().unwrap_or_else(|e| panic!("bad literal {s:?}: {e}"));
    Quaternion::pure(p(x), p(y), p(z))
}
