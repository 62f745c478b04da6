//! OFF, OBJ and JSON writers.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::algebra::{FieldScalar, Quaternion};
use crate::error::{Error, Result};
use crate::polyhedra::{classify, Polyhedron};

/// Significant digits of the OFF and OBJ vertex columns.
pub const MESH_DIGITS: usize = 17;
/// Default significant digits of JSON decimals.
pub const JSON_DIGITS: usize = 50;

/// JSON decimal digits, overridable through `PYRITO_PRECISION`.
pub fn json_precision() -> usize {
    std::env::var("PYRITO_PRECISION")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&d: &usize| d > 0)
        .unwrap_or(JSON_DIGITS)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub source: String,
    pub name: String,
    pub counts: Counts,
    pub precision: usize,
    pub vertices_exact: Vec<Vec<String>>,
    pub vertices_decimal: Vec<Vec<String>>,
    pub faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
}

fn columns(points: &[Vec<FieldScalar>], digits: usize) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    let exact = points.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect();
    let decimal = points
        .iter()
        .map(|p| p.iter().map(|x| x.to_decimal(digits)).collect())
        .collect();
    (exact, decimal)
}

fn coords(q: &Quaternion) -> Vec<FieldScalar> {
    q.vector().into_iter().cloned().collect()
}

impl ExportRecord {
    pub fn from_polyhedron(poly: &Polyhedron, source: impl Into<String>, digits: usize) -> Self {
        let points: Vec<Vec<FieldScalar>> = poly.vertices().iter().map(coords).collect();
        let (vertices_exact, vertices_decimal) = columns(&points, digits);
        let (v, e, f) = poly.counts();
        Self {
            source: source.into(),
            name: classify(poly).to_string(),
            counts: Counts {
                vertices: v,
                edges: e,
                faces: f,
            },
            precision: digits,
            vertices_exact,
            vertices_decimal,
            faces: poly.faces().iter().map(|f| f.cycle.clone()).collect(),
            degenerate: poly.degenerate.clone(),
        }
    }

    /// A bare point set such as an orbit or a lattice shell.
    pub fn from_points(points: &[Vec<FieldScalar>], source: impl Into<String>, name: impl Into<String>, digits: usize) -> Self {
        let (vertices_exact, vertices_decimal) = columns(points, digits);
        Self {
            source: source.into(),
            name: name.into(),
            counts: Counts {
                vertices: points.len(),
                edges: 0,
                faces: 0,
            },
            precision: digits,
            vertices_exact,
            vertices_decimal,
            faces: Vec::new(),
            degenerate: None,
        }
    }

    /// Parses the exact columns back into field elements.
    pub fn exact_points(&self) -> Result<Vec<Vec<FieldScalar>>> {
        self.vertices_exact
            .iter()
            .map(|p| p.iter().map(|s| s.parse()).collect())
            .collect()
    }

    pub fn exact_quaternions(&self) -> Result<Vec<Quaternion>> {
        self.exact_points()?
            .into_iter()
            .map(|p| match <[FieldScalar; 3]>::try_from(p) {
                Ok([x, y, z]) => Ok(Quaternion::pure(x, y, z)),
                Err(p) => Err(Error::DimensionMismatch { expected: 3, got: p.len() }),
            })
            .collect()
    }
}

pub fn write_json<W: Write>(out: &mut W, record: &ExportRecord) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, record)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_json_records<W: Write>(out: &mut W, records: &[ExportRecord]) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)?;
    Ok(())
}

pub fn read_json(s: &str) -> Result<ExportRecord> {
    Ok(serde_json::from_str(s)?)
}

fn mesh_vertex(q: &Quaternion) -> String {
    q.vector().map(|x| x.to_decimal(MESH_DIGITS)).join(" ")
}

/// `OFF`, then `V F E`, vertex lines and `k i1 … ik` face lines with the
/// outward counter-clockwise orientation of the hull.
pub fn write_off<W: Write>(out: &mut W, poly: &Polyhedron) -> Result<()> {
    if !poly.has_faces() {
        return Err(Error::Faceless);
    }
    let (v, e, f) = poly.counts();
    writeln!(out, "OFF")?;
    writeln!(out, "{v} {f} {e}")?;
    for q in poly.vertices() {
        writeln!(out, "{}", mesh_vertex(q))?;
    }
    for face in poly.faces() {
        let idx: Vec<String> = face.cycle.iter().map(ToString::to_string).collect();
        writeln!(out, "{} {}", face.cycle.len(), idx.join(" "))?;
    }
    Ok(())
}

/// Wavefront OBJ with 1-based face indices.
pub fn write_obj<W: Write>(out: &mut W, poly: &Polyhedron) -> Result<()> {
    if !poly.has_faces() {
        return Err(Error::Faceless);
    }
    for q in poly.vertices() {
        writeln!(out, "v {}", mesh_vertex(q))?;
    }
    for face in poly.faces() {
        let idx: Vec<String> = face.cycle.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(out, "f {}", idx.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{pseudoicosahedron, pyritohedron};

    fn off_string(p: &Polyhedron) -> String {
        let mut buf = Vec::new();
        write_off(&mut buf, p).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn off_counts_lines() {
        let ico = pseudoicosahedron(&FieldScalar::tau(), &FieldScalar::one()).unwrap();
        assert_eq!(off_string(&ico).lines().nth(1), Some("12 20 30"));
        let pyr = pyritohedron(&FieldScalar::from_frac(1, 2), &FieldScalar::one()).unwrap();
        let off = off_string(&pyr);
        assert_eq!(off.lines().nth(1), Some("20 12 30"));
        assert!(off.lines().skip(22).all(|l| l.starts_with("5 ")));
    }

    #[test]
    fn obj_is_one_based() {
        let pyr = pyritohedron(&FieldScalar::from_frac(1, 2), &FieldScalar::one()).unwrap();
        let mut buf = Vec::new();
        write_obj(&mut buf, &pyr).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().filter(|l| l.starts_with("v ")).count(), 20);
        let idx: Vec<usize> = s
            .lines()
            .filter(|l| l.starts_with("f "))
            .flat_map(|l| l[2..].split(' ').map(|t| t.parse::<usize>().unwrap()).collect::<Vec<_>>())
            .collect();
        assert_eq!(idx.iter().min(), Some(&1));
        assert_eq!(idx.iter().max(), Some(&20));
    }

    #[test]
    fn faceless_input_is_refused() {
        let p = Polyhedron::unhulled(vec![Quaternion::e1()]);
        assert!(matches!(write_off(&mut Vec::new(), &p), Err(Error::Faceless)));
        assert!(matches!(write_obj(&mut Vec::new(), &p), Err(Error::Faceless)));
    }

    #[test]
    fn json_round_trip_and_tau_squared() {
        let ico = pseudoicosahedron(&FieldScalar::tau(), &FieldScalar::one()).unwrap();
        let rec = ExportRecord::from_polyhedron(&ico, "poly pseudoicosa --x tau", JSON_DIGITS);
        let mut buf = Vec::new();
        write_json(&mut buf, &rec).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"3/2 + 1/2*r5\""));
        let back = read_json(&text).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.exact_quaternions().unwrap(), ico.vertices());
        assert_eq!(back.name, "icosahedron");
    }
}
