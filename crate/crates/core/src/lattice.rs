//! The fcc, bcc and sc lattices and the rank-2 hexagonal and square lattices.
//!
//! Rank-3 points use orthonormal coordinates `(x, y, z)` for `xe1 + ye2 + ze3`.
//! Rank-2 points use root coordinates `(a, b)` for `aα1 + bα2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{FieldScalar, Quaternion};
use crate::coxeter::{diagram, rational_coords, vector_to_quaternion, DiagramName};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::polyhedra::{hull_faces, Polyhedron};

pub type Point = Vec<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeKind {
    Fcc,
    /// Half-integer convention: all coordinates integers or all half-odd.
    Bcc,
    /// Twice the weights as generators: all coordinates even or all odd.
    BccDoubled,
    Sc,
    HexA2,
    SquareB2,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 6] = [
        LatticeKind::Fcc,
        LatticeKind::Bcc,
        LatticeKind::BccDoubled,
        LatticeKind::Sc,
        LatticeKind::HexA2,
        LatticeKind::SquareB2,
    ];

    pub fn rank(self) -> usize {
        match self {
            LatticeKind::HexA2 | LatticeKind::SquareB2 => 2,
            _ => 3,
        }
    }

    pub fn diagram(self) -> DiagramName {
        match self {
            LatticeKind::Fcc | LatticeKind::Bcc | LatticeKind::BccDoubled => DiagramName::D3,
            LatticeKind::Sc => DiagramName::B3,
            LatticeKind::HexA2 => DiagramName::A2,
            LatticeKind::SquareB2 => DiagramName::B2,
        }
    }

    /// Common denominator of all lattice coordinates.
    fn denominator(self) -> i64 {
        if self == LatticeKind::Bcc {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeKind::Fcc => "fcc",
            LatticeKind::Bcc => "bcc",
            LatticeKind::BccDoubled => "bcc-doubled",
            LatticeKind::Sc => "sc",
            LatticeKind::HexA2 => "hexA2",
            LatticeKind::SquareB2 => "squareB2",
        })
    }
}

impl FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        Ok(match key.as_str() {
            "fcc" | "d3" => LatticeKind::Fcc,
            "bcc" => LatticeKind::Bcc,
            "bccdoubled" | "bcc2" => LatticeKind::BccDoubled,
            "sc" | "cubic" => LatticeKind::Sc,
            "hexa2" | "hex" | "a2" => LatticeKind::HexA2,
            "squareb2" | "square" | "b2" => LatticeKind::SquareB2,
            _ => return Err(Error::UnknownLattice(s.to_string())),
        })
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half_odd(x: &BigRational) -> bool {
    !x.is_integer() && (x * rat(2)).is_integer()
}

pub fn member(kind: LatticeKind, p: &[BigRational]) -> bool {
    if p.len() != kind.rank() {
        return false;
    }
    let ints = p.iter().all(BigRational::is_integer);
    match kind {
        LatticeKind::Sc | LatticeKind::HexA2 | LatticeKind::SquareB2 => ints,
        LatticeKind::Fcc => ints && p.iter().fold(BigInt::zero(), |s, x| s + x.to_integer()).is_even(),
        LatticeKind::Bcc => ints || p.iter().all(half_odd),
        LatticeKind::BccDoubled => {
            ints && {
                let parity: Vec<bool> = p.iter().map(|x| x.to_integer().is_even()).collect();
                parity.iter().all(|&e| e) || parity.iter().all(|&e| !e)
            }
        }
    }
}

/// Membership of a pure quaternion; irrational coordinates are never members.
pub fn member_quaternion(kind: LatticeKind, q: &Quaternion) -> bool {
    if kind.rank() != 3 || !q.is_pure() {
        return false;
    }
    match rational_coords(&q.vector().map(Clone::clone)) {
        Some(p) => member(kind, &p),
        None => false,
    }
}

/// Squared length under the kind's inner product.
pub fn norm2(kind: LatticeKind, p: &[BigRational]) -> BigRational {
    let d = diagram(kind.diagram());
    let mut acc = BigRational::zero();
    for (i, x) in p.iter().enumerate() {
        for (j, y) in p.iter().enumerate() {
            let g = &d.ambient[i][j];
            if !g.is_zero() {
                acc += x * y * g;
            }
        }
    }
    acc
}

fn box_points(kind: LatticeKind, max_norm2: &BigRational, strategy: Strategy) -> Vec<Point> {
    let den = kind.denominator();
    // Rank-3 coordinates are orthonormal; both rank-2 forms dominate a
    // quarter of the sum of squares.
    let widen = if kind.rank() == 3 { 1 } else { 4 };
    let scaled = max_norm2 * rat(den * den * widen);
    let bound = scaled.ceil().to_integer().sqrt() + BigInt::one();
    let bound = bound.to_i64().unwrap_or(i64::MAX);
    let firsts: Vec<i64> = (-bound..=bound).collect();
    let rank = kind.rank();
    let d = rat(den);
    let mut points = par::flat_map(strategy, &firsts, |&m0| {
        let mut out = Vec::new();
        let mut rest = vec![-bound; rank - 1];
        loop {
            let mut p = vec![rat(m0) / &d];
            p.extend(rest.iter().map(|&m| rat(m) / &d));
            if member(kind, &p) && norm2(kind, &p) <= *max_norm2 {
                out.push(p);
            }
            let mut t = 0;
            while t < rest.len() && rest[t] == bound {
                rest[t] = -bound;
                t += 1;
            }
            if t == rest.len() {
                break;
            }
            rest[t] += 1;
        }
        out
    });
    points.sort();
    points
}

/// All lattice points with `norm² ≤ max_norm2`, sorted.
pub fn points_within(kind: LatticeKind, max_norm2: &BigRational) -> Vec<Point> {
    points_within_with(kind, max_norm2, Strategy::default())
}

pub fn points_within_with(kind: LatticeKind, max_norm2: &BigRational, strategy: Strategy) -> Vec<Point> {
    if max_norm2.is_negative() {
        return Vec::new();
    }
    box_points(kind, max_norm2, strategy)
}

/// All lattice points of squared length exactly `n2`, sorted.
pub fn shell(kind: LatticeKind, n2: &BigRational) -> Result<Vec<Point>> {
    shell_with(kind, n2, Strategy::default())
}

pub fn shell_with(kind: LatticeKind, n2: &BigRational, strategy: Strategy) -> Result<Vec<Point>> {
    if n2.is_negative() {
        return Err(Error::Domain(format!("norm² must be non-negative, got {n2}")));
    }
    Ok(box_points(kind, n2, strategy)
        .into_iter()
        .filter(|p| norm2(kind, p) == *n2)
        .collect())
}

fn rows(rows: &[&[(i64, i64)]]) -> Vec<Point> {
    rows.iter()
        .map(|r| r.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect())
        .collect()
}

/// Generating vectors: roots for fcc, weights for bcc, the frame for sc.
pub fn lattice_basis(kind: LatticeKind) -> Vec<Point> {
    match kind {
        LatticeKind::Fcc | LatticeKind::HexA2 => diagram(kind.diagram()).roots,
        LatticeKind::Bcc => diagram(DiagramName::D3).weights,
        LatticeKind::BccDoubled => diagram(DiagramName::D3)
            .weights
            .iter()
            .map(|w| w.iter().map(|x| x * rat(2)).collect())
            .collect(),
        LatticeKind::Sc => rows(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (1, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)]]),
        // l1 = α1 + α2, l2 = α2.
        LatticeKind::SquareB2 => rows(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]),
    }
}

#[derive(Clone, Debug)]
pub struct WignerSeitzCell {
    pub kind: LatticeKind,
    /// Sorted for rank 3, counter-clockwise in root coordinates for rank 2.
    pub vertices: Vec<Point>,
    /// The hulled cell; rank-2 cells are polygons and have none.
    pub polyhedron: Option<Polyhedron>,
}

impl WignerSeitzCell {
    pub fn quaternions(&self) -> Result<Vec<Quaternion>> {
        self.vertices.iter().map(|p| point_to_quaternion(p)).collect()
    }
}

pub fn point_to_quaternion(p: &[BigRational]) -> Result<Quaternion> {
    let v: Vec<FieldScalar> = p.iter().cloned().map(FieldScalar::from_rational).collect();
    vector_to_quaternion(&v)
}

fn orbit_points(name: DiagramName, coords: &[i64], scale: &FieldScalar) -> Vec<Point> {
    let d = diagram(name);
    let c: Vec<FieldScalar> = coords.iter().map(|&x| FieldScalar::from_int(x)).collect();
    d.orbit(&c, scale)
        .expect("coordinates match the rank")
        .points
        .iter()
        .map(|p| rational_coords(p).expect("rational weights"))
        .collect()
}

fn det2(o: &[BigRational], a: &[BigRational], b: &[BigRational]) -> BigRational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Counter-clockwise order of points in convex position.
fn order_polygon(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    let mut out = vec![pts[0].clone()];
    loop {
        let cur = out.last().expect("nonempty").clone();
        let next = pts
            .iter()
            .find(|c| **c != cur && pts.iter().all(|r| det2(&cur, c, r) >= BigRational::zero()))
            .expect("convex position")
            .clone();
        if next == out[0] {
            break;
        }
        out.push(next);
    }
    out
}

/// The Wigner–Seitz cell from its weight-orbit description.
pub fn wigner_seitz(kind: LatticeKind) -> WignerSeitzCell {
    let one = FieldScalar::one();
    let vertices: Vec<Point> = match kind {
        LatticeKind::Fcc => [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .flat_map(|c| orbit_points(DiagramName::D3, c, &one))
            .collect(),
        LatticeKind::Bcc => orbit_points(DiagramName::D3, &[1, 1, 1], &FieldScalar::from_frac(1, 4)),
        LatticeKind::BccDoubled => orbit_points(DiagramName::D3, &[1, 1, 1], &FieldScalar::from_frac(1, 2)),
        LatticeKind::Sc => orbit_points(DiagramName::B3, &[0, 0, 1], &one),
        LatticeKind::HexA2 => [[1, 0], [0, 1]]
            .iter()
            .flat_map(|c| orbit_points(DiagramName::A2, c, &one))
            .collect(),
        LatticeKind::SquareB2 => orbit_points(DiagramName::B2, &[0, 1], &one),
    };
    if kind.rank() == 2 {
        return WignerSeitzCell {
            kind,
            vertices: order_polygon(vertices),
            polyhedron: None,
        };
    }
    let mut vertices = vertices;
    vertices.sort();
    vertices.dedup();
    let qs: Vec<Quaternion> = vertices.iter().map(|p| point_to_quaternion(p).expect("rank 3")).collect();
    WignerSeitzCell {
        kind,
        vertices,
        polyhedron: Some(hull_faces(&qs).expect("cells are solid")),
    }
}

/// The corner unit cube `0, eᵢ, eᵢ + eⱼ, e1 + e2 + e3`.
pub fn primitive_cell_sc() -> Vec<Quaternion> {
    let mut out = Vec::with_capacity(8);
    for bits in 0..8 {
        out.push(Quaternion::pure_ints(bits & 1, bits >> 1 & 1, bits >> 2 & 1));
    }
    out.sort();
    out
}

/// Face centers, edge midpoints and vertices of the sc Voronoi cube: the
/// B3 orbits of `ω1/2`, `ω2/2` and `ω3`.
pub fn sc_support_orbits() -> [Vec<Point>; 3] {
    let half = FieldScalar::from_frac(1, 2);
    [
        orbit_points(DiagramName::B3, &[1, 0, 0], &half),
        orbit_points(DiagramName::B3, &[0, 1, 0], &half),
        orbit_points(DiagramName::B3, &[0, 0, 1], &FieldScalar::one()),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VoronoiVertex {
    pub vertex: Vec<String>,
    /// Nonzero lattice points exactly as far from the vertex as the origin.
    pub equidistant: usize,
    /// Nonzero lattice points strictly nearer than the origin.
    pub nearer: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VoronoiReport {
    pub kind: LatticeKind,
    pub vertices: Vec<VoronoiVertex>,
}

impl VoronoiReport {
    /// No lattice point is nearer than 0 and each vertex has at least `rank`
    /// equidistant neighbors.
    pub fn passes(&self) -> bool {
        let need = if self.kind == LatticeKind::HexA2 || self.kind == LatticeKind::SquareB2 {
            2
        } else {
            3
        };
        !self.vertices.is_empty() && self.vertices.iter().all(|v| v.nearer == 0 && v.equidistant >= need)
    }
}

/// Brute-force Voronoi test of a candidate cell. A lattice point farther
/// than `2|v|` from the origin cannot be nearer to `v` than 0, so a finite
/// ball suffices.
pub fn voronoi_check(cell: &WignerSeitzCell) -> VoronoiReport {
    voronoi_check_with(cell, Strategy::default())
}

pub fn voronoi_check_with(cell: &WignerSeitzCell, strategy: Strategy) -> VoronoiReport {
    let kind = cell.kind;
    let r_max = cell.vertices.iter().map(|v| norm2(kind, v)).max().unwrap_or_else(BigRational::zero);
    let neighbors: Vec<Point> = points_within_with(kind, &(r_max * rat(4)), strategy)
        .into_iter()
        .filter(|p| p.iter().any(|x| !x.is_zero()))
        .collect();
    let vertices = par::map(strategy, &cell.vertices, |v| {
        let r = norm2(kind, v);
        let (mut equidistant, mut nearer) = (0, 0);
        for l in &neighbors {
            let diff: Point = v.iter().zip(l).map(|(a, b)| a - b).collect();
            match norm2(kind, &diff).cmp(&r) {
                std::cmp::Ordering::Equal => equidistant += 1,
                std::cmp::Ordering::Less => nearer += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
        VoronoiVertex {
            vertex: v.iter().map(ToString::to_string).collect(),
            equidistant,
            nearer,
        }
    });
    VoronoiReport { kind, vertices }
}

fn a2_weight_lattice_point(a: i64, b: i64) -> Point {
    // aω1 + bω2 in root coordinates, ω1 = (2α1 + α2)/3, ω2 = (α1 + 2α2)/3.
    vec![BigRational::new((2 * a + b).into(), 3.into()), BigRational::new((a + 2 * b).into(), 3.into())]
}

/// Decimal check that the A2 root lattice, rotated by 30° and shrunk by
/// `√3`, is the weight lattice, on all root points with `norm² ≤ max_norm2`.
pub fn a2_root_weight_similarity(max_norm2: i64, tolerance: f64) -> bool {
    use crate::coxeter::orthonormal_embed_a2;
    let embed = |p: &Point| orthonormal_embed_a2(p).expect("rank 2").to_f64();
    let roots = points_within(LatticeKind::HexA2, &rat(max_norm2));
    let bound = (max_norm2 as f64).sqrt() as i64 + 2;
    let mut weights: Vec<[f64; 2]> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let w = a2_weight_lattice_point(a, b);
            if norm2(LatticeKind::HexA2, &w) * rat(3) <= rat(max_norm2) {
                weights.push(embed(&w));
            }
        }
    }
    if roots.len() != weights.len() {
        return false;
    }
    let (s, c) = (std::f64::consts::FRAC_PI_6.sin(), std::f64::consts::FRAC_PI_6.cos());
    let k = 1.0 / 3f64.sqrt();
    roots.iter().all(|p| {
        let [x, y] = embed(p);
        let r = [k * (c * x - s * y), k * (s * x + c * y)];
        weights
            .iter()
            .any(|w| (w[0] - r[0]).abs() < tolerance && (w[1] - r[1]).abs() < tolerance)
    })
}
