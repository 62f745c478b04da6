//! Convex polyhedra with exact vertices: hulls, the pseudoicosahedron and
//! pyritohedron families, duals and recognition of the named solids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{FieldScalar, Quaternion};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::qgroups::{point_group, GroupName};

/// A face: vertex indices counter-clockwise seen from outside, and the
/// supporting plane `(normal, y) = offset` with `normal` pointing outward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub cycle: Vec<usize>,
    pub normal: Quaternion,
    pub offset: FieldScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    vertices: Vec<Quaternion>,
    faces: Vec<Face>,
    /// Set when a family parameter collapses the generic vertex set.
    pub degenerate: Option<String>,
}

fn sorted_unique(points: impl IntoIterator<Item = Quaternion>) -> Vec<Quaternion> {
    points.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Convex hull of a finite set of pure quaternions.
///
/// Brute force over vertex triples with exact orientation tests; coplanar
/// facets are merged into one face. Points that are not extreme are dropped.
pub fn hull_faces(points: &[Quaternion]) -> Result<Polyhedron> {
    let pts = sorted_unique(points.iter().cloned());
    if pts.iter().any(|p| !p.is_pure()) {
        return Err(Error::NotPure);
    }
    let n = pts.len();
    if n < 4 {
        return Err(Error::DegenerateHull(format!("{n} distinct points")));
    }
    let mut planes: Vec<(Vec<usize>, Quaternion, FieldScalar)> = Vec::new();
    let mut covered: Vec<BTreeSet<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let eij = &pts[j] - &pts[i];
            for k in j + 1..n {
                if covered.iter().any(|f| f.contains(&i) && f.contains(&j) && f.contains(&k)) {
                    continue;
                }
                let mut normal = eij.cross(&(&pts[k] - &pts[i]));
                if normal.is_zero() {
                    continue;
                }
                let mut offset = normal.dot(&pts[i]);
                let (mut pos, mut neg) = (false, false);
                let mut on = Vec::new();
                for (m, p) in pts.iter().enumerate() {
                    match (normal.dot(p) - &offset).sign() {
                        1 => pos = true,
                        -1 => neg = true,
                        _ => on.push(m),
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg || !(pos || neg) {
                    continue;
                }
                if pos {
                    normal = -normal;
                    offset = -offset;
                }
                covered.push(on.iter().copied().collect());
                planes.push((on, normal, offset));
            }
        }
    }
    if planes.is_empty() {
        return Err(Error::DegenerateHull("all points are coplanar".into()));
    }
    let cycles: Vec<Vec<usize>> = planes.iter().map(|(on, normal, _)| wrap_face(&pts, on, normal)).collect();
    let used: BTreeSet<usize> = cycles.iter().flatten().copied().collect();
    let remap: BTreeMap<usize, usize> = used.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let vertices: Vec<Quaternion> = used.iter().map(|&i| pts[i].clone()).collect();
    let mut faces: Vec<Face> = cycles
        .into_iter()
        .zip(planes)
        .map(|(cycle, (_, normal, offset))| {
            let mut cycle: Vec<usize> = cycle.iter().map(|i| remap[i]).collect();
            let start = (0..cycle.len()).min_by_key(|&t| cycle[t]).unwrap_or(0);
            cycle.rotate_left(start);
            Face { cycle, normal, offset }
        })
        .collect();
    faces.sort_by(|a, b| a.cycle.cmp(&b.cycle));
    Ok(Polyhedron {
        vertices,
        faces,
        degenerate: None,
    })
}

/// Orders the extreme points of a planar set counter-clockwise about `normal`.
fn wrap_face(pts: &[Quaternion], on: &[usize], normal: &Quaternion) -> Vec<usize> {
    // Left-of test seen from the tip of `normal`.
    let turn = |a: usize, b: usize, c: usize| -> i8 {
        normal
            .dot(&(&pts[b] - &pts[a]).cross(&(&pts[c] - &pts[a])))
            .sign()
    };
    let dist = |a: usize, b: usize| {
        let d = &pts[b] - &pts[a];
        d.dot(&d)
    };
    // The smallest point in lexicographic coefficient order need not be
    // extreme in the real order, so start from the real-order minimum.
    let start = *on
        .iter()
        .min_by(|&&a, &&b| {
            let (pa, pb) = (pts[a].vector(), pts[b].vector());
            pa[0]
                .real_cmp(pb[0])
                .then_with(|| pa[1].real_cmp(pb[1]))
                .then_with(|| pa[2].real_cmp(pb[2]))
        })
        .expect("nonempty face");
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        let mut next = if on[0] == cur { on[1] } else { on[0] };
        for &c in on {
            if c == cur || c == next {
                continue;
            }
            match turn(cur, next, c) {
                -1 => next = c,
                0 if dist(cur, c).real_cmp(&dist(cur, next)).is_gt() => next = c,
                _ => {}
            }
        }
        if next == start {
            break;
        }
        cycle.push(next);
        cur = next;
        if cycle.len() > on.len() {
            unreachable!("gift wrapping did not close");
        }
    }
    cycle
}

impl Polyhedron {
    /// A vertex set without faces; exporters that need faces will refuse it.
    pub fn unhulled(vertices: impl IntoIterator<Item = Quaternion>) -> Self {
        Self {
            vertices: sorted_unique(vertices),
            faces: Vec::new(),
            degenerate: None,
        }
    }

    pub fn with_degeneracy(mut self, note: Option<String>) -> Self {
        self.degenerate = note;
        self
    }

    pub fn vertices(&self) -> &[Quaternion] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn has_faces(&self) -> bool {
        !self.faces.is_empty()
    }

    /// Unordered edges `(i, j)`, `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for f in &self.faces {
            for (t, &a) in f.cycle.iter().enumerate() {
                let b = f.cycle[(t + 1) % f.cycle.len()];
                set.insert((a.min(b), a.max(b)));
            }
        }
        set.into_iter().collect()
    }

    /// `(V, E, F)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges().len(), self.faces.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (v, e, f) = self.counts();
        v as i64 - e as i64 + f as i64
    }

    /// Number of faces by number of sides.
    pub fn face_census(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for f in &self.faces {
            *m.entry(f.cycle.len()).or_insert(0) += 1;
        }
        m
    }

    /// Every face vertex satisfies its plane equation exactly.
    pub fn faces_planar(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.cycle.iter().all(|&i| f.normal.dot(&self.vertices[i]) == f.offset))
    }

    /// Each face is counter-clockwise seen from outside and every vertex
    /// lies on the inner side of every face plane.
    pub fn faces_convex_and_outward(&self) -> bool {
        self.faces.iter().all(|f| {
            let c = &f.cycle;
            let k = c.len();
            let ccw = (0..k).all(|t| {
                let (a, b, d) = (&self.vertices[c[t]], &self.vertices[c[(t + 1) % k]], &self.vertices[c[(t + 2) % k]]);
                f.normal.dot(&(b - a).cross(&(d - a))).is_positive()
            });
            ccw && self.vertices.iter().all(|v| !(f.normal.dot(v) - &f.offset).is_positive())
        })
    }

    /// Squared length of every edge, in edge order.
    pub fn edge_lengths_squared(&self) -> Vec<FieldScalar> {
        self.edges()
            .iter()
            .map(|&(a, b)| {
                let d = &self.vertices[a] - &self.vertices[b];
                d.dot(&d)
            })
            .collect()
    }

    pub fn distinct_edge_lengths_squared(&self) -> BTreeSet<FieldScalar> {
        self.edge_lengths_squared().into_iter().collect()
    }

    pub fn all_edges_equal(&self) -> bool {
        self.distinct_edge_lengths_squared().len() == 1
    }

    /// Triangular faces split by shape: `(equilateral, isosceles, scalene)`.
    pub fn triangle_census(&self) -> (usize, usize, usize) {
        let mut out = (0, 0, 0);
        for f in self.faces.iter().filter(|f| f.cycle.len() == 3) {
            let l: Vec<FieldScalar> = (0..3)
                .map(|t| {
                    let d = &self.vertices[f.cycle[t]] - &self.vertices[f.cycle[(t + 1) % 3]];
                    d.dot(&d)
                })
                .collect();
            let distinct: BTreeSet<&FieldScalar> = l.iter().collect();
            match distinct.len() {
                1 => out.0 += 1,
                2 => out.1 += 1,
                _ => out.2 += 1,
            }
        }
        out
    }

    pub fn scaled(&self, k: &FieldScalar) -> Result<Polyhedron> {
        hull_faces(&self.vertices.iter().map(|v| v.scale(k)).collect::<Vec<_>>())
            .map(|p| p.with_degeneracy(self.degenerate.clone()))
    }
}

/// `s` with `a = s·b` as point sets, `s > 0`, if one exists.
pub fn proportionality(a: &[Quaternion], b: &[Quaternion]) -> Option<FieldScalar> {
    if a.len() != b.len() || a.is_empty() {
        return None;
    }
    let target: BTreeSet<&Quaternion> = a.iter().collect();
    let a0 = &a[0];
    for cand in b {
        let Some(k) = (1..4).find(|&k| !cand.components()[k].is_zero()) else {
            continue;
        };
        let Ok(s) = a0.components()[k].checked_div(&cand.components()[k]) else {
            continue;
        };
        if !s.is_positive() || cand.scale(&s) != *a0 {
            continue;
        }
        if b.iter().all(|v| target.contains(&v.scale(&s))) {
            return Some(s);
        }
    }
    None
}

fn cyclic_signed(u: &FieldScalar, v: &FieldScalar, w: &FieldScalar) -> Vec<Quaternion> {
    let mut out = Vec::new();
    for shift in 0..3 {
        for sign in 0..8u8 {
            let s = |bit: u8, x: &FieldScalar| if sign >> bit & 1 == 1 { -x } else { x.clone() };
            let c = [s(0, u), s(1, v), s(2, w)];
            out.push(Quaternion::pure(
                c[(3 - shift) % 3].clone(),
                c[(4 - shift) % 3].clone(),
                c[(5 - shift) % 3].clone(),
            ));
        }
    }
    sorted_unique(out)
}

fn cube_points(k: &FieldScalar) -> Vec<Quaternion> {
    cyclic_signed(k, k, k)
}

fn require_positive(name: &str, v: &FieldScalar) -> Result<()> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {v}")))
    }
}

/// Vertices `a1{±(1+x)e1 ± xe2, ±(1+x)e2 ± xe3, ±(1+x)e3 ± xe1}`.
pub fn pseudoicosahedron_vertices(x: &FieldScalar, a1: &FieldScalar) -> Vec<Quaternion> {
    let one = FieldScalar::one();
    cyclic_signed(&(a1 * &(&one + x)), &(a1 * x), &FieldScalar::zero())
}

fn pseudo_degeneracy(x: &FieldScalar) -> Option<String> {
    if x.is_zero() {
        Some("x = 0: the vertices collapse to the six vertices of an octahedron".into())
    } else if *x == FieldScalar::from_int(-1) {
        Some("x = -1: the vertices collapse to the six points ±a1·e_i".into())
    } else if *x == FieldScalar::from_frac(-1, 2) {
        Some("x = -1/2: the twelve vertices form a cuboctahedron".into())
    } else {
        None
    }
}

pub fn pseudoicosahedron(x: &FieldScalar, a1: &FieldScalar) -> Result<Polyhedron> {
    require_positive("a1", a1)?;
    Ok(hull_faces(&pseudoicosahedron_vertices(x, a1))?.with_degeneracy(pseudo_degeneracy(x)))
}

/// Each vertex of `pseudoicosahedron(x, a1)` as `c + x·l`; the `l` parts are
/// the cuboctahedron approached by `P(x)/x` as `x → ∞`.
pub fn pseudoicosahedron_linear_parts(a1: &FieldScalar) -> Vec<(Quaternion, Quaternion)> {
    let z = FieldScalar::zero();
    let mut out = Vec::new();
    for shift in 0..3 {
        for sign in 0..4u8 {
            let s1 = if sign & 1 == 1 { -a1 } else { a1.clone() };
            let s2 = if sign & 2 == 2 { -a1 } else { a1.clone() };
            let place = |a: FieldScalar, b: FieldScalar| {
                let c = [a, b, z.clone()];
                Quaternion::pure(c[(3 - shift) % 3].clone(), c[(4 - shift) % 3].clone(), c[(5 - shift) % 3].clone())
            };
            out.push((place(s1.clone(), z.clone()), place(s1, s2)));
        }
    }
    out
}

/// Image under `r1`, the exchange `e1 ↔ e2`.
pub fn mirror(poly: &Polyhedron) -> Result<Polyhedron> {
    let image: Vec<Quaternion> = poly
        .vertices()
        .iter()
        .map(|v| {
            let [x, y, z] = v.vector();
            Quaternion::pure(y.clone(), x.clone(), z.clone())
        })
        .collect();
    Ok(hull_faces(&image)?.with_degeneracy(poly.degenerate.clone()))
}

/// Squared edge lengths of the pseudoicosahedron triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeProfile {
    /// `a1²(1 + x + x²)`.
    pub equilateral: FieldScalar,
    /// `2a1²x²`.
    pub isosceles_base: FieldScalar,
}

impl EdgeProfile {
    pub fn is_regular(&self) -> bool {
        self.equilateral == self.isosceles_base
    }
}

/// Edge lengths in the normalization `1 + x + x²`, `2x²` (times `a1²`).
/// Euclidean squared distances between the vertices are twice these.
pub fn edge_length_profile(x: &FieldScalar, a1: &FieldScalar) -> EdgeProfile {
    let a2 = a1 * a1;
    let one = FieldScalar::one();
    EdgeProfile {
        equilateral: &a2 * &(&(&one + x) + &(x * x)),
        isosceles_base: &a2 * &(&FieldScalar::from_int(2) * &(x * x)),
    }
}

/// `h = x/(x + 1)`.
pub fn h_of_x(x: &FieldScalar) -> Result<FieldScalar> {
    x.checked_div(&(x + &FieldScalar::one()))
        .map_err(|_| Error::Domain("h = x/(x+1) is undefined at x = -1".into()))
}

/// `x = h/(1 − h)`.
pub fn x_of_h(h: &FieldScalar) -> Result<FieldScalar> {
    h.checked_div(&(&FieldScalar::one() - h))
        .map_err(|_| Error::Domain("x = h/(1-h) is undefined at h = 1".into()))
}

/// Pyritohedron parameter of the polar dual of `pseudoicosahedron(x, ·)`:
/// `(h, mirrored)` with the dual proportional to `pyritohedron(h, ·)`, or to
/// its mirror image when `mirrored`.
///
/// `h = x/(1+x)` for `x > 0`. For negative `x` the hull has a different
/// face lattice: `P(x)` is congruent to `P(−x/(1+2x))` on `(−1/2, 0)` and to
/// the mirror of `P(−1−x)` below `−1/2`.
pub fn dual_parameter(x: &FieldScalar) -> Result<(FieldScalar, bool)> {
    let one = FieldScalar::one();
    let half = FieldScalar::from_frac(-1, 2);
    if x.is_zero() || *x == half || *x == -&one {
        return Err(Error::Domain(format!("the dual is not a pyritohedron at x = {x}")));
    }
    let h = h_of_x(x)?;
    Ok(if x.is_positive() {
        (h, false)
    } else if x.real_cmp(&half).is_gt() {
        (-h, false)
    } else if x.real_cmp(&-&one).is_gt() {
        (-h.inv()?, true)
    } else {
        (h.inv()?, true)
    })
}

/// Vertices `(a1/2)·({±(1−h²)e1 ± (1+h)e2, cyclic} ∪ (±e1 ± e2 ± e3))`.
pub fn pyritohedron_vertices(h: &FieldScalar, a1: &FieldScalar) -> Vec<Quaternion> {
    let one = FieldScalar::one();
    let k = a1 * &FieldScalar::from_frac(1, 2);
    let u = &k * &(&one - &(h * h));
    let v = &k * &(&one + h);
    let mut all = cyclic_signed(&u, &v, &FieldScalar::zero());
    all.extend(cube_points(&k));
    sorted_unique(all)
}

pub fn pyritohedron(h: &FieldScalar, a1: &FieldScalar) -> Result<Polyhedron> {
    require_positive("a1", a1)?;
    if *h == FieldScalar::from_int(-1) {
        return Err(Error::Domain("the pyritohedron is undefined at h = -1".into()));
    }
    let note = if h.is_one() {
        Some("h = 1: the vertices form a rhombic dodecahedron".into())
    } else if h.is_zero() {
        Some("h = 0: the twelve-point orbit lies on the cube edges".into())
    } else if h.is_negative() {
        Some(format!("h = {h} < 0: the twelve-point orbit lies inside the cube"))
    } else if h.real_cmp(&FieldScalar::one()).is_gt() {
        Some(format!("h = {h} > 1: the cube vertices lie inside the hull"))
    } else {
        None
    };
    Ok(hull_faces(&pyritohedron_vertices(h, a1))?.with_degeneracy(note))
}

/// The vectors of the pentagon construction of the pyritohedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyritoNormals {
    pub b1: Quaternion,
    pub b4: Quaternion,
    pub b5: Quaternion,
    /// `ρ = (1 + 2x)/(2(1 + x)²)`.
    pub rho: FieldScalar,
    /// `d = (1 + x)e1 + xe2`.
    pub d: Quaternion,
}

pub fn pyritohedron_normals(x: &FieldScalar) -> Result<PyritoNormals> {
    let one = FieldScalar::one();
    let xp1 = &one + x;
    if xp1.is_zero() {
        return Err(Error::Domain("the normals are undefined at x = -1".into()));
    }
    let z = FieldScalar::zero();
    let rho = (&one + &(&FieldScalar::from_int(2) * x)).checked_div(&(&FieldScalar::from_int(2) * &(&xp1 * &xp1)))?;
    Ok(PyritoNormals {
        b1: Quaternion::pure(one.clone(), xp1.clone(), z.clone()),
        b4: Quaternion::pure(xp1.clone(), z.clone(), one.clone()),
        b5: Quaternion::pure(xp1.clone(), z, -&one),
        rho,
        d: Quaternion::pure(xp1, x.clone(), FieldScalar::zero()),
    })
}

fn omega2() -> Quaternion {
    let h = FieldScalar::from_frac(1, 2);
    Quaternion::pure(h.clone(), h.clone(), -&h)
}

fn omega3() -> Quaternion {
    let h = FieldScalar::from_frac(1, 2);
    Quaternion::pure(h.clone(), h.clone(), h)
}

impl PyritoNormals {
    /// `((ρb1 − ω2), d)`.
    pub fn coplanarity_residue(&self) -> FieldScalar {
        (&self.b1.scale(&self.rho) - &omega2()).dot(&self.d)
    }

    /// `ρb1, ρb4, ρb5, ω2, ω3` all lie in one plane orthogonal to `d`.
    pub fn pentagon_coplanar(&self) -> bool {
        let w2 = omega2();
        [&self.b1, &self.b4, &self.b5]
            .iter()
            .map(|b| b.scale(&self.rho))
            .chain([omega3()])
            .all(|p| (&p - &w2).dot(&self.d).is_zero())
    }

    /// The pentagon `ρb1, ρb4, ρb5, ω2, ω3`.
    pub fn pentagon(&self) -> [Quaternion; 5] {
        [
            self.b1.scale(&self.rho),
            self.b4.scale(&self.rho),
            self.b5.scale(&self.rho),
            omega2(),
            omega3(),
        ]
    }

    /// All twelve normals, the `T_h` orbit of `b1`.
    pub fn normal_orbit(&self) -> Vec<Quaternion> {
        point_group(GroupName::Th).orbit(&self.b1)
    }
}

/// Polar reciprocal: one vertex `n/c` per face plane `(n, y) = c`.
pub fn polar_dual(poly: &Polyhedron) -> Result<Polyhedron> {
    if !poly.has_faces() {
        return Err(Error::Faceless);
    }
    let mut dual = Vec::with_capacity(poly.faces().len());
    for f in poly.faces() {
        if !f.offset.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        dual.push(f.normal.scale(&f.offset.inv()?));
    }
    hull_faces(&dual)
}

/// Edge midpoints of `pseudoicosahedron(x, 2a1)`: the 24-point orbit
/// `a1{±xe1 ± (1+x)e2 ± (1+2x)e3, cyclic}` and the axis points `2a1(1+x){±eᵢ}`.
pub fn pseudoicosidodecahedron_vertices(x: &FieldScalar, a1: &FieldScalar) -> Vec<Quaternion> {
    let one = FieldScalar::one();
    let xp1 = &one + x;
    let x2p1 = &xp1 + x;
    let mut all = cyclic_signed(&(a1 * x), &(a1 * &xp1), &(a1 * &x2p1));
    let axis = &(&FieldScalar::from_int(2) * a1) * &xp1;
    all.extend(cyclic_signed(&axis, &FieldScalar::zero(), &FieldScalar::zero()));
    sorted_unique(all)
}

pub fn pseudoicosidodecahedron(x: &FieldScalar, a1: &FieldScalar) -> Result<Polyhedron> {
    require_positive("a1", a1)?;
    let note = pseudo_degeneracy(x);
    Ok(hull_faces(&pseudoicosidodecahedron_vertices(x, a1))?.with_degeneracy(note))
}

/// Deduplicated edge midpoints of a hulled polyhedron.
pub fn edge_midpoints(poly: &Polyhedron) -> Vec<Quaternion> {
    let half = FieldScalar::from_frac(1, 2);
    let v = poly.vertices();
    sorted_unique(poly.edges().iter().map(|&(a, b)| (&v[a] + &v[b]).scale(&half)))
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// `x_n = F_{n+1}/F_n`.
pub fn fibonacci_ratio(n: u32) -> BigRational {
    BigRational::new(fibonacci(n + 1), fibonacci(n))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum A1Policy {
    /// `a1 = F_n`, which makes every vertex integral.
    #[default]
    ClearDenominators,
    /// `a1 = 1`.
    Unit,
}

#[derive(Clone, Debug)]
pub struct FibonacciMember {
    pub n: u32,
    pub x: BigRational,
    pub a1: BigRational,
    pub poly: Polyhedron,
}

pub fn fibonacci_family(n_max: u32, policy: A1Policy) -> Result<Vec<FibonacciMember>> {
    fibonacci_family_with(n_max, policy, Strategy::default())
}

pub fn fibonacci_family_with(n_max: u32, policy: A1Policy, strategy: Strategy) -> Result<Vec<FibonacciMember>> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let ns: Vec<u32> = (1..=n_max).collect();
    par::map(strategy, &ns, |&n| {
        let x = fibonacci_ratio(n);
        let a1 = match policy {
            A1Policy::ClearDenominators => BigRational::from_integer(fibonacci(n)),
            A1Policy::Unit => BigRational::one(),
        };
        let poly = pseudoicosahedron(&FieldScalar::from_rational(x.clone()), &FieldScalar::from_rational(a1.clone()))?;
        Ok(FibonacciMember { n, x, a1, poly })
    })
    .into_iter()
    .collect()
}

/// `(sign(x_n − τ), |x_n − τ|)` for `n = 1..=n_max`.
pub fn fibonacci_convergence(n_max: u32) -> Vec<(i8, FieldScalar)> {
    (1..=n_max)
        .map(|n| {
            let diff = FieldScalar::from_rational(fibonacci_ratio(n)) - FieldScalar::tau();
            (diff.sign(), diff.abs())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolidName {
    Tetrahedron,
    Octahedron,
    Cube,
    Cuboctahedron,
    RhombicDodecahedron,
    TruncatedOctahedron,
    Icosahedron,
    Dodecahedron,
    Icosidodecahedron,
    Pseudoicosahedron,
    Pyritohedron,
    Pseudoicosidodecahedron,
    Unknown,
}

impl fmt::Display for SolidName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolidName::Tetrahedron => "tetrahedron",
            SolidName::Octahedron => "octahedron",
            SolidName::Cube => "cube",
            SolidName::Cuboctahedron => "cuboctahedron",
            SolidName::RhombicDodecahedron => "rhombic dodecahedron",
            SolidName::TruncatedOctahedron => "truncated octahedron",
            SolidName::Icosahedron => "icosahedron",
            SolidName::Dodecahedron => "dodecahedron",
            SolidName::Icosidodecahedron => "icosidodecahedron",
            SolidName::Pseudoicosahedron => "pseudoicosahedron",
            SolidName::Pyritohedron => "pyritohedron",
            SolidName::Pseudoicosidodecahedron => "pseudoicosidodecahedron",
            SolidName::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// The 48 signed coordinate permutations.
fn signed_permutations(v: &Quaternion) -> Vec<Quaternion> {
    let c = v.vector();
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for p in perms {
        for s in 0..8u8 {
            let f = |i: usize| if s >> i & 1 == 1 { -c[p[i]] } else { c[p[i]].clone() };
            out.push(Quaternion::pure(f(0), f(1), f(2)));
        }
    }
    out
}

/// Whether `points` is the image of `template` under a positive scale and a
/// signed coordinate permutation.
pub fn congruent_to_template(points: &[Quaternion], template: &[Quaternion]) -> bool {
    if points.len() != template.len() || points.is_empty() {
        return false;
    }
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    for p in &perms {
        for s in 0..8u8 {
            let g = |v: &Quaternion| {
                let c = v.vector();
                let f = |i: usize| if s >> i & 1 == 1 { -c[p[i]] } else { c[p[i]].clone() };
                Quaternion::pure(f(0), f(1), f(2))
            };
            let image: Vec<Quaternion> = template.iter().map(g).collect();
            if proportionality(points, &image).is_some() {
                return true;
            }
        }
    }
    false
}

fn templates() -> Vec<(SolidName, Vec<Quaternion>)> {
    let one = FieldScalar::one();
    let z = FieldScalar::zero();
    let two = FieldScalar::from_int(2);
    let tau = FieldScalar::tau();
    let mut rhombic = cyclic_signed(&two, &z, &z);
    rhombic.extend(cube_points(&one));
    let tetra: Vec<Quaternion> = cube_points(&one)
        .into_iter()
        .filter(|v| v.vector().iter().filter(|c| c.is_negative()).count() % 2 == 0)
        .collect();
    let mut truncated = cyclic_signed(&two, &one, &z);
    truncated.extend(cyclic_signed(&one, &two, &z));
    vec![
        (SolidName::Tetrahedron, tetra),
        (SolidName::Octahedron, cyclic_signed(&one, &z, &z)),
        (SolidName::Cube, cube_points(&one)),
        (SolidName::Cuboctahedron, cyclic_signed(&one, &one, &z)),
        (SolidName::RhombicDodecahedron, sorted_unique(rhombic)),
        (SolidName::TruncatedOctahedron, sorted_unique(truncated)),
        (SolidName::Icosahedron, pseudoicosahedron_vertices(&tau, &one)),
        (SolidName::Dodecahedron, pyritohedron_vertices(&(-FieldScalar::sigma()), &one)),
        (SolidName::Icosidodecahedron, pseudoicosidodecahedron_vertices(&tau, &one)),
    ]
}

/// Recognizes the named solids of this crate.
///
/// Fixed solids are matched against a canonical template up to scale and
/// signed permutation, after checking the face census. The parametric
/// families are recognized by census, symmetry under `T_h` and unequal edges.
pub fn classify(poly: &Polyhedron) -> SolidName {
    if !poly.has_faces() {
        return SolidName::Unknown;
    }
    let census: Vec<(usize, usize)> = poly.face_census().into_iter().collect();
    let expected_census = |name: SolidName| -> Vec<(usize, usize)> {
        match name {
            SolidName::Tetrahedron => vec![(3, 4)],
            SolidName::Octahedron => vec![(3, 8)],
            SolidName::Cube => vec![(4, 6)],
            SolidName::Cuboctahedron => vec![(3, 8), (4, 6)],
            SolidName::RhombicDodecahedron => vec![(4, 12)],
            SolidName::TruncatedOctahedron => vec![(4, 6), (6, 8)],
            SolidName::Icosahedron | SolidName::Pseudoicosahedron => vec![(3, 20)],
            SolidName::Dodecahedron | SolidName::Pyritohedron => vec![(5, 12)],
            SolidName::Icosidodecahedron => vec![(3, 20), (5, 12)],
            SolidName::Pseudoicosidodecahedron | SolidName::Unknown => vec![],
        }
    };
    for (name, template) in templates() {
        if census == expected_census(name) && congruent_to_template(poly.vertices(), &template) {
            return name;
        }
    }
    let th = point_group(GroupName::Th);
    let v = poly.vertices().len();
    let pyritohedral = || th.preserves(poly.vertices());
    if v == 12 && census == expected_census(SolidName::Pseudoicosahedron) && pyritohedral() {
        return SolidName::Pseudoicosahedron;
    }
    if v == 20 && census == expected_census(SolidName::Pyritohedron) && pyritohedral() {
        return SolidName::Pyritohedron;
    }
    if v == 30 && pyritohedral() {
        return SolidName::Pseudoicosidodecahedron;
    }
    if v == 24 && census == expected_census(SolidName::TruncatedOctahedron) && point_group(GroupName::Oh).preserves(poly.vertices()) {
        return SolidName::TruncatedOctahedron;
    }
    SolidName::Unknown
}

/// The vertex images of `v` under all 48 signed permutations, deduplicated.
pub fn octahedral_images(v: &Quaternion) -> Vec<Quaternion> {
    sorted_unique(signed_permutations(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::vec3;

    fn f(s: &str) -> FieldScalar {
        s.parse().unwrap()
    }

    fn set(points: &[(i64, i64, i64)]) -> Vec<Quaternion> {
        sorted_unique(points.iter().map(|&(x, y, z)| Quaternion::pure_ints(x, y, z)))
    }

    fn cyclic_int(a: i64, b: i64, c: i64) -> Vec<Quaternion> {
        cyclic_signed(&FieldScalar::from_int(a), &FieldScalar::from_int(b), &FieldScalar::from_int(c))
    }

    #[test]
    fn hull_of_cube_and_octahedron() {
        let cube = hull_faces(&cube_points(&FieldScalar::one())).unwrap();
        assert_eq!(cube.counts(), (8, 12, 6));
        assert!(cube.faces_planar());
        assert!(cube.faces_convex_and_outward());
        let oct = hull_faces(&cyclic_int(1, 0, 0)).unwrap();
        assert_eq!(oct.counts(), (6, 12, 8));
        assert_eq!(classify(&oct), SolidName::Octahedron);
        assert_eq!(classify(&cube), SolidName::Cube);
    }

    #[test]
    fn hull_drops_interior_and_edge_points() {
        let mut pts = cube_points(&FieldScalar::one());
        pts.push(Quaternion::zero());
        pts.push(Quaternion::pure_ints(1, 1, 0));
        pts.push(Quaternion::pure_ints(1, 0, 0));
        let cube = hull_faces(&pts).unwrap();
        assert_eq!(cube.counts(), (8, 12, 6));
    }

    #[test]
    fn hull_rejects_degenerate_input() {
        assert!(matches!(hull_faces(&set(&[(0, 0, 0), (1, 0, 0), (0, 1, 0)])), Err(Error::DegenerateHull(_))));
        assert!(matches!(
            hull_faces(&set(&[(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])),
            Err(Error::DegenerateHull(_))
        ));
    }

    #[test]
    fn eq46_at_x_one() {
        let p = pseudoicosahedron(&FieldScalar::one(), &FieldScalar::one()).unwrap();
        assert_eq!(p.vertices(), cyclic_int(2, 1, 0));
        assert_eq!(p.counts(), (12, 30, 20));
        assert_eq!(p.triangle_census(), (8, 12, 0));
        assert_eq!(classify(&p), SolidName::Pseudoicosahedron);
        assert!(p.degenerate.is_none());
    }

    #[test]
    fn lattice_example_at_five_thirds() {
        let p = pseudoicosahedron(&FieldScalar::from_frac(5, 3), &FieldScalar::from_int(3)).unwrap();
        assert_eq!(p.vertices(), cyclic_int(8, 5, 0));
    }

    #[test]
    fn icosahedron_at_tau() {
        let tau = FieldScalar::tau();
        let p = pseudoicosahedron(&tau, &FieldScalar::one()).unwrap();
        let eq40a: Vec<Quaternion> = cyclic_signed(&tau, &FieldScalar::one(), &FieldScalar::zero())
            .iter()
            .map(|v| v.scale(&tau))
            .collect();
        assert_eq!(p.vertices(), sorted_unique(eq40a));
        assert!(p.all_edges_equal());
        assert_eq!(classify(&p), SolidName::Icosahedron);
        let m = mirror(&p).unwrap();
        let eq41: Vec<Quaternion> = cyclic_signed(&FieldScalar::one(), &tau, &FieldScalar::zero())
            .iter()
            .map(|v| v.scale(&tau))
            .collect();
        assert_eq!(m.vertices(), sorted_unique(eq41));
        assert_eq!(mirror(&m).unwrap(), p);
    }

    #[test]
    fn sigma_member_is_mirror_icosahedron() {
        let sigma = FieldScalar::sigma();
        let p = pseudoicosahedron(&sigma, &FieldScalar::one()).unwrap();
        assert!(p.all_edges_equal());
        // Multiplying Eq 40b by τ³ gives Eq 41.
        let t3 = FieldScalar::tau().pow(3);
        let scaled: Vec<Quaternion> = p.vertices().iter().map(|v| v.scale(&t3)).collect();
        let tau_ico = mirror(&pseudoicosahedron(&FieldScalar::tau(), &FieldScalar::one()).unwrap()).unwrap();
        assert_eq!(sorted_unique(scaled), tau_ico.vertices());
    }

    #[test]
    fn robinson_triangles_at_minus_tau() {
        let x = -FieldScalar::tau();
        let p = pseudoicosahedron(&x, &FieldScalar::one()).unwrap();
        assert_eq!(p.triangle_census(), (8, 12, 0));
        let prof = edge_length_profile(&x, &FieldScalar::one());
        // Legs 1 + x + x² = 2 and base 2x² = 2τ², so the lengths are in ratio 1 : τ.
        assert_eq!(prof.equilateral, FieldScalar::from_int(2));
        assert_eq!(prof.isosceles_base, &FieldScalar::from_int(2) * &FieldScalar::tau().pow(2));
    }

    #[test]
    fn edge_profile_matches_distances() {
        let one = FieldScalar::one();
        let prof = edge_length_profile(&one, &one);
        assert_eq!((prof.equilateral.clone(), prof.isosceles_base.clone()), (FieldScalar::from_int(3), FieldScalar::from_int(2)));
        let p = pseudoicosahedron(&one, &one).unwrap();
        let raw = p.distinct_edge_lengths_squared();
        let two = FieldScalar::from_int(2);
        let expected: BTreeSet<FieldScalar> = [&two * &prof.equilateral, &two * &prof.isosceles_base].into_iter().collect();
        assert_eq!(raw, expected);
        assert!(edge_length_profile(&FieldScalar::tau(), &one).is_regular());
        assert!(edge_length_profile(&FieldScalar::sigma(), &one).is_regular());
        assert!(!prof.is_regular());
    }

    #[test]
    fn degenerate_members() {
        let one = FieldScalar::one();
        let p0 = pseudoicosahedron(&FieldScalar::zero(), &one).unwrap();
        assert_eq!(p0.vertices().len(), 6);
        assert!(p0.degenerate.is_some());
        assert_eq!(classify(&p0), SolidName::Octahedron);
        let pm1 = pseudoicosahedron(&FieldScalar::from_int(-1), &one).unwrap();
        assert_eq!(pm1.vertices(), cyclic_int(1, 0, 0));
        assert!(pm1.degenerate.is_some());
        let ph = pseudoicosahedron(&FieldScalar::from_frac(-1, 2), &one).unwrap();
        assert!(ph.degenerate.is_some());
        assert_eq!(classify(&ph), SolidName::Cuboctahedron);
        assert!(pseudoicosahedron(&one, &FieldScalar::zero()).is_err());
    }

    #[test]
    fn cuboctahedron_limit() {
        let lin: Vec<Quaternion> = sorted_unique(pseudoicosahedron_linear_parts(&FieldScalar::one()).into_iter().map(|(_, l)| l));
        assert_eq!(lin, cyclic_int(1, 1, 0));
        assert_eq!(classify(&hull_faces(&lin).unwrap()), SolidName::Cuboctahedron);
        let x = FieldScalar::from_frac(7, 3);
        let direct = pseudoicosahedron_vertices(&x, &FieldScalar::one());
        let rebuilt = sorted_unique(
            pseudoicosahedron_linear_parts(&FieldScalar::one())
                .into_iter()
                .map(|(c, l)| &c + &l.scale(&x)),
        );
        assert_eq!(direct, rebuilt);
    }

    #[test]
    fn eq47_at_h_half() {
        let p = pyritohedron(&FieldScalar::from_frac(1, 2), &FieldScalar::from_int(8)).unwrap();
        let mut expected = cyclic_int(3, 6, 0);
        expected.extend(cyclic_int(4, 4, 4));
        assert_eq!(p.vertices(), sorted_unique(expected));
        assert_eq!(p.face_census(), BTreeMap::from([(5, 12)]));
        assert_eq!(p.counts(), (20, 30, 12));
        assert_eq!(classify(&p), SolidName::Pyritohedron);
    }

    #[test]
    fn rhombic_dodecahedron_at_h_one() {
        let p = pyritohedron(&FieldScalar::one(), &FieldScalar::from_int(2)).unwrap();
        let mut expected = cyclic_int(2, 0, 0);
        expected.extend(cube_points(&FieldScalar::one()));
        assert_eq!(p.vertices(), sorted_unique(expected));
        assert!(p.degenerate.is_some());
        assert_eq!(classify(&p), SolidName::RhombicDodecahedron);
        assert!(pyritohedron(&FieldScalar::from_int(-1), &FieldScalar::one()).is_err());
    }

    #[test]
    fn pyritohedron_outside_unit_interval() {
        let cube = pyritohedron(&FieldScalar::from_frac(-1, 4), &FieldScalar::one()).unwrap();
        assert_eq!(classify(&cube), SolidName::Cube);
        assert!(cube.degenerate.is_some());
        let big = pyritohedron(&FieldScalar::from_frac(3, 2), &FieldScalar::one()).unwrap();
        assert_eq!(big.vertices().len(), 12);
        assert!(big.degenerate.is_some());
        assert!(pyritohedron(&FieldScalar::from_frac(1, 4), &FieldScalar::one()).unwrap().degenerate.is_none());
    }

    #[test]
    fn dodecahedron_eq42() {
        let tau = FieldScalar::tau();
        let h = h_of_x(&tau).unwrap();
        assert_eq!(h, -FieldScalar::sigma());
        let p = pyritohedron(&h, &FieldScalar::one()).unwrap();
        let half = FieldScalar::from_frac(1, 2);
        let mut eq42: Vec<Quaternion> = cyclic_signed(&FieldScalar::sigma(), &tau, &FieldScalar::zero())
            .iter()
            .map(|v| v.scale(&half))
            .collect();
        eq42.extend(cube_points(&half));
        assert_eq!(p.vertices(), sorted_unique(eq42));
        assert!(p.all_edges_equal());
        assert_eq!(classify(&p), SolidName::Dodecahedron);
        // h = τ² and σ² belong to x = −τ and x = −σ.
        assert_eq!(h_of_x(&-FieldScalar::tau()).unwrap(), tau.pow(2));
        assert_eq!(h_of_x(&-FieldScalar::sigma()).unwrap(), FieldScalar::sigma().pow(2));
    }

    #[test]
    fn dual_of_pseudoicosahedron_is_pyritohedron() {
        for x in ["1", "2", "3/2", "5/3", "tau", "1/3", "7"] {
            let x = f(x);
            let p = pseudoicosahedron(&x, &FieldScalar::one()).unwrap();
            let dual = polar_dual(&p).unwrap();
            let pyr = pyritohedron(&h_of_x(&x).unwrap(), &FieldScalar::one()).unwrap();
            let s = proportionality(dual.vertices(), pyr.vertices()).unwrap_or_else(|| panic!("x = {x}"));
            let two = FieldScalar::from_int(2);
            assert_eq!(s, two.checked_div(&(&FieldScalar::one() + &(&two * &x))).unwrap());
            assert_eq!(polar_dual(&dual).unwrap().vertices(), p.vertices());
        }
    }

    #[test]
    fn dual_parameter_on_every_branch() {
        for x in ["1", "tau", "-1/3", "-2/5", "-2/3", "-3/4", "-tau", "-2", "-7/4"] {
            let x = f(x);
            let p = pseudoicosahedron(&x, &FieldScalar::one()).unwrap();
            let dual = polar_dual(&p).unwrap();
            let (h, mirrored) = dual_parameter(&x).unwrap();
            let mut pyr = pyritohedron(&h, &FieldScalar::one()).unwrap();
            if mirrored {
                pyr = mirror(&pyr).unwrap();
            }
            assert!(proportionality(dual.vertices(), pyr.vertices()).is_some(), "x = {x}");
            assert_eq!(pyr.vertices().len(), 20);
            if !x.is_positive() {
                let naive = pyritohedron_vertices(&h_of_x(&x).unwrap(), &FieldScalar::one());
                assert!(proportionality(dual.vertices(), &naive).is_none(), "x = {x}");
            }
        }
        // P(−τ) is the mirror of P(1/τ), so its dual has h = σ², not τ².
        assert_eq!(dual_parameter(&-FieldScalar::tau()).unwrap(), (FieldScalar::sigma().pow(2), true));
        assert!(dual_parameter(&FieldScalar::zero()).is_err());
    }

    #[test]
    fn octahedron_cube_duality() {
        let oct = hull_faces(&cyclic_int(1, 0, 0)).unwrap();
        assert_eq!(polar_dual(&oct).unwrap().vertices(), cube_points(&FieldScalar::one()));
        let shifted = hull_faces(&set(&[(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)])).unwrap();
        assert!(matches!(polar_dual(&shifted), Err(Error::OriginNotInterior)));
        assert!(matches!(polar_dual(&Polyhedron::unhulled(cube_points(&FieldScalar::one()))), Err(Error::Faceless)));
    }

    #[test]
    fn pentagon_construction() {
        for x in ["1", "3/2", "tau", "sigma", "-tau", "2/7", "-5/2"] {
            let n = pyritohedron_normals(&f(x)).unwrap();
            assert!(n.coplanarity_residue().is_zero(), "x = {x}");
            assert!(n.pentagon_coplanar());
            assert!(n.d.dot(&Quaternion::e3()).is_zero());
            assert_eq!(n.normal_orbit().len(), 12);
        }
        assert!(pyritohedron_normals(&FieldScalar::from_int(-1)).is_err());
    }

    #[test]
    fn pentagon_is_a_face_of_eq44() {
        let x = FieldScalar::from_frac(3, 2);
        let n = pyritohedron_normals(&x).unwrap();
        let pyr = pyritohedron(&h_of_x(&x).unwrap(), &FieldScalar::one()).unwrap();
        let pent: BTreeSet<Quaternion> = n.pentagon().into_iter().collect();
        let faces: Vec<BTreeSet<Quaternion>> = pyr
            .faces()
            .iter()
            .map(|fc| fc.cycle.iter().map(|&i| pyr.vertices()[i].clone()).collect())
            .collect();
        assert!(faces.contains(&pent));
    }

    #[test]
    fn normal_relations() {
        use crate::transform::reflection_from_root;
        let n = pyritohedron_normals(&FieldScalar::from_frac(2, 5)).unwrap();
        let r1 = reflection_from_root(&vec3("1", "-1", "0")).unwrap();
        let r2 = reflection_from_root(&vec3("0", "1", "-1")).unwrap();
        let r3 = reflection_from_root(&vec3("0", "1", "1")).unwrap();
        let gamma = crate::coxeter::d3_gamma();
        assert_eq!(r2.compose(&r1).apply(&n.b1), n.b4);
        assert_eq!(r3.compose(&r2).apply(&n.b5), n.b4);
        assert_eq!(gamma.apply(&n.b1), n.b1);
        assert_eq!(gamma.apply(&n.b4), n.b5);
    }

    #[test]
    fn eq48_truncated_octahedron() {
        let one = FieldScalar::one();
        let p = pseudoicosahedron(&one, &one).unwrap();
        let m = mirror(&p).unwrap();
        let union: Vec<Quaternion> = p.vertices().iter().chain(m.vertices()).cloned().collect();
        let t = hull_faces(&union).unwrap();
        assert_eq!(t.counts(), (24, 36, 14));
        assert_eq!(t.face_census(), BTreeMap::from([(4, 6), (6, 8)]));
        assert_eq!(classify(&t), SolidName::TruncatedOctahedron);
    }

    #[test]
    fn pseudoicosidodecahedron_members() {
        let p = pseudoicosidodecahedron(&FieldScalar::from_frac(3, 2), &FieldScalar::from_int(2)).unwrap();
        let mut expected = cyclic_int(3, 5, 8);
        expected.extend(cyclic_int(10, 0, 0));
        assert_eq!(p.vertices(), sorted_unique(expected));
        assert_eq!(p.vertices().len(), 30);
        assert_eq!(classify(&p), SolidName::Pseudoicosidodecahedron);
        let reg = pseudoicosidodecahedron(&FieldScalar::tau(), &FieldScalar::one()).unwrap();
        assert!(reg.all_edges_equal());
        assert_eq!(reg.face_census(), BTreeMap::from([(3, 20), (5, 12)]));
        assert_eq!(classify(&reg), SolidName::Icosidodecahedron);
    }

    #[test]
    fn icosidodecahedron_is_edge_midpoint_set() {
        for (x, a1) in [("3/2", "1"), ("tau", "1"), ("2/3", "5")] {
            let (x, a1) = (f(x), f(a1));
            let doubled = &FieldScalar::from_int(2) * &a1;
            let p = pseudoicosahedron(&x, &doubled).unwrap();
            assert_eq!(edge_midpoints(&p), pseudoicosidodecahedron_vertices(&x, &a1));
        }
    }

    #[test]
    fn fibonacci_table() {
        let fam = fibonacci_family(4, A1Policy::ClearDenominators).unwrap();
        let expected = [(2, 1), (3, 2), (5, 3), (8, 5)];
        for (m, (a, b)) in fam.iter().zip(expected) {
            assert_eq!(m.poly.vertices(), cyclic_int(a, b, 0), "n = {}", m.n);
        }
        let seq: Vec<BigRational> = (1..=10).map(fibonacci_ratio).collect();
        let listed = [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8), (21, 13), (34, 21), (55, 34), (89, 55)];
        for (x, (p, q)) in seq.iter().zip(listed) {
            assert_eq!(*x, BigRational::new(p.into(), q.into()));
        }
        let seq_fam = fibonacci_family_with(4, A1Policy::ClearDenominators, Strategy::Sequential).unwrap();
        assert!(seq_fam.iter().zip(&fam).all(|(a, b)| a.poly == b.poly));
        assert!(fibonacci_family(0, A1Policy::Unit).is_err());
    }

    #[test]
    fn binet_formula() {
        let (tau, sigma) = (FieldScalar::tau(), FieldScalar::sigma());
        let denom = &tau - &sigma;
        for n in 1..=20u32 {
            let binet = (tau.pow(n) - sigma.pow(n)).checked_div(&denom).unwrap();
            assert_eq!(binet, FieldScalar::from_rational(BigRational::from_integer(fibonacci(n))));
        }
    }

    #[test]
    fn convergence_alternates() {
        let c = fibonacci_convergence(10);
        for w in c.windows(2) {
            assert_eq!(w[0].0, -w[1].0);
            assert!(w[1].1.real_cmp(&w[0].1).is_lt());
        }
        assert_eq!(c[0].0, -1);
    }

    #[test]
    fn census_of_named_orbits() {
        let b3 = crate::coxeter::diagram(crate::coxeter::DiagramName::B3);
        let o = b3
            .orbit(&[FieldScalar::zero(), FieldScalar::one(), FieldScalar::zero()], &FieldScalar::one())
            .unwrap();
        let cubo = hull_faces(&o.quaternions().unwrap()).unwrap();
        assert_eq!(classify(&cubo), SolidName::Cuboctahedron);
    }

    #[test]
    fn proportionality_finds_the_ratio() {
        let a = cube_points(&FieldScalar::from_int(3));
        let b = cube_points(&FieldScalar::one());
        assert_eq!(proportionality(&a, &b), Some(FieldScalar::from_int(3)));
        assert_eq!(proportionality(&a, &cyclic_int(1, 0, 0)), None);
    }
}
