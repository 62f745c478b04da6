//! Coxeter–Dynkin diagrams A2, B2, D3, B3: Cartan data, weights, reflections
//! and orbits.
//!
//! Vectors are coordinate lists in an ambient basis. Rank-3 diagrams use
//! the orthonormal frame `e1, e2, e3`; rank-2 diagrams use root coordinates
//! with the Gram matrix as inner product.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::decimal::rational_times_sqrt;
use crate::algebra::{FieldScalar, Quaternion};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::qgroups::{closure, GroupElement, PointGroup};
use crate::transform::{reflection_from_root, OrthoElement};

pub type Vector = Vec<FieldScalar>;
pub type RatMatrix = Vec<Vec<BigRational>>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiagramName {
    A2,
    B2,
    D3,
    B3,
}

impl DiagramName {
    pub const ALL: [DiagramName; 4] = [DiagramName::A2, DiagramName::B2, DiagramName::D3, DiagramName::B3];

    pub fn rank(self) -> usize {
        match self {
            DiagramName::A2 | DiagramName::B2 => 2,
            DiagramName::D3 | DiagramName::B3 => 3,
        }
    }
}

impl fmt::Display for DiagramName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for DiagramName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A2" => Ok(DiagramName::A2),
            "B2" => Ok(DiagramName::B2),
            "D3" | "A3" => Ok(DiagramName::D3),
            "B3" => Ok(DiagramName::B3),
            _ => Err(Error::UnknownDiagram(s.to_string())),
        }
    }
}

/// Square integer matrix acting on root coordinates from the right: row `i`
/// holds the coordinates of the image of `αᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix<const N: usize>(pub [[i64; N]; N]);

impl<const N: usize> IntMatrix<N> {
    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (&other.0, &self.0);
        IntMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..N).map(|k| a[i][k] * b[k][j]).sum())
        }))
    }

    /// Image of the vector with root coordinates `v`.
    pub fn act(&self, v: &[FieldScalar]) -> Vector {
        (0..N)
            .map(|j| (0..N).map(|i| &v[i] * &FieldScalar::from_int(self.0[i][j])).sum())
            .collect()
    }
}

impl<const N: usize> GroupElement for IntMatrix<N> {
    fn identity() -> Self {
        IntMatrix(std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j))))
    }

    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

/// A simple reflection in the form native to its diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SimpleReflection {
    Ortho(OrthoElement),
    Matrix(IntMatrix<2>),
}

#[derive(Clone, Debug)]
pub struct CoxeterDiagram {
    pub name: DiagramName,
    /// Simple roots in ambient coordinates.
    pub roots: RatMatrix,
    /// Inner product of the ambient coordinates.
    pub ambient: RatMatrix,
    /// `(αᵢ, αⱼ)`.
    pub gram: RatMatrix,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_inv: RatMatrix,
    pub metric: RatMatrix,
    /// Fundamental weights in ambient coordinates.
    pub weights: RatMatrix,
}

fn rat_inverse(m: &RatMatrix) -> RatMatrix {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular matrix");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                #[allow(clippy::needless_range_loop)]
                for c in 0..2 * n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn rat_inner(ambient: &RatMatrix, u: &[BigRational], v: &[BigRational]) -> BigRational {
    let mut acc = rat(0);
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            if !ambient[i][j].is_zero() {
                acc += ui * vj * &ambient[i][j];
            }
        }
    }
    acc
}

fn identity(n: usize) -> RatMatrix {
    (0..n).map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect()).collect()
}

fn int_rows(rows: &[&[i64]]) -> RatMatrix {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

pub fn diagram(name: DiagramName) -> CoxeterDiagram {
    let (roots, ambient) = match name {
        DiagramName::A2 => (identity(2), int_rows(&[&[2, -1], &[-1, 2]])),
        DiagramName::B2 => (identity(2), int_rows(&[&[2, -1], &[-1, 1]])),
        DiagramName::D3 => (int_rows(&[&[1, -1, 0], &[0, 1, -1], &[0, 1, 1]]), identity(3)),
        DiagramName::B3 => (int_rows(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]), identity(3)),
    };
    let n = roots.len();
    let gram: RatMatrix = (0..n)
        .map(|i| (0..n).map(|j| rat_inner(&ambient, &roots[i], &roots[j])).collect())
        .collect();
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = rat(2) * &gram[i][j] / &gram[j][j];
                    assert!(c.is_integer());
                    c.to_integer().to_i64().expect("small Cartan entry")
                })
                .collect()
        })
        .collect();
    let cartan_rat: RatMatrix = cartan.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let cartan_inv = rat_inverse(&cartan_rat);
    let metric: RatMatrix = (0..n)
        .map(|i| (0..n).map(|j| &cartan_inv[i][j] * &gram[j][j] / rat(2)).collect())
        .collect();
    // ωᵢ = Σⱼ (C⁻¹)ᵢⱼ αⱼ, so that (ωᵢ, 2αⱼ/(αⱼ, αⱼ)) = δᵢⱼ.
    let weights: RatMatrix = (0..n)
        .map(|i| {
            (0..roots[0].len())
                .map(|c| (0..n).map(|j| &cartan_inv[i][j] * &roots[j][c]).sum())
                .collect()
        })
        .collect();
    CoxeterDiagram {
        name,
        roots,
        ambient,
        gram,
        cartan,
        cartan_inv,
        metric,
        weights,
    }
}

fn to_field(v: &[BigRational]) -> Vector {
    v.iter().cloned().map(FieldScalar::from_rational).collect()
}

/// A pure quaternion from three ambient coordinates.
pub fn vector_to_quaternion(v: &[FieldScalar]) -> Result<Quaternion> {
    match v {
        [x, y, z] => Ok(Quaternion::pure(x.clone(), y.clone(), z.clone())),
        _ => Err(Error::NeedsRank3),
    }
}

pub fn quaternion_to_vector(q: &Quaternion) -> Vector {
    q.vector().into_iter().cloned().collect()
}

/// Point set of `W(a1 … an)`, scaled.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub diagram: DiagramName,
    pub coords: Vector,
    pub scale: FieldScalar,
    /// Ambient coordinates, sorted and deduplicated.
    pub points: Vec<Vector>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn quaternions(&self) -> Result<Vec<Quaternion>> {
        self.points.iter().map(|p| vector_to_quaternion(p)).collect()
    }
}

impl CoxeterDiagram {
    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    fn check_index(&self, i: usize) -> Result<usize> {
        if (1..=self.rank()).contains(&i) {
            Ok(i - 1)
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    fn check_dim(&self, v: &[FieldScalar]) -> Result<()> {
        let d = self.ambient.len();
        if v.len() == d {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: d, got: v.len() })
        }
    }

    pub fn inner(&self, u: &[FieldScalar], v: &[FieldScalar]) -> FieldScalar {
        let mut acc = FieldScalar::zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                let g = &self.ambient[i][j];
                if !g.is_zero() {
                    acc += &(ui * vj).scale_rational(g);
                }
            }
        }
        acc
    }

    pub fn simple_root(&self, i: usize) -> Result<Vector> {
        Ok(to_field(&self.roots[self.check_index(i)?]))
    }

    pub fn weight(&self, i: usize) -> Result<Vector> {
        Ok(to_field(&self.weights[self.check_index(i)?]))
    }

    /// Simple roots as pure quaternions (rank 3 only).
    pub fn simple_root_quaternions(&self) -> Result<Vec<Quaternion>> {
        (1..=self.rank()).map(|i| vector_to_quaternion(&self.simple_root(i)?)).collect()
    }

    pub fn weight_quaternions(&self) -> Result<Vec<Quaternion>> {
        (1..=self.rank()).map(|i| vector_to_quaternion(&self.weight(i)?)).collect()
    }

    /// Root-coordinate matrix of `rᵢ`: row `j` is `αⱼ − Cⱼᵢ αᵢ`.
    pub fn reflection_matrix<const N: usize>(&self, i: usize) -> Result<IntMatrix<N>> {
        let k = self.check_index(i)?;
        if N != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: N });
        }
        Ok(IntMatrix(std::array::from_fn(|j| {
            std::array::from_fn(|c| i64::from(j == c) - if c == k { self.cartan[j][k] } else { 0 })
        })))
    }

    /// `rᵢ` as a quaternion pair (rank 3) or root-coordinate matrix (rank 2).
    pub fn simple_reflection(&self, i: usize) -> Result<SimpleReflection> {
        if self.rank() == 2 {
            return self.reflection_matrix::<2>(i).map(SimpleReflection::Matrix);
        }
        let alpha = vector_to_quaternion(&self.simple_root(i)?)?;
        Ok(SimpleReflection::Ortho(reflection_from_root(&alpha)?))
    }

    /// `rᵢ λ = λ − 2(λ, αᵢ)/(αᵢ, αᵢ) αᵢ`.
    pub fn reflect(&self, i: usize, lambda: &[FieldScalar]) -> Result<Vector> {
        self.check_dim(lambda)?;
        let alpha = self.simple_root(i)?;
        affine_reflect_in(self, &alpha, &FieldScalar::zero(), lambda)
    }

    /// `Σ aᵢ ωᵢ` in ambient coordinates.
    pub fn weight_vector(&self, coords: &[FieldScalar]) -> Result<Vector> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: coords.len() });
        }
        let dim = self.ambient.len();
        Ok((0..dim)
            .map(|c| {
                coords
                    .iter()
                    .zip(&self.weights)
                    .map(|(a, w)| a.scale_rational(&w[c]))
                    .sum()
            })
            .collect())
    }

    /// `scale · W(a1 … an)` by breadth-first closure under the simple reflections.
    pub fn orbit(&self, coords: &[FieldScalar], scale: &FieldScalar) -> Result<Orbit> {
        self.orbit_with(coords, scale, Strategy::default())
    }

    pub fn orbit_with(&self, coords: &[FieldScalar], scale: &FieldScalar, strategy: Strategy) -> Result<Orbit> {
        let start: Vector = self.weight_vector(coords)?.iter().map(|x| x * scale).collect();
        let points = self.orbit_of_vector(&start, strategy);
        Ok(Orbit {
            diagram: self.name,
            coords: coords.to_vec(),
            scale: scale.clone(),
            points,
        })
    }

    /// Orbit of an arbitrary ambient vector under the Coxeter group.
    pub fn orbit_of_vector(&self, start: &[FieldScalar], strategy: Strategy) -> Vec<Vector> {
        let mut seen: BTreeSet<Vector> = BTreeSet::from([start.to_vec()]);
        let mut frontier = vec![start.to_vec()];
        while !frontier.is_empty() {
            let images = par::flat_map(strategy, &frontier, |v| {
                (1..=self.rank())
                    .map(|i| self.reflect(i, v).expect("index and dimension checked"))
                    .collect()
            });
            frontier = images.into_iter().filter(|v| seen.insert(v.clone())).collect();
        }
        seen.into_iter().collect()
    }

    /// Orbit under an explicit group instead of the Coxeter group (rank 3).
    pub fn orbit_under(&self, group: &PointGroup, coords: &[FieldScalar], scale: &FieldScalar) -> Result<Orbit> {
        let start: Vector = self.weight_vector(coords)?.iter().map(|x| x * scale).collect();
        let q = vector_to_quaternion(&start)?;
        let points = group.orbit(&q).iter().map(quaternion_to_vector).collect();
        Ok(Orbit {
            diagram: self.name,
            coords: coords.to_vec(),
            scale: scale.clone(),
            points,
        })
    }

    /// All roots: the union of the orbits of the simple roots.
    pub fn root_system(&self) -> Vec<Vector> {
        let mut all = BTreeSet::new();
        for i in 1..=self.rank() {
            let a = self.simple_root(i).expect("index in range");
            all.extend(self.orbit_of_vector(&a, Strategy::Sequential));
        }
        all.into_iter().collect()
    }

    /// The highest root `α̃`, the root of greatest height in root coordinates.
    pub fn highest_root(&self) -> Vector {
        let inv_ip = rat_inverse(&self.gram);
        let height = |v: &Vector| -> FieldScalar {
            // Root coordinates bᵢ solve Σ bⱼ (αⱼ, αᵢ) = (v, αᵢ).
            let dots: Vec<FieldScalar> = (1..=self.rank())
                .map(|i| self.inner(v, &self.simple_root(i).expect("index in range")))
                .collect();
            (0..self.rank())
                .flat_map(|j| (0..self.rank()).map(move |i| (j, i)))
                .map(|(j, i)| dots[i].scale_rational(&inv_ip[i][j]))
                .sum()
        };
        self.root_system()
            .into_iter()
            .max_by(|a, b| height(a).real_cmp(&height(b)))
            .expect("nonempty root system")
    }

    /// The Coxeter group as root-coordinate matrices.
    pub fn weyl_matrices<const N: usize>(&self, strategy: Strategy) -> Result<Vec<IntMatrix<N>>> {
        let gens: Vec<IntMatrix<N>> = (1..=self.rank()).map(|i| self.reflection_matrix(i)).collect::<Result<_>>()?;
        closure(&gens, 48, strategy)
    }

    /// Root coordinates `bᵢ` of an ambient vector, `v = Σ bᵢ αᵢ`.
    pub fn root_coordinates(&self, v: &[FieldScalar]) -> Vector {
        let inv = rat_inverse(&self.gram);
        let dots: Vec<FieldScalar> = self
            .roots
            .iter()
            .map(|r| self.inner(v, &to_field(r)))
            .collect();
        (0..self.rank())
            .map(|j| (0..self.rank()).map(|i| dots[i].scale_rational(&inv[i][j])).sum())
            .collect()
    }

    /// Quaternionic generators `r1, …` of the diagram's group (rank 3).
    pub fn reflection_elements(&self) -> Result<Vec<OrthoElement>> {
        (1..=self.rank())
            .map(|i| match self.simple_reflection(i)? {
                SimpleReflection::Ortho(g) => Ok(g),
                SimpleReflection::Matrix(_) => Err(Error::NeedsRank3),
            })
            .collect()
    }
}

/// `r_{α,k}(λ) = λ − 2((λ, α) − k)/(α, α) α`, using the diagram's inner product.
pub fn affine_reflect_in(d: &CoxeterDiagram, alpha: &[FieldScalar], k: &FieldScalar, lambda: &[FieldScalar]) -> Result<Vector> {
    let aa = d.inner(alpha, alpha);
    if aa.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let f = (FieldScalar::from_int(2) * (d.inner(lambda, alpha) - k)).checked_div(&aa)?;
    Ok(lambda.iter().zip(alpha).map(|(l, a)| l - &(&f * a)).collect())
}

/// Affine reflection of 3-space in the plane `(λ, α) = k`.
pub fn affine_reflect(alpha: &Quaternion, k: i64, lambda: &Quaternion) -> Result<Quaternion> {
    if !alpha.is_pure() || !lambda.is_pure() {
        return Err(Error::NotPure);
    }
    let aa = alpha.norm();
    if aa.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let f = (FieldScalar::from_int(2) * (lambda.dot(alpha) - FieldScalar::from_int(k))).checked_div(&aa)?;
    Ok(lambda - &alpha.scale(&f))
}

/// Dynkin symmetry of A2 in root coordinates, `α1 ↔ α2`.
pub fn a2_gamma() -> IntMatrix<2> {
    IntMatrix([[0, 1], [1, 0]])
}

/// Dynkin symmetry of D3, `γ = [e3, e3]`.
pub fn d3_gamma() -> OrthoElement {
    OrthoElement::pair(Quaternion::e3(), Quaternion::e3()).expect("unit quaternion")
}

/// Orthonormal coordinates of an A2 vector in the frame
/// `x̂1 = (α1 + α2)/√2`, `x̂2 = (α1 − α2)/√6`.
///
/// Each coordinate is a rational multiple of one square root:
/// `x = ((a + b)/2)·√2`, `y = ((a − b)/2)·√6` for `aα1 + bα2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Embedding {
    pub x_sqrt2: BigRational,
    pub y_sqrt6: BigRational,
}

impl A2Embedding {
    pub fn decimals(&self, sig: usize) -> [String; 2] {
        [
            rational_times_sqrt(&self.x_sqrt2, 2, sig),
            rational_times_sqrt(&self.y_sqrt6, 6, sig),
        ]
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [
            self.x_sqrt2.to_f64().unwrap_or(f64::NAN) * 2f64.sqrt(),
            self.y_sqrt6.to_f64().unwrap_or(f64::NAN) * 6f64.sqrt(),
        ]
    }
}

pub fn orthonormal_embed_a2(v: &[BigRational]) -> Result<A2Embedding> {
    let [a, b] = v else {
        return Err(Error::DimensionMismatch { expected: 2, got: v.len() });
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(A2Embedding {
        x_sqrt2: (a + b) * &half,
        y_sqrt6: (a - b) * &half,
    })
}

/// Rational coordinates of a field vector, when all are rational.
pub fn rational_coords(v: &[FieldScalar]) -> Option<Vec<BigRational>> {
    v.iter().map(|x| x.as_rational().cloned()).collect()
}

/// `|stab(λ)|` under a list of root-coordinate matrices.
pub fn stabilizer_order<const N: usize>(group: &[IntMatrix<N>], root_coords: &[FieldScalar]) -> usize {
    group.iter().filter(|m| m.act(root_coords) == root_coords).count()
}
