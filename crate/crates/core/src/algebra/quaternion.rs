use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::FieldScalar;

/// Quaternion `q0 + q1 e1 + q2 e2 + q3 e3` over Q(√2, √5).
///
/// Pure quaternions (`q0 = 0`) stand in for vectors of 3-space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Quaternion([FieldScalar; 4]);

impl Quaternion {
    pub fn new(q0: FieldScalar, q1: FieldScalar, q2: FieldScalar, q3: FieldScalar) -> Self {
        Self([q0, q1, q2, q3])
    }

    pub fn from_array(c: [FieldScalar; 4]) -> Self {
        Self(c)
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64, q3: i64) -> Self {
        Self::new(q0.into(), q1.into(), q2.into(), q3.into())
    }

    /// The pure quaternion `x e1 + y e2 + z e3`.
    pub fn pure(x: FieldScalar, y: FieldScalar, z: FieldScalar) -> Self {
        Self::new(FieldScalar::zero(), x, y, z)
    }

    pub fn pure_ints(x: i64, y: i64, z: i64) -> Self {
        Self::from_ints(0, x, y, z)
    }

    pub fn real(r: FieldScalar) -> Self {
        Self::new(r, FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero())
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn e1() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn e2() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn e3() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn components(&self) -> &[FieldScalar; 4] {
        &self.0
    }

    pub fn scalar(&self) -> &FieldScalar {
        &self.0[0]
    }

    /// Vector components `(q1, q2, q3)`.
    pub fn vector(&self) -> [&FieldScalar; 3] {
        [&self.0[1], &self.0[2], &self.0[3]]
    }

    /// The vector part as a pure quaternion.
    pub fn vec_part(&self) -> Self {
        Self::pure(self.0[1].clone(), self.0[2].clone(), self.0[3].clone())
    }

    pub fn is_pure(&self) -> bool {
        self.0[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldScalar::is_zero)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.0[0].clone(), -&self.0[1], -&self.0[2], -&self.0[3])
    }

    /// `q q̄ = q0² + q1² + q2² + q3²`.
    pub fn norm(&self) -> FieldScalar {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Euclidean scalar product `(p, q) = ½(p̄q + q̄p)`, evaluated componentwise.
    pub fn dot(&self, other: &Self) -> FieldScalar {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &FieldScalar) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * k))
    }

    /// Cross product of the vector parts, as a pure quaternion.
    pub fn cross(&self, other: &Self) -> Self {
        let [_, a1, a2, a3] = &self.0;
        let [_, b1, b2, b3] = &other.0;
        Self::pure(a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    }

    /// Canonical sign choice: first nonzero component lexicographically positive.
    pub fn lex_sign(&self) -> i8 {
        self.0.iter().map(FieldScalar::lex_sign).find(|&s| s != 0).unwrap_or(0)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    /// Hamilton product, `e_i e_j = −δ_ij + ε_ijk e_k`.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}
