//! Orthogonal maps of quaternion space written as pairs of unit quaternions.
//!
//! `[p, q]` sends `t ↦ p t q`; `[p, q]*` sends `t ↦ p t̄ q`. On pure
//! quaternions `t̄ = −t`, so a starred pair acts there like `[p, −q]`; the
//! 3D groups in this crate are stored in that restricted, unstarred form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{FieldScalar, Quaternion};
use crate::error::{Error, Result};

/// `[p, q]` or `[p, q]*` with `|p| = |q| = 1`, up to `[p, q] ≡ [−p, −q]`.
///
/// Values are kept in canonical sign: the first nonzero component of `p`
/// has a lexicographically positive leading coefficient. With that rule,
/// equal representations are exactly equal actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrthoElement {
    p: Quaternion,
    q: Quaternion,
    star: bool,
}

impl OrthoElement {
    /// Builds `[p, q]` (or `[p, q]*`), checking unit norms exactly.
    pub fn new(p: Quaternion, q: Quaternion, star: bool) -> Result<Self> {
        if !p.norm().is_one() || !q.norm().is_one() {
            return Err(Error::Domain("both quaternions of a pair must have unit norm".into()));
        }
        Ok(Self::new_unchecked(p, q, star))
    }

    pub(crate) fn new_unchecked(p: Quaternion, q: Quaternion, star: bool) -> Self {
        if p.lex_sign() < 0 {
            Self { p: -p, q: -q, star }
        } else {
            Self { p, q, star }
        }
    }

    pub fn pair(p: Quaternion, q: Quaternion) -> Result<Self> {
        Self::new(p, q, false)
    }

    pub fn star_pair(p: Quaternion, q: Quaternion) -> Result<Self> {
        Self::new(p, q, true)
    }

    pub fn identity() -> Self {
        Self::new_unchecked(Quaternion::one(), Quaternion::one(), false)
    }

    /// Central inversion `[1, −1]` (on pure quaternions).
    pub fn inversion() -> Self {
        Self::new_unchecked(Quaternion::one(), -Quaternion::one(), false)
    }

    pub fn p(&self) -> &Quaternion {
        &self.p
    }

    pub fn q(&self) -> &Quaternion {
        &self.q
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    pub fn apply(&self, t: &Quaternion) -> Quaternion {
        if self.star {
            &(&self.p * &t.conj()) * &self.q
        } else {
            &(&self.p * t) * &self.q
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (p, q, r, s) = (&self.p, &self.q, &other.p, &other.q);
        match (self.star, other.star) {
            // p (r t s) q
            (false, false) => Self::new_unchecked(p * r, s * q, false),
            // p (r t̄ s) q
            (false, true) => Self::new_unchecked(p * r, s * q, true),
            // p conj(r t s) q = p s̄ t̄ r̄ q
            (true, false) => Self::new_unchecked(p * &s.conj(), &r.conj() * q, true),
            // p conj(r t̄ s) q = p s̄ t r̄ q
            (true, true) => Self::new_unchecked(p * &s.conj(), &r.conj() * q, false),
        }
    }

    /// Inverse map: `[p̄, q̄]` for plain pairs and `[q, p]*` for starred ones.
    pub fn inverse(&self) -> Self {
        if self.star {
            Self::new_unchecked(self.q.clone(), self.p.clone(), true)
        } else {
            Self::new_unchecked(self.p.conj(), self.q.conj(), false)
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Rewrites the element by its action on pure quaternions.
    ///
    /// The result is an unstarred `[p, ±p̄]`. Fails when the map does not
    /// preserve the pure quaternions.
    pub fn restrict3(&self) -> Result<Self> {
        let q = if self.star { -&self.q } else { self.q.clone() };
        let pc = self.p.conj();
        if q != pc && q != -&pc {
            return Err(Error::NotThreeDimensional);
        }
        Ok(Self::new_unchecked(self.p.clone(), q, false))
    }

    /// Images of `e1, e2, e3`; the columns of the 3×3 matrix of the map.
    pub fn basis_images(&self) -> [Quaternion; 3] {
        [
            self.apply(&Quaternion::e1()),
            self.apply(&Quaternion::e2()),
            self.apply(&Quaternion::e3()),
        ]
    }

    /// Smallest `n ≤ cap` with `gⁿ = 1`.
    pub fn order(&self, cap: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.compose(self);
        }
        None
    }
}

impl fmt::Display for OrthoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]{}", self.p, self.q, if self.star { "*" } else { "" })
    }
}

/// Unit vector along a pure root, when its length lies in the field.
pub fn unit_root(alpha: &Quaternion) -> Result<Quaternion> {
    if !alpha.is_pure() {
        return Err(Error::NotPure);
    }
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let n = alpha.norm();
    let len = n
        .as_rational()
        .and_then(FieldScalar::sqrt_of_rational)
        .ok_or_else(|| Error::NormNotInField(n.to_string()))?;
    Ok(alpha.scale(&len.inv()?))
}

/// Reflection in the plane orthogonal to `alpha`, in restricted form `[a, a]`
/// with `a = α/|α|`; `t ↦ a t a` fixes `α^⊥` and sends `α ↦ −α`.
pub fn reflection_from_root(alpha: &Quaternion) -> Result<OrthoElement> {
    let a = unit_root(alpha)?;
    Ok(OrthoElement::new_unchecked(a.clone(), a, false))
}

/// The same reflection as the O(4) element `[a, −a]*`, `t ↦ −a t̄ a`.
pub fn reflection_from_root_o4(alpha: &Quaternion) -> Result<OrthoElement> {
    let a = unit_root(alpha)?;
    Ok(OrthoElement::new_unchecked(a.clone(), -a, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rotation3Kind {
    Rotation,
    RotaryInversion,
}

/// Geometric type of an O(3) element: `[p, p̄]` rotates about `Vec(p)`,
/// `[p, −p̄]` is a rotary inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation3Class {
    pub kind: Rotation3Kind,
    /// `Vec(p)`; `None` for `±identity`.
    pub axis: Option<Quaternion>,
    pub order: Option<u32>,
}

pub fn classify3(g: &OrthoElement) -> Result<Rotation3Class> {
    let r = g.restrict3()?;
    let kind = if *r.q() == r.p().conj() {
        Rotation3Kind::Rotation
    } else {
        Rotation3Kind::RotaryInversion
    };
    let v = r.p().vec_part();
    Ok(Rotation3Class {
        kind,
        axis: (!v.is_zero()).then_some(v),
        order: r.order(1000),
    })
}
