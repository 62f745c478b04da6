//! The real field Q(√2, √5) with basis {1, √2, √5, √10}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact element `a + b√2 + c√5 + d√10` with rational coefficients.
///
/// The derived `Ord` is lexicographic on `(a, b, c, d)`. It is a total order
/// used for canonical set layout only and says nothing about the real value;
/// use [`FieldScalar::sign`] or [`FieldScalar::real_cmp`] for that.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldScalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rsign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `p + q√2`.
fn sign_q2(p: &BigRational, q: &BigRational) -> i8 {
    let (sp, sq) = (rsign(p), rsign(q));
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    // Opposite signs: the larger magnitude wins; p² = 2q² is impossible for q ≠ 0.
    let two = BigRational::from_integer(BigInt::from(2));
    if p * p > two * q * q {
        sp
    } else {
        sq
    }
}

/// Product in Q(√2): (p0 + p1√2)(q0 + q1√2).
fn mul_q2(p: (&BigRational, &BigRational), q: (&BigRational, &BigRational)) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    (p.0 * q.0 + two * p.1 * q.1, p.0 * q.1 + p.1 * q.0)
}

impl FieldScalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n / d` as a field element. Panics if `d == 0`.
    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// Builds `a + b√2 + c√5 + d√10` from small integer fractions `(num, den)`.
    pub fn from_fracs(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        Self::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(d.0, d.1))
    }

    pub fn sqrt2() -> Self {
        Self::from_fracs((0, 1), (1, 1), (0, 1), (0, 1))
    }

    pub fn sqrt5() -> Self {
        Self::from_fracs((0, 1), (0, 1), (1, 1), (0, 1))
    }

    pub fn sqrt10() -> Self {
        Self::from_fracs((0, 1), (0, 1), (0, 1), (1, 1))
    }

    /// The golden ratio τ = (1 + √5)/2.
    pub fn tau() -> Self {
        Self::from_fracs((1, 2), (0, 1), (1, 2), (0, 1))
    }

    /// The conjugate σ = (1 − √5)/2.
    pub fn sigma() -> Self {
        Self::from_fracs((1, 2), (0, 1), (-1, 2), (0, 1))
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Self::from_fracs((0, 1), (1, 2), (0, 1), (0, 1))
    }

    /// Coefficients of 1, √2, √5, √10.
    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    /// Image under the automorphism √2 ↦ −√2.
    pub fn conj2(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    /// Image under the automorphism √5 ↦ −√5.
    pub fn conj5(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    /// Multiplicative inverse, through the norm tower Q(√2,√5) → Q(√2) → Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let c5 = self.conj5();
        let n = self * &c5; // lies in Q(√2)
        debug_assert!(n.c.is_zero() && n.d.is_zero());
        let c2 = n.conj2();
        let r = (&n * &c2).a; // rational, nonzero
        let num = &c5 * &c2;
        Ok(num.scale_rational(&r.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        Self::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    /// Exact sign of the real number represented: −1, 0 or +1.
    ///
    /// Writes the value as `A + B√5` with `A, B ∈ Q(√2)` and resolves mixed
    /// signs by comparing `A²` against `5B²`; the same step decides signs in
    /// Q(√2). No approximation is involved.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let sa = sign_q2(&self.a, &self.b);
        let sb = sign_q2(&self.c, &self.d);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = mul_q2((&self.a, &self.b), (&self.a, &self.b));
        let b2 = mul_q2((&self.c, &self.d), (&self.c, &self.d));
        let five = BigRational::from_integer(BigInt::from(5));
        let diff0 = a2.0 - &five * b2.0;
        let diff1 = a2.1 - five * b2.1;
        if sign_q2(&diff0, &diff1) > 0 {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Order of the real values.
    pub fn real_cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Sign of the first nonzero coefficient in (a, b, c, d) order.
    pub fn lex_sign(&self) -> i8 {
        self.coefficients()
            .iter()
            .map(|r| rsign(r))
            .find(|&s| s != 0)
            .unwrap_or(0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Square root of a nonnegative rational, when it lies in the field.
    ///
    /// Succeeds exactly when `r = s²·k` for a rational `s` and `k ∈ {1, 2, 5, 10}`.
    pub fn sqrt_of_rational(r: &BigRational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        for k in [1i64, 2, 5, 10] {
            let t = r / BigRational::from_integer(BigInt::from(k));
            if let Some(s) = rational_sqrt(&t) {
                let mut out = Self::zero();
                match k {
                    1 => out.a = s,
                    2 => out.b = s,
                    5 => out.c = s,
                    _ => out.d = s,
                }
                return Some(out);
            }
        }
        None
    }

    /// Decimal expansion with `sig` significant digits (round half up).
    pub fn to_decimal(&self, sig: usize) -> String {
        let s = self.sign();
        if s == 0 {
            return "0".to_string();
        }
        let v = if s < 0 { -self } else { self.clone() };
        let terms = [
            (v.a.clone(), 1u64),
            (v.b.clone(), 2),
            (v.c.clone(), 5),
            (v.d.clone(), 10),
        ];
        super::decimal::decimal_from_terms(s < 0, &terms, sig)
    }

    /// Nearest-ish `f64`, through a 20-digit decimal expansion.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap_or(f64::NAN)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer();
    let d = r.denom();
    if n.is_negative() {
        return None;
    }
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

impl Default for FieldScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar::new(&self.a + &rhs.a, &self.b + &rhs.b, &self.c + &rhs.c, &self.d + &rhs.d)
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c, &self.d - &rhs.d)
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        // Fast path: the bulk of the values met in practice are rational.
        if let Some(r) = self.as_rational() {
            return rhs.scale_rational(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale_rational(r);
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = BigRational::from_integer(BigInt::from(2));
        let five = BigRational::from_integer(BigInt::from(5));
        let ten = BigRational::from_integer(BigInt::from(10));
        // √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2, √10·√10 = 10.
        let k1 = a * e + &two * b * f + &five * c * g + ten * d * h;
        let k2 = a * f + b * e + &five * (c * h + d * g);
        let k5 = a * g + c * e + &two * (b * h + d * f);
        let k10 = a * h + d * e + b * g + c * f;
        FieldScalar::new(k1, k2, k5, k10)
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: &FieldScalar) -> FieldScalar {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $f(self, rhs: FieldScalar) -> FieldScalar {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for FieldScalar {
    fn sum<I: Iterator<Item = FieldScalar>>(iter: I) -> Self {
        iter.fold(FieldScalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text encoding `a/b + c/d*r2 + e/f*r5 + g/h*r10`, zero terms omitted.
impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, ""), (&self.b, "r2"), (&self.c, "r5"), (&self.d, "r10")];
        let mut first = true;
        for (coef, radical) in terms {
            if coef.is_zero() {
                continue;
            }
            let mag = fmt_rational(&coef.abs());
            if first {
                if coef.is_negative() {
                    f.write_str("-")?;
                }
            } else if coef.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if radical.is_empty() {
                f.write_str(&mag)?;
            } else {
                write!(f, "{mag}*{radical}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for FieldScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_field(s)
    }
}

impl serde::Serialize for FieldScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FieldScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
