//! Numeric backends shared by every geometric and invariant routine.
//!
//! Three realizations sit behind [`Scalar`]:
//!
//! - `f64` for fast evaluation on imaging data,
//! - [`Rational`] (arbitrary precision) for exact identity checks,
//! - [`Dual`] for exact forward-mode derivatives, usually layered over
//!   [`Rational`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
///
/// Panics when `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Field element contract used throughout the crate.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    /// True when the value is exactly zero. For dual numbers only the
    /// value part is inspected; attached derivatives are ignored.
    fn is_zero(&self) -> bool;

    /// Lossy conversion used for reporting and float comparisons.
    fn to_f64(&self) -> f64;

    /// Integer power. Negative exponents divide, so the base must be
    /// nonzero in that case.
    fn powi(&self, exp: i64) -> Self {
        let mut base = self.clone();
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        if exp < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn powi(&self, exp: i64) -> Self {
        f64::powi(*self, exp as i32)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Parses `"a/b"`, an integer or a decimal (with optional exponent)
/// exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let bad = |what: &str| Error::InvalidArgument(format!("bad {what} in {s:?}"));
        let n: BigInt = n.trim().parse().map_err(|_| bad("numerator"))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad("denominator"))?;
        if d.is_zero() {
            return Err(bad("denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(s).ok_or_else(|| Error::InvalidArgument(format!("not a rational literal: {s:?}")))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let mut num: BigInt = format!("{int}{frac}").parse().ok()?;
    if neg {
        num = -num;
    }
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        Rational::from_integer(num * num_traits::Pow::pow(&ten, scale as u32))
    } else {
        Rational::new(num, num_traits::Pow::pow(&ten, scale.unsigned_abs()))
    })
}

/// Formats a rational as `"num/den"`, or `"num"` for integers.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dual number `value + Σ partials[k]·εₖ` with `εᵢεⱼ = 0`.
///
/// The partials vector may be shorter than the number of directions in
/// play; missing entries are zero. Constants therefore carry an empty
/// vector and cost nothing.
#[derive(Clone, Debug)]
pub struct Dual<T> {
    pub value: T,
    pub partials: Vec<T>,
}

impl<T: Scalar> Dual<T> {
    pub fn constant(value: T) -> Self {
        Dual {
            value,
            partials: Vec::new(),
        }
    }

    /// Independent variable number `index` out of `dim` directions.
    pub fn variable(value: T, index: usize, dim: usize) -> Self {
        let mut partials = vec![T::zero(); dim];
        partials[index] = T::one();
        Dual { value, partials }
    }

    /// Partial derivative along direction `k`.
    pub fn partial(&self, k: usize) -> T {
        self.partials.get(k).cloned().unwrap_or_else(T::zero)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Vec<T> {
        let len = self.partials.len().max(other.partials.len());
        let zero = T::zero();
        (0..len)
            .map(|k| {
                let a = self.partials.get(k).unwrap_or(&zero);
                let b = other.partials.get(k).unwrap_or(&zero);
                f(a, b)
            })
            .collect()
    }
}

impl<T: Scalar> PartialEq for Dual<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.value != other.value {
            return false;
        }
        let len = self.partials.len().max(other.partials.len());
        (0..len).all(|k| self.partial(k) == other.partial(k))
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let partials = self.zip_with(&rhs, |a, b| a.clone() + b.clone());
        Dual {
            value: self.value + rhs.value,
            partials,
        }
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let partials = self.zip_with(&rhs, |a, b| a.clone() - b.clone());
        Dual {
            value: self.value - rhs.value,
            partials,
        }
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + a'ε)(b + b'ε) = ab + (a'b + ab')ε
        let partials = self.zip_with(&rhs, |da, db| {
            da.clone() * rhs.value.clone() + self.value.clone() * db.clone()
        });
        Dual {
            value: self.value * rhs.value,
            partials,
        }
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // (a/b)' = (a'b - ab') / b²
        let denom = rhs.value.clone() * rhs.value.clone();
        let partials = self.zip_with(&rhs, |da, db| {
            (da.clone() * rhs.value.clone() - self.value.clone() * db.clone()) / denom.clone()
        });
        Dual {
            value: self.value / rhs.value,
            partials,
        }
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual {
            value: -self.value,
            partials: self.partials.into_iter().map(|d| -d).collect(),
        }
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn one() -> Self {
        Dual::constant(T::one())
    }
    fn from_i64(v: i64) -> Self {
        Dual::constant(T::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Rational realization of dual numbers, used by the rank certifier.
pub type RationalDual = Dual<Rational>;
