//! Exact arithmetic in `Q(i, sqrt2, sqrt3)` and its real subfield `Q(sqrt2, sqrt3)`.
//!
//! The big field is the 24th cyclotomic field: it contains every
//! `e^{i pi s / 12}` and all constants used by the solution families.
//! Nothing in here touches floating point except the seeding of odd
//! roots in [`roots`], whose candidates are always verified exactly.

mod angle;
mod real;
pub mod roots;
mod tower;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use angle::Angle;
pub use real::RealSubElem;
pub use tower::{TowerElem, BASIS_NAMES, MUL_TABLE};

/// Arbitrary-precision rational.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

// numerators over the lcm of the denominators
pub(crate) fn over_common_denominator<const N: usize>(c: &[Rat; N]) -> ([BigInt; N], BigInt) {
    let mut den = BigInt::one();
    for q in c.iter().filter(|q| !q.is_zero()) {
        if !q.denom().is_one() && *q.denom() != den {
            den = den.lcm(q.denom());
        }
    }
    let nums = std::array::from_fn(|j| {
        let q = &c[j];
        if q.is_zero() {
            BigInt::zero()
        } else if *q.denom() == den {
            q.numer().clone()
        } else {
            q.numer() * (&den / q.denom())
        }
    });
    (nums, den)
}

/// Coefficient field for dense polynomials.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_rat(q: Rat) -> Self;
    fn to_tower(&self) -> TowerElem;

    fn from_int(n: i64) -> Self {
        Self::from_rat(int(n))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Writes a rational in the `p` or `p/q` form used by the printers.
pub(crate) fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact `n`-th root of a rational, if it is rational.
pub(crate) fn rat_nth_root(q: &Rat, n: u32) -> Option<Rat> {
    if q.is_zero() {
        return Some(Rat::zero());
    }
    if q.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let num = q.numer().abs();
    let den = q.denom().clone();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if num_traits::pow(rn.clone(), n as usize) != num || num_traits::pow(rd.clone(), n as usize) != den {
        return None;
    }
    let r = Rat::new(rn, rd);
    Some(if q.is_negative() { -r } else { r })
}

pub(crate) fn rat_to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
