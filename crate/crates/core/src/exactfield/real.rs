use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{fmt_rat, int, over_common_denominator, rat_to_f64, Rat, Scalar, TowerElem};

/// Element `a + b*sqrt2 + c*sqrt3 + d*sqrt6` of the real subfield.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealSubElem {
    c: [Rat; 4],
}

// basis index = (sqrt2 bit) + 2 * (sqrt3 bit)
const REAL_NAMES: [&str; 4] = ["", "sqrt(2)", "sqrt(3)", "sqrt(6)"];

impl RealSubElem {
    pub fn new(c: [Rat; 4]) -> Self {
        RealSubElem { c }
    }

    pub fn from_rat(q: Rat) -> Self {
        RealSubElem {
            c: [q, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(int(n))
    }

    pub fn sqrt2() -> Self {
        RealSubElem {
            c: [Rat::zero(), int(1), Rat::zero(), Rat::zero()],
        }
    }

    pub fn sqrt3() -> Self {
        RealSubElem {
            c: [Rat::zero(), Rat::zero(), int(1), Rat::zero()],
        }
    }

    pub fn sqrt6() -> Self {
        RealSubElem {
            c: [Rat::zero(), Rat::zero(), Rat::zero(), int(1)],
        }
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.c[0]
    }

    /// Automorphism `sqrt2 -> -sqrt2`.
    pub fn flip_sqrt2(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        RealSubElem { c: [a, -b, c, -d] }
    }

    /// Automorphism `sqrt3 -> -sqrt3`.
    pub fn flip_sqrt3(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        RealSubElem { c: [a, b, -c, -d] }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let s2 = self.flip_sqrt2();
        let y = self.clone() * s2.clone(); // in Q(sqrt3)
        let y3 = y.flip_sqrt3();
        let n = (y * y3.clone()).c[0].clone(); // rational norm
        let num = s2 * y3;
        Some(num.scale(&(Rat::from_integer(1.into()) / n)))
    }

    pub fn scale(&self, q: &Rat) -> Self {
        RealSubElem {
            c: self.c.clone().map(|x| x * q),
        }
    }

    /// Exact sign in the embedding with positive square roots.
    pub fn signum(&self) -> i8 {
        let [a, b, c, d] = &self.c;
        // (a + b sqrt2) + sqrt3 (c + d sqrt2)
        sign_plus_sqrt(sign_q2(a, b), sign_q2(c, d), || {
            // sign of P^2 - 3 Q^2 with P = a + b sqrt2, Q = c + d sqrt2
            let p2 = (a * a + int(2) * b * b, int(2) * a * b);
            let q2 = (c * c + int(2) * d * d, int(2) * c * d);
            let diff0 = p2.0 - int(3) * q2.0;
            let diff1 = p2.1 - int(3) * q2.1;
            sign_q2(&diff0, &diff1)
        })
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Nonnegative square root when it lies in this field.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        super::roots::sqrt_all(&TowerElem::from_real(self.clone()))
            .into_iter()
            .filter(TowerElem::is_real)
            .map(|r| r.real_part())
            .find(|r| r.signum() >= 0)
    }

    /// Real `n`-th roots lying in this field, in canonical order.
    pub fn real_nth_roots(&self, n: u32) -> Vec<Self> {
        super::roots::nth_roots(&TowerElem::from_real(self.clone()), n)
            .into_iter()
            .filter(TowerElem::is_real)
            .map(|r| r.real_part())
            .collect()
    }

    pub fn to_f64(&self) -> f64 {
        let s2 = 2f64.sqrt();
        let s3 = 3f64.sqrt();
        rat_to_f64(&self.c[0])
            + rat_to_f64(&self.c[1]) * s2
            + rat_to_f64(&self.c[2]) * s3
            + rat_to_f64(&self.c[3]) * s2 * s3
    }
}

fn sign_rat(q: &Rat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

// sign of x + y*sqrt(k) given signs of x and y and a thunk for sign(x^2 - k y^2)
fn sign_plus_sqrt(sx: i8, sy: i8, disc: impl FnOnce() -> i8) -> i8 {
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    // opposite signs: the larger magnitude wins
    let d = disc();
    if d == 0 {
        0
    } else if d > 0 {
        sx
    } else {
        sy
    }
}

fn sign_q2(a: &Rat, b: &Rat) -> i8 {
    sign_plus_sqrt(sign_rat(a), sign_rat(b), || sign_rat(&(a * a - int(2) * b * b)))
}

impl Add for RealSubElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.c;
        let [e, f, g, h] = rhs.c;
        RealSubElem {
            c: [a + e, b + f, c + g, d + h],
        }
    }
}

impl Sub for RealSubElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RealSubElem {
    type Output = Self;
    fn neg(self) -> Self {
        RealSubElem { c: self.c.map(|x| -x) }
    }
}

impl Mul for RealSubElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (xs, dx) = over_common_denominator(&self.c);
        let (ys, dy) = over_common_denominator(&rhs.c);
        let mut acc: [BigInt; 4] = Default::default();
        for (j, x) in xs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in ys.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                // shared sqrt2 / sqrt3 bits square to 2 / 3
                let mut f = 1u32;
                if j & k & 1 != 0 {
                    f *= 2;
                }
                if j & k & 2 != 0 {
                    f *= 3;
                }
                acc[j ^ k] += x * y * f;
            }
        }
        let den = dx * dy;
        RealSubElem {
            c: acc.map(|n| {
                if n.is_zero() {
                    Rat::zero()
                } else {
                    Rat::new(n, den.clone())
                }
            }),
        }
    }
}

impl Scalar for RealSubElem {
    fn zero() -> Self {
        RealSubElem::from_int(0)
    }
    fn one() -> Self {
        RealSubElem::from_int(1)
    }
    fn is_zero(&self) -> bool {
        RealSubElem::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        RealSubElem::inv(self)
    }
    fn from_rat(q: Rat) -> Self {
        RealSubElem::from_rat(q)
    }
    fn to_tower(&self) -> TowerElem {
        TowerElem::from_real(self.clone())
    }
}

impl Default for RealSubElem {
    fn default() -> Self {
        RealSubElem::from_int(0)
    }
}

impl fmt::Display for RealSubElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.c.iter().zip(REAL_NAMES.iter().copied()))
    }
}

/// Shared printer: `3/2 + 1/2*i*sqrt(2)` style, basis order, zero terms skipped.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rat, &'static str)>,
) -> fmt::Result {
    let mut first = true;
    for (q, name) in terms {
        if q.is_zero() {
            continue;
        }
        let neg = q.is_negative();
        let mag = q.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if name.is_empty() {
            write!(f, "{}", fmt_rat(&mag))?;
        } else if mag == int(1) {
            write!(f, "{name}")?;
        } else {
            write!(f, "{}*{name}", fmt_rat(&mag))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
