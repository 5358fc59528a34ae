use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::real::write_terms;
use super::{int, over_common_denominator, rat_to_f64, Rat, RealSubElem, Scalar};
use crate::error::{Error, Result};

/// Printed names of the basis `{1, i, sqrt2, sqrt3, sqrt6, i*sqrt2, i*sqrt3, i*sqrt6}`.
pub const BASIS_NAMES: [&str; 8] = [
    "",
    "i",
    "sqrt(2)",
    "sqrt(3)",
    "sqrt(6)",
    "i*sqrt(2)",
    "i*sqrt(3)",
    "i*sqrt(6)",
];

/// `MUL_TABLE[j][k] = (f, l)` means `e_j * e_k = f * e_l`.
pub const MUL_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 5), (1, 6), (1, 7), (-1, 2), (-1, 3), (-1, 4)],
    [(1, 2), (1, 5), (2, 0), (1, 4), (2, 3), (2, 1), (1, 7), (2, 6)],
    [(1, 3), (1, 6), (1, 4), (3, 0), (3, 2), (1, 7), (3, 1), (3, 5)],
    [(1, 4), (1, 7), (2, 3), (3, 2), (6, 0), (2, 6), (3, 5), (6, 1)],
    [(1, 5), (-1, 2), (2, 1), (1, 7), (2, 6), (-2, 0), (-1, 4), (-2, 3)],
    [(1, 6), (-1, 3), (1, 7), (3, 1), (3, 5), (-1, 4), (-3, 0), (-3, 2)],
    [(1, 7), (-1, 4), (2, 6), (3, 5), (6, 1), (-2, 3), (-3, 2), (-6, 0)],
];

const IMAG: [usize; 4] = [1, 5, 6, 7];
const REAL: [usize; 4] = [0, 2, 3, 4];

/// Element of `Q(i, sqrt2, sqrt3)` in the fixed basis of [`BASIS_NAMES`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TowerElem {
    c: [Rat; 8],
}

impl TowerElem {
    pub fn new(c: [Rat; 8]) -> Self {
        TowerElem { c }
    }

    pub fn basis(j: usize) -> Self {
        let mut c: [Rat; 8] = Default::default();
        c[j] = int(1);
        TowerElem { c }
    }

    pub fn from_rat(q: Rat) -> Self {
        let mut c: [Rat; 8] = Default::default();
        c[0] = q;
        TowerElem { c }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(int(n))
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn from_real(r: RealSubElem) -> Self {
        Self::from_parts(r, RealSubElem::from_int(0))
    }

    /// `re + i*im`.
    pub fn from_parts(re: RealSubElem, im: RealSubElem) -> Self {
        let [a, b, c, d] = re.coeffs().clone();
        let [e, f, g, h] = im.coeffs().clone();
        TowerElem {
            c: [a, e, b, c, d, f, g, h],
        }
    }

    pub fn coeffs(&self) -> &[Rat; 8] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::from_int(1)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        IMAG.iter().all(|&j| self.c[j].is_zero())
    }

    pub fn real_part(&self) -> RealSubElem {
        RealSubElem::new(REAL.map(|j| self.c[j].clone()))
    }

    pub fn imag_part(&self) -> RealSubElem {
        RealSubElem::new(IMAG.map(|j| self.c[j].clone()))
    }

    /// Complex conjugation: negates the four `i`-carrying coordinates.
    pub fn conj(&self) -> Self {
        let mut c = self.c.clone();
        for j in IMAG {
            c[j] = -c[j].clone();
        }
        TowerElem { c }
    }

    fn flip(&self, idx: [usize; 4]) -> Self {
        let mut c = self.c.clone();
        for j in idx {
            c[j] = -c[j].clone();
        }
        TowerElem { c }
    }

    /// Galois automorphism selected by three bits: flip `i`, flip `sqrt2`, flip `sqrt3`.
    pub fn galois(&self, flip_i: bool, flip_sqrt2: bool, flip_sqrt3: bool) -> Self {
        let mut x = self.clone();
        if flip_i {
            x = x.conj();
        }
        if flip_sqrt2 {
            x = x.flip([2, 4, 5, 7]);
        }
        if flip_sqrt3 {
            x = x.flip([3, 4, 6, 7]);
        }
        x
    }

    /// `|a|^2 = a * conj(a)`, always real.
    pub fn norm_sq(&self) -> RealSubElem {
        (self.clone() * self.conj()).real_part()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sq().inv()?;
        Some(self.conj() * TowerElem::from_real(n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        rhs.inv().map(|r| self.clone() * r).ok_or(Error::DivisionByZero)
    }

    pub fn scale(&self, q: &Rat) -> Self {
        TowerElem {
            c: self.c.clone().map(|x| x * q),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Option<Self> {
        let p = Scalar::pow(self, e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Some(p)
        }
    }

    /// Sign convention for choosing among roots: first nonzero coordinate positive.
    pub fn has_canonical_sign(&self) -> bool {
        self.c.iter().find(|q| !q.is_zero()).is_none_or(|q| q.is_positive())
    }

    /// Deterministic total order: canonical-sign elements first, then coordinates.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other
            .has_canonical_sign()
            .cmp(&self.has_canonical_sign())
            .then_with(|| self.c.cmp(&other.c))
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.real_part().to_f64(), self.imag_part().to_f64())
    }

    pub fn to_f64_coords(&self) -> [f64; 8] {
        self.c.clone().map(|q| rat_to_f64(&q))
    }
}

impl Add for TowerElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x += y;
        }
        TowerElem { c }
    }
}

impl Sub for TowerElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x -= y;
        }
        TowerElem { c }
    }
}

impl Neg for TowerElem {
    type Output = Self;
    fn neg(self) -> Self {
        TowerElem { c: self.c.map(|x| -x) }
    }
}

impl Mul for TowerElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn mul(self, rhs: &'a TowerElem) -> TowerElem {
        let (xs, dx) = over_common_denominator(&self.c);
        let (ys, dy) = over_common_denominator(&rhs.c);
        let mut acc: [BigInt; 8] = Default::default();
        for (j, x) in xs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in ys.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (f, l) = MUL_TABLE[j][k];
                let p = x * y;
                if f == 1 {
                    acc[l as usize] += p;
                } else {
                    acc[l as usize] += p * f;
                }
            }
        }
        let den = dx * dy;
        TowerElem {
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

impl Scalar for TowerElem {
    fn zero() -> Self {
        TowerElem::default()
    }
    fn one() -> Self {
        TowerElem::from_int(1)
    }
    fn is_zero(&self) -> bool {
        TowerElem::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        TowerElem::inv(self)
    }
    fn from_rat(q: Rat) -> Self {
        TowerElem::from_rat(q)
    }
    fn to_tower(&self) -> TowerElem {
        self.clone()
    }
}

impl From<RealSubElem> for TowerElem {
    fn from(r: RealSubElem) -> Self {
        TowerElem::from_real(r)
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.c.iter().zip(BASIS_NAMES.iter().copied()))
    }
}
