use std::fmt;

use num_integer::Integer;

use super::{int, rat, RealSubElem, TowerElem};
use crate::error::{Error, Result};

/// A rotation angle carried exactly as its `(cos, sin)` pair.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Angle {
    cos: RealSubElem,
    sin: RealSubElem,
}

// cos(s*pi/12) for s = 0..=6
fn cos_table(s: usize) -> RealSubElem {
    let z = int(0);
    match s {
        0 => RealSubElem::from_int(1),
        1 => RealSubElem::new([z.clone(), rat(1, 4), z.clone(), rat(1, 4)]),
        2 => RealSubElem::new([z.clone(), z.clone(), rat(1, 2), z]),
        3 => RealSubElem::new([z.clone(), rat(1, 2), z.clone(), z]),
        4 => RealSubElem::from_rat(rat(1, 2)),
        5 => RealSubElem::new([z.clone(), rat(-1, 4), z.clone(), rat(1, 4)]),
        6 => RealSubElem::from_int(0),
        _ => unreachable!(),
    }
}

fn cos_twelfths(s: i64) -> RealSubElem {
    let s = s.rem_euclid(24) as usize;
    match s {
        0..=6 => cos_table(s),
        7..=12 => -cos_table(12 - s),
        13..=18 => -cos_table(s - 12),
        _ => cos_table(24 - s),
    }
}

impl Angle {
    pub fn zero() -> Self {
        Angle::pi_twelfths(0)
    }

    /// The angle `s * pi / 12`.
    pub fn pi_twelfths(s: i64) -> Self {
        Angle {
            cos: cos_twelfths(s),
            sin: cos_twelfths(6 - s),
        }
    }

    /// The angle `num/den * pi`; errors unless it is a multiple of `pi/12`.
    pub fn from_pi_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let twelve = 12 * num;
        if twelve % den != 0 {
            return Err(Error::UnrepresentableAngle(format!("{num}/{den}*pi")));
        }
        Ok(Angle::pi_twelfths(twelve / den))
    }

    /// General constructor; requires `cos^2 + sin^2 = 1`.
    pub fn from_cos_sin(cos: RealSubElem, sin: RealSubElem) -> Result<Self> {
        if cos.clone() * cos.clone() + sin.clone() * sin.clone() != RealSubElem::from_int(1) {
            return Err(Error::NotUnitAngle);
        }
        Ok(Angle { cos, sin })
    }

    /// Angle whose unit complex number `e^{i angle}` is given.
    pub fn from_unit(u: &TowerElem) -> Result<Self> {
        Angle::from_cos_sin(u.real_part(), u.imag_part())
    }

    pub fn cos(&self) -> &RealSubElem {
        &self.cos
    }

    pub fn sin(&self) -> &RealSubElem {
        &self.sin
    }

    /// `e^{i angle}`.
    pub fn unit(&self) -> TowerElem {
        TowerElem::from_parts(self.cos.clone(), self.sin.clone())
    }

    pub fn add(&self, other: &Angle) -> Angle {
        let u = self.unit() * other.unit();
        Angle {
            cos: u.real_part(),
            sin: u.imag_part(),
        }
    }

    pub fn neg(&self) -> Angle {
        Angle {
            cos: self.cos.clone(),
            sin: -self.sin.clone(),
        }
    }

    /// `n * angle`, computed exactly by repeated angle addition.
    pub fn times(&self, n: i64) -> Angle {
        let u = self.unit().powi(n).expect("unit is invertible");
        Angle {
            cos: u.real_part(),
            sin: u.imag_part(),
        }
    }

    /// `s` with `angle = s*pi/12 (mod 2pi)`, when such an `s` exists.
    pub fn as_pi_twelfths(&self) -> Option<i64> {
        (0..24).find(|&s| Angle::pi_twelfths(s) == *self)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_pi_twelfths() {
            Some(0) => write!(f, "0"),
            Some(s) => {
                let g = s.gcd(&12);
                let (n, d) = (s / g, 12 / g);
                match (n, d) {
                    (1, 1) => write!(f, "pi"),
                    (n, 1) => write!(f, "{n}*pi"),
                    (1, d) => write!(f, "pi/{d}"),
                    (n, d) => write!(f, "{n}*pi/{d}"),
                }
            }
            None => write!(f, "atan2({}, {})", self.sin, self.cos),
        }
    }
}
