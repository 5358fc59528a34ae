use std::fmt;

use super::laurent::LaurentPoly;
use super::maps::phi_inverse;
use super::poly::{ComplexPoly, RealPoly};
use super::trig::TrigPoly;
use crate::error::{Error, Result};
use crate::exactfield::{Scalar, TowerElem};

/// Rational outer function `A(x) / (x^2 + 1)^k`, paired with a `tan(d t / 2)` inner.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OuterRational {
    pub numerator: RealPoly,
    pub pole_order: u32,
}

impl OuterRational {
    pub fn new(numerator: RealPoly, pole_order: u32) -> Result<Self> {
        if pole_order >= 1 && numerator.deg() > 2 * pole_order as usize {
            return Err(Error::Precondition(format!(
                "numerator degree {} exceeds twice the pole order {pole_order}",
                numerator.deg()
            )));
        }
        Ok(OuterRational { numerator, pole_order })
    }

    /// Laurent image of `self ∘ tan(d t / 2)`.
    pub fn compose_tan_laurent(&self, d: u32) -> Result<LaurentPoly> {
        let k = self.pole_order;
        if k == 0 && !self.numerator.is_constant() {
            return Err(Error::Precondition(
                "polynomial of tan is not a trigonometric polynomial".into(),
            ));
        }
        // tan(t/2) = -i(u-1)/(u+1) and 1 + tan^2 = 4u/(u+1)^2 with u = e^{it}
        let um1 = ComplexPoly::from_ints(&[-1, 1]);
        let up1 = ComplexPoly::from_ints(&[1, 1]);
        let mi = -TowerElem::i();
        let mut acc = ComplexPoly::zero();
        for (j, a) in self.numerator.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = a.to_tower() * Scalar::pow(&mi, j as u32);
            let term = &um1.pow(j as u32) * &up1.pow(2 * k - j as u32);
            acc = &acc + &term.scale(&c);
        }
        let quarter = TowerElem::from_int(4).inv().expect("nonzero");
        let l = LaurentPoly::from_poly(&acc)
            .shift(-(k as i64))
            .scale(&Scalar::pow(&quarter, k));
        Ok(l.inner_substitute(&TowerElem::from_int(1), d as i64))
    }

    /// `self ∘ tan(d t / 2)` as a trigonometric polynomial.
    pub fn compose_tan(&self, d: u32) -> Result<TrigPoly> {
        phi_inverse(&self.compose_tan_laurent(d)?)
    }
}

impl fmt::Display for OuterRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole_order {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(z^2 + 1)", self.numerator),
            k => write!(f, "({})/(z^2 + 1)^{k}", self.numerator),
        }
    }
}
