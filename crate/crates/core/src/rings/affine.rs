use std::fmt;

use super::laurent::LaurentPoly;
use super::poly::{ComplexPoly, Polynomial, RealPoly};
use super::trig::TrigPoly;
use crate::error::{Error, Result};
use crate::exactfield::{RealSubElem, TowerElem};

/// Degree-one map `z -> alpha*z + beta`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    pub alpha: TowerElem,
    pub beta: TowerElem,
}

impl AffineMap {
    pub fn new(alpha: TowerElem, beta: TowerElem) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::Precondition("affine map with zero slope".into()));
        }
        Ok(AffineMap { alpha, beta })
    }

    pub fn real(alpha: RealSubElem, beta: RealSubElem) -> Result<Self> {
        Self::new(alpha.into(), beta.into())
    }

    pub fn identity() -> Self {
        AffineMap {
            alpha: TowerElem::from_int(1),
            beta: TowerElem::default(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_real(&self) -> bool {
        self.alpha.is_real() && self.beta.is_real()
    }

    /// `(z - beta) / alpha`.
    pub fn inverse(&self) -> Self {
        let ai = self.alpha.inv().expect("slope is nonzero");
        AffineMap {
            beta: -(&self.beta * &ai),
            alpha: ai,
        }
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &AffineMap) -> Self {
        AffineMap {
            alpha: &self.alpha * &other.alpha,
            beta: &self.alpha * &other.beta + self.beta.clone(),
        }
    }

    pub fn apply(&self, x: &TowerElem) -> TowerElem {
        &self.alpha * x + self.beta.clone()
    }

    pub fn as_poly(&self) -> ComplexPoly {
        Polynomial::linear(self.alpha.clone(), self.beta.clone())
    }

    pub fn as_real_poly(&self) -> Option<RealPoly> {
        self.as_poly().to_real()
    }

    /// `P ∘ self`.
    pub fn precompose(&self, p: &ComplexPoly) -> ComplexPoly {
        p.compose(&self.as_poly())
    }

    /// `self ∘ L`.
    pub fn apply_laurent(&self, l: &LaurentPoly) -> LaurentPoly {
        &l.scale(&self.alpha) + &LaurentPoly::constant(self.beta.clone())
    }

    /// `self ∘ w`; the map must be real.
    pub fn apply_trig(&self, w: &TrigPoly) -> Option<TrigPoly> {
        if !self.is_real() {
            return None;
        }
        Some(&w.scale(&self.alpha.real_part()) + &TrigPoly::constant(self.beta.real_part()))
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}
