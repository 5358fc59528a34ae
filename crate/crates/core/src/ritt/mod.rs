//! Solutions of `P1 ∘ w1 = P2 ∘ w2` in trigonometric polynomials: generators
//! for the known families, reduction to coprime degrees and classification.

mod classify;
mod engstrom;
mod families;
mod templates;

use std::fmt;
use std::str::FromStr;

pub use classify::{classify_solution, classify_solution_with_cap, DEFAULT_CLASSIFY_CAP};
pub use engstrom::{engstrom_reduce, EngstromReduction};
pub use families::{gen_family, gen_laurent_family, Family, FamilyParams, LaurentFamily, LaurentParams};

use crate::error::Error;
use crate::exactfield::Angle;
use crate::rings::{AffineMap, RealPoly, TrigPoly};
use templates::{left, left_trig, right, templates};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::C => "c",
            CaseLabel::D => "d",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "a" => Ok(CaseLabel::A),
            "b" => Ok(CaseLabel::B),
            "c" => Ok(CaseLabel::C),
            "d" => Ok(CaseLabel::D),
            _ => Err(Error::InvalidParameters(format!("unknown case {s:?}"))),
        }
    }
}

/// Integer parameters of a normal form together with `R` (case a) or `S` (case c).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CaseParams {
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub s: u32,
    pub poly: Option<RealPoly>,
}

/// A right factor, polynomial or trigonometric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Factor {
    Poly(RealPoly),
    Trig(TrigPoly),
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum WitnessInner {
    /// `w_i = W_i ∘ w`.
    Common { w1: RealPoly, w2: RealPoly, w: TrigPoly },
    /// `w_i(t) = wt_i(k t + b)`.
    Shifted {
        w1: TrigPoly,
        w2: TrigPoly,
        k: u32,
        b: Angle,
    },
}

/// How a solution factors through one of the normal forms.
///
/// With `(Q1, v1, Q2, v2)` the input, or the input with both sides
/// exchanged when `swapped` is set: `Q_i = u ∘ p_i`, `v_i` factors through
/// `inner`, and `p_i ∘ mu_i` together with `mu_i^-1 ∘ (reduced inner i)` are
/// exactly the normal form named by `case_label` and `params`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionWitness {
    pub case_label: CaseLabel,
    pub swapped: bool,
    pub u: RealPoly,
    pub p1: RealPoly,
    pub p2: RealPoly,
    pub inner: WitnessInner,
    pub mu: [AffineMap; 2],
    pub params: CaseParams,
}

impl SolutionWitness {
    /// The reduced inners, `W_i` or `wt_i`.
    pub fn reduced_inners(&self) -> [Factor; 2] {
        match &self.inner {
            WitnessInner::Common { w1, w2, .. } => [Factor::Poly(w1.clone()), Factor::Poly(w2.clone())],
            WitnessInner::Shifted { w1, w2, .. } => [Factor::Trig(w1.clone()), Factor::Trig(w2.clone())],
        }
    }

    /// Checks every recomposition against the given solution.
    pub fn check(&self, p1: &RealPoly, w1: &TrigPoly, p2: &RealPoly, w2: &TrigPoly) -> bool {
        let (q1, v1, q2, v2) = if self.swapped {
            (p2, w2, p1, w1)
        } else {
            (p1, w1, p2, w2)
        };
        if self.u.compose(&self.p1) != *q1 || self.u.compose(&self.p2) != *q2 {
            return false;
        }
        let inners_ok = match &self.inner {
            WitnessInner::Common { w1, w2, w } => TrigPoly::compose(w1, w) == *v1 && TrigPoly::compose(w2, w) == *v2,
            WitnessInner::Shifted { w1, w2, k, b } => w1.shift(*k, b) == *v1 && w2.shift(*k, b) == *v2,
        };
        if !inners_ok || !self.mu.iter().all(AffineMap::is_real) {
            return false;
        }
        let Ok(normal) = templates(self.case_label, &self.params) else {
            return false;
        };
        let outers = [&self.p1, &self.p2];
        normal
            .iter()
            .zip(self.reduced_inners())
            .enumerate()
            .all(|(j, ((outer, inner), reduced))| {
                let mu = &self.mu[j];
                let mu_inv = mu.inverse();
                let inner_ok = match (&reduced, inner) {
                    (Factor::Poly(x), Factor::Poly(t)) => left(&mu_inv, x) == *t,
                    (Factor::Trig(x), Factor::Trig(t)) => left_trig(&mu_inv, x) == *t,
                    _ => false,
                };
                inner_ok && right(outers[j], mu) == *outer
            })
    }
}

/// Exact test of `P1 ∘ w1 = P2 ∘ w2`.
pub fn verify_solution(p1: &RealPoly, w1: &TrigPoly, p2: &RealPoly, w2: &TrigPoly) -> bool {
    TrigPoly::compose(p1, w1) == TrigPoly::compose(p2, w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verification() {
        let sq = RealPoly::from_ints(&[0, 0, 1]);
        let one_minus = RealPoly::from_ints(&[1, 0, -1]);
        assert!(verify_solution(&sq, &TrigPoly::cos(1), &one_minus, &TrigPoly::sin(1)));
        assert!(!verify_solution(&sq, &TrigPoly::cos(1), &sq, &TrigPoly::sin(1)));
    }

    #[test]
    fn labels() {
        for l in [CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D] {
            assert_eq!(l.as_str().parse::<CaseLabel>().unwrap(), l);
        }
        assert!("e".parse::<CaseLabel>().is_err());
    }
}
