//! Exact moments `∫_0^{2π} p^i dq` of trigonometric polynomials and
//! `∫_0^1 P^i dQ` of polynomials.

use std::fmt;

use crate::exactfield::{rat, RealSubElem};
use crate::rings::{write_sum, RealPoly, TrigPoly};

/// Whether a moment is a multiple of `pi` or a plain number.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MomentUnit {
    Pi,
    One,
}

/// A moment value `coeff * unit`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Moment {
    pub coeff: RealSubElem,
    pub unit: MomentUnit,
}

impl Moment {
    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for Moment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = match self.unit {
            MomentUnit::Pi if !self.coeff.is_zero() => "pi",
            _ => "",
        };
        write_sum(
            f,
            std::iter::once((&self.coeff, mono.to_string())).filter(|(c, _)| !c.is_zero()),
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentReport {
    pub moments: Vec<Moment>,
    pub all_vanish: bool,
    pub first_nonzero: Option<usize>,
}

impl MomentReport {
    fn new(moments: Vec<Moment>) -> Self {
        let first_nonzero = moments.iter().position(|m| !m.is_zero());
        MomentReport {
            all_vanish: first_nonzero.is_none(),
            first_nonzero,
            moments,
        }
    }
}

/// `∫_0^{2π} p^i q' dt`, as the coefficient of `pi`.
pub fn trig_moment(p: &TrigPoly, q: &TrigPoly, i: u32) -> RealSubElem {
    pi_coeff(&p.pow(i), &q.derivative())
}

fn pi_coeff(pi: &TrigPoly, dq: &TrigPoly) -> RealSubElem {
    (pi * dq).constant_term() * RealSubElem::from_int(2)
}

/// Trigonometric moments for `i = 0..=n`.
pub fn trig_moments_vanish(p: &TrigPoly, q: &TrigPoly, n: u32) -> MomentReport {
    let dq = q.derivative();
    let mut power = TrigPoly::one();
    let mut out = vec![];
    for i in 0..=n {
        if i > 0 {
            power = &power * p;
        }
        out.push(Moment {
            coeff: pi_coeff(&power, &dq),
            unit: MomentUnit::Pi,
        });
    }
    MomentReport::new(out)
}

fn integrate_unit(f: &RealPoly) -> RealSubElem {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(RealSubElem::default(), |acc, (k, c)| {
            acc + c.scale(&rat(1, k as i64 + 1))
        })
}

/// `∫_0^1 P^i Q' dx`.
pub fn poly_moment(p: &RealPoly, q: &RealPoly, i: u32) -> RealSubElem {
    integrate_unit(&(&p.pow(i) * &q.derivative()))
}

/// Polynomial moments for `i = 0..=n`.
pub fn poly_moments_vanish(p: &RealPoly, q: &RealPoly, n: u32) -> MomentReport {
    let dq = q.derivative();
    let mut power = RealPoly::one();
    let mut out = vec![];
    for i in 0..=n {
        if i > 0 {
            power = &power * p;
        }
        out.push(Moment {
            coeff: integrate_unit(&(&power * &dq)),
            unit: MomentUnit::One,
        });
    }
    MomentReport::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trig_examples() {
        let (c, s) = (TrigPoly::cos(1), TrigPoly::sin(1));
        assert_eq!(trig_moment(&c, &s, 1), RealSubElem::from_int(1));
        for i in 0..=10 {
            assert!(trig_moment(&c, &c, i).is_zero());
        }
        assert!(trig_moment(&c, &TrigPoly::constant(RealSubElem::from_int(3)), 2).is_zero());
        let r = trig_moments_vanish(&c, &s, 5);
        assert_eq!(r.first_nonzero, Some(1));
        assert_eq!(r.moments[1].to_string(), "pi");
        let r = trig_moments_vanish(&TrigPoly::cos(2), &TrigPoly::cos(3), 20);
        assert!(r.all_vanish);
        assert_eq!(r.moments[0].to_string(), "0");
        let half = Moment {
            coeff: RealSubElem::from_rat(rat(-1, 2)),
            unit: MomentUnit::Pi,
        };
        assert_eq!(half.to_string(), "-1/2*pi");
    }

    #[test]
    fn poly_examples() {
        let z = RealPoly::x();
        assert_eq!(
            poly_moment(&z, &RealPoly::from_ints(&[0, 0, 1]), 1),
            RealSubElem::from_rat(rat(2, 3))
        );
        let w = RealPoly::from_ints(&[0, 1, -1]);
        assert!(poly_moments_vanish(&w, &w, 10).all_vanish);
        assert!(poly_moment(&z, &RealPoly::constant(RealSubElem::from_int(5)), 3).is_zero());
        assert_eq!(poly_moments_vanish(&z, &z, 2).moments[2].to_string(), "1/3");
    }
}
