//! The isomorphism `phi` onto self-reciprocal Laurent polynomials and the
//! half-angle rewriting `psi`.

use super::laurent::LaurentPoly;
use super::poly::{ComplexPoly, Polynomial, RealPoly};
use super::trig::TrigPoly;
use crate::error::{Error, Result};
use crate::exactfield::{rat, RealSubElem, TowerElem};

/// `cos k t -> (z^k + z^-k)/2`, `sin k t -> (z^k - z^-k)/(2i)`.
pub fn phi_map(p: &TrigPoly) -> LaurentPoly {
    let half = rat(1, 2);
    let mut out = LaurentPoly::zero();
    for (&k, (a, b)) in p.harmonics() {
        if k == 0 {
            out.add_term(0, a.clone().into());
            continue;
        }
        let a = TowerElem::from(a.clone());
        let ib = &TowerElem::i() * &TowerElem::from(b.clone());
        out.add_term(k as i64, (a.clone() - ib.clone()).scale(&half));
        out.add_term(-(k as i64), (a + ib).scale(&half));
    }
    out
}

/// Inverse of [`phi_map`]; rejects Laurent polynomials that are not self-reciprocal.
pub fn phi_inverse(l: &LaurentPoly) -> Result<TrigPoly> {
    if !l.is_self_reciprocal() {
        return Err(Error::NotSelfReciprocal(l.to_string()));
    }
    let two = RealSubElem::from_int(2);
    Ok(TrigPoly::from_harmonics(l.terms().iter().filter(|(&k, _)| k >= 0).map(
        |(&k, c)| {
            if k == 0 {
                (0, c.real_part(), RealSubElem::from_int(0))
            } else {
                (k as u32, c.real_part() * two.clone(), -(c.imag_part() * two.clone()))
            }
        },
    )))
}

/// `p` as `N(x) / (1 + x^2)^d` with `x = tan(t/2)` and `d = deg p`.
pub fn psi_map(p: &TrigPoly) -> (RealPoly, RealPoly) {
    let d = p.deg();
    let one_plus_sq = RealPoly::from_ints(&[1, 0, 1]);
    // (1 + i x)^2 = e^{i t} (1 + x^2)
    let base = ComplexPoly::new(vec![TowerElem::from_int(1), TowerElem::i()]).pow(2);
    let mut num = RealPoly::zero();
    let mut power = ComplexPoly::one();
    for k in 0..=d {
        let (a, b) = p.harmonic(k);
        if !(a.is_zero() && b.is_zero()) {
            let re = Polynomial::new(power.coeffs().iter().map(TowerElem::real_part).collect());
            let im = Polynomial::new(power.coeffs().iter().map(TowerElem::imag_part).collect());
            let term = &(&re.scale(&a) + &im.scale(&b)) * &one_plus_sq.pow(d - k);
            num = &num + &term;
        }
        power = &power * &base;
    }
    (num, one_plus_sq.pow(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        let h = TowerElem::from_rat(rat(1, 2));
        assert_eq!(
            phi_map(&TrigPoly::cos(1)),
            LaurentPoly::from_terms([(1, h.clone()), (-1, h)])
        );
        let s2 = TrigPoly::sin(1).pow(2);
        let q = TowerElem::from_rat(rat(-1, 4));
        let expect = LaurentPoly::from_terms([(2, q.clone()), (0, TowerElem::from_rat(rat(1, 2))), (-2, q)]);
        assert_eq!(phi_map(&s2), expect);
        assert!(matches!(
            phi_inverse(&LaurentPoly::z()),
            Err(Error::NotSelfReciprocal(_))
        ));
        let p = &TrigPoly::cos(3) + &TrigPoly::sin(2).scale(&RealSubElem::sqrt3());
        assert_eq!(phi_inverse(&phi_map(&p)).unwrap(), p);
    }

    #[test]
    fn psi_values() {
        let one_sq = RealPoly::from_ints(&[1, 0, 1]);
        assert_eq!(
            psi_map(&TrigPoly::sin(1)),
            (RealPoly::from_ints(&[0, 2]), one_sq.clone())
        );
        assert_eq!(psi_map(&TrigPoly::cos(1)), (RealPoly::from_ints(&[1, 0, -1]), one_sq));
        assert_eq!(psi_map(&TrigPoly::one()), (RealPoly::one(), RealPoly::one()));
    }
}
