use super::realify::affine_relation;
use crate::exactfield::Scalar;
use crate::rings::{phi_map, AffineMap, ComplexPoly, LaurentPoly, Polynomial, RealPoly, TrigPoly};

/// `mu` with `P~ = P ∘ mu` and `W~ = mu^-1 ∘ W`, for Laurent inners.
pub fn equivalence_witness_laurent(
    p: &ComplexPoly,
    w: &LaurentPoly,
    pt: &ComplexPoly,
    wt: &LaurentPoly,
) -> Option<AffineMap> {
    if p.deg() != pt.deg() {
        return None;
    }
    let mu = affine_relation(wt, w)?;
    (p.compose(&mu.as_poly()) == *pt).then_some(mu)
}

/// As [`equivalence_witness_laurent`] for polynomial inners.
pub fn equivalence_witness_poly<F: Scalar>(
    p: &Polynomial<F>,
    w: &Polynomial<F>,
    pt: &Polynomial<F>,
    wt: &Polynomial<F>,
) -> Option<AffineMap> {
    equivalence_witness_laurent(
        &p.to_complex(),
        &LaurentPoly::from_poly(w),
        &pt.to_complex(),
        &LaurentPoly::from_poly(wt),
    )
}

/// As [`equivalence_witness_laurent`] for trigonometric inners; the witness is real.
pub fn equivalence_witness_trig(p: &RealPoly, w: &TrigPoly, pt: &RealPoly, wt: &TrigPoly) -> Option<AffineMap> {
    let mu = equivalence_witness_laurent(&p.to_complex(), &phi_map(w), &pt.to_complex(), &phi_map(wt))?;
    mu.is_real().then_some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_t;
    use crate::exactfield::{rat, RealSubElem, TowerElem};

    #[test]
    fn witnesses() {
        let p = RealPoly::from_ints(&[1, 0, 3, 1]);
        let w = &TrigPoly::cos(2) + &TrigPoly::sin(1);
        let mu = RealPoly::from_ints(&[1, 2]);
        let pt = p.compose(&mu);
        let wt = (&w - &TrigPoly::one()).scale(&RealSubElem::from_rat(rat(1, 2)));
        let got = equivalence_witness_trig(&p, &w, &pt, &wt).unwrap();
        assert_eq!(
            got,
            AffineMap::new(TowerElem::from_int(2), TowerElem::from_int(1)).unwrap()
        );
        assert_eq!(equivalence_witness_trig(&p, &w, &p, &w), Some(AffineMap::identity()));
        assert_eq!(
            equivalence_witness_poly(&cheb_t(2), &cheb_t(3), &cheb_t(3), &cheb_t(2)),
            None
        );
    }
}
