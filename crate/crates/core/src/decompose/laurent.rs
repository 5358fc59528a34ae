use super::poly::{functional_root_top, poly_decompose};
use crate::error::{Error, Result};
use crate::exactfield::{roots::nth_roots, TowerElem};
use crate::rings::{ComplexPoly, LaurentPoly};

/// Solutions of `L = A ∘ B` with `deg A = m`, `B` normalized to leading
/// coefficient 1 at `z^{n1/m}` and zero constant term.
///
/// For proper `L` there is one candidate per `m`-th root of the ratio of the
/// extreme coefficients; every returned pair recomposes to `L` exactly.
pub fn laurent_decompose_type1(l: &LaurentPoly, m: u32) -> Result<Vec<(ComplexPoly, LaurentPoly)>> {
    if m < 2 {
        return Err(Error::Precondition(format!("outer degree {m} must be at least 2")));
    }
    let (n1, n2) = l.degrees();
    if n1 == 0 && n2 == 0 {
        return Err(Error::Precondition("constant Laurent polynomial".into()));
    }
    if n1 % m != 0 || n2 % m != 0 {
        return Err(Error::NotADivisor(format!("{m} (degrees ({n1}, {n2}))")));
    }
    if n2 == 0 {
        let f = l.to_poly().expect("no negative exponents");
        if n1 == m {
            let a = f.compose(&ComplexPoly::from_ints(&[0, 1]));
            return Ok(vec![(a, LaurentPoly::z())]);
        }
        let out = poly_decompose(&f, (n1 / m) as usize)?;
        return Ok(out.into_iter().map(|(a, b)| (a, LaurentPoly::from_poly(&b))).collect());
    }
    if n1 == 0 {
        let out = laurent_decompose_type1(&l.reflect(), m)?;
        return Ok(out.into_iter().map(|(a, b)| (a, b.reflect())).collect());
    }
    let (k1, k2) = ((n1 / m) as usize, (n2 / m) as usize);
    let am = l.coeff(n1 as i64);
    let am_inv = am.inv().expect("leading coefficient is nonzero");
    let ratio = &l.coeff(-(n2 as i64)) * &am_inv;
    let mut rhos = nth_roots(&ratio, m);
    if rhos.is_empty() {
        return Err(Error::OutsideTower {
            what: "functional root",
            detail: format!("{m}-th root of {ratio}"),
        });
    }
    rhos.sort_by(TowerElem::canonical_cmp);
    // the positive part is shared by all candidates
    let pos = functional_root_top(|d| &l.coeff(d as i64) * &am_inv, TowerElem::from_int(1), k1, m, k1 - 1);
    let mut out = vec![];
    for rho in rhos {
        let neg = functional_root_top(|d| &l.coeff(-(d as i64)) * &am_inv, rho, k2, m, k2 - 1);
        let b = LaurentPoly::from_terms(
            pos.iter()
                .enumerate()
                .map(|(j, c)| ((k1 - j) as i64, c.clone()))
                .chain(neg.iter().enumerate().map(|(j, c)| (-((k2 - j) as i64), c.clone()))),
        );
        if let Some(a) = peel_laurent(l, &b, m, k1) {
            out.push((a, b));
        }
    }
    Ok(out)
}

// `L` in base `B`, where `B^k` has leading coefficient 1 at `z^{k k1}`.
fn peel_laurent(l: &LaurentPoly, b: &LaurentPoly, m: u32, k1: usize) -> Option<ComplexPoly> {
    let powers: Vec<_> = std::iter::successors(Some(LaurentPoly::one()), |p| Some(p * b))
        .take(m as usize + 1)
        .collect();
    let mut rem = l.clone();
    let mut a = vec![TowerElem::default(); m as usize + 1];
    for k in (0..=m as usize).rev() {
        let c = rem.coeff((k * k1) as i64);
        rem = &rem - &powers[k].scale(&c);
        a[k] = c;
    }
    let a = ComplexPoly::new(a);
    (rem.is_zero() && LaurentPoly::compose_outer(&a, b) == *l).then_some(a)
}

/// `A` with `L = A ∘ z^d`, when every exponent of `L` is divisible by `d`.
pub fn laurent_decompose_type2(l: &LaurentPoly, d: u32) -> Result<Option<LaurentPoly>> {
    if d == 0 {
        return Err(Error::Precondition("power inner z^0".into()));
    }
    let d = d as i64;
    if l.terms().keys().any(|k| k % d != 0) {
        return Ok(None);
    }
    Ok(Some(LaurentPoly::from_terms(
        l.terms().iter().map(|(&k, c)| (k / d, c.clone())),
    )))
}
