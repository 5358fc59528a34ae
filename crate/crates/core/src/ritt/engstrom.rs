use num_integer::Integer;

use crate::decompose::{peel, poly_decompose, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::rings::RealPoly;

/// `A = U ∘ a`, `B = U ∘ b`, `C = c ∘ V`, `D = d ∘ V` with `a ∘ c = b ∘ d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EngstromReduction {
    pub u: RealPoly,
    pub v: RealPoly,
    pub a: RealPoly,
    pub c: RealPoly,
    pub b: RealPoly,
    pub d: RealPoly,
}

/// `(outer, inner)` with `f = outer ∘ inner`, `deg inner = m` and the inner
/// monic with zero constant term.
pub(crate) fn split(f: &RealPoly, m: usize) -> Option<(RealPoly, RealPoly)> {
    let n = f.deg();
    if m == 1 {
        return Some((f.clone(), RealPoly::x()));
    }
    if m == n {
        let c0 = f.coeff(0);
        let lead = f.lead();
        let inner = (f - &RealPoly::constant(c0.clone())).scale(&lead.inv()?);
        return Some((RealPoly::linear(lead, c0), inner));
    }
    poly_decompose(f, m).ok().flatten()
}

/// Splits `A ∘ C = B ∘ D` through its common left factor of degree
/// `gcd(deg A, deg B)` and common right factor of degree `gcd(deg C, deg D)`.
pub fn engstrom_reduce(a: &RealPoly, c: &RealPoly, b: &RealPoly, d: &RealPoly) -> Result<EngstromReduction> {
    if [a, b, c, d].iter().any(|p| p.deg() == 0) {
        return Err(Error::Precondition("all four polynomials must be nonconstant".into()));
    }
    let f = a.compose(c);
    if f != b.compose(d) {
        return Err(Error::Precondition("A ∘ C differs from B ∘ D".into()));
    }
    if f.deg() > DEFAULT_CAP as usize {
        return Err(Error::DegreeCap {
            degree: f.deg(),
            cap: DEFAULT_CAP as usize,
        });
    }
    let gu = a.deg().gcd(&b.deg());
    let gv = c.deg().gcd(&d.deg());
    let fail = |what: &str| Error::Precondition(format!("no common {what} factor of the expected degree"));
    let (u, h) = split(&f, f.deg() / gu).ok_or_else(|| fail("left"))?;
    let (ct, v) = split(c, gv).ok_or_else(|| fail("right"))?;
    let (dt, v2) = split(d, gv).ok_or_else(|| fail("right"))?;
    if v != v2 {
        return Err(fail("right"));
    }
    let at = peel(&h, c).ok_or_else(|| fail("left"))?;
    let bt = peel(&h, d).ok_or_else(|| fail("left"))?;
    if u.compose(&at) != *a || u.compose(&bt) != *b || at.compose(&ct) != bt.compose(&dt) {
        return Err(fail("left"));
    }
    Ok(EngstromReduction {
        u,
        v,
        a: at,
        c: ct,
        b: bt,
        d: dt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_t;

    fn check(a: &RealPoly, c: &RealPoly, b: &RealPoly, d: &RealPoly) -> EngstromReduction {
        let e = engstrom_reduce(a, c, b, d).unwrap();
        assert_eq!(e.u.compose(&e.a), *a);
        assert_eq!(e.u.compose(&e.b), *b);
        assert_eq!(e.c.compose(&e.v), *c);
        assert_eq!(e.d.compose(&e.v), *d);
        assert_eq!(e.u.deg(), a.deg().gcd(&b.deg()));
        assert_eq!(e.v.deg(), c.deg().gcd(&d.deg()));
        e
    }

    #[test]
    fn examples() {
        let sq = RealPoly::from_ints(&[0, 0, 1]);
        let cube = RealPoly::from_ints(&[0, 0, 0, 1]);
        let e = check(&sq, &cube, &sq, &cube);
        assert_eq!((e.u.deg(), e.v.deg(), e.a.deg(), e.c.deg()), (2, 3, 1, 1));
        let e = check(&cheb_t(2), &cheb_t(3), &cheb_t(3), &cheb_t(2));
        assert_eq!((e.u.deg(), e.v.deg()), (1, 1));
        let e = check(
            &sq,
            &RealPoly::from_ints(&[0, 1, 0, 1]),
            &RealPoly::from_ints(&[0, 1, 2, 1]),
            &sq,
        );
        assert_eq!((e.u.deg(), e.v.deg()), (1, 1));
        let t12 = cheb_t(12);
        let e = check(&cheb_t(4), &cheb_t(3), &cheb_t(6), &cheb_t(2));
        assert_eq!((e.u.deg(), e.v.deg()), (2, 1));
        assert_eq!(e.u.compose(&e.a).compose(&e.c.compose(&e.v)), t12);
    }

    #[test]
    fn rejects_unequal_sides() {
        let sq = RealPoly::from_ints(&[0, 0, 1]);
        assert!(engstrom_reduce(&sq, &sq, &sq, &RealPoly::from_ints(&[1, 0, 1])).is_err());
    }
}
