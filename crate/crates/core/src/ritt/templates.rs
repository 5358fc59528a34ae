use super::{CaseLabel, CaseParams, Factor};
use crate::chebyshev::cheb_t;
use crate::error::Result;
use crate::exactfield::{Angle, RealSubElem};
use crate::rings::{AffineMap, RealPoly, TrigPoly};

pub(crate) fn real_map(alpha: RealSubElem, beta: RealSubElem) -> AffineMap {
    AffineMap::real(alpha, beta).expect("nonzero slope")
}

/// `m ∘ p` for a real map.
pub(crate) fn left(m: &AffineMap, p: &RealPoly) -> RealPoly {
    m.as_real_poly().expect("real map").compose(p)
}

/// `p ∘ m` for a real map.
pub(crate) fn right(p: &RealPoly, m: &AffineMap) -> RealPoly {
    p.compose(&m.as_real_poly().expect("real map"))
}

pub(crate) fn left_trig(m: &AffineMap, w: &TrigPoly) -> TrigPoly {
    m.apply_trig(w).expect("real map")
}

pub(crate) fn monomial(n: u32) -> RealPoly {
    RealPoly::monomial(RealSubElem::from_int(1), n as usize)
}

/// `z^r R(z^n)`.
pub(crate) fn spread(r: u32, rr: &RealPoly, n: u32) -> RealPoly {
    &rr.compose(&monomial(n)) * &monomial(r)
}

/// `cos t S(sin t)`.
pub(crate) fn cos_s_sin(s: &RealPoly) -> TrigPoly {
    &TrigPoly::cos(1) * &TrigPoly::compose(s, &TrigPoly::sin(1))
}

/// `(1 - z^2) S(z)^2`.
pub(crate) fn one_minus_sq_s2(s: &RealPoly) -> RealPoly {
    &RealPoly::from_ints(&[1, 0, -1]) * &s.pow(2)
}

/// The phase `(2s + 1) pi / (n l)`.
pub(crate) fn d_phase(n: u32, l: u32, s: u32) -> Result<Angle> {
    Angle::from_pi_fraction(2 * s as i64 + 1, (n * l) as i64)
}

/// The two sides `(outer, inner)` of a normal form.
pub(crate) fn templates(label: CaseLabel, p: &CaseParams) -> Result<[(RealPoly, Factor); 2]> {
    let poly = || p.poly.clone().unwrap_or_else(RealPoly::one);
    let (n, m) = (p.n as usize, p.m as usize);
    Ok(match label {
        CaseLabel::A => {
            let rr = poly();
            [
                (monomial(p.n), Factor::Poly(spread(p.r, &rr, p.n))),
                (&monomial(p.r) * &rr.pow(p.n), Factor::Poly(monomial(p.n))),
            ]
        }
        CaseLabel::B => [
            (cheb_t(n), Factor::Poly(cheb_t(m))),
            (cheb_t(m), Factor::Poly(cheb_t(n))),
        ],
        CaseLabel::C => {
            let s = poly();
            [
                (monomial(2), Factor::Trig(cos_s_sin(&s))),
                (one_minus_sq_s2(&s), Factor::Trig(TrigPoly::sin(1))),
            ]
        }
        CaseLabel::D => {
            let phase = d_phase(p.n, p.l, p.s)?;
            let l = p.l as usize;
            [
                (-cheb_t(n * l), Factor::Trig(TrigPoly::cos(1).shift(p.m, &phase))),
                (cheb_t(m * l), Factor::Trig(TrigPoly::cos(p.n))),
            ]
        }
    })
}

/// `(c, e, f)` with `p = e (z - c)^n + f`.
pub(crate) fn power_shape(p: &RealPoly) -> Option<(RealSubElem, RealSubElem, RealSubElem)> {
    let n = p.deg();
    if n == 0 {
        return None;
    }
    let e = p.lead();
    let c = -(p.coeff(n - 1) * (e.clone() * RealSubElem::from_int(n as i64)).inv()?);
    let f = p.eval(&c);
    let shifted = RealPoly::linear(RealSubElem::from_int(1), -c.clone()).pow(n as u32);
    (shifted.scale(&e) + RealPoly::constant(f.clone()) == *p).then_some((c, e, f))
}

/// All `(lambda, nu)` with `f = lambda ∘ T_k ∘ nu`, `k = deg f >= 3`.
pub(crate) fn chebyshev_frames(f: &RealPoly) -> Vec<(AffineMap, AffineMap)> {
    let k = f.deg();
    if k < 3 {
        return vec![];
    }
    let kk = RealSubElem::from_int(k as i64);
    let fk = f.lead();
    let b0 = -(f.coeff(k - 1) * (fk.clone() * kk.clone()).inv().expect("nonzero lead"));
    let g = f.compose(&RealPoly::linear(RealSubElem::from_int(1), b0.clone()));
    let Some(g2inv) = (g.coeff(k - 2) * RealSubElem::from_int(4)).inv() else {
        return vec![];
    };
    let Some(p) = (-(kk * fk) * g2inv).sqrt() else {
        return vec![];
    };
    let t = cheb_t(k);
    let two_pow = RealSubElem::from_int(1i64 << (k - 1));
    let mut out = vec![];
    for p in [p.clone(), -p] {
        // h(y) = f(y/p + b0) = lambda(T_k(y))
        let h = f.compose(&RealPoly::linear(p.inv().expect("nonzero"), b0.clone()));
        let alpha = h.lead() * two_pow.inv().expect("nonzero");
        let beta = h.coeff(0) - alpha.clone() * t.coeff(0);
        if t.scale(&alpha) + RealPoly::constant(beta.clone()) == h {
            out.push((real_map(alpha, beta), real_map(p.clone(), -(p * b0.clone()))));
        }
    }
    out
}
