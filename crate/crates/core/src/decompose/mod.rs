//! Decompositions of polynomials, Laurent polynomials and trigonometric
//! polynomials, and the constructive passage to real factors.

mod equiv;
mod laurent;
mod poly;
mod realify;

use std::fmt;

use num_integer::Integer;

pub use equiv::{equivalence_witness_laurent, equivalence_witness_poly, equivalence_witness_trig};
pub use laurent::{laurent_decompose_type1, laurent_decompose_type2};
pub use poly::{descend_real, enumerate_poly_decompositions, poly_decompose};
pub use realify::{align_equal_degree, realify, Alignment, Realified};

pub(crate) use poly::peel;

use crate::error::{Error, Result};
use crate::exactfield::{Scalar, TowerElem};
use crate::rings::{phi_inverse, phi_map, AffineMap, ComplexPoly, LaurentPoly, OuterRational, RealPoly, TrigPoly};

/// Default bound on the total degree accepted by the enumerators.
pub const DEFAULT_CAP: u32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DecompositionKind {
    PolyPoly,
    PolyLaurent,
    LaurentPower,
    TrigPolyInner,
    TrigTanInner,
}

impl DecompositionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionKind::PolyPoly => "poly-poly",
            DecompositionKind::PolyLaurent => "poly-laurent",
            DecompositionKind::LaurentPower => "laurent-power",
            DecompositionKind::TrigPolyInner => "trig-poly-inner",
            DecompositionKind::TrigTanInner => "trig-tan-inner",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outer {
    Poly(ComplexPoly),
    Real(RealPoly),
    Laurent(LaurentPoly),
    Rational(OuterRational),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Inner {
    Poly(ComplexPoly),
    Laurent(LaurentPoly),
    /// `z^d`.
    Power(u32),
    Trig(TrigPoly),
    /// `tan(d t / 2)`.
    Tan(u32),
}

/// Result of recomposing a [`Decomposition`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Composite {
    Poly(ComplexPoly),
    Laurent(LaurentPoly),
    Trig(TrigPoly),
}

/// One factorization `outer ∘ inner`.
///
/// `adjuster` records the degree-one map taking the normalized complex inner
/// found by the search to the inner stored here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub outer: Outer,
    pub inner: Inner,
    pub adjuster: AffineMap,
}

impl Decomposition {
    pub fn outer_degree(&self) -> usize {
        match &self.outer {
            Outer::Poly(p) => p.deg(),
            Outer::Real(p) => p.deg(),
            Outer::Laurent(l) => l.total_degree() as usize,
            Outer::Rational(r) => r.numerator.deg().max(2 * r.pole_order as usize),
        }
    }

    pub fn recompose(&self) -> Result<Composite> {
        Ok(match (&self.outer, &self.inner) {
            (Outer::Poly(a), Inner::Poly(b)) => Composite::Poly(a.compose(b)),
            (Outer::Poly(a), Inner::Laurent(b)) => Composite::Laurent(LaurentPoly::compose_outer(a, b)),
            (Outer::Laurent(a), Inner::Power(d)) => {
                Composite::Laurent(a.inner_substitute(&TowerElem::from_int(1), *d as i64))
            }
            (Outer::Real(p), Inner::Trig(w)) => Composite::Trig(TrigPoly::compose(p, w)),
            (Outer::Rational(r), Inner::Tan(d)) => Composite::Trig(r.compose_tan(*d)?),
            _ => return Err(Error::Precondition("mismatched outer and inner".into())),
        })
    }

    /// Degree-one witness that `other` is an equivalent factorization.
    pub fn equivalence(&self, other: &Decomposition) -> Option<AffineMap> {
        match (&self.outer, &self.inner, &other.outer, &other.inner) {
            (Outer::Poly(p), Inner::Poly(w), Outer::Poly(q), Inner::Poly(v)) => equivalence_witness_poly(p, w, q, v),
            (Outer::Poly(p), Inner::Laurent(w), Outer::Poly(q), Inner::Laurent(v)) => {
                equivalence_witness_laurent(p, w, q, v)
            }
            (Outer::Real(p), Inner::Trig(w), Outer::Real(q), Inner::Trig(v)) => equivalence_witness_trig(p, w, q, v),
            _ => (self == other).then(AffineMap::identity),
        }
    }
}

impl fmt::Display for Outer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outer::Poly(p) => write!(f, "{p}"),
            Outer::Real(p) => write!(f, "{p}"),
            Outer::Laurent(l) => write!(f, "{l}"),
            Outer::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Display for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inner::Poly(p) => write!(f, "{p}"),
            Inner::Laurent(l) => write!(f, "{l}"),
            Inner::Power(1) => write!(f, "z"),
            Inner::Power(d) => write!(f, "z^{d}"),
            Inner::Trig(w) => write!(f, "{w}"),
            Inner::Tan(1) => write!(f, "tan(t/2)"),
            Inner::Tan(d) => write!(f, "tan({d}*t/2)"),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) @ ({})", self.outer, self.inner)
    }
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn check_cap(degree: u32, cap: u32) -> Result<()> {
    if degree > cap {
        return Err(Error::DegreeCap {
            degree: degree as usize,
            cap: cap as usize,
        });
    }
    Ok(())
}

// type-1 candidates, skipping roots that leave the tower
fn type1_or_skip(l: &LaurentPoly, m: u32) -> Result<Vec<(ComplexPoly, LaurentPoly)>> {
    match laurent_decompose_type1(l, m) {
        Err(Error::OutsideTower { .. }) => Ok(vec![]),
        other => other,
    }
}

fn sort_decompositions(v: &mut [Decomposition]) {
    v.sort_by_key(|d| (d.outer_degree(), d.kind));
}

/// Every decomposition of `l` with outer degree at least 2, one per equivalence class.
pub fn enumerate_decompositions(l: &LaurentPoly, cap: u32) -> Result<Vec<Decomposition>> {
    check_cap(l.total_degree(), cap)?;
    let (n1, n2) = l.degrees();
    let mut out = vec![];
    if !l.is_proper() {
        let n = n1.max(n2);
        for m in divisors(n).filter(|&m| m >= 2 && n / m >= 2) {
            for (a, b) in type1_or_skip(l, m)? {
                let (kind, inner) = match b.to_poly() {
                    Some(p) => (DecompositionKind::PolyPoly, Inner::Poly(p)),
                    None => (DecompositionKind::PolyLaurent, Inner::Laurent(b)),
                };
                out.push(Decomposition {
                    kind,
                    outer: Outer::Poly(a),
                    inner,
                    adjuster: AffineMap::identity(),
                });
            }
        }
        return Ok(out);
    }
    for m in divisors(n1.gcd(&n2)).filter(|&m| m >= 2) {
        for (a, b) in type1_or_skip(l, m)? {
            out.push(Decomposition {
                kind: DecompositionKind::PolyLaurent,
                outer: Outer::Poly(a),
                inner: Inner::Laurent(b),
                adjuster: AffineMap::identity(),
            });
        }
    }
    for d in divisors(l.support_gcd() as u32).filter(|&d| d >= 2) {
        if let Some(a) = laurent_decompose_type2(l, d)? {
            out.push(Decomposition {
                kind: DecompositionKind::LaurentPower,
                outer: Outer::Laurent(a),
                inner: Inner::Power(d),
                adjuster: AffineMap::identity(),
            });
        }
    }
    sort_decompositions(&mut out);
    Ok(out)
}

/// Every decomposition of a polynomial with both degrees at least 2.
pub fn enumerate_polynomial(f: &ComplexPoly, cap: u32) -> Result<Vec<Decomposition>> {
    check_cap(f.deg() as u32, cap)?;
    let mut out: Vec<_> = enumerate_poly_decompositions(f)
        .into_iter()
        .map(|(a, b)| Decomposition {
            kind: DecompositionKind::PolyPoly,
            outer: Outer::Poly(a),
            inner: Inner::Poly(b),
            adjuster: AffineMap::identity(),
        })
        .collect();
    sort_decompositions(&mut out);
    Ok(out)
}

// inner normalized to zero constant term and leading coefficient 1 on cos (or sin)
fn normalize_trig(outer: &RealPoly, w: &TrigPoly) -> (RealPoly, TrigPoly, AffineMap) {
    let w0 = w.constant_term();
    let (a, b) = w.harmonic(w.deg());
    let c = if a.is_zero() { b } else { a };
    let nu = AffineMap::real(c.clone(), w0.clone()).expect("leading harmonic is nonzero");
    let wn = (w - &TrigPoly::constant(w0)).scale(&c.inv().expect("nonzero"));
    let outer = outer.compose(&RealPoly::linear(c, nu.beta.real_part()));
    (outer, wn, nu.inverse())
}

/// Outer numerator for `A ∘ z^d` rewritten through `z^d = (1 + i t)/(1 - i t)`, `t = tan(d t/2)`.
fn tan_outer(a: &LaurentPoly, k: u32) -> Result<OuterRational> {
    let plus = ComplexPoly::new(vec![TowerElem::from_int(1), TowerElem::i()]);
    let minus = ComplexPoly::new(vec![TowerElem::from_int(1), -TowerElem::i()]);
    let k = k as i64;
    let mut num = ComplexPoly::zero();
    for (&j, c) in a.terms() {
        let term = &plus.pow((j + k) as u32) * &minus.pow((k - j) as u32);
        num = &num + &term.scale(c);
    }
    let num = num
        .to_real()
        .ok_or_else(|| Error::Precondition(format!("tan outer {num} is not real")))?;
    OuterRational::new(num, k as u32)
}

/// Decompositions of a real trigonometric polynomial: real outer with
/// trigonometric inner, and rational outer with `tan(d t/2)` inner.
pub fn trig_decompose(p: &TrigPoly, cap: u32) -> Result<Vec<Decomposition>> {
    let l = phi_map(p);
    check_cap(l.total_degree(), cap)?;
    let n = p.deg();
    let mut out = vec![];
    if n == 0 {
        return Ok(out);
    }
    for m in divisors(n).filter(|&m| m >= 2) {
        for (a, b) in type1_or_skip(&l, m)? {
            let r = match realify(&a, &b) {
                Ok(r) => r,
                Err(Error::OutsideTower { .. }) => continue,
                Err(e) => return Err(e),
            };
            let w = phi_inverse(&r.inner)?;
            let (outer, w, nu_inv) = normalize_trig(&r.outer, &w);
            out.push(Decomposition {
                kind: DecompositionKind::TrigPolyInner,
                outer: Outer::Real(outer),
                inner: Inner::Trig(w),
                adjuster: nu_inv.then_after(&r.v),
            });
        }
    }
    for d in divisors(l.support_gcd() as u32) {
        if let Some(a) = laurent_decompose_type2(&l, d)? {
            let k = n / d;
            out.push(Decomposition {
                kind: DecompositionKind::TrigTanInner,
                outer: Outer::Rational(tan_outer(&a, k)?),
                inner: Inner::Tan(d),
                adjuster: AffineMap::identity(),
            });
        }
    }
    sort_decompositions(&mut out);
    Ok(out)
}

/// Real decompositions of a real trigonometric polynomial with polynomial outer only.
pub fn trig_poly_decompositions(p: &TrigPoly, cap: u32) -> Result<Vec<(RealPoly, TrigPoly)>> {
    Ok(trig_decompose(p, cap)?
        .into_iter()
        .filter_map(|d| match (d.outer, d.inner) {
            (Outer::Real(a), Inner::Trig(w)) => Some((a, w)),
            _ => None,
        })
        .collect())
}

/// `A` with `L = A ∘ B`, when it exists; `B` must have a pole at infinity.
pub fn laurent_peel(l: &LaurentPoly, b: &LaurentPoly) -> Option<ComplexPoly> {
    let d = b.max_exp().filter(|&d| d > 0)?;
    let top = l.max_exp().unwrap_or(0).max(0);
    if top % d != 0 {
        return None;
    }
    let r = (top / d) as usize;
    let lead_inv = b.coeff(d).inv()?;
    let mut powers = vec![LaurentPoly::one()];
    for k in 1..=r {
        powers.push(&powers[k - 1] * b);
    }
    let mut rem = l.clone();
    let mut a = vec![TowerElem::default(); r + 1];
    for k in (0..=r).rev() {
        let c = &rem.coeff(k as i64 * d) * &Scalar::pow(&lead_inv, k as u32);
        rem = &rem - &powers[k].scale(&c);
        a[k] = c;
    }
    rem.is_zero().then(|| ComplexPoly::new(a))
}

/// Real `A` with `f = A ∘ w`, when it exists.
pub fn trig_peel(f: &TrigPoly, w: &TrigPoly) -> Option<RealPoly> {
    if w.is_constant() {
        return None;
    }
    laurent_peel(&phi_map(f), &phi_map(w))?.to_real()
}
