use crate::error::{Error, Result};
use crate::exactfield::roots::{nth_roots, roots_of_unity, sqrt_all};
use crate::exactfield::{Scalar, TowerElem};
use crate::rings::{AffineMap, ComplexPoly, LaurentPoly, RealPoly};

/// A decomposition moved to real form by a degree-one map `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realified {
    pub v: AffineMap,
    /// `A ∘ v^-1`, with real coefficients.
    pub outer: RealPoly,
    /// `v ∘ L1`, self-reciprocal.
    pub inner: LaurentPoly,
    /// Whether the two-term shape `alpha z^r + beta z^-r + gamma` was used.
    pub normal_form: bool,
}

/// `(alpha, beta, r)` when `L = alpha z^r + beta z^-r + const` with `r > 0`.
pub(crate) fn two_term(l: &LaurentPoly) -> Option<(TowerElem, TowerElem, u32)> {
    let exps: Vec<i64> = l.terms().keys().copied().filter(|&k| k != 0).collect();
    match exps[..] {
        [lo, hi] if lo == -hi => Some((l.coeff(hi), l.coeff(lo), hi as u32)),
        _ => None,
    }
}

/// `alpha`, `beta` with `to = alpha * from + beta`.
pub(crate) fn affine_relation(from: &LaurentPoly, to: &LaurentPoly) -> Option<AffineMap> {
    let (&e, fe) = from.terms().iter().find(|(&k, _)| k != 0)?;
    let alpha = to.coeff(e).checked_div(fe).ok()?;
    let beta = to.coeff(0) - &alpha * &from.coeff(0);
    let w = AffineMap::new(alpha, beta).ok()?;
    (w.apply_laurent(from) == *to).then_some(w)
}

// lambda with lambda / conj(lambda) = a, preferring a unit square root of a
fn rotation_root(a: &TowerElem) -> TowerElem {
    match sqrt_all(a).into_iter().next() {
        Some(l) => l,
        None => TowerElem::from_int(1) + a.clone(),
    }
}

/// Replaces `(A, L1)` with `A ∘ L1` self-reciprocal by an equivalent pair
/// with real outer and self-reciprocal inner.
pub fn realify(a: &ComplexPoly, l1: &LaurentPoly) -> Result<Realified> {
    let l = LaurentPoly::compose_outer(a, l1);
    if !l.is_self_reciprocal() {
        return Err(Error::NotSelfReciprocal(l.to_string()));
    }
    if a.deg() == 0 || l1.is_constant() {
        return Err(Error::Precondition("realify needs nonconstant factors".into()));
    }
    if let (Some(outer), true) = (a.to_real(), l1.is_self_reciprocal()) {
        return Ok(Realified {
            v: AffineMap::identity(),
            outer,
            inner: l1.clone(),
            normal_form: false,
        });
    }
    let (rot, normal_form) = match two_term(l1) {
        Some((alpha, beta, _)) => {
            check_two_term(a, &alpha, &beta)?;
            (beta.conj().checked_div(&alpha)?, true)
        }
        None => {
            let w = affine_relation(l1, &l1.bar_involution())
                .ok_or_else(|| Error::Precondition("conjugate inner is not affinely related to the inner".into()))?;
            (w.alpha, false)
        }
    };
    if !(&rot * &rot.conj()).is_one() {
        return Err(Error::Precondition(format!("rotation {rot} is not of modulus one")));
    }
    let lambda = rotation_root(&rot);
    let mu = (&lambda * &l1.coeff(0)).conj();
    let v = AffineMap::new(lambda, mu)?;
    let inner = v.apply_laurent(l1);
    let outer = v.inverse().precompose(a);
    let outer = outer
        .to_real()
        .ok_or_else(|| Error::Precondition(format!("outer {outer} is not real after realification")))?;
    if !inner.is_self_reciprocal() {
        return Err(Error::Precondition(format!(
            "inner {inner} is not self-reciprocal after realification"
        )));
    }
    Ok(Realified {
        v,
        outer,
        inner,
        normal_form,
    })
}

// For L1 = kappa (c z^r + 1/(c z^r)) + gamma with kappa^2 = alpha beta:
// |c| = 1 and the leading coefficient a_n kappa^n of A ∘ (kappa z + gamma) is real.
// Both are checked without taking the square root kappa.
fn check_two_term(a: &ComplexPoly, alpha: &TowerElem, beta: &TowerElem) -> Result<()> {
    if alpha.norm_sq() != beta.norm_sq() {
        return Err(Error::Precondition("two-term inner with |c| != 1".into()));
    }
    let n = a.deg() as u32;
    let lead_sq = Scalar::pow(&a.lead(), 2) * Scalar::pow(&(alpha * beta), n);
    if !(lead_sq.is_real() && lead_sq.real_part().is_positive()) {
        return Err(Error::Precondition(
            "two-term inner whose outer has a non-real leading coefficient".into(),
        ));
    }
    Ok(())
}

/// Outcome of comparing two equal-degree decompositions of one Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Alignment {
    /// `B = A ∘ w^-1` and `L2 = w ∘ L1`.
    Affine(AffineMap),
    /// `w1 ∘ L1 = (z^r + z^-r) ∘ (a z)` and `w2 ∘ L2 = (z^r + z^-r) ∘ (a nu z)`.
    NormalForm {
        r: u32,
        a: TowerElem,
        nu: TowerElem,
        w1: AffineMap,
        w2: AffineMap,
    },
}

/// Relates `A ∘ L1 = B ∘ L2` with `deg A = deg B`.
pub fn align_equal_degree(a: &ComplexPoly, l1: &LaurentPoly, b: &ComplexPoly, l2: &LaurentPoly) -> Result<Alignment> {
    if a.deg() != b.deg() {
        return Err(Error::Precondition("outer degrees differ".into()));
    }
    if LaurentPoly::compose_outer(a, l1) != LaurentPoly::compose_outer(b, l2) {
        return Err(Error::Precondition("the two compositions differ".into()));
    }
    if let Some(w) = affine_relation(l1, l2) {
        if b.compose(&w.as_poly()) == *a {
            return Ok(Alignment::Affine(w));
        }
    }
    let shape = |l: &LaurentPoly| {
        two_term(l).ok_or_else(|| Error::Precondition(format!("{l} is neither affinely related nor of two-term shape")))
    };
    let (a1, a2, r) = shape(l1)?;
    let (n1, n2, r2) = shape(l2)?;
    if r != r2 {
        return Err(Error::Precondition("two-term inners of different degrees".into()));
    }
    let ratio = a1.checked_div(&a2)?;
    let a = nth_roots(&ratio, 2 * r)
        .into_iter()
        .next()
        .ok_or_else(|| Error::OutsideTower {
            what: "scaling a",
            detail: format!("{}-th root of {ratio}", 2 * r),
        })?;
    let target = (&n1 * &a2).checked_div(&(&n2 * &a1))?;
    let nu = roots_of_unity()
        .into_iter()
        .find(|u| Scalar::pow(u, 2 * r) == target)
        .ok_or_else(|| Error::OutsideTower {
            what: "root of unity nu",
            detail: format!("{}-th root of {target}", 2 * r),
        })?;
    let ar = Scalar::pow(&a, r);
    let k1 = ar.checked_div(&a1)?;
    let w1 = AffineMap::new(k1.clone(), -(&k1 * &l1.coeff(0)))?;
    let k2 = Scalar::pow(&(&a * &nu), r).checked_div(&n1)?;
    let w2 = AffineMap::new(k2.clone(), -(&k2 * &l2.coeff(0)))?;
    let base = LaurentPoly::from_terms([
        (r as i64, TowerElem::from_int(1)),
        (-(r as i64), TowerElem::from_int(1)),
    ]);
    let ok1 = w1.apply_laurent(l1) == base.inner_substitute(&a, 1);
    let ok2 = w2.apply_laurent(l2) == base.inner_substitute(&(&a * &nu), 1);
    if !(ok1 && ok2) {
        return Err(Error::Precondition(
            "inners do not reduce to a common two-term normal form".into(),
        ));
    }
    Ok(Alignment::NormalForm { r, a, nu, w1, w2 })
}
