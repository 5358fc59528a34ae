use crate::error::{Error, Result};
use crate::exactfield::{Scalar, TowerElem};
use crate::rings::{ComplexPoly, Polynomial, RealPoly};

/// Coefficients `q_k, q_{k-1}, ..., q_{k-count}` of the unique `Q` with
/// leading coefficient `lead`, degree `k`, whose `m`-th power agrees with
/// `target` in degrees `m k` down to `m k - count`.
pub(crate) fn functional_root_top<F: Scalar>(
    target: impl Fn(usize) -> F,
    lead: F,
    k: usize,
    m: u32,
    count: usize,
) -> Vec<F> {
    // coefficients of the series P^(1/m) in the reversed variable
    let n = k * m as usize;
    let p: Vec<F> = std::iter::once(lead.pow(m))
        .chain((1..=count).map(|i| target(n - i)))
        .collect();
    let m = m as i64;
    let p0_inv = p[0].inv().expect("nonzero leading coefficient");
    let mut q = vec![lead];
    for j in 1..=count {
        let mut acc = F::zero();
        for i in 1..=j {
            let w = F::from_int((m + 1) * i as i64 - m * j as i64);
            acc = acc + w * p[i].clone() * q[j - i].clone();
        }
        q.push(acc * p0_inv.clone() * F::from_int(m * j as i64).inv().expect("nonzero"));
    }
    q
}

/// Writes `f` in base `b` (monic): returns `a` with `f = a ∘ b`, if the digits are constants.
pub(crate) fn peel<F: Scalar>(f: &Polynomial<F>, b: &Polynomial<F>) -> Option<Polynomial<F>> {
    let m = b.deg();
    let r = f.deg() / m;
    let powers: Vec<_> = std::iter::successors(Some(Polynomial::one()), |p| Some(p * b))
        .take(r + 1)
        .collect();
    let mut rem = f.clone();
    let mut a = vec![F::zero(); r + 1];
    for k in (0..=r).rev() {
        let c = rem.coeff(k * m) * b.lead().pow(k as u32).inv()?;
        rem = &rem - &powers[k].scale(&c);
        a[k] = c;
    }
    rem.is_zero().then(|| Polynomial::new(a))
}

/// Solves `f = A ∘ B` with `deg B = m`, `B` monic and `B(0) = 0`.
pub fn poly_decompose<F: Scalar>(f: &Polynomial<F>, m: usize) -> Result<Option<(Polynomial<F>, Polynomial<F>)>> {
    let n = f.deg();
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::NotADivisor(format!("{m} (degree {n})")));
    }
    if m < 2 || m >= n {
        return Err(Error::Precondition(format!(
            "inner degree {m} must satisfy 2 <= m < {n}"
        )));
    }
    let lead_inv = f.lead().inv().expect("nonzero polynomial");
    let g = f.scale(&lead_inv);
    let r = (n / m) as u32;
    let q = functional_root_top(|d| g.coeff(d), F::one(), m, r, m - 1);
    let bc: Vec<F> = std::iter::once(F::zero()).chain(q.into_iter().rev()).collect();
    let b = Polynomial::new(bc);
    let Some(a) = peel(f, &b) else { return Ok(None) };
    if a.compose(&b) != *f {
        return Ok(None);
    }
    Ok(Some((a, b)))
}

/// All decompositions `f = A ∘ B` with both degrees at least 2, by inner degree ascending.
pub fn enumerate_poly_decompositions<F: Scalar>(f: &Polynomial<F>) -> Vec<(Polynomial<F>, Polynomial<F>)> {
    let n = f.deg();
    (2..n)
        .filter(|m| n.is_multiple_of(*m) && n / m >= 2)
        .filter_map(|m| poly_decompose(f, m).ok().flatten())
        .collect()
}

/// Given real `P = A ∘ B` with `B` complex, returns the real pair.
///
/// Requires the leading coefficient of `B` to be real; an imaginary constant
/// in `B` is moved into `A`.
pub fn descend_real(p: &RealPoly, b: &ComplexPoly) -> Result<(RealPoly, RealPoly)> {
    if !b.lead().is_real() {
        return Err(Error::Precondition(format!(
            "leading coefficient {} of the inner polynomial is not real",
            b.lead()
        )));
    }
    if b.deg() == 0 {
        return Err(Error::Precondition("inner polynomial is constant".into()));
    }
    let shift = TowerElem::from_parts(Default::default(), b.coeff(0).imag_part());
    let b = &(b.clone()) - &ComplexPoly::constant(shift);
    let pc = p.to_complex();
    let a =
        peel(&pc, &b).ok_or_else(|| Error::Precondition("P is not a composite with this inner polynomial".into()))?;
    if a.compose(&b) != pc {
        return Err(Error::Precondition(
            "P is not a composite with this inner polynomial".into(),
        ));
    }
    match (a.to_real(), b.to_real()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Precondition(
            "inner polynomial is not real up to its constant term".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_t;
    use crate::exactfield::{rat, RealSubElem};

    #[test]
    fn examples() {
        let f = RealPoly::from_ints(&[0, 0, 2, 0, 1]);
        let (a, b) = poly_decompose(&f, 2).unwrap().unwrap();
        assert_eq!(
            (a, b),
            (RealPoly::from_ints(&[0, 2, 1]), RealPoly::from_ints(&[0, 0, 1]))
        );
        let (a, b) = poly_decompose(&cheb_t(6), 3).unwrap().unwrap();
        assert_eq!(a.compose(&b), cheb_t(6));
        assert_eq!(b, cheb_t(3).scale(&RealSubElem::from_rat(rat(1, 4))));
        assert_eq!(poly_decompose(&RealPoly::from_ints(&[1, 1, 0, 0, 1]), 2).unwrap(), None);
        assert!(matches!(poly_decompose(&f, 3), Err(Error::NotADivisor(_))));
    }

    #[test]
    fn real_descent() {
        let p = RealPoly::from_ints(&[0, 0, 2, 0, 1]);
        let (a, b) = descend_real(&p, &ComplexPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(
            (a, b),
            (RealPoly::from_ints(&[0, 2, 1]), RealPoly::from_ints(&[0, 0, 1]))
        );
        let ib = ComplexPoly::monomial(TowerElem::i(), 2);
        assert!(descend_real(&p, &ib).is_err());
        let (a, _) = descend_real(&cheb_t(6), &cheb_t(3).to_complex()).unwrap();
        assert_eq!(a, cheb_t(2));
    }
}
