use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::poly::{write_sum, z_power, Polynomial};
use crate::exactfield::{Scalar, TowerElem};

/// Element of `C[z, 1/z]` with coefficients in the tower.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, TowerElem>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(TowerElem::from_int(1))
    }

    pub fn constant(c: TowerElem) -> Self {
        Self::monomial(c, 0)
    }

    /// `z`.
    pub fn z() -> Self {
        Self::monomial(TowerElem::from_int(1), 1)
    }

    pub fn monomial(c: TowerElem, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, TowerElem)>) -> Self {
        let mut l = LaurentPoly::zero();
        for (k, c) in it {
            l.add_term(k, c);
        }
        l
    }

    pub(crate) fn add_term(&mut self, k: i64, c: TowerElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// Embeds a polynomial in `z`.
    pub fn from_poly<F: Scalar>(p: &Polynomial<F>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.to_tower())))
    }

    pub fn terms(&self) -> &BTreeMap<i64, TowerElem> {
        &self.terms
    }

    pub fn coeff(&self, k: i64) -> TowerElem {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `(n1, n2)`: pole orders at infinity and at zero.
    pub fn degrees(&self) -> (u32, u32) {
        let n1 = self.max_exp().unwrap_or(0).max(0) as u32;
        let n2 = (-self.min_exp().unwrap_or(0)).max(0) as u32;
        (n1, n2)
    }

    pub fn total_degree(&self) -> u32 {
        let (a, b) = self.degrees();
        a + b
    }

    /// Poles at both zero and infinity.
    pub fn is_proper(&self) -> bool {
        let (a, b) = self.degrees();
        a > 0 && b > 0
    }

    /// The polynomial in `z`, if there are no negative exponents.
    pub fn to_poly(&self) -> Option<Polynomial<TowerElem>> {
        if self.min_exp().is_some_and(|k| k < 0) {
            return None;
        }
        let n = self.max_exp().unwrap_or(0) as usize;
        Some(Polynomial::new((0..=n).map(|k| self.coeff(k as i64)).collect()))
    }

    /// gcd of the nonzero exponents; 0 for constants.
    pub fn support_gcd(&self) -> i64 {
        self.terms.keys().fold(0i64, |g, &k| g.gcd(&k))
    }

    pub fn scale(&self, c: &TowerElem) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, x)| (k, x * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `A ∘ L` by Horner's scheme.
    pub fn compose_outer<F: Scalar>(a: &Polynomial<F>, l: &LaurentPoly) -> Self {
        let mut acc = LaurentPoly::zero();
        for c in a.coeffs().iter().rev() {
            acc = &acc * l;
            acc.add_term(0, c.to_tower());
        }
        acc
    }

    /// `L(c * z^k)`.
    pub fn inner_substitute(&self, c: &TowerElem, k: i64) -> Self {
        assert!(!c.is_zero() && k != 0, "substitution must be invertible");
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&j, x)| (j * k, x * &c.powi(j).expect("c is nonzero"))),
        )
    }

    /// `L̄(1/z)`: conjugate coefficients and reflect exponents.
    pub fn bar_involution(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (-k, x.conj())).collect(),
        }
    }

    /// Membership in the image of real trigonometric polynomials.
    pub fn is_self_reciprocal(&self) -> bool {
        self.terms
            .iter()
            .all(|(&k, x)| self.terms.get(&-k).is_some_and(|y| *y == x.conj()))
    }

    pub fn conj_coeffs(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (k, x.conj())).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&j, x)| (j + k, x.clone())).collect(),
        }
    }

    /// Replaces `z` by `1/z`.
    pub fn reflect(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&j, x)| (-j, x.clone())).collect(),
        }
    }

    pub fn eval_c64(&self, z: (f64, f64)) -> (f64, f64) {
        let (r, t) = ((z.0 * z.0 + z.1 * z.1).sqrt(), z.1.atan2(z.0));
        let mut acc = (0.0, 0.0);
        for (&k, c) in &self.terms {
            let (cr, ci) = c.to_c64();
            let m = r.powi(k as i32);
            let (pr, pi) = (m * (k as f64 * t).cos(), m * (k as f64 * t).sin());
            acc.0 += cr * pr - ci * pi;
            acc.1 += cr * pi + ci * pr;
        }
        acc
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, TowerElem> = BTreeMap::new();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                let e = acc.entry(j + k).or_default();
                *e = std::mem::take(e) + a * b;
            }
        }
        LaurentPoly::from_terms(acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, x)| (k, -x.clone())).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().rev().map(|(&k, c)| (c, z_power(k))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn t(n: i64) -> TowerElem {
        TowerElem::from_int(n)
    }

    fn u1() -> LaurentPoly {
        LaurentPoly::from_terms([
            (1, TowerElem::from_rat(rat(1, 2))),
            (-1, TowerElem::from_rat(rat(1, 2))),
        ])
    }

    #[test]
    fn convolution() {
        let a = LaurentPoly::from_terms([(1, t(1)), (-1, t(1))]);
        let b = LaurentPoly::from_terms([(1, t(1)), (-1, t(-1))]);
        assert_eq!(&a * &b, LaurentPoly::from_terms([(2, t(1)), (-2, t(-1))]));
        let sq = u1().pow(2);
        let q = TowerElem::from_rat(rat(1, 4));
        assert_eq!(
            sq,
            LaurentPoly::from_terms([(2, q.clone()), (0, TowerElem::from_rat(rat(1, 2))), (-2, q)])
        );
        assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn outer_composition_and_substitution() {
        let t2 = Polynomial::from_ints(&[-1, 0, 2]);
        let u2 = LaurentPoly::from_terms([
            (2, TowerElem::from_rat(rat(1, 2))),
            (-2, TowerElem::from_rat(rat(1, 2))),
        ]);
        assert_eq!(LaurentPoly::compose_outer::<TowerElem>(&t2, &u1()), u2);
        let a = LaurentPoly::from_terms([(1, t(1)), (-1, t(1))]);
        assert_eq!(
            a.inner_substitute(&t(1), 2),
            LaurentPoly::from_terms([(2, t(1)), (-2, t(1))])
        );
        // U1(iz) = i(z - 1/z)/2
        let half_i = TowerElem::i().scale(&rat(1, 2));
        assert_eq!(
            u1().inner_substitute(&TowerElem::i(), 1),
            LaurentPoly::from_terms([(1, half_i.clone()), (-1, -half_i)])
        );
    }

    #[test]
    fn self_reciprocity() {
        assert!(u1().is_self_reciprocal());
        assert!(!LaurentPoly::z().is_self_reciprocal());
        let l = LaurentPoly::from_terms([(1, TowerElem::i()), (-1, -TowerElem::i())]);
        assert!(l.is_self_reciprocal());
        assert_eq!(l.bar_involution(), l);
    }

    #[test]
    fn printing() {
        let l = LaurentPoly::from_terms([(2, t(1)), (0, t(-3)), (-1, TowerElem::i())]);
        assert_eq!(l.to_string(), "z^2 - 3 + i*z^-1");
    }
}
