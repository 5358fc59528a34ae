use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactfield::{RealSubElem, Scalar, TowerElem};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

/// Polynomial with coefficients in `Q(sqrt2, sqrt3)`.
pub type RealPoly = Polynomial<RealSubElem>;
/// Polynomial with coefficients in the full tower.
pub type ComplexPoly = Polynomial<TowerElem>;

impl<F: Scalar> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The identity polynomial `z`.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    /// `alpha*z + beta`.
    pub fn linear(alpha: F, beta: F) -> Self {
        Self::new(vec![beta, alpha])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == F::one()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self ∘ inner`, by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.lead().inv()?;
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].clone() * dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].clone() - c.clone() * dc.clone();
            }
            q[k - dd] = c;
        }
        Some((Self::new(q), Self::new(r)))
    }

    pub fn to_complex(&self) -> ComplexPoly {
        Polynomial::new(self.coeffs.iter().map(Scalar::to_tower).collect())
    }

    /// Multiplicity of the root at zero.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }
}

impl ComplexPoly {
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(TowerElem::is_real)
    }

    pub fn to_real(&self) -> Option<RealPoly> {
        self.is_real()
            .then(|| Polynomial::new(self.coeffs.iter().map(TowerElem::real_part).collect()))
    }

    pub fn conj(&self) -> Self {
        Polynomial::new(self.coeffs.iter().map(TowerElem::conj).collect())
    }
}

impl<'a, F: Scalar> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, F: Scalar> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, F: Scalar> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[j + k] = out[j + k].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Scalar> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Scalar> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Self) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<F: Scalar> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl From<&RealPoly> for ComplexPoly {
    fn from(p: &RealPoly) -> Self {
        p.to_complex()
    }
}

/// Joins `(coefficient, monomial)` pairs into the canonical printed form.
pub(crate) fn write_sum<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (C, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let s = c.to_string();
        let compound = s.len() > 1 && (s[1..].contains(" + ") || s[1..].contains(" - "));
        let (neg, body) = if compound {
            (false, format!("({s})"))
        } else if let Some(rest) = s.strip_prefix('-') {
            (true, rest.to_string())
        } else {
            (false, s)
        };
        let text = if mono.is_empty() {
            body
        } else if body == "1" {
            mono
        } else {
            format!("{body}*{mono}")
        };
        match (first, neg) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => write!(f, "{text}")?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn z_power(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c, z_power(k as i64))),
        )
    }
}
