use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::poly::{write_sum, RealPoly};
use crate::exactfield::{rat, Angle, RealSubElem};

/// Real trigonometric polynomial `a0 + sum_k (a_k cos k t + b_k sin k t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TrigPoly {
    harmonics: BTreeMap<u32, (RealSubElem, RealSubElem)>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly::default()
    }

    pub fn constant(c: RealSubElem) -> Self {
        let mut p = TrigPoly::zero();
        p.add_cos(0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(RealSubElem::from_int(1))
    }

    /// `cos(k t)`.
    pub fn cos(k: u32) -> Self {
        let mut p = TrigPoly::zero();
        p.add_cos(k as i64, RealSubElem::from_int(1));
        p
    }

    /// `sin(k t)`; zero when `k = 0`.
    pub fn sin(k: u32) -> Self {
        let mut p = TrigPoly::zero();
        p.add_sin(k as i64, RealSubElem::from_int(1));
        p
    }

    /// From `(k, a_k, b_k)` triples; repeated harmonics are summed.
    pub fn from_harmonics(it: impl IntoIterator<Item = (u32, RealSubElem, RealSubElem)>) -> Self {
        let mut p = TrigPoly::zero();
        for (k, a, b) in it {
            p.add_cos(k as i64, a);
            p.add_sin(k as i64, b);
        }
        p
    }

    fn entry(&mut self, k: u32, f: impl FnOnce(&mut (RealSubElem, RealSubElem))) {
        let e = self.harmonics.entry(k).or_default();
        f(e);
        if e.0.is_zero() && e.1.is_zero() {
            self.harmonics.remove(&k);
        }
    }

    /// Adds `c cos(k t)` for any integer `k`.
    pub(crate) fn add_cos(&mut self, k: i64, c: RealSubElem) {
        if c.is_zero() {
            return;
        }
        self.entry(k.unsigned_abs() as u32, |e| e.0 = e.0.clone() + c);
    }

    /// Adds `c sin(k t)` for any integer `k`.
    pub(crate) fn add_sin(&mut self, k: i64, c: RealSubElem) {
        if c.is_zero() || k == 0 {
            return;
        }
        let c = if k < 0 { -c } else { c };
        self.entry(k.unsigned_abs() as u32, |e| e.1 = e.1.clone() + c);
    }

    pub fn harmonics(&self) -> &BTreeMap<u32, (RealSubElem, RealSubElem)> {
        &self.harmonics
    }

    /// `(a_k, b_k)`, zero when absent.
    pub fn harmonic(&self, k: u32) -> (RealSubElem, RealSubElem) {
        self.harmonics.get(&k).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> RealSubElem {
        self.harmonic(0).0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.harmonics.keys().next_back().copied()
    }

    pub fn deg(&self) -> u32 {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.harmonics.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.deg() == 0
    }

    /// gcd of the nonconstant harmonic indices; 0 for constants.
    pub fn frequency_gcd(&self) -> u32 {
        self.harmonics.keys().filter(|&&k| k > 0).fold(0u32, |g, &k| g.gcd(&k))
    }

    pub fn scale(&self, c: &RealSubElem) -> Self {
        Self::from_harmonics(
            self.harmonics
                .iter()
                .map(|(&k, (a, b))| (k, a.clone() * c.clone(), b.clone() * c.clone())),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `P ∘ w` by Horner's scheme with product-to-sum multiplication.
    pub fn compose(p: &RealPoly, w: &TrigPoly) -> Self {
        let mut acc = TrigPoly::zero();
        for c in p.coeffs().iter().rev() {
            acc = &acc * w;
            acc.add_cos(0, c.clone());
        }
        acc
    }

    /// `w(k t + b)`.
    pub fn shift(&self, k: u32, b: &Angle) -> Self {
        assert!(k > 0, "frequency multiplier must be positive");
        let mut out = TrigPoly::zero();
        for (&j, (a, s)) in &self.harmonics {
            let phase = b.times(j as i64);
            let (c, sn) = (phase.cos().clone(), phase.sin().clone());
            let nk = (j * k) as i64;
            out.add_cos(nk, a.clone() * c.clone() + s.clone() * sn.clone());
            out.add_sin(nk, s.clone() * c - a.clone() * sn);
        }
        out
    }

    /// Derivative in `t`.
    pub fn derivative(&self) -> Self {
        let mut out = TrigPoly::zero();
        for (&k, (a, b)) in &self.harmonics {
            let kk = RealSubElem::from_int(k as i64);
            out.add_cos(k as i64, b.clone() * kk.clone());
            out.add_sin(k as i64, -(a.clone() * kk));
        }
        out
    }

    /// Replaces every harmonic `k` by `k / g`; `g` must divide all of them.
    pub fn compress(&self, g: u32) -> Self {
        Self::from_harmonics(self.harmonics.iter().map(|(&k, (a, b))| {
            assert!(k % g == 0, "frequency {k} not divisible by {g}");
            (k / g, a.clone(), b.clone())
        }))
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.harmonics
            .iter()
            .map(|(&k, (a, b))| a.to_f64() * (k as f64 * t).cos() + b.to_f64() * (k as f64 * t).sin())
            .sum()
    }
}

impl<'a> Add<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &'a TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (&k, (a, b)) in &rhs.harmonics {
            out.add_cos(k as i64, a.clone());
            out.add_sin(k as i64, b.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &'a TrigPoly) -> TrigPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &'a TrigPoly) -> TrigPoly {
        let half = RealSubElem::from_rat(rat(1, 2));
        let mut out = TrigPoly::zero();
        for (&j, (a1, b1)) in &self.harmonics {
            for (&k, (a2, b2)) in &rhs.harmonics {
                let (j, k) = (j as i64, k as i64);
                let (s, d) = (j + k, j - k);
                let aa = a1.clone() * a2.clone() * half.clone();
                let bb = b1.clone() * b2.clone() * half.clone();
                let ba = b1.clone() * a2.clone() * half.clone();
                let ab = a1.clone() * b2.clone() * half.clone();
                // cos cos, sin sin
                out.add_cos(d, aa.clone() + bb.clone());
                out.add_cos(s, aa - bb);
                // sin j cos k, cos j sin k
                out.add_sin(s, ba.clone() + ab.clone());
                out.add_sin(d, ba - ab);
            }
        }
        out
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        self.scale(&RealSubElem::from_int(-1))
    }
}

impl Add for TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: Self) -> TrigPoly {
        &self + &rhs
    }
}

impl Sub for TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: Self) -> TrigPoly {
        &self - &rhs
    }
}

impl Mul for TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: Self) -> TrigPoly {
        &self * &rhs
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        -&self
    }
}

fn harmonic_name(f: &str, k: u32) -> String {
    if k == 1 {
        format!("{f}(t)")
    } else {
        format!("{f}({k}*t)")
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![];
        for (&k, (a, b)) in self.harmonics.iter().rev() {
            if k == 0 {
                terms.push((a.clone(), String::new()));
                continue;
            }
            if !a.is_zero() {
                terms.push((a.clone(), harmonic_name("cos", k)));
            }
            if !b.is_zero() {
                terms.push((b.clone(), harmonic_name("sin", k)));
            }
        }
        write_sum(f, terms.into_iter())
    }
}
