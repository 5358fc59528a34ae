use num_integer::Integer;

use super::templates::{cos_s_sin, d_phase, monomial, one_minus_sq_s2, spread};
use super::{verify_solution, CaseLabel, CaseParams, SolutionWitness, WitnessInner};
use crate::chebyshev::{cheb_t, laurent_u, laurent_v};
use crate::error::{Error, Result};
use crate::exactfield::roots::roots_of_unity;
use crate::exactfield::{rat, Angle, RealSubElem, Scalar, TowerElem};
use crate::rings::{AffineMap, LaurentPoly, RealPoly, TrigPoly};

/// Parameters of [`gen_family`]; unused fields are ignored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FamilyParams {
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub s: u32,
    /// `R` in case a, `S` in case c; defaults to 1.
    pub poly: Option<RealPoly>,
    /// Common left factor `U`; defaults to `z`.
    pub outer: Option<RealPoly>,
    /// Common inner in cases a and b; defaults to `cos t`.
    pub base: Option<TrigPoly>,
    /// `(k, b)`: every inner is evaluated at `k t + b`.
    pub shift: Option<(u32, Angle)>,
}

/// A solution `P1 ∘ w1 = P2 ∘ w2` with the witness it was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    pub p1: RealPoly,
    pub w1: TrigPoly,
    pub p2: RealPoly,
    pub w2: TrigPoly,
    pub witness: SolutionWitness,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn coprime(n: u32, m: u32) -> Result<()> {
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return Err(invalid(format!("n = {n} and m = {m} must be positive and coprime")));
    }
    Ok(())
}

/// Builds a member of one of the four solution families.
pub fn gen_family(case: CaseLabel, params: &FamilyParams) -> Result<Family> {
    let u = params.outer.clone().unwrap_or_else(RealPoly::x);
    if u.deg() == 0 {
        return Err(invalid("U must be nonconstant"));
    }
    let (k, b) = params.shift.clone().unwrap_or((1, Angle::zero()));
    if k == 0 {
        return Err(invalid("shift multiplier k must be positive"));
    }
    let poly = params.poly.clone().unwrap_or_else(RealPoly::one);
    let base = params.base.clone().unwrap_or_else(|| TrigPoly::cos(1));
    let FamilyParams { n, m, r, l, s, .. } = *params;
    let (p1, p2, inner, cp) = match case {
        CaseLabel::A => {
            if n == 0 || poly.is_zero() {
                return Err(invalid("case a needs n >= 1 and R nonzero"));
            }
            let w1 = spread(r, &poly, n);
            let p2 = &monomial(r) * &poly.pow(n);
            if w1.deg() == 0 || p2.deg() == 0 || base.is_constant() {
                return Err(invalid("case a parameters give a constant factor"));
            }
            let inner = WitnessInner::Common {
                w1,
                w2: monomial(n),
                w: base.shift(k, &b),
            };
            (
                monomial(n),
                p2,
                inner,
                CaseParams {
                    n,
                    r,
                    poly: Some(poly),
                    ..Default::default()
                },
            )
        }
        CaseLabel::B => {
            coprime(n, m)?;
            if base.is_constant() {
                return Err(invalid("constant common inner"));
            }
            let inner = WitnessInner::Common {
                w1: cheb_t(m as usize),
                w2: cheb_t(n as usize),
                w: base.shift(k, &b),
            };
            (
                cheb_t(n as usize),
                cheb_t(m as usize),
                inner,
                CaseParams {
                    n,
                    m,
                    ..Default::default()
                },
            )
        }
        CaseLabel::C => {
            if poly.is_zero() {
                return Err(invalid("case c needs S nonzero"));
            }
            let inner = WitnessInner::Shifted {
                w1: cos_s_sin(&poly),
                w2: TrigPoly::sin(1),
                k,
                b,
            };
            (
                monomial(2),
                one_minus_sq_s2(&poly),
                inner,
                CaseParams {
                    poly: Some(poly),
                    ..Default::default()
                },
            )
        }
        CaseLabel::D => {
            coprime(n, m)?;
            if l < 2 || s >= n * l {
                return Err(invalid(format!("case d needs l > 1 and s < nl (l = {l}, s = {s})")));
            }
            let phase = d_phase(n, l, s)?;
            let inner = WitnessInner::Shifted {
                w1: TrigPoly::cos(1).shift(m, &phase),
                w2: TrigPoly::cos(n),
                k,
                b,
            };
            let (nl, ml) = ((n * l) as usize, (m * l) as usize);
            (
                -cheb_t(nl),
                cheb_t(ml),
                inner,
                CaseParams {
                    n,
                    m,
                    l,
                    s,
                    ..Default::default()
                },
            )
        }
    };
    let (w1, w2) = match &inner {
        WitnessInner::Common { w1, w2, w } => (TrigPoly::compose(w1, w), TrigPoly::compose(w2, w)),
        WitnessInner::Shifted { w1, w2, k, b } => (w1.shift(*k, b), w2.shift(*k, b)),
    };
    let witness = SolutionWitness {
        case_label: case,
        swapped: false,
        p1: p1.clone(),
        p2: p2.clone(),
        u: u.clone(),
        inner,
        mu: [AffineMap::identity(), AffineMap::identity()],
        params: cp,
    };
    let (p1, p2) = (u.compose(&p1), u.compose(&p2));
    if !verify_solution(&p1, &w1, &p2, &w2) || !witness.check(&p1, &w1, &p2, &w2) {
        return Err(Error::Precondition(format!(
            "generated case {case} quadruple failed verification"
        )));
    }
    Ok(Family {
        p1,
        w1,
        p2,
        w2,
        witness,
    })
}

/// Parameters of [`gen_laurent_family`]; unused fields are ignored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentParams {
    pub n: u32,
    pub m: u32,
    pub r: u32,
    pub l: u32,
    /// `R` in case 1, `S` in case 3; defaults to 1.
    pub poly: Option<RealPoly>,
    /// Common left factor; defaults to `z`.
    pub outer: Option<RealPoly>,
    /// Common inner in cases 1 and 2; defaults to `z`.
    pub base: Option<LaurentPoly>,
    /// `(c, k)`: the inners of cases 3-5 are evaluated at `c z^k`.
    pub power: Option<(TowerElem, i64)>,
    /// `eps` of case 4; defaults to the first root of unity with `eps^{nlm} = -1`.
    pub eps: Option<TowerElem>,
}

/// A solution `P1 ∘ W1 = P2 ∘ W2` over Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentFamily {
    pub case: u8,
    pub p1: RealPoly,
    pub w1: LaurentPoly,
    pub p2: RealPoly,
    pub w2: LaurentPoly,
    pub eps: Option<TowerElem>,
}

fn tower(re: RealSubElem, im: RealSubElem) -> TowerElem {
    TowerElem::from_parts(re, im)
}

fn third(x: RealSubElem, q: (i64, i64)) -> RealSubElem {
    x.scale(&rat(q.0, q.1))
}

/// The two inners of the sporadic solution with outers `(z^2 - 1)^3` and `3 z^4 - 4 z^3`.
pub(crate) fn sporadic_inners() -> (LaurentPoly, LaurentPoly) {
    let zero = RealSubElem::default;
    // i/sqrt3 V_2 + 2 sqrt2/sqrt3 U_1
    let w1 = &laurent_v(2).scale(&tower(zero(), third(RealSubElem::sqrt3(), (1, 3))))
        + &laurent_u(1).scale(&tower(third(RealSubElem::sqrt6(), (2, 3)), zero()));
    // i/(3 sqrt2) V_3 + U_2 + i/sqrt2 V_1 + 2/3
    let w2 = &(&laurent_v(3).scale(&tower(zero(), third(RealSubElem::sqrt2(), (1, 6)))) + &laurent_u(2))
        + &(&laurent_v(1).scale(&tower(zero(), third(RealSubElem::sqrt2(), (1, 2))))
            + &LaurentPoly::constant(TowerElem::from_rat(rat(2, 3))));
    (w1, w2)
}

/// Builds a member of one of the five Laurent solution families.
pub fn gen_laurent_family(case: u8, params: &LaurentParams) -> Result<LaurentFamily> {
    let u = params.outer.clone().unwrap_or_else(RealPoly::x);
    if u.deg() == 0 {
        return Err(invalid("U must be nonconstant"));
    }
    let base = params.base.clone().unwrap_or_else(LaurentPoly::z);
    let (c, k) = params.power.clone().unwrap_or((TowerElem::from_int(1), 1));
    if c.is_zero() || k == 0 || base.is_constant() {
        return Err(invalid("degenerate inner substitution"));
    }
    let subst = |l: LaurentPoly| l.inner_substitute(&c, k);
    let poly = params.poly.clone().unwrap_or_else(RealPoly::one);
    let LaurentParams { n, m, r, l, .. } = *params;
    let mut eps = None;
    let (p1, w1, p2, w2) = match case {
        1 => {
            if n == 0 || poly.is_zero() {
                return Err(invalid("case 1 needs n >= 1 and R nonzero"));
            }
            let (w1, p2) = (spread(r, &poly, n), &monomial(r) * &poly.pow(n));
            if w1.deg() == 0 || p2.deg() == 0 {
                return Err(invalid("case 1 parameters give a constant factor"));
            }
            let w1 = LaurentPoly::compose_outer(&w1, &base);
            (monomial(n), w1, p2, LaurentPoly::compose_outer(&monomial(n), &base))
        }
        2 => {
            coprime(n, m)?;
            let (tn, tm) = (cheb_t(n as usize), cheb_t(m as usize));
            let (w1, w2) = (
                LaurentPoly::compose_outer(&tm, &base),
                LaurentPoly::compose_outer(&tn, &base),
            );
            (tn, w1, tm, w2)
        }
        3 => {
            if poly.is_zero() {
                return Err(invalid("case 3 needs S nonzero"));
            }
            let w1 = &laurent_u(1) * &LaurentPoly::compose_outer(&poly, &laurent_v(1));
            (monomial(2), subst(w1), one_minus_sq_s2(&poly), subst(laurent_v(1)))
        }
        4 => {
            coprime(n, m)?;
            if l < 2 {
                return Err(invalid("case 4 needs l > 1"));
            }
            let e = n * l * m;
            let minus_one = TowerElem::from_int(-1);
            let root = match &params.eps {
                Some(x) => x.clone(),
                None => roots_of_unity()
                    .into_iter()
                    .find(|x| Scalar::pow(x, e) == minus_one)
                    .ok_or_else(|| Error::OutsideTower {
                        what: "eps",
                        detail: format!("no root of unity with eps^{e} = -1"),
                    })?,
            };
            if Scalar::pow(&root, e) != minus_one {
                return Err(invalid(format!("eps^{e} must equal -1")));
            }
            let w1 = laurent_u(m).inner_substitute(&root, 1);
            eps = Some(root);
            (
                -cheb_t((n * l) as usize),
                subst(w1),
                cheb_t((m * l) as usize),
                subst(laurent_u(n)),
            )
        }
        5 => {
            let (w1, w2) = sporadic_inners();
            let p1 = RealPoly::from_ints(&[-1, 0, 3, 0, -3, 0, 1]);
            (p1, subst(w1), RealPoly::from_ints(&[0, 0, 0, -4, 3]), subst(w2))
        }
        _ => return Err(invalid(format!("Laurent case {case} does not exist"))),
    };
    let (p1, p2) = (u.compose(&p1), u.compose(&p2));
    if LaurentPoly::compose_outer(&p1, &w1) != LaurentPoly::compose_outer(&p2, &w2) {
        return Err(Error::Precondition(format!(
            "generated Laurent case {case} failed verification"
        )));
    }
    Ok(LaurentFamily {
        case,
        p1,
        w1,
        p2,
        w2,
        eps,
    })
}
