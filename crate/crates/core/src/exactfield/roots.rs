//! Roots of tower elements that stay inside the tower.
//!
//! Square roots are found exactly by descending the quadratic chain
//! `Q < Q(i) < Q(i, sqrt2) < Q(i, sqrt2, sqrt3)`. Odd prime roots reduce to the
//! seven quadratic subfields through the group-ring identity
//! `4 = sum_H N_H - 3 N_G` over the index-two subgroups `H` of the Galois group,
//! which gives `x^4` from relative norms; `x` then follows from `x^p = c` and
//! `gcd(4, p) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{int, rat_nth_root, Angle, Rat, Scalar, TowerElem};

/// All 24 roots of unity in the tower, `e^{i pi s/12}` for `s = 0..24`.
pub fn roots_of_unity() -> Vec<TowerElem> {
    (0..24).map(|s| Angle::pi_twelfths(s).unit()).collect()
}

/// Smallest `k >= 1` with `x^k = 1`, if `x` is one of the tower's roots of unity.
pub fn root_of_unity_order(x: &TowerElem) -> Option<u32> {
    if !roots_of_unity().contains(x) {
        return None;
    }
    let mut p = x.clone();
    for k in 1..=24 {
        if p.is_one() {
            return Some(k);
        }
        p = p * x.clone();
    }
    None
}

// Level l field: l = 0 -> Q, 1 -> Q(i), 2 -> Q(i, sqrt2), 3 -> whole tower.
// split(x, l) writes x = a + b * gen(l) with a, b in level l - 1.
fn split(x: &TowerElem, level: u8) -> (TowerElem, TowerElem) {
    let c = x.coeffs();
    let z = Rat::zero;
    let (a, b): ([Rat; 8], [Rat; 8]) = match level {
        3 => (
            [
                c[0].clone(),
                c[1].clone(),
                c[2].clone(),
                z(),
                z(),
                c[5].clone(),
                z(),
                z(),
            ],
            [
                c[3].clone(),
                c[6].clone(),
                c[4].clone(),
                z(),
                z(),
                c[7].clone(),
                z(),
                z(),
            ],
        ),
        2 => (
            [c[0].clone(), c[1].clone(), z(), z(), z(), z(), z(), z()],
            [c[2].clone(), c[5].clone(), z(), z(), z(), z(), z(), z()],
        ),
        1 => (
            [c[0].clone(), z(), z(), z(), z(), z(), z(), z()],
            [c[1].clone(), z(), z(), z(), z(), z(), z(), z()],
        ),
        _ => unreachable!(),
    };
    (TowerElem::new(a), TowerElem::new(b))
}

fn generator(level: u8) -> TowerElem {
    match level {
        3 => TowerElem::basis(3),
        2 => TowerElem::basis(2),
        1 => TowerElem::i(),
        _ => unreachable!(),
    }
}

fn generator_square(level: u8) -> i64 {
    match level {
        3 => 3,
        2 => 2,
        1 => -1,
        _ => unreachable!(),
    }
}

fn sqrt_at(x: &TowerElem, level: u8) -> Vec<TowerElem> {
    if x.is_zero() {
        return vec![TowerElem::default()];
    }
    if level == 0 {
        let q = &x.coeffs()[0];
        return match rat_nth_root(q, 2) {
            Some(r) => vec![TowerElem::from_rat(r.clone()), TowerElem::from_rat(-r)],
            None => vec![],
        };
    }
    let (a, b) = split(x, level);
    let g = generator(level);
    let d = generator_square(level);
    let mut out = Vec::new();
    if b.is_zero() {
        out = sqrt_at(&a, level - 1);
        if out.is_empty() {
            let a_over_d = a.scale(&(int(1) / int(d)));
            out = sqrt_at(&a_over_d, level - 1)
                .into_iter()
                .map(|y| y * g.clone())
                .collect();
        }
        return out;
    }
    let n = a.clone() * a.clone() - (b.clone() * b.clone()).scale(&int(d));
    for r in sqrt_at(&n, level - 1) {
        let half = (a.clone() + r).scale(&(int(1) / int(2)));
        for s in sqrt_at(&half, level - 1) {
            if s.is_zero() {
                continue;
            }
            let t = b.clone() * s.inv().unwrap().scale(&(int(1) / int(2)));
            let y = s + t * g.clone();
            if y.clone() * y.clone() == *x && !out.contains(&y) {
                out.push(y);
            }
        }
    }
    out
}

/// Every square root of `x` lying in the tower, in canonical order.
pub fn sqrt_all(x: &TowerElem) -> Vec<TowerElem> {
    let mut v = sqrt_at(x, 3);
    v.sort_by(|a, b| a.canonical_cmp(b));
    v.dedup();
    v
}

fn smallest_prime_factor(n: u32) -> u32 {
    (2..=n).find(|p| n.is_multiple_of(*p)).unwrap_or(n)
}

/// Every `n`-th root of `x` lying in the tower, in canonical order.
pub fn nth_roots(x: &TowerElem, n: u32) -> Vec<TowerElem> {
    assert!(n >= 1, "root index must be positive");
    if n == 1 || x.is_zero() {
        return vec![x.clone()];
    }
    let p = smallest_prime_factor(n);
    let first = if p == 2 { sqrt_all(x) } else { odd_prime_roots(x, p) };
    let mut out: Vec<TowerElem> = first.iter().flat_map(|r| nth_roots(r, n / p)).collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    out
}

// nonzero characters of (Z/2)^3; the fixed field of ker(chi) is Q(e_chi)
const CHARACTERS: [(u8, u8, u8); 7] = [
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (0, 1, 1),
    (1, 1, 0),
    (1, 0, 1),
    (1, 1, 1),
];
// basis index of e_chi and the rational value of e_chi^2
const CHAR_BASIS: [(usize, i64); 7] = [(1, -1), (2, 2), (3, 3), (4, 6), (5, -2), (6, -3), (7, -6)];

fn group() -> impl Iterator<Item = (u8, u8, u8)> {
    (0..8u8).map(|g| (g & 1, (g >> 1) & 1, (g >> 2) & 1))
}

fn apply(x: &TowerElem, g: (u8, u8, u8)) -> TowerElem {
    x.galois(g.0 == 1, g.1 == 1, g.2 == 1)
}

fn relative_norm(x: &TowerElem, chi: (u8, u8, u8)) -> TowerElem {
    group()
        .filter(|g| (g.0 * chi.0 + g.1 * chi.1 + g.2 * chi.2).is_multiple_of(2))
        .fold(TowerElem::from_int(1), |acc, g| acc * apply(x, g))
}

fn absolute_norm(x: &TowerElem) -> Rat {
    let n = group().fold(TowerElem::from_int(1), |acc, g| acc * apply(x, g));
    debug_assert!(n.is_rational());
    n.coeffs()[0].clone()
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn odd_prime_roots(c: &TowerElem, p: u32) -> Vec<TowerElem> {
    let Some(ng) = rat_nth_root(&absolute_norm(c), p) else {
        return vec![];
    };
    let mut choices: Vec<Vec<TowerElem>> = Vec::with_capacity(7);
    for (chi, &(idx, d)) in CHARACTERS.iter().zip(CHAR_BASIS.iter()) {
        let roots = quadratic_roots(&relative_norm(c, *chi), idx, d, p);
        if roots.is_empty() {
            return vec![];
        }
        choices.push(roots);
    }
    // 4u + pv = 1
    let (_, u, v) = ext_gcd(4, p as i64);
    let ng_cubed_inv = TowerElem::from_rat(ng).powi(-3).unwrap();
    let mut out = Vec::new();
    let mut idx = [0usize; 7];
    loop {
        let prod = idx
            .iter()
            .zip(&choices)
            .fold(ng_cubed_inv.clone(), |acc, (&i, list)| acc * list[i].clone());
        if let (Some(a), Some(b)) = (prod.powi(u), c.powi(v)) {
            let x = a * b;
            if Scalar::pow(&x, p) == *c && !out.contains(&x) {
                out.push(x);
            }
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == 7 {
                return with_unity_multiples(out, p);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn with_unity_multiples(base: Vec<TowerElem>, p: u32) -> Vec<TowerElem> {
    let unity: Vec<TowerElem> = roots_of_unity()
        .into_iter()
        .filter(|z| Scalar::pow(z, p).is_one())
        .collect();
    let mut out = Vec::new();
    for x in &base {
        for z in &unity {
            let y = x.clone() * z.clone();
            if !out.contains(&y) {
                out.push(y);
            }
        }
    }
    out
}

// p-th roots of y = s0 + s1*e inside Q(e), e^2 = d, p odd.
//
// With D the common denominator, Y = D^p y has integer coordinates and any
// root X = D x is an algebraic integer, so X = (A + B e)/2 with A, B in Z.
// A and B are located in fixed point and every candidate is checked exactly.
fn quadratic_roots(y: &TowerElem, idx: usize, d: i64, p: u32) -> Vec<TowerElem> {
    let (s0, s1) = (&y.coeffs()[0], &y.coeffs()[idx]);
    if s0.is_zero() && s1.is_zero() {
        return vec![TowerElem::default()];
    }
    let den = s0.denom().lcm(s1.denom());
    let scale = num_traits::pow(den.clone(), p as usize);
    let t0 = (s0 * Rat::from_integer(scale.clone())).to_integer();
    let t1 = (s1 * Rat::from_integer(scale)).to_integer();
    let bits = (t0.bits().max(t1.bits()) / p as u64) as usize + FRAC_BITS + 8;
    let candidates = if d > 0 {
        real_quadratic_root(&t0, &t1, d, p, bits)
    } else {
        imaginary_quadratic_roots(&t0, &t1, -d, p, bits)
    };
    let mut out = Vec::new();
    for (a2, b2) in candidates {
        let mut c: [Rat; 8] = Default::default();
        let half_den = BigInt::from(2) * &den;
        c[0] = Rat::new(a2, half_den.clone());
        c[idx] = Rat::new(b2, half_den);
        let x = TowerElem::new(c);
        if Scalar::pow(&x, p) == *y && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

const FRAC_BITS: usize = 64;

fn signed_nth_root(v: &BigInt, p: u32) -> BigInt {
    if v.is_negative() {
        -(-v).nth_root(p)
    } else {
        v.nth_root(p)
    }
}

// floor(v / w) rounded to nearest instead
fn round_div(v: &BigInt, w: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (v * &two + w).div_floor(&(w * &two))
}

// (2a, 2b) for the real root of t0 + t1 sqrt(d): both embeddings are real
// and the root is the unique real p-th root in each.
fn real_quadratic_root(t0: &BigInt, t1: &BigInt, d: i64, p: u32, f: usize) -> Vec<(BigInt, BigInt)> {
    let sd = (BigInt::from(d) << (2 * f)).sqrt();
    let t1sd = {
        let m = ((t1 * t1 * BigInt::from(d)) << (2 * f)).sqrt();
        if t1.is_negative() {
            -m
        } else {
            m
        }
    };
    let t0f = t0.clone() << f;
    let (big, small_sign) = if t0.sign() == t1.sign() || t1.is_zero() {
        (&t0f + &t1sd, -1)
    } else {
        (&t0f - &t1sd, 1)
    };
    if big.is_zero() {
        return vec![];
    }
    // the other embedding from the norm, avoiding cancellation
    let norm = t0 * t0 - t1 * t1 * BigInt::from(d);
    let other = (norm << (2 * f)).div_floor(&big);
    let root = |v: &BigInt| signed_nth_root(&(v.clone() << (f * (p as usize - 1))), p);
    let (rb, ro) = (root(&big), root(&other));
    let (plus, minus) = if small_sign < 0 { (rb, ro) } else { (ro, rb) };
    let a2 = round_div(&(&plus + &minus), &(BigInt::from(1) << f));
    let b2 = round_div(&(&plus - &minus), &sd);
    let mut out = vec![];
    for da in -1..=1 {
        for db in -1..=1 {
            out.push((&a2 + BigInt::from(da), &b2 + BigInt::from(db)));
        }
    }
    out
}

#[derive(Clone, PartialEq)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

impl Fixed {
    fn mul(&self, o: &Fixed, f: usize) -> Fixed {
        Fixed {
            re: (&self.re * &o.re - &self.im * &o.im) >> f,
            im: (&self.re * &o.im + &self.im * &o.re) >> f,
        }
    }

    fn div(&self, o: &Fixed, f: usize) -> Fixed {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        Fixed {
            re: (re << f).div_floor(&n),
            im: (im << f).div_floor(&n),
        }
    }
}

// (2a, 2b) candidates for roots of t0 + t1 sqrt(-m), m > 0, from Newton
// iteration on each of the p complex roots.
fn imaginary_quadratic_roots(t0: &BigInt, t1: &BigInt, m: i64, p: u32, f: usize) -> Vec<(BigInt, BigInt)> {
    let sm = (BigInt::from(m) << (2 * f)).sqrt();
    let w = Fixed {
        re: t0.clone() << f,
        im: {
            let v = ((t1 * t1 * BigInt::from(m)) << (2 * f)).sqrt();
            if t1.is_negative() {
                -v
            } else {
                v
            }
        },
    };
    let norm = t0 * t0 + t1 * t1 * BigInt::from(m);
    let radius = (norm << (2 * p as usize * f)).nth_root(2 * p);
    let shift = (t0.bits().max(t1.bits()) as i64 - 900).max(0) as usize;
    let angle = float(&(t1 >> shift), 1.0).atan2(float(&(t0 >> shift), 1.0 / (m as f64).sqrt()));
    let unit = 1i64 << 52;
    let mut out = vec![];
    for k in 0..p {
        let phi = (angle + 2.0 * std::f64::consts::PI * k as f64) / p as f64;
        let mut x = Fixed {
            re: (&radius * BigInt::from((phi.cos() * unit as f64) as i64)) >> 52,
            im: (&radius * BigInt::from((phi.sin() * unit as f64) as i64)) >> 52,
        };
        for _ in 0..200 {
            let mut xp1 = Fixed {
                re: BigInt::from(1) << f,
                im: BigInt::zero(),
            };
            for _ in 1..p {
                xp1 = xp1.mul(&x, f);
            }
            if xp1.re.is_zero() && xp1.im.is_zero() {
                break;
            }
            let corr = w.div(&xp1, f);
            let pb = BigInt::from(p);
            let next = Fixed {
                re: (&x.re * BigInt::from(p - 1) + &corr.re).div_floor(&pb),
                im: (&x.im * BigInt::from(p - 1) + &corr.im).div_floor(&pb),
            };
            let close = (&next.re - &x.re).abs() <= BigInt::from(4) && (&next.im - &x.im).abs() <= BigInt::from(4);
            x = next;
            if close {
                break;
            }
        }
        let a2 = round_div(&(&x.re * BigInt::from(2)), &(BigInt::from(1) << f));
        let b2 = round_div(&(&x.im * BigInt::from(2)), &sm);
        out.push((a2, b2));
    }
    out
}

// v * scale as f64, for v of at most about a thousand bits
fn float(v: &BigInt, scale: f64) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(0.0) * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, RealSubElem};

    fn t(c: [i64; 8]) -> TowerElem {
        TowerElem::new(c.map(int))
    }

    #[test]
    fn square_roots_of_units_and_radicals() {
        assert_eq!(
            sqrt_all(&TowerElem::from_int(-1)),
            vec![TowerElem::i(), -TowerElem::i()]
        );
        assert_eq!(sqrt_all(&TowerElem::from_int(2)).len(), 2);
        assert_eq!(sqrt_all(&TowerElem::from_int(5)), vec![]);
        // sqrt(i) = (1 + i)/sqrt2 is in the tower
        let r = sqrt_all(&TowerElem::i());
        assert_eq!(r.len(), 2);
        for y in r {
            assert_eq!(y.clone() * y, TowerElem::i());
        }
        // e^{i pi/12} has no square root in the tower
        assert!(sqrt_all(&Angle::pi_twelfths(1).unit()).is_empty());
    }

    #[test]
    fn square_roots_of_random_squares() {
        let xs = [
            t([1, 2, 0, -1, 3, 0, 1, 0]),
            t([0, 0, 0, 0, 0, 0, 0, 5]),
            t([-3, 1, 1, 1, 1, 1, 1, 1]),
            TowerElem::new([rat(1, 2), rat(-2, 3), int(0), rat(5, 7), int(0), int(1), int(0), int(0)]),
        ];
        for x in xs {
            let sq = x.clone() * x.clone();
            let roots = sqrt_all(&sq);
            assert_eq!(roots.len(), 2, "{sq}");
            assert!(roots.contains(&x) && roots.contains(&-x.clone()));
        }
    }

    #[test]
    fn odd_roots() {
        let x = t([1, 1, 0, 0, 0, 0, 0, 0]);
        let cube = Scalar::pow(&x, 3);
        let roots = nth_roots(&cube, 3);
        // Q(sqrt-3) supplies the cube roots of unity
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&x));
        let y = t([2, 0, 1, 0, 0, 0, -1, 0]);
        let r5 = nth_roots(&Scalar::pow(&y, 5), 5);
        assert_eq!(r5, vec![y]);
        assert!(nth_roots(&TowerElem::from_int(2), 3).is_empty());
        assert_eq!(nth_roots(&TowerElem::from_int(-8), 3).len(), 3);
    }

    #[test]
    fn odd_roots_of_large_height() {
        let num = t([3, -1, 2, 1, -2, 1, 1, 3]);
        let den = t([1, 2, -1, 0, 1, -3, 2, 1]);
        let x = num * den.inv().unwrap();
        for p in [3, 5, 7] {
            let y = Scalar::pow(&x, p);
            let roots = nth_roots(&y, p);
            assert!(roots.contains(&x), "p = {p}");
            assert!(roots.iter().all(|r| Scalar::pow(r, p) == y));
        }
        let w =
            (TowerElem::from_int(1) + TowerElem::basis(6)).scale(&rat(7, 3)) + TowerElem::basis(2).scale(&rat(1, 5));
        assert!(nth_roots(&Scalar::pow(&w, 3), 3).contains(&w));
    }

    #[test]
    fn composite_roots() {
        // the 24 roots of unity are exactly the 24th roots of 1
        let r = nth_roots(&TowerElem::from_int(1), 24);
        assert_eq!(r.len(), 24);
        let mut all = roots_of_unity();
        all.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(r, all);
        let x = TowerElem::from_real(RealSubElem::sqrt2() + RealSubElem::from_int(1));
        assert!(nth_roots(&Scalar::pow(&x, 6), 6).contains(&x));
    }

    #[test]
    fn unity_orders() {
        assert_eq!(root_of_unity_order(&TowerElem::i()), Some(4));
        assert_eq!(root_of_unity_order(&Angle::pi_twelfths(1).unit()), Some(24));
        assert_eq!(root_of_unity_order(&TowerElem::from_int(2)), None);
    }
}
