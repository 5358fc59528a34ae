//! Acceptance run: one PASS/FAIL line per criterion, with the time limit each must meet.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trigdecomp::chebyshev::{cheb_t, laurent_u, laurent_v};
use trigdecomp::decompose::{
    align_equal_degree, descend_real, enumerate_decompositions, enumerate_polynomial, equivalence_witness_laurent,
    equivalence_witness_poly, equivalence_witness_trig, realify, trig_poly_decompositions, Alignment, Inner, Outer,
};
use trigdecomp::exactfield::roots::roots_of_unity;
use trigdecomp::exactfield::{rat, Angle, RealSubElem, Scalar, TowerElem};
use trigdecomp::moments::{poly_moments_vanish, trig_moments_vanish};
use trigdecomp::rings::{phi_inverse, phi_map, AffineMap, ComplexPoly, LaurentPoly, RealPoly, TrigPoly};
use trigdecomp::ritt::{classify_solution, gen_family, gen_laurent_family, verify_solution, CaseLabel, LaurentParams};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Gen(ChaCha8Rng);

impl Gen {
    fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    fn real(&mut self) -> RealSubElem {
        let mut x = RealSubElem::from_rat(rat(self.0.gen_range(-5..=5), self.0.gen_range(1..=4)));
        for (p, unit) in [(0.3, RealSubElem::sqrt2()), (0.2, RealSubElem::sqrt3())] {
            if self.0.gen_bool(p) {
                x = x + unit.scale(&rat(self.0.gen_range(-3..=3), self.0.gen_range(1..=2)));
            }
        }
        x
    }

    fn nonzero_real(&mut self) -> RealSubElem {
        loop {
            let x = self.real();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn tower(&mut self) -> TowerElem {
        let im = if self.0.gen_bool(0.5) {
            self.real()
        } else {
            RealSubElem::default()
        };
        TowerElem::from_parts(self.real(), im)
    }

    fn nonzero_tower(&mut self) -> TowerElem {
        loop {
            let x = self.tower();
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn trig(&mut self, lo: u32, hi: u32) -> TrigPoly {
        let deg = self.range(lo, hi);
        let mut h: Vec<_> = (0..=deg).map(|k| (k, self.real(), self.real())).collect();
        if deg > 0 {
            h[deg as usize].1 = self.nonzero_real();
        }
        TrigPoly::from_harmonics(h)
    }

    fn real_poly(&mut self, lo: u32, hi: u32) -> RealPoly {
        let deg = self.range(lo, hi) as usize;
        let mut c: Vec<_> = (0..deg).map(|_| self.real()).collect();
        c.push(self.nonzero_real());
        RealPoly::new(c)
    }

    fn complex_poly(&mut self, lo: u32, hi: u32) -> ComplexPoly {
        let deg = self.range(lo, hi) as usize;
        let mut c: Vec<_> = (0..deg).map(|_| self.tower()).collect();
        c.push(self.nonzero_tower());
        ComplexPoly::new(c)
    }

    fn monic_complex_poly(&mut self, lo: u32, hi: u32) -> ComplexPoly {
        let deg = self.range(lo, hi) as usize;
        let mut c: Vec<_> = (0..deg).map(|_| self.tower()).collect();
        c.push(TowerElem::from_int(1));
        ComplexPoly::new(c)
    }

    fn proper_laurent(&mut self, n1: u32, n2: u32) -> LaurentPoly {
        let mut terms: Vec<_> = (-(n2 as i64)..=n1 as i64).map(|k| (k, self.tower())).collect();
        terms[0].1 = self.nonzero_tower();
        let last = terms.len() - 1;
        terms[last].1 = self.nonzero_tower();
        LaurentPoly::from_terms(terms)
    }

    fn affine(&mut self) -> AffineMap {
        AffineMap::new(self.nonzero_tower(), self.tower()).unwrap()
    }

    fn range(&mut self, lo: u32, hi: u32) -> u32 {
        self.0.gen_range(lo..=hi)
    }
}

fn c1_isomorphism() -> Outcome {
    let mut g = Gen::new(1);
    let mut n = 0;
    for _ in 0..200 {
        let (p, q) = (g.trig(0, 10), g.trig(0, 10));
        let (lp, lq) = (phi_map(&p), phi_map(&q));
        ensure(phi_inverse(&lp).as_ref() == Ok(&p), || format!("round trip of {p}"))?;
        ensure(phi_map(&(&p + &q)) == &lp + &lq, || format!("additivity on {p}, {q}"))?;
        ensure(phi_map(&(&p * &q)) == &lp * &lq, || {
            format!("multiplicativity on {p}, {q}")
        })?;
        let (a, w) = (g.real_poly(1, 3), g.trig(1, 3));
        ensure(
            phi_map(&TrigPoly::compose(&a, &w)) == LaurentPoly::compose_outer(&a, &phi_map(&w)),
            || format!("composition transport on {a}, {w}"),
        )?;
        let (k, b) = (g.range(1, 4), Angle::pi_twelfths(g.range(0, 23) as i64));
        ensure(
            phi_map(&p.shift(k, &b)) == lp.inner_substitute(&b.unit(), k as i64),
            || format!("shift transport on {p}, k = {k}, b = {b}"),
        )?;
        n += 1;
    }
    Ok(format!("{n} instances, degrees <= 10"))
}

fn c2_identities() -> Outcome {
    for n in 0..=8 {
        for m in 0..=8 {
            ensure(cheb_t(n).compose(&cheb_t(m)) == cheb_t(n * m), || {
                format!("T{n} o T{m}")
            })?;
        }
    }
    for n in 0..=12u32 {
        ensure(
            LaurentPoly::compose_outer(&cheb_t(n as usize), &laurent_u(1)) == laurent_u(n),
            || format!("U{n}"),
        )?;
        ensure(phi_map(&TrigPoly::sin(n)) == laurent_v(n), || format!("V{n}"))?;
    }
    Ok("T_n o T_m for n, m <= 8; U_n, V_n for n <= 12".into())
}

fn c3_families() -> Outcome {
    let sweep = common::sweep();
    for (case, p) in &sweep {
        let f = gen_family(*case, p).map_err(|e| format!("{case} {p:?}: {e}"))?;
        ensure(verify_solution(&f.p1, &f.w1, &f.p2, &f.w2), || format!("{case} {p:?}"))?;
    }
    let mut laurent = 0;
    let unit = |s| (Angle::pi_twelfths(s).unit(), 1);
    for case in 1..=5u8 {
        for (n, m, l) in [(1, 1, 2), (2, 1, 2), (1, 2, 3), (2, 3, 2), (3, 2, 2), (3, 1, 4)] {
            for power in [None, Some(unit(1)), Some((TowerElem::from_int(2), 2))] {
                let params = LaurentParams {
                    n,
                    m,
                    r: 1,
                    l,
                    power,
                    ..Default::default()
                };
                let Ok(f) = gen_laurent_family(case, &params) else {
                    continue;
                };
                ensure(
                    LaurentPoly::compose_outer(&f.p1, &f.w1) == LaurentPoly::compose_outer(&f.p2, &f.w2),
                    || format!("Laurent case {case} {params:?}"),
                )?;
                laurent += 1;
            }
        }
    }
    let five = gen_laurent_family(5, &LaurentParams::default()).map_err(|e| e.to_string())?;
    ensure(five.p1 == RealPoly::from_ints(&[-1, 0, 1]).pow(3), || {
        "sporadic P1".into()
    })?;
    ensure(five.p2 == RealPoly::from_ints(&[0, 0, 0, -4, 3]), || {
        "sporadic P2".into()
    })?;
    Ok(format!(
        "{} trigonometric and {laurent} Laurent quadruples, sporadic case included",
        sweep.len()
    ))
}

/// The trigonometric case-d inner is the Laurent case-4 inner at a root of unity.
fn eps_matches_d_phase() -> Outcome {
    let mut matched = 0;
    for (case, p) in common::sweep().into_iter().filter(|(c, _)| *c == CaseLabel::D) {
        if p.shift.is_some() || p.outer.is_some() {
            continue;
        }
        let f = gen_family(case, &p).unwrap();
        let phase = Angle::from_pi_fraction(2 * p.s as i64 + 1, (p.n * p.l) as i64)
            .unwrap()
            .unit();
        let Some(eps) = roots_of_unity().into_iter().find(|e| Scalar::pow(e, p.m) == phase) else {
            continue;
        };
        let params = LaurentParams {
            n: p.n,
            m: p.m,
            l: p.l,
            eps: Some(eps),
            ..Default::default()
        };
        let lf = gen_laurent_family(4, &params).map_err(|e| format!("{params:?}: {e}"))?;
        ensure(lf.w1 == phi_map(&f.w1) && lf.w2 == phi_map(&f.w2), || {
            format!("n={} m={} l={} s={}", p.n, p.m, p.l, p.s)
        })?;
        matched += 1;
    }
    ensure(matched > 0, || "no sweep point with eps in the tower".into())?;
    Ok(format!("{matched} case-d points match Laurent case 4"))
}

fn c4_decompose() -> Outcome {
    let mut g = Gen::new(4);
    for k in 0..100 {
        let (a, b) = (g.complex_poly(2, 4), g.complex_poly(2, 4));
        let f = a.compose(&b);
        let found = enumerate_polynomial(&f, 64).map_err(|e| format!("poly {k}: {e}"))?;
        ensure(
            found.iter().any(|d| match (&d.outer, &d.inner) {
                (Outer::Poly(a2), Inner::Poly(b2)) => equivalence_witness_poly(a2, b2, &a, &b).is_some(),
                _ => false,
            }),
            || format!("poly: ({a}) @ ({b}) not recovered"),
        )?;
    }
    for k in 0..100 {
        let a = g.monic_complex_poly(2, 4);
        let n1 = g.range(1, 3);
        let n2 = g.range(1, 4 - n1);
        let l = g.proper_laurent(n1, n2);
        let f = LaurentPoly::compose_outer(&a, &l);
        let found = enumerate_decompositions(&f, 64).map_err(|e| format!("laurent {k}: {e}"))?;
        ensure(
            found.iter().any(|d| match (&d.outer, &d.inner) {
                (Outer::Poly(a2), Inner::Laurent(l2)) => equivalence_witness_laurent(a2, l2, &a, &l).is_some(),
                _ => false,
            }),
            || format!("laurent: ({a}) @ ({l}) not recovered"),
        )?;
    }
    for k in 0..100 {
        let (a, w) = (g.real_poly(2, 4), g.trig(1, 4));
        let f = TrigPoly::compose(&a, &w);
        let found = trig_poly_decompositions(&f, 64).map_err(|e| format!("trig {k}: {e}"))?;
        ensure(
            found
                .iter()
                .any(|(a2, w2)| equivalence_witness_trig(a2, w2, &a, &w).is_some()),
            || format!("trig: ({a}) @ ({w}) not recovered"),
        )?;
    }
    for k in 0..100 {
        let (ar, w, v) = (g.real_poly(2, 3), g.trig(1, 3), g.affine());
        let a = ar.to_complex().compose(&v.as_poly());
        let l1 = v.inverse().apply_laurent(&phi_map(&w));
        let r = realify(&a, &l1).map_err(|e| format!("realify {k}: {e}"))?;
        ensure(r.inner.is_self_reciprocal(), || {
            format!("realify {k}: inner not self-reciprocal")
        })?;
        ensure(
            LaurentPoly::compose_outer(&r.outer, &r.inner) == LaurentPoly::compose_outer(&a, &l1),
            || format!("realify {k}: composite changed"),
        )?;
    }
    Ok("100 pairs per ring recovered up to equivalence, 100 twists realified".into())
}

fn c5_classifier() -> Outcome {
    let sweep = common::sweep();
    for (case, p) in &sweep {
        let f = gen_family(*case, p).unwrap();
        let w = classify_solution(&f.p1, &f.w1, &f.p2, &f.w2).map_err(|e| format!("{case} {p:?}: {e}"))?;
        ensure(w.check(&f.p1, &f.w1, &f.p2, &f.w2), || {
            format!("{case} {p:?}: witness does not recompose")
        })?;
        let want = common::oracle(*case, p);
        ensure(w.case_label == want, || {
            format!("{case} {p:?}: got {} want {want}", w.case_label)
        })?;
    }
    for s in 0..24 {
        let power = Some((Angle::pi_twelfths(s).unit(), 1));
        let f = gen_laurent_family(
            5,
            &LaurentParams {
                power,
                ..Default::default()
            },
        )
        .unwrap();
        ensure(!f.w1.is_self_reciprocal() && !f.w2.is_self_reciprocal(), || {
            format!("sporadic inner real at s = {s}")
        })?;
        ensure(phi_inverse(&f.w1).is_err(), || {
            format!("sporadic inner has a trigonometric preimage at s = {s}")
        })?;
    }
    Ok(format!(
        "{} sweep points match the oracle; sporadic inners are never real",
        sweep.len()
    ))
}

fn c6_lemmas() -> Outcome {
    let a = ComplexPoly::from_ints(&[-2, 0, 1]);
    let b = ComplexPoly::from_ints(&[2, 0, 1]);
    let z = LaurentPoly::z();
    let zinv = LaurentPoly::monomial(TowerElem::from_int(1), -1);
    let (l1, l2) = (&z + &zinv, &z - &zinv);
    match align_equal_degree(&a, &l1, &b, &l2).map_err(|e| e.to_string())? {
        Alignment::NormalForm { r, a, nu, .. } => ensure(r == 1 && a.is_one() && nu == TowerElem::i(), || {
            format!("normal form r = {r}, a = {a}, nu = {nu}")
        })?,
        other => return Err(format!("expected a normal form, got {other:?}")),
    }
    let p = RealPoly::from_ints(&[0, 0, 2, 0, 1]);
    let (outer, inner) = descend_real(&p, &ComplexPoly::from_ints(&[0, 0, 1])).map_err(|e| e.to_string())?;
    ensure(outer.compose(&inner) == p, || "descent does not recompose".into())?;
    let shifted = ComplexPoly::new(vec![TowerElem::i(), TowerElem::default(), TowerElem::from_int(1)]);
    let (outer, inner) = descend_real(&p, &shifted).map_err(|e| e.to_string())?;
    ensure(outer.compose(&inner) == p, || "descent with imaginary constant".into())?;
    ensure(
        descend_real(&p, &ComplexPoly::monomial(TowerElem::i(), 2)).is_err(),
        || "non-real leading coefficient accepted".into(),
    )?;
    Ok("normal form r = 1, a = 1, nu = i; descent accepts real leads and rejects i z^2".into())
}

fn c7_moments() -> Outcome {
    let mut checked = 0;
    for (case, p) in common::sweep().into_iter().step_by(5) {
        let f = gen_family(case, &p).unwrap();
        let (pp, q) = (
            TrigPoly::compose(&f.p1, &f.w1),
            TrigPoly::compose(&RealPoly::from_ints(&[0, 1, 1]), &f.w1),
        );
        if pp.deg() * 15 > 300 {
            continue;
        }
        ensure(trig_moments_vanish(&pp, &q, 15).all_vanish, || format!("{case} {p:?}"))?;
        checked += 1;
        if checked == 15 {
            break;
        }
    }
    ensure(checked == 15, || format!("only {checked} family instances"))?;
    let r = trig_moments_vanish(&TrigPoly::cos(1), &TrigPoly::sin(1), 15);
    ensure(r.first_nonzero == Some(1) && r.moments[1].to_string() == "pi", || {
        format!("cos/sin: {:?}", r.first_nonzero)
    })?;
    let w = RealPoly::from_ints(&[0, 1, -1]);
    ensure(poly_moments_vanish(&w, &w, 10).all_vanish, || "z(1 - z)".into())?;
    Ok("15 composite pairs vanish for i <= 15; cos/sin first nonzero at i = 1 with pi; z(1 - z) vanishes".into())
}

fn c8_cli() -> Outcome {
    let failures: Vec<_> = common::golden::CASES
        .iter()
        .filter_map(|(n, a)| common::golden::check(n, a))
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!(
        "{} golden transcripts, each identical across two runs",
        common::golden::CASES.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let secs = Duration::from_secs;
    let criteria: &[Criterion] = &[
        ("1 isomorphism suite", c1_isomorphism, secs(5)),
        ("2 identity suite", c2_identities, secs(1)),
        ("3 family soundness", c3_families, secs(30)),
        ("3 case-4 eps against case-d phase", eps_matches_d_phase, secs(30)),
        ("4 decompose round trips", c4_decompose, secs(60)),
        ("5 classifier round trip", c5_classifier, secs(120)),
        ("6 constructive lemma checks", c6_lemmas, secs(1)),
        ("7 moment suite", c7_moments, secs(10)),
        ("8 CLI determinism", c8_cli, secs(60)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(e) => ("FAIL", e),
        };
        failed += usize::from(status == "FAIL");
        println!(
            "{status} criterion {name} ({:.2}s / {}s): {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
