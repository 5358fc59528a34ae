mod common;

use common::{oracle, sweep};
use trigdecomp::ritt::{classify_solution, gen_family, verify_solution};

#[test]
fn generated_families_verify() {
    for (case, p) in sweep() {
        let f = gen_family(case, &p).unwrap_or_else(|e| panic!("{case} {p:?}: {e}"));
        assert!(verify_solution(&f.p1, &f.w1, &f.p2, &f.w2), "{case} {p:?}");
    }
}

#[test]
fn classifier_matches_oracle() {
    let mut bad = vec![];
    for (case, p) in sweep() {
        let f = gen_family(case, &p).unwrap();
        match classify_solution(&f.p1, &f.w1, &f.p2, &f.w2) {
            Ok(w) => {
                assert!(w.check(&f.p1, &f.w1, &f.p2, &f.w2));
                if w.case_label != oracle(case, &p) {
                    bad.push(format!(
                        "{case} n={} m={} r={} l={} s={} poly={:?}: got {} want {}",
                        p.n,
                        p.m,
                        p.r,
                        p.l,
                        p.s,
                        p.poly.as_ref().map(|x| x.to_string()),
                        w.case_label,
                        oracle(case, &p)
                    ));
                }
            }
            Err(e) => bad.push(format!(
                "{case} n={} m={} r={} l={} s={} poly={:?} shift={:?}: {e}",
                p.n,
                p.m,
                p.r,
                p.l,
                p.s,
                p.poly.as_ref().map(|x| x.to_string()),
                p.shift.as_ref().map(|(k, b)| (k, b.to_string()))
            )),
        }
    }
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
}
