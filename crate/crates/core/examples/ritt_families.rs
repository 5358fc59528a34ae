//! Members of each solution family of P1 @ w1 = P2 @ w2.

use trigdecomp::cli::expr::parse_real_poly;
use trigdecomp::exactfield::Angle;
use trigdecomp::ritt::{gen_family, gen_laurent_family, verify_solution, CaseLabel, FamilyParams, LaurentParams};

fn main() -> Result<(), trigdecomp::Error> {
    let cases = [
        (
            CaseLabel::A,
            FamilyParams {
                n: 3,
                r: 1,
                poly: Some(parse_real_poly("z^2 + 1")?),
                ..Default::default()
            },
        ),
        (
            CaseLabel::B,
            FamilyParams {
                n: 2,
                m: 5,
                ..Default::default()
            },
        ),
        (
            CaseLabel::C,
            FamilyParams {
                poly: Some(parse_real_poly("z - 2")?),
                shift: Some((2, Angle::pi_twelfths(2))),
                ..Default::default()
            },
        ),
        (
            CaseLabel::D,
            FamilyParams {
                n: 1,
                m: 2,
                l: 3,
                s: 0,
                outer: Some(parse_real_poly("z^2 + z")?),
                ..Default::default()
            },
        ),
    ];
    for (case, params) in cases {
        let f = gen_family(case, &params)?;
        println!("case {case}:");
        println!("  ({}) @ ({})", f.p1, f.w1);
        println!("  ({}) @ ({})", f.p2, f.w2);
        println!("  holds: {}", verify_solution(&f.p1, &f.w1, &f.p2, &f.w2));
    }

    for case in 1..=5 {
        let params = LaurentParams {
            n: 2,
            m: 3,
            r: 1,
            l: 2,
            ..Default::default()
        };
        let f = gen_laurent_family(case, &params)?;
        println!(
            "Laurent case {case}: ({}) @ ({})  =  ({}) @ ({})",
            f.p1, f.w1, f.p2, f.w2
        );
        if let Some(eps) = f.eps {
            println!("  eps = {eps}");
        }
    }
    Ok(())
}
