//! Classifying solutions of P1 @ w1 = P2 @ w2 into the four families.

use trigdecomp::cli::expr::{parse_real_poly, parse_trig};
use trigdecomp::ritt::{classify_solution, engstrom_reduce, WitnessInner};

fn main() -> Result<(), trigdecomp::Error> {
    let quads = [
        ("z^2", "cos(t)", "1 - z^2", "sin(t)"),
        ("2*z^2 - 1", "cos(3*t)", "4*z^3 - 3*z", "cos(2*t)"),
        ("-(2*z^2 - 1)", "sin(t)", "2*z^2 - 1", "cos(t)"),
        ("z^2", "cos(t)*(sin(t) + 1)", "(1 - z^2)*(z + 1)^2", "sin(t)"),
        ("z^2 + 1", "cos(t)^3 + cos(t)", "(z^2 + 1) @ (z^3 + z)", "cos(t)"),
    ];
    for (p1, w1, p2, w2) in quads {
        let (p1, w1, p2, w2) = (
            parse_real_poly(p1)?,
            parse_trig(w1)?,
            parse_real_poly(p2)?,
            parse_trig(w2)?,
        );
        let w = classify_solution(&p1, &w1, &p2, &w2)?;
        println!("({p1}) @ ({w1}) = ({p2}) @ ({w2})");
        println!("  case {} (swapped: {}), U = {}", w.case_label, w.swapped, w.u);
        match &w.inner {
            WitnessInner::Common { w, .. } => println!("  common inner {w}"),
            WitnessInner::Shifted { k, b, .. } => println!("  inners at {k}*t + {b}"),
        }
        println!("  witness checks: {}", w.check(&p1, &w1, &p2, &w2));
    }

    // T4 @ T3 = T6 @ T2: the outers share a left factor of degree gcd(4, 6) = 2
    let t = trigdecomp::chebyshev::cheb_t;
    let red = engstrom_reduce(&t(4), &t(3), &t(6), &t(2))?;
    println!(
        "U = {}, reduced outers {} and {}, inners {} and {}",
        red.u, red.a, red.b, red.c, red.d
    );
    Ok(())
}
