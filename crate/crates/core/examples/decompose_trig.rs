//! All decompositions of a trigonometric, Laurent and ordinary polynomial.

use trigdecomp::cli::expr::{parse_laurent, parse_poly, parse_trig};
use trigdecomp::decompose::{enumerate_decompositions, enumerate_polynomial, trig_decompose, DEFAULT_CAP};

fn main() -> Result<(), trigdecomp::Error> {
    let p = parse_trig("cos(6*t) + sin(3*t)")?;
    println!("p = {p}");
    for d in trig_decompose(&p, DEFAULT_CAP)? {
        println!("  {}: {d}", d.kind.as_str());
    }

    let l = parse_laurent("(z^2 + 1) @ (z + 2*z^-1)")?;
    println!("L = {l}");
    for d in enumerate_decompositions(&l, DEFAULT_CAP)? {
        println!("  {}: {d}  [adjuster {}]", d.kind.as_str(), d.adjuster);
    }

    let f = parse_poly("(z^2 + 1)^3 @ (z^2 - z)")?;
    println!("f = {f}");
    for d in enumerate_polynomial(&f, DEFAULT_CAP)? {
        println!("  {}: {d}", d.kind.as_str());
    }
    Ok(())
}
