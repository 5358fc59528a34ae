//! Exact moments of trigonometric and polynomial pairs.

use trigdecomp::cli::expr::{parse_real_poly, parse_trig};
use trigdecomp::moments::{poly_moments_vanish, trig_moments_vanish};

fn main() -> Result<(), trigdecomp::Error> {
    let pairs = [
        ("cos(t)", "sin(t)"),
        ("cos(2*t)", "cos(3*t) + sin(6*t)"),
        ("(z^2 + z) @ cos(3*t)", "cos(6*t) - cos(3*t)"),
    ];
    for (p, q) in pairs {
        let r = trig_moments_vanish(&parse_trig(p)?, &parse_trig(q)?, 8);
        let values: Vec<String> = r.moments.iter().map(ToString::to_string).collect();
        println!("p = {p}, q = {q}: [{}]", values.join(", "));
        match r.first_nonzero {
            Some(i) => println!("  first nonzero at i = {i}"),
            None => println!("  all vanish"),
        }
    }
    let w = parse_real_poly("z - z^2")?;
    let r = poly_moments_vanish(&w, &w, 10);
    println!("P = Q = {w}: all vanish = {}", r.all_vanish);
    let r = poly_moments_vanish(&parse_real_poly("z")?, &parse_real_poly("z^3")?, 3);
    println!(
        "P = z, Q = z^3: [{}]",
        r.moments.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}
