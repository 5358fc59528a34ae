//! The ring map cos t -> (z + 1/z)/2, sin t -> (z - 1/z)/(2i) and its inverse.

use trigdecomp::cli::expr::parse_trig;
use trigdecomp::rings::{phi_inverse, phi_map, TrigPoly};

fn main() -> Result<(), trigdecomp::Error> {
    let p = parse_trig("3*cos(2*t) - sin(t) + 1/2")?;
    let q = parse_trig("cos(t)*sin(t)")?;
    let (lp, lq) = (phi_map(&p), phi_map(&q));
    println!("phi(p) = {lp}");
    println!("phi(q) = {lq}");
    println!("phi(p*q) = phi(p)*phi(q): {}", phi_map(&(&p * &q)) == &lp * &lq);
    println!("phi(p+q) = phi(p)+phi(q): {}", phi_map(&(&p + &q)) == &lp + &lq);
    println!("phi^-1(phi(p)) = {}", phi_inverse(&lp)?);
    println!("self-reciprocal: {}", lp.is_self_reciprocal());

    let shifted = p.shift(2, &trigdecomp::exactfield::Angle::pi_twelfths(3));
    println!("p(2t + pi/4) = {shifted}");
    println!(
        "cos(t)^2 + sin(t)^2 = {}",
        &TrigPoly::cos(1).pow(2) + &TrigPoly::sin(1).pow(2)
    );
    Ok(())
}
