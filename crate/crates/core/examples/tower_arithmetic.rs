//! Arithmetic in Q(i, sqrt2, sqrt3), exact roots and angles at multiples of pi/12.

use trigdecomp::exactfield::roots::{nth_roots, roots_of_unity, sqrt_all};
use trigdecomp::exactfield::{rat, Angle, RealSubElem, TowerElem};

fn main() {
    let s2 = TowerElem::from_real(RealSubElem::sqrt2());
    let s3 = TowerElem::from_real(RealSubElem::sqrt3());
    let x = TowerElem::from_rat(rat(1, 2)) + TowerElem::i() * s3.clone();
    println!("x = {x}");
    println!("x * conj(x) = {}", x.clone() * x.conj());
    println!("1 / x = {}", x.inv().expect("nonzero"));
    println!("sqrt2 * sqrt3 = {}", s2 * s3);

    for r in sqrt_all(&TowerElem::from_int(-6)) {
        println!("sqrt(-6) candidate: {r}");
    }
    println!(
        "cube roots of -1: {:?}",
        nth_roots(&TowerElem::from_int(-1), 3)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("24th roots of unity in the field: {}", roots_of_unity().len());

    let b = Angle::pi_twelfths(5);
    println!("cos(5pi/12) = {}, sin(5pi/12) = {}", b.cos(), b.sin());
    println!("e^(i 5pi/12) = {}", b.unit());
    match Angle::from_pi_fraction(1, 5) {
        Ok(a) => println!("pi/5 = {a}"),
        Err(e) => println!("pi/5 rejected: {e}"),
    }
}
