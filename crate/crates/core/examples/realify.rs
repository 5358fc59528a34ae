//! Passing from a complex decomposition of a self-reciprocal Laurent
//! polynomial to a real one, and the equal-degree alignment.

use trigdecomp::cli::expr::{parse_laurent, parse_poly, parse_real_poly};
use trigdecomp::decompose::{align_equal_degree, descend_real, realify, Alignment};
use trigdecomp::exactfield::TowerElem;
use trigdecomp::rings::{phi_inverse, AffineMap, LaurentPoly};

fn main() -> Result<(), trigdecomp::Error> {
    // twist a real decomposition by a complex affine map
    let outer = parse_poly("z^3 - 3*z")?;
    let inner = parse_laurent("z + z^-1 + 1")?;
    let mu = AffineMap::new(TowerElem::from_int(2) + TowerElem::i(), TowerElem::i())?;
    let (a, l1) = (mu.inverse().precompose(&outer), mu.apply_laurent(&inner));
    println!("twisted: ({a}) @ ({l1})");
    let r = realify(&a, &l1)?;
    println!("real form: ({}) @ ({})", r.outer, r.inner);
    println!("as trig: ({}) @ ({})", r.outer, phi_inverse(&r.inner)?);
    println!(
        "same composite: {}",
        LaurentPoly::compose_outer(&r.outer, &r.inner) == LaurentPoly::compose_outer(&a, &l1)
    );

    let (a, l1) = (parse_poly("z^2 - 2")?, parse_laurent("z + z^-1")?);
    let (b, l2) = (parse_poly("z^2 + 2")?, parse_laurent("z - z^-1")?);
    match align_equal_degree(&a, &l1, &b, &l2)? {
        Alignment::Affine(w) => println!("affinely related by {w}"),
        Alignment::NormalForm { r, a, nu, .. } => println!("normal form r = {r}, a = {a}, nu = {nu}"),
    }

    let p = parse_real_poly("z^6")?;
    let b = parse_poly("z^2 + i")?;
    let (ar, br) = descend_real(&p, &b)?;
    println!("z^6 = ({ar}) @ ({br})");
    Ok(())
}
