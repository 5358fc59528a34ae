//! Chebyshev polynomials and their Laurent images.

use trigdecomp::chebyshev::{cheb_t, laurent_u, laurent_v};
use trigdecomp::rings::{phi_map, LaurentPoly, TrigPoly};

fn main() {
    for n in 0..=5 {
        println!("T_{n} = {}", cheb_t(n));
    }
    let (t3, t4) = (cheb_t(3), cheb_t(4));
    println!("T_3 @ T_4 = T_12: {}", t3.compose(&t4) == cheb_t(12));
    println!("T_4 @ T_3 = T_3 @ T_4: {}", t4.compose(&t3) == t3.compose(&t4));
    println!("T_5 @ U_1 = {}", LaurentPoly::compose_outer(&cheb_t(5), &laurent_u(1)));
    println!("U_5 = {}", laurent_u(5));
    println!("phi(sin 3t) = V_3: {}", phi_map(&TrigPoly::sin(3)) == laurent_v(3));
    println!("T_6(cos t) = {}", TrigPoly::compose(&cheb_t(6), &TrigPoly::cos(1)));
}
