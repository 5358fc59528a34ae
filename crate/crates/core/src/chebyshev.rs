//! Chebyshev polynomials `T_n` and their Laurent images `U_n`, `V_n`.

use std::sync::{Mutex, OnceLock};

use crate::exactfield::{rat, RealSubElem, TowerElem};
use crate::rings::{LaurentPoly, RealPoly};

fn memo() -> &'static Mutex<Vec<RealPoly>> {
    static MEMO: OnceLock<Mutex<Vec<RealPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![RealPoly::one(), RealPoly::x()]))
}

/// `T_n`, the polynomial with `T_n(cos t) = cos(n t)`.
pub fn cheb_t(n: usize) -> RealPoly {
    let mut table = memo().lock().unwrap_or_else(|e| e.into_inner());
    let two_z = RealPoly::monomial(RealSubElem::from_int(2), 1);
    while table.len() <= n {
        let k = table.len();
        let next = &(&two_z * &table[k - 1]) - &table[k - 2];
        table.push(next);
    }
    table[n].clone()
}

/// `U_n = (z^n + z^-n) / 2`; `U_0 = 1`.
pub fn laurent_u(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let h = TowerElem::from_rat(rat(1, 2));
    LaurentPoly::from_terms([(n as i64, h.clone()), (-(n as i64), h)])
}

/// `V_n = (z^n - z^-n) / (2i)`; `V_0 = 0`.
pub fn laurent_v(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    // 1/(2i) = -i/2
    let c = TowerElem::i().scale(&rat(-1, 2));
    LaurentPoly::from_terms([(n as i64, c.clone()), (-(n as i64), -c)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{phi_map, TrigPoly};

    #[test]
    fn small_cases() {
        assert_eq!(cheb_t(0), RealPoly::one());
        assert_eq!(cheb_t(1), RealPoly::x());
        assert_eq!(cheb_t(2), RealPoly::from_ints(&[-1, 0, 2]));
        assert_eq!(cheb_t(3), RealPoly::from_ints(&[0, -3, 0, 4]));
        assert_eq!(TrigPoly::compose(&cheb_t(3), &TrigPoly::cos(1)), TrigPoly::cos(3));
    }

    #[test]
    fn laurent_forms() {
        assert_eq!(laurent_u(1), phi_map(&TrigPoly::cos(1)));
        assert_eq!(laurent_v(2), phi_map(&TrigPoly::sin(2)));
        assert_eq!(LaurentPoly::compose_outer(&cheb_t(2), &laurent_u(1)), laurent_u(2));
        assert_eq!(laurent_v(0), LaurentPoly::zero());
    }
}
