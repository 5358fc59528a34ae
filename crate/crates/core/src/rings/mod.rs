//! Laurent polynomials, trigonometric polynomials, dense polynomials and the
//! maps between them.

mod affine;
mod laurent;
mod maps;
mod outer;
mod poly;
mod trig;

pub use affine::AffineMap;
pub use laurent::LaurentPoly;
pub use maps::{phi_inverse, phi_map, psi_map};
pub use outer::OuterRational;
pub use poly::{ComplexPoly, Polynomial, RealPoly};
pub use trig::TrigPoly;

pub(crate) use poly::write_sum;
