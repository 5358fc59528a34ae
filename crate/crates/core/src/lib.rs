pub mod chebyshev;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod exactfield;
pub mod moments;
pub mod rings;
pub mod ritt;

pub use error::{Error, Result};
