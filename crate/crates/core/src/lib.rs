pub mod error;
pub mod identities;
pub mod numseries;
pub mod quad;
pub mod specfun;
pub mod xikernel;
pub mod zeros;

pub use error::{Error, Result};
pub use specfun::{Complex64, ComplexValue};
