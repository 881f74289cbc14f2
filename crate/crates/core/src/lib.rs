pub mod certify;
pub mod chebyshev;
pub mod error;
pub mod interval;
pub mod knots;
pub mod polyring;
pub mod riley;
pub mod selftest;

pub use error::{Error, Result};
