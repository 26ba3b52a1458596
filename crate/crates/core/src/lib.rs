pub mod error;
pub mod cartan;
pub mod cli;
pub mod coxeter;
pub mod diagram;
pub mod exactmath;
pub mod mckay;
pub mod regularity;
pub mod spectral;

pub use error::{Error, Result};
