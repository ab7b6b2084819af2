pub mod cli;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod projective;
pub mod spinnet;
pub mod symmetry;
pub mod wigner;

pub use error::{Error, Result};
