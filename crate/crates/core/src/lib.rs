//! Exact analysis of combinatorial (n_k) point-line configurations.

pub mod construction;
pub mod incidence;
pub mod polyalg;
pub mod realizer;
pub mod subconfig;
pub mod symmetry;

pub use incidence::{Claim, ConfigError, Configuration, Element};
