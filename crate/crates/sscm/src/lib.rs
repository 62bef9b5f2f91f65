//! Statistical spatial channel model simulator for millimeter-wave links.

pub mod antenna;
#[cfg(doctest)]
pub mod book;
pub mod channel;
pub mod draw;
pub mod emit;
pub mod ensemble;
pub mod error;
pub mod params;
pub mod pathloss;
pub mod stats;

pub use error::{Error, Result};
