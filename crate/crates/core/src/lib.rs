//! Contact resolutions of projectivised nilpotent orbit closures.

pub mod error;
pub mod lie;
pub mod linalg;

pub use error::{Error, Result};
pub mod cones;
pub mod oracle;
pub mod report;
pub mod resolutions;
pub mod verify;
pub mod orbits;
