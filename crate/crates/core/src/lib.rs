//! Multi-variable Alexander polynomial of a plane curve singularity, computed
//! in exact arithmetic by three independent routes:
//!
//! * from an embedded resolution ([`resolution::en_alexander`]),
//! * as the Poincaré polynomial of the multi-index filtration defined by the
//!   branch valuations ([`filtration::poincare_poly`]),
//! * as the generating series of Euler characteristics of the projectivized
//!   fibers of the extended semigroup ([`filtration::fiber_series`]).
//!
//! [`verify`] runs the cross checks between them.

pub mod analysis;
pub mod cli;
pub mod corpus;
pub mod curve;
pub mod error;
pub mod exactmath;
pub mod filtration;
pub mod io;
pub mod resolution;
pub mod semigroup;
pub mod verify;

pub use analysis::{Analysis, AnalysisOptions};
pub use error::{Error, Result};
