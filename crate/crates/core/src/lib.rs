//! SLOCC-invariant entanglement measures for delocalized fermions under a
//! particle-number superselection rule.

pub mod checks;
pub mod cli;
pub mod error;
pub mod fock;
pub mod hubbard;
pub mod invariants;
pub mod maxent;
pub mod omega;
pub mod slocc;
pub mod statefile;

pub use error::{Error, Result};
