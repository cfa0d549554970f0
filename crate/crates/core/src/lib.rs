//! Lamp-lighting games over GF(2).
//!
//! Every vertex of a (possibly directed, possibly looped) graph carries a
//! button and a lamp; pressing a button toggles the lamps at the heads of its
//! out-arcs. This crate answers the usual questions about such games:
//! which configurations can be lit, how to light everything constructively,
//! how many lamps can be lit at most, whether every configuration is
//! reachable, and how few lamps a nonempty pressing can leave lit on the
//! infinite grid.

pub mod cli;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod matchings;
pub mod mikado;
pub mod solver;

pub use error::{Error, Result};
