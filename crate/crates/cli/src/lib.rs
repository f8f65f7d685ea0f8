//! Sweeps, entanglement-distance search and CSV output for the
//! trapped-Fermi-gas entanglement library, plus the `fermigas` CLI on top.

pub mod distance;
pub mod grid;
pub mod sweep;
pub mod table;

pub use distance::{entanglement_distance, DistanceError, DistanceResult};
pub use grid::GridSpec;
pub use table::{emit_csv, Cell, Table};
