//! Spin entanglement of two fermions drawn from a harmonically trapped Fermi
//! gas.
//!
//! The crate evaluates the occupied-mode correlation kernels of the
//! noninteracting trapped gas (even and odd particle number), assembles the
//! 4x4 two-spin reduced density matrices, quantifies their entanglement
//! (Wootters concurrence and the Peres-Horodecki partial-transpose test),
//! and models attractive pairing through the reduced BCS Hamiltonian with a
//! self-consistent gap.
//!
//! All positions are dimensionless oscillator units `xi = alpha * x` with
//! `alpha = sqrt(m omega / hbar)`; no dimensional constant enters any code
//! path. The crate is `no_std` (allocation only); IO, sweeps and the CLI
//! live in the companion `fermigas` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod basis;
pub mod bcs;
pub mod density;
pub mod entanglement;
mod error;
pub mod fock;
mod mat4;
pub mod trap;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
