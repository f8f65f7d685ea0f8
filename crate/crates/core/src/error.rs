use core::fmt;

use crate::trap::Parity;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Mode index beyond the basis limit.
    ModeOutOfRange { n: usize, n_max: usize },
    /// A position argument was NaN or infinite.
    NonFinitePosition,
    /// Particle count that does not describe a filled trap (needs N >= 2).
    InvalidParticleCount(usize),
    /// The operation requires the other particle-number parity.
    ParityMismatch { expected: Parity },
    /// Both positions are so deep in the Gaussian tail that the normalizer
    /// underflows; the state is numerically undefined there.
    DegeneratePoint,
    /// Pairing kernels with |Re(f v^2)| > Q^2 would break positivity.
    InvalidKernel { q_sq: f64, re_fv2: f64 },
    /// A matrix that is not a valid density matrix (asymmetric, trace far
    /// from one, or negative beyond tolerance).
    InvalidState,
    /// A scalar argument outside its documented domain.
    InvalidParameter(&'static str),
    /// Zero quasiparticle energy: a level at the Fermi surface with a closed
    /// gap leaves the occupation amplitudes undetermined.
    DegenerateLevel { index: usize },
    /// The gap solver exhausted its iteration budget.
    NoConvergence,
    /// Brute-force construction refused above its level-count guard.
    BruteForceLimit { m: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModeOutOfRange { n, n_max } => {
                write!(f, "mode index {n} exceeds basis limit {n_max}")
            }
            Error::NonFinitePosition => write!(f, "position must be finite"),
            Error::InvalidParticleCount(n) => {
                write!(f, "particle count {n} is not a valid trap filling (need N >= 2)")
            }
            Error::ParityMismatch { expected } => {
                write!(f, "operation requires {expected:?} particle number")
            }
            Error::DegeneratePoint => {
                write!(f, "degenerate point: normalizer underflows in the Gaussian tail")
            }
            Error::InvalidKernel { q_sq, re_fv2 } => write!(
                f,
                "pairing kernels break positivity: |Re(f v^2)| = {} exceeds Q^2 = {}",
                re_fv2.abs(),
                q_sq
            ),
            Error::InvalidState => write!(f, "matrix is not a valid two-spin density matrix"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::DegenerateLevel { index } => {
                write!(f, "level {index} sits at the Fermi surface with a closed gap")
            }
            Error::NoConvergence => write!(f, "iteration budget exhausted before tolerance"),
            Error::BruteForceLimit { m, limit } => write!(
                f,
                "brute-force construction limited to {limit} occupied levels, got {m}"
            ),
        }
    }
}

impl core::error::Error for Error {}
