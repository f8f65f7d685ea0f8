//! Occupied-mode correlation kernels of the filled trap.
//!
//! A zero-temperature gas of N fermions doubly occupies the lowest
//! M = floor(N/2) oscillator modes; an odd N places one extra spin-up atom
//! in mode M. The two-point quantities that drive everything downstream are
//! the overlap kernel `F(xi, xi')` and the per-spin density `N(xi)` summed
//! over the occupied sea.

use crate::basis::OscillatorBasis;
use crate::{Error, Result};

/// Even or odd total particle number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Particle count N together with the occupied-level bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrapConfiguration {
    n: usize,
    m: usize,
    parity: Parity,
}

impl TrapConfiguration {
    /// Configuration for `n` particles (`n >= 2`); `M = n / 2` levels are
    /// doubly occupied and odd `n` adds one spin-up atom in mode `M`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParticleCount(n));
        }
        let m = n / 2;
        let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        Ok(Self { n, m, parity })
    }

    pub fn particle_count(&self) -> usize {
        self.n
    }

    /// Number of doubly occupied oscillator levels (modes `0..M`).
    pub fn occupied_levels(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Mode index of the unpaired atom, when the particle number is odd.
    pub fn extra_mode(&self) -> Option<usize> {
        match self.parity {
            Parity::Even => None,
            Parity::Odd => Some(self.m),
        }
    }

    pub(crate) fn basis(&self) -> OscillatorBasis {
        // n_max = m covers the sea and, for odd N, the extra mode.
        OscillatorBasis::new(self.m)
    }
}

/// Overlap kernel `F(xi, xi') = sum_{n < M} phi_n(xi) phi_n(xi')`.
///
/// The basis is real, so the conjugation in the defining sum is trivial.
pub fn kernel_f(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<f64> {
    let b = cfg.basis();
    let lx = b.eval_ladder(cfg.m - 1, xi)?;
    let lp = b.eval_ladder(cfg.m - 1, xi_p)?;
    Ok(dot(&lx, &lp))
}

/// Per-spin number density `N(xi) = sum_{n < M} phi_n(xi)^2`.
pub fn density(cfg: &TrapConfiguration, xi: f64) -> Result<f64> {
    let b = cfg.basis();
    let lx = b.eval_ladder(cfg.m - 1, xi)?;
    Ok(dot(&lx, &lx))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

/// The filled-sea kernels at a pair of positions: `F(xi, xi')` and the two
/// densities, evaluated with one basis pass per point.
///
/// At `xi == xi'` the three values coincide bitwise; in general they satisfy
/// the Cauchy-Schwarz bound `F^2 <= N_x N_xp`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairKernels {
    pub f: f64,
    pub n_x: f64,
    pub n_xp: f64,
}

impl PairKernels {
    pub fn evaluate(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<Self> {
        let b = cfg.basis();
        let lx = b.eval_ladder(cfg.m - 1, xi)?;
        let lp = b.eval_ladder(cfg.m - 1, xi_p)?;
        Ok(Self {
            f: dot(&lx, &lp),
            n_x: dot(&lx, &lx),
            n_xp: dot(&lp, &lp),
        })
    }
}

/// Correction data for the unpaired atom of an odd-N trap.
///
/// `sigma22` and `sigma23` are the position-symmetrized aggregate scalars
///
/// ```text
/// sigma22 = 2 N(xi) phi_M(xi')^2 + 2 N(xi') phi_M(xi)^2
/// sigma23 = -4 F(xi, xi') phi_M(xi) phi_M(xi')
/// ```
///
/// with `sigma11 = sigma22 + sigma23` and `sigma44 = 0`. The bare extra-mode
/// amplitudes `phi_extra_*` are carried alongside because the per-slot
/// density-matrix assembly in [`crate::density::rho_odd`] resolves the
/// aggregates back into their one-sided pieces (the unpaired atom enhances
/// the spin-up sector only).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddCorrection {
    pub sigma22: f64,
    pub sigma23: f64,
    pub phi_extra_x: f64,
    pub phi_extra_xp: f64,
}

impl OddCorrection {
    pub fn sigma11(&self) -> f64 {
        self.sigma22 + self.sigma23
    }

    pub fn sigma44(&self) -> f64 {
        0.0
    }
}

/// Odd-N correction ingredients at `(xi, xi')`.
///
/// The sea quantities are those of the M doubly occupied levels; the extra
/// atom sits in mode M.
pub fn odd_correction(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<OddCorrection> {
    if cfg.parity != Parity::Odd {
        return Err(Error::ParityMismatch { expected: Parity::Odd });
    }
    let k = PairKernels::evaluate(cfg, xi, xi_p)?;
    let b = cfg.basis();
    let phi_x = b.eval_mode(cfg.m, xi)?;
    let phi_xp = b.eval_mode(cfg.m, xi_p)?;
    Ok(OddCorrection {
        sigma22: 2.0 * k.n_x * phi_xp * phi_xp + 2.0 * k.n_xp * phi_x * phi_x,
        sigma23: -4.0 * k.f * phi_x * phi_xp,
        phi_extra_x: phi_x,
        phi_extra_xp: phi_xp,
    })
}
