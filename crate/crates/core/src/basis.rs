//! Normalized one-dimensional harmonic-oscillator eigenfunctions.
//!
//! Everything is evaluated through the normalized three-term recurrence
//!
//! ```text
//! phi_0(xi)     = pi^(-1/4) exp(-xi^2 / 2)
//! phi_1(xi)     = sqrt(2) xi phi_0(xi)
//! phi_{n+1}(xi) = sqrt(2/(n+1)) xi phi_n(xi) - sqrt(n/(n+1)) phi_{n-1}(xi)
//! ```
//!
//! which carries the Gaussian factor along and never forms a raw Hermite
//! polynomial, so no factorial normalization and no overflow for any mode
//! index used here.

use alloc::vec::Vec;

use core::f64::consts::PI;
use libm::{exp, sqrt};

use crate::{Error, Result};

/// Evaluator for `phi_0 ... phi_{n_max}` at dimensionless positions
/// `xi = alpha * x` (the scale `alpha = sqrt(m omega / hbar)` is folded in,
/// so internally `alpha == 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OscillatorBasis {
    n_max: usize,
}

impl OscillatorBasis {
    pub fn new(n_max: usize) -> Self {
        Self { n_max }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize, xi: f64) -> Result<()> {
        if n > self.n_max {
            return Err(Error::ModeOutOfRange { n, n_max: self.n_max });
        }
        if !xi.is_finite() {
            return Err(Error::NonFinitePosition);
        }
        Ok(())
    }

    /// Value of `phi_n(xi)`.
    ///
    /// For |xi| large enough that `exp(-xi^2/2)` underflows (|xi| beyond
    /// roughly 38; every downstream product is already subnormal near
    /// |xi| ~ 27) the result is an exact `0.0`, not an error.
    pub fn eval_mode(&self, n: usize, xi: f64) -> Result<f64> {
        self.check(n, xi)?;
        let mut prev = 0.0;
        let mut cur = ground(xi);
        for k in 0..n {
            let next = step(k, xi, cur, prev);
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// `[phi_0(xi), ..., phi_{n_top}(xi)]` in a single recurrence pass.
    ///
    /// Element `k` is bitwise identical to `eval_mode(k, xi)`.
    pub fn eval_ladder(&self, n_top: usize, xi: f64) -> Result<Vec<f64>> {
        self.check(n_top, xi)?;
        let mut out = Vec::with_capacity(n_top + 1);
        let mut prev = 0.0;
        let mut cur = ground(xi);
        out.push(cur);
        for k in 0..n_top {
            let next = step(k, xi, cur, prev);
            prev = cur;
            cur = next;
            out.push(cur);
        }
        Ok(out)
    }
}

#[inline]
fn ground(xi: f64) -> f64 {
    exp(-0.5 * xi * xi) / sqrt(sqrt(PI))
}

#[inline]
fn step(k: usize, xi: f64, cur: f64, prev: f64) -> f64 {
    let kp1 = (k + 1) as f64;
    sqrt(2.0 / kp1) * xi * cur - sqrt(k as f64 / kp1) * prev
}
