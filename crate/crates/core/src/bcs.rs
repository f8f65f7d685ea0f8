//! Reduced BCS pairing: level ladder, self-consistent gap, Bogoliubov
//! coefficients, and the position-space kernels `f` and `v^2`.
//!
//! The model lives on M doubly degenerate levels with mean spacing `d` and
//! dimensionless coupling `lambda`. Levels are measured from the Fermi
//! energy and placed symmetrically (half filling), the standard reduced-BCS
//! convention; with that choice the Cooper-pair number is exactly `Q = M/2`.

use alloc::vec::Vec;

use libm::sqrt;

use crate::basis::OscillatorBasis;
use crate::{Error, Result};

/// Equally spaced ladder `eps_j = d (j - (M+1)/2)`, `j = 1..=M`: symmetric
/// about zero with spacing exactly `d`.
pub fn build_levels(m: usize, d: f64) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one level"));
    }
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::InvalidParameter("level spacing must be positive"));
    }
    let mid = (m as f64 + 1.0) / 2.0;
    Ok((1..=m).map(|j| d * (j as f64 - mid)).collect())
}

/// Left-hand side of the self-consistency condition minus one:
/// `residual(delta) = lambda d sum_j 1 / (2 sqrt(eps_j^2 + delta^2)) - 1`.
pub fn gap_residual(levels: &[f64], lambda: f64, d: f64, delta: f64) -> f64 {
    let mut s = 0.0;
    for &e in levels {
        s += 0.5 / sqrt(e * e + delta * delta);
    }
    lambda * d * s - 1.0
}

/// Solves the gap equation by bracketing and bisection on the strictly
/// decreasing residual; returns `0.0` when the coupling is too weak for a
/// solution (only possible when no level sits exactly at the Fermi energy).
///
/// `tol` bounds the residual of the returned gap.
pub fn solve_gap(levels: &[f64], lambda: f64, d: f64, tol: f64) -> Result<f64> {
    if levels.is_empty() {
        return Err(Error::InvalidParameter("need at least one level"));
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidParameter("coupling must be positive"));
    }
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::InvalidParameter("level spacing must be positive"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive"));
    }

    let at_zero = if levels.contains(&0.0) {
        f64::INFINITY
    } else {
        gap_residual(levels, lambda, d, 0.0)
    };
    if at_zero < 0.0 {
        return Ok(0.0);
    }
    if at_zero == 0.0 {
        return Ok(0.0);
    }

    let mut hi = d;
    let mut grow = 0;
    while gap_residual(levels, lambda, d, hi) > 0.0 {
        hi *= 2.0;
        grow += 1;
        if grow > 200 {
            return Err(Error::NoConvergence);
        }
    }
    let mut lo = 0.0;
    let mut mid = 0.5 * hi;
    for _ in 0..300 {
        mid = 0.5 * (lo + hi);
        let r = gap_residual(levels, lambda, d, mid);
        if r.abs() < tol {
            return Ok(mid);
        }
        if r > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // 300 halvings shrink the bracket far below f64 resolution.
    if gap_residual(levels, lambda, d, mid).abs() < tol {
        Ok(mid)
    } else {
        Err(Error::NoConvergence)
    }
}

/// Bogoliubov amplitudes and the pair number:
/// `v_j^2 = (1 - eps_j / E_j) / 2`, `u_j^2 = (1 + eps_j / E_j) / 2` with
/// `E_j = sqrt(eps_j^2 + delta^2)`, both roots nonnegative, `Q = sum v_j^2`.
pub fn bogoliubov(levels: &[f64], delta: f64) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    if !(delta.is_finite() && delta >= 0.0) {
        return Err(Error::InvalidParameter("gap must be nonnegative"));
    }
    let mut u = Vec::with_capacity(levels.len());
    let mut v = Vec::with_capacity(levels.len());
    let mut q = 0.0;
    for (idx, &e) in levels.iter().enumerate() {
        let energy = sqrt(e * e + delta * delta);
        if energy == 0.0 {
            return Err(Error::DegenerateLevel { index: idx });
        }
        let t = e / energy;
        let v2 = 0.5 * (1.0 - t);
        let u2 = 0.5 * (1.0 + t);
        u.push(sqrt(u2));
        v.push(sqrt(v2));
        q += v2;
    }
    Ok((u, v, q))
}

/// A solved reduced-BCS model: ladder, gap, amplitudes and pair number.
#[derive(Debug, Clone, PartialEq)]
pub struct BcsModel {
    m: usize,
    d: f64,
    lambda: f64,
    levels: Vec<f64>,
    delta: f64,
    u: Vec<f64>,
    v: Vec<f64>,
    q: f64,
}

impl BcsModel {
    /// Default residual tolerance for the gap solve.
    pub const DEFAULT_TOL: f64 = 1e-12;

    /// Builds the symmetric ladder, solves the gap to `tol`, forms the
    /// Bogoliubov amplitudes and checks the algebraic identities
    /// (`u^2 + v^2 = 1`, `4 u^2 v^2 = delta^2 / (eps^2 + delta^2)`,
    /// residual, `0 < Q < M`) before returning.
    pub fn solve(m: usize, d: f64, lambda: f64, tol: f64) -> Result<Self> {
        let levels = build_levels(m, d)?;
        let delta = solve_gap(&levels, lambda, d, tol)?;
        let (u, v, q) = bogoliubov(&levels, delta)?;
        let model = Self { m, d, lambda, levels, delta, u, v, q };
        model.validate()?;
        Ok(model)
    }

    pub fn solve_default(m: usize, d: f64, lambda: f64) -> Result<Self> {
        Self::solve(m, d, lambda, Self::DEFAULT_TOL)
    }

    fn validate(&self) -> Result<()> {
        for j in 0..self.m {
            let (u2, v2) = (self.u[j] * self.u[j], self.v[j] * self.v[j]);
            if (u2 + v2 - 1.0).abs() > 1e-12 {
                return Err(Error::NoConvergence);
            }
            let e2 = self.levels[j] * self.levels[j];
            let expect = self.delta * self.delta / (e2 + self.delta * self.delta);
            if (4.0 * u2 * v2 - expect).abs() > 1e-10 {
                return Err(Error::NoConvergence);
            }
        }
        if self.delta > 0.0
            && gap_residual(&self.levels, self.lambda, self.d, self.delta).abs() > 1e-10
        {
            return Err(Error::NoConvergence);
        }
        if !(self.q > 0.0 && self.q < self.m as f64) {
            return Err(Error::NoConvergence);
        }
        Ok(())
    }

    pub fn level_count(&self) -> usize {
        self.m
    }

    pub fn spacing(&self) -> f64 {
        self.d
    }

    pub fn coupling(&self) -> f64 {
        self.lambda
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    /// Cooper pair number `Q = sum_j v_j^2`.
    pub fn pair_number(&self) -> f64 {
        self.q
    }

    /// Level occupations `v_j^2`.
    pub fn occupations(&self) -> Vec<f64> {
        self.v.iter().map(|v| v * v).collect()
    }
}

/// Assignment of ladder levels to oscillator modes for the position-space
/// kernels. Level `j` (1-based) maps to entry `j - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelModeMap(Vec<usize>);

impl LevelModeMap {
    /// The lowest-modes map: level `j` occupies oscillator mode `j - 1`,
    /// consistent with the noninteracting sea.
    pub fn lowest(m: usize) -> Self {
        Self((0..m).collect())
    }

    /// An explicit assignment; modes must be distinct.
    pub fn new(modes: Vec<usize>) -> Result<Self> {
        for (i, a) in modes.iter().enumerate() {
            if modes[..i].contains(a) {
                return Err(Error::InvalidParameter("mode map must be injective"));
            }
        }
        Ok(Self(modes))
    }

    pub fn modes(&self) -> &[usize] {
        &self.0
    }
}

/// Pairing kernels at a pair of positions:
/// `f = sum_j phi(xi) phi(xi')` and `v^2 = sum_j v_j^2 phi(xi) phi(xi')`
/// over the mapped modes, plus their product `Re(f v^2)` (real basis).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcsKernels {
    pub f: f64,
    pub v2: f64,
    pub re_fv2: f64,
}

/// Kernels from explicit occupations `v_j^2` (one per level).
pub fn kernels_from_occupations(
    occupations: &[f64],
    map: &LevelModeMap,
    xi: f64,
    xi_p: f64,
) -> Result<BcsKernels> {
    if occupations.len() != map.modes().len() {
        return Err(Error::InvalidParameter("one occupation per mapped level"));
    }
    let n_max = map.modes().iter().copied().max().unwrap_or(0);
    let b = OscillatorBasis::new(n_max);
    let lx = b.eval_ladder(n_max, xi)?;
    let lp = b.eval_ladder(n_max, xi_p)?;
    let mut f = 0.0;
    let mut v2 = 0.0;
    for (&occ, &mode) in occupations.iter().zip(map.modes()) {
        let overlap = lx[mode] * lp[mode];
        f += overlap;
        v2 += occ * overlap;
    }
    Ok(BcsKernels { f, v2, re_fv2: f * v2 })
}

/// Kernels of a solved model.
pub fn bcs_kernels(
    model: &BcsModel,
    map: &LevelModeMap,
    xi: f64,
    xi_p: f64,
) -> Result<BcsKernels> {
    kernels_from_occupations(&model.occupations(), map, xi, xi_p)
}

/// The uniform-overlap thresholds: concurrence vanishes at
/// `|y| = sqrt(Q/(2M))` and saturates at `|y| = sqrt(Q/M)`.
pub fn uniform_overlap_threshold(q: f64, m: usize) -> Result<(f64, f64)> {
    if m == 0 || !(q > 0.0 && q <= m as f64) {
        return Err(Error::InvalidParameter("need 0 < Q <= M"));
    }
    let ratio = q / m as f64;
    Ok((sqrt(0.5 * ratio), sqrt(ratio)))
}
