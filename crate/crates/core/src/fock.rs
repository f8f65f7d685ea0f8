//! Brute-force Fock-space cross-checks.
//!
//! Everything here re-derives the two-spin states from first principles at
//! small particle number: field operators are expanded over the occupied
//! modes, applied to the ground-state determinant by explicit
//! anticommutation, and the density matrix falls out as a Gram matrix of the
//! resulting vectors. No closed-form kernel enters, so agreement with
//! [`crate::density`] is a genuine two-route check. The concurrence
//! cross-check below likewise avoids the Jacobi eigensolver used by
//! [`crate::entanglement::wootters_concurrence`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use libm::sqrt;

use crate::density::TwoSpinDensityMatrix;
use crate::entanglement::{Concurrence, SPIN_FLIP};
use crate::trap::{Parity, TrapConfiguration};
use crate::{Error, Result};

/// Largest doubly occupied level count the expansion will attempt.
pub const LEVEL_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

/// Linear ordering of `(mode, spin)` orbitals; it fixes the sign convention
/// of the determinant bookkeeping and must not affect any expectation value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitalOrder {
    /// Orbital id `2 * mode + spin`.
    ModeMajor,
    /// Orbital id `mode + spin * n_modes`.
    SpinMajor { n_modes: usize },
}

impl OrbitalOrder {
    fn id(&self, mode: usize, spin: Spin) -> u32 {
        let s = match spin {
            Spin::Up => 0,
            Spin::Down => 1,
        };
        match self {
            OrbitalOrder::ModeMajor => (2 * mode + s) as u32,
            OrbitalOrder::SpinMajor { n_modes } => (mode + s * n_modes) as u32,
        }
    }
}

/// A determinant expansion: occupation bitmask over orbital ids mapped to a
/// real amplitude. Occupations are 0/1 by construction (Pauli exclusion);
/// the bit order realizes the ordered mode list of the chosen
/// [`OrbitalOrder`].
type FockVector = BTreeMap<u32, f64>;

fn annihilate(mask: u32, id: u32) -> Option<(u32, f64)> {
    let bit = 1u32 << id;
    if mask & bit == 0 {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    let sign = if below % 2 == 0 { 1.0 } else { -1.0 };
    Some((mask & !bit, sign))
}

/// Applies the field operator `psi_spin(xi) = sum_n phi_n(xi) b_{n,spin}`
/// truncated to the given amplitudes (index = mode).
fn apply_field(vec: &FockVector, phis: &[f64], spin: Spin, order: OrbitalOrder) -> FockVector {
    let mut out = FockVector::new();
    for (&mask, &amp) in vec {
        for (mode, &phi) in phis.iter().enumerate() {
            if phi == 0.0 {
                continue;
            }
            if let Some((rest, sign)) = annihilate(mask, order.id(mode, spin)) {
                *out.entry(rest).or_insert(0.0) += amp * sign * phi;
            }
        }
    }
    out
}

fn inner(a: &FockVector, b: &FockVector) -> f64 {
    let mut s = 0.0;
    for (mask, amp) in a {
        if let Some(other) = b.get(mask) {
            s += amp * other;
        }
    }
    s
}

/// Brute-force two-spin state with both the raw four-operator expectations
/// and their normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct FockRho {
    /// `<psi^+_s(xi) psi^+_s'(xi') psi_t'(xi') psi_t(xi)>` at
    /// `[2s + s'][2t + t']`.
    pub unnormalized: [[f64; 4]; 4],
    pub normalized: TwoSpinDensityMatrix,
}

/// Expands the ground-state determinant exactly and evaluates all sixteen
/// four-operator expectations at `(xi, xi')`.
///
/// The field-operator expansion covers the occupied modes (`0..M`, plus
/// mode `M` for odd N) and `extra_modes` beyond them; the extra terms
/// annihilate the ground state, so any `extra_modes >= 0` gives the same
/// result and the default truncation is exact rather than approximate.
pub fn fock_rho_with(
    cfg: &TrapConfiguration,
    xi: f64,
    xi_p: f64,
    order: OrbitalOrder,
    extra_modes: usize,
) -> Result<FockRho> {
    let m = cfg.occupied_levels();
    if m > LEVEL_LIMIT {
        return Err(Error::BruteForceLimit { m, limit: LEVEL_LIMIT });
    }

    let odd = cfg.parity() == Parity::Odd;
    let n_modes = m + usize::from(odd) + extra_modes;
    let basis = crate::basis::OscillatorBasis::new(n_modes.max(1));
    let top = n_modes.saturating_sub(1);
    let phis_x = basis.eval_ladder(top, xi)?;
    let phis_xp = basis.eval_ladder(top, xi_p)?;

    // Ground state: modes 0..M doubly occupied, mode M spin-up when odd.
    let mut ground_mask = 0u32;
    for mode in 0..m {
        ground_mask |= 1 << order.id(mode, Spin::Up);
        ground_mask |= 1 << order.id(mode, Spin::Down);
    }
    if odd {
        ground_mask |= 1 << order.id(m, Spin::Up);
    }
    let mut ground = FockVector::new();
    ground.insert(ground_mask, 1.0);

    // v[2s + s'] = psi_{s'}(xi') psi_s(xi) |ground>
    let spins = [Spin::Up, Spin::Down];
    let mut vectors: Vec<FockVector> = Vec::with_capacity(4);
    for &s in &spins {
        let once = apply_field(&ground, &phis_x, s, order);
        for &sp in &spins {
            vectors.push(apply_field(&once, &phis_xp, sp, order));
        }
    }

    let mut raw = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            raw[i][j] = inner(&vectors[i], &vectors[j]);
        }
    }
    let trace = raw[0][0] + raw[1][1] + raw[2][2] + raw[3][3];
    if trace <= 1e-300 {
        return Err(Error::DegeneratePoint);
    }
    let mut normalized = raw;
    for row in &mut normalized {
        for v in row {
            *v /= trace;
        }
    }
    Ok(FockRho {
        unnormalized: raw,
        normalized: TwoSpinDensityMatrix::new(normalized)?,
    })
}

/// [`fock_rho_with`] under the default mode-major ordering and exact
/// truncation.
pub fn fock_rho(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<FockRho> {
    fock_rho_with(cfg, xi, xi_p, OrbitalOrder::ModeMajor, 0)
}

/// Wootters concurrence of an X-structured state recomputed along an
/// independent spectral route: the product matrix `rho S rho S` is formed
/// explicitly and its eigenvalues extracted block by block with the 2x2
/// quadratic formula (no Jacobi sweeps).
pub fn xstate_concurrence_bruteforce(rho: &TwoSpinDensityMatrix) -> Result<Concurrence> {
    if !rho.is_x_structured(1e-12) {
        return Err(Error::InvalidState);
    }
    let r = rho.entries();
    let mut rs = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += r[i][k] * SPIN_FLIP[k][j];
            }
            rs[i][j] = s;
        }
    }
    let mut product = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for k in 0..4 {
                s += rs[i][k] * rs[k][j];
            }
            product[i][j] = s;
        }
    }
    // X structure makes the product block-diagonal on {0,3} and {1,2}.
    let outer = eig2(product[0][0], product[0][3], product[3][0], product[3][3]);
    let inner2 = eig2(product[1][1], product[1][2], product[2][1], product[2][2]);
    let mut lambdas = [
        sqrt(outer.0.max(0.0)),
        sqrt(outer.1.max(0.0)),
        sqrt(inner2.0.max(0.0)),
        sqrt(inner2.1.max(0.0)),
    ];
    lambdas.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(Concurrence::from_raw(
        lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3],
    ))
}

fn eig2(p: f64, q: f64, r: f64, s: f64) -> (f64, f64) {
    let disc = ((p - s) * (p - s) + 4.0 * q * r).max(0.0);
    let root = sqrt(disc);
    (0.5 * (p + s + root), 0.5 * (p + s - root))
}
