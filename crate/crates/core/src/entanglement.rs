//! Entanglement measures: closed-form concurrences, the spectral Wootters
//! concurrence, and the Peres-Horodecki partial-transpose test.

use libm::sqrt;

use crate::density::TwoSpinDensityMatrix;
use crate::mat4::{self, Mat4};
use crate::trap::PairKernels;
use crate::{Error, Result};

/// `Y (x) Y` for real states: the spin-flip conjugation matrix.
pub(crate) const SPIN_FLIP: Mat4 = [
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
];

/// Wootters concurrence, clamped to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Concurrence(f64);

impl Concurrence {
    pub(crate) fn from_raw(c: f64) -> Self {
        Self(c.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_entangled(self) -> bool {
        self.0 > 0.0
    }
}

/// Closed-form concurrence of the even-N trap state:
///
/// ```text
/// C(xi, xi') = 2 max{2 F^2 - N N', 0} / |4 N N' - 2 F^2|
/// ```
///
/// Equal to 1 at coincidence and for a single occupied level (where
/// `F^2 = N N'` identically).
pub fn concurrence_pair(k: &PairKernels) -> Result<Concurrence> {
    let nn = k.n_x * k.n_xp;
    let f2 = k.f * k.f;
    let denom = 4.0 * nn - 2.0 * f2;
    if denom.abs() <= 1e-14 * nn.max(1.0) {
        return Err(Error::DegeneratePoint);
    }
    let num = (2.0 * f2 - nn).max(0.0);
    Ok(Concurrence::from_raw(2.0 * num / denom.abs()))
}

/// Concurrence of the BCS pair state under the uniform-overlap model
/// `phi_j(xi) phi_j(xi') = y` for every level:
///
/// ```text
/// C = max{(2|y|^2 - Q/M) / (2Q/M - |y|^2), 0}
/// ```
///
/// Zero at `|y|^2 = Q/(2M)` and maximal at `|y|^2 = Q/M`. The denominator
/// must stay positive; outside that region the underlying matrix is no
/// longer a state.
pub fn concurrence_bcs_uniform(y_abs2: f64, q: f64, m: usize) -> Result<Concurrence> {
    if !(0.0..=1.0).contains(&y_abs2) {
        return Err(Error::InvalidParameter("|y|^2 must lie in [0, 1]"));
    }
    if m == 0 || !(q > 0.0 && q <= m as f64) {
        return Err(Error::InvalidParameter("need 0 < Q <= M"));
    }
    let ratio = q / m as f64;
    let denom = 2.0 * ratio - y_abs2;
    if denom <= 0.0 {
        return Err(Error::InvalidParameter("2Q/M - |y|^2 must be positive"));
    }
    let num = (2.0 * y_abs2 - ratio).max(0.0);
    Ok(Concurrence::from_raw(num / denom))
}

/// Spectral Wootters concurrence `C = max{0, l1 - l2 - l3 - l4}` with `l_i`
/// the decreasing square roots of the eigenvalues of
/// `rho (Y(x)Y) rho* (Y(x)Y)`.
///
/// The product matrix is brought to symmetric form through the spectral
/// factors of `rho` (same spectrum, no matrix square-root routine), so the
/// eigenvalues come out of plain Jacobi sweeps. For the real X-structured
/// states built in this crate the result reduces to
/// `2 max{|offdiag| - sqrt(corner1 corner4), 0}`.
pub fn wootters_concurrence(rho: &TwoSpinDensityMatrix) -> Concurrence {
    let (vals, vecs) = mat4::sym_eigen(rho.raw());
    // Type invariants keep vals >= -1e-12; clamp round-off.
    let d: [f64; 4] = [
        vals[0].max(0.0),
        vals[1].max(0.0),
        vals[2].max(0.0),
        vals[3].max(0.0),
    ];
    // x = V^T S V, w_ij = sqrt(d_i d_j) x_ij: eig(w) = eig(rho S) and the
    // eigenvalues of the product matrix are their squares.
    let mut x = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    s += vecs[a][i] * SPIN_FLIP[a][b] * vecs[b][j];
                }
            }
            x[i][j] = s;
        }
    }
    let mut w = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            w[i][j] = sqrt(d[i] * d[j]) * x[i][j];
        }
    }
    let ev = mat4::sym_eigenvalues(&w);
    let mut lambdas = [ev[0].abs(), ev[1].abs(), ev[2].abs(), ev[3].abs()];
    lambdas.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    Concurrence::from_raw(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
}

/// Outcome of the Peres-Horodecki test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptReport {
    pub min_pt_eigenvalue: f64,
    pub entangled: bool,
}

impl PptReport {
    /// Negativity threshold below which the state counts as entangled.
    pub const TOL: f64 = 1e-12;
}

/// Partial transpose on the second degree of freedom.
pub fn partial_transpose_second(rho: &TwoSpinDensityMatrix) -> [[f64; 4]; 4] {
    let r = rho.entries();
    let mut pt = [[0.0; 4]; 4];
    for s in 0..2 {
        for sp in 0..2 {
            for t in 0..2 {
                for tp in 0..2 {
                    pt[2 * s + tp][2 * t + sp] = r[2 * s + sp][2 * t + tp];
                }
            }
        }
    }
    pt
}

/// Minimum eigenvalue of the partial transpose; for two spin-1/2 degrees of
/// freedom its negativity is equivalent to entanglement.
pub fn ppt_min_eigenvalue(rho: &TwoSpinDensityMatrix) -> PptReport {
    let pt = partial_transpose_second(rho);
    let min = mat4::sym_eigenvalues(&pt)[0];
    PptReport {
        min_pt_eigenvalue: min,
        entangled: min < -PptReport::TOL,
    }
}
