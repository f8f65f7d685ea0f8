//! Assembly of the normalized 4x4 two-spin reduced density matrices.
//!
//! Basis order is `{uu, ud, du, dd}` for the trap states (spin of the atom
//! at `xi` first) and `{++, +-, -+, --}` for the time-reversed pair labels
//! of the BCS state.

use crate::mat4::{self, Mat4};
use crate::trap::{OddCorrection, PairKernels, Parity, TrapConfiguration};
use crate::{Error, Result};

/// Hermitian, unit-trace, positive-semidefinite 4x4 state of two spin-1/2
/// (or time-reversed-pair) degrees of freedom.
///
/// Storage is real; every state assembled here has real entries. The even-N
/// and BCS constructors produce X-structured matrices with equal corners and
/// equal middle diagonal; the odd-N state keeps the X pattern but not those
/// equalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSpinDensityMatrix {
    entries: Mat4,
}

impl TwoSpinDensityMatrix {
    /// Absolute tolerance on |trace - 1|.
    pub const TRACE_TOL: f64 = 1e-12;
    /// Lower bound on the minimum eigenvalue.
    pub const PSD_TOL: f64 = 1e-12;

    /// Validates symmetry, unit trace and positive semidefiniteness.
    pub fn new(entries: [[f64; 4]; 4]) -> Result<Self> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if (entries[i][j] - entries[j][i]).abs() > Self::TRACE_TOL {
                    return Err(Error::InvalidState);
                }
            }
        }
        let m = Self { entries };
        if (m.trace() - 1.0).abs() > Self::TRACE_TOL {
            return Err(Error::InvalidState);
        }
        if m.min_eigenvalue() < -Self::PSD_TOL {
            return Err(Error::InvalidState);
        }
        Ok(m)
    }

    /// Normalizes an unnormalized Hermitian matrix by its trace.
    ///
    /// `scale` sets the degeneracy threshold: a trace at or below
    /// `1e-14 * max(1, scale)` means both atoms sit so deep in the Gaussian
    /// tail that the state is numerically undefined.
    pub(crate) fn from_unnormalized(num: Mat4, scale: f64) -> Result<Self> {
        let trace = num[0][0] + num[1][1] + num[2][2] + num[3][3];
        if trace <= degeneracy_threshold(scale) {
            return Err(Error::DegeneratePoint);
        }
        let mut entries = num;
        for row in &mut entries {
            for v in row {
                *v /= trace;
            }
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2] + self.entries[3][3]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        mat4::sym_eigenvalues(&self.entries)[0]
    }

    /// True when every entry off the diagonal and anti-diagonal is below
    /// `tol` in magnitude.
    pub fn is_x_structured(&self, tol: f64) -> bool {
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 && self.entries[i][j].abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// The spin singlet projector (in either basis labelling).
    pub fn singlet() -> Self {
        Self {
            entries: [
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.5, -0.5, 0.0],
                [0.0, -0.5, 0.5, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ],
        }
    }

    /// The maximally mixed two-spin state.
    pub fn maximally_mixed() -> Self {
        Self {
            entries: [
                [0.25, 0.0, 0.0, 0.0],
                [0.0, 0.25, 0.0, 0.0],
                [0.0, 0.0, 0.25, 0.0],
                [0.0, 0.0, 0.0, 0.25],
            ],
        }
    }

    pub(crate) fn raw(&self) -> &Mat4 {
        &self.entries
    }
}

fn degeneracy_threshold(scale: f64) -> f64 {
    1e-14 * scale.max(1.0)
}

/// Two-spin state of an even-N trap at kernel values `k`.
///
/// Diagonal `(N N' - F^2, N N', N N', N N' - F^2)` and off-diagonal `-F^2`
/// in the middle block, normalized by `4 N N' - 2 F^2`. At coincidence this
/// is the spin singlet.
pub fn rho_even(k: &PairKernels) -> Result<TwoSpinDensityMatrix> {
    let nn = k.n_x * k.n_xp;
    let f2 = k.f * k.f;
    let corner = nn - f2;
    let num = [
        [corner, 0.0, 0.0, 0.0],
        [0.0, nn, -f2, 0.0],
        [0.0, -f2, nn, 0.0],
        [0.0, 0.0, 0.0, corner],
    ];
    TwoSpinDensityMatrix::from_unnormalized(num, nn)
}

/// Two-spin state of an odd-N trap: the even-N sea of M levels plus the
/// unpaired spin-up atom in mode M, normalized by its trace.
///
/// The correction enters slot by slot: with `p = phi_M(xi)^2`,
/// `p' = phi_M(xi')^2` and `g = phi_M(xi) phi_M(xi')`,
///
/// ```text
/// d(uu,uu) = N p' + N' p - 2 F g      d(ud,ud) = N' p
/// d(du,du) = N p'                     d(ud,du) = d(du,ud) = -F g
/// ```
///
/// which is the exact Slater-determinant result (the brute-force Fock
/// construction in [`crate::fock`] reproduces it entry by entry). Note this
/// distributes the aggregates of [`OddCorrection`] one-sidedly: the extra
/// atom enhances only the spin-up sector, and swapping `xi <-> xi'`
/// swap-conjugates the matrix.
pub fn rho_odd(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<TwoSpinDensityMatrix> {
    if cfg.parity() != Parity::Odd {
        return Err(Error::ParityMismatch { expected: Parity::Odd });
    }
    let k = PairKernels::evaluate(cfg, xi, xi_p)?;
    let c = crate::trap::odd_correction(cfg, xi, xi_p)?;
    let num = odd_numerator(&k, &c);
    TwoSpinDensityMatrix::from_unnormalized(num, k.n_x * k.n_xp)
}

pub(crate) fn odd_numerator(k: &PairKernels, c: &OddCorrection) -> Mat4 {
    let nn = k.n_x * k.n_xp;
    let f2 = k.f * k.f;
    let p_x = c.phi_extra_x * c.phi_extra_x;
    let p_xp = c.phi_extra_xp * c.phi_extra_xp;
    let g = c.phi_extra_x * c.phi_extra_xp;
    let a = k.n_x * p_xp;
    let b = k.n_xp * p_x;
    let fg = k.f * g;
    [
        [nn - f2 + a + b - 2.0 * fg, 0.0, 0.0, 0.0],
        [0.0, nn + b, -f2 - fg, 0.0],
        [0.0, -f2 - fg, nn + a, 0.0],
        [0.0, 0.0, 0.0, nn - f2],
    ]
}

/// Two-spin state of the BCS ground state in the time-reversed-pair basis,
/// from the pair number `Q` and the kernel product `Re(f v^2)`.
pub fn rho_bcs(q: f64, re_fv2: f64) -> Result<TwoSpinDensityMatrix> {
    if !(q.is_finite() && re_fv2.is_finite()) || q <= 0.0 {
        return Err(Error::InvalidParameter("rho_bcs needs finite kernels and Q > 0"));
    }
    let q2 = q * q;
    if re_fv2.abs() > q2 * (1.0 + 1e-12) {
        return Err(Error::InvalidKernel { q_sq: q2, re_fv2 });
    }
    let corner = q2 - re_fv2;
    let num = [
        [corner, 0.0, 0.0, 0.0],
        [0.0, q2, -re_fv2, 0.0],
        [0.0, -re_fv2, q2, 0.0],
        [0.0, 0.0, 0.0, corner],
    ];
    TwoSpinDensityMatrix::from_unnormalized(num, q2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn coincidence_gives_the_singlet() {
        let cfg = TrapConfiguration::new(20).unwrap();
        let k = PairKernels::evaluate(&cfg, 0.7, 0.7).unwrap();
        let rho = rho_even(&k).unwrap();
        assert_eq!(*rho.entries(), *TwoSpinDensityMatrix::singlet().entries());
    }

    #[test]
    fn zero_overlap_gives_maximally_mixed() {
        let k = PairKernels { f: 0.0, n_x: 1.0, n_xp: 1.0 };
        let rho = rho_even(&k).unwrap();
        assert_eq!(*rho.entries(), *TwoSpinDensityMatrix::maximally_mixed().entries());
    }

    #[test]
    fn even_state_is_valid_and_x_structured() {
        let cfg = TrapConfiguration::new(20).unwrap();
        let k = PairKernels::evaluate(&cfg, 0.5, 1.5).unwrap();
        let rho = rho_even(&k).unwrap();
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-14);
        assert!(rho.min_eigenvalue() >= -TwoSpinDensityMatrix::PSD_TOL);
        assert!(rho.is_x_structured(0.0));
        assert_eq!(rho.get(0, 0), rho.get(3, 3));
        assert_eq!(rho.get(1, 1), rho.get(2, 2));
    }

    #[test]
    fn deep_tail_is_degenerate_not_nan() {
        let cfg = TrapConfiguration::new(4).unwrap();
        let k = PairKernels::evaluate(&cfg, 30.0, 30.0).unwrap();
        assert_eq!(rho_even(&k), Err(Error::DegeneratePoint));
    }

    #[test]
    fn odd_state_reduces_to_even_where_the_extra_mode_vanishes() {
        // Three atoms, both positions at the origin: phi_1(0) = 0.
        let odd = TrapConfiguration::new(3).unwrap();
        let rho = rho_odd(&odd, 0.0, 0.0).unwrap();
        assert_eq!(*rho.entries(), *TwoSpinDensityMatrix::singlet().entries());
    }

    #[test]
    fn odd_state_is_valid_and_swap_covariant() {
        let cfg = TrapConfiguration::new(7).unwrap();
        let a = rho_odd(&cfg, 0.4, 1.1).unwrap();
        assert_abs_diff_eq!(a.trace(), 1.0, epsilon = 1e-14);
        assert!(a.min_eigenvalue() >= -TwoSpinDensityMatrix::PSD_TOL);
        assert!(a.is_x_structured(0.0));

        // Swapping the two positions conjugates by SWAP: slots ud <-> du.
        let b = rho_odd(&cfg, 1.1, 0.4).unwrap();
        assert_abs_diff_eq!(a.get(1, 1), b.get(2, 2), epsilon = 1e-15);
        assert_abs_diff_eq!(a.get(2, 2), b.get(1, 1), epsilon = 1e-15);
        assert_abs_diff_eq!(a.get(0, 0), b.get(0, 0), epsilon = 1e-15);
        assert_abs_diff_eq!(a.get(1, 2), b.get(1, 2), epsilon = 1e-15);
    }

    #[test]
    fn odd_coincidence_stays_nearly_maximal_for_many_atoms() {
        let cfg = TrapConfiguration::new(21).unwrap();
        let rho = rho_odd(&cfg, 0.5, 0.5).unwrap();
        let c = crate::entanglement::wootters_concurrence(&rho).value();
        assert!(c > 0.95 && c <= 1.0, "C = {c}");
    }

    #[test]
    fn odd_state_rejects_even_counts() {
        let cfg = TrapConfiguration::new(6).unwrap();
        assert_eq!(
            rho_odd(&cfg, 0.0, 0.5),
            Err(Error::ParityMismatch { expected: Parity::Odd })
        );
    }

    #[test]
    fn bcs_limits() {
        let singlet = rho_bcs(1.0, 1.0).unwrap();
        assert_eq!(*singlet.entries(), *TwoSpinDensityMatrix::singlet().entries());
        let mixed = rho_bcs(1.0, 0.0).unwrap();
        assert_eq!(*mixed.entries(), *TwoSpinDensityMatrix::maximally_mixed().entries());
    }

    #[test]
    fn bcs_rejects_positivity_breaking_kernels() {
        assert!(matches!(
            rho_bcs(1.0, 1.5),
            Err(Error::InvalidKernel { .. })
        ));
        assert!(matches!(
            rho_bcs(1.0, -1.5),
            Err(Error::InvalidKernel { .. })
        ));
    }

    #[test]
    fn constructor_rejects_invalid_matrices() {
        let mut bad = *TwoSpinDensityMatrix::maximally_mixed().entries();
        bad[0][1] = 0.3; // asymmetric
        assert_eq!(TwoSpinDensityMatrix::new(bad), Err(Error::InvalidState));

        let negative = [
            [0.75, 0.0, 0.0, 0.0],
            [0.0, 0.75, 0.0, 0.0],
            [0.0, 0.0, -0.25, 0.0],
            [0.0, 0.0, 0.0, -0.25],
        ];
        assert_eq!(TwoSpinDensityMatrix::new(negative), Err(Error::InvalidState));
    }
}
