//! Entanglement distance: the first separation at which the two-point
//! concurrence vanishes.
//!
//! The sign function is `g(L) = 2 F^2(x0, x0+L) - N(x0) N(x0+L)`; the
//! concurrence is positive exactly where `g > 0`. The search marches
//! outward at a fixed resolution to bracket the first crossing, then
//! bisects. `F` oscillates, so the concurrence can in principle revive at
//! larger separation; the first grid point where `g` turns positive again
//! is reported separately.

use fermigas_core::trap::{PairKernels, Parity, TrapConfiguration};

pub const DEFAULT_RESOLUTION: f64 = 0.01;
pub const DEFAULT_TOL: f64 = 1e-10;
/// Beyond this separation both densities underflow and `g` is identically
/// ~0; searching further would fabricate roots.
pub const SEARCH_CEILING: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceResult {
    pub x0: f64,
    /// First zero of the concurrence along increasing separation.
    pub l_star: f64,
    /// Bracket around the crossing after bisection.
    pub bracket: (f64, f64),
    /// Bisection iterations spent.
    pub iterations: usize,
    /// First grid point past `l_star` where the concurrence returns, if any.
    pub revival: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum DistanceError {
    #[error("two atoms in one level stay maximally entangled at every separation")]
    InfiniteDistance,
    #[error("no sign change within the search ceiling {ceiling}")]
    NotFound { ceiling: f64 },
    #[error("distance search requires an even particle count, got {0}")]
    OddParticleCount(usize),
    #[error("invalid search parameters: {0}")]
    InvalidSearch(&'static str),
    #[error(transparent)]
    Core(#[from] fermigas_core::Error),
}

/// Locates the first separation `L > 0` with
/// `2 F^2(x0, x0+L) <= N(x0) N(x0+L)` by an outward march at `resolution`
/// followed by bisection until `|g| < tol`.
pub fn entanglement_distance(
    n: usize,
    x0: f64,
    resolution: f64,
    tol: f64,
) -> Result<DistanceResult, DistanceError> {
    let cfg = TrapConfiguration::new(n)?;
    if cfg.parity() == Parity::Odd {
        return Err(DistanceError::OddParticleCount(n));
    }
    if n == 2 {
        // M = 1 has F^2 = N N' identically, so g = F^2 > 0 everywhere.
        return Err(DistanceError::InfiniteDistance);
    }
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(DistanceError::InvalidSearch("resolution must be positive"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(DistanceError::InvalidSearch("tolerance must be positive"));
    }
    if !x0.is_finite() {
        return Err(DistanceError::Core(fermigas_core::Error::NonFinitePosition));
    }

    let g = |l: f64| -> Result<f64, DistanceError> {
        let k = PairKernels::evaluate(&cfg, x0, x0 + l)?;
        Ok(2.0 * k.f * k.f - k.n_x * k.n_xp)
    };

    // March outward for the bracketing step.
    let mut step = 1usize;
    let crossing = loop {
        let l = resolution * step as f64;
        if l > SEARCH_CEILING {
            return Err(DistanceError::NotFound { ceiling: SEARCH_CEILING });
        }
        if g(l)? <= 0.0 {
            break l;
        }
        step += 1;
    };

    let mut lo = crossing - resolution;
    let mut hi = crossing;
    let mut mid;
    let mut iterations = 0usize;
    loop {
        mid = 0.5 * (lo + hi);
        let gm = g(mid)?;
        iterations += 1;
        if gm.abs() < tol || iterations >= 200 {
            break;
        }
        if gm > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Scan onward for a revival of the concurrence.
    let mut revival = None;
    let mut l = crossing + resolution;
    while l <= SEARCH_CEILING {
        if g(l)? > 0.0 {
            revival = Some(l);
            break;
        }
        l += resolution;
    }

    Ok(DistanceResult {
        x0,
        l_star: mid,
        bracket: (lo, hi),
        iterations,
        revival,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fermigas_core::entanglement::concurrence_pair;

    #[test]
    fn two_atoms_never_disentangle() {
        assert!(matches!(
            entanglement_distance(2, 0.0, 0.01, 1e-10),
            Err(DistanceError::InfiniteDistance)
        ));
    }

    #[test]
    fn odd_counts_are_rejected() {
        assert!(matches!(
            entanglement_distance(21, 0.0, 0.01, 1e-10),
            Err(DistanceError::OddParticleCount(21))
        ));
    }

    #[test]
    fn four_atoms_from_center_cross_at_the_closed_form_point() {
        // M = 2 from x0 = 0: only mode 0 contributes to F, and
        // g = phi_0(0)^2 phi_0(L)^2 (1 - 2 L^2) crosses at L = 1/sqrt(2).
        let r = entanglement_distance(4, 0.0, 0.01, 1e-12).unwrap();
        assert!((r.l_star - 0.5_f64.sqrt()).abs() < 1e-6, "L = {}", r.l_star);
    }

    #[test]
    fn bracket_and_root_contracts_hold() {
        let r = entanglement_distance(20, 0.0, 0.01, 1e-10).unwrap();
        let cfg = TrapConfiguration::new(20).unwrap();
        let g = |l: f64| {
            let k = PairKernels::evaluate(&cfg, 0.0, l).unwrap();
            2.0 * k.f * k.f - k.n_x * k.n_xp
        };
        assert!(g(r.l_star).abs() < 1e-10);
        assert!(g(r.bracket.0) > 0.0);
        assert!(g(r.bracket.1) <= 0.0);
        // One resolution step to either side straddles the zero of C.
        let before = concurrence_pair(
            &PairKernels::evaluate(&cfg, 0.0, r.l_star - 0.01).unwrap(),
        )
        .unwrap()
        .value();
        let after = concurrence_pair(
            &PairKernels::evaluate(&cfg, 0.0, r.l_star + 0.01).unwrap(),
        )
        .unwrap()
        .value();
        assert!(before > 0.0);
        assert_eq!(after, 0.0);
    }

    #[test]
    fn center_distance_matches_the_reference_root() {
        // Root of g computed independently with 40-digit arithmetic:
        // L = 0.30944657556840661.
        let r = entanglement_distance(20, 0.0, 0.01, 1e-10).unwrap();
        assert!(
            (r.l_star - 0.309_446_575_568_406_6).abs() <= 1e-8,
            "L = {}",
            r.l_star
        );
    }

    #[test]
    fn verge_distance_exceeds_center_distance() {
        let center = entanglement_distance(20, 0.0, 0.01, 1e-10).unwrap();
        let verge = entanglement_distance(20, 3.0, 0.01, 1e-10).unwrap();
        assert!(verge.l_star > center.l_star + 0.01);
    }
}
