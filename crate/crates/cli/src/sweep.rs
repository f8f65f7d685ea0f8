//! Grid sweeps over positions, coupling and the uniform-overlap parameter.
//!
//! Every sweep walks its grid in index order single-threaded, so identical
//! inputs produce byte-identical tables.

use anyhow::{bail, Context, Result};

use fermigas_core::bcs::BcsModel;
use fermigas_core::density::{rho_bcs, rho_even, rho_odd};
use fermigas_core::entanglement::{
    concurrence_bcs_uniform, concurrence_pair, ppt_min_eigenvalue, wootters_concurrence,
};
use fermigas_core::fock::{fock_rho, xstate_concurrence_bruteforce};
use fermigas_core::trap::{PairKernels, Parity, TrapConfiguration};

use crate::grid::GridSpec;
use crate::table::{Cell, Table};

/// Concurrence of the two-point spin state for either parity.
pub fn point_concurrence(cfg: &TrapConfiguration, xi: f64, xi_p: f64) -> Result<f64> {
    let c = match cfg.parity() {
        Parity::Even => {
            let k = PairKernels::evaluate(cfg, xi, xi_p)?;
            concurrence_pair(&k)?.value()
        }
        Parity::Odd => wootters_concurrence(&rho_odd(cfg, xi, xi_p)?).value(),
    };
    Ok(c)
}

/// `(xi, xi', C)` on the square grid, row-major.
pub fn surface(n: usize, grid: &GridSpec) -> Result<Table> {
    let cfg = TrapConfiguration::new(n)?;
    let axis = grid.values();
    let mut table = Table::new(["xi", "xi_prime", "concurrence"]);
    for &xi in &axis {
        for &xi_p in &axis {
            let c = point_concurrence(&cfg, xi, xi_p)
                .with_context(|| format!("at (xi, xi') = ({xi}, {xi_p})"))?;
            table.push_row(vec![Cell::Num(xi), Cell::Num(xi_p), Cell::Num(c)]);
        }
    }
    Ok(table)
}

/// `(xi', C)` with one atom fixed at `x0`.
pub fn line(n: usize, x0: f64, grid: &GridSpec) -> Result<Table> {
    let cfg = TrapConfiguration::new(n)?;
    let mut table = Table::new(["xi_prime", "concurrence"]);
    for &xi_p in &grid.values() {
        let c = point_concurrence(&cfg, x0, xi_p)
            .with_context(|| format!("at xi' = {xi_p}"))?;
        table.push_row(vec![Cell::Num(xi_p), Cell::Num(c)]);
    }
    Ok(table)
}

/// `(|y|^2, C, ppt_entangled, min_pt_eigenvalue)` for the uniform-overlap
/// pairing model, with `Q` taken from the solved ladder.
///
/// The default domain is `[0, min(1, 2Q/M) (1 - 1e-6)]` with 101 points;
/// a grid overrides range and resolution but must stay inside the model's
/// domain. The assembled matrix is a state only up to `|y|^2 = Q/M`, so the
/// partial-transpose columns are empty beyond that point.
pub fn bcs_y_scan(
    m: usize,
    d: f64,
    lambda: f64,
    grid: Option<&GridSpec>,
    tol: f64,
) -> Result<Table> {
    let model = BcsModel::solve(m, d, lambda, tol)?;
    let q = model.pair_number();
    let ratio = q / m as f64;
    let domain_end = 1.0_f64.min(2.0 * ratio);
    let values = match grid {
        Some(g) => {
            if g.min() < 0.0 || g.max() >= domain_end {
                bail!("|y|^2 grid must lie in [0, min(1, 2Q/M)) = [0, {domain_end})");
            }
            g.values()
        }
        None => {
            let hi = domain_end * (1.0 - 1e-6);
            let step = hi / 100.0;
            (0..101).map(|i| step * i as f64).collect()
        }
    };
    let mut table = Table::new(["y_abs2", "concurrence", "ppt_entangled", "min_pt_eigenvalue"]);
    for &y2 in &values {
        let c = concurrence_bcs_uniform(y2, q, m)?.value();
        let (flag, min_pt) = if y2 <= ratio {
            let rho = rho_bcs(q, m as f64 * q * y2)?;
            let ppt = ppt_min_eigenvalue(&rho);
            (Some(ppt.entangled as i64), Some(ppt.min_pt_eigenvalue))
        } else {
            (None, None)
        };
        table.push_row(vec![
            Cell::Num(y2),
            Cell::Num(c),
            Cell::OptInt(flag),
            Cell::OptNum(min_pt),
        ]);
    }
    Ok(table)
}

/// `(lambda, delta, q)` across a coupling grid at fixed ladder geometry.
pub fn bcs_gap_scan(m: usize, d: f64, grid: &GridSpec, tol: f64) -> Result<Table> {
    let mut table = Table::new(["lambda", "delta", "q"]);
    for &lambda in &grid.values() {
        let model = BcsModel::solve(m, d, lambda, tol)
            .with_context(|| format!("at lambda = {lambda}"))?;
        table.push_row(vec![
            Cell::Num(lambda),
            Cell::Num(model.delta()),
            Cell::Num(model.pair_number()),
        ]);
    }
    Ok(table)
}

/// Cross-check of the closed-form states against the brute-force Fock
/// construction on the grid. Returns the table
/// `(xi, xi_prime, max_entry_diff, concurrence_closed, concurrence_fock)`
/// and the largest entrywise deviation seen.
pub fn oracle_check(n: usize, grid: &GridSpec) -> Result<(Table, f64)> {
    let cfg = TrapConfiguration::new(n)?;
    let axis = grid.values();
    let mut table = Table::new([
        "xi",
        "xi_prime",
        "max_entry_diff",
        "concurrence_closed",
        "concurrence_fock",
    ]);
    let mut worst = 0.0_f64;
    for &xi in &axis {
        for &xi_p in &axis {
            let brute = fock_rho(&cfg, xi, xi_p)
                .with_context(|| format!("at (xi, xi') = ({xi}, {xi_p})"))?;
            let closed = match cfg.parity() {
                Parity::Even => rho_even(&PairKernels::evaluate(&cfg, xi, xi_p)?)?,
                Parity::Odd => rho_odd(&cfg, xi, xi_p)?,
            };
            let mut diff = 0.0_f64;
            for i in 0..4 {
                for j in 0..4 {
                    diff = diff.max((brute.normalized.get(i, j) - closed.get(i, j)).abs());
                }
            }
            worst = worst.max(diff);
            let c_closed = wootters_concurrence(&closed).value();
            let c_fock = xstate_concurrence_bruteforce(&brute.normalized)?.value();
            table.push_row(vec![
                Cell::Num(xi),
                Cell::Num(xi_p),
                Cell::Num(diff),
                Cell::Num(c_closed),
                Cell::Num(c_fock),
            ]);
        }
    }
    Ok((table, worst))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_diagonal_is_maximal() {
        let grid = GridSpec::new(-2.0, 2.0, 9).unwrap();
        let t = surface(20, &grid).unwrap();
        assert_eq!(t.rows().len(), 81);
        for row in t.rows() {
            let (Cell::Num(xi), Cell::Num(xi_p), Cell::Num(c)) = (row[0], row[1], row[2])
            else {
                panic!("unexpected cell types")
            };
            if xi == xi_p {
                assert!((c - 1.0).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn two_atom_surface_is_all_ones() {
        let grid = GridSpec::new(-3.0, 3.0, 7).unwrap();
        let t = surface(2, &grid).unwrap();
        for row in t.rows() {
            let Cell::Num(c) = row[2] else { panic!() };
            assert_eq!(c, 1.0);
        }
    }

    #[test]
    fn two_atom_line_is_flat() {
        let grid = GridSpec::new(-5.0, 5.0, 201).unwrap();
        let t = line(2, 0.5, &grid).unwrap();
        for row in t.rows() {
            let Cell::Num(c) = row[1] else { panic!() };
            assert!((c - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn odd_line_peaks_at_the_fixed_atom() {
        let grid = GridSpec::new(-2.0, 3.0, 11).unwrap();
        let t = line(21, 0.5, &grid).unwrap();
        let mut peak = f64::NEG_INFINITY;
        let mut peak_at = f64::NAN;
        for row in t.rows() {
            let (Cell::Num(x), Cell::Num(c)) = (row[0], row[1]) else { panic!() };
            if c > peak {
                peak = c;
                peak_at = x;
            }
        }
        assert_eq!(peak_at, 0.5);
        assert!((peak - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn y_scan_hits_both_thresholds() {
        let t = bcs_y_scan(8, 1.0, 1.0, None, 1e-12).unwrap();
        let rows = t.rows();
        assert_eq!(rows.len(), 101);
        // Q = M/2 = 4: zero until |y|^2 = 0.25, saturated at 0.5.
        for row in rows {
            let (Cell::Num(y2), Cell::Num(c)) = (row[0], row[1]) else { panic!() };
            if y2 < 0.2499 {
                assert_eq!(c, 0.0, "y2 = {y2}");
            }
            if y2 >= 0.5 {
                assert_eq!(c, 1.0, "y2 = {y2}");
            }
            match row[2] {
                Cell::OptInt(Some(flag)) => {
                    assert!(y2 <= 0.5 + 1e-12);
                    assert_eq!(flag == 1, c > 0.0, "y2 = {y2}");
                }
                Cell::OptInt(None) => assert!(y2 > 0.5),
                _ => panic!(),
            }
        }
    }

    #[test]
    fn gap_scan_is_monotone_and_matches_the_two_level_form() {
        let grid = GridSpec::new(0.6, 2.0, 8).unwrap();
        let t = bcs_gap_scan(2, 1.0, &grid, 1e-12).unwrap();
        let mut prev = -1.0;
        for row in t.rows() {
            let (Cell::Num(lambda), Cell::Num(delta), Cell::Num(q)) = (row[0], row[1], row[2])
            else {
                panic!()
            };
            assert!(delta >= prev);
            prev = delta;
            let expect = (lambda * lambda - 0.25).max(0.0).sqrt();
            assert!((delta - expect).abs() < 1e-9, "lambda = {lambda}");
            assert!((q - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn oracle_check_is_tight_for_small_systems() {
        let grid = GridSpec::new(-1.5, 1.5, 5).unwrap();
        for n in [2usize, 3, 4, 7] {
            let (_, worst) = oracle_check(n, &grid).unwrap();
            assert!(worst < 1e-10, "N = {n}: {worst:.3e}");
        }
    }
}
