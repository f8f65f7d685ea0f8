use std::path::PathBuf;

use anyhow::bail;
use clap::{Parser, Subcommand};

use fermigas::distance::{entanglement_distance, DEFAULT_RESOLUTION, DEFAULT_TOL};
use fermigas::table::{emit_csv, Cell, Table};
use fermigas::{sweep, GridSpec};

/// Two-fermion spin entanglement in a harmonically trapped Fermi gas.
///
/// All positions are in units of 1/alpha, alpha = sqrt(m omega / hbar).
/// Results are CSV on stdout or --out; errors go to stderr with a nonzero
/// exit status.
#[derive(Parser)]
#[command(name = "fermigas", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Concurrence C(xi, xi') of two atoms on a square position grid
    Surface {
        /// Particle count
        #[arg(long)]
        n: usize,
        /// Position grid min:max:points, used for both axes
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        /// Output CSV path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Concurrence along xi' with one atom fixed at --x0
    Line {
        #[arg(long)]
        n: usize,
        /// Fixed position of the first atom
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First separation at which the concurrence vanishes (even N >= 4)
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        /// Outward march step
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        /// Bisection tolerance on the sign function
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniform-overlap pairing scan: concurrence and PPT flag against |y|^2
    BcsY {
        /// Number of doubly degenerate levels M
        #[arg(long)]
        levels: usize,
        /// Mean level spacing d
        #[arg(long)]
        spacing: f64,
        /// Dimensionless coupling lambda
        #[arg(long)]
        coupling: f64,
        /// Optional |y|^2 grid; defaults to [0, min(1, 2Q/M)) with 101 points
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        /// Gap-equation residual tolerance
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Self-consistent gap and pair number across a coupling grid
    BcsGap {
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        spacing: f64,
        /// Coupling grid min:max:points
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check closed-form states against the brute-force construction
    OracleCheck {
        /// Particle count (brute force supports N <= 9)
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        grid: GridSpec,
        /// Largest tolerated entrywise deviation
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> anyhow::Result<()> {
    match Cli::parse().cmd {
        Cmd::Surface { n, grid, out } => {
            emit_csv(&sweep::surface(n, &grid)?, out.as_deref())
        }
        Cmd::Line { n, x0, grid, out } => {
            emit_csv(&sweep::line(n, x0, &grid)?, out.as_deref())
        }
        Cmd::Distance { n, x0, resolution, tol, out } => {
            let r = entanglement_distance(n, x0, resolution, tol)?;
            let mut table = Table::new([
                "x0",
                "l_star",
                "bracket_lo",
                "bracket_hi",
                "iterations",
                "first_revival",
            ]);
            table.push_row(vec![
                Cell::Num(r.x0),
                Cell::Num(r.l_star),
                Cell::Num(r.bracket.0),
                Cell::Num(r.bracket.1),
                Cell::Int(r.iterations as i64),
                Cell::OptNum(r.revival),
            ]);
            emit_csv(&table, out.as_deref())
        }
        Cmd::BcsY { levels, spacing, coupling, grid, tol, out } => {
            let table = sweep::bcs_y_scan(levels, spacing, coupling, grid.as_ref(), tol)?;
            emit_csv(&table, out.as_deref())
        }
        Cmd::BcsGap { levels, spacing, grid, tol, out } => {
            emit_csv(&sweep::bcs_gap_scan(levels, spacing, &grid, tol)?, out.as_deref())
        }
        Cmd::OracleCheck { n, grid, tol, out } => {
            let (table, worst) = sweep::oracle_check(n, &grid)?;
            emit_csv(&table, out.as_deref())?;
            if worst > tol {
                bail!("brute-force deviation {worst:.3e} exceeds tolerance {tol:.3e}");
            }
            eprintln!("oracle-check: max entrywise deviation {worst:.3e} within {tol:.3e}");
            Ok(())
        }
    }
}
