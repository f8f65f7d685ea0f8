//! Numeric result tables and their CSV form.
//!
//! Floats are written with 15 significant digits in scientific notation so
//! emitted files are byte-deterministic and parse back to within round-off.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::Context;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    /// Optional values render as empty fields when absent.
    OptNum(Option<f64>),
    OptInt(Option<i64>),
}

impl Cell {
    fn write(&self, w: &mut impl Write) -> io::Result<()> {
        match self {
            Cell::Int(v) => write!(w, "{v}"),
            Cell::Num(v) => write!(w, "{v:.14e}"),
            Cell::OptNum(Some(v)) => write!(w, "{v:.14e}"),
            Cell::OptInt(Some(v)) => write!(w, "{v}"),
            Cell::OptNum(None) | Cell::OptInt(None) => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<I, S>(headers: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, cells: Vec<Cell>) {
        assert_eq!(
            cells.len(),
            self.headers.len(),
            "row width does not match header"
        );
        self.rows.push(cells);
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Header line plus one newline-terminated line per row.
    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "{}", self.headers.join(","))?;
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    write!(w, ",")?;
                }
                cell.write(w)?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

/// Writes the table to `dest` (standard output when `None`). Empty tables
/// are refused rather than silently producing a header-only file.
pub fn emit_csv(table: &Table, dest: Option<&Path>) -> anyhow::Result<()> {
    anyhow::ensure!(!table.is_empty(), "refusing to emit an empty table");
    match dest {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut w = BufWriter::new(file);
            table
                .write_csv(&mut w)
                .with_context(|| format!("cannot write {}", path.display()))?;
            w.flush()
                .with_context(|| format!("cannot flush {}", path.display()))?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            table.write_csv(&mut w).context("cannot write to stdout")?;
        }
    }
    Ok(())
}
