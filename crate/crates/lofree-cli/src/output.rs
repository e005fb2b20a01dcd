//! Table model and deterministic serializers.
//!
//! Every command produces a [`Table`]; the format layer renders it as CSV
//! (always with a header row), JSON (an array of objects), or an aligned
//! text table. Exact integers are always plain decimal; floats carry 12
//! significant digits. Rendering depends only on the table contents, so
//! identical runs produce byte-identical files.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::config::{CliError, Format};

/// One table cell. `Big` carries an exact decimal integer of arbitrary
/// size; `Empty` renders as an empty CSV field / JSON `null`.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    UInt(u64),
    Big(BigUint),
    Float(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    fn is_numeric(&self) -> bool {
        matches!(
            self,
            Cell::Int(_) | Cell::UInt(_) | Cell::Big(_) | Cell::Float(_)
        )
    }

    /// Plain-text rendering shared by the CSV and table formats.
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Big(v) => v.to_string(),
            Cell::Float(v) => fmt_sig(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Empty => String::new(),
        }
    }

    /// JSON value rendering. Numbers stay numbers (big integers are
    /// emitted as arbitrary-precision decimal literals); non-finite floats
    /// fall back to strings; `Empty` is `null`.
    fn render_json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Big(v) => v.to_string(),
            Cell::Float(v) if v.is_finite() => fmt_sig(*v),
            Cell::Float(v) => json_escape(&fmt_sig(*v)),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(v) => json_escape(v),
            Cell::Empty => "null".into(),
        }
    }
}

/// A rectangular table with named columns.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Table {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Append a row; panics if the width disagrees with the header (a
    /// programming error, not a user error).
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width {} != column count {}",
            row.len(),
            self.columns.len()
        );
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Table => self.to_text_table(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_field(&c.render())).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n  {");
            for (j, (name, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{}: {}", json_escape(name), cell.render_json());
            }
            out.push('}');
        }
        if !self.rows.is_empty() {
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }

    pub fn to_text_table(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.render()).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &rendered {
            for (w, field) in widths.iter_mut().zip(row) {
                *w = (*w).max(field.len());
            }
        }
        // Right-align a column when every populated cell in it is numeric.
        let numeric: Vec<bool> = (0..self.columns.len())
            .map(|j| {
                let mut any = false;
                for row in &self.rows {
                    match &row[j] {
                        Cell::Empty => {}
                        c if c.is_numeric() => any = true,
                        _ => return false,
                    }
                }
                any
            })
            .collect();
        let mut out = String::new();
        for (j, name) in self.columns.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{:<width$}", name, width = widths[j]);
        }
        out.push('\n');
        for (j, w) in widths.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&"-".repeat(*w));
        }
        out.push('\n');
        for row in &rendered {
            for (j, field) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                if numeric[j] {
                    let _ = write!(out, "{:>width$}", field, width = widths[j]);
                } else {
                    let _ = write!(out, "{:<width$}", field, width = widths[j]);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Render a float with 12 significant digits. Magnitudes that fit a plain
/// decimal stay plain; extreme magnitudes switch to scientific notation.
/// Integers are never routed through here.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let prec = (11 - mag).max(0) as usize;
        format!("{x:.prec$}")
    } else {
        format!("{x:.11e}")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_escape(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

/// Write rendered output to `--out` (creating parent directories) or, when
/// no path is configured, to stdout.
pub fn emit(out: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
