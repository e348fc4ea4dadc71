//! Matrix and table serialization, with parsers for the matrix formats.
//!
//! An operator on `V ⊗ V` with `dim V = N` is listed entry by entry as
//! `(i, j; k, l)`: row `N(i−1)+(j−1)`, column `N(k−1)+(l−1)`, so the entry is
//! the coefficient of `E_{ik} ⊗ E_{jl}`. Entries appear in row-major order and
//! zeros are omitted.

use std::fmt::Write as _;

use qtwist::scalars::RatFunc;
use qtwist::sparse::SparseOperator;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CONVENTION: &str = "flat=N*(i-1)+(j-1)";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixDoc {
    #[serde(rename = "type")]
    pub rstype: String,
    pub rank: usize,
    pub params: String,
    /// Size of the matrix, `N²`.
    pub dim: usize,
    pub convention: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub spectral: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub entries: Vec<MatrixEntry>,
}

/// `N` with `N² = dim`.
pub fn vec_dim(dim: usize) -> Result<usize, CliError> {
    let n = (dim as f64).sqrt().round() as usize;
    if n * n != dim {
        return Err(CliError::Usage(format!("matrix size {dim} is not a square")));
    }
    Ok(n)
}

/// Row-major nonzero entries with their `(i,j;k,l)` labels.
pub fn entries_of(
    m: &SparseOperator,
    value: impl Fn(&RatFunc) -> Result<String, CliError>,
) -> Result<Vec<MatrixEntry>, CliError> {
    let n = vec_dim(m.dim())?;
    let mut pos: Vec<(&(usize, usize), &RatFunc)> = m.entries().filter(|(_, x)| !x.is_zero()).collect();
    pos.sort_by_key(|(rc, _)| **rc);
    pos.into_iter()
        .map(|(&(row, col), x)| {
            Ok(MatrixEntry { i: row / n + 1, j: row % n + 1, k: col / n + 1, l: col % n + 1, value: value(x)? })
        })
        .collect()
}

pub fn to_json(doc: &MatrixDoc) -> String {
    serde_json::to_string_pretty(doc).expect("serializable") + "\n"
}

pub fn to_csv(entries: &[MatrixEntry]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in entries {
        w.serialize(e).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    // An empty matrix still gets its header line.
    let text = String::from_utf8(bytes).expect("utf8");
    Ok(if text.is_empty() { "i,j,k,l,value\n".into() } else { text })
}

pub fn to_text(entries: &[MatrixEntry]) -> String {
    entries.iter().fold(String::new(), |mut s, e| {
        let _ = writeln!(s, "({},{};{},{}) {}", e.i, e.j, e.k, e.l, e.value);
        s
    })
}

/// A dense `pmatrix` block.
pub fn to_latex(entries: &[MatrixEntry], dim: usize) -> Result<String, CliError> {
    let n = vec_dim(dim)?;
    let mut dense = vec![vec!["0".to_string(); dim]; dim];
    for e in entries {
        dense[n * (e.i - 1) + (e.j - 1)][n * (e.k - 1) + (e.l - 1)] = latex_value(&e.value);
    }
    let mut s = format!("\\setcounter{{MaxMatrixCols}}{{{dim}}}\n\\begin{{pmatrix}}\n");
    for row in dense {
        let _ = writeln!(s, "{} \\\\", row.join(" & "));
    }
    s.push_str("\\end{pmatrix}\n");
    Ok(s)
}

/// LaTeX for a scalar string as printed by the library: `^(e)` and `^12`
/// become `^{e}` and `^{12}`, products are juxtaposed, quotients become `\frac`.
pub fn latex_value(v: &str) -> String {
    if let Some(rest) = v.strip_prefix('(') {
        if let Some((num, den)) = rest.split_once(")/(") {
            let den = den.strip_suffix(')').unwrap_or(den);
            return format!("\\frac{{{}}}{{{}}}", latex_poly(num), latex_poly(den));
        }
    }
    latex_poly(v)
}

fn latex_poly(p: &str) -> String {
    let mut out = String::with_capacity(p.len());
    let mut chars = p.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => out.push(' '),
            '^' => {
                out.push_str("^{");
                if chars.peek() == Some(&'(') {
                    chars.next();
                    for d in chars.by_ref() {
                        if d == ')' {
                            break;
                        }
                        out.push(d);
                    }
                } else {
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() || d == '-' {
                            out.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                }
                out.push('}');
            }
            _ => out.push(c),
        }
    }
    out
}

fn from_entries(entries: &[MatrixEntry], n: usize) -> Result<SparseOperator, CliError> {
    let mut m = SparseOperator::zero(n * n);
    for e in entries {
        if [e.i, e.j, e.k, e.l].iter().any(|&x| x == 0 || x > n) {
            return Err(CliError::Usage(format!("index out of range in ({},{};{},{})", e.i, e.j, e.k, e.l)));
        }
        let x: RatFunc = e.value.parse().map_err(|err| CliError::Usage(format!("bad value `{}`: {err}", e.value)))?;
        m.set(n * (e.i - 1) + (e.j - 1), n * (e.k - 1) + (e.l - 1), x);
    }
    Ok(m)
}

pub fn parse_json(text: &str) -> Result<(MatrixDoc, SparseOperator), CliError> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("malformed matrix JSON: {e}")))?;
    let m = from_entries(&doc.entries, vec_dim(doc.dim)?)?;
    Ok((doc, m))
}

/// Parses CSV entries of a matrix on `V ⊗ V` with `dim V = n`.
pub fn parse_csv(text: &str, n: usize) -> Result<SparseOperator, CliError> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let entries: Vec<MatrixEntry> =
        rdr.deserialize().collect::<Result<_, _>>().map_err(|e| CliError::Usage(format!("malformed matrix CSV: {e}")))?;
    from_entries(&entries, n)
}

/// A table with a header row, for the pbw, pairing, lyndon and verify outputs.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Internal(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf8"))
    }

    /// Aligned columns separated by two spaces.
    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| self.rows.iter().map(|r| r[c].chars().count()).chain([self.columns[c].chars().count()]).max().unwrap_or(0))
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(k, (c, w))| if k + 1 == cells.len() { c.clone() } else { format!("{c:<w$}") })
                .collect();
            padded.join("  ") + "\n"
        };
        let mut s = line(&self.columns);
        for r in &self.rows {
            s.push_str(&line(r));
        }
        s
    }

    /// A `tabular`-style `array` block.
    pub fn to_latex(&self) -> String {
        let mut s = format!("\\begin{{array}}{{{}}}\n", "l".repeat(self.columns.len()));
        let _ = writeln!(s, "{} \\\\ \\hline", self.columns.join(" & "));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| latex_value(c)).collect();
            let _ = writeln!(s, "{} \\\\", cells.join(" & "));
        }
        s.push_str("\\end{array}\n");
        s
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| serde_json::Value::Object(self.columns.iter().cloned().zip(r.iter().map(|c| c.clone().into())).collect()))
            .collect();
        serde_json::Value::Array(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_exponents() {
        assert_eq!(latex_value("r^(1/2)*s^(-1)"), "r^{1/2} s^{-1}");
        assert_eq!(latex_value("(r^12 - s)/(r - s)"), "\\frac{r^{12} - s}{r - s}");
        assert_eq!(latex_value("-s^(-1)"), "-s^{-1}");
    }

    #[test]
    fn vec_dim_checks_square() {
        assert_eq!(vec_dim(9).unwrap(), 3);
        assert!(vec_dim(8).is_err());
    }

    #[test]
    fn table_text_alignment() {
        let mut t = Table::new(&["a", "long"]);
        t.push(vec!["xyz".into(), "1".into()]);
        assert_eq!(t.to_text(), "a    long\nxyz  1\n");
    }
}
