//! Row-per-report tables for the commands that take several weights.

use metahecke::forms::{ShimuraReport, SteinbergReport};
use metahecke::report::all_pass;
use serde::Serialize;

#[derive(Clone, Debug)]
pub enum Row {
    Shimura(ShimuraReport),
    Steinberg(SteinbergReport),
}

impl Row {
    fn kind(&self) -> &'static str {
        match self {
            Row::Shimura(_) => "shimura",
            Row::Steinberg(_) => "steinberg",
        }
    }

    fn cells(&self) -> Vec<String> {
        let opt = |s: &Option<String>| s.clone().unwrap_or_else(|| "-".into());
        match self {
            Row::Shimura(s) => vec![
                s.r.to_string(),
                s.precision.to_string(),
                s.dim_plus.to_string(),
                opt(&s.lambda2),
                opt(&s.a2_integral),
                all_pass(&s.checks).to_string(),
            ],
            Row::Steinberg(s) => {
                let pieces: Vec<String> = s.steinberg.iter().map(|p| format!("St({}):{}", p.eps, p.dim)).collect();
                vec![
                    s.r.to_string(),
                    s.precision.to_string(),
                    s.dim_cusp.to_string(),
                    s.dim_minus.to_string(),
                    if pieces.is_empty() { "-".into() } else { pieces.join(" ") },
                    s.principal_dim.to_string(),
                    all_pass(&s.checks).to_string(),
                ]
            }
        }
    }
}

fn columns(kind: &str) -> Vec<String> {
    let cols: &[&str] = match kind {
        "shimura" => &["r", "precision", "dim_plus", "lambda2", "a2", "pass"],
        "steinberg" => &["r", "precision", "dim_cusp", "dim_minus", "steinberg", "principal_dim", "pass"],
        _ => &[],
    };
    cols.iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub kind: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, PartialEq, Eq)]
pub struct MixedKinds(pub String, pub String);

impl std::fmt::Display for MixedKinds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cannot tabulate {} and {} reports together", self.0, self.1)
    }
}

pub fn emit_table(rows: &[Row]) -> Result<Table, MixedKinds> {
    let Some(first) = rows.first() else {
        return Ok(Table { kind: None, columns: Vec::new(), rows: Vec::new() });
    };
    let kind = first.kind();
    if let Some(other) = rows.iter().find(|r| r.kind() != kind) {
        return Err(MixedKinds(kind.into(), other.kind().into()));
    }
    Ok(Table { kind: Some(kind.into()), columns: columns(kind), rows: rows.iter().map(Row::cells).collect() })
}

impl Table {
    /// Left-aligned text rendering.
    pub fn render(&self) -> String {
        if self.columns.is_empty() {
            return String::new();
        }
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.columns);
        for row in &self.rows {
            out += &line(row);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use metahecke::forms::{shimura_check, steinberg_detect};

    #[test]
    fn shimura_rows_carry_lambda2() {
        let rows: Vec<Row> = [13, 17, 21].into_iter().map(|r| Row::Shimura(shimura_check(r, 100).unwrap())).collect();
        let t = emit_table(&rows).unwrap();
        let col = t.columns.iter().position(|c| c == "lambda2").unwrap();
        let lambdas: Vec<&str> = t.rows.iter().map(|r| r[col].as_str()).collect();
        assert_eq!(lambdas, ["-24", "216", "456"]);
    }

    #[test]
    fn empty_input_gives_empty_table() {
        let t = emit_table(&[]).unwrap();
        assert!(t.rows.is_empty() && t.columns.is_empty());
        assert_eq!(t.render(), "");
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        let rows = [Row::Shimura(shimura_check(13, 100).unwrap()), Row::Steinberg(steinberg_detect(9, 100).unwrap())];
        assert_eq!(emit_table(&rows), Err(MixedKinds("shimura".into(), "steinberg".into())));
    }
}
