//! Deterministic CSV and JSON emission.
//!
//! CSV layout: `# key,value` metadata lines, one header row, then data
//! rows. Floats are written with 17 significant digits (`{:.16e}`), which
//! round-trips every f64 exactly; line endings are LF and the decimal
//! separator is `.` regardless of locale.

use sfi_core::scan::ScanResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Str(String),
    F64(f64),
    U64(u64),
    Bool(bool),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::F64(v) => fmt_float(*v),
            Cell::U64(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Str(s) => serde_json::Value::from(s.as_str()),
            Cell::F64(v) => serde_json::Value::from(*v),
            Cell::U64(v) => serde_json::Value::from(*v),
            Cell::Bool(b) => serde_json::Value::from(*b),
        }
    }
}

/// 17 significant digits: exact round-trip for f64.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn from_scan(result: &ScanResult, lab: &[(String, Cell)]) -> Table {
        let m = &result.meta;
        let mut meta = vec![
            ("schema_version".into(), Cell::U64(m.schema_version as u64)),
            ("kind".into(), Cell::Str(m.kind.name().into())),
        ];
        meta.extend(lab.iter().cloned());
        meta.extend([
            ("omega_au".into(), Cell::F64(m.omega)),
            ("f0_au".into(), Cell::F64(m.f0)),
            ("gamma".into(), Cell::F64(m.gamma)),
            ("up_au".into(), Cell::F64(m.up)),
            ("ip_au".into(), Cell::F64(m.ip)),
            ("normalized".into(), Cell::Bool(m.normalized)),
        ]);
        if let Some(r) = m.reference_log_rate {
            meta.push(("reference_log_rate".into(), Cell::F64(r)));
        }
        Table {
            meta,
            columns: result.columns.iter().map(|c| c.to_string()).collect(),
            rows: result
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| Cell::F64(v)).collect())
                .collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            out.push_str(&format!("# {key},{}\n", value.to_csv()));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let meta: serde_json::Map<String, serde_json::Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| serde_json::Value::from(r.iter().map(Cell::to_json).collect::<Vec<_>>()))
            .collect();
        let doc = serde_json::json!({
            "meta": meta,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable document");
        s.push('\n');
        s
    }
}

/// Parse CSV produced by [`Table::to_csv`]. Metadata values are kept as raw
/// strings; row cells in scientific notation become floats, everything else
/// stays a string. Re-emitting the parsed table reproduces the input byte
/// for byte.
pub fn parse_csv(text: &str) -> Result<Table, String> {
    let mut meta = Vec::new();
    let mut columns: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix("# ") {
            let (key, value) = rest
                .split_once(',')
                .ok_or_else(|| format!("line {}: metadata without value", lineno + 1))?;
            meta.push((key.to_string(), Cell::Str(value.to_string())));
        } else if columns.is_none() {
            columns = Some(line.split(',').map(str::to_string).collect());
        } else {
            let cells = line
                .split(',')
                .map(|tok| {
                    if tok.contains('e') {
                        if let Ok(v) = tok.parse::<f64>() {
                            return Cell::F64(v);
                        }
                    }
                    Cell::Str(tok.to_string())
                })
                .collect();
            rows.push(cells);
        }
    }
    Ok(Table {
        meta,
        columns: columns.ok_or("missing header row")?,
        rows,
    })
}
