//! CSV export of tables: header `kind,m_or_class,n,value`, rows ordered by
//! `n` ascending and then by `m_or_class` ascending.

use std::io::Write;

use serde::Serialize;

/// One exported table cell. `m_or_class` is the rank, residue class or moment
/// order, and is `None` for one-dimensional tables such as `p(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsvRow {
    pub kind: String,
    pub m_or_class: Option<i64>,
    pub n: i64,
    pub value: String,
}

impl CsvRow {
    pub fn new(kind: &str, m_or_class: Option<i64>, n: i64, value: impl ToString) -> Self {
        CsvRow {
            kind: kind.to_string(),
            m_or_class,
            n,
            value: value.to_string(),
        }
    }
}

/// Writes rows in the deterministic export order.
pub fn write_csv<W: Write>(rows: &[CsvRow], out: W) -> csv::Result<()> {
    let mut sorted: Vec<&CsvRow> = rows.iter().collect();
    sorted.sort_by(|a, b| (a.n, a.m_or_class, &a.kind).cmp(&(b.n, b.m_or_class, &b.kind)));
    let mut w = csv::Writer::from_writer(out);
    for r in sorted {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
