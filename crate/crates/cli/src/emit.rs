use std::fmt;
use std::str::FromStr;

use roughspace_core::chain::{FeasibilityRow, ScanRegime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected table or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Csv => "csv",
        })
    }
}

/// Homogeneous rows under a fixed header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

pub fn emit_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(&table.header).expect("writing to memory");
            for row in &table.rows {
                w.write_record(row).expect("writing to memory");
            }
            String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
        }
        Format::Table => {
            let mut widths: Vec<usize> = table.header.iter().map(|h| h.chars().count()).collect();
            for row in &table.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &mut dyn Iterator<Item = &str>| {
                let padded: Vec<String> = cells
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(&mut table.header.iter().copied());
            for row in &table.rows {
                out += &line(&mut row.iter().map(String::as_str));
            }
            out
        }
    }
}

/// Column layout of a scan: `n,feasible,k` for the square-type regimes,
/// `n,k,pi_num,pi_den,admissible` for RDC.
pub fn scan_table(regime: ScanRegime, rows: &[FeasibilityRow]) -> Table {
    let opt = |v: Option<u64>| v.map(|k| k.to_string()).unwrap_or_default();
    let mut table = Table::new(match regime {
        ScanRegime::Pwc | ScanRegime::Wdc => vec!["n", "feasible", "k"],
        ScanRegime::Boolean => vec!["n", "feasible", "x", "k"],
        ScanRegime::Rdc => vec!["n", "k", "pi_num", "pi_den", "admissible"],
        ScanRegime::RdcCounts => vec!["n", "admissible_k"],
    });
    for r in rows {
        table.push(match regime {
            ScanRegime::Pwc | ScanRegime::Wdc => vec![r.n.to_string(), r.feasible().to_string(), opt(r.k)],
            ScanRegime::Boolean => vec![
                r.n.to_string(),
                r.feasible().to_string(),
                r.exponent.map(|x| x.to_string()).unwrap_or_default(),
                opt(r.k),
            ],
            ScanRegime::Rdc => {
                let (num, den) = r
                    .pi
                    .as_ref()
                    .map(|p| (p.numer().to_string(), p.denom().to_string()))
                    .unwrap_or_default();
                vec![r.n.to_string(), opt(r.k), num, den, r.admissible.to_string()]
            }
            ScanRegime::RdcCounts => vec![r.n.to_string(), opt(r.count)],
        });
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_csv_is_header_only() {
        let t = Table::new(vec!["n", "feasible", "k"]);
        assert_eq!(emit_table(&t, Format::Csv), "n,feasible,k\n");
    }

    #[test]
    fn aligned_table() {
        let mut t = Table::new(vec!["n", "k"]);
        t.push(vec!["100".into(), "10".into()]);
        assert_eq!(emit_table(&t, Format::Table), "n    k\n100  10\n");
    }

    #[test]
    fn format_tags() {
        assert_eq!("csv".parse(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
