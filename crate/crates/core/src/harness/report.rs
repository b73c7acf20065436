//! Verification reports and their table, CSV and JSON-lines renderings.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::Expectation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
        })
    }
}

fn big_numbers<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        let n = serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

fn big_number<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n = serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

fn expectation_str<S: Serializer>(e: &Expectation, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub label: String,
    pub kind: String,
    pub claim: bool,
    /// Largest `n` with a value; `None` when the side failed or is empty.
    pub max_n: Option<u64>,
    #[serde(serialize_with = "big_numbers")]
    pub values: Vec<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub side: String,
    #[serde(serialize_with = "big_number")]
    pub expected: BigInt,
    #[serde(serialize_with = "big_number")]
    pub found: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub statement: String,
    #[serde(serialize_with = "expectation_str")]
    pub expectation: Expectation,
    #[serde(rename = "N")]
    pub max_n: u64,
    pub scope: String,
    pub status: Status,
    pub sides: Vec<SideReport>,
    pub first_mismatch: Option<Mismatch>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Records,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "records" => Ok(Format::Records),
            _ => Err(format!("unknown format {s:?} (expected table, csv or records)")),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Drops timing so that repeated runs serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    fn headline(&self) -> String {
        let mut line = format!("{}  N={}  {}  {}", self.id, self.max_n, self.status, self.expectation);
        if let Some(m) = &self.first_mismatch {
            let _ = write!(
                line,
                "  first mismatch at n={} on {}: expected {}, found {}",
                m.n, m.side, m.expected, m.found
            );
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = write!(line, "  {ms} ms");
        }
        line
    }

    /// Headline, notes, side errors, then one row per `n`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.headline());
        let _ = writeln!(out, "  {}", self.statement);
        let _ = writeln!(out, "  {}", self.scope);
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        for side in &self.sides {
            if let Some(e) = &side.error {
                let _ = writeln!(out, "  error in {}: {e}", side.label);
            }
        }
        let rows = self.sides.iter().filter_map(|s| s.max_n).max();
        let headers: Vec<String> = self
            .sides
            .iter()
            .map(|s| {
                if s.claim {
                    format!("{}*", s.label)
                } else {
                    s.label.clone()
                }
            })
            .collect();
        let width_n = rows.unwrap_or(0).to_string().len().max(1);
        let widths: Vec<usize> = self
            .sides
            .iter()
            .zip(&headers)
            .map(|(s, h)| {
                s.values
                    .iter()
                    .map(|v| v.to_string().len())
                    .chain([h.len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut header = format!("{:>width_n$}", "n");
        for (h, w) in headers.iter().zip(&widths) {
            let _ = write!(header, "  {h:>w$}");
        }
        let _ = writeln!(out, "{}", header.trim_end());
        if let Some(rows) = rows {
            for n in 0..=rows as usize {
                let mut row = format!("{n:>width_n$}");
                for (s, w) in self.sides.iter().zip(&widths) {
                    let cell = s.values.get(n).map(ToString::to_string).unwrap_or_default();
                    let _ = write!(row, "  {cell:>w$}");
                }
                let _ = writeln!(out, "{}", row.trim_end());
            }
        }
        if self.sides.iter().any(|s| s.claim) {
            let _ = writeln!(out, "  * unproven interpretation: disagreement is FLAGGED");
        }
        out
    }

    /// Header `n,<labels>` then one row per `n`; missing cells are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for s in &self.sides {
            out.push(',');
            out.push_str(&csv_field(&s.label));
        }
        out.push('\n');
        let rows = self.sides.iter().filter_map(|s| s.max_n).max();
        if let Some(rows) = rows {
            for n in 0..=rows as usize {
                out.push_str(&n.to_string());
                for s in &self.sides {
                    out.push(',');
                    if let Some(v) = s.values.get(n) {
                        out.push_str(&v.to_string());
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Records => format!("{}\n", self.to_json()),
        }
    }
}

/// One line per report for table output, a summary CSV, or JSON lines.
pub fn render_summary(reports: &[VerificationReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            for r in reports {
                let _ = writeln!(out, "{}", r.headline());
            }
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            let _ = writeln!(
                out,
                "{} identities: {} PASS, {} FAIL, {} FLAGGED",
                reports.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Flagged)
            );
        }
        Format::Csv => {
            out.push_str("id,N,status,expectation,first_mismatch_n,first_mismatch_side\n");
            for r in reports {
                let (n, side) = match &r.first_mismatch {
                    Some(m) => (m.n.to_string(), csv_field(&m.side)),
                    None => (String::new(), String::new()),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&r.id),
                    r.max_n,
                    r.status,
                    r.expectation,
                    n,
                    side
                );
            }
        }
        Format::Records => {
            for r in reports {
                out.push_str(&r.to_json());
                out.push('\n');
            }
        }
    }
    out
}
