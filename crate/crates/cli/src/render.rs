use std::fmt::Write as _;

use orbifold_gw::exact::Rational;
use orbifold_gw::frobenius::{IdentityReport, Status};
use orbifold_gw::series::{PuiseuxSeries, QSeries};
use serde::{Deserialize, Serialize};

use crate::Format;

/// `scalar * q^offset * series`; expansions with integer offset and unit
/// scalar are stored with `offset = "0/1"` and the shift folded in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedSeries {
    pub name: String,
    pub scalar: String,
    pub offset: String,
    pub series: QSeries,
}

impl NamedSeries {
    pub fn laurent(name: &str, series: QSeries) -> Self {
        Self {
            name: name.to_string(),
            scalar: Rational::one().to_fraction_string(),
            offset: Rational::zero().to_fraction_string(),
            series,
        }
    }

    pub fn puiseux(name: &str, p: &PuiseuxSeries) -> Self {
        if p.scalar().is_one() && p.offset().is_integer() {
            if let Ok(l) = p.to_laurent() {
                return Self::laurent(name, l);
            }
        }
        Self {
            name: name.to_string(),
            scalar: p.scalar().to_fraction_string(),
            offset: p.offset().to_fraction_string(),
            series: p.unit().clone(),
        }
    }

    fn text(&self) -> String {
        let mut parts = Vec::new();
        if self.scalar != "1/1" {
            parts.push(format!("({})", display_fraction(&self.scalar)));
        }
        if self.offset != "0/1" {
            parts.push(format!("q^({})", display_fraction(&self.offset)));
        }
        if parts.is_empty() {
            return self.series.to_string();
        }
        parts.push(format!("({})", self.series));
        parts.join(" * ")
    }
}

fn display_fraction(s: &str) -> String {
    s.parse::<Rational>()
        .map(|r| r.to_string())
        .unwrap_or_else(|_| s.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: i64,
    pub c_k: String,
    pub eta: String,
    pub recursion: String,
    pub direct: String,
}

/// Everything one command produces; this is also the JSON schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub order: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<NamedSeries>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<TableRow>,
    #[serde(default)]
    pub reports: Vec<IdentityReport>,
    pub status: Status,
}

impl Document {
    pub fn new(command: &str, target: Option<&str>, order: i64) -> Self {
        Self {
            command: command.to_string(),
            target: target.map(str::to_string),
            order,
            notes: Vec::new(),
            series: Vec::new(),
            table: Vec::new(),
            reports: Vec::new(),
            status: Status::Pass,
        }
    }

    /// Sets `status` from the reports and table.
    pub fn finish(mut self) -> Self {
        let table_ok = self
            .table
            .iter()
            .all(|r| r.eta == r.recursion && r.eta == r.direct);
        self.status = if table_ok && self.reports.iter().all(IdentityReport::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Text => text(doc),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv(doc),
    }
}

fn text(doc: &Document) -> String {
    let mut out = String::new();
    for n in &doc.notes {
        let _ = writeln!(out, "# {n}");
    }
    if doc.command == "expand" {
        for s in &doc.series {
            let _ = writeln!(out, "{}", s.text());
        }
    } else {
        for s in &doc.series {
            let _ = writeln!(out, "{} = {}", s.name, s.text());
        }
    }
    if !doc.table.is_empty() {
        let _ = writeln!(out, "{:>3}  {:>6}", "k", "c_k");
        for r in &doc.table {
            let mark = if r.eta == r.recursion && r.eta == r.direct {
                ""
            } else {
                "  MISMATCH"
            };
            let _ = writeln!(out, "{:>3}  {:>6}{mark}", r.k, display_fraction(&r.c_k));
        }
    }
    for r in &doc.reports {
        let _ = writeln!(out, "{r}");
    }
    out
}

fn csv(doc: &Document) -> String {
    let mut out = String::new();
    if !doc.table.is_empty() {
        out.push_str("k,c_k\n");
        for r in &doc.table {
            let _ = writeln!(out, "{},{}", r.k, r.c_k);
        }
        return out;
    }
    if doc.command == "expand" {
        out.push_str("exponent,coefficient\n");
        for s in &doc.series {
            let offset: Rational = s.offset.parse().unwrap_or_else(|_| Rational::zero());
            let scalar: Rational = s.scalar.parse().unwrap_or_else(|_| Rational::one());
            for (n, c) in s.series.terms() {
                let e = &offset + &Rational::from_integer(n);
                let _ = writeln!(
                    out,
                    "{},{}",
                    e.to_fraction_string(),
                    (&scalar * c).to_fraction_string()
                );
            }
        }
        return out;
    }
    out.push_str("name,order,status,failure_exponent\n");
    for r in &doc.reports {
        let status = if r.passed() { "pass" } else { "fail" };
        let exp = r
            .failure
            .as_ref()
            .map(|f| f.exponent.to_string())
            .unwrap_or_default();
        let _ = writeln!(out, "{},{},{status},{exp}", r.name, r.order);
    }
    out
}
