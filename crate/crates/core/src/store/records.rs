use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arith::CoprimeMode;
use crate::audit::ProofAudit;
use crate::error::{Error, Result};
use crate::powersum::PowerSumSolution;
use crate::tuples::{AbcTuple, Epsilon};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Jsonl,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            other => Err(Error::domain(format!("unknown output format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Csv => "csv",
        })
    }
}

/// Formats `q` with 10 significant digits in positional notation.
pub fn format_quality(q: f64) -> String {
    if !q.is_finite() || q == 0.0 {
        return q.to_string();
    }
    // Take the exponent after rounding so 9.99999999996 becomes "10.00000000".
    let sci = format!("{q:.9e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let decimals = (9 - exp).max(0) as usize;
    format!("{q:.decimals$}")
}

/// A flat record type with a JSONL and a CSV encoding.
pub trait ExportRecord: Serialize + DeserializeOwned {
    const KIND: &'static str;
    const CSV_HEADER: &'static [&'static str];

    fn csv_fields(&self) -> Vec<String>;
    fn from_csv_fields(fields: &[&str]) -> Result<Self>;
}

fn join_list(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    parts.join(";")
}

fn split_list(field: &str) -> Result<Vec<u64>> {
    field.split(';').map(parse_field).collect()
}

fn parse_field<T: FromStr>(field: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::Parse(format!("unexpected field value {field:?}")))
}

fn check_kind(kind: &str, expected: &str, version: u32) -> Result<()> {
    if kind != expected {
        return Err(Error::Parse(format!("expected kind {expected:?}, found {kind:?}")));
    }
    if version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported schema version {version}")));
    }
    Ok(())
}

/// One high-quality tuple from a hunt with the given `ε`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub schema_version: u32,
    pub kind: String,
    pub k: usize,
    pub epsilon: f64,
    pub parts: Vec<u64>,
    pub b: u64,
    pub radical: u128,
    pub quality: String,
    pub setwise_coprime: bool,
    pub pairwise_coprime: bool,
    /// Too close to `1 + ε` to classify in floating point.
    pub borderline: bool,
}

impl TupleRecord {
    pub fn new(tuple: &AbcTuple, epsilon: Epsilon, borderline: bool) -> Self {
        TupleRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: tuple.k(),
            epsilon: epsilon.value(),
            parts: tuple.parts.clone(),
            b: tuple.sum_b,
            radical: tuple.radical_r,
            quality: format_quality(tuple.quality_q),
            setwise_coprime: tuple.is_coprime(CoprimeMode::Setwise),
            pairwise_coprime: tuple.is_coprime(CoprimeMode::Pairwise),
            borderline,
        }
    }
}

impl ExportRecord for TupleRecord {
    const KIND: &'static str = "abc_tuple";
    const CSV_HEADER: &'static [&'static str] = &[
        "k",
        "epsilon",
        "b",
        "parts",
        "radical",
        "quality",
        "setwise_coprime",
        "pairwise_coprime",
        "borderline",
    ];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.epsilon.to_string(),
            self.b.to_string(),
            join_list(&self.parts),
            self.radical.to_string(),
            self.quality.clone(),
            self.setwise_coprime.to_string(),
            self.pairwise_coprime.to_string(),
            self.borderline.to_string(),
        ]
    }

    fn from_csv_fields(f: &[&str]) -> Result<Self> {
        Ok(TupleRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: parse_field(f[0])?,
            epsilon: parse_field(f[1])?,
            b: parse_field(f[2])?,
            parts: split_list(f[3])?,
            radical: parse_field(f[4])?,
            quality: f[5].to_string(),
            setwise_coprime: parse_field(f[6])?,
            pairwise_coprime: parse_field(f[7])?,
            borderline: parse_field(f[8])?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub schema_version: u32,
    pub kind: String,
    pub k: usize,
    pub n: u32,
    pub z: u64,
    pub xs: Vec<u64>,
    pub setwise_coprime: bool,
    pub pairwise_coprime: bool,
}

impl From<&PowerSumSolution> for SolutionRecord {
    fn from(s: &PowerSumSolution) -> Self {
        SolutionRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: s.k,
            n: s.n,
            z: s.z,
            xs: s.xs.clone(),
            setwise_coprime: s.setwise_coprime,
            pairwise_coprime: s.pairwise_coprime,
        }
    }
}

impl SolutionRecord {
    pub fn to_solution(&self) -> PowerSumSolution {
        PowerSumSolution {
            k: self.k,
            n: self.n,
            xs: self.xs.clone(),
            z: self.z,
            setwise_coprime: self.setwise_coprime,
            pairwise_coprime: self.pairwise_coprime,
        }
    }
}

impl ExportRecord for SolutionRecord {
    const KIND: &'static str = "power_sum";
    const CSV_HEADER: &'static [&'static str] = &["k", "n", "z", "xs", "setwise_coprime", "pairwise_coprime"];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.n.to_string(),
            self.z.to_string(),
            join_list(&self.xs),
            self.setwise_coprime.to_string(),
            self.pairwise_coprime.to_string(),
        ]
    }

    fn from_csv_fields(f: &[&str]) -> Result<Self> {
        Ok(SolutionRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: parse_field(f[0])?,
            n: parse_field(f[1])?,
            z: parse_field(f[2])?,
            xs: split_list(f[3])?,
            setwise_coprime: parse_field(f[4])?,
            pairwise_coprime: parse_field(f[5])?,
        })
    }
}

/// Big integers are written as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub schema_version: u32,
    pub kind: String,
    pub k: usize,
    pub n: u32,
    pub z: u64,
    pub xs: Vec<u64>,
    pub b_val: String,
    pub rad_val: String,
    pub rad_sq: String,
    pub prod_sq: String,
    pub z_pow_bound: String,
    pub premise_holds: bool,
    pub link2_holds: bool,
    pub link3_holds: bool,
    pub implied_n_bound: u32,
}

impl From<&ProofAudit> for AuditRecord {
    fn from(a: &ProofAudit) -> Self {
        AuditRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: a.solution.k,
            n: a.solution.n,
            z: a.solution.z,
            xs: a.solution.xs.clone(),
            b_val: a.b_val.to_string(),
            rad_val: a.rad_val.to_string(),
            rad_sq: a.rad_sq.to_string(),
            prod_sq: a.prod_sq.to_string(),
            z_pow_bound: a.z_pow_bound.to_string(),
            premise_holds: a.premise_holds,
            link2_holds: a.link2_holds,
            link3_holds: a.link3_holds,
            implied_n_bound: a.implied_n_bound,
        }
    }
}

impl ExportRecord for AuditRecord {
    const KIND: &'static str = "proof_audit";
    const CSV_HEADER: &'static [&'static str] = &[
        "k",
        "n",
        "z",
        "xs",
        "b_val",
        "rad_val",
        "rad_sq",
        "prod_sq",
        "z_pow_bound",
        "premise_holds",
        "link2_holds",
        "link3_holds",
        "implied_n_bound",
    ];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.n.to_string(),
            self.z.to_string(),
            join_list(&self.xs),
            self.b_val.clone(),
            self.rad_val.clone(),
            self.rad_sq.clone(),
            self.prod_sq.clone(),
            self.z_pow_bound.clone(),
            self.premise_holds.to_string(),
            self.link2_holds.to_string(),
            self.link3_holds.to_string(),
            self.implied_n_bound.to_string(),
        ]
    }

    fn from_csv_fields(f: &[&str]) -> Result<Self> {
        Ok(AuditRecord {
            schema_version: SCHEMA_VERSION,
            kind: Self::KIND.to_string(),
            k: parse_field(f[0])?,
            n: parse_field(f[1])?,
            z: parse_field(f[2])?,
            xs: split_list(f[3])?,
            b_val: f[4].to_string(),
            rad_val: f[5].to_string(),
            rad_sq: f[6].to_string(),
            prod_sq: f[7].to_string(),
            z_pow_bound: f[8].to_string(),
            premise_holds: parse_field(f[9])?,
            link2_holds: parse_field(f[10])?,
            link3_holds: parse_field(f[11])?,
            implied_n_bound: parse_field(f[12])?,
        })
    }
}

/// Index of the list-valued column, which is always quoted.
fn list_column<R: ExportRecord>() -> Option<usize> {
    R::CSV_HEADER.iter().position(|h| matches!(*h, "parts" | "xs"))
}

pub fn export<R: ExportRecord, W: Write>(records: &[R], format: Format, mut out: W) -> Result<()> {
    let io = |e| Error::io("<output>", e);
    match format {
        Format::Jsonl => {
            for r in records {
                let line = serde_json::to_string(r).map_err(|e| Error::Parse(e.to_string()))?;
                writeln!(out, "{line}").map_err(io)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", R::CSV_HEADER.join(",")).map_err(io)?;
            let quoted = list_column::<R>();
            for r in records {
                let fields: Vec<String> = r
                    .csv_fields()
                    .into_iter()
                    .enumerate()
                    .map(|(i, f)| if Some(i) == quoted { format!("\"{f}\"") } else { f })
                    .collect();
                writeln!(out, "{}", fields.join(",")).map_err(io)?;
            }
        }
    }
    out.flush().map_err(io)
}

pub fn export_to_path<R: ExportRecord>(records: &[R], format: Format, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    export(records, format, BufWriter::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// Reads back a file written by [`export`].
pub fn parse<R: ExportRecord>(input: impl BufRead, format: Format) -> Result<Vec<R>> {
    match format {
        Format::Jsonl => {
            let mut records = Vec::new();
            for line in input.lines() {
                let line = line.map_err(|e| Error::io("<input>", e))?;
                if line.is_empty() {
                    continue;
                }
                let value: serde_json::Value =
                    serde_json::from_str(&line).map_err(|e| Error::Parse(e.to_string()))?;
                let kind = value.get("kind").and_then(|k| k.as_str()).unwrap_or_default();
                let version = value.get("schema_version").and_then(|v| v.as_u64()).unwrap_or(0);
                check_kind(kind, R::KIND, version as u32)?;
                records.push(serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?);
            }
            Ok(records)
        }
        Format::Csv => {
            let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
            let header = reader.headers().map_err(|e| Error::Parse(e.to_string()))?;
            if header.iter().ne(R::CSV_HEADER.iter().copied()) {
                return Err(Error::Parse(format!("unexpected CSV header for {}", R::KIND)));
            }
            let mut records = Vec::new();
            for row in reader.records() {
                let row = row.map_err(|e| Error::Parse(e.to_string()))?;
                let fields: Vec<&str> = row.iter().collect();
                if fields.len() != R::CSV_HEADER.len() {
                    return Err(Error::Parse(format!("expected {} columns", R::CSV_HEADER.len())));
                }
                records.push(R::from_csv_fields(&fields)?);
            }
            Ok(records)
        }
    }
}
