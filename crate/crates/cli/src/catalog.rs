use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const EMBEDDED: &str = include_str!("../data/catalog.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MckStatus {
    Trivial,
    Proven { citation: String },
    #[serde(rename = "new_in_paper")]
    New,
    Open,
}

impl fmt::Display for MckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MckStatus::Trivial => write!(f, "trivial"),
            MckStatus::Proven { citation } => write!(f, "proven ({citation})"),
            MckStatus::New => write!(f, "new"),
            MckStatus::Open => write!(f, "open"),
        }
    }
}

/// One Fano threefold of Picard rank 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoRecord {
    pub label: String,
    pub index: u32,
    /// `∫ h³` for the ample generator `h`.
    pub degree: u32,
    pub h12: u32,
    pub description: String,
    pub mck_status: MckStatus,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("record {label}: {reason}")]
    Invalid { label: String, reason: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("reading catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    records: Vec<FanoRecord>,
}

impl Catalog {
    pub fn embedded() -> Catalog {
        Catalog::parse(EMBEDDED).expect("embedded catalog is valid")
    }

    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    /// Parses one JSON object per non-empty line and validates each record.
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut records = Vec::new();
        let mut seen = HashSet::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let rec: FanoRecord = serde_json::from_str(line).map_err(|source| CatalogError::Json { line: n + 1, source })?;
            let invalid = |reason: &str| CatalogError::Invalid { label: rec.label.clone(), reason: reason.into() };
            if rec.degree == 0 {
                return Err(invalid("degree must be >= 1"));
            }
            if (rec.h12 == 0) != (rec.mck_status == MckStatus::Trivial) {
                return Err(invalid("status is trivial exactly when h12 = 0"));
            }
            if !seen.insert(rec.label.clone()) {
                return Err(invalid("duplicate label"));
            }
            records.push(rec);
        }
        Ok(Catalog { records })
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn records(&self) -> &[FanoRecord] {
        &self.records
    }

    pub fn get(&self, label: &str) -> Result<&FanoRecord, CatalogError> {
        self.records.iter().find(|r| r.label == label).ok_or_else(|| CatalogError::UnknownLabel(label.into()))
    }

    /// Distinct `(degree, h12)` pairs of the records with `h12 > 0`.
    pub fn nontrivial_params(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self.records.iter().filter(|r| r.h12 > 0).map(|r| (r.degree, r.h12)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
