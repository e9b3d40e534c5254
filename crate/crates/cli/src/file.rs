//! JSON interchange formats.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use stirling_kit::{DomainTag, SMatrix, SequenceRecord, Values};

use crate::error::{CliError, CliResult};

/// `{"name": .., "domain": "int|rational|surd5|poly", "values": [..], "meta": {..}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub name: String,
    pub domain: String,
    pub values: Vec<String>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl SequenceFile {
    pub fn from_record(record: &SequenceRecord) -> Self {
        SequenceFile {
            name: record.name().to_string(),
            domain: record.domain().to_string(),
            values: record.values().render(),
            meta: record.meta().clone(),
        }
    }

    /// Parse every value in the declared domain.
    pub fn to_record(&self) -> CliResult<SequenceRecord> {
        let domain: DomainTag = self.domain.parse()?;
        let values = Values::parse(domain, &self.values)?;
        let mut record = SequenceRecord::new(self.name.clone(), values)?;
        for (k, v) in &self.meta {
            record = record.with_meta(k.clone(), v);
        }
        Ok(record)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("string maps always serialize")
    }

    /// Read a file, or standard input when `path` is `-`.
    pub fn read(path: &Path) -> CliResult<Self> {
        let read_err = |source| CliError::Read {
            path: path.to_path_buf(),
            source,
        };
        let text = if path == Path::new("-") {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(read_err)?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(read_err)?
        };
        Self::from_json(&text)
    }
}

/// JSON rendering of a matrix block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub from: String,
    pub domain: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn new<T: stirling_kit::Module>(from: &str, domain: DomainTag, s: &SMatrix<T>) -> Self {
        MatrixFile {
            from: from.to_string(),
            domain: domain.to_string(),
            rows: s.rows(),
            cols: s.cols(),
            entries: s
                .entries()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}
