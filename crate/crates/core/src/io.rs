//! JSON and CSV forms of comajor lists and prelaminations.
//!
//! A comajor is written as `{"a": "p/q", "b": "p/q", "type": "B", "block": n}`;
//! the CSV form has the header `a,b,type,block`. Angles stay exact fractions.

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::chord::Chord;
use crate::error::{Error, Result};
use crate::lavaurs::{BuildState, ComajorRecord};
use crate::orbit::PointType;
use crate::pullback::Prelamination;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafRow {
    pub a: Angle,
    pub b: Angle,
    #[serde(rename = "type")]
    pub ptype: PointType,
    pub block: u32,
}

impl From<&ComajorRecord> for LeafRow {
    fn from(r: &ComajorRecord) -> Self {
        LeafRow {
            a: r.chord.a().clone(),
            b: r.chord.b().clone(),
            ptype: r.ptype,
            block: r.block_period,
        }
    }
}

impl From<LeafRow> for ComajorRecord {
    fn from(row: LeafRow) -> Self {
        ComajorRecord::new(Chord::new(row.a, row.b), row.ptype, row.block)
    }
}

fn serde_err(e: impl std::fmt::Display) -> Error {
    Error::Serde(e.to_string())
}

pub fn records_to_json(records: &[ComajorRecord]) -> Result<String> {
    let rows: Vec<LeafRow> = records.iter().map(LeafRow::from).collect();
    serde_json::to_string_pretty(&rows).map_err(serde_err)
}

pub fn records_from_json(text: &str) -> Result<Vec<ComajorRecord>> {
    let rows: Vec<LeafRow> = serde_json::from_str(text).map_err(serde_err)?;
    Ok(rows.into_iter().map(ComajorRecord::from).collect())
}

pub fn records_to_csv(records: &[ComajorRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(LeafRow::from(r)).map_err(serde_err)?;
    }
    if records.is_empty() {
        w.write_record(["a", "b", "type", "block"]).map_err(serde_err)?;
    }
    let bytes = w.into_inner().map_err(serde_err)?;
    String::from_utf8(bytes).map_err(serde_err)
}

pub fn records_from_csv(text: &str) -> Result<Vec<ComajorRecord>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize::<LeafRow>()
        .map(|row| row.map(ComajorRecord::from).map_err(serde_err))
        .collect()
}

pub fn state_to_json(state: &BuildState) -> Result<String> {
    records_to_json(state.leaves())
}

pub fn state_from_json(text: &str) -> Result<BuildState> {
    Ok(BuildState::from_records(records_from_json(text)?))
}

pub fn prelamination_to_json(lam: &Prelamination) -> Result<String> {
    serde_json::to_string_pretty(lam).map_err(serde_err)
}
