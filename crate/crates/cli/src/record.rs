//! Serialized classification records and the per-index table.

use std::collections::BTreeMap;

use lrp_core::polygon::Polygon;
use lrp_core::reflexive::{classify, hstar, LReflexiveRecord};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One classification record as written to JSON. Vertices run
/// counterclockwise from the first column of the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub l: i64,
    pub vertices: Vec<[i64; 2]>,
    pub dual_vertices: Vec<[i64; 2]>,
    pub source_id: usize,
    pub hnf_i: i64,
    pub b: i64,
    pub b_dual: i64,
    pub self_dual: bool,
    pub order: i64,
    pub hstar: [i64; 3],
}

impl RecordJson {
    pub fn from_record(r: &LReflexiveRecord) -> Self {
        let h = hstar(r);
        RecordJson {
            l: r.index,
            vertices: r.polygon.vertices().iter().map(|v| v.0).collect(),
            dual_vertices: r.dual.vertices().iter().map(|v| v.0).collect(),
            source_id: r.source_id,
            hnf_i: r.hnf_i,
            b: r.b,
            b_dual: r.b_dual,
            self_dual: r.self_dual,
            order: r.order,
            hstar: [h.c0, h.c1, h.c2],
        }
    }

    /// Rebuilds the record from its vertices and checks every stored
    /// invariant against the recomputed one.
    pub fn to_record(&self) -> Result<LReflexiveRecord, CliError> {
        let polygon = Polygon::from_vertices(self.vertices.iter().map(|&v| v.into()).collect())?;
        let r = LReflexiveRecord::new(polygon, self.l, self.source_id, self.hnf_i)?;
        let again = RecordJson::from_record(&r);
        if &again != self {
            return Err(CliError::Inconsistent(format!(
                "stored record does not match its vertices: {}",
                serde_json::to_string(self).unwrap_or_default()
            )));
        }
        Ok(r)
    }
}

/// Counts and records of one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub count: usize,
    pub self_dual: usize,
    pub records: Vec<LReflexiveRecord>,
}

impl TableRow {
    pub fn new(records: Vec<LReflexiveRecord>) -> Self {
        TableRow {
            count: records.len(),
            self_dual: records.iter().filter(|r| r.self_dual).count(),
            records,
        }
    }
}

/// Classification results keyed by index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationTable {
    pub rows: BTreeMap<i64, TableRow>,
}

impl ClassificationTable {
    /// Classifies every index in `indices`, in parallel across indices.
    pub fn compute(indices: impl IntoIterator<Item = i64>) -> Self {
        let indices: Vec<i64> = indices.into_iter().collect();
        let rows = indices
            .into_par_iter()
            .map(|l| (l, TableRow::new(classify(l))))
            .collect();
        ClassificationTable { rows }
    }

    /// Odd indices up to `max_l`.
    pub fn odd_up_to(max_l: i64) -> Self {
        Self::compute((1..=max_l).step_by(2))
    }

    /// Groups already computed records by index.
    pub fn from_records(records: Vec<LReflexiveRecord>) -> Self {
        let mut grouped: BTreeMap<i64, Vec<LReflexiveRecord>> = BTreeMap::new();
        for r in records {
            grouped.entry(r.index).or_default().push(r);
        }
        ClassificationTable {
            rows: grouped
                .into_iter()
                .map(|(l, rs)| (l, TableRow::new(rs)))
                .collect(),
        }
    }

    pub fn records(&self) -> impl Iterator<Item = &LReflexiveRecord> {
        self.rows.values().flat_map(|row| row.records.iter())
    }

    pub fn to_json(&self) -> Vec<RecordJson> {
        self.records().map(RecordJson::from_record).collect()
    }
}
