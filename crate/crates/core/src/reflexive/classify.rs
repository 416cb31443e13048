//! Classification of `l`-reflexive polygons by Hermite normal forms.
//!
//! Every `l`-reflexive polygon is isomorphic to the image of one of the
//! sixteen normalized reflexive polygons under a map `(l i / 0 1)` with
//! `0 < i < l` coprime to `l`. Candidates are tested independently and then
//! merged by canonical form, keeping the smallest `(source_id, i)` as
//! provenance, so the output does not depend on scheduling.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::lattice::IntMatrix;
use crate::polygon::Polygon;

use super::{is_l_reflexive, representatives, LReflexiveRecord};

/// The map `(l i / 0 1)` acting on row vectors.
pub fn hnf_map(l: i64, i: i64) -> IntMatrix {
    IntMatrix::from_rows(&[[l, i], [0, 1]])
}

/// A polygon produced by one `(source_id, i)` pair that passed the test.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub source_id: usize,
    pub hnf_i: i64,
    pub polygon: Polygon,
}

/// One record per isomorphism class of `l`-reflexive polygons, sorted by
/// canonical form. Even indices run the full search (and come back empty).
pub fn classify(l: i64) -> Vec<LReflexiveRecord> {
    classify_with_representatives(l, representatives())
}

/// As [`classify`], starting from an explicit list of normalized reflexive
/// polygons (ids are positions plus one).
pub fn classify_with_representatives(l: i64, reps: &[Polygon]) -> Vec<LReflexiveRecord> {
    assert!(l >= 1, "index must be positive");
    let candidates: Vec<Candidate> = if l == 1 {
        reps.iter()
            .enumerate()
            .map(|(k, q)| Candidate {
                source_id: k + 1,
                hnf_i: 0,
                polygon: q.clone(),
            })
            .collect()
    } else {
        let pairs: Vec<(usize, i64)> = (1..=reps.len())
            .flat_map(|id| (1..l).filter(move |i| i.gcd(&l) == 1).map(move |i| (id, i)))
            .collect();
        pairs
            .into_par_iter()
            .filter_map(|(id, i)| {
                let p = reps[id - 1].apply_matrix(&hnf_map(l, i)).ok()?;
                (is_l_reflexive(&p) == Some(l)).then_some(Candidate {
                    source_id: id,
                    hnf_i: i,
                    polygon: p,
                })
            })
            .collect()
    };

    let mut classes: BTreeMap<IntMatrix, Candidate> = BTreeMap::new();
    for c in candidates {
        let key = c.polygon.canonical_form();
        match classes.get(&key) {
            Some(old) if (old.source_id, old.hnf_i) <= (c.source_id, c.hnf_i) => {}
            _ => {
                classes.insert(key, c);
            }
        }
    }
    classes
        .into_values()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|c| {
            LReflexiveRecord::new(
                c.polygon.canonical_representative(),
                l,
                c.source_id,
                c.hnf_i,
            )
            .expect("candidate was tested reflexive")
        })
        .collect()
}
