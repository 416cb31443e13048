//! The `3k`-reflexive polygons for odd `k`.
//!
//! Each one is the image of the centrally symmetric reflexive hexagon under
//! `(3k i / 0 1)` with `gcd(3k, i) = gcd(3k, i + 1) = 1`. Two admissible
//! values of `i` give isomorphic hexagons exactly when their edge signatures
//! `{±i, ±j, −i−1, h}` meet mod `3k`, where `ij ≡ −1` and `h(−i−1) ≡ 1`.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::lattice::mod_inverse;
use crate::{Error, Result};

use super::{classify, self_dual_hexagon_id};

fn signature(i: i64, l: i64) -> BTreeSet<i64> {
    let j = (-mod_inverse(i, l).expect("i is a unit")).mod_floor(&l);
    let h = mod_inverse(-i - 1, l).expect("i + 1 is a unit");
    [i, -i, j, -j, -i - 1, h]
        .into_iter()
        .map(|x| x.mod_floor(&l))
        .collect()
}

/// Smallest admissible `i` of each isomorphism class of `3k`-reflexive
/// hexagons, ascending.
pub fn hexagon_classes_3k(k: i64) -> Result<Vec<i64>> {
    if k <= 0 || k % 2 == 0 {
        return Err(Error::NotThreeKFamily(k));
    }
    let l = 3 * k;
    let admissible: Vec<i64> = (1..l)
        .filter(|&i| i.gcd(&l) == 1 && (i + 1).gcd(&l) == 1)
        .collect();
    let sigs: Vec<BTreeSet<i64>> = admissible.iter().map(|&i| signature(i, l)).collect();

    let n = admissible.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let meets = |a: usize, b: usize| !sigs[a].is_disjoint(&sigs[b]);
    for a in 0..n {
        for b in a + 1..n {
            if meets(a, b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    // the relation has to be an equivalence already, not just generate one
    for a in 0..n {
        for b in a + 1..n {
            if find(&mut parent, a) == find(&mut parent, b) && !meets(a, b) {
                return Err(Error::IntransitiveSignatures(k));
            }
        }
    }
    // roots are the smallest index of their class since unions keep the minimum
    Ok((0..n)
        .filter(|&a| find(&mut parent, a) == a)
        .map(|a| admissible[a])
        .collect())
}

/// Whether every `3k`-reflexive polygon is a self-dual hexagon coming from
/// the reflexive hexagon, with one class per signature class.
pub fn verify_3k_structure(k: i64) -> Result<bool> {
    let classes = hexagon_classes_3k(k)?;
    let records = classify(3 * k);
    let hex = self_dual_hexagon_id();
    let all_hexagons = records
        .iter()
        .all(|r| r.polygon.num_vertices() == 6 && r.self_dual && r.source_id == hex);
    Ok(all_hexagons && records.len() == classes.len())
}
