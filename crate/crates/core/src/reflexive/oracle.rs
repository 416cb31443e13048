//! Brute-force enumeration of the reflexive polygons of index one.
//!
//! Every polygon whose only interior lattice point is the origin contains a
//! lattice triangle that still has the origin in its closure, and grows from
//! it one vertex at a time without ever acquiring another interior point.
//! The search walks exactly that growth inside a box and keeps one polygon
//! per isomorphism class.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::lattice::{IntMatrix, Point2};
use crate::polygon::{convex_hull, is_isomorphic, polygon, Polygon};

const DEFAULT_RADIUS: i64 = 2;

/// No interior lattice point except possibly the origin, and the origin in the closure.
fn admissible(q: &Polygon) -> bool {
    let v = q.vertices();
    let m = v.len();
    let origin_in_closure = (0..m).all(|i| (v[(i + 1) % m] - v[i]).det(&(-v[i])) >= 0);
    origin_in_closure && q.interior_points().iter().all(|p| p.is_zero())
}

/// One representative per class of polygons whose unique interior lattice
/// point is the origin, found among polygons with vertices in `[−r, r]²`.
/// Sorted by boundary point count, then canonical form.
pub fn enumerate_1_reflexive_in_box(r: i64) -> Vec<Polygon> {
    let pts: Vec<Point2> = (-r..=r)
        .flat_map(|x| (-r..=r).map(move |y| Point2::new([x, y])))
        .collect();
    let mut seen: HashSet<Vec<Point2>> = HashSet::new();
    let mut queue: VecDeque<Polygon> = VecDeque::new();
    for (ia, &a) in pts.iter().enumerate() {
        for (ib, &b) in pts.iter().enumerate().skip(ia + 1) {
            for &c in &pts[ib + 1..] {
                if (b - a).det(&(c - a)) == 0 {
                    continue;
                }
                let t = convex_hull(&[a, b, c]).expect("nondegenerate triangle");
                if admissible(&t) && seen.insert(t.vertices().to_vec()) {
                    queue.push_back(t);
                }
            }
        }
    }

    let mut classes: BTreeMap<(i64, IntMatrix), Polygon> = BTreeMap::new();
    while let Some(q) = queue.pop_front() {
        if q.contains_origin() {
            let key = (q.num_boundary_points(), q.canonical_form());
            classes
                .entry(key)
                .or_insert_with(|| q.canonical_representative());
        }
        let mut members: Vec<Point2> = q.vertices().to_vec();
        for &x in &pts {
            members.push(x);
            if let Ok(grown) = convex_hull(&members) {
                if grown.num_vertices() > 0
                    && grown != q
                    && !seen.contains(grown.vertices())
                    && admissible(&grown)
                {
                    seen.insert(grown.vertices().to_vec());
                    queue.push_back(grown);
                }
            }
            members.pop();
        }
    }
    classes.into_values().collect()
}

/// The sixteen reflexive polygons, unnormalized, in id order.
pub fn enumerate_1_reflexive() -> Vec<Polygon> {
    enumerate_1_reflexive_in_box(DEFAULT_RADIUS)
}

/// Moves `q` so that its first vertex becomes `(0,1)` and the normal of the
/// edge leaving it becomes `(0,1)` in the dual lattice.
pub fn normalize_representative(q: &Polygon) -> Polygon {
    let v = q.vertices()[0];
    let u = q.edges().expect("origin is interior")[0].normal;
    debug_assert_eq!(u.dot(&v), 1);
    // W = (v₂ u₁ / −v₁ u₂): v·W = (0, ⟨u,v⟩), u·W^{-T} = (0, ⟨u,v⟩), det W = ⟨u,v⟩
    let [v1, v2] = v.0;
    let [u1, u2] = u.0;
    let w = IntMatrix::from_rows(&[[v2, u1], [-v1, u2]]);
    q.apply_matrix(&w).expect("unimodular")
}

/// The sixteen normalized reflexive polygons; `representatives()[id - 1]`
/// is the polygon with source id `id`.
pub fn representatives() -> &'static [Polygon] {
    static REPS: OnceLock<Vec<Polygon>> = OnceLock::new();
    REPS.get_or_init(|| {
        enumerate_1_reflexive()
            .iter()
            .map(normalize_representative)
            .collect()
    })
}

/// Source id of the centrally symmetric hexagon `conv{±(0,1), ±(1,1), ±(1,0)}`.
pub fn self_dual_hexagon_id() -> usize {
    let hex = polygon(&[[0, 1], [1, 1], [1, 0], [0, -1], [-1, -1], [-1, 0]]).unwrap();
    representatives()
        .iter()
        .position(|q| is_isomorphic(q, &hex))
        .expect("hexagon is reflexive")
        + 1
}
