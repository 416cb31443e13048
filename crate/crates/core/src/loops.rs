//! Reflexive loops: closed lattice paths that behave like the boundary of an
//! `l`-reflexive polygon but may be non-convex or wind several times.
//!
//! A loop `x_1, …, x_t` (read cyclically) must satisfy, at every position,
//! (1) `x_{i+1} − x_i` is primitive, (2) `det(x_i, x_{i+1}) = ±l`, and
//! (3) `x_i` is primitive whenever it is a vertex, i.e. not on the segment
//! between its neighbours.

use num_integer::Integer;

use crate::lattice::{sublattice_of, IntMatrix, Point2, SublatticeInfo};
use crate::polygon::Polygon;
use crate::{Error, Result};

/// A validated `l`-reflexive loop. Points are a cyclic sequence and may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loop {
    points: Vec<Point2>,
    index: i64,
}

/// Length, winding number and point count of a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopMetrics {
    pub length: i64,
    pub winding: i64,
    pub boundary_count: usize,
}

fn on_segment(x: Point2, a: Point2, b: Point2) -> bool {
    (b - a).det(&(x - a)) == 0 && (x - a).dot(&(x - b)) <= 0
}

/// Checks the three loop conditions and reports the first violation.
/// Loops with fewer than three points are rejected.
pub fn validate_loop(points: Vec<Point2>, l: i64) -> Result<Loop> {
    if points.len() < 3 {
        return Err(Error::DegenerateLoop);
    }
    if let Some(i) = points.iter().position(|x| x.is_zero()) {
        return Err(Error::LoopThroughOrigin(i));
    }
    let t = points.len();
    for i in 0..t {
        let (prev, x, next) = (points[(i + t - 1) % t], points[i], points[(i + 1) % t]);
        if !(next - x).is_primitive() {
            return Err(Error::LoopCondition {
                condition: 1,
                index: i,
            });
        }
        if x.det(&next).abs() != l {
            return Err(Error::LoopCondition {
                condition: 2,
                index: i,
            });
        }
        if !on_segment(x, prev, next) && !x.is_primitive() {
            return Err(Error::LoopCondition {
                condition: 3,
                index: i,
            });
        }
    }
    Ok(Loop { points, index: l })
}

impl Loop {
    /// The boundary points of an `l`-reflexive polygon, counterclockwise.
    pub fn from_polygon(p: &Polygon, l: i64) -> Result<Loop> {
        validate_loop(p.boundary_points(), l)
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same loop traversed `k` times in a row.
    pub fn repeat(&self, k: usize) -> Loop {
        Loop {
            points: self.points.repeat(k),
            index: self.index,
        }
    }

    /// The loop traversed backwards.
    pub fn reversed(&self) -> Loop {
        Loop {
            points: self.points.iter().rev().copied().collect(),
            index: self.index,
        }
    }

    /// Image under `x ↦ x·H`, revalidated at index `l`.
    pub fn transform(&self, h: &IntMatrix, l: i64) -> Result<Loop> {
        validate_loop(self.points.iter().map(|x| x.transform(h)).collect(), l)
    }

    /// The normal `u_i` of each step, the unique solution of
    /// `⟨u, x_i⟩ = ⟨u, x_{i+1}⟩ = l`.
    pub fn normals(&self) -> Vec<Point2> {
        let t = self.points.len();
        (0..t)
            .map(|i| {
                let (x, y) = (self.points[i], self.points[(i + 1) % t]);
                let d = x.det(&y);
                Point2::new([
                    (y.0[1] - x.0[1]) * self.index / d,
                    (x.0[0] - y.0[0]) * self.index / d,
                ])
            })
            .collect()
    }

    pub fn metrics(&self) -> LoopMetrics {
        LoopMetrics {
            length: loop_length(self),
            winding: winding_number(self),
            boundary_count: self.len(),
        }
    }
}

/// `Σ det(x_i, x_{i+1}) / l`.
pub fn loop_length(lp: &Loop) -> i64 {
    let t = lp.points.len();
    (0..t)
        .map(|i| lp.points[i].det(&lp.points[(i + 1) % t]))
        .sum::<i64>()
        / lp.index
}

/// The dual loop: all lattice points along the path through the step
/// normals. Runs of equal consecutive normals (collinear steps) collapse to
/// one point.
pub fn dual_loop(lp: &Loop) -> Loop {
    let mut normals = lp.normals();
    normals.dedup();
    while normals.len() > 1 && normals.first() == normals.last() {
        normals.pop();
    }
    let t = normals.len();
    let mut points = Vec::new();
    for i in 0..t {
        let (a, b) = (normals[i], normals[(i + 1) % t]);
        let g = (b - a).content();
        let step = Point2::new([(b.0[0] - a.0[0]) / g, (b.0[1] - a.0[1]) / g]);
        points.extend((0..g).map(|s| a + step * s));
    }
    Loop {
        points,
        index: lp.index,
    }
}

/// Signed number of turns of the loop around the origin, counted exactly by
/// crossings of the positive `x`-axis.
pub fn winding_number(lp: &Loop) -> i64 {
    let t = lp.points.len();
    let mut w = 0;
    for i in 0..t {
        let (a, b) = (lp.points[i], lp.points[(i + 1) % t]);
        let side = a.det(&b);
        if a.0[1] <= 0 && b.0[1] > 0 && side > 0 {
            w += 1;
        } else if a.0[1] > 0 && b.0[1] <= 0 && side < 0 {
            w -= 1;
        }
    }
    w
}

/// Whether the loop and its dual have lengths adding up to `12·w`.
pub fn twelve_w_check(lp: &Loop) -> bool {
    loop_length(lp) + loop_length(&dual_loop(lp)) == 12 * winding_number(lp)
}

/// The sublattice generated by the loop points.
pub fn loop_boundary_sublattice(lp: &Loop) -> Result<SublatticeInfo> {
    sublattice_of(&lp.points)
}

/// Closed walks starting `(1,0), (0,1)` with every consecutive determinant
/// `±1`, at most `max_points` points, inside `[−r, r]²`, with no immediate
/// backtracking. Every reflexive loop of index one is equivalent to one
/// starting this way. Stops after `limit` loops satisfying `keep`.
pub fn search_unit_loops(
    max_points: usize,
    r: i64,
    limit: usize,
    keep: &dyn Fn(&Loop) -> bool,
) -> Vec<Loop> {
    fn extend(
        path: &mut Vec<Point2>,
        max_points: usize,
        r: i64,
        limit: usize,
        keep: &dyn Fn(&Loop) -> bool,
        found: &mut Vec<Loop>,
    ) {
        if found.len() >= limit {
            return;
        }
        let n = path.len();
        let (p, q) = (path[n - 2], path[n - 1]);
        if n >= 3 && q.det(&path[0]).abs() == 1 && p != path[0] && q != path[1] {
            if let Ok(lp) = validate_loop(path.clone(), 1) {
                if keep(&lp) {
                    found.push(lp);
                }
            }
        }
        if n == max_points {
            return;
        }
        // solutions of det(q, y) = ±1 are ±(y0 + k q)
        let y0 = p * (-p.det(&q));
        let bound = 2 * r + 1;
        for sign in [1, -1] {
            for k in -bound..=bound {
                let y = (y0 + q * k) * sign;
                if y.0.iter().any(|c| c.abs() > r) || y == p || !(y - q).is_primitive() {
                    continue;
                }
                path.push(y);
                extend(path, max_points, r, limit, keep, found);
                path.pop();
            }
        }
    }
    let mut found = Vec::new();
    let mut path = vec![Point2::new([1, 0]), Point2::new([0, 1])];
    extend(&mut path, max_points, r, limit, keep, &mut found);
    found
}

/// Pushes a reflexive loop of index one to index `l` through `(l i / 0 1)`,
/// trying each `i` coprime to `l` in turn; returns the first valid image.
pub fn push_to_index(lp: &Loop, l: i64) -> Option<(i64, Loop)> {
    (1..l.max(2)).filter(|i| i.gcd(&l) == 1).find_map(|i| {
        lp.transform(&IntMatrix::from_rows(&[[l, i], [0, 1]]), l)
            .ok()
            .map(|q| (i, q))
    })
}
