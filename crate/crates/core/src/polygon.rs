//! Convex lattice polygons.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{hnf, IntMatrix, Point2};

/// A convex lattice polygon stored by its vertices in counterclockwise order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

/// One edge `F` of a polygon containing the origin in its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub tail: Point2,
    pub head: Point2,
    /// Primitive outer normal `u_F`.
    pub normal: Point2,
    /// `⟨u_F, x⟩` for every `x` on the edge.
    pub local_index: i64,
    /// Number of lattice points on the edge minus one.
    pub lattice_length: i64,
}

fn turn(a: Point2, b: Point2, c: Point2) -> i64 {
    (b - a).det(&(c - b))
}

impl Polygon {
    /// Builds a polygon from a counterclockwise, strictly convex vertex cycle.
    pub fn from_vertices(vertices: Vec<Point2>) -> Result<Polygon> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::DegenerateHull);
        }
        for i in 0..m {
            if turn(vertices[i], vertices[(i + 1) % m], vertices[(i + 2) % m]) <= 0 {
                return Err(Error::DegenerateHull);
            }
        }
        let p = Polygon { vertices };
        // a strictly convex cycle may still wind several times
        if p.normalized_volume() <= 0 || p.winds_more_than_once() {
            return Err(Error::DegenerateHull);
        }
        Ok(p)
    }

    fn winds_more_than_once(&self) -> bool {
        // edge directions turn monotonically; count passes through angle 0
        let upper = |d: Point2| d.0[1] > 0 || (d.0[1] == 0 && d.0[0] > 0);
        let dirs: Vec<Point2> = self.edge_vectors().collect();
        let m = dirs.len();
        let passes = (0..m)
            .filter(|&i| !upper(dirs[i]) && upper(dirs[(i + 1) % m]))
            .count();
        passes > 1
    }

    fn edge_vectors(&self) -> impl Iterator<Item = Point2> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |i| self.vertices[(i + 1) % m] - self.vertices[i])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in cyclic order, starting with the edge leaving the first vertex.
    pub fn edges(&self) -> Result<Vec<EdgeData>> {
        let m = self.vertices.len();
        (0..m)
            .map(|i| {
                let tail = self.vertices[i];
                let head = self.vertices[(i + 1) % m];
                let d = head - tail;
                let lattice_length = d.content();
                let normal = d.perp().primitive_part();
                let local_index = normal.dot(&tail);
                if local_index <= 0 {
                    return Err(Error::OriginNotInterior);
                }
                Ok(EdgeData {
                    tail,
                    head,
                    normal,
                    local_index,
                    lattice_length,
                })
            })
            .collect()
    }

    /// True iff the origin lies in the strict interior.
    pub fn contains_origin(&self) -> bool {
        let m = self.vertices.len();
        (0..m).all(|i| self.vertices[i].det(&self.vertices[(i + 1) % m]) > 0)
    }

    /// Twice the Euclidean area.
    pub fn normalized_volume(&self) -> i64 {
        let m = self.vertices.len();
        (0..m)
            .map(|i| self.vertices[i].det(&self.vertices[(i + 1) % m]))
            .sum()
    }

    /// Lattice points on the boundary in counterclockwise order, starting at
    /// the first vertex.
    pub fn boundary_points(&self) -> Vec<Point2> {
        let m = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..m {
            let a = self.vertices[i];
            let d = self.vertices[(i + 1) % m] - a;
            let g = d.content();
            let step = d.primitive_part();
            out.extend((0..g).map(|k| a + step * k));
        }
        out
    }

    pub fn num_boundary_points(&self) -> i64 {
        self.edge_vectors().map(|d| d.content()).sum()
    }

    /// Lattice points strictly inside.
    pub fn interior_points(&self) -> Vec<Point2> {
        let mut out = Vec::new();
        self.scan_lattice_points(|p, on_boundary| {
            if !on_boundary {
                out.push(p);
            }
        });
        out
    }

    /// All lattice points of the closed polygon, in column-scan order.
    pub fn lattice_points(&self) -> Vec<Point2> {
        let mut out = Vec::new();
        self.scan_lattice_points(|p, _| out.push(p));
        out
    }

    /// Visits every lattice point of the closed polygon column by column,
    /// reporting whether it lies on the boundary. Each column's `y` range is
    /// cut out exactly from the edge half-planes.
    fn scan_lattice_points(&self, mut visit: impl FnMut(Point2, bool)) {
        let xmin = self.vertices.iter().map(|v| v.0[0]).min().unwrap();
        let xmax = self.vertices.iter().map(|v| v.0[0]).max().unwrap();
        let m = self.vertices.len();
        for x in xmin..=xmax {
            let mut lo = i64::MIN;
            let mut hi = i64::MAX;
            let mut empty = false;
            for i in 0..m {
                let a = self.vertices[i];
                let d = self.vertices[(i + 1) % m] - a;
                // p lies to the left of a→a+d: d.x·(y − a.y) − d.y·(x − a.x) ≥ 0
                let rhs = d.0[1] * (x - a.0[0]);
                match d.0[0].signum() {
                    1 => lo = lo.max(a.0[1] + Integer::div_ceil(&rhs, &d.0[0])),
                    -1 => hi = hi.min(a.0[1] + Integer::div_floor(&(-rhs), &(-d.0[0]))),
                    _ => {
                        if rhs > 0 {
                            empty = true;
                        }
                    }
                }
            }
            if empty || lo > hi {
                continue;
            }
            for y in lo..=hi {
                let p = Point2::new([x, y]);
                let on_boundary = (0..m).any(|i| {
                    let a = self.vertices[i];
                    (self.vertices[(i + 1) % m] - a).det(&(p - a)) == 0
                });
                visit(p, on_boundary);
            }
        }
    }

    /// Complete invariant under linear unimodular maps: the smallest row-style
    /// Hermite form of the `2 × m` vertex matrix over every starting vertex
    /// and both traversal directions.
    pub fn canonical_form(&self) -> IntMatrix {
        let m = self.vertices.len();
        let mut best: Option<IntMatrix> = None;
        for start in 0..m {
            for reverse in [false, true] {
                let frame: Vec<Point2> = (0..m)
                    .map(|k| {
                        let idx = if reverse {
                            (start + m - k) % m
                        } else {
                            (start + k) % m
                        };
                        self.vertices[idx]
                    })
                    .collect();
                let mut data = Vec::with_capacity(2 * m);
                data.extend(frame.iter().map(|v| v.0[0]));
                data.extend(frame.iter().map(|v| v.0[1]));
                let (_, h) = hnf(&IntMatrix::new(2, m, data));
                if best.as_ref().is_none_or(|b| h < *b) {
                    best = Some(h);
                }
            }
        }
        best.expect("polygon has vertices")
    }

    /// The polygon whose vertex matrix is the canonical form, oriented
    /// counterclockwise and starting at the form's first column.
    pub fn canonical_representative(&self) -> Polygon {
        let h = self.canonical_form();
        let m = h.cols();
        let mut verts: Vec<Point2> = (0..m)
            .map(|j| Point2::new([h.get(0, j), h.get(1, j)]))
            .collect();
        let area: i64 = (0..m).map(|i| verts[i].det(&verts[(i + 1) % m])).sum();
        if area < 0 {
            verts[1..].reverse();
        }
        Polygon { vertices: verts }
    }

    /// Image `{v·H}` of the vertices, reoriented counterclockwise.
    pub fn apply_matrix(&self, h: &IntMatrix) -> Result<Polygon> {
        if h.rows() != 2 || h.cols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: h.rows(),
            });
        }
        let det = h.det();
        if det == 0 {
            return Err(Error::SingularMap);
        }
        let mut verts: Vec<Point2> = self.vertices.iter().map(|v| v.transform(h)).collect();
        if det < 0 {
            verts[1..].reverse();
        }
        Ok(Polygon { vertices: verts })
    }

    /// Least common multiple of the local indices.
    pub fn gorenstein_index(&self) -> Result<i64> {
        Ok(self
            .edges()?
            .iter()
            .fold(1i64, |acc, e| acc.lcm(&e.local_index)))
    }
}

impl std::fmt::Debug for Polygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "conv{:?}", self.vertices)
    }
}

/// Counterclockwise convex hull with collinear boundary points dropped.
pub fn convex_hull(points: &[Point2]) -> Result<Polygon> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    let cross = |o: Point2, a: Point2, b: Point2| (a - o).det(&(b - o));
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Ok(Polygon { vertices: hull })
}

/// True iff the two polygons are related by a linear unimodular map.
pub fn is_isomorphic(p: &Polygon, q: &Polygon) -> bool {
    p.num_vertices() == q.num_vertices() && p.canonical_form() == q.canonical_form()
}

/// Builds a polygon from coordinate pairs, taking the convex hull.
pub fn polygon(points: &[[i64; 2]]) -> Result<Polygon> {
    let pts: Vec<Point2> = points.iter().map(|&c| Point2::new(c)).collect();
    convex_hull(&pts)
}
