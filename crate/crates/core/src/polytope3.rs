//! Three-dimensional lattice polytopes, at the scale of worked examples:
//! facets and edges by exhaustive search over vertex triples, the edge and
//! vertex lattices, the edge-length pairing sum with the dual, and weights
//! of simplices.

use std::collections::BTreeSet;

use crate::lattice::{
    restrict_to_sublattice, sublattice_of, IntMatrix, LatticeVector, Point3, SublatticeInfo,
};
use crate::polygon::Polygon;
use crate::reflexive::is_l_reflexive;
use crate::{Error, Result};

/// A facet: primitive outer normal `u`, level `⟨u, v⟩` on the facet
/// (the local index) and the indices of the vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet3 {
    pub normal: Point3,
    pub local_index: i64,
    pub vertices: Vec<usize>,
}

/// An edge: its two vertex indices and the two facets meeting along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge3 {
    pub vertices: (usize, usize),
    pub facets: (usize, usize),
}

/// A 3-dimensional lattice polytope with the origin in its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope3 {
    vertices: Vec<Point3>,
    facets: Vec<Facet3>,
    edges: Vec<Edge3>,
}

/// Hull of `points` with full facet and edge incidence.
pub fn build_polytope3(points: &[Point3]) -> Result<Polytope3> {
    let pts: Vec<Point3> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let spans: Vec<Point3> = pts.iter().map(|&p| p - pts[0]).collect();
    if pts.len() < 4 || IntMatrix::from_points(&spans).rank() < 3 {
        return Err(Error::DegenerateHull);
    }
    let mut planes: BTreeSet<(Point3, i64)> = BTreeSet::new();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            for c in b + 1..pts.len() {
                let n = (pts[b] - pts[a]).cross(&(pts[c] - pts[a]));
                if n.is_zero() {
                    continue;
                }
                let n = n.primitive_part();
                let level = n.dot(&pts[a]);
                let values: Vec<i64> = pts.iter().map(|p| n.dot(p)).collect();
                let plane = if values.iter().all(|&v| v <= level) {
                    (n, level)
                } else if values.iter().all(|&v| v >= level) {
                    (-n, -level)
                } else {
                    continue;
                };
                if plane.1 <= 0 {
                    return Err(Error::OriginNotInterior);
                }
                planes.insert(plane);
            }
        }
    }
    if planes.len() < 4 {
        return Err(Error::DegenerateHull);
    }
    let planes: Vec<(Point3, i64)> = planes.into_iter().collect();
    let on = |p: &Point3| -> Vec<usize> {
        (0..planes.len())
            .filter(|&f| planes[f].0.dot(p) == planes[f].1)
            .collect()
    };

    let vertices: Vec<Point3> = pts
        .iter()
        .filter(|p| {
            let normals: Vec<Point3> = on(p).into_iter().map(|f| planes[f].0).collect();
            !normals.is_empty() && IntMatrix::from_points(&normals).rank() == 3
        })
        .copied()
        .collect();
    let facets: Vec<Facet3> = planes
        .iter()
        .map(|&(normal, local_index)| Facet3 {
            normal,
            local_index,
            vertices: (0..vertices.len())
                .filter(|&v| normal.dot(&vertices[v]) == local_index)
                .collect(),
        })
        .collect();
    let mut edges = Vec::new();
    for f in 0..facets.len() {
        for g in f + 1..facets.len() {
            let shared: Vec<usize> = facets[f]
                .vertices
                .iter()
                .filter(|v| facets[g].vertices.contains(v))
                .copied()
                .collect();
            if shared.len() >= 2 {
                edges.push(Edge3 {
                    vertices: (shared[0], shared[1]),
                    facets: (f, g),
                });
            }
        }
    }
    Ok(Polytope3 {
        vertices,
        facets,
        edges,
    })
}

/// `build_polytope3` from coordinate arrays.
pub fn polytope3(points: &[[i64; 3]]) -> Result<Polytope3> {
    build_polytope3(&points.iter().map(|&p| Point3::new(p)).collect::<Vec<_>>())
}

impl Polytope3 {
    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet3] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge3] {
        &self.edges
    }

    /// All lattice points on the edges, each once.
    pub fn edge_points(&self) -> Vec<Point3> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            let (a, b) = (self.vertices[e.vertices.0], self.vertices[e.vertices.1]);
            let g = (b - a).content();
            let step = LatticeVector((b - a).0.map(|c| c / g));
            out.extend((0..=g).map(|k| a + step * k));
        }
        out.into_iter().collect()
    }

    /// All lattice points on the boundary.
    pub fn boundary_points(&self) -> Vec<Point3> {
        let lo: [i64; 3] =
            std::array::from_fn(|i| self.vertices.iter().map(|v| v.0[i]).min().unwrap());
        let hi: [i64; 3] =
            std::array::from_fn(|i| self.vertices.iter().map(|v| v.0[i]).max().unwrap());
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = Point3::new([x, y, z]);
                    let levels = self.facets.iter().map(|f| f.normal.dot(&p) - f.local_index);
                    if levels.clone().all(|d| d <= 0) && levels.into_iter().any(|d| d == 0) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Image under `x ↦ x·A`.
    pub fn apply_matrix(&self, a: &IntMatrix) -> Result<Polytope3> {
        if a.det() == 0 {
            return Err(Error::SingularMap);
        }
        build_polytope3(
            &self
                .vertices
                .iter()
                .map(|v| v.transform(a))
                .collect::<Vec<_>>(),
        )
    }
}

/// `l` when every vertex is primitive and every facet has local index `l`.
pub fn is_l_reflexive_3(p: &Polytope3) -> Option<i64> {
    let l = p.facets.first()?.local_index;
    (p.vertices.iter().all(|v| v.is_primitive()) && p.facets.iter().all(|f| f.local_index == l))
        .then_some(l)
}

/// `lP*`, the hull of the facet normals.
pub fn dual_scaled_3(p: &Polytope3, l: i64) -> Result<Polytope3> {
    if is_l_reflexive_3(p) != Some(l) {
        return Err(Error::NotReflexive);
    }
    build_polytope3(&p.facets.iter().map(|f| f.normal).collect::<Vec<_>>())
}

/// `Σ_E len(E)·len(E*)` where `E* = conv{u_F, u_G}` for the facets `F, G`
/// meeting along `E`, measured in `lP*`.
pub fn sum_24(p: &Polytope3, l: i64) -> Result<i64> {
    if is_l_reflexive_3(p) != Some(l) {
        return Err(Error::NotReflexive);
    }
    Ok(p.edges
        .iter()
        .map(|e| {
            let len = (p.vertices[e.vertices.1] - p.vertices[e.vertices.0]).content();
            let dual_len = (p.facets[e.facets.1].normal - p.facets[e.facets.0].normal).content();
            len * dual_len
        })
        .sum())
}

/// Sublattice generated by the vertices.
pub fn vertex_lattice(p: &Polytope3) -> Result<SublatticeInfo> {
    sublattice_of(&p.vertices)
}

/// Sublattice generated by the lattice points on the edges.
pub fn edge_lattice(p: &Polytope3) -> Result<SublatticeInfo> {
    sublattice_of(&p.edge_points())
}

/// Sublattice generated by the boundary lattice points.
pub fn boundary_lattice(p: &Polytope3) -> Result<SublatticeInfo> {
    sublattice_of(&p.boundary_points())
}

/// `p` in the coordinates of the sublattice `lattice`.
pub fn restrict_polytope(p: &Polytope3, lattice: &SublatticeInfo) -> Result<Polytope3> {
    build_polytope3(&restrict_to_sublattice(&p.vertices, lattice)?)
}

/// Whether some unimodular map takes `p` onto `q`.
pub fn is_isomorphic_3(p: &Polytope3, q: &Polytope3) -> bool {
    if p.vertices.len() != q.vertices.len() || p.facets.len() != q.facets.len() {
        return false;
    }
    let n = p.vertices.len();
    let Some(base) = independent_triple(&p.vertices) else {
        return false;
    };
    let bp = IntMatrix::from_points(&base.map(|i| p.vertices[i]));
    let (adj, d) = (bp.adjugate(), bp.det());
    let targets: BTreeSet<Point3> = q.vertices.iter().copied().collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                let bq = IntMatrix::from_points(&[q.vertices[a], q.vertices[b], q.vertices[c]]);
                let m = adj.mul(&bq);
                if m.entries().iter().any(|x| x % d != 0) {
                    continue;
                }
                let m = IntMatrix::new(3, 3, m.entries().iter().map(|x| x / d).collect());
                if m.det().abs() == 1
                    && p.vertices
                        .iter()
                        .all(|v| targets.contains(&v.transform(&m)))
                {
                    return true;
                }
            }
        }
    }
    false
}

fn independent_triple(vs: &[Point3]) -> Option<[usize; 3]> {
    let n = vs.len();
    (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .find(|&[a, b, c]| vs[a].cross(&vs[b]).dot(&vs[c]) != 0)
}

/// Whether `p` becomes reflexive (index one) in the coordinates of its
/// vertex lattice.
pub fn one_reflexive_on_vertex_lattice(p: &Polytope3) -> Result<bool> {
    Ok(is_l_reflexive_3(&restrict_polytope(p, &vertex_lattice(p)?)?) == Some(1))
}

/// Positive weights `λ` with `gcd 1` and `Σ λ_i v_i = 0`, and the index of
/// the vertex lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexWeights {
    pub weights: Vec<i64>,
    pub multiplicity: i64,
}

/// Weights and multiplicity of a simplex given by its `D + 1` vertices.
pub fn simplex_weights<const D: usize>(vertices: &[LatticeVector<D>]) -> Result<SimplexWeights> {
    if vertices.len() != D + 1 {
        return Err(Error::NotASimplex(vertices.len(), D));
    }
    // λ_i = (−1)^i · det of the vertex matrix without row i
    let mut weights: Vec<i64> = (0..=D)
        .map(|i| {
            let rest: Vec<LatticeVector<D>> = vertices
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, v)| *v)
                .collect();
            let d = IntMatrix::from_points(&rest).det();
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    if weights.iter().all(|&w| w < 0) {
        weights.iter_mut().for_each(|w| *w = -*w);
    }
    if !weights.iter().all(|&w| w > 0) {
        return Err(Error::NoPositiveRelation);
    }
    let g = crate::lattice::gcd_all(&weights)?;
    weights.iter_mut().for_each(|w| *w /= g);
    Ok(SimplexWeights {
        weights,
        multiplicity: sublattice_of(vertices)?.index,
    })
}

/// For an `l`-reflexive triangle, whether `l` divides its multiplicity.
pub fn divides_multiplicity(p: &Polygon) -> Result<bool> {
    if p.num_vertices() != 3 {
        return Err(Error::NotASimplex(p.num_vertices(), 2));
    }
    let l = is_l_reflexive(p).ok_or(Error::NotReflexive)?;
    Ok(simplex_weights(p.vertices())?.multiplicity % l == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point2;
    use crate::polygon::polygon;

    fn octahedron() -> Polytope3 {
        polytope3(&[
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ])
        .unwrap()
    }

    pub(crate) fn family(l: i64) -> Polytope3 {
        polytope3(&[[-l, -1, 0], [l, 0, -1], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    fn tetra() -> Polytope3 {
        polytope3(&[[1, 0, 0], [3, 4, 0], [5, 0, 8], [-9, -4, -8]]).unwrap()
    }

    fn sorted(p: &Polytope3) -> Vec<Point3> {
        let mut v = p.vertices().to_vec();
        v.sort();
        v
    }

    #[test]
    fn incidence() {
        let o = octahedron();
        assert_eq!(
            (o.vertices().len(), o.facets().len(), o.edges().len()),
            (6, 8, 12)
        );
        for p in [o, family(3), tetra()] {
            for f in p.facets() {
                assert!(f.normal.is_primitive());
                for (i, v) in p.vertices().iter().enumerate() {
                    let d = f.normal.dot(v);
                    assert_eq!(d == f.local_index, f.vertices.contains(&i));
                    assert!(d <= f.local_index);
                }
            }
            for e in p.edges() {
                let on: Vec<usize> = (0..p.facets().len())
                    .filter(|&f| {
                        [e.vertices.0, e.vertices.1]
                            .iter()
                            .all(|v| p.facets()[f].vertices.contains(v))
                    })
                    .collect();
                assert_eq!(on, vec![e.facets.0, e.facets.1]);
            }
        }
        assert_eq!(family(3).facets().len(), 4);
        assert_eq!(tetra().facets().len(), 4);
        // interior points are dropped
        let with_extra = polytope3(&[
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
            [0, 0, 0],
        ]);
        assert_eq!(with_extra.unwrap().vertices().len(), 6);
        assert_eq!(
            polytope3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]),
            Err(Error::OriginNotInterior)
        );
        assert_eq!(
            polytope3(&[[1, 0, 0], [0, 1, 0], [-1, -1, 0]]),
            Err(Error::DegenerateHull)
        );
    }

    #[test]
    fn reflexivity() {
        assert_eq!(is_l_reflexive_3(&octahedron()), Some(1));
        for l in 1..12 {
            let want = if l % 2 == 1 { l } else { l / 2 };
            assert_eq!(is_l_reflexive_3(&family(l)), Some(want), "l = {l}");
        }
        assert_eq!(is_l_reflexive_3(&tetra()), Some(2));
    }

    #[test]
    fn duals() {
        let cube = dual_scaled_3(&octahedron(), 1).unwrap();
        let mut want: Vec<Point3> = (0..8)
            .map(|m| Point3::new([1 - 2 * (m & 1), 1 - (m & 2), 1 - ((m & 4) >> 1)]))
            .collect();
        want.sort();
        assert_eq!(sorted(&cube), want);

        // ⟨u, x⟩ ≤ l gives the negative of conv{(−2,−3,−3), (2,−3,−3), (−2,9,−3), (2,−3,9)}
        let d = dual_scaled_3(&family(3), 3).unwrap();
        let listed = polytope3(&[[-2, -3, -3], [2, -3, -3], [-2, 9, -3], [2, -3, 9]]).unwrap();
        let mut want: Vec<Point3> = listed.vertices().iter().map(|&v| -v).collect();
        want.sort();
        assert_eq!(sorted(&d), want);
        assert!(is_isomorphic_3(&d, &listed));
        assert_eq!(dual_scaled_3(&family(3), 1), Err(Error::NotReflexive));

        for (p, l) in [(octahedron(), 1), (family(5), 5), (tetra(), 2)] {
            let d = dual_scaled_3(&p, l).unwrap();
            assert_eq!(is_l_reflexive_3(&d), Some(l));
            assert!(is_isomorphic_3(&dual_scaled_3(&d, l).unwrap(), &p));
        }
        // 2P* comes from a fake P^3 with group of order 4
        let d = dual_scaled_3(&tetra(), 2).unwrap();
        assert_eq!(
            simplex_weights(d.vertices()).unwrap(),
            SimplexWeights {
                weights: vec![1, 1, 1, 1],
                multiplicity: 4
            }
        );
    }

    #[test]
    fn sums() {
        assert_eq!(sum_24(&octahedron(), 1), Ok(24));
        assert_eq!(sum_24(&dual_scaled_3(&octahedron(), 1).unwrap(), 1), Ok(24));
        assert_eq!(sum_24(&tetra(), 2), Ok(24));
        let s = polytope3(&[[-8, -12, -17], [4, 0, 1], [0, 4, 3], [0, 0, 1]]).unwrap();
        assert_eq!(is_l_reflexive_3(&s), Some(2));
        assert_eq!(sum_24(&s, 2), Ok(28));
        assert_eq!(sum_24(&tetra(), 1), Err(Error::NotReflexive));
    }

    #[test]
    fn family_sums_exceed_24_once_the_index_grows() {
        // Each member is 1-reflexive on its edge lattice, but the edge lattice
        // of lP* is the whole lattice, so the dual edges are measured long.
        for l in 1..=9 {
            let p = family(l);
            let index = is_l_reflexive_3(&p).unwrap();
            assert_eq!(sum_24(&p, index), Ok(24 + 16 * ((l - 1) / 2)));
            let restricted = restrict_polytope(&p, &edge_lattice(&p).unwrap()).unwrap();
            assert_eq!(is_l_reflexive_3(&restricted), Some(1));
            assert_eq!(sum_24(&restricted, 1), Ok(24));
            if index > 1 {
                assert_eq!(edge_lattice(&dual_scaled_3(&p, index).unwrap()).unwrap().index, 1);
            }
        }
    }

    #[test]
    fn lattices() {
        let p = tetra();
        assert_eq!(boundary_lattice(&p).unwrap().index, 1);
        assert_eq!(edge_lattice(&p).unwrap().index, 4);
        assert_eq!(vertex_lattice(&p).unwrap().index, 32);
        let d = dual_scaled_3(&p, 2).unwrap();
        assert_eq!(edge_lattice(&d).unwrap().index, 2);
        let s = polytope3(&[[-8, -12, -17], [4, 0, 1], [0, 4, 3], [0, 0, 1]]).unwrap();
        let es = edge_lattice(&s).unwrap();
        assert_eq!(es.index, 2);
        assert_eq!(is_l_reflexive_3(&restrict_polytope(&s, &es).unwrap()), None);
    }

    #[test]
    fn restrictions() {
        let p = tetra();
        let p1 = restrict_polytope(&p, &edge_lattice(&p).unwrap()).unwrap();
        let p_prime = polytope3(&[[-9, -2, -4], [1, 0, 0], [3, 2, 0], [5, 0, 4]]).unwrap();
        assert!(is_isomorphic_3(&p1, &p_prime));
        assert_eq!(is_l_reflexive_3(&p_prime), Some(1));

        let d = dual_scaled_3(&p, 2).unwrap();
        let q1 = restrict_polytope(&d, &edge_lattice(&d).unwrap()).unwrap();
        let q = polytope3(&[[-1, 1, 1], [-1, 1, 2], [-1, 3, 1], [3, -5, -4]]).unwrap();
        assert!(is_isomorphic_3(&q1, &q));
        assert_eq!(is_l_reflexive_3(&q), Some(1));
        assert!(is_isomorphic_3(&dual_scaled_3(&p_prime, 1).unwrap(), &q));

        // on the vertex lattice P is the simplex of P^3
        let pv = restrict_polytope(&p, &vertex_lattice(&p).unwrap()).unwrap();
        let p3 = polytope3(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap();
        assert!(is_isomorphic_3(&pv, &p3));
        assert_eq!(one_reflexive_on_vertex_lattice(&p), Ok(true));

        let outside = SublatticeInfo {
            ambient_dim: 3,
            basis: IntMatrix::identity(3).scale(2),
            index: 8,
        };
        assert!(matches!(
            restrict_polytope(&p, &outside),
            Err(Error::NotInSublattice(_))
        ));
    }

    #[test]
    fn isomorphism_is_not_fooled_by_shape() {
        assert!(!is_isomorphic_3(&family(3), &family(5)));
        assert!(!is_isomorphic_3(&tetra(), &family(3)));
        let m = IntMatrix::from_rows(&[[1, 2, 0], [0, 1, 0], [3, 1, 1]]);
        assert!(is_isomorphic_3(
            &tetra().apply_matrix(&m).unwrap(),
            &tetra()
        ));
        assert_eq!(sum_24(&tetra().apply_matrix(&m).unwrap(), 2), Ok(24));
    }

    #[test]
    fn weights() {
        let w = simplex_weights(&[
            Point2::new([2, -1]),
            Point2::new([-1, 2]),
            Point2::new([-1, -1]),
        ])
        .unwrap();
        assert_eq!(
            w,
            SimplexWeights {
                weights: vec![1, 1, 1],
                multiplicity: 3
            }
        );
        let t = polygon(&[[-7, -10], [2, 5], [1, 0]]).unwrap();
        let w = simplex_weights(&[
            Point2::new([-7, -10]),
            Point2::new([2, 5]),
            Point2::new([1, 0]),
        ])
        .unwrap();
        assert_eq!(w.weights, vec![1, 2, 3]);
        // vertex lattice is Z × 5Z; volume 30 over volume 6 of the P(1,2,3) triangle
        assert_eq!(w.multiplicity, 5);
        assert_eq!(t.normalized_volume() / w.weights.iter().sum::<i64>(), 5);
        let w = simplex_weights(tetra().vertices()).unwrap();
        assert_eq!(
            w,
            SimplexWeights {
                weights: vec![1, 1, 1, 1],
                multiplicity: 32
            }
        );
        assert_eq!(
            simplex_weights(&[
                Point2::new([1, 0]),
                Point2::new([0, 1]),
                Point2::new([1, 1])
            ]),
            Err(Error::NoPositiveRelation)
        );
        assert_eq!(
            simplex_weights(&[Point2::new([1, 0]), Point2::new([0, 1])]),
            Err(Error::NotASimplex(2, 2))
        );
    }

    #[test]
    fn multiplicity_divisibility() {
        assert_eq!(
            divides_multiplicity(&polygon(&[[-7, -10], [2, 5], [1, 0]]).unwrap()),
            Ok(true)
        );
        assert_eq!(
            divides_multiplicity(&polygon(&[[-1, -1], [-1, 2], [2, -1]]).unwrap()),
            Ok(true)
        );
        let hex = polygon(&[[0, 1], [1, 1], [1, 0], [0, -1], [-1, -1], [-1, 0]]).unwrap();
        assert_eq!(divides_multiplicity(&hex), Err(Error::NotASimplex(6, 2)));
        // multiplicity one forces index one
        for q in crate::reflexive::representatives()
            .iter()
            .filter(|q| q.num_vertices() == 3)
        {
            if simplex_weights(q.vertices()).unwrap().multiplicity == 1 {
                assert_eq!(is_l_reflexive(q), Some(1));
            }
        }
    }
}
