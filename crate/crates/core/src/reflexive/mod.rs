//! Reflexive polygons of arbitrary index and their invariants.

mod classify;
mod hexagon;
mod oracle;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{restrict_to_sublattice, sublattice_of, IntMatrix, SublatticeInfo};
use crate::polygon::{convex_hull, Polygon};

pub use classify::{classify, classify_with_representatives, hnf_map, Candidate};
pub use hexagon::{hexagon_classes_3k, verify_3k_structure};
pub use oracle::{
    enumerate_1_reflexive, enumerate_1_reflexive_in_box, normalize_representative, representatives,
    self_dual_hexagon_id,
};

/// One isomorphism class of `l`-reflexive polygons together with its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LReflexiveRecord {
    pub polygon: Polygon,
    pub index: i64,
    /// The polygon `lP*`, spanned by the primitive edge normals of `polygon`.
    pub dual: Polygon,
    /// Which of the sixteen reflexive polygons this class was produced from (1-based).
    pub source_id: usize,
    /// The `i` of the map `(l i / 0 1)`; zero for `l = 1`.
    pub hnf_i: i64,
    pub b: i64,
    pub b_dual: i64,
    pub self_dual: bool,
    pub order: i64,
    pub canonical_form: IntMatrix,
}

impl LReflexiveRecord {
    /// Derives every cached invariant from an `l`-reflexive polygon.
    pub fn new(polygon: Polygon, index: i64, source_id: usize, hnf_i: i64) -> Result<Self> {
        if is_l_reflexive(&polygon) != Some(index) {
            return Err(Error::NotReflexive);
        }
        let dual = dual_scaled(&polygon, index)?;
        let canonical_form = polygon.canonical_form();
        Ok(LReflexiveRecord {
            b: polygon.num_boundary_points(),
            b_dual: dual.num_boundary_points(),
            self_dual: dual.canonical_form() == canonical_form,
            order: order_of(&polygon)?,
            polygon,
            index,
            dual,
            source_id,
            hnf_i,
            canonical_form,
        })
    }
}

/// Origin strictly interior and every vertex primitive.
pub fn is_ldp(p: &Polygon) -> bool {
    p.contains_origin() && p.vertices().iter().all(|v| v.is_primitive())
}

/// Returns `l` when `p` is an LDP polygon whose edges all have local index `l`.
pub fn is_l_reflexive(p: &Polygon) -> Option<i64> {
    if !is_ldp(p) {
        return None;
    }
    let edges = p.edges().ok()?;
    let l = edges[0].local_index;
    edges.iter().all(|e| e.local_index == l).then_some(l)
}

/// The polygon `lP*`: the convex hull of the primitive outer edge normals.
pub fn dual_scaled(p: &Polygon, l: i64) -> Result<Polygon> {
    if is_l_reflexive(p) != Some(l) {
        return Err(Error::NotReflexive);
    }
    let normals = p.edges()?.into_iter().map(|e| e.normal).collect();
    Polygon::from_vertices(normals)
}

/// The sublattice `Λ_P` generated by the boundary lattice points.
pub fn boundary_sublattice(p: &Polygon) -> Result<SublatticeInfo> {
    if is_l_reflexive(p).is_none() {
        return Err(Error::NotReflexive);
    }
    sublattice_of(&p.boundary_points())
}

/// `p` rewritten in coordinates of `Λ_P`, where it is reflexive of index one.
pub fn associated_reflexive(p: &Polygon) -> Result<Polygon> {
    let lattice = boundary_sublattice(p)?;
    convex_hull(&restrict_to_sublattice(p.vertices(), &lattice)?)
}

/// Boundary counts of a record and its dual add up to twelve.
pub fn twelve_check(r: &LReflexiveRecord) -> bool {
    r.b + r.b_dual == 12
}

/// Smallest `k ≥ 1` such that `int(P/k)` holds no lattice point besides the origin.
pub fn order_of(p: &Polygon) -> Result<i64> {
    let edges = p.edges()?;
    let points: Vec<_> = p
        .lattice_points()
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    // x ∈ int(P/k) iff k·⟨u_F, x⟩ < l_F for every edge F
    let inside = |k: i64, x: &crate::lattice::Point2| {
        edges.iter().all(|e| k * e.normal.dot(x) < e.local_index)
    };
    let mut k = 1;
    while points.iter().any(|x| inside(k, x)) {
        k += 1;
    }
    Ok(k)
}

/// Coefficients of the numerator `h*(t)` of the Ehrhart series of a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HStarVector {
    pub c0: i64,
    pub c1: i64,
    pub c2: i64,
}

impl HStarVector {
    /// From lattice point counts: `1 + (|P ∩ N| − 3) t + i t²`.
    pub fn from_lattice_points(p: &Polygon) -> Self {
        let total = p.lattice_points().len() as i64;
        let interior = p.interior_points().len() as i64;
        HStarVector {
            c0: 1,
            c1: total - 3,
            c2: interior,
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.c0 == self.c2
    }
}

/// Closed form of the `h*`-vector of an `l`-reflexive polygon with `b`
/// boundary points.
pub fn hstar(r: &LReflexiveRecord) -> HStarVector {
    hstar_from(r.index, r.b)
}

pub fn hstar_from(l: i64, b: i64) -> HStarVector {
    HStarVector {
        c0: 1,
        c1: (l + 1) / 2 * b - 2,
        c2: (l - 1) / 2 * b + 1,
    }
}

/// The Ehrhart polynomial `L_P(m) = a2·m² + a1·m + a0` of a lattice polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EhrhartQuadratic {
    pub a2: Ratio<i64>,
    pub a1: Ratio<i64>,
    pub a0: Ratio<i64>,
}

impl EhrhartQuadratic {
    pub fn of(p: &Polygon) -> Self {
        EhrhartQuadratic {
            a2: Ratio::new(p.normalized_volume(), 2),
            a1: Ratio::new(p.num_boundary_points(), 2),
            a0: Ratio::from_integer(1),
        }
    }

    pub fn eval(&self, m: i64) -> Ratio<i64> {
        let m = Ratio::from_integer(m);
        self.a2 * m * m + self.a1 * m + self.a0
    }

    /// `a1² − 4·a2·a0`.
    pub fn discriminant(&self) -> Ratio<i64> {
        self.a1 * self.a1 - Ratio::from_integer(4) * self.a2 * self.a0
    }
}

/// True iff both roots of `L_P` have real part exactly `−1/(2l)`.
///
/// The roots sum to `−b/Vol`, so for a complex pair (or a double root) the
/// common real part is `−b/(2 Vol)`; two distinct real roots never qualify.
pub fn ehrhart_roots_on_line(p: &Polygon, l: i64) -> bool {
    let q = EhrhartQuadratic::of(p);
    let real_part_ok = q.a1 / (Ratio::from_integer(2) * q.a2) == Ratio::new(1, 2 * l);
    real_part_ok && q.discriminant() <= Ratio::from_integer(0)
}

/// For an LDP polygon of Gorenstein index `l`: if the Ehrhart roots lie on
/// `Re z = −1/(2l)` then the polygon must be `l`-reflexive. Returns false
/// only on a counterexample.
pub fn is_ldp_roots_imply_reflexive(p: &Polygon) -> Result<bool> {
    let l = p.gorenstein_index()?;
    Ok(!ehrhart_roots_on_line(p, l) || is_l_reflexive(p) == Some(l))
}
