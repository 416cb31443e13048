//! Named invariant suites run over a classification or over fixtures.

use lrp_core::lattice::mod_inverse;
use lrp_core::lattice::totient;
use lrp_core::loops::{
    dual_loop, loop_length, push_to_index, search_unit_loops, twelve_w_check, validate_loop,
    winding_number, Loop,
};
use lrp_core::polygon::{is_isomorphic, polygon, Polygon};
use lrp_core::polytope3::{
    boundary_lattice, dual_scaled_3, edge_lattice, is_isomorphic_3, is_l_reflexive_3,
    one_reflexive_on_vertex_lattice, polytope3, restrict_polytope, sum_24, vertex_lattice,
    Polytope3,
};
use lrp_core::reflexive::{
    associated_reflexive, boundary_sublattice, classify, dual_scaled, ehrhart_roots_on_line,
    hnf_map, hstar, is_l_reflexive, representatives, twelve_check, HStarVector, LReflexiveRecord,
};

use crate::record::{ClassificationTable, RecordJson};

pub const SUITES: [&str; 7] = [
    "twelve", "duality", "lattice", "odd", "ehrhart", "loops", "dim3",
];

/// Outcome of one suite: how many checks ran and a description of each failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_record(&mut self, ok: bool, what: &str, r: &LReflexiveRecord) {
        self.check(ok, || {
            format!(
                "{what}: {}",
                serde_json::to_string(&RecordJson::from_record(r)).unwrap_or_default()
            )
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `name` over `table` (and over even indices up to `max_l` for the
/// parity suite). Returns `None` for an unknown suite name.
pub fn run_suite(name: &str, table: &ClassificationTable, max_l: i64) -> Option<SuiteReport> {
    Some(match name {
        "twelve" => twelve(table),
        "duality" => duality(table),
        "lattice" => lattice(table),
        "odd" => odd(table, max_l),
        "ehrhart" => ehrhart(table),
        "loops" => loops(table),
        "dim3" => dim3(),
        _ => return None,
    })
}

fn twelve(table: &ClassificationTable) -> SuiteReport {
    let mut rep = SuiteReport::new("twelve");
    for r in table.records() {
        rep.check_record(twelve_check(r), "b + b_dual != 12", r);
        rep.check_record(
            r.polygon.num_vertices() == r.dual.num_vertices(),
            "vertex counts differ from dual",
            r,
        );
        rep.check_record(
            r.b <= 9 && r.polygon.num_vertices() <= 6,
            "more than 9 boundary points or 6 vertices",
            r,
        );
    }
    rep
}

fn duality(table: &ClassificationTable) -> SuiteReport {
    let mut rep = SuiteReport::new("duality");
    for r in table.records() {
        let l = r.index;
        rep.check_record(
            is_l_reflexive(&r.dual) == Some(l),
            "dual is not l-reflexive",
            r,
        );
        let back = dual_scaled(&r.dual, l)
            .map(|d| is_isomorphic(&d, &r.polygon))
            .unwrap_or(false);
        rep.check_record(back, "dual of dual is not the polygon", r);
        rep.check_record(
            r.self_dual == is_isomorphic(&r.polygon, &r.dual),
            "self-dual flag is wrong",
            r,
        );
        if l > 1 {
            // the dual of Q·(l i / 0 1) is Q*·(l j / 0 1) with i·j ≡ −1 mod l
            let q = &representatives()[r.source_id - 1];
            let j = (l - mod_inverse(r.hnf_i, l).unwrap_or(0)) % l;
            let from_q = q
                .apply_matrix(&hnf_map(l, r.hnf_i))
                .map(|p| is_isomorphic(&p, &r.polygon))
                .unwrap_or(false);
            let dual_side = dual_scaled(q, 1)
                .and_then(|qd| qd.apply_matrix(&hnf_map(l, j)))
                .map(|d| is_isomorphic(&d, &r.dual))
                .unwrap_or(false);
            rep.check_record(
                from_q && dual_side && (r.hnf_i * j + 1) % l == 0,
                "dual parameter is not −i⁻¹",
                r,
            );
        }
    }
    rep
}

fn lattice(table: &ClassificationTable) -> SuiteReport {
    let mut rep = SuiteReport::new("lattice");
    for r in table.records() {
        let index = boundary_sublattice(&r.polygon).map(|s| s.index);
        rep.check_record(
            index == Ok(r.index),
            "boundary lattice index differs from l",
            r,
        );
        let q = associated_reflexive(&r.polygon);
        let qd = associated_reflexive(&r.dual);
        let ok = match (&q, &qd) {
            (Ok(q), Ok(qd)) => {
                is_l_reflexive(q) == Some(1)
                    && dual_scaled(q, 1)
                        .map(|d| is_isomorphic(&d, qd))
                        .unwrap_or(false)
            }
            _ => false,
        };
        rep.check_record(
            ok,
            "restriction to the boundary lattice is not dual to the dual's",
            r,
        );
    }
    for (&l, row) in &table.rows {
        if l > 1 {
            rep.check((row.count as i64) <= 16 * (totient(l) - 1), || {
                format!("l = {l}: {} classes exceed 16(φ(l)−1)", row.count)
            });
        }
    }
    rep
}

fn odd(table: &ClassificationTable, max_l: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("odd");
    for l in (2..=max_l.max(30)).step_by(2) {
        let n = classify(l).len();
        rep.check(n == 0, || format!("l = {l}: {n} polygons of even index"));
    }
    for (&l, row) in &table.rows {
        rep.check(l % 2 == 1 || row.count == 0, || {
            format!("l = {l}: {} polygons of even index", row.count)
        });
    }
    rep
}

fn is_big_triangle(p: &Polygon) -> bool {
    is_isomorphic(
        p,
        &polygon(&[[-1, -1], [-1, 2], [2, -1]]).expect("valid triangle"),
    )
}

fn ehrhart(table: &ClassificationTable) -> SuiteReport {
    let mut rep = SuiteReport::new("ehrhart");
    for r in table.records() {
        let (l, b, p) = (r.index, r.b, &r.polygon);
        rep.check_record(p.normalized_volume() == l * b, "Vol != l·b", r);
        rep.check_record(
            p.lattice_points().len() as i64 == (l + 1) / 2 * b + 1,
            "|P ∩ N| != (l+1)/2·b + 1",
            r,
        );
        rep.check_record(
            HStarVector::from_lattice_points(p) == hstar(r),
            "h* differs from the closed form",
            r,
        );
        rep.check_record(
            hstar(r).is_palindromic() == (l == 1),
            "h* palindromic iff l = 1 fails",
            r,
        );
        let on_line = ehrhart_roots_on_line(p, l);
        rep.check_record(
            on_line != (l == 1 && is_big_triangle(p)),
            "Ehrhart roots off the line",
            r,
        );
        rep.check_record(r.order <= (l + 1) / 2, "order exceeds (l+1)/2", r);
    }
    rep
}

fn p_l(l: i64) -> Polygon {
    polygon(&[[0, 1], [l, 2], [l, 1], [0, -1], [-l, -2], [-l, -1]]).expect("valid hexagon")
}

/// The 3-reflexive loop of length zero found by bounded search.
pub fn zero_length_loop() -> Option<Loop> {
    let keep = |lp: &Loop| {
        loop_length(lp) == 0 && winding_number(lp) == 1 && push_to_index(lp, 3).is_some()
    };
    let found = search_unit_loops(8, 2, 1, &keep);
    push_to_index(found.first()?, 3).map(|(_, lp)| lp)
}

fn loops(table: &ClassificationTable) -> SuiteReport {
    let mut rep = SuiteReport::new("loops");
    for r in table.records().filter(|r| r.index <= 29) {
        match Loop::from_polygon(&r.polygon, r.index) {
            Ok(lp) => {
                rep.check_record(
                    loop_length(&lp) == r.b && winding_number(&lp) == 1,
                    "convex loop metrics",
                    r,
                );
                for k in 1..=3 {
                    rep.check_record(
                        twelve_w_check(&lp.repeat(k)),
                        &format!("{k}-fold loop fails 12·w"),
                        r,
                    );
                }
                rep.check_record(
                    twelve_w_check(&lp.reversed()),
                    "reversed loop fails 12·w",
                    r,
                );
            }
            Err(e) => rep.check_record(false, &format!("boundary is not a loop ({e})"), r),
        }
    }
    for l in [3, 5, 7] {
        let lp = Loop::from_polygon(&p_l(l), l).expect("P_l is l-reflexive");
        rep.check(twelve_w_check(&lp.repeat(2)), || {
            format!("P_{l} doubled fails 12·w")
        });
    }
    match zero_length_loop() {
        Some(lp) => {
            let dual = validate_loop(dual_loop(&lp).points().to_vec(), 3);
            rep.check(twelve_w_check(&lp), || {
                format!("non-convex loop {:?} fails 12·w", lp.points())
            });
            rep.check(dual.as_ref().map(loop_length) == Ok(12), || {
                format!("dual of {:?} is not a loop of length 12", lp.points())
            });
        }
        None => rep.check(false, || {
            "no 3-reflexive loop of length 0 found".to_string()
        }),
    }
    rep
}

/// The 3-dimensional fixtures: the `l`-parametrized tetrahedra, the
/// 2-reflexive tetrahedron with index-4 edge lattice, and `S`.
pub fn dim3_fixtures() -> (Vec<(i64, Polytope3)>, Polytope3, Polytope3) {
    let family = (1..=10)
        .map(|l| {
            (
                l,
                polytope3(&[[-l, -1, 0], [l, 0, -1], [0, 1, 0], [0, 0, 1]])
                    .expect("valid tetrahedron"),
            )
        })
        .collect();
    let p = polytope3(&[[1, 0, 0], [3, 4, 0], [5, 0, 8], [-9, -4, -8]]).expect("valid tetrahedron");
    let s =
        polytope3(&[[-8, -12, -17], [4, 0, 1], [0, 4, 3], [0, 0, 1]]).expect("valid tetrahedron");
    (family, p, s)
}

fn dim3() -> SuiteReport {
    let mut rep = SuiteReport::new("dim3");
    let (family, p, s) = dim3_fixtures();
    for (l, t) in &family {
        let want = if l % 2 == 1 { *l } else { l / 2 };
        let got = is_l_reflexive_3(t);
        rep.check(got == Some(want), || {
            format!("tetrahedron at l = {l}: index {got:?}, expected {want}")
        });
    }
    rep.check(is_l_reflexive_3(&p) == Some(2), || {
        "P is not 2-reflexive".into()
    });
    rep.check(boundary_lattice(&p).map(|x| x.index) == Ok(1), || {
        "Λ_P of P is not N".into()
    });
    rep.check(vertex_lattice(&p).map(|x| x.index) == Ok(32), || {
        "vertex lattice of P is not of index 32".into()
    });
    let pe = edge_lattice(&p);
    rep.check(pe.as_ref().map(|x| x.index) == Ok(4), || {
        "edge lattice of P is not of index 4".into()
    });
    let p_prime =
        polytope3(&[[-9, -2, -4], [1, 0, 0], [3, 2, 0], [5, 0, 4]]).expect("valid tetrahedron");
    let q =
        polytope3(&[[-1, 1, 1], [-1, 1, 2], [-1, 3, 1], [3, -5, -4]]).expect("valid tetrahedron");
    let restricted = pe.and_then(|e| restrict_polytope(&p, &e));
    rep.check(
        restricted
            .map(|x| is_isomorphic_3(&x, &p_prime))
            .unwrap_or(false),
        || "P on its edge lattice is not P′".into(),
    );
    let dual_ok = dual_scaled_3(&p, 2).and_then(|d| {
        let e = edge_lattice(&d)?;
        Ok(e.index == 2 && is_isomorphic_3(&restrict_polytope(&d, &e)?, &q))
    });
    rep.check(dual_ok == Ok(true), || {
        "2P* on its edge lattice is not Q".into()
    });
    rep.check(
        dual_scaled_3(&p_prime, 1).map(|d| is_isomorphic_3(&d, &q)) == Ok(true),
        || "P′* is not Q".into(),
    );
    rep.check(sum_24(&p, 2) == Ok(24), || {
        format!("sum for P is {:?}", sum_24(&p, 2))
    });
    rep.check(sum_24(&s, 2) == Ok(28), || {
        format!("sum for S is {:?}", sum_24(&s, 2))
    });
    rep.check(one_reflexive_on_vertex_lattice(&p) == Ok(true), || {
        "P is not reflexive on its vertex lattice".into()
    });
    rep
}
