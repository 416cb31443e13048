//! Exact integer linear algebra on small lattices.
//!
//! Points are row vectors and matrices act on them by right multiplication,
//! so the image of a point `v` under `A` is `v·A`. Sublattices are stored by
//! a basis in row-style Hermite normal form, which makes equality of
//! sublattices a plain comparison of bases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// An integer point of `Z^D`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector<const D: usize>(pub [i64; D]);

pub type Point2 = LatticeVector<2>;
pub type Point3 = LatticeVector<3>;

impl<const D: usize> LatticeVector<D> {
    pub const ZERO: Self = LatticeVector([0; D]);

    pub fn new(coords: [i64; D]) -> Self {
        LatticeVector(coords)
    }

    pub fn coords(&self) -> &[i64; D] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Non-negative gcd of the coordinates; zero for the zero vector.
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &c| g.gcd(&c))
    }

    /// True iff the segment from the origin to `self` has no other lattice point.
    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// The primitive vector on the ray through `self`.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g <= 1 {
            return *self;
        }
        LatticeVector(self.0.map(|c| c / g))
    }

    /// `self·A` for a `D × D` matrix.
    pub fn transform(&self, a: &IntMatrix) -> Self {
        debug_assert!(a.rows() == D && a.cols() == D);
        let mut out = [0i64; D];
        for (j, o) in out.iter_mut().enumerate() {
            *o = (0..D).map(|k| self.0[k] * a.get(k, j)).sum();
        }
        LatticeVector(out)
    }
}

impl Point2 {
    /// Determinant of the 2×2 matrix with rows `self`, `other`.
    pub fn det(&self, other: &Self) -> i64 {
        self.0[0] * other.0[1] - self.0[1] * other.0[0]
    }

    /// Rotation by a quarter turn clockwise: `(x, y) ↦ (y, −x)`.
    pub fn perp(&self) -> Self {
        LatticeVector([self.0[1], -self.0[0]])
    }
}

impl Point3 {
    pub fn cross(&self, other: &Self) -> Self {
        let [a0, a1, a2] = self.0;
        let [b0, b1, b2] = other.0;
        LatticeVector([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }
}

impl<const D: usize> fmt::Debug for LatticeVector<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<const D: usize> Add for LatticeVector<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        LatticeVector(out)
    }
}

impl<const D: usize> Sub for LatticeVector<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        LatticeVector(out)
    }
}

impl<const D: usize> Neg for LatticeVector<D> {
    type Output = Self;
    fn neg(self) -> Self {
        LatticeVector(self.0.map(|c| -c))
    }
}

impl<const D: usize> Mul<i64> for LatticeVector<D> {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        LatticeVector(self.0.map(|c| c * k))
    }
}

impl<const D: usize> From<[i64; D]> for LatticeVector<D> {
    fn from(c: [i64; D]) -> Self {
        LatticeVector(c)
    }
}

/// Non-negative gcd of a nonempty sequence; `gcd_all(&[0, 0]) == 0`.
pub fn gcd_all(xs: &[i64]) -> Result<i64> {
    if xs.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(xs.iter().fold(0i64, |g, x| g.gcd(x)))
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<const N: usize>(rows: &[[i64; N]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        IntMatrix::new(rows.len(), N, data)
    }

    /// Matrix whose rows are the given points.
    pub fn from_points<const D: usize>(points: &[LatticeVector<D>]) -> Self {
        let data = points.iter().flat_map(|p| p.0).collect();
        IntMatrix::new(points.len(), D, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn row_vector<const D: usize>(&self, i: usize) -> LatticeVector<D> {
        assert_eq!(self.cols, D);
        let mut out = [0; D];
        out.copy_from_slice(self.row(i));
        LatticeVector(out)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum();
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        IntMatrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * k).collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] -= q · row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: i64) {
        if q == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j);
            self.data[dst * self.cols + j] -= q * v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self.data[r * self.cols + j] = -self.data[r * self.cols + j];
        }
    }

    /// Exact determinant (fraction-free Bareiss elimination).
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflows i64")
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs() == 1
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let data = (0..self.rows)
            .filter(|&i| i != skip_row)
            .flat_map(|i| {
                (0..self.cols)
                    .filter(move |&j| j != skip_col)
                    .map(move |j| (i, j))
            })
            .map(|(i, j)| self.get(i, j))
            .collect();
        IntMatrix::new(self.rows - 1, self.cols - 1, data)
    }

    /// Classical adjugate, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 1 {
            return IntMatrix::identity(1);
        }
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj.set(j, i, sign * self.minor(i, j).det());
            }
        }
        adj
    }

    /// Integer inverse when it exists (i.e. the matrix is unimodular).
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        let d = self.det();
        if d.abs() != 1 {
            return None;
        }
        Some(self.adjugate().scale(d))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let (_, h) = hnf(self);
        (0..h.rows)
            .filter(|&i| h.row(i).iter().any(|&x| x != 0))
            .count()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form: returns `(U, H)` with `U` unimodular and
/// `H = U·A` upper echelon, every pivot positive and every entry above a
/// pivot reduced into `[0, pivot)`. Zero rows end up at the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows;
    let n = a.cols;
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below `row`
            let pivot = (row..m)
                .filter(|&r| h.get(r, col) != 0)
                .min_by_key(|&r| h.get(r, col).abs());
            let Some(p) = pivot else { break };
            h.swap_rows(row, p);
            u.swap_rows(row, p);
            let pv = h.get(row, col);
            let mut done = true;
            for r in row + 1..m {
                let q = h.get(r, col) / pv;
                h.sub_row_multiple(r, row, q);
                u.sub_row_multiple(r, row, q);
                if h.get(r, col) != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(row, col) == 0 {
            continue;
        }
        if h.get(row, col) < 0 {
            h.negate_row(row);
            u.negate_row(row);
        }
        let pv = h.get(row, col);
        for r in 0..row {
            let q = Integer::div_floor(&h.get(r, col), &pv);
            h.sub_row_multiple(r, row, q);
            u.sub_row_multiple(r, row, q);
        }
        row += 1;
    }
    (u, h)
}

/// A full-rank sublattice of `Z^n` given by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SublatticeInfo {
    pub ambient_dim: usize,
    /// Rows are the basis vectors, in Hermite normal form.
    pub basis: IntMatrix,
    pub index: i64,
}

impl SublatticeInfo {
    fn from_generators(gens: &IntMatrix) -> Result<SublatticeInfo> {
        let n = gens.cols;
        let (_, h) = hnf(gens);
        let rank = (0..h.rows)
            .filter(|&i| h.row(i).iter().any(|&x| x != 0))
            .count();
        if rank < n {
            return Err(Error::DegenerateGenerators);
        }
        let basis = IntMatrix::new(n, n, h.data[..n * n].to_vec());
        let index = (0..n).map(|i| basis.get(i, i)).product();
        Ok(SublatticeInfo {
            ambient_dim: n,
            basis,
            index,
        })
    }

    /// The point with coordinates `c` in this basis, i.e. `c·B`.
    pub fn to_ambient<const D: usize>(&self, c: &LatticeVector<D>) -> LatticeVector<D> {
        c.transform(&self.basis)
    }

    /// Coordinates of `p` in this basis, if `p` lies in the sublattice.
    pub fn coordinates<const D: usize>(&self, p: &LatticeVector<D>) -> Option<LatticeVector<D>> {
        if D != self.ambient_dim {
            return None;
        }
        // Forward substitution against the upper-triangular basis.
        let mut c = [0i64; D];
        for j in 0..D {
            let partial: i64 = (0..j).map(|k| c[k] * self.basis.get(k, j)).sum();
            let rest = p.0[j] - partial;
            let piv = self.basis.get(j, j);
            if rest % piv != 0 {
                return None;
            }
            c[j] = rest / piv;
        }
        Some(LatticeVector(c))
    }

    pub fn contains<const D: usize>(&self, p: &LatticeVector<D>) -> bool {
        self.coordinates(p).is_some()
    }

    /// `k·Λ*`, the scaled dual lattice, when it is integral.
    pub fn scaled_dual(&self, k: i64) -> Option<SublatticeInfo> {
        // Λ* has basis B^{-T} = adj(B)^T / det(B).
        let d = self.basis.det();
        let m = self.basis.adjugate().transpose().scale(k);
        if m.entries().iter().any(|x| x % d != 0) {
            return None;
        }
        let m = IntMatrix::new(m.rows, m.cols, m.data.iter().map(|x| x / d).collect());
        SublatticeInfo::from_generators(&m).ok()
    }
}

/// The sublattice of `Z^D` generated by `points`, with its index.
pub fn sublattice_of<const D: usize>(points: &[LatticeVector<D>]) -> Result<SublatticeInfo> {
    if points.is_empty() {
        return Err(Error::DegenerateGenerators);
    }
    SublatticeInfo::from_generators(&IntMatrix::from_points(points))
}

/// Rewrites every point in the coordinates of the basis of `lattice`.
pub fn restrict_to_sublattice<const D: usize>(
    points: &[LatticeVector<D>],
    lattice: &SublatticeInfo,
) -> Result<Vec<LatticeVector<D>>> {
    if lattice.ambient_dim != D {
        return Err(Error::DimensionMismatch {
            expected: lattice.ambient_dim,
            got: D,
        });
    }
    points
        .iter()
        .map(|p| {
            lattice
                .coordinates(p)
                .ok_or_else(|| Error::NotInSublattice(p.0.to_vec()))
        })
        .collect()
}

/// Euler's totient.
pub fn totient(n: i64) -> i64 {
    assert!(n > 0);
    (1..=n).filter(|i| i.gcd(&n) == 1).count() as i64
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.mod_floor(&m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.mod_floor(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_all_examples() {
        assert_eq!(gcd_all(&[3, 2]), Ok(1));
        assert_eq!(gcd_all(&[0, 0]), Ok(0));
        assert_eq!(gcd_all(&[-8, -10]), Ok(2));
        assert_eq!(gcd_all(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn primitivity() {
        assert!(Point2::new([3, 2]).is_primitive());
        assert!(!Point2::new([0, 0]).is_primitive());
        assert!(Point3::new([-9, -4, -8]).is_primitive());
        assert!(!Point2::new([2, 0]).is_primitive());
    }

    #[test]
    fn hnf_of_identity_and_already_reduced() {
        let id = IntMatrix::identity(2);
        let (u, h) = hnf(&id);
        assert_eq!(u, id);
        assert_eq!(h, id);

        // rows (3,1),(0,1) span the same lattice as (3,0),(0,1); the entry
        // above the unit pivot reduces to zero
        let a = IntMatrix::from_rows(&[[3, 1], [0, 1]]);
        let (u, h) = hnf(&a);
        assert_eq!(h, IntMatrix::from_rows(&[[3, 0], [0, 1]]));
        assert!(u.is_unimodular());
        assert_eq!(hnf(&h).1, h);

        let b = IntMatrix::from_rows(&[[3, 1], [0, 2]]);
        assert_eq!(hnf(&b).1, b);
    }

    #[test]
    fn hnf_of_three_generators() {
        let a = IntMatrix::from_rows(&[[2, -1], [-1, 2], [-1, -1]]);
        let (u, h) = hnf(&a);
        assert_eq!(u.mul(&a), h);
        assert!(u.is_unimodular());
        assert_eq!(h.get(0, 0) * h.get(1, 1), 3);
        assert_eq!(h.row(2), &[0, 0]);
    }

    #[test]
    fn sublattice_examples() {
        let unit = sublattice_of(&[Point2::new([1, 0]), Point2::new([0, 1])]).unwrap();
        assert_eq!(unit.index, 1);

        let p3: Vec<Point2> = [[0, 1], [3, 2], [3, 1], [0, -1], [-3, -2], [-3, -1]]
            .into_iter()
            .map(Point2::new)
            .collect();
        assert_eq!(sublattice_of(&p3).unwrap().index, 3);

        let tet: Vec<Point3> = [[1, 0, 0], [3, 4, 0], [5, 0, 8], [-9, -4, -8]]
            .into_iter()
            .map(Point3::new)
            .collect();
        assert_eq!(sublattice_of(&tet).unwrap().index, 32);

        let line = [Point2::new([1, 1]), Point2::new([2, 2])];
        assert_eq!(sublattice_of(&line), Err(Error::DegenerateGenerators));
    }

    #[test]
    fn restrict_to_scaled_lattice() {
        let l = sublattice_of(&[Point2::new([2, 0]), Point2::new([0, 2])]).unwrap();
        let r = restrict_to_sublattice(&[Point2::new([2, 0]), Point2::new([0, 2])], &l).unwrap();
        assert_eq!(r, vec![Point2::new([1, 0]), Point2::new([0, 1])]);
        assert_eq!(
            restrict_to_sublattice(&[Point2::new([1, 0])], &l),
            Err(Error::NotInSublattice(vec![1, 0]))
        );
    }

    #[test]
    fn determinants_and_inverses() {
        let a = IntMatrix::from_rows(&[[2, 1, 0], [1, 1, 0], [4, 5, 1]]);
        assert_eq!(a.det(), 1);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), IntMatrix::identity(3));
        let b = IntMatrix::from_rows(&[[4, 0, 1], [0, 4, 3], [0, 0, 1]]);
        assert_eq!(b.det(), 16);
        assert_eq!(b.mul(&b.adjugate()), IntMatrix::identity(3).scale(16));
    }

    #[test]
    fn scaled_dual_of_index_l_lattice() {
        // Λ = Z·(3,1) + Z·(0,1) has index 3; 3Λ* must be integral of index 3.
        let l = sublattice_of(&[Point2::new([3, 1]), Point2::new([0, 1])]).unwrap();
        let d = l.scaled_dual(3).unwrap();
        assert_eq!(d.index, 3);
        for i in 0..2 {
            for j in 0..2 {
                let x: Point2 = l.basis.row_vector(i);
                let y: Point2 = d.basis.row_vector(j);
                assert_eq!(x.dot(&y) % 3, 0);
            }
        }
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(59), 58);
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(-2, 9), Some(4));
        assert_eq!(mod_inverse(3, 9), None);
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-9i64..=9, rows * cols)
            .prop_map(move |d| IntMatrix::new(rows, cols, d))
    }

    fn unimodular2() -> impl Strategy<Value = IntMatrix> {
        // products of elementary shears and a sign flip
        proptest::collection::vec((0usize..3, -3i64..=3), 1..6).prop_map(|ops| {
            let mut m = IntMatrix::identity(2);
            for (kind, k) in ops {
                let e = match kind {
                    0 => IntMatrix::from_rows(&[[1, k], [0, 1]]),
                    1 => IntMatrix::from_rows(&[[1, 0], [k, 1]]),
                    _ => IntMatrix::from_rows(&[[0, 1], [1, 0]]),
                };
                m = m.mul(&e);
            }
            m
        })
    }

    proptest! {
        #[test]
        fn hnf_is_a_unimodular_reduction(
            a in (1usize..5, 1usize..4).prop_flat_map(|(r, c)| small_matrix(r, c))
        ) {
            let (u, h) = hnf(&a);
            prop_assert!(u.is_unimodular());
            prop_assert_eq!(u.mul(&a), h.clone());
            let (_, h2) = hnf(&h);
            prop_assert_eq!(h2, h.clone());
            // echelon shape with reduced entries above pivots
            let mut last_pivot: Option<usize> = None;
            for i in 0..h.rows() {
                match h.row(i).iter().position(|&x| x != 0) {
                    Some(c) => {
                        prop_assert!(last_pivot.is_none_or(|p| c > p));
                        let pv = h.get(i, c);
                        prop_assert!(pv > 0);
                        for r in 0..i {
                            prop_assert!(h.get(r, c) >= 0 && h.get(r, c) < pv);
                        }
                        last_pivot = Some(c);
                    }
                    None => {
                        for r in i..h.rows() {
                            prop_assert!(h.row(r).iter().all(|&x| x == 0));
                        }
                    }
                }
            }
        }

        #[test]
        fn sublattice_is_invariant(pts in proptest::collection::vec((-6i64..=6, -6i64..=6), 2..6),
                                   w in unimodular2(), flip in any::<bool>()) {
            let pts: Vec<Point2> = pts.into_iter().map(|(x, y)| Point2::new([x, y])).collect();
            let Ok(base) = sublattice_of(&pts) else { return Ok(()) };
            let mut perm = pts.clone();
            perm.reverse();
            if flip {
                perm = perm.into_iter().map(|p| -p).collect();
            }
            prop_assert_eq!(sublattice_of(&perm).unwrap(), base.clone());
            let moved: Vec<Point2> = pts.iter().map(|p| p.transform(&w)).collect();
            prop_assert_eq!(sublattice_of(&moved).unwrap().index, base.index);
            let coords = restrict_to_sublattice(&pts, &base).unwrap();
            for (c, p) in coords.iter().zip(&pts) {
                prop_assert_eq!(base.to_ambient(c), *p);
            }
        }
    }
}
