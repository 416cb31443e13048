//! Exact integer geometry of reflexive lattice polygons of higher index.
//!
//! A lattice polytope is `l`-reflexive when it contains the origin in its
//! interior, its vertices are primitive and every facet sits at integral
//! distance `l` from the origin. This crate classifies the `l`-reflexive
//! polygons through Hermite normal forms applied to the sixteen reflexive
//! polygons, checks their boundary-point and Ehrhart invariants, handles
//! non-convex reflexive loops, and supports a handful of 3-dimensional
//! examples.

pub mod error;
pub mod lattice;
pub mod loops;
pub mod polygon;
pub mod polytope3;
pub mod reflexive;

pub use error::{Error, Result};
