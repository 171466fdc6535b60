//! Exact-arithmetic toolkit for hyperbolic reflection-group wall
//! arrangements in Minkowski space `R^{1,n}`.
//!
//! The crate models walls (space-like vectors up to positive scale) of the
//! right-angled ideal 24-cell and its one-parameter deformation family,
//! classifies pairwise wall relations exactly over `Q(sqrt2, sqrt5)` and its
//! parameter extension, and decides the geometric questions attached to that
//! family: Coxeter diagrams, Vinberg's finite-volume criterion, the
//! arithmeticity cycle condition, Zariski tangent-space dimensions, cusp
//! ranks, and the conformal sphere arrangement on the boundary at infinity.
//!
//! Modules:
//! - [`scalar`]: rationals, `F = Q(sqrt2, sqrt5)`, `F[t]/(t^2 - r)`, Laurent
//!   polynomials in `t`, certified sign oracle, `f64` backend.
//! - [`minkowski`]: the Minkowski form, vector classification, reflections,
//!   pair relations, exact kernels.
//! - [`arrangement`]: the built-in wall systems, relation matrices, Coxeter
//!   diagrams, ideal vertices, symmetries.
//! - [`vinberg`]: Gram-definiteness subdiagram classification, finite-volume
//!   audit, cusp ranks, arithmeticity, transition scans.
//! - [`tangent`]: differentiated constraint systems and kernel computations
//!   for infinitesimal rigidity.
//! - [`infinity`]: stereographic charts, boundary spheres, slice figures,
//!   and the cuboctahedron limit.

pub mod arrangement;
pub mod error;
pub mod infinity;
pub mod minkowski;
pub mod scalar;
pub mod tangent;
pub mod vinberg;

pub use error::{Error, Result};
