//! Exact computations with planar arcs in PG(2,q).
//!
//! The crate is organized bottom-up: [`gf`] and [`plane`] provide the field
//! and incidence geometry, [`poly`] and [`linalg`] the polynomial and linear
//! algebra layer, and the remaining modules the arc-specific constructions.

pub mod curvefinder;
pub mod dualcurve;
pub mod fixtures;
pub mod gf;
pub mod linalg;
pub mod par;
pub mod plane;
pub mod poly;
pub mod search;
pub mod socle;
pub mod tangents;
pub mod ttform;
pub mod wire;

pub use gf::{Fe, Field, FieldError};
pub use plane::{validate_arc, Arc, ArcViolation, LinearForm, PlaneError, ProjPoint};
pub use poly::{BiForm, BinaryForm, Exp, HomPoly, TTForm};
pub use tangents::{build_tangent_system, check_lemma_of_tangents, LemmaReport, TangentError, TangentSystem};
