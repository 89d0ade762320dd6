//! Graded modules over quotients of polynomial rings, Matlis duality for
//! finite-length and artinian modules, and the homological invariants built
//! on top of them.

pub mod error;
pub mod field;
pub mod finite;
pub mod groebner;
pub mod linalg;
pub mod matlis;
pub mod module;
pub mod monomial;
pub mod homology;
pub mod invariants;
pub mod json;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod stages;
pub mod suite;
pub mod syzygy;
pub mod vector;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use poly::{PolyRing, Polynomial};
pub use ring::{Ideal, QuotientRing};
