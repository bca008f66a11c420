//! Exact enumeration of numerical walls for the classes `(−R, 0, D, 0)` on ℙ³.
//!
//! All arithmetic is over the rationals. Floating point appears only when
//! emitting SVG coordinates.

pub mod bounds;
pub mod catalog;
pub mod chern;
pub mod conditions;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod plane;
pub mod rat;

pub use bounds::{bound_report, max_wall_beta0, BoundReport};
pub use catalog::{catalog_json, load_fixture, verify, CatalogDocument, VerifyReport};
pub use chern::{ChernVector, StabilityPoint, TwistParameter};
pub use conditions::{CandidateQuad, TargetClass};
pub use enumerate::{enumerate_walls, EnumerationOptions, WallCandidate, WallCatalog};
pub use error::WallError;
pub use rat::{ExtRat, Rat};
