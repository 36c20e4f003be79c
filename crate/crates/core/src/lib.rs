//! SU(2) representations of 3-manifold groups.
//!
//! Decides whether Seifert fibered and Sol manifolds admit only abelian
//! representations into SU(2), and produces explicit non-abelian witnesses
//! when they do not. Also provides a numeric representation search for
//! arbitrary finite presentations and the supporting integer arithmetic.

pub mod commands;
pub mod dehn;
pub mod error;
pub mod forms;
pub mod group;
pub mod homology;
pub mod manifold;
pub mod polygon;
pub mod quaternion;
pub mod report;
pub mod search;
pub mod seifert;
pub mod sol;

pub use error::{Error, Result};
pub use group::{GroupPresentation, Representation, Word};
pub use quaternion::{ImaginaryUnitVector, UnitQuaternion};
