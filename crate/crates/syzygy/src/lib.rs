//! Combinatorial models of syzygy categories for dimer tree algebras and
//! their order-2 skew group algebras, together with a finite-dimensional
//! algebra oracle used to cross-check the combinatorics.

pub mod cycles;
pub mod fixtures;
pub mod gaction;
pub mod geom;
pub mod oracle;
pub mod potential;
pub mod quiver;
pub mod weight;

pub use cycles::{validate, ArrowKind, ChordlessCycle, CycleData, DualGraph, ValidationReport};
pub use gaction::{glue, skew, Glued, Skew, SigmaAction};
pub use potential::{canonical_potential, jacobian_relations, uniform_potential, Relation};
pub use quiver::{Arrow, ArrowIx, Potential, PotentialTerm, Quiver, QuiverError, VertexIx};
pub use weight::{skew_weights, weights, CyclePath, WeightTable};
