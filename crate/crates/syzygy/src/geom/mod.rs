//! Geometric models: polygon diagonals, punctured-polygon arcs, radical
//! configurations, the derived rotation, and mesh combinatorics.

pub mod arc;
pub mod arquiver;
pub mod branched;
pub mod cover;
pub mod diag;
pub mod radical;

pub use arc::{project, Arc, ArcError, Projected, Sign};
pub use branched::{annulus_crossing, orbit_crossing_sum, verify_branched_cover};
pub use arquiver::{arc_quiver, diag_quiver, TransQuiver};
pub use cover::{
    hammock_arc, hammock_diag, mesh_hom_dim_arc, mesh_hom_dim_diag, stable_hom_arc,
    stable_hom_diag, KnitError,
};
pub use diag::{in_cw_arc, Diag, DiagError};
pub use radical::{names, twins, ConfigA, ConfigD, ConfigError, ConfigViolation};
