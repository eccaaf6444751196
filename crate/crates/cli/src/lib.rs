//! Command line front end for the syzygy library: reports, rendering,
//! fixture suite, and the argument surface of the `syz` binary.

pub mod cmd;
pub mod dot;
pub mod render;
pub mod report;
pub mod schema;
pub mod suite;
