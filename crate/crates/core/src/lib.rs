//! Exact Lin-Lu-Yau-Ollivier Ricci curvature on graphs of maximum degree 3.
//!
//! The crate is `no_std` (it needs `alloc`) and holds every algorithm of the
//! toolkit: graph representation and geodesic machinery, exact optimal
//! transport, the curvature engines, generators for the nonnegatively curved
//! families, the recognizer, isomorph-free enumeration of subcubic graphs and
//! the harmonic-function checks. File formats, the CLI and parallel drivers
//! live in the `ricci` companion crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod classify;
pub mod curvature;
pub mod enumerate;
pub mod families;
pub mod flow;
pub mod graph;
pub mod harmonic;
pub mod patterns;
pub mod rational;
pub mod state;

pub use graph::{DistanceMatrix, GeodesicPath, Graph, GraphError, WeightScheme};
pub use rational::Rational;
