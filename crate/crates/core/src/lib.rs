//! Colorings in which every color class induces a forest of small stars.
//!
//! A (κ,λ)-coloring uses at most κ colors and every monochromatic
//! component is a tree of diameter at most λ. The crate provides a
//! validator, an exact backtracking solver, a polynomial decision
//! procedure for (2,2)-colorings of outerplanar graphs, a constructive
//! (2,2)-coloring of outerpaths, and reductions from NAE-3SAT and
//! 3-coloring.

pub mod coloring;
pub mod dot;
pub mod embedding;
pub mod exact;
pub mod graph;
pub mod instances;
pub mod outerpath;
pub mod outerplanar;
pub mod reductions;

pub use coloring::{validate, Coloring, DiameterBound, Role, Verdict, Violation};
pub use exact::{decide, enumerate_colorings, SolveBudget, SolveOutcome};
pub use graph::{Graph, GraphError};
pub use outerpath::color_outerpath;
pub use outerplanar::decide_outerplanar_2star;
