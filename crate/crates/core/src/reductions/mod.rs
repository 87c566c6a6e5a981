//! Polynomial reductions into (κ,2)-coloring, with maps between
//! certificates of the source problem and colorings of the built graph.

pub mod cnf;
pub mod gadgets;
pub mod naesat;
pub mod three_color;

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

pub use cnf::{parse_dimacs_cnf, CnfError, CnfFormula};
pub use gadgets::{build_chain, trianglefree_clause_gadget, variable_gadget};
pub use naesat::{assignment_to_coloring, coloring_to_assignment, naesat_to_2star};
pub use three_color::{coloring_to_three_coloring, three_coloring_to_coloring, threecolor_to_3star2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("input graph has maximum degree {0}, above the supported bound of 4")]
    DegreeTooHigh(usize),
    #[error("coloring is not a valid certificate for the reduced graph")]
    InvalidColoring,
    #[error("assignment has {got} values but the formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
}

/// The spine-path of one variable's chain, split by position parity
/// (positions counted from 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableChain {
    pub spine: Vec<usize>,
    pub odd: Vec<usize>,
    pub even: Vec<usize>,
}

/// A reduced graph together with the vertex maps of its gadgets. Only the
/// maps relevant to the reduction that produced it are filled in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    /// Chain of each variable, indexed from 0 for variable 1.
    pub variable_chains: Vec<VariableChain>,
    /// The three clause-vertices of each clause, in literal order.
    pub clause_vertices: Vec<[usize; 3]>,
    /// Vertex of the reduced graph standing for each original vertex.
    pub attachment: Vec<usize>,
}

impl ReductionArtifact {
    /// Plain-text certificate map, one gadget per line, variables and
    /// clauses numbered from 1.
    pub fn to_map_text(&self) -> String {
        let mut s = String::new();
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        for (i, ch) in self.variable_chains.iter().enumerate() {
            writeln!(s, "variable {} spine {}", i + 1, join(&ch.spine)).unwrap();
            writeln!(s, "variable {} even {}", i + 1, join(&ch.even)).unwrap();
            writeln!(s, "variable {} odd {}", i + 1, join(&ch.odd)).unwrap();
        }
        for (j, c) in self.clause_vertices.iter().enumerate() {
            writeln!(s, "clause {} {}", j + 1, join(c)).unwrap();
        }
        for (v, h) in self.attachment.iter().enumerate() {
            writeln!(s, "attachment {v} {h}").unwrap();
        }
        s
    }
}
