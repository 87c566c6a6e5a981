//! NAE-3SAT to (2,2)-coloring at maximum degree five.
//!
//! Each variable gets a chain of variable gadgets whose spine-path
//! alternates colors in every (2,2)-coloring; each clause is a triangle of
//! clause-vertices. A positive literal's clause-vertex is joined to an
//! even-positioned spine vertex of its variable's chain, a negative one to
//! an odd-positioned vertex. A spine vertex already has one same-colored
//! neighbor that is a star center, so a clause-vertex must take the color
//! opposite to its spine neighbor.

use crate::coloring::{validate, Coloring, DiameterBound};
use crate::graph::Graph;

use super::cnf::CnfFormula;
use super::gadgets::{build_chain, U1, U2};
use super::{ReductionArtifact, ReductionError, VariableChain};

pub const WHITE: u32 = 0;
pub const GRAY: u32 = 1;

/// Number of gadget copies in the chain of a variable with `pos` positive
/// and `neg` negative occurrences. A chain of length `k` offers `2k + 1`
/// attachment slots of each parity below degree five (each end of the
/// spine-path has degree three, every inner vertex degree four).
pub fn chain_length(pos: usize, neg: usize) -> usize {
    let occurrences = pos + neg;
    let by_total = occurrences.saturating_sub(2).div_ceil(2);
    let by_parity = pos.max(neg).saturating_sub(1).div_ceil(2);
    by_total.max(by_parity).max(1)
}

pub fn naesat_to_2star(f: &CnfFormula) -> ReductionArtifact {
    let n = f.variable_count();
    let mut pos = vec![0; n];
    let mut neg = vec![0; n];
    for c in f.clauses() {
        for &l in c {
            let v = l.unsigned_abs() as usize - 1;
            if l > 0 {
                pos[v] += 1;
            } else {
                neg[v] += 1;
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut chains = Vec::with_capacity(n);
    let mut next = 0;
    for v in 0..n {
        let (g, spine) = build_chain(chain_length(pos[v], neg[v]));
        edges.extend(g.edges().map(|(a, b)| (a + next, b + next)));
        let spine: Vec<usize> = spine.into_iter().map(|x| x + next).collect();
        let odd = spine.iter().step_by(2).copied().collect();
        let even = spine.iter().skip(1).step_by(2).copied().collect();
        chains.push(VariableChain { spine, odd, even });
        next += g.vertex_count();
    }
    let mut degree = vec![0usize; next + 3 * f.clauses().len()];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut clause_vertices = Vec::with_capacity(f.clauses().len());
    for c in f.clauses() {
        let ids = [next, next + 1, next + 2];
        next += 3;
        edges.extend([(ids[0], ids[1]), (ids[1], ids[2]), (ids[0], ids[2])]);
        for (k, &l) in c.iter().enumerate() {
            let chain = &chains[l.unsigned_abs() as usize - 1];
            let slots = if l > 0 { &chain.even } else { &chain.odd };
            let w = *slots
                .iter()
                .find(|&&w| degree[w] < 5)
                .expect("chain length leaves a free attachment slot for every literal");
            degree[w] += 1;
            edges.push((ids[k], w));
        }
        clause_vertices.push(ids);
    }
    let graph = Graph::new(next, edges).expect("reduction edges are in range");
    assert!(graph.max_degree() <= 5, "reduction exceeded maximum degree five");
    ReductionArtifact {
        graph,
        variable_chains: chains,
        clause_vertices,
        attachment: Vec::new(),
    }
}

/// Colors the reduced graph from a truth assignment: a true variable makes
/// its even spine vertices white and odd ones gray, and a clause-vertex is
/// gray exactly when its literal is true. The result validates whenever
/// the assignment is NAE-satisfying.
pub fn assignment_to_coloring(
    art: &ReductionArtifact,
    f: &CnfFormula,
    assignment: &[bool],
) -> Result<Coloring, ReductionError> {
    if assignment.len() != art.variable_chains.len() {
        return Err(ReductionError::AssignmentLength {
            expected: art.variable_chains.len(),
            got: assignment.len(),
        });
    }
    let mut colors = vec![WHITE; art.graph.vertex_count()];
    for (chain, &value) in art.variable_chains.iter().zip(assignment) {
        let (even, odd) = if value { (WHITE, GRAY) } else { (GRAY, WHITE) };
        for &w in &chain.even {
            colors[w] = even;
        }
        for &w in &chain.odd {
            colors[w] = odd;
        }
        // each gadget copy starts two ids before its first spine vertex
        for copy in chain.spine.chunks(4) {
            let base = copy[0] - 2;
            colors[base + U1] = WHITE;
            colors[base + U2] = GRAY;
        }
    }
    for (ids, clause) in art.clause_vertices.iter().zip(f.clauses()) {
        for (&x, &l) in ids.iter().zip(clause) {
            colors[x] = if CnfFormula::literal_value(l, assignment) {
                GRAY
            } else {
                WHITE
            };
        }
    }
    Ok(Coloring::new(colors))
}

/// Reads a truth assignment off a valid (2,2)-coloring: a variable is true
/// when its even spine vertices are white.
pub fn coloring_to_assignment(art: &ReductionArtifact, c: &Coloring) -> Result<Vec<bool>, ReductionError> {
    if c.len() != art.graph.vertex_count() {
        return Err(ReductionError::ColoringLength {
            expected: art.graph.vertex_count(),
            got: c.len(),
        });
    }
    match validate(&art.graph, c, 2, DiameterBound::Two) {
        Ok(v) if v.is_valid() => {}
        _ => return Err(ReductionError::InvalidColoring),
    }
    Ok(art
        .variable_chains
        .iter()
        .map(|ch| c.color(ch.even[0]) == WHITE)
        .collect())
}
