//! 3-COLORING to (3,2)-coloring by attaching a copy of K6 at every vertex.
//!
//! In every (3,2)-coloring of K6 each vertex has exactly one same-colored
//! neighbor, so an attached vertex already sits in a monochromatic edge
//! inside its copy and cannot share its color with an original neighbor.

use crate::coloring::{validate, Coloring, DiameterBound};
use crate::graph::Graph;

use super::{ReductionArtifact, ReductionError};

/// Builds H from `g` (maximum degree at most 4). Original vertex `v` keeps
/// id `v` and becomes one vertex of its K6 copy; the other five vertices
/// of that copy are `n + 5v .. n + 5v + 5`.
pub fn threecolor_to_3star2(g: &Graph) -> Result<ReductionArtifact, ReductionError> {
    if g.max_degree() > 4 {
        return Err(ReductionError::DegreeTooHigh(g.max_degree()));
    }
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        let mut copy = vec![v];
        copy.extend((0..5).map(|j| n + 5 * v + j));
        for (i, &a) in copy.iter().enumerate() {
            for &b in &copy[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::new(6 * n, edges).expect("reduction edges are in range");
    assert!(graph.max_degree() <= 9, "reduction exceeded maximum degree nine");
    Ok(ReductionArtifact {
        graph,
        variable_chains: Vec::new(),
        clause_vertices: Vec::new(),
        attachment: (0..n).collect(),
    })
}

/// Extends a proper 3-coloring of the original graph: in each copy the
/// attached vertex pairs with one new vertex, and the other four split into
/// two pairs of the remaining colors.
pub fn three_coloring_to_coloring(art: &ReductionArtifact, colors: &[u32]) -> Result<Coloring, ReductionError> {
    let n = art.attachment.len();
    if colors.len() != n {
        return Err(ReductionError::ColoringLength {
            expected: n,
            got: colors.len(),
        });
    }
    let mut out = vec![0u32; art.graph.vertex_count()];
    for (v, &c) in colors.iter().enumerate() {
        let c = c % 3;
        out[art.attachment[v]] = c;
        let base = n + 5 * v;
        let partner = [c, (c + 1) % 3, (c + 1) % 3, (c + 2) % 3, (c + 2) % 3];
        for (j, &p) in partner.iter().enumerate() {
            out[base + j] = p;
        }
    }
    Ok(Coloring::new(out))
}

/// Reads a proper 3-coloring of the original graph off a valid
/// (3,2)-coloring of H.
pub fn coloring_to_three_coloring(art: &ReductionArtifact, c: &Coloring) -> Result<Vec<u32>, ReductionError> {
    if c.len() != art.graph.vertex_count() {
        return Err(ReductionError::ColoringLength {
            expected: art.graph.vertex_count(),
            got: c.len(),
        });
    }
    match validate(&art.graph, c, 3, DiameterBound::Two) {
        Ok(v) if v.is_valid() => {}
        _ => return Err(ReductionError::InvalidColoring),
    }
    Ok(art.attachment.iter().map(|&h| c.color(h)).collect())
}
