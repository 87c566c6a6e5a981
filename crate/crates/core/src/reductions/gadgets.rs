//! Small gadgets used by the reductions.

use crate::graph::Graph;

/// Vertex ids inside [`variable_gadget`].
pub const U1: usize = 0;
pub const U2: usize = 1;
pub const V: [usize; 4] = [2, 3, 4, 5];

/// Two adjacent vertices `u1`, `u2`, a path `v1 - v2 - v3 - v4`, and every
/// `u` joined to every `v`. In any (2,2)-coloring `u1` and `u2` differ and
/// the path alternates.
pub fn variable_gadget() -> Graph {
    build_chain(1).0
}

/// `k` copies of the variable gadget, copy `i` on ids `6i..6i+6` in the
/// order `u1, u2, v1, v2, v3, v4`, with `v4` of each copy joined to `v1`
/// of the next. Returns the graph and its spine-path, the concatenation of
/// the `v` paths.
pub fn build_chain(k: usize) -> (Graph, Vec<usize>) {
    assert!(k >= 1, "a chain has at least one copy");
    let mut edges = Vec::with_capacity(14 * k);
    let mut spine = Vec::with_capacity(4 * k);
    for i in 0..k {
        let o = 6 * i;
        edges.push((o + U1, o + U2));
        for v in V {
            edges.push((o + U1, o + v));
            edges.push((o + U2, o + v));
        }
        for w in V.windows(2) {
            edges.push((o + w[0], o + w[1]));
        }
        if i > 0 {
            edges.push((o - 6 + V[3], o + V[0]));
        }
        spine.extend(V.iter().map(|v| o + v));
    }
    (Graph::new(6 * k, edges).expect("chain edges are in range"), spine)
}

/// Vertex ids inside [`trianglefree_clause_gadget`].
pub const GRID: [[usize; 3]; 2] = [[0, 1, 2], [3, 4, 5]];
pub const CLAUSE_U: usize = 6;

/// A 2×3 grid `u11 u12 u13 / u21 u22 u23` plus a vertex `u` joined to
/// `u11` and `u23`. Its clause-vertices `u`, `u11`, `u23` never share one
/// color in a (2,2)-coloring.
pub fn trianglefree_clause_gadget() -> Graph {
    let mut edges = Vec::new();
    for row in GRID {
        edges.push((row[0], row[1]));
        edges.push((row[1], row[2]));
    }
    for (&top, &bottom) in GRID[0].iter().zip(&GRID[1]) {
        edges.push((top, bottom));
    }
    edges.push((CLAUSE_U, GRID[0][0]));
    edges.push((CLAUSE_U, GRID[1][2]));
    Graph::new(7, edges).expect("gadget edges are in range")
}
