//! Oracles shared by the integration tests. None of them calls into the
//! library's validator or solver.

#![allow(dead_code)]

use std::collections::VecDeque;

use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starcolor::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with `p` drawn per graph, so sparse and dense graphs both show up.
pub fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.9);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Outerplanar iff planar after adding a vertex joined to everything.
pub fn outerplanar_by_apex(g: &Graph) -> bool {
    let n = g.vertex_count() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().map(|(a, b)| (a as u32, b as u32)).collect();
    edges.extend((0..n).map(|v| (v, n)));
    let mut pg: UnGraph<(), ()> = UnGraph::from_edges(edges);
    while pg.node_count() < n as usize + 1 {
        pg.add_node(());
    }
    rustworkx_core::planar::is_planar(&pg)
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if d[y].is_none() {
                d[y] = Some(d[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    d
}

/// Whether every color class induces a forest whose trees have diameter at
/// most `lambda`, using at most `kappa` colors. Components are found by BFS
/// over monochromatic edges; a component is a tree when it has one edge
/// fewer than vertices.
pub fn is_valid_coloring(g: &Graph, colors: &[u32], kappa: u32, lambda: usize) -> bool {
    let n = g.vertex_count();
    if colors.iter().any(|&c| c >= kappa) {
        return false;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| colors[w] == colors[v])
                .collect()
        })
        .collect();
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let d = bfs(&adj, s);
        let comp: Vec<usize> = (0..n).filter(|&v| d[v].is_some()).collect();
        for &v in &comp {
            seen[v] = true;
        }
        let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return false;
        }
        for &v in &comp {
            if bfs(&adj, v).iter().flatten().any(|&x| x > lambda) {
                return false;
            }
        }
    }
    true
}

/// All colorings in `0..kappa` in lexicographic order.
pub fn all_colorings(n: usize, kappa: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (kappa as u64).pow(n as u32);
    (0..total).map(move |mut x| {
        let mut c = vec![0u32; n];
        for slot in c.iter_mut().rev() {
            *slot = (x % kappa as u64) as u32;
            x /= kappa as u64;
        }
        c
    })
}

pub fn brute_force_colorable(g: &Graph, kappa: u32, lambda: usize) -> bool {
    all_colorings(g.vertex_count(), kappa).any(|c| is_valid_coloring(g, &c, kappa, lambda))
}

/// Proper 3-colorability by trying all 3^n colorings.
pub fn three_colorable(g: &Graph) -> bool {
    all_colorings(g.vertex_count(), 3).any(|c| g.edges().all(|(a, b)| c[a] != c[b]))
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
    })
}
