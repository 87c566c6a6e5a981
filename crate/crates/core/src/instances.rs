//! Named graphs and seeded random generators.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// An outerplanar graph with no (2,2)-coloring, on 17 vertices.
///
/// Vertex 0 is the hub `u`, joined to the path `u1..u8` (ids 1..=8).
/// `u2` is joined to the path `u21..u24` (ids 9..=12) and `u3` to the path
/// `u31..u34` (ids 13..=16).
pub fn lemma1_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 1..=8 {
        edges.push((0, i));
    }
    for i in 1..8 {
        edges.push((i, i + 1));
    }
    for (hub, first) in [(2, 9), (3, 13)] {
        for j in 0..4 {
            edges.push((hub, first + j));
        }
        for j in 0..3 {
            edges.push((first + j, first + j + 1));
        }
    }
    Graph::new(17, edges).expect("fixed edge list is in range")
}

pub fn k6() -> Graph {
    Graph::complete(6)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Chords of a uniformly chosen apex triangulation of the polygon `poly`.
fn random_triangulation(poly: &[usize], rng: &mut ChaCha8Rng, out: &mut Vec<(usize, usize)>) {
    let len = poly.len();
    if len <= 3 {
        return;
    }
    let i = rng.gen_range(1..len - 1);
    if i > 1 {
        out.push((poly[0], poly[i]));
    }
    if i < len - 2 {
        out.push((poly[i], poly[len - 1]));
    }
    random_triangulation(&poly[..=i], rng, out);
    random_triangulation(&poly[i..], rng, out);
}

fn relabel(n: usize, edges: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.iter().map(|&(a, b)| (perm[a], perm[b]))).expect("relabelled edges are in range")
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// A connected outerplanar graph on `n` vertices: a random spanning tree
/// of a random triangulated polygon plus a random subset of its other
/// edges.
pub fn random_outerplanar(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "random_outerplanar needs n >= 3");
    let mut rng = rng(seed);
    let poly: Vec<usize> = (0..n).collect();
    let mut all: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    random_triangulation(&poly, &mut rng, &mut all);
    all.shuffle(&mut rng);
    let density: f64 = rng.gen_range(0.0..1.0);
    let mut parent: Vec<usize> = (0..n).collect();
    let mut kept = Vec::new();
    for &(a, b) in &all {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            kept.push((a, b));
        } else if rng.gen_bool(density) {
            kept.push((a, b));
        }
    }
    relabel(n, &kept, &mut rng)
}

/// A triangulated polygon on `n` vertices (a maximal outerplanar graph).
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "random_maximal_outerplanar needs n >= 3");
    let mut rng = rng(seed);
    let poly: Vec<usize> = (0..n).collect();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    random_triangulation(&poly, &mut rng, &mut edges);
    relabel(n, &edges, &mut rng)
}

/// A biconnected outerpath on `n` vertices. Built as a strip of triangles,
/// each glued to an edge of the previous one; unless `maximal`, a random
/// subset of the inner edges is then removed.
pub fn random_outerpath(n: usize, seed: u64, maximal: bool) -> Graph {
    assert!(n >= 3, "random_outerpath needs n >= 3");
    let mut rng = rng(seed);
    // probability of keeping the current side, which produces long fans
    let stickiness: f64 = rng.gen_range(0.0..1.0);
    let drop: f64 = if maximal { 0.0 } else { rng.gen_range(0.0..1.0) };
    let (mut l, mut r) = (0usize, 1usize);
    let mut edges = BTreeSet::from([(0, 1)]);
    let mut last_right = true;
    for x in 2..n {
        // from x = 3 on, (l, r) is shared by two triangles
        if x >= 3 && rng.gen_bool(drop) {
            edges.remove(&(l.min(r), l.max(r)));
        }
        edges.insert((l, x));
        edges.insert((r, x));
        let right = if rng.gen_bool(stickiness) {
            last_right
        } else {
            !last_right
        };
        if right {
            r = x;
        } else {
            l = x;
        }
        last_right = right;
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    relabel(n, &edges, &mut rng)
}

/// Every inner triangulation of the polygon `0..n` whose weak dual is a
/// path, in a fixed order.
pub fn all_maximal_outerpaths(n: usize) -> Vec<Graph> {
    assert!(n >= 3, "a polygon needs at least three vertices");
    let poly: Vec<usize> = (0..n).collect();
    let cycle: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    all_triangulations(&poly)
        .into_iter()
        .filter(|(chords, triangles)| {
            triangles.iter().all(|t| {
                let inner = [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
                    .iter()
                    .filter(|&&(a, b)| chords.contains(&(a.min(b), a.max(b))))
                    .count();
                inner <= 2
            })
        })
        .map(|(chords, _)| Graph::new(n, cycle.iter().copied().chain(chords)).expect("polygon edges are in range"))
        .collect()
}

type Triangulation = (Vec<(usize, usize)>, Vec<[usize; 3]>);

fn all_triangulations(poly: &[usize]) -> Vec<Triangulation> {
    let len = poly.len();
    if len < 3 {
        return vec![(Vec::new(), Vec::new())];
    }
    let (a, b) = (poly[0], poly[len - 1]);
    let mut out = Vec::new();
    for i in 1..len - 1 {
        let apex = poly[i];
        let left = all_triangulations(&poly[..=i]);
        let right = all_triangulations(&poly[i..]);
        for (lc, lt) in &left {
            for (rc, rt) in &right {
                let mut chords = lc.clone();
                chords.extend_from_slice(rc);
                if i > 1 {
                    chords.push((a.min(apex), a.max(apex)));
                }
                if i < len - 2 {
                    chords.push((apex.min(b), apex.max(b)));
                }
                let mut tris = lt.clone();
                tris.extend_from_slice(rt);
                tris.push([a, apex, b]);
                out.push((chords, tris));
            }
        }
    }
    out
}
