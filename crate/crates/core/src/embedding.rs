//! Outerplanarity recognition, outerplane faces, weak duals and the
//! biconnectivity augmentation.
//!
//! Each block of a connected graph is embedded separately. A biconnected
//! block is reduced by repeatedly deleting a vertex of degree two and
//! joining its neighbours; reinserting the vertices in reverse order
//! rebuilds the candidate outer cycle, which is then checked directly
//! (cycle edges exist, chords pairwise non-crossing). A biconnected
//! outerplanar graph always has a degree-two vertex whose neighbours are its
//! cycle neighbours, so the reduction only fails on non-outerplanar input.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
}

/// An outerplane embedding: the closed walk around the outer face and the
/// boundary cycles of the inner faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterEmbedding {
    /// Cyclic boundary walk of the outer face. For biconnected graphs this is
    /// the Hamiltonian cycle and every vertex appears once; cut vertices
    /// appear once per incident block otherwise.
    pub outer_cycle: Vec<usize>,
    /// Inner faces as cyclic vertex sequences.
    pub inner_faces: Vec<Vec<usize>>,
}

struct BlockEmbedding {
    cycle: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

/// Returns an outerplane embedding of `g`, or `None` if `g` is not
/// outerplanar. Disconnected graphs are rejected.
pub fn recognize_outerplanar(g: &Graph) -> Result<Option<OuterEmbedding>, EmbeddingError> {
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(OuterEmbedding {
            outer_cycle: Vec::new(),
            inner_faces: Vec::new(),
        }));
    }
    if n >= 2 && g.edge_count() > 2 * n - 3 {
        return Ok(None);
    }
    let blocks = g.blocks();
    if blocks.is_empty() {
        return Ok(Some(OuterEmbedding {
            outer_cycle: vec![0],
            inner_faces: Vec::new(),
        }));
    }
    let mut embedded = Vec::with_capacity(blocks.len());
    for block in &blocks {
        match embed_block(block) {
            Some(b) => embedded.push(b),
            None => return Ok(None),
        }
    }
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in embedded.iter().enumerate() {
        for &v in &b.cycle {
            vertex_blocks[v].push(i);
        }
    }
    let mut visited = vec![false; embedded.len()];
    let start = embedded[0].cycle[0];
    visited[0] = true;
    let mut walk = vec![start];
    tour_block(&embedded, &vertex_blocks, &mut visited, 0, start, &mut walk);
    for &b in &vertex_blocks[start] {
        if !visited[b] {
            visited[b] = true;
            walk.push(start);
            tour_block(&embedded, &vertex_blocks, &mut visited, b, start, &mut walk);
        }
    }
    let inner_faces = embedded.into_iter().flat_map(|b| b.faces).collect();
    Ok(Some(OuterEmbedding {
        outer_cycle: walk,
        inner_faces,
    }))
}

fn tour_block(
    blocks: &[BlockEmbedding],
    vertex_blocks: &[Vec<usize>],
    visited: &mut [bool],
    b: usize,
    entry: usize,
    walk: &mut Vec<usize>,
) {
    let cycle = &blocks[b].cycle;
    let at = cycle
        .iter()
        .position(|&v| v == entry)
        .expect("entry vertex lies on the block");
    for k in 1..cycle.len() {
        let w = cycle[(at + k) % cycle.len()];
        walk.push(w);
        for &other in &vertex_blocks[w] {
            if !visited[other] {
                visited[other] = true;
                tour_block(blocks, vertex_blocks, visited, other, w, walk);
                walk.push(w);
            }
        }
    }
}

fn embed_block(edges: &[(usize, usize)]) -> Option<BlockEmbedding> {
    if edges.len() == 1 {
        let (u, v) = edges[0];
        return Some(BlockEmbedding {
            cycle: vec![u, v],
            faces: Vec::new(),
        });
    }
    let verts: Vec<usize> = edges
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k = verts.len();
    if edges.len() > 2 * k - 3 {
        return None;
    }
    let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![BTreeSet::new(); k];
    for &(u, v) in edges {
        adj[local[&u]].insert(local[&v]);
        adj[local[&v]].insert(local[&u]);
    }
    let original = adj.clone();
    let mut alive = vec![true; k];
    let mut removed = Vec::new();
    let mut remaining = k;
    while remaining > 3 {
        let v = (0..k).find(|&v| alive[v] && adj[v].len() == 2)?;
        let mut it = adj[v].iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        alive[v] = false;
        remaining -= 1;
        removed.push((v, a, b));
    }
    let mut cycle: Vec<usize> = (0..k).filter(|&v| alive[v]).collect();
    if cycle.len() != 3 || !(0..3).all(|i| adj[cycle[i]].contains(&cycle[(i + 1) % 3])) {
        return None;
    }
    for &(v, a, b) in removed.iter().rev() {
        let len = cycle.len();
        let pa = cycle.iter().position(|&x| x == a)?;
        if cycle[(pa + 1) % len] == b {
            cycle.insert(pa + 1, v);
        } else if cycle[(pa + len - 1) % len] == b {
            cycle.insert(pa, v);
        } else {
            return None;
        }
    }
    // Verify: cycle edges are real and chords do not cross.
    let mut pos = vec![0; k];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    if !(0..k).all(|i| original[cycle[i]].contains(&cycle[(i + 1) % k])) {
        return None;
    }
    let chords: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[local[&u]], pos[local[&v]]);
            (a.min(b), a.max(b))
        })
        .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == k - 1))
        .collect();
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return None;
            }
        }
    }
    let faces = split_faces(k, &chords)
        .into_iter()
        .map(|f| f.into_iter().map(|p| verts[cycle[p]]).collect())
        .collect();
    Some(BlockEmbedding {
        cycle: cycle.into_iter().map(|v| verts[v]).collect(),
        faces,
    })
}

/// Splits the polygon `0..k` along non-crossing chords given as position
/// pairs; returns the resulting faces as position sequences.
fn split_faces(k: usize, chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let chord_set: BTreeSet<(usize, usize)> = chords.iter().copied().collect();
    let mut pending = vec![(0..k).collect::<Vec<_>>()];
    let mut faces = Vec::new();
    while let Some(face) = pending.pop() {
        let m = face.len();
        let split = (0..m).find_map(|i| {
            (i + 2..m).find_map(|j| {
                if i == 0 && j == m - 1 {
                    return None;
                }
                let (a, b) = (face[i].min(face[j]), face[i].max(face[j]));
                chord_set.contains(&(a, b)).then_some((i, j))
            })
        });
        match split {
            Some((i, j)) => {
                pending.push(face[i..=j].to_vec());
                let mut rest = face[j..].to_vec();
                rest.extend_from_slice(&face[..=i]);
                pending.push(rest);
            }
            None => faces.push(face),
        }
    }
    faces.sort();
    faces
}

/// Checks the structural invariants of an embedding against its graph.
pub fn check_embedding(g: &Graph, emb: &OuterEmbedding) -> Result<(), String> {
    let n = g.vertex_count();
    let mut on_outer = vec![false; n];
    for &v in &emb.outer_cycle {
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        on_outer[v] = true;
    }
    if n > 0 && !on_outer.iter().all(|&b| b) {
        return Err("some vertex is missing from the outer walk".into());
    }
    if g.is_biconnected() {
        let mut sorted = emb.outer_cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != emb.outer_cycle.len() {
            return Err("outer cycle repeats a vertex".into());
        }
    }
    let len = emb.outer_cycle.len();
    if len >= 2 {
        for i in 0..len {
            let (a, b) = (emb.outer_cycle[i], emb.outer_cycle[(i + 1) % len]);
            if !g.has_edge(a, b) {
                return Err(format!("outer walk step {a}-{b} is not an edge"));
            }
        }
    }
    let mut uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for face in &emb.inner_faces {
        if face.len() < 3 {
            return Err("inner face with fewer than three vertices".into());
        }
        let set: BTreeSet<_> = face.iter().collect();
        if set.len() != face.len() {
            return Err("inner face is not a simple cycle".into());
        }
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            if !g.has_edge(a, b) {
                return Err(format!("face step {a}-{b} is not an edge"));
            }
            *uses.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    if uses.values().any(|&c| c > 2) {
        return Err("an edge lies on more than two inner faces".into());
    }
    if n > 0 && emb.inner_faces.len() + n != g.edge_count() + 1 {
        return Err(format!(
            "Euler count fails: {} faces, {} vertices, {} edges",
            emb.inner_faces.len(),
            n,
            g.edge_count()
        ));
    }
    Ok(())
}

/// Weak dual of a biconnected outerplane graph, rooted at a leaf face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakDualTree {
    /// Face of each node as a vertex path `u = w_0, w_1, ..., w_k = v`,
    /// where `(u, v)` is the node's attachment edge.
    pub faces: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    /// Children of each node, in the order their attachment edges appear
    /// along the parent's face path.
    pub children: Vec<Vec<usize>>,
    pub root: usize,
}

impl WeakDualTree {
    pub fn node_count(&self) -> usize {
        self.faces.len()
    }

    pub fn attachment_edge(&self, node: usize) -> (usize, usize) {
        let f = &self.faces[node];
        (f[0], f[f.len() - 1])
    }

    /// Nodes ordered so that every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![(self.root, false)];
        while let Some((v, expanded)) = stack.pop() {
            if expanded {
                order.push(v);
            } else {
                stack.push((v, true));
                for &c in self.children[v].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Dual-tree neighbor count of every node.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.node_count())
            .map(|v| self.children[v].len() + usize::from(self.parent[v].is_some()))
            .collect()
    }

    /// True when the weak dual is a path.
    pub fn is_path(&self) -> bool {
        self.degrees().iter().all(|&d| d <= 2)
    }

    /// Vertices of the subgraph G(μ) spanned by the faces below `node`.
    pub fn subtree_vertices(&self, node: usize) -> Vec<usize> {
        let mut set = BTreeSet::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            set.extend(self.faces[x].iter().copied());
            stack.extend(self.children[x].iter().copied());
        }
        set.into_iter().collect()
    }

    /// Edges of G(μ): every face edge of every face below `node`.
    pub fn subtree_edges(&self, node: usize) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            let f = &self.faces[x];
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                set.insert((a.min(b), a.max(b)));
            }
            stack.extend(self.children[x].iter().copied());
        }
        set.into_iter().collect()
    }
}

/// Rotates/reverses a face cycle into a path from `u` to `v`, where `(u, v)`
/// is an edge of the face.
fn face_path(face: &[usize], u: usize, v: usize) -> Vec<usize> {
    let k = face.len();
    let pu = face.iter().position(|&x| x == u).expect("u on face");
    if face[(pu + k - 1) % k] == v {
        (0..k).map(|i| face[(pu + i) % k]).collect()
    } else {
        debug_assert_eq!(face[(pu + 1) % k], v);
        (0..k).map(|i| face[(pu + k - i) % k]).collect()
    }
}

/// Builds the weak dual of a biconnected outerplane graph and roots it at
/// its lowest-numbered leaf face.
pub fn weak_dual(g: &Graph, emb: &OuterEmbedding) -> Result<WeakDualTree, EmbeddingError> {
    if !g.is_biconnected() {
        return Err(EmbeddingError::NotBiconnected);
    }
    let faces = &emb.inner_faces;
    let f = faces.len();
    let mut edge_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, face) in faces.iter().enumerate() {
        for j in 0..face.len() {
            let (a, b) = (face[j], face[(j + 1) % face.len()]);
            edge_faces.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    let mut adj: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new(); f];
    for (&e, fs) in &edge_faces {
        if let [a, b] = fs[..] {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    let root = (0..f).find(|&i| adj[i].len() <= 1).expect("a finite tree has a leaf");
    let root_face = &faces[root];
    let (ru, rv) = (0..root_face.len())
        .map(|j| (root_face[j], root_face[(j + 1) % root_face.len()]))
        .find(|&(a, b)| edge_faces[&(a.min(b), a.max(b))].len() == 1)
        .expect("a leaf face has an outer edge");

    let mut paths = vec![Vec::new(); f];
    let mut parent = vec![None; f];
    let mut children = vec![Vec::new(); f];
    let mut seen = vec![false; f];
    paths[root] = face_path(root_face, ru, rv);
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        let path = paths[x].clone();
        for j in 0..path.len() - 1 {
            let (a, b) = (path[j], path[j + 1]);
            let key = (a.min(b), a.max(b));
            for &y in &edge_faces[&key] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    children[x].push(y);
                    paths[y] = face_path(&faces[y], a, b);
                    stack.push(y);
                }
            }
        }
    }
    Ok(WeakDualTree {
        faces: paths,
        parent,
        children,
        root,
    })
}

/// Result of [`biconnect_augment`]. Original vertices keep their ids; each
/// added path `a - x - y - b` appends two fresh vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    pub added_paths: Vec<[usize; 4]>,
}

impl Augmentation {
    pub fn original_vertex_count(&self) -> usize {
        self.vertex_map.len()
    }

    /// Extends a (2,2)-coloring of the original graph: each fresh vertex
    /// takes the color opposite to its original neighbor.
    pub fn extend_coloring(&self, c: &Coloring) -> Coloring {
        let mut colors = c.as_slice().to_vec();
        colors.resize(self.graph.vertex_count(), 0);
        for &[a, x, y, b] in &self.added_paths {
            colors[x] = 1 - colors[a].min(1);
            colors[y] = 1 - colors[b].min(1);
        }
        Coloring::new(colors)
    }

    pub fn restrict_coloring(&self, c: &Coloring) -> Coloring {
        c.truncated(self.original_vertex_count())
    }
}

/// Makes a connected outerplanar graph biconnected by joining, at some
/// cut vertex `c`, two neighbours `a`, `b` that are consecutive around `c`
/// on the outer face and lie in different blocks, through a new path
/// `a - x - y - b`. Repeats until no cut vertex remains.
pub fn biconnect_augment(g: &Graph) -> Result<Augmentation, EmbeddingError> {
    let n0 = g.vertex_count();
    let mut graph = g.clone();
    let mut added = Vec::new();
    loop {
        let emb = recognize_outerplanar(&graph)?.ok_or(EmbeddingError::NotOuterplanar)?;
        if graph.vertex_count() < 3 || graph.is_biconnected() {
            break;
        }
        let mut block_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, block) in graph.blocks().iter().enumerate() {
            for &e in block {
                block_of.insert(e, i);
            }
        }
        let key = |a: usize, b: usize| block_of[&(a.min(b), a.max(b))];
        let walk = &emb.outer_cycle;
        let len = walk.len();
        let (a, b) = (0..len)
            .find_map(|i| {
                let (p, c, s) = (walk[(i + len - 1) % len], walk[i], walk[(i + 1) % len]);
                (p != s && key(p, c) != key(c, s)).then_some((p, s))
            })
            .expect("a connected graph with a cut vertex has a corner between blocks");
        let x = graph.vertex_count();
        let y = x + 1;
        graph = graph
            .extended(2, [(a, x), (x, y), (y, b)])
            .expect("fresh vertices are in range");
        added.push([a, x, y, b]);
    }
    Ok(Augmentation {
        graph,
        vertex_map: (0..n0).collect(),
        added_paths: added,
    })
}
