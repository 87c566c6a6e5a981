//! Undirected simple graphs over dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::OutOfRange { u, v, n: vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: set.len(),
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are in range")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns a new graph with `extra` fresh vertices appended and the given
    /// edges added.
    pub fn extended<I>(&self, extra: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.vertex_count() + extra, self.edges().chain(edges))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (local[w] != usize::MAX && local[w] > i).then_some((i, local[w])))
        });
        Graph::new(vertices.len(), edges.collect::<Vec<_>>()).expect("induced edges are in range")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    /// Edge sets of the biconnected components (blocks). Bridges form
    /// single-edge blocks. Isolated vertices belong to no block.
    pub fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.vertex_count();
        let mut state = BlockSearch {
            g: self,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for s in 0..n {
            if state.disc[s] == usize::MAX {
                state.visit(s, usize::MAX);
            }
        }
        let mut blocks = state.blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        blocks
    }

    /// Vertices whose removal disconnects their component.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.vertex_count()];
        for block in self.blocks() {
            let verts: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
            for v in verts {
                count[v] += 1;
            }
        }
        (0..self.vertex_count()).filter(|&v| count[v] > 1).collect()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.blocks().len() == 1
    }

    /// Edge-list text: a header line `n m` followed by one `u v` line per
    /// edge, in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(s, "{u} {v}").unwrap();
        }
        s
    }

    /// Parses the edge-list format. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: hline,
                msg: format!("header declares {m} edges but {} were given", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let bad = |msg: String| GraphError::Parse { line, msg };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| bad(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(bad("trailing tokens".into()));
    }
    Ok((a, b))
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for &w in self.g.neighbors(v) {
            if w == parent {
                continue;
            }
            if self.disc[w] == usize::MAX {
                self.stack.push((v.min(w), v.max(w)));
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let key = (v.min(w), v.max(w));
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == key {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push((v.min(w), v.max(w)));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}
