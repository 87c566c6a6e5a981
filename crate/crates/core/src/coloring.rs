//! Vertex colorings, (κ,λ)-validity and the endpoint roles used by the
//! outerplanar dynamic program.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("diameter bound {0} is not supported (expected 0, 1 or 2)")]
    UnsupportedDiameter(u32),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("the monochromatic component of vertex {0} is not a star")]
    NotAStar(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Upper bound λ on the diameter of monochromatic components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiameterBound {
    /// Proper coloring: every component is a single vertex.
    Zero,
    /// Components are single vertices or edges.
    One,
    /// Components are stars.
    Two,
}

impl DiameterBound {
    pub fn value(self) -> u32 {
        match self {
            DiameterBound::Zero => 0,
            DiameterBound::One => 1,
            DiameterBound::Two => 2,
        }
    }
}

impl TryFrom<u32> for DiameterBound {
    type Error = ColoringError;

    fn try_from(v: u32) -> Result<Self, Self::Error> {
        match v {
            0 => Ok(DiameterBound::Zero),
            1 => Ok(DiameterBound::One),
            2 => Ok(DiameterBound::Two),
            other => Err(ColoringError::UnsupportedDiameter(other)),
        }
    }
}

impl fmt::Display for DiameterBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A total map from vertices to color ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn uniform(n: usize, color: u32) -> Self {
        Coloring { colors: vec![color; n] }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: u32) {
        self.colors[v] = color;
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Restriction to the first `n` vertices.
    pub fn truncated(&self, n: usize) -> Coloring {
        Coloring::new(self.colors[..n].to_vec())
    }

    /// Number of neighbors of `v` sharing its color.
    pub fn same_degree(&self, g: &Graph, v: usize) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.colors[w] == self.colors[v])
            .count()
    }

    /// Text format: one `vertex color` line per vertex, in vertex order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            writeln!(s, "{v} {c}").unwrap();
        }
        s
    }

    /// Parses the text format. Lines may come in any order but every vertex
    /// `0..n` must appear exactly once.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| ColoringError::Parse { line: i + 1, msg };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(bad("expected `vertex color`".into()));
            }
            let v: usize = toks[0].parse().map_err(|_| bad(format!("bad vertex {:?}", toks[0])))?;
            let c: u32 = toks[1].parse().map_err(|_| bad(format!("bad color {:?}", toks[1])))?;
            pairs.push((i + 1, v, c));
        }
        let n = pairs.len();
        let mut colors = vec![None; n];
        for (line, v, c) in pairs {
            if v >= n || colors[v].is_some() {
                return Err(ColoringError::Parse {
                    line,
                    msg: format!("vertex {v} is duplicated or out of range 0..{n}"),
                });
            }
            colors[v] = Some(c);
        }
        Ok(Coloring::new(colors.into_iter().map(|c| c.unwrap()).collect()))
    }
}

/// Why a coloring fails to be a (κ,λ)-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ColorOutOfRange {
        vertex: usize,
        color: u32,
    },
    /// Vertices of a monochromatic cycle, in cycle order.
    MonochromaticCycle(Vec<usize>),
    /// A monochromatic shortest path with λ+2 vertices, i.e. of length λ+1.
    LongPath(Vec<usize>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> ");
        match self {
            Violation::ColorOutOfRange { vertex, color } => {
                write!(f, "vertex {vertex} has color {color}, outside the palette")
            }
            Violation::MonochromaticCycle(c) => write!(f, "monochromatic cycle {}", join(c)),
            Violation::LongPath(p) => write!(f, "monochromatic path {}", join(p)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

/// A connected component of one color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub color: u32,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Connected components of the monochromatic subgraphs, ordered by their
/// smallest vertex.
pub fn monochromatic_components(g: &Graph, c: &Coloring) -> Result<Vec<Component>, ColoringError> {
    check_len(g, c)?;
    let n = g.vertex_count();
    let mut comp_of = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp_of[s] = id;
        let mut vertices = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if c.color(w) == c.color(v) && comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    vertices.push(w);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        let edges = g
            .edges()
            .filter(|&(u, v)| comp_of[u] == id && comp_of[v] == id)
            .collect();
        out.push(Component {
            color: c.color(s),
            vertices,
            edges,
        });
    }
    Ok(out)
}

/// Checks whether `c` is a (κ,λ)-coloring of `g`: every color is below κ and
/// every monochromatic component is a tree of diameter at most λ.
pub fn validate(g: &Graph, c: &Coloring, kappa: u32, lambda: DiameterBound) -> Result<Verdict, ColoringError> {
    check_len(g, c)?;
    if let Some(v) = (0..g.vertex_count()).find(|&v| c.color(v) >= kappa) {
        return Ok(Verdict::Invalid(Violation::ColorOutOfRange {
            vertex: v,
            color: c.color(v),
        }));
    }
    for comp in monochromatic_components(g, c)? {
        if comp.edges.len() >= comp.vertices.len() {
            return Ok(Verdict::Invalid(Violation::MonochromaticCycle(find_cycle(
                g,
                c,
                comp.vertices[0],
            ))));
        }
        let far = bfs_same(g, c, comp.vertices[0]);
        let a = *far.last().unwrap();
        let path = bfs_path_to_farthest(g, c, a);
        if path.len() as u32 > lambda.value() + 1 {
            let need = lambda.value() as usize + 2;
            return Ok(Verdict::Invalid(Violation::LongPath(path[..need].to_vec())));
        }
    }
    Ok(Verdict::Valid)
}

fn check_len(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    Ok(())
}

/// BFS order within the monochromatic component of `s`.
fn bfs_same(g: &Graph, c: &Coloring, s: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = vec![s];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] && c.color(w) == c.color(v) {
                seen[w] = true;
                order.push(w);
                q.push_back(w);
            }
        }
    }
    order
}

/// Shortest monochromatic path from `s` to a farthest vertex of its component.
fn bfs_path_to_farthest(g: &Graph, c: &Coloring, s: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[s] = s;
    let mut last = s;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        last = v;
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX && c.color(w) == c.color(v) {
                parent[w] = v;
                q.push_back(w);
            }
        }
    }
    let mut path = vec![last];
    while *path.last().unwrap() != s {
        let p = parent[*path.last().unwrap()];
        path.push(p);
    }
    path.reverse();
    path
}

fn find_cycle(g: &Graph, c: &Coloring, s: usize) -> Vec<usize> {
    // Iterative DFS over the monochromatic component; the first back edge
    // closes a cycle along the tree path.
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[s] = 0;
    parent[s] = s;
    let mut stack = vec![(s, 0usize)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < g.neighbors(v).len() {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if c.color(w) != c.color(v) || w == parent[v] {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("component with at least as many edges as vertices has a cycle")
}

/// Role of an attachment-edge endpoint within a (κ,2)-colored subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Center,
    Leaf,
    Isolated,
    /// The endpoint and its partner form an isolated monochromatic edge.
    Undefined,
}

impl Role {
    pub const ALL: [Role; 4] = [Role::Center, Role::Leaf, Role::Isolated, Role::Undefined];
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Role::Center => "center",
            Role::Leaf => "leaf",
            Role::Isolated => "isolated",
            Role::Undefined => "undefined",
        };
        f.write_str(s)
    }
}

/// Classifies `v` relative to its attachment partner.
///
/// A monochromatic edge whose endpoints have no other same-colored
/// neighbor makes both endpoints `Undefined` when the edge is `(v, partner)`;
/// any other such edge makes `v` a `Center`. A vertex whose only
/// same-colored neighbor has further same-colored neighbors is a `Leaf`,
/// even when that neighbor is the partner.
pub fn role_of(g: &Graph, c: &Coloring, v: usize, partner: usize) -> Result<Role, ColoringError> {
    check_len(g, c)?;
    if !g.has_edge(v, partner) {
        return Err(ColoringError::NotAnEdge(v, partner));
    }
    let same: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| c.color(w) == c.color(v))
        .collect();
    match same.as_slice() {
        [] => Ok(Role::Isolated),
        &[w] => {
            let dw = c.same_degree(g, w);
            if dw >= 2 {
                if g.neighbors(w)
                    .iter()
                    .any(|&x| x != v && c.color(x) == c.color(w) && c.same_degree(g, x) != 1)
                {
                    return Err(ColoringError::NotAStar(v));
                }
                Ok(Role::Leaf)
            } else if w == partner {
                Ok(Role::Undefined)
            } else {
                Ok(Role::Center)
            }
        }
        many => {
            if many.iter().any(|&w| c.same_degree(g, w) != 1) {
                return Err(ColoringError::NotAStar(v));
            }
            Ok(Role::Center)
        }
    }
}
