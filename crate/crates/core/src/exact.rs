//! Exhaustive backtracking search for (κ,λ)-colorings of small graphs.
//!
//! Every violation of the (κ,λ) condition is monotone under extending a
//! partial coloring: same-colored degrees only grow. A monochromatic
//! component is a star exactly when every monochromatic edge has an endpoint
//! of same-colored degree one, so the search rejects an assignment as soon as
//! some monochromatic edge has both endpoints at degree two or more (λ=2),
//! some vertex reaches degree two (λ=1), or any monochromatic edge appears
//! (λ=0).

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{Coloring, DiameterBound};
use crate::graph::Graph;

/// Largest κ^n that [`enumerate_colorings`] accepts.
pub const ENUMERATION_LIMIT: f64 = 1e7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("kappa must be at least 1")]
    ZeroColors,
    #[error("refusing to enumerate {kappa}^{n} colorings (limit 1e7)")]
    TooLarge { kappa: u32, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    /// Maximum number of search-tree nodes (successful tentative assignments).
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            node_limit: 10_000_000,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Colorable(Coloring),
    Uncolorable,
    /// The budget ran out before the search finished.
    Unknown,
}

impl SolveOutcome {
    pub fn is_colorable(&self) -> bool {
        matches!(self, SolveOutcome::Colorable(_))
    }

    pub fn certificate(&self) -> Option<&Coloring> {
        match self {
            SolveOutcome::Colorable(c) => Some(c),
            _ => None,
        }
    }
}

const NONE: u32 = u32::MAX;

/// Partial coloring with incrementally maintained same-colored degrees.
struct Partial<'g> {
    g: &'g Graph,
    lambda: DiameterBound,
    color: Vec<u32>,
    same: Vec<u32>,
    /// Number of vertices holding each color.
    count: Vec<usize>,
}

impl<'g> Partial<'g> {
    fn new(g: &'g Graph, lambda: DiameterBound) -> Self {
        let n = g.vertex_count();
        Partial {
            g,
            lambda,
            color: vec![NONE; n],
            same: vec![0; n],
            count: Vec::new(),
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.color[v] = c;
        if self.count.len() <= c as usize {
            self.count.resize(c as usize + 1, 0);
        }
        self.count[c as usize] += 1;
        for &w in self.g.neighbors(v) {
            if self.color[w] == c {
                self.same[w] += 1;
                self.same[v] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for &w in self.g.neighbors(v) {
            if self.color[w] == c {
                self.same[w] -= 1;
            }
        }
        self.same[v] = 0;
        self.count[c as usize] -= 1;
        self.color[v] = NONE;
    }

    /// One more than the largest color in use.
    fn used(&self) -> u32 {
        self.count.iter().rposition(|&k| k > 0).map_or(0, |c| c as u32 + 1)
    }

    /// Splits the uncolored vertices `open` into groups whose completions
    /// cannot affect each other. Every constraint is a bound on the
    /// same-colored degrees of the two ends of an edge, so two uncolored
    /// vertices interact only through an uncolored path, a shared colored
    /// neighbor, or colored neighbors joined by a monochromatic edge.
    fn independent_groups(&self, open: &[usize]) -> Vec<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        fn union(p: &mut [usize], a: usize, b: usize) {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        }
        for &v in open {
            for &w in self.g.neighbors(v) {
                union(&mut parent, v, w);
                if self.color[w] != NONE {
                    for &x in self.g.neighbors(w) {
                        if self.color[x] == self.color[w] {
                            union(&mut parent, w, x);
                        }
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for &v in open {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index[r]].push(v);
        }
        groups
    }

    fn edge_ok(&self, a: usize, b: usize) -> bool {
        self.same[a] < 2 || self.same[b] < 2
    }

    /// Checks the constraints touched by the most recent assignment of `v`.
    fn locally_valid(&self, v: usize) -> bool {
        let c = self.color[v];
        match self.lambda {
            DiameterBound::Zero => self.same[v] == 0,
            DiameterBound::One => {
                self.same[v] <= 1
                    && self
                        .g
                        .neighbors(v)
                        .iter()
                        .all(|&w| self.color[w] != c || self.same[w] <= 1)
            }
            DiameterBound::Two => self.g.neighbors(v).iter().filter(|&&w| self.color[w] == c).all(|&w| {
                self.edge_ok(v, w)
                    && self
                        .g
                        .neighbors(w)
                        .iter()
                        .all(|&x| x == v || self.color[x] != c || self.edge_ok(w, x))
            }),
        }
    }

    fn try_assign(&mut self, v: usize, c: u32) -> bool {
        self.assign(v, c);
        if self.locally_valid(v) {
            true
        } else {
            self.unassign(v);
            false
        }
    }

    /// Number of colors in `0..limit` that `v` could take without an
    /// immediate violation.
    fn domain_size(&mut self, v: usize, limit: u32) -> u32 {
        let mut count = 0;
        for c in 0..limit {
            if self.try_assign(v, c) {
                self.unassign(v);
                count += 1;
            }
        }
        count
    }
}

/// Decides whether `g` has a (κ,λ)-coloring.
///
/// The search is deterministic: the next vertex is the uncolored one with
/// the fewest locally consistent colors (ties broken by higher degree, then
/// lower id), colors are tried in ascending order, and a vertex may only open
/// the next unused color, which pins the first vertex to color 0. When the
/// uncolored vertices fall into groups that cannot interact, the groups are
/// solved one after another and a failing group fails the whole node.
pub fn decide(g: &Graph, kappa: u32, lambda: DiameterBound, budget: SolveBudget) -> Result<SolveOutcome, SolveError> {
    if kappa == 0 {
        return Err(SolveError::ZeroColors);
    }
    let mut search = Search {
        partial: Partial::new(g, lambda),
        kappa,
        nodes: 0,
        budget,
        started: Instant::now(),
        exhausted: false,
    };
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let found = search.run(&all);
    Ok(if found {
        SolveOutcome::Colorable(Coloring::new(search.partial.color.clone()))
    } else if search.exhausted {
        SolveOutcome::Unknown
    } else {
        SolveOutcome::Uncolorable
    })
}

struct Search<'g> {
    partial: Partial<'g>,
    kappa: u32,
    nodes: u64,
    budget: SolveBudget,
    started: Instant,
    exhausted: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.node_limit {
            self.exhausted = true;
        } else if let Some(limit) = self.budget.time_limit {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() > limit {
                self.exhausted = true;
            }
        }
        self.exhausted
    }

    /// Colors every uncolored vertex of `scope`, or returns false with the
    /// partial coloring unchanged. `scope` is closed under uncolored
    /// neighbors.
    fn run(&mut self, scope: &[usize]) -> bool {
        let g = self.partial.g;
        let open: Vec<usize> = scope
            .iter()
            .copied()
            .filter(|&v| self.partial.color[v] == NONE)
            .collect();
        if open.is_empty() {
            return true;
        }
        let limit = self.kappa.min(self.partial.used() + 1);
        let mut best: Option<(u32, usize)> = None;
        for &v in &open {
            let d = self.partial.domain_size(v, limit);
            if d == 0 {
                return false;
            }
            let better = match best {
                None => true,
                Some((bd, bv)) => d < bd || (d == bd && g.degree(v) > g.degree(bv)),
            };
            if better {
                best = Some((d, v));
            }
        }
        let groups = self.partial.independent_groups(&open);
        if groups.len() > 1 {
            let mut done: Vec<usize> = Vec::new();
            for group in &groups {
                if !self.run(group) {
                    for &v in &done {
                        self.partial.unassign(v);
                    }
                    return false;
                }
                done.extend_from_slice(group);
            }
            return true;
        }
        let (_, v) = best.expect("an uncolored vertex exists");
        for c in 0..limit {
            if self.out_of_budget() {
                return false;
            }
            if !self.partial.try_assign(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.run(&open) {
                return true;
            }
            self.partial.unassign(v);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Every (κ,λ)-coloring of `g`, in lexicographic order of the color vector.
pub fn enumerate_colorings(g: &Graph, kappa: u32, lambda: DiameterBound) -> Result<Vec<Coloring>, SolveError> {
    if kappa == 0 {
        return Err(SolveError::ZeroColors);
    }
    let n = g.vertex_count();
    if (kappa as f64).powi(n as i32) > ENUMERATION_LIMIT {
        return Err(SolveError::TooLarge { kappa, n });
    }
    let mut partial = Partial::new(g, lambda);
    let mut out = Vec::new();
    enumerate_rec(&mut partial, kappa, 0, &mut out);
    Ok(out)
}

fn enumerate_rec(p: &mut Partial<'_>, kappa: u32, v: usize, out: &mut Vec<Coloring>) {
    if v == p.g.vertex_count() {
        out.push(Coloring::new(p.color.clone()));
        return;
    }
    for c in 0..kappa {
        if p.try_assign(v, c) {
            enumerate_rec(p, kappa, v + 1, out);
            p.unassign(v);
        }
    }
}
