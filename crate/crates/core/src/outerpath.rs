//! Constructive (2,2)-coloring of outerpaths.
//!
//! The input is first inner-triangulated so that its weak dual stays a
//! path. The triangles are then grouped by spine vertex: each spine vertex
//! `v_i` is the common vertex of a maximal run of consecutive triangles,
//! and its fan `f_i` is the path of its other neighbors in that run, ending
//! at `v_{i+1}`. The fans are colored one at a time by a six-state machine
//! whose states describe the colors and star roles of `v_{i-1}` and `v_i`
//! in the colored prefix.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coloring::{role_of, Coloring, DiameterBound, Role};
use crate::embedding::{recognize_outerplanar, weak_dual, EmbeddingError};
use crate::exact::{decide, SolveBudget};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OuterpathError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("weak dual is not a path")]
    NotOuterpath,
    #[error("an inner face is not a triangle")]
    NotTriangulated,
    #[error("no vertex has degree four or more")]
    NoSpine,
}

/// Spine vertices `v_1, ..., v_{m+1}` and their fans `f_1, ..., f_{m+1}`.
///
/// `fans[i]` ends with `spine[i + 1]` for every `i < m`, and the last fan is
/// empty. The first fan also contains the tip of the first triangle, so
/// that `{v_1}` together with all fans covers every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineDecomposition {
    pub spine: Vec<usize>,
    pub fans: Vec<Vec<usize>>,
}

impl SpineDecomposition {
    /// Number of spine vertices with a non-empty fan.
    pub fn m(&self) -> usize {
        self.spine.len() - 1
    }

    /// `|f_i|` for 1-based `i`; zero past the end.
    pub fn fan_len(&self, i: usize) -> usize {
        self.fans.get(i - 1).map_or(0, Vec::len)
    }

    /// Vertices of G_i (1-based): `v_1` and the fans `f_1, ..., f_{i-1}`.
    pub fn prefix_vertices(&self, i: usize) -> Vec<usize> {
        let mut out = vec![self.spine[0]];
        for fan in &self.fans[..i - 1] {
            out.extend_from_slice(fan);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MachineState {
    Q0,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
}

impl MachineState {
    pub const ALL: [MachineState; 6] = [
        MachineState::Q0,
        MachineState::Q1,
        MachineState::Q2,
        MachineState::Q3,
        MachineState::Q4,
        MachineState::Q5,
    ];
}

impl fmt::Display for MachineState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = MachineState::ALL.iter().position(|s| s == self).unwrap();
        write!(f, "Q{i}")
    }
}

/// Inner faces in dual-path order, as cyclic vertex sequences.
fn dual_path_faces(g: &Graph) -> Result<Vec<Vec<usize>>, OuterpathError> {
    let emb = recognize_outerplanar(g)?.ok_or(EmbeddingError::NotOuterplanar)?;
    let tree = weak_dual(g, &emb)?;
    if !tree.is_path() {
        return Err(OuterpathError::NotOuterpath);
    }
    let mut order = vec![tree.root];
    while let Some(&c) = tree.children[*order.last().unwrap()].first() {
        order.push(c);
    }
    Ok(order.into_iter().map(|x| tree.faces[x].clone()).collect())
}

fn cycle_edges(face: &[usize]) -> BTreeSet<(usize, usize)> {
    (0..face.len())
        .map(|i| {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

fn common_edge(f: &[usize], h: &[usize]) -> (usize, usize) {
    let hs = cycle_edges(h);
    *cycle_edges(f)
        .intersection(&hs)
        .next()
        .expect("consecutive dual nodes share an edge")
}

/// Rotates a face cycle so that it starts at `a` and ends at `b`.
fn rotate_between(face: &[usize], a: usize, b: usize) -> Vec<usize> {
    let k = face.len();
    let pa = face.iter().position(|&x| x == a).unwrap();
    if face[(pa + k - 1) % k] == b {
        (0..k).map(|i| face[(pa + i) % k]).collect()
    } else {
        (0..k).map(|i| face[(pa + k - i) % k]).collect()
    }
}

fn fan_chords(seq: &[usize], out: &mut Vec<(usize, usize)>) {
    for &x in &seq[2..seq.len() - 1] {
        out.push((seq[0], x));
    }
}

/// Inner-triangulates a biconnected outerpath so that the weak dual is
/// still a path. End faces are fanned from an endpoint of their single
/// shared edge; a middle face is cut into a strip of triangles running from
/// the edge it shares with its predecessor to the edge it shares with its
/// successor.
pub fn triangulate_outerpath(g: &Graph) -> Result<Graph, OuterpathError> {
    let faces = dual_path_faces(g)?;
    let t = faces.len();
    let mut chords = Vec::new();
    for (j, face) in faces.iter().enumerate() {
        if face.len() == 3 {
            continue;
        }
        let e_in = (j > 0).then(|| common_edge(face, &faces[j - 1]));
        let e_out = (j + 1 < t).then(|| common_edge(face, &faces[j + 1]));
        match (e_in, e_out) {
            (None, None) => {
                let seq = face.clone();
                fan_chords(&seq, &mut chords);
            }
            (Some((a, b)), None) | (None, Some((a, b))) => {
                fan_chords(&rotate_between(face, a, b), &mut chords);
            }
            (Some((a, b)), Some((c, d))) => {
                let seq = rotate_between(face, a, b);
                let x = seq
                    .windows(2)
                    .position(|w| (w[0] == c && w[1] == d) || (w[0] == d && w[1] == c))
                    .unwrap();
                let left = &seq[..=x];
                let right: Vec<usize> = seq[x + 1..].iter().rev().copied().collect();
                let (p, q) = (left.len() - 1, right.len() - 1);
                chords.extend(right[1..=q].iter().map(|&r| (left[0], r)));
                chords.extend(left[1..=p].iter().map(|&l| (l, right[q])));
            }
        }
    }
    Ok(g.extended(0, chords).expect("chords join existing vertices"))
}

/// Spine decomposition of an inner-triangulated biconnected outerpath.
pub fn spine_decompose(g: &Graph) -> Result<SpineDecomposition, OuterpathError> {
    let faces = dual_path_faces(g)?;
    if faces.iter().any(|f| f.len() != 3) {
        return Err(OuterpathError::NotTriangulated);
    }
    if g.max_degree() < 4 {
        return Err(OuterpathError::NoSpine);
    }
    let t = faces.len();
    debug_assert!(t >= 3);
    let chords: Vec<(usize, usize)> = (0..t - 1).map(|i| common_edge(&faces[i], &faces[i + 1])).collect();
    let shared = |e: (usize, usize), f: (usize, usize)| -> usize {
        if e.0 == f.0 || e.0 == f.1 {
            e.0
        } else {
            e.1
        }
    };
    // pivot[i] is the spine vertex owning triangle i
    let mut pivot = vec![0; t];
    for i in 1..t - 1 {
        pivot[i] = shared(chords[i - 1], chords[i]);
    }
    pivot[0] = pivot[1];
    pivot[t - 1] = pivot[t - 2];

    let e1 = chords[0];
    let tip = *faces[0].iter().find(|&&x| x != e1.0 && x != e1.1).unwrap();
    let mut spine = Vec::new();
    let mut fans = Vec::new();
    let mut i = 0;
    while i < t {
        let v = pivot[i];
        let start = i;
        while i < t && pivot[i] == v {
            i += 1;
        }
        let first = spine.is_empty();
        let mut y = if first { tip } else { *spine.last().unwrap() };
        let mut fan = if first { vec![tip] } else { Vec::new() };
        for face in &faces[start..i] {
            let next = *face.iter().find(|&&x| x != v && x != y).unwrap();
            fan.push(next);
            y = next;
        }
        spine.push(v);
        fans.push(fan);
    }
    spine.push(*fans.last().unwrap().last().unwrap());
    fans.push(Vec::new());
    Ok(SpineDecomposition { spine, fans })
}

/// One step of the machine: coloring fan `f_i` moves the state from
/// `before` (a property of G_i) to `after` (a property of G_{i+1}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub i: usize,
    pub before: MachineState,
    pub fan_len: usize,
    pub next_fan_len: usize,
    pub after: MachineState,
}

/// Everything needed to replay and check a run of the machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterpathTrace {
    /// The triangulated graph the machine ran on.
    pub graph: Graph,
    /// `None` when the small-graph fallback was used.
    pub decomposition: Option<SpineDecomposition>,
    pub steps: Vec<TraceStep>,
}

enum Fill {
    /// Alternate along the fan, ending at `v_{i+1}` with the same color as
    /// `v_i` or the opposite one.
    Alternate { equal: bool },
    /// `v_{i+1}` and its fan predecessor both take the color opposite to
    /// `v_i`; the rest alternates.
    PairedEnd,
}

fn transition(state: MachineState, s: usize, t: usize) -> (Fill, MachineState) {
    use MachineState::*;
    let even_table = |t: usize| match t {
        0 => (Fill::Alternate { equal: true }, Q2),
        1 => (Fill::Alternate { equal: true }, Q5),
        _ => (Fill::PairedEnd, Q4),
    };
    match state {
        Q0 => (Fill::Alternate { equal: false }, Q1),
        Q1 if s == 1 => (Fill::Alternate { equal: true }, Q2),
        Q1 => (Fill::Alternate { equal: false }, Q1),
        Q2 if !s.is_multiple_of(2) => (Fill::Alternate { equal: false }, Q1),
        Q2 => even_table(t),
        Q3 if s == 1 => (Fill::Alternate { equal: true }, Q2),
        Q3 if s.is_multiple_of(2) => (Fill::Alternate { equal: false }, Q1),
        Q3 => even_table(t),
        Q4 => (Fill::Alternate { equal: false }, Q1),
        Q5 => (Fill::Alternate { equal: false }, Q3),
    }
}

fn run_machine(dec: &SpineDecomposition, n: usize) -> (Coloring, Vec<TraceStep>) {
    let mut colors = vec![0u32; n];
    colors[dec.spine[0]] = 0;
    let mut state = MachineState::Q0;
    let mut steps = Vec::with_capacity(dec.m());
    for i in 1..=dec.m() {
        let fan = &dec.fans[i - 1];
        let (s, t) = (fan.len(), dec.fan_len(i + 1));
        let c = colors[dec.spine[i - 1]];
        let (fill, next) = transition(state, s, t);
        let mut cur = match fill {
            Fill::Alternate { equal: true } => c,
            _ => 1 - c,
        };
        let mut stay = matches!(fill, Fill::PairedEnd);
        for &x in fan.iter().rev() {
            colors[x] = cur;
            if stay {
                stay = false;
            } else {
                cur = 1 - cur;
            }
        }
        steps.push(TraceStep {
            i,
            before: state,
            fan_len: s,
            next_fan_len: t,
            after: next,
        });
        state = next;
    }
    (Coloring::new(colors), steps)
}

/// Whether the condition `state` holds for G_i under `c` (only the colors
/// of G_i's vertices are read). `i` is 1-based; `k` is `m + 1`.
pub fn state_predicate(state: MachineState, g: &Graph, dec: &SpineDecomposition, c: &Coloring, i: usize) -> bool {
    use MachineState::*;
    if state == Q0 {
        return i == 1;
    }
    if i < 2 || i > dec.spine.len() {
        return false;
    }
    let verts = dec.prefix_vertices(i);
    let h = g.induced_subgraph(&verts);
    let local = Coloring::new(verts.iter().map(|&v| c.color(v)).collect());
    let pos = |v: usize| verts.iter().position(|&x| x == v).expect("spine vertex lies in G_i");
    let (a, b) = (pos(dec.spine[i - 2]), pos(dec.spine[i - 1]));
    let (Ok(ra), Ok(rb)) = (role_of(&h, &local, a, b), role_of(&h, &local, b, a)) else {
        return false;
    };
    let equal = local.color(a) == local.color(b);
    let k = dec.spine.len();
    match state {
        Q0 => unreachable!(),
        Q1 => !equal && ra == Role::Center && rb == Role::Isolated,
        Q2 => equal && ra == Role::Undefined && rb == Role::Undefined,
        Q3 => !equal && ra == Role::Leaf && rb == Role::Isolated,
        Q4 => !equal && ra == Role::Center && rb == Role::Center && i < k && dec.fan_len(i) > 1,
        Q5 => {
            equal
                && ra == Role::Center
                && local.same_degree(&h, a) >= 2
                && rb == Role::Leaf
                && i < k
                && dec.fan_len(i) == 1
        }
    }
}

/// A (2,2)-coloring of an outerpath, with the machine trace.
pub fn color_outerpath_traced(g: &Graph) -> Result<(Coloring, OuterpathTrace), OuterpathError> {
    let fallback = |h: &Graph| -> Coloring {
        match decide(h, 2, DiameterBound::Two, SolveBudget::default()) {
            Ok(out) => out
                .certificate()
                .cloned()
                .expect("graphs this small are (2,2)-colorable"),
            Err(e) => unreachable!("{e}"),
        }
    };
    if g.vertex_count() <= 3 {
        let trace = OuterpathTrace {
            graph: g.clone(),
            decomposition: None,
            steps: Vec::new(),
        };
        return Ok((fallback(g), trace));
    }
    let tri = triangulate_outerpath(g)?;
    match spine_decompose(&tri) {
        Ok(dec) => {
            let (c, steps) = run_machine(&dec, tri.vertex_count());
            let trace = OuterpathTrace {
                graph: tri,
                decomposition: Some(dec),
                steps,
            };
            Ok((c, trace))
        }
        Err(OuterpathError::NoSpine) => {
            let c = fallback(&tri);
            let trace = OuterpathTrace {
                graph: tri,
                decomposition: None,
                steps: Vec::new(),
            };
            Ok((c, trace))
        }
        Err(e) => Err(e),
    }
}

/// A (2,2)-coloring of a biconnected outerpath (or any graph on at most
/// three vertices).
pub fn color_outerpath(g: &Graph) -> Result<Coloring, OuterpathError> {
    color_outerpath_traced(g).map(|(c, _)| c)
}
