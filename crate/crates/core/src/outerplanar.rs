//! Deciding (2,2)-colorability of outerplanar graphs.
//!
//! For a node μ of the rooted weak dual with attachment edge `(u, v)`, let
//! G(μ) be the subgraph formed by the faces in the subtree of μ. A coloring
//! of G(μ) is summarised by its equivalence class: the colors of `u` and `v`
//! together with their roles ([`Role`]) relative to each other. Class sets
//! are propagated from the leaves of the dual to the root; the graph is
//! colorable exactly when the root's set is non-empty.
//!
//! The face of μ is the vertex path `u = w_0, ..., w_k = v`. Each face edge
//! `(w_j, w_{j+1})` carries a piece: either the subgraph of the child
//! attached there or the bare edge. A walk over the face glues the pieces
//! left to right, keeping just enough information per junction vertex to
//! check that every monochromatic edge keeps an endpoint of same-colored
//! degree one (which is equivalent to all monochromatic components being
//! stars).

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::coloring::{Coloring, Role};
use crate::embedding::{biconnect_augment, recognize_outerplanar, weak_dual, EmbeddingError, WeakDualTree};
use crate::graph::Graph;

/// Colors and roles of the attachment-edge endpoints of a colored G(μ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquivalenceClass {
    pub color_u: u32,
    pub role_u: Role,
    pub color_v: u32,
    pub role_v: Role,
}

impl EquivalenceClass {
    pub fn new(color_u: u32, role_u: Role, color_v: u32, role_v: Role) -> Self {
        EquivalenceClass {
            color_u,
            role_u,
            color_v,
            role_v,
        }
    }

    /// Whether some (2,2)-colored graph containing the edge `(u, v)` can
    /// produce this class.
    pub fn is_valid(&self) -> bool {
        use Role::*;
        if self.color_u > 1 || self.color_v > 1 {
            return false;
        }
        if self.color_u == self.color_v {
            matches!(
                (self.role_u, self.role_v),
                (Undefined, Undefined) | (Center, Leaf) | (Leaf, Center)
            )
        } else {
            self.role_u != Undefined && self.role_v != Undefined
        }
    }

    /// The same class seen from the other end of the edge.
    pub fn reversed(&self) -> Self {
        EquivalenceClass::new(self.color_v, self.role_v, self.color_u, self.role_u)
    }
}

pub type ClassSet = BTreeSet<EquivalenceClass>;

/// All valid equivalence classes.
pub fn enumerate_classes() -> ClassSet {
    let mut out = ClassSet::new();
    for cu in 0..2 {
        for cv in 0..2 {
            for ru in Role::ALL {
                for rv in Role::ALL {
                    let c = EquivalenceClass::new(cu, ru, cv, rv);
                    if c.is_valid() {
                        out.insert(c);
                    }
                }
            }
        }
    }
    out
}

/// Classes of a face edge that carries no child.
fn bare_edge_classes() -> ClassSet {
    let mut out = ClassSet::new();
    for c in 0..2 {
        out.insert(EquivalenceClass::new(c, Role::Undefined, c, Role::Undefined));
        out.insert(EquivalenceClass::new(c, Role::Isolated, 1 - c, Role::Isolated));
    }
    out
}

/// Same-colored degree bucket contributed by a piece: a center may have
/// more than one same-colored neighbor, but every check below only needs
/// to know whether the total reaches two when the other side is nonzero.
fn degree(r: Role) -> u8 {
    match r {
        Role::Isolated => 0,
        Role::Leaf | Role::Undefined | Role::Center => 1,
    }
}

/// `2` stands for "two or more".
type Total = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct WalkState {
    u_color: u32,
    u_role: Role,
    /// Total same-colored degree of `w_1`, needed when `u` and `w_1` are
    /// an isolated edge inside the first piece.
    u_next_total: Total,
    color: u32,
    /// Role of the current vertex in the piece to its left.
    left_role: Role,
    /// Total same-colored degree of the previous junction vertex.
    prev_total: Total,
}

/// For every achievable class, the piece classes that witness it.
type Witnesses = BTreeMap<EquivalenceClass, Vec<EquivalenceClass>>;

fn walk(pieces: &[&ClassSet]) -> Witnesses {
    let k = pieces.len();
    let mut layers: Vec<BTreeMap<WalkState, (Option<WalkState>, EquivalenceClass)>> = Vec::with_capacity(k);
    let mut first = BTreeMap::new();
    for &b in pieces[0] {
        let s = WalkState {
            u_color: b.color_u,
            u_role: b.role_u,
            u_next_total: 0,
            color: b.color_v,
            left_role: b.role_v,
            prev_total: 0,
        };
        first.entry(s).or_insert((None, b));
    }
    layers.push(first);
    for (j, piece) in pieces.iter().enumerate().skip(1) {
        let mut next = BTreeMap::new();
        for &s in layers[j - 1].keys() {
            for &b in piece.iter().filter(|b| b.color_u == s.color) {
                let da = degree(s.left_role);
                let db = degree(b.role_u);
                let total = (da + db).min(2);
                if (s.left_role == Role::Leaf && db > 0) || (b.role_u == Role::Leaf && da > 0) {
                    continue;
                }
                let mut t = WalkState {
                    color: b.color_v,
                    left_role: b.role_v,
                    prev_total: total,
                    ..s
                };
                if s.left_role == Role::Undefined {
                    if j == 1 {
                        t.u_next_total = total;
                    } else if s.prev_total >= 2 && total >= 2 {
                        continue;
                    }
                }
                next.entry(t).or_insert((Some(s), b));
            }
        }
        layers.push(next);
    }

    let mut out = Witnesses::new();
    for &s in layers[k - 1].keys() {
        if let Some(class) = close(&s, k) {
            out.entry(class).or_insert_with(|| {
                let mut chosen = Vec::with_capacity(k);
                let mut cur = s;
                for j in (0..k).rev() {
                    let (prev, b) = layers[j][&cur];
                    chosen.push(b);
                    if let Some(p) = prev {
                        cur = p;
                    }
                }
                chosen.reverse();
                chosen
            });
        }
    }
    out
}

/// Adds the closing edge `(u, v)` and reads off the class, or rejects.
fn close(s: &WalkState, k: usize) -> Option<EquivalenceClass> {
    let same = u8::from(s.u_color == s.color);
    let tu = (degree(s.u_role) + same).min(2);
    let tv = (degree(s.left_role) + same).min(2);
    if (s.u_role == Role::Leaf && tu != 1) || (s.left_role == Role::Leaf && tv != 1) {
        return None;
    }
    if s.u_role == Role::Undefined && tu >= 2 && s.u_next_total >= 2 {
        return None;
    }
    if s.left_role == Role::Undefined && tv >= 2 && s.prev_total >= 2 {
        return None;
    }
    if same == 1 && tu >= 2 && tv >= 2 {
        return None;
    }
    debug_assert!(k >= 2);
    let role = |t: Total, other: Total, piece_role: Role, piece_partner_total: Total| -> Role {
        match t {
            0 => Role::Isolated,
            1 if same == 1 => {
                if other == 1 {
                    Role::Undefined
                } else {
                    Role::Leaf
                }
            }
            1 => match piece_role {
                Role::Undefined => {
                    if piece_partner_total >= 2 {
                        Role::Leaf
                    } else {
                        Role::Center
                    }
                }
                r => r,
            },
            _ => Role::Center,
        }
    };
    let class = EquivalenceClass::new(
        s.u_color,
        role(tu, tv, s.u_role, s.u_next_total),
        s.color,
        role(tv, tu, s.left_role, s.prev_total),
    );
    debug_assert!(class.is_valid(), "{class:?} from {s:?}");
    Some(class)
}

/// Classes achievable by G(μ) for a face path `u = w_0, ..., w_k = v`,
/// where `pieces[j]` is the class set of the child attached at
/// `(w_j, w_{j+1})`, or `None` for a bare face edge.
pub fn achievable_classes(face_path: &[usize], pieces: &[Option<&ClassSet>]) -> ClassSet {
    assert!(face_path.len() >= 3, "an inner face has at least three vertices");
    assert_eq!(pieces.len(), face_path.len() - 1, "one piece per face edge");
    let bare = bare_edge_classes();
    let sets: Vec<&ClassSet> = pieces.iter().map(|p| p.unwrap_or(&bare)).collect();
    walk(&sets).into_keys().collect()
}

/// Bottom-up class propagation over a weak dual.
struct Propagation {
    witnesses: Vec<Witnesses>,
    /// `child_at[node][j]` is the child attached at face edge `j`.
    child_at: Vec<Vec<Option<usize>>>,
}

fn propagate(tree: &WeakDualTree) -> Propagation {
    let m = tree.node_count();
    let bare = bare_edge_classes();
    let mut witnesses: Vec<Witnesses> = vec![Witnesses::new(); m];
    let mut child_at = vec![Vec::new(); m];
    for node in tree.post_order() {
        let face = &tree.faces[node];
        let mut slots = vec![None; face.len() - 1];
        for &c in &tree.children[node] {
            let (a, b) = tree.attachment_edge(c);
            let j = face
                .windows(2)
                .position(|w| w[0] == a && w[1] == b)
                .expect("child attaches along its parent's face path");
            slots[j] = Some(c);
        }
        let sets: Vec<ClassSet> = slots
            .iter()
            .map(|s| match s {
                Some(c) => witnesses[*c].keys().copied().collect(),
                None => bare.clone(),
            })
            .collect();
        let refs: Vec<&ClassSet> = sets.iter().collect();
        witnesses[node] = walk(&refs);
        child_at[node] = slots;
    }
    Propagation { witnesses, child_at }
}

/// The class set of every dual node.
pub fn node_class_sets(tree: &WeakDualTree) -> Vec<ClassSet> {
    propagate(tree)
        .witnesses
        .into_iter()
        .map(|w| w.into_keys().collect())
        .collect()
}

/// Reconstructs a coloring of the whole graph from the root's first class.
fn reconstruct(tree: &WeakDualTree, prop: &Propagation, n: usize) -> Option<Coloring> {
    let root_class = *prop.witnesses[tree.root].keys().next()?;
    let mut colors = vec![0u32; n];
    let mut stack = vec![(tree.root, root_class)];
    while let Some((node, class)) = stack.pop() {
        let face = &tree.faces[node];
        let chosen = &prop.witnesses[node][&class];
        for (j, b) in chosen.iter().enumerate() {
            colors[face[j]] = b.color_u;
            colors[face[j + 1]] = b.color_v;
            if let Some(c) = prop.child_at[node][j] {
                stack.push((c, *b));
            }
        }
    }
    Some(Coloring::new(colors))
}

/// Decides whether an outerplanar graph has a (2,2)-coloring and returns
/// one if so. Non-outerplanar input is rejected.
pub fn decide_outerplanar_2star(g: &Graph) -> Result<Option<Coloring>, EmbeddingError> {
    let n = g.vertex_count();
    let mut colors = vec![0u32; n];
    for comp in g.connected_components() {
        let h = g.induced_subgraph(&comp);
        let local = match decide_connected(&h)? {
            Some(c) => c,
            None => return Ok(None),
        };
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = local.color(i);
        }
    }
    Ok(Some(Coloring::new(colors)))
}

fn decide_connected(g: &Graph) -> Result<Option<Coloring>, EmbeddingError> {
    match g.vertex_count() {
        0 => return Ok(Some(Coloring::new(Vec::new()))),
        1 => return Ok(Some(Coloring::new(vec![0]))),
        2 => return Ok(Some(Coloring::new(vec![0, 1]))),
        _ => {}
    }
    recognize_outerplanar(g)?.ok_or(EmbeddingError::NotOuterplanar)?;
    let aug = biconnect_augment(g)?;
    let emb = recognize_outerplanar(&aug.graph)?.ok_or(EmbeddingError::NotOuterplanar)?;
    let tree = weak_dual(&aug.graph, &emb)?;
    let prop = propagate(&tree);
    Ok(reconstruct(&tree, &prop, aug.graph.vertex_count()).map(|c| aug.restrict_coloring(&c)))
}
