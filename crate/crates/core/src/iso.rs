//! Graph isomorphisms between directed graphs and between their shadowed
//! graphs, with or without the forward/shadow coloring.
//!
//! The search is plain backtracking over vertex assignments in declaration
//! order, pruned by per-vertex degree signatures and by comparing the label
//! multisets of arcs between already-assigned vertices. Candidates are tried
//! in id order, so the first mapping found is deterministic.

use std::collections::HashMap;

use crate::graph::{DirectedGraph, EdgeId, EdgeRef, Orientation, ShadowedGraph, VertexId};
use crate::number::Rational;
use crate::word::Word;

/// A vertex bijection plus, for every base edge of the domain, the image of
/// its forward EdgeRef. Shadows map to the flip of that image, so the word
/// map commutes with inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMapping {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeRef>,
    /// Every edge keeps its orientation color.
    pub colored: bool,
}

impl GraphMapping {
    pub fn identity(graph: &DirectedGraph) -> Self {
        GraphMapping {
            vertex_map: graph.vertex_ids().collect(),
            edge_map: graph.edge_ids().map(EdgeRef::forward).collect(),
            colored: true,
        }
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.0]
    }

    pub fn map_ref(&self, r: EdgeRef) -> EdgeRef {
        let image = self.edge_map[r.edge.0];
        match r.orientation {
            Orientation::Forward => image,
            Orientation::Shadow => image.flip(),
        }
    }

    /// The edgewise word map g^.
    pub fn map_word(&self, word: &Word) -> Word {
        match word {
            Word::Empty => Word::Empty,
            Word::Vertex(v) => Word::Vertex(self.map_vertex(*v)),
            Word::Path(refs) => Word::Path(refs.iter().map(|r| self.map_ref(*r)).collect()),
        }
    }

    /// Bijectivity, incidence, weights, and (when `colored`) orientation.
    pub fn is_valid(&self, from: &ShadowedGraph, to: &ShadowedGraph) -> bool {
        let (b1, b2) = (from.base(), to.base());
        if self.vertex_map.len() != b1.vertex_count()
            || self.edge_map.len() != b1.edge_count()
            || b1.vertex_count() != b2.vertex_count()
            || b1.edge_count() != b2.edge_count()
        {
            return false;
        }
        let mut seen_v = vec![false; b2.vertex_count()];
        for (v, image) in self.vertex_map.iter().enumerate() {
            if image.0 >= seen_v.len() || std::mem::replace(&mut seen_v[image.0], true) {
                return false;
            }
            if b1.vertex_weight(VertexId(v)) != b2.vertex_weight(*image) {
                return false;
            }
        }
        let mut seen_e = vec![false; b2.edge_count()];
        for r in from.edge_refs() {
            let image = self.map_ref(r);
            if image.edge.0 >= seen_e.len() {
                return false;
            }
            if r.orientation == Orientation::Forward
                && std::mem::replace(&mut seen_e[image.edge.0], true)
            {
                return false;
            }
            if self.colored && image.orientation != r.orientation {
                return false;
            }
            if to.source(image) != self.map_vertex(from.source(r))
                || to.target(image) != self.map_vertex(from.target(r))
                || to.weight(image) != from.weight(r)
            {
                return false;
            }
        }
        true
    }
}

/// Arcs between vertex pairs with comparable labels.
struct LabeledDigraph<L> {
    vertex_labels: Vec<Rational>,
    arcs: HashMap<(usize, usize), Vec<L>>,
    signature: Vec<(Rational, Vec<L>, Vec<L>)>,
}

impl<L: Ord + Clone> LabeledDigraph<L> {
    fn new(graph: &DirectedGraph, arcs: impl IntoIterator<Item = (VertexId, VertexId, L)>) -> Self {
        let n = graph.vertex_count();
        let vertex_labels: Vec<Rational> = graph
            .vertex_ids()
            .map(|v| graph.vertex_weight(v).clone())
            .collect();
        let mut map: HashMap<(usize, usize), Vec<L>> = HashMap::new();
        let mut outs = vec![Vec::new(); n];
        let mut ins = vec![Vec::new(); n];
        for (s, t, label) in arcs {
            outs[s.0].push(label.clone());
            ins[t.0].push(label.clone());
            map.entry((s.0, t.0)).or_default().push(label);
        }
        for labels in map.values_mut() {
            labels.sort();
        }
        let signature = (0..n)
            .map(|v| {
                outs[v].sort();
                ins[v].sort();
                (
                    vertex_labels[v].clone(),
                    std::mem::take(&mut outs[v]),
                    std::mem::take(&mut ins[v]),
                )
            })
            .collect();
        LabeledDigraph {
            vertex_labels,
            arcs: map,
            signature,
        }
    }

    fn between(&self, s: usize, t: usize) -> &[L] {
        self.arcs.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn search_vertex_map<L: Ord + Clone>(
    a: &LabeledDigraph<L>,
    b: &LabeledDigraph<L>,
) -> Option<Vec<usize>> {
    let n = a.vertex_labels.len();
    if n != b.vertex_labels.len() {
        return None;
    }
    let mut sig_a: Vec<_> = a.signature.iter().collect();
    let mut sig_b: Vec<_> = b.signature.iter().collect();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return None;
    }
    let mut assignment = Vec::with_capacity(n);
    let mut used = vec![false; n];
    backtrack(a, b, &mut assignment, &mut used).then_some(assignment)
}

fn backtrack<L: Ord + Clone>(
    a: &LabeledDigraph<L>,
    b: &LabeledDigraph<L>,
    assignment: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let u = assignment.len();
    if u == used.len() {
        return true;
    }
    for c in 0..used.len() {
        if used[c] || a.signature[u] != b.signature[c] {
            continue;
        }
        let consistent = a.between(u, u) == b.between(c, c)
            && assignment.iter().enumerate().all(|(p, &q)| {
                a.between(u, p) == b.between(c, q) && a.between(p, u) == b.between(q, c)
            });
        if !consistent {
            continue;
        }
        used[c] = true;
        assignment.push(c);
        if backtrack(a, b, assignment, used) {
            return true;
        }
        assignment.pop();
        used[c] = false;
    }
    false
}

/// Matches every base edge of `g1` to an unused edge of `g2` between the
/// image endpoints, keeping orientation unless `allow_flip`.
fn match_edges(
    g1: &DirectedGraph,
    g2: &DirectedGraph,
    vertex_map: &[usize],
    allow_flip: bool,
) -> Option<Vec<EdgeRef>> {
    let mut used = vec![false; g2.edge_count()];
    let mut out = Vec::with_capacity(g1.edge_count());
    for e in g1.edges() {
        let (s, t) = (vertex_map[e.source.0], vertex_map[e.target.0]);
        let found = g2.edges().iter().enumerate().find_map(|(i, f)| {
            if used[i] || f.weight != e.weight {
                return None;
            }
            if f.source.0 == s && f.target.0 == t {
                Some(EdgeRef::forward(EdgeId(i)))
            } else if allow_flip && f.source.0 == t && f.target.0 == s {
                Some(EdgeRef::shadow(EdgeId(i)))
            } else {
                None
            }
        })?;
        used[found.edge.0] = true;
        out.push(found);
    }
    Some(out)
}

fn mapping(vertex_map: Vec<usize>, edge_map: Vec<EdgeRef>, colored: bool) -> GraphMapping {
    GraphMapping {
        vertex_map: vertex_map.into_iter().map(VertexId).collect(),
        edge_map,
        colored,
    }
}

/// Incidence- and weight-preserving bijection G1 → G2, if any.
pub fn find_digraph_isomorphism(g1: &DirectedGraph, g2: &DirectedGraph) -> Option<GraphMapping> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let arcs = |g: &DirectedGraph| {
        g.edges()
            .iter()
            .map(|e| (e.source, e.target, e.weight.clone()))
            .collect::<Vec<_>>()
    };
    let a = LabeledDigraph::new(g1, arcs(g1));
    let b = LabeledDigraph::new(g2, arcs(g2));
    let vertex_map = search_vertex_map(&a, &b)?;
    let edge_map = match_edges(g1, g2, &vertex_map, false)?;
    Some(mapping(vertex_map, edge_map, true))
}

/// Isomorphism of shadowed graphs. Arcs are the EdgeRefs of G^; with
/// `colored` they also carry their orientation as a label.
pub fn find_shadow_isomorphism(
    s1: &ShadowedGraph,
    s2: &ShadowedGraph,
    colored: bool,
) -> Option<GraphMapping> {
    let (g1, g2) = (s1.base(), s2.base());
    if g1.vertex_count() != g2.vertex_count() || s1.edge_ref_count() != s2.edge_ref_count() {
        return None;
    }
    let arcs = |s: &ShadowedGraph| {
        s.edge_refs()
            .map(|r| {
                let color = if colored { Some(r.orientation) } else { None };
                (s.source(r), s.target(r), (color, s.weight(r).clone()))
            })
            .collect::<Vec<_>>()
    };
    let a = LabeledDigraph::new(g1, arcs(s1));
    let b = LabeledDigraph::new(g2, arcs(s2));
    let vertex_map = search_vertex_map(&a, &b)?;
    let edge_map = match_edges(g1, g2, &vertex_map, !colored)?;
    Some(mapping(vertex_map, edge_map, colored))
}

pub fn find_colored_shadow_isomorphism(
    s1: &ShadowedGraph,
    s2: &ShadowedGraph,
) -> Option<GraphMapping> {
    find_shadow_isomorphism(s1, s2, true)
}
