//! Test-only reference implementations and random inputs.
//!
//! The oracle works on its own word representation, a list of
//! `(edge index, inverted)` pairs over the raw edge list, and uses the
//! slowest obvious algorithm for everything so it shares no logic with the
//! library beyond graph parsing.

#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_measure::{
    int, DirectedGraph, EdgeId, EdgeRef, GraphBuilder, Orientation, Rational, ShadowedGraph,
    VertexId, Word,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// An oracle word: a vertex, or a nonempty path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OWord {
    Vertex(usize),
    Path(Vec<(usize, bool)>),
}

pub struct Oracle {
    /// (source, target, weight) per edge.
    edges: Vec<(usize, usize, Rational)>,
    vertex_weights: Vec<Rational>,
}

impl Oracle {
    pub fn new(g: &DirectedGraph) -> Self {
        Oracle {
            edges: g
                .edges()
                .iter()
                .map(|e| (e.source.0, e.target.0, e.weight.clone()))
                .collect(),
            vertex_weights: g.vertex_ids().map(|v| g.vertex_weight(v).clone()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_weights.len()
    }

    fn start(&self, (e, inv): (usize, bool)) -> usize {
        if inv {
            self.edges[e].1
        } else {
            self.edges[e].0
        }
    }

    fn end(&self, (e, inv): (usize, bool)) -> usize {
        if inv {
            self.edges[e].0
        } else {
            self.edges[e].1
        }
    }

    pub fn source(&self, w: &OWord) -> usize {
        match w {
            OWord::Vertex(v) => *v,
            OWord::Path(p) => self.start(p[0]),
        }
    }

    pub fn target(&self, w: &OWord) -> usize {
        match w {
            OWord::Vertex(v) => *v,
            OWord::Path(p) => self.end(*p.last().unwrap()),
        }
    }

    pub fn inverse(&self, w: &OWord) -> OWord {
        match w {
            OWord::Vertex(v) => OWord::Vertex(*v),
            OWord::Path(p) => OWord::Path(p.iter().rev().map(|&(e, inv)| (e, !inv)).collect()),
        }
    }

    /// Cancels the leftmost adjacent inverse pair, rescanning from the start
    /// each time.
    pub fn reduce(&self, w: &OWord) -> OWord {
        let OWord::Path(p) = w else { return w.clone() };
        let source = self.start(p[0]);
        let mut p = p.clone();
        'scan: loop {
            for i in 0..p.len().saturating_sub(1) {
                if p[i].0 == p[i + 1].0 && p[i].1 != p[i + 1].1 {
                    p.drain(i..i + 2);
                    continue 'scan;
                }
            }
            break;
        }
        if p.is_empty() {
            OWord::Vertex(source)
        } else {
            OWord::Path(p)
        }
    }

    /// Cancels adjacent inverse pairs in a random order.
    pub fn reduce_randomly<R: Rng>(&self, w: &OWord, rng: &mut R) -> OWord {
        let OWord::Path(p) = w else { return w.clone() };
        let source = self.start(p[0]);
        let mut p = p.clone();
        loop {
            let pairs: Vec<usize> = (0..p.len().saturating_sub(1))
                .filter(|&i| p[i].0 == p[i + 1].0 && p[i].1 != p[i + 1].1)
                .collect();
            let Some(&i) = pairs.choose(rng) else { break };
            p.drain(i..i + 2);
        }
        if p.is_empty() {
            OWord::Vertex(source)
        } else {
            OWord::Path(p)
        }
    }

    pub fn is_reduced(&self, w: &OWord) -> bool {
        self.reduce(w) == *w
    }

    /// Run collapse, then (if `injective`) cut before the first repeat.
    pub fn diagram(&self, w: &OWord, injective: bool) -> OWord {
        let OWord::Path(p) = w else { return w.clone() };
        let mut collapsed: Vec<(usize, bool)> = Vec::new();
        for &x in p {
            if collapsed.last() != Some(&x) {
                collapsed.push(x);
            }
        }
        if injective {
            let mut seen = BTreeSet::new();
            let cut = collapsed
                .iter()
                .position(|x| !seen.insert(*x))
                .unwrap_or(collapsed.len());
            collapsed.truncate(cut);
        }
        OWord::Path(collapsed)
    }

    pub fn reduced_diagram(&self, w: &OWord, injective: bool) -> OWord {
        self.diagram(&self.reduce(&self.diagram(w, injective)), injective)
    }

    /// `inverse ∘ δ^r ∘ inverse`: keeps the target instead of the source.
    pub fn mirrored_reduced_diagram(&self, w: &OWord, injective: bool) -> OWord {
        self.inverse(&self.reduced_diagram(&self.inverse(w), injective))
    }

    /// Every vertex and every admissible path of length 1..=max_len.
    pub fn all_words(&self, max_len: usize) -> Vec<OWord> {
        let mut out: Vec<OWord> = (0..self.vertex_count()).map(OWord::Vertex).collect();
        let mut frontier: Vec<Vec<(usize, bool)>> = Vec::new();
        for e in 0..self.edges.len() {
            for inv in [false, true] {
                frontier.push(vec![(e, inv)]);
            }
        }
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                out.push(OWord::Path(p.clone()));
                let t = self.end(*p.last().unwrap());
                for e in 0..self.edges.len() {
                    for inv in [false, true] {
                        if self.start((e, inv)) == t {
                            let mut q = p.clone();
                            q.push((e, inv));
                            next.push(q);
                        }
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Paths from `v` (or into `v` when `into`) of length 0..=max_len.
    pub fn words_at(&self, v: usize, max_len: usize, into: bool) -> Vec<OWord> {
        self.all_words(max_len)
            .into_iter()
            .filter(|w| {
                if into {
                    self.target(w) == v
                } else {
                    self.source(w) == v
                }
            })
            .collect()
    }

    /// D_r under edge injectivity: every path with pairwise distinct
    /// EdgeRefs, kept when reduced.
    pub fn reduced_diagram_set(&self) -> BTreeSet<OWord> {
        let mut out: BTreeSet<OWord> = (0..self.vertex_count()).map(OWord::Vertex).collect();
        let mut stack: Vec<Vec<(usize, bool)>> = Vec::new();
        for e in 0..self.edges.len() {
            for inv in [false, true] {
                stack.push(vec![(e, inv)]);
            }
        }
        while let Some(p) = stack.pop() {
            let t = self.end(*p.last().unwrap());
            for e in 0..self.edges.len() {
                for inv in [false, true] {
                    if self.start((e, inv)) == t && !p.contains(&(e, inv)) {
                        let mut q = p.clone();
                        q.push((e, inv));
                        stack.push(q);
                    }
                }
            }
            let w = OWord::Path(p);
            if self.is_reduced(&w) {
                out.insert(w);
            }
        }
        out
    }

    /// D_r under run collapse, up to `max_len`.
    pub fn reduced_run_collapse_set(&self, max_len: usize) -> BTreeSet<OWord> {
        self.all_words(max_len)
            .into_iter()
            .filter(|w| self.is_reduced(w) && self.diagram(w, false) == *w)
            .collect()
    }

    pub fn weight(&self, w: &OWord) -> Rational {
        match w {
            OWord::Vertex(v) => self.vertex_weights[*v].clone(),
            OWord::Path(p) => p.iter().map(|(e, _)| self.edges[*e].2.clone()).sum(),
        }
    }

    pub fn measure<'a>(&self, set: impl IntoIterator<Item = &'a OWord>) -> Rational {
        set.into_iter().map(|w| self.weight(w)).sum()
    }

    /// ∫ g_w over D_r by brute force: δ^r images of words leaving target(w)
    /// and mirrored δ^r images of words entering source(w), up to `len`.
    pub fn element_support(&self, w: &OWord, len: usize) -> BTreeSet<OWord> {
        let mut out = BTreeSet::new();
        for u in self.words_at(self.target(w), len, false) {
            out.insert(self.reduced_diagram(&u, true));
        }
        for u in self.words_at(self.source(w), len, true) {
            out.insert(self.mirrored_reduced_diagram(&u, true));
        }
        out
    }

    /// `w` concatenated |n| times, `inverse(w)` for n < 0, without
    /// reduction; `None` when inadmissible.
    pub fn power(&self, w: &OWord, n: i64) -> Option<OWord> {
        let base = if n < 0 { self.inverse(w) } else { w.clone() };
        match &base {
            OWord::Vertex(_) => Some(base),
            OWord::Path(p) => {
                if n.abs() > 1 && self.source(&base) != self.target(&base) {
                    return None;
                }
                Some(OWord::Path(p.repeat(n.unsigned_abs() as usize)))
            }
        }
    }

    /// Σ over D_r of ∫ g_{δ^r(x^n)}, where ∫ g_u is the D_r measure of the
    /// endpoint filter of u.
    pub fn monomial_integral(&self, dr: &BTreeSet<OWord>, n: i64) -> Rational {
        let mut by_endpoints = std::collections::HashMap::new();
        let mut filter = |u: &OWord| -> Rational {
            let key = (self.source(u), self.target(u));
            by_endpoints
                .entry(key)
                .or_insert_with(|| {
                    self.measure(
                        dr.iter()
                            .filter(|x| self.source(x) == key.1 || self.target(x) == key.0),
                    )
                })
                .clone()
        };
        dr.iter()
            .filter_map(|x| self.power(x, n))
            .map(|p| filter(&self.reduced_diagram(&p, true)))
            .sum()
    }

    pub fn encode(&self, w: &Word) -> OWord {
        match w {
            Word::Empty => panic!("the oracle has no empty word"),
            Word::Vertex(v) => OWord::Vertex(v.0),
            Word::Path(p) => OWord::Path(
                p.iter()
                    .map(|r| (r.edge.0, r.orientation == Orientation::Shadow))
                    .collect(),
            ),
        }
    }

    pub fn decode(&self, w: &OWord) -> Word {
        match w {
            OWord::Vertex(v) => Word::Vertex(VertexId(*v)),
            OWord::Path(p) => Word::Path(
                p.iter()
                    .map(|&(e, inv)| {
                        if inv {
                            EdgeRef::shadow(EdgeId(e))
                        } else {
                            EdgeRef::forward(EdgeId(e))
                        }
                    })
                    .collect(),
            ),
        }
    }
}

/// A random graph with at most `max_vertices` vertices and `max_edges`
/// edges. Cycle rank at most 3 and at most two loops keep the diagram sets
/// small enough for the brute-force oracle.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> DirectedGraph {
    const MAX_RANK: usize = 3;
    let n = rng.gen_range(1..=max_vertices);
    let cap = if n == 1 { 2 } else { n - 1 + MAX_RANK };
    let m = rng.gen_range(0..=max_edges.min(cap));
    let mut b = GraphBuilder::default();
    for v in 0..n {
        b.vertex(&format!("v{}", v + 1)).unwrap();
    }
    let mut component: Vec<usize> = (0..n).collect();
    let (mut loops, mut rank, mut added) = (0, 0, 0);
    while added < m {
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (cs, ct) = (component[s], component[t]);
        if s == t && loops == 2 {
            continue;
        }
        if cs == ct {
            if rank == MAX_RANK {
                continue;
            }
            rank += 1;
        } else {
            for c in component.iter_mut() {
                if *c == ct {
                    *c = cs;
                }
            }
        }
        loops += (s == t) as usize;
        added += 1;
        b.edge(
            &format!("e{added}"),
            &format!("v{}", s + 1),
            &format!("v{}", t + 1),
        )
        .unwrap();
    }
    b.build().unwrap()
}

/// The same graph with shuffled vertex and edge order and fresh names.
pub fn relabel<R: Rng>(rng: &mut R, g: &DirectedGraph) -> DirectedGraph {
    let mut vorder: Vec<usize> = (0..g.vertex_count()).collect();
    vorder.shuffle(rng);
    let mut eorder: Vec<usize> = (0..g.edge_count()).collect();
    eorder.shuffle(rng);
    let vname = |v: VertexId| format!("x{}", vorder.iter().position(|&o| o == v.0).unwrap());
    let mut b = GraphBuilder::default();
    for &v in &vorder {
        b.vertex(&vname(VertexId(v))).unwrap();
    }
    for (k, &e) in eorder.iter().enumerate() {
        let edge = &g.edges()[e];
        b.weighted_edge(
            &format!("f{k}"),
            &vname(edge.source),
            &vname(edge.target),
            edge.weight.clone(),
        )
        .unwrap();
    }
    for v in g.vertex_ids() {
        let w = g.vertex_weight(v);
        if *w != int(0) {
            b.vertex_weight(&vname(v), w.clone()).unwrap();
        }
    }
    b.build().unwrap()
}

/// A random admissible word of length up to `max_len`, biased towards
/// backtracking and repeated steps so reduction and collapse have work.
pub fn random_word<R: Rng>(rng: &mut R, g: &ShadowedGraph, max_len: usize) -> Word {
    let v = VertexId(rng.gen_range(0..g.vertex_count()));
    let len = rng.gen_range(0..=max_len);
    let mut refs: Vec<EdgeRef> = Vec::new();
    let mut at = v;
    for _ in 0..len {
        let out = g.outgoing(at);
        if out.is_empty() {
            break;
        }
        let last = refs.last().copied();
        let roll: f64 = rng.gen();
        let next = match last {
            Some(r) if roll < 0.25 => r.flip(),
            Some(r) if roll < 0.4 && g.source(r) == g.target(r) => r,
            _ => *out.choose(rng).unwrap(),
        };
        refs.push(next);
        at = g.target(next);
    }
    if refs.is_empty() {
        Word::Vertex(v)
    } else {
        Word::Path(refs)
    }
}

pub const TREE: &str = include_str!("../../fixtures/tree.graph");
pub const TRIANGLE: &str = include_str!("../../fixtures/triangle.graph");
pub const C3: &str = include_str!("../../fixtures/c3.graph");
pub const C3_VARIANT: &str = include_str!("../../fixtures/c3-variant.graph");
pub const C4: &str = include_str!("../../fixtures/c4.graph");
pub const BOUQUET2: &str = include_str!("../../fixtures/bouquet2.graph");
pub const BOUQUET3: &str = include_str!("../../fixtures/bouquet3.graph");

pub fn graph(text: &str) -> DirectedGraph {
    graph_measure::parse_graph(text).unwrap()
}

/// Directed cycle on n vertices.
pub fn cycle(n: usize) -> DirectedGraph {
    let mut b = GraphBuilder::default();
    for v in 1..=n {
        b.vertex(&format!("v{v}")).unwrap();
    }
    for v in 1..=n {
        b.edge(
            &format!("e{v}"),
            &format!("v{v}"),
            &format!("v{}", v % n + 1),
        )
        .unwrap();
    }
    b.build().unwrap()
}
