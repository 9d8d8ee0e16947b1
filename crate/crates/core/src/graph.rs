//! Finite directed graphs, their shadowed (two-colored) doubles, and the
//! line-oriented graph file format.
//!
//! ```text
//! # the tree with two leaves
//! vertex v1
//! vertex v2
//! vertex v3
//! edge e1 v1 v2
//! edge e2 v1 v3 3/2
//! vweight v1 1
//! ```
//!
//! Edge weights default to 1 and vertex weights to 0. Loops and parallel
//! edges are allowed. Vertex and edge ids share one namespace so that word
//! literals stay unambiguous.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{ParseError, ParseErrorKind};
use crate::number::{format_rational, is_nonnegative, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    pub weight: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Named {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// A finite directed graph with positive edge weights and nonnegative vertex
/// weights. Always has at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    vertex_weights: Vec<Rational>,
    edges: Vec<Edge>,
    names: HashMap<String, Named>,
}

impl DirectedGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_graph(text)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    pub fn vertex_name(&self, id: VertexId) -> &str {
        &self.vertices[id.0]
    }

    pub fn vertex_weight(&self, id: VertexId) -> &Rational {
        &self.vertex_weights[id.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        match self.names.get(name) {
            Some(Named::Vertex(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        match self.names.get(name) {
            Some(Named::Edge(e)) => Some(*e),
            _ => None,
        }
    }

    /// True when every edge weighs 1 and every vertex 0.
    pub fn has_default_weights(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one())
            && self.vertex_weights.iter().all(Zero::is_zero)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.source == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.target == v).count()
    }

    /// Canonical file form: vertices, then edges, then nonzero vertex
    /// weights, each in declaration order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for name in &self.vertices {
            out.push_str(&format!("vertex {name}\n"));
        }
        for e in &self.edges {
            let (s, t) = (&self.vertices[e.source.0], &self.vertices[e.target.0]);
            if e.weight.is_one() {
                out.push_str(&format!("edge {} {s} {t}\n", e.name));
            } else {
                out.push_str(&format!(
                    "edge {} {s} {t} {}\n",
                    e.name,
                    format_rational(&e.weight)
                ));
            }
        }
        for (name, w) in self.vertices.iter().zip(&self.vertex_weights) {
            if !w.is_zero() {
                out.push_str(&format!("vweight {name} {}\n", format_rational(w)));
            }
        }
        out
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for DirectedGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Incremental construction with the same validation the parser applies.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    vertex_weights: Vec<Rational>,
    edges: Vec<Edge>,
    names: HashMap<String, Named>,
}

impl GraphBuilder {
    pub fn vertex(&mut self, name: &str) -> Result<VertexId, ParseErrorKind> {
        self.claim(name)?;
        let id = VertexId(self.vertices.len());
        self.names.insert(name.to_string(), Named::Vertex(id));
        self.vertices.push(name.to_string());
        self.vertex_weights.push(Rational::zero());
        Ok(id)
    }

    pub fn edge(
        &mut self,
        name: &str,
        source: &str,
        target: &str,
    ) -> Result<EdgeId, ParseErrorKind> {
        self.weighted_edge(name, source, target, Rational::one())
    }

    pub fn weighted_edge(
        &mut self,
        name: &str,
        source: &str,
        target: &str,
        weight: Rational,
    ) -> Result<EdgeId, ParseErrorKind> {
        if weight <= Rational::zero() {
            return Err(ParseErrorKind::NonPositiveWeight(format_rational(&weight)));
        }
        let endpoint = |v: &str| match self.names.get(v) {
            Some(Named::Vertex(id)) => Ok(*id),
            _ => Err(ParseErrorKind::DanglingEndpoint {
                edge: name.to_string(),
                vertex: v.to_string(),
            }),
        };
        let (source, target) = (endpoint(source)?, endpoint(target)?);
        self.claim(name)?;
        let id = EdgeId(self.edges.len());
        self.names.insert(name.to_string(), Named::Edge(id));
        self.edges.push(Edge {
            name: name.to_string(),
            source,
            target,
            weight,
        });
        Ok(id)
    }

    pub fn vertex_weight(&mut self, name: &str, weight: Rational) -> Result<(), ParseErrorKind> {
        if !is_nonnegative(&weight) {
            return Err(ParseErrorKind::NegativeVertexWeight(format_rational(
                &weight,
            )));
        }
        match self.names.get(name) {
            Some(Named::Vertex(id)) => {
                self.vertex_weights[id.0] = weight;
                Ok(())
            }
            _ => Err(ParseErrorKind::Malformed(format!(
                "vweight for undeclared vertex `{name}`"
            ))),
        }
    }

    pub fn build(self) -> Result<DirectedGraph, ParseErrorKind> {
        if self.vertices.is_empty() {
            return Err(ParseErrorKind::Empty);
        }
        Ok(DirectedGraph {
            vertices: self.vertices,
            vertex_weights: self.vertex_weights,
            edges: self.edges,
            names: self.names,
        })
    }

    fn claim(&self, name: &str) -> Result<(), ParseErrorKind> {
        if !is_identifier(name) {
            return Err(ParseErrorKind::InvalidId(name.to_string()));
        }
        if self.names.contains_key(name) {
            return Err(ParseErrorKind::DuplicateId(name.to_string()));
        }
        Ok(())
    }
}

/// Letters, digits, `_` and `'`, not starting with a digit or `'`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut builder = GraphBuilder::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let at = |kind| ParseError { line, kind };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let weight = |text: &str| {
            parse_rational(text)
                .ok_or_else(|| at(ParseErrorKind::Malformed(format!("bad number `{text}`"))))
        };
        match fields.as_slice() {
            ["vertex", id] => {
                builder.vertex(id).map_err(at)?;
            }
            ["edge", id, src, dst] => {
                builder.edge(id, src, dst).map_err(at)?;
            }
            ["edge", id, src, dst, w] => {
                let w = weight(w)?;
                builder.weighted_edge(id, src, dst, w).map_err(at)?;
            }
            ["vweight", id, w] => {
                let w = weight(w)?;
                builder.vertex_weight(id, w).map_err(at)?;
            }
            _ => return Err(at(ParseErrorKind::Malformed(content.to_string()))),
        }
    }
    builder.build().map_err(|kind| ParseError { line: 0, kind })
}

/// `Forward` is the first color of the shadowed graph, `Shadow` (the
/// reversed copy e^-1) the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Shadow,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Shadow,
            Orientation::Shadow => Orientation::Forward,
        }
    }
}

/// An edge of the shadowed graph: a base edge taken forward or reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub edge: EdgeId,
    pub orientation: Orientation,
}

impl EdgeRef {
    pub fn forward(edge: EdgeId) -> Self {
        EdgeRef {
            edge,
            orientation: Orientation::Forward,
        }
    }

    pub fn shadow(edge: EdgeId) -> Self {
        EdgeRef {
            edge,
            orientation: Orientation::Shadow,
        }
    }

    pub fn flip(self) -> Self {
        EdgeRef {
            edge: self.edge,
            orientation: self.orientation.flip(),
        }
    }

    /// Dense index in `0..2|E|`, forward before shadow.
    pub fn index(self) -> usize {
        2 * self.edge.0 + (self.orientation == Orientation::Shadow) as usize
    }
}

/// G ∪ G^-1: same vertices, every edge present in both orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowedGraph {
    base: DirectedGraph,
    outgoing: Vec<Vec<EdgeRef>>,
    default_weights: bool,
}

pub fn shadow(graph: &DirectedGraph) -> ShadowedGraph {
    ShadowedGraph::new(graph.clone())
}

impl ShadowedGraph {
    pub fn new(base: DirectedGraph) -> Self {
        let mut outgoing = vec![Vec::new(); base.vertex_count()];
        for r in (0..base.edge_count())
            .flat_map(|e| [EdgeRef::forward(EdgeId(e)), EdgeRef::shadow(EdgeId(e))])
        {
            let edge = base.edge(r.edge);
            let from = if r.orientation == Orientation::Forward {
                edge.source
            } else {
                edge.target
            };
            outgoing[from.0].push(r);
        }
        let default_weights = base.has_default_weights();
        ShadowedGraph {
            base,
            outgoing,
            default_weights,
        }
    }

    pub fn base(&self) -> &DirectedGraph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    /// |E(G^)| = 2|E(G)|.
    pub fn edge_ref_count(&self) -> usize {
        2 * self.base.edge_count()
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.base
            .edge_ids()
            .flat_map(|e| [EdgeRef::forward(e), EdgeRef::shadow(e)])
    }

    /// EdgeRefs leaving `v`, ordered by (edge id, orientation).
    pub fn outgoing(&self, v: VertexId) -> &[EdgeRef] {
        &self.outgoing[v.0]
    }

    pub fn source(&self, r: EdgeRef) -> VertexId {
        let e = self.base.edge(r.edge);
        match r.orientation {
            Orientation::Forward => e.source,
            Orientation::Shadow => e.target,
        }
    }

    pub fn target(&self, r: EdgeRef) -> VertexId {
        self.source(r.flip())
    }

    pub fn weight(&self, r: EdgeRef) -> &Rational {
        &self.base.edge(r.edge).weight
    }

    pub fn has_default_weights(&self) -> bool {
        self.default_weights
    }

    /// `e1` or `e1^-1`.
    pub fn ref_literal(&self, r: EdgeRef) -> String {
        let name = &self.base.edge(r.edge).name;
        match r.orientation {
            Orientation::Forward => name.clone(),
            Orientation::Shadow => format!("{name}^-1"),
        }
    }
}
