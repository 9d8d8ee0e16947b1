//! Measure equivalence of graphs.
//!
//! Two graphs have equivalent measures exactly when their shadowed graphs
//! are colored-graph-isomorphic. [`check_measure_equivalence`] screens with a
//! [`Fingerprint`] of measure data, then searches for a colored shadow
//! isomorphism and validates the set map it induces in all four spaces.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{enumerate_reduced_diagram_set, DiagramPolicy};
use crate::error::{Error, Result};
use crate::graph::{shadow, DirectedGraph, ShadowedGraph, VertexId};
use crate::iso::{find_colored_shadow_isomorphism, GraphMapping};
use crate::measure::{MeasureSpace, SpaceKind};
use crate::number::{format_rational, Rational};
use crate::word::{format_word, WordSet};

/// Relabeling-invariant summary of a graph's reduced diagram measure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub vertices: usize,
    pub edges: usize,
    #[serde(serialize_with = "crate::number::serialize_rational")]
    pub total_reduced_measure: Rational,
    /// Path length → number of reduced diagrams of that length.
    pub length_histogram: BTreeMap<usize, usize>,
    /// ∫ g_w over every reduced diagram w, sorted.
    #[serde(serialize_with = "crate::number::serialize_rationals")]
    pub element_integrals: Vec<Rational>,
    /// (out, in) degree of each vertex along forward-colored edges, sorted.
    pub degree_pairs: Vec<(usize, usize)>,
}

impl Fingerprint {
    /// Name and rendered values of the first field that differs.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<Distinguisher> {
        let field = |name: &str, a: String, b: String| Distinguisher {
            field: name.to_string(),
            left: a,
            right: b,
        };
        let rats = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
        if self.vertices != other.vertices {
            return Some(field(
                "vertices",
                self.vertices.to_string(),
                other.vertices.to_string(),
            ));
        }
        if self.edges != other.edges {
            return Some(field(
                "edges",
                self.edges.to_string(),
                other.edges.to_string(),
            ));
        }
        if self.total_reduced_measure != other.total_reduced_measure {
            return Some(field(
                "total_reduced_measure",
                format_rational(&self.total_reduced_measure),
                format_rational(&other.total_reduced_measure),
            ));
        }
        if self.length_histogram != other.length_histogram {
            return Some(field(
                "length_histogram",
                format!("{:?}", self.length_histogram),
                format!("{:?}", other.length_histogram),
            ));
        }
        if self.element_integrals != other.element_integrals {
            return Some(field(
                "element_integrals",
                rats(&self.element_integrals),
                rats(&other.element_integrals),
            ));
        }
        if self.degree_pairs != other.degree_pairs {
            return Some(field(
                "degree_pairs",
                format!("{:?}", self.degree_pairs),
                format!("{:?}", other.degree_pairs),
            ));
        }
        None
    }
}

pub fn measure_fingerprint(graph: &DirectedGraph) -> Result<Fingerprint> {
    let s = Arc::new(shadow(graph));
    let space = MeasureSpace::reduced(s.clone());
    let universe = space.universe()?;

    let mut length_histogram = BTreeMap::new();
    for w in universe.iter().filter(|w| w.is_path()) {
        *length_histogram.entry(w.len()).or_insert(0) += 1;
    }

    // ∫ g_w only depends on the endpoints of w
    let mut by_endpoints: HashMap<(VertexId, VertexId), Rational> = HashMap::new();
    let mut element_integrals = Vec::with_capacity(universe.len());
    for w in universe.iter() {
        let key = (w.source(&s).unwrap(), w.target(&s).unwrap());
        if let Entry::Vacant(slot) = by_endpoints.entry(key) {
            let support = universe
                .iter()
                .filter(|u| u.source(&s) == Some(key.1) || u.target(&s) == Some(key.0));
            slot.insert(space.measure(support)?);
        }
        element_integrals.push(by_endpoints[&key].clone());
    }
    element_integrals.sort();

    let mut degree_pairs: Vec<_> = graph
        .vertex_ids()
        .map(|v| (graph.out_degree(v), graph.in_degree(v)))
        .collect();
    degree_pairs.sort();

    Ok(Fingerprint {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        total_reduced_measure: space.total()?,
        length_histogram,
        element_integrals,
        degree_pairs,
    })
}

/// Φ(S) = { g^(w) : w ∈ S }.
pub fn induced_set_bijection(
    mapping: &GraphMapping,
    from: &ShadowedGraph,
    to: &ShadowedGraph,
    set: &WordSet,
) -> Result<WordSet> {
    if !mapping.is_valid(from, to) {
        return Err(Error::Usage(
            "mapping is not an isomorphism between these graphs".into(),
        ));
    }
    for w in set {
        w.validate(from)?;
    }
    Ok(set.iter().map(|w| mapping.map_word(w)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distinguisher {
    pub field: String,
    pub left: String,
    pub right: String,
}

/// A found isomorphism, by name: vertex → vertex, edge → EdgeRef literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, String>,
}

impl Witness {
    fn new(mapping: &GraphMapping, from: &ShadowedGraph, to: &ShadowedGraph) -> Self {
        let vertex_map = from
            .base()
            .vertex_ids()
            .map(|v| {
                (
                    from.base().vertex_name(v).to_string(),
                    to.base().vertex_name(mapping.map_vertex(v)).to_string(),
                )
            })
            .collect();
        let edge_map = from
            .base()
            .edges()
            .iter()
            .zip(&mapping.edge_map)
            .map(|(e, image)| (e.name.clone(), to.ref_literal(*image)))
            .collect();
        Witness {
            vertex_map,
            edge_map,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Equivalent,
    NotEquivalent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub verdict: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguisher: Option<Distinguisher>,
    /// Sets on which Φ was checked to preserve measure, over all spaces.
    pub checked_sets: usize,
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        self.verdict == VerdictKind::Equivalent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceOptions {
    /// Truncation for the energy and groupoid spaces.
    pub max_len: usize,
    pub seed: u64,
    /// Random subsets checked per space, on top of all singletons.
    pub random_sets: usize,
    pub policy: DiagramPolicy,
}

impl Default for EquivalenceOptions {
    fn default() -> Self {
        EquivalenceOptions {
            max_len: 3,
            seed: 0,
            random_sets: 100,
            policy: DiagramPolicy::EdgeInjective,
        }
    }
}

pub fn check_measure_equivalence(
    g1: &DirectedGraph,
    g2: &DirectedGraph,
    options: &EquivalenceOptions,
) -> Result<Verdict> {
    let (f1, f2) = (measure_fingerprint(g1)?, measure_fingerprint(g2)?);
    if let Some(distinguisher) = f1.first_difference(&f2) {
        return Ok(Verdict {
            verdict: VerdictKind::NotEquivalent,
            witness: None,
            distinguisher: Some(distinguisher),
            checked_sets: 0,
        });
    }
    let (s1, s2) = (Arc::new(shadow(g1)), Arc::new(shadow(g2)));
    let Some(mapping) = find_colored_shadow_isomorphism(&s1, &s2) else {
        let distinguisher = Distinguisher {
            field: "colored_shadow_isomorphism".into(),
            left: "searched".into(),
            right: "none".into(),
        };
        return Ok(Verdict {
            verdict: VerdictKind::NotEquivalent,
            witness: None,
            distinguisher: Some(distinguisher),
            checked_sets: 0,
        });
    };
    let checked_sets = validate_set_map(&mapping, &s1, &s2, options)?;
    Ok(Verdict {
        verdict: VerdictKind::Equivalent,
        witness: Some(Witness::new(&mapping, &s1, &s2)),
        distinguisher: None,
        checked_sets,
    })
}

/// Checks that Φ maps each universe onto the other and preserves the
/// measure of every singleton and of `random_sets` random subsets, in all
/// four spaces. Returns the number of sets checked.
pub fn validate_set_map(
    mapping: &GraphMapping,
    s1: &Arc<ShadowedGraph>,
    s2: &Arc<ShadowedGraph>,
    options: &EquivalenceOptions,
) -> Result<usize> {
    let mut checked = 0;
    for (i, kind) in SpaceKind::ALL.into_iter().enumerate() {
        let sp1 = MeasureSpace::new(s1.clone(), kind, options.policy, options.max_len);
        let sp2 = MeasureSpace::new(s2.clone(), kind, options.policy, options.max_len);
        let (u1, u2) = (sp1.universe()?, sp2.universe()?);
        let image = induced_set_bijection(mapping, s1, s2, &u1)?;
        if image != *u2 {
            return Err(Error::Internal(format!(
                "induced map is not onto the {kind} universe"
            )));
        }
        let fail =
            |w: &str| Error::Internal(format!("induced map changes the {kind} measure at {w}"));
        for w in u1.iter() {
            let single = WordSet::from([w.clone()]);
            let mapped = induced_set_bijection(mapping, s1, s2, &single)?;
            if sp1.measure(&single)? != sp2.measure(&mapped)? {
                return Err(fail(&format_word(s1, w)));
            }
            checked += 1;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ ((i as u64 + 1) << 32));
        for _ in 0..options.random_sets {
            let density: f64 = rng.gen_range(0.05..0.95);
            let subset: WordSet = u1
                .iter()
                .filter(|_| rng.gen_bool(density))
                .cloned()
                .collect();
            let mapped = induced_set_bijection(mapping, s1, s2, &subset)?;
            if sp1.measure(&subset)? != sp2.measure(&mapped)? {
                return Err(fail("a random subset"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Reduced diagram census used by reports: total count and loop count.
pub fn reduced_census(
    graph: &ShadowedGraph,
    policy: DiagramPolicy,
    max_len: usize,
) -> Result<(usize, usize)> {
    let set = enumerate_reduced_diagram_set(graph, policy, max_len)?;
    let loops = set.elements.iter().filter(|w| w.is_loop(graph)).count();
    Ok((set.len(), loops))
}
