//! The four graph measures.
//!
//! All four share one formula: a vertex weighs its vertex weight (0 by
//! default) and a path weighs the sum of its edge weights (its length by
//! default). They differ only in the universe of admissible sets:
//!
//! | kind              | universe                         | bounded |
//! |-------------------|----------------------------------|---------|
//! | `energy`          | free semigroupoid F+(G^)         | no      |
//! | `diagram`         | diagram set D(G^)                | yes*    |
//! | `groupoid`        | graph groupoid (reduced words)   | no      |
//! | `reduced-diagram` | reduced diagram set D_r(G^)      | yes*    |
//!
//! (*) under [`DiagramPolicy::EdgeInjective`]. Infinite universes are
//! enumerated only up to the space's `max_len`; membership tests are exact.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{
    enumerate_diagram_set, enumerate_reduced_diagram_set, is_diagram, DiagramPolicy,
};
use crate::error::{Error, Result};
use crate::graph::ShadowedGraph;
use crate::number::{int, Rational};
use crate::word::{enumerate_words, format_word, Word, WordSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    Energy,
    Diagram,
    Groupoid,
    ReducedDiagram,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 4] = [
        SpaceKind::Energy,
        SpaceKind::Diagram,
        SpaceKind::Groupoid,
        SpaceKind::ReducedDiagram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Energy => "energy",
            SpaceKind::Diagram => "diagram",
            SpaceKind::Groupoid => "groupoid",
            SpaceKind::ReducedDiagram => "reduced-diagram",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Literal(format!("unknown space `{s}`")))
    }
}

type CachedUniverse = Arc<OnceLock<Result<Arc<WordSet>>>>;

/// A graph together with one of the four measures on it. Cheap to clone;
/// the enumerated universe is computed once and shared between clones.
#[derive(Clone)]
pub struct MeasureSpace {
    graph: Arc<ShadowedGraph>,
    kind: SpaceKind,
    policy: DiagramPolicy,
    max_len: usize,
    universe: CachedUniverse,
}

impl fmt::Debug for MeasureSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasureSpace")
            .field("kind", &self.kind)
            .field("policy", &self.policy)
            .field("max_len", &self.max_len)
            .finish_non_exhaustive()
    }
}

impl PartialEq for MeasureSpace {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.policy == other.policy
            && self.max_len == other.max_len
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl MeasureSpace {
    pub fn new(
        graph: Arc<ShadowedGraph>,
        kind: SpaceKind,
        policy: DiagramPolicy,
        max_len: usize,
    ) -> Self {
        MeasureSpace {
            graph,
            kind,
            policy,
            max_len,
            universe: Arc::default(),
        }
    }

    /// The reduced diagram space under the default policy, the setting of the
    /// graph integral.
    pub fn reduced(graph: Arc<ShadowedGraph>) -> Self {
        let max_len = graph.edge_ref_count();
        MeasureSpace::new(
            graph,
            SpaceKind::ReducedDiagram,
            DiagramPolicy::EdgeInjective,
            max_len,
        )
    }

    /// Same graph and policy, different kind or cap.
    pub fn with(&self, kind: SpaceKind, max_len: usize) -> Self {
        MeasureSpace::new(self.graph.clone(), kind, self.policy, max_len)
    }

    pub fn graph(&self) -> &ShadowedGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<ShadowedGraph> {
        &self.graph
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn policy(&self) -> DiagramPolicy {
        self.policy
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Whether [`universe`](Self::universe) is the whole universe rather
    /// than a truncation.
    pub fn is_exhaustive(&self) -> bool {
        matches!(self.kind, SpaceKind::Diagram | SpaceKind::ReducedDiagram)
            && self.policy == DiagramPolicy::EdgeInjective
    }

    pub fn contains(&self, word: &Word) -> bool {
        if word.is_empty() || word.validate(&self.graph).is_err() {
            return false;
        }
        match self.kind {
            SpaceKind::Energy => true,
            SpaceKind::Groupoid => word.is_reduced(),
            SpaceKind::Diagram => is_diagram(word, self.policy),
            SpaceKind::ReducedDiagram => word.is_reduced() && is_diagram(word, self.policy),
        }
    }

    pub(crate) fn check(&self, word: &Word) -> Result<()> {
        if word.is_empty() || self.contains(word) {
            Ok(())
        } else {
            Err(Error::OutsideUniverse {
                word: match word.validate(&self.graph) {
                    Ok(()) => format_word(&self.graph, word),
                    Err(_) => format!("{word:?}"),
                },
                universe: self.kind.to_string(),
            })
        }
    }

    /// The universe, truncated at `max_len` unless [`is_exhaustive`](Self::is_exhaustive).
    pub fn universe(&self) -> Result<Arc<WordSet>> {
        self.universe
            .get_or_init(|| {
                let g = &self.graph;
                let set = match self.kind {
                    SpaceKind::Energy => enumerate_words(g, self.max_len, false)?,
                    SpaceKind::Groupoid => enumerate_words(g, self.max_len, true)?,
                    SpaceKind::Diagram => {
                        enumerate_diagram_set(g, self.policy, self.max_len)?.elements
                    }
                    SpaceKind::ReducedDiagram => {
                        enumerate_reduced_diagram_set(g, self.policy, self.max_len)?.elements
                    }
                };
                Ok(Arc::new(set))
            })
            .clone()
    }

    /// Measure of a single word, without a membership check.
    pub fn weight(&self, word: &Word) -> Rational {
        let g = &self.graph;
        match word {
            Word::Empty => Rational::zero(),
            Word::Vertex(v) => g.base().vertex_weight(*v).clone(),
            Word::Path(refs) if g.has_default_weights() => int(refs.len() as i64),
            Word::Path(refs) => refs.iter().map(|r| g.weight(*r)).sum(),
        }
    }

    pub fn measure<'a, I>(&self, set: I) -> Result<Rational>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut total = Rational::zero();
        let mut length: u64 = 0;
        let fast = self.graph.has_default_weights();
        for word in set {
            self.check(word)?;
            if fast {
                length += word.len() as u64;
            } else {
                total += self.weight(word);
            }
        }
        Ok(total + int(length as i64))
    }

    /// Measure of the whole universe. Only the diagram spaces have one.
    pub fn total(&self) -> Result<Rational> {
        match self.kind {
            SpaceKind::Energy | SpaceKind::Groupoid => Err(Error::Unbounded(self.kind.to_string())),
            SpaceKind::Diagram | SpaceKind::ReducedDiagram => self.measure(self.universe()?.iter()),
        }
    }

    /// Measures of the universe truncated at each cap.
    pub fn boundedness_report(&self, caps: &[usize]) -> Result<BoundednessReport> {
        let mut entries = Vec::with_capacity(caps.len());
        for &cap in caps {
            let space = self.with(self.kind, cap);
            entries.push(CapMeasure {
                cap,
                measure: space.measure(space.universe()?.iter())?,
            });
        }
        let strictly_increasing = entries.windows(2).all(|p| p[0].measure < p[1].measure);
        let saturated = entries.len() >= 2
            && entries
                .windows(2)
                .last()
                .is_some_and(|p| p[0].measure == p[1].measure);
        Ok(BoundednessReport {
            kind: self.kind,
            policy: self.policy,
            entries,
            strictly_increasing,
            saturated,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapMeasure {
    pub cap: usize,
    pub measure: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundednessReport {
    pub kind: SpaceKind,
    pub policy: DiagramPolicy,
    pub entries: Vec<CapMeasure>,
    /// Evidence of an unbounded measure.
    pub strictly_increasing: bool,
    /// The last two caps measured the same total.
    pub saturated: bool,
}
