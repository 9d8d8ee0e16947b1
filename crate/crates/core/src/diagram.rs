//! The diagram map, the reduced diagram map, and the (reduced) diagram sets
//! they cut out of the free semigroupoid.
//!
//! A diagram forgets how often a path traverses the same piece of the
//! graph. Two combinatorial readings are offered:
//!
//! * [`DiagramPolicy::RunCollapse`] replaces every maximal run `r r ... r` of
//!   one EdgeRef by a single `r`. It keeps both endpoints, but the diagram
//!   set is infinite as soon as the shadowed graph has a cycle of length ≥ 2.
//! * [`DiagramPolicy::EdgeInjective`] additionally truncates the word just
//!   before the first EdgeRef that already occurred. Every diagram then uses
//!   each EdgeRef at most once, so the diagram sets are finite with paths of
//!   length at most `2|E(G)|`. The source is kept, the target may move.
//!
//! The reduced diagram map is `δ ∘ reduce ∘ δ`. On reduced words it agrees
//! with the diagram map, it is idempotent, and it absorbs a leading δ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ShadowedGraph;
use crate::word::{enumerate_with, reduce, Word, WordSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramPolicy {
    RunCollapse,
    #[default]
    EdgeInjective,
}

impl fmt::Display for DiagramPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramPolicy::RunCollapse => "run-collapse",
            DiagramPolicy::EdgeInjective => "edge-injective",
        })
    }
}

impl FromStr for DiagramPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "run-collapse" => Ok(DiagramPolicy::RunCollapse),
            "edge-injective" => Ok(DiagramPolicy::EdgeInjective),
            other => Err(Error::Literal(format!("unknown diagram policy `{other}`"))),
        }
    }
}

/// Which of the two diagram sets a [`DiagramSet`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramUniverse {
    /// D(G^)
    Diagrams,
    /// D_r(G^)
    ReducedDiagrams,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSet {
    pub elements: WordSet,
    pub universe: DiagramUniverse,
    pub policy: DiagramPolicy,
}

impl DiagramSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The D_V part; always the full vertex set.
    pub fn vertex_part(&self) -> impl Iterator<Item = &Word> {
        self.elements.iter().filter(|w| w.is_vertex())
    }

    /// The D_FP part.
    pub fn path_part(&self) -> impl Iterator<Item = &Word> {
        self.elements.iter().filter(|w| w.is_path())
    }
}

pub fn diagram(word: &Word, policy: DiagramPolicy) -> Word {
    let Word::Path(refs) = word else {
        return word.clone();
    };
    let mut out = Vec::with_capacity(refs.len());
    for &r in refs {
        if out.last() == Some(&r) {
            continue;
        }
        if policy == DiagramPolicy::EdgeInjective && out.contains(&r) {
            break;
        }
        out.push(r);
    }
    Word::Path(out)
}

pub fn reduced_diagram(graph: &ShadowedGraph, word: &Word, policy: DiagramPolicy) -> Word {
    diagram(&reduce(graph, &diagram(word, policy)), policy)
}

/// Whether `word` is a fixed point of the diagram map under `policy`.
pub fn is_diagram(word: &Word, policy: DiagramPolicy) -> bool {
    let refs = word.refs();
    match policy {
        DiagramPolicy::RunCollapse => refs.windows(2).all(|p| p[0] != p[1]),
        DiagramPolicy::EdgeInjective => {
            refs.iter().enumerate().all(|(i, r)| !refs[..i].contains(r))
        }
    }
}

/// A word is basic when the (reduced) diagram map fixes it.
pub fn is_basic(graph: &ShadowedGraph, word: &Word, policy: DiagramPolicy, reduced: bool) -> bool {
    if word.is_empty() {
        return false;
    }
    if reduced {
        reduced_diagram(graph, word, policy) == *word
    } else {
        diagram(word, policy) == *word
    }
}

/// Path lengths a diagram set can reach: `2|E|` under edge injectivity
/// regardless of `max_len`.
fn length_bound(graph: &ShadowedGraph, policy: DiagramPolicy, max_len: usize) -> usize {
    match policy {
        DiagramPolicy::EdgeInjective => graph.edge_ref_count(),
        DiagramPolicy::RunCollapse => max_len,
    }
}

/// D(G^). `max_len` only matters under run collapse.
pub fn enumerate_diagram_set(
    graph: &ShadowedGraph,
    policy: DiagramPolicy,
    max_len: usize,
) -> Result<DiagramSet> {
    let bound = length_bound(graph, policy, max_len);
    let elements = enumerate_with(graph, bound, |prefix, used, next| match policy {
        DiagramPolicy::EdgeInjective => used[next.index()] == 0,
        DiagramPolicy::RunCollapse => prefix.last() != Some(&next),
    })?;
    Ok(DiagramSet {
        elements,
        universe: DiagramUniverse::Diagrams,
        policy,
    })
}

/// D_r(G^). `max_len` only matters under run collapse.
pub fn enumerate_reduced_diagram_set(
    graph: &ShadowedGraph,
    policy: DiagramPolicy,
    max_len: usize,
) -> Result<DiagramSet> {
    let bound = length_bound(graph, policy, max_len);
    let elements = enumerate_with(graph, bound, |prefix, used, next| {
        let last = prefix.last();
        last != Some(&next.flip())
            && match policy {
                DiagramPolicy::EdgeInjective => used[next.index()] == 0,
                DiagramPolicy::RunCollapse => last != Some(&next),
            }
    })?;
    Ok(DiagramSet {
        elements,
        universe: DiagramUniverse::ReducedDiagrams,
        policy,
    })
}

/// The loop paths (source = target) of a diagram set.
pub fn loops_of(graph: &ShadowedGraph, set: &DiagramSet) -> WordSet {
    set.elements
        .iter()
        .filter(|w| w.is_loop(graph))
        .cloned()
        .collect()
}
