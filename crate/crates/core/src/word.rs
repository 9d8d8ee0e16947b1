//! Words of the free semigroupoid over a shadowed graph: the empty word,
//! vertices, and admissible finite paths of [`EdgeRef`]s.
//!
//! Words do not carry their graph; every operation that needs incidence
//! takes the [`ShadowedGraph`] explicitly. [`Word::validate`] checks that a
//! word built elsewhere actually lives over a given graph.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Orientation, ShadowedGraph, VertexId};

/// Upper bound on the number of words any enumeration may produce.
pub const WORD_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    /// The absorbing word produced by inadmissible products.
    Empty,
    Vertex(VertexId),
    /// Nonempty and admissible.
    Path(Vec<EdgeRef>),
}

pub type WordSet = BTreeSet<Word>;

impl Ord for Word {
    /// Empty, then vertices by id, then paths in shortlex order.
    fn cmp(&self, other: &Self) -> Ordering {
        use Word::*;
        match (self, other) {
            (Empty, Empty) => Ordering::Equal,
            (Empty, _) => Ordering::Less,
            (_, Empty) => Ordering::Greater,
            (Vertex(a), Vertex(b)) => a.cmp(b),
            (Vertex(_), Path(_)) => Ordering::Less,
            (Path(_), Vertex(_)) => Ordering::Greater,
            (Path(a), Path(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    /// Builds a validated path word.
    pub fn path(graph: &ShadowedGraph, refs: Vec<EdgeRef>) -> Result<Word> {
        if refs.is_empty() {
            return Err(Error::Validation("a path needs at least one edge".into()));
        }
        let w = Word::Path(refs);
        w.validate(graph)?;
        Ok(w)
    }

    pub fn edge(r: EdgeRef) -> Word {
        Word::Path(vec![r])
    }

    /// Checks ids are in range and consecutive EdgeRefs are admissible.
    pub fn validate(&self, graph: &ShadowedGraph) -> Result<()> {
        match self {
            Word::Empty => Ok(()),
            Word::Vertex(v) if v.0 < graph.vertex_count() => Ok(()),
            Word::Vertex(v) => Err(Error::Validation(format!(
                "vertex index {} is not in this graph",
                v.0
            ))),
            Word::Path(refs) => {
                if refs.is_empty() {
                    return Err(Error::Validation(
                        "empty path; use a vertex or the empty word".into(),
                    ));
                }
                if let Some(r) = refs.iter().find(|r| r.edge.0 >= graph.base().edge_count()) {
                    return Err(Error::Validation(format!(
                        "edge index {} is not in this graph",
                        r.edge.0
                    )));
                }
                for pair in refs.windows(2) {
                    if graph.target(pair[0]) != graph.source(pair[1]) {
                        return Err(Error::Validation(format!(
                            "`{}` cannot be followed by `{}`",
                            graph.ref_literal(pair[0]),
                            graph.ref_literal(pair[1])
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Word::Empty)
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Word::Vertex(_))
    }

    pub fn is_path(&self) -> bool {
        matches!(self, Word::Path(_))
    }

    /// Vertices have length 0, as does the empty word.
    pub fn len(&self) -> usize {
        match self {
            Word::Path(refs) => refs.len(),
            _ => 0,
        }
    }

    pub fn refs(&self) -> &[EdgeRef] {
        match self {
            Word::Path(refs) => refs,
            _ => &[],
        }
    }

    pub fn source(&self, graph: &ShadowedGraph) -> Option<VertexId> {
        match self {
            Word::Empty => None,
            Word::Vertex(v) => Some(*v),
            Word::Path(refs) => Some(graph.source(refs[0])),
        }
    }

    pub fn target(&self, graph: &ShadowedGraph) -> Option<VertexId> {
        match self {
            Word::Empty => None,
            Word::Vertex(v) => Some(*v),
            Word::Path(refs) => Some(graph.target(refs[refs.len() - 1])),
        }
    }

    pub fn is_loop(&self, graph: &ShadowedGraph) -> bool {
        self.is_path() && self.source(graph) == self.target(graph)
    }

    pub fn is_reduced(&self) -> bool {
        self.refs().windows(2).all(|p| p[1] != p[0].flip())
    }
}

/// Admissible concatenation without reduction; ∅ when the endpoints do not
/// meet. A vertex is a unit at its own location.
pub fn concat(graph: &ShadowedGraph, left: &Word, right: &Word) -> Word {
    use Word::*;
    match (left, right) {
        (Empty, _) | (_, Empty) => Empty,
        (Vertex(a), Vertex(b)) => {
            if a == b {
                Vertex(*a)
            } else {
                Empty
            }
        }
        (Vertex(v), p @ Path(_)) => {
            if p.source(graph) == Some(*v) {
                p.clone()
            } else {
                Empty
            }
        }
        (p @ Path(_), Vertex(v)) => {
            if p.target(graph) == Some(*v) {
                p.clone()
            } else {
                Empty
            }
        }
        (Path(a), Path(b)) => {
            if graph.target(a[a.len() - 1]) == graph.source(b[0]) {
                Path(a.iter().chain(b).copied().collect())
            } else {
                Empty
            }
        }
    }
}

/// Reverses the path and flips every orientation. Vertices are their own
/// inverses; the empty word has none.
pub fn inverse(word: &Word) -> Result<Word> {
    match word {
        Word::Empty => Err(Error::Usage("the empty word has no inverse".into())),
        Word::Vertex(v) => Ok(Word::Vertex(*v)),
        Word::Path(refs) => Ok(Word::Path(refs.iter().rev().map(|r| r.flip()).collect())),
    }
}

/// Groupoid normal form: cancels adjacent `r r^-1` pairs in one stack pass.
/// A path that cancels completely becomes its source vertex.
pub fn reduce(graph: &ShadowedGraph, word: &Word) -> Word {
    let Word::Path(refs) = word else {
        return word.clone();
    };
    let mut stack: Vec<EdgeRef> = Vec::with_capacity(refs.len());
    for &r in refs {
        if stack.last() == Some(&r.flip()) {
            stack.pop();
        } else {
            stack.push(r);
        }
    }
    if stack.is_empty() {
        Word::Vertex(graph.source(refs[0]))
    } else {
        Word::Path(stack)
    }
}

/// `word` concatenated with itself |n| times (its inverse for n < 0),
/// without reduction. Beyond |n| = 1 only vertices and loops have nonempty
/// powers.
pub fn power(graph: &ShadowedGraph, word: &Word, n: i64) -> Result<Word> {
    if n == 0 {
        return Err(Error::Usage(
            "power 0 is not a word; the constant function stands in for it".into(),
        ));
    }
    match word {
        Word::Empty => Ok(Word::Empty),
        Word::Vertex(v) => Ok(Word::Vertex(*v)),
        Word::Path(_) => {
            if n.abs() > 1 && !word.is_loop(graph) {
                return Ok(Word::Empty);
            }
            let base = if n < 0 { inverse(word)? } else { word.clone() };
            let reps = n.unsigned_abs() as usize;
            Ok(Word::Path(base.refs().repeat(reps)))
        }
    }
}

/// All vertices plus every admissible path of length `1..=max_len` whose
/// extension steps are all accepted by `admit(prefix, used, next)`. `used`
/// counts how often each EdgeRef index occurs in the prefix.
pub(crate) fn enumerate_with<F>(
    graph: &ShadowedGraph,
    max_len: usize,
    mut admit: F,
) -> Result<WordSet>
where
    F: FnMut(&[EdgeRef], &[u32], EdgeRef) -> bool,
{
    let mut out: WordSet = graph.base().vertex_ids().map(Word::Vertex).collect();
    let mut prefix = Vec::with_capacity(max_len);
    let mut used = vec![0u32; graph.edge_ref_count()];
    for v in graph.base().vertex_ids() {
        extend(
            graph,
            v,
            max_len,
            &mut prefix,
            &mut used,
            &mut admit,
            &mut out,
        )?;
    }
    Ok(out)
}

fn extend<F>(
    graph: &ShadowedGraph,
    at: VertexId,
    max_len: usize,
    prefix: &mut Vec<EdgeRef>,
    used: &mut [u32],
    admit: &mut F,
    out: &mut WordSet,
) -> Result<()>
where
    F: FnMut(&[EdgeRef], &[u32], EdgeRef) -> bool,
{
    if prefix.len() == max_len {
        return Ok(());
    }
    for &next in graph.outgoing(at) {
        if !admit(prefix, used, next) {
            continue;
        }
        prefix.push(next);
        used[next.index()] += 1;
        out.insert(Word::Path(prefix.clone()));
        if out.len() > WORD_LIMIT {
            return Err(Error::EnumerationLimit { limit: WORD_LIMIT });
        }
        extend(graph, graph.target(next), max_len, prefix, used, admit, out)?;
        used[next.index()] -= 1;
        prefix.pop();
    }
    Ok(())
}

/// Finite window onto the free semigroupoid (or, with `reduced_only`, the
/// graph groupoid): vertices and paths up to `max_len`.
pub fn enumerate_words(
    graph: &ShadowedGraph,
    max_len: usize,
    reduced_only: bool,
) -> Result<WordSet> {
    enumerate_with(graph, max_len, |prefix, _, next| {
        !reduced_only || prefix.last() != Some(&next.flip())
    })
}

/// Parses `v1`, `e1.e2^-1.e3`, or `0` for the empty word.
pub fn parse_word(graph: &ShadowedGraph, text: &str) -> Result<Word> {
    let text = text.trim();
    if text == "0" {
        return Ok(Word::Empty);
    }
    let base = graph.base();
    if let Some(v) = base.vertex_id(text) {
        return Ok(Word::Vertex(v));
    }
    let mut refs = Vec::new();
    for token in text.split('.') {
        let token = token.trim();
        let (name, orientation) = match token.strip_suffix("^-1") {
            Some(name) => (name, Orientation::Shadow),
            None => (token, Orientation::Forward),
        };
        let edge = base
            .edge_id(name)
            .ok_or_else(|| Error::Literal(format!("`{token}` is not an edge of this graph")))?;
        refs.push(EdgeRef { edge, orientation });
    }
    let word = Word::Path(refs);
    word.validate(graph)
        .map_err(|e| Error::Literal(format!("`{text}`: {e}")))?;
    Ok(word)
}

pub fn format_word(graph: &ShadowedGraph, word: &Word) -> String {
    match word {
        Word::Empty => "0".to_string(),
        Word::Vertex(v) => graph.base().vertex_name(*v).to_string(),
        Word::Path(refs) => refs
            .iter()
            .map(|r| graph.ref_literal(*r))
            .collect::<Vec<_>>()
            .join("."),
    }
}

/// Parses `{w1, w2, ...}`; `{}` is the empty set.
pub fn parse_word_set(graph: &ShadowedGraph, text: &str) -> Result<WordSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| {
            Error::Literal(format!("set literal must be wrapped in braces: `{text}`"))
        })?;
    if inner.trim().is_empty() {
        return Ok(WordSet::new());
    }
    inner.split(',').map(|w| parse_word(graph, w)).collect()
}

pub fn format_word_set(graph: &ShadowedGraph, set: &WordSet) -> String {
    let words: Vec<String> = set.iter().map(|w| format_word(graph, w)).collect();
    format!("{{{}}}", words.join(","))
}
