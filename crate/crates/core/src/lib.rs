//! Graph measures and graph integrals on the graph groupoid of a finite
//! directed graph.
//!
//! A [`DirectedGraph`] is read from a small text format and doubled into its
//! [`ShadowedGraph`]. Words over the shadowed graph form the free
//! semigroupoid; reducing them gives the graph groupoid, and the diagram maps
//! cut out the (reduced) diagram sets. Each of these carries a length
//! measure ([`MeasureSpace`]) against which [`SimpleFunction`]s are
//! integrated. Two graphs have equivalent measures exactly when their
//! shadowed graphs are colored-isomorphic, which
//! [`check_measure_equivalence`] decides.
//!
//! ```
//! use std::sync::Arc;
//! use graph_measure::{parse_graph, shadow, MeasureSpace, monomial_integral, int};
//!
//! let tree = parse_graph("vertex v1\nvertex v2\nvertex v3\nedge e1 v1 v2\nedge e2 v1 v3").unwrap();
//! let space = MeasureSpace::reduced(Arc::new(shadow(&tree)));
//! assert_eq!(space.total().unwrap(), int(8));
//! assert_eq!(monomial_integral(&space, 1).unwrap(), int(40));
//! ```

pub mod cli;
pub mod diagram;
pub mod equivalence;
pub mod errata;
pub mod error;
pub mod graph;
pub mod integral;
pub mod iso;
pub mod measure;
pub mod number;
pub mod word;

pub use diagram::{
    diagram, enumerate_diagram_set, enumerate_reduced_diagram_set, is_basic, is_diagram, loops_of,
    reduced_diagram, DiagramPolicy, DiagramSet, DiagramUniverse,
};
pub use equivalence::{
    check_measure_equivalence, induced_set_bijection, measure_fingerprint, EquivalenceOptions,
    Fingerprint, Verdict, VerdictKind,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{
    parse_graph, shadow, DirectedGraph, Edge, EdgeId, EdgeRef, GraphBuilder, Orientation,
    ShadowedGraph, VertexId,
};
pub use integral::{
    element_function, integrate, monomial_integral, parse_simple_function, polynomial_integral,
    trig_polynomial_integral, word_polynomial_integral, PolynomialIntegral, SimpleFunction,
};
pub use iso::{
    find_colored_shadow_isomorphism, find_digraph_isomorphism, find_shadow_isomorphism,
    GraphMapping,
};
pub use measure::{BoundednessReport, MeasureSpace, SpaceKind};
pub use number::{format_rational, int, parse_rational, Rational, Scalar};
pub use word::{
    concat, enumerate_words, format_word, format_word_set, inverse, parse_word, parse_word_set,
    power, reduce, Word, WordSet, WORD_LIMIT,
};
