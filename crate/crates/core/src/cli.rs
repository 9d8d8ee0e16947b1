//! The `graph-measure` command line.
//!
//! [`run`] takes the full argument vector and returns the exit status with
//! everything that would be printed, so it can be driven from tests.
//! Exit status 0 is success, 1 a malformed graph file, literal or flag, and
//! 2 a well-formed request the mathematics rejects.

use std::fmt::Write as _;
use std::fs;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::diagram::{enumerate_reduced_diagram_set, DiagramPolicy};
use crate::equivalence::{check_measure_equivalence, measure_fingerprint, EquivalenceOptions};
use crate::errata::{erratum_for, Erratum, Quantity};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, shadow, DirectedGraph};
use crate::integral::{
    element_function, integrate_real, monomial_integral, parse_simple_function,
    polynomial_integral, trig_polynomial_integral, word_polynomial_integral, PolynomialIntegral,
};
use crate::iso::{
    find_colored_shadow_isomorphism, find_digraph_isomorphism, find_shadow_isomorphism,
};
use crate::measure::{MeasureSpace, SpaceKind};
use crate::number::{format_rational, format_scalar, parse_rational, Rational};
use crate::word::{format_word, format_word_set, parse_word, parse_word_set};

#[derive(Debug, Parser)]
#[command(
    name = "graph-measure",
    version,
    about = "Graph measures and graph integrals of finite directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: Config,
}

#[derive(Debug, Args)]
struct Config {
    /// Measure space.
    #[arg(long, global = true, default_value = "reduced-diagram")]
    space: SpaceKind,
    /// Diagram map.
    #[arg(long, global = true, default_value = "edge-injective")]
    policy: DiagramPolicy,
    /// Longest path enumerated in infinite universes [default: 2|E|].
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sizes, reduced diagram census and total reduced measure.
    Info { graph: String },
    /// List the universe of the chosen space.
    Enumerate { graph: String },
    /// Measure of a set of words.
    Measure {
        graph: String,
        /// Set literal such as `{e1,e2^-1,v1}`.
        #[arg(long)]
        set: String,
    },
    /// Integral of a simple function, an element function or a polynomial.
    Integrate(IntegrateArgs),
    /// Decide measure equivalence of two graphs.
    Compare { left: String, right: String },
    /// Relabeling-invariant measure fingerprint.
    Fingerprint { graph: String },
}

#[derive(Debug, Args)]
struct IntegrateArgs {
    graph: String,
    /// Simple function literal such as `3*{e1,e2} + -2*{v1}`.
    #[arg(long)]
    set: Option<String>,
    /// ∫ g_n.
    #[arg(long, allow_hyphen_values = true)]
    monomial: Option<i64>,
    /// Coefficients a0,a1,...,aN of Σ a_n g_n.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Coefficients `a_-M,...,a_-1;a_0,...,a_N` of Σ a_n g_n.
    #[arg(long, allow_hyphen_values = true)]
    trig: Option<String>,
    /// Word w: alone integrates g_w, with --poly uses powers of w.
    #[arg(long)]
    element: Option<String>,
}

/// Exit status with captured standard output and error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.use_stderr() {
                true => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
                false => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_input_error() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(path: &str) -> Result<DirectedGraph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse_graph(&text).map_err(|e| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn space_for(config: &Config, graph: &DirectedGraph) -> MeasureSpace {
    let s = Arc::new(shadow(graph));
    let max_len = config.max_len.unwrap_or(s.edge_ref_count());
    MeasureSpace::new(s, config.space, config.policy, max_len)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn execute(cli: &Cli) -> Result<String> {
    let config = &cli.config;
    match &cli.command {
        Command::Info { graph } => info(config, graph),
        Command::Enumerate { graph } => enumerate(config, graph),
        Command::Measure { graph, set } => measure(config, graph, set),
        Command::Integrate(args) => integrate(config, args),
        Command::Compare { left, right } => compare(config, left, right),
        Command::Fingerprint { graph } => fingerprint(config, graph),
    }
}

fn space_header(space: &MeasureSpace) -> Vec<(&'static str, Value)> {
    vec![
        ("space", json!(space.kind().name())),
        ("policy", json!(space.policy().to_string())),
        ("max_len", json!(space.max_len())),
    ]
}

fn object(fields: Vec<(&'static str, Value)>) -> Value {
    Value::Object(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}

fn info(config: &Config, path: &str) -> Result<String> {
    let g = load(path)?;
    let space = space_for(config, &g);
    let s = space.graph();
    let reduced = enumerate_reduced_diagram_set(s, config.policy, space.max_len())?;
    let loops = reduced.elements.iter().filter(|w| w.is_loop(s)).count();
    let total = MeasureSpace::new(
        space.graph_arc().clone(),
        SpaceKind::ReducedDiagram,
        config.policy,
        space.max_len(),
    )
    .total()?;
    let fields = vec![
        ("vertices", json!(g.vertex_count())),
        ("edges", json!(g.edge_count())),
        ("edge_refs", json!(s.edge_ref_count())),
        ("policy", json!(config.policy.to_string())),
        ("max_len", json!(space.max_len())),
        ("reduced_diagrams", json!(reduced.len())),
        ("reduced_loops", json!(loops)),
        ("reduced_total", json!(format_rational(&total))),
    ];
    if config.json {
        return Ok(to_json(&object(fields)));
    }
    let mut out = String::new();
    for (k, v) in fields {
        let v = v
            .as_str()
            .map(str::to_string)
            .unwrap_or_else(|| v.to_string());
        writeln!(out, "{k}: {v}").unwrap();
    }
    Ok(out)
}

fn enumerate(config: &Config, path: &str) -> Result<String> {
    let g = load(path)?;
    let space = space_for(config, &g);
    let universe = space.universe()?;
    let words: Vec<String> = universe
        .iter()
        .map(|w| format_word(space.graph(), w))
        .collect();
    if config.json {
        let mut fields = space_header(&space);
        fields.push(("count", json!(words.len())));
        fields.push(("elements", json!(words)));
        return Ok(to_json(&object(fields)));
    }
    let mut out = String::new();
    for w in &words {
        writeln!(out, "{w}").unwrap();
    }
    writeln!(out, "count: {}", words.len()).unwrap();
    Ok(out)
}

fn measure(config: &Config, path: &str, literal: &str) -> Result<String> {
    let g = load(path)?;
    let space = space_for(config, &g);
    let set = parse_word_set(space.graph(), literal)?;
    for w in &set {
        space.check(w)?;
    }
    let value = space.measure(&set)?;
    if config.json {
        let mut fields = space_header(&space);
        fields.push(("set", json!(format_word_set(space.graph(), &set))));
        fields.push(("measure", json!(format_rational(&value))));
        return Ok(to_json(&object(fields)));
    }
    Ok(format!("{}\n", format_rational(&value)))
}

fn parse_coefficients(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            parse_rational(t)
                .ok_or_else(|| Error::Literal(format!("bad coefficient `{}`", t.trim())))
        })
        .collect()
}

/// `a_-M,...,a_-1;a_0,...,a_N` into (a_-1, a_-2, ...) and (a_0, a_1, ...).
fn parse_trig(text: &str) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let (neg, nonneg) = text.split_once(';').ok_or_else(|| {
        Error::Literal(format!(
            "expected `a_-M,...,a_-1;a_0,...,a_N`, got `{text}`"
        ))
    })?;
    let mut negative = parse_coefficients(neg)?;
    negative.reverse();
    Ok((negative, parse_coefficients(nonneg)?))
}

struct IntegralReport {
    fields: Vec<(&'static str, Value)>,
    value: Rational,
    closed_form: Option<Rational>,
    erratum: Option<Erratum>,
}

impl IntegralReport {
    fn polynomial(kind: &'static str, p: PolynomialIntegral) -> Self {
        IntegralReport {
            fields: vec![("kind", json!(kind))],
            value: p.direct,
            closed_form: Some(p.closed_form),
            erratum: None,
        }
    }
}

fn integrate(config: &Config, args: &IntegrateArgs) -> Result<String> {
    let g = load(&args.graph)?;
    let space = space_for(config, &g);
    let element = match &args.element {
        Some(text) => Some(parse_word(space.graph(), text)?),
        None => None,
    };

    let mut report = if let Some(text) = &args.set {
        if element.is_some() {
            return Err(Error::Literal(
                "--element does not combine with --set".into(),
            ));
        }
        let f = parse_simple_function(&space, text)?;
        let value = f.integrate()?;
        if !value.im.is_zero() {
            return Ok(emit_complex(
                config,
                &space,
                &f.to_literal(),
                &format_scalar(&value),
            ));
        }
        let mut r = IntegralReport {
            fields: vec![("kind", json!("simple"))],
            value: value.re,
            closed_form: None,
            erratum: None,
        };
        r.fields.push(("function", json!(f.to_literal())));
        r
    } else if let Some(n) = args.monomial {
        if element.is_some() {
            return Err(Error::Literal(
                "--element does not combine with --monomial".into(),
            ));
        }
        let value = monomial_integral(&space, n)?;
        let erratum = erratum_for(&space, Quantity::Monomial(n), &value);
        IntegralReport {
            fields: vec![("kind", json!("monomial")), ("n", json!(n))],
            value,
            closed_form: None,
            erratum,
        }
    } else if let Some(text) = &args.poly {
        let coeffs = parse_coefficients(text)?;
        match &element {
            Some(w) => {
                let mut r = IntegralReport::polynomial(
                    "word-polynomial",
                    word_polynomial_integral(&space, w, &coeffs)?,
                );
                r.fields
                    .push(("element", json!(format_word(space.graph(), w))));
                r
            }
            None => {
                let mut r =
                    IntegralReport::polynomial("polynomial", polynomial_integral(&space, &coeffs)?);
                r.erratum = erratum_for(&space, Quantity::Polynomial(&coeffs), &r.value);
                r
            }
        }
    } else if let Some(text) = &args.trig {
        if element.is_some() {
            return Err(Error::Literal(
                "--element does not combine with --trig".into(),
            ));
        }
        let (negative, nonnegative) = parse_trig(text)?;
        let mut r = IntegralReport::polynomial(
            "trig-polynomial",
            trig_polynomial_integral(&space, &negative, &nonnegative)?,
        );
        r.erratum = erratum_for(
            &space,
            Quantity::Trig {
                negative: &negative,
                nonnegative: &nonnegative,
            },
            &r.value,
        );
        r
    } else if let Some(w) = &element {
        let value = integrate_real(&element_function(&space, w)?)?;
        let erratum = erratum_for(&space, Quantity::Element(w), &value);
        IntegralReport {
            fields: vec![
                ("kind", json!("element")),
                ("element", json!(format_word(space.graph(), w))),
            ],
            value,
            closed_form: None,
            erratum,
        }
    } else {
        return Err(Error::Literal(
            "one of --set, --monomial, --poly, --trig, --element is required".into(),
        ));
    };

    if config.json {
        let mut fields = space_header(&space);
        fields.append(&mut report.fields);
        fields.push(("value", json!(format_rational(&report.value))));
        if let Some(c) = &report.closed_form {
            fields.push(("closed_form", json!(format_rational(c))));
            fields.push(("agrees", json!(*c == report.value)));
        }
        if let Some(e) = &report.erratum {
            fields.push((
                "paper_errata",
                serde_json::to_value(e).expect("erratum serializes"),
            ));
        }
        return Ok(to_json(&object(fields)));
    }
    let mut out = format!("{}\n", format_rational(&report.value));
    if let Some(c) = &report.closed_form {
        writeln!(out, "closed_form: {}", format_rational(c)).unwrap();
    }
    if let Some(e) = &report.erratum {
        writeln!(
            out,
            "paper_errata: reported {} ({})",
            format_rational(&e.reported),
            e.note
        )
        .unwrap();
    }
    Ok(out)
}

fn emit_complex(config: &Config, space: &MeasureSpace, function: &str, value: &str) -> String {
    if config.json {
        let mut fields = space_header(space);
        fields.push(("kind", json!("simple")));
        fields.push(("function", json!(function)));
        fields.push(("value", json!(value)));
        return to_json(&object(fields));
    }
    format!("{value}\n")
}

fn compare(config: &Config, left: &str, right: &str) -> Result<String> {
    let (g1, g2) = (load(left)?, load(right)?);
    let options = EquivalenceOptions {
        max_len: config.max_len.unwrap_or(3),
        seed: config.seed,
        random_sets: 100,
        policy: config.policy,
    };
    let verdict = check_measure_equivalence(&g1, &g2, &options)?;
    if config.json {
        return Ok(to_json(&verdict));
    }
    let mut out = String::new();
    writeln!(
        out,
        "verdict: {}",
        if verdict.is_equivalent() {
            "equivalent"
        } else {
            "not-equivalent"
        }
    )
    .unwrap();
    if let Some(w) = &verdict.witness {
        for (a, b) in &w.vertex_map {
            writeln!(out, "vertex {a} -> {b}").unwrap();
        }
        for (a, b) in &w.edge_map {
            writeln!(out, "edge {a} -> {b}").unwrap();
        }
    }
    if let Some(d) = &verdict.distinguisher {
        writeln!(out, "distinguisher: {}: {} vs {}", d.field, d.left, d.right).unwrap();
    }
    writeln!(out, "checked_sets: {}", verdict.checked_sets).unwrap();
    let (s1, s2) = (shadow(&g1), shadow(&g2));
    let presence = |found: bool| if found { "present" } else { "absent" };
    writeln!(
        out,
        "digraph isomorphism: {}",
        presence(find_digraph_isomorphism(&g1, &g2).is_some())
    )
    .unwrap();
    writeln!(
        out,
        "shadow isomorphism: {}",
        presence(find_shadow_isomorphism(&s1, &s2, false).is_some())
    )
    .unwrap();
    writeln!(
        out,
        "colored shadow isomorphism: {}",
        presence(find_colored_shadow_isomorphism(&s1, &s2).is_some())
    )
    .unwrap();
    Ok(out)
}

fn fingerprint(config: &Config, path: &str) -> Result<String> {
    let g = load(path)?;
    let f = measure_fingerprint(&g)?;
    if config.json {
        return Ok(to_json(&f));
    }
    let rats = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    writeln!(out, "vertices: {}", f.vertices).unwrap();
    writeln!(out, "edges: {}", f.edges).unwrap();
    writeln!(
        out,
        "total_reduced_measure: {}",
        format_rational(&f.total_reduced_measure)
    )
    .unwrap();
    let hist: Vec<String> = f
        .length_histogram
        .iter()
        .map(|(l, c)| format!("{l}:{c}"))
        .collect();
    writeln!(out, "length_histogram: {}", hist.join(",")).unwrap();
    writeln!(out, "element_integrals: {}", rats(&f.element_integrals)).unwrap();
    let degrees: Vec<String> = f
        .degree_pairs
        .iter()
        .map(|(o, i)| format!("{o}/{i}"))
        .collect();
    writeln!(out, "degree_pairs: {}", degrees.join(",")).unwrap();
    Ok(out)
}
