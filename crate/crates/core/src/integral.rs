//! Simple functions on a measure space and their graph integrals.
//!
//! A simple function is a finite sum `Σ a_n · 1_{S_n}`; its integral is
//! `Σ a_n · μ(S_n)`. Every word `w` of the universe induces the element
//! function `g_w`, the indicator of the diagrams that can follow `w` (source
//! at `w`'s target) or precede it (target at `w`'s source). The monomials
//! `g_n(x) = g_{δ^r(x^n)}`, polynomials and trigonometric polynomials are
//! built from these.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::diagram::{diagram, reduced_diagram};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::measure::{MeasureSpace, SpaceKind};
use crate::number::{format_scalar, parse_scalar, Rational, Scalar};
use crate::word::{format_word_set, parse_word_set, power, reduce, Word, WordSet};

#[derive(Debug, Clone, PartialEq)]
pub struct SimpleFunction {
    space: MeasureSpace,
    terms: Vec<(Scalar, WordSet)>,
}

impl SimpleFunction {
    pub fn new(space: &MeasureSpace, terms: Vec<(Scalar, WordSet)>) -> Result<Self> {
        for (_, set) in &terms {
            for w in set {
                space.check(w)?;
            }
        }
        Ok(SimpleFunction {
            space: space.clone(),
            terms,
        })
    }

    pub fn zero(space: &MeasureSpace) -> Self {
        SimpleFunction {
            space: space.clone(),
            terms: Vec::new(),
        }
    }

    pub fn indicator(space: &MeasureSpace, set: WordSet) -> Result<Self> {
        SimpleFunction::new(space, vec![(Scalar::one(), set)])
    }

    /// `value · 1` over the enumerated universe.
    pub fn constant(space: &MeasureSpace, value: Scalar) -> Result<Self> {
        let universe = space.universe()?;
        Ok(SimpleFunction {
            space: space.clone(),
            terms: vec![(value, (*universe).clone())],
        })
    }

    pub fn space(&self) -> &MeasureSpace {
        &self.space
    }

    pub fn terms(&self) -> &[(Scalar, WordSet)] {
        &self.terms
    }

    pub fn value_at(&self, word: &Word) -> Scalar {
        self.terms
            .iter()
            .filter(|(_, s)| s.contains(word))
            .map(|(a, _)| a.clone())
            .sum()
    }

    pub fn integrate(&self) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (a, set) in &self.terms {
            let m = self.space.measure(set)?;
            total += Scalar::new(&a.re * &m, &a.im * &m);
        }
        Ok(total)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(a, s)| (a * factor, s.clone()))
            .collect();
        SimpleFunction {
            space: self.space.clone(),
            terms,
        }
    }

    pub fn add(&self, other: &SimpleFunction) -> Result<Self> {
        self.same_space(other)?;
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(SimpleFunction {
            space: self.space.clone(),
            terms,
        })
    }

    /// Pointwise product, expanded with `1_S · 1_T = 1_{S∩T}`.
    pub fn multiply(&self, other: &SimpleFunction) -> Result<Self> {
        self.same_space(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, s) in &self.terms {
            for (b, t) in &other.terms {
                let meet: WordSet = s.intersection(t).cloned().collect();
                if !meet.is_empty() {
                    terms.push((a * b, meet));
                }
            }
        }
        Ok(SimpleFunction {
            space: self.space.clone(),
            terms,
        })
    }

    /// Disjoint refinement: one term per distinct nonzero value, sets in
    /// word order.
    pub fn canonical(&self) -> Vec<(Scalar, WordSet)> {
        let mut groups: Vec<(Scalar, WordSet)> = Vec::new();
        let domain: WordSet = self
            .terms
            .iter()
            .flat_map(|(_, s)| s.iter().cloned())
            .collect();
        for w in domain {
            let value = self.value_at(&w);
            if value.is_zero() {
                continue;
            }
            match groups.iter_mut().find(|(v, _)| *v == value) {
                Some((_, set)) => {
                    set.insert(w);
                }
                None => groups.push((value, WordSet::from([w]))),
            }
        }
        groups
    }

    pub fn support(&self) -> WordSet {
        self.canonical().into_iter().flat_map(|(_, s)| s).collect()
    }

    /// `3*{e1,e2} + -2*{v1}` form.
    pub fn to_literal(&self) -> String {
        if self.terms.is_empty() {
            return "0*{}".to_string();
        }
        let g = self.space.graph();
        self.terms
            .iter()
            .map(|(a, s)| format!("{}*{}", format_scalar(a), format_word_set(g, s)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn same_space(&self, other: &SimpleFunction) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }
}

pub fn integrate(space: &MeasureSpace, f: &SimpleFunction) -> Result<Scalar> {
    if f.space() != space {
        return Err(Error::SpaceMismatch);
    }
    f.integrate()
}

pub fn multiply(f: &SimpleFunction, g: &SimpleFunction) -> Result<SimpleFunction> {
    f.multiply(g)
}

pub fn support_of(f: &SimpleFunction) -> WordSet {
    f.support()
}

/// Parses `3*{e1,e2} + -2*{v1}`. A bare set has coefficient 1; a
/// coefficient is a rational or a `(re,im)` pair.
pub fn parse_simple_function(space: &MeasureSpace, text: &str) -> Result<SimpleFunction> {
    let mut terms = Vec::new();
    for term in split_terms(text) {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Literal(format!("empty term in `{text}`")));
        }
        let (coef, set) = match term.find('{') {
            Some(0) => (Scalar::one(), term),
            Some(i) => {
                let head = term[..i].trim();
                let head = head.strip_suffix('*').ok_or_else(|| {
                    Error::Literal(format!("expected `*` before set in `{term}`"))
                })?;
                let coef = parse_scalar(head)
                    .ok_or_else(|| Error::Literal(format!("bad coefficient `{head}`")))?;
                (coef, &term[i..])
            }
            None => return Err(Error::Literal(format!("term `{term}` has no set"))),
        };
        terms.push((coef, parse_word_set(space.graph(), set)?));
    }
    SimpleFunction::new(space, terms)
}

/// Splits on `+` outside braces and parentheses.
fn split_terms(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// The set where `g_w` is 1: universe elements whose source is `w`'s
/// target, or whose target is `w`'s source.
fn element_support(space: &MeasureSpace, source: VertexId, target: VertexId) -> Result<WordSet> {
    let g = space.graph();
    Ok(space
        .universe()?
        .iter()
        .filter(|u| u.source(g) == Some(target) || u.target(g) == Some(source))
        .cloned()
        .collect())
}

/// `g_w` as an indicator function.
pub fn element_function(space: &MeasureSpace, word: &Word) -> Result<SimpleFunction> {
    if word.is_empty() {
        return Err(Error::Usage(
            "the empty word has no element function".into(),
        ));
    }
    space.check(word)?;
    let g = space.graph();
    let (s, t) = (word.source(g).unwrap(), word.target(g).unwrap());
    SimpleFunction::indicator(space, element_support(space, s, t)?)
}

/// Maps a word into the space's universe: δ^r, δ, reduction or nothing.
pub fn project(space: &MeasureSpace, word: &Word) -> Word {
    match space.kind() {
        SpaceKind::Energy => word.clone(),
        SpaceKind::Groupoid => reduce(space.graph(), word),
        SpaceKind::Diagram => diagram(word, space.policy()),
        SpaceKind::ReducedDiagram => reduced_diagram(space.graph(), word, space.policy()),
    }
}

/// Integrals of element functions, memoized by endpoints (g_w depends on
/// nothing else).
struct ElementIntegrals<'a> {
    space: &'a MeasureSpace,
    cache: HashMap<(VertexId, VertexId), Rational>,
}

impl<'a> ElementIntegrals<'a> {
    fn new(space: &'a MeasureSpace) -> Self {
        ElementIntegrals {
            space,
            cache: HashMap::new(),
        }
    }

    /// ∫ g_w, or 0 for the empty word.
    fn of(&mut self, word: &Word) -> Result<Rational> {
        let g = self.space.graph();
        let (Some(s), Some(t)) = (word.source(g), word.target(g)) else {
            return Ok(Rational::zero());
        };
        if let Some(v) = self.cache.get(&(s, t)) {
            return Ok(v.clone());
        }
        let set = element_support(self.space, s, t)?;
        let value = self.space.measure(&set)?;
        self.cache.insert((s, t), value.clone());
        Ok(value)
    }
}

/// ∫ g_n: the sum of ∫ g_{δ^r(x^n)} over the universe, skipping x with
/// x^n = ∅.
pub fn monomial_integral(space: &MeasureSpace, n: i64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Usage(
            "g_0 is the constant function; use the polynomial constant term".into(),
        ));
    }
    let mut integrals = ElementIntegrals::new(space);
    let mut total = Rational::zero();
    for x in space.universe()?.iter() {
        let p = power(space.graph(), x, n)?;
        if p.is_empty() {
            continue;
        }
        total += integrals.of(&project(space, &p))?;
    }
    Ok(total)
}

/// The monomial support: universe elements x with x^n ≠ ∅.
pub fn monomial_support(space: &MeasureSpace, n: i64) -> Result<WordSet> {
    if n == 0 {
        return Err(Error::Usage("g_0 is the constant function".into()));
    }
    let g = space.graph();
    let mut out = WordSet::new();
    for x in space.universe()?.iter() {
        if !power(g, x, n)?.is_empty() {
            out.insert(x.clone());
        }
    }
    Ok(out)
}

/// A polynomial-type integral computed two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialIntegral {
    /// From ∫1, ∫g_1 and ∫g_2 alone.
    pub closed_form: Rational,
    /// Term by term over every monomial.
    pub direct: Rational,
}

impl PolynomialIntegral {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.direct
    }
}

/// `coefficients[k]` multiplies g_k, with g_0 = 1.
pub fn polynomial_integral(
    space: &MeasureSpace,
    coefficients: &[Rational],
) -> Result<PolynomialIntegral> {
    trig_polynomial_integral(space, &[], coefficients)
}

/// `negative[k]` multiplies g_{-(k+1)}; `nonnegative[k]` multiplies g_k.
pub fn trig_polynomial_integral(
    space: &MeasureSpace,
    negative: &[Rational],
    nonnegative: &[Rational],
) -> Result<PolynomialIntegral> {
    let zero = Rational::zero();
    let at = |coeffs: &[Rational], k: usize| coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
    let a0 = at(nonnegative, 0);
    let constant = if a0.is_zero() {
        zero.clone()
    } else {
        &a0 * space.total()?
    };

    let mut direct = constant.clone();
    for (k, a) in nonnegative.iter().enumerate().skip(1) {
        if !a.is_zero() {
            direct += a * monomial_integral(space, k as i64)?;
        }
    }
    for (k, a) in negative.iter().enumerate() {
        if !a.is_zero() {
            direct += a * monomial_integral(space, -(k as i64 + 1))?;
        }
    }

    let linear = at(nonnegative, 1) + at(negative, 0);
    let higher: Rational = nonnegative
        .iter()
        .skip(2)
        .chain(negative.iter().skip(1))
        .sum();
    let mut closed_form = constant;
    if !linear.is_zero() {
        closed_form += linear * monomial_integral(space, 1)?;
    }
    if !higher.is_zero() {
        closed_form += higher * monomial_integral(space, 2)?;
    }
    Ok(PolynomialIntegral {
        closed_form,
        direct,
    })
}

/// `Σ a_n ∫ g_{δ^r(w^n)}` for a single word, with g_{w^0} = 1 and empty
/// powers contributing nothing. The closed form is `a_0 ∫1 + a_1 ∫g_w` for a
/// non-loop path and `a_0 ∫1 + (Σ_{n≥1} a_n) ∫g_w` for loops and vertices.
pub fn word_polynomial_integral(
    space: &MeasureSpace,
    word: &Word,
    coefficients: &[Rational],
) -> Result<PolynomialIntegral> {
    space.check(word)?;
    if word.is_empty() {
        return Err(Error::Usage("the empty word has no powers".into()));
    }
    let mut integrals = ElementIntegrals::new(space);
    let a0 = coefficients.first().cloned().unwrap_or_else(Rational::zero);
    let constant = if a0.is_zero() {
        Rational::zero()
    } else {
        &a0 * space.total()?
    };

    let mut direct = constant.clone();
    for (n, a) in coefficients.iter().enumerate().skip(1) {
        let p = power(space.graph(), word, n as i64)?;
        direct += a * integrals.of(&project(space, &p))?;
    }

    let own = integrals.of(word)?;
    let factor: Rational = if word.is_path() && !word.is_loop(space.graph()) {
        coefficients.get(1).cloned().unwrap_or_else(Rational::zero)
    } else {
        coefficients.iter().skip(1).sum()
    };
    Ok(PolynomialIntegral {
        closed_form: constant + factor * own,
        direct,
    })
}

/// Convenience for real-valued callers.
pub fn integrate_real(f: &SimpleFunction) -> Result<Rational> {
    let v = f.integrate()?;
    if v.im.is_zero() {
        Ok(v.re)
    } else {
        Err(Error::Usage("integral is not real".into()))
    }
}
