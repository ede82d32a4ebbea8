//! The *-algebra of a graph groupoid: finitely supported complex-rational
//! combinations of groupoid words.
//!
//! An [`AlgebraElement`] is a finite formal sum `Σ t_w · w` over nonzero
//! words.  The empty word never appears as a key — it is the algebra's
//! zero, so any product term that reduces to `∅` simply vanishes from the
//! sum.  Coefficients are exact complex rationals ([`CRat`]); every
//! algebraic law verified in this crate (associativity, the adjoint
//! anti-homomorphism, the conditional expectation's module property, ...)
//! is checked with equality, not a tolerance.
//!
//! The adjoint conjugates coefficients and inverts words:
//! `(Σ t_w w)* = Σ conj(t_w) w⁻¹`.
//!
//! The *diagonal* of the algebra is spanned by the vertex units.  The
//! conditional expectation [`expectation`] projects onto it by keeping
//! exactly the vertex-supported terms and discarding all path terms; it
//! is idempotent and a bimodule map over the diagonal.
//!
//! The inner product treats distinct words as orthonormal:
//! `⟨Σ s_w w, Σ t_w w⟩ = Σ conj(s_w) t_w`, conjugate-linear in the first
//! argument.  Positivity is exact: `⟨T, T⟩` is a nonnegative rational,
//! zero iff `T = 0`.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::CRat;
use crate::graph::{DirectedGraph, VertexId};
use crate::word::{self, Word};

/// A finitely supported formal sum of groupoid words with exact complex
/// coefficients.  Keys are nonzero, non-empty words; the map order is the
/// canonical word order, so iteration and serialization are
/// deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, CRat>,
}

/// An element supported on vertex units only — the diagonal subalgebra.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiagonalElement {
    terms: BTreeMap<VertexId, CRat>,
}

impl AlgebraElement {
    /// The zero element (empty support).
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    /// Builds an element from `(word, coefficient)` pairs.  Repeated
    /// words accumulate; zero coefficients are dropped; the empty word is
    /// rejected — it cannot carry a coefficient.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, CRat)>,
    {
        let mut out = AlgebraElement::zero();
        for (w, c) in terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    /// A single word with coefficient one.
    pub fn word(w: Word) -> Result<Self> {
        AlgebraElement::from_terms([(w, CRat::one())])
    }

    /// The multiplicative unit: the sum of every vertex unit of `g` with
    /// coefficient one.
    pub fn unit(g: &DirectedGraph) -> Self {
        let mut out = AlgebraElement::zero();
        for v in g.vertices() {
            out.terms.insert(Word::Vertex(v), CRat::one());
        }
        out
    }

    /// Adds `c · w` into the sum, keeping the support free of zeros and
    /// of the empty word.
    pub fn add_term(&mut self, w: Word, c: CRat) -> Result<()> {
        if w.is_empty_word() {
            return Err(Error::EmptyWordCoefficient);
        }
        if c.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
        Ok(())
    }

    /// The coefficient of `w` (zero when absent).
    pub fn coefficient(&self, w: &Word) -> CRat {
        self.terms.get(w).cloned().unwrap_or_else(CRat::zero)
    }

    /// Number of supported words.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True iff this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(word, coefficient)` in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CRat)> {
        self.terms.iter()
    }

    /// Longest path length in the support (zero for diagonal elements).
    pub fn max_word_length(&self) -> usize {
        self.terms.keys().map(|w| w.length()).max().unwrap_or(0)
    }

    /// Sum of two elements.
    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone())
                .expect("existing support never contains the empty word");
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &CRat) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Difference `self − other`.
    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&CRat::int(-1)))
    }
}

// ====================================================================
// The *-algebra operations
// ====================================================================

/// Product of two elements over the groupoid of `g`: expand all pairwise
/// word products, drop every pair that collapses to the empty word, and
/// recollect.  Both elements must be built over `g`.
pub fn multiply(
    g: &DirectedGraph,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let w = word::product(g, wa, wb)?;
            if !w.is_empty_word() {
                out.add_term(w, ca * cb)?;
            }
        }
    }
    Ok(out)
}

/// Adjoint `(Σ t_w w)* = Σ conj(t_w) w⁻¹`.
pub fn adjoint(a: &AlgebraElement) -> AlgebraElement {
    AlgebraElement {
        terms: a
            .terms
            .iter()
            .map(|(w, c)| (word::shadow(w), c.conj()))
            .collect(),
    }
}

/// Conditional expectation onto the diagonal: keeps precisely the
/// vertex-supported terms of the sum.
pub fn expectation(a: &AlgebraElement) -> DiagonalElement {
    let mut out = DiagonalElement::default();
    for (w, c) in &a.terms {
        if let Some(v) = w.as_vertex() {
            out.terms.insert(v, c.clone());
        }
    }
    out
}

/// Inner product with words as an orthonormal system, conjugate-linear
/// in the **first** argument: `⟨a, b⟩ = Σ_w conj(a_w) · b_w`.
pub fn inner_product(a: &AlgebraElement, b: &AlgebraElement) -> CRat {
    let mut acc = CRat::zero();
    // iterate the smaller support, look up in the other
    let small = if a.terms.len() <= b.terms.len() {
        &a.terms
    } else {
        &b.terms
    };
    for w in small.keys() {
        if let (Some(ca), Some(cb)) = (a.terms.get(w), b.terms.get(w)) {
            acc += &ca.conj() * cb;
        }
    }
    acc
}

/// Squared norm `⟨a, a⟩` as an exact nonnegative rational.
pub fn norm_sqr(a: &AlgebraElement) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.terms.values() {
        acc += c.norm_sqr();
    }
    acc
}

impl DiagonalElement {
    /// Builds a diagonal element from `(vertex, coefficient)` pairs.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, CRat)>,
    {
        let mut map = BTreeMap::new();
        for (v, c) in terms {
            if !c.is_zero() {
                let e = map.entry(v).or_insert_with(CRat::zero);
                *e += c;
            }
        }
        map.retain(|_, c: &mut CRat| !c.is_zero());
        DiagonalElement { terms: map }
    }

    /// The coefficient at a vertex (zero when absent).
    pub fn coefficient(&self, v: VertexId) -> CRat {
        self.terms.get(&v).cloned().unwrap_or_else(CRat::zero)
    }

    /// Iterates `(vertex, coefficient)` in vertex order.
    pub fn terms(&self) -> impl Iterator<Item = (&VertexId, &CRat)> {
        self.terms.iter()
    }

    /// True iff the diagonal element is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Views the diagonal element as a general algebra element.
    pub fn to_element(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (Word::Vertex(*v), c.clone()))
                .collect(),
        }
    }
}

impl From<DiagonalElement> for AlgebraElement {
    fn from(d: DiagonalElement) -> Self {
        d.to_element()
    }
}

// ====================================================================
// JSON form
// ====================================================================

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    re: String,
    im: String,
}

/// Serializes an element as a JSON list of terms.  Words are rendered as
/// literals and coefficients as exact rational strings, in canonical
/// word order.
pub fn element_to_json(g: &DirectedGraph, a: &AlgebraElement) -> String {
    let doc: Vec<TermJson> = a
        .terms
        .iter()
        .map(|(w, c)| {
            let (re, im) = c.to_parts_string();
            TermJson {
                word: word::format_word(g, w),
                re,
                im,
            }
        })
        .collect();
    serde_json::to_string_pretty(&doc).expect("element serialization cannot fail")
}

/// Parses the JSON term-list form.  Step-sequence words are reduced to
/// their canonical form first; a term whose word is `null` is rejected,
/// and so is a step sequence that collapses to the empty word.
pub fn element_from_json(g: &DirectedGraph, s: &str) -> Result<AlgebraElement> {
    let doc: Vec<TermJson> = serde_json::from_str(s)?;
    let mut out = AlgebraElement::zero();
    for t in &doc {
        let w = word::parse_word(g, &t.word)?;
        let c = CRat::from_parts_str(&t.re, &t.im)?;
        out.add_term(w, c)?;
    }
    Ok(out)
}
