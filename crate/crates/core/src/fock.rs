//! Truncated tensor-word space over ℂ^N with one-sided ladder operators.
//!
//! Basis vectors are words over the alphabet `{1..N}` up to a degree cap
//! `D`, ordered by length and then lexicographically; the empty word is
//! the vacuum `Ω`.  Four families of operators act on this space, each
//! parametrized by a dense complex `N`-vector `h`:
//!
//! * `l_h` prepends `h` (distributed over the standard basis) to every
//!   word; `l_h*` strips the first letter against a conjugated weight.
//! * `r_h` appends `h` to every word; `r_h*` strips the last letter.
//!
//! Words pushed past the degree cap are dropped, so all identities hold
//! up to an interior margin equal to the number of ladder factors
//! applied.  Matrices of operator words are assembled factor by factor
//! in this dropped form, which makes composition of matrices agree with
//! the matrix of the composed word by construction.
//!
//! The module also houses the reversal anti-isomorphism that exchanges
//! the two sides ([`phi_map`]), and the dictionary identifying the
//! vertex space of the N-regular tree with this word space
//! ([`vertex_fock_bijection`], [`build_rj_element`],
//! [`vertex_action_matrix`]): appending-edge generator sums on the tree
//! act on vertices exactly as right creation operators act on words.

use num_complex::Complex64;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::exact::CRat;
use crate::graph::{DirectedGraph, Step, VertexId};
use crate::matrix::{SparseMatrix, PRUNE_EPS};
use crate::word::{self, Word};

/// Largest alphabet size: letters display as single digits.
pub const MAX_ALPHABET: usize = 9;

// ====================================================================
// Words and the truncated basis
// ====================================================================

/// A word over the alphabet `{1..N}`; the empty word is the vacuum.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FockWord(Vec<u8>);

impl FockWord {
    /// The empty word `Ω`.
    pub fn vacuum() -> Self {
        FockWord(Vec::new())
    }

    /// Builds a word, validating every letter against the alphabet size.
    pub fn from_letters(letters: &[u8], n: usize) -> Result<Self> {
        for &l in letters {
            if l == 0 || l as usize > n {
                return Err(Error::InvalidParameter(format!(
                    "letter {l} outside the alphabet 1..={n}"
                )));
            }
        }
        Ok(FockWord(letters.to_vec()))
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Word length (tensor degree); 0 for the vacuum.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the vacuum.
    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    /// Synonym for [`Self::is_vacuum`], pairing with [`Self::len`].
    pub fn is_empty(&self) -> bool {
        self.is_vacuum()
    }

    /// Parses `"Ω"` or a digit string like `"121"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "Ω" || s.is_empty() {
            return Ok(FockWord::vacuum());
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("bad letter `{ch}` in word `{s}`")))?;
            letters.push(d as u8);
        }
        FockWord::from_letters(&letters, n)
    }
}

impl fmt::Display for FockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Ω");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Ord for FockWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for FockWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The ordered basis of all words of degree at most `cap` over
/// `{1..n}`, with constant-time index lookup.
#[derive(Clone, Debug)]
pub struct FockBasis {
    n: usize,
    cap: usize,
    words: Vec<FockWord>,
    index: HashMap<FockWord, usize>,
}

impl FockBasis {
    /// Enumerates the basis in (length, lexicographic) order.
    pub fn new(n: usize, cap: usize) -> Result<Self> {
        if n == 0 || n > MAX_ALPHABET {
            return Err(Error::InvalidParameter(format!(
                "alphabet size {n} outside 1..={MAX_ALPHABET}"
            )));
        }
        let mut words = vec![FockWord::vacuum()];
        let mut level = vec![FockWord::vacuum()];
        for _ in 0..cap {
            let mut next = Vec::with_capacity(level.len() * n);
            for w in &level {
                for j in 1..=n as u8 {
                    let mut letters = w.0.clone();
                    letters.push(j);
                    next.push(FockWord(letters));
                }
            }
            words.extend(next.iter().cloned());
            level = next;
        }
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Ok(FockBasis {
            n,
            cap,
            words,
            index,
        })
    }

    /// Alphabet size `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree cap `D`.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of basis words.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// True iff the basis is empty (never happens: the vacuum is always present).
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The basis words in order.
    pub fn words(&self) -> &[FockWord] {
        &self.words
    }

    /// The word at a basis position.
    pub fn word(&self, i: usize) -> &FockWord {
        &self.words[i]
    }

    /// The position of a word, if its degree fits the cap.
    pub fn index_of(&self, w: &FockWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Distance of position `i` from the degree cap.
    pub fn boundary_distance(&self, i: usize) -> usize {
        self.cap - self.words[i].len()
    }
}

/// A finite complex combination of words of one truncated space.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector {
    n: usize,
    cap: usize,
    terms: BTreeMap<FockWord, Complex64>,
}

impl FockVector {
    /// The zero vector of the space with alphabet `n` and cap `cap`.
    pub fn zero(n: usize, cap: usize) -> Self {
        FockVector {
            n,
            cap,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a single word.
    pub fn basis_word(n: usize, cap: usize, w: FockWord) -> Result<Self> {
        if w.len() > cap {
            return Err(Error::OutOfTruncation(format!(
                "word {w} has degree {} above the cap {cap}",
                w.len()
            )));
        }
        FockWord::from_letters(w.letters(), n)?;
        let mut v = FockVector::zero(n, cap);
        v.add_term(w, Complex64::new(1.0, 0.0));
        Ok(v)
    }

    /// Alphabet size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree cap.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Adds a coefficient onto a word, pruning near-zeros.  Words past
    /// the cap are ignored (the truncation drop).
    pub fn add_term(&mut self, w: FockWord, c: Complex64) {
        if w.len() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().norm() < PRUNE_EPS {
                    e.remove();
                }
            }
            Entry::Vacant(slot) => {
                if c.norm() >= PRUNE_EPS {
                    slot.insert(c);
                }
            }
        }
    }

    /// The coefficient of a word (zero when absent).
    pub fn get(&self, w: &FockWord) -> Complex64 {
        self.terms
            .get(w)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Iterates `(word, coefficient)` in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&FockWord, Complex64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// True iff no terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree present, or `None` for the zero vector.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }
}

// ====================================================================
// Ladder operators
// ====================================================================

/// Which end of the word a generator acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// Acts on the first letter (prepend / strip-front).
    Left,
    /// Acts on the last letter (append / strip-back).
    Right,
}

/// One ladder generator: a side, a dense parameter vector, and a star
/// flag (`false` = creation, `true` = annihilation).
#[derive(Clone, PartialEq, Debug)]
pub struct Generator {
    pub side: Side,
    pub starred: bool,
    pub vector: Vec<Complex64>,
}

impl Generator {
    /// `l_h`: prepend `h`.
    pub fn left(h: Vec<Complex64>) -> Self {
        Generator {
            side: Side::Left,
            starred: false,
            vector: h,
        }
    }

    /// `l_h*`: strip the first letter.
    pub fn left_star(h: Vec<Complex64>) -> Self {
        Generator {
            side: Side::Left,
            starred: true,
            vector: h,
        }
    }

    /// `r_h`: append `h`.
    pub fn right(h: Vec<Complex64>) -> Self {
        Generator {
            side: Side::Right,
            starred: false,
            vector: h,
        }
    }

    /// `r_h*`: strip the last letter.
    pub fn right_star(h: Vec<Complex64>) -> Self {
        Generator {
            side: Side::Right,
            starred: true,
            vector: h,
        }
    }

    /// The same generator with the star flipped (its adjoint).
    pub fn adjoint(&self) -> Self {
        Generator {
            side: self.side,
            starred: !self.starred,
            vector: self.vector.clone(),
        }
    }

    /// The mirrored generator: side swapped and star flipped, same
    /// parameter vector.
    pub fn mirrored(&self) -> Self {
        Generator {
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            starred: !self.starred,
            vector: self.vector.clone(),
        }
    }
}

fn check_dim(h: &[Complex64], n: usize) -> Result<()> {
    if h.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "parameter vector of length {} against alphabet size {n}",
            h.len()
        )));
    }
    Ok(())
}

/// The standard basis vector `e_j` (1-based) of ℂ^n.
pub fn standard_basis_vector(n: usize, j: usize) -> Result<Vec<Complex64>> {
    if j == 0 || j > n {
        return Err(Error::InvalidParameter(format!(
            "basis index {j} outside 1..={n}"
        )));
    }
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    v[j - 1] = Complex64::new(1.0, 0.0);
    Ok(v)
}

/// `⟨h₁, h₂⟩ = Σ_j conj(h₁ⱼ)·h₂ⱼ`, conjugate-linear in the first slot.
pub fn inner(h1: &[Complex64], h2: &[Complex64]) -> Result<Complex64> {
    if h1.len() != h2.len() {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {}",
            h1.len(),
            h2.len()
        )));
    }
    Ok(h1
        .iter()
        .zip(h2.iter())
        .map(|(a, b)| a.conj() * b)
        .fold(Complex64::new(0.0, 0.0), |acc, z| acc + z))
}

/// `l_h`: prepend `h` to every word, dropping words that pass the cap.
pub fn left_create(h: &[Complex64], v: &FockVector) -> Result<FockVector> {
    check_dim(h, v.n)?;
    let mut out = FockVector::zero(v.n, v.cap);
    for (w, c) in v.terms() {
        if w.len() + 1 > v.cap {
            continue;
        }
        for (j, &hj) in h.iter().enumerate() {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(j as u8 + 1);
            letters.extend_from_slice(w.letters());
            out.add_term(FockWord(letters), c * hj);
        }
    }
    Ok(out)
}

/// `l_h*`: strip the first letter with weight `conj(h_j)`; the vacuum
/// maps to zero.
pub fn left_annihilate(h: &[Complex64], v: &FockVector) -> Result<FockVector> {
    check_dim(h, v.n)?;
    let mut out = FockVector::zero(v.n, v.cap);
    for (w, c) in v.terms() {
        if let Some((&first, rest)) = w.letters().split_first() {
            out.add_term(FockWord(rest.to_vec()), c * h[first as usize - 1].conj());
        }
    }
    Ok(out)
}

/// `r_h`: append `h` to every word, dropping words that pass the cap.
pub fn right_create(h: &[Complex64], v: &FockVector) -> Result<FockVector> {
    check_dim(h, v.n)?;
    let mut out = FockVector::zero(v.n, v.cap);
    for (w, c) in v.terms() {
        if w.len() + 1 > v.cap {
            continue;
        }
        for (j, &hj) in h.iter().enumerate() {
            let mut letters = w.letters().to_vec();
            letters.push(j as u8 + 1);
            out.add_term(FockWord(letters), c * hj);
        }
    }
    Ok(out)
}

/// `r_h*`: strip the last letter with weight `conj(h_j)`; the vacuum
/// maps to zero.
pub fn right_annihilate(h: &[Complex64], v: &FockVector) -> Result<FockVector> {
    check_dim(h, v.n)?;
    let mut out = FockVector::zero(v.n, v.cap);
    for (w, c) in v.terms() {
        if let Some((&last, rest)) = w.letters().split_last() {
            out.add_term(FockWord(rest.to_vec()), c * h[last as usize - 1].conj());
        }
    }
    Ok(out)
}

/// Applies one generator to a vector.
pub fn apply_generator(g: &Generator, v: &FockVector) -> Result<FockVector> {
    match (g.side, g.starred) {
        (Side::Left, false) => left_create(&g.vector, v),
        (Side::Left, true) => left_annihilate(&g.vector, v),
        (Side::Right, false) => right_create(&g.vector, v),
        (Side::Right, true) => right_annihilate(&g.vector, v),
    }
}

// ====================================================================
// Operator words
// ====================================================================

/// A formal product of ladder generators; the empty product is the
/// identity.  The first factor is applied last, as in operator
/// composition.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorWord {
    n: usize,
    factors: Vec<Generator>,
}

impl OperatorWord {
    /// The identity operator word over alphabet size `n`.
    pub fn identity(n: usize) -> Self {
        OperatorWord {
            n,
            factors: Vec::new(),
        }
    }

    /// Builds a product from factors, validating parameter dimensions.
    pub fn from_factors(n: usize, factors: Vec<Generator>) -> Result<Self> {
        for f in &factors {
            check_dim(&f.vector, n)?;
        }
        Ok(OperatorWord { n, factors })
    }

    /// Alphabet size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The factors, outermost first.
    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    /// Number of factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// True for the identity word.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product `self · other` (apply `other` first).
    pub fn concat(&self, other: &OperatorWord) -> Result<OperatorWord> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "operator words over alphabets of size {} and {}",
                self.n, other.n
            )));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(OperatorWord { n: self.n, factors })
    }
}

/// Applies an operator word to a vector, rightmost factor first.
pub fn apply_operator_word(ow: &OperatorWord, v: &FockVector) -> Result<FockVector> {
    if ow.n != v.n {
        return Err(Error::DimensionMismatch(format!(
            "operator word over alphabet {} applied to a vector over {}",
            ow.n, v.n
        )));
    }
    let mut acc = v.clone();
    for g in ow.factors.iter().rev() {
        acc = apply_generator(g, &acc)?;
    }
    Ok(acc)
}

fn reverse_and_mirror(ow: &OperatorWord) -> OperatorWord {
    OperatorWord {
        n: ow.n,
        factors: ow.factors.iter().rev().map(|g| g.mirrored()).collect(),
    }
}

/// The side-reversal anti-isomorphism on left operator words: the
/// factor sequence is reversed and each `l_h` becomes `r_h*`, each
/// `l_h*` becomes `r_h`.  Products therefore reverse:
/// `Φ(AB) = Φ(B)Φ(A)`.
pub fn phi_map(ow: &OperatorWord) -> Result<OperatorWord> {
    if ow.factors.iter().any(|g| g.side != Side::Left) {
        return Err(Error::MixedSides);
    }
    Ok(reverse_and_mirror(ow))
}

/// The inverse of [`phi_map`], defined on right operator words.
pub fn phi_inverse_map(ow: &OperatorWord) -> Result<OperatorWord> {
    if ow.factors.iter().any(|g| g.side != Side::Right) {
        return Err(Error::MixedSides);
    }
    Ok(reverse_and_mirror(ow))
}

/// The matrix of an operator word on the truncated basis, assembled by
/// applying the factors (rightmost first, with truncation drops) to
/// every basis column.  By construction this equals the product of the
/// factors' matrices.
pub fn matrix_of_operator_word(basis: &FockBasis, ow: &OperatorWord) -> Result<SparseMatrix> {
    if ow.n != basis.n {
        return Err(Error::DimensionMismatch(format!(
            "operator word over alphabet {} against a basis over {}",
            ow.n, basis.n
        )));
    }
    let mut m = SparseMatrix::zero(basis.len());
    for (col, w) in basis.words().iter().enumerate() {
        let v = FockVector::basis_word(basis.n, basis.cap, w.clone())?;
        let image = apply_operator_word(ow, &v)?;
        for (u, c) in image.terms() {
            let row = basis
                .index_of(u)
                .expect("capped application stays inside the basis");
            m.add_entry(row, col, c);
        }
    }
    Ok(m)
}

// ====================================================================
// The tree dictionary
// ====================================================================

/// A bidirectional map between the vertices of the N-regular tree of a
/// given depth and all words of degree at most that depth.
#[derive(Clone, Debug)]
pub struct VertexFockBijection {
    n: usize,
    depth: usize,
    to_fock: Vec<FockWord>,
    to_vertex: HashMap<FockWord, VertexId>,
}

impl VertexFockBijection {
    /// Alphabet size / tree degree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Tree depth / degree cap.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Number of paired vertices/words.
    pub fn len(&self) -> usize {
        self.to_fock.len()
    }

    /// True iff the map is empty (never: the root is always paired).
    pub fn is_empty(&self) -> bool {
        self.to_fock.is_empty()
    }

    /// The word paired with a vertex.
    pub fn fock_of(&self, v: VertexId) -> &FockWord {
        &self.to_fock[v.0 as usize]
    }

    /// The vertex paired with a word, if its degree fits the depth.
    pub fn vertex_of(&self, w: &FockWord) -> Option<VertexId> {
        self.to_vertex.get(w).copied()
    }
}

/// Builds the vertex↔word dictionary for the `n`-regular tree of the
/// given depth: the vertex labeled `j₁…j_k` pairs with the word
/// `j₁…j_k`, the root with the vacuum.  Requires `n ≥ 2`; the 1-regular
/// line is served by the band tooling instead.
pub fn vertex_fock_bijection(n: usize, depth: usize) -> Result<VertexFockBijection> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the vertex dictionary needs degree at least 2".into(),
        ));
    }
    let g = DirectedGraph::regular_tree(n, depth)?;
    let mut to_fock = Vec::with_capacity(g.vertex_count());
    let mut to_vertex = HashMap::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let label = g.vertex_label(v);
        let letters: Vec<u8> = label
            .chars()
            .map(|ch| ch.to_digit(10).expect("tree labels are digit strings") as u8)
            .collect();
        let w = FockWord::from_letters(&letters, n)?;
        to_fock.push(w.clone());
        to_vertex.insert(w, v);
    }
    Ok(VertexFockBijection {
        n,
        depth,
        to_fock,
        to_vertex,
    })
}

/// The sum of all edge generators appending symbol `j` on an N-regular
/// tree: one term `L_{(W, Wj)}` per vertex `W` with a `j`-child.
pub fn build_rj_element(g: &DirectedGraph, j: usize) -> Result<AlgebraElement> {
    let (degree, _) = g
        .tree_params()
        .ok_or_else(|| Error::InvalidParameter("appending-edge sums need a regular tree".into()))?;
    if degree < 2 {
        return Err(Error::InvalidParameter(
            "appending-edge sums need degree at least 2".into(),
        ));
    }
    if j == 0 || j > degree {
        return Err(Error::InvalidParameter(format!(
            "symbol {j} outside 1..={degree}"
        )));
    }
    let digit = char::from_digit(j as u32, 10).expect("degree is single-digit");
    let mut acc = AlgebraElement::zero();
    for e in g.edges() {
        let child = g.vertex_label(g.edge_dst(e));
        let parent = g.vertex_label(g.edge_src(e));
        if child.len() == parent.len() + 1 && child.ends_with(digit) {
            acc.add_term(
                Word::Path(vec![Step {
                    edge: e,
                    shadow: false,
                }]),
                CRat::one(),
            )?;
        }
    }
    Ok(acc)
}

/// The action of an element on the vertex space alone: each generator
/// word `w` contributes its coefficient at position
/// `(range(w), source(w))`, i.e. it carries the basis vector at its
/// source vertex to the one at its range vertex.  Accumulated exactly
/// and converted once per entry.
pub fn vertex_action_matrix(g: &DirectedGraph, a: &AlgebraElement) -> Result<SparseMatrix> {
    let mut acc: BTreeMap<(usize, usize), CRat> = BTreeMap::new();
    for (w, c) in a.terms() {
        word::validate_word(g, w)?;
        let s = word::source(g, w).expect("stored words are never empty").0 as usize;
        let r = word::range(g, w).expect("stored words are never empty").0 as usize;
        let e = acc.entry((r, s)).or_insert_with(CRat::zero);
        *e = e.clone() + c.clone();
    }
    let mut m = SparseMatrix::zero(g.vertex_count());
    for ((r, s), v) in acc {
        if !v.is_zero() {
            m.set_entry(r, s, v.to_c64());
        }
    }
    Ok(m)
}

/// Re-indexes a vertex-space matrix into word-basis positions through
/// the dictionary.  With the canonical enumerations the permutation is
/// the identity, but the mapping is applied explicitly.
pub fn reindex_through_bijection(
    m: &SparseMatrix,
    bij: &VertexFockBijection,
    basis: &FockBasis,
) -> Result<SparseMatrix> {
    if m.dim() != bij.len() || basis.len() != bij.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix of dimension {}, dictionary of size {}, basis of size {}",
            m.dim(),
            bij.len(),
            basis.len()
        )));
    }
    let mut out = SparseMatrix::zero(basis.len());
    for (r, c, v) in m.entries() {
        let rr = basis
            .index_of(bij.fock_of(VertexId(r as u32)))
            .expect("dictionary words fit the basis");
        let cc = basis
            .index_of(bij.fock_of(VertexId(c as u32)))
            .expect("dictionary words fit the basis");
        out.set_entry(rr, cc, v);
    }
    Ok(out)
}
