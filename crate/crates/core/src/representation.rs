//! Finite truncations of the left regular action on reduced words.
//!
//! The algebra acts on a Hilbert space with one basis vector per reduced
//! word.  A [`BasisIndex`] freezes the finite window spanned by all words
//! up to a chosen path length, in the crate's canonical enumeration order
//! (vertices first, then paths by length and step order).  Operators are
//! rendered on that window as exact sparse 0/1-patterned matrices, column
//! by column: the generator word is multiplied onto each basis word, and
//! products that land outside the window leave an all-zero column.
//!
//! Truncation is therefore the only source of error: every stored entry
//! is exact, and discrepancies between a product of matrices and the
//! matrix of a product can occur only in columns close to the boundary
//! of the window.  [`interior_equal`] compares two matrices away from
//! that boundary, using the distance-to-boundary of each basis word.

use num_complex::Complex64;
use std::collections::{BTreeSet, HashMap};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::matrix::{InteriorReport, SparseMatrix};
use crate::word::{enumerate_words, product, validate_word, Word};

/// A frozen, ordered basis of all reduced words up to a maximum path
/// length, with constant-time index lookup.
#[derive(Clone, Debug)]
pub struct BasisIndex {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    vertex_count: usize,
    max_path_length: usize,
}

impl BasisIndex {
    /// Enumerates the basis for `g` with the given path-length cap.
    pub fn new(g: &DirectedGraph, max_path_length: usize) -> Self {
        let words = enumerate_words(g, max_path_length);
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        BasisIndex {
            words,
            index,
            vertex_count: g.vertex_count(),
            max_path_length,
        }
    }

    /// Number of basis words (the matrix dimension).
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// True iff the basis is empty (an edgeless, vertexless graph).
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The basis words in enumeration order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The word at a basis position.
    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// The basis position of a word, if it lies in the window.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Number of vertex words (they occupy the leading positions).
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The path-length cap the basis was built with.
    pub fn max_path_length(&self) -> usize {
        self.max_path_length
    }

    /// How far the word at position `i` sits from the truncation
    /// boundary: the cap minus the word's length.  Vertices are deepest
    /// in the interior; words of maximal length have distance zero.
    pub fn boundary_distance(&self, i: usize) -> usize {
        self.max_path_length - self.words[i].length()
    }
}

/// The matrix of a single generator `L_w` on the window: column `j`
/// holds the basis expansion of `w · basis[j]`.  Products that reduce to
/// the absorbing word give a zero column; products that leave the window
/// also give a zero column (see [`boundary_affected_columns`]).
pub fn matrix_of_word(g: &DirectedGraph, basis: &BasisIndex, w: &Word) -> Result<SparseMatrix> {
    validate_word(g, w)?;
    let mut m = SparseMatrix::zero(basis.len());
    for (col, u) in basis.words().iter().enumerate() {
        let p = product(g, w, u)?;
        if let Some(row) = basis.index_of(&p) {
            m.set_entry(row, col, Complex64::new(1.0, 0.0));
        }
    }
    Ok(m)
}

/// Columns of `L_w`'s matrix that were zeroed only because the product
/// left the window (as opposed to vanishing in the algebra).
pub fn boundary_affected_columns(
    g: &DirectedGraph,
    basis: &BasisIndex,
    w: &Word,
) -> Result<BTreeSet<usize>> {
    validate_word(g, w)?;
    let mut cols = BTreeSet::new();
    for (col, u) in basis.words().iter().enumerate() {
        let p = product(g, w, u)?;
        if !p.is_empty_word() && basis.index_of(&p).is_none() {
            cols.insert(col);
        }
    }
    Ok(cols)
}

/// The matrix of a general element: the coefficient-weighted sum of its
/// generator matrices.  Coefficients are converted to floating point at
/// this single point; the underlying 0/1 patterns are exact.
pub fn matrix_of_element(
    g: &DirectedGraph,
    basis: &BasisIndex,
    a: &AlgebraElement,
) -> Result<SparseMatrix> {
    let mut m = SparseMatrix::zero(basis.len());
    for (w, t) in a.terms() {
        validate_word(g, w)?;
        let coeff = t.to_c64();
        for (col, u) in basis.words().iter().enumerate() {
            let p = product(g, w, u)?;
            if let Some(row) = basis.index_of(&p) {
                m.add_entry(row, col, coeff);
            }
        }
    }
    Ok(m)
}

/// The top-left block of a window matrix indexed by the vertex words
/// alone: the compression of the operator to the span of the vertex
/// basis vectors.
pub fn compress_to_vertex_space(m: &SparseMatrix, basis: &BasisIndex) -> Result<SparseMatrix> {
    if m.dim() != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix dimension {} does not match basis size {}",
            m.dim(),
            basis.len()
        )));
    }
    let n = basis.vertex_count();
    let mut out = SparseMatrix::zero(n);
    for (r, c, v) in m.entries() {
        if r < n && c < n {
            out.set_entry(r, c, v);
        }
    }
    Ok(out)
}

/// Compares two window matrices on the interior columns only: those
/// whose basis word has [`BasisIndex::boundary_distance`] at least
/// `margin`.  All rows of a compared column participate.
pub fn interior_equal(
    a: &SparseMatrix,
    b: &SparseMatrix,
    basis: &BasisIndex,
    margin: usize,
    tol: f64,
) -> Result<InteriorReport> {
    if a.dim() != basis.len() || b.dim() != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrices of dimension {} and {} against a basis of size {}",
            a.dim(),
            b.dim(),
            basis.len()
        )));
    }
    a.compare_on(
        b,
        tol,
        |col| basis.boundary_distance(col) >= margin,
        |_| true,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint, multiply, AlgebraElement};
    use crate::matrix::DEFAULT_TOL;
    use crate::word::parse_word;

    fn tree(degree: usize, depth: usize) -> DirectedGraph {
        DirectedGraph::regular_tree(degree, depth).unwrap()
    }

    fn w(g: &DirectedGraph, s: &str) -> Word {
        parse_word(g, s).unwrap()
    }

    fn elem(g: &DirectedGraph, s: &str) -> AlgebraElement {
        AlgebraElement::word(w(g, s)).unwrap()
    }

    #[test]
    fn basis_leads_with_vertices_in_order() {
        let g = tree(2, 2);
        let basis = BasisIndex::new(&g, 2);
        assert_eq!(basis.vertex_count(), 7);
        for i in 0..7 {
            assert_eq!(
                basis.word(i),
                &Word::Vertex(crate::graph::VertexId(i as u32))
            );
            assert_eq!(basis.boundary_distance(i), 2);
        }
        // longest words touch the boundary
        let last = basis.len() - 1;
        assert_eq!(basis.word(last).length(), 2);
        assert_eq!(basis.boundary_distance(last), 0);
        // index lookup inverts enumeration
        for (i, word) in basis.words().iter().enumerate() {
            assert_eq!(basis.index_of(word), Some(i));
        }
    }

    #[test]
    fn vertex_projections_sum_to_the_identity() {
        let g = tree(2, 2);
        let basis = BasisIndex::new(&g, 2);
        let mut sum = SparseMatrix::zero(basis.len());
        for v in g.vertices() {
            let m = matrix_of_word(&g, &basis, &Word::Vertex(v)).unwrap();
            // each projection is diagonal with 0/1 entries
            for (r, c, val) in m.entries() {
                assert_eq!(r, c);
                assert_eq!(val, Complex64::new(1.0, 0.0));
            }
            sum = sum.add(&m).unwrap();
        }
        assert_eq!(sum, SparseMatrix::identity(basis.len()));
    }

    #[test]
    fn vertex_projection_selects_columns_by_source() {
        let g = tree(2, 2);
        let basis = BasisIndex::new(&g, 2);
        let v = g.vertex_by_label("1").unwrap();
        let m = matrix_of_word(&g, &basis, &Word::Vertex(v)).unwrap();
        for (col, u) in basis.words().iter().enumerate() {
            let expected = crate::word::source(&g, u).unwrap() == v;
            assert_eq!(
                m.get(col, col) == Complex64::new(1.0, 0.0),
                expected,
                "column {col}"
            );
        }
    }

    #[test]
    fn edge_generator_shifts_along_the_line() {
        // 1-regular tree of depth 4: vertices 1..5, and the step 1>2 acts
        // by prepending, sending a word starting at 2 one step deeper.
        let g = tree(1, 4);
        let basis = BasisIndex::new(&g, 3);
        let e = w(&g, "1>2");
        let m = matrix_of_word(&g, &basis, &e).unwrap();

        // column of the vertex word at 2 maps to the basis vector of 1>2
        let col = basis.index_of(&w(&g, "v:2")).unwrap();
        let row = basis.index_of(&e).unwrap();
        assert_eq!(m.get(row, col), Complex64::new(1.0, 0.0));

        // column of 2>3 maps to 1>2;2>3
        let col = basis.index_of(&w(&g, "2>3")).unwrap();
        let row = basis.index_of(&w(&g, "1>2;2>3")).unwrap();
        assert_eq!(m.get(row, col), Complex64::new(1.0, 0.0));

        // a word with range 3 is annihilated
        let col = basis.index_of(&w(&g, "v:3")).unwrap();
        for r in 0..basis.len() {
            assert_eq!(m.get(r, col), Complex64::new(0.0, 0.0));
        }

        // every column holds at most a single 1
        let mut per_col = vec![0usize; basis.len()];
        for (_, c, v) in m.entries() {
            assert_eq!(v, Complex64::new(1.0, 0.0));
            per_col[c] += 1;
        }
        assert!(per_col.iter().all(|&n| n <= 1));
    }

    #[test]
    fn products_leaving_the_window_zero_the_column_and_are_recorded() {
        let g = tree(1, 4);
        let basis = BasisIndex::new(&g, 3);
        let e = w(&g, "1>2");
        // 1>2 · (2>3;3>4;4>5) has length 4 > cap 3
        let deep = w(&g, "2>3;3>4;4>5");
        let col = basis.index_of(&deep).unwrap();
        let m = matrix_of_word(&g, &basis, &e).unwrap();
        for r in 0..basis.len() {
            assert_eq!(m.get(r, col), Complex64::new(0.0, 0.0));
        }
        let affected = boundary_affected_columns(&g, &basis, &e).unwrap();
        assert!(affected.contains(&col));
        // the annihilated vertex column is NOT recorded: that zero is algebraic
        let vcol = basis.index_of(&w(&g, "v:3")).unwrap();
        assert!(!affected.contains(&vcol));
        // every recorded column indeed lies within `len(w)` of the boundary
        for c in &affected {
            assert!(basis.boundary_distance(*c) < e.length());
        }
    }

    #[test]
    fn matrices_respect_products_away_from_the_boundary() {
        let g = tree(2, 4);
        let basis = BasisIndex::new(&g, 4);
        // the seam between a and b cancels, so a·b·u can fit in the window
        // while b·u alone overflows it: exactly the boundary effect
        let a = w(&g, "∅>1");
        let b = w(&g, "1<∅;∅>2");
        let ab = product(&g, &a, &b).unwrap();
        assert_eq!(ab, w(&g, "∅>2"));

        let ma = matrix_of_word(&g, &basis, &a).unwrap();
        let mb = matrix_of_word(&g, &basis, &b).unwrap();
        let mab = matrix_of_word(&g, &basis, &ab).unwrap();
        let prod = ma.mul(&mb).unwrap();

        // globally the truncation bites...
        assert!(!prod.approx_eq(&mab, DEFAULT_TOL).unwrap());
        // ...but the interior agrees exactly at margin len(a) + len(b)
        let rep = interior_equal(&prod, &mab, &basis, 3, DEFAULT_TOL).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.max_deviation, 0.0);
        assert!(rep.compared_columns > 0);
        // and the discrepancy survives at margin 0
        let rep = interior_equal(&prod, &mab, &basis, 0, DEFAULT_TOL).unwrap();
        assert!(!rep.equal);
    }

    #[test]
    fn adjoint_element_matches_conjugate_transpose_exactly() {
        let g = tree(2, 3);
        let basis = BasisIndex::new(&g, 3);
        let mut a = AlgebraElement::zero();
        a.add_term(w(&g, "∅>1"), crate::exact::CRat::rat2(1, 2, -1, 3))
            .unwrap();
        a.add_term(w(&g, "1<∅;∅>2"), crate::exact::CRat::int(2))
            .unwrap();
        a.add_term(w(&g, "v:11"), crate::exact::CRat::i()).unwrap();
        let m = matrix_of_element(&g, &basis, &a).unwrap();
        let m_star = matrix_of_element(&g, &basis, &adjoint(&a)).unwrap();
        assert_eq!(m_star, m.conjugate_transpose());
    }

    #[test]
    fn partial_isometry_identity_holds_on_the_interior() {
        let g = tree(2, 3);
        let basis = BasisIndex::new(&g, 3);
        let path = elem(&g, "∅>1;1>12");
        let star_times = multiply(&g, &adjoint(&path), &path).unwrap();
        // algebraically w*·w is the unit at the source vertex
        let src = g.vertex_by_label("12").unwrap();
        assert_eq!(star_times, elem(&g, "v:12"));

        let m = matrix_of_element(&g, &basis, &path).unwrap();
        let lhs = m.conjugate_transpose().mul(&m).unwrap();
        let rhs = matrix_of_element(
            &g,
            &basis,
            &AlgebraElement::word(Word::Vertex(src)).unwrap(),
        )
        .unwrap();
        let rep =
            interior_equal(&lhs, &rhs, &basis, 2 * path.max_word_length(), DEFAULT_TOL).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.max_deviation, 0.0);
    }

    #[test]
    fn compression_keeps_only_the_vertex_block() {
        let g = tree(2, 2);
        let basis = BasisIndex::new(&g, 2);
        let id = SparseMatrix::identity(basis.len());
        let c = compress_to_vertex_space(&id, &basis).unwrap();
        assert_eq!(c, SparseMatrix::identity(basis.vertex_count()));

        // a path generator has no vertex-to-vertex matrix entries, so its
        // literal compression vanishes
        let m = matrix_of_word(&g, &basis, &w(&g, "∅>1")).unwrap();
        let c = compress_to_vertex_space(&m, &basis).unwrap();
        assert!(c.is_zero());

        // dimension guard
        assert!(compress_to_vertex_space(&SparseMatrix::zero(3), &basis).is_err());
    }

    #[test]
    fn foreign_words_are_rejected() {
        let g = tree(2, 2);
        let h = tree(3, 2);
        let basis = BasisIndex::new(&g, 2);
        // this step's edge index exceeds g's edge count entirely
        let foreign = w(&h, "3>33");
        assert!(matrix_of_word(&g, &basis, &foreign).is_err());
    }

    #[test]
    fn element_matrix_is_the_weighted_sum_of_word_matrices() {
        let g = tree(2, 2);
        let basis = BasisIndex::new(&g, 2);
        let mut a = AlgebraElement::zero();
        a.add_term(w(&g, "v:∅"), crate::exact::CRat::rat(3, 4))
            .unwrap();
        a.add_term(
            w(&g, "∅>2"),
            crate::exact::CRat::new(
                crate::exact::parse_rational("-2").unwrap(),
                crate::exact::parse_rational("1/8").unwrap(),
            ),
        )
        .unwrap();
        let m = matrix_of_element(&g, &basis, &a).unwrap();

        let mut expect = SparseMatrix::zero(basis.len());
        for (word, t) in a.terms() {
            let mw = matrix_of_word(&g, &basis, word).unwrap();
            expect = expect.add(&mw.scale(t.to_c64())).unwrap();
        }
        assert_eq!(m, expect);
    }
}
