//! Banded Toeplitz matrices as operator combinations on the line graph.
//!
//! A banded Toeplitz matrix is constant along diagonals: entry `(r, c)`
//! holds the symbol coefficient `t_{r-c}`, with positive offsets below
//! the diagonal and negative offsets above it.  On the 1-regular tree
//! (the line graph), the sum of all forward length-`k` path generators
//! plays the role of a shifted Toeplitz building block: its band image
//! on the vertex space is the 0/1 matrix `T₊(k)` with ones on the
//! diagonal and on the `k`-th superdiagonal, zero in the last `k` rows.
//!
//! Any banded symbol then decomposes as
//!
//! ```text
//! T(t)  ≈  Σ_{j≥1} t_{-j}·T₊(j)  +  Σ_{i≥1} t_i·T₋(i)  +  s₀·I ,
//! s₀  =  t₀ − Σ_{j≥1} t_{-j} − Σ_{i≥1} t_i ,
//! ```
//!
//! exactly on every matrix position away from the bottom-right corner
//! of the truncation window; the correction `s₀` restores the main
//! diagonal because each building block carries its own diagonal.  All
//! coefficients stay exact rationals until a matrix is rendered.

use num_complex::Complex64;
use std::collections::BTreeMap;

use crate::algebra::{adjoint, AlgebraElement};
use crate::error::{Error, Result};
use crate::exact::{parse_complex, CRat};
use crate::graph::{DirectedGraph, Step, VertexId};
use crate::matrix::{InteriorReport, SparseMatrix};
use crate::word::{self, Word};

/// A banded Toeplitz symbol: finitely many exact complex rational
/// coefficients `t_offset`, negative offsets above the diagonal.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ToeplitzSymbol {
    coeffs: BTreeMap<i64, CRat>,
}

impl ToeplitzSymbol {
    /// The zero symbol.
    pub fn new() -> Self {
        ToeplitzSymbol::default()
    }

    /// Sets `t_offset`; a zero coefficient clears the slot.
    pub fn set(&mut self, offset: i64, c: CRat) {
        if c.is_zero() {
            self.coeffs.remove(&offset);
        } else {
            self.coeffs.insert(offset, c);
        }
    }

    /// The coefficient `t_offset` (zero when absent).
    pub fn coeff(&self, offset: i64) -> CRat {
        self.coeffs.get(&offset).cloned().unwrap_or_else(CRat::zero)
    }

    /// Iterates the nonzero coefficients in offset order.
    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &CRat)> {
        self.coeffs.iter().map(|(&o, c)| (o, c))
    }

    /// Largest `j` with `t_{-j}` nonzero: the superdiagonal bandwidth.
    pub fn upper_band(&self) -> usize {
        self.coeffs
            .keys()
            .filter(|&&o| o < 0)
            .map(|&o| (-o) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Largest `i` with `t_i` nonzero: the subdiagonal bandwidth.
    pub fn lower_band(&self) -> usize {
        self.coeffs
            .keys()
            .filter(|&&o| o > 0)
            .map(|&o| o as usize)
            .max()
            .unwrap_or(0)
    }

    /// Parses the comma-separated literal form, e.g. `t-1=3,t0=2,t1=1/2+i`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty symbol literal".into()));
        }
        let mut sym = ToeplitzSymbol::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let rest = piece.strip_prefix('t').ok_or_else(|| {
                Error::Parse(format!("symbol entry `{piece}` must start with `t`"))
            })?;
            let (idx, val) = rest
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("symbol entry `{piece}` is missing `=`")))?;
            let offset: i64 = idx.trim().parse().map_err(|_| {
                Error::Parse(format!("bad offset `{idx}` in symbol entry `{piece}`"))
            })?;
            if sym.coeffs.contains_key(&offset) {
                return Err(Error::Parse(format!("duplicate offset t{offset}")));
            }
            sym.set(offset, parse_complex(val)?);
        }
        Ok(sym)
    }

    /// Canonical literal form, inverse of [`ToeplitzSymbol::parse`].
    pub fn to_literal(&self) -> String {
        if self.coeffs.is_empty() {
            return "t0=0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(o, c)| format!("t{o}={c}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The full `m × m` banded Toeplitz matrix of the symbol: entry
    /// `(r, c)` is `t_{r-c}` on every position, including near the
    /// corners (no rows are zeroed).
    pub fn banded_matrix(&self, m: usize) -> SparseMatrix {
        let mut out = SparseMatrix::zero(m);
        for (&off, c) in &self.coeffs {
            let z = c.to_c64();
            if off >= 0 {
                let off = off as usize;
                for col in 0..m.saturating_sub(off) {
                    out.set_entry(col + off, col, z);
                }
            } else {
                let off = (-off) as usize;
                for row in 0..m.saturating_sub(off) {
                    out.set_entry(row, row + off, z);
                }
            }
        }
        out
    }

    /// The exact diagonal correction
    /// `s₀ = t₀ − Σ_{j≥1} t_{-j} − Σ_{i≥1} t_i`.
    pub fn s0(&self) -> CRat {
        let mut s = self.coeff(0);
        for (&off, c) in &self.coeffs {
            if off != 0 {
                s -= c.clone();
            }
        }
        s
    }

    /// Decomposes the symbol into the tree-operator combination with
    /// exact coefficients.
    pub fn rewrite(&self) -> TreeOperatorCombo {
        let mut plus = BTreeMap::new();
        let mut minus = BTreeMap::new();
        for (&off, c) in &self.coeffs {
            if off < 0 {
                plus.insert((-off) as usize, c.clone());
            } else if off > 0 {
                minus.insert(off as usize, c.clone());
            }
        }
        TreeOperatorCombo {
            plus,
            minus,
            identity: self.s0(),
        }
    }
}

/// A finite combination `Σ c⁺_k·T₊(k) + Σ c⁻_k·T₋(k) + c₀·I` of line
/// building blocks, with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeOperatorCombo {
    plus: BTreeMap<usize, CRat>,
    minus: BTreeMap<usize, CRat>,
    identity: CRat,
}

impl TreeOperatorCombo {
    /// Coefficients on the `T₊(k)` blocks, by `k`.
    pub fn plus(&self) -> &BTreeMap<usize, CRat> {
        &self.plus
    }

    /// Coefficients on the `T₋(k)` blocks, by `k`.
    pub fn minus(&self) -> &BTreeMap<usize, CRat> {
        &self.minus
    }

    /// Coefficient on the identity.
    pub fn identity_coefficient(&self) -> &CRat {
        &self.identity
    }

    /// Realizes the combination as an algebra element over the given
    /// line graph: each `T₊(k)` becomes the sum of all forward length-`k`
    /// path generators, each `T₋(k)` its adjoint, and the identity the
    /// sum of all vertex units.
    pub fn to_element(&self, g: &DirectedGraph) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero();
        for (&k, c) in &self.plus {
            acc = acc.add(&build_tplus_element(g, k)?.scale(c));
        }
        for (&k, c) in &self.minus {
            acc = acc.add(&build_tminus_element(g, k)?.scale(c));
        }
        if !self.identity.is_zero() {
            acc = acc.add(&AlgebraElement::unit(g).scale(&self.identity));
        }
        Ok(acc)
    }

    /// The vertex-space matrix of the combination at window size `m`,
    /// accumulated exactly and converted once per entry.
    pub fn vertex_matrix(&self, m: usize) -> SparseMatrix {
        let mut acc: BTreeMap<(usize, usize), CRat> = BTreeMap::new();
        let mut bump = |pos: (usize, usize), c: &CRat| {
            let e = acc.entry(pos).or_insert_with(CRat::zero);
            *e = e.clone() + c.clone();
        };
        for (&k, c) in &self.plus {
            for p in 0..m.saturating_sub(k) {
                bump((p, p), c);
                bump((p, p + k), c);
            }
        }
        for (&k, c) in &self.minus {
            for p in 0..m.saturating_sub(k) {
                bump((p, p), c);
                bump((p + k, p), c);
            }
        }
        if !self.identity.is_zero() {
            for d in 0..m {
                bump((d, d), &self.identity);
            }
        }
        exact_entries_to_matrix(m, &acc)
    }

    /// A JSON value describing the combination with exact coefficient
    /// literals, for reports and the command line.
    pub fn to_json_value(&self) -> serde_json::Value {
        let fmt = |map: &BTreeMap<usize, CRat>| {
            map.iter()
                .map(|(k, c)| (k.to_string(), serde_json::Value::String(c.to_string())))
                .collect::<serde_json::Map<_, _>>()
        };
        serde_json::json!({
            "plus": fmt(&self.plus),
            "minus": fmt(&self.minus),
            "identity": self.identity.to_string(),
        })
    }
}

fn exact_entries_to_matrix(m: usize, acc: &BTreeMap<(usize, usize), CRat>) -> SparseMatrix {
    let mut out = SparseMatrix::zero(m);
    for (&(r, c), v) in acc {
        if !v.is_zero() {
            out.set_entry(r, c, v.to_c64());
        }
    }
    out
}

fn require_line(g: &DirectedGraph) -> Result<usize> {
    match g.tree_params() {
        Some((1, _)) => Ok(g.vertex_count()),
        _ => Err(Error::InvalidParameter(
            "this operation needs a 1-regular tree (a line graph)".into(),
        )),
    }
}

fn require_positive(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "block order k must be at least 1; use the identity coefficient for k = 0".into(),
        ));
    }
    Ok(())
}

/// The line graph with `m` vertices (a 1-regular tree of depth `m − 1`).
pub fn line_graph(m: usize) -> Result<DirectedGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "a line graph needs at least one vertex".into(),
        ));
    }
    DirectedGraph::regular_tree(1, m - 1)
}

/// The forward path word of length `k` starting at vertex index `start`
/// on a line graph: steps `start → start+1 → … → start+k`.
fn forward_path(g: &DirectedGraph, start: usize, k: usize) -> Word {
    let steps: Vec<Step> = (start..start + k)
        .map(|p| {
            let e = g
                .find_edge(VertexId(p as u32), VertexId(p as u32 + 1), 0)
                .expect("consecutive line vertices are joined by an edge");
            Step {
                edge: e,
                shadow: false,
            }
        })
        .collect();
    Word::Path(steps)
}

/// The sum of all forward length-`k` path generators on a line graph:
/// the element whose band image is `T₊(k)`.
pub fn build_tplus_element(g: &DirectedGraph, k: usize) -> Result<AlgebraElement> {
    let m = require_line(g)?;
    require_positive(k)?;
    let mut acc = AlgebraElement::zero();
    for start in 0..m.saturating_sub(k) {
        acc.add_term(forward_path(g, start, k), CRat::one())?;
    }
    Ok(acc)
}

/// The adjoint family: backward length-`k` path generators, band image
/// `T₋(k)`.
pub fn build_tminus_element(g: &DirectedGraph, k: usize) -> Result<AlgebraElement> {
    Ok(adjoint(&build_tplus_element(g, k)?))
}

/// The 0/1 matrix `T₊(k)` at window size `m`: ones at `(p, p)` and
/// `(p, p+k)` for `p < m − k`, nothing in the last `k` rows.
pub fn t_plus_matrix(k: usize, m: usize) -> Result<SparseMatrix> {
    require_positive(k)?;
    let mut out = SparseMatrix::zero(m);
    for p in 0..m.saturating_sub(k) {
        out.set_entry(p, p, Complex64::new(1.0, 0.0));
        out.set_entry(p, p + k, Complex64::new(1.0, 0.0));
    }
    Ok(out)
}

/// The conjugate transpose of [`t_plus_matrix`]: ones at `(p, p)` and
/// `(p+k, p)`.
pub fn t_minus_matrix(k: usize, m: usize) -> Result<SparseMatrix> {
    Ok(t_plus_matrix(k, m)?.conjugate_transpose())
}

/// The exact band image of an algebra element over a line graph, as a
/// map from matrix position to exact coefficient.
///
/// Generators map as: the unit at vertex `p` to `E_{p,p}`; a path
/// generator with endpoints `s → r` to `E_{lo,lo} + E_{s,r}` where `lo`
/// is the smaller endpoint.  Forward paths therefore land on the
/// superdiagonals and backward paths on the subdiagonals, each carrying
/// its own diagonal marker.
pub fn alpha_entries(
    g: &DirectedGraph,
    a: &AlgebraElement,
) -> Result<BTreeMap<(usize, usize), CRat>> {
    require_line(g)?;
    let mut acc: BTreeMap<(usize, usize), CRat> = BTreeMap::new();
    let mut bump = |pos: (usize, usize), c: &CRat| {
        let e = acc.entry(pos).or_insert_with(CRat::zero);
        *e = e.clone() + c.clone();
    };
    for (w, c) in a.terms() {
        word::validate_word(g, w)?;
        match w {
            Word::Empty => unreachable!("elements never store the absorbing word"),
            Word::Vertex(v) => bump((v.0 as usize, v.0 as usize), c),
            Word::Path(_) => {
                let s = word::source(g, w).expect("paths have endpoints").0 as usize;
                let r = word::range(g, w).expect("paths have endpoints").0 as usize;
                let lo = s.min(r);
                bump((lo, lo), c);
                bump((s, r), c);
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    Ok(acc)
}

/// The band image of an element as a floating-point matrix over the
/// full vertex space of the line graph.
pub fn alpha_element_matrix(g: &DirectedGraph, a: &AlgebraElement) -> Result<SparseMatrix> {
    let m = require_line(g)?;
    Ok(exact_entries_to_matrix(m, &alpha_entries(g, a)?))
}

/// Compares two `m × m` window matrices away from the bottom-right
/// corner: rows and columns within `margin` of the window edge are
/// excluded.
pub fn band_interior_equal(
    a: &SparseMatrix,
    b: &SparseMatrix,
    margin: usize,
    tol: f64,
) -> Result<InteriorReport> {
    let cut = a.dim().saturating_sub(margin);
    a.compare_on(b, tol, |c| c < cut, |r| r < cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multiply;
    use crate::matrix::DEFAULT_TOL;

    #[test]
    fn symbol_literals_round_trip_and_reject_malformed_input() {
        let sym = ToeplitzSymbol::parse("t-2=i, t-1=3, t0=2, t1=1/2-1/3i").unwrap();
        assert_eq!(sym.coeff(-2), CRat::i());
        assert_eq!(sym.coeff(-1), CRat::int(3));
        assert_eq!(sym.coeff(0), CRat::int(2));
        assert_eq!(sym.coeff(1), CRat::rat2(1, 2, -1, 3));
        assert_eq!(sym.coeff(7), CRat::zero());
        assert_eq!(sym.upper_band(), 2);
        assert_eq!(sym.lower_band(), 1);

        let lit = sym.to_literal();
        assert_eq!(lit, "t-2=1i,t-1=3,t0=2,t1=1/2-1/3i");
        assert_eq!(ToeplitzSymbol::parse(&lit).unwrap(), sym);

        assert!(ToeplitzSymbol::parse("").is_err());
        assert!(ToeplitzSymbol::parse("s0=1").is_err());
        assert!(ToeplitzSymbol::parse("t0").is_err());
        assert!(ToeplitzSymbol::parse("tx=1").is_err());
        assert!(ToeplitzSymbol::parse("t0=1,t0=2").is_err());
        assert!(ToeplitzSymbol::parse("t0=1+2").is_err());
    }

    #[test]
    fn banded_matrix_is_constant_along_diagonals_with_full_corners() {
        let sym = ToeplitzSymbol::parse("t-1=3,t0=2,t1=1").unwrap();
        let a = sym.banded_matrix(4);
        for r in 0..4usize {
            for c in 0..4usize {
                let want = match r as i64 - c as i64 {
                    -1 => 3.0,
                    0 => 2.0,
                    1 => 1.0,
                    _ => 0.0,
                };
                assert_eq!(a.get(r, c), Complex64::new(want, 0.0), "({r},{c})");
            }
        }
        // corners included: the last diagonal entry is still t0
        assert_eq!(a.get(3, 3), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn block_matrices_have_the_documented_01_pattern() {
        let t2 = t_plus_matrix(2, 5).unwrap();
        assert_eq!(t2.nnz(), 6);
        for p in 0..3 {
            assert_eq!(t2.get(p, p), Complex64::new(1.0, 0.0));
            assert_eq!(t2.get(p, p + 2), Complex64::new(1.0, 0.0));
        }
        // last k rows empty
        for c in 0..5 {
            assert_eq!(t2.get(3, c), Complex64::new(0.0, 0.0));
            assert_eq!(t2.get(4, c), Complex64::new(0.0, 0.0));
        }
        assert_eq!(t_minus_matrix(2, 5).unwrap(), t2.conjugate_transpose());
        assert!(t_plus_matrix(0, 5).is_err());
        // order beyond the window is simply zero
        assert!(t_plus_matrix(9, 5).unwrap().is_zero());
    }

    #[test]
    fn band_image_of_block_elements_matches_block_matrices_exactly() {
        let g = line_graph(6).unwrap();
        for k in 1..=5usize {
            let plus = build_tplus_element(&g, k).unwrap();
            assert_eq!(plus.term_count(), 6 - k);
            assert_eq!(
                alpha_element_matrix(&g, &plus).unwrap(),
                t_plus_matrix(k, 6).unwrap(),
                "T+({k})"
            );
            let minus = build_tminus_element(&g, k).unwrap();
            assert_eq!(minus, adjoint(&plus));
            assert_eq!(
                alpha_element_matrix(&g, &minus).unwrap(),
                t_minus_matrix(k, 6).unwrap(),
                "T-({k})"
            );
        }
        // beyond the depth the element is the zero sum
        assert!(build_tplus_element(&g, 6).unwrap().is_zero());
        assert!(build_tplus_element(&g, 0).is_err());
    }

    #[test]
    fn band_image_respects_the_adjoint() {
        let g = line_graph(5).unwrap();
        let mut a = build_tplus_element(&g, 2)
            .unwrap()
            .scale(&CRat::rat2(1, 2, 3, 1));
        a = a.add(&AlgebraElement::unit(&g).scale(&CRat::i()));
        let m = alpha_element_matrix(&g, &a).unwrap();
        let m_star = alpha_element_matrix(&g, &adjoint(&a)).unwrap();
        assert_eq!(m_star, m.conjugate_transpose());
    }

    #[test]
    fn powers_of_the_first_block_give_higher_blocks() {
        let g = line_graph(7).unwrap();
        // in the algebra the identity is exact at every truncation
        let p1 = build_tplus_element(&g, 1).unwrap();
        let mut pk = p1.clone();
        for k in 2..=4usize {
            pk = multiply(&g, &pk, &p1).unwrap();
            assert_eq!(pk, build_tplus_element(&g, k).unwrap(), "power {k}");
        }
        // on the window the identity holds away from the corner
        let m = 8;
        for k in 2..=4usize {
            let lhs = t_plus_matrix(1, m)
                .unwrap()
                .sub(&SparseMatrix::identity(m))
                .unwrap()
                .pow(k);
            let rhs = t_plus_matrix(k, m)
                .unwrap()
                .sub(&SparseMatrix::identity(m))
                .unwrap();
            assert!(!lhs.approx_eq(&rhs, DEFAULT_TOL).unwrap(), "corner differs");
            let rep = band_interior_equal(&lhs, &rhs, k, 0.0).unwrap();
            assert!(rep.equal, "interior at margin {k}: {rep:?}");
            assert_eq!(rep.max_deviation, 0.0);
        }
    }

    #[test]
    fn rewrite_produces_the_exact_diagonal_correction() {
        let sym = ToeplitzSymbol::parse("t-1=1/3,t0=1/2,t1=1/5+2i").unwrap();
        assert_eq!(sym.s0(), CRat::rat2(-1, 30, -2, 1));
        let combo = sym.rewrite();
        assert_eq!(combo.plus().len(), 1);
        assert_eq!(combo.plus()[&1], CRat::rat(1, 3));
        assert_eq!(combo.minus()[&1], CRat::rat2(1, 5, 2, 1));
        assert_eq!(combo.identity_coefficient(), &CRat::rat2(-1, 30, -2, 1));
    }

    #[test]
    fn rewrite_matches_the_banded_matrix_away_from_the_corner() {
        let sym = ToeplitzSymbol::parse("t-2=i,t-1=3,t0=2,t1=1").unwrap();
        let combo = sym.rewrite();
        let m = 12;
        let banded = sym.banded_matrix(m);
        let built = combo.vertex_matrix(m);
        // the corner rows differ...
        assert!(!banded.approx_eq(&built, DEFAULT_TOL).unwrap());
        // ...the interior at margin n + k agrees exactly
        let margin = sym.upper_band() + sym.lower_band();
        let rep = band_interior_equal(&banded, &built, margin, 0.0).unwrap();
        assert!(rep.equal, "{rep:?}");
        assert_eq!(rep.max_deviation, 0.0);
    }

    #[test]
    fn combo_element_band_image_matches_its_vertex_matrix() {
        let sym = ToeplitzSymbol::parse("t-1=1/2-1/2i,t0=4,t2=2/7").unwrap();
        let combo = sym.rewrite();
        let m = 9;
        let g = line_graph(m).unwrap();
        let elem = combo.to_element(&g).unwrap();
        assert_eq!(
            alpha_element_matrix(&g, &elem).unwrap(),
            combo.vertex_matrix(m)
        );
    }

    #[test]
    fn band_image_requires_a_line_graph() {
        let g = DirectedGraph::regular_tree(2, 2).unwrap();
        let a = AlgebraElement::unit(&g);
        assert!(alpha_element_matrix(&g, &a).is_err());
        assert!(build_tplus_element(&g, 1).is_err());
        assert!(line_graph(0).is_err());
    }

    #[test]
    fn combo_json_uses_exact_literals() {
        let combo = ToeplitzSymbol::parse("t-1=3,t0=2,t1=1/2")
            .unwrap()
            .rewrite();
        let v = combo.to_json_value();
        assert_eq!(v["plus"]["1"], "3");
        assert_eq!(v["minus"]["1"], "1/2");
        assert_eq!(v["identity"], "-3/2");
    }
}
