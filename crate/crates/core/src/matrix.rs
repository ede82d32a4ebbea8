//! Sparse square complex matrices for truncated operator windows.
//!
//! Matrices act on column vectors: the entry at `(row, col)` is the
//! coefficient of basis vector `row` in the image of basis vector `col`.
//! Indices are 0-based everywhere, including the export formats.
//!
//! Storage is a row-major ordered map, so iteration, comparison, and the
//! two export formats are deterministic.  Entries with magnitude below
//! [`PRUNE_EPS`] are dropped on write; approximate comparisons use the
//! crate-wide default tolerance [`DEFAULT_TOL`] unless a caller passes
//! its own.

use num_complex::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Magnitude below which a stored entry is treated as an exact zero.
pub const PRUNE_EPS: f64 = 1e-15;

/// Default tolerance for approximate matrix comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;

/// A sparse `dim × dim` complex matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), Complex64>,
}

/// Outcome of an interior comparison: whether two windows agree on the
/// compared columns, and the worst deviation found.
#[derive(Clone, Debug, Serialize)]
pub struct InteriorReport {
    /// True iff every compared entry pair is within tolerance.
    pub equal: bool,
    /// Number of columns included in the comparison.
    pub compared_columns: usize,
    /// Largest absolute entry difference over the compared region.
    pub max_deviation: f64,
    /// Position of the worst deviation, when any entry was compared.
    pub worst_entry: Option<(usize, usize)>,
}

impl SparseMatrix {
    /// The zero matrix of the given dimension.
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = SparseMatrix::zero(dim);
        for i in 0..dim {
            m.entries.insert((i, i), Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; indices must be
    /// in range, repeated positions accumulate.
    pub fn from_entries<I>(dim: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Complex64)>,
    {
        let mut m = SparseMatrix::zero(dim);
        for (r, c, v) in triples {
            m.check_pos(r, c)?;
            m.add_entry(r, c, v);
        }
        Ok(m)
    }

    fn check_pos(&self, r: usize, c: usize) -> Result<()> {
        if r >= self.dim || c >= self.dim {
            return Err(Error::DimensionMismatch(format!(
                "entry ({r}, {c}) outside a {0} x {0} matrix",
                self.dim
            )));
        }
        Ok(())
    }

    /// Adds `v` into the entry at `(r, c)`, pruning near-zeros.
    pub fn add_entry(&mut self, r: usize, c: usize, v: Complex64) {
        debug_assert!(r < self.dim && c < self.dim);
        let e = self
            .entries
            .entry((r, c))
            .or_insert(Complex64::new(0.0, 0.0));
        *e += v;
        if e.norm() < PRUNE_EPS {
            self.entries.remove(&(r, c));
        }
    }

    /// Overwrites the entry at `(r, c)`.
    pub fn set_entry(&mut self, r: usize, c: usize, v: Complex64) {
        debug_assert!(r < self.dim && c < self.dim);
        if v.norm() < PRUNE_EPS {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// The entry at `(r, c)` (zero when absent).
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries
            .get(&(r, c))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// True iff no entries are stored.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterates `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    fn check_same_dim(&self, other: &SparseMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} x {0} vs {1} x {1}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_same_dim(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v);
        }
        Ok(out)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Scalar multiple.
    pub fn scale(&self, s: Complex64) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim);
        for (r, c, v) in self.entries() {
            out.add_entry(r, c, v * s);
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_same_dim(other)?;
        let mut out = SparseMatrix::zero(self.dim);
        for (&(r, k), &va) in &self.entries {
            // all entries of `other` in row k
            for (&(_, c), &vb) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                out.add_entry(r, c, va * vb);
            }
        }
        Ok(out)
    }

    /// `self` raised to a nonnegative integer power.
    pub fn pow(&self, k: usize) -> SparseMatrix {
        let mut acc = SparseMatrix::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension by construction");
        }
        acc
    }

    /// Conjugate transpose.
    pub fn conjugate_transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.dim);
        for (r, c, v) in self.entries() {
            out.add_entry(c, r, v.conj());
        }
        out
    }

    /// Largest absolute entry difference against another matrix.
    pub fn max_abs_diff(&self, other: &SparseMatrix) -> Result<f64> {
        self.check_same_dim(other)?;
        let mut worst = 0.0f64;
        for (r, c, v) in self.entries() {
            worst = worst.max((v - other.get(r, c)).norm());
        }
        for (r, c, v) in other.entries() {
            worst = worst.max((self.get(r, c) - v).norm());
        }
        Ok(worst)
    }

    /// True iff all entries agree within `tol`.
    pub fn approx_eq(&self, other: &SparseMatrix, tol: f64) -> Result<bool> {
        Ok(self.max_abs_diff(other)? <= tol)
    }

    /// Compares two windows on a subset of columns (and optionally rows),
    /// returning the worst deviation over the compared region.
    ///
    /// `col_ok` selects the compared columns; `row_ok` the compared rows.
    /// This is the shared engine behind the basis-aware and band-aware
    /// interior comparisons.
    pub fn compare_on<FC, FR>(
        &self,
        other: &SparseMatrix,
        tol: f64,
        col_ok: FC,
        row_ok: FR,
    ) -> Result<InteriorReport>
    where
        FC: Fn(usize) -> bool,
        FR: Fn(usize) -> bool,
    {
        self.check_same_dim(other)?;
        let mut max_deviation = 0.0f64;
        let mut worst_entry = None;
        let mut visit = |r: usize, c: usize, a: Complex64, b: Complex64| {
            let d = (a - b).norm();
            if d > max_deviation {
                max_deviation = d;
                worst_entry = Some((r, c));
            }
        };
        for (r, c, v) in self.entries() {
            if col_ok(c) && row_ok(r) {
                visit(r, c, v, other.get(r, c));
            }
        }
        for (r, c, v) in other.entries() {
            if col_ok(c) && row_ok(r) {
                visit(r, c, self.get(r, c), v);
            }
        }
        let compared_columns = (0..self.dim).filter(|&c| col_ok(c)).count();
        Ok(InteriorReport {
            equal: max_deviation <= tol,
            compared_columns,
            max_deviation,
            worst_entry,
        })
    }

    // ================================================================
    // Export
    // ================================================================

    /// Coordinate text form: a header `dim <n> nnz <m>`, then one line
    /// `row col re im` per stored entry in row-major order.
    pub fn to_coord_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "dim {} nnz {}", self.dim, self.entries.len()).unwrap();
        for (r, c, v) in self.entries() {
            writeln!(out, "{} {} {} {}", r, c, v.re, v.im).unwrap();
        }
        out
    }

    /// JSON form carrying the same content as the coordinate text.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct EntryJson {
            row: usize,
            col: usize,
            re: f64,
            im: f64,
        }
        #[derive(Serialize)]
        struct MatrixJson {
            dim: usize,
            nnz: usize,
            entries: Vec<EntryJson>,
        }
        let doc = MatrixJson {
            dim: self.dim,
            nnz: self.entries.len(),
            entries: self
                .entries()
                .map(|(r, c, v)| EntryJson {
                    row: r,
                    col: c,
                    re: v.re,
                    im: v.im,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("matrix serialization cannot fail")
    }
}
