//! Graph groupoids, their *-algebras, and finite-dimensional windows onto
//! their canonical Hilbert-space representation.
//!
//! The crate is layered bottom-up:
//!
//! * [`graph`] — finite directed graphs, shadow (reversed) edges, and the
//!   canonical depth-truncated regular trees.
//! * [`word`] — the path groupoid: admissible reduced words, the absorbing
//!   empty word, stack-based reduction, products, inverses, enumeration.
//! * [`algebra`] — finitely supported complex-rational combinations of
//!   groupoid words with product, adjoint, the diagonal conditional
//!   expectation, and an exact inner product.
//! * [`matrix`] / [`representation`] — sparse complex matrices and the
//!   truncated left-regular representation `L_w ξ_u = ξ_{w·u}`, with an
//!   interior-column comparison discipline that makes finite windows of
//!   infinite operator identities exact where they should be.
//! * [`tree_toeplitz`] — the band calculus on the 1-regular tree (line):
//!   band matrices attached to uniform path sums, and the rewrite of any
//!   banded Toeplitz matrix as a combination of those sums plus an exact
//!   constant correction.
//! * [`fock`] — truncated Fock spaces over `ℂ^N`, left/right creation and
//!   annihilation, the product-reversing left↔right swap, and the
//!   identification of tree vertex spaces with Fock spaces that carries
//!   uniform child-edge sums to right creation operators.
//! * [`suites`] — named, seeded verification suites with deterministic
//!   JSON reports; the command-line binary is a thin shell over these.
//!
//! Exactness discipline: everything algebraic is computed over rationals
//! ([`exact::CRat`]) and compared with equality; only the matrix layer
//! converts to `f64`, and floating-point comparisons there use a stated
//! tolerance (`1e-12` by default).

pub mod algebra;
pub mod error;
pub mod exact;
pub mod fock;
pub mod graph;
pub mod matrix;
pub mod representation;
pub mod suites;
pub mod tree_toeplitz;
pub mod word;

pub use error::{Error, Result};
pub use exact::CRat;
pub use graph::{DirectedGraph, EdgeId, GraphKind, Step, VertexId};
pub use word::Word;
