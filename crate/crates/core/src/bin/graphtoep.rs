//! Command-line front end: construct graphs, reduce words, emit
//! truncated matrices, rewrite banded symbols, and run the named
//! verification suites with deterministic JSON reports.
//!
//! Exit codes: 0 success / suite passed; 1 a verification ran and
//! failed; 2 usage or parse errors; 3 data errors (unknown labels,
//! foreign words, unreadable files).

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use graphtoep::algebra::{element_from_json, AlgebraElement};
use graphtoep::matrix::{SparseMatrix, DEFAULT_TOL};
use graphtoep::representation::{compress_to_vertex_space, matrix_of_element, BasisIndex};
use graphtoep::suites::{
    suite_anti_iso, suite_fock_relations, suite_groupoid_axioms, suite_representation_homomorphism,
    suite_toeplitz_embed, suite_toeplitz_rewrite, suite_tree_fock_correspondence, SuiteReport,
};
use graphtoep::tree_toeplitz::{
    alpha_element_matrix, band_interior_equal, build_tminus_element, build_tplus_element,
    ToeplitzSymbol,
};
use graphtoep::word::{format_word, parse_word};
use graphtoep::{DirectedGraph, Error, Result};

/// Graph groupoids, banded Toeplitz rewrites, and Fock-space checks.
#[derive(Parser)]
#[command(name = "graphtoep", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a word literal against a graph and print its canonical form.
    Reduce {
        #[command(flatten)]
        graph: GraphSpec,
        /// Word literal: "null", "v:LABEL", or steps like "1>2;2<1".
        word: String,
    },
    /// Emit the truncated matrix of an algebra element.
    Matrix {
        #[command(flatten)]
        graph: GraphSpec,
        /// Longest basis word length (defaults to the tree depth).
        #[arg(long, value_name = "K")]
        maxlen: Option<usize>,
        #[command(flatten)]
        element: ElementSpec,
        /// Restrict to the vertex space: the exact band image on line
        /// graphs, the literal vertex block elsewhere.
        #[arg(long)]
        vertex_block: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Coord)]
        format: Format,
        /// Also write the output to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite and print its JSON report.
    Verify {
        /// One of: groupoid-axioms, representation-homomorphism,
        /// toeplitz-embed, toeplitz-rewrite, fock-relations, anti-iso,
        /// tree-fock-correspondence.
        suite: String,
        /// Regular tree as "DEGREE,DEPTH" where the suite takes a graph.
        #[arg(long, value_name = "N,DEPTH")]
        tree: Option<String>,
        /// Longest word length (meaning depends on the suite).
        #[arg(long, value_name = "K")]
        maxlen: Option<usize>,
        /// Basis word length for representation checks
        /// (defaults to twice the word length).
        #[arg(long, value_name = "K")]
        basis_maxlen: Option<usize>,
        /// Longest step sequence for the reduction sweep.
        #[arg(long, value_name = "L")]
        sweep_len: Option<usize>,
        /// Leave out the loop/multi-edge fixture.
        #[arg(long)]
        skip_fixture: bool,
        /// Matrix window size.
        #[arg(long, value_name = "M")]
        size: Option<usize>,
        /// Number of random cases.
        #[arg(long, value_name = "C")]
        cases: Option<usize>,
        /// Random seed for the sampled suites.
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Alphabet size / tree degree for the Fock suites.
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Degree cap / tree depth for the Fock suites.
        #[arg(long, value_name = "D")]
        depth: Option<usize>,
        /// Also write the report to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Banded-symbol utilities.
    Toeplitz {
        #[command(subcommand)]
        cmd: ToeplitzCmd,
    },
    /// Fock-space utilities.
    Fock {
        #[command(subcommand)]
        cmd: FockCmd,
    },
}

#[derive(Subcommand)]
enum ToeplitzCmd {
    /// Rewrite a banded symbol as shift-power sums plus an exact
    /// constant, optionally verifying the interior identity.
    Rewrite {
        /// Symbol literal, e.g. "t-1=3,t0=2,t1=1/2+i".
        #[arg(long, value_name = "SYM")]
        symbol: String,
        /// Matrix window size for display and verification.
        #[arg(long, value_name = "M", default_value_t = 64)]
        size: usize,
        /// Check the banded matrix against the rewrite on the interior.
        #[arg(long)]
        verify: bool,
        /// Rows and columns near the far corner to exclude from the
        /// check (defaults to the symbol's total bandwidth; smaller
        /// values expose the genuine corner defect).
        #[arg(long, value_name = "W")]
        margin: Option<usize>,
        /// Also write the output to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FockCmd {
    /// Run one of the Fock-side verification suites.
    Verify {
        /// Alphabet size (1..=9).
        #[arg(long, value_name = "N", default_value_t = 2)]
        n: usize,
        /// Degree cap / tree depth.
        #[arg(long, value_name = "D", default_value_t = 5)]
        depth: usize,
        /// Which suite to run.
        #[arg(long, value_enum)]
        suite: FockSuite,
        /// Number of random cases (sampled suites).
        #[arg(long, value_name = "C")]
        cases: Option<usize>,
        /// Longest ladder word (anti-iso suite).
        #[arg(long, value_name = "K")]
        maxlen: Option<usize>,
        /// Random seed for the sampled suites.
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Also write the report to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FockSuite {
    /// Annihilation-creation relations on both sides.
    Relations,
    /// The product-reversing left↔right swap.
    AntiIso,
    /// The tree↔Fock right-creation correspondence.
    Correspondence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Header line plus one "row col re im" line per entry.
    Coord,
    /// JSON object with the same content.
    Json,
}

/// Exactly one way to name the graph.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSpec {
    /// Regular tree as "DEGREE,DEPTH" (degree 1 gives the line).
    #[arg(long, value_name = "N,DEPTH")]
    tree: Option<String>,
    /// Graph loaded from a JSON description file.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

impl GraphSpec {
    fn build(&self) -> Result<DirectedGraph> {
        if let Some(spec) = &self.tree {
            let (degree, depth) = parse_tree_spec(spec)?;
            DirectedGraph::regular_tree(degree, depth)
        } else if let Some(path) = &self.graph {
            DirectedGraph::from_json(&std::fs::read_to_string(path)?)
        } else {
            unreachable!("clap enforces the group")
        }
    }
}

/// Exactly one way to name the element.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ElementSpec {
    /// The unit element (sum of all vertex units).
    #[arg(long)]
    identity: bool,
    /// Uniform forward path sum of length K (line graphs).
    #[arg(long, value_name = "K")]
    tplus: Option<usize>,
    /// Uniform backward path sum of length K (line graphs).
    #[arg(long, value_name = "K")]
    tminus: Option<usize>,
    /// Single-step generator from a step literal like "∅>1".
    #[arg(long, value_name = "LIT")]
    edge: Option<String>,
    /// Generator of an arbitrary word literal.
    #[arg(long, value_name = "LIT")]
    word: Option<String>,
    /// Element loaded from a JSON term-list file.
    #[arg(long, value_name = "FILE")]
    element: Option<PathBuf>,
}

impl ElementSpec {
    fn build(&self, g: &DirectedGraph) -> Result<AlgebraElement> {
        if self.identity {
            Ok(AlgebraElement::unit(g))
        } else if let Some(k) = self.tplus {
            build_tplus_element(g, k)
        } else if let Some(k) = self.tminus {
            build_tminus_element(g, k)
        } else if let Some(lit) = &self.edge {
            let w = parse_word(g, lit)?;
            if w.length() != 1 {
                return Err(Error::InvalidParameter(format!(
                    "--edge expects a single step, got `{}`",
                    format_word(g, &w)
                )));
            }
            AlgebraElement::word(w)
        } else if let Some(lit) = &self.word {
            let w = parse_word(g, lit)?;
            if w.is_empty_word() {
                return Err(Error::InvalidParameter(
                    "--word reduced to the absorbing word, which is the zero element".into(),
                ));
            }
            AlgebraElement::word(w)
        } else if let Some(path) = &self.element {
            element_from_json(g, &std::fs::read_to_string(path)?)
        } else {
            unreachable!("clap enforces the group")
        }
    }
}

fn parse_tree_spec(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("tree spec `{s}` must be \"DEGREE,DEPTH\"")))?;
    let degree = a
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad tree degree `{a}`")))?;
    let depth = b
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad tree depth `{b}`")))?;
    Ok((degree, depth))
}

/// Prints `text` (newline-terminated) and mirrors it to `--out`.
fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    let mut text = std::borrow::Cow::Borrowed(text);
    if !text.ends_with('\n') {
        text.to_mut().push('\n');
    }
    print!("{text}");
    std::io::stdout().flush()?;
    if let Some(path) = out {
        std::fs::write(path, text.as_bytes())?;
    }
    Ok(())
}

/// Emits a suite report and turns its verdict into an exit code.
fn emit_report(report: &SuiteReport, out: Option<&Path>) -> Result<i32> {
    emit(&report.to_json_string(), out)?;
    Ok(if report.pass { 0 } else { 1 })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::EmptySteps
        | Error::EmptyWordCoefficient
        | Error::MixedSides
        | Error::DimensionMismatch(_)
        | Error::OutOfTruncation(_) => 2,
        Error::UnknownVertex(_)
        | Error::UnknownEdge(_)
        | Error::ForeignEdge { .. }
        | Error::ForeignWord(_)
        | Error::GraphData(_)
        | Error::Io(_)
        | Error::Json(_) => 3,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code_for(&e));
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Reduce { graph, word } => {
            let g = graph.build()?;
            let w = parse_word(&g, &word)?;
            println!("{}", format_word(&g, &w));
            Ok(0)
        }
        Cmd::Matrix {
            graph,
            maxlen,
            element,
            vertex_block,
            format,
            out,
        } => {
            let g = graph.build()?;
            let el = element.build(&g)?;
            let m = matrix_command(&g, &el, maxlen, vertex_block)?;
            let text = match format {
                Format::Coord => m.to_coord_text(),
                Format::Json => m.to_json(),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Cmd::Verify {
            suite,
            tree,
            maxlen,
            basis_maxlen,
            sweep_len,
            skip_fixture,
            size,
            cases,
            seed,
            n,
            depth,
            out,
        } => {
            let report = match suite.as_str() {
                "groupoid-axioms" => {
                    let (degree, tree_depth) = tree_or(&tree, (2, 3))?;
                    suite_groupoid_axioms(
                        degree,
                        tree_depth,
                        maxlen.unwrap_or(3),
                        sweep_len.unwrap_or(4),
                        !skip_fixture,
                    )?
                }
                "representation-homomorphism" => {
                    let (degree, tree_depth) = tree_or(&tree, (2, 4))?;
                    let word_maxlen = maxlen.unwrap_or(3);
                    suite_representation_homomorphism(
                        degree,
                        tree_depth,
                        word_maxlen,
                        basis_maxlen.unwrap_or(2 * word_maxlen),
                        !skip_fixture,
                    )?
                }
                "toeplitz-embed" => suite_toeplitz_embed(
                    maxlen.unwrap_or(8),
                    size.unwrap_or(64),
                    depth.unwrap_or(16),
                    3,
                )?,
                "toeplitz-rewrite" => {
                    suite_toeplitz_rewrite(cases.unwrap_or(100), size.unwrap_or(64), 5, seed)?
                }
                "fock-relations" => suite_fock_relations(
                    n.unwrap_or(2),
                    depth.unwrap_or(6),
                    cases.unwrap_or(50),
                    seed,
                )?,
                "anti-iso" => suite_anti_iso(
                    n.unwrap_or(2),
                    depth.unwrap_or(8),
                    cases.unwrap_or(200),
                    maxlen.unwrap_or(4),
                    seed,
                )?,
                "tree-fock-correspondence" => suite_tree_fock_correspondence(
                    n.unwrap_or(2),
                    depth.unwrap_or(5),
                    maxlen.unwrap_or(3),
                )?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown suite `{other}`; expected one of groupoid-axioms, \
                         representation-homomorphism, toeplitz-embed, toeplitz-rewrite, \
                         fock-relations, anti-iso, tree-fock-correspondence"
                    )))
                }
            };
            emit_report(&report, out.as_deref())
        }
        Cmd::Toeplitz {
            cmd:
                ToeplitzCmd::Rewrite {
                    symbol,
                    size,
                    verify,
                    margin,
                    out,
                },
        } => {
            let sym = ToeplitzSymbol::parse(&symbol)?;
            let combo = sym.rewrite();
            let mut doc = serde_json::json!({
                "symbol": sym.to_literal(),
                "combo": combo.to_json_value(),
                "s0": format!("{}", combo.identity_coefficient()),
            });
            let mut code = 0;
            if verify {
                let margin = margin.unwrap_or(sym.upper_band() + sym.lower_band());
                let report = band_interior_equal(
                    &sym.banded_matrix(size),
                    &combo.vertex_matrix(size),
                    margin,
                    DEFAULT_TOL,
                )?;
                code = if report.equal { 0 } else { 1 };
                doc["verify"] = serde_json::json!({
                    "size": size,
                    "margin": margin,
                    "report": serde_json::to_value(&report)?,
                    "pass": report.equal,
                });
            }
            emit(&serde_json::to_string_pretty(&doc)?, out.as_deref())?;
            Ok(code)
        }
        Cmd::Fock {
            cmd:
                FockCmd::Verify {
                    n,
                    depth,
                    suite,
                    cases,
                    maxlen,
                    seed,
                    out,
                },
        } => {
            let report = match suite {
                FockSuite::Relations => suite_fock_relations(n, depth, cases.unwrap_or(50), seed)?,
                FockSuite::AntiIso => {
                    suite_anti_iso(n, depth, cases.unwrap_or(200), maxlen.unwrap_or(4), seed)?
                }
                FockSuite::Correspondence => {
                    suite_tree_fock_correspondence(n, depth, maxlen.unwrap_or(3))?
                }
            };
            emit_report(&report, out.as_deref())
        }
    }
}

fn tree_or(spec: &Option<String>, default: (usize, usize)) -> Result<(usize, usize)> {
    match spec {
        Some(s) => parse_tree_spec(s),
        None => Ok(default),
    }
}

fn matrix_command(
    g: &DirectedGraph,
    el: &AlgebraElement,
    maxlen: Option<usize>,
    vertex_block: bool,
) -> Result<SparseMatrix> {
    // On a line graph the vertex-space form of any element is its exact
    // band image; path generators have no literal vertex-block support.
    if vertex_block && matches!(g.tree_params(), Some((1, _))) {
        return alpha_element_matrix(g, el);
    }
    let maxlen = match (maxlen, g.tree_params()) {
        (Some(k), _) => k,
        (None, Some((_, depth))) => depth,
        (None, None) => {
            return Err(Error::InvalidParameter(
                "--maxlen is required for general graphs".into(),
            ))
        }
    };
    let basis = BasisIndex::new(g, maxlen);
    let m = matrix_of_element(g, &basis, el)?;
    if vertex_block {
        compress_to_vertex_space(&m, &basis)
    } else {
        Ok(m)
    }
}
