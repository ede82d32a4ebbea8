//! Groupoid words: reduced paths in the shadowed graph, vertex units, and
//! the absorbing empty word.
//!
//! The path groupoid of a directed graph `G` is carried by three kinds of
//! elements, mirrored by the [`Word`] variants:
//!
//! * [`Word::Empty`] — the absorbing zero `∅`.  Every undefined
//!   concatenation lands here, and `∅` multiplied by anything is `∅`.
//! * [`Word::Vertex`] — one idempotent unit per vertex.
//! * [`Word::Path`] — a nonempty *admissible, reduced* sequence of
//!   [`Step`]s: consecutive steps are end-to-start compatible, and no step
//!   is immediately followed by its own shadow.
//!
//! A raw step sequence denotes the product of its steps.  If any adjacent
//! junction fails (the target of one step is not the source of the next)
//! that product is `∅` — an inadmissible sequence *is* the empty word, it
//! is not rewritten into it.  Cancelling a step against its shadow never
//! changes the junctions around the cancelled pair, so for admissible
//! sequences the cancellation system is confluent and [`reduce`] computes
//! the unique normal form with a single stack pass.  The two cancellation
//! rules are the groupoid relations `w·w⁻¹ = unit at source(w)` and
//! `w⁻¹·w = unit at range(w)`.
//!
//! Words are ordered canonically — `∅`, then vertices in graph order,
//! then paths by length and lexicographically by their step sequence —
//! and [`enumerate_words`] lists all words up to a path-length cap in
//! exactly that order.  The order is what makes every basis, matrix, and
//! report in this crate reproducible byte for byte.
//!
//! # Word literals
//!
//! The textual form used by files and the command line:
//!
//! * `null` — the empty word;
//! * `v:LABEL` — the vertex unit at `LABEL` (`v:∅` for a tree root);
//! * steps joined by `;`, each `SRC>DST` for a forward edge or `SRC<DST`
//!   for a shadow step from `SRC` back along the base edge `DST -> SRC`.
//!   A parallel edge with tag `t != 0` is written `SRC>DST#t`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Step, VertexId};

/// An element of the path groupoid of a fixed graph.
///
/// A word stores step/vertex indices only; all operations take the owning
/// [`DirectedGraph`] explicitly, and words must not be mixed between
/// graphs.  `Path` values constructed by this crate always satisfy the
/// admissible/reduced invariant; [`validate_word`] checks it for words
/// from outside.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Word {
    /// The absorbing empty word `∅`.
    Empty,
    /// The unit at a vertex.
    Vertex(VertexId),
    /// A nonempty admissible reduced path.
    Path(Vec<Step>),
}

impl Word {
    /// Number of steps: `0` for `∅` and vertices.
    pub fn length(&self) -> usize {
        match self {
            Word::Empty | Word::Vertex(_) => 0,
            Word::Path(steps) => steps.len(),
        }
    }

    /// True iff this is the absorbing empty word.
    pub fn is_empty_word(&self) -> bool {
        matches!(self, Word::Empty)
    }

    /// The vertex if this is a vertex unit.
    pub fn as_vertex(&self) -> Option<VertexId> {
        match self {
            Word::Vertex(v) => Some(*v),
            _ => None,
        }
    }

    /// The step sequence if this is a path.
    pub fn steps(&self) -> Option<&[Step]> {
        match self {
            Word::Path(steps) => Some(steps),
            _ => None,
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// `∅` first, then vertices in graph order, then paths by length and
    /// lexicographically by step sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        use Word::*;
        match (self, other) {
            (Empty, Empty) => Ordering::Equal,
            (Empty, _) => Ordering::Less,
            (_, Empty) => Ordering::Greater,
            (Vertex(a), Vertex(b)) => a.cmp(b),
            (Vertex(_), Path(_)) => Ordering::Less,
            (Path(_), Vertex(_)) => Ordering::Greater,
            (Path(a), Path(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

// ====================================================================
// Reduction and the groupoid operations
// ====================================================================

/// Reduces a raw step sequence to the groupoid element it denotes.
///
/// Returns `∅` when any adjacent junction is inadmissible; otherwise
/// cancels every step/shadow pair and returns the reduced path, or the
/// vertex unit when everything cancels.  The empty sequence is rejected
/// — the length-zero elements are the vertex units, which carry a vertex
/// that an empty sequence cannot name.
pub fn reduce(g: &DirectedGraph, steps: &[Step]) -> Result<Word> {
    if steps.is_empty() {
        return Err(Error::EmptySteps);
    }
    for &s in steps {
        g.check_step(s)?;
    }
    let source = g.step_source(steps[0]);
    let mut cursor = source;
    let mut stack: Vec<Step> = Vec::with_capacity(steps.len());
    for &s in steps {
        if reduce_push(g, &mut stack, &mut cursor, s).is_none() {
            return Ok(Word::Empty);
        }
    }
    if stack.is_empty() {
        // a fully cancelling admissible word is the unit at its source
        Ok(Word::Vertex(source))
    } else {
        Ok(Word::Path(stack))
    }
}

/// The effect one scan step had on the reduction stack, so incremental
/// callers can undo it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReduceAction {
    /// The step was pushed onto the stack.
    Pushed,
    /// The step cancelled the recorded previous top of the stack.
    Cancelled(Step),
}

/// One step of the left-to-right reduction scan: `None` when the raw
/// junction fails (the whole sequence denotes the absorbing word);
/// otherwise the cursor advances and the step cancels against or joins
/// the stack, and the performed action is returned for undo.
///
/// [`reduce`] is exactly a fold of this function, so incremental
/// enumeration over shared prefixes computes the same normal forms.
pub fn reduce_push(
    g: &DirectedGraph,
    stack: &mut Vec<Step>,
    cursor: &mut VertexId,
    s: Step,
) -> Option<ReduceAction> {
    if g.step_source(s) != *cursor {
        return None;
    }
    *cursor = g.step_target(s);
    if stack.last() == Some(&s.shadowed()) {
        let prev = stack.pop().expect("nonempty by the comparison above");
        Some(ReduceAction::Cancelled(prev))
    } else {
        stack.push(s);
        Some(ReduceAction::Pushed)
    }
}

/// The source vertex of a word (`None` for `∅`).
pub fn source(g: &DirectedGraph, w: &Word) -> Option<VertexId> {
    match w {
        Word::Empty => None,
        Word::Vertex(v) => Some(*v),
        Word::Path(steps) => Some(g.step_source(steps[0])),
    }
}

/// The range (end) vertex of a word (`None` for `∅`).
pub fn range(g: &DirectedGraph, w: &Word) -> Option<VertexId> {
    match w {
        Word::Empty => None,
        Word::Vertex(v) => Some(*v),
        Word::Path(steps) => Some(g.step_target(*steps.last().unwrap())),
    }
}

/// Groupoid product `a · b`: concatenate where the range of `a` meets the
/// source of `b`, cancel across the seam, and absorb everything undefined
/// into `∅`.
pub fn product(g: &DirectedGraph, a: &Word, b: &Word) -> Result<Word> {
    validate_indices(g, a)?;
    validate_indices(g, b)?;
    Ok(match (a, b) {
        (Word::Empty, _) | (_, Word::Empty) => Word::Empty,
        (Word::Vertex(u), Word::Vertex(v)) => {
            if u == v {
                Word::Vertex(*u)
            } else {
                Word::Empty
            }
        }
        (Word::Vertex(u), Word::Path(_)) => {
            if source(g, b) == Some(*u) {
                b.clone()
            } else {
                Word::Empty
            }
        }
        (Word::Path(_), Word::Vertex(v)) => {
            if range(g, a) == Some(*v) {
                a.clone()
            } else {
                Word::Empty
            }
        }
        (Word::Path(p), Word::Path(q)) => {
            let mut steps = Vec::with_capacity(p.len() + q.len());
            steps.extend_from_slice(p);
            steps.extend_from_slice(q);
            // both factors are admissible and reduced, so only the seam can
            // fail or cancel; reduce() handles the cascade
            reduce(g, &steps).expect("nonempty validated steps")
        }
    })
}

/// The inverse `w⁻¹`: reverse the steps and shadow each one.  Vertices
/// are their own inverses and `∅` maps to itself.
pub fn shadow(w: &Word) -> Word {
    match w {
        Word::Empty => Word::Empty,
        Word::Vertex(v) => Word::Vertex(*v),
        Word::Path(steps) => Word::Path(steps.iter().rev().map(|s| s.shadowed()).collect()),
    }
}

/// Checks that a word's indices fit the graph's tables.
fn validate_indices(g: &DirectedGraph, w: &Word) -> Result<()> {
    match w {
        Word::Empty => Ok(()),
        Word::Vertex(v) => {
            if (v.0 as usize) < g.vertex_count() {
                Ok(())
            } else {
                Err(Error::ForeignWord(format!(
                    "vertex index {} out of range",
                    v.0
                )))
            }
        }
        Word::Path(steps) => {
            for &s in steps {
                g.check_step(s)?;
            }
            Ok(())
        }
    }
}

/// Fully validates a word against a graph: indices in range and, for
/// paths, nonempty, admissible, and reduced.
pub fn validate_word(g: &DirectedGraph, w: &Word) -> Result<()> {
    validate_indices(g, w)?;
    if let Word::Path(steps) = w {
        if steps.is_empty() {
            return Err(Error::ForeignWord("empty path step list".into()));
        }
        for pair in steps.windows(2) {
            if g.step_target(pair[0]) != g.step_source(pair[1]) {
                return Err(Error::ForeignWord("inadmissible junction".into()));
            }
            if pair[1] == pair[0].shadowed() {
                return Err(Error::ForeignWord("unreduced step/shadow pair".into()));
            }
        }
    }
    Ok(())
}

// ====================================================================
// Enumeration
// ====================================================================

/// All words of path length at most `max_path_length`, in canonical
/// order: every vertex unit first, then reduced paths grouped by length
/// and sorted lexicographically within each length.
///
/// The listing is generated by extending each reduced path by every
/// non-cancelling admissible step, so it is complete and duplicate-free;
/// calling it twice yields identical vectors.
pub fn enumerate_words(g: &DirectedGraph, max_path_length: usize) -> Vec<Word> {
    let mut out: Vec<Word> = g.vertices().map(Word::Vertex).collect();
    if max_path_length == 0 {
        return out;
    }

    // length 1: every arrow of the shadowed graph, in canonical order
    let mut frontier: Vec<Vec<Step>> = g.shadowed_steps().map(|s| vec![s]).collect();
    frontier.sort();
    let mut length = 1;
    while !frontier.is_empty() {
        out.extend(frontier.iter().cloned().map(Word::Path));
        length += 1;
        if length > max_path_length {
            break;
        }
        let mut next = Vec::new();
        for path in &frontier {
            let last = *path.last().unwrap();
            let end = g.step_target(last);
            for &s in g.out_steps(end) {
                if s != last.shadowed() {
                    let mut extended = path.clone();
                    extended.push(s);
                    next.push(extended);
                }
            }
        }
        frontier = next;
    }
    out
}

// ====================================================================
// Word literals
// ====================================================================

/// Parses a raw step sequence literal: steps joined by `;`.
pub fn parse_steps(g: &DirectedGraph, literal: &str) -> Result<Vec<Step>> {
    let trimmed = literal.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty step literal".into()));
    }
    trimmed.split(';').map(|part| parse_step(g, part)).collect()
}

fn parse_step(g: &DirectedGraph, part: &str) -> Result<Step> {
    let part = part.trim();
    let (body, tag) = match part.split_once('#') {
        Some((body, tag_str)) => {
            let tag = tag_str
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad edge tag in `{part}`")))?;
            (body.trim(), tag)
        }
        None => (part, 0),
    };
    let (src_label, dst_label, shadowed) = if let Some((a, b)) = body.split_once('>') {
        (a.trim(), b.trim(), false)
    } else if let Some((a, b)) = body.split_once('<') {
        (a.trim(), b.trim(), true)
    } else {
        return Err(Error::Parse(format!(
            "step `{part}` needs `>` (forward) or `<` (shadow)"
        )));
    };
    let src = g
        .vertex_by_label(src_label)
        .ok_or_else(|| Error::UnknownVertex(src_label.to_string()))?;
    let dst = g
        .vertex_by_label(dst_label)
        .ok_or_else(|| Error::UnknownVertex(dst_label.to_string()))?;
    // `A<B` walks from A back to the base edge's source B, so the base
    // edge runs B -> A.
    let (edge_src, edge_dst) = if shadowed { (dst, src) } else { (src, dst) };
    let edge = g.find_edge(edge_src, edge_dst, tag).ok_or_else(|| {
        Error::UnknownEdge(format!(
            "{}{}{}{}",
            g.display_vertex(edge_src),
            '>',
            g.display_vertex(edge_dst),
            if tag != 0 {
                format!("#{tag}")
            } else {
                String::new()
            }
        ))
    })?;
    Ok(if shadowed {
        Step::backward(edge)
    } else {
        Step::forward(edge)
    })
}

/// Parses a word literal (`null`, `v:LABEL`, or a step sequence, which is
/// reduced to the groupoid element it denotes).
pub fn parse_word(g: &DirectedGraph, literal: &str) -> Result<Word> {
    let trimmed = literal.trim();
    if trimmed == "null" {
        return Ok(Word::Empty);
    }
    if let Some(label) = trimmed.strip_prefix("v:") {
        let v = g
            .vertex_by_label(label.trim())
            .ok_or_else(|| Error::UnknownVertex(label.trim().to_string()))?;
        return Ok(Word::Vertex(v));
    }
    let steps = parse_steps(g, trimmed)?;
    reduce(g, &steps)
}

/// Formats a word back into its literal form.
pub fn format_word(g: &DirectedGraph, w: &Word) -> String {
    match w {
        Word::Empty => "null".to_string(),
        Word::Vertex(v) => format!("v:{}", g.display_vertex(*v)),
        Word::Path(steps) => steps
            .iter()
            .map(|&s| format_step(g, s))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

fn format_step(g: &DirectedGraph, s: Step) -> String {
    let arrow = if s.shadow { '<' } else { '>' };
    let tag = g.edge_tag(s.edge);
    let suffix = if tag != 0 {
        format!("#{tag}")
    } else {
        String::new()
    };
    format!(
        "{}{}{}{}",
        g.display_vertex(g.step_source(s)),
        arrow,
        g.display_vertex(g.step_target(s)),
        suffix
    )
}

/// A convenience index for tests and callers that address tree words by
/// their endpoint labels: maps `(source label, range label)` to the
/// unique reduced path between them, if one was enumerated.
pub fn paths_by_endpoints(g: &DirectedGraph, words: &[Word]) -> HashMap<(String, String), Word> {
    let mut map = HashMap::new();
    for w in words {
        if let Word::Path(_) = w {
            let s = g.display_vertex(source(g, w).unwrap());
            let r = g.display_vertex(range(g, w).unwrap());
            map.insert((s, r), w.clone());
        }
    }
    map
}
