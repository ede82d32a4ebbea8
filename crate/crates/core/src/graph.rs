//! Finite directed graphs and their shadowed (edge-doubled) form.
//!
//! A [`DirectedGraph`] stores a finite vertex set with string labels and a
//! finite multiset of directed edges.  Parallel edges between the same
//! ordered vertex pair are distinguished by a numeric `tag`; an untagged
//! edge is tag `0`.  Loops are allowed — predicates such as
//! [`DirectedGraph::is_simplicial`] report, rather than forbid, such
//! features.
//!
//! Every edge `e` has a *shadow*: the same edge traversed backwards.  The
//! shadowed graph whose edge set is `{e} ∪ {e⁻¹}` is never materialized as
//! a second graph; instead a [`Step`] names one traversal direction of one
//! base edge, and [`DirectedGraph::shadowed_steps`] enumerates the doubled
//! edge set on demand.  Taking the shadow of a shadow returns the original
//! step, so shadowing is an involution by construction.
//!
//! # Regular trees
//!
//! [`DirectedGraph::regular_tree`] builds the rooted tree in which every
//! vertex has exactly `degree` children, cut off at a chosen depth, with
//! all edges pointing away from the root:
//!
//! * `degree == 1`: a directed line.  Vertices are labelled by the decimal
//!   integers `"1", "2", ...` from the root outward, and each edge joins
//!   consecutive integers.
//! * `degree >= 2`: vertices are labelled by words over the digit alphabet
//!   `{1, ..., degree}`.  The root carries the empty word, rendered as
//!   `"∅"` wherever labels are displayed or serialized, and the label of a
//!   child extends the label of its parent by one digit.  Restricting the
//!   alphabet to single digits (`degree <= 9`) keeps the word labels
//!   unambiguous.
//!
//! Vertices are kept in construction order — level by level, and
//! lexicographically within a level — and that order is the canonical
//! enumeration order used everywhere else in the crate.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::error::{Error, Result};

/// Rendering of the empty (root) label in files, literals, and output.
pub const EMPTY_LABEL_DISPLAY: &str = "∅";

/// Maximum vertex count accepted when building a regular tree.
const MAX_TREE_VERTICES: u64 = 1 << 22;

/// Index of a vertex in a graph's vertex table.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub u32);

/// Index of a base (non-shadow) edge in a graph's edge table.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId(pub u32);

/// One arrow of the shadowed graph: a base edge traversed forwards
/// (`shadow == false`) or backwards (`shadow == true`).
///
/// The derived ordering — base edge first, forward before shadow — is the
/// canonical order on steps and, extended lexicographically, on paths.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Step {
    /// The base edge being traversed.
    pub edge: EdgeId,
    /// Whether the edge is traversed against its direction.
    pub shadow: bool,
}

impl Step {
    /// The forward traversal of `edge`.
    pub fn forward(edge: EdgeId) -> Self {
        Step {
            edge,
            shadow: false,
        }
    }

    /// The backward traversal of `edge`.
    pub fn backward(edge: EdgeId) -> Self {
        Step { edge, shadow: true }
    }

    /// The same edge traversed the other way.  An involution.
    pub fn shadowed(self) -> Self {
        Step {
            edge: self.edge,
            shadow: !self.shadow,
        }
    }
}

#[derive(Clone, Debug)]
struct EdgeRecord {
    src: u32,
    dst: u32,
    tag: u32,
}

/// How a graph was constructed; regular trees remember their parameters
/// so tree-specific calculi can check they apply.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GraphKind {
    /// An arbitrary finite directed graph.
    General,
    /// The canonical depth-truncated `degree`-regular rooted tree.
    RegularTree { degree: u32, depth: u32 },
}

/// A finite directed graph with labelled vertices and tagged edges.
#[derive(Clone, Debug)]
pub struct DirectedGraph {
    labels: Vec<String>,
    label_index: HashMap<String, u32>,
    edges: Vec<EdgeRecord>,
    edge_index: HashMap<(u32, u32, u32), u32>,
    /// Outgoing steps of the shadowed graph per vertex, sorted.
    out_steps: Vec<Vec<Step>>,
    kind: GraphKind,
}

impl DirectedGraph {
    // ================================================================
    // Construction
    // ================================================================

    /// Builds a general graph from labelled vertices and `(src, dst, tag)`
    /// edge triples.  Labels must be distinct and triples unique; edge
    /// endpoints must be declared vertices.  The input order of vertices
    /// and edges is preserved and becomes the canonical order.
    pub fn general<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u32)]) -> Result<Self> {
        let mut g = DirectedGraph {
            labels: Vec::new(),
            label_index: HashMap::new(),
            edges: Vec::new(),
            edge_index: HashMap::new(),
            out_steps: Vec::new(),
            kind: GraphKind::General,
        };
        for v in vertices {
            g.push_vertex(v.as_ref())?;
        }
        for (src, dst, tag) in edges {
            let s = g.require_vertex(src.as_ref())?;
            let d = g.require_vertex(dst.as_ref())?;
            g.push_edge(s, d, *tag)?;
        }
        g.build_adjacency();
        Ok(g)
    }

    /// Builds the depth-truncated `degree`-regular rooted tree described
    /// in the module documentation.
    pub fn regular_tree(degree: usize, depth: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter(
                "regular tree needs branching degree >= 1".into(),
            ));
        }
        if degree > 9 {
            return Err(Error::InvalidParameter(
                "regular trees support branching degree <= 9 (single-digit labels)".into(),
            ));
        }
        // vertex count = sum of degree^d for d = 0..=depth
        let mut count: u64 = 0;
        let mut level: u64 = 1;
        for _ in 0..=depth {
            count += level;
            if count > MAX_TREE_VERTICES {
                return Err(Error::InvalidParameter(format!(
                    "regular tree with degree {degree} and depth {depth} exceeds \
                     {MAX_TREE_VERTICES} vertices"
                )));
            }
            level *= degree as u64;
        }

        let mut g = DirectedGraph {
            labels: Vec::new(),
            label_index: HashMap::new(),
            edges: Vec::new(),
            edge_index: HashMap::new(),
            out_steps: Vec::new(),
            kind: GraphKind::RegularTree {
                degree: degree as u32,
                depth: depth as u32,
            },
        };

        if degree == 1 {
            // the line 1 -> 2 -> ... -> depth+1
            for j in 1..=(depth as u64 + 1) {
                g.push_vertex(&j.to_string())?;
            }
            for j in 0..depth {
                g.push_edge(j as u32, j as u32 + 1, 0)?;
            }
        } else {
            // level-by-level word labels; the root is the empty word
            g.push_vertex("")?;
            let mut level_start = 0u32;
            let mut level_len = 1u32;
            for _ in 0..depth {
                let next_start = g.labels.len() as u32;
                for parent in level_start..level_start + level_len {
                    let parent_label = g.labels[parent as usize].clone();
                    for digit in 1..=degree {
                        let child = g.push_vertex(&format!("{parent_label}{digit}"))?;
                        g.push_edge(parent, child, 0)?;
                    }
                }
                level_start = next_start;
                level_len *= degree as u32;
            }
        }
        g.build_adjacency();
        Ok(g)
    }

    fn push_vertex(&mut self, label: &str) -> Result<u32> {
        if self.label_index.contains_key(label) {
            return Err(Error::GraphData(format!(
                "duplicate vertex label `{}`",
                display_label(label)
            )));
        }
        let id = self.labels.len() as u32;
        self.labels.push(label.to_string());
        self.label_index.insert(label.to_string(), id);
        Ok(id)
    }

    fn require_vertex(&self, label: &str) -> Result<u32> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(display_label(label).into_owned()))
    }

    fn push_edge(&mut self, src: u32, dst: u32, tag: u32) -> Result<u32> {
        if self.edge_index.contains_key(&(src, dst, tag)) {
            return Err(Error::GraphData(format!(
                "duplicate edge {} -> {} with tag {}",
                display_label(&self.labels[src as usize]),
                display_label(&self.labels[dst as usize]),
                tag
            )));
        }
        let id = self.edges.len() as u32;
        self.edges.push(EdgeRecord { src, dst, tag });
        self.edge_index.insert((src, dst, tag), id);
        Ok(id)
    }

    fn build_adjacency(&mut self) {
        self.out_steps = vec![Vec::new(); self.labels.len()];
        for (i, e) in self.edges.iter().enumerate() {
            let id = EdgeId(i as u32);
            self.out_steps[e.src as usize].push(Step::forward(id));
            self.out_steps[e.dst as usize].push(Step::backward(id));
        }
        for steps in &mut self.out_steps {
            steps.sort();
        }
    }

    // ================================================================
    // Basic accessors
    // ================================================================

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of base (non-shadow) edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// How the graph was built.
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Branching degree and depth if this graph is a regular tree.
    pub fn tree_params(&self) -> Option<(usize, usize)> {
        match self.kind {
            GraphKind::RegularTree { degree, depth } => Some((degree as usize, depth as usize)),
            GraphKind::General => None,
        }
    }

    /// All vertices, in canonical order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    /// The raw label of a vertex.  The tree root's label is the empty
    /// string; use [`DirectedGraph::display_vertex`] for output.
    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.labels[v.0 as usize]
    }

    /// The label of a vertex as rendered in files and literals.
    pub fn display_vertex(&self, v: VertexId) -> String {
        display_label(self.vertex_label(v)).into_owned()
    }

    /// Looks a vertex up by its raw or displayed label.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_index
            .get(parse_label(label).as_ref())
            .map(|&i| VertexId(i))
    }

    /// All base edges, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Source vertex of a base edge.
    pub fn edge_src(&self, e: EdgeId) -> VertexId {
        VertexId(self.edges[e.0 as usize].src)
    }

    /// Target vertex of a base edge.
    pub fn edge_dst(&self, e: EdgeId) -> VertexId {
        VertexId(self.edges[e.0 as usize].dst)
    }

    /// Tag distinguishing parallel base edges.
    pub fn edge_tag(&self, e: EdgeId) -> u32 {
        self.edges[e.0 as usize].tag
    }

    /// Looks a base edge up by endpoint vertices and tag.
    pub fn find_edge(&self, src: VertexId, dst: VertexId, tag: u32) -> Option<EdgeId> {
        self.edge_index
            .get(&(src.0, dst.0, tag))
            .map(|&i| EdgeId(i))
    }

    /// True iff the step's edge index is inside this graph's edge table.
    pub fn contains_step(&self, s: Step) -> bool {
        (s.edge.0 as usize) < self.edges.len()
    }

    /// Validates a step's edge index against this graph.
    pub fn check_step(&self, s: Step) -> Result<()> {
        if self.contains_step(s) {
            Ok(())
        } else {
            Err(Error::ForeignEdge {
                index: s.edge.0 as usize,
                count: self.edges.len(),
            })
        }
    }

    // ================================================================
    // The shadowed graph
    // ================================================================

    /// The vertex a step leaves from.
    pub fn step_source(&self, s: Step) -> VertexId {
        let e = &self.edges[s.edge.0 as usize];
        VertexId(if s.shadow { e.dst } else { e.src })
    }

    /// The vertex a step arrives at.
    pub fn step_target(&self, s: Step) -> VertexId {
        let e = &self.edges[s.edge.0 as usize];
        VertexId(if s.shadow { e.src } else { e.dst })
    }

    /// Every arrow of the shadowed graph — each base edge forwards and
    /// backwards — in canonical order.
    pub fn shadowed_steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.edges()
            .map(Step::forward)
            .chain(self.edges().map(Step::backward))
    }

    /// Number of arrows of the shadowed graph (always `2 * edge_count`,
    /// loops included: a loop and its shadow are distinct arrows).
    pub fn shadowed_step_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Outgoing arrows of the shadowed graph at `v`, sorted in canonical
    /// step order.
    pub fn out_steps(&self, v: VertexId) -> &[Step] {
        &self.out_steps[v.0 as usize]
    }

    /// True iff the graph has no loops and no parallel base edges
    /// (shadows are not counted: only the base edge set is inspected).
    pub fn is_simplicial(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.src == e.dst {
                return false;
            }
            if !seen.insert((e.src, e.dst)) {
                return false;
            }
        }
        true
    }

    // ================================================================
    // JSON form
    // ================================================================

    /// Serializes the graph to the JSON interchange form.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            kind: match self.kind {
                GraphKind::General => KindJson::General,
                GraphKind::RegularTree { degree, depth } => KindJson::RegularTree { degree, depth },
            },
            vertices: self
                .labels
                .iter()
                .map(|l| display_label(l).into_owned())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    src: display_label(&self.labels[e.src as usize]).into_owned(),
                    dst: display_label(&self.labels[e.dst as usize]).into_owned(),
                    tag: e.tag,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail")
    }

    /// Parses the JSON interchange form.  A document claiming to be a
    /// regular tree is rebuilt from its parameters and must match its
    /// stated vertex and edge lists exactly.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(s)?;
        let vertices: Vec<String> = doc
            .vertices
            .iter()
            .map(|v| parse_label(v).into_owned())
            .collect();
        let edges: Vec<(String, String, u32)> = doc
            .edges
            .iter()
            .map(|e| {
                (
                    parse_label(&e.src).into_owned(),
                    parse_label(&e.dst).into_owned(),
                    e.tag,
                )
            })
            .collect();
        let general = DirectedGraph::general(&vertices, &edges)?;
        match doc.kind {
            KindJson::General => Ok(general),
            KindJson::RegularTree { degree, depth } => {
                let tree = DirectedGraph::regular_tree(degree as usize, depth as usize)?;
                if tree.labels != general.labels {
                    return Err(Error::GraphData(
                        "vertex list does not match the declared regular tree".into(),
                    ));
                }
                let same_edges = tree.edges.len() == general.edges.len()
                    && tree
                        .edges
                        .iter()
                        .zip(&general.edges)
                        .all(|(a, b)| a.src == b.src && a.dst == b.dst && a.tag == b.tag);
                if !same_edges {
                    return Err(Error::GraphData(
                        "edge list does not match the declared regular tree".into(),
                    ));
                }
                Ok(tree)
            }
        }
    }
}

/// Maps the internal empty label to its display form.
pub fn display_label(raw: &str) -> std::borrow::Cow<'_, str> {
    if raw.is_empty() {
        std::borrow::Cow::Borrowed(EMPTY_LABEL_DISPLAY)
    } else {
        std::borrow::Cow::Borrowed(raw)
    }
}

/// Maps a displayed label back to the internal form (`"∅"` → empty).
pub fn parse_label(displayed: &str) -> std::borrow::Cow<'_, str> {
    if displayed == EMPTY_LABEL_DISPLAY {
        std::borrow::Cow::Borrowed("")
    } else {
        std::borrow::Cow::Borrowed(displayed)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    kind: KindJson,
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum KindJson {
    General,
    RegularTree { degree: u32, depth: u32 },
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    src: String,
    dst: String,
    #[serde(default)]
    tag: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Loop plus a parallel pair: the standing non-simplicial fixture.
    pub(crate) fn non_simplicial_fixture() -> DirectedGraph {
        DirectedGraph::general(&["v", "w"], &[("v", "v", 0), ("v", "w", 0), ("v", "w", 1)]).unwrap()
    }

    #[test]
    fn line_tree_has_integer_labels() {
        let g = DirectedGraph::regular_tree(1, 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let labels: Vec<_> = g.vertices().map(|v| g.display_vertex(v)).collect();
        assert_eq!(labels, ["1", "2", "3", "4"]);
        for e in g.edges() {
            let s: u64 = g.vertex_label(g.edge_src(e)).parse().unwrap();
            let d: u64 = g.vertex_label(g.edge_dst(e)).parse().unwrap();
            assert_eq!(d, s + 1);
        }
    }

    #[test]
    fn binary_tree_levels_and_labels() {
        let g = DirectedGraph::regular_tree(2, 1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        let labels: Vec<_> = g.vertices().map(|v| g.display_vertex(v)).collect();
        assert_eq!(labels, ["∅", "1", "2"]);

        let g = DirectedGraph::regular_tree(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 14);
        // level sizes 1, 2, 4, 8 in construction order
        let mut by_len = std::collections::BTreeMap::new();
        for v in g.vertices() {
            *by_len.entry(g.vertex_label(v).len()).or_insert(0usize) += 1;
        }
        assert_eq!(
            by_len.into_iter().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 4), (3, 8)]
        );
        // every edge appends exactly one digit to its source label
        for e in g.edges() {
            let s = g.vertex_label(g.edge_src(e));
            let d = g.vertex_label(g.edge_dst(e));
            assert_eq!(d.len(), s.len() + 1);
            assert!(d.starts_with(s));
        }
    }

    #[test]
    fn ternary_tree_level_count_is_degree_power() {
        let g = DirectedGraph::regular_tree(3, 4).unwrap();
        assert_eq!(g.vertex_count(), 1 + 3 + 9 + 27 + 81);
        let level3 = g
            .vertices()
            .filter(|&v| g.vertex_label(v).len() == 3)
            .count();
        assert_eq!(level3, 27);
    }

    #[test]
    fn degenerate_trees() {
        let g = DirectedGraph::regular_tree(3, 0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.display_vertex(VertexId(0)), "∅");

        let g = DirectedGraph::regular_tree(1, 0).unwrap();
        assert_eq!(g.display_vertex(VertexId(0)), "1");

        assert!(DirectedGraph::regular_tree(0, 2).is_err());
        assert!(DirectedGraph::regular_tree(10, 2).is_err());
    }

    #[test]
    fn shadow_steps_double_the_edges_and_shadowing_is_involutive() {
        let g = DirectedGraph::regular_tree(1, 1).unwrap(); // line 1 -> 2
        let steps: Vec<_> = g.shadowed_steps().collect();
        assert_eq!(steps.len(), 2);
        assert_eq!(g.step_source(steps[0]), VertexId(0));
        assert_eq!(g.step_target(steps[0]), VertexId(1));
        assert_eq!(g.step_source(steps[1]), VertexId(1));
        assert_eq!(g.step_target(steps[1]), VertexId(0));
        for s in steps {
            assert_eq!(s.shadowed().shadowed(), s);
            assert_ne!(s.shadowed(), s);
        }
    }

    #[test]
    fn loop_and_its_shadow_are_distinct() {
        let g = non_simplicial_fixture();
        assert_eq!(g.shadowed_step_count(), 6);
        let loop_edge = g.find_edge(VertexId(0), VertexId(0), 0).unwrap();
        let fwd = Step::forward(loop_edge);
        let bwd = Step::backward(loop_edge);
        assert_ne!(fwd, bwd);
        assert_eq!(g.step_source(fwd), g.step_target(fwd));
        assert_eq!(g.step_source(bwd), g.step_target(bwd));
    }

    #[test]
    fn simpliciality_predicate() {
        assert!(DirectedGraph::regular_tree(2, 3).unwrap().is_simplicial());
        // loop only
        let loop_graph =
            DirectedGraph::general(&["v", "w"], &[("v", "v", 0), ("v", "w", 0)]).unwrap();
        assert!(!loop_graph.is_simplicial());
        // parallel pair only
        let parallel = DirectedGraph::general(
            &["v1", "v2", "u"],
            &[("v1", "v2", 0), ("v1", "v2", 1), ("u", "v2", 0)],
        )
        .unwrap();
        assert!(!parallel.is_simplicial());
        assert!(!non_simplicial_fixture().is_simplicial());
    }

    #[test]
    fn out_steps_cover_forward_and_shadow_arrows() {
        let g = DirectedGraph::regular_tree(2, 2).unwrap();
        // root: two forward arrows, no shadows
        let root = g.vertex_by_label("∅").unwrap();
        assert_eq!(g.out_steps(root).len(), 2);
        // internal vertex "1": two forward children plus the shadow up
        let v1 = g.vertex_by_label("1").unwrap();
        assert_eq!(g.out_steps(v1).len(), 3);
        // leaf "11": only the shadow up
        let v11 = g.vertex_by_label("11").unwrap();
        assert_eq!(g.out_steps(v11).len(), 1);
        // sortedness
        for v in g.vertices() {
            let s = g.out_steps(v);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn json_round_trip_general() {
        let g = non_simplicial_fixture();
        let s = g.to_json();
        let h = DirectedGraph::from_json(&s).unwrap();
        assert_eq!(h.vertex_count(), g.vertex_count());
        assert_eq!(h.edge_count(), g.edge_count());
        assert_eq!(h.kind(), GraphKind::General);
        assert_eq!(h.to_json(), s);
    }

    #[test]
    fn json_round_trip_tree_and_tamper_detection() {
        let g = DirectedGraph::regular_tree(2, 2).unwrap();
        let s = g.to_json();
        assert!(s.contains("∅"));
        let h = DirectedGraph::from_json(&s).unwrap();
        assert_eq!(h.kind(), g.kind());
        assert_eq!(h.to_json(), s);

        // a tampered tree document is rejected
        let bad = s.replace("\"11\"", "\"99\"");
        assert!(DirectedGraph::from_json(&bad).is_err());
    }

    #[test]
    fn json_rejects_inconsistent_documents() {
        // duplicate vertex
        let bad = r#"{"kind":{"type":"general"},"vertices":["a","a"],"edges":[]}"#;
        assert!(DirectedGraph::from_json(bad).is_err());
        // unknown endpoint
        let bad = r#"{"kind":{"type":"general"},"vertices":["a"],"edges":[{"src":"a","dst":"b"}]}"#;
        assert!(DirectedGraph::from_json(bad).is_err());
        // duplicate edge triple
        let bad = r#"{"kind":{"type":"general"},"vertices":["a","b"],
                      "edges":[{"src":"a","dst":"b"},{"src":"a","dst":"b"}]}"#;
        assert!(DirectedGraph::from_json(bad).is_err());
        // untagged edges default to tag 0
        let ok = r#"{"kind":{"type":"general"},"vertices":["a","b"],
                     "edges":[{"src":"a","dst":"b"},{"src":"a","dst":"b","tag":1}]}"#;
        let g = DirectedGraph::from_json(ok).unwrap();
        assert_eq!(g.edge_tag(EdgeId(0)), 0);
        assert_eq!(g.edge_tag(EdgeId(1)), 1);
    }
}
