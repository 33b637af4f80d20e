//! Crystal graphs: generation by closure under the lowering operators,
//! duality, well-formedness checks, and DOT/JSON import and export.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::operators::{apply_e, apply_f};
use crate::signature::Color;
use crate::tableau::{Shape, Tableau};

/// `f_color(from) = to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub color: Color,
}

/// A finite crystal graph whose vertices are tableaux with dense ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    shape: Shape,
    vertices: Vec<Tableau>,
    edges: Vec<GraphEdge>,
    source: usize,
}

/// Structural defect of a colored digraph that rules it out as a connected
/// highest-weight crystal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WellFormednessViolation {
    MultipleOutgoing { vertex: usize, color: Color },
    MultipleIncoming { vertex: usize, color: Color },
    Disconnected { components: usize },
    Cycle,
    SourceCount { count: usize },
    SinkCount { count: usize },
    SourceMismatch { declared: usize, actual: usize },
}

impl fmt::Display for WellFormednessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WellFormednessViolation::MultipleOutgoing { vertex, color } => {
                write!(f, "vertex {vertex} has several outgoing {color}-edges")
            }
            WellFormednessViolation::MultipleIncoming { vertex, color } => {
                write!(f, "vertex {vertex} has several incoming {color}-edges")
            }
            WellFormednessViolation::Disconnected { components } => {
                write!(f, "graph has {components} connected components")
            }
            WellFormednessViolation::Cycle => f.write_str("graph contains a directed cycle"),
            WellFormednessViolation::SourceCount { count } => {
                write!(f, "{count} vertices have no incoming edges (expected 1)")
            }
            WellFormednessViolation::SinkCount { count } => {
                write!(f, "{count} vertices have no outgoing edges (expected 1)")
            }
            WellFormednessViolation::SourceMismatch { declared, actual } => {
                write!(
                    f,
                    "declared source {declared} but vertex {actual} has no incoming edges"
                )
            }
        }
    }
}

/// Checks the crystal-shape invariants on a bare colored digraph with
/// vertices `0..vertex_count`. Returns every violation found.
pub fn well_formedness(
    vertex_count: usize,
    edges: &[GraphEdge],
    declared_source: Option<usize>,
) -> Vec<WellFormednessViolation> {
    let mut out = Vec::new();
    let mut outgoing = vec![[0usize; 2]; vertex_count];
    let mut incoming = vec![[0usize; 2]; vertex_count];
    for e in edges {
        outgoing[e.from][e.color.index()] += 1;
        incoming[e.to][e.color.index()] += 1;
    }
    for v in 0..vertex_count {
        for c in Color::BOTH {
            if outgoing[v][c.index()] > 1 {
                out.push(WellFormednessViolation::MultipleOutgoing { vertex: v, color: c });
            }
            if incoming[v][c.index()] > 1 {
                out.push(WellFormednessViolation::MultipleIncoming { vertex: v, color: c });
            }
        }
    }

    // undirected components
    let mut adj = vec![Vec::new(); vertex_count];
    for e in edges {
        adj[e.from].push(e.to);
        adj[e.to].push(e.from);
    }
    let mut comp = vec![usize::MAX; vertex_count];
    let mut components = 0;
    for start in 0..vertex_count {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = components;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = components;
                    queue.push_back(w);
                }
            }
        }
        components += 1;
    }
    if components > 1 {
        out.push(WellFormednessViolation::Disconnected { components });
    }

    // Kahn's algorithm
    let mut indeg: Vec<usize> = incoming.iter().map(|c| c[0] + c[1]).collect();
    let mut succ = vec![Vec::new(); vertex_count];
    for e in edges {
        succ[e.from].push(e.to);
    }
    let mut queue: VecDeque<usize> = (0..vertex_count).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if seen < vertex_count {
        out.push(WellFormednessViolation::Cycle);
    }

    let sources: Vec<usize> = (0..vertex_count).filter(|&v| incoming[v] == [0, 0]).collect();
    let sinks = (0..vertex_count).filter(|&v| outgoing[v] == [0, 0]).count();
    if sources.len() != 1 {
        out.push(WellFormednessViolation::SourceCount { count: sources.len() });
    }
    if sinks != 1 {
        out.push(WellFormednessViolation::SinkCount { count: sinks });
    }
    if let (Some(declared), [actual]) = (declared_source, sources.as_slice()) {
        if declared != *actual {
            out.push(WellFormednessViolation::SourceMismatch {
                declared,
                actual: *actual,
            });
        }
    }
    out
}

/// Per vertex and color, the unique predecessor along an edge of that color
/// (the graph-side raising operator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingTable {
    pred: Vec<[Option<usize>; 2]>,
}

impl RaisingTable {
    /// Fails if some vertex has two incoming edges of the same color.
    pub fn from_edges(vertex_count: usize, edges: &[GraphEdge]) -> Result<RaisingTable, GraphError> {
        let mut pred = vec![[None; 2]; vertex_count];
        for e in edges {
            let slot = &mut pred[e.to][e.color.index()];
            if slot.is_some() {
                return Err(GraphError::DuplicateEdge {
                    vertex: e.to,
                    color: e.color.number(),
                    direction: "incoming",
                });
            }
            *slot = Some(e.from);
        }
        Ok(RaisingTable { pred })
    }

    pub fn raise(&self, v: usize, color: Color) -> Option<usize> {
        self.pred[v][color.index()]
    }

    pub fn len(&self) -> usize {
        self.pred.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pred.is_empty()
    }
}

impl CrystalGraph {
    /// Closure of the highest-weight tableau under `f1` and `f2`.
    ///
    /// Ids are assigned breadth-first; each new level is sorted by the
    /// canonical tableau ordering before ids are handed out.
    pub fn generate(shape: Shape) -> CrystalGraph {
        let source = Tableau::highest_weight(shape);
        let mut ids: HashMap<Tableau, usize> = HashMap::from([(source.clone(), 0)]);
        let mut vertices = vec![source];
        let mut frontier = 0..1;
        while !frontier.is_empty() {
            let images: Vec<Tableau> = vertices[frontier.clone()]
                .par_iter()
                .flat_map_iter(|t| Color::BOTH.into_iter().filter_map(move |c| apply_f(t, c)))
                .collect();
            let mut next: Vec<Tableau> = images.into_iter().filter(|t| !ids.contains_key(t)).collect();
            next.sort();
            next.dedup();
            let start = vertices.len();
            for t in next {
                ids.insert(t.clone(), vertices.len());
                vertices.push(t);
            }
            frontier = start..vertices.len();
        }
        let mut edges: Vec<GraphEdge> = vertices
            .iter()
            .enumerate()
            .flat_map(|(from, t)| {
                let ids = &ids;
                Color::BOTH.into_iter().filter_map(move |color| {
                    apply_f(t, color).map(|u| GraphEdge {
                        from,
                        to: ids[&u],
                        color,
                    })
                })
            })
            .collect();
        edges.sort();
        CrystalGraph {
            shape,
            vertices,
            edges,
            source: 0,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn vertices(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices without outgoing edges.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_out[e.from] = true;
        }
        (0..self.vertices.len()).filter(|&v| !has_out[v]).collect()
    }

    pub fn id_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.iter().position(|v| v == t)
    }

    /// Same vertices, every edge reversed, source and sink exchanged.
    pub fn dual(&self) -> CrystalGraph {
        let mut edges: Vec<GraphEdge> = self
            .edges
            .iter()
            .map(|e| GraphEdge {
                from: e.to,
                to: e.from,
                color: e.color,
            })
            .collect();
        edges.sort();
        let sink = self.sinks().first().copied().unwrap_or(self.source);
        CrystalGraph {
            shape: self.shape,
            vertices: self.vertices.clone(),
            edges,
            source: sink,
        }
    }

    pub fn well_formedness(&self) -> Vec<WellFormednessViolation> {
        well_formedness(self.vertices.len(), &self.edges, Some(self.source))
    }

    /// Checks that the edges are exactly the operator action on the vertex
    /// tableaux: `(u, v, i)` is an edge iff `f_i u = v` iff `e_i v = u`.
    /// Returns a description of each mismatch. Meaningless on a dual graph.
    pub fn tableau_model_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let edge_set: HashMap<(usize, Color), usize> = self.edges.iter().map(|e| ((e.from, e.color), e.to)).collect();
        let back: HashMap<(usize, Color), usize> = self.edges.iter().map(|e| ((e.to, e.color), e.from)).collect();
        for (id, t) in self.vertices.iter().enumerate() {
            if t.shape() != self.shape || !t.is_valid() {
                out.push(format!(
                    "vertex {id} `{t}` is not a valid tableau of shape {}",
                    self.shape
                ));
            }
            for c in Color::BOTH {
                let want_f = apply_f(t, c).and_then(|u| self.id_of(&u));
                if edge_set.get(&(id, c)).copied() != want_f {
                    out.push(format!("vertex {id}: f{c} edge disagrees with the operator"));
                }
                let want_e = apply_e(t, c).and_then(|u| self.id_of(&u));
                if back.get(&(id, c)).copied() != want_e {
                    out.push(format!("vertex {id}: e{c} edge disagrees with the operator"));
                }
            }
        }
        out
    }

    pub fn raising_table(&self) -> RaisingTable {
        RaisingTable::from_edges(self.vertices.len(), &self.edges).expect("crystal graph edges are functional")
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            shape: Some(self.shape),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, t)| VertexRecord {
                    id,
                    tableau: Some(t.render()),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    from: e.from,
                    to: e.to,
                    color: e.color,
                })
                .collect(),
            source: self.source,
        }
    }

    pub fn export_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn export_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (id, t) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  n{id} [label=\"{}\"];", t.render());
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.color);
        }
        s.push_str("}\n");
        s
    }

    /// Strict import: requires dense ids in order, tableau payloads on every
    /// vertex and functional edges.
    pub fn import_json(text: &str) -> Result<CrystalGraph, GraphError> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        let n = doc.vertices.len();
        let mut vertices = Vec::with_capacity(n);
        for (position, v) in doc.vertices.iter().enumerate() {
            if v.id != position {
                return Err(GraphError::NonDenseIds { position, found: v.id });
            }
            let text = v.tableau.as_deref().unwrap_or("");
            vertices.push(Tableau::parse(text).map_err(|source| GraphError::BadTableau { id: v.id, source })?);
        }
        if doc.source >= n {
            return Err(GraphError::DanglingSource(doc.source));
        }
        let edges = doc.dense_edges(|id| (id < n).then_some(id))?;
        check_functional(n, &edges)?;
        let mut edges = edges;
        edges.sort();
        let shape = match doc.shape {
            Some(s) => s,
            None => vertices[doc.source].shape(),
        };
        Ok(CrystalGraph {
            shape,
            vertices,
            edges,
            source: doc.source,
        })
    }
}

fn check_functional(n: usize, edges: &[GraphEdge]) -> Result<(), GraphError> {
    let mut out = vec![[false; 2]; n];
    for e in edges {
        let slot = &mut out[e.from][e.color.index()];
        if *slot {
            return Err(GraphError::DuplicateEdge {
                vertex: e.from,
                color: e.color.number(),
                direction: "outgoing",
            });
        }
        *slot = true;
    }
    RaisingTable::from_edges(n, edges).map(|_| ())
}

/// JSON form of a crystal graph. The tableau payload and the shape are
/// optional so that bare colored digraphs can be audited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default)]
    pub shape: Option<Shape>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub source: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tableau: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    pub color: Color,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument, GraphError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Maps arbitrary distinct vertex ids onto `0..n` in record order.
    pub fn id_map(&self) -> Result<BTreeMap<usize, usize>, GraphError> {
        let mut map = BTreeMap::new();
        for (position, v) in self.vertices.iter().enumerate() {
            if map.insert(v.id, position).is_some() {
                return Err(GraphError::NonDenseIds { position, found: v.id });
            }
        }
        Ok(map)
    }

    fn dense_edges(&self, lookup: impl Fn(usize) -> Option<usize>) -> Result<Vec<GraphEdge>, GraphError> {
        self.edges
            .iter()
            .map(|e| {
                let from = lookup(e.from).ok_or(GraphError::DanglingId(e.from))?;
                let to = lookup(e.to).ok_or(GraphError::DanglingId(e.to))?;
                Ok(GraphEdge {
                    from,
                    to,
                    color: e.color,
                })
            })
            .collect()
    }

    /// Edges re-indexed onto `0..n`, plus the dense source id.
    pub fn dense(&self) -> Result<(Vec<GraphEdge>, usize), GraphError> {
        let map = self.id_map()?;
        let edges = self.dense_edges(|id| map.get(&id).copied())?;
        let source = *map.get(&self.source).ok_or(GraphError::DanglingSource(self.source))?;
        Ok((edges, source))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        Tableau::parse(s).unwrap()
    }

    fn shape(l1: usize, l2: usize) -> Shape {
        Shape::new(l1, l2).unwrap()
    }

    #[test]
    fn vector_crystal_is_a_path() {
        let g = CrystalGraph::generate(shape(1, 0));
        let labels: Vec<String> = g.vertices().iter().map(Tableau::render).collect();
        assert_eq!(labels, ["1", "2", "-2", "-1"]);
        assert_eq!(
            g.edges(),
            &[
                GraphEdge {
                    from: 0,
                    to: 1,
                    color: Color::One
                },
                GraphEdge {
                    from: 1,
                    to: 2,
                    color: Color::Two
                },
                GraphEdge {
                    from: 2,
                    to: 3,
                    color: Color::One
                },
            ]
        );
        assert!(g.well_formedness().is_empty());
        assert!(g.tableau_model_mismatches().is_empty());
    }

    #[test]
    fn empty_shape_crystal() {
        let g = CrystalGraph::generate(shape(0, 0));
        assert_eq!(g.vertices(), &[Tableau::empty()]);
        assert!(g.edges().is_empty());
        assert!(g.well_formedness().is_empty());
        assert_eq!(g.dual(), g);
    }

    #[test]
    fn dual_of_vector_crystal() {
        let g = CrystalGraph::generate(shape(1, 0));
        let d = g.dual();
        assert_eq!(d.source(), 3);
        assert_eq!(d.vertices()[d.source()], tab("-1"));
        let mut path = vec![d.source()];
        let mut colors = vec![];
        while let Some(e) = d.edges().iter().find(|e| e.from == *path.last().unwrap()) {
            colors.push(e.color.number());
            path.push(e.to);
        }
        let labels: Vec<String> = path.iter().map(|&v| d.vertices()[v].render()).collect();
        assert_eq!(labels, ["-1", "-2", "2", "1"]);
        assert_eq!(colors, [1, 2, 1]);
        assert_eq!(d.dual(), g);
        assert!(d.well_formedness().is_empty());
    }

    #[test]
    fn generation_is_deterministic_and_well_formed() {
        for s in Shape::all_up_to(3) {
            let g = CrystalGraph::generate(s);
            assert_eq!(g, CrystalGraph::generate(s));
            assert!(g.well_formedness().is_empty(), "{s}");
            assert!(g.tableau_model_mismatches().is_empty(), "{s}");
            assert_eq!(g.sinks().len(), 1);
        }
        assert_eq!(CrystalGraph::generate(shape(1, 1)).len(), 5);
    }

    #[test]
    fn json_examples() {
        let g = CrystalGraph::generate(shape(1, 0));
        let doc = g.to_document();
        assert_eq!((doc.vertices.len(), doc.edges.len()), (4, 3));
        let empty = CrystalGraph::generate(shape(0, 0)).to_document();
        assert_eq!((empty.vertices.len(), empty.edges.len()), (1, 0));
        let g = CrystalGraph::generate(shape(2, 1));
        let back = CrystalGraph::import_json(&g.export_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.export_json(), g.export_json());
    }

    #[test]
    fn json_layout() {
        let json = CrystalGraph::generate(shape(1, 0)).export_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["shape"], serde_json::json!([1, 0]));
        assert_eq!(v["vertices"][3], serde_json::json!({"id": 3, "tableau": "-1"}));
        assert_eq!(v["edges"][1], serde_json::json!({"from": 1, "to": 2, "color": 2}));
        assert_eq!(v["source"], 0);
    }

    #[test]
    fn import_errors() {
        assert!(matches!(CrystalGraph::import_json("{"), Err(GraphError::Json(_))));
        let dangling =
            r#"{"shape":[1,0],"vertices":[{"id":0,"tableau":"1"}],"edges":[{"from":0,"to":5,"color":1}],"source":0}"#;
        assert!(matches!(
            CrystalGraph::import_json(dangling),
            Err(GraphError::DanglingId(5))
        ));
        let dup = r#"{"shape":[1,0],"vertices":[{"id":0,"tableau":"1"},{"id":1,"tableau":"2"},{"id":2,"tableau":"-2"}],
            "edges":[{"from":0,"to":1,"color":1},{"from":0,"to":2,"color":1}],"source":0}"#;
        assert!(matches!(
            CrystalGraph::import_json(dup),
            Err(GraphError::DuplicateEdge { vertex: 0, .. })
        ));
        let bad_color =
            r#"{"shape":[1,0],"vertices":[{"id":0,"tableau":"1"}],"edges":[{"from":0,"to":0,"color":3}],"source":0}"#;
        assert!(matches!(CrystalGraph::import_json(bad_color), Err(GraphError::Json(_))));
        let bad_shape = r#"{"shape":[1,2],"vertices":[{"id":0,"tableau":"1"}],"edges":[],"source":0}"#;
        assert!(matches!(CrystalGraph::import_json(bad_shape), Err(GraphError::Json(_))));
    }

    #[test]
    fn dot_export() {
        let dot = CrystalGraph::generate(shape(1, 0)).export_dot();
        assert_eq!(
            dot,
            "digraph crystal {\n  n0 [label=\"1\"];\n  n1 [label=\"2\"];\n  n2 [label=\"-2\"];\n  n3 [label=\"-1\"];\n  \
             n0 -> n1 [label=\"1\"];\n  n1 -> n2 [label=\"2\"];\n  n2 -> n3 [label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn well_formedness_detects_defects() {
        let e = |from, to, c: u64| GraphEdge {
            from,
            to,
            color: Color::try_from(c).unwrap(),
        };
        let v = well_formedness(3, &[e(0, 1, 1), e(0, 2, 1)], Some(0));
        assert!(v.contains(&WellFormednessViolation::MultipleOutgoing {
            vertex: 0,
            color: Color::One
        }));
        assert!(v.contains(&WellFormednessViolation::SinkCount { count: 2 }));
        let v = well_formedness(2, &[e(0, 1, 1), e(1, 0, 2)], None);
        assert!(v.contains(&WellFormednessViolation::Cycle));
        let v = well_formedness(3, &[e(0, 1, 1)], Some(0));
        assert!(v.contains(&WellFormednessViolation::Disconnected { components: 2 }));
        let v = well_formedness(2, &[e(0, 1, 1)], Some(1));
        assert_eq!(
            v,
            vec![WellFormednessViolation::SourceMismatch { declared: 1, actual: 0 }]
        );
    }
}
