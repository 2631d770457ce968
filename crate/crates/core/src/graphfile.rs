//! JSON graph files.
//!
//! One JSON object per file:
//!
//! ```json
//! {
//!   "kind": "digraph",
//!   "vertices": ["1", "2", "3"],
//!   "edges": [{"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "2", "to": "3"}],
//!   "weights": {"b": "3/2"}
//! }
//! ```
//!
//! `kind` is `digraph`, `undirected-boundary` or `planar-circular`. The
//! last two need `boundary` (clockwise for networks). Networks also need
//! `rotation`, mapping each interior vertex to its incident edge ids in
//! counterclockwise order, and may list `sources` and `sinks`, which are
//! then checked against the edge directions. Every edge weight is the
//! variable named by its id unless `weights` overrides it with a number.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Error;
use crate::flows::PlanarCircularNetwork;
use crate::groves::GraphWithBoundary;
use crate::ring::{Coeff, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Digraph,
    UndirectedBoundary,
    PlanarCircular,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Digraph => "digraph",
            GraphKind::UndirectedBoundary => "undirected-boundary",
            GraphKind::PlanarCircular => "planar-circular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// The file as written, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub kind: GraphKind,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sources: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sinks: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub weights: BTreeMap<String, String>,
}

/// A validated graph of one of the three kinds.
#[derive(Clone, Debug)]
pub enum LoadedGraph {
    Digraph(Digraph),
    Boundary(GraphWithBoundary),
    Network(PlanarCircularNetwork),
}

impl LoadedGraph {
    pub fn kind(&self) -> GraphKind {
        match self {
            LoadedGraph::Digraph(_) => GraphKind::Digraph,
            LoadedGraph::Boundary(_) => GraphKind::UndirectedBoundary,
            LoadedGraph::Network(_) => GraphKind::PlanarCircular,
        }
    }

    /// One-line description for `validate`.
    pub fn summary(&self) -> String {
        match self {
            LoadedGraph::Digraph(g) => format!(
                "digraph: {} vertices, {} edges, {}",
                g.vertex_count(),
                g.edge_count(),
                if g.is_acyclic() { "acyclic" } else { "has directed cycles" }
            ),
            LoadedGraph::Boundary(g) => format!(
                "undirected-boundary: {} vertices, {} edges, {} boundary vertices",
                g.vertex_count(),
                g.edges().len(),
                g.boundary().len()
            ),
            LoadedGraph::Network(n) => format!(
                "planar-circular: {} vertices, {} edges, {} sources, {} sinks",
                n.graph().vertex_count(),
                n.graph().edge_count(),
                n.sources().len(),
                n.sinks().len()
            ),
        }
    }
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<LoadedGraph, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_graph_file(&text)?.build()
}

impl GraphFile {
    fn weight_overrides(&self) -> Result<Vec<(&str, Polynomial)>, Error> {
        let mut problems = Vec::new();
        let mut out = Vec::new();
        for (id, value) in &self.weights {
            match Coeff::parse(value.trim()) {
                Some(c) => out.push((id.as_str(), Polynomial::constant(c))),
                None => problems.push(format!("weight {value:?} for edge {id:?} is not a rational number")),
            }
        }
        if problems.is_empty() {
            Ok(out)
        } else {
            Err(Error::Validation(problems))
        }
    }

    fn misplaced_fields(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let kind = self.kind.name();
        let mut forbid = |present: bool, field: &str| {
            if present {
                problems.push(format!("field {field:?} is not used by kind {kind:?}"));
            }
        };
        match self.kind {
            GraphKind::Digraph => {
                forbid(self.boundary.is_some(), "boundary");
                forbid(self.sources.is_some(), "sources");
                forbid(self.sinks.is_some(), "sinks");
                forbid(self.rotation.is_some(), "rotation");
            }
            GraphKind::UndirectedBoundary => {
                forbid(self.sources.is_some(), "sources");
                forbid(self.sinks.is_some(), "sinks");
                forbid(self.rotation.is_some(), "rotation");
            }
            GraphKind::PlanarCircular => {}
        }
        if self.kind != GraphKind::Digraph && self.boundary.is_none() {
            problems.push(format!("kind {kind:?} needs a \"boundary\" list"));
        }
        if self.kind == GraphKind::PlanarCircular && self.rotation.is_none() {
            problems.push("kind \"planar-circular\" needs a \"rotation\" map".to_string());
        }
        problems
    }

    /// Validates the file and builds the graph it describes.
    pub fn build(&self) -> Result<LoadedGraph, Error> {
        let problems = self.misplaced_fields();
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        let edges: Vec<(&str, &str, &str)> =
            self.edges.iter().map(|e| (e.id.as_str(), e.from.as_str(), e.to.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let weights = self.weight_overrides()?;
        match self.kind {
            GraphKind::Digraph => {
                let mut g = Digraph::new(&vertices, &edges)?;
                for (id, w) in weights {
                    g.set_weight(id, w)?;
                }
                Ok(LoadedGraph::Digraph(g))
            }
            GraphKind::UndirectedBoundary => {
                let boundary = self.boundary.as_deref().unwrap_or_default();
                let boundary: Vec<&str> = boundary.iter().map(String::as_str).collect();
                let mut g = GraphWithBoundary::new(&vertices, &boundary, &edges)?;
                for (id, w) in weights {
                    g.set_weight(id, w)?;
                }
                Ok(LoadedGraph::Boundary(g))
            }
            GraphKind::PlanarCircular => {
                let mut g = Digraph::new(&vertices, &edges)?;
                for (id, w) in weights {
                    g.set_weight(id, w)?;
                }
                let rotation: Vec<(&str, Vec<&str>)> = self
                    .rotation
                    .iter()
                    .flatten()
                    .map(|(v, ids)| (v.as_str(), ids.iter().map(String::as_str).collect()))
                    .collect();
                let n = PlanarCircularNetwork::new(g, self.boundary.as_deref().unwrap_or_default(), &rotation)?;
                if self.sources.is_some() || self.sinks.is_some() {
                    n.check_terminals(self.sources.as_deref().unwrap_or_default(), self.sinks.as_deref().unwrap_or_default())?;
                }
                Ok(LoadedGraph::Network(n))
            }
        }
    }
}

fn weight_record(id: &str, w: &Polynomial, out: &mut BTreeMap<String, String>) {
    if *w != Polynomial::var(id) {
        out.insert(id.to_string(), w.to_string());
    }
}

fn edge_records<'a>(edges: impl Iterator<Item = (&'a str, &'a str, &'a str)>) -> Vec<EdgeRecord> {
    edges.map(|(id, from, to)| EdgeRecord { id: id.into(), from: from.into(), to: to.into() }).collect()
}

impl From<&Digraph> for GraphFile {
    fn from(g: &Digraph) -> GraphFile {
        let mut weights = BTreeMap::new();
        for (e, edge) in g.edges().iter().enumerate() {
            weight_record(&edge.id, g.weight(e), &mut weights);
        }
        GraphFile {
            kind: GraphKind::Digraph,
            vertices: g.vertex_names().to_vec(),
            edges: edge_records(g.edges().iter().map(|e| (e.id.as_str(), g.vertex_name(e.tail), g.vertex_name(e.head)))),
            boundary: None,
            sources: None,
            sinks: None,
            rotation: None,
            weights,
        }
    }
}

impl From<&GraphWithBoundary> for GraphFile {
    fn from(g: &GraphWithBoundary) -> GraphFile {
        let mut weights = BTreeMap::new();
        for (e, edge) in g.edges().iter().enumerate() {
            weight_record(&edge.id, g.weight(e), &mut weights);
        }
        let name = |v| g.vertex_name(v).to_string();
        GraphFile {
            kind: GraphKind::UndirectedBoundary,
            vertices: (0..g.vertex_count()).map(name).collect(),
            edges: edge_records(g.edges().iter().map(|e| (e.id.as_str(), g.vertex_name(e.u), g.vertex_name(e.v)))),
            boundary: Some(g.boundary().iter().map(|&v| name(v)).collect()),
            sources: None,
            sinks: None,
            rotation: None,
            weights,
        }
    }
}

impl From<&PlanarCircularNetwork> for GraphFile {
    fn from(n: &PlanarCircularNetwork) -> GraphFile {
        let g = n.graph();
        let name = |v| g.vertex_name(v).to_string();
        let rotation = (0..g.vertex_count())
            .filter(|&v| !n.is_boundary(v))
            .map(|v| (name(v), n.rotation(v).iter().map(|&e| g.edge(e).id.clone()).collect()))
            .collect();
        GraphFile {
            kind: GraphKind::PlanarCircular,
            boundary: Some(n.boundary().iter().map(|&v| name(v)).collect()),
            sources: Some(n.sources().iter().map(|&v| name(v)).collect()),
            sinks: Some(n.sinks().iter().map(|&v| name(v)).collect()),
            rotation: Some(rotation),
            ..GraphFile::from(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_with_override() {
        let text = r#"{"kind": "digraph", "vertices": ["x", "y"],
            "edges": [{"id": "a", "from": "x", "to": "y"}], "weights": {"a": "3/2"}}"#;
        let LoadedGraph::Digraph(g) = parse_graph_file(text).unwrap().build().unwrap() else { panic!() };
        assert_eq!(g.weight(0).to_string(), "3/2");
        assert!(!g.has_formal_weights());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_graph_file("{\n  \"kind\": \"digraph\",\n  \"vertices\": [1]\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
        assert!(matches!(parse_graph_file("{\"kind\": \"tree\"}"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph_file("{\"kind\": \"digraph\", \"vertices\": [], \"edges\": [], \"extra\": 1}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn validation_lists_problems() {
        let text = r#"{"kind": "planar-circular", "vertices": ["x"], "edges": []}"#;
        let Err(Error::Validation(problems)) = parse_graph_file(text).unwrap().build() else { panic!() };
        assert_eq!(problems.len(), 2, "{problems:?}");
        let text = r#"{"kind": "digraph", "vertices": ["x"], "edges": [], "boundary": ["x"], "weights": {"q": "z"}}"#;
        assert!(matches!(parse_graph_file(text).unwrap().build(), Err(Error::Validation(_))));
        let text = r#"{"kind": "digraph", "vertices": ["x", "x"], "edges": []}"#;
        assert!(matches!(parse_graph_file(text).unwrap().build(), Err(Error::Validation(_))));
    }

    #[test]
    fn declared_terminals_are_checked() {
        let text = r#"{"kind": "planar-circular", "vertices": ["s", "t"], "boundary": ["s", "t"],
            "edges": [{"id": "x", "from": "s", "to": "t"}], "rotation": {}, "sources": ["t"], "sinks": ["s"]}"#;
        assert!(parse_graph_file(text).unwrap().build().is_err());
        let ok = text.replace(r#""sources": ["t"], "sinks": ["s"]"#, r#""sources": ["s"], "sinks": ["t"]"#);
        assert_eq!(parse_graph_file(&ok).unwrap().build().unwrap().kind(), GraphKind::PlanarCircular);
    }

    #[test]
    fn serialization_round_trips() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let n = crate::random::random_network(&mut rng, 3, 5, 14);
        let file = GraphFile::from(&n);
        let text = serde_json::to_string(&file).unwrap();
        let back = parse_graph_file(&text).unwrap();
        assert_eq!(back, file);
        let LoadedGraph::Network(m) = back.build().unwrap() else { panic!() };
        assert_eq!(GraphFile::from(&m), file);
        let g = crate::random::random_boundary_graph(&mut rng, 5, 2, 12);
        let file = GraphFile::from(&g);
        assert_eq!(GraphFile::from(&parse_graph_file(&serde_json::to_string(&file).unwrap()).unwrap().build().map(|l| match l {
            LoadedGraph::Boundary(g) => g,
            _ => panic!(),
        }).unwrap()), file);
    }
}
