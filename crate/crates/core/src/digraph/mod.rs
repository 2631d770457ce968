//! Weighted directed graphs, walks and loop-erasure.
//!
//! Every edge carries its own weight, by default the formal variable named
//! after the edge id. Parallel edges and self-loops are allowed. Adjacency is
//! kept sorted by edge id so every enumeration is deterministic.

mod checks;
mod enumerate;

use std::collections::{HashMap, VecDeque};

pub use checks::*;
pub use enumerate::*;

use crate::error::Error;
use crate::ring::{Polynomial, Variable};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug)]
pub struct Digraph {
    vertices: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    weights: Vec<Polynomial>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

impl Digraph {
    /// Builds a graph from vertex names and `(edge id, tail, head)` triples.
    /// Edges are reordered by id.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Digraph, Error> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        let mut problems = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            if index.insert(v.to_string(), names.len()).is_some() {
                problems.push(format!("duplicate vertex {v:?}"));
            }
            names.push(v.to_string());
        }
        let mut es = Vec::with_capacity(edges.len());
        for (id, t, h) in edges {
            let (id, t, h) = (id.as_ref(), t.as_ref(), h.as_ref());
            match (index.get(t), index.get(h)) {
                (Some(&tail), Some(&head)) => es.push(Edge { id: id.to_string(), tail, head }),
                _ => problems.push(format!("edge {id:?} has an unknown endpoint ({t:?} -> {h:?})")),
            }
        }
        es.sort_by(|a, b| a.id.cmp(&b.id));
        for w in es.windows(2) {
            if w[0].id == w[1].id {
                problems.push(format!("duplicate edge id {:?}", w[0].id));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        let mut out_edges = vec![Vec::new(); names.len()];
        let mut in_edges = vec![Vec::new(); names.len()];
        for (i, e) in es.iter().enumerate() {
            out_edges[e.tail].push(i);
            in_edges[e.head].push(i);
        }
        let weights = es.iter().map(|e| Polynomial::var(&e.id)).collect();
        Ok(Digraph { vertices: names, index, edges: es, weights, out_edges, in_edges })
    }

    /// Replaces the weight of an edge, e.g. by a numeric constant.
    pub fn set_weight(&mut self, edge: &str, weight: Polynomial) -> Result<(), Error> {
        let e = self.edge_index(edge)?;
        self.weights[e] = weight;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, Error> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn resolve<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<VertexId>, Error> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_index(&self, id: &str) -> Result<EdgeId, Error> {
        self.edges.binary_search_by(|e| e.id.as_str().cmp(id)).map_err(|_| Error::UnknownEdge(id.to_string()))
    }

    pub fn weight(&self, e: EdgeId) -> &Polynomial {
        &self.weights[e]
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v]
    }

    /// True when every edge weight is still its own formal variable, so the
    /// total degree of a walk weight equals its length.
    pub fn has_formal_weights(&self) -> bool {
        self.edges.iter().zip(&self.weights).all(|(e, w)| *w == Polynomial::var(&e.id))
    }

    pub fn variables(&self) -> Vec<Variable> {
        self.edges.iter().map(|e| Variable::new(&e.id)).collect()
    }

    /// Kahn's algorithm; `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = self.in_edges.iter().map(Vec::len).collect();
        let mut queue: VecDeque<VertexId> = (0..self.vertex_count()).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &e in &self.out_edges[v] {
                let h = self.edges[e].head;
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
        (order.len() == self.vertex_count()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub(crate) fn require_acyclic(&self) -> Result<(), Error> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::NotAcyclic)
        }
    }
}

/// A walk: a start vertex and a contiguous edge sequence. A path is a walk
/// that never repeats a vertex; the empty walk at `a` is the path `a -> a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Walk {
    pub fn empty(start: VertexId) -> Walk {
        Walk { start, edges: Vec::new() }
    }

    /// Checks contiguity against `g`.
    pub fn from_edges(g: &Digraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Walk, Error> {
        let mut at = start;
        for &e in &edges {
            let edge = g.edges.get(e).ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
            if edge.tail != at {
                return Err(Error::Shape(format!("edge {:?} does not leave {:?}", edge.id, g.vertex_name(at))));
            }
            at = edge.head;
        }
        Ok(Walk { start, edges })
    }

    /// Builds a walk from edge ids such as `["c", "e", "g"]`.
    pub fn from_ids<S: AsRef<str>>(g: &Digraph, start: &str, ids: &[S]) -> Result<Walk, Error> {
        let edges = ids.iter().map(|id| g.edge_index(id.as_ref())).collect::<Result<_, _>>()?;
        Walk::from_edges(g, g.vertex(start)?, edges)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self, g: &Digraph) -> VertexId {
        self.edges.last().map_or(self.start, |&e| g.edge(e).head)
    }

    pub fn vertices(&self, g: &Digraph) -> Vec<VertexId> {
        let mut vs = Vec::with_capacity(self.edges.len() + 1);
        vs.push(self.start);
        vs.extend(self.edges.iter().map(|&e| g.edge(e).head));
        vs
    }

    pub fn is_path(&self, g: &Digraph) -> bool {
        let mut vs = self.vertices(g);
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn weight(&self, g: &Digraph) -> Polynomial {
        self.edges.iter().fold(Polynomial::one(), |acc, &e| &acc * g.weight(e))
    }

    pub fn edge_ids<'g>(&self, g: &'g Digraph) -> Vec<&'g str> {
        self.edges.iter().map(|&e| g.edge(e).id.as_str()).collect()
    }
}

/// Chronological loop-erasure: follow the walk and, whenever it returns to a
/// vertex already on the current path, cut the path back to that vertex.
pub fn loop_erase(g: &Digraph, w: &Walk) -> Walk {
    let mut verts = vec![w.start];
    let mut edges: Vec<EdgeId> = Vec::with_capacity(w.edges.len());
    for &e in &w.edges {
        let v = g.edge(e).head;
        if let Some(pos) = verts.iter().position(|&u| u == v) {
            verts.truncate(pos + 1);
            edges.truncate(pos);
        } else {
            verts.push(v);
            edges.push(e);
        }
    }
    Walk { start: w.start, edges }
}
