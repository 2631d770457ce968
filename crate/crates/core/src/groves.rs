//! Undirected graphs with boundary, groves and the response matrix.
//!
//! A grove is a spanning forest in which every tree contains a boundary
//! vertex; it induces a partition of the boundary. All groves of a graph
//! are enumerated once into a [`GroveTable`] keyed by that partition.

use std::collections::HashMap;

use itertools::Itertools;

use crate::det2pf::{pfaffian_principle_check, MinorFamily};
use crate::error::Error;
use crate::limits::check_edge_limit;
use crate::report::{CheckResult, Identity};
use crate::ring::{Permutation, Polynomial, RationalFunction, RingMatrix, SkewMatrix, pfaffian_recursive};

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedEdge {
    pub id: String,
    pub u: VertexId,
    pub v: VertexId,
}

#[derive(Clone, Debug)]
pub struct GraphWithBoundary {
    vertices: Vec<String>,
    index: HashMap<String, VertexId>,
    boundary: Vec<VertexId>,
    // position of each vertex in `boundary`
    boundary_pos: Vec<Option<usize>>,
    edges: Vec<UndirectedEdge>,
    weights: Vec<Polynomial>,
}

impl GraphWithBoundary {
    /// Vertices, the ordered boundary, and `(edge id, endpoint, endpoint)`
    /// triples. Every connected component must contain a boundary vertex.
    pub fn new<S: AsRef<str>>(vertices: &[S], boundary: &[S], edges: &[(S, S, S)]) -> Result<GraphWithBoundary, Error> {
        let mut problems = Vec::new();
        let mut index = HashMap::new();
        let mut names = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            if index.insert(v.to_string(), names.len()).is_some() {
                problems.push(format!("duplicate vertex {v:?}"));
            }
            names.push(v.to_string());
        }
        let mut boundary_pos = vec![None; names.len()];
        let mut bd = Vec::new();
        for b in boundary {
            let b = b.as_ref();
            match index.get(b) {
                Some(&v) if boundary_pos[v].is_some() => problems.push(format!("boundary vertex {b:?} listed twice")),
                Some(&v) => {
                    boundary_pos[v] = Some(bd.len());
                    bd.push(v);
                }
                None => problems.push(format!("boundary vertex {b:?} is not a vertex")),
            }
        }
        let mut es = Vec::new();
        for (id, a, b) in edges {
            let (id, a, b) = (id.as_ref(), a.as_ref(), b.as_ref());
            match (index.get(a), index.get(b)) {
                (Some(&u), Some(&v)) => es.push(UndirectedEdge { id: id.to_string(), u, v }),
                _ => problems.push(format!("edge {id:?} has an unknown endpoint ({a:?} - {b:?})")),
            }
        }
        es.sort_by(|x, y| x.id.cmp(&y.id));
        for w in es.windows(2) {
            if w[0].id == w[1].id {
                problems.push(format!("duplicate edge id {:?}", w[0].id));
            }
        }
        if problems.is_empty() {
            let mut uf = UnionFind::new(names.len());
            for e in &es {
                uf.union(e.u, e.v);
            }
            let mut has_boundary = vec![false; names.len()];
            for &b in &bd {
                has_boundary[uf.find(b)] = true;
            }
            for v in 0..names.len() {
                if uf.find(v) == v && !has_boundary[v] {
                    problems.push(format!("the component of {:?} contains no boundary vertex", names[v]));
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        let weights = es.iter().map(|e| Polynomial::var(&e.id)).collect();
        Ok(GraphWithBoundary { vertices: names, index, boundary: bd, boundary_pos, edges: es, weights })
    }

    pub fn set_weight(&mut self, edge: &str, weight: Polynomial) -> Result<(), Error> {
        let e = self
            .edges
            .binary_search_by(|x| x.id.as_str().cmp(edge))
            .map_err(|_| Error::UnknownEdge(edge.to_string()))?;
        self.weights[e] = weight;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, Error> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[UndirectedEdge] {
        &self.edges
    }

    pub fn weight(&self, e: usize) -> &Polynomial {
        &self.weights[e]
    }

    /// Boundary vertices in their given order.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn interior(&self) -> Vec<VertexId> {
        (0..self.vertices.len()).filter(|&v| self.boundary_pos[v].is_none()).collect()
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.boundary_pos[v].is_some()
    }

    /// Resolves names to boundary vertices.
    pub fn resolve_boundary<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<VertexId>, Error> {
        names
            .iter()
            .map(|n| {
                let v = self.vertex(n.as_ref())?;
                if self.is_boundary(v) {
                    Ok(v)
                } else {
                    Err(Error::NotBoundaryVertex(n.as_ref().to_string()))
                }
            })
            .collect()
    }
}

/// Union-find with undo, for backtracking.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `u` and `v` were already joined.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        true
    }

    fn undo(&mut self) {
        let (a, b) = self.history.pop().expect("nothing to undo");
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

/// Kirchhoff matrix over all vertices: diagonal entries are the total
/// weight at a vertex, off-diagonal entries minus the weight between two
/// vertices. Loops contribute nothing.
pub fn kirchhoff(g: &GraphWithBoundary) -> RingMatrix {
    let n = g.vertex_count();
    let mut k = vec![vec![Polynomial::zero(); n]; n];
    for (e, edge) in g.edges.iter().enumerate() {
        if edge.u == edge.v {
            continue;
        }
        let w = g.weight(e);
        k[edge.u][edge.u] += w;
        k[edge.v][edge.v] += w;
        k[edge.u][edge.v] += &-w;
        k[edge.v][edge.u] += &-w;
    }
    RingMatrix::from_fn(n, n, |i, j| k[i][j].clone().into())
}

/// A boundary partition in canonical form: entry `i` is the block of the
/// `i`-th boundary vertex, blocks numbered by first appearance.
pub type Partition = Vec<usize>;

fn canonical(labels: &[usize]) -> Partition {
    let mut seen: Vec<(usize, usize)> = Vec::new();
    labels
        .iter()
        .map(|&l| match seen.iter().find(|(x, _)| *x == l) {
            Some(&(_, c)) => c,
            None => {
                seen.push((l, seen.len()));
                seen.len() - 1
            }
        })
        .collect()
}

/// Total grove weight for each boundary partition.
#[derive(Clone, Debug)]
pub struct GroveTable {
    sums: HashMap<Partition, Polynomial>,
    count: usize,
    boundary_len: usize,
}

impl GroveTable {
    /// Enumerates every grove of `g` by backtracking over the edges.
    pub fn build(g: &GraphWithBoundary) -> Result<GroveTable, Error> {
        check_edge_limit(g.edges.len())?;
        let mut table = GroveTable { sums: HashMap::new(), count: 0, boundary_len: g.boundary.len() };
        let mut uf = UnionFind::new(g.vertex_count());
        // edges still undecided at each vertex, to detect stranded components early
        let mut open: Vec<usize> = vec![0; g.vertex_count()];
        for e in &g.edges {
            open[e.u] += 1;
            open[e.v] += 1;
        }
        grove_rec(g, 0, &mut uf, &mut open, Polynomial::one(), &mut table);
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn partitions(&self) -> impl Iterator<Item = (&Partition, &Polynomial)> {
        self.sums.iter()
    }

    pub fn sum(&self, partition: &[usize]) -> Polynomial {
        self.sums.get(&canonical(partition)).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn singleton(&self) -> Polynomial {
        self.sum(&(0..self.boundary_len).collect::<Vec<_>>())
    }
}

fn grove_rec(
    g: &GraphWithBoundary,
    e: usize,
    uf: &mut UnionFind,
    open: &mut [usize],
    weight: Polynomial,
    table: &mut GroveTable,
) {
    if e == g.edges.len() {
        let mut has_boundary = vec![false; g.vertex_count()];
        for &b in &g.boundary {
            has_boundary[uf.find(b)] = true;
        }
        if (0..g.vertex_count()).any(|v| !has_boundary[uf.find(v)]) {
            return;
        }
        let labels: Vec<usize> = g.boundary.iter().map(|&b| uf.find(b)).collect();
        table.count += 1;
        *table.sums.entry(canonical(&labels)).or_insert_with(Polynomial::zero) += &weight;
        return;
    }
    let edge = &g.edges[e];
    open[edge.u] -= 1;
    open[edge.v] -= 1;
    if edge.u != edge.v && uf.union(edge.u, edge.v) {
        grove_rec(g, e + 1, uf, open, &weight * g.weight(e), table);
        uf.undo();
    }
    // skipping the edge may strand an interior vertex with no way out
    let stranded = |v: usize, uf: &UnionFind| open[v] == 0 && !g.is_boundary(v) && uf.size[uf.find(v)] == 1;
    if !stranded(edge.u, uf) && !stranded(edge.v, uf) {
        grove_rec(g, e + 1, uf, open, weight, table);
    }
    open[edge.u] += 1;
    open[edge.v] += 1;
}

/// `Z` from the grove enumeration (singleton partition).
pub fn z_singleton_enumerated(table: &GroveTable) -> Polynomial {
    table.singleton()
}

/// `Z = det(K_int)`, the principal minor on the interior vertices.
pub fn z_singleton_det(g: &GraphWithBoundary) -> Result<RationalFunction, Error> {
    let int = g.interior();
    kirchhoff(g).submatrix(&int, &int).determinant()
}

/// Weighted spanning trees of the graph obtained by gluing all boundary
/// vertices into one, by direct enumeration of edge subsets.
pub fn glued_spanning_tree_sum(g: &GraphWithBoundary) -> Result<Polynomial, Error> {
    check_edge_limit(g.edges.len())?;
    let int = g.interior();
    let mut relabel = vec![0usize; g.vertex_count()];
    for (i, &v) in int.iter().enumerate() {
        relabel[v] = i + 1;
    }
    let n = int.len() + 1;
    let edges: Vec<(usize, usize, usize)> = g
        .edges
        .iter()
        .enumerate()
        .map(|(e, x)| (e, relabel[x.u], relabel[x.v]))
        .filter(|(_, u, v)| u != v)
        .collect();
    let mut total = Polynomial::zero();
    for subset in edges.iter().combinations(n - 1) {
        let mut uf = UnionFind::new(n);
        if subset.iter().all(|&&(_, u, v)| uf.union(u, v)) {
            total += &subset.iter().fold(Polynomial::one(), |acc, &&(e, _, _)| &acc * g.weight(e));
        }
    }
    Ok(total)
}

/// Checks the tuples and builds the target partition with blocks
/// `{a_i, b_i}`; `None` when a vertex repeats (no groves).
fn pairing(g: &GraphWithBoundary, a: &[VertexId], b: &[VertexId]) -> Result<Option<Partition>, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    for &v in a.iter().chain(b) {
        if !g.is_boundary(v) {
            return Err(Error::NotBoundaryVertex(g.vertex_name(v).to_string()));
        }
    }
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(Error::Overlap(g.vertex_name(v).to_string()));
    }
    let m = g.boundary.len();
    let mut labels: Vec<usize> = (0..m).collect();
    let mut seen = vec![false; g.vertex_count()];
    for (&x, &y) in a.iter().zip(b) {
        if std::mem::replace(&mut seen[x], true) || std::mem::replace(&mut seen[y], true) {
            return Ok(None);
        }
        labels[g.boundary_pos[y].unwrap()] = g.boundary_pos[x].unwrap();
    }
    Ok(Some(canonical(&labels)))
}

/// Total weight of `Grove_k(a, b)`.
pub fn grove_weight(g: &GraphWithBoundary, table: &GroveTable, a: &[VertexId], b: &[VertexId]) -> Result<Polynomial, Error> {
    Ok(pairing(g, a, b)?.map_or_else(Polynomial::zero, |p| table.sum(&p)))
}

/// `G_k(a, b)`: grove weight normalized by `Z`.
pub fn grove_sum(g: &GraphWithBoundary, table: &GroveTable, a: &[VertexId], b: &[VertexId]) -> Result<RationalFunction, Error> {
    RationalFunction::from(grove_weight(g, table, a, b)?).checked_div(&table.singleton().into())
}

/// `G~_k(a, b)`: the sign-weighted sum of `G_k(a, b_sigma)`.
pub fn grove_signed_sum(
    g: &GraphWithBoundary,
    table: &GroveTable,
    a: &[VertexId],
    b: &[VertexId],
) -> Result<RationalFunction, Error> {
    pairing(g, a, b)?;
    let mut acc = Polynomial::zero();
    for sigma in Permutation::all(b.len()) {
        let bs: Vec<VertexId> = (0..b.len()).map(|i| b[sigma.apply(i)]).collect();
        let w = grove_weight(g, table, a, &bs)?;
        acc += &if sigma.sign() > 0 { w } else { -w };
    }
    RationalFunction::from(acc).checked_div(&table.singleton().into())
}

/// The response matrix `K_bb - K_b,int K_int^-1 K_int,b` on the boundary,
/// each entry computed as a bordered minor over `det(K_int)`.
pub fn response_matrix(g: &GraphWithBoundary) -> Result<RingMatrix, Error> {
    let k = kirchhoff(g);
    let int = g.interior();
    let z = k.submatrix(&int, &int).determinant()?;
    if z.is_zero() {
        return Err(Error::Singular);
    }
    let m = g.boundary.len();
    let mut out = RingMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let mut rows = int.clone();
            rows.push(g.boundary[i]);
            let mut cols = int.clone();
            cols.push(g.boundary[j]);
            let v = k.submatrix(&rows, &cols).determinant()?.checked_div(&z)?;
            out[(j, i)] = v.clone();
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

fn boundary_index(g: &GraphWithBoundary, vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|&v| g.boundary_pos[v].expect("boundary vertex")).collect()
}

/// Checks `G~_k(a, b) = det(G~_1(a_i, b_j))` with `G~_1 = -Lambda` off the
/// diagonal, plus `det(Lambda_{a,b}) = (-1)^k G~_k` and the entrywise
/// agreement of `G~_1` with `-Lambda`.
pub fn grove_determinant_check(g: &GraphWithBoundary, a: &[VertexId], b: &[VertexId]) -> Result<CheckResult, Error> {
    let table = GroveTable::build(g)?;
    let lhs = grove_signed_sum(g, &table, a, b)?;
    let lambda = response_matrix(g)?;
    let sub = lambda.submatrix(&boundary_index(g, a), &boundary_index(g, b));
    let g1 = RingMatrix::from_fn(sub.rows(), sub.cols(), |i, j| -&sub[(i, j)]);
    let rhs = g1.determinant()?;
    let lambda_det = sub.determinant()?;
    let signed = if a.len().is_multiple_of(2) { lhs.clone() } else { -&lhs };
    let mut check = CheckResult::new("grove-det", Identity::new("G~_k = det(G~_1)", lhs, rhs))
        .with(Identity::new("det(Lambda_ab) = (-1)^k G~_k", lambda_det, signed));
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            check = check.with(Identity::new(
                format!("G~_1({}, {}) = -Lambda", g.vertex_name(x), g.vertex_name(y)),
                grove_signed_sum(g, &table, &[x], &[y])?,
                g1[(i, j)].clone(),
            ));
        }
    }
    Ok(check)
}

/// Checks `H~_k(a) = Pf(H~_2(a_i, a_j))` where `H~_k(a)` sums `G~_k(a, b)`
/// over increasing `b` in `big_b`. Both sides come from grove enumeration;
/// the determinant-to-Pfaffian transform of the `-Lambda` table is a
/// cross-check.
pub fn grove_pfaffian_check(
    g: &GraphWithBoundary,
    big_a: &[VertexId],
    big_b: &[VertexId],
    a: &[VertexId],
) -> Result<CheckResult, Error> {
    if a.len() % 2 == 1 {
        return Err(Error::OddTuple(a.len()));
    }
    for &v in big_a.iter().chain(big_b) {
        if !g.is_boundary(v) {
            return Err(Error::NotBoundaryVertex(g.vertex_name(v).to_string()));
        }
    }
    if let Some(&v) = big_a.iter().find(|v| big_b.contains(v)) {
        return Err(Error::Overlap(g.vertex_name(v).to_string()));
    }
    let mut all: Vec<VertexId> = big_a.iter().chain(big_b).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != big_a.len() + big_b.len() || all.len() != g.boundary.len() {
        return Err(Error::Shape("A and B must partition the boundary".into()));
    }
    if let Some(&v) = a.iter().find(|v| !big_a.contains(v)) {
        return Err(Error::Shape(format!("{:?} is not in A", g.vertex_name(v))));
    }
    let table = GroveTable::build(g)?;
    let h = |tuple: &[VertexId]| -> Result<RationalFunction, Error> {
        let mut acc = RationalFunction::zero();
        for b in big_b.iter().copied().combinations(tuple.len()) {
            acc = &acc + &grove_signed_sum(g, &table, tuple, &b)?;
        }
        Ok(acc)
    };
    let lhs = h(a)?;
    let mut h2 = SkewMatrix::zeros(a.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            h2.set(i, j, h(&[a[i], a[j]])?);
        }
    }
    let rhs = pfaffian_recursive(&h2);
    let lambda = response_matrix(g)?;
    let sub = lambda.submatrix(&boundary_index(g, a), &boundary_index(g, big_b));
    let names = |vs: &[VertexId]| vs.iter().map(|&v| g.vertex_name(v).to_string()).collect::<Vec<_>>();
    let fam = MinorFamily::new(names(a), names(big_b), RingMatrix::from_fn(sub.rows(), sub.cols(), |i, j| -&sub[(i, j)]))?;
    let rows: Vec<usize> = (0..a.len()).collect();
    let transfer = pfaffian_principle_check(&fam, &rows)?;
    Ok(CheckResult::new("grove-pf", Identity::new("H~_k = Pf(H~_2)", lhs.clone(), rhs))
        .with(Identity::new("H~_k = R_k of the -Lambda table", lhs, transfer.main.lhs.clone()))
        .with(transfer.main))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::GraphWithBoundary;

    /// Path `a - i - b` with weights `x`, `y`.
    pub fn path() -> GraphWithBoundary {
        GraphWithBoundary::new(&["a", "i", "b"], &["a", "b"], &[("x", "a", "i"), ("y", "i", "b")]).unwrap()
    }

    /// Grid with `rows x cols` vertices `r.c`; the listed vertices form the
    /// boundary in the given order.
    pub fn grid(rows: usize, cols: usize, boundary: &[&str]) -> GraphWithBoundary {
        let name = |r: usize, c: usize| format!("{r}.{c}");
        let vertices: Vec<String> = (0..rows).flat_map(|r| (0..cols).map(move |c| name(r, c))).collect();
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((format!("h{r}{c}"), name(r, c), name(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((format!("v{r}{c}"), name(r, c), name(r + 1, c)));
                }
            }
        }
        let boundary: Vec<String> = boundary.iter().map(|s| s.to_string()).collect();
        GraphWithBoundary::new(&vertices, &boundary, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn validation() {
        assert!(GraphWithBoundary::new(&["a", "i"], &["a"], &[("x", "a", "i")]).is_ok());
        let err = GraphWithBoundary::new(&["a", "i", "j"], &["a"], &[("x", "a", "i")]).unwrap_err();
        assert!(err.to_string().contains("\"j\""), "{err}");
        assert!(GraphWithBoundary::new(&["a"], &["z"], &[]).is_err());
        assert!(GraphWithBoundary::new(&["a", "b"], &["a", "b"], &[("x", "a", "q")]).is_err());
    }

    #[test]
    fn kirchhoff_matrices() {
        let g = GraphWithBoundary::new(&["u", "v"], &["u", "v"], &[("x", "u", "v")]).unwrap();
        let k = kirchhoff(&g);
        assert_eq!(k, RingMatrix::from_rows(vec![vec![rf("x"), rf("-x")], vec![rf("-x"), rf("x")]]).unwrap());
        let k = kirchhoff(&path());
        assert_eq!(k[(1, 1)].to_string(), "x + y");
        assert_eq!(k[(0, 0)].to_string(), "x");
        assert_eq!(k[(2, 2)].to_string(), "y");
        assert!(k.is_symmetric());
        let lonely = GraphWithBoundary::new(&["u", "v"], &["u", "v"], &[]).unwrap();
        assert_eq!(kirchhoff(&lonely), RingMatrix::zeros(2, 2));
    }

    #[test]
    fn z_on_path() {
        let g = path();
        let t = GroveTable::build(&g).unwrap();
        assert_eq!(z_singleton_enumerated(&t).to_string(), "x + y");
        assert_eq!(z_singleton_det(&g).unwrap().to_string(), "x + y");
        assert_eq!(glued_spanning_tree_sum(&g).unwrap().to_string(), "x + y");
        assert_eq!(t.len(), 3);
        let all = GraphWithBoundary::new(&["u", "v"], &["u", "v"], &[("x", "u", "v")]).unwrap();
        assert_eq!(z_singleton_det(&all).unwrap().to_string(), "1");
    }

    #[test]
    fn z_on_small_grid() {
        let g = grid(2, 2, &["0.0", "1.1"]);
        let t = GroveTable::build(&g).unwrap();
        assert_eq!(RationalFunction::from(t.singleton()), z_singleton_det(&g).unwrap());
        assert_eq!(t.singleton(), glued_spanning_tree_sum(&g).unwrap());
    }

    #[test]
    fn grove_sums_on_path() {
        let g = path();
        let t = GroveTable::build(&g).unwrap();
        let (a, b) = (g.vertex("a").unwrap(), g.vertex("b").unwrap());
        assert_eq!(grove_weight(&g, &t, &[a], &[b]).unwrap().to_string(), "x*y");
        assert_eq!(grove_sum(&g, &t, &[a], &[b]).unwrap(), rf("(x*y)/(x + y)"));
        assert_eq!(grove_sum(&g, &t, &[], &[]).unwrap().to_string(), "1");
        assert_eq!(grove_signed_sum(&g, &t, &[a], &[b]).unwrap(), rf("(x*y)/(x + y)"));
        assert!(matches!(grove_sum(&g, &t, &[a], &[a]), Err(Error::Overlap(_))));
        assert!(matches!(grove_sum(&g, &t, &[1], &[b]), Err(Error::NotBoundaryVertex(_))));
    }

    #[test]
    fn response_on_path() {
        let g = path();
        let l = response_matrix(&g).unwrap();
        let c = rf("(x*y)/(x + y)");
        assert_eq!(l[(0, 0)], c);
        assert_eq!(l[(0, 1)], -&c);
        assert_eq!(l[(1, 1)], c);
        let edge = GraphWithBoundary::new(&["u", "v"], &["u", "v"], &[("x", "u", "v")]).unwrap();
        assert_eq!(response_matrix(&edge).unwrap(), kirchhoff(&edge));
    }

    #[test]
    fn response_rows_sum_to_zero() {
        let g = grid(3, 3, &["0.0", "0.2", "2.2", "2.0", "1.0"]);
        let l = response_matrix(&g).unwrap();
        assert!(l.is_symmetric());
        for i in 0..l.rows() {
            let s: RationalFunction = (0..l.cols()).map(|j| l[(i, j)].clone()).sum();
            assert!(s.is_zero(), "row {i}");
        }
    }

    #[test]
    fn determinant_relation_on_grids() {
        let g = grid(2, 3, &["0.0", "0.1", "0.2", "1.2", "1.1", "1.0"]);
        let a = g.resolve_boundary(&["0.0", "0.2"]).unwrap();
        let b = g.resolve_boundary(&["1.0", "1.2"]).unwrap();
        let check = grove_determinant_check(&g, &a, &b).unwrap();
        assert!(check.passed(), "{check:?}");
        let g = grid(2, 4, &["0.0", "0.1", "0.2", "0.3", "1.3", "1.2", "1.1", "1.0"]);
        let a = g.resolve_boundary(&["0.0", "0.2", "1.3"]).unwrap();
        let b = g.resolve_boundary(&["1.0", "0.3", "1.1"]).unwrap();
        assert!(grove_determinant_check(&g, &a, &b).unwrap().passed());
    }

    #[test]
    fn pfaffian_relation_on_grid() {
        let g = grid(3, 3, &["0.0", "0.1", "0.2", "1.2", "2.2", "2.1", "2.0", "1.0"]);
        let big_a = g.resolve_boundary(&["0.0", "0.1", "0.2", "1.2"]).unwrap();
        let big_b = g.resolve_boundary(&["2.2", "2.1", "2.0", "1.0"]).unwrap();
        let check = grove_pfaffian_check(&g, &big_a, &big_b, &big_a).unwrap();
        assert!(check.passed(), "{check:?}");
        assert!(grove_pfaffian_check(&g, &big_a, &big_b[..3], &big_a).is_err());
    }
}
