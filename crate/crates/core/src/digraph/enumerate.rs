use std::collections::VecDeque;

use super::{loop_erase, Digraph, VertexId, Walk};
use crate::error::Error;
use crate::ring::{Permutation, Polynomial};

fn check_lengths(a: &[VertexId], b: &[VertexId]) -> Result<(), Error> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch(a.len(), b.len()))
    }
}

/// All simple paths from `a` to `b`, in lexicographic order of edge ids.
pub fn enumerate_paths(g: &Digraph, a: VertexId, b: VertexId) -> Vec<Walk> {
    fn rec(g: &Digraph, at: VertexId, b: VertexId, on: &mut [bool], edges: &mut Vec<usize>, start: VertexId, out: &mut Vec<Walk>) {
        if at == b {
            out.push(Walk { start, edges: edges.clone() });
            return;
        }
        for &e in g.out_edges(at) {
            let h = g.edge(e).head;
            if on[h] {
                continue;
            }
            on[h] = true;
            edges.push(e);
            rec(g, h, b, on, edges, start, out);
            edges.pop();
            on[h] = false;
        }
    }
    let mut on = vec![false; g.vertex_count()];
    on[a] = true;
    let mut out = Vec::new();
    rec(g, a, b, &mut on, &mut Vec::new(), a, &mut out);
    out
}

/// `P(a, b)`: the total weight of all simple paths from `a` to `b`.
pub fn path_sum(g: &Digraph, a: VertexId, b: VertexId) -> Polynomial {
    enumerate_paths(g, a, b).iter().map(|p| p.weight(g)).fold(Polynomial::zero(), |acc, w| acc + w)
}

/// Families of pairwise vertex-disjoint paths `p_i: a_i -> b_i`.
pub fn disjoint_path_families(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> Result<Vec<Vec<Walk>>, Error> {
    check_lengths(a, b)?;
    let options: Vec<Vec<Walk>> = a.iter().zip(b).map(|(&s, &t)| enumerate_paths(g, s, t)).collect();
    let mut used = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    path_families_rec(g, &options, &mut used, &mut Vec::new(), &mut out);
    Ok(out)
}

fn path_families_rec(g: &Digraph, options: &[Vec<Walk>], used: &mut [bool], acc: &mut Vec<Walk>, out: &mut Vec<Vec<Walk>>) {
    let i = acc.len();
    if i == options.len() {
        out.push(acc.clone());
        return;
    }
    for p in &options[i] {
        let vs = p.vertices(g);
        if vs.iter().any(|&v| used[v]) {
            continue;
        }
        vs.iter().for_each(|&v| used[v] = true);
        acc.push(p.clone());
        path_families_rec(g, options, used, acc, out);
        acc.pop();
        vs.iter().for_each(|&v| used[v] = false);
    }
}

/// `P_k(a, b)`: total weight of the disjoint path families.
pub fn path_family_sum(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> Result<Polynomial, Error> {
    Ok(disjoint_path_families(g, a, b)?
        .iter()
        .map(|fam| fam.iter().fold(Polynomial::one(), |acc, p| &acc * &p.weight(g)))
        .fold(Polynomial::zero(), |acc, w| acc + w))
}

/// `P~_k(a, b)`: the sign-weighted sum of `P_k(a, b_sigma)` over all
/// permutations of `b`.
pub fn signed_path_sum(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> Result<Polynomial, Error> {
    check_lengths(a, b)?;
    let mut acc = Polynomial::zero();
    for sigma in Permutation::all(b.len()) {
        let bs: Vec<VertexId> = (0..b.len()).map(|i| b[sigma.apply(i)]).collect();
        let s = path_family_sum(g, a, &bs)?;
        acc = if sigma.sign() > 0 { acc + s } else { acc - s };
    }
    Ok(acc)
}

/// Fewest edges needed to reach `target` from each vertex.
fn distances_to(g: &Digraph, target: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[target] = Some(0);
    let mut queue = VecDeque::from([target]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &e in g.in_edges(v) {
            let t = g.edge(e).tail;
            if dist[t].is_none() {
                dist[t] = Some(d + 1);
                queue.push_back(t);
            }
        }
    }
    dist
}

/// All walks from `a` to `b` with at most `max_edges` edges, shortest first
/// and lexicographic by edge id within one length.
pub fn enumerate_walks_bounded(g: &Digraph, a: VertexId, b: VertexId, max_edges: usize) -> Vec<Walk> {
    fn rec(
        g: &Digraph,
        at: VertexId,
        b: VertexId,
        budget: usize,
        dist: &[Option<usize>],
        edges: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == b {
            out.push(edges.clone());
        }
        if budget == 0 {
            return;
        }
        for &e in g.out_edges(at) {
            let h = g.edge(e).head;
            if dist[h].is_some_and(|d| d < budget) {
                edges.push(e);
                rec(g, h, b, budget - 1, dist, edges, out);
                edges.pop();
            }
        }
    }
    let dist = distances_to(g, b);
    let mut out = Vec::new();
    if dist[a].is_some_and(|d| d <= max_edges) {
        rec(g, a, b, max_edges, &dist, &mut Vec::new(), &mut out);
    }
    let mut out: Vec<Walk> = out.into_iter().map(|edges| Walk { start: a, edges }).collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.edges.cmp(&y.edges)));
    out
}

/// The degree bound to use for walk enumeration: the given one, or on an
/// acyclic graph the longest possible path.
pub fn effective_degree(g: &Digraph, degree: Option<u32>) -> Result<u32, Error> {
    match degree {
        Some(d) => Ok(d),
        None if g.is_acyclic() => Ok(g.vertex_count().saturating_sub(1) as u32),
        None => Err(Error::DegreeBoundRequired),
    }
}

pub(crate) fn require_formal(g: &Digraph) -> Result<(), Error> {
    if g.has_formal_weights() {
        Ok(())
    } else {
        Err(Error::NumericWeights("walk truncation needs one formal variable per edge".into()))
    }
}

struct WalkOption {
    walk: Walk,
    vertices: Vec<VertexId>,
    erased: Vec<VertexId>,
}

/// Families `(w_1, ..., w_k)` with `w_i: a_i -> b_i` such that each `w_j`
/// avoids every vertex of `LE(w_i)` for `i < j`, and with at most
/// `max_edges` edges in total.
pub fn le_disjoint_walk_families(
    g: &Digraph,
    a: &[VertexId],
    b: &[VertexId],
    max_edges: usize,
) -> Result<Vec<Vec<Walk>>, Error> {
    check_lengths(a, b)?;
    let options = walk_options(g, a, b, max_edges);
    let mut out = Vec::new();
    let mut blocked = vec![0u32; g.vertex_count()];
    le_rec(&options, &mut blocked, max_edges, &mut Vec::new(), &mut |fam| out.push(fam.iter().map(|w| w.walk.clone()).collect()));
    Ok(out)
}

fn walk_options(g: &Digraph, a: &[VertexId], b: &[VertexId], max_edges: usize) -> Vec<Vec<WalkOption>> {
    a.iter()
        .zip(b)
        .map(|(&s, &t)| {
            enumerate_walks_bounded(g, s, t, max_edges)
                .into_iter()
                .map(|w| {
                    let erased = loop_erase(g, &w).vertices(g);
                    WalkOption { vertices: w.vertices(g), erased, walk: w }
                })
                .collect()
        })
        .collect()
}

fn le_rec<'o>(
    options: &'o [Vec<WalkOption>],
    blocked: &mut [u32],
    budget: usize,
    acc: &mut Vec<&'o WalkOption>,
    emit: &mut dyn FnMut(&[&'o WalkOption]),
) {
    let i = acc.len();
    if i == options.len() {
        emit(acc);
        return;
    }
    for w in &options[i] {
        // options are sorted by length
        if w.walk.len() > budget {
            break;
        }
        if w.vertices.iter().any(|&v| blocked[v] > 0) {
            continue;
        }
        w.erased.iter().for_each(|&v| blocked[v] += 1);
        acc.push(w);
        le_rec(options, blocked, budget - w.walk.len(), acc, emit);
        acc.pop();
        w.erased.iter().for_each(|&v| blocked[v] -= 1);
    }
}

/// `W~_k(a, b)` truncated to total degree `degree`: the sign-weighted sum
/// over LE-disjoint walk families.
pub fn signed_walk_sum(g: &Digraph, a: &[VertexId], b: &[VertexId], degree: u32) -> Result<Polynomial, Error> {
    check_lengths(a, b)?;
    require_formal(g)?;
    let max_edges = degree as usize;
    let mut acc = Polynomial::zero();
    for sigma in Permutation::all(b.len()) {
        let bs: Vec<VertexId> = (0..b.len()).map(|i| b[sigma.apply(i)]).collect();
        let options = walk_options(g, a, &bs, max_edges);
        let mut sum = Polynomial::zero();
        le_rec(&options, &mut vec![0; g.vertex_count()], max_edges, &mut Vec::new(), &mut |fam| {
            let w = fam.iter().fold(Polynomial::one(), |acc, w| &acc * &w.walk.weight(g));
            sum += &w;
        });
        acc = if sigma.sign() > 0 { acc + sum } else { acc - sum };
    }
    Ok(acc)
}
