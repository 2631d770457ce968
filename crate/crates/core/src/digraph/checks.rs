use itertools::Itertools;

use super::enumerate::require_formal;
use super::{effective_degree, enumerate_paths, path_sum, signed_path_sum, signed_walk_sum, Digraph, VertexId};
use crate::det2pf::{pfaffian_principle_check, MinorFamily};
use crate::error::Error;
use crate::report::{CheckResult, Identity};
use crate::ring::{pfaffian_recursive, series_truncate, Polynomial, RationalFunction, RingMatrix, SkewMatrix};

/// The matrix `(P(a_i, b_j))`.
pub fn path_matrix(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> RingMatrix {
    RingMatrix::from_fn(a.len(), b.len(), |i, j| path_sum(g, a[i], b[j]).into())
}

/// Checks `P~_k(a, b) = det(P(a_i, b_j))` on an acyclic graph.
pub fn lindstrom_check(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> Result<CheckResult, Error> {
    g.require_acyclic()?;
    let lhs = signed_path_sum(g, a, b)?;
    let rhs = path_matrix(g, a, b).determinant()?;
    Ok(CheckResult::new("lindstrom", Identity::new("signed path families = det P", lhs.into(), rhs)))
}

/// `I - A`, where `A[u][v]` is the total weight of the edges `u -> v`.
pub fn transfer_matrix(g: &Digraph) -> RingMatrix {
    let n = g.vertex_count();
    let mut m = RingMatrix::identity(n);
    for (e, edge) in g.edges().iter().enumerate() {
        let cur = m[(edge.tail, edge.head)].clone();
        m[(edge.tail, edge.head)] = &cur - &RationalFunction::from(g.weight(e).clone());
    }
    m
}

/// `W(a_i, b_j)`: entries of `(I - A)^-1`, computed by cofactors over the
/// shared denominator `det(I - A)`.
pub fn walk_matrix(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> Result<RingMatrix, Error> {
    let t = transfer_matrix(g);
    let det = t.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut out = RingMatrix::zeros(a.len(), b.len());
    for (i, &s) in a.iter().enumerate() {
        for (j, &u) in b.iter().enumerate() {
            out[(i, j)] = t.cofactor(u, s)?.checked_div(&det)?;
        }
    }
    Ok(out)
}

/// `W(a, b)` as an exact rational function.
pub fn walk_sum_exact(g: &Digraph, a: VertexId, b: VertexId) -> Result<RationalFunction, Error> {
    Ok(walk_matrix(g, &[a], &[b])?[(0, 0)].clone())
}

/// Checks that the LE-disjoint walk sum, truncated at `degree`, equals the
/// series of `det(W(a_i, b_j))` through the same degree.
pub fn fomin_check(g: &Digraph, a: &[VertexId], b: &[VertexId], degree: Option<u32>) -> Result<CheckResult, Error> {
    require_formal(g)?;
    let d = effective_degree(g, degree)?;
    let lhs = signed_walk_sum(g, a, b, d)?;
    let exact = walk_matrix(g, a, b)?.determinant()?;
    let rhs = exact.series(d)?;
    Ok(CheckResult::new("fomin", Identity::new(format!("LE-disjoint walk sum = det W through degree {d}"), lhs.into(), rhs.into())))
}

/// True when every path `a -> b'` meets every path `a' -> b` for `a < a'` in
/// `A` and `b < b'` in `B`.
pub fn is_compatible(g: &Digraph, a: &[VertexId], b: &[VertexId]) -> bool {
    for (i, &s) in a.iter().enumerate() {
        for &s2 in &a[i + 1..] {
            for (j, &t) in b.iter().enumerate() {
                for &t2 in &b[j + 1..] {
                    let ps = enumerate_paths(g, s, t2);
                    let qs = enumerate_paths(g, s2, t);
                    for p in &ps {
                        let pv = p.vertices(g);
                        if qs.iter().any(|q| q.vertices(g).iter().all(|v| !pv.contains(v))) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// Vertex-disjoint paths; the graph must be acyclic.
    Paths,
    /// LE-disjoint walks truncated at the given total degree.
    Walks(u32),
}

/// Sum over strictly increasing `b`-tuples from `big_b` of the signed family
/// sum for `(a, b)`.
pub fn stembridge_q(g: &Digraph, a: &[VertexId], big_b: &[VertexId], mode: FamilyMode) -> Result<Polynomial, Error> {
    match mode {
        FamilyMode::Paths => g.require_acyclic()?,
        FamilyMode::Walks(_) => require_formal(g)?,
    }
    let mut acc = Polynomial::zero();
    for b in big_b.iter().copied().combinations(a.len()) {
        let s = match mode {
            FamilyMode::Paths => signed_path_sum(g, a, &b)?,
            FamilyMode::Walks(d) => signed_walk_sum(g, a, &b, d)?,
        };
        acc = acc + s;
    }
    Ok(acc)
}

fn check_ordered_set(g: &Digraph, big_b: &[VertexId]) -> Result<(), Error> {
    let mut seen = vec![false; g.vertex_count()];
    for &v in big_b {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Overlap(g.vertex_name(v).to_string()));
        }
    }
    Ok(())
}

/// Checks `Q_k(a) = Pf(Q_2(a_i, a_j))` for even `k` by enumeration, and
/// cross-checks both sides against the determinant-to-Pfaffian transform
/// of the `P` (or `W`) table.
pub fn stembridge_check(g: &Digraph, a: &[VertexId], big_b: &[VertexId], mode: FamilyMode) -> Result<CheckResult, Error> {
    if a.len() % 2 == 1 {
        return Err(Error::OddTuple(a.len()));
    }
    check_ordered_set(g, big_b)?;
    let lhs = stembridge_q(g, a, big_b, mode)?;
    let mut q2 = SkewMatrix::zeros(a.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            q2.set(i, j, stembridge_q(g, &[a[i], a[j]], big_b, mode)?.into());
        }
    }
    let pf = pfaffian_recursive(&q2);
    let labels = |vs: &[VertexId]| vs.iter().map(|&v| g.vertex_name(v).to_string()).collect::<Vec<_>>();
    let rows: Vec<usize> = (0..a.len()).collect();
    match mode {
        FamilyMode::Paths => {
            let fam = MinorFamily::new(labels(a), labels(big_b), path_matrix(g, a, big_b))?;
            let transfer = pfaffian_principle_check(&fam, &rows)?;
            Ok(CheckResult::new("stembridge", Identity::new("Q_k = Pf(Q_2)", lhs.clone().into(), pf))
                .with(Identity::new("Q_k = R_k of the P table", lhs.into(), transfer.main.lhs.clone()))
                .with(transfer.main))
        }
        FamilyMode::Walks(d) => {
            let pf = series_truncate(pf.as_polynomial().expect("polynomial entries"), d);
            let fam = MinorFamily::new(labels(a), labels(big_b), walk_matrix(g, a, big_b)?)?;
            let transfer = pfaffian_principle_check(&fam, &rows)?;
            let r_k = transfer.main.lhs.series(d)?;
            let pf_r2 = transfer.main.rhs.series(d)?;
            Ok(CheckResult::new(
                "stembridge-walks",
                Identity::new(format!("Q_k = Pf(Q_2) through degree {d}"), lhs.clone().into(), pf.into()),
            )
            .with(Identity::new("Q_k = series of R_k of the W table", lhs.into(), r_k.into()))
            .with(Identity::new("series of Pf(R_2) of the W table", pf_r2.into(), transfer.main.lhs.series(d)?.into())))
        }
    }
}
