//! Seeded random instances for property tests and `--seed` runs.
//!
//! Every generator takes a caller-owned RNG; the CLI and the test suites
//! seed `ChaCha8Rng` with `seed_from_u64`, so an instance is a pure
//! function of its seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::digraph::Digraph;
use crate::flows::{rotation_from_coordinates, PlanarCircularNetwork};
use crate::groves::GraphWithBoundary;

/// `a`..`z`, then `a1`..`z1`, and so on.
pub fn edge_name(i: usize) -> String {
    let letter = (b'a' + (i % 26) as u8) as char;
    match i / 26 {
        0 => letter.to_string(),
        round => format!("{letter}{round}"),
    }
}

/// Acyclic digraph on vertices `1..=n`: each forward pair `i < j` becomes
/// an edge with probability `p`, capped at `max_edges`.
pub fn random_acyclic_digraph<R: Rng>(rng: &mut R, n: usize, p: f64, max_edges: usize) -> Digraph {
    let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let mut chosen: Vec<(usize, usize)> = pairs.into_iter().filter(|_| rng.random_bool(p)).take(max_edges).collect();
    chosen.sort_unstable();
    build_digraph(n, &chosen)
}

/// Digraph on vertices `1..=n` with `m` distinct non-loop edges in random
/// directions. Usually has directed cycles.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Digraph {
    let mut pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    pairs.sort_unstable();
    build_digraph(n, &pairs)
}

fn build_digraph(n: usize, pairs: &[(usize, usize)]) -> Digraph {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String, String)> =
        pairs.iter().enumerate().map(|(k, &(i, j))| (edge_name(k), i.to_string(), j.to_string())).collect();
    Digraph::new(&vertices, &edges).expect("generated digraph is valid")
}

/// Connected graph with boundary `b0..` and interior `v0..`: a random
/// spanning tree plus extra edges, at most `max_edges` in total.
pub fn random_boundary_graph<R: Rng>(rng: &mut R, boundary: usize, interior: usize, max_edges: usize) -> GraphWithBoundary {
    let n = boundary + interior;
    let name = |v: usize| if v < boundary { format!("b{v}") } else { format!("v{}", v - boundary) };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        pairs.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let mut extra: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|p| !pairs.contains(p)).collect();
    extra.shuffle(rng);
    let room = max_edges.saturating_sub(pairs.len());
    let wanted = rng.random_range(0..=room);
    pairs.extend(extra.into_iter().take(wanted));
    pairs.sort_unstable();
    let vertices: Vec<String> = (0..n).map(name).collect();
    let bd: Vec<String> = (0..boundary).map(name).collect();
    let edges: Vec<(String, String, String)> =
        pairs.iter().enumerate().map(|(k, &(i, j))| (edge_name(k), name(i), name(j))).collect();
    GraphWithBoundary::new(&vertices, &bd, &edges).expect("generated graph is valid")
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Proper crossing of two segments; touching at a shared endpoint is fine.
fn segments_cross(p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)) -> bool {
    let d1 = cross(r, s, p);
    let d2 = cross(r, s, q);
    let d3 = cross(p, q, r);
    let d4 = cross(p, q, s);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Straight-line planar circular network in the unit disc.
///
/// `pairs` sources and as many sinks sit on the circle in clockwise order
/// `b0, b1, ...`, each joined to a nearby interior vertex `v0..`; interior
/// edges with random directions are added while they do not cross,
/// until `max_edges` is reached. The rotation is read off the drawing.
pub fn random_network<R: Rng>(rng: &mut R, pairs: usize, interior: usize, max_edges: usize) -> PlanarCircularNetwork {
    let nb = 2 * pairs;
    let mut angles: Vec<f64> = (0..nb).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
    angles.sort_by(|a, b| b.total_cmp(a));
    let mut pts: Vec<(f64, f64)> = angles.iter().map(|t| (t.cos(), t.sin())).collect();
    for _ in 0..interior {
        let r = 0.75 * rng.random_range(0.0f64..1.0).sqrt();
        let t = rng.random_range(0.0..std::f64::consts::TAU);
        pts.push((r * t.cos(), r * t.sin()));
    }
    let mut is_source = vec![true; pairs];
    is_source.extend(vec![false; pairs]);
    is_source.shuffle(rng);

    let mut segs: Vec<(usize, usize)> = Vec::new();
    let ok = |segs: &[(usize, usize)], a: usize, b: usize| {
        segs.iter().all(|&(c, d)| !segments_cross(pts[a], pts[b], pts[c], pts[d]))
            && segs.iter().all(|&(c, d)| (c, d) != (a, b) && (c, d) != (b, a))
    };
    let dist = |a: usize, b: usize| (pts[a].0 - pts[b].0).hypot(pts[a].1 - pts[b].1);
    for (bv, &source) in is_source.iter().enumerate() {
        let mut near: Vec<usize> = (nb..nb + interior).collect();
        near.sort_by(|&x, &y| dist(bv, x).total_cmp(&dist(bv, y)));
        if let Some(&v) = near.iter().find(|&&v| ok(&segs, bv, v)) {
            segs.push(if source { (bv, v) } else { (v, bv) });
        }
    }
    let mut candidates: Vec<(usize, usize)> =
        (nb..nb + interior).flat_map(|i| (i + 1..nb + interior).map(move |j| (i, j))).collect();
    candidates.shuffle(rng);
    for (i, j) in candidates {
        if segs.len() >= max_edges {
            break;
        }
        if ok(&segs, i, j) {
            segs.push(if rng.random_bool(0.5) { (i, j) } else { (j, i) });
        }
    }

    // a boundary vertex that found no partner is dropped
    let used: Vec<usize> = (0..nb).filter(|&b| segs.iter().any(|&(x, y)| x == b || y == b)).collect();
    let name = |v: usize| if v < nb { format!("b{v}") } else { format!("v{}", v - nb) };
    let keep: Vec<usize> = used.iter().copied().chain(nb..nb + interior).collect();
    let vertices: Vec<String> = keep.iter().map(|&v| name(v)).collect();
    let edges: Vec<(String, String, String)> =
        segs.iter().enumerate().map(|(k, &(x, y))| (edge_name(k), name(x), name(y))).collect();
    let g = Digraph::new(&vertices, &edges).expect("generated network graph is valid");
    let coords: Vec<(f64, f64)> = keep.iter().map(|&v| pts[v]).collect();
    let boundary: Vec<String> = used.iter().map(|&v| name(v)).collect();
    let bd_ids: Vec<usize> = (0..used.len()).collect();
    let rotation = rotation_from_coordinates(&g, &coords, &bd_ids);
    PlanarCircularNetwork::new(g, &boundary, &rotation).expect("generated network is valid")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_digraph(&mut ChaCha8Rng::seed_from_u64(5), 6, 10);
        let b = random_digraph(&mut ChaCha8Rng::seed_from_u64(5), 6, 10);
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.edge_count(), 10);
        assert!(random_acyclic_digraph(&mut ChaCha8Rng::seed_from_u64(5), 7, 0.5, 12).is_acyclic());
    }

    #[test]
    fn boundary_graphs_respect_the_edge_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_boundary_graph(&mut rng, 6, 3, 16);
            assert!(g.edges().len() <= 16 && g.edges().len() >= 8);
        }
    }

    #[test]
    fn networks_are_planar_drawings() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let n = random_network(&mut rng, 3, 5, 14);
            assert!(n.graph().edge_count() <= 14);
            assert_eq!(n.sources().len() + n.sinks().len(), n.boundary().len());
        }
        assert_eq!(edge_name(27), "b1");
    }
}
