//! Acceptance criteria. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use combpfaff::det2pf::{allones_pfaffian, minor_summation_check, pfaffian_principle_check, random_family, random_integer_matrix, random_skew};
use combpfaff::digraph::{
    fomin_check, path_matrix, signed_path_sum, signed_walk_sum, stembridge_check, walk_matrix, Digraph, FamilyMode,
};
use combpfaff::flows::{
    collision_index, flow_determinant_check, flow_pfaffian_check, is_alternating, FlowWeighting, PlanarCircularNetwork,
};
use combpfaff::graphfile::{load_graph, LoadedGraph};
use combpfaff::groves::{glued_spanning_tree_sum, grove_determinant_check, grove_pfaffian_check, z_singleton_det, GraphWithBoundary, GroveTable};
use combpfaff::random::random_boundary_graph;
use combpfaff::ring::{pfaffian_matchings, pfaffian_recursive, RationalFunction, RingMatrix, SkewMatrix};
use combpfaff::suite::FIG9_FLOW;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, u64, Box<dyn Fn() -> Outcome + 'a>);

fn fixture(name: &str) -> LoadedGraph {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    load_graph(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn digraph(name: &str) -> Digraph {
    match fixture(name) {
        LoadedGraph::Digraph(g) => g,
        _ => panic!("{name} is not a digraph"),
    }
}

fn boundary_graph(name: &str) -> GraphWithBoundary {
    match fixture(name) {
        LoadedGraph::Boundary(g) => g,
        _ => panic!("{name} is not a graph with boundary"),
    }
}

fn network(name: &str) -> PlanarCircularNetwork {
    match fixture(name) {
        LoadedGraph::Network(n) => n,
        _ => panic!("{name} is not a planar circular network"),
    }
}

fn rf(s: &str) -> RationalFunction {
    RationalFunction::parse(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fig1_lindstrom() -> Outcome {
    let g = digraph("fig1.json");
    let (a, b) = (g.resolve(&["1", "2"]).unwrap(), g.resolve(&["3", "4"]).unwrap());
    let literal = RingMatrix::from_rows(vec![vec![rf("a*b"), rf("a*e")], vec![rf("b*c + d"), rf("c*e + f")]]).unwrap();
    let det = literal.determinant().map_err(|e| e.to_string())?;
    let det_paths = path_matrix(&g, &a, &b).determinant().map_err(|e| e.to_string())?;
    let signed = signed_path_sum(&g, &a, &b).map_err(|e| e.to_string())?;
    for (what, s) in [("det", det.to_string()), ("det of path matrix", det_paths.to_string()), ("signed sum", signed.to_string())] {
        ensure(s == "a*b*f - a*d*e", || format!("{what} renders {s}"))?;
    }
    Ok("det and signed path sum render a*b*f - a*d*e".into())
}

fn fig3_pfaffian() -> Outcome {
    let mut vars = ["a", "b", "c", "d", "e", "f"].into_iter();
    let m = SkewMatrix::from_upper(4, |_, _| RationalFunction::var(vars.next().unwrap()));
    let (p1, p2) = (pfaffian_recursive(&m), pfaffian_matchings(&m));
    for p in [&p1, &p2] {
        ensure(p.to_string() == "a*f - b*e + c*d", || format!("Pf renders {p}"))?;
    }
    let det = m.determinant().map_err(|e| e.to_string())?;
    ensure((&p1 * &p1).ratfun_eq(&det), || format!("Pf^2 = {} but det = {det}", &p1 * &p1))?;
    Ok("both algorithms give a*f - b*e + c*d; Pf^2 = det".into())
}

fn fig4_fomin() -> Outcome {
    let g = digraph("fig4.json");
    let (a, b) = (g.resolve(&["1", "2"]).unwrap(), g.resolve(&["3", "4"]).unwrap());
    let det = walk_matrix(&g, &a, &b).and_then(|w| w.determinant()).map_err(|e| e.to_string())?;
    ensure(det.ratfun_eq(&rf("(a*b*c*e*g)/(1 - d*e*f)")), || format!("det W = {det}"))?;
    let series = det.series(12).map_err(|e| e.to_string())?;
    let walks = signed_walk_sum(&g, &a, &b, 12).map_err(|e| e.to_string())?;
    ensure(series == walks, || format!("series {series} vs walks {walks}"))?;
    let check = fomin_check(&g, &a, &b, Some(12)).map_err(|e| e.to_string())?;
    ensure(check.passed(), || format!("{check:?}"))?;
    Ok(format!("det W = {det}; {} terms agree through degree 12", walks.len()))
}

fn all_ones() -> Outcome {
    for n in 0..=6 {
        let pf = allones_pfaffian(2 * n);
        ensure(pf.to_string() == "1", || format!("Pf(M_{}) = {pf}", 2 * n))?;
    }
    Ok("Pf = 1 for sizes 0..12".into())
}

fn transfer_random() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for i in 0..50 {
        let rows = rng.random_range(4..=6);
        let cols = rng.random_range(0..=8);
        let fam = random_family(&mut rng, rows, cols, 9);
        let mut idx: Vec<usize> = (0..rows).collect();
        idx.shuffle(&mut rng);
        idx.truncate(4);
        let check = pfaffian_principle_check(&fam, &idx).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("instance {i} ({rows}x{cols}): {check:?}"))?;
    }
    Ok("50 families, R_4 = Pf(R_2)".into())
}

fn minor_summation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for i in 0..20 {
        let k = if i % 2 == 0 { 2 } else { 4 };
        let m = rng.random_range(k..=8);
        let d = random_integer_matrix(&mut rng, k, m, 9);
        let skew = random_skew(&mut rng, m, 9);
        let check = minor_summation_check(&d, &skew).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("instance {i} (k {k}, m {m}): {check:?}"))?;
    }
    Ok("20 pairs (D, M), k in {2, 4}, m <= 8".into())
}

/// Seeded corpus shared by criteria 7 and 8.
fn grove_corpus() -> Vec<GraphWithBoundary> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    (0..20)
        .map(|_| {
            let boundary = rng.random_range(6..=7);
            let interior = rng.random_range(2..=4);
            random_boundary_graph(&mut rng, boundary, interior, 16)
        })
        .collect()
}

fn grove_matrix_tree(corpus: &[GraphWithBoundary]) -> Outcome {
    for (i, g) in corpus.iter().enumerate() {
        let table = GroveTable::build(g).map_err(|e| e.to_string())?;
        let z = RationalFunction::from(table.singleton());
        let det = z_singleton_det(g).map_err(|e| e.to_string())?;
        ensure(z.ratfun_eq(&det), || format!("graph {i}: Z = {z}, det = {det}"))?;
        let glued = glued_spanning_tree_sum(g).map_err(|e| e.to_string())?;
        ensure(glued == table.singleton(), || format!("graph {i}: glued trees {glued}"))?;
    }
    Ok(format!("{} graphs, Z = det(K_int) = glued spanning trees", corpus.len()))
}

fn grove_determinant(corpus: &[GraphWithBoundary]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut checks = 0;
    for (i, g) in corpus.iter().enumerate() {
        for k in 1..=3 {
            let mut bd = g.boundary().to_vec();
            bd.shuffle(&mut rng);
            let check = grove_determinant_check(g, &bd[..k], &bd[k..2 * k]).map_err(|e| e.to_string())?;
            ensure(check.passed(), || format!("graph {i}, k {k}: {check:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} checks with the response-matrix sign, k <= 3"))
}

fn grove_pfaffian() -> Outcome {
    for (name, b) in [("grove-a4b4.json", vec!["b3", "b2", "b1", "b0"]), ("grove-a4b5.json", vec!["b4", "b3", "b2", "b1", "b0"])] {
        let g = boundary_graph(name);
        let big_a = g.resolve_boundary(&["t0", "t1", "t2", "t3"]).unwrap();
        let big_b = g.resolve_boundary(&b).unwrap();
        let check = grove_pfaffian_check(&g, &big_a, &big_b, &big_a).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("{name}: {check:?}"))?;
        ensure(!check.main.lhs.is_zero(), || format!("{name}: H~_4 vanishes"))?;
    }
    Ok("k = 4 on |B| = 4 and |B| = 5".into())
}

fn fig9_collision() -> Outcome {
    let n = network("fig9-network.json");
    let flow = n.edge_set(&FIG9_FLOW).map_err(|e| e.to_string())?;
    let theta = collision_index(&n, &flow);
    ensure(theta == 4, || format!("theta = {theta}"))?;
    ensure(is_alternating(&n, &flow), || "flow is not alternating".into())?;
    Ok("theta = 4, alternating".into())
}

fn flow_determinant() -> Outcome {
    let mut checks = 0;
    for name in ["flow-crossing.json", "flow-collision.json", "flow-seeded.json"] {
        let n = network(name);
        ensure(n.graph().edge_count() <= 14, || format!("{name} has {} edges", n.graph().edge_count()))?;
        let kmax = n.sources().len().min(n.sinks().len()).min(3);
        for k in 1..=kmax {
            for a in n.sources().iter().copied().permutations(k) {
                for b in n.sinks().iter().copied().combinations(k) {
                    let check = flow_determinant_check(&n, &a, &b, FlowWeighting::Collision).map_err(|e| e.to_string())?;
                    ensure(check.passed(), || format!("{name}, k {k}: {check:?}"))?;
                    checks += 1;
                }
            }
        }
    }
    let n = network("flow-collision.json");
    let control = flow_determinant_check(&n, &n.resolve(&["s1", "s2"]).unwrap(), &n.resolve(&["t1", "t2"]).unwrap(), FlowWeighting::Plain)
        .map_err(|e| e.to_string())?;
    ensure(!control.main.holds(), || "control without 2^theta unexpectedly holds".into())?;
    Ok(format!("{checks} checks pass; control without 2^theta fails"))
}

fn pfaffian_k4() -> Outcome {
    let n = network("flow-fan.json");
    let a = n.resolve(&["s1", "s2", "s3", "s4"]).unwrap();
    let check = flow_pfaffian_check(&n, &a).map_err(|e| e.to_string())?;
    ensure(check.passed() && !check.main.lhs.is_zero(), || format!("flow: {check:?}"))?;
    let g = digraph("cyclic-hub.json");
    ensure(!g.is_acyclic(), || "cyclic-hub.json is acyclic".into())?;
    let a = g.resolve(&["1", "2", "3", "4"]).unwrap();
    let big_b = g.resolve(&["8", "9", "10", "11", "12"]).unwrap();
    let check = stembridge_check(&g, &a, &big_b, FamilyMode::Walks(10)).map_err(|e| e.to_string())?;
    ensure(check.passed() && !check.main.lhs.is_zero(), || format!("walks: {check:?}"))?;
    Ok("flow E~_4 = Pf(E~_2); walk Q_4 = Pf(Q_2) through degree 10".into())
}

fn main() -> ExitCode {
    let corpus = grove_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 two-path determinant on fig1", 1, Box::new(fig1_lindstrom)),
        ("2 4x4 Pfaffian", 1, Box::new(fig3_pfaffian)),
        ("3 walk determinant on fig4", 10, Box::new(fig4_fomin)),
        ("4 all-ones Pfaffians", 1, Box::new(all_ones)),
        ("5 determinant-to-Pfaffian transfer", 30, Box::new(transfer_random)),
        ("6 minor summation", 30, Box::new(minor_summation)),
        ("7 grove matrix-tree", 60, Box::new(|| grove_matrix_tree(&corpus))),
        ("8 grove determinant", 120, Box::new(|| grove_determinant(&corpus))),
        ("9 grove Pfaffian", 60, Box::new(grove_pfaffian)),
        ("10 collision index on fig9", 1, Box::new(fig9_collision)),
        ("11 flow determinant", 60, Box::new(flow_determinant)),
        ("12 flow and walk Pfaffians", 120, Box::new(pfaffian_k4)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => Err(format!("{msg}, but over the time limit")),
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        failed += usize::from(outcome.is_err());
        println!("[{tag}] criterion {name}: {msg} ({:.3} s, limit {limit} s)", elapsed.as_secs_f64());
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
