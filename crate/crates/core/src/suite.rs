//! Dispatch for `verify` and the built-in demo examples.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::det2pf::{allones_pfaffian, pfaffian_principle_check, random_family, MinorFamily};
use crate::digraph::{
    fomin_check, lindstrom_check, path_matrix, path_sum, stembridge_check, walk_matrix, Digraph, FamilyMode, VertexId,
};
use crate::error::Error;
use crate::flows::{collision_index, flow_determinant_check, flow_pfaffian_check, is_alternating, FlowWeighting, PlanarCircularNetwork};
use crate::graphfile::{parse_graph_file, GraphKind, LoadedGraph};
use crate::groves::{grove_determinant_check, grove_pfaffian_check, GraphWithBoundary};
use crate::random::{random_acyclic_digraph, random_boundary_graph, random_digraph, random_network};
use crate::report::{CheckResult, Identity, VerificationReport};
use crate::ring::{pfaffian_matchings, pfaffian_recursive, RationalFunction, SkewMatrix};

pub const FIG1: &str = include_str!("../../../fixtures/fig1.json");
pub const FIG4: &str = include_str!("../../../fixtures/fig4.json");
pub const FIG9: &str = include_str!("../../../fixtures/fig9-network.json");

/// Edge ids of the highlighted alternating flow in `fig9-network.json`.
pub const FIG9_FLOW: [&str; 13] = [
    "e12_1", "e2_12", "e3_13", "e13_4", "e16_5", "e6_16", "e15_7", "e8_15", "e15_9", "e10_15", "e15_12", "e12_16", "e16_15",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    Lindstrom,
    Fomin,
    Stembridge,
    StembridgeWalks,
    Det2pf,
    GroveDet,
    GrovePf,
    FlowDet,
    FlowPf,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Lindstrom,
        Theorem::Fomin,
        Theorem::Stembridge,
        Theorem::StembridgeWalks,
        Theorem::Det2pf,
        Theorem::GroveDet,
        Theorem::GrovePf,
        Theorem::FlowDet,
        Theorem::FlowPf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Lindstrom => "lindstrom",
            Theorem::Fomin => "fomin",
            Theorem::Stembridge => "stembridge",
            Theorem::StembridgeWalks => "stembridge-walks",
            Theorem::Det2pf => "det2pf",
            Theorem::GroveDet => "grove-det",
            Theorem::GrovePf => "grove-pf",
            Theorem::FlowDet => "flow-det",
            Theorem::FlowPf => "flow-pf",
        }
    }

    fn graph_kind(self) -> Option<GraphKind> {
        match self {
            Theorem::Lindstrom | Theorem::Fomin | Theorem::Stembridge | Theorem::StembridgeWalks => Some(GraphKind::Digraph),
            Theorem::GroveDet | Theorem::GrovePf => Some(GraphKind::UndirectedBoundary),
            Theorem::FlowDet | Theorem::FlowPf => Some(GraphKind::PlanarCircular),
            Theorem::Det2pf => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem, Error> {
        Theorem::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
            Error::Usage(format!("unknown theorem {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// Parameters shared by all suites. Unset tuples fall back to defaults
/// derived from `k` when the graph is randomly generated.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub a: Option<Vec<String>>,
    pub b: Option<Vec<String>>,
    pub k: Option<usize>,
    pub degree: Option<u32>,
    pub seed: Option<u64>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    /// flow-det only: drop the `2^theta` factor (a negative control).
    pub plain: bool,
}

impl SuiteParams {
    fn tuple<'p>(&'p self, which: &str) -> Result<&'p [String], Error> {
        let v = if which == "a" { &self.a } else { &self.b };
        v.as_deref().ok_or_else(|| Error::Usage(format!("this check needs --{which}")))
    }
}

/// Where the graph for a suite comes from.
#[derive(Clone, Debug)]
pub enum GraphSource<'g> {
    Loaded { graph: &'g LoadedGraph, label: String },
    Random,
}

fn names(vs: &[VertexId], name: impl Fn(VertexId) -> String) -> Vec<String> {
    vs.iter().map(|&v| name(v)).collect()
}

fn digraph_tuple(g: &Digraph, vs: &[String]) -> Result<Vec<VertexId>, Error> {
    g.resolve(vs)
}

fn default_k(params: &SuiteParams, fallback: usize) -> usize {
    params.k.unwrap_or(fallback)
}

/// Runs one theorem check and wraps it in a report.
pub fn run_suite(theorem: Theorem, source: GraphSource<'_>, params: &SuiteParams) -> Result<VerificationReport, Error> {
    let mut inputs = BTreeMap::new();
    let seed = params.seed.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let (GraphSource::Loaded { graph, label }, Some(kind)) = (&source, theorem.graph_kind()) {
        if graph.kind() != kind {
            return Err(Error::WrongGraphKind { theorem: theorem.name().to_string(), kind: graph.kind().name().to_string() });
        }
        inputs.insert("graph".to_string(), label.clone());
    }
    if matches!(source, GraphSource::Random) && theorem != Theorem::Det2pf {
        inputs.insert("graph".to_string(), format!("random, seed {seed}"));
    }
    if params.plain && theorem != Theorem::FlowDet {
        return Err(Error::Usage("--no-collision-factor only applies to flow-det".into()));
    }
    let start = Instant::now();
    let check = match theorem {
        Theorem::Lindstrom | Theorem::Fomin | Theorem::Stembridge | Theorem::StembridgeWalks => {
            let owned;
            let g = match &source {
                GraphSource::Loaded { graph: LoadedGraph::Digraph(g), .. } => g,
                _ => {
                    owned = match theorem {
                        Theorem::Lindstrom | Theorem::Stembridge => random_acyclic_digraph(&mut rng, 8, 0.45, 16),
                        Theorem::Fomin => random_digraph(&mut rng, 6, 10),
                        _ => random_digraph(&mut rng, 7, 9),
                    };
                    &owned
                }
            };
            digraph_suite(theorem, g, matches!(source, GraphSource::Random), params, &mut inputs)?
        }
        Theorem::Det2pf => det2pf_suite(&source, params, &mut rng, &mut inputs)?,
        Theorem::GroveDet | Theorem::GrovePf => {
            let owned;
            let g = match &source {
                GraphSource::Loaded { graph: LoadedGraph::Boundary(g), .. } => g,
                _ => {
                    owned = random_boundary_graph(&mut rng, 6, 3, 14);
                    &owned
                }
            };
            grove_suite(theorem, g, matches!(source, GraphSource::Random), params, &mut inputs)?
        }
        Theorem::FlowDet | Theorem::FlowPf => {
            let owned;
            let n = match &source {
                GraphSource::Loaded { graph: LoadedGraph::Network(n), .. } => n,
                _ => {
                    owned = random_network(&mut rng, 3, 5, 14);
                    &owned
                }
            };
            flow_suite(theorem, n, matches!(source, GraphSource::Random), params, &mut inputs)?
        }
    };
    Ok(VerificationReport::from_check(&check, inputs, start.elapsed()))
}

fn digraph_suite(
    theorem: Theorem,
    g: &Digraph,
    random: bool,
    params: &SuiteParams,
    inputs: &mut BTreeMap<String, String>,
) -> Result<CheckResult, Error> {
    let n = g.vertex_count();
    let name = |v: VertexId| g.vertex_name(v).to_string();
    let (a, b) = if random {
        let k = default_k(params, 2);
        let a: Vec<VertexId> = (0..k.min(n)).collect();
        let b: Vec<VertexId> = match theorem {
            Theorem::Lindstrom => (n.saturating_sub(k)..n).collect(),
            Theorem::Fomin => (k..(2 * k).min(n)).collect(),
            _ => (n.saturating_sub(3)..n).collect(),
        };
        (a, b)
    } else {
        (digraph_tuple(g, params.tuple("a")?)?, digraph_tuple(g, params.tuple("b")?)?)
    };
    inputs.insert("a".into(), names(&a, name).join(","));
    inputs.insert("b".into(), names(&b, name).join(","));
    let degree = match theorem {
        Theorem::Fomin | Theorem::StembridgeWalks if random => Some(params.degree.unwrap_or(8)),
        _ => params.degree,
    };
    if let Some(d) = degree {
        inputs.insert("degree".into(), d.to_string());
    }
    match theorem {
        Theorem::Lindstrom => lindstrom_check(g, &a, &b),
        Theorem::Fomin => fomin_check(g, &a, &b, degree),
        Theorem::Stembridge => stembridge_check(g, &a, &b, FamilyMode::Paths),
        _ => {
            let d = crate::digraph::effective_degree(g, degree)?;
            inputs.insert("degree".into(), d.to_string());
            stembridge_check(g, &a, &b, FamilyMode::Walks(d))
        }
    }
}

fn det2pf_suite(
    source: &GraphSource<'_>,
    params: &SuiteParams,
    rng: &mut ChaCha8Rng,
    inputs: &mut BTreeMap<String, String>,
) -> Result<CheckResult, Error> {
    let fam = match source {
        GraphSource::Random => {
            let rows = params.rows.unwrap_or(4);
            let cols = params.cols.unwrap_or(6);
            inputs.insert("seed".into(), params.seed.unwrap_or(0).to_string());
            inputs.insert("rows".into(), rows.to_string());
            inputs.insert("cols".into(), cols.to_string());
            random_family(rng, rows, cols, 9)
        }
        GraphSource::Loaded { graph: LoadedGraph::Digraph(g), label } => {
            inputs.insert("graph".into(), label.clone());
            let a = g.resolve(params.tuple("a")?)?;
            let b = g.resolve(params.tuple("b")?)?;
            inputs.insert("a".into(), params.tuple("a")?.join(","));
            inputs.insert("b".into(), params.tuple("b")?.join(","));
            let table = if g.is_acyclic() { path_matrix(g, &a, &b) } else { walk_matrix(g, &a, &b)? };
            MinorFamily::new(params.tuple("a")?.to_vec(), params.tuple("b")?.to_vec(), table)?
        }
        GraphSource::Loaded { graph, .. } => {
            return Err(Error::WrongGraphKind { theorem: "det2pf".into(), kind: graph.kind().name().into() })
        }
    };
    let k = params.k.unwrap_or(fam.table().rows());
    inputs.insert("k".into(), k.to_string());
    if k > fam.table().rows() {
        return Err(Error::Usage(format!("k = {k} exceeds the {} table rows", fam.table().rows())));
    }
    let rows: Vec<usize> = (0..k).collect();
    pfaffian_principle_check(&fam, &rows)
}

fn grove_suite(
    theorem: Theorem,
    g: &GraphWithBoundary,
    random: bool,
    params: &SuiteParams,
    inputs: &mut BTreeMap<String, String>,
) -> Result<CheckResult, Error> {
    let name = |v: VertexId| g.vertex_name(v).to_string();
    let bd = g.boundary().to_vec();
    let (a, b) = if random {
        let k = default_k(params, 2);
        match theorem {
            Theorem::GroveDet => (bd[..k.min(bd.len())].to_vec(), bd[k.min(bd.len())..(2 * k).min(bd.len())].to_vec()),
            _ => (bd[..k.min(4)].to_vec(), bd[4..].to_vec()),
        }
    } else {
        (g.resolve_boundary(params.tuple("a")?)?, g.resolve_boundary(params.tuple("b")?)?)
    };
    inputs.insert("a".into(), names(&a, name).join(","));
    inputs.insert("b".into(), names(&b, name).join(","));
    match theorem {
        Theorem::GroveDet => grove_determinant_check(g, &a, &b),
        _ => {
            let big_a: Vec<VertexId> = bd.iter().copied().filter(|v| !b.contains(v)).collect();
            inputs.insert("A".into(), names(&big_a, name).join(","));
            grove_pfaffian_check(g, &big_a, &b, &a)
        }
    }
}

fn flow_suite(
    theorem: Theorem,
    n: &PlanarCircularNetwork,
    random: bool,
    params: &SuiteParams,
    inputs: &mut BTreeMap<String, String>,
) -> Result<CheckResult, Error> {
    let name = |v: VertexId| n.graph().vertex_name(v).to_string();
    let a = if random {
        let k = default_k(params, 2).min(n.sources().len());
        n.sources()[..k].to_vec()
    } else {
        n.resolve(params.tuple("a")?)?
    };
    inputs.insert("a".into(), names(&a, name).join(","));
    match theorem {
        Theorem::FlowDet => {
            let b = if random { n.sinks()[..a.len().min(n.sinks().len())].to_vec() } else { n.resolve(params.tuple("b")?)? };
            inputs.insert("b".into(), names(&b, name).join(","));
            if params.plain {
                inputs.insert("weighting".into(), "plain".into());
                flow_determinant_check(n, &a, &b, FlowWeighting::Plain)
            } else {
                flow_determinant_check(n, &a, &b, FlowWeighting::Collision)
            }
        }
        _ => flow_pfaffian_check(n, &a),
    }
}

fn load_embedded(text: &str) -> LoadedGraph {
    parse_graph_file(text).and_then(|f| f.build()).expect("bundled fixture is valid")
}

fn rf(s: &str) -> RationalFunction {
    RationalFunction::parse(s).expect("literal parses")
}

fn timed(label: &str, f: impl FnOnce() -> Result<CheckResult, Error>) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let check = f()?;
    let mut inputs = BTreeMap::new();
    inputs.insert("example".to_string(), label.to_string());
    Ok(VerificationReport::from_check(&check, inputs, start.elapsed()))
}

type Example = (&'static str, fn() -> Result<CheckResult, Error>);

fn example_path_sum() -> Result<CheckResult, Error> {
    let LoadedGraph::Digraph(g) = load_embedded(FIG1) else { unreachable!() };
    let (two, four) = (g.vertex("2")?, g.vertex("4")?);
    Ok(CheckResult::new("path-sum", Identity::new("P(2, 4) = c*e + f", path_sum(&g, two, four).into(), rf("c*e + f"))))
}

fn example_lindstrom() -> Result<CheckResult, Error> {
    let LoadedGraph::Digraph(g) = load_embedded(FIG1) else { unreachable!() };
    let check = lindstrom_check(&g, &g.resolve(&["1", "2"])?, &g.resolve(&["3", "4"])?)?;
    let lhs = check.main.lhs.clone();
    Ok(check.with(Identity::new("signed families = a*b*f - a*d*e", lhs, rf("a*b*f - a*d*e"))))
}

fn example_pfaffian() -> Result<CheckResult, Error> {
    let vars = ["a", "b", "c", "d", "e", "f"];
    let mut next = vars.iter();
    let m = SkewMatrix::from_upper(4, |_, _| RationalFunction::var(next.next().expect("six entries")));
    let pf = pfaffian_recursive(&m);
    let want = rf("a*f - b*e + c*d");
    Ok(CheckResult::new("pfaffian", Identity::new("Pf = a*f - b*e + c*d", pf.clone(), want.clone()))
        .with(Identity::new("Pf by matchings", pfaffian_matchings(&m), want))
        .with(Identity::new("Pf^2 = det", &pf * &pf, m.determinant()?)))
}

fn example_fomin() -> Result<CheckResult, Error> {
    let LoadedGraph::Digraph(g) = load_embedded(FIG4) else { unreachable!() };
    let (a, b) = (g.resolve(&["1", "2"])?, g.resolve(&["3", "4"])?);
    let det = walk_matrix(&g, &a, &b)?.determinant()?;
    Ok(fomin_check(&g, &a, &b, Some(12))?.with(Identity::new("det W = a*b*c*e*g / (1 - d*e*f)", det, rf("(a*b*c*e*g)/(1 - d*e*f)"))))
}

fn example_all_ones() -> Result<CheckResult, Error> {
    let mut check = CheckResult::new("all-ones-pfaffian", Identity::new("Pf(M_12) = 1", allones_pfaffian(12), RationalFunction::one()));
    for n in 0..6 {
        check = check.with(Identity::new(format!("Pf(M_{}) = 1", 2 * n), allones_pfaffian(2 * n), RationalFunction::one()));
    }
    Ok(check)
}

fn example_collision_index() -> Result<CheckResult, Error> {
    let LoadedGraph::Network(n) = load_embedded(FIG9) else { unreachable!() };
    let flow = n.edge_set(&FIG9_FLOW)?;
    let theta = collision_index(&n, &flow) as i64;
    let alternating = i64::from(is_alternating(&n, &flow));
    Ok(CheckResult::new("collision-index", Identity::new("theta(f) = 4", theta.into(), 4.into()))
        .with(Identity::new("f is alternating", alternating.into(), 1.into())))
}

const EXAMPLES: [Example; 6] = [
    ("P(2,4) on the five-vertex graph", example_path_sum),
    ("two-path families on the five-vertex graph", example_lindstrom),
    ("4x4 Pfaffian", example_pfaffian),
    ("walks on the seven-vertex cyclic graph", example_fomin),
    ("all-ones skew matrices", example_all_ones),
    ("collision index of the highlighted flow", example_collision_index),
];

/// Reruns the worked examples. Examples run on separate threads; the
/// result order is the declaration order.
pub fn demo_paper_examples() -> Vec<Result<VerificationReport, Error>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = EXAMPLES.iter().map(|&(label, f)| s.spawn(move || timed(label, f))).collect();
        handles.into_iter().map(|h| h.join().expect("example thread panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!("lindstrom-gessel".parse::<Theorem>(), Err(Error::Usage(_))));
    }

    #[test]
    fn demo_passes() {
        let reports = demo_paper_examples();
        assert_eq!(reports.len(), 6);
        for r in reports {
            let r = r.unwrap();
            assert!(r.pass, "{}", r.to_text());
        }
    }

    #[test]
    fn random_suites_pass() {
        let params = SuiteParams { seed: Some(7), ..SuiteParams::default() };
        for t in Theorem::ALL {
            let r = run_suite(t, GraphSource::Random, &params).unwrap();
            assert!(r.pass, "{}", r.to_text());
        }
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let g = load_embedded(FIG1);
        let src = GraphSource::Loaded { graph: &g, label: "fig1".into() };
        let err = run_suite(Theorem::FlowDet, src, &SuiteParams::default()).unwrap_err();
        assert!(matches!(err, Error::WrongGraphKind { .. }));
    }
}
