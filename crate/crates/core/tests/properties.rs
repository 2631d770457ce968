//! Property tests: ring laws, Pfaffian facts, and theorem checks driven by
//! proptest-chosen seeds.

use combpfaff::digraph::{fomin_check, lindstrom_check, loop_erase, Walk};
use combpfaff::flows::{collision_index, enumerate_all_flows, FlowTable, FlowWeighting};
use combpfaff::random::{random_acyclic_digraph, random_digraph, random_network};
use combpfaff::ring::{pfaffian_matchings, pfaffian_recursive, Coeff, Monomial, Polynomial, RationalFunction, RingMatrix, SkewMatrix, Variable};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (-4i64..=4, 0u32..=2, 0u32..=2, 0u32..=1);
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(c, i, j, k)| {
            let m = Monomial::from_powers([(Variable::new("x"), i), (Variable::new("y"), j), (Variable::new("z"), k)]);
            (m, Coeff::from(c))
        }))
    })
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly().prop_filter("nonzero denominator", |q| !q.is_zero()))
        .prop_map(|(p, q)| RationalFunction::new(p, q).unwrap())
}

fn skew(size: usize) -> impl Strategy<Value = SkewMatrix> {
    prop::collection::vec(-5i64..=5, size * size).prop_map(move |v| SkewMatrix::from_upper(size, |i, j| v[i * size + j].into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RationalFunction::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn rendering_parses_back(a in ratfun()) {
        let back = RationalFunction::parse(&a.to_string()).unwrap();
        prop_assert!(back.ratfun_eq(&a));
        prop_assert_eq!(back.to_string(), a.to_string());
    }

    #[test]
    fn series_inverts_unit_polynomials(p in poly(), d in 0u32..6) {
        // 1 + p with the constant term of p removed
        let unit = &(&Polynomial::one() + &p) - &p.truncate(0);
        let rf = RationalFunction::from(Polynomial::one()).checked_div(&RationalFunction::from(unit.clone())).unwrap();
        let s = rf.series(d).unwrap();
        prop_assert_eq!(s.mul_truncated(&unit, d), Polynomial::one());
    }

    #[test]
    fn pfaffian_squares_to_determinant(m in (0usize..=3).prop_flat_map(|h| skew(2 * h))) {
        let pf = pfaffian_recursive(&m);
        prop_assert_eq!(pfaffian_matchings(&m), pf.clone());
        prop_assert_eq!(&pf * &pf, m.determinant().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(v in prop::collection::vec(-4i64..=4, 18)) {
        let a = RingMatrix::from_fn(3, 3, |i, j| v[3 * i + j].into());
        let b = RingMatrix::from_fn(3, 3, |i, j| v[9 + 3 * i + j].into());
        let ab = a.mul(&b).unwrap().determinant().unwrap();
        prop_assert_eq!(ab, &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn lindstrom_holds(seed in any::<u64>(), n in 3usize..=8) {
        let g = random_acyclic_digraph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.5, 14);
        let k = (n / 2).min(3);
        let a: Vec<usize> = (0..k).collect();
        let b: Vec<usize> = (n - k..n).collect();
        prop_assert!(lindstrom_check(&g, &a, &b).unwrap().passed());
    }

    #[test]
    fn fomin_holds(seed in any::<u64>(), d in 0u32..=8) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 5, 8);
        prop_assert!(fomin_check(&g, &[0, 1], &[2, 3], Some(d)).unwrap().passed());
    }

    #[test]
    fn loop_erasure_is_a_path(seed in any::<u64>(), steps in 0usize..12) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_digraph(&mut rng, 5, 12);
        let mut v = 0;
        let mut edges = Vec::new();
        for _ in 0..steps {
            let out = g.out_edges(v);
            if out.is_empty() {
                break;
            }
            let e = out[rng.random_range(0..out.len())];
            edges.push(e);
            v = g.edge(e).head;
        }
        let w = Walk::from_edges(&g, 0, edges).unwrap();
        let le = loop_erase(&g, &w);
        prop_assert!(le.is_path(&g));
        prop_assert_eq!(le.end(&g), w.end(&g));
        prop_assert_eq!(loop_erase(&g, &le), le);
    }

    #[test]
    fn flow_invariants(seed in any::<u64>()) {
        let n = random_network(&mut ChaCha8Rng::seed_from_u64(seed), 2, 4, 12);
        let flows = enumerate_all_flows(&n).unwrap();
        for f in &flows {
            prop_assert_eq!(f.sources.len(), f.sinks.len());
            let degree_two = (0..n.graph().vertex_count()).all(|v| {
                n.is_boundary(v) || n.rotation(v).iter().filter(|e| f.edges.contains(e)).count() <= 2
            });
            prop_assert_eq!(collision_index(&n, &f.edges) == 0, degree_two);
        }
        let table = FlowTable::build(&n, FlowWeighting::Collision).unwrap();
        prop_assert_eq!(table.conservative().constant_term(), Coeff::from(1));
    }
}
