//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one `PASS`/`FAIL` line; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use cprel::census::{count_states, enumerate_positive_relations};
use cprel::cli::run;
use cprel::functors::roundtrip_check;
use cprel::graphcat::{graph_compose, graph_tensor, is_pure, Graph};
use cprel::lawcheck::{
    check_purity_equivalence, demo_mixing, enriched_compact_reports, mixing_example, mixing_pairs, pure_state_census,
    CheckConfig,
};
use cprel::relcore::{bar, is_cp, is_positive, positive_witness, product_set, Element, FiniteSet, Relation};

/// Whether the criterion holds, and what was observed.
type Outcome = (bool, String);

type Criterion = (&'static str, fn() -> Outcome);

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed < Duration::from_secs(limit_secs)
}

fn criterion_1_census_reproduction() -> Outcome {
    let start = Instant::now();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["cprel", "census", "5"], &mut &b""[..], &mut out, &mut err);
    let elapsed = start.elapsed();
    let counts: Vec<BigUint> = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| l.split_whitespace().nth(2).unwrap().parse().unwrap())
        .collect();
    let table: Vec<BigUint> = [1u32, 2, 5, 18, 113, 1450].map(BigUint::from).to_vec();
    let ok = code == 0 && counts == table && within(elapsed, 1);
    (ok, format!("counts {counts:?} in {elapsed:?}"))
}

fn criterion_2_brute_force_agreement() -> Outcome {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 0..=4 {
        let x = FiniteSet::letters("X", n);
        let brute = enumerate_positive_relations(&x, 4).unwrap().count();
        ok &= BigUint::from(brute) == count_states(n as u64);
        rows.push(brute);
    }
    let elapsed = start.elapsed();
    ok &= within(elapsed, 5);
    (ok, format!("positive relations {rows:?} in {elapsed:?}"))
}

fn criterion_3_isomorphism_at_desk_scale() -> Outcome {
    let start = Instant::now();
    let report = roundtrip_check(2);
    let elapsed = start.elapsed();
    let ok = report.passed && report.seed.is_none() && within(elapsed, 60);
    (ok, format!("{report} in {elapsed:?}"))
}

fn criterion_4_cp_characterization() -> Outcome {
    let start = Instant::now();
    let a = FiniteSet::letters("A", 2);
    let aa = product_set(&a, &a);
    let mut agree = true;
    let mut cp_count = 0u32;
    for mask in 0..1u64 << 16 {
        let m = Relation::from_mask(&aa, &aa, mask);
        let cp = is_cp(&m).unwrap();
        agree &= cp == is_positive(&bar(&m).unwrap()).unwrap();
        cp_count += cp as u32;
    }
    let elapsed = start.elapsed();
    let ok = agree && BigUint::from(cp_count) == count_states(4) && within(elapsed, 10);
    (ok, format!("65536 relations, {cp_count} completely positive, agreement {agree}, in {elapsed:?}"))
}

fn criterion_5_positivity_witness() -> Outcome {
    let mut checked = 0u64;
    let mut ok = true;
    for n in 0..=4 {
        let x = FiniteSet::letters("X", n);
        for mask in 0..1u64 << (n * n) {
            let r = Relation::from_mask(&x, &x, mask);
            match (is_positive(&r).unwrap(), positive_witness(&r)) {
                (true, Ok(w)) => {
                    ok &= w.recompose() == r;
                    checked += 1;
                }
                (false, Err(_)) => {}
                _ => ok = false,
            }
        }
    }
    (ok, format!("{checked} positive relations recomposed exactly"))
}

fn criterion_6_enriched_dagger_compact_laws() -> Outcome {
    let start = Instant::now();
    let reports = enriched_compact_reports(&CheckConfig::with_size_bound(2));
    let ok = reports.iter().all(|r| r.passed);
    let names: Vec<String> = reports.iter().map(ToString::to_string).collect();
    (ok, format!("{} in {:?}", names.join("; "), start.elapsed()))
}

fn criterion_7_purity() -> Outcome {
    let (pure2, total2) = pure_state_census(2);
    let report = check_purity_equivalence(&CheckConfig::with_size_bound(3));
    let ok = (pure2, total2) == (4, 5) && report.passed;
    (ok, format!("{pure2} of {total2} states pure at n = 2; {report}"))
}

fn criterion_8_mixing_anomaly() -> Outcome {
    let (first, second, union) = mixing_example();
    let report = demo_mixing();
    let triples = mixing_pairs(3).len();
    let ok = !is_pure(&first) && !is_pure(&second) && is_pure(&union) && report.passed && triples > 0;
    (ok, format!("{report}; {triples} mixed pairs with a pure union at n = 3"))
}

fn v(a: &str, b: &str) -> (Element, Element) {
    (Element::atom(a), Element::atom(b))
}

fn quad(a: &str, b: &str, c: &str, d: &str) -> (Element, Element) {
    (Element::pair(Element::atom(a), Element::atom(b)), Element::pair(Element::atom(c), Element::atom(d)))
}

type Vertex = (Element, Element);
type Vertices = BTreeSet<Vertex>;
type Edges = BTreeSet<BTreeSet<Vertex>>;

fn shape(g: &Graph) -> (Vertices, Edges) {
    let vertices = g.vertices().map(|(a, b)| (a.clone(), b.clone())).collect();
    let edges = g
        .edges()
        .map(|((a, b), (c, d))| [(a.clone(), b.clone()), (c.clone(), d.clone())].into_iter().collect())
        .collect();
    (vertices, edges)
}

fn edge_set(pairs: &[(Vertex, Vertex)]) -> Edges {
    pairs.iter().map(|(x, y)| [x.clone(), y.clone()].into_iter().collect()).collect()
}

fn criterion_9_worked_examples() -> Outcome {
    let a = FiniteSet::new("A", ["a", "a'"]).unwrap();
    let b = FiniteSet::new("B", ["b", "b'", "b''"]).unwrap();
    let c = FiniteSet::new("C", ["c", "c'", "c''"]).unwrap();
    let g1 = Graph::new(&a, &b, [v("a", "b"), v("a'", "b'")], [(v("a", "b"), v("a'", "b'"))]).unwrap();
    let g2 = Graph::new(
        &b,
        &c,
        [v("b", "c"), v("b''", "c"), v("b", "c'"), v("b'", "c''")],
        [(v("b", "c"), v("b", "c'")), (v("b", "c"), v("b'", "c''"))],
    )
    .unwrap();
    let composite = shape(&graph_compose(&g2, &g1).unwrap());
    let drawn_composite = (
        [v("a", "c"), v("a", "c'"), v("a'", "c''")].into_iter().collect(),
        edge_set(&[(v("a", "c"), v("a", "c'")), (v("a", "c"), v("a'", "c''"))]),
    );
    let composition_ok = composite == drawn_composite;

    let c2 = FiniteSet::new("C", ["c", "c'"]).unwrap();
    let d = FiniteSet::new("D", ["d", "d'", "d''"]).unwrap();
    let left = Graph::new(&a, &c2, [v("a", "c"), v("a'", "c'")], [(v("a", "c"), v("a'", "c'"))]).unwrap();
    let right = Graph::new(
        &b,
        &d,
        [v("b", "d"), v("b'", "d'"), v("b''", "d''")],
        [(v("b", "d"), v("b'", "d'")), (v("b", "d"), v("b''", "d''"))],
    )
    .unwrap();
    let tensor = shape(&graph_tensor(&left, &right));
    let tl = quad("a", "b''", "c", "d''");
    let ml = quad("a", "b", "c", "d");
    let bl = quad("a", "b'", "c", "d'");
    let tr = quad("a'", "b''", "c'", "d''");
    let mr = quad("a'", "b", "c'", "d");
    let br = quad("a'", "b'", "c'", "d'");
    let drawn_tensor = (
        [&tl, &ml, &bl, &tr, &mr, &br].into_iter().cloned().collect(),
        edge_set(&[
            (tl.clone(), tr.clone()),
            (ml.clone(), mr.clone()),
            (bl.clone(), br.clone()),
            (tl.clone(), mr.clone()),
            (ml.clone(), tr.clone()),
            (ml.clone(), br.clone()),
            (bl.clone(), mr.clone()),
            (tl.clone(), ml.clone()),
            (ml.clone(), bl.clone()),
            (tr.clone(), mr.clone()),
            (mr.clone(), br.clone()),
        ]),
    );
    let tensor_ok = tensor == drawn_tensor;
    (
        composition_ok && tensor_ok,
        format!(
            "composite {} vertices / {} edges, tensor {} vertices / {} edges",
            composite.0.len(),
            composite.1.len(),
            tensor.0.len(),
            tensor.1.len()
        ),
    )
}

fn main() -> std::process::ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 census reproduction", criterion_1_census_reproduction),
        ("2 brute-force agreement", criterion_2_brute_force_agreement),
        ("3 functor isomorphism", criterion_3_isomorphism_at_desk_scale),
        ("4 CP characterization", criterion_4_cp_characterization),
        ("5 positivity witness", criterion_5_positivity_witness),
        ("6 enriched dagger-compact laws", criterion_6_enriched_dagger_compact_laws),
        ("7 purity", criterion_7_purity),
        ("8 mixing anomaly", criterion_8_mixing_anomaly),
        ("9 worked examples", criterion_9_worked_examples),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let (ok, detail) = std::panic::catch_unwind(check).unwrap_or_else(|_| (false, "panicked".to_string()));
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        failures += usize::from(!ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
