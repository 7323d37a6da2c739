//! Graph operations against a naive vertex/edge-set model, functor round
//! trips, and counterexample replay.

use std::collections::BTreeSet;

use cprel::census::{
    enumerate_graphs, enumerate_positive_relations, enumerate_state_graphs, positive_from_state_graph,
    state_graph_from_positive,
};
use cprel::functors::{functor_c, functor_g};
use cprel::graphcat::{
    embed_graph, graph_compose, graph_dagger, graph_identity, graph_join, graph_leq, graph_tensor, Graph,
};
use cprel::lawcheck::{check_graph_property, CheckConfig};
use cprel::relcore::{Element, FiniteSet, Relation};

type Vertex = (Element, Element);

/// A graph as explicit sets; edges are ordered both ways and include loops.
#[derive(Debug, PartialEq, Eq)]
struct Naive {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

fn naive(g: &Graph) -> Naive {
    let v = |(a, b): (&Element, &Element)| (a.clone(), b.clone());
    let vertices: BTreeSet<Vertex> = g.vertices().map(v).collect();
    let mut edges: BTreeSet<(Vertex, Vertex)> = vertices.iter().map(|x| (x.clone(), x.clone())).collect();
    for (x, y) in g.edges() {
        edges.insert((v(x), v(y)));
        edges.insert((v(y), v(x)));
    }
    Naive { vertices, edges }
}

fn naive_compose(g2: &Naive, g1: &Naive) -> Naive {
    let mut vertices = BTreeSet::new();
    for (a, b) in &g1.vertices {
        for (b2, c) in &g2.vertices {
            if b == b2 {
                vertices.insert((a.clone(), c.clone()));
            }
        }
    }
    let mut edges = BTreeSet::new();
    for ((a, b), (a2, b2)) in &g1.edges {
        for ((x, c), (x2, c2)) in &g2.edges {
            if b == x && b2 == x2 {
                edges.insert(((a.clone(), c.clone()), (a2.clone(), c2.clone())));
            }
        }
    }
    Naive { vertices, edges }
}

fn pair(x: &Element, y: &Element) -> Element {
    Element::pair(x.clone(), y.clone())
}

fn naive_tensor(g1: &Naive, g2: &Naive) -> Naive {
    let vertices =
        g1.vertices.iter().flat_map(|(a, c)| g2.vertices.iter().map(move |(b, d)| (pair(a, b), pair(c, d)))).collect();
    let mut edges = BTreeSet::new();
    for ((a, c), (a2, c2)) in &g1.edges {
        for ((b, d), (b2, d2)) in &g2.edges {
            edges.insert(((pair(a, b), pair(c, d)), (pair(a2, b2), pair(c2, d2))));
        }
    }
    Naive { vertices, edges }
}

fn all(a: &FiniteSet, b: &FiniteSet) -> Vec<Graph> {
    enumerate_graphs(a, b).unwrap().collect()
}

#[test]
fn composition_matches_vertex_and_edge_gluing() {
    let sizes = [(1, 2, 2), (2, 2, 1), (2, 1, 2), (1, 3, 1), (2, 2, 2)];
    for (na, nb, nc) in sizes {
        let a = FiniteSet::letters("A", na);
        let b = FiniteSet::letters("B", nb);
        let c = FiniteSet::letters("C", nc);
        let firsts = all(&a, &b);
        let seconds = all(&b, &c);
        let step = if na * nb * nc >= 8 { 11 } else { 1 };
        for g1 in firsts.iter().step_by(step) {
            for g2 in &seconds {
                let got = graph_compose(g2, g1).unwrap();
                assert!(got.is_well_formed());
                assert_eq!(naive(&got), naive_compose(&naive(g2), &naive(g1)));
            }
        }
    }
}

#[test]
fn tensor_and_dagger_match_definitions() {
    let one = FiniteSet::letters("A", 1);
    let two = FiniteSet::letters("B", 2);
    for g1 in all(&one, &two) {
        for g2 in all(&two, &one) {
            assert_eq!(naive(&graph_tensor(&g1, &g2)), naive_tensor(&naive(&g1), &naive(&g2)));
        }
    }
    for g in all(&two, &two) {
        let d = naive(&graph_dagger(&g));
        let swapped: BTreeSet<Vertex> = naive(&g).vertices.into_iter().map(|(a, b)| (b, a)).collect();
        assert_eq!(d.vertices, swapped);
    }
}

#[test]
fn order_and_join_match_edge_sets() {
    let two = FiniteSet::letters("B", 2);
    let gs = all(&two, &two);
    for g1 in gs.iter().step_by(3) {
        for g2 in gs.iter().step_by(5) {
            let (n1, n2) = (naive(g1), naive(g2));
            assert_eq!(graph_leq(g1, g2).unwrap(), n1.edges.is_subset(&n2.edges));
            let j = naive(&graph_join(&two, &two, [g1, g2]).unwrap());
            assert_eq!(j.edges, n1.edges.union(&n2.edges).cloned().collect());
        }
    }
    assert_eq!(graph_join(&two, &two, []).unwrap(), Graph::empty(&two, &two));
}

#[test]
fn identity_is_the_complete_diagonal() {
    let x = FiniteSet::new("X", ["p", "q", "r"]).unwrap();
    let id = naive(&graph_identity(&x));
    assert_eq!(id.vertices.len(), 3);
    assert!(id.vertices.iter().all(|(a, b)| a == b));
    assert_eq!(id.edges.len(), 9);
}

#[test]
fn functors_are_mutually_inverse_on_small_homsets() {
    let one = FiniteSet::letters("A", 1);
    let three = FiniteSet::letters("B", 3);
    for g in all(&one, &three) {
        let m = functor_c(&g);
        assert_eq!(functor_g(&m), g);
    }
    for r in [Relation::identity(&three), Relation::empty(&three, &three)] {
        assert_eq!(functor_g(&cprel::relcore::embed_double(&r)), embed_graph(&r));
    }
}

#[test]
fn state_graphs_and_positive_relations_correspond() {
    for n in 0..=3 {
        let x = FiniteSet::letters("X", n);
        let mut from_relations: Vec<Graph> =
            enumerate_positive_relations(&x, 4).unwrap().map(|r| state_graph_from_positive(&r).unwrap()).collect();
        let mut graphs: Vec<Graph> = enumerate_state_graphs(&x).unwrap().collect();
        for g in &graphs {
            let r = positive_from_state_graph(g).unwrap();
            assert_eq!(&state_graph_from_positive(&r).unwrap(), g);
        }
        let key = |g: &Graph| format!("{g:?}");
        from_relations.sort_by_key(key);
        graphs.sort_by_key(key);
        assert_eq!(from_relations, graphs);
    }
}

#[test]
fn failing_property_reports_a_replayable_counterexample() {
    let cfg = CheckConfig::with_size_bound(2);
    let report = check_graph_property("at-most-three-edges", &cfg, |g| g.edge_count() <= 3);
    assert!(!report.passed);
    let counterexample = report.counterexample.expect("a violation exists at size 2");
    let graphs = counterexample.instance.graphs().unwrap();
    assert_eq!(graphs.len(), 1);
    assert!(graphs[0].edge_count() > 3);
    let again = check_graph_property("at-most-three-edges", &cfg, |g| g.edge_count() <= 3);
    assert_eq!(again.counterexample.unwrap(), counterexample);
}

#[test]
fn holding_property_passes_exhaustively() {
    let cfg = CheckConfig::with_size_bound(2);
    let report = check_graph_property("dagger-involution", &cfg, |g| graph_dagger(&graph_dagger(g)) == *g);
    assert!(report.passed, "{report}");
    assert_eq!(report.seed, None);
    // homset sizes for |A|·|B| = 0,0,0,0,1,2,0,2,4
    let expected = 4 + 2 + 5 + 1 + 5 + 113;
    assert_eq!(report.instances_checked, expected);
}
