//! The drawn composition, tensor and mixing examples, vertex for vertex and
//! edge for edge.

use std::collections::BTreeSet;

use cprel::graphcat::is_pure;
use cprel::graphcat::{graph_compose, graph_tensor, Graph};
use cprel::lawcheck::{mixing_example, pure_state_census};
use cprel::relcore::{Element, FiniteSet};

fn v(a: &str, b: &str) -> (Element, Element) {
    (Element::atom(a), Element::atom(b))
}

fn vertex_set(g: &Graph) -> BTreeSet<(Element, Element)> {
    g.vertices().map(|(a, b)| (a.clone(), b.clone())).collect()
}

fn edge_set(g: &Graph) -> BTreeSet<BTreeSet<(Element, Element)>> {
    g.edges().map(|((a, b), (c, d))| [(a.clone(), b.clone()), (c.clone(), d.clone())].into_iter().collect()).collect()
}

#[test]
fn composition_example() {
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
    let composite = graph_compose(&g2, &g1).unwrap();

    let expected_vertices: BTreeSet<_> = [v("a", "c"), v("a", "c'"), v("a'", "c''")].into_iter().collect();
    assert_eq!(vertex_set(&composite), expected_vertices);
    let expected_edges: BTreeSet<BTreeSet<_>> =
        [[v("a", "c"), v("a", "c'")].into_iter().collect(), [v("a", "c"), v("a'", "c''")].into_iter().collect()]
            .into_iter()
            .collect();
    assert_eq!(edge_set(&composite), expected_edges);
}

fn quad(a: &str, b: &str, c: &str, d: &str) -> (Element, Element) {
    (Element::pair(Element::atom(a), Element::atom(b)), Element::pair(Element::atom(c), Element::atom(d)))
}

#[test]
fn tensor_example() {
    let a = FiniteSet::new("A", ["a", "a'"]).unwrap();
    let b = FiniteSet::new("B", ["b", "b'", "b''"]).unwrap();
    let c = FiniteSet::new("C", ["c", "c'"]).unwrap();
    let d = FiniteSet::new("D", ["d", "d'", "d''"]).unwrap();
    let left = Graph::new(&a, &c, [v("a", "c"), v("a'", "c'")], [(v("a", "c"), v("a'", "c'"))]).unwrap();
    let right = Graph::new(
        &b,
        &d,
        [v("b", "d"), v("b'", "d'"), v("b''", "d''")],
        [(v("b", "d"), v("b'", "d'")), (v("b", "d"), v("b''", "d''"))],
    )
    .unwrap();
    let t = graph_tensor(&left, &right);

    let tl = quad("a", "b''", "c", "d''");
    let ml = quad("a", "b", "c", "d");
    let bl = quad("a", "b'", "c", "d'");
    let tr = quad("a'", "b''", "c'", "d''");
    let mr = quad("a'", "b", "c'", "d");
    let br = quad("a'", "b'", "c'", "d'");
    let expected_vertices: BTreeSet<_> = [&tl, &ml, &bl, &tr, &mr, &br].into_iter().cloned().collect();
    assert_eq!(vertex_set(&t), expected_vertices);

    let drawn = [
        (&tl, &tr),
        (&ml, &mr),
        (&bl, &br),
        (&tl, &mr),
        (&ml, &tr),
        (&ml, &br),
        (&bl, &mr),
        (&tl, &ml),
        (&ml, &bl),
        (&tr, &mr),
        (&mr, &br),
    ];
    let expected_edges: BTreeSet<BTreeSet<_>> =
        drawn.iter().map(|(x, y)| [(*x).clone(), (*y).clone()].into_iter().collect()).collect();
    assert_eq!(expected_edges.len(), 11);
    assert_eq!(edge_set(&t), expected_edges);
}

#[test]
fn mixing_example_paths_and_triangle() {
    let (first, second, union) = mixing_example();
    assert!(!is_pure(&first));
    assert!(!is_pure(&second));
    assert!(is_pure(&union));
    assert_eq!(first.graph().edge_count(), 2);
    assert_eq!(second.graph().edge_count(), 2);
    assert_eq!(union.graph().edge_count(), 3);
    assert_eq!(union.graph().vertex_count(), 3);
}

#[test]
fn pure_state_counts() {
    assert_eq!(pure_state_census(1), (2, 2));
    assert_eq!(pure_state_census(2), (4, 5));
    assert_eq!(pure_state_census(3), (8, 18));
    assert_eq!(pure_state_census(4), (16, 113));
}
