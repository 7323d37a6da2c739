//! Symmetry, self-dual compact structure and coherence isomorphisms in 𝒢.

use crate::graphcat::graph::Graph;
use crate::graphcat::ops::{embed_graph, graph_dagger};
use crate::relcore::{product_set, Element, FiniteSet, Relabelling, Relation};

/// The image of a bijection under the embedding of Rel: the complete graph on
/// its pairs. Used for associators and unitors.
pub fn coherence_graph(map: &Relabelling) -> Graph {
    embed_graph(&Relation::from_relabelling(map))
}

/// `σ : A×B → B×A`, the complete graph on `{((a,b),(b,a))}`.
pub fn graph_symmetry(a: &FiniteSet, b: &FiniteSet) -> Graph {
    let ab = product_set(a, b);
    let ba = product_set(b, a);
    let (na, nb) = (a.len(), b.len());
    // (a,b) at a*nb + b maps to (b,a) at b*na + a
    let swap = Relation::from_fn(&ab, &ba, |i, j| j == (i % nb) * na + i / nb);
    embed_graph(&swap)
}

/// The cup `I → A×A`, the complete graph on `{(*, (a,a))}`.
pub fn graph_cup(a: &FiniteSet) -> Graph {
    let aa = product_set(a, a);
    Graph::complete(
        &FiniteSet::unit(),
        &aa,
        a.elements().iter().map(|x| (Element::Unit, Element::pair(x.clone(), x.clone()))),
    )
    .expect("diagonal pairs lie in A×A")
}

/// The cap `A×A → I`, the dagger of the cup.
pub fn graph_cap(a: &FiniteSet) -> Graph {
    graph_dagger(&graph_cup(a))
}
