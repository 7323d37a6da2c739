//! Composition, identities, tensor, dagger and the join-semilattice order on graphs.

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graphcat::graph::Graph;
use crate::relcore::{product_set, FiniteSet, Relation};

/// `1_A`: the complete graph on the diagonal of `A × A`.
pub fn graph_identity(a: &FiniteSet) -> Graph {
    embed_graph(&Relation::identity(a))
}

/// `g2 ∘ g1` for `g1 : A → B` and `g2 : B → C`.
///
/// `{(a,c),(a',c')}` is an edge iff some `b, b'` give an edge `{(a,b),(a',b')}`
/// of `g1` and an edge `{(b,c),(b',c')}` of `g2`. Vertices are the self-loop
/// case of the same rule.
pub fn graph_compose(g2: &Graph, g1: &Graph) -> Result<Graph> {
    g1.cod().expect_eq(g2.dom())?;
    let (na, nb, nc) = (g1.dom().len(), g1.cod().len(), g2.cod().len());
    let (n1, n2, n) = (na * nb, nb * nc, na * nc);
    let mut adj = BitSet::new(n * n);
    let adj2 = g2.adjacency();
    for k in g1.adjacency().ones() {
        let (s, t) = (k / n1, k % n1);
        let (a, b) = (s / nb, s % nb);
        let (a2, b2) = (t / nb, t % nb);
        for c in 0..nc {
            let row = (b * nc + c) * n2 + b2 * nc;
            let out_row = (a * nc + c) * n + a2 * nc;
            for c2 in 0..nc {
                if adj2.get(row + c2) {
                    adj.insert(out_row + c2);
                }
            }
        }
    }
    Ok(Graph::from_adjacency(g1.dom(), g2.cod(), adj))
}

/// `g1 ⊗ g2 : A×B → C×D` for `g1 : A → C` and `g2 : B → D`.
///
/// Vertex `((a,b),(c,d))` for every pair of component vertices; an edge
/// between two such vertices iff both component pairs are edges.
pub fn graph_tensor(g1: &Graph, g2: &Graph) -> Graph {
    let (nc, nb, nd) = (g1.cod().len(), g2.dom().len(), g2.cod().len());
    let (n1, n2) = (g1.slot_count(), g2.slot_count());
    let n = n1 * n2;
    let cd = nc * nd;
    let slot = |a: usize, b: usize, c: usize, d: usize| (a * nb + b) * cd + c * nd + d;
    let mut adj = BitSet::new(n * n);
    let edges2: Vec<(usize, usize)> = g2.adjacency().ones().map(|k| (k / n2, k % n2)).collect();
    for k in g1.adjacency().ones() {
        let (s, t) = (k / n1, k % n1);
        let (a, c) = (s / nc, s % nc);
        let (a2, c2) = (t / nc, t % nc);
        for &(u, v) in &edges2 {
            let (b, d) = (u / nd, u % nd);
            let (b2, d2) = (v / nd, v % nd);
            adj.insert(slot(a, b, c, d) * n + slot(a2, b2, c2, d2));
        }
    }
    Graph::from_adjacency(&product_set(g1.dom(), g2.dom()), &product_set(g1.cod(), g2.cod()), adj)
}

/// `γ† : B → A`: every vertex pair `(a,b)` becomes `(b,a)`.
pub fn graph_dagger(g: &Graph) -> Graph {
    let (na, nb) = (g.dom().len(), g.cod().len());
    let n = na * nb;
    let swap = |s: usize| (s % nb) * na + s / nb;
    let mut adj = BitSet::new(n * n);
    for k in g.adjacency().ones() {
        adj.insert(swap(k / n) * n + swap(k % n));
    }
    Graph::from_adjacency(g.cod(), g.dom(), adj)
}

fn expect_same_homset(g1: &Graph, g2: &Graph) -> Result<()> {
    g1.dom().expect_eq(g2.dom())?;
    g1.cod().expect_eq(g2.cod())
}

/// `g1 ≤ g2` iff `E(g1) ⊆ E(g2)`.
pub fn graph_leq(g1: &Graph, g2: &Graph) -> Result<bool> {
    expect_same_homset(g1, g2)?;
    Ok(g1.adjacency().is_subset(g2.adjacency()))
}

/// Union of vertex and edge sets: the least upper bound for [`graph_leq`].
/// The empty family yields the empty graph.
pub fn graph_join<'a>(dom: &FiniteSet, cod: &FiniteSet, gs: impl IntoIterator<Item = &'a Graph>) -> Result<Graph> {
    let mut out = Graph::empty(dom, cod);
    let mut adj = out.adjacency().clone();
    for g in gs {
        expect_same_homset(&out, g)?;
        adj.union_with(g.adjacency());
    }
    out = Graph::from_adjacency(dom, cod, adj);
    Ok(out)
}

/// The embedding `Rel → 𝒢`: the complete graph on `r ⊆ A × B`.
pub fn embed_graph(r: &Relation) -> Graph {
    // a relation's bit (a, b) already sits at slot a * |B| + b
    let slots: Vec<usize> = r.bits().ones().collect();
    let n = r.dom().len() * r.cod().len();
    let mut adj = BitSet::new(n * n);
    for &s in &slots {
        for &t in &slots {
            adj.insert(s * n + t);
        }
    }
    Graph::from_adjacency(r.dom(), r.cod(), adj)
}

/// A state `I → X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    graph: Graph,
}

impl State {
    pub fn new(graph: Graph) -> Result<Self> {
        if !graph.dom().is_unit() {
            return Err(Error::ObjectMismatch {
                expected: FiniteSet::unit().describe(),
                found: graph.dom().describe(),
            });
        }
        Ok(State { graph })
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.graph.cod()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// A state is pure iff its graph is complete.
pub fn is_pure(s: &State) -> bool {
    s.graph.is_complete()
}
