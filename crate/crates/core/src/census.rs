//! Counting and enumerating states and morphisms of CP(Rel) as graphs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graphcat::Graph;
use crate::relcore::{is_positive, Element, FiniteSet, Relation};

/// Largest set size whose relations are brute-forced without an override.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 4;

/// Hard ceiling for brute force: `2^(n²)` candidates must fit a 64-bit mask.
pub const MAX_BRUTE_FORCE_BOUND: usize = 5;

/// Graph enumeration keeps subsets and edge sets in 64-bit counters.
pub const MAX_ENUMERATION_SLOTS: usize = 11;

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{0≤i≤n} C(n,i) · 2^{i(i−1)/2}`: the number of states of an `n`-element set.
pub fn count_states(n: u64) -> BigUint {
    (0..=n).map(|i| binomial(n, i) << (i * i.saturating_sub(1) / 2) as usize).fold(BigUint::zero(), |acc, x| acc + x)
}

/// Morphisms `A → B` are states of `A × B`.
pub fn count_morphisms(a: &FiniteSet, b: &FiniteSet) -> BigUint {
    count_states((a.len() * b.len()) as u64)
}

/// One row of the state-count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: u64,
    /// States in Rel: `2^n` subsets.
    pub rel_states: BigUint,
    pub cp_rel_states: BigUint,
}

pub fn census_table(n_max: u64) -> Vec<CensusRow> {
    (0..=n_max)
        .map(|n| CensusRow { n, rel_states: BigUint::one() << n as usize, cp_rel_states: count_states(n) })
        .collect()
}

/// Every graph `dom → cod`, each exactly once.
///
/// Order: vertex subsets by binary counter (slot `i` is bit `i`), then, for
/// each subset, edge sets by binary counter over the non-loop vertex pairs in
/// lexicographic order.
pub struct HomsetGraphs {
    dom: FiniteSet,
    cod: FiniteSet,
    slots: usize,
    subset: u64,
    vertices: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    edge_mask: u64,
    done: bool,
}

impl HomsetGraphs {
    pub fn new(dom: &FiniteSet, cod: &FiniteSet) -> Result<Self> {
        let slots = dom.len() * cod.len();
        if slots > MAX_ENUMERATION_SLOTS {
            return Err(Error::BoundExceeded { size: slots, bound: MAX_ENUMERATION_SLOTS });
        }
        let mut it = HomsetGraphs {
            dom: dom.clone(),
            cod: cod.clone(),
            slots,
            subset: 0,
            vertices: Vec::new(),
            pairs: Vec::new(),
            edge_mask: 0,
            done: false,
        };
        it.load_subset();
        Ok(it)
    }

    fn load_subset(&mut self) {
        self.vertices = (0..self.slots).filter(|i| self.subset >> i & 1 == 1).collect();
        self.pairs.clear();
        for (k, &s) in self.vertices.iter().enumerate() {
            for &t in &self.vertices[k + 1..] {
                self.pairs.push((s, t));
            }
        }
        self.edge_mask = 0;
    }

    fn current(&self) -> Graph {
        let n = self.slots;
        let mut adj = BitSet::new(n * n);
        for &s in &self.vertices {
            adj.insert(s * n + s);
        }
        for (p, &(s, t)) in self.pairs.iter().enumerate() {
            if self.edge_mask >> p & 1 == 1 {
                adj.insert(s * n + t);
                adj.insert(t * n + s);
            }
        }
        Graph::from_adjacency(&self.dom, &self.cod, adj)
    }
}

impl Iterator for HomsetGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let g = self.current();
        self.edge_mask += 1;
        if self.edge_mask == 1u64 << self.pairs.len() {
            self.subset += 1;
            if self.subset == 1u64 << self.slots {
                self.done = true;
            } else {
                self.load_subset();
            }
        }
        Some(g)
    }
}

pub fn enumerate_graphs(dom: &FiniteSet, cod: &FiniteSet) -> Result<HomsetGraphs> {
    HomsetGraphs::new(dom, cod)
}

/// Every state `I → X`: the graphs on subsets of `X`.
pub fn enumerate_state_graphs(x: &FiniteSet) -> Result<HomsetGraphs> {
    HomsetGraphs::new(&FiniteSet::unit(), x)
}

/// All positive relations on `x`, by filtering the `2^(n²)` relations.
///
/// Sizes above `bound` are refused; `bound` itself may not exceed
/// [`MAX_BRUTE_FORCE_BOUND`].
pub fn enumerate_positive_relations(x: &FiniteSet, bound: usize) -> Result<impl Iterator<Item = Relation>> {
    let n = x.len();
    let limit = bound.min(MAX_BRUTE_FORCE_BOUND);
    if n > limit {
        return Err(Error::BoundExceeded { size: n, bound: limit });
    }
    let x = x.clone();
    Ok((0..1u64 << (n * n))
        .map(move |mask| Relation::from_mask(&x, &x, mask))
        .filter(|r| is_positive(r).expect("endomorphism by construction")))
}

/// The state graph of a positive relation: vertex `x` iff `r(x,x)`, edge
/// `{x,x'}` iff `r(x,x')`.
pub fn state_graph_from_positive(r: &Relation) -> Result<Graph> {
    if !is_positive(r)? {
        return Err(Error::NotPositive);
    }
    let star = |x: &Element| (Element::Unit, x.clone());
    Graph::new(
        &FiniteSet::unit(),
        r.dom(),
        r.pairs().filter(|(p, q)| p == q).map(|(p, _)| star(p)),
        r.pairs().map(|(p, q)| (star(p), star(q))),
    )
}

/// The positive relation of a state graph: `r(x,x')` iff `{x,x'}` is an edge.
pub fn positive_from_state_graph(g: &Graph) -> Result<Relation> {
    if !g.dom().is_unit() {
        return Err(Error::ObjectMismatch { expected: FiniteSet::unit().describe(), found: g.dom().describe() });
    }
    let x = g.cod();
    Ok(Relation::from_fn(x, x, |i, j| g.has_edge_slots(i, j)))
}
