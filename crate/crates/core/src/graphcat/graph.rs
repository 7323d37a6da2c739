//! Labelled simple graphs whose vertices are pairs from `A × B`.

use std::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::relcore::{Element, FiniteSet, Relabelling};

/// A graph `γ : A → B`.
///
/// Vertices live in the `|A|·|B|` slots of `A × B`, slot `(a, b)` being
/// `a * |B| + b`. Edges are an adjacency matrix over the slots; it is
/// symmetric, and its diagonal is the vertex set (every vertex carries its
/// self-loop, and self-loops are edges).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    dom: FiniteSet,
    cod: FiniteSet,
    adj: BitSet,
}

impl Graph {
    pub fn empty(dom: &FiniteSet, cod: &FiniteSet) -> Self {
        let n = dom.len() * cod.len();
        Graph { dom: dom.clone(), cod: cod.clone(), adj: BitSet::new(n * n) }
    }

    /// Builds a graph from labelled vertices and non-loop edges. Self-loops are
    /// added for every vertex; listing them as edges is allowed.
    pub fn new<V, E>(dom: &FiniteSet, cod: &FiniteSet, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (Element, Element)>,
        E: IntoIterator<Item = ((Element, Element), (Element, Element))>,
    {
        let mut g = Graph::empty(dom, cod);
        for (a, b) in vertices {
            let s = g.slot_of(&a, &b)?;
            g.insert_edge(s, s);
        }
        for (u, v) in edges {
            let s = g.slot_of(&u.0, &u.1)?;
            let t = g.slot_of(&v.0, &v.1)?;
            for (slot, (x, y)) in [(s, &u), (t, &v)] {
                if !g.has_vertex_slot(slot) {
                    return Err(Error::DanglingEdge(format!("({x},{y})")));
                }
            }
            g.insert_edge(s, t);
        }
        Ok(g)
    }

    /// The complete graph on the given vertices.
    pub fn complete(
        dom: &FiniteSet,
        cod: &FiniteSet,
        vertices: impl IntoIterator<Item = (Element, Element)>,
    ) -> Result<Self> {
        let mut slots = Vec::new();
        let mut g = Graph::empty(dom, cod);
        for (a, b) in vertices {
            slots.push(g.slot_of(&a, &b)?);
        }
        for &s in &slots {
            for &t in &slots {
                g.insert_edge(s, t);
            }
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(dom: &FiniteSet, cod: &FiniteSet, adj: BitSet) -> Self {
        let g = Graph { dom: dom.clone(), cod: cod.clone(), adj };
        debug_assert!(g.is_well_formed(), "malformed graph {g:?}");
        g
    }

    pub(crate) fn adjacency(&self) -> &BitSet {
        &self.adj
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    /// Number of vertex slots, `|A|·|B|`.
    pub fn slot_count(&self) -> usize {
        self.dom.len() * self.cod.len()
    }

    pub fn slot(&self, a: usize, b: usize) -> usize {
        a * self.cod.len() + b
    }

    pub fn slot_pair(&self, slot: usize) -> (usize, usize) {
        (slot / self.cod.len(), slot % self.cod.len())
    }

    fn slot_of(&self, a: &Element, b: &Element) -> Result<usize> {
        Ok(self.slot(self.dom.require_index(a)?, self.cod.require_index(b)?))
    }

    fn slot_label(&self, slot: usize) -> (&Element, &Element) {
        let (a, b) = self.slot_pair(slot);
        (self.dom.element(a), self.cod.element(b))
    }

    fn insert_edge(&mut self, s: usize, t: usize) {
        let n = self.slot_count();
        self.adj.insert(s * n + t);
        self.adj.insert(t * n + s);
    }

    #[inline]
    pub fn has_vertex_slot(&self, s: usize) -> bool {
        self.has_edge_slots(s, s)
    }

    #[inline]
    pub fn has_edge_slots(&self, s: usize, t: usize) -> bool {
        self.adj.get(s * self.slot_count() + t)
    }

    pub fn has_vertex(&self, a: &Element, b: &Element) -> bool {
        self.slot_of(a, b).is_ok_and(|s| self.has_vertex_slot(s))
    }

    /// Edge membership; `u == v` asks for the self-loop.
    pub fn has_edge(&self, u: (&Element, &Element), v: (&Element, &Element)) -> bool {
        match (self.slot_of(u.0, u.1), self.slot_of(v.0, v.1)) {
            (Ok(s), Ok(t)) => self.has_edge_slots(s, t),
            _ => false,
        }
    }

    pub fn vertex_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.slot_count()).filter(|&s| self.has_vertex_slot(s))
    }

    /// Non-loop edges as slot pairs `(s, t)` with `s < t`, in canonical order.
    pub fn edge_slots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.slot_count();
        self.adj.ones().map(move |k| (k / n, k % n)).filter(|(s, t)| s < t)
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&Element, &Element)> + '_ {
        self.vertex_slots().map(|s| self.slot_label(s))
    }

    #[allow(clippy::type_complexity)]
    pub fn edges(&self) -> impl Iterator<Item = ((&Element, &Element), (&Element, &Element))> + '_ {
        self.edge_slots().map(|(s, t)| (self.slot_label(s), self.slot_label(t)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_slots().count()
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> usize {
        (self.adj.count() - self.vertex_count()) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Every pair of vertices is joined by an edge.
    pub fn is_complete(&self) -> bool {
        let v: Vec<usize> = self.vertex_slots().collect();
        v.iter().all(|&s| v.iter().all(|&t| self.has_edge_slots(s, t)))
    }

    /// Symmetry, endpoint closure and self-loops on every vertex.
    pub fn is_well_formed(&self) -> bool {
        let n = self.slot_count();
        self.adj.len() == n * n
            && self.adj.ones().all(|k| {
                let (s, t) = (k / n, k % n);
                self.has_edge_slots(t, s) && self.has_vertex_slot(s) && self.has_vertex_slot(t)
            })
    }

    /// Renames vertices along bijections of the two carriers.
    pub fn relabel(&self, dom_map: &Relabelling, cod_map: &Relabelling) -> Result<Graph> {
        self.dom.expect_eq(dom_map.source())?;
        self.cod.expect_eq(cod_map.source())?;
        let mut out = Graph::empty(dom_map.target(), cod_map.target());
        let n = self.slot_count();
        let move_slot = |s: usize| {
            let (a, b) = self.slot_pair(s);
            out.slot(dom_map.apply(a), cod_map.apply(b))
        };
        let mut adj = BitSet::new(n * n);
        for k in self.adj.ones() {
            adj.insert(move_slot(k / n) * n + move_slot(k % n));
        }
        out.adj = adj;
        Ok(out)
    }

    /// Relabels both carriers by flattening nested products and dropping unit
    /// factors. Two graphs that agree up to associators and unitors have equal
    /// canonical forms.
    pub fn canonical(&self) -> Result<Graph> {
        self.relabel(&Relabelling::flattening(&self.dom)?, &Relabelling::flattening(&self.cod)?)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} -> {}) V=[", self.dom.name(), self.cod.name())?;
        for (i, (a, b)) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("] E=[")?;
        for (i, ((a, b), (c, d))) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b})-({c},{d})")?;
        }
        f.write_str("]")
    }
}
