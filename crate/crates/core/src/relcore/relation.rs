//! Binary relations between finite sets.

use std::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::relcore::set::{product_set, Element, FiniteSet, Relabelling};

/// A relation `R ⊆ dom × cod`.
///
/// Pairs are stored as a bit matrix in the canonical order of the two
/// carriers, so derived equality is equality of relations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    dom: FiniteSet,
    cod: FiniteSet,
    bits: BitSet,
}

impl Relation {
    pub fn empty(dom: &FiniteSet, cod: &FiniteSet) -> Self {
        Relation { dom: dom.clone(), cod: cod.clone(), bits: BitSet::new(dom.len() * cod.len()) }
    }

    pub fn new<A, B>(dom: &FiniteSet, cod: &FiniteSet, pairs: impl IntoIterator<Item = (A, B)>) -> Result<Self>
    where
        A: Into<Element>,
        B: Into<Element>,
    {
        let mut rel = Relation::empty(dom, cod);
        for (a, b) in pairs {
            let i = dom.require_index(&a.into())?;
            let j = cod.require_index(&b.into())?;
            rel.insert_index(i, j);
        }
        Ok(rel)
    }

    pub fn identity(set: &FiniteSet) -> Self {
        Relation::from_fn(set, set, |i, j| i == j)
    }

    /// The graph `{(x, σ(x))}` of a bijection.
    pub fn from_relabelling(map: &Relabelling) -> Self {
        Relation::from_fn(map.source(), map.target(), |i, j| map.apply(i) == j)
    }

    pub(crate) fn from_fn(dom: &FiniteSet, cod: &FiniteSet, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut rel = Relation::empty(dom, cod);
        for i in 0..dom.len() {
            for j in 0..cod.len() {
                if f(i, j) {
                    rel.insert_index(i, j);
                }
            }
        }
        rel
    }

    pub(crate) fn from_bits(dom: &FiniteSet, cod: &FiniteSet, bits: BitSet) -> Self {
        debug_assert_eq!(bits.len(), dom.len() * cod.len());
        Relation { dom: dom.clone(), cod: cod.clone(), bits }
    }

    /// Relation whose pair `(i, j)` is bit `i * |cod| + j` of `mask`.
    pub fn from_mask(dom: &FiniteSet, cod: &FiniteSet, mask: u64) -> Self {
        Relation::from_bits(dom, cod, BitSet::from_mask(dom.len() * cod.len(), mask))
    }

    pub(crate) fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    #[inline]
    pub(crate) fn insert_index(&mut self, i: usize, j: usize) {
        self.bits.insert(i * self.cod.len() + j);
    }

    #[inline]
    pub fn contains_index(&self, i: usize, j: usize) -> bool {
        self.bits.get(i * self.cod.len() + j)
    }

    pub fn contains(&self, a: &Element, b: &Element) -> bool {
        match (self.dom.index_of(a), self.cod.index_of(b)) {
            (Some(i), Some(j)) => self.contains_index(i, j),
            _ => false,
        }
    }

    /// Related index pairs in canonical order.
    pub fn index_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let width = self.cod.len();
        self.bits.ones().map(move |k| (k / width, k % width))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Element, &Element)> + '_ {
        self.index_pairs().map(|(i, j)| (self.dom.element(i), self.cod.element(j)))
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.expect_same_type(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.expect_same_type(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(Relation::from_bits(&self.dom, &self.cod, bits))
    }

    fn expect_same_type(&self, other: &Relation) -> Result<()> {
        self.dom.expect_eq(&other.dom)?;
        self.cod.expect_eq(&other.cod)
    }

    /// Transports the relation along bijections of its domain and codomain.
    pub fn relabel(&self, dom_map: &Relabelling, cod_map: &Relabelling) -> Result<Relation> {
        self.dom.expect_eq(dom_map.source())?;
        self.cod.expect_eq(cod_map.source())?;
        let mut out = Relation::empty(dom_map.target(), cod_map.target());
        for (i, j) in self.index_pairs() {
            out.insert_index(dom_map.apply(i), cod_map.apply(j));
        }
        Ok(out)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({} -> {}) {{", self.dom.name(), self.cod.name())?;
        for (n, (a, b)) in self.pairs().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("}")
    }
}

/// `s ∘ r`: `(a,c)` is related iff some `b` has `r(a,b)` and `s(b,c)`.
pub fn compose_rel(s: &Relation, r: &Relation) -> Result<Relation> {
    r.cod.expect_eq(&s.dom)?;
    let mut out = Relation::empty(&r.dom, &s.cod);
    let nc = s.cod.len();
    for (a, b) in r.index_pairs() {
        for c in 0..nc {
            if s.contains_index(b, c) {
                out.insert_index(a, c);
            }
        }
    }
    Ok(out)
}

/// The relational dagger `r°`.
pub fn converse(r: &Relation) -> Relation {
    let mut out = Relation::empty(&r.cod, &r.dom);
    for (a, b) in r.index_pairs() {
        out.insert_index(b, a);
    }
    out
}

/// `r ⊗ s : A×B → C×D` for `r : A → C`, `s : B → D`.
pub fn tensor_rel(r: &Relation, s: &Relation) -> Relation {
    let (nb, nd) = (s.dom.len(), s.cod.len());
    let mut out = Relation::empty(&product_set(&r.dom, &s.dom), &product_set(&r.cod, &s.cod));
    for (a, c) in r.index_pairs() {
        for (b, d) in s.index_pairs() {
            out.insert_index(a * nb + b, c * nd + d);
        }
    }
    out
}

/// A relation on `X` is positive iff it is symmetric and every related
/// element is related to itself.
pub fn is_positive(r: &Relation) -> Result<bool> {
    if r.dom != r.cod {
        return Err(Error::NotEndomorphism { dom: r.dom.describe(), cod: r.cod.describe() });
    }
    Ok(r.index_pairs().all(|(x, y)| r.contains_index(y, x) && r.contains_index(x, x)))
}

/// A factorisation `r = g° ∘ g` through the object `witness_object`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveWitness {
    pub witness_object: FiniteSet,
    pub g: Relation,
}

impl PositiveWitness {
    /// `g° ∘ g`.
    pub fn recompose(&self) -> Relation {
        compose_rel(&converse(&self.g), &self.g).expect("g° ∘ g is always composable")
    }
}

/// Builds the incidence factorisation of a positive relation.
///
/// The witness object has one element per related unordered pair `{x, x'}`
/// (encoded as the tuple `(x, x')` with `x ≤ x'`, so `{x}` is `(x, x)`),
/// and `g` sends each `x` to the pairs containing it.
pub fn positive_witness(r: &Relation) -> Result<PositiveWitness> {
    if !is_positive(r)? {
        return Err(Error::NotPositive);
    }
    let x = &r.dom;
    let edges: Vec<(usize, usize)> = r.index_pairs().filter(|(i, j)| i <= j).collect();
    let witness_object = FiniteSet::new(
        &format!("W({})", x.name()),
        edges.iter().map(|&(i, j)| Element::pair(x.element(i).clone(), x.element(j).clone())),
    )?;
    // (i, j) pairs come out in lexicographic order, matching the sorted tuple elements
    let mut g = Relation::empty(x, &witness_object);
    for (k, &(i, j)) in edges.iter().enumerate() {
        g.insert_index(i, k);
        g.insert_index(j, k);
    }
    Ok(PositiveWitness { witness_object, g })
}
