//! Finite sets of labelled elements, cartesian products and coherence relabellings.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// An element of a finite set.
///
/// Product elements are tuples, never concatenated strings, so nested
/// products such as `A×(B×C)` and `(A×B)×C` stay distinguishable. The unit
/// element `*` is its own variant; [`Element::atom`] maps the label `"*"` to it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Unit,
    Atom(Arc<str>),
    Pair(Arc<(Element, Element)>),
}

impl Element {
    pub fn atom(label: &str) -> Self {
        if label == "*" {
            Element::Unit
        } else {
            Element::Atom(label.into())
        }
    }

    pub fn pair(first: Element, second: Element) -> Self {
        Element::Pair(Arc::new((first, second)))
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    fn flatten_into(&self, out: &mut Vec<Element>) {
        match self {
            Element::Unit => {}
            Element::Atom(_) => out.push(self.clone()),
            Element::Pair(p) => {
                p.0.flatten_into(out);
                p.1.flatten_into(out);
            }
        }
    }

    /// Drops unit components and re-associates tuples to the right.
    pub fn flattened(&self) -> Element {
        let mut atoms = Vec::new();
        self.flatten_into(&mut atoms);
        match atoms.pop() {
            None => Element::Unit,
            Some(last) => atoms.into_iter().rev().fold(last, |acc, e| Element::pair(e, acc)),
        }
    }
}

impl From<&str> for Element {
    fn from(label: &str) -> Self {
        Element::atom(label)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Unit => f.write_str("*"),
            Element::Atom(s) => f.write_str(s),
            Element::Pair(p) => write!(f, "({},{})", p.0, p.1),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct SetData {
    name: String,
    elements: Vec<Element>,
}

/// A named finite set whose elements are kept in canonical (sorted) order.
///
/// Equality and hashing look at the elements only; the name is a display label.
#[derive(Clone)]
pub struct FiniteSet(Arc<SetData>);

impl FiniteSet {
    pub fn new<E: Into<Element>>(name: &str, elements: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut elements: Vec<Element> = elements.into_iter().map(Into::into).collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        Ok(Self::from_sorted(name.to_string(), elements))
    }

    fn from_sorted(name: String, elements: Vec<Element>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        FiniteSet(Arc::new(SetData { name, elements }))
    }

    /// The monoidal unit `I = {*}`.
    pub fn unit() -> Self {
        Self::from_sorted("I".to_string(), vec![Element::Unit])
    }

    pub fn empty(name: &str) -> Self {
        Self::from_sorted(name.to_string(), Vec::new())
    }

    /// An `n`-element set with labels `a, b, c, ...` (zero-padded `e000, e001, ...` past 26).
    pub fn letters(name: &str, n: usize) -> Self {
        let elements = (0..n)
            .map(|i| {
                if n <= 26 {
                    Element::atom(&((b'a' + i as u8) as char).to_string())
                } else {
                    Element::atom(&format!("e{i:03}"))
                }
            })
            .collect();
        Self::from_sorted(name.to_string(), elements)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn elements(&self) -> &[Element] {
        &self.0.elements
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn element(&self, index: usize) -> &Element {
        &self.0.elements[index]
    }

    pub fn index_of(&self, element: &Element) -> Option<usize> {
        self.0.elements.binary_search(element).ok()
    }

    pub(crate) fn require_index(&self, element: &Element) -> Result<usize> {
        self.index_of(element)
            .ok_or_else(|| Error::UnknownElement { element: element.to_string(), set: self.name().to_string() })
    }

    pub fn contains(&self, element: &Element) -> bool {
        self.index_of(element).is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.0.elements.as_slice() == [Element::Unit]
    }

    /// Same elements under a different display name.
    pub fn renamed(&self, name: &str) -> Self {
        FiniteSet(Arc::new(SetData { name: name.to_string(), elements: self.0.elements.clone() }))
    }

    pub(crate) fn expect_eq(&self, other: &FiniteSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ObjectMismatch { expected: self.describe(), found: other.describe() })
        }
    }

    pub(crate) fn describe(&self) -> String {
        let items: Vec<String> = self.elements().iter().map(ToString::to_string).collect();
        format!("{} = {{{}}}", self.name(), items.join(", "))
    }
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.elements == other.0.elements
    }
}

impl Eq for FiniteSet {}

impl Hash for FiniteSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.elements.hash(state);
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// The cartesian product `a × b`, in row-major order.
///
/// Because both factors are sorted, row-major order is already the canonical
/// order, and the pair `(a_i, b_j)` sits at index `i * |b| + j`.
pub fn product_set(a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
    PRODUCTS.with(|cache| {
        let key = (Arc::as_ptr(&a.0) as usize, Arc::as_ptr(&b.0) as usize);
        let mut cache = cache.borrow_mut();
        if let Some((_, _, p)) = cache.get(&key) {
            return p.clone();
        }
        if cache.len() >= MEMO_CAPACITY {
            cache.clear();
        }
        let p = build_product(a, b);
        cache.insert(key, (a.clone(), b.clone(), p.clone()));
        p
    })
}

// Law checks build the same few products and flattenings millions of times.
// The memo tables are keyed by set identity; each entry keeps its key sets
// alive so an address is never reused while cached.
const MEMO_CAPACITY: usize = 4096;

/// The two factors, kept alive, and their product.
type ProductEntry = (FiniteSet, FiniteSet, FiniteSet);

thread_local! {
    static PRODUCTS: RefCell<HashMap<(usize, usize), ProductEntry>> = RefCell::new(HashMap::new());
    static FLATTENINGS: RefCell<HashMap<usize, (FiniteSet, Relabelling)>> = RefCell::new(HashMap::new());
}

fn build_product(a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
    let elements = a
        .elements()
        .iter()
        .flat_map(|x| b.elements().iter().map(move |y| Element::pair(x.clone(), y.clone())))
        .collect();
    FiniteSet::from_sorted(format!("{}×{}", a.name(), b.name()), elements)
}

/// A bijection between two finite sets, stored as an index map.
///
/// Used for the associators and unitors of the cartesian monoidal structure,
/// which are applied explicitly rather than assumed strict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabelling {
    source: FiniteSet,
    target: FiniteSet,
    forward: Vec<usize>,
}

impl Relabelling {
    /// Relabels every element of `source` through `f`; the target is the image.
    pub fn from_fn(source: &FiniteSet, target_name: &str, f: impl Fn(&Element) -> Element) -> Result<Self> {
        let images: Vec<Element> = source.elements().iter().map(f).collect();
        let mut sorted = images.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotInjective(source.name().to_string()));
        }
        let target = FiniteSet::from_sorted(target_name.to_string(), sorted);
        let forward = images.iter().map(|e| target.index_of(e).expect("image element is in target")).collect();
        Ok(Relabelling { source: source.clone(), target, forward })
    }

    pub fn identity(set: &FiniteSet) -> Self {
        Relabelling { source: set.clone(), target: set.clone(), forward: (0..set.len()).collect() }
    }

    /// `(A×B)×C → A×(B×C)`.
    pub fn associator(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> Self {
        let source = product_set(&product_set(a, b), c);
        let target = product_set(a, &product_set(b, c));
        Self::from_fn(&source, target.name(), |e| {
            let (ab, z) = e.as_pair().expect("product element");
            let (x, y) = ab.as_pair().expect("product element");
            Element::pair(x.clone(), Element::pair(y.clone(), z.clone()))
        })
        .expect("associator is a bijection")
    }

    /// `I×A → A`.
    pub fn left_unitor(a: &FiniteSet) -> Self {
        let source = product_set(&FiniteSet::unit(), a);
        Self::from_fn(&source, a.name(), |e| e.as_pair().expect("product element").1.clone())
            .expect("unitor is a bijection")
    }

    /// `A×I → A`.
    pub fn right_unitor(a: &FiniteSet) -> Self {
        let source = product_set(a, &FiniteSet::unit());
        Self::from_fn(&source, a.name(), |e| e.as_pair().expect("product element").0.clone())
            .expect("unitor is a bijection")
    }

    /// Flattens nested products and drops unit factors, so that every
    /// bracketing of the same factors lands on the same right-nested set.
    pub fn flattening(set: &FiniteSet) -> Result<Self> {
        let key = Arc::as_ptr(&set.0) as usize;
        if let Some(r) = FLATTENINGS.with(|c| c.borrow().get(&key).map(|(_, r)| r.clone())) {
            return Ok(r);
        }
        let r = Self::from_fn(set, set.name(), Element::flattened)?;
        FLATTENINGS.with(|c| {
            let mut c = c.borrow_mut();
            if c.len() >= MEMO_CAPACITY {
                c.clear();
            }
            c.insert(key, (set.clone(), r.clone()));
        });
        Ok(r)
    }

    pub fn source(&self) -> &FiniteSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet {
        &self.target
    }

    #[inline]
    pub fn apply(&self, index: usize) -> usize {
        self.forward[index]
    }

    pub fn map_element(&self, element: &Element) -> Option<&Element> {
        self.source.index_of(element).map(|i| self.target.element(self.forward[i]))
    }

    pub fn inverse(&self) -> Self {
        let mut backward = vec![0; self.forward.len()];
        for (i, &j) in self.forward.iter().enumerate() {
            backward[j] = i;
        }
        Relabelling { source: self.target.clone(), target: self.source.clone(), forward: backward }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Relabelling) -> Result<Self> {
        self.target.expect_eq(&next.source)?;
        Ok(Relabelling {
            source: self.source.clone(),
            target: next.target.clone(),
            forward: self.forward.iter().map(|&i| next.forward[i]).collect(),
        })
    }
}
