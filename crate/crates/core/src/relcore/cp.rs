//! Completely positive relations: the morphisms of CP(Rel).

use std::fmt;

use crate::error::{Error, Result};
use crate::relcore::relation::{compose_rel, converse, is_positive, tensor_rel, Relation};
use crate::relcore::set::{product_set, Element, FiniteSet, Relabelling};

/// Recovers `(A, B)` from a carrier of the form `A×B`.
///
/// The empty set is read as `∅×∅`, which is the only reading that matters
/// for product squares.
pub fn split_product(set: &FiniteSet) -> Result<(FiniteSet, FiniteSet)> {
    let mut firsts = Vec::new();
    let mut seconds = Vec::new();
    for e in set.elements() {
        let (x, y) = e.as_pair().ok_or_else(|| Error::ShapeMismatch(format!("{} is not a product set", set.name())))?;
        firsts.push(x.clone());
        seconds.push(y.clone());
    }
    firsts.sort();
    firsts.dedup();
    seconds.sort();
    seconds.dedup();
    let (left_name, right_name) = match set.name().split_once('×') {
        Some((l, r)) => (l.to_string(), r.to_string()),
        None => (format!("π1({})", set.name()), format!("π2({})", set.name())),
    };
    let a = FiniteSet::new(&left_name, firsts)?;
    let b = FiniteSet::new(&right_name, seconds)?;
    if product_set(&a, &b) != *set {
        return Err(Error::ShapeMismatch(format!("{} is not a full cartesian product", set.name())));
    }
    Ok((a, b))
}

fn square_base(set: &FiniteSet) -> Result<FiniteSet> {
    let (a, b) = split_product(set)?;
    if a != b {
        return Err(Error::ShapeMismatch(format!("{} is not a product square", set.name())));
    }
    Ok(a)
}

/// The base sets `(A, B)` of a relation `A×A → B×B`.
pub fn cp_shape(m: &Relation) -> Result<(FiniteSet, FiniteSet)> {
    Ok((square_base(m.dom())?, square_base(m.cod())?))
}

fn axioms_hold(m: &Relation, na: usize, nb: usize) -> bool {
    m.index_pairs().all(|(i, j)| {
        let (a1, a2) = (i / na, i % na);
        let (b1, b2) = (j / nb, j % nb);
        m.contains_index(a2 * na + a1, b2 * nb + b1) && m.contains_index(a1 * na + a1, b1 * nb + b1)
    })
}

/// Whether `m : A×A → B×B` satisfies both axioms of complete positivity:
/// `m(a1,a2,b1,b2) ⇒ m(a2,a1,b2,b1)` and `m(a1,a2,b1,b2) ⇒ m(a1,a1,b1,b1)`.
pub fn is_cp(m: &Relation) -> Result<bool> {
    let (a, b) = cp_shape(m)?;
    Ok(axioms_hold(m, a.len(), b.len()))
}

/// The reshuffle `m̄ : A×B → A×B` with `m̄(a1,b1,a2,b2) ⇔ m(a2,a1,b2,b1)`.
///
/// `m` is completely positive exactly when `m̄` is positive.
pub fn bar(m: &Relation) -> Result<Relation> {
    let (a, b) = cp_shape(m)?;
    let (na, nb) = (a.len(), b.len());
    let ab = product_set(&a, &b);
    let mut out = Relation::empty(&ab, &ab);
    for (i, j) in m.index_pairs() {
        let (x1, x2) = (i / na, i % na);
        let (y1, y2) = (j / nb, j % nb);
        out.insert_index(x2 * nb + y2, x1 * nb + y1);
    }
    Ok(out)
}

/// Inverse of [`bar`] for explicitly given base sets.
pub fn bar_inverse(r: &Relation, a: &FiniteSet, b: &FiniteSet) -> Result<Relation> {
    let ab = product_set(a, b);
    ab.expect_eq(r.dom())?;
    ab.expect_eq(r.cod())?;
    let nb = b.len();
    let mut out = Relation::empty(&product_set(a, a), &product_set(b, b));
    let na = a.len();
    for (i, j) in r.index_pairs() {
        let (a1, b1) = (i / nb, i % nb);
        let (a2, b2) = (j / nb, j % nb);
        // m̄(a1,b1,a2,b2) ⇔ m(a2,a1,b2,b1)
        out.insert_index(a2 * na + a1, b2 * nb + b1);
    }
    Ok(out)
}

/// A morphism `A → B` of CP(Rel): a relation `A×A → B×B` satisfying both
/// complete-positivity axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CpMorphism {
    dom: FiniteSet,
    cod: FiniteSet,
    rel: Relation,
}

impl CpMorphism {
    pub fn new(dom: &FiniteSet, cod: &FiniteSet, rel: Relation) -> Result<Self> {
        product_set(dom, dom).expect_eq(rel.dom())?;
        product_set(cod, cod).expect_eq(rel.cod())?;
        if !axioms_hold(&rel, dom.len(), cod.len()) {
            return Err(Error::NotCompletelyPositive);
        }
        Ok(CpMorphism { dom: dom.clone(), cod: cod.clone(), rel })
    }

    /// Reads the base sets off the relation's product-square carriers.
    pub fn from_relation(rel: Relation) -> Result<Self> {
        let (a, b) = cp_shape(&rel)?;
        CpMorphism::new(&a, &b, rel)
    }

    pub(crate) fn from_parts(dom: &FiniteSet, cod: &FiniteSet, rel: Relation) -> Self {
        debug_assert!(axioms_hold(&rel, dom.len(), cod.len()));
        CpMorphism { dom: dom.clone(), cod: cod.clone(), rel }
    }

    pub fn identity(set: &FiniteSet) -> Self {
        CpMorphism::from_parts(set, set, Relation::identity(&product_set(set, set)))
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }

    pub fn into_rel(self) -> Relation {
        self.rel
    }

    /// `rel(a1, a2, b1, b2)` by element indices.
    #[inline]
    pub fn holds(&self, a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
        let (na, nb) = (self.dom.len(), self.cod.len());
        self.rel.contains_index(a1 * na + a2, b1 * nb + b2)
    }

    pub fn holds_for(&self, a1: &Element, a2: &Element, b1: &Element, b2: &Element) -> bool {
        match (self.dom.index_of(a1), self.dom.index_of(a2), self.cod.index_of(b1), self.cod.index_of(b2)) {
            (Some(i1), Some(i2), Some(j1), Some(j2)) => self.holds(i1, i2, j1, j2),
            _ => false,
        }
    }
}

impl fmt::Debug for CpMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CpMorphism({} -> {}) {:?}", self.dom.name(), self.cod.name(), self.rel)
    }
}

/// The doubling embedding `Rel → CP(Rel)`, `r ↦ r ⊗ r`:
/// `(a,a',b,b')` is related iff `r(a,b)` and `r(a',b')`.
pub fn embed_double(r: &Relation) -> CpMorphism {
    CpMorphism::from_parts(r.dom(), r.cod(), tensor_rel(r, r))
}

pub fn cp_compose(s: &CpMorphism, r: &CpMorphism) -> Result<CpMorphism> {
    r.cod.expect_eq(&s.dom)?;
    let rel = compose_rel(&s.rel, &r.rel)?;
    Ok(CpMorphism::from_parts(&r.dom, &s.cod, rel))
}

/// The CP dagger: the converse of the underlying relation.
pub fn cp_dagger(m: &CpMorphism) -> CpMorphism {
    CpMorphism::from_parts(&m.cod, &m.dom, converse(&m.rel))
}

/// `((a,a'),(c,c')) ↦ ((a,c),(a',c'))`, from `(A×A)×(C×C)` to `(A×C)×(A×C)`.
fn interleave(a: &FiniteSet, c: &FiniteSet) -> Relabelling {
    let source = product_set(&product_set(a, a), &product_set(c, c));
    let ac = product_set(a, c);
    let target_name = format!("{}×{}", ac.name(), ac.name());
    Relabelling::from_fn(&source, &target_name, |e| {
        let (aa, cc) = e.as_pair().expect("product element");
        let (x, x2) = aa.as_pair().expect("product element");
        let (y, y2) = cc.as_pair().expect("product element");
        Element::pair(Element::pair(x.clone(), y.clone()), Element::pair(x2.clone(), y2.clone()))
    })
    .expect("interleaving is a bijection")
}

/// `f ⊗ g : A×C → B×D` for `f : A → B`, `g : C → D`: the relational tensor of
/// the underlying relations with the middle wires exchanged, so that
/// `((a,c),(a',c'),(b,d),(b',d'))` is related iff `f(a,a',b,b')` and `g(c,c',d,d')`.
pub fn cp_tensor(f: &CpMorphism, g: &CpMorphism) -> CpMorphism {
    let raw = tensor_rel(&f.rel, &g.rel);
    let rel = raw
        .relabel(&interleave(&f.dom, &g.dom), &interleave(&f.cod, &g.cod))
        .expect("interleavings match the tensor carriers");
    CpMorphism::from_parts(&product_set(&f.dom, &g.dom), &product_set(&f.cod, &g.cod), rel)
}

/// Positivity of `m̄`, exposed for checking against [`is_cp`].
pub fn is_cp_via_bar(m: &Relation) -> Result<bool> {
    is_positive(&bar(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(name: &str, labels: &[&str]) -> FiniteSet {
        FiniteSet::new(name, labels.iter().copied()).unwrap()
    }

    fn quad(a1: &str, a2: &str, b1: &str, b2: &str) -> (Element, Element) {
        (Element::pair(a1.into(), a2.into()), Element::pair(b1.into(), b2.into()))
    }

    #[test]
    fn identity_is_cp() {
        let a = set("A", &["a", "b"]);
        let id = Relation::identity(&product_set(&a, &a));
        assert!(is_cp(&id).unwrap());
        assert!(is_positive(&bar(&id).unwrap()).unwrap());
    }

    #[test]
    fn lone_off_diagonal_tuple_is_not_cp() {
        let a = set("A", &["a", "a'"]);
        let b = set("B", &["b", "b'"]);
        let m = Relation::new(&product_set(&a, &a), &product_set(&b, &b), [quad("a", "a'", "b", "b'")]).unwrap();
        assert!(!is_cp(&m).unwrap());
        assert_eq!(CpMorphism::new(&a, &b, m).unwrap_err(), Error::NotCompletelyPositive);
    }

    #[test]
    fn shape_errors() {
        let a = set("A", &["a", "b"]);
        let r = Relation::identity(&a);
        assert!(matches!(is_cp(&r), Err(Error::ShapeMismatch(_))));
        let ab = product_set(&a, &set("B", &["x"]));
        assert!(matches!(is_cp(&Relation::identity(&ab)), Err(Error::ShapeMismatch(_))));
        assert!(matches!(bar(&Relation::identity(&ab)), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn bar_round_trips() {
        let a = set("A", &["a", "b"]);
        let b = set("B", &["x", "y"]);
        let m = Relation::new(
            &product_set(&a, &a),
            &product_set(&b, &b),
            [quad("a", "b", "x", "y"), quad("b", "b", "y", "x"), quad("a", "a", "x", "x")],
        )
        .unwrap();
        assert_eq!(bar_inverse(&bar(&m).unwrap(), &a, &b).unwrap(), m);
    }

    #[test]
    fn doubling_single_pair() {
        let a = set("A", &["a"]);
        let z = set("Z", &["0"]);
        let d = embed_double(&Relation::new(&a, &z, [("a", "0")]).unwrap());
        let expected = Relation::new(&product_set(&a, &a), &product_set(&z, &z), [quad("a", "a", "0", "0")]).unwrap();
        assert_eq!(d.rel(), &expected);
        assert!(is_cp(d.rel()).unwrap());
    }

    #[test]
    fn doubling_identity_is_identity() {
        let a = set("A", &["a", "b", "c"]);
        assert_eq!(embed_double(&Relation::identity(&a)), CpMorphism::identity(&a));
    }

    #[test]
    fn cp_identity_absorbs() {
        let a = set("A", &["a", "b"]);
        let b = set("B", &["x"]);
        let m = embed_double(&Relation::new(&a, &b, [("a", "x")]).unwrap());
        assert_eq!(cp_compose(&CpMorphism::identity(&b), &m).unwrap(), m);
        assert_eq!(cp_compose(&m, &CpMorphism::identity(&a)).unwrap(), m);
    }

    #[test]
    fn tensor_of_identities() {
        let a = set("A", &["a", "b"]);
        let c = set("C", &["x", "y", "z"]);
        let t = cp_tensor(&CpMorphism::identity(&a), &CpMorphism::identity(&c));
        assert_eq!(t, CpMorphism::identity(&product_set(&a, &c)));
    }

    #[test]
    fn tensor_tuple_layout() {
        let a = set("A", &["a", "a'"]);
        let b = set("B", &["b"]);
        let c = set("C", &["c"]);
        let d = set("D", &["d", "d'"]);
        let f = CpMorphism::new(
            &a,
            &b,
            Relation::new(
                &product_set(&a, &a),
                &product_set(&b, &b),
                [
                    quad("a", "a'", "b", "b"),
                    quad("a'", "a", "b", "b"),
                    quad("a", "a", "b", "b"),
                    quad("a'", "a'", "b", "b"),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        let g = embed_double(&Relation::new(&c, &d, [("c", "d'")]).unwrap());
        let t = cp_tensor(&f, &g);
        let e = |x: &str, y: &str| Element::pair(x.into(), y.into());
        assert!(t.holds_for(&e("a", "c"), &e("a'", "c"), &e("b", "d'"), &e("b", "d'")));
        assert!(!t.holds_for(&e("a", "c"), &e("a'", "c"), &e("b", "d"), &e("b", "d'")));
        assert_eq!(t.rel().len(), f.rel().len() * g.rel().len());
        assert!(is_cp(t.rel()).unwrap());
    }

    #[test]
    fn empty_sets_are_tolerated() {
        let e = FiniteSet::empty("E");
        let id = CpMorphism::identity(&e);
        assert!(is_cp(id.rel()).unwrap());
        assert!(id.rel().is_empty());
        assert_eq!(cp_tensor(&id, &id), CpMorphism::identity(&product_set(&e, &e)));
    }
}
