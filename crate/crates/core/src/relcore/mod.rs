//! Finite sets, binary relations and the completely positive relations of CP(Rel).
//!
//! Relations compose in applicative order: `compose_rel(s, r)` is `s ∘ r`.

mod cp;
mod relation;
mod set;

pub use cp::{
    bar, bar_inverse, cp_compose, cp_dagger, cp_shape, cp_tensor, embed_double, is_cp, is_cp_via_bar, split_product,
    CpMorphism,
};
pub use relation::{compose_rel, converse, is_positive, positive_witness, tensor_rel, PositiveWitness, Relation};
pub use set::{product_set, Element, FiniteSet, Relabelling};
