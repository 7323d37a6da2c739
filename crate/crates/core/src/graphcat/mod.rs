//! The category 𝒢 of sets and labelled graphs between them.
//!
//! A morphism `A → B` is a simple undirected graph whose vertices are pairs in
//! `A × B`. Composition glues vertices and edges whose middle components
//! agree; [`graph_compose`] takes its arguments in applicative order.

mod graph;
mod ops;
mod structure;

pub use graph::Graph;
pub use ops::{
    embed_graph, graph_compose, graph_dagger, graph_identity, graph_join, graph_leq, graph_tensor, is_pure, State,
};
pub use structure::{coherence_graph, graph_cap, graph_cup, graph_symmetry};
