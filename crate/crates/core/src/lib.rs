//! Completely positive relations, the category of labelled graphs they are
//! isomorphic to, and exhaustive checks of the laws relating them.
//!
//! Composition in the library is applicative: `graph_compose(g, f)` is
//! "`f` then `g`". The `compose` subcommand takes its files in diagrammatic
//! order instead.

mod bits;
pub mod census;
pub mod cli;
pub mod error;
pub mod functors;
pub mod graphcat;
pub mod lawcheck;
pub mod relcore;

pub use error::{Error, Result};
