//! Exhaustive and sampled checks of the categorical laws.

mod laws;
pub mod report;
pub mod runner;

pub use laws::{
    check_category_laws, check_census, check_cp_axioms_closure, check_enriched_compact, check_graph_property,
    check_iso, check_purity_equivalence, demo_mixing, enriched_compact_reports, mixing_example, mixing_pairs,
    pure_state_census, run_all,
};
pub use report::{Counterexample, Instance, LawReport, Witness};
pub use runner::CheckConfig;
