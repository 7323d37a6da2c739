//! Command-line surface: interchange documents, DOT export and subcommands.

pub mod commands;
pub mod documents;
pub mod dot;

pub use commands::{run, Cli, Command, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
pub use documents::{DocumentError, GraphDocument, RelationDocument, SCHEMA_VERSION};
pub use dot::export_dot;
