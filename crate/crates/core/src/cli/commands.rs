//! Subcommand dispatch.
//!
//! Exit codes: 0 success or affirmative verdict, 1 failed law or negative
//! verdict, 2 usage, parse or shape error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{census_table, enumerate_positive_relations, enumerate_state_graphs, MAX_BRUTE_FORCE_BOUND};
use crate::cli::documents::{DocumentError, GraphDocument, RelationDocument};
use crate::cli::dot::export_dot;
use crate::graphcat::{embed_graph, graph_compose, graph_dagger, graph_join, graph_tensor, Graph};
use crate::lawcheck::{run_all, CheckConfig};
use crate::relcore::FiniteSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cprel", version, about = "Completely positive relations and their graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `n 2^n count` for n = 0..=N_MAX.
    Census {
        n_max: u64,
        /// Also count positive relations by brute force (N_MAX <= 5).
        #[arg(long)]
        brute_force: bool,
    },
    /// Print every state graph of an n-element set, one document per line.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compose two graphs in diagrammatic order: FIRST, then SECOND.
    Compose { first: PathBuf, second: PathBuf },
    /// Tensor product of two graphs.
    Tensor { left: PathBuf, right: PathBuf },
    /// Swap the components of every vertex.
    Dagger { file: PathBuf },
    /// Union of graphs from the same homset.
    Join {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print `pure` (exit 0) if the graph is complete, otherwise `mixed` (exit 1).
    Pure { file: PathBuf },
    /// The complete graph on the pairs of a relation.
    Embed { file: PathBuf },
    /// Run every law suite and print one line per law.
    Laws {
        #[arg(long, default_value_t = 2)]
        size_bound: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print reports as JSON lines.
        #[arg(long)]
        json: bool,
    },
    /// Graphviz DOT for a graph document.
    ExportDot { file: PathBuf },
}

/// Reads files, with `-` meaning standard input.
pub struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl<'a> Inputs<'a> {
    pub fn new(stdin: &'a mut dyn Read) -> Self {
        Inputs { stdin, stdin_used: false }
    }

    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            if self.stdin_used {
                return Err(Failure::usage("standard input can only be read once"));
            }
            self.stdin_used = true;
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(|e| Failure::usage(format!("standard input: {e}")))?;
            return Ok(text);
        }
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<Graph, Failure> {
        let text = self.read(path)?;
        GraphDocument::parse(&text).map_err(|e| Failure::document(path, e))
    }
}

/// An error that ends a command with a non-zero exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn document(path: &Path, e: DocumentError) -> Self {
        Failure::usage(format!("{}: {e}", path.display()))
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("write failed: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, &mut Inputs::new(stdin), out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, inputs: &mut Inputs<'_>, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Census { n_max, brute_force } => cmd_census(n_max, brute_force, out),
        Command::Enumerate { n, format } => cmd_enumerate(n, format, out),
        Command::Compose { first, second } => {
            let g1 = inputs.graph(&first)?;
            let g2 = inputs.graph(&second)?;
            write_graph(out, &graph_compose(&g2, &g1)?)
        }
        Command::Tensor { left, right } => {
            let f = inputs.graph(&left)?;
            let g = inputs.graph(&right)?;
            write_graph(out, &graph_tensor(&f, &g))
        }
        Command::Dagger { file } => write_graph(out, &graph_dagger(&inputs.graph(&file)?)),
        Command::Join { files } => {
            let graphs = files.iter().map(|f| inputs.graph(f)).collect::<Result<Vec<_>, _>>()?;
            let first = &graphs[0];
            write_graph(out, &graph_join(first.dom(), first.cod(), &graphs)?)
        }
        Command::Pure { file } => {
            let g = inputs.graph(&file)?;
            let pure = g.is_complete();
            writeln!(out, "{}", if pure { "pure" } else { "mixed" })?;
            Ok(if pure { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Embed { file } => {
            let text = inputs.read(&file)?;
            let r = RelationDocument::parse(&text).map_err(|e| Failure::document(&file, e))?;
            write_graph(out, &embed_graph(&r))
        }
        Command::Laws { size_bound, seed, json } => cmd_laws(size_bound, seed, json, out),
        Command::ExportDot { file } => {
            out.write_all(export_dot(&inputs.graph(&file)?).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn write_graph(out: &mut dyn Write, g: &Graph) -> Result<i32, Failure> {
    out.write_all(GraphDocument::render(g).as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_census(n_max: u64, brute_force: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    if brute_force && n_max > MAX_BRUTE_FORCE_BOUND as u64 {
        return Err(Failure::usage(format!("--brute-force supports N_MAX up to {MAX_BRUTE_FORCE_BOUND}, got {n_max}")));
    }
    let mut all_match = true;
    for row in census_table(n_max) {
        write!(out, "{} {} {}", row.n, row.rel_states, row.cp_rel_states)?;
        if brute_force {
            let x = FiniteSet::letters("X", row.n as usize);
            let brute = enumerate_positive_relations(&x, MAX_BRUTE_FORCE_BOUND)?.count();
            let ok = row.cp_rel_states == brute.into();
            all_match &= ok;
            write!(out, " {brute} {}", if ok { "ok" } else { "MISMATCH" })?;
        }
        writeln!(out)?;
    }
    Ok(if all_match { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_enumerate(n: usize, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let x = FiniteSet::letters("X", n);
    for g in enumerate_state_graphs(&x)? {
        match format {
            Format::Json => writeln!(out, "{}", GraphDocument::render_line(&g))?,
            Format::Dot => out.write_all(export_dot(&g).as_bytes())?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_laws(size_bound: usize, seed: u64, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = CheckConfig { size_bound, seed, ..CheckConfig::default() };
    let mut all_passed = true;
    for report in run_all(&cfg) {
        all_passed &= report.passed;
        if json {
            let line = serde_json::to_string(&report).expect("reports serialize");
            writeln!(out, "{line}")?;
        } else {
            writeln!(out, "{report}")?;
        }
        out.flush()?;
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_NEGATIVE })
}
