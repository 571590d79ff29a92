//! Command line front end. [`run_command`] does all the work and returns the
//! exit code with both output streams, so it can be driven from tests.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{Analysis, AnalysisOptions};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exactmath::{ExpVec, MultiPoly};
use crate::io::{emit_graph, parse_input_file, Input};
use crate::resolution::{
    dead_end_data, en_alexander, resolve, ResGraph, ResolveOptions, DEFAULT_BUDGET,
};
use crate::semigroup::{minimal_generators_r1, SemigroupBox};
use crate::verify::{all_passed, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "plane-alexander",
    version,
    about = "Alexander polynomials of plane curve singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Curve file (or graph file where accepted).
    file: PathBuf,
    /// Truncation degree for single-branch series (default 2 delta + 2).
    #[arg(long)]
    bound: Option<i64>,
    /// Maximal number of blow-up generations.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Filtration window, e.g. "5,5".
    #[arg(long, value_parser = parse_window)]
    window: Option<ExpVec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Graph,
    Poincare,
    Fibers,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resolve a curve and print its dual graph.
    Resolve {
        #[command(flatten)]
        common: Common,
        /// Write the graph here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alexander polynomial of a curve or a resolution graph.
    Alexander {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Via::Graph)]
        via: Via,
    },
    /// Poincaré polynomial of the filtration.
    Poincare {
        #[command(flatten)]
        common: Common,
    },
    /// Euler characteristics of the projectivized fibers.
    Fibers {
        #[command(flatten)]
        common: Common,
    },
    /// Conductor, generators and members of the semigroup of values.
    Semigroup {
        #[command(flatten)]
        common: Common,
    },
    /// Cross checks between the three routes.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_window(s: &str) -> std::result::Result<ExpVec, String> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(ExpVec::new)
}

impl Common {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            budget: self.budget,
            bound: self.bound,
            window: self.window.clone(),
            ..Default::default()
        }
    }
}

enum Failure {
    Load(Error),
    Compute(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

fn load(common: &Common) -> std::result::Result<Input, Failure> {
    parse_input_file(&common.file).map_err(Failure::Load)
}

fn load_curve(common: &Common) -> std::result::Result<Curve, Failure> {
    match load(common)? {
        Input::Curve(c) => Ok(c),
        Input::Graph(_) => Err(Failure::Usage("this subcommand needs a curve file".into())),
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandOutput {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut stdout = String::new();
    match dispatch(&cli.command, &mut stdout) {
        Ok(code) => CommandOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Load(e @ Error::Parse(_)) => (EXIT_PARSE, e.to_string()),
                Failure::Load(e) => (EXIT_INVALID, e.to_string()),
                Failure::Compute(e) => (EXIT_FAILURE, e.to_string()),
                Failure::Usage(m) => (EXIT_USAGE, m),
            };
            CommandOutput {
                code,
                stdout,
                stderr: format!("error: {msg}\n"),
            }
        }
    }
}

fn dispatch(cmd: &Command, out: &mut String) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Resolve { common, out: path } => {
            let c = load_curve(common)?;
            let res = resolve(&c, &ResolveOptions::with_budget(common.budget))?;
            let text = emit_graph(&res.graph);
            match path {
                Some(p) => std::fs::write(p, text)
                    .map_err(|e| Failure::Compute(Error::Parse(format!("{}: {e}", p.display()))))?,
                None => out.push_str(&text),
            }
        }
        Command::Alexander { common, via } => {
            let poly = match (load(common)?, via) {
                (Input::Graph(g), Via::Graph) => graph_alexander(&g, common.bound)?,
                (Input::Graph(_), _) => {
                    return Err(Failure::Usage(
                        "--via poincare and --via fibers need a curve file".into(),
                    ))
                }
                (Input::Curve(c), via) => {
                    let a = Analysis::new(&c, &common.options())?;
                    match via {
                        Via::Graph => a.alexander()?,
                        Via::Poincare => a.poincare()?,
                        Via::Fibers => a.fiber_series()?,
                    }
                }
            };
            out.push_str(&poly.to_lines());
        }
        Command::Poincare { common } => {
            let a = Analysis::new(&load_curve(common)?, &common.options())?;
            out.push_str(&a.poincare()?.to_lines());
        }
        Command::Fibers { common } => {
            let a = Analysis::new(&load_curve(common)?, &common.options())?;
            for (v, chi) in a.fiber_table()? {
                out.push_str(&format!("{v}\t{chi}\n"));
            }
        }
        Command::Semigroup { common } => {
            let c = load_curve(common)?;
            let a = Analysis::new(&c, &common.options())?;
            let delta = a.conductor();
            out.push_str(&format!("conductor\t{delta}\n"));
            if c.r() == 1 {
                let gens: Vec<String> = minimal_generators_r1(&c)?
                    .iter()
                    .map(u64::to_string)
                    .collect();
                out.push_str(&format!("generators\t{}\n", gens.join(",")));
            }
            for v in SemigroupBox::scan(a.filtration(), delta)?.members() {
                out.push_str(&format!("member\t{v}\n"));
            }
        }
        Command::Verify { common } => {
            let results = verify(&load_curve(common)?, &common.options())?;
            for r in &results {
                out.push_str(&format!("{r}\n"));
            }
            return Ok(if all_passed(&results) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            });
        }
    }
    Ok(EXIT_OK)
}

/// Alexander polynomial of a graph file. A single-branch series is
/// truncated at `2 delta + 2`, with `delta` predicted by the graph.
fn graph_alexander(g: &ResGraph, bound: Option<i64>) -> Result<MultiPoly> {
    let bound = bound.unwrap_or_else(|| {
        dead_end_data(g)
            .and_then(|d| d.conductor())
            .map_or(0, |delta| 2 * delta + 2)
    });
    en_alexander(g, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        let out = run_command(["plane-alexander", "frobnicate", "x.json"]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = run_command(["plane-alexander"]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = run_command(["plane-alexander", "--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("alexander"));
        let out = run_command(["plane-alexander", "fibers", "--window", "a,b", "x.json"]);
        assert_eq!(out.code, EXIT_USAGE);
    }

    #[test]
    fn missing_file_is_a_parse_error() {
        let out = run_command(["plane-alexander", "alexander", "/nonexistent/curve.json"]);
        assert_eq!(out.code, EXIT_PARSE);
        assert!(out.stderr.contains("ParseError"));
    }

    #[test]
    fn window_values() {
        assert_eq!(parse_window("3, 4").unwrap(), ExpVec::new(vec![3, 4]));
        assert!(parse_window("3;4").is_err());
    }
}
