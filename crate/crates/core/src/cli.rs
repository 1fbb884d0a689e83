//! Command-line front end.
//!
//! Objects are read one per line; blank lines and lines starting with `#`
//! are skipped. A map may span several lines, in which case each record
//! starts at a line beginning with `n=`. Maps are written on one line.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bijection::{
    interval_to_map, interval_to_tree, map_to_interval, map_to_tree, map_to_tree_traced,
    tree_to_interval, tree_to_map, tree_to_map_traced, BijectionError, Trace,
};
use crate::dyck::NewInterval;
use crate::enumerate::{enum_degree_trees, enum_maps_oracle, enum_new_intervals, gf_table, Family};
use crate::planar_map::{HypermapCode, MapError, PlanarMap};
use crate::tree::DegreeTree;
use crate::verify::verify_suite;

#[derive(Debug, Parser)]
#[command(name = "tamari-atlas", version, about = "New Tamari intervals, degree trees and bipartite maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream every object of the given size.
    Enumerate {
        #[arg(long, value_enum)]
        family: Plural,
        #[arg(long)]
        size: usize,
        /// Append the statistic tuple after a tab.
        #[arg(long)]
        with_stats: bool,
    },
    /// Apply a bijection to each input object.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Print the statistic tuple of each input object.
    Stats {
        #[arg(long, value_enum)]
        family: Kind,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Dump generating-function coefficients.
    Gf {
        #[arg(long, value_enum)]
        family: GfFamily,
        #[arg(long)]
        max_size: usize,
    },
    /// Emit graphviz for each input map or tree.
    Render {
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long, value_enum)]
        family: Drawable,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run the map/tree bijection step by step.
    Trace {
        #[arg(long, value_enum)]
        family: Drawable,
        #[arg(long, default_value = "-")]
        input: String,
        /// Write one dot file per step into this directory.
        #[arg(long)]
        trace_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Plural {
    Intervals,
    Trees,
    Maps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Interval,
    Tree,
    Map,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GfFamily {
    Intervals,
    Maps,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Drawable {
    Map,
    Tree,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Input { line: usize, message: String },
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error("verification failed")]
    VerifyFailed,
}

enum Object {
    Interval(NewInterval),
    Tree(DegreeTree),
    Map(PlanarMap),
}

impl Object {
    fn render(&self) -> Result<String, CliError> {
        Ok(match self {
            Object::Interval(i) => i.to_string(),
            Object::Tree(t) => t.to_string(),
            Object::Map(m) => map_line(m)?,
        })
    }

    fn stats(&self) -> String {
        match self {
            Object::Interval(i) => i.stats().to_string(),
            Object::Tree(t) => t.stats().to_string(),
            Object::Map(m) => m.stats().to_string(),
        }
    }
}

fn map_line(map: &PlanarMap) -> Result<String, CliError> {
    let code = map.canonical_hypermap().map_err(BijectionError::from)?;
    Ok(code.to_line())
}

fn read_input(path: &str, stdin: &mut dyn BufRead) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

/// Splits input into `(first line number, record text)` pairs.
fn records(text: &str, kind: Kind) -> Vec<(usize, String)> {
    let lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out: Vec<(usize, String)> = Vec::new();
    for (no, line) in lines {
        match out.last_mut() {
            Some((_, rec)) if kind == Kind::Map && !line.starts_with("n=") => {
                rec.push('\n');
                rec.push_str(line);
            }
            _ => out.push((no, line.to_string())),
        }
    }
    out
}

fn parse_object(kind: Kind, text: &str) -> Result<Object, String> {
    match kind {
        Kind::Interval => text.parse().map(Object::Interval).map_err(|e: crate::dyck::DyckError| e.to_string()),
        Kind::Tree => {
            let t: DegreeTree = text.parse().map_err(|e: crate::tree::TreeError| e.to_string())?;
            t.validate().map_err(|e| e.to_string())?;
            Ok(Object::Tree(t))
        }
        Kind::Map => {
            let code: HypermapCode = text.parse().map_err(|e: MapError| e.to_string())?;
            code.try_to_map().map(Object::Map).map_err(|e| e.to_string())
        }
    }
}

fn read_objects(kind: Kind, input: &str, stdin: &mut dyn BufRead) -> Result<Vec<Object>, CliError> {
    let text = read_input(input, stdin)?;
    records(&text, kind)
        .into_iter()
        .map(|(line, rec)| parse_object(kind, &rec).map_err(|message| CliError::Input { line, message }))
        .collect()
}

fn convert(object: Object, to: Kind) -> Result<Object, BijectionError> {
    Ok(match (object, to) {
        (o @ Object::Interval(_), Kind::Interval) | (o @ Object::Tree(_), Kind::Tree) | (o @ Object::Map(_), Kind::Map) => o,
        (Object::Interval(i), Kind::Tree) => Object::Tree(interval_to_tree(&i)?),
        (Object::Interval(i), Kind::Map) => Object::Map(interval_to_map(&i)?),
        (Object::Tree(t), Kind::Interval) => Object::Interval(tree_to_interval(&t)?),
        (Object::Tree(t), Kind::Map) => Object::Map(tree_to_map(&t)?),
        (Object::Map(m), Kind::Interval) => Object::Interval(map_to_interval(&m)?),
        (Object::Map(m), Kind::Tree) => Object::Tree(map_to_tree(&m)?),
    })
}

fn drawable_kind(d: Drawable) -> Kind {
    match d {
        Drawable::Map => Kind::Map,
        Drawable::Tree => Kind::Tree,
    }
}

fn write_frames(dir: &Path, first: usize, trace: &Trace) -> Result<usize, CliError> {
    fs::create_dir_all(dir)?;
    for (i, step) in trace.steps.iter().enumerate() {
        let name = dir.join(format!("frame-{:03}.dot", first + i));
        fs::write(name, step.map.to_dot(step.current))?;
    }
    Ok(first + trace.steps.len())
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate { family, size, with_stats } => {
            let objects: Vec<Object> = match family {
                Plural::Intervals => enum_new_intervals(size).into_iter().map(Object::Interval).collect(),
                Plural::Trees => enum_degree_trees(size).into_iter().map(Object::Tree).collect(),
                Plural::Maps => enum_maps_oracle(size).into_iter().map(Object::Map).collect(),
            };
            for o in &objects {
                if with_stats {
                    writeln!(out, "{}\t{}", o.render()?, o.stats())?;
                } else {
                    writeln!(out, "{}", o.render()?)?;
                }
            }
        }
        Command::Convert { from, to, input } => {
            for o in read_objects(from, &input, stdin)? {
                writeln!(out, "{}", convert(o, to)?.render()?)?;
            }
        }
        Command::Stats { family, input } => {
            for o in read_objects(family, &input, stdin)? {
                writeln!(out, "{}", o.stats())?;
            }
        }
        Command::Verify { max_size } => {
            let report = verify_suite(max_size);
            write!(out, "{report}")?;
            if !report.all_passed() {
                return Err(CliError::VerifyFailed);
            }
        }
        Command::Gf { family, max_size } => {
            let family = match family {
                GfFamily::Intervals => Family::Intervals,
                GfFamily::Maps => Family::Maps,
            };
            write!(out, "{}", gf_table(family, max_size))?;
        }
        Command::Render { format: Format::Dot, family, input } => {
            for o in read_objects(drawable_kind(family), &input, stdin)? {
                match o {
                    Object::Map(m) => write!(out, "{}", m.to_dot())?,
                    Object::Tree(t) => write!(out, "{}", t.to_dot())?,
                    Object::Interval(_) => unreachable!("not drawable"),
                }
            }
        }
        Command::Trace { family, input, trace_dir } => {
            let mut frame = 0;
            for o in read_objects(drawable_kind(family), &input, stdin)? {
                let (result, trace) = match o {
                    Object::Map(m) => {
                        let (t, trace) = map_to_tree_traced(&m)?;
                        (t.to_string(), trace)
                    }
                    Object::Tree(t) => {
                        let (m, trace) = tree_to_map_traced(&t)?;
                        (map_line(&m)?, trace)
                    }
                    Object::Interval(_) => unreachable!("not drawable"),
                };
                for line in trace.lines() {
                    writeln!(out, "{line}")?;
                }
                writeln!(out, "result {result}")?;
                if let Some(dir) = &trace_dir {
                    frame = write_frames(dir, frame, &trace)?;
                }
            }
        }
    }
    Ok(())
}

/// Runs one invocation and returns the exit code: 0 on success, 1 on bad
/// arguments or input, 2 when verification fails.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, stdin, out) {
        Ok(()) => 0,
        Err(CliError::VerifyFailed) => {
            let _ = writeln!(err, "error: verification failed");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
