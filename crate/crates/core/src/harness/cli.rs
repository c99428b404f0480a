//! The `permact` command line. [`run`] does all the work and returns the text
//! to print, so the binary stays a few lines long.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use super::report::{report_emit, Format};
use super::suites::{verify, Suite, VerifyOptions};
use super::tables::{table, TableKind};
use crate::error::{Error, Result};
use crate::fs_action::{class_polys, orbit};
use crate::mahonian::{euler_mahonian, increasing_tree, siveh, veh_prime};
use crate::patterns::{avoids_231, count_13_2, count_2_31, latex_apq, refined_eulerian};
use crate::posets::LabeledPoset;
use crate::poly::gamma_expand;
use crate::stack_sort::{enumerate_r_sortable, sorting_passes, stack_sort, stack_sort_via_slides};
use crate::trees::{binary_tree, dyck_path, unordered_tree, veh};
use crate::word::{Boundary, Word};

#[derive(Debug, Parser)]
#[command(name = "permact", about = "Permutation actions, stack sorting and gamma-positivity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit of a word under the modified Foata-Strehl action.
    Orbit {
        word: Word,
        #[arg(long, default_value = "top")]
        boundary: Boundary,
    },
    /// Stack-sort a word.
    Sort {
        word: Word,
        #[arg(long, value_enum, default_value_t = SortMethod::Recursive)]
        method: SortMethod,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
    },
    /// Polynomials of an invariant class.
    Class {
        #[command(subcommand)]
        class: ClassCommand,
    },
    /// `A_n(p,q,t)` and its expansion.
    Apq {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ApqOut::Json)]
        out: ApqOut,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Tree attached to a word.
    Tree {
        word: Word,
        #[arg(long, value_enum, default_value_t = TreeKind::Binary)]
        kind: TreeKind,
    },
    /// Dyck path of a 231-avoiding permutation.
    Dyck { word: Word },
    /// Joint distributions of (des, MAJ) and (veh', SIVEH).
    Mahonian {
        #[arg(long)]
        n: usize,
    },
    /// Inspect a labeled poset given as JSON.
    Poset {
        file: PathBuf,
        #[arg(long, group = "mode")]
        orbits: bool,
        #[arg(long, group = "mode")]
        poly: bool,
        #[arg(long, group = "mode")]
        check: bool,
    },
    /// Statistics of a word.
    Stats { word: Word },
    /// Polynomial tables.
    Table {
        kind: TableKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClassCommand {
    /// The r-stack-sortable permutations of [n].
    Rsortable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = ClassPoly::Des)]
        poly: ClassPoly,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SortMethod {
    Recursive,
    Slides,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassPoly {
    Des,
    Peak,
    Gamma,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ApqOut {
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TreeKind {
    Binary,
    Unordered,
    Increasing,
}

/// What the binary should print and the process exit code.
#[derive(Debug)]
pub struct Output {
    pub stdout: Vec<u8>,
    /// Summary line for stderr, if any.
    pub note: Option<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: Vec<u8>) -> Self {
        Output { stdout, note: None, code: 0 }
    }
}

fn to_json(v: impl Serialize) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(&v).expect("serializes");
    s.push('\n');
    s.into_bytes()
}

fn line(s: impl std::fmt::Display) -> Vec<u8> {
    format!("{s}\n").into_bytes()
}

/// Parses arguments and runs the command.
pub fn run_args<I, T>(args: I) -> std::result::Result<Output, RunError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(RunError::Usage)?;
    run(cli.command).map_err(RunError::Failed)
}

#[derive(Debug)]
pub enum RunError {
    /// Bad arguments, or `--help` / `--version`.
    Usage(clap::Error),
    Failed(Error),
}

pub fn run(cmd: Command) -> Result<Output> {
    let out = match cmd {
        Command::Orbit { word, boundary } => to_json(orbit(&word, boundary)?),
        Command::Sort { word, method, iterate } => {
            let step = match method {
                SortMethod::Recursive => stack_sort,
                SortMethod::Slides => stack_sort_via_slides,
            };
            line((0..iterate).fold(word, |w, _| step(&w)))
        }
        Command::Class { class: ClassCommand::Rsortable { n, r, poly } } => {
            let words = enumerate_r_sortable(n, r)?;
            let c = class_polys(&words, Boundary::Top)?;
            match poly {
                ClassPoly::Des => line(c.descent),
                ClassPoly::Peak => line(c.peak),
                ClassPoly::Gamma => to_json(gamma_expand(&c.descent, n.saturating_sub(1) as u32)?),
            }
        }
        Command::Apq { n, out } => {
            let a = refined_eulerian(n)?;
            match out {
                ApqOut::Json => to_json(&a),
                ApqOut::Latex => line(latex_apq(n, &a.b)),
            }
        }
        Command::Verify(args) => return run_verify(args),
        Command::Tree { word, kind } => match kind {
            TreeKind::Binary => to_json(binary_tree(&word)),
            TreeKind::Unordered => to_json(unordered_tree(&word)),
            TreeKind::Increasing => to_json(increasing_tree(&word)),
        },
        Command::Dyck { word } => line(dyck_path(&word)?),
        Command::Mahonian { n } => {
            let e = euler_mahonian(n)?;
            let note = Some(format!("n={n}: {}", if e.equal { "pass" } else { "FAIL" }));
            let code = if e.equal { 0 } else { 1 };
            return Ok(Output { stdout: to_json(&e), note, code });
        }
        Command::Poset { file, orbits, poly, check } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::InvalidArgument(format!("{}: {e}", file.display())))?;
            let p = LabeledPoset::from_json(&text)?;
            if orbits {
                to_json(p.orbits()?)
            } else if poly {
                to_json(p.wp_polynomial()?)
            } else {
                // --check is also the default
                let _ = check;
                let g = p.sign_grading()?;
                to_json(json!({ "sign_grading": g, "canonical": p.is_canonical() }))
            }
        }
        Command::Stats { word } => to_json(stats(&word)),
        Command::Table { kind, n, format } => table(kind, n)?.emit(format),
    };
    Ok(Output::ok(out))
}

fn run_verify(args: VerifyArgs) -> Result<Output> {
    let max_n = args.max_n.unwrap_or(args.suite.default_max_n());
    let report = verify(args.suite, max_n, VerifyOptions { jobs: args.jobs })?;
    let bytes = report_emit(&report, args.format);
    let note = Some(format!("{} [{:.2?}]", report.summary(), report.elapsed));
    let stdout = match args.out {
        Some(path) => {
            std::fs::write(&path, bytes).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            Vec::new()
        }
        None => bytes,
    };
    Ok(Output { stdout, note, code: report.exit_code() })
}

fn stats(w: &Word) -> serde_json::Value {
    let c = w.class_counts(Boundary::Top);
    let mut v = json!({
        "word": w,
        "des": w.des(),
        "maj": w.maj(),
        "classes": c,
        "2-31": count_2_31(w),
        "13-2": count_13_2(w),
        "avoids_231": avoids_231(w),
    });
    if w.is_permutation() {
        v["stack_sorting_passes"] = json!(sorting_passes(w));
        v["veh"] = json!(veh(w));
        v["veh_prime"] = json!(veh_prime(w));
        v["siveh"] = json!(siveh(w));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stdout(args: &[&str]) -> String {
        let out = run_args(std::iter::once("permact").chain(args.iter().copied())).unwrap();
        assert_eq!(out.code, 0);
        String::from_utf8(out.stdout).unwrap()
    }

    #[test]
    fn sort_both_methods() {
        assert_eq!(stdout(&["sort", "573148926"]), "5 1 3 4 7 8 2 6 9\n");
        assert_eq!(stdout(&["sort", "573148926", "--method", "slides"]), "5 1 3 4 7 8 2 6 9\n");
        assert_eq!(stdout(&["sort", "231", "--iterate", "2"]), "1 2 3\n");
    }

    #[test]
    fn stats_and_dyck() {
        let v: serde_json::Value = serde_json::from_str(&stdout(&["stats", "652419738"])).unwrap();
        assert_eq!(v["veh"], 4);
        assert_eq!(stdout(&["dyck", "1"]), "ud\n");
    }

    #[test]
    fn class_and_apq() {
        assert_eq!(stdout(&["class", "rsortable", "--n", "3", "--r", "1"]), "1+3t+t^2\n");
        assert_eq!(stdout(&["apq", "--n", "3", "--out", "latex"]), "(1+t)^2 + (p+q)t\n");
    }

    #[test]
    fn errors_surface() {
        assert!(matches!(run_args(["permact", "verify", "nope"]), Err(RunError::Usage(_))));
        assert!(matches!(run_args(["permact", "dyck", "231"]), Err(RunError::Failed(Error::Not231Avoiding(_)))));
        assert!(matches!(run_args(["permact", "table", "apq", "--n", "3", "--format", "yaml"]), Err(RunError::Usage(_))));
    }
}
