use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use log::info;

use dimonoid::axioms::{self, StructureKind};
use dimonoid::catalog::{self, dimonoid_names, doppelsemigroup_names, semigroup_names};
use dimonoid::classify::{classify, render_report, solve_problem1, ReportFormat};
use dimonoid::enumerate::{enumerate, Limits};
use dimonoid::iso::{self, automorphisms, table_automorphisms};
use dimonoid::tables::{DiStructure, OpTable};

#[derive(Debug, Parser)]
#[command(name = "dimonoid", version, about = "Small dimonoids and doppelsemigroups")]
struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, global = true, env = "DIMONOID_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,

    /// Allow enumeration at order 5.
    #[arg(long, global = true)]
    allow_large: bool,

    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms for a table or a pair of tables.
    Check {
        file: PathBuf,
        /// Structure kind whose verdict sets the exit status.
        #[arg(long, default_value = "dimonoid")]
        kind: StructureKind,
    },
    /// List or build catalog structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Test two files for isomorphism.
    Iso { first: PathBuf, second: PathBuf },
    /// Automorphism group of a table or pair.
    Aut { file: PathBuf },
    /// Dual of a pair, or the transpose of a single table.
    Dual { file: PathBuf },
    /// Enumerate isomorphism classes as JSON lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "dimonoid")]
        kind: StructureKind,
    },
    /// Classification report for one order.
    Classify {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "dimonoid")]
        kind: StructureKind,
        #[arg(long, default_value = "markdown")]
        format: ReportFormat,
    },
    /// Noncommutative nonabelian nontrivial dimonoids of order 3.
    Problem1 {
        #[arg(long, default_value = "markdown")]
        format: ReportFormat,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    /// Print every named structure with its grammar string.
    List {
        #[arg(long)]
        kind: Option<StructureKind>,
    },
    /// Print the tables of a named structure.
    Build { name: String },
}

enum Loaded {
    Table(OpTable),
    Pair(DiStructure),
}

impl Loaded {
    fn read(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let blocks = text
            .trim()
            .lines()
            .any(|l| l.trim().is_empty());
        let parsed = if blocks {
            DiStructure::parse(&text).map(Loaded::Pair)
        } else {
            OpTable::parse(&text).map(Loaded::Table)
        };
        parsed.with_context(|| format!("in {}", path.display()))
    }

    fn into_pair(self) -> DiStructure {
        match self {
            Loaded::Table(t) => DiStructure::doubled(t),
            Loaded::Pair(d) => d,
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_pair(out: &mut String, d: &DiStructure) {
    out.push_str(&format!("{}\n\n{}\n", d.left(), d.right()));
}

/// Runs one command; `Ok(false)` is a negative verdict.
fn run(cli: &Cli, out: &mut String) -> anyhow::Result<bool> {
    let limits = Limits {
        allow_large: cli.allow_large,
        workers: usize::from(cli.workers),
    };
    match &cli.command {
        Command::Check { file, kind } => match Loaded::read(file)? {
            Loaded::Table(t) => {
                let assoc = axioms::associativity_failure(&t);
                out.push_str(&format!(
                    "semigroup: {}; commutative: {}\n",
                    yes(assoc.is_none()),
                    yes(t.is_commutative())
                ));
                if let Some(w) = assoc {
                    out.push_str(&format!("associativity fails at {w:?}\n"));
                }
                Ok(assoc.is_none())
            }
            Loaded::Pair(d) => {
                let dim = axioms::check_dimonoid(&d);
                let dop = axioms::check_doppelsemigroup(&d);
                let p = axioms::dimonoid_profile(&d);
                out.push_str(&format!(
                    "dimonoid: {}; abelian: {}; commutative: {}\n",
                    yes(dim.passes()),
                    yes(p.abelian),
                    yes(p.commutative)
                ));
                out.push_str(&format!(
                    "doppelsemigroup: {}; trivial: {}\n",
                    yes(dop.passes()),
                    yes(p.trivial)
                ));
                let verdict = axioms::check(&d, *kind);
                for a in verdict.failed() {
                    out.push_str(&format!(
                        "{a:?} fails at {:?}\n",
                        verdict.first_failure.get(a).expect("failed axiom has a witness")
                    ));
                }
                Ok(verdict.passes())
            }
        },
        Command::Catalog { action } => match action {
            CatalogAction::List { kind } => {
                let lists = [semigroup_names(), dimonoid_names(), doppelsemigroup_names()];
                for n in lists.into_iter().flatten() {
                    if kind.is_none_or(|k| k == n.kind) {
                        out.push_str(&format!("{}\t{}\t{}\n", n.kind, n.display, n.grammar));
                    }
                }
                Ok(true)
            }
            CatalogAction::Build { name } => {
                if name.contains('|') {
                    print_pair(out, &catalog::build_pair(name)?);
                } else {
                    match catalog::build(name) {
                        Ok(t) => out.push_str(&format!("{t}\n")),
                        Err(e) => match catalog::build_pair(name) {
                            Ok(d) => print_pair(out, &d),
                            Err(_) => return Err(e.into()),
                        },
                    }
                }
                Ok(true)
            }
        },
        Command::Iso { first, second } => {
            let witness = match (Loaded::read(first)?, Loaded::read(second)?) {
                (Loaded::Table(a), Loaded::Table(b)) => iso::tables_isomorphic(&a, &b),
                (a, b) => iso::are_isomorphic(&a.into_pair(), &b.into_pair()),
            };
            match &witness {
                Some(p) => out.push_str(&format!("isomorphic: yes; witness: {p}\n")),
                None => out.push_str("isomorphic: no\n"),
            }
            Ok(witness.is_some())
        }
        Command::Aut { file } => {
            let perms = match Loaded::read(file)? {
                Loaded::Table(t) => table_automorphisms(&t),
                Loaded::Pair(d) => automorphisms(&d),
            };
            let group = iso::identify_group(&perms)?;
            out.push_str(&format!("group: {group} (order {})\n", group.order));
            for p in perms {
                out.push_str(&format!("{p}\n"));
            }
            Ok(true)
        }
        Command::Dual { file } => {
            match Loaded::read(file)? {
                Loaded::Table(t) => out.push_str(&format!("{}\n", t.transpose())),
                Loaded::Pair(d) => print_pair(out, &catalog::dual_dimonoid(&d)),
            }
            Ok(true)
        }
        Command::Enumerate { order, kind } => {
            let result = enumerate(*order, *kind, limits)?;
            let summary = result.summary();
            info!(
                "order {} {}: {} labeled, {} classes",
                summary.order, summary.kind, summary.labeled_count, summary.class_count
            );
            match &cli.out {
                Some(path) => {
                    let file = fs::File::create(path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    result.write_jsonl(io::BufWriter::new(file))?;
                    out.push_str(&serde_json::to_string_pretty(&summary)?);
                    out.push('\n');
                }
                None => {
                    let mut buf = Vec::new();
                    result.write_jsonl(&mut buf)?;
                    out.push_str(&String::from_utf8(buf)?);
                }
            }
            Ok(true)
        }
        Command::Classify {
            order,
            kind,
            format,
        } => {
            let result = enumerate(*order, *kind, limits)?;
            let report = classify(&result);
            info!("order {order} {kind}: {} classes", report.summary.total);
            out.push_str(&render_report(&report, *format)?);
            Ok(true)
        }
        Command::Problem1 { format } => {
            let report = solve_problem1(limits)?;
            info!(
                "{} classes, {} of them unnamed",
                report.summary.total, report.summary.unnamed
            );
            if *format == ReportFormat::Markdown {
                out.push_str(&format!(
                    "Problem 1: {} noncommutative nonabelian nontrivial dimonoids of order 3\n\n",
                    report.summary.total
                ));
            }
            out.push_str(&render_report(&report, *format)?);
            Ok(true)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    let to_file = cli.out.as_ref().filter(|_| !matches!(cli.command, Command::Enumerate { .. }));
    match to_file {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(&cli, &mut out).and_then(|ok| emit(&cli, &out).map(|()| ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
