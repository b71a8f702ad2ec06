//! The `altgt` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a failure or
//! an internal error occurs, 2 on malformed input or an unmet precondition.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alt_labels::{bratteli, dim_alt, AltLabel};
use crate::associator::assoc_table;
use crate::diagram::young_graph;
use crate::error::Error;
use crate::geodesics::{
    branch_count_r, class_members, geodesic_representatives_by, RepresentativeRule,
};
use crate::gt_basis::{gt_basis_with, normalize_basis};
use crate::model::{Conventions, FlippedColumnSign, SignlessAssociator, Standard};
use crate::partition::Partition;
use crate::tableau::enumerate_syt;
use crate::verify::{run_suite_with, Suite};
use crate::yor::{matrix_json, rep_matrix};

#[derive(Parser, Debug)]
#[command(
    name = "altgt",
    version,
    about = "Gelfand-Tsetlin bases for alternating groups in Young's orthogonal basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard tableaux of a shape
    Syt {
        partition: Partition,
        #[arg(long, value_enum, default_value_t = PlainFormat::Text)]
        format: PlainFormat,
    },
    /// Matrix of a simple transposition in Young's orthogonal form
    Yor {
        partition: Partition,
        #[arg(long = "gen")]
        generator: usize,
        #[arg(long, value_enum, default_value_t = RichFormat::Text)]
        format: RichFormat,
    },
    /// Associator coefficients of a self-conjugate shape
    Assoc {
        partition: Partition,
        #[arg(long, value_enum, default_value_t = PlainFormat::Text)]
        format: PlainFormat,
    },
    /// Branching diagram of the symmetric or alternating chain
    Bratteli {
        #[arg(long, value_enum, default_value_t = Chain::Alternating)]
        chain: Chain,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Geodesic representatives ending at a label, with class sizes
    Paths {
        label: AltLabel,
        #[arg(long, value_enum, default_value_t = Rule::Last)]
        rule: Rule,
        #[arg(long, value_enum, default_value_t = PlainFormat::Text)]
        format: PlainFormat,
    },
    /// Gelfand-Tsetlin basis of an alternating-group irreducible
    Gt {
        label: AltLabel,
        #[arg(long, value_enum, default_value_t = RichFormat::Text)]
        format: RichFormat,
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = Rule::Last)]
        rule: Rule,
    },
    /// Run the exact verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = PlainFormat::Text)]
        format: PlainFormat,
        /// Run the suites against a deliberately broken model
        #[arg(long, value_enum)]
        inject: Option<Fault>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fault {
    /// Same-column case of Young's orthogonal form returns +v_T
    ColumnSign,
    /// Associator coefficients ignore the permutation sign
    SignlessAssoc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PlainFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RichFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Chain {
    Symmetric,
    Alternating,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Last,
    First,
}

impl From<Rule> for RepresentativeRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Last => RepresentativeRule::ReverseLexLast,
            Rule::First => RepresentativeRule::ReverseLexFirst,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Yor,
    Assoc,
    Gt,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Yor => Suite::Yor,
            SuiteArg::Assoc => Suite::Assoc,
            SuiteArg::Gt => Suite::Gt,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Library(Error),
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{first}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Library(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Domain(_) | Error::Precondition(_) | Error::Parse { .. } => 2,
                Error::Unsupported(_) | Error::Internal(_) => 1,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn json_line(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), Failure> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json value")
    )?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Syt { partition, format } => {
            let tableaux = enumerate_syt(&partition);
            match format {
                PlainFormat::Text => {
                    for t in &tableaux {
                        writeln!(out, "{t}")?;
                    }
                }
                PlainFormat::Json => json_line(out, &serde_json::json!(tableaux))?,
            }
        }
        Command::Yor {
            partition,
            generator,
            format,
        } => {
            let m = rep_matrix(&partition, generator)?;
            let basis = enumerate_syt(&partition);
            match format {
                RichFormat::Text => {
                    let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
                    writeln!(out, "basis: {}", names.join(", "))?;
                    write!(out, "{m}")?;
                }
                RichFormat::Json => json_line(out, &matrix_json(&basis, &m))?,
                RichFormat::Latex => {
                    writeln!(out, "\\begin{{pmatrix}}")?;
                    let rows: Vec<String> = m
                        .rows()
                        .map(|row| {
                            row.iter()
                                .map(|s| s.to_latex())
                                .collect::<Vec<_>>()
                                .join(" & ")
                        })
                        .collect();
                    writeln!(out, "{}", rows.join(" \\\\\n"))?;
                    writeln!(out, "\\end{{pmatrix}}")?;
                }
            }
        }
        Command::Assoc { partition, format } => {
            let table = assoc_table(&partition)?;
            match format {
                PlainFormat::Text => {
                    let width = table
                        .iter()
                        .map(|e| e.tableau.to_string().len())
                        .max()
                        .unwrap_or(0);
                    for e in &table {
                        writeln!(
                            out,
                            "{:<width$}  {:>2}  {}",
                            e.tableau.to_string(),
                            e.coeff.as_str(),
                            e.conjugate
                        )?;
                    }
                }
                PlainFormat::Json => json_line(out, &serde_json::json!(table))?,
            }
        }
        Command::Bratteli {
            chain,
            max_n,
            format,
        } => {
            let diagram = match chain {
                Chain::Symmetric => young_graph(max_n)?,
                Chain::Alternating => bratteli(max_n)?,
            };
            match format {
                GraphFormat::Dot => write!(out, "{}", diagram.to_dot())?,
                GraphFormat::Json => json_line(out, &diagram.to_json())?,
            }
        }
        Command::Paths {
            label,
            rule,
            format,
        } => {
            let reps = geodesic_representatives_by(&label, rule.into())?;
            let rows: Vec<_> = reps
                .iter()
                .map(|p| (p, class_members(p).len(), branch_count_r(p)))
                .collect();
            match format {
                PlainFormat::Text => {
                    writeln!(
                        out,
                        "{label}: {} geodesics, dim {}",
                        reps.len(),
                        dim_alt(&label)
                    )?;
                    for (p, size, r) in &rows {
                        writeln!(out, "{p}  r={r} class={size}")?;
                    }
                }
                PlainFormat::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|(p, size, r)| {
                            serde_json::json!({"path": p, "r": r, "class_size": size})
                        })
                        .collect();
                    json_line(out, &serde_json::json!(items))?;
                }
            }
        }
        Command::Gt {
            label,
            format,
            normalize,
            rule,
        } => {
            let mut basis = gt_basis_with(&Standard, &label, rule.into())?;
            if normalize {
                basis = normalize_basis(basis)?;
            }
            match format {
                RichFormat::Text => {
                    for e in &basis {
                        writeln!(out, "{}: {}", e.path, e.vector)?;
                    }
                }
                RichFormat::Json => json_line(out, &serde_json::json!(basis))?,
                RichFormat::Latex => {
                    for e in &basis {
                        let path: Vec<String> = e.path.labels().iter().map(latex_label).collect();
                        writeln!(out, "u_{{({})}} = {}", path.join(","), e.vector.to_latex())?;
                    }
                }
            }
        }
        Command::Verify {
            suite,
            max_n,
            format,
            inject,
        } => {
            let model: &dyn Conventions = match inject {
                None => &Standard,
                Some(Fault::ColumnSign) => &FlippedColumnSign,
                Some(Fault::SignlessAssoc) => &SignlessAssociator,
            };
            let report = run_suite_with(model, suite.into(), max_n)?;
            match format {
                PlainFormat::Text => write!(out, "{}", report.to_text())?,
                PlainFormat::Json => json_line(out, &report.to_json())?,
            }
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn latex_label(a: &AltLabel) -> String {
    let parts: Vec<String> = a
        .partition()
        .parts()
        .iter()
        .map(ToString::to_string)
        .collect();
    let base = format!("({})", parts.join(","));
    match a.sign() {
        Some(s) => format!("{base}^{{{}}}", s.as_str()),
        None => base,
    }
}
