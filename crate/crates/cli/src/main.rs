use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pclie::expr::parse_expression;
use pclie::graph::parse_graph;
use pclie::gsb::{
    check_relations, enumerate_basis, generate_s, nilpotent_basis, normal_form_with,
    CompositionKind, ReduceOptions, DEFAULT_MAX_TERMS,
};
use pclie::oracle::{dims_by_clique_series, dims_by_linear_algebra};
use pclie::serial::{nword_to_json, polynomial_to_json};
use pclie::words::NWord;
use pclie::{CommutationGraph, LiePolynomial};
use serde_json::{json, Value};

/// Refuse requests whose word enumeration would exceed this many words.
const MAX_WORDS: f64 = 5e6;

#[derive(Parser)]
#[command(name = "pclie", version, about = "Partially commutative Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the basis words degree by degree.
    Basis {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the dimension of each homogeneous component.
    Dims {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = OracleKind::None)]
        oracle: OracleKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduce an expression to normal form.
    Nf {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two expressions are equal in the algebra.
    Eq {
        #[command(flatten)]
        target: Target,
        #[arg(long, num_args = 1, required = true)]
        expr: Vec<String>,
    },
    /// Verify that every composition of the relators reduces to zero.
    CheckGsb {
        #[command(flatten)]
        target: Target,
    },
    /// List the basis of the nilpotent quotient of class N.
    NilpotentBasis {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "class", value_name = "N")]
        class: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the defining relators.
    Relators {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct Target {
    /// Graph file in JSON.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    max_degree: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Linear,
    Series,
    None,
}

enum Failure {
    Verdict,
    Usage(String),
    Guard(String),
}

impl From<pclie::Error> for Failure {
    fn from(e: pclie::Error) -> Self {
        if e.is_resource_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<String, (String, Failure)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            print!("{out}");
            match failure {
                Failure::Verdict => ExitCode::from(1),
                Failure::Usage(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
                Failure::Guard(msg) => {
                    eprintln!("refused: {msg}");
                    ExitCode::from(3)
                }
            }
        }
    }
}

fn fail<T>(f: impl Into<Failure>) -> Result<T, (String, Failure)> {
    Err((String::new(), f.into()))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Basis { target, format } => {
            let g = load(&target)?;
            let basis = enumerate_basis(&g, target.max_degree).or_else(fail)?;
            Ok(render_basis(&g, &basis, format))
        }
        Command::NilpotentBasis { graph, class, format } => {
            let g = load_graph(&graph)?;
            guard_words(&g, class.saturating_sub(1))?;
            let basis = nilpotent_basis(&g, class).or_else(fail)?;
            Ok(render_basis(&g, &basis, format))
        }
        Command::Dims { target, oracle, format } => dims(&target, oracle, format),
        Command::Nf { target, expr, format } => {
            let g = load(&target)?;
            let s = generate_s(&g, target.max_degree).or_else(fail)?;
            let opts = reduce_options()?;
            let p = lower(&expr, &g, opts.max_terms)?;
            let nf = normal_form_with(&p, &s, opts).or_else(fail)?;
            Ok(match format {
                Format::Text => format!("{}\n", nf.display(g.alphabet())),
                Format::Json => format!("{}\n", polynomial_to_json(&nf, g.alphabet())),
            })
        }
        Command::Eq { target, expr } => {
            if expr.len() != 2 {
                return fail(Failure::Usage("`eq` takes exactly two --expr arguments".into()));
            }
            let g = load(&target)?;
            let s = generate_s(&g, target.max_degree).or_else(fail)?;
            let opts = reduce_options()?;
            let a = lower(&expr[0], &g, opts.max_terms)?;
            let b = lower(&expr[1], &g, opts.max_terms)?;
            let equal = normal_form_with(&(a - &b), &s, opts).or_else(fail)?.is_zero();
            Ok(format!("{}\n", if equal { "equal" } else { "different" }))
        }
        Command::CheckGsb { target } => check_gsb(&target),
        Command::Relators { target, format } => {
            let g = load(&target)?;
            let s = generate_s(&g, target.max_degree).or_else(fail)?;
            let trees: Vec<&NWord> = s.relators().iter().map(|r| &r.tree).collect();
            Ok(match format {
                Format::Text => trees.iter().fold(String::new(), |mut out, t| {
                    let _ = writeln!(out, "{}", t.display(g.alphabet()));
                    out
                }),
                Format::Json => {
                    let items: Vec<Value> =
                        trees.iter().map(|t| nword_to_json(t, g.alphabet())).collect();
                    format!("{}\n", Value::Array(items))
                }
            })
        }
    }
}

fn load_graph(path: &Path) -> Result<CommutationGraph, (String, Failure)> {
    let bytes = std::fs::read(path)
        .or_else(|e| fail(Failure::Usage(format!("{}: {e}", path.display()))))?;
    parse_graph(&bytes).or_else(fail)
}

fn load(target: &Target) -> Result<CommutationGraph, (String, Failure)> {
    let g = load_graph(&target.graph)?;
    guard_words(&g, target.max_degree)?;
    Ok(g)
}

// Roughly the number of Lyndon words of length at most `max_degree`.
fn guard_words(g: &CommutationGraph, max_degree: usize) -> Result<(), (String, Failure)> {
    let n = g.len() as f64;
    let estimate: f64 = (1..=max_degree).map(|d| n.powi(d as i32) / d as f64).sum();
    if estimate > MAX_WORDS {
        return fail(Failure::Guard(format!(
            "about {estimate:.0} words up to degree {max_degree} on {} letters",
            g.len()
        )));
    }
    Ok(())
}

fn reduce_options() -> Result<ReduceOptions, (String, Failure)> {
    let max_terms = match std::env::var("PCLIE_MAX_TERMS") {
        Ok(v) => match v.trim().parse() {
            Ok(n) => n,
            Err(_) => return fail(Failure::Usage(format!("PCLIE_MAX_TERMS: invalid value `{v}`"))),
        },
        Err(_) => DEFAULT_MAX_TERMS,
    };
    Ok(ReduceOptions { max_terms, ..Default::default() })
}

fn lower(text: &str, g: &CommutationGraph, max_terms: usize) -> Result<LiePolynomial, (String, Failure)> {
    let e = parse_expression(text, g.alphabet()).or_else(fail)?;
    e.lower_bounded(max_terms).or_else(fail)
}

fn render_basis(g: &CommutationGraph, basis: &[Vec<NWord>], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, words) in basis.iter().enumerate() {
                for t in words {
                    let _ = writeln!(out, "{}\t{}", i + 1, t.display(g.alphabet()));
                }
            }
            out
        }
        Format::Json => {
            let degrees: Vec<Value> = basis
                .iter()
                .enumerate()
                .map(|(i, words)| {
                    let words: Vec<Value> = words.iter().map(|t| nword_to_json(t, g.alphabet())).collect();
                    json!({ "degree": i + 1, "words": words })
                })
                .collect();
            format!("{}\n", Value::Array(degrees))
        }
    }
}

fn dims(target: &Target, oracle: OracleKind, format: Format) -> Outcome {
    let g = load(target)?;
    let d = target.max_degree;
    let engine: Vec<usize> = enumerate_basis(&g, d).or_else(fail)?.iter().map(Vec::len).collect();
    let reference: Option<(&str, Vec<usize>)> = match oracle {
        OracleKind::None => None,
        OracleKind::Linear => Some(("linear", dims_by_linear_algebra(&g, d).or_else(fail)?)),
        OracleKind::Series => {
            let dims = dims_by_clique_series(&g, d).or_else(fail)?;
            Some(("series", dims.into_iter().map(|x| x as usize).collect()))
        }
    };
    let agree = reference.as_ref().map(|(_, r)| *r == engine);
    let out = match format {
        Format::Text => {
            let mut out = String::from("degree\tbasis");
            if let Some((name, _)) = &reference {
                let _ = write!(out, "\t{name}");
            }
            out.push('\n');
            for (i, n) in engine.iter().enumerate() {
                let _ = write!(out, "{}\t{n}", i + 1);
                if let Some((_, r)) = &reference {
                    let _ = write!(out, "\t{}", r[i]);
                }
                out.push('\n');
            }
            if let Some(a) = agree {
                let _ = writeln!(out, "agree\t{a}");
            }
            out
        }
        Format::Json => {
            let mut obj = json!({ "basis": engine });
            if let Some((name, r)) = &reference {
                obj[*name] = json!(r);
                obj["agree"] = json!(agree);
            }
            format!("{obj}\n")
        }
    };
    if agree == Some(false) {
        Err((out, Failure::Verdict))
    } else {
        Ok(out)
    }
}

fn check_gsb(target: &Target) -> Outcome {
    let g = load(target)?;
    let s = generate_s(&g, target.max_degree).or_else(fail)?;
    let report = check_relations(&s).or_else(fail)?;
    let a = g.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "relators\t{}", report.relators);
    let _ = writeln!(out, "intersections\t{}", report.count(CompositionKind::Intersection));
    let _ = writeln!(out, "inclusions\t{}", report.count(CompositionKind::Inclusion));
    for c in report.failures() {
        let comp = &c.composition;
        let _ = writeln!(
            out,
            "nonzero\t{}\t{}\t{}",
            s.relators()[comp.f].tree.display(a),
            s.relators()[comp.g].tree.display(a),
            c.residue.display(a)
        );
    }
    let _ = writeln!(out, "verdict\t{}", if report.pass { "pass" } else { "fail" });
    if report.pass {
        Ok(out)
    } else {
        Err((out, Failure::Verdict))
    }
}
