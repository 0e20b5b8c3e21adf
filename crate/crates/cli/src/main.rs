use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rcgraph::format::{self, parse};
use rcgraph::insertion::insert_word_traced;
use rcgraph::lr::{lr_coefficients_with, pieri_chains, LrOptions};
use rcgraph::rcgraph::word_permutation;
use rcgraph::tableau::enumerate_ssyt;
use rcgraph::{
    acceptance, inverse_insert, jacobi_trudi, verify_identity, BigPolynomial, Error, Partition,
    Permutation, Polynomial, RcGraph,
};

/// Rc-graphs, insertion and Schubert times Schur products.
///
/// JSON arguments are given inline, as `@path`, or as `-` for stdin.
#[derive(Parser)]
#[command(name = "rcg", version)]
struct Cli {
    /// Output format; `text` adds ASCII renders where an rc-graph is produced.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the rc-graphs of a permutation, or the tableaux of a shape.
    Enumerate {
        #[arg(long, conflicts_with = "partition")]
        perm: Option<String>,
        #[arg(long, requires = "n")]
        partition: Option<String>,
        #[arg(long)]
        n: Option<i64>,
        /// Use the ladder-move closure instead of backtracking.
        #[arg(long)]
        ladder: bool,
    },
    /// The left-justified rc-graph of a permutation.
    Top {
        #[arg(long)]
        perm: String,
    },
    /// Insert a word of letters into an rc-graph.
    Insert {
        #[arg(long)]
        graph: String,
        /// Letters separated by spaces or commas; a run of digits is read one
        /// letter per digit.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Undo one insertion, given the final transposition `(c, d)`.
    InverseInsert {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Reading word, permutation and monomial of an rc-graph.
    Word {
        #[arg(long)]
        graph: String,
    },
    /// Draw an rc-graph, or parse a drawing back with `--parse`.
    Render {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        parse: bool,
    },
    /// Schubert polynomial of a permutation.
    Schubert {
        #[arg(long)]
        perm: String,
    },
    /// Schur polynomial in `x_1..x_n`.
    Schur {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: i64,
    },
    /// Coefficients of `S_w · S_mu` from insertion counting.
    Lr {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        witnesses: bool,
        /// Skip the independence and counting checks.
        #[arg(long)]
        no_check: bool,
    },
    /// Transposition chains for `S_w · h_m`.
    Pieri {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: i64,
    },
    /// Jacobi-Trudi expansion of `S_mu`, evaluated in `x_1..x_n`.
    JacobiTrudi {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: i64,
    },
    /// Check `S_w · S_mu` against the insertion coefficients.
    Verify {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: i64,
    },
    /// Run the acceptance suite.
    Selftest,
}

enum Failure {
    Input(String),
    Class(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInClass { .. } => Failure::Class(e.to_string()),
            Error::Invariant(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::Class(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Class(m) | Failure::Verification(m) => m,
        }
    }
}

type Outcome = Result<Output, Failure>;

struct Output {
    json: Value,
    text: Option<String>,
    /// Printed, then reported as a verification failure.
    failed: bool,
}

impl Output {
    fn json(json: Value) -> Self {
        Output {
            json,
            text: None,
            failed: false,
        }
    }

    fn with_render(json: Value, graphs: &[&RcGraph]) -> Self {
        let text = graphs
            .iter()
            .map(|r| r.render())
            .collect::<Vec<_>>()
            .join("\n");
        Output {
            json,
            text: Some(text),
            failed: false,
        }
    }
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn json_arg(arg: &str) -> Result<Value, Failure> {
    Ok(parse(&read_arg(arg)?)?)
}

fn perm_arg(arg: &str) -> Result<Permutation, Failure> {
    Ok(format::permutation_from_json(&json_arg(arg)?)?)
}

fn class_perm_arg(arg: &str) -> Result<Permutation, Failure> {
    let w = perm_arg(arg)?;
    w.check_class()?;
    Ok(w)
}

fn graph_arg(arg: &str) -> Result<RcGraph, Failure> {
    let r = format::rcgraph_from_json(&json_arg(arg)?)?;
    r.validate()?;
    Ok(r)
}

fn partition_arg(arg: &str) -> Result<Partition, Failure> {
    Ok(format::partition_from_json(&json_arg(arg)?)?)
}

fn parse_word(text: &str) -> Result<Vec<u32>, Failure> {
    let text = text.trim();
    let bad = |t: &str| Failure::Input(format!("bad letter {t:?}"));
    if text.contains(|c: char| c == ',' || c.is_whitespace()) {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad(t)))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
            .collect()
    }
}

/// Computes in `i64` and falls back to big integers on overflow.
fn polynomial_json(
    small: impl FnOnce() -> rcgraph::Result<Polynomial>,
    big: impl FnOnce() -> rcgraph::Result<BigPolynomial>,
) -> Result<Value, Failure> {
    match small() {
        Ok(p) => Ok(format::polynomial_to_json(&p)),
        Err(Error::Overflow) => Ok(format::polynomial_to_json(&big()?)),
        Err(e) => Err(e.into()),
    }
}

fn graph_list(graphs: impl IntoIterator<Item = RcGraph>) -> Vec<RcGraph> {
    graphs.into_iter().collect()
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Enumerate {
            perm,
            partition,
            n,
            ladder,
        } => {
            if let Some(perm) = perm {
                let w = class_perm_arg(&perm)?;
                let graphs = graph_list(if ladder {
                    RcGraph::enumerate_by_ladder_moves(&w)?
                } else {
                    RcGraph::enumerate(&w)?
                });
                let json = json!({
                    "perm": format::permutation_to_json(&w),
                    "count": graphs.len(),
                    "rc_graphs": graphs.iter().map(format::rcgraph_to_json).collect::<Vec<_>>(),
                });
                Ok(Output::with_render(
                    json,
                    &graphs.iter().collect::<Vec<_>>(),
                ))
            } else if let (Some(partition), Some(n)) = (partition, n) {
                let mu = partition_arg(&partition)?;
                mu.check_rows(n)?;
                let tableaux = enumerate_ssyt(&mu, n);
                Ok(Output::json(json!({
                    "partition": format::partition_to_json(&mu),
                    "n": n,
                    "count": tableaux.len(),
                    "tableaux": tableaux.iter().map(format::tableau_to_json).collect::<Vec<_>>(),
                })))
            } else {
                Err(Failure::Input(
                    "enumerate needs --perm or --partition with --n".into(),
                ))
            }
        }
        Command::Top { perm } => {
            let w = class_perm_arg(&perm)?;
            let top = RcGraph::top(&w)?;
            Ok(Output::with_render(format::rcgraph_to_json(&top), &[&top]))
        }
        Command::Insert { graph, word } => {
            let r = graph_arg(&graph)?;
            let word = parse_word(&read_arg(&word)?)?;
            let (out, traces) = insert_word_traced(&r, &word)?;
            let json = json!({
                "result": format::rcgraph_to_json(&out),
                "trace": traces.iter().map(format::trace_to_json).collect::<Vec<_>>(),
            });
            Ok(Output::with_render(json, &[&out]))
        }
        Command::InverseInsert { graph, c, d } => {
            let r = graph_arg(&graph)?;
            let (before, letter) = inverse_insert(&r, c, d)?;
            let json = json!({ "result": format::rcgraph_to_json(&before), "letter": letter });
            Ok(Output::with_render(json, &[&before]))
        }
        Command::Word { graph } => {
            let r = graph_arg(&graph)?;
            let word = r.reading_word();
            let w = word_permutation(&word, r.n())?;
            Ok(Output::json(json!({
                "reading_word": word,
                "perm": format::permutation_to_json(&w),
                "monomial": r.monomial(),
            })))
        }
        Command::Render { graph, parse } => {
            let text = read_arg(&graph)?;
            let r = if parse {
                RcGraph::parse_render(&text)?
            } else {
                format::rcgraph_from_json(&format::parse(&text)?)?
            };
            Ok(Output {
                json: format::rcgraph_to_json(&r),
                text: Some(r.render()),
                failed: false,
            })
        }
        Command::Schubert { perm } => {
            let w = class_perm_arg(&perm)?;
            let n = w.n();
            polynomial_json(
                || Polynomial::schubert(&w, n),
                || BigPolynomial::schubert(&w, n),
            )
            .map(Output::json)
        }
        Command::Schur { partition, n } => {
            let mu = partition_arg(&partition)?;
            polynomial_json(
                || Polynomial::schur(&mu, n),
                || BigPolynomial::schur(&mu, n),
            )
            .map(Output::json)
        }
        Command::Lr {
            perm,
            partition,
            n,
            witnesses,
            no_check,
        } => {
            let w = class_perm_arg(&perm)?;
            let mu = partition_arg(&partition)?;
            let options = LrOptions {
                check: !no_check,
                keep_witnesses: witnesses,
            };
            let lr = lr_coefficients_with(&w, &mu, n, options)?;
            let failed = lr
                .checks
                .as_ref()
                .is_some_and(|c| !(c.u_independent && c.counting_identity));
            Ok(Output {
                json: format::lr_to_json(&lr),
                text: None,
                failed,
            })
        }
        Command::Pieri { perm, m, n } => {
            let w = class_perm_arg(&perm)?;
            let chains = pieri_chains(&w, m, n)?;
            let mut counts = std::collections::BTreeMap::new();
            for (u, _) in &chains {
                *counts.entry(u.clone()).or_insert(0u64) += 1;
            }
            let multiplicity_one = counts.values().all(|&c| c == 1);
            Ok(Output {
                json: json!({
                    "w": format::permutation_to_json(&w),
                    "m": m,
                    "n": n,
                    "coefficients": counts
                        .iter()
                        .map(|(u, c)| json!({ "u": format::permutation_to_json(u), "c": c }))
                        .collect::<Vec<_>>(),
                    "chains": chains
                        .iter()
                        .map(|(u, chain)| json!({ "u": format::permutation_to_json(u), "chain": chain }))
                        .collect::<Vec<_>>(),
                    "multiplicity_one": multiplicity_one,
                }),
                text: None,
                failed: !multiplicity_one,
            })
        }
        Command::JacobiTrudi { partition, n } => {
            let mu = partition_arg(&partition)?;
            let jt = jacobi_trudi(&mu);
            let value = polynomial_json(|| jt.evaluate(n), || jt.evaluate(n))?;
            let schur = polynomial_json(
                || Polynomial::schur(&mu, n),
                || BigPolynomial::schur(&mu, n),
            )?;
            let matches = value == schur;
            let mut json = format::jt_to_json(&jt);
            json["polynomial"] = value;
            json["matches_schur"] = json!(matches);
            Ok(Output {
                json,
                text: None,
                failed: !matches,
            })
        }
        Command::Verify { perm, partition, n } => {
            let w = class_perm_arg(&perm)?;
            let mu = partition_arg(&partition)?;
            let report = verify_identity(&w, &mu, n)?;
            Ok(Output {
                json: format::verify_to_json(&report),
                text: None,
                failed: !report.passed(),
            })
        }
        Command::Selftest => {
            let outcomes = acceptance::all();
            let lines: Vec<String> = outcomes.iter().map(|o| o.to_string()).collect();
            Ok(Output {
                json: Value::Null,
                text: Some(lines.join("\n")),
                failed: outcomes.iter().any(|o| !o.passed),
            })
        }
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe downstream is not an error
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let selftest = matches!(cli.command, Command::Selftest);
    match dispatch(cli.command) {
        Ok(out) => {
            match (&out.text, cli.format) {
                (Some(text), Format::Text) => emit(text.trim_end()),
                (Some(text), _) if selftest => emit(text),
                _ => emit(&out.json.to_string()),
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
