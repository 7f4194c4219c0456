//! `vcsharp`: JSON front end for vcsharp-core.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 property violation (`verify`) or internal defect, 2 input or
//! validation error, 3 resource budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use vcsharp_core::classify::{closure_enumerate, fmd_decompose, BaseDecl, StructExpr};
use vcsharp_core::ef::{ef_equiv_with, ef_rank_distinguish_with, EfBudget};
use vcsharp_core::kernel::{self, FinStruct};
use vcsharp_core::ordertype::{self, OtTerm};
use vcsharp_core::verify;
use vcsharp_core::{Error, IsoBudget, IsoEngine};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "vcsharp",
    version,
    about = "Structures, isomorphism, games, order types and model-count classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct IsoArgs {
    /// Largest structure the isomorphism engine accepts.
    #[arg(long, default_value_t = IsoBudget::default().max_size)]
    max_size: usize,
    /// Search-tree node limit per call.
    #[arg(long, default_value_t = IsoBudget::default().max_nodes)]
    max_nodes: usize,
    /// Tuple limit for orbit counting.
    #[arg(long, default_value_t = IsoBudget::default().max_tuples)]
    max_tuples: usize,
}

impl IsoArgs {
    fn engine(self) -> IsoEngine {
        IsoEngine::new(IsoBudget {
            max_size: self.max_size,
            max_nodes: self.max_nodes,
            max_tuples: self.max_tuples,
            ..IsoBudget::default()
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Operations on structure files.
    Struct {
        #[command(subcommand)]
        op: StructOp,
    },
    /// Find an isomorphism between two structures.
    Iso {
        a: String,
        b: String,
        #[command(flatten)]
        budget: IsoArgs,
    },
    /// Count automorphism orbits of k-tuples for k = 1..max-k.
    Orbits {
        a: String,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        #[command(flatten)]
        budget: IsoArgs,
    },
    /// Ehrenfeucht–Fraïssé game of a given length.
    Ef {
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        rounds: usize,
        #[arg(long, default_value_t = EfBudget::default().max_size)]
        max_size: usize,
        #[arg(long, default_value_t = EfBudget::default().max_rounds)]
        max_rounds: usize,
    },
    /// Finest-block monomorphic decomposition of a poset.
    Decompose { a: String },
    /// Order-type terms.
    Ot {
        #[command(subcommand)]
        op: OtOp,
    },
    /// Classify a structure expression.
    Classify { expr: String },
    /// Enumerate and classify the closure of a basis of declarations.
    Closure {
        basis: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum StructOp {
    /// Direct product of one or more structures.
    Product {
        #[arg(required = true)]
        parts: Vec<String>,
    },
    /// Disjoint union.
    Union {
        parts: Vec<String>,
    },
    /// Lexicographic sum of parts over an index structure.
    Lexsum {
        index: String,
        parts: Vec<String>,
    },
    Components {
        a: String,
    },
    Diameter {
        a: String,
    },
    Predicates {
        a: String,
    },
    /// Built-in families: chain, antichain, fence, fan, point.
    Gen {
        family: String,
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum OtOp {
    Rank {
        term: String,
    },
    Pred {
        term: String,
    },
    /// All class-C terms of rank at most n.
    Enum {
        n: usize,
    },
    /// A finite sample of the order with adjacency and endpoint data.
    Realize {
        term: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Whether the order has a k-jump: a maximal run of k + 1
    /// consecutive elements.
    Jump {
        term: String,
        #[arg(long)]
        k: usize,
    },
}

enum Failure {
    Core(Error),
    Violation(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Out = Result<Value, Failure>;

/// Inline JSON when the argument starts with `{` or `[`, otherwise a path.
fn load<T: DeserializeOwned>(arg: &str) -> Result<T, Error> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        let path = PathBuf::from(arg);
        std::fs::read_to_string(&path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{arg}: {e}")))
}

fn load_all(args: &[String]) -> Result<Vec<FinStruct>, Error> {
    args.iter().map(|a| load(a)).collect()
}

fn to_json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serialisable output")
}

fn structure_op(op: StructOp) -> Out {
    Ok(match op {
        StructOp::Product { parts } => to_json(kernel::product_of(&load_all(&parts)?)),
        StructOp::Union { parts } => to_json(kernel::union_of(&load_all(&parts)?)),
        StructOp::Lexsum { index, parts } => {
            to_json(kernel::lex_sum(&load(&index)?, &load_all(&parts)?)?)
        }
        StructOp::Components { a } => {
            let c = kernel::components(&load(&a)?);
            json!({ "blocks": c.partition.blocks(), "parts": c.parts })
        }
        StructOp::Diameter { a } => json!({ "diameter": kernel::diameter(&load(&a)?) }),
        StructOp::Predicates { a } => {
            let s: FinStruct = load(&a)?;
            json!({
                "antichain": kernel::is_antichain(&s),
                "antisymmetric": kernel::is_antisymmetric(&s),
                "connected": kernel::is_connected(&s),
                "linear": kernel::is_linear(&s),
                "poset": kernel::is_poset(&s),
                "reflexive": kernel::is_reflexive(&s),
                "transitive": kernel::is_transitive(&s),
                "tree": kernel::is_tree(&s),
            })
        }
        StructOp::Gen { family, n } => {
            let need = || n.ok_or_else(|| Error::Input(format!("{family} needs a size")));
            to_json(match family.as_str() {
                "chain" => kernel::chain(need()?),
                "antichain" => kernel::antichain(need()?),
                "fence" => kernel::fence(need()?),
                "fan" => kernel::fan(need()?),
                "point" => kernel::point(),
                _ => return Err(Error::Input(format!("unknown family {family}")).into()),
            })
        }
    })
}

fn term_op(op: OtOp) -> Out {
    Ok(match op {
        OtOp::Rank { term } => {
            let t: OtTerm = load(&term)?;
            json!({ "term": t.to_string(), "rank": ordertype::rank(&t) })
        }
        OtOp::Pred { term } => to_json(ordertype::pred(&load(&term)?)),
        OtOp::Enum { n } => {
            let terms = ordertype::enum_c(n)?;
            json!({
                "count": terms.len(),
                "terms": terms.iter().map(|t| json!({ "term": t, "text": t.to_string(), "rank": ordertype::rank(t) })).collect::<Vec<_>>(),
            })
        }
        OtOp::Realize { term, budget, seed } => {
            to_json(ordertype::realize(&load(&term)?, budget, seed)?)
        }
        OtOp::Jump { term, k } => json!({ "k": k, "jump": ordertype::has_jump(&load(&term)?, k) }),
    })
}

fn run(command: Command) -> Out {
    Ok(match command {
        Command::Struct { op } => return structure_op(op),
        Command::Ot { op } => return term_op(op),
        Command::Iso { a, b, budget } => {
            let (a, b): (FinStruct, FinStruct) = (load(&a)?, load(&b)?);
            let w = budget.engine().find_iso(&a, &b)?;
            json!({ "isomorphic": w.is_some(), "witness": w })
        }
        Command::Orbits { a, max_k, budget } => {
            to_json(budget.engine().orbit_profile(&load(&a)?, max_k)?)
        }
        Command::Ef {
            a,
            b,
            rounds,
            max_size,
            max_rounds,
        } => {
            let budget = EfBudget {
                max_size,
                max_rounds,
            };
            let (a, b): (FinStruct, FinStruct) = (load(&a)?, load(&b)?);
            json!({
                "rounds": rounds,
                "equivalent": ef_equiv_with(&budget, &a, &b, rounds)?,
                "distinguishing_rank": ef_rank_distinguish_with(&budget, &a, &b, rounds)?,
            })
        }
        Command::Decompose { a } => {
            let d = fmd_decompose(&load(&a)?)?;
            json!({ "blocks": d.partition.blocks(), "quotient": d.quotient, "shapes": d.shapes })
        }
        Command::Classify { expr } => {
            let e: StructExpr = load(&expr)?;
            to_json(vcsharp_core::classify(&e)?)
        }
        Command::Closure { basis, depth } => {
            let basis: Vec<BaseDecl> = load(&basis)?;
            let items = closure_enumerate(&basis, depth)?;
            let rows: Vec<Value> = items
                .into_iter()
                .map(|item| {
                    let mut row = json!({ "level": item.level, "expr": item.expr });
                    match item.outcome {
                        Ok(c) => row["class"] = to_json(c.class),
                        Err(e) => row["error"] = error_json(&e),
                    }
                    row
                })
                .collect();
            json!({ "depth": depth, "count": rows.len(), "items": rows })
        }
        Command::Verify { suite, seed } => {
            let reports = match suite {
                Some(name) => vec![verify::run_suite(&name, seed)?],
                None => verify::run_all(seed)?,
            };
            for r in &reports {
                eprintln!(
                    "{:<22} {:>7} cases {:>4} failures",
                    r.suite, r.cases, r.failures
                );
            }
            let failures: usize = reports.iter().map(|r| r.failures).sum();
            let out = if reports.len() == 1 {
                to_json(&reports[0])
            } else {
                json!({ "seed": seed, "failures": failures, "suites": reports })
            };
            if failures > 0 {
                return Err(Failure::Violation(out));
            }
            out
        }
    })
}

fn error_json(e: &Error) -> Value {
    let clause = match e {
        Error::Validation { clause, .. } => clause.as_str(),
        other => other.kind(),
    };
    json!({ "error": { "kind": e.kind(), "clause": clause, "message": e.to_string() } })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn emit(v: &Value) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer(&mut out, v).map(|_| writeln!(out));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            emit(
                &json!({ "error": { "kind": "usage", "clause": "usage", "message": e.to_string() } }),
            );
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(v)) => {
            emit(&v);
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            emit(&error_json(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}
