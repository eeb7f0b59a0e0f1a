//! Command-line front end: reads a problem file, runs one engine operation
//! and prints a JSON report.
//!
//! Exit codes: 0 computed, 1 internal failure or failing papercheck,
//! 2 unknown, 3 input error, 4 capability refused.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use liegcr::exactla::Matrix;
use liegcr::gcr::{self, Truth, Verdict};
use liegcr::io::{
    field_to_json, flag_to_json, group_to_json, matrices_to_json, matrix_to_json, subspace_to_json, Problem,
};
use liegcr::jordan::{is_jordan_closed, jordan_closure};
use liegcr::liealg::LieSubalgebra;
use liegcr::modrep::{IsoSearch, Module};
use liegcr::{oracle, papercheck, Error};

const JORDAN_SAMPLES: usize = 16;
const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Parser)]
#[command(name = "liegcr", version, about = "Complete reducibility of Lie subalgebras of gl_n, sl_n and pgl_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Overrides /options/seed (default 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides /options/budget for exhaustive searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Indents the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket closure of the generators.
    Closure {
        problem: PathBuf,
    },
    /// Associative hull (with identity) acting on k^n.
    Hull {
        problem: PathBuf,
    },
    /// Jordan closure of the generated subalgebra.
    JordanClosure {
        problem: PathBuf,
    },
    IsGcr {
        problem: PathBuf,
    },
    IsGir {
        problem: PathBuf,
    },
    IsGind {
        problem: PathBuf,
    },
    IsToral {
        problem: PathBuf,
    },
    /// Semisimplification along the radical series, or along /flags/0.
    Semisimplify {
        problem: PathBuf,
    },
    /// Two semisimplifications and a conjugacy witness between them.
    SsimpUnique {
        problem: PathBuf,
    },
    /// Jacobson radical and radical series of the natural module.
    Radical {
        problem: PathBuf,
    },
    SolvableDecomp {
        problem: PathBuf,
    },
    Char0Criterion {
        problem: PathBuf,
    },
    /// Instability of /tuple (or of the generators).
    Instability {
        problem: PathBuf,
    },
    PlongeablePgl2 {
        problem: PathBuf,
    },
    /// Brute-force parabolic enumeration over a small finite field.
    Oracle {
        problem: PathBuf,
    },
    /// Runs the built-in regression fixtures.
    Papercheck {
        /// Comma-separated fixture ids.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, hide = true)]
        mutate_radical: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Closure { .. } => "closure",
            Command::Hull { .. } => "hull",
            Command::JordanClosure { .. } => "jordan-closure",
            Command::IsGcr { .. } => "is-gcr",
            Command::IsGir { .. } => "is-gir",
            Command::IsGind { .. } => "is-gind",
            Command::IsToral { .. } => "is-toral",
            Command::Semisimplify { .. } => "semisimplify",
            Command::SsimpUnique { .. } => "ssimp-unique",
            Command::Radical { .. } => "radical",
            Command::SolvableDecomp { .. } => "solvable-decomp",
            Command::Char0Criterion { .. } => "char0-criterion",
            Command::Instability { .. } => "instability",
            Command::PlongeablePgl2 { .. } => "plongeable-pgl2",
            Command::Oracle { .. } => "oracle",
            Command::Papercheck { .. } => "papercheck",
        }
    }

    fn problem(&self) -> Option<&PathBuf> {
        match self {
            Command::Closure { problem }
            | Command::Hull { problem }
            | Command::JordanClosure { problem }
            | Command::IsGcr { problem }
            | Command::IsGir { problem }
            | Command::IsGind { problem }
            | Command::IsToral { problem }
            | Command::Semisimplify { problem }
            | Command::SsimpUnique { problem }
            | Command::Radical { problem }
            | Command::SolvableDecomp { problem }
            | Command::Char0Criterion { problem }
            | Command::Instability { problem }
            | Command::PlongeablePgl2 { problem }
            | Command::Oracle { problem } => Some(problem),
            Command::Papercheck { .. } => None,
        }
    }
}

/// A report plus the exit status it implies.
struct Outcome {
    body: Value,
    code: u8,
}

impl Outcome {
    fn computed(body: Value) -> Self {
        Outcome { body, code: 0 }
    }

    fn verdict(v: &Verdict) -> Self {
        let code = if v.value == Truth::Unknown { 2 } else { 0 };
        Outcome { body: v.to_json(), code }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => 1,
        Error::NoCertifiedPath(_) => 2,
        Error::Capability(_) | Error::Imperfect(_) | Error::RadicalUnavailable(_) | Error::SizeGuard(_) => 4,
        _ => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Syntax { .. } => "syntax",
        Error::Schema { .. } => "schema",
        Error::Internal(_) => "internal",
        Error::NoCertifiedPath(_) => "no-certified-path",
        Error::Capability(_) => "capability",
        Error::Imperfect(_) => "imperfect-field",
        Error::RadicalUnavailable(_) => "radical-unavailable",
        Error::SizeGuard(_) => "size-guard",
        _ => "invalid-input",
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({"kind": error_kind(e), "message": e.to_string()});
    if let Error::Schema { pointer, .. } = e {
        v["pointer"] = json!(pointer);
    }
    v
}

fn load(path: &PathBuf) -> liegcr::Result<Problem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Schema { pointer: String::new(), msg: format!("cannot read {}: {e}", path.display()) })?;
    Problem::parse(&text)
}

fn subalgebra(p: &Problem) -> liegcr::Result<LieSubalgebra> {
    LieSubalgebra::bracket_closure(&p.ctx, &p.generators)
}

fn algebra_json(h: &LieSubalgebra) -> Value {
    json!({"dim": h.dim(), "basis": matrices_to_json(&h.basis())})
}

fn run_problem(cmd: &Command, p: &Problem, seed: u64, budget: u64) -> liegcr::Result<Outcome> {
    let h = subalgebra(p)?;
    Ok(match cmd {
        Command::Closure { .. } => Outcome::computed(algebra_json(&h)),
        Command::Hull { .. } => {
            let m = Module::of_subalgebra(&h)?;
            Outcome::computed(json!({"dim": m.hull().dim(), "basis": matrices_to_json(&m.hull_basis())}))
        }
        Command::JordanClosure { .. } => {
            let jc = jordan_closure(&h, JORDAN_SAMPLES, seed)?;
            let mut body = algebra_json(&jc.algebra);
            body["method"] = json!(jc.method);
            body["rounds"] = json!(jc.rounds);
            body["samples"] = json!(jc.samples);
            body["input_jordan_closed"] = json!(is_jordan_closed(&h, JORDAN_SAMPLES, seed)?.is_certified());
            Outcome::computed(body)
        }
        Command::IsGcr { .. } => Outcome::verdict(&gcr::is_gcr(&h, seed)?),
        Command::IsGir { .. } => Outcome::verdict(&gcr::is_gir(&h, seed)?),
        Command::IsGind { .. } => Outcome::verdict(&gcr::is_gind(&h, seed)?),
        Command::IsToral { .. } => Outcome::verdict(&gcr::is_toral(&h)?),
        Command::Semisimplify { .. } => {
            let r = match p.flags.first() {
                Some(flag) => gcr::semisimplify_along(&h, flag, seed)?,
                None => gcr::semisimplify(&h, seed)?,
            };
            Outcome::computed(r.to_json())
        }
        Command::SsimpUnique { .. } => {
            let r1 = gcr::semisimplify(&h, seed)?;
            let flag = match p.flags.first() {
                Some(f) => f.clone(),
                None => Module::of_subalgebra(&h)?.random_admissible_flag(seed.wrapping_add(1))?,
            };
            let r2 = gcr::semisimplify_along(&h, &flag, seed)?;
            let search = gcr::ssimp_uniqueness_check(&h, &r1, &r2, seed)?;
            let (verdict, status, witness, code) = match &search {
                IsoSearch::Found(g) => (json!(true), "found", matrix_to_json(g), 0),
                IsoSearch::GlOnly(g) => (json!("unknown"), "gl-only", matrix_to_json(g), 2),
                IsoSearch::NotFound { exhaustive: true } => (json!(false), "not-found-exhaustive", Value::Null, 0),
                IsoSearch::NotFound { exhaustive: false } => (json!("unknown"), "not-found", Value::Null, 2),
            };
            let body = json!({
                "verdict": verdict,
                "search": status,
                "witness": witness,
                "first": r1.to_json(),
                "second": r2.to_json(),
            });
            Outcome { body, code }
        }
        Command::Radical { .. } => {
            let m = Module::of_subalgebra(&h)?;
            let s = m.structure()?;
            Outcome::computed(json!({
                "algorithm": format!("{:?}", s.algorithm),
                "hull_dim": s.hull.dim(),
                "radical": subspace_to_json(&s.radical),
                "radical_series": flag_to_json(&s.radical_series),
                "semisimple": s.radical.dim() == 0,
            }))
        }
        Command::SolvableDecomp { .. } => Outcome::computed(gcr::solvable_decomposition(&h, seed)?.to_json()),
        Command::Char0Criterion { .. } => Outcome::computed(gcr::char0_criterion(&h, seed)?.to_json()),
        Command::Instability { .. } => {
            let tuple: &[Matrix] = p.tuple.as_deref().unwrap_or(&p.generators);
            Outcome::verdict(&gcr::instability_test(&p.ctx, tuple, seed)?.verdict)
        }
        Command::PlongeablePgl2 { .. } => Outcome::verdict(&gcr::is_plongeable_pgl2(&h, seed)?),
        Command::Oracle { .. } => {
            let def = oracle::def_based_gcr(&h)?;
            let sigma = oracle::subcomplex(&h)?;
            let delta_cr = oracle::is_delta_cr(&sigma);
            let centre = if delta_cr { None } else { oracle::centre_search(&h, budget as u128)? };
            let radical = gcr::is_gcr(&h, seed)?;
            Outcome::computed(json!({
                "def_based_gcr": def.gcr,
                "parabolics_checked": def.parabolics_checked,
                "non_split_flag": def.witness.as_ref().map_or(Value::Null, flag_to_json),
                "delta_cr": delta_cr,
                "subcomplex": sigma.to_json(),
                "fixed_simplex": centre.as_ref().map_or(Value::Null, flag_to_json),
                "radical_route": radical.to_json()["verdict"].clone(),
                "agree": radical.as_bool() == Some(def.gcr) && def.gcr == delta_cr,
            }))
        }
        Command::Papercheck { .. } => unreachable!("papercheck takes no problem file"),
    })
}

fn execute(cli: &Cli) -> (Map<String, Value>, u8) {
    let mut head = Map::new();
    head.insert("command".into(), json!(cli.command.name()));
    let result = match &cli.command {
        Command::Papercheck { only, mutate_radical } => {
            let seed = cli.seed.unwrap_or(0);
            head.insert("seed".into(), json!(seed));
            let ids: Option<Vec<String>> = only
                .as_ref()
                .map(|s| s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect());
            let opts = papercheck::Options { seed, mutate_radical: *mutate_radical };
            papercheck::run(ids.as_deref(), &opts).map(|r| {
                let code = if r.pass() { 0 } else { 1 };
                Outcome { body: r.to_json(), code }
            })
        }
        cmd => {
            let path = cmd.problem().expect("problem-based command");
            match load(path) {
                Ok(p) => {
                    let seed = cli.seed.unwrap_or(p.seed);
                    let budget = cli.budget.or(p.budget).unwrap_or(DEFAULT_BUDGET);
                    head.insert("seed".into(), json!(seed));
                    head.insert("field".into(), field_to_json(p.ctx.field()));
                    head.insert("group".into(), group_to_json(&p.ctx));
                    head.insert("warnings".into(), json!(p.warnings));
                    for w in &p.warnings {
                        eprintln!("warning: {w}");
                    }
                    run_problem(cmd, &p, seed, budget)
                }
                Err(e) => {
                    head.insert("seed".into(), json!(cli.seed.unwrap_or(0)));
                    Err(e)
                }
            }
        }
    };
    match result {
        Ok(out) => {
            let mut body = head;
            match out.body {
                Value::Object(m) => body.extend(m),
                other => {
                    body.insert("result".into(), other);
                }
            }
            (body, out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            head.insert("error".into(), error_json(&e));
            (head, exit_code(&e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (body, code) = execute(&cli);
    let body = Value::Object(body);
    let text = if cli.pretty { serde_json::to_string_pretty(&body) } else { serde_json::to_string(&body) };
    let mut out = std::io::stdout().lock();
    // A closed pipe downstream is not our failure.
    let _ = writeln!(out, "{}", text.expect("JSON values serialize"));
    ExitCode::from(code)
}
