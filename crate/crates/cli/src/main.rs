//! `tracepoly`: exact computations with trace polynomial identities of
//! finite-dimensional algebras, one subcommand per library capability.
//!
//! Results go to standard output as a single JSON document; diagnostics go
//! to standard error. Exit codes: 0 success, 2 parse/validation error,
//! 3 invalid algebra spec, 4 computation budget exceeded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tracepoly_cli::parse::parse_polynomial;
use tracepoly_cli::spec::{build_algebra, parse_algebra_spec, parse_generator_file};
use tracepoly_core::algebra::TraceAlgebra;
use tracepoly_core::evalcodim::{
    codim_sequence, evaluate, find_separating_identity, is_identity, tideal_leq, Assignment,
    EvalError,
};
use tracepoly_core::freetrace::{
    enumerate_mt_basis, enumerate_pt_basis, FreeTraceError, TracePolynomial,
};
use tracepoly_core::ideals::{consequences_multilinear, GeneratorSet, IdealError};
use tracepoly_core::linalg::{Matrix, Subspace};
use tracepoly_core::rat::{format_rat, parse_rat, Rat};

#[derive(Parser)]
#[command(
    name = "tracepoly",
    version,
    about = "Exact computations with trace polynomial identities of finite-dimensional algebras"
)]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,

    /// Seed for sampled-parameter workflows; recorded in diagnostics
    #[arg(long, global = true, default_value_t = 20260810)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the basis monomials of MT_n (or PT_n with --pure)
    Basis {
        #[arg(long)]
        n: usize,
        /// Pure trace monomials only
        #[arg(long)]
        pure: bool,
    },
    /// Parse a polynomial and print its canonical form
    Canon {
        #[arg(long)]
        poly: String,
    },
    /// Evaluate a polynomial on an algebra at an explicit assignment
    Eval {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        /// JSON object mapping variables to basis labels or coordinate
        /// vectors, e.g. {"x1":"e11","x2":["0","1"]}
        #[arg(long)]
        assign: String,
    },
    /// Decide whether a polynomial is a trace identity of an algebra
    Check {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Trace codimension sequence c_1 … c_n
    Codim {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Dimension of the degree-n component of the T-ideal generated by a
    /// generator file
    IdealDim {
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Membership of a polynomial in a generated T-ideal component
    IdealMember {
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
    },
    /// Degree-n inclusion of identity ideals: Id(a) ∩ MT_n ⊆ Id(b) ∩ MT_n
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Find an identity of `a` with a witness showing it fails on `b`
    Separate {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// The space of symmetric functionals of an algebra
    TraceSpace {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// The Jacobson radical of an algebra
    Radical {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Degeneracy of the trace bilinear form
    Degenerate {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Check that a matrix is a trace-algebra homomorphism a → b
    HomCheck {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// JSON file with a dim(a) × dim(b) matrix of rational strings
        #[arg(long)]
        map: PathBuf,
    },
}

/// Failures carrying their process exit code.
enum AppError {
    /// Exit 2: parse or validation error.
    Usage(String),
    /// Exit 3: invalid algebra spec.
    Spec(String),
    /// Exit 4: degree cap or entry budget exceeded.
    Budget(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Spec(_) => 3,
            AppError::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Spec(m) | AppError::Budget(m) => m,
        }
    }
}

impl From<EvalError> for AppError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::BudgetExceeded { .. } => AppError::Budget(e.to_string()),
            EvalError::FreeTrace(FreeTraceError::DegreeCapExceeded { .. }) => {
                AppError::Budget(e.to_string())
            }
            other => AppError::Usage(other.to_string()),
        }
    }
}

impl From<IdealError> for AppError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::DegreeCapExceeded { .. } => AppError::Budget(e.to_string()),
            other => AppError::Usage(other.to_string()),
        }
    }
}

impl From<FreeTraceError> for AppError {
    fn from(e: FreeTraceError) -> Self {
        match e {
            FreeTraceError::DegreeCapExceeded { .. } => AppError::Budget(e.to_string()),
            other => AppError::Usage(other.to_string()),
        }
    }
}

fn load_algebra(path: &Path) -> Result<TraceAlgebra, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Spec(format!("cannot read {}: {e}", path.display())))?;
    let spec = parse_algebra_spec(&text)
        .map_err(|e| AppError::Spec(format!("{}: {e}", path.display())))?;
    build_algebra(&spec).map_err(|e| AppError::Spec(format!("{}: {e}", path.display())))
}

fn load_generators(path: &Path) -> Result<GeneratorSet, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let entries = parse_generator_file(&text)
        .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?;
    let mut items = Vec::with_capacity(entries.len());
    for entry in entries {
        let poly = parse_polynomial(&entry.polynomial)
            .map_err(|e| AppError::Usage(format!("generator {}: {e}", entry.name)))?;
        items.push((entry.name, poly));
    }
    GeneratorSet::new(items).map_err(AppError::from)
}

fn parse_poly_arg(text: &str) -> Result<TracePolynomial, AppError> {
    parse_polynomial(text).map_err(|e| AppError::Usage(format!("polynomial: {e}")))
}

fn parse_assignment(algebra: &TraceAlgebra, text: &str) -> Result<Assignment, AppError> {
    let raw: BTreeMap<String, Value> = serde_json::from_str(text)
        .map_err(|e| AppError::Usage(format!("assignment: malformed JSON: {e}")))?;
    let mut asg = Assignment::new();
    for (key, value) in raw {
        let var: usize = key
            .strip_prefix('x')
            .unwrap_or(&key)
            .parse()
            .map_err(|_| AppError::Usage(format!("assignment: bad variable name `{key}`")))?;
        let element = match value {
            Value::String(label) => {
                let idx = algebra.basis_index_of(&label).ok_or_else(|| {
                    AppError::Usage(format!("assignment: unknown basis label `{label}`"))
                })?;
                algebra.basis_element(idx)
            }
            Value::Array(entries) => {
                let mut coords = Vec::with_capacity(entries.len());
                for entry in entries {
                    let s = entry.as_str().ok_or_else(|| {
                        AppError::Usage(String::from(
                            "assignment: coordinates must be rational strings",
                        ))
                    })?;
                    coords.push(parse_rat(s).map_err(AppError::Usage)?);
                }
                if coords.len() != algebra.dim() {
                    return Err(AppError::Usage(format!(
                        "assignment: element for {key} has {} coordinates, algebra has {}",
                        coords.len(),
                        algebra.dim()
                    )));
                }
                coords
            }
            _ => {
                return Err(AppError::Usage(format!(
                    "assignment: value for {key} must be a label or a coordinate array"
                )))
            }
        };
        asg.insert(var, element);
    }
    Ok(asg)
}

fn load_map(path: &Path, rows: usize, cols: usize) -> Result<Matrix, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let raw: Vec<Vec<String>> = serde_json::from_str(&text)
        .map_err(|e| AppError::Usage(format!("{}: malformed JSON: {e}", path.display())))?;
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(AppError::Usage(format!(
            "map must be a {rows} × {cols} matrix"
        )));
    }
    let mut m = Matrix::zero(rows, cols);
    for (i, row) in raw.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            m.set(i, j, parse_rat(cell).map_err(AppError::Usage)?);
        }
    }
    Ok(m)
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn subspace_json(s: &Subspace) -> Value {
    let basis: Vec<Vec<String>> = s.basis().row_vecs().map(rat_strings).collect();
    json!({ "ambient_dim": s.ambient_dim(), "dim": s.dim(), "basis": basis })
}

fn run(cli: &Cli) -> Result<Value, AppError> {
    match &cli.command {
        Command::Basis { n, pure } => {
            let monomials = if *pure {
                enumerate_pt_basis(*n)?
            } else {
                enumerate_mt_basis(*n)?
            };
            let rendered: Vec<String> = monomials.iter().map(|m| m.to_string()).collect();
            Ok(json!({
                "n": n,
                "space": if *pure { "PT" } else { "MT" },
                "dim": rendered.len(),
                "monomials": rendered,
            }))
        }
        Command::Canon { poly } => {
            let p = parse_poly_arg(poly)?;
            Ok(json!({
                "canonical": p.render(),
                "degree": p.degree(),
                "terms": p.num_terms(),
            }))
        }
        Command::Eval {
            algebra,
            poly,
            assign,
        } => {
            let a = load_algebra(algebra)?;
            let p = parse_poly_arg(poly)?;
            let asg = parse_assignment(&a, assign)?;
            let value = evaluate(&p, &a, &asg)?;
            Ok(json!({ "value": rat_strings(&value) }))
        }
        Command::Check { algebra, poly } => {
            let a = load_algebra(algebra)?;
            let p = parse_poly_arg(poly)?;
            Ok(json!({ "is_identity": is_identity(&p, &a) }))
        }
        Command::Codim { algebra, n } => {
            let a = load_algebra(algebra)?;
            let sequence = codim_sequence(&a, *n)?;
            Ok(json!({ "sequence": sequence }))
        }
        Command::IdealDim { generators, n } => {
            let g = load_generators(generators)?;
            let component = consequences_multilinear(&g, *n)?;
            Ok(json!({
                "n": n,
                "dim": component.dim(),
                "quotient_dim": component.quotient_dimension(),
            }))
        }
        Command::IdealMember { generators, n, poly } => {
            let g = load_generators(generators)?;
            let p = parse_poly_arg(poly)?;
            let component = consequences_multilinear(&g, *n)?;
            Ok(json!({ "member": component.contains(&p)? }))
        }
        Command::Compare { a, b, n } => {
            let alg_a = load_algebra(a)?;
            let alg_b = load_algebra(b)?;
            Ok(json!({ "leq": tideal_leq(&alg_a, &alg_b, *n)? }))
        }
        Command::Separate { a, b, n } => {
            let alg_a = load_algebra(a)?;
            let alg_b = load_algebra(b)?;
            match find_separating_identity(&alg_a, &alg_b, *n)? {
                Some(witness) => {
                    let assignment: BTreeMap<String, String> = witness
                        .tuple
                        .iter()
                        .enumerate()
                        .map(|(i, &t)| {
                            (format!("x{}", i + 1), alg_b.basis_labels()[t].clone())
                        })
                        .collect();
                    Ok(json!({
                        "separated": true,
                        "witness": {
                            "polynomial": witness.polynomial.render(),
                            "assignment": assignment,
                            "value": rat_strings(&witness.value),
                        },
                    }))
                }
                None => Ok(json!({ "separated": false, "witness": null })),
            }
        }
        Command::TraceSpace { algebra } => {
            let a = load_algebra(algebra)?;
            Ok(subspace_json(&a.trace_space()))
        }
        Command::Radical { algebra } => {
            let a = load_algebra(algebra)?;
            Ok(subspace_json(a.jacobson_radical().subspace()))
        }
        Command::Degenerate { algebra } => {
            let a = load_algebra(algebra)?;
            Ok(json!({ "degenerate": a.is_trace_degenerate() }))
        }
        Command::HomCheck { a, b, map } => {
            let alg_a = load_algebra(a)?;
            let alg_b = load_algebra(b)?;
            let m = load_map(map, alg_a.dim(), alg_b.dim())?;
            let ok = tracepoly_core::algebra::check_trace_hom(&m, &alg_a, &alg_b)
                .map_err(|e| AppError::Usage(e.to_string()))?;
            Ok(json!({ "is_trace_hom": ok }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    eprintln!("seed: {}", cli.seed);
    match run(&cli) {
        Ok(value) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&value).expect("JSON serializes")
            } else {
                serde_json::to_string(&value).expect("JSON serializes")
            };
            println!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
