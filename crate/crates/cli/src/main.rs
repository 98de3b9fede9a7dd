mod render;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polycode::code::DEFAULT_ENUMERATION_BUDGET;
use polycode::duality::{duality_report, MinDistance};
use polycode::equivalence::DEFAULT_NODE_BUDGET;
use polycode::poly::{factorize_with_seed, monic_divisors, poly_order, DEFAULT_SEED};
use polycode::polycyclic::{family_correspondence, family_report, PolycyclicCode};
use polycode::reproduce::{ids, reproduce};
use polycode::scan::{
    binary_trinomial_scan, common_divisor_shape_scan, non_square_isodual_survey,
    prime_length_dual_containing_search, self_dual_classification_scan, square_isodual_scan,
    TrinomialFilter, SCHEMA,
};
use polycode::{FieldCtx, Polynomial};

#[derive(Parser)]
#[command(
    name = "polycode",
    version,
    about = "Polycyclic codes over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for scans (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized polynomial splitting. Results do not depend on it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Node budget for the equivalence search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
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
    /// Polynomial arithmetic.
    Poly {
        #[command(subcommand)]
        action: PolyAction,
    },
    /// A polycyclic code given by an associate polynomial and a generator.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Every code associated with a polynomial.
    Family(PolyArgs),
    /// The reversed code and its reciprocal generator.
    Reversed(CodeArgs),
    /// Exhaustive scans over trinomial families.
    Scan {
        #[command(subcommand)]
        action: ScanAction,
    },
    /// Re-run a worked example against its stored expected values.
    Reproduce {
        /// One of the ids printed by `reproduce list`, or `all`.
        id: String,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Field, e.g. GF(3), GF(4) or GF(2^3;modulus=t^3+t+1).
    #[arg(long)]
    field: FieldCtx,
    /// Polynomial in x, e.g. "x^10+x^8+1".
    poly: String,
}

#[derive(Subcommand)]
enum PolyAction {
    Factor(PolyArgs),
    Order(PolyArgs),
    Reciprocal(PolyArgs),
    Divisors(PolyArgs),
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    field: FieldCtx,
    /// Associate polynomial f.
    #[arg(long)]
    assoc: String,
    /// Monic generator g dividing f.
    #[arg(long)]
    gen: String,
}

#[derive(Subcommand)]
enum CodeAction {
    Build(CodeArgs),
    Dual(CodeArgs),
    Distance(CodeArgs),
    Report(CodeArgs),
}

#[derive(Subcommand)]
enum ScanAction {
    /// Binary trinomials have no self-orthogonal or nontrivially
    /// dual-containing codes.
    BinaryImpossibility {
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
    /// Self-dual codes in trinomial families and their shape.
    SelfDualClassify {
        #[arg(long)]
        field: FieldCtx,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Nontrivial dual-containing codes of prime length.
    PrimeCounterexample {
        #[arg(long)]
        field: FieldCtx,
        #[arg(long)]
        n: usize,
        /// Only binomial associates x^n - b.
        #[arg(long)]
        constacyclic_only: bool,
    },
    /// Pair each code of f with its reversal in the reciprocal family.
    FamilyCorrespondence {
        #[arg(long)]
        field: FieldCtx,
        #[arg(long)]
        f: String,
    },
    /// Codes generated by square roots of trinomials are isodual.
    SquareIsodual {
        #[arg(long)]
        field: FieldCtx,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Common divisors of x^(2k)+1 and a trinomial of degree 2k.
    CommonDivisorShape {
        #[arg(long)]
        field: FieldCtx,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
    },
    /// Binary isodual codes whose generator does not square to the associate.
    IsodualSurvey {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
}

/// A report plus whether it met the expected outcome.
struct Outcome {
    report: Value,
    ok: bool,
    /// Extra text shown after the report in text mode.
    note: Option<String>,
}

impl Outcome {
    fn ok(report: Value) -> Outcome {
        Outcome {
            report,
            ok: true,
            note: None,
        }
    }
}

fn parse_poly(text: &str, field: &FieldCtx) -> Result<Polynomial> {
    Polynomial::parse(text, field).with_context(|| format!("cannot parse polynomial {text:?}"))
}

fn build_code(args: &CodeArgs) -> Result<PolycyclicCode> {
    let f = parse_poly(&args.assoc, &args.field)?;
    let g = parse_poly(&args.gen, &args.field)?;
    Ok(PolycyclicCode::new(&f, &g)?)
}

fn poly_command(action: &PolyAction, seed: u64) -> Result<Outcome> {
    let (name, args) = match action {
        PolyAction::Factor(a) => ("factor", a),
        PolyAction::Order(a) => ("order", a),
        PolyAction::Reciprocal(a) => ("reciprocal", a),
        PolyAction::Divisors(a) => ("divisors", a),
    };
    let f = parse_poly(&args.poly, &args.field)?;
    let mut report = json!({ "field": args.field.to_string(), "f": f.to_string() });
    let extra = match name {
        "factor" => {
            let fac = factorize_with_seed(&f, seed)?;
            let factors: Vec<Value> = fac
                .factors
                .iter()
                .map(|(p, e)| json!({ "factor": p.to_string(), "multiplicity": e }))
                .collect();
            json!({ "unit": fac.unit.to_string(), "factors": factors })
        }
        "order" => json!({ "order": poly_order(&f)? }),
        "reciprocal" => json!({ "reciprocal": f.reciprocal()?.to_string() }),
        _ => {
            let divisors: Vec<String> = monic_divisors(&f)?.iter().map(|d| d.to_string()).collect();
            json!({ "count": divisors.len(), "divisors": divisors })
        }
    };
    merge(&mut report, extra);
    Ok(Outcome::ok(report))
}

fn code_command(action: &CodeAction, budget: u64) -> Result<Outcome> {
    let (name, args) = match action {
        CodeAction::Build(a) => ("build", a),
        CodeAction::Dual(a) => ("dual", a),
        CodeAction::Distance(a) => ("distance", a),
        CodeAction::Report(a) => ("report", a),
    };
    let code = build_code(args)?;
    let mut report = json!({
        "field": args.field.to_string(),
        "f": code.associate().to_string(),
        "g": code.generator().to_string(),
        "n": code.len(),
        "k": code.dimension(),
    });
    let extra = match name {
        "build" => json!({
            "generator_matrix": code.generator_matrix().to_string(),
            "basis": code.code().basis().to_string(),
        }),
        "dual" => {
            let dual = code.code().dual();
            let h = match code.parity_check_from_order() {
                Ok(h) => Value::String(h.to_string()),
                Err(e) => json!({ "unavailable": e.to_string() }),
            };
            json!({
                "dual_dimension": dual.dimension(),
                "dual_basis": dual.basis().to_string(),
                "parity_check_from_order": h,
            })
        }
        "distance" => json!({
            "min_distance": MinDistance::of(code.code(), DEFAULT_ENUMERATION_BUDGET)?,
        }),
        _ => serde_json::to_value(duality_report(&code, budget)?)?,
    };
    merge(&mut report, extra);
    Ok(Outcome::ok(report))
}

fn reversed_command(args: &CodeArgs) -> Result<Outcome> {
    let code = build_code(args)?;
    let rev = code.reversed()?;
    Ok(Outcome::ok(json!({
        "field": args.field.to_string(),
        "f": code.associate().to_string(),
        "g": code.generator().to_string(),
        "reversed_f": rev.associate().to_string(),
        "reversed_g": rev.generator().to_string(),
        "coordinate_reversal_verified": rev.code() == &code.code().reversed(),
    })))
}

fn scan_command(action: &ScanAction, budget: u64) -> Result<Outcome> {
    let report = match action {
        ScanAction::BinaryImpossibility { n_max } => binary_trinomial_scan(*n_max)?,
        ScanAction::SelfDualClassify { field, n_max } => {
            self_dual_classification_scan(field, *n_max)?
        }
        ScanAction::PrimeCounterexample {
            field,
            n,
            constacyclic_only,
        } => {
            let filter = if *constacyclic_only {
                TrinomialFilter::ConstacyclicOnly
            } else {
                TrinomialFilter::All
            };
            prime_length_dual_containing_search(field, *n, filter)?
        }
        ScanAction::FamilyCorrespondence { field, f } => {
            return correspondence_command(field, f, budget)
        }
        ScanAction::SquareIsodual { field, n_max } => square_isodual_scan(field, *n_max, budget)?,
        ScanAction::CommonDivisorShape { field, k_max } => {
            common_divisor_shape_scan(field, *k_max)?
        }
        ScanAction::IsodualSurvey { n_max } => non_square_isodual_survey(*n_max, budget)?,
    };
    Ok(Outcome {
        ok: report.passed(),
        report: serde_json::to_value(&report)?,
        note: None,
    })
}

fn correspondence_command(field: &FieldCtx, f: &str, budget: u64) -> Result<Outcome> {
    let f1 = parse_poly(f, field)?;
    let fc = family_correspondence(&f1, budget)?;
    let pairs: Vec<Value> = fc
        .pairs
        .iter()
        .map(|p| {
            json!({
                "g": p.source.generator().to_string(),
                "reversed_g": p.image.generator().to_string(),
                "image_index": p.image_index,
                "status": p.verdict.status.to_string(),
                "reversal_verified": p.reversal_verified,
                "monomial_witness": p.verdict.witness,
            })
        })
        .collect();
    Ok(Outcome {
        ok: fc.bijective && fc.all_equivalent,
        report: json!({
            "scan": "family-correspondence",
            "field": field.to_string(),
            "f1": fc.f1.to_string(),
            "f2": fc.f2.to_string(),
            "family2_size": fc.family2_size,
            "bijective": fc.bijective,
            "all_equivalent": fc.all_equivalent,
            "pairs": pairs,
        }),
        note: None,
    })
}

fn reproduce_command(id: &str, budget: u64) -> Result<Outcome> {
    if id == "list" {
        return Ok(Outcome::ok(json!({ "ids": ids() })));
    }
    let selected = if id == "all" {
        ids()
    } else {
        vec![id.to_string()]
    };
    let mut runs = Vec::new();
    let mut note = String::new();
    for id in &selected {
        let r = reproduce(id, budget)?;
        let mark = if r.passed { "PASS" } else { "FAIL" };
        note.push_str(&format!("{mark} {} {}\n{}", r.id, r.title, r.diff()));
        runs.push(r);
    }
    let ok = runs.iter().all(|r| r.passed);
    let report = if runs.len() == 1 {
        serde_json::to_value(&runs[0])?
    } else {
        json!({ "passed": ok, "runs": runs })
    };
    Ok(Outcome {
        report,
        ok,
        note: Some(note),
    })
}

fn merge(into: &mut Value, extra: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, extra) {
        a.extend(b);
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot configure worker pool")?;
    }
    match &cli.command {
        Command::Poly { action } => poly_command(action, cli.seed),
        Command::Code { action } => code_command(action, cli.budget),
        Command::Family(args) => {
            let f = parse_poly(&args.poly, &args.field)?;
            Ok(Outcome::ok(serde_json::to_value(family_report(
                &f,
                DEFAULT_ENUMERATION_BUDGET,
            )?)?))
        }
        Command::Reversed(args) => reversed_command(args),
        Command::Scan { action } => scan_command(action, cli.budget),
        Command::Reproduce { id } => reproduce_command(id, cli.budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(mut outcome) => {
            if let Value::Object(map) = &mut outcome.report {
                map.insert("schema".into(), Value::String(SCHEMA.into()));
            }
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("serializable")
                ),
                Format::Text => match &outcome.note {
                    Some(note) => print!("{note}"),
                    None => print!("{}", render::text(&outcome.report)),
                },
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
