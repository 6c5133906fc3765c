//! Command-line surface: compute classes, push them forward, run
//! verification sweeps, emit text or JSON documents.
//!
//! Exit codes: 0 success (or verification passed), 1 verification found
//! counterexamples, 2 usage or input error.

use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::csm::{csm_cell, csm_cell_equiv, csm_variety, pushforward_gp};
use crate::error::Error;
use crate::output::{
    identities_section, positivity_section, terms_from_int, terms_from_poly, Metadata,
    OutputDocument, SCHEMA_VERSION,
};
use crate::rootsys::{LieType, RootSystem};
use crate::verify::{verify_identities, verify_positivity, SweepScope};
use crate::weyl::{parse_permutation, ParabolicSubset, WeylElement, Word};

const IDENTITY_SAMPLES: usize = 100;
const IDENTITY_SEED: u64 = 0x5eed_cafe;

#[derive(Debug, Parser)]
#[command(
    name = "schubert-csm",
    version,
    about = "Exact CSM classes of Schubert cells in flag manifolds G/B",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// CSM class of a Schubert cell, expanded in the Schubert basis
    Cell(ClassArgs),
    /// CSM class of a Schubert variety (sum of cell classes over the
    /// Bruhat interval)
    Variety(ClassArgs),
    /// Equivariant CSM class of a Schubert cell; coefficients are
    /// polynomials in the simple roots a1..ar
    Equivariant(ClassArgs),
    /// Push the CSM class of a cell forward to a partial flag manifold G/P
    Pushforward(PushforwardArgs),
    /// Run a verification sweep and exit nonzero on any violation
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// Lie type: one of A, B, C, D, E, F, G
    #[arg(long = "type", value_name = "LETTER")]
    lie_type: String,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct ElementArgs {
    /// Element as a comma-separated word of simple reflections, e.g. "1,2,1"
    #[arg(long, value_name = "WORD", conflicts_with = "perm")]
    word: Option<String>,
    /// Element as a one-line permutation, e.g. "4312" (type A only)
    #[arg(long, value_name = "PERM")]
    perm: Option<String>,
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    element: ElementArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct PushforwardArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    element: ElementArgs,
    /// Simple-reflection indices generating W_P, e.g. "1,3"; empty for P = B
    #[arg(long, value_name = "INDICES", default_value = "")]
    parabolic: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    /// All cell coefficients strictly positive in the sweep scope
    Positivity,
    /// Operator identities on random class vectors
    Identities,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    kind: VerifyKind,
    #[command(flatten)]
    system: SystemArgs,
    /// Bound the sweep to elements of length at most this value
    #[arg(long)]
    max_length: Option<u32>,
    /// Check equivariant coefficients (positivity sweeps)
    #[arg(long)]
    equivariant: bool,
    /// Worker threads for the sweep; affects wall time only, never output
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn build_system(args: &SystemArgs) -> Result<Arc<RootSystem>, Error> {
    let lie_type = LieType::from_str(&args.lie_type)?;
    RootSystem::build(lie_type, args.rank)
}

fn parse_cli_element(
    rs: &Arc<RootSystem>,
    args: &ElementArgs,
) -> Result<(WeylElement, String), Error> {
    match (&args.word, &args.perm) {
        (Some(word), None) => {
            let word = Word::from_str(word)?;
            let w = WeylElement::from_word(rs, &word.0)?;
            Ok((w, word.to_string()))
        }
        (None, Some(perm)) => {
            let w = parse_permutation(rs, perm)?;
            Ok((w, perm.trim().to_string()))
        }
        _ => Err(Error::ParseElement {
            input: String::new(),
            reason: "exactly one of --word or --perm is required".to_string(),
        }),
    }
}

fn parse_parabolic(rs: &Arc<RootSystem>, spec: &str) -> Result<ParabolicSubset, Error> {
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Ok(ParabolicSubset::empty());
    }
    let mut indices = Vec::new();
    for tok in trimmed.split(',') {
        let k: usize = tok.trim().parse().map_err(|_| Error::ParseElement {
            input: spec.to_string(),
            reason: format!("`{tok}` is not a parabolic index"),
        })?;
        indices.push(k);
    }
    ParabolicSubset::new(rs, indices)
}

fn emit(doc: &OutputDocument, format: Format) {
    match format {
        Format::Json => println!("{}", doc.to_json()),
        Format::Text => print!("{}", doc.to_text()),
    }
}

fn run_class_command(kind: &str, args: &ClassArgs) -> Result<i32, Error> {
    let rs = build_system(&args.system)?;
    let (w, element_desc) = parse_cli_element(&rs, &args.element)?;
    let mut metadata = Metadata::new(kind, &rs);
    metadata.element = Some(element_desc);
    let terms = match kind {
        "cell" => terms_from_int(&rs, &csm_cell(&rs, &w)),
        "variety" => terms_from_int(&rs, &csm_variety(&rs, &w)),
        "equivariant" => {
            metadata.equivariant = Some(true);
            terms_from_poly(&rs, &csm_cell_equiv(&rs, &w))
        }
        _ => unreachable!(),
    };
    let doc = OutputDocument {
        schema_version: SCHEMA_VERSION,
        metadata,
        terms: Some(terms),
        positivity: None,
        identities: None,
    };
    emit(&doc, args.format);
    Ok(0)
}

fn run_pushforward(args: &PushforwardArgs) -> Result<i32, Error> {
    let rs = build_system(&args.system)?;
    let (w, element_desc) = parse_cli_element(&rs, &args.element)?;
    let parabolic = parse_parabolic(&rs, &args.parabolic)?;
    let pushed = pushforward_gp(&csm_cell(&rs, &w), &parabolic);
    let mut metadata = Metadata::new("pushforward", &rs);
    metadata.element = Some(element_desc);
    metadata.parabolic = Some(parabolic.0.iter().copied().collect());
    let doc = OutputDocument {
        schema_version: SCHEMA_VERSION,
        metadata,
        terms: Some(terms_from_int(&rs, &pushed)),
        positivity: None,
        identities: None,
    };
    emit(&doc, args.format);
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Error> {
    let rs = build_system(&args.system)?;
    let mut metadata = Metadata::new("verify", &rs);
    metadata.max_length = args.max_length;
    match args.kind {
        VerifyKind::Positivity => {
            metadata.equivariant = Some(args.equivariant);
            let scope = match args.max_length {
                Some(l) => SweepScope::MaxLength(l),
                None => SweepScope::All,
            };
            let report = verify_positivity(&rs, scope, args.equivariant)?;
            eprintln!(
                "# positivity {}{}: {} cells, {} coefficients in {:.1?}",
                rs.lie_type(),
                rs.rank(),
                report.cells,
                report.coefficients,
                report.elapsed
            );
            let ok = report.all_positive();
            let doc = OutputDocument {
                schema_version: SCHEMA_VERSION,
                metadata,
                terms: None,
                positivity: Some(positivity_section(&rs, &report)),
                identities: None,
            };
            emit(&doc, args.format);
            Ok(if ok { 0 } else { 1 })
        }
        VerifyKind::Identities => {
            let report = verify_identities(&rs, IDENTITY_SAMPLES, IDENTITY_SEED);
            eprintln!(
                "# identities {}{}: {} checks x {} samples in {:.1?}",
                rs.lie_type(),
                rs.rank(),
                report.checks.len(),
                IDENTITY_SAMPLES,
                report.elapsed
            );
            let ok = report.all_hold();
            let doc = OutputDocument {
                schema_version: SCHEMA_VERSION,
                metadata,
                terms: None,
                positivity: None,
                identities: Some(identities_section(&report)),
            };
            emit(&doc, args.format);
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Cell(args) => run_class_command("cell", args),
        Command::Variety(args) => run_class_command("variety", args),
        Command::Equivariant(args) => run_class_command("equivariant", args),
        Command::Pushforward(args) => run_pushforward(args),
        Command::Verify(args) => {
            if let Some(jobs) = args.jobs {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build()
                    .expect("thread pool");
                pool.install(|| run_verify(args))
            } else {
                run_verify(args)
            }
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap uses exit code 2 for usage errors and 0 for help/version.
            err.exit();
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}
