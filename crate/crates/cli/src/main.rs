//! Batch verification driver for the torus-surgery construction:
//! coset-enumeration order certificates, abelian invariants, Betti and
//! intersection-form bookkeeping, and basic-class candidate enumeration,
//! over an (n, p) parameter grid or single inputs.

mod config;
mod files;
mod pipeline;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use fourfold_core::{
    build_presentation, classify_even_indefinite, enumerate_in_form, is_even, render_candidate,
    signature, surgered_model, todd_coxeter_with_log, z_model, ConstructionSpec, FormError,
};
use num_traits::ToPrimitive;

use config::{parse_range, Check, ConfigFile, OutputFormat, Overrides, VerificationConfig};

#[derive(Parser)]
#[command(
    name = "fourfold",
    version,
    about = "Verification toolkit for a family of torus-surgery 4-manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification grid and emit a report
    Verify(VerifyArgs),
    /// Print or export one fundamental-group presentation
    Presentation(PresentationArgs),
    /// Enumerate basic-class candidates for a model
    Sw(SwArgs),
    /// Classify an intersection-form matrix file
    Form(FormArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON config file; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Multiplicity range, e.g. `3` or `1..5`
    #[arg(long, value_parser = parse_range)]
    n: Option<(u64, u64)>,
    /// Order range, e.g. `1` or `1..6`
    #[arg(long, value_parser = parse_range)]
    p: Option<(u64, u64)>,
    /// Coset table capacity for enumerations
    #[arg(long)]
    max_cosets: Option<usize>,
    /// Checks to run (repeatable); defaults to all
    #[arg(long = "check", value_enum)]
    checks: Vec<Check>,
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Directory for GAP exports, one script per cell
    #[arg(long)]
    emit_gap: Option<String>,
    /// Treat inconclusive checks as acceptable for the exit status
    #[arg(long)]
    allow_inconclusive: bool,
    /// Verify a construction description file instead of the grid
    #[arg(long)]
    construction: Option<PathBuf>,
}

#[derive(Args)]
struct PresentationArgs {
    /// Surgery multiplicity n >= 1
    #[arg(long)]
    n: u64,
    /// Surgery order p >= 0
    #[arg(long)]
    p: u64,
    /// Output format: text (default) or gap
    #[arg(long, default_value = "text")]
    format: String,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also run coset enumeration, logging definitions and coincidences
    /// to stderr
    #[arg(long)]
    trace: bool,
    /// Coset table capacity for --trace
    #[arg(long)]
    max_cosets: Option<usize>,
}

#[derive(Args)]
struct SwArgs {
    /// Model file (JSON) with euler, signature, form, surfaces
    #[arg(long, conflicts_with = "builtin")]
    model: Option<PathBuf>,
    /// Built-in model: z, or m (with --n, --p)
    #[arg(long)]
    builtin: Option<String>,
    /// Multiplicity for --builtin m
    #[arg(long, default_value_t = 1)]
    n: u64,
    /// Order for --builtin m
    #[arg(long, default_value_t = 1)]
    p: u64,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct FormArgs {
    /// Matrix literal file: one `[a, b, ...]` row per line
    file: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Presentation(args) => cmd_presentation(args),
        Command::Sw(args) => cmd_sw(args),
        Command::Form(args) => cmd_form(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let file = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Some(
                serde_json::from_str::<ConfigFile>(&text)
                    .with_context(|| format!("parsing {}", path.display()))?,
            )
        }
        None => None,
    };
    let config: VerificationConfig = config::resolve(
        file,
        Overrides {
            n: args.n,
            p: args.p,
            max_cosets: args.max_cosets,
            checks: args.checks,
            format: args.format,
            emit_gap: args.emit_gap,
            allow_inconclusive: args.allow_inconclusive,
        },
    )?;

    let report = match &args.construction {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let spec: ConstructionSpec = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            pipeline::verify_construction(&spec, &config)?
        }
        None => pipeline::run_verification(&config)?,
    };

    match config.format {
        OutputFormat::Json => print!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.to_table()),
    }

    let acceptable = report.all_passed
        || (config.allow_inconclusive
            && report
                .rows
                .iter()
                .flat_map(|r| &r.checks)
                .all(|c| c.status != report::CheckStatus::Fail));
    Ok(if acceptable {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_presentation(args: PresentationArgs) -> Result<ExitCode> {
    let presentation = build_presentation(args.n, args.p)?;
    let rendered = match args.format.as_str() {
        "text" => presentation.to_text(),
        "gap" => presentation.to_gap_script(),
        other => anyhow::bail!("unknown presentation format {other:?} (text or gap)"),
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{rendered}"),
    }
    if args.trace {
        let limit = args
            .max_cosets
            .unwrap_or(fourfold_core::coset::DEFAULT_MAX_COSETS);
        let result = todd_coxeter_with_log(&presentation, limit, &mut |line| eprintln!("{line}"));
        eprintln!("enumeration: {:?}", result.outcome);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sw(args: SwArgs) -> Result<ExitCode> {
    let (euler, sig, form, surfaces, dual_labels, label) = match (&args.model, &args.builtin) {
        (Some(path), None) => {
            let model = files::ModelFile::load(path)?.resolve()?;
            (
                model.euler,
                model.signature,
                model.form,
                model.surfaces,
                model.dual_labels,
                path.display().to_string(),
            )
        }
        (None, Some(name)) => match name.as_str() {
            "z" => {
                let z = z_model();
                (
                    z.euler,
                    z.signature,
                    z.form,
                    z.surfaces,
                    z.dual_labels,
                    z.label,
                )
            }
            "m" => {
                let m = surgered_model(args.n, args.p)?;
                (
                    m.euler,
                    m.signature,
                    m.form,
                    m.surfaces,
                    m.dual_labels,
                    m.label,
                )
            }
            other => anyhow::bail!("unknown builtin model {other:?} (z or m)"),
        },
        _ => anyhow::bail!("pass exactly one of --model FILE or --builtin NAME"),
    };

    let candidates = enumerate_in_form(&form, euler, sig, &surfaces)?;

    if args.format == OutputFormat::Json {
        #[derive(serde::Serialize)]
        struct CandidateDto {
            coefficients: Vec<i64>,
            rendered: String,
            square: i64,
            dimension: i64,
        }
        #[derive(serde::Serialize)]
        struct SwDto {
            model: String,
            candidates: Vec<CandidateDto>,
        }
        let dto = SwDto {
            model: label,
            candidates: candidates
                .iter()
                .map(|c| {
                    let coefficients = c
                        .coefficients
                        .iter()
                        .map(|x| x.to_i64().context("coefficient exceeds i64"))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(CandidateDto {
                        coefficients,
                        rendered: render_candidate(&c.coefficients, &dual_labels),
                        square: c.square.to_i64().context("square exceeds i64")?,
                        dimension: c.dimension.to_i64().context("dimension exceeds i64")?,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        println!("{}", serde_json::to_string_pretty(&dto)?);
    } else {
        println!("model: {label}");
        println!("candidate basic classes: {}", candidates.len());
        for c in &candidates {
            println!(
                "  {:<12} square {:>3}  dimension {:>3}",
                render_candidate(&c.coefficients, &dual_labels),
                c.square,
                c.dimension
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_form(args: FormArgs) -> Result<ExitCode> {
    let m = files::load_matrix(&args.file)?;
    let symmetric = m.is_symmetric();
    let even = symmetric && is_even(&m);
    let sig = if symmetric { signature(&m).ok() } else { None };
    let class = if symmetric {
        classify_even_indefinite(&m)
    } else {
        Err(FormError::NotSymmetric)
    };
    if args.format == OutputFormat::Json {
        #[derive(serde::Serialize)]
        struct FormDto {
            rank: usize,
            symmetric: bool,
            even: bool,
            signature: Option<i64>,
            determinant: String,
            class: Option<String>,
            error: Option<String>,
        }
        let dto = FormDto {
            rank: m.rows(),
            symmetric,
            even,
            signature: sig,
            determinant: if m.is_square() {
                m.determinant().to_string()
            } else {
                "-".to_string()
            },
            class: class.as_ref().ok().map(|c| c.to_string()),
            error: class.as_ref().err().map(|e| e.to_string()),
        };
        println!("{}", serde_json::to_string_pretty(&dto)?);
    } else {
        println!("rank:        {}", m.rows());
        println!("symmetric:   {symmetric}");
        if symmetric {
            println!("even:        {even}");
            match sig {
                Some(s) => println!("signature:   {s}"),
                None => println!("signature:   degenerate"),
            }
            println!("determinant: {}", m.determinant());
        }
        match &class {
            Ok(c) => println!("class:       {c}"),
            Err(e) => println!("class:       not classified ({e})"),
        }
    }
    Ok(if class.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
