//! Command-line front end: construct reversible codes, emit DNA codes, check
//! constraint sets, and verify the bundled reference dataset.
//!
//! Exit codes: 0 success, 1 invalid input, 2 assertion mismatch (`verify`,
//! or `check --strict` with violations).

use std::error::Error;

type AnyError = Box<dyn Error + Send + Sync>;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use revcodes::dna::{
    check_constraints, parse_word_lines, reversible_complement_dna_code, reversible_dna_code,
    ConstraintVerdict, DnaBasis, DnaWord, MapCode, DEFAULT_ENUMERATION_CAP,
};
use revcodes::error::DnaError;
use revcodes::field::{Field, FieldRef};
use revcodes::golden;
use revcodes::wordops::{build_generating_set, Codeword, SetVariant};
use revcodes::LinearCode;

#[derive(Parser)]
#[command(
    name = "revcodes",
    version,
    about = "Reversible codes over small finite fields and their DNA images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Span a shift family of a quasi-reciprocal vector and analyze it
    Construct(ConstructArgs),
    /// Build a reversible (or reversible-complement) DNA code over GF(4^k)
    Dna(DnaArgs),
    /// Check a DNA word file against the four classic constraints
    Check(CheckArgs),
    /// Recompute the bundled reference dataset
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["coeffs", "file"])))]
struct ConstructArgs {
    /// Field order (2, 3, 4, 5, 8, 9, 16, 25, 27, 64, or 4^k up to 4096)
    #[arg(long)]
    q: usize,
    /// Modulus override: base-field coefficient indices, low power first
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u16>>,
    /// Quasi-reciprocity offset m
    #[arg(long)]
    m: usize,
    /// Shift depth t
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Generating family: S, E, E1, E2 or E3
    #[arg(long, default_value = "S")]
    variant: String,
    /// Comma-separated coefficient tokens (0, 1, w, w^e)
    #[arg(long)]
    coeffs: Option<String>,
    /// Read the coefficient vector from the first non-blank line of a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit the report as one JSON line
    #[arg(long)]
    json: bool,
    /// Worker threads for distance enumeration
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["bases", "coeffs", "file"])))]
struct DnaArgs {
    /// Block size k (the code lives over GF(4^k))
    #[arg(long)]
    k: usize,
    /// Quasi-reciprocity offset m, counted in k-base blocks
    #[arg(long)]
    m: usize,
    /// Shift depth t
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Generating family: S, E, E1, E2 or E3
    #[arg(long, default_value = "S")]
    variant: String,
    /// Base tuple, e.g. "TTT AAA TTT TAA ATA ATA AAT" (spaces optional)
    #[arg(long)]
    bases: Option<String>,
    /// Comma-separated GF(4^k) coefficient tokens instead of bases
    #[arg(long)]
    coeffs: Option<String>,
    /// Read the base tuple from the first word line of a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Adjoin the all-ones word (reversible-complement construction)
    #[arg(long)]
    complement: bool,
    /// Skip listing the codewords
    #[arg(long)]
    no_enumerate: bool,
    /// Enumeration cap (number of codewords)
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u128,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// DNA word file, one word per line (FASTA headers ignored)
    #[arg(long)]
    file: PathBuf,
    /// Prescribed minimum distance
    #[arg(long)]
    d: u32,
    /// Exit 2 when any constraint is violated
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verification target (only `paper` is defined)
    what: String,
    /// Run a single section, e.g. 4.2 or table1
    #[arg(long)]
    only: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8, AnyError> {
    match command {
        Command::Construct(args) => {
            let workers = args.workers;
            with_workers(workers, move || cmd_construct(args))
        }
        Command::Dna(args) => {
            let workers = args.workers;
            with_workers(workers, move || cmd_dna(args))
        }
        Command::Check(args) => cmd_check(args),
        Command::Verify(args) => {
            let workers = args.workers;
            with_workers(workers, move || cmd_verify(args))
        }
    }
}

fn with_workers<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> Result<T, AnyError> + Send,
) -> Result<T, AnyError> {
    match workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| e.to_string())?;
            pool.install(f)
        }
        None => f(),
    }
}

fn parse_variant(s: &str) -> Result<SetVariant, AnyError> {
    s.parse::<SetVariant>().map_err(Into::into)
}

fn build_field(q: usize, modulus: &Option<Vec<u16>>) -> Result<FieldRef, AnyError> {
    match modulus {
        None => Ok(Field::gf(q)?),
        Some(coeffs) => {
            let canonical = Field::gf(q)?;
            let base = canonical
                .base()
                .ok_or("prime fields take no --modulus override")?
                .clone();
            Ok(Field::extension(&base, coeffs, None)?)
        }
    }
}

fn read_first_line(path: &PathBuf) -> Result<String, AnyError> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('>'))
        .map(str::to_string)
        .ok_or_else(|| format!("{}: no usable line", path.display()).into())
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, AnyError> {
    let field = build_field(args.q, &args.modulus)?;
    let line = match (&args.coeffs, &args.file) {
        (Some(c), _) => c.clone(),
        (None, Some(path)) => read_first_line(path)?,
        _ => unreachable!("clap enforces the input group"),
    };
    let c = Codeword::parse(&field, &line)?;
    if c.is_zero() {
        return Err("coefficient vector must be nonzero".into());
    }
    let variant = parse_variant(&args.variant)?;
    let gens = build_generating_set(&c, args.m, args.t, variant)?;
    let code = LinearCode::span(&gens)?;
    let report = code.report()?;
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("field: GF({})", report.q);
        println!("generators:");
        for g in &report.generators {
            println!("  {}", g.join(","));
        }
        println!(
            "[n,k,d] = [{},{},{}]  reversible={}  griesmer={}  class={}",
            report.n, report.k, report.d, report.reversible, report.griesmer, report.class
        );
    }
    Ok(0)
}

fn cmd_dna(args: DnaArgs) -> Result<u8, AnyError> {
    let field = Field::gf4_tower(args.k)?;
    let basis = DnaBasis::new(args.k, &field)?;
    let c = match (&args.bases, &args.coeffs, &args.file) {
        (Some(bases), _, _) => tuple_from_bases(&basis, bases)?,
        (None, Some(coeffs), _) => Codeword::parse(&field, coeffs)?,
        (None, None, Some(path)) => tuple_from_bases(&basis, &read_first_line(path)?)?,
        _ => unreachable!("clap enforces the input group"),
    };
    if c.is_zero() {
        return Err("the input tuple maps to the zero word; nothing to construct".into());
    }
    let variant = parse_variant(&args.variant)?;
    let code: MapCode = if args.complement {
        reversible_complement_dna_code(&c, args.m, args.t, variant, &basis)?
    } else {
        reversible_dna_code(&c, args.m, args.t, variant, &basis)?
    };
    let report = code.report(args.cap);
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!(
            "map-code over GF({}): n={} k={} dim4={} words={}",
            report.q,
            report.n,
            report.k,
            report.dim4,
            code.size()
        );
        println!(
            "distances: symbol={} dna={}  reversible={}  complement-closed={}",
            opt(report.d),
            opt(report.dna_distance),
            report.reversible,
            report.complement_closed
        );
    }
    if !args.no_enumerate {
        let mut words = match code.dna_words(args.cap) {
            Ok(w) => w,
            Err(DnaError::TooLarge { size, cap }) => {
                return Err(format!(
                    "code has {size} words, above the cap of {cap}; rerun with --no-enumerate or raise --cap"
                )
                .into());
            }
            Err(e) => return Err(e.into()),
        };
        words.sort();
        for w in words {
            if args.json {
                println!("{}", serde_json::json!({ "word": w.to_string() }));
            } else {
                println!("{w}");
            }
        }
    }
    Ok(0)
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn tuple_from_bases(basis: &DnaBasis, text: &str) -> Result<Codeword, AnyError> {
    let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let word: DnaWord = stripped.parse()?;
    Ok(basis.zeta_bar(&word)?)
}

fn cmd_check(args: CheckArgs) -> Result<u8, AnyError> {
    let text = std::fs::read_to_string(&args.file)?;
    let words = parse_word_lines(&text)?;
    let report = check_constraints(&words, args.d)?;
    if args.json {
        for (name, verdict) in [
            ("hamming", &report.hamming),
            ("reverse", &report.reverse),
            ("reverse-complement", &report.reverse_complement),
            ("fixed-gc", &report.fixed_gc),
        ] {
            println!(
                "{}",
                serde_json::json!({
                    "constraint": name,
                    "d": report.d,
                    "ok": verdict.ok,
                    "violations": verdict.violations,
                })
            );
        }
    } else {
        println!("{} words, d = {}", report.word_count, report.d);
        print_verdict("hamming", &report.hamming);
        print_verdict("reverse", &report.reverse);
        print_verdict("reverse-complement", &report.reverse_complement);
        print_verdict("fixed-gc", &report.fixed_gc);
    }
    if args.strict && !report.all_ok() {
        return Ok(2);
    }
    Ok(0)
}

fn print_verdict(name: &str, verdict: &ConstraintVerdict) {
    if verdict.ok {
        println!("{name}: ok");
    } else {
        println!("{name}: FAIL ({} violations)", verdict.violations.len());
        for v in &verdict.violations {
            println!("  {} / {} -> {}", v.x, v.y, v.distance);
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, AnyError> {
    if args.what != "paper" {
        return Err(format!("unknown verification target `{}`", args.what).into());
    }
    let sections = match &args.only {
        Some(id) => vec![golden::run_section(id)?],
        None => golden::run_all()?.sections,
    };
    let mut failed = 0usize;
    let mut total = 0usize;
    for section in &sections {
        for fact in &section.facts {
            total += 1;
            if !fact.pass {
                failed += 1;
            }
            if args.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "section": section.name,
                        "id": fact.id,
                        "description": fact.description,
                        "expected": fact.expected,
                        "actual": fact.actual,
                        "pass": fact.pass,
                    })
                );
            } else {
                let tag = if fact.pass { "ok  " } else { "FAIL" };
                println!(
                    "{tag} {}: {} (expected {}, got {})",
                    fact.id, fact.description, fact.expected, fact.actual
                );
            }
        }
    }
    if !args.json {
        println!("{total} facts, {failed} failed");
    }
    Ok(if failed == 0 { 0 } else { 2 })
}
