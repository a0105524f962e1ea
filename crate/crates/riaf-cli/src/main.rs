//! Command-line front end: solve decision problems, list completions and
//! extensions, export CNF encodings, and generate random instances.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use riaf::generate::{generate, GeneratorParams};
use riaf::io::{parse_riaf, serialize_af, serialize_riaf};
use riaf::reasoning::{ProblemKind, QueryArgPolicy, QueryVerdict};
use riaf::sat::{
    emit_dimacs, encode_ad, encode_stb, encode_structure, solve_acceptance, solve_verification,
    Engine, EngineError, SatError,
};
use riaf::semantics::{enumerate_extensions, Semantics};
use riaf::{ArgumentId, ArgumentSet, ArgumentationFramework, RichIaf};

#[derive(Parser)]
#[command(name = "riaf", version, about = "Solver for argumentation frameworks with uncertain arguments, attacks and conflict directions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Enum,
    Sat,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(value: EngineArg) -> Engine {
        match value {
            EngineArg::Enum => Engine::Enum,
            EngineArg::Sat => Engine::Sat,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Answer a decision problem; prints YES or NO
    Solve {
        /// Problem and semantics joined by a dash, e.g. PCA-stb,
        /// IncPVstar-pr, NSA-stb
        #[arg(short = 'p', long = "problem", value_name = "PROBLEM-SEM")]
        problem: String,
        /// Instance file
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        /// Queried argument (acceptance problems)
        #[arg(short = 'a', long = "arg", value_name = "ARG")]
        argument: Option<String>,
        /// Queried set as comma-separated names, may be empty
        /// (verification problems)
        #[arg(short = 'S', long = "set", value_name = "ARGS")]
        set: Option<String>,
        /// Engine selection; auto picks SAT where a procedure exists
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Print the certificate completion and extension after the answer
        #[arg(long)]
        witness: bool,
        /// Allow acceptance queries about uncertain arguments, treating
        /// absence as non-acceptance; answered by enumeration
        #[arg(long)]
        allow_uncertain_query: bool,
    },
    /// Print the completions of an instance in enumeration order
    Completions {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        /// Print only the number of completions
        #[arg(long)]
        count: bool,
    },
    /// Print the extensions of an uncertainty-free instance
    Extensions {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        /// Semantics: cf, ad, co, gr, pr or stb
        #[arg(short = 's', long = "semantics", value_name = "SEM")]
        semantics: String,
    },
    /// Write a DIMACS CNF encoding of an instance
    Encode {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        /// Formula: structure, ad or stb (semantics formulas include the
        /// structure part)
        #[arg(short = 's', long = "semantics", value_name = "FORMULA")]
        semantics: String,
        /// Output path
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Generate a random instance, reproducible from the seed
    Generate {
        /// Number of arguments, named a0, a1, ...
        #[arg(long = "args", value_name = "N")]
        num_args: usize,
        /// How many arguments are uncertain
        #[arg(long = "uncertain-args", value_name = "K", default_value_t = 0)]
        num_uncertain_args: usize,
        /// Probability of a certain attack per ordered pair
        #[arg(long = "attack-prob", value_name = "P", default_value_t = 0.0)]
        attack_prob: f64,
        /// Probability of an uncertain attack per remaining ordered pair
        #[arg(long = "uncertain-attack-prob", value_name = "Q", default_value_t = 0.0)]
        uncertain_attack_prob: f64,
        /// Probability of an uncertain conflict per untouched unordered pair
        #[arg(long = "sym-prob", value_name = "S", default_value_t = 0.0)]
        sym_prob: f64,
        #[arg(long = "seed", default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Internal(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn classify_engine_error(err: EngineError) -> Failure {
    match err {
        EngineError::NoSatPath { .. } | EngineError::Reasoning(_) => Failure::Usage(err.to_string()),
        EngineError::Sat(SatError::Reasoning(_) | SatError::UnsupportedSemantics { .. }) => {
            Failure::Usage(err.to_string())
        }
        EngineError::Sat(inner) => Failure::Internal(inner.to_string()),
    }
}

fn load_instance(path: &PathBuf) -> Result<RichIaf, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_riaf(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_problem_spec(spec: &str) -> Result<(ProblemKind, Semantics), Failure> {
    let (problem_token, sem_token) = spec
        .split_once('-')
        .ok_or_else(|| usage(format!("problem `{spec}` is not of the form PROBLEM-SEM")))?;
    let kind = ProblemKind::parse_token(problem_token).ok_or_else(|| {
        usage(format!(
            "unknown problem `{problem_token}`; expected one of IncPV, IncNV, IncPVstar, IncNVstar, PCA, NCA, PSA, NSA"
        ))
    })?;
    let sem = Semantics::parse_token(sem_token).ok_or_else(|| {
        usage(format!("unknown semantics `{sem_token}`; expected cf, ad, co, gr, pr or stb"))
    })?;
    Ok((kind, sem))
}

fn parse_argument(name: &str) -> Result<ArgumentId, Failure> {
    ArgumentId::new(name.trim()).map_err(|e| usage(e.to_string()))
}

fn parse_set(spec: &str) -> Result<ArgumentSet, Failure> {
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Ok(ArgumentSet::new());
    }
    trimmed.split(',').map(parse_argument).collect()
}

fn print_witness(verdict: &QueryVerdict) {
    if let Some(completion) = &verdict.witness {
        println!("completion:");
        print!("{}", serialize_af(completion));
        if let Some(ext) = &verdict.extension_witness {
            if ext.is_empty() {
                println!("extension:");
            } else {
                println!("extension: {ext}");
            }
        }
    }
}

fn run_solve(
    problem: &str,
    file: &PathBuf,
    argument: Option<&str>,
    set: Option<&str>,
    engine: Engine,
    witness: bool,
    allow_uncertain_query: bool,
) -> Result<(), Failure> {
    let (kind, sem) = parse_problem_spec(problem)?;
    let riaf = load_instance(file)?;
    let verdict = if kind.is_acceptance() {
        if set.is_some() {
            return Err(usage(format!("{kind} takes -a <arg>, not -S <set>")));
        }
        let name = argument.ok_or_else(|| usage(format!("{kind} requires -a <arg>")))?;
        let a = parse_argument(name)?;
        let policy = if allow_uncertain_query {
            QueryArgPolicy::AllowUncertain
        } else {
            QueryArgPolicy::CertainOnly
        };
        solve_acceptance(&riaf, kind, &a, sem, engine, policy).map_err(classify_engine_error)?
    } else {
        if argument.is_some() {
            return Err(usage(format!("{kind} takes -S <set>, not -a <arg>")));
        }
        let spec = set.ok_or_else(|| usage(format!("{kind} requires -S <set>")))?;
        let s = parse_set(spec)?;
        solve_verification(&riaf, kind, &s, sem, engine).map_err(classify_engine_error)?
    };
    println!("{}", if verdict.answer { "YES" } else { "NO" });
    if witness {
        print_witness(&verdict);
    }
    Ok(())
}

fn run_completions(file: &PathBuf, count: bool) -> Result<(), Failure> {
    let riaf = load_instance(file)?;
    if count {
        println!("{}", riaf::enumerate_completions(&riaf).len());
        return Ok(());
    }
    let mut first = true;
    for completion in riaf::completions::completions_iter(&riaf) {
        if !first {
            println!();
        }
        first = false;
        print!("{}", serialize_af(&completion));
    }
    Ok(())
}

fn run_extensions(file: &PathBuf, semantics: &str) -> Result<(), Failure> {
    let sem = Semantics::parse_token(semantics)
        .ok_or_else(|| usage(format!("unknown semantics `{semantics}`; expected cf, ad, co, gr, pr or stb")))?;
    let riaf = load_instance(file)?;
    if riaf.has_uncertainty() {
        return Err(usage(
            "instance has uncertainty; extensions are defined per completion \
             (use `completions`, or `solve` with a verification or acceptance problem)"
                .to_owned(),
        ));
    }
    let af = ArgumentationFramework::new(
        riaf.certain_args().clone(),
        riaf.certain_attacks().clone(),
    )
    .expect("certain part of a valid instance is a valid framework");
    let extensions = enumerate_extensions(&af, sem).map_err(|e| usage(e.to_string()))?;
    for ext in extensions {
        println!("{ext}");
    }
    Ok(())
}

fn run_encode(file: &PathBuf, semantics: &str, output: &PathBuf) -> Result<(), Failure> {
    let riaf = load_instance(file)?;
    let formula = match semantics.to_ascii_lowercase().as_str() {
        "structure" => encode_structure(&riaf),
        "ad" => encode_structure(&riaf).and(encode_ad(&riaf)),
        "stb" => encode_structure(&riaf).and(encode_stb(&riaf)),
        other => {
            return Err(usage(format!(
                "unknown encoding `{other}`; expected structure, ad or stb"
            )))
        }
    };
    let mut sink = fs::File::create(output)
        .map_err(|e| Failure::Internal(format!("cannot create {}: {e}", output.display())))?;
    emit_dimacs(&formula, &mut sink)
        .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", output.display())))?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_generate(
    num_args: usize,
    num_uncertain_args: usize,
    attack_prob: f64,
    uncertain_attack_prob: f64,
    sym_prob: f64,
    seed: u64,
    output: Option<&PathBuf>,
) -> Result<(), Failure> {
    let params = GeneratorParams {
        num_args,
        num_uncertain_args,
        attack_prob,
        uncertain_attack_prob,
        sym_prob,
    };
    let riaf = generate(&params, seed).map_err(|e| usage(e.to_string()))?;
    let text = serialize_riaf(&riaf);
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            problem,
            file,
            argument,
            set,
            engine,
            witness,
            allow_uncertain_query,
        } => run_solve(
            &problem,
            &file,
            argument.as_deref(),
            set.as_deref(),
            engine.into(),
            witness,
            allow_uncertain_query,
        ),
        Command::Completions { file, count } => run_completions(&file, count),
        Command::Extensions { file, semantics } => run_extensions(&file, &semantics),
        Command::Encode { file, semantics, output } => run_encode(&file, &semantics, &output),
        Command::Generate {
            num_args,
            num_uncertain_args,
            attack_prob,
            uncertain_attack_prob,
            sym_prob,
            seed,
            output,
        } => run_generate(
            num_args,
            num_uncertain_args,
            attack_prob,
            uncertain_attack_prob,
            sym_prob,
            seed,
            output.as_ref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
