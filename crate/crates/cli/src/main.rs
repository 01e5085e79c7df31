use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homfly_core::families::classify_specializations;
use homfly_core::verify::{run_manifest, Manifest};
use homfly_core::{
    build_genfun, eval_invariant, expand_template, is_simple, BraidWord, Error, EvalOptions,
    Evaluator, SimpleVerdict, Specialization, Template,
};
use serde::Serialize;
use serde_json::json;

const BUNDLED: &[(&str, &str)] = &[
    (
        "reference-tables",
        include_str!("../manifests/reference-tables.json"),
    ),
    (
        "ekt-coefficients",
        include_str!("../manifests/ekt-coefficients.json"),
    ),
    ("skein-axiom", include_str!("../manifests/skein-axiom.json")),
    ("full", include_str!("../manifests/full.json")),
];

#[derive(Parser)]
#[command(
    name = "homfly",
    version,
    about = "Exact HOMFLY, Conway, Jones and D polynomials of closed braids"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an invariant of a closed braid.
    Eval {
        word: String,
        #[arg(long, default_value = "homfly")]
        spec: String,
        #[arg(long, value_enum, default_value_t = Switch::On)]
        oracle: Switch,
        /// Words the class search may visit per call.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a manifest file or a bundled manifest by name.
    Verify {
        manifest: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// List bundled manifests.
        #[arg(long)]
        list: bool,
    },
    /// Expand a template over the corners of {0,1}^k.
    Expand {
        #[arg(long)]
        template: String,
        #[arg(long, default_value = "degenerate")]
        spec: String,
    },
    /// Rational generating function of a template.
    Genfun {
        #[arg(long)]
        template: String,
        #[arg(long, default_value = "degenerate")]
        spec: String,
    },
    /// Decide whether a positive braid is simple.
    Simple {
        word: String,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// List the rational specializations with exponents in range.
    Classify {
        #[arg(long, default_value_t = 9)]
        range: i32,
    },
}

enum Failure {
    Usage(String),
    Indeterminate(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Indeterminate(_) => Failure::Indeterminate(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn options(oracle: Switch, budget: Option<usize>) -> EvalOptions {
    let mut opts = EvalOptions::from_env();
    opts.oracle_fallback = oracle == Switch::On;
    if let Some(b) = budget {
        opts.budget = b;
    }
    opts
}

fn emit(format: Format, text: impl std::fmt::Display, value: &impl Serialize) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
    }
}

fn load_manifest(arg: &str) -> Result<Manifest, Failure> {
    let text = if Path::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?
    } else if let Some((_, text)) = BUNDLED.iter().find(|(name, _)| *name == arg) {
        text.to_string()
    } else {
        return Err(Failure::Usage(format!(
            "no manifest file or bundled manifest named `{arg}`"
        )));
    };
    Ok(Manifest::from_json(&text)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            word,
            spec,
            oracle,
            budget,
        } => {
            let w: BraidWord = word.parse()?;
            let spec: Specialization = spec.parse()?;
            let v = eval_invariant(&w, &spec, &options(oracle, budget))?;
            emit(format, &v, &v);
        }
        Command::Verify {
            manifest,
            seed,
            list,
        } => {
            if list {
                for (name, _) in BUNDLED {
                    println!("{name}");
                }
                return Ok(());
            }
            let arg = manifest.ok_or_else(|| Failure::Usage("verify needs a manifest".into()))?;
            let m = load_manifest(&arg)?;
            let report = run_manifest(&m, seed, &EvalOptions::from_env());
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                ),
                Format::Text => {
                    for e in &report.entries {
                        let status = format!("{:?}", e.status).to_uppercase();
                        println!("{status:<5} {}", e.id);
                        if let Some(d) = &e.detail {
                            println!("      {d}");
                        }
                        if let Some(r) = &e.report {
                            for f in r.failures.iter().take(5) {
                                println!("      {f}");
                            }
                        }
                    }
                }
            }
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
        Command::Expand { template, spec } => {
            let t = Template::from_word(&template.parse()?);
            let spec: Specialization = spec.parse()?;
            let mut ev = Evaluator::for_spec(&spec, EvalOptions::from_env())?;
            let terms = expand_template(&t, &spec, &mut ev)?;
            let text = terms
                .iter()
                .map(|term| {
                    format!(
                        "{:?}: ({}) * ({})",
                        term.corner, term.coefficient, term.value
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, text, &terms);
        }
        Command::Genfun { template, spec } => {
            let t = Template::from_word(&template.parse()?);
            let spec: Specialization = spec.parse()?;
            let mut ev = Evaluator::for_spec(&spec, EvalOptions::from_env())?;
            let g = build_genfun(&t, &spec, &mut ev)?;
            let value = json!({
                "numerator": g.render_numerator(),
                "denominator": g.render_denominator(),
                "series": g,
            });
            emit(format, &g, &value);
        }
        Command::Simple { word, budget } => {
            let w: BraidWord = word.parse()?;
            match is_simple(&w, budget.unwrap_or(homfly_core::rewrite::DEFAULT_BUDGET))? {
                SimpleVerdict::Simple(a) => emit(
                    format,
                    format!("simple, A={a}"),
                    &json!({"simple": true, "partition": a.parts(), "strands": a.strands()}),
                ),
                SimpleVerdict::NotSimple { position, witness } => emit(
                    format,
                    format!("not simple, square at {position} in {witness}"),
                    &json!({"simple": false, "position": position, "witness": witness}),
                ),
                SimpleVerdict::Indeterminate { explored } => {
                    return Err(Failure::Indeterminate(format!(
                        "indeterminate after {explored} words"
                    )))
                }
            }
        }
        Command::Classify { range } => {
            let found = classify_specializations(range);
            let text = found
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, text, &found);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Indeterminate(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(3),
    }
}
