use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use foursp::oracle::enumerate_answer_sets;
use foursp::report::{parse_report, rank_models, Criterion, JsonReport, JsonStats, ModelReport};
use foursp::stratify::{find_stratification, StratKind};
use foursp::syntax::{ground, parse_hypotheses, parse_literal_set, parse_program, Program};
use foursp::wsm::{
    check_well_supported, enumerate_with, generate_wsm_4ql_with_stats, generate_wsm_4sp,
    substitute_defaults, substitute_inspections, Enumeration, Strategy, Verdict,
};
use foursp::{Error, Interpretation};

#[derive(Parser)]
#[command(
    name = "foursp",
    version,
    about = "Four-valued logic programs with default and inspection negation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a program and print it in normal form with its dialect
    Parse {
        program: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the ground instances of a program
    Ground { program: PathBuf },
    /// Find a stratification of the ground program
    Stratify {
        program: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Compute models
    Solve {
        program: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Hypotheses for `not` literals (4sp mode)
        #[arg(long)]
        hypotheses: Option<PathBuf>,
        /// Number of models, or `all`
        #[arg(long)]
        enumerate: Option<Count>,
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rank models by a criterion before printing
        #[arg(long)]
        score: Option<Criterion>,
        #[arg(long)]
        json: bool,
    },
    /// Check that a model is well-supported (the engine's model by default)
    CheckWsm {
        program: PathBuf,
        /// File holding a literal set such as `{p, -q}`
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        hypotheses: Option<PathBuf>,
    },
    /// Re-rank the models of a JSON report
    Rank {
        report: PathBuf,
        #[arg(long)]
        score: Criterion,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "I", alias = "i")]
    I,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Asp,
    #[value(name = "4ql")]
    FourQl,
    #[value(name = "4sp")]
    FourSp,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Asp => "asp",
            Mode::FourQl => "4ql",
            Mode::FourSp => "4sp",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Lex,
    Random,
    Exhaustive,
}

#[derive(Clone, Copy)]
enum Count {
    All,
    N(usize),
}

impl std::str::FromStr for Count {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(Count::All);
        }
        s.parse()
            .map(Count::N)
            .map_err(|_| format!("expected a number or `all`, got `{s}`"))
    }
}

impl Count {
    fn cap(self) -> Option<usize> {
        match self {
            Count::All => None,
            Count::N(n) => Some(n),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type Outcome = Result<bool, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<Program, CliError> {
    Ok(ground(&parse_program(&read(path)?)?)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Parse { program, json } => {
            let p = parse_program(&read(&program)?)?;
            if json {
                let out = serde_json::json!({
                    "dialect": p.dialect().name(),
                    "rules": p.rules.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "unguarded": p.guard_violations().map(|(i, _)| i).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                print!("{p}");
                println!("% dialect: {}", p.dialect().name());
            }
            Ok(true)
        }
        Command::Ground { program } => {
            print!("{}", load(&program)?);
            Ok(true)
        }
        Command::Stratify {
            program,
            kind,
            json,
        } => {
            let p = load(&program)?;
            let kind = match kind {
                KindArg::D => StratKind::Default,
                KindArg::I => StratKind::Inspection,
            };
            match find_stratification(&p, kind) {
                None => {
                    if json {
                        println!("null");
                    } else {
                        println!("not stratifiable");
                    }
                    Ok(false)
                }
                Some(s) => {
                    let report = s.report(&p);
                    if json {
                        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
                    } else {
                        for stratum in &report {
                            print!("{stratum}");
                        }
                    }
                    Ok(true)
                }
            }
        }
        Command::Solve {
            program,
            mode,
            hypotheses,
            enumerate,
            strategy,
            seed,
            score,
            json,
        } => solve(
            &program,
            mode,
            hypotheses.as_deref(),
            enumerate,
            strategy,
            seed,
            score,
            json,
        ),
        Command::CheckWsm {
            program,
            model,
            hypotheses,
        } => check(&program, model.as_deref(), hypotheses.as_deref()),
        Command::Rank {
            report,
            score,
            json,
        } => {
            let parsed = parse_report(&read(&report)?)?;
            let ranked = rank_models(parsed.model_reports()?, score);
            let out = JsonReport::new(parsed.program.clone(), &parsed.mode, &ranked, parsed.stats);
            emit(&out, &ranked, json);
            Ok(!ranked.is_empty())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn solve(
    path: &Path,
    mode: Mode,
    hypotheses: Option<&Path>,
    enumerate: Option<Count>,
    strategy: Option<StrategyArg>,
    seed: u64,
    score: Option<Criterion>,
    json: bool,
) -> Outcome {
    let p = load(path)?;
    let atoms = p.atoms();
    let mut iterations = 0;
    let reports: Vec<ModelReport> = match mode {
        Mode::Asp => {
            if !p.has_asp_syntax() {
                return Err(CliError::Usage(
                    "mode asp needs one conjunct per rule, no inspection and no `#i`".into(),
                ));
            }
            for (i, rule) in p.guard_violations() {
                eprintln!("warning: rule {} is not guarded: {rule}", i + 1);
            }
            let cap = enumerate.unwrap_or(Count::N(1)).cap();
            enumerate_answer_sets(&p, cap)?
                .into_iter()
                .map(|m| ModelReport::new(m, &atoms))
                .collect()
        }
        Mode::FourQl => {
            let (m, stats) = generate_wsm_4ql_with_stats(&p)?;
            iterations = stats.iterations;
            vec![ModelReport::new(m, &atoms)]
        }
        Mode::FourSp => match hypotheses {
            Some(h) => {
                let h = parse_hypotheses(&read(h)?, &p)?;
                let g = generate_wsm_4sp(&p, &h)?;
                iterations = g.stats.iterations;
                vec![ModelReport::new(g.model, &atoms).with_hypotheses(g.initial, g.contradicted)]
            }
            None => {
                let strategy = match strategy.unwrap_or(StrategyArg::Lex) {
                    StrategyArg::Lex => Strategy::Lexicographic,
                    StrategyArg::Random => Strategy::Random { seed },
                    StrategyArg::Exhaustive => Strategy::Exhaustive,
                };
                let cap = enumerate.unwrap_or(Count::N(1)).cap();
                let (reports, stats) = enumerate_with(&p, &Enumeration::new(strategy, cap))?;
                iterations = stats.iterations;
                reports
            }
        },
    };
    let reports = match score {
        Some(c) => rank_models(reports, c),
        None => reports,
    };
    let stats = JsonStats {
        atoms: atoms.len(),
        rules: p.len(),
        iterations,
    };
    let out = JsonReport::new(path.display().to_string(), mode.name(), &reports, stats);
    emit(&out, &reports, json);
    Ok(!reports.is_empty())
}

fn emit(out: &JsonReport, reports: &[ModelReport], json: bool) {
    if json {
        println!("{}", out.to_json());
    } else {
        for r in reports {
            println!("{}", r.model);
        }
    }
}

fn check(path: &Path, model: Option<&Path>, hypotheses: Option<&Path>) -> Outcome {
    let p = load(path)?;
    let (candidate, pure) = if p.has_default() {
        let h = hypotheses.ok_or_else(|| {
            CliError::Usage("program uses `not`; pass --hypotheses to fix its values".into())
        })?;
        let h = parse_hypotheses(&read(h)?, &p)?;
        let g = generate_wsm_4sp(&p, &h)?;
        let candidate = match model {
            Some(m) => read_model(m)?,
            None => g.model,
        };
        let pure = substitute_inspections(&substitute_defaults(&p, &g.hypotheses)?, &candidate);
        (candidate, pure)
    } else {
        let candidate = match model {
            Some(m) => read_model(m)?,
            None => generate_wsm_4ql_with_stats(&p)?.0,
        };
        let pure = substitute_inspections(&p, &candidate);
        (candidate, pure)
    };
    let verdict = check_well_supported(&pure, &candidate)?;
    println!("{candidate}: {verdict}");
    Ok(verdict == Verdict::WellSupported)
}

fn read_model(path: &Path) -> Result<Interpretation, CliError> {
    Ok(parse_literal_set(&read(path)?)?.into_iter().collect())
}
