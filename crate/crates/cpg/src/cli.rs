//! Command-line front end.
//!
//! Every operation in the library is reachable through one subcommand. The
//! contract is strict so that transcripts can be byte-compared:
//!
//! - results go to the output stream, diagnostics to the error stream;
//! - identical arguments and files produce identical bytes;
//! - `--format plain` prints minimal result lines, `--format json` one
//!   object with keys in a fixed order;
//! - exit codes: 0 success (property holds, imputation in core), 1 property
//!   violated or imputation blocked, 2 usage or parse error, 3 enumeration
//!   limit exceeded.
//!
//! The environment variable `CPG_LIMIT` (a decimal integer) replaces every
//! default enumeration limit; `verify --limit` overrides both for that run.

use crate::error::Error;
use crate::formats::{self, AnyGame, ParseError};
use crate::limits::Limits;
use crate::model::{Coalition, CpGame};
use crate::solutions::{self, CoreVerdict, Imputation, Permutation};
use crate::verify::{self, CheckResult, GameView, TableGame, Witness};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value as Json};
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "cpg",
    version,
    about = "Exact solvers and brute-force verifiers for cooperative product games",
    color = clap::ColorChoice::Never
)]
struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one coalition's value.
    Value {
        /// Path to a game file.
        game: PathBuf,
        /// Comma-separated 1-based player indices; empty for the empty
        /// coalition.
        #[arg(long, value_name = "LIST")]
        coalition: String,
    },
    /// Compute the marginal vector of a permutation (a core imputation).
    Imputation {
        /// Path to a game file.
        game: PathBuf,
        /// Player ordering as comma-separated indices; identity if omitted.
        #[arg(long, value_name = "LIST")]
        permutation: Option<String>,
    },
    /// Check an imputation against every coalition.
    CoreCheck {
        /// Path to a game file.
        game: PathBuf,
        #[command(flatten)]
        source: ImputationSource,
    },
    /// Compute one coalition's excess under an imputation.
    Excess {
        /// Path to a game file.
        game: PathBuf,
        #[command(flatten)]
        source: ImputationSource,
        /// Comma-separated 1-based player indices; empty for the empty
        /// coalition.
        #[arg(long, value_name = "LIST")]
        coalition: String,
    },
    /// Compute the Shapley value over all permutations.
    Shapley {
        /// Path to a game file.
        game: PathBuf,
    },
    /// Compute the raw Banzhaf value over all coalitions.
    Banzhaf {
        /// Path to a game file.
        game: PathBuf,
    },
    /// Mix marginal vectors into a Weber-set imputation.
    Weber {
        /// Path to a game file.
        game: PathBuf,
        /// Terms `PERM@COEF` joined by `;`, coefficients summing to 1.
        #[arg(long, value_name = "MIX")]
        mix: String,
    },
    /// Run brute-force property checks on a game or table file.
    Verify {
        /// Path to a game (`cpg 1`) or table (`tug 1`) file.
        game: PathBuf,
        /// Comma-separated subset of: monotone, superadditive, convex,
        /// dummies.
        #[arg(long, value_name = "LIST")]
        properties: String,
        /// Cap the player count for every enumeration in this run.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct ImputationSource {
    /// Path to an imputation file.
    #[arg(long, value_name = "FILE")]
    imputation: Option<PathBuf>,
    /// Imputation text given directly on the command line.
    #[arg(long, value_name = "TEXT", allow_hyphen_values = true)]
    inline: Option<String>,
}

/// Anything that aborts a command, with its exit code.
#[derive(Debug)]
enum Failure {
    Parse(ParseError),
    Library(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Library(Error::LimitExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Library(e) => write!(f, "{e}"),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

/// Parses arguments, runs one command, and returns the process exit code.
///
/// `out` receives the report, `err` the diagnostics; nothing else is
/// written. The first argument is the program name, as in `std::env::args`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                // --help and --version are successful outcomes
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            failure.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Value { game, coalition } => {
            let game = read_game(&game)?;
            let c = parse_coalition(&coalition)?;
            let value = game.coalition_value(&c)?;
            emit(
                out,
                format,
                format!("{value}\n"),
                json!({
                    "command": "value",
                    "game": game_json(&game),
                    "coalition": coalition_json(&c),
                    "value": value.to_string(),
                }),
            );
            Ok(0)
        }
        Command::Imputation { game, permutation } => {
            let game = read_game(&game)?;
            let pi = match permutation {
                None => Permutation::identity(game.player_count()),
                Some(text) => Permutation::new(formats::parse_index_list(&text)?)?,
            };
            let imp = solutions::marginal_vector(&game, &pi)?;
            emit(
                out,
                format,
                format!("{}\n", join_rationals(imp.payoffs())),
                json!({
                    "command": "imputation",
                    "game": game_json(&game),
                    "permutation": permutation_json(&pi),
                    "payoffs": rational_strings(imp.payoffs()),
                }),
            );
            Ok(0)
        }
        Command::CoreCheck { game, source } => {
            let game = read_game(&game)?;
            let imp = read_imputation(&source, &game)?;
            let verdict = solutions::core_check(&game, &imp, &limits_from_env()?)?;
            let code = match &verdict {
                CoreVerdict::InCore => 0,
                CoreVerdict::Blocked { .. } => 1,
            };
            let (plain, json) = match verdict {
                CoreVerdict::InCore => (
                    "InCore\n".to_string(),
                    json!({
                        "command": "core-check",
                        "game": game_json(&game),
                        "imputation": rational_strings(imp.payoffs()),
                        "outcome": "InCore",
                    }),
                ),
                CoreVerdict::Blocked { witness, excess } => (
                    format!("Blocked witness {witness} excess {excess}\n"),
                    json!({
                        "command": "core-check",
                        "game": game_json(&game),
                        "imputation": rational_strings(imp.payoffs()),
                        "outcome": "Blocked",
                        "witness": coalition_json(&witness),
                        "excess": excess.to_string(),
                    }),
                ),
            };
            emit(out, format, plain, json);
            Ok(code)
        }
        Command::Excess {
            game,
            source,
            coalition,
        } => {
            let game = read_game(&game)?;
            let imp = read_imputation(&source, &game)?;
            let c = parse_coalition(&coalition)?;
            let excess = solutions::excess(&game, &imp, &c)?;
            emit(
                out,
                format,
                format!("{excess}\n"),
                json!({
                    "command": "excess",
                    "game": game_json(&game),
                    "imputation": rational_strings(imp.payoffs()),
                    "coalition": coalition_json(&c),
                    "excess": excess.to_string(),
                }),
            );
            Ok(0)
        }
        Command::Shapley { game } => {
            let game = read_game(&game)?;
            let imp = solutions::shapley(&game, &limits_from_env()?)?;
            emit(
                out,
                format,
                format!("{}\n", join_rationals(imp.payoffs())),
                json!({
                    "command": "shapley",
                    "game": game_json(&game),
                    "payoffs": rational_strings(imp.payoffs()),
                }),
            );
            Ok(0)
        }
        Command::Banzhaf { game } => {
            let game = read_game(&game)?;
            let values = solutions::banzhaf(&game, &limits_from_env()?)?;
            emit(
                out,
                format,
                format!("{}\n", join_rationals(&values)),
                json!({
                    "command": "banzhaf",
                    "game": game_json(&game),
                    "values": rational_strings(&values),
                }),
            );
            Ok(0)
        }
        Command::Weber { game, mix } => {
            let game = read_game(&game)?;
            let mut terms = Vec::new();
            for (indices, coefficient) in formats::parse_mix(&mix)? {
                terms.push((Permutation::new(indices)?, coefficient));
            }
            let imp = solutions::weber_mix(&game, &terms)?;
            let mix_json: Vec<Json> = terms
                .iter()
                .map(|(pi, coefficient)| {
                    json!({
                        "permutation": permutation_json(pi),
                        "coefficient": coefficient.to_string(),
                    })
                })
                .collect();
            emit(
                out,
                format,
                format!("{}\n", join_rationals(imp.payoffs())),
                json!({
                    "command": "weber",
                    "game": game_json(&game),
                    "mix": mix_json,
                    "payoffs": rational_strings(imp.payoffs()),
                }),
            );
            Ok(0)
        }
        Command::Verify {
            game,
            properties,
            limit,
        } => {
            let text = read_file(&game)?;
            let input = formats::parse_any_game(&text)?;
            let properties = Property::parse_list(&properties)?;
            let limits = match limit {
                Some(n) => Limits::uniform(n),
                None => limits_from_env()?,
            };
            run_verify(out, format, &input, &properties, &limits)
        }
    }
}

/// One checkable property name on the `verify` command line.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Property {
    Monotone,
    Superadditive,
    Convex,
    Dummies,
}

impl Property {
    fn parse_list(text: &str) -> Result<Vec<Property>, Failure> {
        let mut properties = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            properties.push(match token {
                "monotone" => Property::Monotone,
                "superadditive" => Property::Superadditive,
                "convex" => Property::Convex,
                "dummies" => Property::Dummies,
                other => {
                    return Err(Failure::Usage(format!(
                        "unknown property `{other}`; expected monotone, superadditive, convex, dummies"
                    )))
                }
            });
        }
        Ok(properties)
    }

    fn name(self) -> &'static str {
        match self {
            Property::Monotone => "monotone",
            Property::Superadditive => "superadditive",
            Property::Convex => "convex",
            Property::Dummies => "dummies",
        }
    }

    fn precheck(self, n: usize, limits: &Limits) -> Result<(), Error> {
        match self {
            Property::Monotone | Property::Dummies => limits.check_subsets(n),
            Property::Superadditive | Property::Convex => limits.check_pairs(n),
        }
    }
}

fn run_verify(
    out: &mut dyn Write,
    format: Format,
    input: &AnyGame,
    properties: &[Property],
    limits: &Limits,
) -> Result<i32, Failure> {
    let view: &dyn GameView = match input {
        AnyGame::Product(game) => game,
        AnyGame::Table(table) => table,
    };
    // check every limit first so a partial report never precedes an abort
    for property in properties {
        property.precheck(view.player_count(), limits)?;
    }

    let mut plain = String::new();
    let mut reports = Vec::new();
    let mut all_pass = true;
    for property in properties {
        let name = property.name();
        match property {
            Property::Monotone | Property::Superadditive | Property::Convex => {
                let result = match property {
                    Property::Monotone => verify::check_monotone(view, limits)?,
                    Property::Superadditive => verify::check_superadditive(view, limits)?,
                    _ => verify::check_convex(view, limits)?,
                };
                match result {
                    CheckResult::Pass => {
                        plain.push_str(&format!("{name} Pass\n"));
                        reports.push(json!({"property": name, "outcome": "Pass"}));
                    }
                    CheckResult::Violated(witness) => {
                        all_pass = false;
                        plain.push_str(&format!("{name} Violated witness {witness}\n"));
                        reports.push(json!({
                            "property": name,
                            "outcome": "Violated",
                            "witness": witness_json(&witness),
                        }));
                    }
                }
            }
            Property::Dummies => {
                let dummies = verify::find_dummies(view, limits)?;
                if dummies.is_empty() {
                    plain.push_str("dummies Pass\n");
                    reports.push(json!({"property": name, "outcome": "Pass"}));
                } else {
                    all_pass = false;
                    plain.push_str(&format!("dummies Violated witness {dummies}\n"));
                    reports.push(json!({
                        "property": name,
                        "outcome": "Violated",
                        "dummies": coalition_json(&dummies),
                    }));
                }
            }
        }
    }

    let (echo_key, echo_value) = match input {
        AnyGame::Product(game) => ("game", game_json(game)),
        AnyGame::Table(table) => ("table", table_json(table)),
    };
    let mut report = serde_json::Map::new();
    report.insert("command".to_string(), json!("verify"));
    report.insert(echo_key.to_string(), echo_value);
    report.insert("properties".to_string(), Json::Array(reports));
    emit(out, format, plain, Json::Object(report));
    Ok(if all_pass { 0 } else { 1 })
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_game(path: &Path) -> Result<CpGame, Failure> {
    Ok(formats::parse_game(&read_file(path)?)?)
}

fn read_imputation(source: &ImputationSource, game: &CpGame) -> Result<Imputation, Failure> {
    let text = match (&source.imputation, &source.inline) {
        (Some(path), None) => read_file(path)?,
        (None, Some(text)) => text.clone(),
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --imputation and --inline".to_string(),
            ))
        }
    };
    Ok(formats::parse_imputation(&text, game)?)
}

fn parse_coalition(text: &str) -> Result<Coalition, Failure> {
    Ok(Coalition::new(formats::parse_index_list(text)?)?)
}

fn limits_from_env() -> Result<Limits, Failure> {
    match std::env::var("CPG_LIMIT") {
        Ok(raw) => {
            let n = raw.trim().parse().map_err(|_| {
                Failure::Usage(format!("CPG_LIMIT must be a decimal integer, found `{raw}`"))
            })?;
            Ok(Limits::uniform(n))
        }
        Err(std::env::VarError::NotPresent) => Ok(Limits::default()),
        Err(std::env::VarError::NotUnicode(_)) => Err(Failure::Usage(
            "CPG_LIMIT must be a decimal integer".to_string(),
        )),
    }
}

fn emit(out: &mut dyn Write, format: Format, plain: String, json: Json) {
    match format {
        Format::Plain => {
            let _ = out.write_all(plain.as_bytes());
        }
        Format::Json => {
            let _ = writeln!(out, "{json}");
        }
    }
}

fn join_rationals(values: &[BigRational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn rational_strings(values: &[BigRational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn game_json(game: &CpGame) -> Json {
    json!({
        "n": game.player_count(),
        "weights": game.weights().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn table_json(table: &TableGame) -> Json {
    json!({
        "n": table.player_count(),
        "values": rational_strings(table.values()),
    })
}

fn coalition_json(c: &Coalition) -> Json {
    let members: Vec<usize> = c.members().iter().map(|p| p.index()).collect();
    json!(members)
}

fn permutation_json(pi: &Permutation) -> Json {
    let order: Vec<usize> = pi.order().iter().map(|p| p.index()).collect();
    json!(order)
}

fn witness_json(witness: &Witness) -> Json {
    match witness {
        Witness::Monotonicity { smaller, larger } => json!({
            "smaller": coalition_json(smaller),
            "larger": coalition_json(larger),
        }),
        Witness::Superadditivity { a, b } => json!({
            "a": coalition_json(a),
            "b": coalition_json(b),
        }),
        Witness::Convexity { a, b } => json!({
            "a": coalition_json(a),
            "b": coalition_json(b),
        }),
    }
}
