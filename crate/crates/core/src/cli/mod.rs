//! Command-line front end. [`run`] does everything except touching the
//! process: it takes arguments and a stdin handle and returns the exit
//! code with the text to print.

mod commands;
pub mod parse;
pub mod scenarios;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::criteria::{CriteriaConfig, Method};
use crate::field::DEFAULT_CHARACTERISTIC;
use crate::monomial::MonomialOrder;

pub use commands::{run_command, Report, Status};
pub use parse::{parse_input, print_input, Input};

/// Everything a single run depends on. Equal configs and inputs give
/// byte-identical output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    /// Overrides the characteristic of the input; `None` keeps the `ring`
    /// line (or 31013).
    pub characteristic: Option<u32>,
    pub order: MonomialOrder,
    pub seed: u64,
    pub trials: usize,
    pub budget: u64,
}

impl Default for SessionConfig {
    fn default() -> Self {
        Self {
            characteristic: None,
            order: MonomialOrder::Degrevlex,
            seed: 1,
            trials: 3,
            budget: u64::MAX,
        }
    }
}

impl SessionConfig {
    pub fn criteria(&self) -> CriteriaConfig {
        CriteriaConfig {
            seed: self.seed,
            trials: self.trials,
            budget: self.budget,
        }
    }

    pub fn characteristic_or_default(&self) -> u32 {
        self.characteristic.unwrap_or(DEFAULT_CHARACTERISTIC)
    }
}

#[derive(Parser, Debug)]
#[command(name = "cwlin", version, about = "Componentwise linearity of graded ideals over prime fields")]
pub struct Cli {
    #[command(flatten)]
    pub session: SessionArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SessionArgs {
    /// Coefficient characteristic(s); a comma-separated list runs the command once per prime.
    #[arg(long = "char", global = true, value_delimiter = ',')]
    pub characteristic: Vec<u32>,
    /// Monomial order: degrevlex or lex.
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: MonomialOrder,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Random coordinate changes per gin estimate.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    /// Step budget; exhausting it yields an inconclusive result (exit 2).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gorenstein,
    Determinantal,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    /// The quotient S/I.
    Quotient,
    /// The ideal I.
    Ideal,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb { input: Option<PathBuf> },
    /// Initial ideal and its stability.
    Initial { input: Option<PathBuf> },
    /// Initial ideal after random changes of coordinates.
    Gin { input: Option<PathBuf> },
    /// Graded Betti table of the minimal free resolution.
    Betti {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "quotient")]
        module: ModuleArg,
    },
    /// Hilbert function of S/I and the numerator of its Hilbert series.
    Hilbert {
        input: Option<PathBuf>,
        /// Largest degree listed.
        #[arg(long, default_value_t = 10)]
        upto: u32,
    },
    /// Krull dimension of S/I and height of I.
    Dim { input: Option<PathBuf> },
    /// Alexander dual of a simplicial complex or squarefree monomial ideal.
    AlexanderDual { input: Option<PathBuf> },
    /// Decide componentwise linearity.
    CwlTest {
        input: Option<PathBuf>,
        /// initial, gin, linear-part, direct or initial-components.
        #[arg(long, default_value = "gin")]
        method: Method,
    },
    /// Closed-form verdict for a structured family.
    Classify {
        #[arg(value_enum)]
        family: Family,
        input: Option<PathBuf>,
        /// Accept the ideal as Gorenstein without checking.
        #[arg(long)]
        assume_gorenstein: bool,
    },
    /// Strongly stable ideal with the Betti numbers of a componentwise linear family member.
    Companion {
        #[arg(value_enum)]
        family: Family,
        input: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        e: Option<i64>,
    },
    /// Run the built-in scenario suite.
    PaperExamples,
}

impl Command {
    fn input(&self) -> Option<&Option<PathBuf>> {
        match self {
            Command::Gb { input }
            | Command::Initial { input }
            | Command::Gin { input }
            | Command::Betti { input, .. }
            | Command::Hilbert { input, .. }
            | Command::Dim { input }
            | Command::AlexanderDual { input }
            | Command::CwlTest { input, .. }
            | Command::Classify { input, .. } => Some(input),
            Command::Companion { family, input, m, .. } => {
                if input.is_some() || (*family != Family::Gorenstein && m.is_none()) {
                    Some(input)
                } else {
                    None
                }
            }
            Command::PaperExamples => None,
        }
    }

    /// Whether the result depends on the coefficient field.
    fn per_characteristic(&self) -> bool {
        !matches!(self, Command::Companion { .. } | Command::PaperExamples)
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn error_outcome(e: &str, json: bool) -> Outcome {
    let stdout = if json {
        format!("{}\n", serde_json::to_string_pretty(&serde_json::json!({ "error": e })).unwrap())
    } else {
        String::new()
    };
    Outcome {
        code: 1,
        stdout,
        stderr: format!("error: {e}\n"),
    }
}

/// Parse `args` (program name first) and execute.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cli, stdin)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let s = &cli.session;
    let json = s.json;
    let text = match cli.command.input() {
        Some(path) => match read_input(path, stdin) {
            Ok(t) => Some(t),
            Err(e) => return error_outcome(&e, json),
        },
        None => None,
    };
    let base = SessionConfig {
        characteristic: None,
        order: s.order,
        seed: s.seed,
        trials: s.trials,
        budget: s.budget.unwrap_or(u64::MAX),
    };
    let chars: Vec<Option<u32>> = if s.characteristic.is_empty() || !cli.command.per_characteristic() {
        vec![s.characteristic.first().copied()]
    } else {
        s.characteristic.iter().map(|&p| Some(p)).collect()
    };
    let mut reports = Vec::new();
    for p in &chars {
        let config = SessionConfig { characteristic: *p, ..base };
        match run_command(&cli.command, &config, text.as_deref()) {
            Ok(r) => reports.push((config, r)),
            Err(e) => return error_outcome(&e.to_string(), json),
        }
    }
    let code = reports.iter().map(|(_, r)| r.status.code()).max_by_key(|&c| match c {
        0 => 0,
        2 => 1,
        _ => 2,
    });
    let code = code.unwrap_or(0);
    let stdout = if json {
        let value = if reports.len() == 1 {
            reports.pop().unwrap().1.json
        } else {
            Value::Array(
                reports
                    .into_iter()
                    .map(|(c, r)| serde_json::json!({ "characteristic": c.characteristic, "result": r.json }))
                    .collect(),
            )
        };
        format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
    } else if reports.len() == 1 {
        reports.pop().unwrap().1.text
    } else {
        reports
            .into_iter()
            .map(|(c, r)| format!("== F_{} ==\n{}", c.characteristic.unwrap(), r.text))
            .collect()
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests;
