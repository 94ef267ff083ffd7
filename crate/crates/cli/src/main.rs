//! `gfkit`: exact generating-function computations from the command line.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage or parse error, 3 suite failure.

mod commands;
mod doc;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use doc::Doc;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Compute(String),
    /// Suites ran and some check failed; the report is still printed.
    SuiteFailure(Doc),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::SuiteFailure(_) => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "gfkit", version, about = "Rational and algebraic generating functions, exactly")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation order (last coefficient index) where a command expands a series.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

/// An input read from a file or taken from the built-in fixtures.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input file; a fixture name is accepted when no such file exists.
    #[arg(long)]
    pub file: Option<String>,
    /// Built-in fixture name.
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Both,
    Transfer,
    Viennot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Invert,
    Sqrt,
    Derive,
    Compose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalMode {
    Quadratic,
    LeadingT,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Walks in a weighted digraph: rational generating function and coefficients.
    Walks {
        #[command(flatten)]
        input: Input,
        /// Start vertex (defaults to the one in the input).
        #[arg(long)]
        start: Option<usize>,
        /// Comma-separated end vertices.
        #[arg(long, value_delimiter = ',')]
        targets: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Number of coefficients to print.
        #[arg(long)]
        coeffs: Option<usize>,
    },
    /// Generating function of the language of a finite automaton.
    Automaton {
        #[command(flatten)]
        input: Input,
        /// Number of coefficients to print.
        #[arg(long)]
        coeffs: Option<usize>,
        /// Also print the subset-construction automaton.
        #[arg(long)]
        determinize: bool,
    },
    /// Polynomial system of a grammar and its canonical solution.
    Grammar {
        #[command(flatten)]
        input: Input,
        /// Compare with word counts by exhaustive derivation up to this length.
        #[arg(long)]
        check: Option<usize>,
    },
    /// Canonical solution of a proper polynomial system.
    System {
        #[command(flatten)]
        input: Input,
        /// Rewrite into a normal form and compare solutions.
        #[arg(long, value_enum)]
        normalize: Option<NormalMode>,
    },
    /// Series solution of an equation with one catalytic variable.
    Catalytic {
        #[command(flatten)]
        input: Input,
    },
    /// Power-series branches of P(t, a) = 0.
    Roots {
        #[command(flatten)]
        input: Input,
        /// Variable to solve for (defaults to the one in the input).
        #[arg(long)]
        var: Option<String>,
    },
    /// Order to which a series satisfies P(t, a) = 0.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Series file.
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        var: Option<String>,
    },
    /// Guess a rational function or an algebraic equation from coefficients.
    Guess {
        #[arg(value_enum)]
        kind: GuessKind,
        /// Series file.
        #[arg(long)]
        coeffs: String,
        /// Largest degrees: numerator and denominator, or t and the unknown.
        #[arg(long, num_args = 2, value_names = ["D", "E"])]
        max_deg: Vec<usize>,
        /// Name of the unknown in an algebraic guess.
        #[arg(long, default_value = "A")]
        var: String,
    },
    /// Exponential growth and polynomial correction of coefficients.
    Asymptotics {
        /// A rational function, instead of an input.
        expr: Option<String>,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        var: Option<String>,
        /// Constant term of the branch to analyse (default: the branch through 0).
        #[arg(long)]
        branch: Option<String>,
    },
    /// Dominant poles of every section, as evidence for Soittola's criterion.
    Soittola {
        expr: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = 1)]
        pmax: usize,
        /// Relative modulus separation treated as equality.
        #[arg(long, default_value_t = 1e-6)]
        precision: f64,
    },
    /// The section sum_n a_{pn+r} t^n of a rational series.
    Section {
        expr: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
    },
    /// Coefficients of a rational function.
    Expand {
        expr: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Truncated power-series arithmetic.
    Series {
        #[arg(value_enum)]
        op: SeriesOp,
        a: String,
        b: Option<String>,
    },
    /// [s^k] of a rational function in t and s.
    Slice {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
    },
    /// Diagonal sum_n [x^n y^n] of a rational function in x and y.
    Diagonal { expr: String },
    /// Linear extensions and P-partitions of a naturally labelled poset.
    Poset {
        #[arg(long)]
        file: Option<String>,
        /// Number of elements, with --relations.
        #[arg(long)]
        size: Option<usize>,
        /// Covering relations such as "1<3,2<3".
        #[arg(long)]
        relations: Option<String>,
        /// Compare with exhaustive enumeration up to this weight.
        #[arg(long)]
        check: Option<usize>,
    },
    /// Lattice points of a cone of half-spaces, counted by coordinate sum.
    Cone {
        #[arg(long)]
        file: String,
    },
    /// [t^n] Psi(U) where U = t Phi(U).
    Lagrange {
        phi: String,
        /// Defaults to the unknown itself.
        psi: Option<String>,
        #[arg(long)]
        n: usize,
        /// Variable of Phi and Psi.
        #[arg(long, default_value = "u")]
        var: String,
    },
    /// Resultant of two polynomials in a variable.
    Resultant {
        p: String,
        q: String,
        #[arg(long)]
        var: String,
    },
    /// Discriminant of a polynomial in a variable.
    Discriminant {
        p: String,
        #[arg(long)]
        var: String,
    },
    /// The built-in corpus of reproductions.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Names of the built-in fixtures.
    Fixtures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GuessKind {
    Rational,
    Algebraic,
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    List,
    Run {
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, env = "GFKIT_SCALE", default_value = "default")]
        scale: String,
    },
}

fn emit(d: &Doc, format: Format) {
    let s = match format {
        Format::Text => d.render_text(),
        Format::Structured => d.render_json(),
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match commands::execute(cli) {
        Ok(d) => {
            emit(&d, format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = e.code();
            match e {
                CliError::SuiteFailure(d) => {
                    emit(&d, format);
                    eprintln!("gfkit: some checks failed");
                }
                CliError::Usage(m) => eprintln!("gfkit: {m}"),
                CliError::Parse(m) => eprintln!("gfkit: parse error: {m}"),
                CliError::Compute(m) => eprintln!("gfkit: {m}"),
            }
            ExitCode::from(code)
        }
    }
}
