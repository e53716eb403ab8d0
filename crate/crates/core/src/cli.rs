//! Command-line front end.
//!
//! [`run`] parses an argument list, executes the command and returns the
//! exit status together with everything meant for standard output and
//! standard error, so the binary is a thin wrapper and the whole interface
//! can be exercised in tests.
//!
//! Exit statuses: 0 on success, 1 when a verification reports failures, 2
//! for malformed input, 3 when a library precondition is not met.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::freealg::{free_to_json, parse_free, AdChain, FreePoly};
use crate::lyndon::{
    bracketing, inclusion_composition_detail, nested_bracket_string, to_lyndon_basis,
    LyndonCombination, PhiDecomposition,
};
use crate::theorems::{run_all, Suite, VerificationReport};
use crate::weyl::{
    brute_force_normal_form, parse_weyl, parse_weyl_word, phi_power, weyl_to_json, WeylPoly,
};
use crate::words::{exponent_form, is_regular, regular_decomposition, regular_factoring, Word};

const EXPRESSION_HELP: &str = "\
Words are strings over `a` and `b` (`1` is the empty word).
Free polynomials: sums of `coef*word` terms, e.g. `3/2*aab - ba + 1`.
Weyl polynomials use `A` and `B`, e.g. `3*B^2A - 1/2*A^3 + 2`.
Juxtaposition multiplies, `^` takes powers, `[x, y]` is the commutator xy - yx.";

#[derive(Debug, Parser)]
#[command(
    name = "hwlie",
    version,
    about = "Regular words, Lyndon-Shirshov bases and Heisenberg-Weyl algebra arithmetic",
    after_help = EXPRESSION_HELP
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Operations on a single word.
    #[command(subcommand)]
    Word(WordCommand),
    /// Regular bracketing of a regular word, nested and expanded.
    Bracket { word: String },
    /// Expand a free-algebra expression into canonical form.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Rewrite a Lie polynomial in the Lyndon-Shirshov basis.
    ToBasis {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Inclusion composition of the regular word W with its regular subword V.
    InclComp {
        w: String,
        v: String,
        /// Which occurrence of V (0 = leftmost).
        #[arg(long, default_value_t = 0)]
        occurrence: usize,
    },
    /// Heisenberg-Weyl algebra arithmetic.
    #[command(subcommand)]
    Weyl(WeylCommand),
    /// Apply the automorphism A -> B, B -> -A.
    Phi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Number of applications; negative values apply the inverse.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
    },
    /// Run a verification suite (or `all`).
    Verify {
        name: String,
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        cap: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum WordCommand {
    /// Is the word regular?
    Check { word: String },
    /// Regular factoring W = L * R with R the longest regular proper ending.
    Factor { word: String },
    /// Regular decomposition into nondecreasing regular factors.
    Decompose { word: String },
    /// Exponent form a^m1 b^n1 ... a^mk b^nk of a regular word.
    ExpForm { word: String },
}

#[derive(Debug, Subcommand)]
enum WeylCommand {
    /// Normal-ordered form B^m A^n of an expression.
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Treat the input as an A/B word and rewrite AB -> BA + 1 step by step.
        #[arg(long)]
        brute: bool,
    },
    /// Product of two expressions.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    status: i32,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Output {
            text,
            json,
            status: 0,
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    status: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let stdout = match cli.output {
                Format::Text => out.text,
                Format::Json => {
                    serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n"
                }
            };
            Outcome {
                status: out.status,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Library(e)) => Outcome {
            status: if matches!(e, Error::Parse(_)) { 2 } else { 3 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("values serialize")
}

fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Word(wc) => word_command(wc),
        Command::Bracket { word: w } => {
            let w = word(w)?;
            let expanded = bracketing(&w)?;
            let nested = nested_bracket_string(&w)?;
            Ok(Output::ok(
                format!("nested: {nested}\nexpanded: {expanded}\n"),
                json!({ "word": w, "nested": nested, "expanded": free_to_json(&expanded) }),
            ))
        }
        Command::Expand { expr } => {
            let f = parse_free(expr)?;
            Ok(Output::ok(format!("{f}\n"), to_value(&free_to_json(&f))))
        }
        Command::ToBasis { expr } => {
            let f = parse_free(expr)?;
            let l = to_lyndon_basis(&f)?;
            Ok(Output::ok(
                format!(
                    "nested: {}\nflat: {}\n",
                    l.to_nested_string(),
                    l.to_flat_string()
                ),
                to_value(&l.to_json()),
            ))
        }
        Command::InclComp { w, v, occurrence } => incl_comp(&word(w)?, &word(v)?, *occurrence),
        Command::Weyl(wc) => weyl_command(wc),
        Command::Phi { expr, power } => {
            let f = parse_weyl(expr)?;
            let image = phi_power(&f, power.rem_euclid(4) as u32);
            Ok(Output::ok(
                format!("{image}\n"),
                to_value(&weyl_to_json(&image)),
            ))
        }
        Command::Verify { name, bound, cap } => verify(name, *bound, *cap),
    }
}

fn word_command(wc: &WordCommand) -> Result<Output, Failure> {
    match wc {
        WordCommand::Check { word: w } => {
            let w = word(w)?;
            let regular = is_regular(&w);
            Ok(Output::ok(
                format!("regular: {regular}\n"),
                json!({ "word": w, "regular": regular }),
            ))
        }
        WordCommand::Factor { word: w } => {
            let w = word(w)?;
            let (l, r) = regular_factoring(&w)?;
            Ok(Output::ok(
                format!("left: {l}\nright: {r}\n"),
                json!({ "word": w, "left": l, "right": r }),
            ))
        }
        WordCommand::Decompose { word: w } => {
            let w = word(w)?;
            let factors = regular_decomposition(&w)?;
            let shown: Vec<String> = factors.iter().map(Word::to_string).collect();
            Ok(Output::ok(
                format!("factors: {}\n", shown.join(" ")),
                json!({ "word": w, "factors": factors }),
            ))
        }
        WordCommand::ExpForm { word: w } => {
            let w = word(w)?;
            let form = exponent_form(&w)?;
            let mut text = format!("{form}\n");
            if let Some(s) = form.peak_block() {
                text.push_str(&format!("s: {s}\n"));
            }
            Ok(Output::ok(
                text,
                json!({ "word": w, "pairs": form.pairs(), "s": form.peak_block() }),
            ))
        }
    }
}

fn weyl_command(wc: &WeylCommand) -> Result<Output, Failure> {
    let f: WeylPoly = match wc {
        WeylCommand::NormalForm { expr, brute: false } => parse_weyl(expr)?,
        WeylCommand::NormalForm { expr, brute: true } => {
            brute_force_normal_form(&parse_weyl_word(expr)?)
        }
        WeylCommand::Mul { left, right } => &parse_weyl(left)? * &parse_weyl(right)?,
    };
    Ok(Output::ok(format!("{f}\n"), to_value(&weyl_to_json(&f))))
}

#[derive(Serialize)]
struct InclCompJson<'a> {
    w: &'a Word,
    v: &'a Word,
    occurrence: usize,
    decomposition: &'a PhiDecomposition,
    angle: Vec<crate::freealg::WordTermJson>,
    raw: Vec<crate::freealg::WordTermJson>,
    raw_basis: Vec<crate::lyndon::LyndonTermJson>,
    leading_word: Option<&'a Word>,
    leading_coefficient: Option<String>,
    normalized: Vec<crate::freealg::WordTermJson>,
    trivial: bool,
}

fn incl_comp(w: &Word, v: &Word, occurrence: usize) -> Result<Output, Failure> {
    let c = inclusion_composition_detail(w, v, occurrence)?;
    let chain: &AdChain = &c.decomposition.chain;
    let lyndon: &LyndonCombination = &c.lyndon;
    let mut text = format!(
        "chain: {chain}\nhead: {}\ntail: {}\nangle: {}\nraw: {}\nraw in basis: {}\n",
        c.decomposition.head,
        c.decomposition.u_tail,
        c.angle,
        c.raw,
        lyndon.to_nested_string()
    );
    if let Some((lw, lc)) = &c.leading {
        text.push_str(&format!("leading: {lc} * {lw}\n"));
    }
    text.push_str(&format!(
        "composition: {}\ntrivial: {}\n",
        c.normalized,
        c.is_trivial()
    ));
    let js = InclCompJson {
        w,
        v,
        occurrence,
        decomposition: &c.decomposition,
        angle: free_to_json(&c.angle),
        raw: free_to_json(&c.raw),
        raw_basis: lyndon.to_json(),
        leading_word: c.leading.as_ref().map(|(w, _)| w),
        leading_coefficient: c.leading.as_ref().map(|(_, r)| r.to_string()),
        normalized: free_to_json(&c.normalized as &FreePoly),
        trivial: c.is_trivial(),
    };
    Ok(Output::ok(text, to_value(&js)))
}

fn verify(name: &str, bound: Option<u32>, cap: Option<u32>) -> Result<Output, Failure> {
    let reports: Vec<VerificationReport> = if name == "all" {
        if bound.is_some() || cap.is_some() {
            return Err(Failure::Usage(
                "`verify all` runs every suite at its default bounds and takes no --bound/--cap"
                    .to_string(),
            ));
        }
        run_all()?
    } else {
        let suite: Suite = name.parse()?;
        let bound = bound.unwrap_or(suite.default_bounds().0);
        vec![suite.run(bound, cap)?]
    };
    let passed = reports.iter().all(VerificationReport::passed);
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    let json = if reports.len() == 1 {
        to_value(&reports[0])
    } else {
        to_value(&reports)
    };
    Ok(Output {
        text,
        json,
        status: if passed { 0 } else { 1 },
    })
}
