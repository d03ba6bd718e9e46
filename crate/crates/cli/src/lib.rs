//! Command-line front end: argument parsing, JSON input handling and output
//! rendering. `main.rs` only maps outcomes to exit codes.

use std::fmt::Write as _;
use std::io::Read;

use a1weyl::{
    affine_element, affine_translation_action, affine_twisted_action, bfs_lengths,
    classical_affine_length, enumerate_roots, find_conjugator, height, invariant_matrix,
    inversion_count_nu1, is_root_basis, length_pi0, pi0_coordinates, pi0_generators, pi_n_family,
    reduced_word_pi0, verify_theorem_lft, LengthReport, RootBasis, RootVector, WeylElement,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "a1weyl",
    version,
    about = "Weyl groups of type A1 extended affine root systems"
)]
pub struct Cli {
    /// Nullity ν (rank of the radical).
    #[arg(long, global = true)]
    pub nullity: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Inputs are inline JSON values or `@path` references; with no inputs the
/// values are read from stdin.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length over the fundamental basis of an element.
    Length { inputs: Vec<String> },
    /// Reduced word over the fundamental basis, as generator indices.
    Word { inputs: Vec<String> },
    /// Image of a root (second input) under an element (first input).
    Act { inputs: Vec<String> },
    /// Product of two elements.
    Mul { inputs: Vec<String> },
    /// Inverse of an element.
    Inv { inputs: Vec<String> },
    /// Conjugate `a b a⁻¹` of two elements.
    Conj { inputs: Vec<String> },
    /// Height of a root.
    Height { inputs: Vec<String> },
    /// All roots with |height| at most H.
    Roots {
        #[arg(long)]
        max_height: u64,
    },
    /// Whether a list of roots is a root basis.
    BasisCheck { inputs: Vec<String> },
    /// Coordinates of σ₁..σ_ν in a root basis.
    InvariantMatrix { inputs: Vec<String> },
    /// An element mapping the first basis onto the second, or null.
    FindConjugator { inputs: Vec<String> },
    /// The non-conjugate root basis Π_n.
    PinFamily {
        #[arg(long)]
        n: i64,
    },
    /// Compare the closed-form length with Cayley-graph distances.
    VerifyBfs {
        #[arg(long)]
        depth: usize,
        /// Print only the summary line.
        #[arg(long)]
        summary_only: bool,
    },
    /// Affine (ν = 1) cross-checks over translations n ∈ [−K, K].
    VerifyAffine {
        #[arg(long)]
        range: i64,
    },
    /// Number of elements at each distance from the identity.
    Growth {
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed JSON input: {0}")]
    MalformedJson(String),
    #[error("nullity mismatch: --nullity is {expected} but input has nullity {found}")]
    NullityMismatch { expected: usize, found: usize },
    #[error("expected {expected} input value(s), got {found}")]
    Arity { expected: usize, found: usize },
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Library(#[from] a1weyl::Error),
}

/// Rendered output and whether every verification in it passed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            verified: true,
        }
    }
}

fn read_values(
    inputs: &[String],
    stdin: &mut dyn Read,
) -> Result<Vec<serde_json::Value>, CliError> {
    let malformed = |e: serde_json::Error| CliError::MalformedJson(e.to_string());
    if inputs.is_empty() {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        return serde_json::Deserializer::from_str(&buf)
            .into_iter::<serde_json::Value>()
            .collect::<Result<_, _>>()
            .map_err(malformed);
    }
    inputs
        .iter()
        .map(|s| {
            let text = match s.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)?,
                None => s.clone(),
            };
            serde_json::from_str(&text).map_err(malformed)
        })
        .collect()
}

fn decode<T: DeserializeOwned>(value: serde_json::Value) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::MalformedJson(e.to_string()))
}

trait HasNullity {
    fn nullity_of(&self) -> usize;
}

impl HasNullity for WeylElement {
    fn nullity_of(&self) -> usize {
        self.nullity()
    }
}

impl HasNullity for RootVector {
    fn nullity_of(&self) -> usize {
        self.nullity()
    }
}

struct Inputs {
    values: Vec<serde_json::Value>,
    nullity: usize,
}

impl Inputs {
    fn expect(&self, n: usize) -> Result<(), CliError> {
        if self.values.len() == n {
            Ok(())
        } else {
            Err(CliError::Arity {
                expected: n,
                found: self.values.len(),
            })
        }
    }

    fn check<T: HasNullity>(&self, item: T) -> Result<T, CliError> {
        if item.nullity_of() == self.nullity {
            Ok(item)
        } else {
            Err(CliError::NullityMismatch {
                expected: self.nullity,
                found: item.nullity_of(),
            })
        }
    }

    fn element(&self, i: usize) -> Result<WeylElement, CliError> {
        self.check(decode::<WeylElement>(self.values[i].clone())?)
    }

    fn root(&self, i: usize) -> Result<RootVector, CliError> {
        self.check(decode::<RootVector>(self.values[i].clone())?)
    }

    fn roots(&self, i: usize) -> Result<Vec<RootVector>, CliError> {
        let roots: Vec<RootVector> = decode(self.values[i].clone())?;
        if roots.len() != self.nullity + 1 {
            return Err(CliError::Arity {
                expected: self.nullity + 1,
                found: roots.len(),
            });
        }
        roots.into_iter().map(|r| self.check(r)).collect()
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn header(prefix: &str, name: &str, nullity: usize) -> String {
    let cols = (1..=nullity).map(|i| format!("{name}{i}"));
    join(std::iter::once(prefix.to_string()).chain(cols))
}

fn element_row(w: &WeylElement) -> String {
    join(std::iter::once(w.parity().sign()).chain(w.translation().coords().iter().copied()))
}

fn root_row(r: &RootVector) -> String {
    join(std::iter::once(r.k()).chain(r.sigma().coords().iter().copied()))
}

fn render_element(w: &WeylElement, format: Format) -> String {
    match format {
        Format::Json => json(w),
        Format::Csv => format!("{}\n{}\n", header("eps", "t", w.nullity()), element_row(w)),
    }
}

fn render_roots(roots: &[RootVector], nullity: usize, format: Format) -> String {
    match format {
        Format::Json => json(&roots),
        Format::Csv => {
            let mut out = header("k", "sigma", nullity) + "\n";
            for r in roots {
                out += &root_row(r);
                out.push('\n');
            }
            out
        }
    }
}

fn render_scalar<T: Serialize + ToString>(v: T, format: Format) -> String {
    match format {
        Format::Json => json(&v),
        Format::Csv => format!("{}\n", v.to_string()),
    }
}

fn report_row(r: &LengthReport) -> String {
    let witness = r
        .witness
        .indices()
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "{},{},{},{},{}",
        element_row(&r.element),
        r.formula_length,
        r.bfs_distance,
        r.agree,
        witness
    )
}

#[derive(Serialize)]
struct Summary {
    nullity: usize,
    depth: usize,
    elements: usize,
    disagreements: usize,
}

#[derive(Serialize)]
struct AffineSummary {
    range: i64,
    checks: usize,
    failures: usize,
}

fn require_nullity(cli: &Cli) -> Result<usize, CliError> {
    match cli.nullity {
        None => Err(CliError::Parameter("--nullity is required".into())),
        Some(0) => Err(CliError::Parameter("--nullity must be at least 1".into())),
        Some(n) => Ok(n),
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let format = cli.format;
    let load = |inputs: &[String], stdin: &mut dyn Read| -> Result<Inputs, CliError> {
        Ok(Inputs {
            nullity: require_nullity(cli)?,
            values: read_values(inputs, stdin)?,
        })
    };

    let text = match &cli.command {
        Command::Length { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            render_scalar(length_pi0(&inp.element(0)?)?, format)
        }
        Command::Word { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            let word = reduced_word_pi0(&inp.element(0)?)?;
            match format {
                Format::Json => json(&word),
                Format::Csv => join(word.indices()) + "\n",
            }
        }
        Command::Act { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(2)?;
            let image = inp.element(0)?.act(&inp.root(1)?)?;
            match format {
                Format::Json => json(&image),
                Format::Csv => format!(
                    "{}\n{}\n",
                    header("k", "sigma", inp.nullity),
                    root_row(&image)
                ),
            }
        }
        Command::Mul { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(2)?;
            render_element(&inp.element(0)?.multiply(&inp.element(1)?)?, format)
        }
        Command::Inv { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            render_element(&inp.element(0)?.inverse()?, format)
        }
        Command::Conj { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(2)?;
            render_element(&inp.element(0)?.conjugate(&inp.element(1)?)?, format)
        }
        Command::Height { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            render_scalar(height(&inp.root(0)?)?, format)
        }
        Command::Roots { max_height } => {
            let nullity = require_nullity(cli)?;
            render_roots(&enumerate_roots(nullity, *max_height)?, nullity, format)
        }
        Command::BasisCheck { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            render_scalar(is_root_basis(&inp.roots(0)?)?, format)
        }
        Command::InvariantMatrix { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(1)?;
            let matrix = invariant_matrix(&RootBasis::new(inp.roots(0)?)?)?;
            match format {
                Format::Json => json(&matrix),
                Format::Csv => matrix.iter().map(|row| join(row) + "\n").collect(),
            }
        }
        Command::FindConjugator { inputs } => {
            let inp = load(inputs, stdin)?;
            inp.expect(2)?;
            let found = find_conjugator(&inp.roots(0)?, &inp.roots(1)?)?;
            match (found, format) {
                (Some(w), f) => render_element(&w, f),
                (None, Format::Json) => "null\n".into(),
                (None, Format::Csv) => format!("{}\n", header("eps", "t", inp.nullity)),
            }
        }
        Command::PinFamily { n } => {
            let nullity = require_nullity(cli)?;
            render_roots(&pi_n_family(nullity, *n)?, nullity, format)
        }
        Command::VerifyBfs {
            depth,
            summary_only,
        } => {
            let nullity = require_nullity(cli)?;
            return verify_bfs(nullity, *depth, *summary_only, format);
        }
        Command::VerifyAffine { range } => {
            if cli.nullity.is_some_and(|n| n != 1) {
                return Err(CliError::Parameter(
                    "verify-affine requires --nullity 1".into(),
                ));
            }
            if *range < 0 {
                return Err(CliError::Parameter("--range must be non-negative".into()));
            }
            return verify_affine(*range, format);
        }
        Command::Growth { depth } => {
            let nullity = require_nullity(cli)?;
            let ball = bfs_lengths(&pi0_generators(nullity)?, *depth)?;
            match format {
                Format::Json => json(&ball.level_sizes()),
                Format::Csv => {
                    let mut out = String::from("distance,count\n");
                    for (d, c) in ball.level_sizes().iter().enumerate() {
                        let _ = writeln!(out, "{d},{c}");
                    }
                    out
                }
            }
        }
    };
    Ok(Outcome::ok(text))
}

fn verify_bfs(
    nullity: usize,
    depth: usize,
    summary_only: bool,
    format: Format,
) -> Result<Outcome, CliError> {
    let reports = verify_theorem_lft(nullity, depth)?;
    let disagreements = reports.iter().filter(|r| !r.agree).count();
    let summary = Summary {
        nullity,
        depth,
        elements: reports.len(),
        disagreements,
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            if !summary_only {
                for r in &reports {
                    out += &json(r);
                }
            }
            #[derive(Serialize)]
            struct Wrapped<'a> {
                summary: &'a Summary,
            }
            out += &json(&Wrapped { summary: &summary });
        }
        Format::Csv => {
            if !summary_only {
                out += &header("eps", "t", nullity);
                out += ",formula_length,bfs_distance,agree,witness\n";
                for r in &reports {
                    out += &report_row(r);
                    out.push('\n');
                }
            } else {
                out += "nullity,depth,elements,disagreements\n";
                let _ = writeln!(out, "{nullity},{depth},{},{disagreements}", reports.len());
            }
        }
    }
    Ok(Outcome {
        text: out,
        verified: disagreements == 0,
    })
}

fn verify_affine(range: i64, format: Format) -> Result<Outcome, CliError> {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in -range..=range {
        for s in [0u8, 1] {
            let w = affine_element(s, n)?;
            let len = length_pi0(&w)?;
            checks += 2;
            let classical = classical_affine_length(s, n)?;
            if classical != len {
                failures.push(format!(
                    "length s={s} n={n}: formula {len}, classical {classical}"
                ));
            }
            let inversions = inversion_count_nu1(&w, len + 2)?;
            if inversions != len {
                failures.push(format!(
                    "inversions s={s} n={n}: {inversions}, length {len}"
                ));
            }
        }
        for m in -range..=range {
            for k in -1..=1 {
                let alpha = RootVector::from_parts(k, &[m])?;
                for s in [0u8, 1] {
                    checks += 1;
                    let image = pi0_coordinates(&affine_element(s, n)?.act(&alpha)?)?;
                    let closed = if s == 0 {
                        affine_translation_action(n, m, k)?
                    } else {
                        affine_twisted_action(n, m, k)?
                    };
                    if (image[0], image[1]) != closed {
                        failures.push(format!("action s={s} n={n} m={m} k={k}"));
                    }
                }
            }
        }
    }
    let summary = AffineSummary {
        range,
        checks,
        failures: failures.len(),
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            for f in &failures {
                out += &json(&serde_json::json!({ "failure": f }));
            }
            out += &json(&serde_json::json!({ "summary": summary }));
        }
        Format::Csv => {
            out += "range,checks,failures\n";
            let _ = writeln!(out, "{range},{checks},{}", failures.len());
        }
    }
    Ok(Outcome {
        text: out,
        verified: failures.is_empty(),
    })
}
