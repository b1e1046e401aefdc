//! Command-line front end.
//!
//! Every subcommand produces an [`OutputRecord`]. By default it is printed as
//! indented text; with `--json` it is printed as a single JSON object whose
//! keys are sorted and whose integers are all decimal strings, so the same
//! invocation always yields the same bytes.
//!
//! Exit codes: 0 on success, 2 for usage or validation errors, 3 when a
//! mathematical hypothesis fails (non-coprime moduli, not liftable, not
//! idempotent).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{factor, Natural};
use crate::crt::{crt_solve, CongruenceSystem};
use crate::error::Error;
use crate::idempotents::{
    complement, enumerate_idempotents_with_cap, join, meet, nilradical, primitive_basis, xor_add,
    DEFAULT_ENUMERATION_CAP,
};
use crate::lifting::lift_idempotent;
use crate::residue::Residue;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zmod",
    version,
    about = "Idempotents, CRT and nilradical of Z/mZ"
)]
pub struct Cli {
    /// Print one machine-readable JSON record instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prime factorization of m
    Factor { m: String },
    /// All idempotents of Z/mZ and the primitive basis generating them
    Idempotents {
        m: String,
        /// Only report the primitive basis, never the 2^n members
        #[arg(long)]
        basis_only: bool,
        /// Refuse to enumerate when m has more distinct primes than this
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Solve x = r (mod m) for each "r:m" token (pairwise coprime moduli)
    Crt {
        #[arg(required = true, allow_hyphen_values = true)]
        pairs: Vec<String>,
    },
    /// Lift f to the idempotent of Z/mZ congruent to it modulo the nilradical
    Lift { f: String, m: String },
    /// Nilradical generator and number of nilpotents of Z/mZ
    Nilpotents { m: String },
    /// Boolean-algebra operation on idempotents; the last argument is m
    Boolean {
        op: BooleanOp,
        #[arg(required = true, num_args = 2..=3)]
        args: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BooleanOp {
    Meet,
    Join,
    Complement,
    Xor,
}

impl BooleanOp {
    fn name(self) -> &'static str {
        match self {
            BooleanOp::Meet => "meet",
            BooleanOp::Join => "join",
            BooleanOp::Complement => "complement",
            BooleanOp::Xor => "xor",
        }
    }

    fn arity(self) -> usize {
        match self {
            BooleanOp::Complement => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(e) if e.is_precondition_failure() => EXIT_PRECONDITION,
            _ => EXIT_USAGE,
        }
    }
}

/// One invocation's output: the command, its parsed inputs and its result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: BTreeMap<String, Value>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result: BTreeMap::new(),
        }
    }

    fn input(mut self, key: &str, value: Value) -> Self {
        self.inputs.insert(key.to_string(), value);
        self
    }

    fn output(mut self, key: &str, value: Value) -> Self {
        self.result.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records hold only strings, arrays and maps")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k}: {}", render(v));
        }
        for (k, v) in &self.result {
            let _ = writeln!(out, "{k}: {}", render(v));
        }
        out
    }

    /// Result field as a string, if present and a string.
    pub fn result_str(&self, key: &str) -> Option<&str> {
        self.result.get(key).and_then(Value::as_str)
    }

    /// Result field as a list of strings, if present and an array of strings.
    pub fn result_strs(&self, key: &str) -> Option<Vec<&str>> {
        self.result
            .get(key)?
            .as_array()?
            .iter()
            .map(Value::as_str)
            .collect()
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|item| match item {
                Value::Array(_) => format!("({})", render(item)),
                _ => render(item),
            })
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn dec(n: &Natural) -> Value {
    Value::String(n.to_string())
}

fn dec_list<'a>(ns: impl IntoIterator<Item = &'a Natural>) -> Value {
    Value::Array(ns.into_iter().map(dec).collect())
}

fn parse_natural(what: &str, s: &str) -> Result<Natural, CliError> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Usage(format!(
            "{what} must be a nonnegative decimal integer, got {s:?}"
        )));
    }
    Ok(BigUint::from_str(s).expect("validated digits"))
}

fn parse_integer(what: &str, s: &str) -> Result<BigInt, CliError> {
    let s = s.trim();
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Usage(format!(
            "{what} must be a decimal integer, got {s:?}"
        )));
    }
    Ok(BigInt::from_str(s).expect("validated digits"))
}

fn parse_modulus(s: &str) -> Result<Natural, CliError> {
    let m = parse_natural("modulus", s)?;
    if m == BigUint::from(0u32) {
        return Err(Error::ZeroModulus.into());
    }
    Ok(m)
}

/// Splits "r:m" tokens separated by commas or whitespace.
pub fn parse_congruences(tokens: &[String]) -> Result<Vec<(BigInt, Natural)>, CliError> {
    let mut out = Vec::new();
    for token in tokens
        .iter()
        .flat_map(|t| t.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
    {
        let (r, m) = token.split_once(':').ok_or_else(|| {
            CliError::Usage(format!("congruence must look like r:m, got {token:?}"))
        })?;
        out.push((parse_integer("remainder", r)?, parse_modulus(m)?));
    }
    if out.is_empty() {
        return Err(CliError::Usage("no congruences given".to_string()));
    }
    Ok(out)
}

pub fn cmd_factor(m: &str) -> Result<OutputRecord, CliError> {
    let m = parse_modulus(m)?;
    let f = factor(&m)?;
    let factors = f
        .factors()
        .iter()
        .map(|(p, c)| Value::Array(vec![dec(p), Value::String(c.to_string())]))
        .collect();
    Ok(OutputRecord::new("factor")
        .input("m", dec(&m))
        .output("factorization", Value::String(f.to_string()))
        .output("factors", Value::Array(factors))
        .output("omega", Value::String(f.num_primes().to_string()))
        .output("radical", dec(&f.radical()))
        .output("max_exponent", Value::String(f.max_exponent().to_string())))
}

pub fn cmd_idempotents(m: &str, cap: usize, basis_only: bool) -> Result<OutputRecord, CliError> {
    let m = parse_modulus(m)?;
    let f = factor(&m)?;
    let count = BigUint::from(1u32) << f.num_primes();
    let mut record = OutputRecord::new("idempotents")
        .input("m", dec(&m))
        .output("count", dec(&count))
        .output("prime_powers", dec_list(&f.prime_powers()));
    if basis_only {
        record = record
            .input("basis_only", Value::String("true".into()))
            .output("basis", dec_list(primitive_basis(&f).elements()));
    } else {
        let set = enumerate_idempotents_with_cap(&f, cap)?;
        record = record
            .output("basis", dec_list(set.basis().elements()))
            .output("members", dec_list(set.members()));
    }
    Ok(record)
}

pub fn cmd_crt(pairs: &[String]) -> Result<OutputRecord, CliError> {
    let parsed = parse_congruences(pairs)?;
    let echo = parsed
        .iter()
        .map(|(r, m)| Value::Array(vec![Value::String(r.to_string()), dec(m)]))
        .collect();
    let system = CongruenceSystem::new(parsed)?;
    let x = crt_solve(&system)?;
    Ok(OutputRecord::new("crt")
        .input("congruences", Value::Array(echo))
        .output("x", dec(x.value()))
        .output("modulus", dec(x.modulus())))
}

pub fn cmd_lift(f: &str, m: &str) -> Result<OutputRecord, CliError> {
    let f = parse_natural("f", f)?;
    let m = parse_modulus(m)?;
    let out = lift_idempotent(&Residue::from_natural(&f, &m)?)?;
    Ok(OutputRecord::new("lift")
        .input("f", dec(&f))
        .input("m", dec(&m))
        .output("lifted", dec(out.lifted.value()))
        .output("difference", dec(out.difference.value()))
        .output("iterations", Value::String(out.iterations.to_string())))
}

pub fn cmd_nilpotents(m: &str) -> Result<OutputRecord, CliError> {
    let m = parse_modulus(m)?;
    let nil = nilradical(&factor(&m)?);
    Ok(OutputRecord::new("nilpotents")
        .input("m", dec(&m))
        .output("generator", dec(&nil.generator))
        .output("count", dec(&nil.nilpotent_count)))
}

/// `args` holds the operands followed by the modulus.
pub fn cmd_boolean(op: BooleanOp, args: &[String]) -> Result<OutputRecord, CliError> {
    if args.len() != op.arity() + 1 {
        return Err(CliError::Usage(format!(
            "{} takes {} operand(s) and a modulus",
            op.name(),
            op.arity()
        )));
    }
    let (operands, m) = args.split_at(op.arity());
    let m = parse_modulus(&m[0])?;
    let values = operands
        .iter()
        .map(|s| parse_natural("operand", s))
        .collect::<Result<Vec<_>, _>>()?;
    let residues = values
        .iter()
        .map(|v| Residue::from_natural(v, &m))
        .collect::<Result<Vec<_>, _>>()?;
    let value = match op {
        BooleanOp::Meet => meet(&residues[0], &residues[1])?,
        BooleanOp::Join => join(&residues[0], &residues[1])?,
        BooleanOp::Complement => complement(&residues[0])?,
        BooleanOp::Xor => xor_add(&residues[0], &residues[1])?,
    };
    Ok(OutputRecord::new("boolean")
        .input("op", Value::String(op.name().into()))
        .input("operands", dec_list(&values))
        .input("m", dec(&m))
        .output("value", dec(value.value())))
}

pub fn execute(command: &Command) -> Result<OutputRecord, CliError> {
    match command {
        Command::Factor { m } => cmd_factor(m),
        Command::Idempotents { m, basis_only, cap } => cmd_idempotents(m, *cap, *basis_only),
        Command::Crt { pairs } => cmd_crt(pairs),
        Command::Lift { f, m } => cmd_lift(f, m),
        Command::Nilpotents { m } => cmd_nilpotents(m),
        Command::Boolean { op, args } => cmd_boolean(*op, args),
    }
}

/// Runs a parsed command line, returning what to print on stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let record = execute(&cli.command)?;
    Ok(if cli.json {
        record.to_json() + "\n"
    } else {
        record.to_text()
    })
}
