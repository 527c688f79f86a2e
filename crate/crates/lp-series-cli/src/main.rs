//! Command-line interface to the `L_p` principal series classifier.
//!
//! Exit codes: 0 on success, 2 on parameter errors, 1 on internal failures.
//! Output is machine-readable JSON by default (`--format text` for plain
//! lines); rationals are serialized as `"a/b"` strings in lowest terms so
//! exactness survives the text boundary.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};

use lp_series::classifier::{
    decide, equivalent, exceptional_p_set, CharacterLabel, ReprParams,
};
use lp_series::numerics::{verify_suite, SuiteConfig};
use lp_series::structure::GroupId;
use lp_series::Error;

#[derive(Parser)]
#[command(
    name = "lp-series",
    version,
    about = "Classify the irreducible L_p principal series of rank-one simple Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide irreducibility of pi(P, chi, lambda, p).
    Classify {
        /// Group family: SO0, SU, Sp, F4, SL2R, SL2C (or a token like "SU(2,1)").
        #[arg(long)]
        group: String,
        /// Series parameter n for SO0/SU/Sp.
        #[arg(long)]
        n: Option<u32>,
        /// Character: "trivial", "sign", an integer m, or a half-integer "t/2".
        #[arg(long, default_value = "trivial", allow_hyphen_values = true)]
        chi: String,
        /// Spectral parameter (real).
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lambda: f64,
        /// Exponent p as an exact rational "a/b".
        #[arg(long)]
        p: String,
    },
    /// Print the exceptional p-set of pi(P, chi, 0, p).
    ExceptionalSet {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "trivial", allow_hyphen_values = true)]
        chi: String,
    },
    /// Test equivalence of two parameter tuples "GROUP,chi,lambda,p".
    Equivalence {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Run the numerical verification suite for SL2(R).
    Verify {
        #[arg(long, default_value = "trivial")]
        chi: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lambda: f64,
        /// Exponent p (rational "a/b" or decimal).
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1024)]
        nodes: usize,
        #[arg(long, default_value_t = 16)]
        bandlimit: usize,
    },
    /// Print exceptional sets for all supported groups up to a series bound.
    Table {
        /// Largest series parameter n for the classical families.
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
}

struct CliError {
    code: u8,
    message: String,
}

fn param_error(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn from_lib(err: Error) -> CliError {
    let code = match err {
        Error::UnsupportedGroup(_)
        | Error::ExponentOutOfRange(_)
        | Error::ExponentIsTwo
        | Error::IncompatibleCharacter { .. }
        | Error::NotAnSl2Character
        | Error::NotIrreducible
        | Error::QuadratureTooCoarse { .. } => 2,
        _ => 1,
    };
    CliError {
        code,
        message: err.to_string(),
    }
}

fn parse_group(family: &str, n: Option<u32>) -> Result<GroupId, CliError> {
    if family.contains('(') {
        return parse_group_token(family);
    }
    let group = match (family, n) {
        ("SO0" | "so0", Some(n)) => GroupId::So0(n),
        ("SU" | "su", Some(n)) => GroupId::Su(n),
        ("Sp" | "sp" | "SP", Some(n)) => GroupId::Sp(n),
        ("SO0" | "so0" | "SU" | "su" | "Sp" | "sp" | "SP", None) => {
            return Err(param_error(format!("group {family} requires --n")))
        }
        ("F4" | "f4", _) => GroupId::F4,
        ("SL2R" | "sl2r", _) => GroupId::Sl2R,
        ("SL2C" | "sl2c", _) => GroupId::Sl2C,
        _ => return Err(param_error(format!("unknown group family {family}"))),
    };
    group.validate().map_err(from_lib)?;
    Ok(group)
}

/// Parses a self-contained token such as "SU(2,1)", "F4", "SL2R".
fn parse_group_token(token: &str) -> Result<GroupId, CliError> {
    let t = token.trim();
    match t {
        "F4" | "f4" | "F4(-20)" => return Ok(GroupId::F4),
        "SL2R" | "sl2r" | "SL2(R)" => return Ok(GroupId::Sl2R),
        "SL2C" | "sl2c" | "SL2(C)" => return Ok(GroupId::Sl2C),
        _ => {}
    }
    let open = t
        .find('(')
        .ok_or_else(|| param_error(format!("cannot parse group token {token}")))?;
    let family = &t[..open];
    let inner = t[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| param_error(format!("cannot parse group token {token}")))?;
    let mut parts = inner.split(',');
    let n: u32 = parts
        .next()
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| param_error(format!("cannot parse series parameter in {token}")))?;
    if let Some(rest) = parts.next() {
        if rest.trim() != "1" {
            return Err(param_error(format!("only rank-one groups supported: {token}")));
        }
    }
    parse_group(family, Some(n))
}

fn parse_chi(s: &str) -> Result<CharacterLabel, CliError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "trivial" | "1_m" => return Ok(CharacterLabel::Trivial),
        "sign" | "sgn" | "epsilon" => return Ok(CharacterLabel::Sign),
        _ => {}
    }
    let w: Rational64 = s
        .trim()
        .parse()
        .map_err(|_| param_error(format!("cannot parse character {s}")))?;
    CharacterLabel::from_weight(w).map_err(from_lib)
}

fn parse_rational(s: &str) -> Result<Rational64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| param_error(format!("cannot parse rational {s} (expected \"a/b\")")))
}

fn parse_exponent_f64(s: &str) -> Result<f64, CliError> {
    if let Ok(r) = s.trim().parse::<Rational64>() {
        return Ok(*r.numer() as f64 / *r.denom() as f64);
    }
    s.trim()
        .parse()
        .map_err(|_| param_error(format!("cannot parse exponent {s}")))
}

fn parse_tuple(s: &str) -> Result<ReprParams, CliError> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_owned());
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    parts.push(current.trim().to_owned());
    if parts.len() != 4 {
        return Err(param_error(format!(
            "expected \"GROUP,chi,lambda,p\", got {s}"
        )));
    }
    let group = parse_group_token(&parts[0])?;
    let chi = parse_chi(&parts[1])?;
    let lambda: f64 = parts[2]
        .parse()
        .map_err(|_| param_error(format!("cannot parse lambda {}", parts[2])))?;
    let p = parse_rational(&parts[3])?;
    ReprParams::new(group, chi, lambda, p).map_err(from_lib)
}

fn rational_string(r: &Rational64) -> String {
    r.to_string()
}

fn group_json(group: &GroupId) -> (Value, Value) {
    let n = match group.n() {
        Some(n) => json!(n),
        None => Value::Null,
    };
    (json!(group.family_name()), n)
}

fn emit(format: Format, json: Value, text: String) {
    match format {
        Format::Json => println!("{json}"),
        Format::Text => println!("{text}"),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify {
            group,
            n,
            chi,
            lambda,
            p,
        } => {
            let group = parse_group(&group, n)?;
            let chi = parse_chi(&chi)?;
            let p = parse_rational(&p)?;
            let params = ReprParams::new(group, chi, lambda, p).map_err(from_lib)?;
            let verdict = decide(&params).map_err(from_lib)?;
            let (family, n_json) = group_json(&group);
            let payload = json!({
                "group": family,
                "n": n_json,
                "chi": chi.to_string(),
                "lambda": lambda,
                "p": rational_string(&p),
                "irreducible": verdict.irreducible,
                "criterion": verdict.criterion.to_string(),
                "clause": verdict.clause,
            });
            let text = format!(
                "{group} chi={chi} lambda={lambda} p={p}: {} ({}, {})",
                if verdict.irreducible {
                    "irreducible"
                } else {
                    "not irreducible"
                },
                verdict.criterion,
                verdict.clause
            );
            emit(cli.format, payload, text);
        }
        Command::ExceptionalSet { group, n, chi } => {
            let group = parse_group(&group, n)?;
            let chi = parse_chi(&chi)?;
            let set = exceptional_p_set(&group, &chi).map_err(from_lib)?;
            let strings: Vec<String> = set.iter().map(rational_string).collect();
            emit(cli.format, json!(strings), strings.join(" "));
        }
        Command::Equivalence { a, b } => {
            let pa = parse_tuple(&a)?;
            let pb = parse_tuple(&b)?;
            let eq = equivalent(&pa, &pb).map_err(from_lib)?;
            emit(
                cli.format,
                json!({ "equivalent": eq }),
                format!("equivalent: {eq}"),
            );
        }
        Command::Verify {
            chi,
            lambda,
            p,
            trials,
            seed,
            nodes,
            bandlimit,
        } => {
            let chi = parse_chi(&chi)?;
            let p = parse_exponent_f64(&p)?;
            if p <= 1.0 {
                return Err(param_error(format!("exponent p must exceed 1, got {p}")));
            }
            let cfg = SuiteConfig {
                nodes,
                bandlimit,
                ..SuiteConfig::new(chi, lambda, p, trials, seed)
            };
            let reports = verify_suite(&cfg).map_err(from_lib)?;
            match cli.format {
                Format::Json => {
                    // Serialize the structs directly so the report fields keep
                    // their declared order.
                    let json = serde_json::to_string(&reports).map_err(|e| CliError {
                        code: 1,
                        message: e.to_string(),
                    })?;
                    println!("{json}");
                }
                Format::Text => {
                    for r in &reports {
                        println!("{}: max deviation {:.3e}", r.property, r.max_deviation);
                    }
                }
            }
        }
        Command::Table { max_n } => {
            let mut rows: Vec<(GroupId, CharacterLabel)> = Vec::new();
            for n in 2..=max_n {
                rows.push((GroupId::So0(n), CharacterLabel::Trivial));
                if n == 3 {
                    for m in -2..=2i64 {
                        rows.push((GroupId::So0(3), CharacterLabel::IntChar(m)));
                    }
                }
                let bound = 2 * i64::from(n);
                for m in -bound..=bound {
                    rows.push((GroupId::Su(n), CharacterLabel::IntChar(m)));
                }
                rows.push((GroupId::Sp(n), CharacterLabel::Trivial));
            }
            rows.push((GroupId::F4, CharacterLabel::Trivial));
            rows.push((GroupId::Sl2R, CharacterLabel::Trivial));
            rows.push((GroupId::Sl2R, CharacterLabel::Sign));
            for t in -4..=4i64 {
                let chi = if t % 2 == 0 {
                    CharacterLabel::IntChar(t / 2)
                } else {
                    CharacterLabel::HalfIntChar(t)
                };
                rows.push((GroupId::Sl2C, chi));
            }

            let mut out = Vec::new();
            let mut lines = Vec::new();
            for (group, chi) in rows {
                let set = exceptional_p_set(&group, &chi).map_err(from_lib)?;
                let strings: Vec<String> = set.iter().map(rational_string).collect();
                let (family, n_json) = group_json(&group);
                out.push(json!({
                    "group": family,
                    "n": n_json,
                    "chi": chi.to_string(),
                    "exceptional_set": strings,
                }));
                lines.push(format!(
                    "{group} chi={chi}: {}",
                    if strings.is_empty() {
                        "-".to_owned()
                    } else {
                        strings.join(" ")
                    }
                ));
            }
            emit(cli.format, json!(out), lines.join("\n"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
