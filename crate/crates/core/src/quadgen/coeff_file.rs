//! Plain-text coefficient files.
//!
//! ```text
//! zetaquad-coeffs 1
//! p 5
//! digits 19
//! omega0 2.354383173482941501e-1 3.295537698903362209e-2
//! omega 1 <re> <im>
//! ...
//! lambda 1 <re> <im>
//! ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

use super::rule::QuadratureRule;

pub const MAGIC: &str = "zetaquad-coeffs 1";

pub fn serialize_rule<T: Real>(rule: &QuadratureRule<T>) -> String {
    let d = rule.gen_digits as usize;
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "p {}", rule.p);
    let _ = writeln!(out, "digits {}", rule.gen_digits);
    let (re, im) = rule.omega0.to_sci_pair(d);
    let _ = writeln!(out, "omega0 {re} {im}");
    for (j, w) in rule.omega.iter().enumerate() {
        let (re, im) = w.to_sci_pair(d);
        let _ = writeln!(out, "omega {} {re} {im}", j + 1);
    }
    for (j, l) in rule.lambda.iter().enumerate() {
        let (re, im) = l.to_sci_pair(d);
        let _ = writeln!(out, "lambda {} {re} {im}", j + 1);
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> ZetaError {
    ZetaError::Parse { line, message: message.into() }
}

fn parse_count(line: usize, key: &str, fields: &[&str]) -> Result<usize> {
    match fields {
        [k, v] if *k == key => v
            .parse::<usize>()
            .map_err(|_| err(line, format!("`{key}` expects a non-negative integer, got `{v}`"))),
        _ => Err(err(line, format!("expected `{key} <integer>`"))),
    }
}

fn parse_value<T: Real>(line: usize, re: &str, im: &str, ctx: &PrecisionContext) -> Result<Complex<T>> {
    Complex::parse(re, im, ctx).ok_or_else(|| err(line, format!("malformed number `{re} {im}`")))
}

/// Parses a coefficient file; numbers are read at the precision of `ctx`.
pub fn parse_rule<T: Real>(text: &str, ctx: &PrecisionContext) -> Result<QuadratureRule<T>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| err(text.lines().count() + 1, format!("missing {what}")))
    };

    let (n, header) = next("header")?;
    if header.split_whitespace().collect::<Vec<_>>() != MAGIC.split_whitespace().collect::<Vec<_>>() {
        return Err(err(n, format!("expected header `{MAGIC}`")));
    }
    let (n, l) = next("`p` line")?;
    let p = parse_count(n, "p", &l.split_whitespace().collect::<Vec<_>>())?;
    if p == 0 {
        return Err(err(n, "p must be positive"));
    }
    let (n, l) = next("`digits` line")?;
    let digits = parse_count(n, "digits", &l.split_whitespace().collect::<Vec<_>>())?;
    let (n, l) = next("`omega0` line")?;
    let omega0 = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["omega0", re, im] => parse_value(n, re, im, ctx)?,
        _ => return Err(err(n, "expected `omega0 <re> <im>`")),
    };

    let mut read_block = |key: &str| -> Result<Vec<Complex<T>>> {
        let mut out = Vec::with_capacity(p);
        for j in 1..=p {
            let (n, l) = next(&format!("`{key} {j}` line"))?;
            let fields: Vec<&str> = l.split_whitespace().collect();
            match fields[..] {
                [k, idx, re, im] if k == key => {
                    if idx.parse::<usize>().ok() != Some(j) {
                        return Err(err(n, format!("expected index {j} for `{key}`, got `{idx}`")));
                    }
                    out.push(parse_value(n, re, im, ctx)?);
                }
                [k, ..] if (k == "omega" || k == "lambda") && k != key => {
                    return Err(err(n, format!("found `{k}` but {} `{key}` entries expected, got {}", p, j - 1)));
                }
                _ => return Err(err(n, format!("expected `{key} <j> <re> <im>`"))),
            }
        }
        Ok(out)
    };
    let omega = read_block("omega")?;
    let lambda = read_block("lambda")?;
    if let Ok((n, l)) = next("") {
        return Err(err(n, format!("unexpected trailing record `{l}`")));
    }
    QuadratureRule::new(omega0, omega, lambda, digits as u32)
}
