use std::fmt::Write as _;

use serde_json::{json, Number, Value};

use crate::eval::Evaluation;

/// Formats `x` with exactly 17 significant digits, positional when the
/// decimal exponent is in `-7..17` and scientific otherwise.
pub fn sig17(x: f64) -> String {
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-7..17).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    if exp >= 0 {
        let split = exp as usize + 1;
        let (int, frac) = digits.split_at(split);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exp - 1) as usize))
    }
}

fn number(x: f64) -> Value {
    Value::Number(sig17(x).parse::<Number>().expect("finite decimal"))
}

fn numbers(xs: &[f64]) -> Value {
    Value::Array(xs.iter().copied().map(number).collect())
}

pub fn to_json(eval: &Evaluation) -> Value {
    let op = &eval.opinion;
    json!({
        "owner": op.owner(),
        "frame": op.frame().labels(),
        "belief": numbers(op.belief()),
        "uncertainty": number(op.uncertainty()),
        "base_rate": numbers(op.base_rate()),
        "expectation": numbers(&eval.expectation),
    })
}

fn row(out: &mut String, key: &str, values: &[f64]) {
    write!(out, "{key:<12}").unwrap();
    for v in values {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
}

/// Human-readable block, one field per line, shortest round-trip decimals.
pub fn to_text(eval: &Evaluation) -> String {
    let op = &eval.opinion;
    let mut out = String::new();
    writeln!(out, "{:<12} {}", "owner", op.owner().unwrap_or("-")).unwrap();
    writeln!(out, "{:<12} {}", "frame", op.frame().labels().join(" ")).unwrap();
    row(&mut out, "belief", op.belief());
    row(&mut out, "uncertainty", &[op.uncertainty()]);
    row(&mut out, "base_rate", op.base_rate());
    row(&mut out, "expectation", &eval.expectation);
    out
}
