//! The line-oriented opinion file format.
//!
//! ```text
//! # comment
//! frame: x not_x
//! base_rate: 0.5 0.5
//! C: 0.90 0.05 | 0.05
//! B: 0.70 0.10 | 0.20
//! ```
//!
//! The first two non-blank lines are the frame and the shared base rate.
//! Every following line defines one named opinion as its belief masses,
//! a `|`, and its uncertainty. Numbers are plain decimal literals.

use std::fmt::{self, Write as _};

use opinion_algebra::{Frame, Opinion};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FileErrorKind {
    #[error("file contains no frame declaration")]
    Empty,
    #[error("expected `{0}:` line")]
    MissingHeader(&'static str),
    #[error("invalid decimal literal {0:?}")]
    BadNumber(String),
    #[error("invalid identifier {0:?} (letters, digits and `_`, starting with a letter)")]
    BadIdentifier(String),
    #[error("opinion {0:?} defined twice")]
    Duplicate(String),
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] opinion_algebra::Error),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct FileError {
    pub line: usize,
    pub kind: FileErrorKind,
}

/// A frame, its shared base rate and a list of named opinions.
#[derive(Debug, Clone, PartialEq)]
pub struct OpinionFile {
    frame: Frame,
    base_rate: Vec<f64>,
    opinions: Vec<(String, Opinion)>,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Accepts `[+-]digits[.digits][e[+-]digits]` and `.digits` forms only, so
/// `inf`, `nan` and hex floats are rejected.
fn parse_decimal(token: &str) -> Result<f64, FileErrorKind> {
    let bad = || FileErrorKind::BadNumber(token.to_owned());
    let body = token.strip_prefix(['+', '-']).unwrap_or(token);
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], Some(&body[i + 1..])),
        None => (body, None),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int.len() + frac.len() == 0 || !digits(int) || !digits(frac) {
        return Err(bad());
    }
    if let Some(exp) = exponent {
        let exp = exp.strip_prefix(['+', '-']).unwrap_or(exp);
        if exp.is_empty() || !digits(exp) {
            return Err(bad());
        }
    }
    token.parse().map_err(|_| bad())
}

fn parse_numbers(s: &str) -> Result<Vec<f64>, FileErrorKind> {
    s.split_whitespace().map(parse_decimal).collect()
}

fn header<'a>(line: &'a str, key: &'static str) -> Result<&'a str, FileErrorKind> {
    line.split_once(':')
        .filter(|(k, _)| k.trim() == key)
        .map(|(_, rest)| rest)
        .ok_or(FileErrorKind::MissingHeader(key))
}

impl OpinionFile {
    pub fn new(frame: Frame, base_rate: Vec<f64>) -> Result<Self, opinion_algebra::Error> {
        // Validates the base rate against the frame.
        Opinion::vacuous(frame.clone(), base_rate.clone())?;
        Ok(Self {
            frame,
            base_rate,
            opinions: Vec::new(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let err = |line, kind| FileError { line, kind };

        let (line_no, line) = lines.next().ok_or(err(0, FileErrorKind::Empty))?;
        let labels: Vec<&str> = header(line, "frame")
            .map_err(|k| err(line_no, k))?
            .split_whitespace()
            .collect();
        let frame = Frame::new(labels).map_err(|e| err(line_no, e.into()))?;

        let (line_no, line) = lines
            .next()
            .ok_or(err(line_no + 1, FileErrorKind::MissingHeader("base_rate")))?;
        let base_rate = header(line, "base_rate")
            .and_then(parse_numbers)
            .map_err(|k| err(line_no, k))?;
        let mut file = Self::new(frame, base_rate).map_err(|e| err(line_no, e.into()))?;

        for (line_no, line) in lines {
            let (name, body) = line
                .split_once(':')
                .ok_or_else(|| err(line_no, FileErrorKind::Syntax("expected `NAME: b1 ... bk | u`".into())))?;
            let name = name.trim();
            let (belief, uncertainty) = body
                .split_once('|')
                .ok_or_else(|| err(line_no, FileErrorKind::Syntax("missing `|` before uncertainty".into())))?;
            let belief = parse_numbers(belief).map_err(|k| err(line_no, k))?;
            let uncertainty = match parse_numbers(uncertainty).map_err(|k| err(line_no, k))?[..] {
                [u] => u,
                _ => {
                    return Err(err(
                        line_no,
                        FileErrorKind::Syntax("expected exactly one uncertainty value after `|`".into()),
                    ))
                }
            };
            file.insert(name, belief, uncertainty).map_err(|k| err(line_no, k))?;
        }
        Ok(file)
    }

    /// Validates and appends an opinion; the name becomes its owner label.
    pub fn insert(&mut self, name: &str, belief: Vec<f64>, uncertainty: f64) -> Result<&Opinion, FileErrorKind> {
        if !is_identifier(name) {
            return Err(FileErrorKind::BadIdentifier(name.to_owned()));
        }
        if self.get(name).is_some() {
            return Err(FileErrorKind::Duplicate(name.to_owned()));
        }
        let opinion = Opinion::new(self.frame.clone(), belief, uncertainty, self.base_rate.clone())?.with_owner(name);
        self.opinions.push((name.to_owned(), opinion));
        Ok(&self.opinions.last().unwrap().1)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn base_rate(&self) -> &[f64] {
        &self.base_rate
    }

    pub fn get(&self, name: &str) -> Option<&Opinion> {
        self.opinions.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn opinions(&self) -> impl Iterator<Item = (&str, &Opinion)> {
        self.opinions.iter().map(|(n, o)| (n.as_str(), o))
    }

    pub fn len(&self) -> usize {
        self.opinions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opinions.is_empty()
    }
}

/// `NAME: b1 ... bk | u`, using the shortest decimal that reads back to the
/// same `f64`.
pub fn opinion_line(name: &str, opinion: &Opinion) -> String {
    let mut s = format!("{name}:");
    for b in opinion.belief() {
        write!(s, " {b}").unwrap();
    }
    write!(s, " | {}", opinion.uncertainty()).unwrap();
    s
}

impl fmt::Display for OpinionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "frame: {}", self.frame.labels().join(" "))?;
        write!(f, "base_rate:")?;
        for a in &self.base_rate {
            write!(f, " {a}")?;
        }
        writeln!(f)?;
        for (name, opinion) in &self.opinions {
            writeln!(f, "{}", opinion_line(name, opinion))?;
        }
        Ok(())
    }
}
