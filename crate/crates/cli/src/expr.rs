//! Infix fusion/fission expressions.
//!
//! ```text
//! expr     := atom (operator atom)*
//! atom     := IDENT | '(' expr ')'
//! operator := '(+)' | '(avg+)' | '(-)' | '(avg-)'
//! ```
//!
//! All operators share one precedence level and associate to the left.
//! Whitespace is allowed anywhere between tokens, including inside an
//! operator token. Whether `(` opens a group or an operator is decided by
//! position: after an atom it can only start an operator.

use std::fmt;

use thiserror::Error;

/// Byte range into the source string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn slice<'a>(&self, src: &'a str) -> &'a str {
        &src[self.start..self.end]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    CumFuse,
    AvgFuse,
    CumFission,
    AvgFission,
}

impl BinaryOp {
    pub fn token(self) -> &'static str {
        match self {
            BinaryOp::CumFuse => "(+)",
            BinaryOp::AvgFuse => "(avg+)",
            BinaryOp::CumFission => "(-)",
            BinaryOp::AvgFission => "(avg-)",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Identifier(String),
    Binary {
        op: BinaryOp,
        left: Box<Expression>,
        right: Box<Expression>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expression {
    pub node: Node,
    pub span: Span,
    /// Written inside its own parentheses in the source.
    pub parenthesized: bool,
}

impl Expression {
    /// True when some unparenthesized chain of two or more operators
    /// contains averaging fusion, whose grouping changes the result.
    pub fn has_ungrouped_averaging_chain(&self) -> bool {
        fn chain_ops(e: &Expression, ops: &mut Vec<BinaryOp>) {
            if let Node::Binary { op, left, .. } = &e.node {
                ops.push(*op);
                if !left.parenthesized {
                    chain_ops(left, ops);
                }
            }
        }
        fn walk(e: &Expression, chain_head: bool) -> bool {
            let Node::Binary { left, right, .. } = &e.node else {
                return false;
            };
            if chain_head {
                let mut ops = Vec::new();
                chain_ops(e, &mut ops);
                if ops.len() >= 2 && ops.contains(&BinaryOp::AvgFuse) {
                    return true;
                }
            }
            walk(left, left.parenthesized) || walk(right, true)
        }
        walk(self, true)
    }
}

/// Fully parenthesized rendering, e.g. `((A (+) B) (-) B)`.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Identifier(name) => f.write_str(name),
            Node::Binary { op, left, right } => write!(f, "({left} {} {right})", op.token()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}", .expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn error(&self, offset: usize, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset,
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let mut left = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(left),
                Some('(') => {
                    let op = self.operator()?;
                    let right = self.atom()?;
                    let span = Span {
                        start: left.span.start,
                        end: right.span.end,
                    };
                    left = Expression {
                        node: Node::Binary {
                            op,
                            left: Box::new(left),
                            right: Box::new(right),
                        },
                        span,
                        parenthesized: false,
                    };
                }
                Some(_) => return Err(self.error(self.pos, &["operator", "')'", "end of input"])),
            }
        }
    }

    fn atom(&mut self) -> Result<Expression, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let mut inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error(self.pos, &["')'"]));
                }
                self.pos += 1;
                inner.span = Span { start, end: self.pos };
                inner.parenthesized = true;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let len = self.src[start..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                Ok(Expression {
                    node: Node::Identifier(self.src[start..self.pos].to_owned()),
                    span: Span { start, end: self.pos },
                    parenthesized: false,
                })
            }
            _ => Err(self.error(start, &["identifier", "'('"])),
        }
    }

    /// Parses one of the four operator tokens starting at `(`. Errors point
    /// at the opening parenthesis of the malformed token.
    fn operator(&mut self) -> Result<BinaryOp, ParseError> {
        let start = self.pos;
        let malformed = |p: &Self| p.error(start, &["'(+)'", "'(avg+)'", "'(-)'", "'(avg-)'"]);
        self.pos += 1;
        self.skip_ws();
        let averaging = self.src[self.pos..].starts_with("avg");
        if averaging {
            self.pos += 3;
            self.skip_ws();
        }
        let op = match (self.peek(), averaging) {
            (Some('+'), false) => BinaryOp::CumFuse,
            (Some('+'), true) => BinaryOp::AvgFuse,
            (Some('-'), false) => BinaryOp::CumFission,
            (Some('-'), true) => BinaryOp::AvgFission,
            _ => return Err(malformed(self)),
        };
        self.pos += 1;
        self.skip_ws();
        if self.peek() != Some(')') {
            return Err(malformed(self));
        }
        self.pos += 1;
        Ok(op)
    }
}

pub fn parse_expression(src: &str) -> Result<Expression, ParseError> {
    let mut parser = Parser { src, pos: 0 };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != src.len() {
        return Err(parser.error(parser.pos, &["operator", "end of input"]));
    }
    Ok(expr)
}
