//! Quantity-expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*
//! power  := unary ('^' int)?
//! unary  := '-' unary | atom
//! atom   := number (unit ('^' int)?)? | unit | constant | '(' expr ')'
//! int    := '-'? digits
//! ```
//!
//! A number directly followed by a unit or constant (`10 fs`, `2 c`) is a
//! product; a power written on that unit applies to the unit alone, so
//! `3 m^2` is three square metres. Unit symbols resolve by exact match,
//! then by the longest SI prefix (`ms` is a millisecond). The constants are
//! `c`, `hbar`, `G` and `kB`.

mod lexer;

use std::fmt;
use std::sync::LazyLock;

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::quantity::{Quantity, QuantityError, UnitTable};
use lexer::{Tok, Token};

static SI_UNITS: LazyLock<UnitTable> = LazyLock::new(UnitTable::default);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
}

/// A parse failure at a character offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{} error at offset {offset}: {message}", match .kind {
    ParseErrorKind::Lexical => "lexical",
    ParseErrorKind::Syntax => "syntax",
})]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(kind: ParseErrorKind, offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            offset,
            message: message.into(),
        }
    }
}

/// Character span `[start, end)` in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

/// An arithmetic failure during evaluation, tagged with the subexpression
/// that caused it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{error} in '{fragment}' (offset {}..{})", .span.start, .span.end)]
pub struct EvalError {
    pub error: QuantityError,
    pub span: Span,
    pub fragment: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Number(f64),
    Unit(String),
    Constant(String),
    /// A number juxtaposed with a unit or constant, e.g. `10 fs`.
    Scaled(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub node: Node,
    pub span: Span,
}

/// A parsed expression together with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantityExpr {
    source: String,
    root: Expr,
}

impl QuantityExpr {
    pub fn root(&self) -> &Expr {
        &self.root
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self) -> Result<Quantity, EvalError> {
        self.eval_with(&PhysicalConstants::SI)
    }

    pub fn eval_with(&self, k: &PhysicalConstants) -> Result<Quantity, EvalError> {
        let units = UnitTable::new(k);
        Evaluator {
            source: &self.source,
            units: &units,
            constants: k,
        }
        .eval(&self.root)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Number(x) => write!(f, "{x}"),
            Node::Unit(s) | Node::Constant(s) => f.write_str(s),
            Node::Scaled(n, u) => write!(f, "({n}\u{b7}{u})"),
            Node::Neg(e) => write!(f, "(-{e})"),
            Node::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Node::Pow(b, k) => write!(f, "({b}^{k})"),
        }
    }
}

/// Fully parenthesised rendering of the tree, e.g. `((1·GW) * (10·fs))`.
impl fmt::Display for QuantityExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

pub fn parse(text: &str) -> Result<QuantityExpr, ParseError> {
    let tokens = lexer::tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        units: &SI_UNITS,
    };
    let root = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(ParseError::new(
            ParseErrorKind::Syntax,
            t.start,
            "unexpected token",
        ));
    }
    Ok(QuantityExpr {
        source: text.to_string(),
        root,
    })
}

/// Evaluates an expression with the standard SI constants.
pub fn eval(expr: &QuantityExpr) -> Result<Quantity, EvalError> {
    expr.eval()
}

/// Parses and evaluates in one step.
pub fn evaluate_str(text: &str) -> Result<Quantity, Error> {
    evaluate_str_with(text, &PhysicalConstants::SI)
}

pub fn evaluate_str_with(text: &str, k: &PhysicalConstants) -> Result<Quantity, Error> {
    Ok(parse(text)?.eval_with(k)?)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    units: &'a UnitTable,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::new(
            ParseErrorKind::Syntax,
            self.peek().start,
            message,
        ))
    }

    fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        let span = Span {
            start: lhs.span.start,
            end: rhs.span.end,
        };
        Expr {
            node: Node::Binary(op, Box::new(lhs), Box::new(rhs)),
            span,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Self::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.power()?;
            lhs = Self::binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            let start = self.bump().start;
            let inner = self.unary()?;
            let span = Span {
                start,
                end: inner.span.end,
            };
            return Ok(Expr {
                node: Node::Neg(Box::new(inner)),
                span,
            });
        }
        self.atom()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.unary()?;
        self.maybe_pow(base)
    }

    fn maybe_pow(&mut self, base: Expr) -> Result<Expr, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let (k, end) = self.int()?;
        let span = Span {
            start: base.span.start,
            end,
        };
        Ok(Expr {
            node: Node::Pow(Box::new(base), k),
            span,
        })
    }

    fn int(&mut self) -> Result<(i32, usize), ParseError> {
        let negative = self.eat(&Tok::Minus);
        let t = self.peek().clone();
        match t.tok {
            Tok::Number {
                value,
                integer: true,
            } if value <= i32::MAX as f64 => {
                self.bump();
                let k = value as i32;
                Ok((if negative { -k } else { k }, t.end))
            }
            _ => self.syntax("expected an integer exponent"),
        }
    }

    fn symbol(&self, name: &str, t: &Token) -> Result<Expr, ParseError> {
        let span = Span {
            start: t.start,
            end: t.end,
        };
        let node = if PhysicalConstants::SI.by_name(name).is_some() {
            Node::Constant(name.to_string())
        } else if self.units.lookup(name).is_some() {
            Node::Unit(name.to_string())
        } else {
            return Err(ParseError::new(
                ParseErrorKind::Lexical,
                t.start,
                format!("unknown symbol '{name}'"),
            ));
        };
        Ok(Expr { node, span })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number { value, .. } => {
                self.bump();
                let number = Expr {
                    node: Node::Number(*value),
                    span: Span {
                        start: t.start,
                        end: t.end,
                    },
                };
                let next = self.peek().clone();
                let Tok::Ident(name) = &next.tok else {
                    return Ok(number);
                };
                self.bump();
                let unit = self.symbol(name, &next)?;
                let unit = self.maybe_pow(unit)?;
                let span = Span {
                    start: number.span.start,
                    end: unit.span.end,
                };
                Ok(Expr {
                    node: Node::Scaled(Box::new(number), Box::new(unit)),
                    span,
                })
            }
            Tok::Ident(name) => {
                self.bump();
                self.symbol(name, &t)
            }
            Tok::LParen => {
                self.bump();
                let mut inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return self.syntax("expected ')'");
                }
                let close = self.bump();
                inner.span = Span {
                    start: t.start,
                    end: close.end,
                };
                Ok(inner)
            }
            _ => self.syntax("expected a number, unit, constant or '('"),
        }
    }
}

struct Evaluator<'a> {
    source: &'a str,
    units: &'a UnitTable,
    constants: &'a PhysicalConstants,
}

impl Evaluator<'_> {
    fn fail(&self, error: QuantityError, span: Span) -> EvalError {
        let fragment = self
            .source
            .chars()
            .skip(span.start)
            .take(span.end - span.start)
            .collect();
        EvalError {
            error,
            span,
            fragment,
        }
    }

    fn eval(&self, e: &Expr) -> Result<Quantity, EvalError> {
        let wrap = |r: Result<Quantity, QuantityError>| r.map_err(|err| self.fail(err, e.span));
        match &e.node {
            Node::Number(x) => wrap(Quantity::dimensionless(*x)),
            Node::Unit(s) => self
                .units
                .lookup(s)
                .ok_or_else(|| self.fail(QuantityError::NonFinite, e.span)),
            Node::Constant(s) => self
                .constants
                .by_name(s)
                .ok_or_else(|| self.fail(QuantityError::NonFinite, e.span)),
            Node::Scaled(n, u) => {
                let n = self.eval(n)?;
                let u = self.eval(u)?;
                wrap(n.mul(&u))
            }
            Node::Neg(inner) => Ok(self.eval(inner)?.neg()),
            Node::Binary(op, l, r) => {
                let l = self.eval(l)?;
                let r = self.eval(r)?;
                wrap(match op {
                    BinOp::Add => l.add(&r),
                    BinOp::Sub => l.sub(&r),
                    BinOp::Mul => l.mul(&r),
                    BinOp::Div => l.div(&r),
                })
            }
            Node::Pow(b, k) => wrap(self.eval(b)?.pow_int(*k)),
        }
    }
}
