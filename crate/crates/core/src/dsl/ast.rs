use std::fmt;

use crate::qops::{Cardinal, Predicate};

/// 1-based source position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl Span {
    pub fn new(line: usize, column: usize) -> Self {
        Span { line, column }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// An expression together with where it started. Equality ignores the span,
/// so a re-parsed pretty-print compares equal to the original.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    /// `m:name`
    Micro(String),
    /// `M:name`
    Macro(String),
    Var(String),
    /// `[]`
    Empty,
    /// `[e]`
    WeakClass(Box<Expr>),
    /// `[e1, e2]`
    WeakPair(Box<Expr>, Box<Expr>),
    Sing(Box<Expr>),
    NSing(Box<Expr>, Cardinal),
    /// `e1 (-) e2`
    Diff(Box<Expr>, Box<Expr>),
    Sep(Box<Expr>, Predicate),
    Qc(Box<Expr>),
    Pqc(Box<Expr>),
    Sub(Box<Expr>, Cardinal),
    Pair(Box<Expr>, Box<Expr>),
    Sim(Box<Expr>, Box<Expr>),
    QSim(Box<Expr>, Box<Expr>),
    /// `e1 ~ e2`
    Indist(Box<Expr>, Box<Expr>),
    /// `e1 = e2`
    ExtEq(Box<Expr>, Box<Expr>),
    /// `e1 in e2`
    In(Box<Expr>, Box<Expr>),
    Enumerate(Box<Expr>),
    Quotient(Box<Expr>),
}

/// One line of a script or one REPL input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Let { name: String, value: Expr },
    Expr(Expr),
}

// Binding strength, loosest first.
const CMP: u8 = 0;
const MEMBER: u8 = 1;
const DIFF: u8 = 2;
const ATOM: u8 = 3;

impl ExprKind {
    fn precedence(&self) -> u8 {
        match self {
            ExprKind::Indist(..) | ExprKind::ExtEq(..) => CMP,
            ExprKind::In(..) => MEMBER,
            ExprKind::Diff(..) => DIFF,
            _ => ATOM,
        }
    }
}

impl Expr {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.kind.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Canonical surface form: ASCII operators, single spaces around binary
/// operators, parentheses only where precedence requires them.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, l: u8, r: u8| {
            a.fmt_at(f, l)?;
            write!(f, " {op} ")?;
            b.fmt_at(f, r)
        };
        match &self.kind {
            Micro(s) => write!(f, "m:{s}"),
            Macro(l) => write!(f, "M:{l}"),
            Var(v) => f.write_str(v),
            Empty => f.write_str("[]"),
            WeakClass(e) => write!(f, "[{e}]"),
            WeakPair(a, b) => write!(f, "[{a}, {b}]"),
            Sing(e) => write!(f, "sing({e})"),
            NSing(e, k) => write!(f, "nsing({e}, {k})"),
            Sep(e, p) => write!(f, "sep({e}, {p})"),
            Qc(e) => write!(f, "qc({e})"),
            Pqc(e) => write!(f, "pqc({e})"),
            Sub(e, k) => write!(f, "sub({e}, {k})"),
            Pair(a, b) => write!(f, "pair({a}, {b})"),
            Sim(a, b) => write!(f, "sim({a}, {b})"),
            QSim(a, b) => write!(f, "qsim({a}, {b})"),
            Enumerate(e) => write!(f, "enumerate({e})"),
            Quotient(e) => write!(f, "quotient({e})"),
            Diff(a, b) => binary(f, a, "(-)", b, DIFF, ATOM),
            In(a, b) => binary(f, a, "in", b, DIFF, DIFF),
            Indist(a, b) => binary(f, a, "~", b, MEMBER, MEMBER),
            ExtEq(a, b) => binary(f, a, "=", b, MEMBER, MEMBER),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Let { name, value } => write!(f, "let {name} = {value}"),
            Statement::Expr(e) => e.fmt(f),
        }
    }
}
