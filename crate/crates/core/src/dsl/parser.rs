//! Recursive-descent parser.
//!
//! ```text
//! statement  := "let" IDENT "=" expr | expr
//! expr       := member [ ("~" | "=") member ]         non-associative
//! member     := diff [ "in" diff ]                    non-associative
//! diff       := primary { "(-)" primary }             left-associative
//! primary    := "m:" IDENT | "M:" IDENT | IDENT | "[]"
//!             | "[" expr [ "," expr ] "]" | "(" expr ")"
//!             | IDENT "(" args ")"
//! pred       := conj { "or" conj }
//! conj       := neg { "and" neg }
//! neg        := "not" neg | "true" | "false" | "matom" | "Matom" [ "(" IDENT ")" ]
//!             | "qset" | "species" "(" IDENT ")" | "qc" CMP INT | "(" pred ")"
//! ```

use crate::qops::{CmpOp, Predicate};

use super::ast::{Expr, ExprKind, Span, Statement};
use super::diagnostic::Diagnostic;
use super::lexer::{tokenize, Spanned, Token};

const KEYWORDS: &[&str] = &["let", "in"];

/// Parses a single statement written on line 1.
pub fn parse_statement(text: &str) -> Result<Statement, Diagnostic> {
    parse_statement_at(text, 1)
}

/// Parses a single statement, reporting spans on `line`.
pub fn parse_statement_at(text: &str, line: usize) -> Result<Statement, Diagnostic> {
    let mut p = Parser::new(text, line)?;
    let stmt = if p.peek_ident("let") {
        p.bump();
        let (name, span) = p.expect_name("a variable name")?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(Diagnostic::parse(format!("`{name}` is a keyword"), span));
        }
        p.expect(&Token::Assign)?;
        Statement::Let {
            name,
            value: p.expr()?,
        }
    } else {
        Statement::Expr(p.expr()?)
    };
    p.finish()?;
    Ok(stmt)
}

/// Parses a single expression written on line 1.
pub fn parse_expr(text: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser::new(text, 1)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn new(text: &str, line: usize) -> Result<Self, Diagnostic> {
        Ok(Parser {
            tokens: tokenize(text, line)?,
            pos: 0,
            end: Span::new(line, text.chars().count() + 1),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.token)
    }

    fn peek_at(&self, k: usize) -> Option<&Token> {
        self.tokens.get(self.pos + k).map(|t| &t.token)
    }

    fn peek_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Token::Ident(w)) if w == word)
    }

    fn span(&self) -> Span {
        self.tokens.get(self.pos).map_or(self.end, |t| t.span)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Token::describe);
        Diagnostic::parse(format!("expected {wanted}, found {found}"), self.span())
    }

    fn expect(&mut self, token: &Token) -> Result<Span, Diagnostic> {
        if self.peek() == Some(token) {
            Ok(self.bump().expect("peeked").span)
        } else {
            Err(self.unexpected(&token.describe()))
        }
    }

    fn expect_name(&mut self, wanted: &str) -> Result<(String, Span), Diagnostic> {
        match self.peek() {
            Some(Token::Ident(name)) => {
                let name = name.clone();
                let span = self.bump().expect("peeked").span;
                Ok((name, span))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn expect_int(&mut self) -> Result<u64, Diagnostic> {
        match self.peek() {
            Some(Token::Int(n)) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let left = self.member()?;
        let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
            Some(Token::Tilde) => ExprKind::Indist,
            Some(Token::Assign) => ExprKind::ExtEq,
            _ => return Ok(left),
        };
        self.bump();
        let right = self.member()?;
        if matches!(self.peek(), Some(Token::Tilde | Token::Assign)) {
            return Err(Diagnostic::parse(
                "`~` and `=` do not chain; add parentheses",
                self.span(),
            ));
        }
        let span = left.span;
        Ok(Expr::new(make(Box::new(left), Box::new(right)), span))
    }

    fn member(&mut self) -> Result<Expr, Diagnostic> {
        let left = self.diff()?;
        if !(self.peek_ident("in") || self.peek() == Some(&Token::Member)) {
            return Ok(left);
        }
        self.bump();
        let right = self.diff()?;
        if self.peek_ident("in") || self.peek() == Some(&Token::Member) {
            return Err(Diagnostic::parse(
                "`in` does not chain; add parentheses",
                self.span(),
            ));
        }
        let span = left.span;
        Ok(Expr::new(
            ExprKind::In(Box::new(left), Box::new(right)),
            span,
        ))
    }

    fn diff(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.primary()?;
        while self.peek() == Some(&Token::Diff) {
            self.bump();
            let right = self.primary()?;
            let span = left.span;
            left = Expr::new(ExprKind::Diff(Box::new(left), Box::new(right)), span);
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<Expr, Diagnostic> {
        let span = self.span();
        let Some(token) = self.peek().cloned() else {
            return Err(self.unexpected("an expression"));
        };
        let kind = match token {
            Token::Micro(s) => {
                self.bump();
                ExprKind::Micro(s)
            }
            Token::Macro(l) => {
                self.bump();
                ExprKind::Macro(l)
            }
            Token::EmptySet => {
                self.bump();
                ExprKind::Empty
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(&Token::RParen)?;
                return Ok(inner);
            }
            Token::LBracket => {
                self.bump();
                if self.peek() == Some(&Token::RBracket) {
                    self.bump();
                    ExprKind::Empty
                } else {
                    let first = self.expr()?;
                    let kind = if self.peek() == Some(&Token::Comma) {
                        self.bump();
                        let second = self.expr()?;
                        ExprKind::WeakPair(Box::new(first), Box::new(second))
                    } else {
                        ExprKind::WeakClass(Box::new(first))
                    };
                    self.expect(&Token::RBracket)?;
                    kind
                }
            }
            Token::Ident(name) if self.peek_at(1) == Some(&Token::LParen) => {
                self.bump();
                self.bump();
                let kind = self.call(&name, span)?;
                self.expect(&Token::RParen)?;
                kind
            }
            Token::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                self.bump();
                ExprKind::Var(name)
            }
            _ => return Err(self.unexpected("an expression")),
        };
        Ok(Expr::new(kind, span))
    }

    /// Arguments of `name(...)`, after the opening parenthesis.
    fn call(&mut self, name: &str, span: Span) -> Result<ExprKind, Diagnostic> {
        let one = |p: &mut Self| p.expr().map(Box::new);
        let two = |p: &mut Self| -> Result<(Box<Expr>, Box<Expr>), Diagnostic> {
            let a = p.expr()?;
            p.expect(&Token::Comma)?;
            let b = p.expr()?;
            Ok((Box::new(a), Box::new(b)))
        };
        let with_count = |p: &mut Self| -> Result<(Box<Expr>, u64), Diagnostic> {
            let a = p.expr()?;
            p.expect(&Token::Comma)?;
            Ok((Box::new(a), p.expect_int()?))
        };
        Ok(match name {
            "sing" => ExprKind::Sing(one(self)?),
            "qc" => ExprKind::Qc(one(self)?),
            "pqc" => ExprKind::Pqc(one(self)?),
            "enumerate" => ExprKind::Enumerate(one(self)?),
            "quotient" => ExprKind::Quotient(one(self)?),
            "nsing" => {
                let (e, k) = with_count(self)?;
                ExprKind::NSing(e, k)
            }
            "sub" => {
                let (e, k) = with_count(self)?;
                ExprKind::Sub(e, k)
            }
            "pair" => {
                let (a, b) = two(self)?;
                ExprKind::Pair(a, b)
            }
            "sim" => {
                let (a, b) = two(self)?;
                ExprKind::Sim(a, b)
            }
            "qsim" => {
                let (a, b) = two(self)?;
                ExprKind::QSim(a, b)
            }
            "sep" => {
                let e = self.expr()?;
                self.expect(&Token::Comma)?;
                ExprKind::Sep(Box::new(e), self.pred()?)
            }
            other => {
                return Err(Diagnostic::parse(
                    format!("unknown operation `{other}`"),
                    span,
                ))
            }
        })
    }

    fn pred(&mut self) -> Result<Predicate, Diagnostic> {
        let mut left = self.conj()?;
        while self.peek_ident("or") {
            self.bump();
            left = Predicate::Or(Box::new(left), Box::new(self.conj()?));
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<Predicate, Diagnostic> {
        let mut left = self.neg()?;
        while self.peek_ident("and") {
            self.bump();
            left = Predicate::And(Box::new(left), Box::new(self.neg()?));
        }
        Ok(left)
    }

    fn neg(&mut self) -> Result<Predicate, Diagnostic> {
        if self.peek() == Some(&Token::LParen) {
            self.bump();
            let p = self.pred()?;
            self.expect(&Token::RParen)?;
            return Ok(p);
        }
        let (word, _) = self.expect_name("a predicate")?;
        Ok(match word.as_str() {
            "not" => Predicate::Not(Box::new(self.neg()?)),
            "true" => Predicate::True,
            "false" => Predicate::False,
            "matom" => Predicate::IsMicro,
            "qset" => Predicate::IsQSet,
            "Matom" => {
                if self.peek() == Some(&Token::LParen) {
                    self.bump();
                    let (label, _) = self.expect_name("an M-atom label")?;
                    self.expect(&Token::RParen)?;
                    Predicate::IsMacro(Some(label))
                } else {
                    Predicate::IsMacro(None)
                }
            }
            "species" => {
                self.expect(&Token::LParen)?;
                let (name, _) = self.expect_name("a species name")?;
                self.expect(&Token::RParen)?;
                Predicate::SpeciesIs(name)
            }
            "qc" => {
                let op = match self.peek() {
                    Some(Token::Lt) => CmpOp::Lt,
                    Some(Token::Le) => CmpOp::Le,
                    Some(Token::EqEq | Token::Assign) => CmpOp::Eq,
                    Some(Token::Ne) => CmpOp::Ne,
                    Some(Token::Ge) => CmpOp::Ge,
                    Some(Token::Gt) => CmpOp::Gt,
                    _ => return Err(self.unexpected("a comparison operator")),
                };
                self.bump();
                Predicate::QcCompare(op, self.expect_int()?)
            }
            other => {
                self.pos -= 1;
                return Err(Diagnostic::parse(
                    format!("unknown predicate `{other}`"),
                    self.span(),
                ));
            }
        })
    }
}
