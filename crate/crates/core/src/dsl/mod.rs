//! The expression language: parser, evaluator, formatter, script runner and
//! REPL.
//!
//! ASCII operators are canonical; `⊖`, `≡`, `∈` and `∅` are accepted as
//! aliases of `(-)`, `~`, `in` and `[]`. Membership evaluates to a three-valued
//! answer. `=` is extensional equality and is rejected at evaluation time when
//! either side turns out to be an m-atom.

pub mod ast;
pub mod diagnostic;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod script;

pub use ast::{Expr, ExprKind, Span, Statement};
pub use diagnostic::{Diagnostic, DiagnosticCode};
pub use eval::{eval, format_value, Bindings, Session, Value};
pub use parser::{parse_expr, parse_statement, parse_statement_at};
pub use script::{format_script, parse_script, run_repl, run_script, ScriptOutcome};
