//! Script runner, formatter and REPL loop.
//!
//! A script holds one statement per line. Blank lines are skipped and `#`
//! starts a comment that runs to the end of the line.

use std::io::{self, BufRead, Write};

use crate::universe::Universe;

use super::ast::Statement;
use super::diagnostic::Diagnostic;
use super::eval::{Session, Value};
use super::parser::parse_statement_at;

/// Splits a line into its code and trailing comment.
fn split_comment(line: &str) -> (&str, Option<&str>) {
    match line.find('#') {
        Some(i) => (&line[..i], Some(&line[i..])),
        None => (line, None),
    }
}

/// Parses every statement of a script, keeping 1-based line numbers.
pub fn parse_script(source: &str) -> Vec<(usize, Result<Statement, Diagnostic>)> {
    source
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let (code, _) = split_comment(line);
            (!code.trim().is_empty()).then(|| (i + 1, parse_statement_at(code, i + 1)))
        })
        .collect()
}

fn render(stmt: &Statement, value: &Value) -> String {
    match stmt {
        Statement::Let { name, .. } => format!("{name} = {value}"),
        Statement::Expr(_) => value.to_string(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScriptOutcome {
    pub statements: usize,
    pub diagnostics: usize,
}

impl ScriptOutcome {
    pub fn success(&self) -> bool {
        self.diagnostics == 0
    }
}

/// Runs `source` statement by statement, printing each result to `out` and
/// each diagnostic, prefixed by `name`, to `err`. Stops at the first
/// diagnostic unless `keep_going`.
pub fn run_script(
    name: &str,
    source: &str,
    universe: &Universe,
    keep_going: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> io::Result<ScriptOutcome> {
    let mut session = Session::new(universe.clone());
    let mut outcome = ScriptOutcome::default();
    for (_, parsed) in parse_script(source) {
        outcome.statements += 1;
        let result = parsed.and_then(|stmt| session.execute(&stmt).map(|v| render(&stmt, &v)));
        match result {
            Ok(text) => writeln!(out, "{text}")?,
            Err(d) => {
                outcome.diagnostics += 1;
                writeln!(err, "{name}:{d}")?;
                if !keep_going {
                    break;
                }
            }
        }
    }
    out.flush()?;
    Ok(outcome)
}

/// Canonical pretty-print of a script. Blank lines and comments are kept;
/// statements are re-rendered. Fails on the first unparsable line.
pub fn format_script(source: &str) -> Result<String, Diagnostic> {
    let mut out = String::new();
    for (i, line) in source.lines().enumerate() {
        let (code, comment) = split_comment(line);
        let code = code.trim();
        let mut rendered = if code.is_empty() {
            String::new()
        } else {
            parse_statement_at(code, i + 1)?.to_string()
        };
        if let Some(c) = comment {
            if !rendered.is_empty() {
                rendered.push(' ');
            }
            rendered.push_str(c.trim_end());
        }
        out.push_str(&rendered);
        out.push('\n');
    }
    Ok(out)
}

const HELP: &str = "\
statements:
  let NAME = EXPR          bind a value
  EXPR                     evaluate and print
expressions:
  m:NAME  M:NAME  []       m-atom, M-atom, empty quasi-set
  [e]  [e1, e2]            weak class, weak pair
  sing(e)  nsing(e, k)     strong singleton, n-singleton
  q (-) e                  strong difference (also ⊖)
  sep(q, PRED)             separation
  qc(q)  pqc(q)  sub(q, k) quasi-cardinal, power quasi-cardinal, sub-quasi-set
  pair(e1, e2)             ordered pair
  sim(q1, q2)  qsim(q1, q2)
  e1 ~ e2  e1 = e2         indistinguishable (also ≡), extensionally equal
  e in q                   membership: yes / no / indeterminate (also ∈)
  enumerate(q)  quotient(q)
predicates:
  true false matom Matom Matom(L) qset species(S) qc OP k, not / and / or
commands:
  :universe  :help  :quit
";

/// Interactive loop. Reads from `input` until end of input or `:quit`.
/// Results and diagnostics both go to `out`.
pub fn run_repl(universe: &Universe, input: impl BufRead, out: &mut impl Write) -> io::Result<()> {
    let mut session = Session::new(universe.clone());
    let mut lines = input.lines();
    loop {
        write!(out, "qset> ")?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            break;
        };
        let line = line?;
        let (code, _) = split_comment(&line);
        let code = code.trim();
        match code {
            "" => continue,
            ":quit" | ":q" => break,
            ":help" => write!(out, "{HELP}")?,
            ":universe" => write!(out, "{}", session.universe())?,
            c if c.starts_with(':') => writeln!(out, "unknown command `{c}`; try :help")?,
            c => {
                let result = parse_statement_at(c, 1)
                    .and_then(|stmt| session.execute(&stmt).map(|v| render(&stmt, &v)));
                match result {
                    Ok(text) => writeln!(out, "{text}")?,
                    Err(d) => writeln!(out, "{d}")?,
                }
            }
        }
    }
    out.flush()
}
