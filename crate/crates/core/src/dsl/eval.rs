use std::collections::BTreeMap;
use std::fmt;

use crate::computability::{decide_membership, enumerate, EmissionToken};
use crate::element::{ClassDescriptor, Element};
use crate::equiv::{extensional_equal, indistinguishable, qsim, quotient, sim, Tri};
use crate::error::QsetError;
use crate::qops::{
    n_singleton, ordered_pair, power_qc, quasi_cardinal, separation, strong_difference,
    strong_singleton, sub_qset, weak_class, weak_pair, Cardinal,
};
use crate::qset::QSet;
use crate::universe::Universe;

use super::ast::{Expr, ExprKind, Span, Statement};
use super::diagnostic::Diagnostic;

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// An m-atom occurrence or an M-atom.
    Atom(Element),
    QSet(QSet),
    Cardinal(Cardinal),
    Bool(bool),
    Tri(Tri),
    Tokens(Vec<EmissionToken>),
    Quotient(Vec<(ClassDescriptor, u64)>),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Atom(Element::MAtomOcc { .. }) => "an m-atom",
            Value::Atom(_) => "an M-atom",
            Value::QSet(_) => "a quasi-set",
            Value::Cardinal(_) => "a cardinal",
            Value::Bool(_) => "a boolean",
            Value::Tri(_) => "a membership answer",
            Value::Tokens(_) => "an enumeration",
            Value::Quotient(_) => "a quotient",
        }
    }
}

/// Canonical rendering. Enumerations print one `class#index` per line.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(e) => e.fmt(f),
            Value::QSet(q) => q.fmt(f),
            Value::Cardinal(n) => n.fmt(f),
            Value::Bool(b) => b.fmt(f),
            Value::Tri(t) => t.fmt(f),
            Value::Tokens(tokens) => {
                for (i, t) in tokens.iter().enumerate() {
                    if i > 0 {
                        f.write_str("\n")?;
                    }
                    t.fmt(f)?;
                }
                Ok(())
            }
            Value::Quotient(pairs) => {
                f.write_str("[")?;
                for (i, (c, n)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "({c}, {n})")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub fn format_value(v: &Value) -> String {
    v.to_string()
}

pub type Bindings = BTreeMap<String, Value>;

/// Evaluates `e` under `env`. Pure: bindings are only extended by
/// [`Session::execute`].
pub fn eval(e: &Expr, env: &Bindings, universe: &Universe) -> Result<Value, Diagnostic> {
    Evaluator { env, universe }.eval(e)
}

struct Evaluator<'a> {
    env: &'a Bindings,
    universe: &'a Universe,
}

impl Evaluator<'_> {
    fn fail(&self, span: Span) -> impl Fn(QsetError) -> Diagnostic {
        move |err| Diagnostic::from_error(&err, span)
    }

    fn element(&self, e: &Expr) -> Result<Element, Diagnostic> {
        match self.eval(e)? {
            Value::Atom(a) => Ok(a),
            Value::QSet(q) => Ok(Element::QSet(q)),
            other => Err(Diagnostic::type_error(
                format!("expected an atom or quasi-set, found {}", other.kind()),
                e.span,
            )),
        }
    }

    fn qset(&self, e: &Expr) -> Result<QSet, Diagnostic> {
        match self.eval(e)? {
            Value::QSet(q) => Ok(q),
            other => Err(Diagnostic::type_error(
                format!("expected a quasi-set, found {}", other.kind()),
                e.span,
            )),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Value, Diagnostic> {
        use ExprKind::*;
        let u = self.universe;
        let fail = self.fail(e.span);
        Ok(match &e.kind {
            Micro(s) => {
                u.multiplicity(s).map_err(&fail)?;
                Value::Atom(Element::micro(s.clone()))
            }
            Macro(l) => {
                u.check_label(l).map_err(&fail)?;
                Value::Atom(Element::labeled(l.clone()))
            }
            Var(name) => self.env.get(name).cloned().ok_or_else(|| {
                Diagnostic::type_error(format!("unbound variable `{name}`"), e.span)
            })?,
            Empty => Value::QSet(QSet::empty()),
            WeakClass(x) => Value::QSet(weak_class(u, &self.element(x)?).map_err(&fail)?),
            WeakPair(x, y) => {
                let (x, y) = (self.element(x)?, self.element(y)?);
                Value::QSet(weak_pair(u, &x, &y).map_err(&fail)?)
            }
            Sing(x) => Value::QSet(strong_singleton(u, &self.element(x)?).map_err(&fail)?),
            NSing(x, n) => Value::QSet(n_singleton(u, &self.element(x)?, *n).map_err(&fail)?),
            Diff(q, y) => {
                let q = self.qset(q)?;
                let y = self.element(y)?;
                Value::QSet(strong_difference(&q, &y).map_err(&fail)?)
            }
            Sep(q, p) => Value::QSet(separation(&self.qset(q)?, p)),
            Qc(q) => Value::Cardinal(quasi_cardinal(&self.qset(q)?)),
            Pqc(q) => Value::Cardinal(power_qc(&self.qset(q)?).map_err(&fail)?),
            Sub(q, beta) => Value::QSet(sub_qset(&self.qset(q)?, *beta).map_err(&fail)?),
            Pair(x, y) => {
                let (x, y) = (self.element(x)?, self.element(y)?);
                Value::QSet(ordered_pair(u, &x, &y).map_err(&fail)?)
            }
            Sim(x, y) => Value::Bool(sim(&self.qset(x)?, &self.qset(y)?)),
            QSim(x, y) => Value::Bool(qsim(&self.qset(x)?, &self.qset(y)?)),
            Indist(x, y) => Value::Bool(indistinguishable(&self.element(x)?, &self.element(y)?)),
            ExtEq(x, y) => {
                let (x, y) = (self.element(x)?, self.element(y)?);
                Value::Bool(extensional_equal(&x, &y).map_err(&fail)?)
            }
            In(x, q) => {
                let x = self.element(x)?;
                let q = self.qset(q)?;
                Value::Tri(decide_membership(u, &x, &q).map_err(&fail)?)
            }
            Enumerate(q) => Value::Tokens(enumerate(&self.qset(q)?).collect()),
            Quotient(q) => Value::Quotient(quotient(&self.qset(q)?)),
        })
    }
}

/// Evaluation state that persists across statements: the universe and the
/// `let` bindings made so far.
#[derive(Debug, Clone)]
pub struct Session {
    universe: Universe,
    env: Bindings,
}

impl Session {
    pub fn new(universe: Universe) -> Self {
        Session {
            universe,
            env: Bindings::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn bindings(&self) -> &Bindings {
        &self.env
    }

    /// Evaluates a statement; `let` binds the value on success.
    pub fn execute(&mut self, stmt: &Statement) -> Result<Value, Diagnostic> {
        match stmt {
            Statement::Expr(e) => eval(e, &self.env, &self.universe),
            Statement::Let { name, value } => {
                let v = eval(value, &self.env, &self.universe)?;
                self.env.insert(name.clone(), v.clone());
                Ok(v)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::diagnostic::DiagnosticCode;
    use crate::dsl::parser::{parse_expr, parse_statement};

    fn universe() -> Universe {
        Universe::builder()
            .species("photon", 4)
            .species("electron", 2)
            .label("alice")
            .label("bob")
            .build()
    }

    fn run(text: &str) -> Result<String, Diagnostic> {
        eval(&parse_expr(text)?, &Bindings::new(), &universe()).map(|v| v.to_string())
    }

    fn code(text: &str) -> DiagnosticCode {
        run(text).unwrap_err().code
    }

    #[test]
    fn evaluates_the_operations() {
        assert_eq!(run("qc(nsing(m:photon, 3))").unwrap(), "3");
        assert_eq!(
            run("m:photon in nsing(m:photon, 2)").unwrap(),
            "indeterminate"
        );
        assert_eq!(run("m:photon in [m:photon]").unwrap(), "yes");
        assert_eq!(run("pqc(nsing(m:photon, 3))").unwrap(), "8");
        assert_eq!(
            run("[m:photon, m:electron]").unwrap(),
            "[m:electron:2, m:photon:4]"
        );
        assert_eq!(
            run("nsing(m:photon, 3) (-) m:photon (-) m:photon").unwrap(),
            "[m:photon:1]"
        );
        assert_eq!(
            run("sep([m:photon, M:alice], Matom)").unwrap(),
            "[M:alice:1]"
        );
        assert_eq!(run("sub([m:photon], 2)").unwrap(), "[m:photon:2]");
        assert_eq!(
            run("pair(M:alice, M:bob)").unwrap(),
            "[[M:alice:1]:1, [M:alice:1, M:bob:1]:1]"
        );
        assert_eq!(
            run("pair(m:photon, m:photon) = [[m:photon]]").unwrap(),
            "true"
        );
        assert_eq!(run("sing(m:photon) ~ nsing(m:photon, 1)").unwrap(), "true");
        assert_eq!(run("M:alice = M:bob").unwrap(), "false");
        assert_eq!(run("sim(nsing(m:photon, 2), [m:photon])").unwrap(), "true");
        assert_eq!(
            run("qsim(nsing(m:photon, 2), [m:photon])").unwrap(),
            "false"
        );
        assert_eq!(
            run("enumerate(nsing(m:photon, 2))").unwrap(),
            "photon#1\nphoton#2"
        );
        assert_eq!(run("enumerate([])").unwrap(), "");
        assert_eq!(
            run("quotient([m:photon, M:alice])").unwrap(),
            "[(m:photon, 4), (M:alice, 1)]"
        );
        assert_eq!(run("[]").unwrap(), "[]");
        assert_eq!(run("m:photon").unwrap(), "m:photon");
    }

    #[test]
    fn errors_are_coded_and_located() {
        let err = run("m:photon = m:photon").unwrap_err();
        assert_eq!(err.code, DiagnosticCode::IllFormedIdentity);
        assert_eq!(err.span, Span::new(1, 1));
        assert_eq!(
            code("nsing(m:photon, 5)"),
            DiagnosticCode::CountExceedsUniverse
        );
        let err = run("qc([m:gluon])").unwrap_err();
        assert_eq!(err.code, DiagnosticCode::UnknownSpecies);
        assert_eq!(err.span, Span::new(1, 5));
        assert_eq!(code("[M:carol]"), DiagnosticCode::UnknownLabel);
        assert_eq!(
            code("nsing(m:photon, 1) (-) m:electron"),
            DiagnosticCode::NoIndistinguishableElement
        );
        assert_eq!(code("sub([m:electron], 3)"), DiagnosticCode::BetaExceedsQc);
        assert_eq!(code("qc(m:photon)"), DiagnosticCode::TypeError);
        assert_eq!(code("[qc([])]"), DiagnosticCode::TypeError);
        assert_eq!(code("undefined"), DiagnosticCode::TypeError);
    }

    #[test]
    fn power_overflow_surfaces() {
        let u = Universe::builder().species("gluon", 64).build();
        let pqc = |text: &str| eval(&parse_expr(text).unwrap(), &Bindings::new(), &u);
        assert_eq!(pqc("pqc(nsing(m:gluon, 63))"), Ok(Value::Cardinal(1 << 63)));
        let err = pqc("pqc([m:gluon])").unwrap_err();
        assert_eq!(err.code, DiagnosticCode::Overflow);
    }

    #[test]
    fn let_bindings_persist() {
        let mut s = Session::new(universe());
        let v = s
            .execute(&parse_statement("let x = nsing(m:photon, 2)").unwrap())
            .unwrap();
        assert_eq!(v.to_string(), "[m:photon:2]");
        let v = s
            .execute(&parse_statement("m:photon in x").unwrap())
            .unwrap();
        assert_eq!(v, Value::Tri(Tri::Indeterminate));
        s.execute(&parse_statement("let a = m:photon").unwrap())
            .unwrap();
        let err = s.execute(&parse_statement("a = a").unwrap()).unwrap_err();
        assert_eq!(err.code, DiagnosticCode::IllFormedIdentity);
    }
}
