//! Axiom-level constructors: weak classes and pairs, strong and n-singletons,
//! strong difference, separation, quasi-cardinal laws and ordered pairs.

use std::fmt;

use crate::element::{ClassDescriptor, Element};
use crate::error::{QsetError, Result};
use crate::qset::QSet;
use crate::universe::Universe;

/// Quasi-cardinals are finite in this model.
pub type Cardinal = u64;

/// `[x]`: every object indistinguishable from `x`.
///
/// For an m-atom this is the whole declared population of its species; for an
/// M-atom it is the classical singleton. A quasi-set is indistinguishable only
/// from quasi-sets with the same canonical form, and the universe declares no
/// separate population of those, so its weak class holds it once.
pub fn weak_class(universe: &Universe, x: &Element) -> Result<QSet> {
    universe.check_element(x)?;
    let n = match x {
        Element::MAtomOcc { species } => universe.multiplicity(species)?,
        Element::MAtom { .. } | Element::QSet(_) => 1,
    };
    Ok(QSet::from_counts([(x.class(), n)]))
}

/// `[x, y]`: every object indistinguishable from `x` or from `y`.
pub fn weak_pair(universe: &Universe, x: &Element, y: &Element) -> Result<QSet> {
    let a = weak_class(universe, x)?;
    let b = weak_class(universe, y)?;
    if a == b {
        return Ok(a);
    }
    Ok(QSet::from_counts(
        a.classes().chain(b.classes()).map(|(c, n)| (c.clone(), n)),
    ))
}

/// `x'`: a sub-quasi-set of `[x]` with quasi-cardinal 1.
pub fn strong_singleton(universe: &Universe, x: &Element) -> Result<QSet> {
    n_singleton(universe, x, 1)
}

/// `[x]_n`: a sub-quasi-set of `[x]` with quasi-cardinal `n`. `n = 0` gives
/// the empty quasi-set.
pub fn n_singleton(universe: &Universe, x: &Element, n: Cardinal) -> Result<QSet> {
    let available = weak_class(universe, x)?.qc();
    if n > available {
        return Err(QsetError::CountExceedsUniverse {
            class: x.class().to_string(),
            count: n,
            available,
        });
    }
    Ok(QSet::from_counts([(x.class(), n)]))
}

/// `q ⊖ y'`: removes one member of `q` indistinguishable from `y`. The
/// quasi-cardinal drops by exactly one.
pub fn strong_difference(q: &QSet, y: &Element) -> Result<QSet> {
    let class = y.class();
    match q.count(&class) {
        0 => Err(QsetError::NoIndistinguishableElement(y.to_string())),
        n => Ok(q.with_count(class, n - 1)),
    }
}

/// Comparison used by [`Predicate::QcCompare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn apply(self, a: u64, b: u64) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
            CmpOp::Ge => a >= b,
            CmpOp::Gt => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }
}

/// Separation formulas.
///
/// Every constructor looks only at an element's class, so no formula can hold
/// of one member of a class and fail of another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Predicate {
    True,
    False,
    /// An m-atom of the named species.
    SpeciesIs(String),
    /// Any m-atom.
    IsMicro,
    /// Any M-atom, or the one with the given label.
    IsMacro(Option<String>),
    IsQSet,
    /// A quasi-set whose quasi-cardinal compares to the constant. False of
    /// atoms.
    QcCompare(CmpOp, Cardinal),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

impl Predicate {
    pub fn holds(&self, class: &ClassDescriptor) -> bool {
        match self {
            Predicate::True => true,
            Predicate::False => false,
            Predicate::SpeciesIs(s) => matches!(class, ClassDescriptor::MSpecies(c) if c == s),
            Predicate::IsMicro => matches!(class, ClassDescriptor::MSpecies(_)),
            Predicate::IsMacro(None) => matches!(class, ClassDescriptor::MLabel(_)),
            Predicate::IsMacro(Some(l)) => matches!(class, ClassDescriptor::MLabel(c) if c == l),
            Predicate::IsQSet => matches!(class, ClassDescriptor::QClass(_)),
            Predicate::QcCompare(op, k) => {
                matches!(class, ClassDescriptor::QClass(q) if op.apply(q.qc(), *k))
            }
            Predicate::Not(p) => !p.holds(class),
            Predicate::And(a, b) => a.holds(class) && b.holds(class),
            Predicate::Or(a, b) => a.holds(class) || b.holds(class),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Predicate::Or(..) => 0,
            Predicate::And(..) => 1,
            Predicate::Not(_) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Predicate::True => f.write_str("true"),
            Predicate::False => f.write_str("false"),
            Predicate::SpeciesIs(s) => write!(f, "species({s})"),
            Predicate::IsMicro => f.write_str("matom"),
            Predicate::IsMacro(None) => f.write_str("Matom"),
            Predicate::IsMacro(Some(l)) => write!(f, "Matom({l})"),
            Predicate::IsQSet => f.write_str("qset"),
            Predicate::QcCompare(op, k) => write!(f, "qc {} {k}", op.symbol()),
            Predicate::Not(p) => {
                f.write_str("not ")?;
                p.fmt_at(f, 2)
            }
            // Left-associative: the right operand binds one level tighter.
            Predicate::And(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" and ")?;
                b.fmt_at(f, 2)
            }
            Predicate::Or(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" or ")?;
                b.fmt_at(f, 1)
            }
        }
    }
}

/// Renders in the surface syntax accepted by `sep(e, pred)`.
impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// `[t ∈ q : p(t)]`, keeping each class whole.
pub fn separation(q: &QSet, p: &Predicate) -> QSet {
    QSet::from_counts(
        q.classes()
            .filter(|(c, _)| p.holds(c))
            .map(|(c, n)| (c.clone(), n)),
    )
}

pub fn quasi_cardinal(q: &QSet) -> Cardinal {
    q.qc()
}

/// `qc(P(q)) = 2^qc(q)`.
pub fn power_qc(q: &QSet) -> Result<Cardinal> {
    let exponent = q.qc();
    if exponent >= u64::from(Cardinal::BITS) {
        return Err(QsetError::Overflow { exponent });
    }
    Ok(1 << exponent)
}

/// A sub-quasi-set of `q` with quasi-cardinal `beta`, filled greedily in
/// canonical class order.
pub fn sub_qset(q: &QSet, beta: Cardinal) -> Result<QSet> {
    let qc = q.qc();
    if beta > qc {
        return Err(QsetError::BetaExceedsQc { beta, qc });
    }
    let mut remaining = beta;
    Ok(QSet::from_counts(q.classes().map(|(c, n)| {
        let take = n.min(remaining);
        remaining -= take;
        (c.clone(), take)
    })))
}

/// `⟨x, y⟩ = [[x], [x, y]]`.
///
/// When `x ≡ y` the inner weak pair is `[x]` itself, so the pair collapses to
/// `[[x]]` and is symmetric.
pub fn ordered_pair(universe: &Universe, x: &Element, y: &Element) -> Result<QSet> {
    let first = Element::QSet(weak_class(universe, x)?);
    let both = Element::QSet(weak_pair(universe, x, y)?);
    weak_pair(universe, &first, &both)
}
