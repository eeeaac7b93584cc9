//! Quasi-sets in canonical form.
//!
//! A quasi-set is stored as a map from equivalence-class descriptors to the
//! number of members of that class it holds. There is no per-member storage:
//! members of one class cannot be told apart, so a list of members would have
//! to invent an identity for them. Two quasi-sets holding the same quantity of
//! members of each class are therefore the same value.

use std::collections::BTreeMap;
use std::fmt;

use crate::element::{ClassDescriptor, Element};
use crate::error::{QsetError, Result};
use crate::universe::Universe;

/// Canonical quasi-set. Every stored count is at least 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QSet {
    classes: BTreeMap<ClassDescriptor, u64>,
}

impl QSet {
    pub fn empty() -> Self {
        QSet::default()
    }

    /// Builds a quasi-set from class counts already known to respect the
    /// universe bounds. Zero counts are dropped.
    pub(crate) fn from_counts(counts: impl IntoIterator<Item = (ClassDescriptor, u64)>) -> Self {
        let mut classes = BTreeMap::new();
        for (c, n) in counts {
            if n > 0 {
                *classes.entry(c).or_insert(0) += n;
            }
        }
        QSet { classes }
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of members of `class`, zero if absent.
    pub fn count(&self, class: &ClassDescriptor) -> u64 {
        self.classes.get(class).copied().unwrap_or(0)
    }

    /// Class/count pairs in canonical descriptor order.
    pub fn classes(&self) -> impl Iterator<Item = (&ClassDescriptor, u64)> + '_ {
        self.classes.iter().map(|(c, n)| (c, *n))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sum of class counts.
    pub fn qc(&self) -> u64 {
        self.classes.values().sum()
    }

    /// `self ⊆ other`: every class of `self` appears in `other` at least as
    /// many times.
    pub fn is_subset_of(&self, other: &QSet) -> bool {
        self.classes.iter().all(|(c, n)| other.count(c) >= *n)
    }

    /// True when no m-atom species occurs anywhere in the transitive
    /// closure, i.e. the quasi-set is a set in the classical sense.
    pub fn is_classical(&self) -> bool {
        self.classes.keys().all(ClassDescriptor::is_classical)
    }

    /// Class-wise subtraction, saturating at zero.
    pub(crate) fn minus(&self, other: &QSet) -> QSet {
        QSet::from_counts(
            self.classes
                .iter()
                .map(|(c, n)| (c.clone(), n.saturating_sub(other.count(c)))),
        )
    }

    pub(crate) fn with_count(&self, class: ClassDescriptor, n: u64) -> QSet {
        let mut out = self.clone();
        if n == 0 {
            out.classes.remove(&class);
        } else {
            out.classes.insert(class, n);
        }
        out
    }

    /// Checks the representation invariants against `universe`: positive
    /// counts, declared names, m-species counts within multiplicity, M-atoms
    /// at most once, recursively.
    pub fn validate(&self, universe: &Universe) -> Result<()> {
        for (class, &n) in &self.classes {
            debug_assert!(n > 0);
            check_bound(universe, class, n)?;
            if let ClassDescriptor::QClass(inner) = class {
                inner.validate(universe)?;
            }
        }
        Ok(())
    }
}

fn check_bound(universe: &Universe, class: &ClassDescriptor, n: u64) -> Result<()> {
    let available = match class {
        ClassDescriptor::MSpecies(s) => universe.multiplicity(s)?,
        ClassDescriptor::MLabel(l) => {
            universe.check_label(l)?;
            1
        }
        ClassDescriptor::QClass(_) => return Ok(()),
    };
    if n > available {
        return Err(QsetError::CountExceedsUniverse {
            class: class.to_string(),
            count: n,
            available,
        });
    }
    Ok(())
}

impl fmt::Display for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (c, n)) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}:{n}")?;
        }
        f.write_str("]")
    }
}

/// An uncanonicalized quasi-set under construction.
///
/// Entries may repeat a class, carry zero counts or nest further builders;
/// [`QSetBuilder::build`] merges them into the canonical form.
#[derive(Debug, Clone, Default)]
pub struct QSetBuilder {
    entries: Vec<(RawClass, u64)>,
}

#[derive(Debug, Clone)]
enum RawClass {
    Species(String),
    Label(String),
    Nested(QSetBuilder),
    Element(Element),
}

impl QSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn species(mut self, name: impl Into<String>, count: u64) -> Self {
        self.entries.push((RawClass::Species(name.into()), count));
        self
    }

    pub fn label(mut self, label: impl Into<String>) -> Self {
        self.entries.push((RawClass::Label(label.into()), 1));
        self
    }

    pub fn label_count(mut self, label: impl Into<String>, count: u64) -> Self {
        self.entries.push((RawClass::Label(label.into()), count));
        self
    }

    pub fn nested(mut self, inner: QSetBuilder, count: u64) -> Self {
        self.entries.push((RawClass::Nested(inner), count));
        self
    }

    pub fn element(mut self, element: Element, count: u64) -> Self {
        self.entries.push((RawClass::Element(element), count));
        self
    }

    /// Canonicalizes: nested builders first, then equal classes are merged,
    /// zero counts dropped and bounds checked against `universe`.
    pub fn build(&self, universe: &Universe) -> Result<QSet> {
        let mut counts: BTreeMap<ClassDescriptor, u64> = BTreeMap::new();
        for (raw, n) in &self.entries {
            let class = match raw {
                RawClass::Species(s) => {
                    universe.multiplicity(s)?;
                    ClassDescriptor::MSpecies(s.clone())
                }
                RawClass::Label(l) => {
                    universe.check_label(l)?;
                    ClassDescriptor::MLabel(l.clone())
                }
                RawClass::Nested(b) => ClassDescriptor::QClass(b.build(universe)?),
                RawClass::Element(e) => {
                    universe.check_element(e)?;
                    if let Element::QSet(q) = e {
                        q.validate(universe)?;
                    }
                    e.class()
                }
            };
            let slot = counts.entry(class).or_insert(0);
            *slot = slot.saturating_add(*n);
        }
        let q = QSet::from_counts(counts);
        q.validate(universe)?;
        Ok(q)
    }
}

/// Free-function form of [`QSetBuilder::build`].
pub fn canonicalize(raw: &QSetBuilder, universe: &Universe) -> Result<QSet> {
    raw.build(universe)
}

impl QSet {
    /// Re-canonicalizes an existing quasi-set; the identity on valid input.
    pub fn canonicalize(&self, universe: &Universe) -> Result<QSet> {
        self.validate(universe)?;
        Ok(QSet::from_counts(
            self.classes.iter().map(|(c, n)| (c.clone(), *n)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> Universe {
        Universe::builder()
            .species("photon", 4)
            .species("electron", 2)
            .label("alice")
            .build()
    }

    #[test]
    fn drops_zero_counts() {
        let q = QSetBuilder::new()
            .species("photon", 2)
            .species("electron", 0)
            .build(&universe())
            .unwrap();
        assert_eq!(q.to_string(), "[m:photon:2]");
        assert_eq!(q.class_count(), 1);
    }

    #[test]
    fn count_bound_is_the_universe_multiplicity() {
        let u = universe();
        let err = QSetBuilder::new()
            .species("photon", 5)
            .build(&u)
            .unwrap_err();
        assert_eq!(
            err,
            QsetError::CountExceedsUniverse {
                class: "m:photon".into(),
                count: 5,
                available: 4
            }
        );
        // Split entries are merged before the bound is checked.
        assert!(QSetBuilder::new()
            .species("photon", 3)
            .species("photon", 2)
            .build(&u)
            .is_err());
        assert!(QSetBuilder::new().species("photon", 4).build(&u).is_ok());
        assert!(matches!(
            QSetBuilder::new().label_count("alice", 2).build(&u),
            Err(QsetError::CountExceedsUniverse { available: 1, .. })
        ));
    }

    #[test]
    fn unknown_names_are_rejected() {
        let u = universe();
        assert_eq!(
            QSetBuilder::new().species("gluon", 1).build(&u),
            Err(QsetError::UnknownSpecies("gluon".into()))
        );
        assert_eq!(
            QSetBuilder::new()
                .nested(QSetBuilder::new().label("bob"), 1)
                .build(&u),
            Err(QsetError::UnknownLabel("bob".into()))
        );
    }

    #[test]
    fn nested_builders_are_canonicalized() {
        let u = universe();
        let inner = QSetBuilder::new().species("photon", 1);
        let q = QSetBuilder::new()
            .nested(inner.clone(), 3)
            .build(&u)
            .unwrap();
        assert_eq!(q.to_string(), "[[m:photon:1]:3]");
        // Same class reached through an already-canonical element.
        let inner_q = inner.build(&u).unwrap();
        let p = QSetBuilder::new()
            .element(Element::QSet(inner_q), 1)
            .nested(
                QSetBuilder::new()
                    .species("photon", 1)
                    .species("electron", 0),
                2,
            )
            .build(&u)
            .unwrap();
        assert_eq!(p, q);
        assert_eq!(q.canonicalize(&u).unwrap(), q);
    }

    #[test]
    fn deterministic_order_is_kind_then_name() {
        let u = universe();
        let q = QSetBuilder::new()
            .nested(QSetBuilder::new(), 1)
            .label("alice")
            .species("photon", 1)
            .species("electron", 1)
            .build(&u)
            .unwrap();
        assert_eq!(q.to_string(), "[m:electron:1, m:photon:1, M:alice:1, []:1]");
    }

    #[test]
    fn subset_and_classical() {
        let u = universe();
        let small = QSetBuilder::new().species("photon", 1).build(&u).unwrap();
        let big = QSetBuilder::new()
            .species("photon", 3)
            .label("alice")
            .build(&u)
            .unwrap();
        assert!(small.is_subset_of(&big));
        assert!(!big.is_subset_of(&small));
        assert!(QSet::empty().is_subset_of(&small));
        assert!(!big.is_classical());
        let nested = QSetBuilder::new()
            .nested(QSetBuilder::new().label("alice"), 1)
            .build(&u)
            .unwrap();
        assert!(nested.is_classical());
        assert_eq!(big.qc(), 4);
    }
}
