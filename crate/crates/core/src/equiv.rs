//! Indistinguishability, extensional equality and the relations built on them.

use std::fmt;

use crate::element::{ClassDescriptor, Element};
use crate::error::{QsetError, Result};
use crate::qset::QSet;

/// `x ≡ y`. Total: same species, same label, or the same canonical quasi-set.
pub fn indistinguishable(x: &Element, y: &Element) -> bool {
    x.class() == y.class()
}

/// `x =_E y`, defined only when neither side is an m-atom.
///
/// Quasi-sets are extensionally equal when they have the same members; with
/// members recorded per class this is equality of canonical forms. M-atoms are
/// extensionally equal when they carry the same label.
pub fn extensional_equal(x: &Element, y: &Element) -> Result<bool> {
    for e in [x, y] {
        if let Element::MAtomOcc { species } = e {
            return Err(QsetError::IllFormedIdentity {
                species: species.clone(),
            });
        }
    }
    Ok(match (x, y) {
        (Element::MAtom { label: a }, Element::MAtom { label: b }) => a == b,
        (Element::QSet(a), Element::QSet(b)) => a == b,
        _ => false,
    })
}

/// `Sim(x, y)`: every member of `x` is indistinguishable from every member of
/// `y`. Vacuously true when either side is empty.
pub fn sim(x: &QSet, y: &QSet) -> bool {
    if x.is_empty() || y.is_empty() {
        return true;
    }
    x.classes()
        .all(|(cx, _)| y.classes().all(|(cy, _)| cx == cy))
}

/// `QSim(x, y)`: similar and of equal quasi-cardinal.
pub fn qsim(x: &QSet, y: &QSet) -> bool {
    sim(x, y) && x.qc() == y.qc()
}

/// The quotient `q/≡` as class/count pairs in canonical order.
pub fn quotient(q: &QSet) -> Vec<(ClassDescriptor, u64)> {
    q.classes().map(|(c, n)| (c.clone(), n)).collect()
}

/// Three-valued answer to a membership question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tri {
    Yes,
    No,
    Indeterminate,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    /// The definite answer, if there is one.
    pub fn definite(self) -> Option<bool> {
        match self {
            Tri::Yes => Some(true),
            Tri::No => Some(false),
            Tri::Indeterminate => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Indeterminate => "indeterminate",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qset::QSetBuilder;
    use crate::universe::Universe;

    fn universe() -> Universe {
        Universe::builder()
            .species("photon", 4)
            .species("electron", 2)
            .label("alice")
            .label("bob")
            .build()
    }

    fn q(b: QSetBuilder) -> QSet {
        b.build(&universe()).unwrap()
    }

    #[test]
    fn indistinguishability_of_atoms() {
        let photon = Element::micro("photon");
        assert!(indistinguishable(&photon, &photon));
        assert!(!indistinguishable(&photon, &Element::micro("electron")));
        assert!(!indistinguishable(
            &Element::labeled("alice"),
            &Element::labeled("bob")
        ));
        assert!(!indistinguishable(&photon, &Element::labeled("alice")));
    }

    #[test]
    fn weak_extensionality_across_construction_paths() {
        let a = q(QSetBuilder::new().species("photon", 2));
        let b = q(QSetBuilder::new()
            .species("photon", 1)
            .species("electron", 0)
            .element(Element::micro("photon"), 1));
        assert!(indistinguishable(&a.clone().into(), &b.into()));
        assert!(!indistinguishable(
            &a.into(),
            &q(QSetBuilder::new().species("photon", 1)).into()
        ));
    }

    #[test]
    fn extensional_equality() {
        let alice = Element::labeled("alice");
        assert_eq!(extensional_equal(&alice, &alice), Ok(true));
        assert_eq!(
            extensional_equal(&alice, &Element::labeled("bob")),
            Ok(false)
        );
        let one = q(QSetBuilder::new().species("photon", 1));
        let two = q(QSetBuilder::new().species("photon", 2));
        assert_eq!(
            extensional_equal(&one.into(), &two.clone().into()),
            Ok(false)
        );
        assert_eq!(extensional_equal(&alice, &two.into()), Ok(false));
        let photon = Element::micro("photon");
        assert_eq!(
            extensional_equal(&photon, &photon),
            Err(QsetError::IllFormedIdentity {
                species: "photon".into()
            })
        );
        assert!(extensional_equal(&alice, &photon).is_err());
    }

    #[test]
    fn sim_and_qsim() {
        let p2 = q(QSetBuilder::new().species("photon", 2));
        let p3 = q(QSetBuilder::new().species("photon", 3));
        let e1 = q(QSetBuilder::new().species("electron", 1));
        let mixed = q(QSetBuilder::new()
            .species("photon", 1)
            .species("electron", 1));
        assert!(sim(&p2, &p3));
        assert!(!sim(&p2, &e1));
        assert!(sim(&QSet::empty(), &p2));
        assert!(!sim(&mixed, &mixed));
        assert!(qsim(&p2, &p2));
        assert!(!qsim(&p2, &p3));
        assert!(qsim(&QSet::empty(), &QSet::empty()));
    }

    #[test]
    fn quotient_readout() {
        let mixed = q(QSetBuilder::new()
            .species("photon", 2)
            .species("electron", 1));
        assert_eq!(
            quotient(&mixed),
            vec![
                (ClassDescriptor::MSpecies("electron".into()), 1),
                (ClassDescriptor::MSpecies("photon".into()), 2),
            ]
        );
        assert!(quotient(&QSet::empty()).is_empty());
    }

    #[test]
    fn quotient_collapses_indistinguishable_strong_singletons() {
        // Three strong singletons of photon, added one at a time.
        let single = || QSetBuilder::new().species("photon", 1);
        let three = q(QSetBuilder::new()
            .nested(single(), 1)
            .nested(single(), 1)
            .nested(single(), 1));
        let members = [single(), single(), single()].map(|b| Element::QSet(q(b)));
        for a in &members {
            for b in &members {
                assert!(indistinguishable(a, b));
            }
        }
        assert_eq!(quotient(&three), vec![(members[0].class(), 3)]);
    }

    #[test]
    fn tri_rendering() {
        assert_eq!(Tri::Indeterminate.to_string(), "indeterminate");
        assert_eq!(Tri::from_bool(true), Tri::Yes);
        assert_eq!(Tri::No.definite(), Some(false));
    }
}
