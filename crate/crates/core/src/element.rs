use std::fmt;

use crate::qset::QSet;

/// Anything that can be a member of a quasi-set.
///
/// An m-atom occurrence is nothing but its species: two occurrences of the
/// same species are the same value, and no operation in this crate can tell
/// them apart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    MAtomOcc { species: String },
    MAtom { label: String },
    QSet(QSet),
}

impl Element {
    /// An occurrence of an m-atom of the given species.
    pub fn micro(species: impl Into<String>) -> Self {
        Element::MAtomOcc {
            species: species.into(),
        }
    }

    /// The M-atom carrying `label`.
    pub fn labeled(label: impl Into<String>) -> Self {
        Element::MAtom {
            label: label.into(),
        }
    }

    /// The indistinguishability class this element belongs to.
    pub fn class(&self) -> ClassDescriptor {
        match self {
            Element::MAtomOcc { species } => ClassDescriptor::MSpecies(species.clone()),
            Element::MAtom { label } => ClassDescriptor::MLabel(label.clone()),
            Element::QSet(q) => ClassDescriptor::QClass(q.clone()),
        }
    }

    pub fn is_micro(&self) -> bool {
        matches!(self, Element::MAtomOcc { .. })
    }

    pub fn as_qset(&self) -> Option<&QSet> {
        match self {
            Element::QSet(q) => Some(q),
            _ => None,
        }
    }
}

impl From<QSet> for Element {
    fn from(q: QSet) -> Self {
        Element::QSet(q)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::MAtomOcc { species } => write!(f, "m:{species}"),
            Element::MAtom { label } => write!(f, "M:{label}"),
            Element::QSet(q) => q.fmt(f),
        }
    }
}

/// Key of one equivalence class inside a quasi-set.
///
/// The derived ordering sorts by kind (species, then labels, then nested
/// quasi-sets), then by name or recursive canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassDescriptor {
    MSpecies(String),
    MLabel(String),
    QClass(QSet),
}

impl ClassDescriptor {
    /// A representative element of the class. For m-atom species this is an
    /// occurrence token, which is all an m-atom ever is here.
    pub fn representative(&self) -> Element {
        match self {
            ClassDescriptor::MSpecies(s) => Element::micro(s.clone()),
            ClassDescriptor::MLabel(l) => Element::labeled(l.clone()),
            ClassDescriptor::QClass(q) => Element::QSet(q.clone()),
        }
    }

    /// Name used in enumeration output: bare species or label, or the
    /// rendered quasi-set.
    pub fn short_name(&self) -> String {
        match self {
            ClassDescriptor::MSpecies(s) => s.clone(),
            ClassDescriptor::MLabel(l) => l.clone(),
            ClassDescriptor::QClass(q) => q.to_string(),
        }
    }

    /// True when no m-atom species occurs in the class, recursively.
    pub fn is_classical(&self) -> bool {
        match self {
            ClassDescriptor::MSpecies(_) => false,
            ClassDescriptor::MLabel(_) => true,
            ClassDescriptor::QClass(q) => q.is_classical(),
        }
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassDescriptor::MSpecies(s) => write!(f, "m:{s}"),
            ClassDescriptor::MLabel(l) => write!(f, "M:{l}"),
            ClassDescriptor::QClass(q) => q.fmt(f),
        }
    }
}
