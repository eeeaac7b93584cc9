//! The declared finite population every quasi-set lives in.
//!
//! A universe file is line oriented:
//!
//! ```text
//! # comment
//! matom photon 4
//! matom electron 2
//! Matom alice
//! ```
//!
//! Species and labels share one namespace for duplicate detection, so a name
//! can never denote both an m-atom species and an M-atom.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::element::{ClassDescriptor, Element};
use crate::error::{QsetError, Result, UniverseError};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Universe {
    species: BTreeMap<String, u64>,
    labels: BTreeSet<String>,
}

impl Universe {
    pub fn builder() -> UniverseBuilder {
        UniverseBuilder::default()
    }

    /// Multiplicity of an m-atom species.
    pub fn multiplicity(&self, species: &str) -> Result<u64> {
        self.species
            .get(species)
            .copied()
            .ok_or_else(|| QsetError::UnknownSpecies(species.to_string()))
    }

    pub fn has_label(&self, label: &str) -> bool {
        self.labels.contains(label)
    }

    pub fn species(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.species.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.labels.iter().map(String::as_str)
    }

    pub fn species_counts(&self) -> &BTreeMap<String, u64> {
        &self.species
    }

    /// True when no m-atom species is declared; every quasi-set over such a
    /// universe is a classical set.
    pub fn is_classical(&self) -> bool {
        self.species.is_empty()
    }

    pub fn check_label(&self, label: &str) -> Result<()> {
        if self.has_label(label) {
            Ok(())
        } else {
            Err(QsetError::UnknownLabel(label.to_string()))
        }
    }

    /// Checks that every species and label referenced by `element`, including
    /// inside nested quasi-sets, is declared here.
    pub fn check_element(&self, element: &Element) -> Result<()> {
        match element {
            Element::MAtomOcc { species } => self.multiplicity(species).map(|_| ()),
            Element::MAtom { label } => self.check_label(label),
            Element::QSet(q) => q.classes().try_for_each(|(c, _)| self.check_class(c)),
        }
    }

    pub fn check_class(&self, class: &ClassDescriptor) -> Result<()> {
        match class {
            ClassDescriptor::MSpecies(s) => self.multiplicity(s).map(|_| ()),
            ClassDescriptor::MLabel(l) => self.check_label(l),
            ClassDescriptor::QClass(q) => q.classes().try_for_each(|(c, _)| self.check_class(c)),
        }
    }
}

/// Echoes the declarations in canonical order: species first, then labels,
/// each sorted by name.
impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, n) in &self.species {
            writeln!(f, "matom {name} {n}")?;
        }
        for label in &self.labels {
            writeln!(f, "Matom {label}")?;
        }
        Ok(())
    }
}

impl FromStr for Universe {
    type Err = UniverseError;

    fn from_str(text: &str) -> Result<Self, UniverseError> {
        let mut builder = UniverseBuilder::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            match words.as_slice() {
                ["matom", name, count] => {
                    check_name(name, line)?;
                    let n: u64 = count.parse().map_err(|_| UniverseError::Syntax {
                        line,
                        message: format!("invalid multiplicity `{count}`"),
                    })?;
                    builder.try_species(name, n, line)?;
                }
                ["Matom", label] => {
                    check_name(label, line)?;
                    builder.try_label(label, line)?;
                }
                _ => {
                    return Err(UniverseError::Syntax {
                        line,
                        message: format!(
                            "expected `matom <species> <multiplicity>` or `Matom <label>`, found `{content}`"
                        ),
                    })
                }
            }
        }
        Ok(builder.build())
    }
}

fn check_name(name: &str, line: usize) -> Result<(), UniverseError> {
    if is_identifier(name) {
        Ok(())
    } else {
        Err(UniverseError::Syntax {
            line,
            message: format!("`{name}` is not a valid name"),
        })
    }
}

/// Names are ASCII identifiers so that every declared name can be written as
/// a DSL literal.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Default)]
pub struct UniverseBuilder {
    universe: Universe,
}

impl UniverseBuilder {
    /// Declares a species. Panics on invalid or duplicate declarations; use
    /// the text loader for untrusted input.
    pub fn species(mut self, name: &str, multiplicity: u64) -> Self {
        self.try_species(name, multiplicity, 0)
            .unwrap_or_else(|e| panic!("{e}"));
        self
    }

    pub fn label(mut self, label: &str) -> Self {
        self.try_label(label, 0).unwrap_or_else(|e| panic!("{e}"));
        self
    }

    pub fn build(self) -> Universe {
        self.universe
    }

    fn taken(&self, name: &str) -> bool {
        self.universe.species.contains_key(name) || self.universe.labels.contains(name)
    }

    fn try_species(&mut self, name: &str, n: u64, line: usize) -> Result<(), UniverseError> {
        if n == 0 {
            return Err(UniverseError::EmptySpecies {
                line,
                name: name.to_string(),
            });
        }
        if self.taken(name) {
            return Err(UniverseError::Duplicate {
                line,
                name: name.to_string(),
            });
        }
        self.universe.species.insert(name.to_string(), n);
        Ok(())
    }

    fn try_label(&mut self, label: &str, line: usize) -> Result<(), UniverseError> {
        if self.taken(label) {
            return Err(UniverseError::Duplicate {
                line,
                name: label.to_string(),
            });
        }
        self.universe.labels.insert(label.to_string());
        Ok(())
    }
}
