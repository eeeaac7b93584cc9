//! Enumeration of finite quasi-sets, three-valued membership, and an
//! exhaustive harness showing that no membership strategy can be right on
//! every proper n-singleton.
//!
//! Note on weak classes: in a finite universe `[x]` is itself a finite
//! quasi-set and so [`enumerate`] prints it like any other. That says nothing
//! about weak classes over an unbounded population, which this model cannot
//! express.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;

use crate::element::{ClassDescriptor, Element};
use crate::equiv::{quotient, Tri};
use crate::error::{QsetError, Result};
use crate::qops::strong_difference;
use crate::qset::QSet;
use crate::universe::Universe;

/// One printed element of an enumeration.
///
/// `index` is the position in the print order. It numbers the printing steps,
/// not the objects: it does not say which of several indistinguishable
/// members was printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmissionToken {
    pub class: ClassDescriptor,
    pub index: u64,
}

impl fmt::Display for EmissionToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.class.short_name(), self.index)
    }
}

/// Iterator over the printed elements of a quasi-set.
///
/// Each step keeps a copy `y` of the current quasi-set, removes one member
/// with the strong difference, and prints `y` minus the result, which is a
/// strong singleton. The loop stops once the quasi-set is empty. Classes are
/// drained in canonical order.
#[derive(Debug, Clone)]
pub struct Enumeration {
    current: QSet,
    printed: u64,
}

pub fn enumerate(q: &QSet) -> Enumeration {
    Enumeration {
        current: q.clone(),
        printed: 0,
    }
}

impl Iterator for Enumeration {
    type Item = EmissionToken;

    fn next(&mut self) -> Option<EmissionToken> {
        // Emptiness is tested before removing, so the empty quasi-set prints
        // nothing instead of failing the strong difference.
        let (class, _) = self.current.classes().next()?;
        let x = class.representative();
        let y = self.current.clone();
        self.current = strong_difference(&y, &x).expect("class taken from the quasi-set itself");
        let removed = y.minus(&self.current);
        debug_assert_eq!(removed.qc(), 1);
        let (class, _) = removed.classes().next()?;
        self.printed += 1;
        Some(EmissionToken {
            class: class.clone(),
            index: self.printed,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.current.qc()).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

impl ExactSizeIterator for Enumeration {}

/// Decides `candidate ∈ q` as far as indistinguishability allows.
///
/// * M-atom: `Yes` iff its class is present.
/// * m-atom of species `s`, with `q` holding `n` of the `N_s` declared:
///   `No` when `n = 0`, `Yes` when `n = N_s` (then `q` contains all of `[x]`),
///   `Indeterminate` in between.
/// * quasi-set with no m-atoms anywhere inside: `Yes` iff an extensionally
///   equal quasi-set is present.
/// * any other quasi-set: `No` when no indistinguishable member is present,
///   otherwise `Indeterminate`.
pub fn decide_membership(universe: &Universe, candidate: &Element, q: &QSet) -> Result<Tri> {
    universe.check_element(candidate)?;
    q.validate(universe)?;
    let n = q.count(&candidate.class());
    Ok(match candidate {
        Element::MAtom { .. } => Tri::from_bool(n > 0),
        Element::MAtomOcc { species } => {
            let population = universe.multiplicity(species)?;
            if n == 0 {
                Tri::No
            } else if n >= population {
                Tri::Yes
            } else {
                Tri::Indeterminate
            }
        }
        Element::QSet(c) if c.is_classical() => Tri::from_bool(n > 0),
        Element::QSet(_) => {
            if n == 0 {
                Tri::No
            } else {
                Tri::Indeterminate
            }
        }
    })
}

/// Everything a membership procedure can see about a query: no hidden
/// identities, only classes and counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Observation {
    pub candidate_class: ClassDescriptor,
    pub qset_quotient: Vec<(ClassDescriptor, u64)>,
    pub universe_counts: BTreeMap<String, u64>,
}

pub fn observation_of(universe: &Universe, candidate: &Element, q: &QSet) -> Observation {
    Observation {
        candidate_class: candidate.class(),
        qset_quotient: quotient(q),
        universe_counts: universe.species_counts().clone(),
    }
}

/// Species name used by the harness universes.
pub const HARNESS_SPECIES: &str = "s";

/// Largest multiplicity [`exhaustive_undecidability_check`] accepts.
pub const HARNESS_MAX_N: u64 = 6;

/// Ground truth the harness scores against: which of the `population`
/// objects of one species are in the n-singleton, and which one is asked
/// about. Strategies only ever see [`HiddenConfiguration::observe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiddenConfiguration {
    pub species: String,
    pub population: u64,
    pub member_ids: BTreeSet<u64>,
    pub candidate_id: u64,
}

impl HiddenConfiguration {
    /// Every configuration with `members` of `population` objects in the
    /// quasi-set, each paired with every candidate.
    pub fn all(species: &str, population: u64, members: u64) -> Vec<HiddenConfiguration> {
        let ids = 1..=population;
        let Ok(k) = usize::try_from(members) else {
            return Vec::new();
        };
        ids.clone()
            .combinations(k)
            .cartesian_product(ids)
            .map(|(member_ids, candidate_id)| HiddenConfiguration {
                species: species.to_string(),
                population,
                member_ids: member_ids.into_iter().collect(),
                candidate_id,
            })
            .collect()
    }

    pub fn is_member(&self) -> bool {
        self.member_ids.contains(&self.candidate_id)
    }

    pub fn universe(&self) -> Universe {
        Universe::builder()
            .species(&self.species, self.population)
            .build()
    }

    pub fn candidate(&self) -> Element {
        Element::micro(self.species.clone())
    }

    /// The n-singleton as the engine represents it: the member identities
    /// are forgotten, only their number remains.
    pub fn visible_qset(&self) -> QSet {
        QSet::from_counts([(
            ClassDescriptor::MSpecies(self.species.clone()),
            self.member_ids.len() as u64,
        )])
    }

    pub fn observe(&self) -> Observation {
        observation_of(&self.universe(), &self.candidate(), &self.visible_qset())
    }
}

/// Fraction of configurations (candidate drawn uniformly from the
/// population, over every choice of members) on which `strategy` answers
/// correctly. `true` means "member".
pub fn game_accuracy<F>(population: u64, members: u64, strategy: F) -> Ratio<u64>
where
    F: Fn(&Observation) -> bool,
{
    let configs = HiddenConfiguration::all(HARNESS_SPECIES, population, members);
    let correct = configs
        .iter()
        .filter(|c| strategy(&c.observe()) == c.is_member())
        .count();
    Ratio::new(correct as u64, configs.len().max(1) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every strategy errs on some configuration.
    Undecidable,
    /// Empty n-singleton, answered `No` correctly.
    DecidedNo,
    /// n-singleton exhausting the class, answered `Yes` correctly.
    DecidedYes,
    /// The expected outcome did not hold.
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Undecidable => "undecidable",
            Verdict::DecidedNo => "decided-no",
            Verdict::DecidedYes => "decided-yes",
            Verdict::Refuted => "REFUTED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub population: u64,
    pub members: u64,
    pub configurations: usize,
    pub observations: usize,
    pub strategies: u64,
    /// Strategies that answered wrongly on at least one configuration.
    pub erring_strategies: u64,
    pub max_accuracy: Ratio<u64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn confirmed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Verdict::Refuted)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>3} {:>8} {:>12} {:>10} {:>8} {:>12}  verdict",
            "N", "n", "configs", "observations", "strategies", "erring", "max-accuracy"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3} {:>3} {:>8} {:>12} {:>10} {:>8} {:>12}  {}",
                r.population,
                r.members,
                r.configurations,
                r.observations,
                r.strategies,
                r.erring_strategies,
                r.max_accuracy.to_string(),
                r.verdict
            )?;
        }
        let status = if self.confirmed() {
            "confirmed"
        } else {
            "REFUTED"
        };
        writeln!(f, "result: {status}")
    }
}

/// Plays the membership game for every multiplicity `N ≤ max_n` and every
/// `0 ≤ n ≤ N`.
///
/// The observation space of each `(N, n)` is collected by projecting every
/// hidden configuration, and every map from it to yes/no is tried. For
/// `0 < n < N` the row holds when every such strategy errs somewhere, a pair
/// of configurations with identical observations and opposite ground truth
/// exists, and the best strategy scores exactly `max(n/N, 1 - n/N)`. For
/// `n = 0` and `n = N` the row holds when [`decide_membership`] is right on
/// every configuration.
pub fn exhaustive_undecidability_check(max_n: u64) -> Result<Report> {
    if max_n > HARNESS_MAX_N {
        return Err(QsetError::HarnessBound {
            requested: max_n,
            max: HARNESS_MAX_N,
        });
    }
    let mut rows = Vec::new();
    for population in 1..=max_n {
        for members in 0..=population {
            rows.push(play(population, members)?);
        }
    }
    Ok(Report { rows })
}

fn play(population: u64, members: u64) -> Result<ReportRow> {
    let configs = HiddenConfiguration::all(HARNESS_SPECIES, population, members);
    let observed: Vec<Observation> = configs.iter().map(HiddenConfiguration::observe).collect();
    let space: Vec<&Observation> = observed
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let strategies = 1u64 << space.len();

    let mut erring = 0;
    let mut best = Ratio::new(0, 1);
    for mask in 0..strategies {
        let answer = |o: &Observation| {
            let i = space
                .iter()
                .position(|s| *s == o)
                .expect("observation in space");
            mask >> i & 1 == 1
        };
        let correct = configs
            .iter()
            .zip(&observed)
            .filter(|(c, o)| answer(o) == c.is_member())
            .count();
        if correct < configs.len() {
            erring += 1;
        }
        best = best.max(Ratio::new(correct as u64, configs.len() as u64));
    }

    let verdict = if members == 0 || members == population {
        let expected = Tri::from_bool(members == population);
        let mut all_right = true;
        for c in &configs {
            let answer = decide_membership(&c.universe(), &c.candidate(), &c.visible_qset())?;
            all_right &= answer == expected && answer.definite() == Some(c.is_member());
        }
        match (all_right, members == 0) {
            (false, _) => Verdict::Refuted,
            (true, true) => Verdict::DecidedNo,
            (true, false) => Verdict::DecidedYes,
        }
    } else {
        let witness = configs.iter().zip(&observed).any(|(a, oa)| {
            configs
                .iter()
                .zip(&observed)
                .any(|(b, ob)| oa == ob && a.is_member() != b.is_member())
        });
        let share = Ratio::new(members, population);
        let ceiling = share.max(Ratio::from_integer(1) - share);
        if witness && erring == strategies && best == ceiling {
            Verdict::Undecidable
        } else {
            Verdict::Refuted
        }
    };

    Ok(ReportRow {
        population,
        members,
        configurations: configs.len(),
        observations: space.len(),
        strategies,
        erring_strategies: erring,
        max_accuracy: best,
        verdict,
    })
}
