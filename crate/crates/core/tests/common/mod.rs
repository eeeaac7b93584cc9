//! Generators and oracles shared by the integration tests.
#![allow(dead_code)]

use qset_core::dsl::{Expr, ExprKind, Span};
use qset_core::{CmpOp, Element, Predicate, QSet, QSetBuilder, Universe};
use rand::seq::SliceRandom;
use rand::Rng;

pub const UNIVERSE_FILE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/universe.txt");

/// photon 4, electron 2, gluon 100, alice, bob.
pub fn test_universe() -> Universe {
    std::fs::read_to_string(UNIVERSE_FILE)
        .unwrap()
        .parse()
        .unwrap()
}

/// A universe small enough for exhaustive pair checks.
pub fn small_universe() -> Universe {
    Universe::builder()
        .species("photon", 3)
        .species("electron", 2)
        .label("alice")
        .label("bob")
        .build()
}

pub fn classical_universe() -> Universe {
    Universe::builder()
        .label("a")
        .label("b")
        .label("c")
        .label("d")
        .build()
}

/// A quasi-set written as an explicit list of member occurrences, in
/// arbitrary order, the way one would write it down by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Raw {
    Species(String),
    Label(String),
    Set(Vec<Raw>),
}

/// Independent normal form: serialize every member, sort the member strings,
/// and compare. Two raw lists have the same quantity of members of each sort
/// iff their normal forms are equal.
pub fn oracle_normal_form(members: &[Raw]) -> String {
    let mut parts: Vec<String> = members
        .iter()
        .map(|m| match m {
            Raw::Species(s) => format!("m:{s}"),
            Raw::Label(l) => format!("M:{l}"),
            Raw::Set(inner) => oracle_normal_form(inner),
        })
        .collect();
    parts.sort();
    format!("{{{}}}", parts.join(","))
}

/// Feeds the members to the builder one occurrence at a time.
pub fn build_raw(members: &[Raw], universe: &Universe) -> QSet {
    raw_builder(members).build(universe).unwrap()
}

fn raw_builder(members: &[Raw]) -> QSetBuilder {
    members.iter().fold(QSetBuilder::new(), |b, m| match m {
        Raw::Species(s) => b.species(s.clone(), 1),
        Raw::Label(l) => b.label(l.clone()),
        Raw::Set(inner) => b.nested(raw_builder(inner), 1),
    })
}

/// Random member list respecting the universe bounds. Nested quasi-sets go
/// `depth` levels deep.
pub fn random_raw(rng: &mut impl Rng, universe: &Universe, depth: u32) -> Vec<Raw> {
    let mut members = Vec::new();
    for (species, n) in universe.species() {
        let k = rng.gen_range(0..=n.min(4));
        members.extend((0..k).map(|_| Raw::Species(species.to_string())));
    }
    for label in universe.labels() {
        if rng.gen_bool(0.4) {
            members.push(Raw::Label(label.to_string()));
        }
    }
    if depth > 0 {
        for _ in 0..rng.gen_range(0..=2) {
            let inner = random_raw(rng, universe, depth - 1);
            for _ in 0..rng.gen_range(1..=2) {
                members.push(Raw::Set(shuffled(rng, &inner)));
            }
        }
    }
    members.shuffle(rng);
    members
}

/// Same members, different order, recursively.
pub fn shuffled(rng: &mut impl Rng, members: &[Raw]) -> Vec<Raw> {
    let mut out: Vec<Raw> = members
        .iter()
        .map(|m| match m {
            Raw::Set(inner) => Raw::Set(shuffled(rng, inner)),
            other => other.clone(),
        })
        .collect();
    out.shuffle(rng);
    out
}

/// Removes one member somewhere, possibly inside a nested quasi-set.
pub fn perturbed(rng: &mut impl Rng, members: &[Raw]) -> Vec<Raw> {
    let mut out = members.to_vec();
    if out.is_empty() {
        return out;
    }
    let i = rng.gen_range(0..out.len());
    match &out[i] {
        Raw::Set(inner) if !inner.is_empty() && rng.gen_bool(0.5) => {
            out[i] = Raw::Set(perturbed(rng, inner));
        }
        _ => {
            out.remove(i);
        }
    }
    out
}

/// A pair of raw quasi-sets: equal up to order, nearly equal, or unrelated.
pub fn random_raw_pair(rng: &mut impl Rng, universe: &Universe) -> (Vec<Raw>, Vec<Raw>) {
    let a = random_raw(rng, universe, 2);
    let b = match rng.gen_range(0..3) {
        0 => shuffled(rng, &a),
        1 => {
            let reordered = shuffled(rng, &a);
            perturbed(rng, &reordered)
        }
        _ => random_raw(rng, universe, 2),
    };
    (a, b)
}

pub fn random_qset(rng: &mut impl Rng, universe: &Universe) -> QSet {
    build_raw(&random_raw(rng, universe, 2), universe)
}

/// Every atom of the universe.
pub fn atoms(universe: &Universe) -> Vec<Element> {
    universe
        .species()
        .map(|(s, _)| Element::micro(s))
        .chain(universe.labels().map(Element::labeled))
        .collect()
}

pub fn random_predicate(rng: &mut impl Rng, depth: u32) -> Predicate {
    let leaf = depth == 0 || rng.gen_bool(0.5);
    if leaf {
        match rng.gen_range(0..8) {
            0 => Predicate::True,
            1 => Predicate::False,
            2 => Predicate::SpeciesIs(pick(rng, &["photon", "electron", "gluon"]).into()),
            3 => Predicate::IsMicro,
            4 => Predicate::IsMacro(None),
            5 => Predicate::IsMacro(Some(pick(rng, &["alice", "bob"]).into())),
            6 => Predicate::IsQSet,
            _ => {
                let ops = [
                    CmpOp::Lt,
                    CmpOp::Le,
                    CmpOp::Eq,
                    CmpOp::Ne,
                    CmpOp::Ge,
                    CmpOp::Gt,
                ];
                let op = ops[rng.gen_range(0..ops.len())];
                Predicate::QcCompare(op, rng.gen_range(0..5))
            }
        }
    } else {
        let choice = rng.gen_range(0..3);
        let mut sub = || Box::new(random_predicate(rng, depth - 1));
        match choice {
            0 => Predicate::Not(sub()),
            1 => {
                let a = sub();
                Predicate::And(a, sub())
            }
            _ => {
                let a = sub();
                Predicate::Or(a, sub())
            }
        }
    }
}

fn pick<'a>(rng: &mut impl Rng, options: &[&'a str]) -> &'a str {
    options.choose(rng).unwrap()
}

fn expr(kind: ExprKind) -> Expr {
    Expr::new(kind, Span::default())
}

/// Random syntax tree over the whole expression grammar.
pub fn random_expr(rng: &mut impl Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return expr(match rng.gen_range(0..4) {
            0 => ExprKind::Micro(pick(rng, &["photon", "electron", "gluon"]).into()),
            1 => ExprKind::Macro(pick(rng, &["alice", "bob"]).into()),
            2 => ExprKind::Var(pick(rng, &["x", "y", "q1", "_tmp"]).into()),
            _ => ExprKind::Empty,
        });
    }
    let d = depth - 1;
    let choice = rng.gen_range(0..19);
    let count = rng.gen_range(0..10);
    let pred = random_predicate(rng, 3);
    let mut sub = || Box::new(random_expr(rng, d));
    let kind = match choice {
        0 => ExprKind::WeakClass(sub()),
        1 => {
            let a = sub();
            ExprKind::WeakPair(a, sub())
        }
        2 => ExprKind::Sing(sub()),
        3 => ExprKind::NSing(sub(), count),
        4 => {
            let a = sub();
            ExprKind::Diff(a, sub())
        }
        5 => ExprKind::Sep(sub(), pred),
        6 => ExprKind::Qc(sub()),
        7 => ExprKind::Pqc(sub()),
        8 => ExprKind::Sub(sub(), count),
        9 => {
            let a = sub();
            ExprKind::Pair(a, sub())
        }
        10 => {
            let a = sub();
            ExprKind::Sim(a, sub())
        }
        11 => {
            let a = sub();
            ExprKind::QSim(a, sub())
        }
        12 => {
            let a = sub();
            ExprKind::Indist(a, sub())
        }
        13 => {
            let a = sub();
            ExprKind::ExtEq(a, sub())
        }
        14 | 15 => {
            let a = sub();
            ExprKind::In(a, sub())
        }
        16 => ExprKind::Enumerate(sub()),
        17 => ExprKind::Quotient(sub()),
        _ => {
            let a = sub();
            ExprKind::Diff(a, sub())
        }
    };
    expr(kind)
}
