//! Local relations above a vertex: exhaustive search over raising words,
//! the ABCD classification table, and verification of both against the
//! known list of relations for C₂ crystals.
//!
//! Words are stored in application order: `(c1, c2, ..., cn)` means apply
//! `e_{c1}` first. The composition `e_{cn} ... e_{c1} v` is the same word
//! read right to left; see [`OperatorWord::from_composition`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{CrystalGraph, RaisingTable};
use crate::operators::apply_e;
use crate::signature::Color;
use crate::tableau::{AbcdStats, Tableau};

/// Longest relation that occurs in a C₂ crystal.
pub const MAX_RELATION_DEGREE: usize = 7;

/// Anything with partial raising operators `e1`, `e2`.
pub trait Raising {
    type Vertex: Clone + Eq + Hash + Ord + Send + Sync;

    fn raise(&self, v: &Self::Vertex, color: Color) -> Option<Self::Vertex>;
}

/// The tableau model, raising by the signature rule.
#[derive(Clone, Copy, Debug, Default)]
pub struct TableauModel;

impl Raising for TableauModel {
    type Vertex = Tableau;

    fn raise(&self, v: &Tableau, color: Color) -> Option<Tableau> {
        apply_e(v, color)
    }
}

impl Raising for RaisingTable {
    type Vertex = usize;

    fn raise(&self, v: &usize, color: Color) -> Option<usize> {
        RaisingTable::raise(self, *v, color)
    }
}

/// Non-empty sequence of colors in application order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorWord(Vec<Color>);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("operator words have length at least 1")]
pub struct EmptyWord;

impl OperatorWord {
    pub fn new(colors: Vec<Color>) -> Result<OperatorWord, EmptyWord> {
        if colors.is_empty() {
            Err(EmptyWord)
        } else {
            Ok(OperatorWord(colors))
        }
    }

    /// From digits 1 and 2 in application order. Panics on other digits or
    /// an empty slice; intended for literals.
    pub fn from_digits(digits: &[u8]) -> OperatorWord {
        let colors = digits
            .iter()
            .map(|&d| Color::try_from(d as u64).expect("digit 1 or 2"))
            .collect();
        OperatorWord::new(colors).expect("non-empty literal")
    }

    /// From composition order, where the rightmost operator acts first.
    pub fn from_composition(colors: &[Color]) -> Result<OperatorWord, EmptyWord> {
        OperatorWord::new(colors.iter().rev().copied().collect())
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Color {
        self.0[0]
    }

    /// `(#1, #2)`.
    pub fn content(&self) -> (usize, usize) {
        let ones = self.0.iter().filter(|&&c| c == Color::One).count();
        (ones, self.0.len() - ones)
    }

    /// The same operator sequence written as a composition, e.g. `e1 e2 e2 e1`.
    pub fn composition(&self) -> String {
        self.0
            .iter()
            .rev()
            .map(|c| format!("e{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl Serialize for OperatorWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `e_w v` for a word in application order; zero absorbs.
pub fn apply_word_with<R: Raising>(sys: &R, v: &R::Vertex, w: &OperatorWord) -> Option<R::Vertex> {
    w.colors().iter().try_fold(v.clone(), |acc, &c| sys.raise(&acc, c))
}

pub fn apply_word(t: &Tableau, w: &OperatorWord) -> Option<Tableau> {
    apply_word_with(&TableauModel, t, w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "usize")]
pub enum RelationDegree {
    Two,
    Four,
    Five,
    Seven,
}

impl RelationDegree {
    pub const ALL: [RelationDegree; 4] = [
        RelationDegree::Two,
        RelationDegree::Four,
        RelationDegree::Five,
        RelationDegree::Seven,
    ];

    pub fn value(self) -> usize {
        match self {
            RelationDegree::Two => 2,
            RelationDegree::Four => 4,
            RelationDegree::Five => 5,
            RelationDegree::Seven => 7,
        }
    }

    pub fn from_value(n: usize) -> Option<RelationDegree> {
        RelationDegree::ALL.into_iter().find(|d| d.value() == n)
    }
}

impl From<RelationDegree> for usize {
    fn from(d: RelationDegree) -> usize {
        d.value()
    }
}

impl fmt::Display for RelationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Words of one coincidence group, split by the first operator applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WitnessSets {
    pub first_1: BTreeSet<OperatorWord>,
    pub first_2: BTreeSet<OperatorWord>,
}

impl WitnessSets {
    fn from_lists(first_1: &[&[u8]], first_2: &[&[u8]]) -> WitnessSets {
        WitnessSets {
            first_1: first_1.iter().map(|d| OperatorWord::from_digits(d)).collect(),
            first_2: first_2.iter().map(|d| OperatorWord::from_digits(d)).collect(),
        }
    }

    fn insert(&mut self, w: OperatorWord) {
        match w.first() {
            Color::One => self.first_1.insert(w),
            Color::Two => self.first_2.insert(w),
        };
    }

    pub fn is_mixed(&self) -> bool {
        !self.first_1.is_empty() && !self.first_2.is_empty()
    }

    pub fn len(&self) -> usize {
        self.first_1.len() + self.first_2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn words(&self) -> impl Iterator<Item = &OperatorWord> {
        self.first_1.iter().chain(&self.first_2)
    }

    /// All words share one color content.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.words().map(OperatorWord::content);
        match it.next() {
            Some(first) => it.all(|c| c == first),
            None => true,
        }
    }
}

/// Witness words of each relation in application order.
///
/// In the general form of the relations (`e_i e_j^3 e_i = ...` for degree 5,
/// `e_i e_j^3 e_i^2 e_j = ...` for degree 7) the tableau model has `i = 2`
/// and `j = 1`; color 2 is the long root. So degree 5 reads
/// `e2 e1^3 e2 v = e1 e2 e1 e2 e1 v = e1^2 e2^2 e1 v` in composition form.
pub fn expected_witnesses(d: RelationDegree) -> WitnessSets {
    match d {
        RelationDegree::Two => WitnessSets::from_lists(&[&[1, 2]], &[&[2, 1]]),
        RelationDegree::Four => WitnessSets::from_lists(&[&[1, 2, 2, 1]], &[&[2, 1, 1, 2]]),
        RelationDegree::Five => WitnessSets::from_lists(&[&[1, 2, 1, 2, 1], &[1, 2, 2, 1, 1]], &[&[2, 1, 1, 1, 2]]),
        RelationDegree::Seven => WitnessSets::from_lists(
            &[&[1, 2, 2, 1, 1, 1, 2], &[1, 2, 1, 2, 1, 1, 2]],
            &[&[2, 1, 1, 1, 2, 2, 1], &[2, 1, 1, 2, 1, 2, 1]],
        ),
    }
}

/// Position of `A` relative to `B`, the column index of the ABCD table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbRelation {
    Less,
    Equal,
    OneMore,
    MoreThanOneMore,
}

/// Position of `C` relative to `D`, the row index of the ABCD table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CdRelation {
    Less,
    Equal,
    Greater,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TableCell {
    pub cd: CdRelation,
    pub ab: AbRelation,
}

impl TableCell {
    pub fn of(s: &AbcdStats) -> TableCell {
        let ab = if s.a < s.b {
            AbRelation::Less
        } else if s.a == s.b {
            AbRelation::Equal
        } else if s.a == s.b + 1 {
            AbRelation::OneMore
        } else {
            AbRelation::MoreThanOneMore
        };
        let cd = match s.c.cmp(&s.d) {
            std::cmp::Ordering::Less => CdRelation::Less,
            std::cmp::Ordering::Equal => CdRelation::Equal,
            std::cmp::Ordering::Greater => CdRelation::Greater,
        };
        TableCell { cd, ab }
    }

    pub fn degree(self) -> RelationDegree {
        use AbRelation as Ab;
        use CdRelation as Cd;
        use RelationDegree::*;
        match (self.cd, self.ab) {
            (Cd::Less, _) => Two,
            (Cd::Equal, Ab::Less) => Four,
            (Cd::Equal, Ab::Equal) => Seven,
            (Cd::Equal, Ab::OneMore) => Four,
            (Cd::Equal, Ab::MoreThanOneMore) => Two,
            (Cd::Greater, Ab::Less) => Two,
            (Cd::Greater, Ab::Equal) => Five,
            (Cd::Greater, Ab::OneMore) => Four,
            (Cd::Greater, Ab::MoreThanOneMore) => Two,
        }
    }
}

impl fmt::Display for TableCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cd = match self.cd {
            CdRelation::Less => "C<D",
            CdRelation::Equal => "C=D",
            CdRelation::Greater => "C>D",
        };
        let ab = match self.ab {
            AbRelation::Less => "A<B",
            AbRelation::Equal => "A=B",
            AbRelation::OneMore => "A=B+1",
            AbRelation::MoreThanOneMore => "A>B+1",
        };
        write!(f, "{cd}, {ab}")
    }
}

/// Degree predicted by the ABCD table for a vertex with `e1 v != 0` and `e2 v != 0`.
pub fn classify_by_stats(stats: &AbcdStats) -> RelationDegree {
    TableCell::of(stats).degree()
}

/// Every word of length `1..=max_len` that does not kill the base vertex,
/// grouped by length and target.
#[derive(Clone, Debug)]
pub struct WordSearch<V> {
    pub max_len: usize,
    /// `levels[n - 1]` holds the groups of words of length `n`, keyed by target.
    pub levels: Vec<BTreeMap<V, WitnessSets>>,
}

impl<V: Clone + Ord> WordSearch<V> {
    pub fn run<R: Raising<Vertex = V>>(sys: &R, base: &V, max_len: usize) -> WordSearch<V> {
        let mut levels: Vec<BTreeMap<V, WitnessSets>> = vec![BTreeMap::new(); max_len];
        let mut stack: Vec<(V, Vec<Color>)> = vec![(base.clone(), Vec::new())];
        while let Some((v, word)) = stack.pop() {
            if word.len() == max_len {
                continue;
            }
            for c in Color::BOTH {
                if let Some(u) = sys.raise(&v, c) {
                    let mut w = word.clone();
                    w.push(c);
                    levels[w.len() - 1]
                        .entry(u.clone())
                        .or_default()
                        .insert(OperatorWord(w.clone()));
                    stack.push((u, w));
                }
            }
        }
        WordSearch { max_len, levels }
    }

    pub fn groups(&self, len: usize) -> &BTreeMap<V, WitnessSets> {
        &self.levels[len - 1]
    }

    /// Groups at `len` containing words that start with different colors.
    pub fn mixed_groups(&self, len: usize) -> impl Iterator<Item = (&V, &WitnessSets)> {
        self.groups(len).iter().filter(|(_, g)| g.is_mixed())
    }

    /// Shortest length with a mixed group.
    pub fn minimal_mixed_length(&self) -> Option<usize> {
        (1..=self.max_len).find(|&n| self.mixed_groups(n).next().is_some())
    }
}

/// Minimal coincidence above a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport<V> {
    /// Length of the shortest pair of words with different first operators
    /// that reach the same vertex.
    pub length: usize,
    pub target: V,
    pub witnesses: WitnessSets,
    /// Number of distinct targets with a mixed coincidence at `length`.
    pub mixed_targets: usize,
    /// Groups of two or more words with the same first operator, at lengths
    /// up to `length`. Recorded for inspection only.
    pub same_first_coincidences: usize,
    /// Groups (at any searched length) whose words differ in color content.
    pub inhomogeneous_groups: usize,
}

impl<V> RelationReport<V> {
    pub fn degree(&self) -> Option<RelationDegree> {
        RelationDegree::from_value(self.length)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("relation search needs e1 v != 0 and e2 v != 0")]
pub struct NotApplicable;

/// Whether both raising operators are defined at `v`.
pub fn is_applicable<R: Raising>(sys: &R, v: &R::Vertex) -> bool {
    Color::BOTH.iter().all(|&c| sys.raise(v, c).is_some())
}

pub fn detect_relation_with<R: Raising>(
    sys: &R,
    v: &R::Vertex,
    max_len: usize,
) -> Result<Option<RelationReport<R::Vertex>>, NotApplicable> {
    if !is_applicable(sys, v) {
        return Err(NotApplicable);
    }
    let search = WordSearch::run(sys, v, max_len);
    Ok(report_from_search(&search))
}

fn report_from_search<V: Clone + Ord>(search: &WordSearch<V>) -> Option<RelationReport<V>> {
    let length = search.minimal_mixed_length()?;
    let mut mixed = search.mixed_groups(length);
    let (target, witnesses) = mixed.next()?;
    let mixed_targets = 1 + mixed.count();
    let same_first_coincidences = (1..=length)
        .flat_map(|n| search.groups(n).values())
        .filter(|g| !g.is_mixed() && g.len() > 1)
        .count();
    let inhomogeneous_groups = (1..=search.max_len)
        .flat_map(|n| search.groups(n).values())
        .filter(|g| !g.is_homogeneous())
        .count();
    Some(RelationReport {
        length,
        target: target.clone(),
        witnesses: witnesses.clone(),
        mixed_targets,
        same_first_coincidences,
        inhomogeneous_groups,
    })
}

/// Minimal relation above a tableau, searching words up to `max_len`.
pub fn detect_relation(t: &Tableau, max_len: usize) -> Result<Option<RelationReport<Tableau>>, NotApplicable> {
    detect_relation_with(&TableauModel, t, max_len)
}

/// One way a vertex can fail verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexFailure {
    /// No mixed coincidence up to the search bound.
    NoRelation { max_len: usize },
    /// Minimal mixed coincidence has a length outside {2, 4, 5, 7}.
    UnexpectedLength { length: usize },
    /// Detected degree differs from the ABCD table.
    ClassificationMismatch { expected: RelationDegree, detected: usize },
    /// A mixed coincidence shorter than the expected degree.
    ShorterCoincidence { length: usize },
    /// Witness words at the relation degree differ from the known list.
    WitnessMismatch { degree: RelationDegree, found: WitnessSets },
    /// More than one target has a mixed coincidence at the relation degree.
    SeveralTargets { count: usize },
    /// Two words of equal length reach one vertex with different color content.
    Inhomogeneous { groups: usize },
}

impl fmt::Display for VertexFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexFailure::NoRelation { max_len } => write!(f, "no relation up to length {max_len}"),
            VertexFailure::UnexpectedLength { length } => {
                write!(f, "minimal relation has length {length}, not 2, 4, 5 or 7")
            }
            VertexFailure::ClassificationMismatch { expected, detected } => {
                write!(f, "ABCD table predicts degree {expected}, search found {detected}")
            }
            VertexFailure::ShorterCoincidence { length } => {
                write!(f, "mixed coincidence of length {length} below the relation degree")
            }
            VertexFailure::WitnessMismatch { degree, found } => {
                let list = |s: &BTreeSet<OperatorWord>| s.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",");
                write!(
                    f,
                    "degree {degree} witnesses {{{}}} / {{{}}} differ from the expected words",
                    list(&found.first_1),
                    list(&found.first_2)
                )
            }
            VertexFailure::SeveralTargets { count } => {
                write!(f, "{count} distinct targets have a minimal mixed coincidence")
            }
            VertexFailure::Inhomogeneous { groups } => {
                write!(f, "{groups} coincidence groups mix different color contents")
            }
        }
    }
}

/// Result of checking one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexVerification<V> {
    pub vertex: V,
    /// ABCD table entry, when the vertex is a tableau.
    pub cell: Option<TableCell>,
    pub report: Option<RelationReport<V>>,
    pub failures: Vec<VertexFailure>,
}

impl<V> VertexVerification<V> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn degree(&self) -> Option<RelationDegree> {
        self.report.as_ref().and_then(RelationReport::degree)
    }
}

fn check_search<V: Clone + Ord>(
    search: &WordSearch<V>,
    expected: Option<RelationDegree>,
    failures: &mut Vec<VertexFailure>,
) -> Option<RelationReport<V>> {
    let report = report_from_search(search);
    let Some(r) = &report else {
        failures.push(VertexFailure::NoRelation {
            max_len: search.max_len,
        });
        return None;
    };
    let degree = match (expected, r.degree()) {
        (Some(want), _) => {
            if r.length != want.value() {
                failures.push(VertexFailure::ClassificationMismatch {
                    expected: want,
                    detected: r.length,
                });
            }
            Some(want)
        }
        (None, Some(d)) => Some(d),
        (None, None) => {
            failures.push(VertexFailure::UnexpectedLength { length: r.length });
            None
        }
    };
    if let Some(d) = degree {
        if let Some(shorter) = (1..d.value().min(search.max_len + 1)).find(|&n| search.mixed_groups(n).next().is_some())
        {
            failures.push(VertexFailure::ShorterCoincidence { length: shorter });
        }
        if d.value() <= search.max_len {
            let mixed: Vec<&WitnessSets> = search.mixed_groups(d.value()).map(|(_, g)| g).collect();
            if mixed.len() > 1 {
                failures.push(VertexFailure::SeveralTargets { count: mixed.len() });
            }
            let want = expected_witnesses(d);
            match mixed.iter().find(|g| ***g != want) {
                Some(found) => failures.push(VertexFailure::WitnessMismatch {
                    degree: d,
                    found: (*found).clone(),
                }),
                None if mixed.is_empty() => failures.push(VertexFailure::WitnessMismatch {
                    degree: d,
                    found: WitnessSets::default(),
                }),
                None => {}
            }
        }
    }
    if r.inhomogeneous_groups > 0 {
        failures.push(VertexFailure::Inhomogeneous {
            groups: r.inhomogeneous_groups,
        });
    }
    report
}

/// Verifies a tableau against the ABCD table and the known witness words.
///
/// Passes iff the minimal mixed coincidence has the degree given by the
/// table, nothing mixed coincides at a shorter length, and the witness
/// words at that length are exactly the expected ones.
pub fn verify_vertex(t: &Tableau) -> Result<VertexVerification<Tableau>, NotApplicable> {
    verify_vertex_bounded(t, MAX_RELATION_DEGREE)
}

pub fn verify_vertex_bounded(t: &Tableau, max_len: usize) -> Result<VertexVerification<Tableau>, NotApplicable> {
    if !is_applicable(&TableauModel, t) {
        return Err(NotApplicable);
    }
    let cell = TableCell::of(&t.abcd());
    let search = WordSearch::run(&TableauModel, t, max_len);
    let mut failures = Vec::new();
    let report = check_search(&search, Some(cell.degree()), &mut failures);
    Ok(VertexVerification {
        vertex: t.clone(),
        cell: Some(cell),
        report,
        failures,
    })
}

/// Verifies a bare graph vertex: the minimal mixed coincidence must be one
/// of the known relations with exactly the known witness words.
pub fn verify_graph_vertex<R: Raising>(
    sys: &R,
    v: &R::Vertex,
    max_len: usize,
) -> Result<VertexVerification<R::Vertex>, NotApplicable> {
    if !is_applicable(sys, v) {
        return Err(NotApplicable);
    }
    let search = WordSearch::run(sys, v, max_len);
    let mut failures = Vec::new();
    let report = check_search(&search, None, &mut failures);
    Ok(VertexVerification {
        vertex: v.clone(),
        cell: None,
        report,
        failures,
    })
}

/// Per-degree tallies and failures for one orientation of a crystal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub applicable: usize,
    pub degree_counts: BTreeMap<usize, usize>,
    /// ABCD table cells reached, e-side only.
    pub cells: BTreeMap<String, usize>,
    /// `(vertex id, failure)`, sorted by id.
    pub failures: Vec<(usize, VertexFailure)>,
}

impl SideReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb<V>(&mut self, id: usize, v: VertexVerification<V>) {
        self.applicable += 1;
        if let Some(r) = &v.report {
            *self.degree_counts.entry(r.length).or_default() += 1;
        }
        if let Some(cell) = v.cell {
            *self.cells.entry(cell.to_string()).or_default() += 1;
        }
        self.failures.extend(v.failures.into_iter().map(|f| (id, f)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalReport {
    pub shape: [usize; 2],
    pub vertices: usize,
    /// Raising-operator statement, checked on the tableaux.
    pub e_side: SideReport,
    /// Lowering-operator statement, checked on the dual graph.
    pub f_side: SideReport,
}

impl CrystalReport {
    pub fn passed(&self) -> bool {
        self.e_side.passed() && self.f_side.passed()
    }
}

/// Runs [`verify_vertex`] on every applicable tableau of `g`, and the graph
/// check on every applicable vertex of the dual graph.
pub fn verify_crystal(g: &CrystalGraph) -> CrystalReport {
    let e_results: Vec<(usize, VertexVerification<Tableau>)> = g
        .vertices()
        .par_iter()
        .enumerate()
        .filter_map(|(id, t)| verify_vertex(t).ok().map(|v| (id, v)))
        .collect();
    let mut e_side = SideReport::default();
    for (id, v) in e_results {
        e_side.absorb(id, v);
    }

    let dual = g.dual();
    let f_side = verify_graph(&dual.raising_table());
    CrystalReport {
        shape: g.shape().into(),
        vertices: g.len(),
        e_side,
        f_side,
    }
}

/// Graph check on every vertex of a raising table that has both colors
/// incoming.
pub fn verify_graph(table: &RaisingTable) -> SideReport {
    let results: Vec<(usize, VertexVerification<usize>)> = (0..table.len())
        .into_par_iter()
        .filter_map(|v| verify_graph_vertex(table, &v, MAX_RELATION_DEGREE).ok().map(|r| (v, r)))
        .collect();
    let mut side = SideReport::default();
    for (id, v) in results {
        side.absorb(id, v);
    }
    side
}

/// Vertex flagged by [`audit_document`], by its id in the document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditFlag {
    pub id: usize,
    pub failures: Vec<VertexFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub vertices: usize,
    pub edges: usize,
    pub well_formedness: Vec<crate::graph::WellFormednessViolation>,
    /// Vertices with incoming edges of both colors.
    pub applicable: usize,
    pub degree_counts: BTreeMap<usize, usize>,
    pub flagged: Vec<AuditFlag>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.well_formedness.is_empty() && self.flagged.is_empty()
    }
}

/// Checks a bare colored digraph against the necessary local conditions:
/// crystal well-formedness, and for every vertex with incoming edges of both
/// colors a minimal relation matching one of the known relations.
///
/// Tableau payloads are ignored. Errors only if the document references
/// vertices it does not define.
pub fn audit_document(doc: &crate::graph::GraphDocument) -> Result<AuditReport, crate::GraphError> {
    let (edges, source) = doc.dense()?;
    let n = doc.vertices.len();
    let well_formedness = crate::graph::well_formedness(n, &edges, Some(source));
    let mut report = AuditReport {
        vertices: n,
        edges: edges.len(),
        well_formedness,
        applicable: 0,
        degree_counts: BTreeMap::new(),
        flagged: Vec::new(),
    };
    // several same-colored in-edges leave the raising operators undefined
    let Ok(table) = RaisingTable::from_edges(n, &edges) else {
        return Ok(report);
    };
    let side = verify_graph(&table);
    report.applicable = side.applicable;
    report.degree_counts = side.degree_counts;
    let mut by_vertex: BTreeMap<usize, Vec<VertexFailure>> = BTreeMap::new();
    for (v, f) in side.failures {
        by_vertex.entry(v).or_default().push(f);
    }
    report.flagged = by_vertex
        .into_iter()
        .map(|(v, failures)| AuditFlag {
            id: doc.vertices[v].id,
            failures,
        })
        .collect();
    Ok(report)
}
