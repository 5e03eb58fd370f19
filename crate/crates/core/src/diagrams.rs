//! BCR diagrams: validation, necklace enumeration and the counts attached to
//! each diagram.
//!
//! Every vertex has exactly one outgoing edge, so a connected diagram is a
//! single directed cycle with trees hanging off it. The local rules force the
//! trees to be single legs from univalent vertices into cycle vertices of
//! type 1 or 2, which makes a diagram the same thing as a cyclic word over
//! the four cycle types.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::DiagramError;

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Internal,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Internal,
    External,
}

/// The five local behaviors a vertex may have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum VertexType {
    /// External; external edges in from the cycle and from a leg, one external out.
    ExternalWithLeg = 1,
    /// Internal trivalent; internal in, leg in, internal out.
    Trivalent = 2,
    /// Internal univalent; one external out.
    Univalent = 3,
    /// Internal bivalent; external in, internal out.
    BivalentExtIn = 4,
    /// Internal bivalent; internal in, external out.
    BivalentIntIn = 5,
}

impl VertexType {
    pub const CYCLE_TYPES: [VertexType; 4] = [
        VertexType::ExternalWithLeg,
        VertexType::Trivalent,
        VertexType::BivalentExtIn,
        VertexType::BivalentIntIn,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn vertex_kind(self) -> VertexKind {
        match self {
            VertexType::ExternalWithLeg => VertexKind::External,
            _ => VertexKind::Internal,
        }
    }

    /// Kind of the outgoing edge.
    pub fn out_kind(self) -> EdgeKind {
        match self {
            VertexType::Trivalent | VertexType::BivalentExtIn => EdgeKind::Internal,
            _ => EdgeKind::External,
        }
    }

    /// Kind of the incoming cycle edge; `None` for univalent vertices.
    pub fn cycle_in_kind(self) -> Option<EdgeKind> {
        match self {
            VertexType::ExternalWithLeg | VertexType::BivalentExtIn => Some(EdgeKind::External),
            VertexType::Trivalent | VertexType::BivalentIntIn => Some(EdgeKind::Internal),
            VertexType::Univalent => None,
        }
    }

    pub fn has_leg(self) -> bool {
        matches!(self, VertexType::ExternalWithLeg | VertexType::Trivalent)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BcrDiagram {
    pub vertices: Vec<VertexKind>,
    pub edges: Vec<Edge>,
}

impl BcrDiagram {
    pub fn new(vertices: Vec<VertexKind>, edges: Vec<Edge>) -> Self {
        BcrDiagram { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Half the vertex count (rounded down for invalid diagrams).
    pub fn degree(&self) -> usize {
        self.vertices.len() / 2
    }

    /// The diagram of a cyclic word of cycle types. Cycle vertices come
    /// first in word order, followed by one univalent vertex per leg.
    ///
    /// Panics if the word is shorter than 2 or contains a univalent type;
    /// incompatible neighbors yield a diagram that fails validation.
    pub fn from_word(word: &[VertexType]) -> Self {
        assert!(word.len() >= 2, "a cycle needs at least two vertices");
        assert!(!word.contains(&VertexType::Univalent));
        let len = word.len();
        let mut vertices: Vec<VertexKind> = word.iter().map(|t| t.vertex_kind()).collect();
        let mut edges: Vec<Edge> = word
            .iter()
            .enumerate()
            .map(|(i, t)| Edge {
                from: i,
                to: (i + 1) % len,
                kind: t.out_kind(),
            })
            .collect();
        for (i, t) in word.iter().enumerate() {
            if t.has_leg() {
                vertices.push(VertexKind::Internal);
                edges.push(Edge {
                    from: vertices.len() - 1,
                    to: i,
                    kind: EdgeKind::External,
                });
            }
        }
        BcrDiagram { vertices, edges }
    }
}

/// `Gamma_k`: a cycle of `k` external vertices, each with a leg.
pub fn gamma_k(k: usize) -> BcrDiagram {
    BcrDiagram::from_word(&vec![VertexType::ExternalWithLeg; k])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramProblem {
    Empty,
    EdgeOutOfRange { edge: usize },
    Loop { edge: usize },
    DuplicateEdge { from: usize, to: usize },
    NoRule { vertex: usize },
    Disconnected,
    OddVertexCount(usize),
}

impl fmt::Display for DiagramProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramProblem::Empty => write!(f, "diagram has no vertices"),
            DiagramProblem::EdgeOutOfRange { edge } => {
                write!(f, "edge {edge} references a missing vertex")
            }
            DiagramProblem::Loop { edge } => write!(f, "edge {edge} is a loop"),
            DiagramProblem::DuplicateEdge { from, to } => {
                write!(f, "edge {from} -> {to} appears more than once")
            }
            DiagramProblem::NoRule { vertex } => {
                write!(f, "vertex {vertex} satisfies none of the five vertex rules")
            }
            DiagramProblem::Disconnected => write!(f, "diagram is not connected"),
            DiagramProblem::OddVertexCount(v) => write!(f, "odd vertex count {v}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramReport {
    /// Rule satisfied by each vertex, if any.
    pub vertex_types: Vec<Option<VertexType>>,
    pub problems: Vec<DiagramProblem>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn count(&self, t: VertexType) -> usize {
        self.vertex_types.iter().filter(|x| **x == Some(t)).count()
    }
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid")?;
        }
        for p in &self.problems {
            writeln!(f, "  {p}")?;
        }
        Ok(())
    }
}

struct Incidence {
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(g: &BcrDiagram) -> Self {
        let mut incoming = vec![Vec::new(); g.vertices.len()];
        let mut outgoing = vec![Vec::new(); g.vertices.len()];
        for (i, e) in g.edges.iter().enumerate() {
            outgoing[e.from].push(i);
            incoming[e.to].push(i);
        }
        Incidence { incoming, outgoing }
    }

    fn is_univalent(&self, v: usize) -> bool {
        self.incoming[v].is_empty() && self.outgoing[v].len() == 1
    }
}

fn classify(g: &BcrDiagram, inc: &Incidence, v: usize) -> Option<VertexType> {
    let kinds = |ids: &[usize]| -> Vec<EdgeKind> {
        let mut k: Vec<EdgeKind> = ids.iter().map(|&i| g.edges[i].kind).collect();
        k.sort();
        k
    };
    let ins = kinds(&inc.incoming[v]);
    let outs = kinds(&inc.outgoing[v]);
    let from_univalent = inc.incoming[v]
        .iter()
        .filter(|&&i| g.edges[i].kind == EdgeKind::External && inc.is_univalent(g.edges[i].from))
        .count();
    use EdgeKind::{External as X, Internal as I};
    match (g.vertices[v], ins.as_slice(), outs.as_slice()) {
        (VertexKind::External, [X, X], [X]) if from_univalent == 1 => Some(VertexType::ExternalWithLeg),
        (VertexKind::Internal, [I, X], [I]) if from_univalent == 1 => Some(VertexType::Trivalent),
        (VertexKind::Internal, [], [X]) => Some(VertexType::Univalent),
        (VertexKind::Internal, [X], [I]) => Some(VertexType::BivalentExtIn),
        (VertexKind::Internal, [I], [X]) => Some(VertexType::BivalentIntIn),
        _ => None,
    }
}

fn is_connected(g: &BcrDiagram) -> bool {
    let n = g.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for e in &g.edges {
        adj[e.from].push(e.to);
        adj[e.to].push(e.from);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Checks every structural rule; never fails.
pub fn validate_diagram(g: &BcrDiagram) -> DiagramReport {
    let mut report = DiagramReport::default();
    let n = g.vertices.len();
    if n == 0 {
        report.problems.push(DiagramProblem::Empty);
        return report;
    }
    let mut seen = HashSet::new();
    let mut wired = true;
    for (i, e) in g.edges.iter().enumerate() {
        if e.from >= n || e.to >= n {
            report.problems.push(DiagramProblem::EdgeOutOfRange { edge: i });
            wired = false;
            continue;
        }
        if e.from == e.to {
            report.problems.push(DiagramProblem::Loop { edge: i });
        }
        if !seen.insert((e.from, e.to)) {
            report.problems.push(DiagramProblem::DuplicateEdge {
                from: e.from,
                to: e.to,
            });
        }
    }
    if !wired {
        report.vertex_types = vec![None; n];
        return report;
    }
    let inc = Incidence::new(g);
    report.vertex_types = (0..n).map(|v| classify(g, &inc, v)).collect();
    for (v, t) in report.vertex_types.iter().enumerate() {
        if t.is_none() {
            report.problems.push(DiagramProblem::NoRule { vertex: v });
        }
    }
    if !is_connected(g) {
        report.problems.push(DiagramProblem::Disconnected);
    }
    if n % 2 == 1 {
        report.problems.push(DiagramProblem::OddVertexCount(n));
    }
    report
}

fn checked_types(g: &BcrDiagram) -> Result<Vec<VertexType>, DiagramError> {
    let report = validate_diagram(g);
    if !report.is_valid() {
        return Err(DiagramError::Invalid(report));
    }
    Ok(report.vertex_types.into_iter().flatten().collect())
}

fn check_degree(k: usize) -> Result<(), DiagramError> {
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&k) {
        return Err(DiagramError::OutOfRange {
            k,
            min: MIN_DEGREE,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

/// Lexicographically least rotation.
pub fn min_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    (0..word.len())
        .map(|r| word[r..].iter().chain(&word[..r]).cloned().collect::<Vec<T>>())
        .min()
        .unwrap_or_default()
}

/// The cycle of a valid diagram as its canonical cyclic word.
pub fn canonical_word(g: &BcrDiagram) -> Result<Vec<VertexType>, DiagramError> {
    let types = checked_types(g)?;
    let next: Vec<usize> = {
        let mut next = vec![0; g.vertices.len()];
        for e in &g.edges {
            next[e.from] = e.to;
        }
        next
    };
    let start = types
        .iter()
        .position(|&t| t != VertexType::Univalent)
        .expect("a valid diagram has a cycle vertex");
    let mut word = vec![types[start]];
    let mut v = next[start];
    while v != start {
        word.push(types[v]);
        v = next[v];
    }
    Ok(min_rotation(&word))
}

fn word_degree(word: &[VertexType]) -> usize {
    word.iter()
        .filter(|t| t.has_leg() || **t == VertexType::BivalentExtIn)
        .count()
}

/// Canonical cyclic words of all degree-`k` diagrams.
pub fn enumerate_words(k: usize) -> Result<Vec<Vec<VertexType>>, DiagramError> {
    check_degree(k)?;
    let mut out = BTreeSet::new();
    let mut word = Vec::with_capacity(2 * k);
    extend_word(k, &mut word, &mut out);
    Ok(out.into_iter().collect())
}

fn extend_word(k: usize, word: &mut Vec<VertexType>, out: &mut BTreeSet<Vec<VertexType>>) {
    let degree = word_degree(word);
    // each 5 needs a matching 4, so open 4s still cost degree later
    let fours = word.iter().filter(|t| **t == VertexType::BivalentExtIn).count();
    let fives = word.iter().filter(|t| **t == VertexType::BivalentIntIn).count();
    if degree + fives.saturating_sub(fours) > k {
        return;
    }
    if degree == k && word.len() >= 2 && fours == fives {
        let closes = word.last().unwrap().out_kind() == word[0].cycle_in_kind().unwrap();
        if closes && min_rotation(word) == *word {
            out.insert(word.clone());
        }
    }
    if word.len() == 2 * k {
        return;
    }
    for t in VertexType::CYCLE_TYPES {
        if let Some(last) = word.last() {
            if Some(last.out_kind()) != t.cycle_in_kind() {
                continue;
            }
        }
        word.push(t);
        extend_word(k, word, out);
        word.pop();
    }
}

/// One representative per isomorphism class of degree-`k` diagrams.
pub fn enumerate_diagrams(k: usize) -> Result<Vec<BcrDiagram>, DiagramError> {
    Ok(enumerate_words(k)?.iter().map(|w| BcrDiagram::from_word(w)).collect())
}

/// A pair `(e, e')` of edge indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaPair {
    pub edge: usize,
    pub partner: usize,
}

/// External edges into internal vertices and external cycle edges into
/// external vertices, each with its partner edge.
pub fn e_theta_edges(g: &BcrDiagram) -> Result<Vec<ThetaPair>, DiagramError> {
    let types = checked_types(g)?;
    let inc = Incidence::new(g);
    let mut pairs = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        if e.kind != EdgeKind::External {
            continue;
        }
        match g.vertices[e.to] {
            VertexKind::Internal => {
                let partner = inc.outgoing[e.to][0];
                debug_assert_eq!(g.edges[partner].kind, EdgeKind::Internal);
                pairs.push(ThetaPair { edge: i, partner });
            }
            VertexKind::External if types[e.from] != VertexType::Univalent => {
                let partner = inc.incoming[e.to]
                    .iter()
                    .copied()
                    .find(|&j| types[g.edges[j].from] == VertexType::Univalent)
                    .expect("type-1 vertices carry a leg");
                pairs.push(ThetaPair { edge: i, partner });
            }
            VertexKind::External => {}
        }
    }
    Ok(pairs)
}

/// Number of vertex permutations preserving vertex kinds, edge kinds and
/// orientations, found by backtracking.
pub fn automorphism_count(g: &BcrDiagram) -> u64 {
    let n = g.vertices.len();
    let mut edge_kind = std::collections::HashMap::new();
    for e in &g.edges {
        edge_kind.insert((e.from, e.to), e.kind);
    }
    let signature = |v: usize| {
        let ins = g.edges.iter().filter(|e| e.to == v).count();
        let outs = g.edges.iter().filter(|e| e.from == v).count();
        (g.vertices[v], ins, outs)
    };
    let sigs: Vec<_> = (0..n).map(signature).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0;
    search_automorphisms(0, &sigs, &edge_kind, &mut image, &mut used, &mut count);
    count
}

fn search_automorphisms(
    v: usize,
    sigs: &[(VertexKind, usize, usize)],
    edge_kind: &std::collections::HashMap<(usize, usize), EdgeKind>,
    image: &mut [usize],
    used: &mut [bool],
    count: &mut u64,
) {
    let n = sigs.len();
    if v == n {
        *count += 1;
        return;
    }
    for w in 0..n {
        if used[w] || sigs[w] != sigs[v] {
            continue;
        }
        image[v] = w;
        let consistent = (0..=v).all(|u| {
            edge_kind.get(&(u, v)) == edge_kind.get(&(image[u], w))
                && edge_kind.get(&(v, u)) == edge_kind.get(&(w, image[u]))
        });
        if consistent {
            used[w] = true;
            search_automorphisms(v + 1, sigs, edge_kind, image, used, count);
            used[w] = false;
        }
    }
    image[v] = usize::MAX;
}

/// `(2k)! / |Aut(g)|`, the number of numberings up to isomorphism.
pub fn numbering_count(g: &BcrDiagram) -> Result<u64, DiagramError> {
    checked_types(g)?;
    let edges = g.edges.len() as u64;
    let factorial: u64 = (1..=edges).product();
    Ok(factorial / automorphism_count(g))
}

/// Everything the listing reports for one diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramSummary {
    pub word: String,
    pub diagram: BcrDiagram,
    pub vertex_types: Vec<u8>,
    pub e_theta: Vec<ThetaPair>,
    pub automorphisms: u64,
    pub numberings: u64,
}

pub fn word_string(word: &[VertexType]) -> String {
    word.iter().map(|t| char::from(b'0' + t.number())).collect()
}

pub fn summarize(g: &BcrDiagram) -> Result<DiagramSummary, DiagramError> {
    let types = checked_types(g)?;
    Ok(DiagramSummary {
        word: word_string(&canonical_word(g)?),
        vertex_types: types.iter().map(|t| t.number()).collect(),
        e_theta: e_theta_edges(g)?,
        automorphisms: automorphism_count(g),
        numberings: numbering_count(g)?,
        diagram: g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexType::*;

    #[test]
    fn gamma_2_is_valid() {
        let g = gamma_k(2);
        let report = validate_diagram(&g);
        assert!(report.is_valid(), "{report}");
        assert_eq!(g.degree(), 2);
        assert_eq!(report.count(ExternalWithLeg), 2);
        assert_eq!(report.count(Univalent), 2);
    }

    #[test]
    fn lone_external_vertex_with_incoming_edge() {
        let g = BcrDiagram::new(
            vec![VertexKind::Internal, VertexKind::External],
            vec![Edge {
                from: 0,
                to: 1,
                kind: EdgeKind::External,
            }],
        );
        let report = validate_diagram(&g);
        assert!(report.problems.contains(&DiagramProblem::NoRule { vertex: 1 }));
    }

    #[test]
    fn odd_vertex_count_is_invalid() {
        // 4 -> 5 -> 4 plus a stray univalent vertex into nowhere valid
        let mut g = BcrDiagram::from_word(&[BivalentExtIn, BivalentIntIn]);
        g.vertices.push(VertexKind::Internal);
        let report = validate_diagram(&g);
        assert!(report.problems.contains(&DiagramProblem::OddVertexCount(3)));
    }

    #[test]
    fn loops_and_duplicates_are_reported() {
        let g = BcrDiagram::new(
            vec![VertexKind::Internal, VertexKind::Internal],
            vec![
                Edge { from: 0, to: 0, kind: EdgeKind::Internal },
                Edge { from: 0, to: 1, kind: EdgeKind::External },
                Edge { from: 0, to: 1, kind: EdgeKind::External },
            ],
        );
        let report = validate_diagram(&g);
        assert!(report.problems.contains(&DiagramProblem::Loop { edge: 0 }));
        assert!(report.problems.contains(&DiagramProblem::DuplicateEdge { from: 0, to: 1 }));
    }

    #[test]
    fn degree_two_classes() {
        let words: Vec<String> = enumerate_words(2).unwrap().iter().map(|w| word_string(w)).collect();
        assert_eq!(words, vec!["11", "145", "22", "254", "4545"]);
    }

    #[test]
    fn enumerated_diagrams_have_expected_shape() {
        for k in 2..=5 {
            for g in enumerate_diagrams(k).unwrap() {
                let report = validate_diagram(&g);
                assert!(report.is_valid());
                assert_eq!(g.vertex_count(), 2 * k);
                assert_eq!(g.edges.len(), 2 * k);
                assert_eq!(report.count(BivalentExtIn), report.count(BivalentIntIn));
                assert_eq!(e_theta_edges(&g).unwrap().len(), k);
            }
        }
    }

    #[test]
    fn gamma_k_counts() {
        for k in 2..=7 {
            let g = gamma_k(k);
            assert_eq!(automorphism_count(&g), k as u64);
            let fact: u64 = (1..=2 * k as u64).product();
            assert_eq!(numbering_count(&g).unwrap(), fact / k as u64);
            assert_eq!(e_theta_edges(&g).unwrap().len(), k);
            assert!(enumerate_diagrams(k).unwrap().contains(&g));
        }
        assert_eq!(numbering_count(&gamma_k(2)).unwrap(), 12);
    }

    #[test]
    fn gamma_2_theta_pairs() {
        // cycle edges 0: w0 -> w1 and 1: w1 -> w0; legs 2 -> w0 and 3 -> w1
        let pairs = e_theta_edges(&gamma_k(2)).unwrap();
        assert_eq!(
            pairs,
            vec![ThetaPair { edge: 0, partner: 3 }, ThetaPair { edge: 1, partner: 2 }]
        );
    }

    #[test]
    fn asymmetric_degree_three() {
        let g = BcrDiagram::from_word(&[ExternalWithLeg, ExternalWithLeg, BivalentExtIn, BivalentIntIn]);
        assert_eq!(g.degree(), 3);
        assert_eq!(automorphism_count(&g), 1);
        assert_eq!(numbering_count(&g).unwrap(), 720);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(enumerate_diagrams(8), Err(DiagramError::OutOfRange { k: 8, .. })));
        assert!(matches!(enumerate_diagrams(1), Err(DiagramError::OutOfRange { .. })));
    }

    #[test]
    fn canonical_word_of_relabeled_diagram() {
        let g = BcrDiagram::from_word(&[BivalentIntIn, ExternalWithLeg, BivalentExtIn]);
        assert_eq!(word_string(&canonical_word(&g).unwrap()), "145");
    }
}
