//! Labeled brute-force search for BCR diagrams.
//!
//! Vertices are split into type blocks in a fixed order and every way of
//! pointing each vertex's single outgoing edge at a free incoming slot is
//! tried. Isomorphism classes come from a generic individualization and
//! refinement search, not from the cycle structure.

use std::collections::{BTreeMap, BTreeSet};

use bcr_core::diagrams::{validate_diagram, BcrDiagram, Edge, EdgeKind, VertexKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Ty {
    T1,
    T2,
    T3,
    T4,
    T5,
}

const TYPES: [Ty; 5] = [Ty::T1, Ty::T2, Ty::T3, Ty::T4, Ty::T5];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    /// External edge from a univalent vertex.
    Leg,
    /// External edge from a vertex that is not univalent.
    ExtOther,
    /// External edge from anywhere.
    ExtAny,
    Int,
}

fn slots(t: Ty) -> &'static [Slot] {
    match t {
        Ty::T1 => &[Slot::Leg, Slot::ExtOther],
        Ty::T2 => &[Slot::Int, Slot::Leg],
        Ty::T3 => &[],
        Ty::T4 => &[Slot::ExtAny],
        Ty::T5 => &[Slot::Int],
    }
}

fn out_kind(t: Ty) -> EdgeKind {
    match t {
        Ty::T2 | Ty::T4 => EdgeKind::Internal,
        _ => EdgeKind::External,
    }
}

fn fits(source: Ty, slot: Slot) -> bool {
    match slot {
        Slot::Leg => source == Ty::T3,
        Slot::ExtOther => out_kind(source) == EdgeKind::External && source != Ty::T3,
        Slot::ExtAny => out_kind(source) == EdgeKind::External,
        Slot::Int => out_kind(source) == EdgeKind::Internal,
    }
}

fn vertex_kind(t: Ty) -> VertexKind {
    if t == Ty::T1 {
        VertexKind::External
    } else {
        VertexKind::Internal
    }
}

/// One labeled diagram with its vertex types in block order.
#[derive(Clone, Debug)]
pub struct Labeled {
    pub diagram: BcrDiagram,
    types: Vec<Ty>,
    /// Number of labelings of the full vertex set represented by this one.
    pub multiplicity: u128,
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn connected(n: usize, targets: &[usize]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (v, &w) in targets.iter().enumerate() {
        adj[v].push(w);
        adj[w].push(v);
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
    seen.iter().all(|&s| s)
}

struct Search<'a> {
    types: &'a [Ty],
    // free[v] = unfilled slots of vertex v
    free: Vec<Vec<Slot>>,
    targets: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, v: usize) {
        let n = self.types.len();
        if v == n {
            if self.free.iter().all(Vec::is_empty) && connected(n, &self.targets) {
                self.found.push(self.targets.clone());
            }
            return;
        }
        for w in 0..n {
            if w == v {
                continue;
            }
            for i in 0..self.free[w].len() {
                let slot = self.free[w][i];
                // identical slots of one vertex are interchangeable; try the first only
                if self.free[w][..i].contains(&slot) || !fits(self.types[v], slot) {
                    continue;
                }
                self.free[w].remove(i);
                self.targets[v] = w;
                self.run(v + 1);
                self.free[w].insert(i, slot);
            }
        }
    }
}

/// Every labeled degree-`k` diagram, one representative per type layout.
pub fn labeled_diagrams(k: usize) -> Vec<Labeled> {
    let n = 2 * k;
    let mut out = Vec::new();
    for counts in compositions(n, 5) {
        let types: Vec<Ty> = TYPES
            .iter()
            .zip(&counts)
            .flat_map(|(&t, &c)| std::iter::repeat_n(t, c))
            .collect();
        let slot_total: usize = types.iter().map(|&t| slots(t).len()).sum();
        if slot_total != n {
            continue;
        }
        let multiplicity = factorial(n) / counts.iter().map(|&c| factorial(c)).product::<u128>();
        let mut search = Search {
            types: &types,
            free: types.iter().map(|&t| slots(t).to_vec()).collect(),
            targets: vec![usize::MAX; n],
            found: Vec::new(),
        };
        search.run(0);
        for targets in search.found {
            let edges = targets
                .iter()
                .enumerate()
                .map(|(v, &w)| Edge {
                    from: v,
                    to: w,
                    kind: out_kind(types[v]),
                })
                .collect();
            let diagram = BcrDiagram::new(types.iter().map(|&t| vertex_kind(t)).collect(), edges);
            out.push(Labeled {
                diagram,
                types: types.clone(),
                multiplicity,
            });
        }
    }
    out
}

/// Type of each vertex read off the graph alone, by the five local rules.
pub fn oracle_types(g: &BcrDiagram) -> Option<Vec<u8>> {
    let n = g.vertices.len();
    let univalent = |v: usize| {
        g.edges.iter().filter(|e| e.to == v).count() == 0
            && g.edges.iter().filter(|e| e.from == v).count() == 1
    };
    (0..n)
        .map(|v| {
            let ins: Vec<&Edge> = g.edges.iter().filter(|e| e.to == v).collect();
            let outs: Vec<&Edge> = g.edges.iter().filter(|e| e.from == v).collect();
            let count = |es: &[&Edge], kind| es.iter().filter(|e| e.kind == kind).count();
            let legs = ins
                .iter()
                .filter(|e| e.kind == EdgeKind::External && univalent(e.from))
                .count();
            let (ii, ie) = (count(&ins, EdgeKind::Internal), count(&ins, EdgeKind::External));
            let (oi, oe) = (count(&outs, EdgeKind::Internal), count(&outs, EdgeKind::External));
            match (g.vertices[v], ii, ie, oi, oe) {
                (VertexKind::External, 0, 2, 0, 1) if legs == 1 => Some(1),
                (VertexKind::Internal, 1, 1, 1, 0) if legs == 1 => Some(2),
                (VertexKind::Internal, 0, 0, 0, 1) => Some(3),
                (VertexKind::Internal, 0, 1, 1, 0) => Some(4),
                (VertexKind::Internal, 1, 0, 0, 1) => Some(5),
                _ => None,
            }
        })
        .collect()
}

/// Canonical encoding and automorphism count by individualization and refinement.
///
/// Leaves of the full search tree are vertex orderings; the encoding of a
/// leaf lists vertex colors and edges under that ordering. The least
/// encoding is canonical and the number of leaves attaining it is `|Aut|`.
pub fn canonical_form(g: &BcrDiagram) -> (Vec<u64>, u64) {
    let n = g.vertices.len();
    let types = oracle_types(g).expect("oracle only canonicalizes valid diagrams");
    let initial: Vec<u64> = (0..n)
        .map(|v| types[v] as u64 * 2 + (g.vertices[v] == VertexKind::External) as u64)
        .collect();
    let mut best: Option<Vec<u64>> = None;
    let mut hits = 0;
    explore(g, refine(g, initial), &mut best, &mut hits);
    (best.expect("at least one leaf"), hits)
}

/// A vertex color with its sorted (direction, edge kind, neighbor color) list.
type Signature = (u64, Vec<(u8, u8, u64)>);

fn refine(g: &BcrDiagram, mut colors: Vec<u64>) -> Vec<u64> {
    let n = colors.len();
    loop {
        let signatures: Vec<Signature> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(u8, u8, u64)> = g
                    .edges
                    .iter()
                    .filter_map(|e| {
                        if e.from == v {
                            Some((0, e.kind as u8, colors[e.to]))
                        } else if e.to == v {
                            Some((1, e.kind as u8, colors[e.from]))
                        } else {
                            None
                        }
                    })
                    .collect();
                nbrs.sort();
                (colors[v], nbrs)
            })
            .collect();
        let distinct: BTreeSet<_> = signatures.iter().cloned().collect();
        let index: BTreeMap<_, u64> = distinct.into_iter().zip(0..).collect();
        let next: Vec<u64> = signatures.iter().map(|s| index[s]).collect();
        let cells_before = colors.iter().collect::<BTreeSet<_>>().len();
        let cells_after = next.iter().collect::<BTreeSet<_>>().len();
        colors = next;
        if cells_after == cells_before {
            return colors;
        }
    }
}

fn explore(g: &BcrDiagram, colors: Vec<u64>, best: &mut Option<Vec<u64>>, hits: &mut u64) {
    let n = colors.len();
    let mut cells: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let target = cells
        .values()
        .filter(|c| c.len() > 1)
        .min_by_key(|c| c.len())
        .cloned();
    match target {
        None => {
            // discrete: colors are positions
            let mut code: Vec<u64> = (0..n).map(|_| 0).collect();
            for v in 0..n {
                code[colors[v] as usize] = g.vertices[v] as u64;
            }
            let mut edges: Vec<(u64, u64, u64)> = g
                .edges
                .iter()
                .map(|e| (colors[e.from], colors[e.to], e.kind as u64))
                .collect();
            edges.sort();
            code.extend(edges.into_iter().flat_map(|(a, b, c)| [a, b, c]));
            match best {
                Some(b) if code > *b => {}
                Some(b) if code == *b => *hits += 1,
                _ => {
                    *best = Some(code);
                    *hits = 1;
                }
            }
        }
        Some(cell) => {
            for &v in &cell {
                let mut split = colors.iter().map(|&c| 2 * c + 1).collect::<Vec<_>>();
                split[v] -= 1;
                explore(g, refine(g, split), best, hits);
            }
        }
    }
}

/// Per isomorphism class: canonical encoding to (labeled count, |Aut|).
pub fn classes(k: usize) -> BTreeMap<Vec<u64>, (u128, u64)> {
    let mut out: BTreeMap<Vec<u64>, (u128, u64)> = BTreeMap::new();
    for labeled in labeled_diagrams(k) {
        let report = validate_diagram(&labeled.diagram);
        assert!(report.is_valid(), "oracle produced an invalid diagram: {report}");
        let oracle = oracle_types(&labeled.diagram).expect("slots force the rules");
        let declared: Vec<u8> = labeled.types.iter().map(|&t| t as u8 + 1).collect();
        assert_eq!(oracle, declared);
        let (code, aut) = canonical_form(&labeled.diagram);
        let entry = out.entry(code).or_insert((0, aut));
        entry.0 += labeled.multiplicity;
    }
    out
}
