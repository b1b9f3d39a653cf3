use std::collections::BTreeMap;

use crate::complex::{Closure, TwoComplex};
use crate::report::{CheckReport, Verdict};

use super::conditions::{check_condition_c, check_condition_t};

/// Which intersection lemmas to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HellyMode {
    /// C(6): intersections are a vertex or a piece.
    C6,
    /// C(4)-T(4): intersections are nonempty.
    C4T4,
}

/// Largest tuple size scanned.
pub const MAX_TUPLE: usize = 4;

fn precondition(x: &TwoComplex, mode: HellyMode) -> Option<CheckReport> {
    let checks = match mode {
        HellyMode::C6 => vec![("C(6)", check_condition_c(x, 6))],
        HellyMode::C4T4 => vec![("C(4)", check_condition_c(x, 4)), ("T(4)", check_condition_t(x, 4))],
    };
    checks
        .into_iter()
        .find(|(_, r)| r.verdict != Verdict::Holds)
        .map(|(name, r)| CheckReport::error(format!("precondition: {name} is {}", r.verdict)))
}

/// All tuples of 3..=`max` pairwise intersecting faces, each ascending.
pub fn pairwise_intersecting_tuples(x: &TwoComplex, max: usize) -> Vec<Vec<usize>> {
    let neighbors: Vec<Vec<usize>> = (0..x.face_count()).map(|f| x.face_neighbors(f)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn grow(
        neighbors: &[Vec<usize>],
        stack: &mut Vec<usize>,
        candidates: Vec<usize>,
        max: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() >= 3 {
            out.push(stack.clone());
        }
        if stack.len() == max {
            return;
        }
        for &c in &candidates {
            let next: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&d| d > c && neighbors[c].binary_search(&d).is_ok())
                .collect();
            stack.push(c);
            grow(neighbors, stack, next, max, out);
            stack.pop();
        }
    }
    for f in 0..x.face_count() {
        stack.push(f);
        let candidates = neighbors[f].iter().copied().filter(|&g| g > f).collect();
        grow(&neighbors, &mut stack, candidates, max, &mut out);
        stack.pop();
    }
    out
}

/// Whether a closure is one vertex, or a nonempty edge set forming a simple
/// path whose vertices are exactly the closure's vertices.
pub fn is_vertex_or_path(x: &TwoComplex, c: &Closure) -> bool {
    if c.is_single_vertex() {
        return true;
    }
    if c.edges.is_empty() {
        return false;
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in &c.edges {
        let edge = &x.edges()[e];
        if edge.from == edge.to {
            return false;
        }
        *degree.entry(edge.from).or_default() += 1;
        *degree.entry(edge.to).or_default() += 1;
    }
    if degree.len() != c.vertices.len() || degree.keys().any(|v| !c.vertices.contains(v)) {
        return false;
    }
    if degree.values().any(|&d| d > 2) || degree.len() != c.edges.len() + 1 {
        return false;
    }
    // a forest with |V| = |E| + 1 is connected
    true
}

fn tuple_name(x: &TwoComplex, tuple: &[usize]) -> String {
    let ids: Vec<&str> = tuple.iter().map(|&f| x.face_id(f)).collect();
    format!("({})", ids.join(", "))
}

/// Helly-type lemma: pairwise intersecting faces have a common point; in
/// mode C6 the common intersection is a vertex or a piece.
pub fn check_helly(x: &TwoComplex, mode: HellyMode) -> CheckReport {
    if let Some(report) = precondition(x, mode) {
        return report;
    }
    helly_scan(x, mode)
}

/// The scan behind [`check_helly`] without the precondition check.
pub fn helly_scan(x: &TwoComplex, mode: HellyMode) -> CheckReport {
    let mut witnesses = Vec::new();
    for tuple in pairwise_intersecting_tuples(x, MAX_TUPLE) {
        let common = x.intersection(&tuple);
        if common.is_empty() {
            witnesses.push(format!("{}: empty common intersection", tuple_name(x, &tuple)));
        } else if mode == HellyMode::C6 && !is_vertex_or_path(x, &common) {
            witnesses.push(format!(
                "{}: common intersection is neither a vertex nor a path",
                tuple_name(x, &tuple)
            ));
        }
    }
    CheckReport::from_witnesses(witnesses)
}

/// Strong Helly: for a tested triple, some pairwise intersection lies in the
/// third face. Mode C6 tests triples meeting in a piece, mode C4T4 all
/// pairwise intersecting triples.
pub fn check_strong_helly(x: &TwoComplex, mode: HellyMode) -> CheckReport {
    if let Some(report) = precondition(x, mode) {
        return report;
    }
    strong_helly_scan(x, mode)
}

pub fn strong_helly_scan(x: &TwoComplex, mode: HellyMode) -> CheckReport {
    let mut witnesses = Vec::new();
    for triple in pairwise_intersecting_tuples(x, 3) {
        if mode == HellyMode::C6 && x.intersection(&triple).edges.is_empty() {
            continue;
        }
        let [a, b, c] = [triple[0], triple[1], triple[2]];
        let contained = [(a, b, c), (a, c, b), (b, c, a)]
            .into_iter()
            .any(|(p, q, r)| x.intersection(&[p, q]).is_subset(x.closure(r)));
        if !contained {
            witnesses.push(format!(
                "{}: no pairwise intersection lies in the remaining face",
                tuple_name(x, &triple)
            ));
        }
    }
    CheckReport::from_witnesses(witnesses)
}
