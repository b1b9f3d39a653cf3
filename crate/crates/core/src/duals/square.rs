use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::complex::TwoComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::CheckReport;

use super::simplicial::dual_preconditions;

/// Quadrization label of a 0-cell.
pub fn vertex_label(id: &str) -> String {
    format!("v.{id}")
}

/// Quadrization label of a 2-cell.
pub fn face_label(id: &str) -> String {
    format!("f.{id}")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareEdge {
    pub id: String,
    pub a: usize,
    pub b: usize,
}

impl SquareEdge {
    fn other(&self, v: usize) -> Option<usize> {
        if v == self.a {
            Some(self.b)
        } else if v == self.b {
            Some(self.a)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub id: String,
    /// Boundary edges in cyclic order.
    pub edges: [usize; 4],
    /// `vertices[k]` is where `edges[k]` starts.
    pub vertices: [usize; 4],
}

/// A square complex. Edges carry ids so parallel edges are allowed.
#[derive(Debug, Clone)]
pub struct SquareComplex {
    name: String,
    vertices: Vec<String>,
    edges: Vec<SquareEdge>,
    squares: Vec<Square>,
}

impl SquareComplex {
    /// Squares are given by four edge ids in cyclic order.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
        squares: Vec<(String, [String; 4])>,
    ) -> Result<Self> {
        let vindex: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let lookup_v = |s: &str| {
            vindex
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownCell(format!("vertex `{s}`")))
        };
        let mut edge_list = Vec::new();
        for (id, a, b) in &edges {
            edge_list.push(SquareEdge {
                id: id.clone(),
                a: lookup_v(a)?,
                b: lookup_v(b)?,
            });
        }
        let eindex: BTreeMap<&str, usize> = edges.iter().enumerate().map(|(i, e)| (e.0.as_str(), i)).collect();
        let mut square_list = Vec::new();
        for (id, es) in &squares {
            let mut ids = [0; 4];
            for (k, e) in es.iter().enumerate() {
                ids[k] = *eindex
                    .get(e.as_str())
                    .ok_or_else(|| Error::UnknownCell(format!("edge `{e}`")))?;
            }
            let vertices = walk(&edge_list, ids).ok_or_else(|| Error::Validation {
                cell: id.clone(),
                message: "square boundary is not a closed edge path".into(),
            })?;
            square_list.push(Square {
                id: id.clone(),
                edges: ids,
                vertices,
            });
        }
        Ok(Self {
            name: name.into(),
            vertices,
            edges: edge_list,
            squares: square_list,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SquareEdge] {
        &self.edges
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownCell(format!("square-complex vertex `{label}`")))
    }

    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::new(self.vertices.clone());
        for e in &self.edges {
            g.add_edge(e.a, e.b);
        }
        g
    }

    /// Canonical line form: vertices, edges and squares sorted by labels.
    pub fn serialize(&self) -> String {
        let mut out = format!("squares {}\n", self.name);
        let mut vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        vs.sort();
        for v in vs {
            writeln!(out, "vertex {v}").unwrap();
        }
        let mut es: Vec<(String, String, &str)> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (&self.vertices[e.a], &self.vertices[e.b]);
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                (a.clone(), b.clone(), e.id.as_str())
            })
            .collect();
        es.sort();
        for (a, b, id) in es {
            writeln!(out, "edge {id} {a} {b}").unwrap();
        }
        let mut sq: Vec<(Vec<String>, &str)> = self
            .squares
            .iter()
            .map(|s| {
                (
                    canonical_cycle(s.vertices.iter().map(|&v| self.vertices[v].clone()).collect()),
                    s.id.as_str(),
                )
            })
            .collect();
        sq.sort();
        for (cycle, id) in sq {
            writeln!(out, "square {id} {}", cycle.join(" ")).unwrap();
        }
        out
    }
}

/// Rotation/reflection normal form of a vertex cycle.
fn canonical_cycle(cycle: Vec<String>) -> Vec<String> {
    let n = cycle.len();
    let mut best: Option<Vec<String>> = None;
    for start in 0..n {
        for dir in [1, n - 1] {
            let c: Vec<String> = (0..n).map(|k| cycle[(start + k * dir) % n].clone()).collect();
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}

fn walk(edges: &[SquareEdge], ids: [usize; 4]) -> Option<[usize; 4]> {
    let first = &edges[ids[0]];
    [first.a, first.b].into_iter().find_map(|start| {
        let mut vs = [0; 4];
        let mut v = start;
        for k in 0..4 {
            vs[k] = v;
            v = edges[ids[k]].other(v)?;
        }
        (v == start).then_some(vs)
    })
}

/// Bipartite incidence graph of 0-cells and 2-cells with every embedded
/// 4-cycle `v1 F1 v2 F2` filled by a square.
pub fn quadrize(x: &TwoComplex) -> Result<SquareComplex> {
    dual_preconditions(x)?;
    let nv = x.vertex_count();
    let mut vertices: Vec<String> = x.vertices().iter().map(|v| vertex_label(v)).collect();
    vertices.extend(x.faces().iter().map(|f| face_label(&f.id)));
    let mut edge_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for f in 0..x.face_count() {
        for &v in &x.closure(f).vertices {
            edge_index.insert((v, f), edges.len());
            edges.push(SquareEdge {
                id: format!("i{}", edges.len()),
                a: v,
                b: nv + f,
            });
        }
    }
    let mut squares = Vec::new();
    for f1 in 0..x.face_count() {
        for f2 in x.face_neighbors(f1).into_iter().filter(|&g| g > f1) {
            let common: Vec<usize> = x.intersection(&[f1, f2]).vertices.into_iter().collect();
            for (i, &v1) in common.iter().enumerate() {
                for &v2 in &common[i + 1..] {
                    squares.push(Square {
                        id: format!("q{}", squares.len()),
                        edges: [
                            edge_index[&(v1, f1)],
                            edge_index[&(v2, f1)],
                            edge_index[&(v2, f2)],
                            edge_index[&(v1, f2)],
                        ],
                        vertices: [v1, nv + f1, v2, nv + f2],
                    });
                }
            }
        }
    }
    Ok(SquareComplex {
        name: format!("quadrization_{}", x.name()),
        vertices,
        edges,
        squares,
    })
}

fn edge_multiset(y: &SquareComplex, squares: &[usize]) -> BTreeMap<usize, usize> {
    let mut count = BTreeMap::new();
    for &s in squares {
        for &e in &y.squares[s].edges {
            *count.entry(e).or_insert(0) += 1;
        }
    }
    count
}

/// Edges lying in exactly one of the given squares.
fn union_boundary(y: &SquareComplex, squares: &[usize]) -> BTreeSet<usize> {
    edge_multiset(y, squares)
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(e, _)| e)
        .collect()
}

/// Whether `edges` form one embedded cycle of length `len`.
fn is_embedded_cycle(y: &SquareComplex, edges: &BTreeSet<usize>, len: usize) -> bool {
    if edges.len() != len {
        return false;
    }
    let mut g: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in edges {
        let SquareEdge { a, b, .. } = y.edges[e];
        if a == b {
            return false;
        }
        g.entry(a).or_default().push(b);
        g.entry(b).or_default().push(a);
    }
    if g.len() != len || g.values().any(|n| n.len() != 2) {
        return false;
    }
    let start = *g.keys().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &g[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == len
}

fn square_edge_set(y: &SquareComplex, s: usize) -> BTreeSet<usize> {
    y.squares[s].edges.iter().copied().collect()
}

fn names(y: &SquareComplex, squares: &[usize]) -> String {
    squares
        .iter()
        .map(|&s| y.squares[s].id.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

fn cycle_text(y: &SquareComplex, edges: &BTreeSet<usize>) -> String {
    edges
        .iter()
        .map(|&e| y.edges[e].id.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Local quadric conditions (A)–(D). Witnesses start with the failing
/// condition's label.
pub fn check_quadric_conditions(y: &SquareComplex) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut squares_at_edge: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); y.edges.len()];
    for (s, sq) in y.squares.iter().enumerate() {
        for &e in &sq.edges {
            squares_at_edge[e].insert(s);
        }
    }
    let edge_neighbors = |s: usize| -> BTreeSet<usize> {
        y.squares[s]
            .edges
            .iter()
            .flat_map(|&e| squares_at_edge[e].iter().copied())
            .filter(|&t| t != s)
            .collect()
    };
    let boundary_sets: BTreeSet<BTreeSet<usize>> = (0..y.squares.len()).map(|s| square_edge_set(y, s)).collect();

    // (A)
    for sq in &y.squares {
        let backtracks = (0..4).any(|k| sq.edges[k] == sq.edges[(k + 1) % 4]);
        let loops = sq.edges.iter().any(|&e| y.edges[e].a == y.edges[e].b);
        if backtracks || loops {
            witnesses.push(format!("(A) square {}: attaching map is not an immersion", sq.id));
        }
    }

    // (B) and (C)
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for s in 0..y.squares.len() {
        for t in edge_neighbors(s).into_iter().filter(|&t| t > s) {
            pairs.push((s, t));
        }
    }
    for &(s, t) in &pairs {
        let (es, et) = (square_edge_set(y, s), square_edge_set(y, t));
        let shared = es.intersection(&et).count();
        if shared >= 3 && es != et {
            witnesses.push(format!(
                "(B) squares {}: share {shared} edges but have different boundaries",
                names(y, &[s, t])
            ));
        }
        let boundary = union_boundary(y, &[s, t]);
        if is_embedded_cycle(y, &boundary, 4) && !boundary_sets.contains(&boundary) {
            witnesses.push(format!(
                "(C) squares {}: boundary 4-cycle [{}] bounds no square",
                names(y, &[s, t]),
                cycle_text(y, &boundary)
            ));
        }
    }

    // (D)
    let pair_boundaries: BTreeMap<BTreeSet<usize>, ()> =
        pairs.iter().map(|&(s, t)| (union_boundary(y, &[s, t]), ())).collect();
    let mut triples: BTreeSet<[usize; 3]> = BTreeSet::new();
    for &(s, t) in &pairs {
        let third: BTreeSet<usize> = edge_neighbors(s).union(&edge_neighbors(t)).copied().collect();
        for u in third {
            if u != s && u != t {
                let mut tr = [s, t, u];
                tr.sort();
                triples.insert(tr);
            }
        }
    }
    for tr in triples {
        let boundary = union_boundary(y, &tr);
        if is_embedded_cycle(y, &boundary, 6) && !pair_boundaries.contains_key(&boundary) {
            witnesses.push(format!(
                "(D) squares {}: boundary 6-cycle [{}] has no dividing diagonal",
                names(y, &tr),
                cycle_text(y, &boundary)
            ));
        }
    }
    CheckReport::from_witnesses(witnesses)
}
