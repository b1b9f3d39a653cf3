use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::complex::TwoComplex;
use crate::duals::{face_label, vertex_label};
use crate::error::{Error, Result};
use crate::generators::face_coordinates;
use crate::graph::Graph;
use crate::report::CheckReport;

use super::certificate::FlatCertificate;
use super::gallery::{GalleryGraph, Interior};

/// Gallery distances inside the certified subcomplex agree with those in
/// `x` for all pairs of faces at depth at least `margin`.
pub fn check_flat_embedding(x: &TwoComplex, cert: &FlatCertificate, margin: usize) -> Result<CheckReport> {
    let e = cert.subcomplex_in(x)?;
    let interior = Interior::of(&e);
    let faces = interior.interior_faces(&e, margin)?;
    let inner = GalleryGraph::of(&e);
    let outer = GalleryGraph::whole(x);
    let witnesses: Vec<String> = faces
        .par_iter()
        .flat_map_iter(|&a| {
            let di = inner.distances_from(a);
            let dx = outer.distances_from(a);
            faces
                .iter()
                .filter(|&&b| b > a && di.get(&b) != dx.get(&b))
                .map(|&b| {
                    format!(
                        "faces {}, {}: gallery distance {:?} in the subcomplex, {:?} in the complex",
                        x.face_id(a),
                        x.face_id(b),
                        di.get(&b),
                        dx.get(&b)
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(CheckReport::from_witnesses(witnesses))
}

/// Planar lattice used as a model flat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticePattern {
    /// Triangular lattice in axial coordinates.
    Triangular,
    /// Square lattice.
    Square,
}

impl LatticePattern {
    pub fn steps(self) -> &'static [(i64, i64)] {
        match self {
            LatticePattern::Triangular => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
            LatticePattern::Square => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
        }
    }

    fn axes(self) -> &'static [(i64, i64)] {
        match self {
            LatticePattern::Triangular => &[(1, 0), (0, 1), (1, -1)],
            LatticePattern::Square => &[(1, 0), (0, 1)],
        }
    }

    pub fn distance(self, p: (i64, i64), q: (i64, i64)) -> usize {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let d = match self {
            LatticePattern::Triangular => dx.abs().max(dy.abs()).max((dx + dy).abs()),
            LatticePattern::Square => dx.abs() + dy.abs(),
        };
        d as usize
    }
}

impl std::str::FromStr for LatticePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(LatticePattern::Triangular),
            "square" => Ok(LatticePattern::Square),
            other => Err(Error::Precondition(format!("unknown lattice pattern `{other}`"))),
        }
    }
}

/// Distances in `g` between vertices of `s` agree with lattice distances
/// for all pairs at depth at least `margin` inside `s`.
///
/// `s` must be pattern-shaped: coordinates injective, induced edges exactly
/// the lattice adjacencies, and no gaps along any lattice axis.
pub fn check_dual_flat(
    g: &Graph,
    s: &BTreeMap<String, (i64, i64)>,
    pattern: LatticePattern,
    margin: usize,
) -> Result<CheckReport> {
    let mut nodes = Vec::with_capacity(s.len());
    let mut at: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (k, (label, &p)) in s.iter().enumerate() {
        nodes.push(g.node(label)?);
        if let Some(prev) = at.insert(p, k) {
            return Err(Error::NotPatternShaped(format!(
                "{} and {label} share coordinates {p:?}",
                g.label(nodes[prev])
            )));
        }
    }
    let points: Vec<(i64, i64)> = s.values().copied().collect();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            let lattice = pattern.distance(points[a], points[b]) == 1;
            if lattice != g.adjacent(nodes[a], nodes[b]) {
                return Err(Error::NotPatternShaped(format!(
                    "{} and {} are {} in the lattice but {} in the graph",
                    g.label(nodes[a]),
                    g.label(nodes[b]),
                    if lattice { "adjacent" } else { "not adjacent" },
                    if lattice { "not adjacent" } else { "adjacent" }
                )));
            }
        }
    }
    let span = points.iter().flat_map(|&(a, b)| [a.abs(), b.abs()]).max().unwrap_or(0) * 2 + 1;
    for &p in &points {
        for &(dx, dy) in pattern.axes() {
            let mut gap = false;
            for k in 1..=span {
                let q = (p.0 + k * dx, p.1 + k * dy);
                if at.contains_key(&q) {
                    if gap {
                        return Err(Error::NotPatternShaped(format!("gap between {p:?} and {q:?}")));
                    }
                } else {
                    gap = true;
                }
            }
        }
    }

    // depth inside the lattice patch
    let full = pattern.steps().len();
    let mut depth: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &p in &points {
        let degree = pattern
            .steps()
            .iter()
            .filter(|&&(dx, dy)| at.contains_key(&(p.0 + dx, p.1 + dy)))
            .count();
        if degree < full {
            depth.insert(p, 0);
            queue.push_back(p);
        }
    }
    while let Some(p) = queue.pop_front() {
        let d = depth[&p];
        for &(dx, dy) in pattern.steps() {
            let q = (p.0 + dx, p.1 + dy);
            if at.contains_key(&q) && !depth.contains_key(&q) {
                depth.insert(q, d + 1);
                queue.push_back(q);
            }
        }
    }
    let inside: Vec<usize> = (0..points.len())
        .filter(|&k| depth.get(&points[k]).is_none_or(|&d| d >= margin))
        .collect();
    if inside.is_empty() {
        return Err(Error::MarginTooLarge {
            margin,
            depth: depth.values().max().copied().unwrap_or(0),
        });
    }
    let witnesses: Vec<String> = inside
        .par_iter()
        .flat_map_iter(|&a| {
            let dist = g.distances_from(nodes[a]);
            let (nodes, points, inside) = (&nodes, &points, &inside);
            inside
                .iter()
                .filter(move |&&b| b > a)
                .filter_map(move |&b| {
                    let want = pattern.distance(points[a], points[b]);
                    (dist[nodes[b]] != Some(want)).then(|| {
                        format!(
                            "{}, {}: graph distance {:?}, lattice distance {want}",
                            g.label(nodes[a]),
                            g.label(nodes[b]),
                            dist[nodes[b]]
                        )
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(CheckReport::from_witnesses(witnesses))
}

/// Axial coordinates of the nerve vertices of a hexagonal patch.
pub fn hexagonal_nerve_coordinates(x: &TwoComplex) -> BTreeMap<String, (i64, i64)> {
    x.faces()
        .iter()
        .filter_map(|f| match face_coordinates(&f.id) {
            Some(("h", i, j)) => Some((f.id.clone(), (i, j))),
            _ => None,
        })
        .collect()
}

/// Square-grid coordinates (rotated by 45°) of the quadrization vertices of
/// a square-like patch: face `f_i_j` sits at `(i+j+1, i-j)` and vertex
/// `(a, b)` at `(a+b, a-b)`. Of a kept vertical edge only the level-0 end
/// is used.
pub fn square_quadrization_coordinates(x: &TwoComplex) -> BTreeMap<String, (i64, i64)> {
    let mut out = BTreeMap::new();
    for f in x.faces() {
        if let Some(("f", i, j)) = face_coordinates(&f.id) {
            out.insert(face_label(&f.id), (i + j + 1, i - j));
        }
    }
    for v in x.vertices() {
        let parts: Vec<&str> = v.split('_').collect();
        let coords = match parts.as_slice() {
            ["v", a, b] | ["v", a, b, "0"] => a.parse::<i64>().ok().zip(b.parse::<i64>().ok()),
            _ => None,
        };
        if let Some((a, b)) = coords {
            out.insert(vertex_label(v), (a + b, a - b));
        }
    }
    out
}
