use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cancellation::{check_condition_c, check_condition_t, enumerate_pieces};
use crate::complex::{Letter, Subcomplex, TwoComplex};
use crate::error::Result;
use crate::graph::Graph;
use crate::report::{CheckReport, Verdict};

use super::certificate::{vertices_of, FlatCertificate, FlatCheck, FlatKind, NeighborRecord, VertexRecord};
use super::gallery::Interior;
use super::order::cyclic_order;

/// 1-skeleton of `x` restricted to the given edges.
pub fn skeleton_graph(x: &TwoComplex, edges: impl IntoIterator<Item = usize>) -> Graph {
    let mut g = Graph::new(x.vertices().to_vec());
    for e in edges {
        let edge = &x.edges()[e];
        g.add_edge(edge.from, edge.to);
    }
    g
}

/// Local criteria for a flat in a C(3)-T(6) complex: interior faces are
/// triangles, interior edges lie in exactly two faces of `e` along a piece,
/// interior vertices lie in exactly six faces of `x`, all in `e`, and
/// 1-skeleton distances between interior vertices agree in `e` and `x`.
pub fn check_flat_c3t6(x: &TwoComplex, e: &Subcomplex<'_>, margin: usize) -> Result<FlatCheck> {
    for (name, report) in [("C(3)", check_condition_c(x, 3)), ("T(6)", check_condition_t(x, 6))] {
        if report.verdict != Verdict::Holds {
            return Ok(FlatCheck {
                report: CheckReport::error(format!("precondition: {name} is {}", report.verdict)),
                certificate: None,
            });
        }
    }
    let interior = Interior::of(e);
    let faces = interior.interior_faces(e, margin)?;
    let pieces = enumerate_pieces(x);
    let mut witnesses = Vec::new();
    let mut edges = BTreeSet::new();
    for &f in &faces {
        if x.word(f).len() != 3 {
            witnesses.push(format!("face {}: not a triangle", x.face_id(f)));
        }
        edges.extend(x.closure(f).edges.iter().copied());
    }
    for &edge in &edges {
        let in_e: Vec<usize> = x
            .faces_at_edge(edge)
            .iter()
            .copied()
            .filter(|&g| e.contains_face(g))
            .collect();
        if in_e.len() != 2 {
            witnesses.push(format!(
                "edge {}: lies in {} faces of the subcomplex",
                x.edge_id(edge),
                in_e.len()
            ));
        } else if !pieces.is_piece(&[Letter::new(edge, true)]) {
            witnesses.push(format!("edge {}: faces do not meet along a piece", x.edge_id(edge)));
        }
    }
    let vertices = vertices_of(x, &faces);
    for &v in &vertices {
        let all = x.faces_at_vertex(v);
        let outside = all.iter().filter(|&&g| !e.contains_face(g)).count();
        if all.len() != 6 || outside > 0 {
            witnesses.push(format!(
                "vertex {}: lies in {} faces of the complex, {} of them in the subcomplex",
                x.vertex_id(v),
                all.len(),
                all.len() - outside
            ));
        }
    }
    let inner = skeleton_graph(x, e.edges().iter().copied());
    let outer = skeleton_graph(x, 0..x.edge_count());
    let list: Vec<usize> = vertices.iter().copied().collect();
    let mismatches: Vec<String> = list
        .par_iter()
        .flat_map_iter(|&a| {
            let di = inner.distances_from(a);
            let dx = outer.distances_from(a);
            list.iter()
                .filter(|&&b| b > a && di[b] != dx[b])
                .map(|&b| {
                    format!(
                        "vertices {}, {}: distance {} in the subcomplex, {} in the complex",
                        x.vertex_id(a),
                        x.vertex_id(b),
                        di[b].map_or("inf".to_string(), |d| d.to_string()),
                        dx[b].map_or("inf".to_string(), |d| d.to_string())
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    witnesses.extend(mismatches);
    Ok(FlatCheck::finish(witnesses, || {
        let records = faces
            .iter()
            .map(|&f| NeighborRecord {
                face: x.face_id(f).to_string(),
                cyclic: cyclic_order(x, f, &e.neighbors(f))
                    .unwrap_or_default()
                    .iter()
                    .map(|&g| x.face_id(g).to_string())
                    .collect(),
            })
            .collect();
        let vertex_records = vertices
            .iter()
            .map(|&v| VertexRecord {
                vertex: x.vertex_id(v).to_string(),
                valence: e.valence(v),
                faces: 6,
                class: "in six faces".into(),
            })
            .collect();
        FlatCertificate::new(FlatKind::Triangular, e, margin, records, vertex_records)
    }))
}
