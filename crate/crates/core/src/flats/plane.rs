use crate::complex::{Subcomplex, TwoComplex};
use crate::error::Result;

use super::certificate::{face_list, vertices_of, FlatCertificate, FlatCheck, FlatKind, NeighborRecord, VertexRecord};
use super::gallery::{gallery_ball, Interior};
use super::order::cyclic_order;

/// Local flat-plane criteria for C(6) complexes, checked at every face of
/// `e` at depth at least `margin`: six neighbours covering `∂F`, triple
/// intersections empty or one vertex, quadruple intersections empty.
pub fn check_flat_plane_c6(x: &TwoComplex, e: &Subcomplex<'_>, margin: usize) -> Result<FlatCheck> {
    let interior = Interior::of(e);
    let faces = interior.interior_faces(e, margin)?;
    let mut witnesses = Vec::new();
    let mut records = Vec::new();
    for &f in &faces {
        let id = x.face_id(f);
        let nbrs = e.neighbors(f);
        if nbrs.len() != 6 {
            witnesses.push(format!("(1) face {id}: meets {} faces, expected 6", nbrs.len()));
        } else {
            let covered = nbrs
                .iter()
                .fold(Default::default(), |acc: crate::complex::Closure, &g| {
                    acc.union(&x.intersection(&[f, g]))
                });
            if covered != *x.closure(f) {
                witnesses.push(format!("(1) face {id}: neighbours do not cover the boundary"));
            }
        }
        for (a, &g) in nbrs.iter().enumerate() {
            for (b, &h) in nbrs.iter().enumerate().skip(a + 1) {
                let triple = x.intersection(&[f, g, h]);
                if !triple.is_empty() && !triple.is_single_vertex() {
                    witnesses.push(format!(
                        "(2) face {id}: intersection with {} is neither empty nor one vertex",
                        face_list(x, [g, h])
                    ));
                }
                for &k in &nbrs[b + 1..] {
                    if !x.intersection(&[f, g, h, k]).is_empty() {
                        witnesses.push(format!(
                            "(3) face {id}: intersection with {} is not empty",
                            face_list(x, [g, h, k])
                        ));
                    }
                }
            }
        }
        match cyclic_order(x, f, &nbrs) {
            Ok(order) => records.push(NeighborRecord {
                face: id.to_string(),
                cyclic: order.iter().map(|&g| x.face_id(g).to_string()).collect(),
            }),
            Err(msg) => witnesses.push(format!("(1) face {id}: {msg}")),
        }
    }
    Ok(FlatCheck::finish(witnesses, || {
        let vertices = vertices_of(x, &faces)
            .into_iter()
            .map(|v| {
                let count = e.faces_at_vertex(v).len();
                VertexRecord {
                    vertex: x.vertex_id(v).to_string(),
                    valence: e.valence(v),
                    faces: count,
                    class: match count {
                        2 => "on a piece".to_string(),
                        3 => "triple point".to_string(),
                        k => format!("in {k} faces"),
                    },
                }
            })
            .collect();
        FlatCertificate::new(FlatKind::HexagonalFlatPlane, e, margin, records, vertices)
    }))
}

/// Candidate subcomplexes for a flat plane: gallery balls of radius
/// `margin..=R` around every face at depth at least `margin`, plus the
/// whole complex. Returns each candidate with its check outcome.
pub fn search_c6_certificates(x: &TwoComplex, margin: usize) -> Result<Vec<(Vec<String>, FlatCheck)>> {
    let whole = Subcomplex::whole(x);
    let interior = Interior::of(&whole);
    let centers = interior.interior_faces(&whole, margin)?;
    let max_radius = interior.max_depth().unwrap_or(margin);
    let mut candidates: Vec<Vec<usize>> = vec![(0..x.face_count()).collect()];
    for &c in &centers {
        for r in margin..=max_radius {
            candidates.push(gallery_ball(x, c, r).into_iter().collect());
        }
    }
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    for faces in candidates {
        let e = Subcomplex::from_faces(x, faces.iter().copied());
        // balls too small to have an interior at this margin are skipped
        if let Ok(check) = check_flat_plane_c6(x, &e, margin) {
            out.push((e.face_ids(), check));
        }
    }
    Ok(out)
}
