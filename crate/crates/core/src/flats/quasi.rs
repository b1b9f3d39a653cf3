use std::collections::BTreeSet;

use crate::complex::{link_of, Closure, Subcomplex, TwoComplex};
use crate::error::Result;

use super::certificate::{face_list, FlatCertificate, FlatCheck, FlatKind, NeighborRecord, VertexRecord};
use super::gallery::Interior;
use super::order::cyclic_order;

/// Neighbours `C` of `f` whose trace `F ∩ C` is not contained in `C' ∩ C''`
/// for any two other neighbours.
pub fn principal_neighbors(x: &TwoComplex, f: usize, nbrs: &[usize]) -> Vec<usize> {
    nbrs.iter()
        .copied()
        .filter(|&c| {
            let trace = x.intersection(&[f, c]);
            !nbrs.iter().enumerate().any(|(a, &c1)| {
                nbrs[a + 1..]
                    .iter()
                    .any(|&c2| c1 != c && c2 != c && trace.is_subset(&x.intersection(&[c1, c2])))
            })
        })
        .collect()
}

/// Link of `v` restricted to corners of the given faces: returns the arcs
/// as (face, node a, node b).
fn restricted_link(x: &TwoComplex, faces: &BTreeSet<usize>, v: usize) -> Vec<(usize, usize, usize)> {
    let link = link_of(x, v).expect("vertex in range");
    link.arcs
        .iter()
        .filter(|a| faces.contains(&a.face))
        .map(|a| (a.face, a.a, a.b))
        .collect()
}

/// Whether the arcs form one embedded cycle through all their nodes.
fn is_single_cycle(arcs: &[(usize, usize, usize)]) -> bool {
    let nodes: BTreeSet<usize> = arcs.iter().flat_map(|&(_, a, b)| [a, b]).collect();
    if nodes.len() != arcs.len() || arcs.iter().any(|&(_, a, b)| a == b) {
        return false;
    }
    let degree_two = nodes
        .iter()
        .all(|&n| arcs.iter().filter(|&&(_, a, b)| a == n || b == n).count() == 2);
    if !degree_two {
        return false;
    }
    let start = *nodes.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(n) = stack.pop() {
        for &(_, a, b) in arcs {
            for (p, q) in [(a, b), (b, a)] {
                if p == n && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
    }
    seen.len() == nodes.len()
}

/// If the arcs are two embedded 2-cycles, the face pairs of each.
fn two_bigons(arcs: &[(usize, usize, usize)]) -> Option<BTreeSet<BTreeSet<usize>>> {
    if arcs.len() != 4 || arcs.iter().any(|&(_, a, b)| a == b) {
        return None;
    }
    let key = |&(_, a, b): &(usize, usize, usize)| (a.min(b), a.max(b));
    let mut pairs = BTreeSet::new();
    for (i, arc) in arcs.iter().enumerate() {
        let partners: Vec<usize> = (0..4).filter(|&j| j != i && key(&arcs[j]) == key(arc)).collect();
        if partners.len() != 1 {
            return None;
        }
        pairs.insert(BTreeSet::from([arc.0, arcs[partners[0]].0]));
    }
    (pairs.len() == 2).then_some(pairs)
}

fn pairing(a: usize, b: usize, c: usize, d: usize) -> BTreeSet<BTreeSet<usize>> {
    BTreeSet::from([BTreeSet::from([a, b]), BTreeSet::from([c, d])])
}

/// Local quasi-flat-plane criteria, checked at every face of `e` at depth
/// at least `margin`.
///
/// Neighbours are put in cyclic order and rotated so that `F1` is the
/// principal neighbour with the smallest id; the principal neighbours must
/// then be exactly the odd positions.
pub fn check_quasi_flat_plane(x: &TwoComplex, e: &Subcomplex<'_>, margin: usize) -> Result<FlatCheck> {
    let interior = Interior::of(e);
    let faces = interior.interior_faces(e, margin)?;
    let mut witnesses = Vec::new();
    let mut records = Vec::new();
    let mut vertex_records: std::collections::BTreeMap<usize, VertexRecord> = Default::default();
    for &f in &faces {
        let id = x.face_id(f);
        let nbrs = e.neighbors(f);
        if nbrs.len() != 8 {
            witnesses.push(format!("(1) face {id}: meets {} faces, expected 8", nbrs.len()));
            continue;
        }
        let mut order = match cyclic_order(x, f, &nbrs) {
            Ok(order) => order,
            Err(msg) => {
                witnesses.push(format!("(1) face {id}: {msg}"));
                continue;
            }
        };
        let principal = principal_neighbors(x, f, &nbrs);
        let first = order
            .iter()
            .position(|c| principal.contains(c) && principal.iter().all(|p| x.face_id(*p) >= x.face_id(*c)));
        let Some(first) = first else {
            witnesses.push(format!("(1) face {id}: no neighbour has a trace outside the others"));
            continue;
        };
        order.rotate_left(first);
        // F_k = order[k - 1]
        let nb = |k: usize| order[(k + 7) % 8];
        let odd: BTreeSet<usize> = [1, 3, 5, 7].map(nb).into_iter().collect();
        if principal.iter().copied().collect::<BTreeSet<_>>() != odd {
            witnesses.push(format!(
                "(1) face {id}: principal neighbours [{}] do not alternate",
                face_list(x, principal.iter().copied())
            ));
            continue;
        }
        records.push(NeighborRecord {
            face: id.to_string(),
            cyclic: order.iter().map(|&g| x.face_id(g).to_string()).collect(),
        });

        // (2)
        let covered = [1, 3, 5, 7]
            .iter()
            .fold(Closure::default(), |acc, &k| acc.union(&x.intersection(&[f, nb(k)])));
        if covered != *x.closure(f) {
            witnesses.push(format!("(2) face {id}: F1, F3, F5, F7 do not cover the boundary"));
        }
        // (3)
        for k in [2, 4, 6, 8] {
            if x.intersection(&[f, nb(k)]) != x.intersection(&[nb(k - 1), nb(k + 1)]) {
                witnesses.push(format!(
                    "(3) face {id}: F ∩ {} differs from {} ∩ {}",
                    x.face_id(nb(k)),
                    x.face_id(nb(k - 1)),
                    x.face_id(nb(k + 1))
                ));
            }
        }
        // (4)
        for a in 1..=8 {
            for b in a + 1..=8 {
                for c in b + 1..=8 {
                    for d in c + 1..=8 {
                        if !x.intersection(&[f, nb(a), nb(b), nb(c), nb(d)]).is_empty() {
                            witnesses.push(format!(
                                "(4) face {id}: nonempty intersection with {}",
                                face_list(x, [nb(a), nb(b), nb(c), nb(d)])
                            ));
                        }
                    }
                }
            }
        }
        // (5)
        for &v in &x.closure(f).vertices {
            let delta = e.valence(v);
            let faces_at_v = e.faces_at_vertex(v).len();
            if delta < 3 {
                vertex_records.entry(v).or_insert_with(|| VertexRecord {
                    vertex: x.vertex_id(v).to_string(),
                    valence: delta,
                    faces: faces_at_v,
                    class: "valence 2".into(),
                });
                continue;
            }
            match classify_vertex(x, e, f, v, delta, &nb) {
                Ok(class) => {
                    vertex_records.entry(v).or_insert_with(|| VertexRecord {
                        vertex: x.vertex_id(v).to_string(),
                        valence: delta,
                        faces: faces_at_v,
                        class,
                    });
                }
                Err(msg) => witnesses.push(format!("(5) face {id}, vertex {}: {msg}", x.vertex_id(v))),
            }
        }
    }
    Ok(FlatCheck::finish(witnesses, || {
        FlatCertificate::new(
            FlatKind::QuasiFlatPlane,
            e,
            margin,
            records,
            vertex_records.into_values().collect(),
        )
    }))
}

fn classify_vertex(
    x: &TwoComplex,
    e: &Subcomplex<'_>,
    f: usize,
    v: usize,
    delta: usize,
    nb: &dyn Fn(usize) -> usize,
) -> std::result::Result<String, String> {
    let single = Closure {
        vertices: BTreeSet::from([v]),
        edges: BTreeSet::new(),
    };
    match delta {
        4 => {
            let k = [2, 4, 6, 8]
                .into_iter()
                .find(|&k| x.intersection(&[f, nb(k)]) == single)
                .ok_or("valence 4 but no even neighbour meets F in exactly this vertex")?;
            let arcs = restricted_link(x, e.faces(), v);
            let expected: BTreeSet<usize> = [f, nb(k - 1), nb(k), nb(k + 1)].into_iter().collect();
            let faces: BTreeSet<usize> = arcs.iter().map(|a| a.0).collect();
            if arcs.len() == 4 && is_single_cycle(&arcs) && faces == expected {
                Ok(format!("valence 4, link 4-cycle at F{k}"))
            } else {
                Err(format!(
                    "link is not the 4-cycle through F, F{}, F{k}, F{}",
                    k - 1,
                    k + 1
                ))
            }
        }
        3 => {
            for k in [2, 4, 6, 8] {
                let trace = x.intersection(&[f, nb(k)]);
                if trace.edges.len() != 1 || trace.vertices.len() != 2 || !trace.vertices.contains(&v) {
                    continue;
                }
                let other = *trace.vertices.iter().find(|&&w| w != v).unwrap();
                if e.valence(other) != 3 {
                    return Err(format!(
                        "partner vertex {} has valence {}",
                        x.vertex_id(other),
                        e.valence(other)
                    ));
                }
                let p = pairing(f, nb(k - 1), nb(k), nb(k + 1));
                let q = pairing(f, nb(k + 1), nb(k), nb(k - 1));
                let here = two_bigons(&restricted_link(x, e.faces(), v));
                let there = two_bigons(&restricted_link(x, e.faces(), other));
                return match (here, there) {
                    (Some(a), Some(b)) if (a == p && b == q) || (a == q && b == p) => {
                        Ok(format!("valence 3, paired with {} along F{k}", x.vertex_id(other)))
                    }
                    _ => Err(format!("links of the pair along F{k} are not the expected 2-cycles")),
                };
            }
            Err("valence 3 but no even neighbour meets F in an edge at this vertex".into())
        }
        d => Err(format!("valence {d}")),
    }
}
