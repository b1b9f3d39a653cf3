#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use smallcancel::generators::{generate, Family, KeepRule, PatchSpec};
use smallcancel::{Letter, TwoComplex};

pub fn patch(family: Family, radius: usize) -> TwoComplex {
    generate(PatchSpec { family, radius }).unwrap().complex
}

pub fn uncollapsed() -> Family {
    Family::QuasiFlat(KeepRule::All)
}

pub fn all_families() -> Vec<Family> {
    vec![
        Family::Triangular,
        Family::Square,
        Family::Hexagonal,
        uncollapsed(),
        Family::PaperExample,
    ]
}

fn reversed(path: &[Letter]) -> Vec<Letter> {
    path.iter().rev().map(|l| Letter::new(l.edge, !l.forward)).collect()
}

fn canonical(path: &[Letter]) -> Vec<Letter> {
    let r = reversed(path);
    if r.as_slice() < path {
        r
    } else {
        path.to_vec()
    }
}

/// Subword of the cyclic boundary of `f` covering positions `start..start+len`.
pub fn arc(x: &TwoComplex, f: usize, start: usize, len: usize) -> Vec<Letter> {
    let w = x.word(f).letters();
    (0..len).map(|k| w[(start + k) % w.len()]).collect()
}

/// Pieces by brute force: a path is a piece when it covers two different
/// arcs of face boundaries. Valid for patches whose faces are embedded and
/// pairwise distinct, where that is the same as two inequivalent occurrences.
pub fn oracle_pieces(x: &TwoComplex) -> BTreeMap<Vec<Letter>, BTreeSet<(usize, usize)>> {
    let mut seen: BTreeMap<Vec<Letter>, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for f in 0..x.face_count() {
        let n = x.word(f).len();
        for len in 1..n {
            for start in 0..n {
                seen.entry(canonical(&arc(x, f, start, len)))
                    .or_default()
                    .insert((f, start));
            }
        }
    }
    seen.retain(|_, arcs| arcs.len() >= 2);
    seen
}

/// Minimum number of pieces whose concatenation is the boundary of `f`, by
/// trying every set of cut positions.
pub fn oracle_cover(
    x: &TwoComplex,
    pieces: &BTreeMap<Vec<Letter>, BTreeSet<(usize, usize)>>,
    f: usize,
) -> Option<usize> {
    let n = x.word(f).len();
    assert!(n <= 16, "face too long for the exhaustive cover");
    let mut best = None;
    for mask in 1u32..(1 << n) {
        let cuts: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let ok = (0..cuts.len()).all(|k| {
            let start = cuts[k];
            let end = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + n };
            let len = end - start;
            len < n && pieces.contains_key(&canonical(&arc(x, f, start, len)))
        });
        if ok && best.is_none_or(|b| cuts.len() < b) {
            best = Some(cuts.len());
        }
    }
    best
}

pub fn face_vertices(x: &TwoComplex, f: usize) -> BTreeSet<usize> {
    x.word(f)
        .letters()
        .iter()
        .flat_map(|l| {
            let e = &x.edges()[l.edge];
            [e.from, e.to]
        })
        .collect()
}

/// Hop distances between faces that share a vertex, by plain BFS over
/// vertex sets.
pub fn oracle_gallery(x: &TwoComplex, faces: &BTreeSet<usize>, from: usize) -> BTreeMap<usize, usize> {
    let verts: BTreeMap<usize, BTreeSet<usize>> = faces.iter().map(|&f| (f, face_vertices(x, f))).collect();
    let mut dist = BTreeMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        for (&g, vg) in &verts {
            if !dist.contains_key(&g) && !verts[&f].is_disjoint(vg) {
                dist.insert(g, dist[&f] + 1);
                queue.push_back(g);
            }
        }
    }
    dist
}

/// Unweighted BFS on an adjacency list.
pub fn bfs(adj: &BTreeMap<String, BTreeSet<String>>, from: &str) -> BTreeMap<String, usize> {
    let mut dist = BTreeMap::from([(from.to_string(), 0)]);
    let mut queue = VecDeque::from([from.to_string()]);
    while let Some(a) = queue.pop_front() {
        for b in adj.get(&a).into_iter().flatten() {
            if !dist.contains_key(b) {
                dist.insert(b.clone(), dist[&a] + 1);
                queue.push_back(b.clone());
            }
        }
    }
    dist
}

/// Faces whose vertices all lie at depth at least `margin` from the open
/// vertices of the patch, measured in faces.
pub fn deep_faces(x: &TwoComplex, margin: usize) -> BTreeSet<usize> {
    let open = smallcancel::flats::open_vertices(x);
    let all: BTreeSet<usize> = (0..x.face_count()).collect();
    let rim: Vec<usize> = all
        .iter()
        .copied()
        .filter(|&f| !face_vertices(x, f).is_disjoint(&open))
        .collect();
    let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in &rim {
        for (f, d) in oracle_gallery(x, &all, r) {
            let e = depth.entry(f).or_insert(d);
            *e = (*e).min(d);
        }
    }
    all.into_iter()
        .filter(|f| depth.get(f).is_none_or(|&d| d >= margin))
        .collect()
}

/// Boundary word of the union of two faces sharing exactly one edge, as
/// signed edge ids.
pub fn merged_boundary(x: &TwoComplex, f: usize, g: usize) -> Vec<String> {
    let wf = x.word(f).letters().to_vec();
    let wg = x.word(g).letters().to_vec();
    let (i, j) = (0..wf.len())
        .flat_map(|i| (0..wg.len()).map(move |j| (i, j)))
        .find(|&(i, j)| wf[i].edge == wg[j].edge)
        .expect("faces share an edge");
    let mut out = Vec::new();
    for k in 1..wf.len() {
        out.push(wf[(i + k) % wf.len()]);
    }
    let same = wf[i].forward == wg[j].forward;
    for k in 1..wg.len() {
        // traverse g so that the shared edge cancels
        let l = if same {
            let p = (j + wg.len() - k) % wg.len();
            Letter::new(wg[p].edge, !wg[p].forward)
        } else {
            wg[(j + k) % wg.len()]
        };
        out.push(l);
    }
    out.iter()
        .map(|l| format!("{}{}", if l.forward { '+' } else { '-' }, x.edge_id(l.edge)))
        .collect()
}

pub fn square_complex(
    vertices: &[&str],
    edges: &[(&str, &str, &str)],
    squares: &[(&str, [&str; 4])],
) -> smallcancel::duals::SquareComplex {
    smallcancel::duals::SquareComplex::new(
        "violator",
        vertices.iter().map(|s| s.to_string()).collect(),
        edges
            .iter()
            .map(|(i, a, b)| (i.to_string(), a.to_string(), b.to_string()))
            .collect(),
        squares
            .iter()
            .map(|(i, es)| (i.to_string(), es.map(String::from)))
            .collect(),
    )
    .unwrap()
}

/// Two squares on the same four vertices, sharing three edges.
pub fn violator_b() -> smallcancel::duals::SquareComplex {
    square_complex(
        &["a", "b", "c", "d"],
        &[
            ("ab", "a", "b"),
            ("bc", "b", "c"),
            ("cd", "c", "d"),
            ("da", "d", "a"),
            ("da2", "d", "a"),
        ],
        &[("S", ["ab", "bc", "cd", "da"]), ("T", ["ab", "bc", "cd", "da2"])],
    )
}

/// Two squares sharing a corner path whose outer 4-cycle is not filled.
pub fn violator_c() -> smallcancel::duals::SquareComplex {
    square_complex(
        &["a", "b", "c", "d", "e"],
        &[
            ("ab", "a", "b"),
            ("bc", "b", "c"),
            ("cd", "c", "d"),
            ("da", "d", "a"),
            ("ce", "c", "e"),
            ("ea", "e", "a"),
        ],
        &[("S", ["ab", "bc", "cd", "da"]), ("T", ["ab", "bc", "ce", "ea"])],
    )
}

/// Three squares around a vertex of valence three.
pub fn violator_d() -> smallcancel::duals::SquareComplex {
    square_complex(
        &["w", "a", "b", "c", "p", "q", "r"],
        &[
            ("wa", "w", "a"),
            ("wb", "w", "b"),
            ("wc", "w", "c"),
            ("ap", "a", "p"),
            ("pb", "p", "b"),
            ("bq", "b", "q"),
            ("qc", "q", "c"),
            ("cr", "c", "r"),
            ("ra", "r", "a"),
        ],
        &[
            ("S1", ["wa", "ap", "pb", "wb"]),
            ("S2", ["wb", "bq", "qc", "wc"]),
            ("S3", ["wc", "cr", "ra", "wa"]),
        ],
    )
}
