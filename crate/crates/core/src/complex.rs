//! Combinatorial 2-complexes given by boundary words over directed edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::report::CheckReport;

/// One letter of a boundary word: an edge traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: usize,
    pub forward: bool,
}

impl Letter {
    pub fn new(edge: usize, forward: bool) -> Self {
        Self { edge, forward }
    }

    pub fn inverse(self) -> Self {
        Self {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

/// Cyclic sequence of letters attached along the boundary of a 2-cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryWord {
    letters: Vec<Letter>,
}

impl BoundaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at cyclic position `pos`.
    pub fn at(&self, pos: usize) -> Letter {
        self.letters[pos % self.letters.len()]
    }

    /// Reads `len` letters starting at `start`. Forward reads follow the word;
    /// backward reads walk it in reverse starting with the inverse of the
    /// letter at `start`.
    pub fn read(&self, start: usize, len: usize, forward: bool) -> Vec<Letter> {
        let n = self.letters.len();
        (0..len)
            .map(|k| {
                if forward {
                    self.letters[(start + k) % n]
                } else {
                    self.letters[(start + n * (len / n + 1) - k) % n].inverse()
                }
            })
            .collect()
    }

    /// The word reversed with every letter inverted.
    pub fn reversed(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// True when the words agree up to cyclic rotation and full reversal.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let n = self.len();
        if n == 0 {
            return true;
        }
        (0..n).any(|s| other.read(s, n, true) == self.letters || other.read(s, n, false) == self.letters)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub word: BoundaryWord,
}

/// Closed cell as a set of vertices and edges, used for intersections.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Closure {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<usize>,
}

impl Closure {
    pub fn intersect(&self, other: &Self) -> Self {
        Self {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertices.len() == 1 && self.edges.is_empty()
    }
}

/// A finite polygonal 2-complex. Cells are stored sorted by identifier, so
/// internal indices follow the canonical order.
#[derive(Debug, Clone)]
pub struct TwoComplex {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    vertex_index: BTreeMap<String, usize>,
    edge_index: BTreeMap<String, usize>,
    face_index: BTreeMap<String, usize>,
    closures: Vec<Closure>,
    vertex_faces: Vec<Vec<usize>>,
    edge_faces: Vec<Vec<usize>>,
}

/// Edge description by identifiers: `(id, from, to)`.
pub type EdgeSpec = (String, String, String);
/// Face description by identifiers: `(id, [(edge, forward)])`.
pub type FaceSpec = (String, Vec<(String, bool)>);

impl TwoComplex {
    /// Builds a complex after checking that all references resolve. Cyclic
    /// closedness and immersion are checked by [`validate_complex`].
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: Vec<EdgeSpec>,
        faces: Vec<FaceSpec>,
    ) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort();
        let vertex_index = index_unique(&vertices, "vertex")?;

        let mut edges = edges;
        edges.sort();
        let edge_ids: Vec<String> = edges.iter().map(|e| e.0.clone()).collect();
        let edge_index = index_unique(&edge_ids, "edge")?;
        let edges = edges
            .into_iter()
            .map(|(id, a, b)| {
                let lookup = |v: &String| {
                    vertex_index.get(v).copied().ok_or_else(|| Error::Validation {
                        cell: id.clone(),
                        message: format!("unknown endpoint vertex `{v}`"),
                    })
                };
                Ok(Edge {
                    from: lookup(&a)?,
                    to: lookup(&b)?,
                    id,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut faces = faces;
        faces.sort_by(|a, b| a.0.cmp(&b.0));
        let face_ids: Vec<String> = faces.iter().map(|f| f.0.clone()).collect();
        let face_index = index_unique(&face_ids, "face")?;
        let faces = faces
            .into_iter()
            .map(|(id, word)| {
                if word.is_empty() {
                    return Err(Error::Validation {
                        cell: id,
                        message: "empty boundary word".into(),
                    });
                }
                let letters = word
                    .iter()
                    .map(|(e, fwd)| {
                        edge_index
                            .get(e)
                            .map(|&i| Letter::new(i, *fwd))
                            .ok_or_else(|| Error::Validation {
                                cell: id.clone(),
                                message: format!("unknown edge `{e}`"),
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Face {
                    id,
                    word: BoundaryWord::new(letters),
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let mut complex = Self {
            name: name.into(),
            vertices,
            edges,
            faces,
            vertex_index,
            edge_index,
            face_index,
            closures: Vec::new(),
            vertex_faces: Vec::new(),
            edge_faces: Vec::new(),
        };
        complex.index_incidences();
        Ok(complex)
    }

    fn index_incidences(&mut self) {
        let mut vertex_faces = vec![BTreeSet::new(); self.vertices.len()];
        let mut edge_faces = vec![BTreeSet::new(); self.edges.len()];
        let mut closures = Vec::with_capacity(self.faces.len());
        for (f, face) in self.faces.iter().enumerate() {
            let mut closure = Closure::default();
            for l in face.word.letters() {
                let e = &self.edges[l.edge];
                closure.edges.insert(l.edge);
                closure.vertices.insert(e.from);
                closure.vertices.insert(e.to);
                edge_faces[l.edge].insert(f);
                vertex_faces[e.from].insert(f);
                vertex_faces[e.to].insert(f);
            }
            closures.push(closure);
        }
        self.closures = closures;
        self.vertex_faces = vertex_faces.into_iter().map(|s| s.into_iter().collect()).collect();
        self.edge_faces = edge_faces.into_iter().map(|s| s.into_iter().collect()).collect();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    pub fn face_id(&self, f: usize) -> &str {
        &self.faces[f].id
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("vertex `{id}`")))
    }

    pub fn edge(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("edge `{id}`")))
    }

    pub fn face(&self, id: &str) -> Result<usize> {
        self.face_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("face `{id}`")))
    }

    pub fn word(&self, f: usize) -> &BoundaryWord {
        &self.faces[f].word
    }

    /// Start vertex of a letter.
    pub fn tail(&self, l: Letter) -> usize {
        let e = &self.edges[l.edge];
        if l.forward {
            e.from
        } else {
            e.to
        }
    }

    /// End vertex of a letter.
    pub fn head(&self, l: Letter) -> usize {
        let e = &self.edges[l.edge];
        if l.forward {
            e.to
        } else {
            e.from
        }
    }

    pub fn closure(&self, f: usize) -> &Closure {
        &self.closures[f]
    }

    /// Faces whose closure contains vertex `v`, ascending.
    pub fn faces_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    /// Faces whose boundary uses edge `e`, ascending.
    pub fn faces_at_edge(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    /// Common intersection of the closures of `faces`.
    pub fn intersection(&self, faces: &[usize]) -> Closure {
        let mut iter = faces.iter();
        let Some(&first) = iter.next() else {
            return Closure::default();
        };
        iter.fold(self.closures[first].clone(), |acc, &f| acc.intersect(&self.closures[f]))
    }

    pub fn meets(&self, a: usize, b: usize) -> bool {
        !self.closures[a].vertices.is_disjoint(&self.closures[b].vertices)
    }

    /// Faces other than `f` whose closure meets that of `f`, ascending.
    pub fn face_neighbors(&self, f: usize) -> Vec<usize> {
        let mut out = BTreeSet::new();
        for &v in &self.closures[f].vertices {
            out.extend(self.vertex_faces[v].iter().copied().filter(|&g| g != f));
        }
        out.into_iter().collect()
    }

    /// Valence: number of edge ends at `v` (loops count twice).
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.from == v) + usize::from(e.to == v))
            .sum()
    }

    /// Vertex adjacency lists of the 1-skeleton.
    pub fn skeleton_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for e in &self.edges {
            if e.from != e.to {
                adj[e.from].insert(e.to);
                adj[e.to].insert(e.from);
            }
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Induced complex on a face subset (closure of the selected faces).
    pub fn restrict(&self, faces: &BTreeSet<usize>) -> TwoComplex {
        let sub = Subcomplex::from_faces(self, faces.iter().copied());
        sub.to_complex()
    }
}

impl fmt::Display for TwoComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} vertices, {} edges, {} faces)",
            self.name,
            self.vertices.len(),
            self.edges.len(),
            self.faces.len()
        )
    }
}

fn index_unique(ids: &[String], kind: &str) -> Result<BTreeMap<String, usize>> {
    let mut map = BTreeMap::new();
    for (i, id) in ids.iter().enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return Err(Error::Validation {
                cell: id.clone(),
                message: format!("duplicate {kind} identifier"),
            });
        }
    }
    Ok(map)
}

/// Checks closedness and immersion of every boundary word and, with
/// `require_embedded`, that no boundary visits a vertex twice.
pub fn validate_complex(x: &TwoComplex, require_embedded: bool) -> CheckReport {
    let mut witnesses = Vec::new();
    for (f, face) in x.faces().iter().enumerate() {
        let w = x.word(f);
        let n = w.len();
        for k in 0..n {
            let (a, b) = (w.at(k), w.at(k + 1));
            if x.head(a) != x.tail(b) {
                witnesses.push(format!("face {}: not closed at position {k}", face.id));
            }
            if n > 1 && b == a.inverse() {
                witnesses.push(format!(
                    "face {}: immersion fails, edge {} backtracks at position {k}",
                    face.id,
                    x.edge_id(a.edge)
                ));
            }
        }
        if require_embedded {
            let mut seen = BTreeSet::new();
            for l in w.letters() {
                if !seen.insert(x.tail(*l)) {
                    witnesses.push(format!(
                        "face {}: not embedded, vertex {} visited twice",
                        face.id,
                        x.vertex_id(x.tail(*l))
                    ));
                    break;
                }
            }
        }
    }
    CheckReport::from_witnesses(witnesses)
}

/// Which end of an edge sits at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeEnd {
    Tail,
    Head,
}

/// A corner of a face at a vertex: the turn between boundary letters
/// `corner` and `corner + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkArc {
    pub face: usize,
    pub corner: usize,
    pub a: usize,
    pub b: usize,
}

/// Link of a vertex: nodes are edge ends, arcs are face corners.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    pub vertex: usize,
    pub nodes: Vec<(usize, EdgeEnd)>,
    pub arcs: Vec<LinkArc>,
}

impl LinkGraph {
    pub fn valence(&self) -> usize {
        self.nodes.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.arcs
            .iter()
            .map(|a| usize::from(a.a == node) + usize::from(a.b == node))
            .sum()
    }

    /// Embedded cycles with `min_len..=max_len` arcs, each given as a closed
    /// sequence of arc indices. A cycle is reported once.
    pub fn cycles(&self, min_len: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for start in 0..self.nodes.len() {
            let mut path_nodes = vec![start];
            let mut path_arcs = Vec::new();
            self.extend_cycles(
                start,
                &mut path_nodes,
                &mut path_arcs,
                min_len,
                max_len,
                &mut found,
                &mut out,
            );
        }
        out
    }

    /// Closed walks with `min_len..=max_len` arcs that never use the same
    /// arc twice in a row (cyclically). Each step is `(arc, node reached)`.
    /// A walk is reported once up to rotation and reversal.
    pub fn closed_walks(&self, min_len: usize, max_len: usize) -> Vec<Vec<(usize, usize)>> {
        let mut found = BTreeSet::new();
        let mut out = Vec::new();
        let mut walk = Vec::new();
        for start in 0..self.nodes.len() {
            self.extend_walks(start, start, &mut walk, min_len, max_len, &mut found, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_walks(
        &self,
        start: usize,
        current: usize,
        walk: &mut Vec<(usize, usize)>,
        min_len: usize,
        max_len: usize,
        found: &mut BTreeSet<Vec<(usize, usize)>>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if walk.len() == max_len {
            return;
        }
        for (i, arc) in self.arcs.iter().enumerate() {
            if walk.last().is_some_and(|&(prev, _)| prev == i) {
                continue;
            }
            let next = if arc.a == current {
                arc.b
            } else if arc.b == current {
                arc.a
            } else {
                continue;
            };
            walk.push((i, next));
            let len = walk.len();
            if next == start && len >= min_len && walk[0].0 != i {
                let key = walk_key(walk, start);
                if found.insert(key) {
                    out.push(walk.clone());
                }
            }
            self.extend_walks(start, next, walk, min_len, max_len, found, out);
            walk.pop();
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycles(
        &self,
        start: usize,
        path_nodes: &mut Vec<usize>,
        path_arcs: &mut Vec<usize>,
        min_len: usize,
        max_len: usize,
        found: &mut BTreeSet<Vec<usize>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let current = *path_nodes.last().unwrap();
        for (i, arc) in self.arcs.iter().enumerate() {
            if path_arcs.contains(&i) {
                continue;
            }
            let next = if arc.a == current {
                arc.b
            } else if arc.b == current {
                arc.a
            } else {
                continue;
            };
            if next == start && arc.a != arc.b {
                let len = path_arcs.len() + 1;
                if len >= min_len.max(2) && len <= max_len {
                    let mut key: Vec<usize> = path_arcs.clone();
                    key.push(i);
                    let mut sorted = key.clone();
                    sorted.sort_unstable();
                    if found.insert(sorted) {
                        out.push(key);
                    }
                }
                continue;
            }
            if next < start || path_nodes.contains(&next) || path_arcs.len() + 1 >= max_len {
                continue;
            }
            path_nodes.push(next);
            path_arcs.push(i);
            self.extend_cycles(start, path_nodes, path_arcs, min_len, max_len, found, out);
            path_nodes.pop();
            path_arcs.pop();
        }
    }
}

/// Smallest rotation of the walk or of its reversal.
fn walk_key(walk: &[(usize, usize)], start: usize) -> Vec<(usize, usize)> {
    let k = walk.len();
    let reversed: Vec<(usize, usize)> = (0..k)
        .rev()
        .map(|i| (walk[i].0, if i == 0 { start } else { walk[i - 1].1 }))
        .collect();
    let mut best = walk.to_vec();
    for w in [walk.to_vec(), reversed] {
        for r in 0..k {
            let mut rot = w.clone();
            rot.rotate_left(r);
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

/// Link of vertex `v`.
pub fn link_of(x: &TwoComplex, v: usize) -> Result<LinkGraph> {
    if v >= x.vertex_count() {
        return Err(Error::UnknownCell(format!("vertex index {v}")));
    }
    let mut nodes = Vec::new();
    for (e, edge) in x.edges().iter().enumerate() {
        if edge.from == v {
            nodes.push((e, EdgeEnd::Tail));
        }
        if edge.to == v {
            nodes.push((e, EdgeEnd::Head));
        }
    }
    let node_of = |l: Letter, at_head: bool| {
        let end = match (l.forward, at_head) {
            (true, true) | (false, false) => EdgeEnd::Head,
            _ => EdgeEnd::Tail,
        };
        nodes
            .iter()
            .position(|&n| n == (l.edge, end))
            .expect("edge end at vertex")
    };
    let mut arcs = Vec::new();
    for (f, face) in x.faces().iter().enumerate() {
        let w = &face.word;
        for k in 0..w.len() {
            let (l, next) = (w.at(k), w.at(k + 1));
            if x.head(l) == v {
                arcs.push(LinkArc {
                    face: f,
                    corner: k,
                    a: node_of(l, true),
                    b: node_of(next, false),
                });
            }
        }
    }
    Ok(LinkGraph { vertex: v, nodes, arcs })
}

/// A face subset with its induced closure.
#[derive(Debug, Clone)]
pub struct Subcomplex<'a> {
    parent: &'a TwoComplex,
    faces: BTreeSet<usize>,
    edges: BTreeSet<usize>,
    vertices: BTreeSet<usize>,
}

impl<'a> Subcomplex<'a> {
    pub fn from_faces(parent: &'a TwoComplex, faces: impl IntoIterator<Item = usize>) -> Self {
        let faces: BTreeSet<usize> = faces.into_iter().collect();
        let mut edges = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for &f in &faces {
            let c = parent.closure(f);
            edges.extend(c.edges.iter().copied());
            vertices.extend(c.vertices.iter().copied());
        }
        Self {
            parent,
            faces,
            edges,
            vertices,
        }
    }

    pub fn whole(parent: &'a TwoComplex) -> Self {
        Self::from_faces(parent, 0..parent.face_count())
    }

    pub fn from_face_ids<S: AsRef<str>>(parent: &'a TwoComplex, ids: &[S]) -> Result<Self> {
        let faces = ids
            .iter()
            .map(|id| parent.face(id.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(parent, faces))
    }

    pub fn parent(&self) -> &'a TwoComplex {
        self.parent
    }

    pub fn faces(&self) -> &BTreeSet<usize> {
        &self.faces
    }

    pub fn edges(&self) -> &BTreeSet<usize> {
        &self.edges
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn contains_face(&self, f: usize) -> bool {
        self.faces.contains(&f)
    }

    pub fn face_ids(&self) -> Vec<String> {
        self.faces.iter().map(|&f| self.parent.face_id(f).to_string()).collect()
    }

    /// Faces of the subcomplex meeting `f`, excluding `f`.
    pub fn neighbors(&self, f: usize) -> Vec<usize> {
        self.parent
            .face_neighbors(f)
            .into_iter()
            .filter(|g| self.faces.contains(g))
            .collect()
    }

    /// Faces of the subcomplex containing vertex `v`.
    pub fn faces_at_vertex(&self, v: usize) -> Vec<usize> {
        self.parent
            .faces_at_vertex(v)
            .iter()
            .copied()
            .filter(|g| self.faces.contains(g))
            .collect()
    }

    /// Valence of `v` counted over the edges of the subcomplex.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&e| {
                let edge = &self.parent.edges()[e];
                usize::from(edge.from == v) + usize::from(edge.to == v)
            })
            .sum()
    }

    /// Materializes the subcomplex as a standalone complex.
    pub fn to_complex(&self) -> TwoComplex {
        let x = self.parent;
        let vertices = self.vertices.iter().map(|&v| x.vertex_id(v).to_string()).collect();
        let edges = self
            .edges
            .iter()
            .map(|&e| {
                let edge = &x.edges()[e];
                (
                    edge.id.clone(),
                    x.vertex_id(edge.from).to_string(),
                    x.vertex_id(edge.to).to_string(),
                )
            })
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|&f| {
                let word = x
                    .word(f)
                    .letters()
                    .iter()
                    .map(|l| (x.edge_id(l.edge).to_string(), l.forward))
                    .collect();
                (x.face_id(f).to_string(), word)
            })
            .collect();
        TwoComplex::new(x.name(), vertices, edges, faces).expect("subcomplex of a valid complex")
    }
}
