use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::{link_of, Subcomplex, TwoComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Intersection graph of the faces of a subcomplex.
#[derive(Debug, Clone)]
pub struct GalleryGraph {
    faces: Vec<usize>,
    pos: BTreeMap<usize, usize>,
    graph: Graph,
}

impl GalleryGraph {
    pub fn of(e: &Subcomplex<'_>) -> Self {
        let x = e.parent();
        let faces: Vec<usize> = e.faces().iter().copied().collect();
        let pos: BTreeMap<usize, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut graph = Graph::new(faces.iter().map(|&f| x.face_id(f).to_string()).collect());
        for (i, &f) in faces.iter().enumerate() {
            for g in e.neighbors(f) {
                graph.add_edge(i, pos[&g]);
            }
        }
        Self { faces, pos, graph }
    }

    pub fn whole(x: &TwoComplex) -> Self {
        Self::of(&Subcomplex::whole(x))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn node(&self, face: usize) -> Option<usize> {
        self.pos.get(&face).copied()
    }

    /// Hop distances from `face` keyed by parent face index.
    pub fn distances_from(&self, face: usize) -> BTreeMap<usize, usize> {
        match self.node(face) {
            None => BTreeMap::new(),
            Some(n) => self
                .graph
                .distances_from(n)
                .into_iter()
                .enumerate()
                .filter_map(|(i, d)| d.map(|d| (self.faces[i], d)))
                .collect(),
        }
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        let (na, nb) = match (self.node(a), self.node(b)) {
            (Some(na), Some(nb)) => (na, nb),
            _ => {
                return Err(Error::UnknownCell(format!(
                    "face index {a} or {b} outside the subcomplex"
                )))
            }
        };
        self.graph.distance(na, nb)
    }
}

/// Gallery distance in the hop convention: cells in a shortest gallery
/// minus one.
pub fn gallery_distance(x: &TwoComplex, f1: usize, f2: usize) -> Result<usize> {
    GalleryGraph::whole(x).distance(f1, f2)
}

/// Faces at hop distance at most `radius` from `center`.
pub fn gallery_ball(x: &TwoComplex, center: usize, radius: usize) -> BTreeSet<usize> {
    GalleryGraph::whole(x)
        .distances_from(center)
        .into_iter()
        .filter(|&(_, d)| d <= radius)
        .map(|(f, _)| f)
        .collect()
}

/// Vertices of `x` whose link has a node of degree below two, i.e. which
/// sit on the boundary of the patch.
pub fn open_vertices(x: &TwoComplex) -> BTreeSet<usize> {
    (0..x.vertex_count())
        .filter(|&v| {
            let link = link_of(x, v).expect("vertex in range");
            (0..link.nodes.len()).any(|n| link.degree(n) < 2)
        })
        .collect()
}

/// Distance of each face of a subcomplex from its rim.
///
/// The rim consists of the faces of `E` that contain an open vertex of the
/// parent or meet a face of the parent lying outside `E`. A face of the
/// parent counts as outside when it is not in `E` and its gallery component
/// in the complement of `E` reaches the patch boundary; bounded complementary
/// components are holes and do not shield nearby faces from the checks.
#[derive(Debug, Clone)]
pub struct Interior {
    depth: BTreeMap<usize, usize>,
    has_rim: bool,
}

impl Interior {
    pub fn of(e: &Subcomplex<'_>) -> Self {
        let x = e.parent();
        let open = open_vertices(x);
        let touches_open = |f: usize| x.closure(f).vertices.iter().any(|v| open.contains(v));
        let complement: Vec<usize> = (0..x.face_count()).filter(|f| !e.contains_face(*f)).collect();
        let mut outside: BTreeSet<usize> = BTreeSet::new();
        let mut queue: VecDeque<usize> = complement.iter().copied().filter(|&f| touches_open(f)).collect();
        outside.extend(queue.iter().copied());
        while let Some(f) = queue.pop_front() {
            for g in x.face_neighbors(f) {
                if !e.contains_face(g) && outside.insert(g) {
                    queue.push_back(g);
                }
            }
        }
        let rim: Vec<usize> = e
            .faces()
            .iter()
            .copied()
            .filter(|&f| touches_open(f) || x.face_neighbors(f).iter().any(|g| outside.contains(g)))
            .collect();
        let mut depth: BTreeMap<usize, usize> = rim.iter().map(|&f| (f, 0)).collect();
        let mut queue: VecDeque<usize> = rim.iter().copied().collect();
        while let Some(f) = queue.pop_front() {
            let d = depth[&f];
            for g in e.neighbors(f) {
                if let std::collections::btree_map::Entry::Vacant(slot) = depth.entry(g) {
                    slot.insert(d + 1);
                    queue.push_back(g);
                }
            }
        }
        Self {
            depth,
            has_rim: !rim.is_empty(),
        }
    }

    /// `None` when the face cannot reach the rim (closed components).
    pub fn depth(&self, f: usize) -> Option<usize> {
        self.depth.get(&f).copied()
    }

    pub fn max_depth(&self) -> Option<usize> {
        if self.has_rim {
            self.depth.values().max().copied()
        } else {
            None
        }
    }

    pub fn is_interior(&self, f: usize, margin: usize) -> bool {
        self.depth(f).is_none_or(|d| d >= margin)
    }

    /// Faces of `e` at depth at least `margin`; errors when there are none.
    pub fn interior_faces(&self, e: &Subcomplex<'_>, margin: usize) -> Result<Vec<usize>> {
        let faces: Vec<usize> = e
            .faces()
            .iter()
            .copied()
            .filter(|&f| self.is_interior(f, margin))
            .collect();
        if faces.is_empty() {
            return Err(Error::MarginTooLarge {
                margin,
                depth: self.max_depth().unwrap_or(0),
            });
        }
        Ok(faces)
    }
}
