//! Systolic nerves and quadric quadrizations.

mod simplicial;
mod square;

pub use simplicial::{build_nerve, check_k_large, check_systolic_links, SimplicialComplex};
pub use square::{check_quadric_conditions, face_label, quadrize, vertex_label, Square, SquareComplex, SquareEdge};

use crate::error::Result;
use crate::graph::Graph;

/// Either dual of a 2-complex.
#[derive(Debug, Clone)]
pub enum DualComplex {
    Nerve(SimplicialComplex),
    Quadrization(SquareComplex),
}

impl DualComplex {
    pub fn skeleton(&self) -> Graph {
        match self {
            DualComplex::Nerve(k) => k.skeleton(),
            DualComplex::Quadrization(y) => y.skeleton(),
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            DualComplex::Nerve(k) => k.serialize(),
            DualComplex::Quadrization(y) => y.serialize(),
        }
    }

    /// Dual vertex standing for the 2-cell `face_id`.
    pub fn face_vertex(&self, face_id: &str) -> String {
        match self {
            DualComplex::Nerve(_) => face_id.to_string(),
            DualComplex::Quadrization(_) => face_label(face_id),
        }
    }
}

/// Shortest-path length between two labelled vertices of a 1-skeleton.
pub fn graph_distance(g: &Graph, a: &str, b: &str) -> Result<usize> {
    g.distance(g.node(a)?, g.node(b)?)
}
