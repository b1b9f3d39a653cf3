use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{Subcomplex, TwoComplex};
use crate::error::Result;
use crate::io::serialize_complex;
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlatKind {
    Triangular,
    HexagonalFlatPlane,
    QuasiFlatPlane,
}

impl FlatKind {
    pub fn name(self) -> &'static str {
        match self {
            FlatKind::Triangular => "triangular",
            FlatKind::HexagonalFlatPlane => "hexagonal-flat-plane",
            FlatKind::QuasiFlatPlane => "quasi-flat-plane",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborRecord {
    pub face: String,
    /// Neighbours in cyclic order around `face`.
    pub cyclic: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub vertex: String,
    pub valence: usize,
    pub faces: usize,
    pub class: String,
}

/// Evidence that a subcomplex satisfies one of the local plane criteria on
/// its interior. Everything in it can be recomputed from the face list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatCertificate {
    pub kind: FlatKind,
    pub parent: String,
    pub margin: usize,
    pub faces: Vec<String>,
    pub subcomplex: String,
    pub neighbors: Vec<NeighborRecord>,
    pub vertices: Vec<VertexRecord>,
}

impl FlatCertificate {
    pub(crate) fn new(
        kind: FlatKind,
        e: &Subcomplex<'_>,
        margin: usize,
        neighbors: Vec<NeighborRecord>,
        vertices: Vec<VertexRecord>,
    ) -> Self {
        Self {
            kind,
            parent: e.parent().name().to_string(),
            margin,
            faces: e.face_ids(),
            subcomplex: serialize_complex(&e.to_complex()),
            neighbors,
            vertices,
        }
    }

    pub fn subcomplex_in<'a>(&self, x: &'a TwoComplex) -> Result<Subcomplex<'a>> {
        Subcomplex::from_face_ids(x, &self.faces)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Outcome of a plane checker: the report, plus a certificate when it holds.
#[derive(Debug, Clone)]
pub struct FlatCheck {
    pub report: CheckReport,
    pub certificate: Option<FlatCertificate>,
}

impl FlatCheck {
    pub(crate) fn finish(witnesses: Vec<String>, make: impl FnOnce() -> FlatCertificate) -> Self {
        if witnesses.is_empty() {
            Self {
                report: CheckReport::holds(),
                certificate: Some(make()),
            }
        } else {
            Self {
                report: CheckReport::violated(witnesses),
                certificate: None,
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.report.is_holds()
    }
}

/// Ids of a face set, for witnesses.
pub(crate) fn face_list(x: &TwoComplex, faces: impl IntoIterator<Item = usize>) -> String {
    faces.into_iter().map(|f| x.face_id(f)).collect::<Vec<_>>().join(", ")
}

/// Vertices of the given faces.
pub(crate) fn vertices_of(x: &TwoComplex, faces: &[usize]) -> BTreeSet<usize> {
    faces
        .iter()
        .flat_map(|&f| x.closure(f).vertices.iter().copied())
        .collect()
}
