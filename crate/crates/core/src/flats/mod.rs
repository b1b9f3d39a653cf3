//! Gallery metric and local criteria for flats, flat planes and quasi-flat
//! planes, with the numbering construction and isometry checks.

mod c3t6;
mod certificate;
mod embedding;
mod gallery;
mod numbering;
mod order;
mod plane;
mod quasi;
mod translate;

pub use c3t6::{check_flat_c3t6, skeleton_graph};
pub use certificate::{FlatCertificate, FlatCheck, FlatKind, NeighborRecord, VertexRecord};
pub use embedding::{
    check_dual_flat, check_flat_embedding, hexagonal_nerve_coordinates, square_quadrization_coordinates, LatticePattern,
};
pub use gallery::{gallery_ball, gallery_distance, open_vertices, GalleryGraph, Interior};
pub use numbering::{numbering, Numbering, NumberingRule};
pub use order::{covered_arc, cyclic_order, BoundaryArc};
pub use plane::{check_flat_plane_c6, search_c6_certificates};
pub use quasi::{check_quasi_flat_plane, principal_neighbors};
pub use translate::{recheck, translate_subcomplex};
