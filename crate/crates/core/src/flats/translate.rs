use crate::complex::{Subcomplex, TwoComplex};
use crate::error::{Error, Result};
use crate::generators::translate_face_id;

use super::c3t6::check_flat_c3t6;
use super::certificate::{FlatCertificate, FlatCheck, FlatKind};
use super::plane::check_flat_plane_c6;
use super::quasi::check_quasi_flat_plane;

/// Re-runs the checker that produced `cert` on `e` with the same margin.
pub fn recheck(x: &TwoComplex, e: &Subcomplex<'_>, kind: FlatKind, margin: usize) -> Result<FlatCheck> {
    match kind {
        FlatKind::Triangular => check_flat_c3t6(x, e, margin),
        FlatKind::HexagonalFlatPlane => check_flat_plane_c6(x, e, margin),
        FlatKind::QuasiFlatPlane => check_quasi_flat_plane(x, e, margin),
    }
}

/// Shifts every face of the certificate by the lattice vector `shift` and
/// re-verifies the result. The returned check carries the shifted
/// certificate when it holds.
pub fn translate_subcomplex(x: &TwoComplex, cert: &FlatCertificate, shift: (i64, i64)) -> Result<FlatCheck> {
    let mut shifted = Vec::with_capacity(cert.faces.len());
    for id in &cert.faces {
        let moved = translate_face_id(id, shift).ok_or_else(|| Error::OutOfPatch(id.clone()))?;
        if x.face(&moved).is_err() {
            return Err(Error::OutOfPatch(moved));
        }
        shifted.push(moved);
    }
    let e = Subcomplex::from_face_ids(x, &shifted)?;
    recheck(x, &e, cert.kind, cert.margin)
}
