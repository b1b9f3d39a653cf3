//! Pieces, the C(p) and T(q) conditions, the piece-length bound for T(q),
//! q >= 5, and the Helly-type intersection lemmas.

mod conditions;
mod helly;
mod pieces;

pub use conditions::{check_condition_c, check_condition_t, check_piece_length_bound};
pub use helly::{
    check_helly, check_strong_helly, helly_scan, is_vertex_or_path, pairwise_intersecting_tuples, strong_helly_scan,
    HellyMode, MAX_TUPLE,
};
pub use pieces::{cover_counts, enumerate_pieces, min_piece_cover, Piece, PieceCover, PieceOccurrence, PieceSet};
