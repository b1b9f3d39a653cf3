use crate::complex::{link_of, LinkArc, TwoComplex};
use crate::report::{CheckReport, Verdict};

use super::pieces::{enumerate_pieces, min_piece_cover, PieceOccurrence};

/// C(p): no face boundary is a concatenation of fewer than `p` pieces.
pub fn check_condition_c(x: &TwoComplex, p: usize) -> CheckReport {
    let pieces = enumerate_pieces(x);
    let witnesses = (0..x.face_count())
        .filter_map(|f| {
            let cover = min_piece_cover(x, &pieces, f).expect("face in range")?;
            (cover.count < p).then(|| {
                format!(
                    "face {}: boundary is a concatenation of {} pieces (breakpoints {:?})",
                    x.face_id(f),
                    cover.count,
                    cover.breakpoints
                )
            })
        })
        .collect();
    CheckReport::from_witnesses(witnesses)
}

/// Whether two corners meeting at a link node cancel: the shared edge sits
/// in both faces in the same way, so gluing them folds one cell onto itself.
fn corners_cancel(x: &TwoComplex, first: &LinkArc, second: &LinkArc, node_edge: usize) -> bool {
    let occurrence = |arc: &LinkArc| -> Option<PieceOccurrence> {
        let w = x.word(arc.face);
        let n = w.len();
        // the corner joins letters `corner` and `corner + 1`
        [arc.corner, (arc.corner + 1) % n].into_iter().find_map(|pos| {
            (w.at(pos).edge == node_edge).then_some(PieceOccurrence {
                face: arc.face,
                start: pos,
                len: 1,
                forward: w.at(pos).forward,
            })
        })
    };
    match (occurrence(first), occurrence(second)) {
        (Some(a), Some(b)) => {
            let w = x.word(a.face);
            let u = x.word(b.face);
            // align both readings so that they start with the same directed edge
            let ra = w.read(a.start, w.len(), true);
            let rb = u.read(b.start, u.len(), true);
            let rb_flipped = u.read(b.start, u.len(), false);
            let same_dir = w.at(a.start) == u.at(b.start);
            if same_dir {
                ra == rb
            } else {
                ra == rb_flipped
            }
        }
        _ => false,
    }
}

/// T(q) decided on vertex links: the corners around an internal vertex of
/// valence `h` in a disc diagram form a closed walk of length `h` in the
/// link, so every closed walk with `2 < h < q` that never doubles back along
/// one arc gives a diagram. Walks whose consecutive corners never cancel give
/// Violated; walks with a cancelling pair of distinct corners are reported as
/// Inconclusive.
pub fn check_condition_t(x: &TwoComplex, q: usize) -> CheckReport {
    if q <= 3 {
        return CheckReport::holds();
    }
    let mut violations = Vec::new();
    let mut ambiguous = Vec::new();
    for v in 0..x.vertex_count() {
        let link = link_of(x, v).expect("vertex in range");
        for walk in link.closed_walks(3, q - 1) {
            let h = walk.len();
            let cancelling = (0..h).any(|k| {
                let (a, node) = walk[k];
                let (b, _) = walk[(k + 1) % h];
                corners_cancel(x, &link.arcs[a], &link.arcs[b], link.nodes[node].0)
            });
            let faces: Vec<&str> = walk.iter().map(|&(i, _)| x.face_id(link.arcs[i].face)).collect();
            let text = format!(
                "vertex {}: link cycle of length {h} through faces [{}]",
                x.vertex_id(v),
                faces.join(", ")
            );
            if cancelling {
                ambiguous.push(text);
            } else {
                violations.push(text);
            }
        }
    }
    if !violations.is_empty() {
        CheckReport::violated(violations)
    } else if !ambiguous.is_empty() {
        CheckReport::inconclusive(ambiguous)
    } else {
        CheckReport::holds()
    }
}

/// For `q >= 5` and a T(q) complex every maximal piece has length one.
pub fn check_piece_length_bound(x: &TwoComplex, q: usize) -> CheckReport {
    if q < 5 {
        return CheckReport::error(format!("precondition: q = {q} < 5"));
    }
    let t = check_condition_t(x, q);
    if t.verdict != Verdict::Holds {
        return CheckReport::error(format!("precondition: T({q}) is {}", t.verdict));
    }
    let pieces = enumerate_pieces(x);
    let witnesses = pieces
        .maximal
        .iter()
        .filter(|p| p.len() > 1)
        .map(|p| {
            let edges: Vec<&str> = p.path.iter().map(|l| x.edge_id(l.edge)).collect();
            format!("piece of length {}: [{}]", p.len(), edges.join(", "))
        })
        .collect();
    CheckReport::from_witnesses(witnesses)
}
