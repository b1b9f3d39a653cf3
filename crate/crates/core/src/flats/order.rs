use std::collections::BTreeMap;

use crate::complex::TwoComplex;

/// Arc of `∂F` covered by a neighbour: positions `2k` are the vertex where
/// letter `k` starts, positions `2k + 1` the letter's edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryArc {
    pub start: usize,
    pub len: usize,
}

pub fn covered_arc(x: &TwoComplex, f: usize, c: usize) -> Result<BoundaryArc, String> {
    let w = x.word(f);
    let n = w.len();
    let other = x.closure(c);
    let covered: Vec<bool> = (0..2 * n)
        .map(|p| {
            let l = w.at(p / 2);
            if p % 2 == 0 {
                other.vertices.contains(&x.tail(l))
            } else {
                other.edges.contains(&l.edge)
            }
        })
        .collect();
    let total = covered.iter().filter(|&&b| b).count();
    if total == 0 {
        return Err(format!("face {} does not meet {}", x.face_id(c), x.face_id(f)));
    }
    if total == 2 * n {
        return Ok(BoundaryArc { start: 0, len: total });
    }
    let start = (0..2 * n)
        .find(|&p| covered[p] && !covered[(p + 2 * n - 1) % (2 * n)])
        .expect("arc start");
    let len = (0..2 * n).take_while(|&k| covered[(start + k) % (2 * n)]).count();
    if len != total {
        return Err(format!(
            "face {} meets {} in a disconnected set",
            x.face_id(c),
            x.face_id(f)
        ));
    }
    Ok(BoundaryArc { start, len })
}

/// Neighbours of `f` in the cyclic order of their arcs along `∂F`, rotated
/// so that the lexicographically smallest id comes first.
pub fn cyclic_order(x: &TwoComplex, f: usize, neighbors: &[usize]) -> Result<Vec<usize>, String> {
    let n4 = 4 * x.word(f).len();
    let mut keyed: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in neighbors {
        let arc = covered_arc(x, f, c)?;
        // doubled arc midpoint
        let key = (2 * arc.start + arc.len - 1) % n4;
        if let Some(prev) = keyed.insert(key, c) {
            return Err(format!(
                "faces {} and {} occupy the same position around {}",
                x.face_id(prev),
                x.face_id(c),
                x.face_id(f)
            ));
        }
    }
    let mut order: Vec<usize> = keyed.into_values().collect();
    if let Some(first) = (0..order.len()).min_by_key(|&i| x.face_id(order[i])) {
        order.rotate_left(first);
    }
    Ok(order)
}
