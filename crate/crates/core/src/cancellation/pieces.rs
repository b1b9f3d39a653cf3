use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::complex::{Letter, TwoComplex};
use crate::error::{Error, Result};

/// A path read off a face boundary: `len` letters from `start`, forwards or
/// backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceOccurrence {
    pub face: usize,
    pub start: usize,
    pub len: usize,
    pub forward: bool,
}

impl PieceOccurrence {
    pub fn path(&self, x: &TwoComplex) -> Vec<Letter> {
        x.word(self.face).read(self.start, self.len, self.forward)
    }

    /// The whole boundary read from this occurrence. Two occurrences are the
    /// same way of lying in a 2-cell exactly when these readings agree.
    pub fn full_reading(&self, x: &TwoComplex) -> Vec<Letter> {
        let w = x.word(self.face);
        w.read(self.start, w.len(), self.forward)
    }
}

/// A maximal piece: its path and all occurrences of that path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub path: Vec<Letter>,
    pub occurrences: Vec<PieceOccurrence>,
}

impl Piece {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }
}

/// Every path that is a piece, keyed by its canonical orientation, together
/// with the maximal ones.
#[derive(Debug, Clone, Default)]
pub struct PieceSet {
    pub maximal: Vec<Piece>,
    all: BTreeSet<Vec<Letter>>,
}

impl PieceSet {
    /// Whether the given path (in either orientation) is a piece.
    pub fn is_piece(&self, path: &[Letter]) -> bool {
        self.all.contains(&canonical(path))
    }

    pub fn piece_count(&self) -> usize {
        self.all.len()
    }

    pub fn max_length(&self) -> usize {
        self.maximal.iter().map(Piece::len).max().unwrap_or(0)
    }

    /// For each boundary position of `f`, the length of the longest piece
    /// starting there in the forward direction (0 if none).
    pub fn longest_from(&self, x: &TwoComplex, f: usize) -> Vec<usize> {
        let w = x.word(f);
        let n = w.len();
        (0..n)
            .map(|s| {
                (1..n)
                    .take_while(|&len| self.is_piece(&w.read(s, len, true)))
                    .last()
                    .unwrap_or(0)
            })
            .collect()
    }
}

fn reverse_path(path: &[Letter]) -> Vec<Letter> {
    path.iter().rev().map(|l| l.inverse()).collect()
}

fn canonical(path: &[Letter]) -> Vec<Letter> {
    let rev = reverse_path(path);
    if rev.as_slice() < path {
        rev
    } else {
        path.to_vec()
    }
}

/// Distinct full readings of a path's occurrences, and the occurrences.
type Occurrences = (BTreeSet<Vec<Letter>>, Vec<PieceOccurrence>);

/// Enumerates all pieces and the maximal ones with their occurrences.
pub fn enumerate_pieces(x: &TwoComplex) -> PieceSet {
    // path -> distinct full readings of its occurrences, plus the occurrences
    let mut table: HashMap<Vec<Letter>, Occurrences> = HashMap::new();
    for f in 0..x.face_count() {
        let n = x.word(f).len();
        for start in 0..n {
            for forward in [true, false] {
                let occ_full = PieceOccurrence {
                    face: f,
                    start,
                    len: n,
                    forward,
                };
                let full = occ_full.full_reading(x);
                for len in 1..n {
                    let occ = PieceOccurrence { len, ..occ_full };
                    let entry = table.entry(full[..len].to_vec()).or_default();
                    entry.0.insert(full.clone());
                    entry.1.push(occ);
                }
            }
        }
    }
    let all: BTreeSet<Vec<Letter>> = table
        .iter()
        .filter(|(_, (readings, _))| readings.len() >= 2)
        .map(|(path, _)| canonical(path))
        .collect();

    let mut maximal = Vec::new();
    for path in &all {
        let (_, occurrences) = &table[path];
        let extends = occurrences.iter().any(|occ| {
            let w = x.word(occ.face);
            if occ.len + 1 >= w.len() {
                return false;
            }
            let longer_after = PieceOccurrence {
                len: occ.len + 1,
                ..*occ
            };
            let n = w.len();
            let back = if occ.forward { n - 1 } else { 1 };
            let longer_before = PieceOccurrence {
                start: (occ.start + back) % n,
                len: occ.len + 1,
                ..*occ
            };
            all.contains(&canonical(&longer_after.path(x))) || all.contains(&canonical(&longer_before.path(x)))
        });
        if !extends {
            let mut occurrences = occurrences.clone();
            occurrences.sort();
            maximal.push(Piece {
                path: path.clone(),
                occurrences,
            });
        }
    }
    PieceSet { maximal, all }
}

/// Breakpoints partitioning a face boundary into pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceCover {
    pub face: usize,
    pub breakpoints: Vec<usize>,
    pub count: usize,
}

/// Minimum cover of `∂f` by pieces, or `None` when some boundary edge lies in
/// no piece. Greedy from every start position; pieces are closed under
/// subpaths so the best greedy run is optimal.
pub fn min_piece_cover(x: &TwoComplex, pieces: &PieceSet, f: usize) -> Result<Option<PieceCover>> {
    if f >= x.face_count() {
        return Err(Error::UnknownCell(format!("face index {f}")));
    }
    let longest = pieces.longest_from(x, f);
    if longest.contains(&0) {
        return Ok(None);
    }
    let n = longest.len();
    let mut best: Option<Vec<usize>> = None;
    for s0 in 0..n {
        let mut breaks = Vec::new();
        let mut covered = 0;
        while covered < n {
            let pos = (s0 + covered) % n;
            breaks.push(pos);
            covered += longest[pos].min(n - covered);
        }
        if best.as_ref().is_none_or(|b| breaks.len() < b.len()) {
            best = Some(breaks);
        }
    }
    Ok(best.map(|mut breakpoints| {
        let count = breakpoints.len();
        breakpoints.sort_unstable();
        PieceCover {
            face: f,
            breakpoints,
            count,
        }
    }))
}

/// Cover counts for every face, `None` for faces without a cover.
pub fn cover_counts(x: &TwoComplex, pieces: &PieceSet) -> BTreeMap<usize, Option<usize>> {
    (0..x.face_count())
        .map(|f| {
            (
                f,
                min_piece_cover(x, pieces, f).expect("face in range").map(|c| c.count),
            )
        })
        .collect()
}
