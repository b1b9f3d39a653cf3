//! Finite patches of the periodic example complexes, and their torus
//! quotients. Cell identifiers carry lattice coordinates (`f_2_-1`,
//! `v_0_3_1`, ...), so lattice translations act on identifiers directly.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::complex::{validate_complex, TwoComplex};
use crate::error::{Error, Result};

/// Which vertical edges of the two-level grid survive collapsing.
#[derive(Clone, Copy)]
pub enum KeepRule {
    /// Collapse every vertical edge: the square tiling.
    None,
    /// Keep every vertical edge: the uncollapsed two-level complex.
    All,
    /// Keep the vertical edge at `(i, j)` iff both coordinates are even.
    BothEven,
    Custom(fn(i64, i64) -> bool),
}

impl KeepRule {
    pub fn keeps(&self, i: i64, j: i64) -> bool {
        match self {
            KeepRule::None => false,
            KeepRule::All => true,
            KeepRule::BothEven => i.rem_euclid(2) == 0 && j.rem_euclid(2) == 0,
            KeepRule::Custom(f) => f(i, j),
        }
    }
}

impl fmt::Debug for KeepRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeepRule::None => f.write_str("None"),
            KeepRule::All => f.write_str("All"),
            KeepRule::BothEven => f.write_str("BothEven"),
            KeepRule::Custom(_) => f.write_str("Custom"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Family {
    Triangular,
    Square,
    Hexagonal,
    QuasiFlat(KeepRule),
    PaperExample,
}

impl Family {
    fn keep_rule(&self) -> Option<KeepRule> {
        match self {
            Family::QuasiFlat(rule) => Some(*rule),
            Family::PaperExample => Some(KeepRule::BothEven),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Triangular => "triangular",
            Family::Square => "square",
            Family::Hexagonal => "hexagonal",
            Family::QuasiFlat(KeepRule::All) => "quasi-flat-uncollapsed",
            Family::QuasiFlat(_) => "quasi-flat",
            Family::PaperExample => "paper-example",
        }
    }

    /// Conditions that hold for the infinite complex by construction.
    pub fn assertions(&self) -> &'static [&'static str] {
        match self {
            Family::Triangular => &["simply-connected", "C(3)", "T(6)"],
            Family::Square | Family::PaperExample | Family::QuasiFlat(_) => &["simply-connected", "C(4)", "T(4)"],
            Family::Hexagonal => &["simply-connected", "C(6)"],
        }
    }

    fn base_face(&self) -> FaceKey {
        match self {
            Family::Triangular => FaceKey::new("fu", 0, 0),
            Family::Hexagonal => FaceKey::new("h", 0, 0),
            _ => FaceKey::new("f", 0, 0),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "triangular" => Family::Triangular,
            "square" => Family::Square,
            "hexagonal" => Family::Hexagonal,
            "paper-example" => Family::PaperExample,
            "quasi-flat" | "uncollapsed" => Family::QuasiFlat(KeepRule::All),
            other => return Err(Error::Precondition(format!("unknown family `{other}`"))),
        })
    }
}

/// A generated patch description.
#[derive(Debug, Clone, Copy)]
pub struct PatchSpec {
    pub family: Family,
    pub radius: usize,
}

/// A generated patch with the description that produced it.
#[derive(Debug, Clone)]
pub struct Patch {
    pub spec: PatchSpec,
    pub complex: TwoComplex,
}

impl Patch {
    pub fn assertions(&self) -> &'static [&'static str] {
        self.spec.family.assertions()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct FaceKey {
    kind: &'static str,
    i: i64,
    j: i64,
}

impl FaceKey {
    fn new(kind: &'static str, i: i64, j: i64) -> Self {
        Self { kind, i, j }
    }

    fn id(&self) -> String {
        format!("{}_{}_{}", self.kind, self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct VertexKey {
    kind: &'static str,
    a: i64,
    b: i64,
    level: Option<u8>,
}

impl VertexKey {
    fn plain(kind: &'static str, a: i64, b: i64) -> Self {
        Self {
            kind,
            a,
            b,
            level: None,
        }
    }

    fn id(&self) -> String {
        match self.level {
            Some(k) => format!("{}_{}_{}_{}", self.kind, self.a, self.b, k),
            None => format!("{}_{}_{}", self.kind, self.a, self.b),
        }
    }
}

/// Boundary vertex cycle of a lattice face in the infinite complex.
fn face_cycle(family: &Family, face: &FaceKey) -> Vec<VertexKey> {
    let (i, j) = (face.i, face.j);
    let v = |a, b| VertexKey::plain("v", a, b);
    match family {
        Family::Square => vec![v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)],
        Family::Triangular => match face.kind {
            "fu" => vec![v(i, j), v(i + 1, j), v(i, j + 1)],
            _ => vec![v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)],
        },
        Family::Hexagonal => {
            let up = |a, b| VertexKey::plain("tu", a, b);
            let down = |a, b| VertexKey::plain("td", a, b);
            vec![
                up(i, j),
                down(i - 1, j),
                up(i - 1, j),
                down(i - 1, j - 1),
                up(i, j - 1),
                down(i, j - 1),
            ]
        }
        Family::QuasiFlat(_) | Family::PaperExample => {
            let rule = family.keep_rule().expect("two-level family");
            let lv = |a: i64, b: i64, k: u8| {
                if rule.keeps(a, b) {
                    VertexKey {
                        kind: "v",
                        a,
                        b,
                        level: Some(k),
                    }
                } else {
                    v(a, b)
                }
            };
            let raw = [
                lv(i, j, 0),
                lv(i + 1, j, 0),
                lv(i + 1, j, 1),
                lv(i + 1, j + 1, 1),
                lv(i + 1, j + 1, 0),
                lv(i, j + 1, 0),
                lv(i, j + 1, 1),
                lv(i, j, 1),
            ];
            let mut cycle: Vec<VertexKey> = Vec::new();
            for key in raw {
                if cycle.last() != Some(&key) {
                    cycle.push(key);
                }
            }
            while cycle.len() > 1 && cycle.first() == cycle.last() {
                cycle.pop();
            }
            cycle
        }
    }
}

fn window_faces(family: &Family, w: i64) -> Vec<FaceKey> {
    let mut out = Vec::new();
    for i in -w..=w {
        for j in -w..=w {
            match family {
                Family::Triangular => {
                    out.push(FaceKey::new("fu", i, j));
                    out.push(FaceKey::new("fd", i, j));
                }
                Family::Hexagonal => out.push(FaceKey::new("h", i, j)),
                _ => out.push(FaceKey::new("f", i, j)),
            }
        }
    }
    out
}

fn edge_id(a: &str, b: &str) -> String {
    format!("e.{a}.{b}")
}

/// Builds a complex from face vertex cycles, naming each edge after its
/// sorted endpoint pair and orienting it from the smaller identifier.
fn build_from_cycles(name: &str, faces: &BTreeMap<String, Vec<String>>) -> Result<TwoComplex> {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeMap::new();
    let mut face_specs = Vec::new();
    for (id, cycle) in faces {
        let n = cycle.len();
        let mut word = Vec::with_capacity(n);
        for k in 0..n {
            let (a, b) = (&cycle[k], &cycle[(k + 1) % n]);
            vertices.insert(a.clone());
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let eid = edge_id(lo, hi);
            edges.entry(eid.clone()).or_insert_with(|| (lo.clone(), hi.clone()));
            word.push((eid, a == lo));
        }
        face_specs.push((id.clone(), word));
    }
    let edges = edges.into_iter().map(|(id, (a, b))| (id, a, b)).collect();
    TwoComplex::new(name, vertices.into_iter().collect(), edges, face_specs)
}

fn cycles_for(family: &Family, faces: &[FaceKey]) -> BTreeMap<String, Vec<String>> {
    faces
        .iter()
        .map(|f| (f.id(), face_cycle(family, f).iter().map(VertexKey::id).collect()))
        .collect()
}

/// Faces within gallery hop distance `radius` of `base`.
fn gallery_ball(x: &TwoComplex, base: usize, radius: usize) -> BTreeSet<usize> {
    let mut dist = vec![usize::MAX; x.face_count()];
    let mut queue = VecDeque::from([base]);
    dist[base] = 0;
    while let Some(f) = queue.pop_front() {
        if dist[f] == radius {
            continue;
        }
        for g in x.face_neighbors(f) {
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    (0..x.face_count()).filter(|&f| dist[f] <= radius).collect()
}

/// Patch of `spec.family` made of all faces within gallery distance
/// `spec.radius` of the base face.
pub fn generate(spec: PatchSpec) -> Result<Patch> {
    if spec.radius == 0 {
        return Err(Error::Precondition("radius must be at least 1".into()));
    }
    let family = spec.family;
    let window = spec.radius as i64 + 2;
    let name = format!("{}_r{}", family.name(), spec.radius);
    let full = build_from_cycles(&name, &cycles_for(&family, &window_faces(&family, window)))?;
    let base = full.face(&family.base_face().id())?;
    let ball = gallery_ball(&full, base, spec.radius);
    Ok(Patch {
        spec,
        complex: full.restrict(&ball),
    })
}

/// Tiling patch of the triangular, square or hexagonal tiling.
pub fn generate_tiling(family: Family, radius: usize) -> Result<Patch> {
    match family {
        Family::Triangular | Family::Square | Family::Hexagonal => generate(PatchSpec { family, radius }),
        other => Err(Error::Precondition(format!("{} is not a tiling family", other.name()))),
    }
}

/// Patch of the two-level grid with vertical edges collapsed where `keep`
/// is false.
pub fn generate_quasi_flat_plane(radius: usize, keep: KeepRule) -> Result<Patch> {
    generate(PatchSpec {
        family: Family::QuasiFlat(keep),
        radius,
    })
}

/// The C(4)-T(4) complex without a flat plane: vertical edges survive only at
/// both-even positions.
pub fn generate_paper_example(radius: usize) -> Result<Patch> {
    generate(PatchSpec {
        family: Family::PaperExample,
        radius,
    })
}

/// Quotient of a periodic family by the sublattice `m Z x n Z`: a finite
/// complex on the torus.
pub fn quotient_by_lattice(family: Family, periods: (usize, usize)) -> Result<TwoComplex> {
    let (m, n) = periods;
    let (expected_edges, step) = match family {
        Family::Square => (2 * m * n, 1),
        Family::Triangular => (3 * m * n, 1),
        Family::PaperExample => ((9 * m * n) / 4, 2),
        other => {
            return Err(Error::Precondition(format!("no quotient for family {}", other.name())));
        }
    };
    if m < 3 || n < 3 || m % step != 0 || n % step != 0 {
        return Err(Error::PeriodTooSmall(periods));
    }
    let (mi, ni) = (m as i64, n as i64);
    let reduce = |key: VertexKey| VertexKey {
        a: key.a.rem_euclid(mi),
        b: key.b.rem_euclid(ni),
        ..key
    };
    let mut faces = Vec::new();
    for i in 0..mi {
        for j in 0..ni {
            match family {
                Family::Triangular => {
                    faces.push(FaceKey::new("fu", i, j));
                    faces.push(FaceKey::new("fd", i, j));
                }
                _ => faces.push(FaceKey::new("f", i, j)),
            }
        }
    }
    let cycles = faces
        .iter()
        .map(|f| {
            let cycle = face_cycle(&family, f).into_iter().map(|k| reduce(k).id()).collect();
            (f.id(), cycle)
        })
        .collect();
    let name = format!("{}_torus_{m}x{n}", family.name());
    let x = build_from_cycles(&name, &cycles)?;
    if x.edge_count() != expected_edges || !validate_complex(&x, true).is_holds() {
        return Err(Error::PeriodTooSmall(periods));
    }
    Ok(x)
}

/// Splits `prefix_i_j` into its prefix and trailing coordinates.
pub fn face_coordinates(id: &str) -> Option<(&str, i64, i64)> {
    let mut parts = id.rsplitn(3, '_');
    let j = parts.next()?.parse().ok()?;
    let i = parts.next()?.parse().ok()?;
    let prefix = parts.next()?;
    Some((prefix, i, j))
}

/// Identifier of the face translated by `shift`.
pub fn translate_face_id(id: &str, shift: (i64, i64)) -> Option<String> {
    let (prefix, i, j) = face_coordinates(id)?;
    Some(format!("{prefix}_{}_{}", i + shift.0, j + shift.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::serialize_complex;

    #[test]
    fn square_radius_one_is_a_three_by_three_block() {
        let x = generate_tiling(Family::Square, 1).unwrap().complex;
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (16, 24, 9));
    }

    #[test]
    fn triangular_radius_one_has_thirteen_faces() {
        let x = generate_tiling(Family::Triangular, 1).unwrap().complex;
        assert_eq!(x.face_count(), 13);
        let base = x.face("fu_0_0").unwrap();
        assert_eq!(x.face_neighbors(base).len(), 12);
        let edge_neighbors = x
            .face_neighbors(base)
            .into_iter()
            .filter(|&g| !x.intersection(&[base, g]).edges.is_empty())
            .count();
        assert_eq!(edge_neighbors, 3);
    }

    #[test]
    fn hexagonal_radius_one_is_a_flower() {
        let x = generate_tiling(Family::Hexagonal, 1).unwrap().complex;
        assert_eq!(x.face_count(), 7);
        assert!(x.faces().iter().all(|f| f.word.len() == 6));
    }

    #[test]
    fn collapsing_everything_gives_the_square_tiling() {
        for r in 1..=3 {
            let quasi = generate_quasi_flat_plane(r, KeepRule::None).unwrap().complex;
            let square = generate_tiling(Family::Square, r).unwrap().complex;
            let strip = |s: String| s.lines().skip(1).collect::<Vec<_>>().join("\n");
            assert_eq!(strip(serialize_complex(&quasi)), strip(serialize_complex(&square)));
        }
    }

    #[test]
    fn uncollapsed_grid_has_valence_three_everywhere_inside() {
        let x = generate_quasi_flat_plane(3, KeepRule::All).unwrap().complex;
        let v = x.vertex("v_0_0_0").unwrap();
        assert_eq!(x.valence(v), 3);
        assert!(x.faces().iter().all(|f| f.word.len() == 8));
    }

    #[test]
    fn paper_example_matches_both_even_rule() {
        let a = generate_paper_example(2).unwrap().complex;
        let b = generate_quasi_flat_plane(2, KeepRule::BothEven).unwrap().complex;
        let strip = |s: String| s.lines().skip(1).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(serialize_complex(&a)), strip(serialize_complex(&b)));
        assert!(a.vertex("v_0_0_1").is_ok());
        assert!(a.vertex("v_1_0").is_ok());
    }

    #[test]
    fn square_torus_counts() {
        let x = quotient_by_lattice(Family::Square, (3, 3)).unwrap();
        assert_eq!((x.vertex_count(), x.edge_count(), x.face_count()), (9, 18, 9));
        assert_eq!(x.euler_characteristic(), 0);
    }

    #[test]
    fn small_periods_are_rejected() {
        assert!(matches!(
            quotient_by_lattice(Family::Square, (2, 2)),
            Err(Error::PeriodTooSmall(_))
        ));
        assert!(quotient_by_lattice(Family::PaperExample, (3, 4)).is_err());
    }

    #[test]
    fn face_ids_translate() {
        assert_eq!(face_coordinates("f_-2_3"), Some(("f", -2, 3)));
        assert_eq!(translate_face_id("fu_1_-1", (2, 0)).as_deref(), Some("fu_3_-1"));
    }
}
