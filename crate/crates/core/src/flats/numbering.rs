use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::{Subcomplex, TwoComplex};
use crate::error::{Error, Result};

use super::gallery::Interior;
use super::quasi::principal_neighbors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NumberingRule {
    /// Flat planes of C(6) complexes: `A_i` and `A_{i,j}`.
    C6,
    /// Quasi-flat planes: `A'_i` and `A'_i ∩ A_j`.
    Quasi,
}

impl std::str::FromStr for NumberingRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c6" => Ok(NumberingRule::C6),
            "quasi" => Ok(NumberingRule::Quasi),
            other => Err(Error::Precondition(format!("unknown numbering rule `{other}`"))),
        }
    }
}

/// Sequence of faces produced by the inductive numbering rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numbering {
    pub rule: NumberingRule,
    pub seed: [String; 3],
    pub cells: Vec<String>,
}

struct Sets<'a, 'b> {
    x: &'a TwoComplex,
    e: &'b Subcomplex<'a>,
    rule: NumberingRule,
    near: BTreeMap<usize, BTreeSet<usize>>,
    principal: BTreeMap<usize, BTreeSet<usize>>,
}

impl Sets<'_, '_> {
    /// `A_i`: faces meeting `c`.
    fn near(&mut self, c: usize) -> BTreeSet<usize> {
        let e = self.e;
        self.near
            .entry(c)
            .or_insert_with(|| e.neighbors(c).into_iter().collect())
            .clone()
    }

    /// The set whose exhaustion selects `i`: `A_i` or `A'_i`.
    fn outer(&mut self, c: usize) -> BTreeSet<usize> {
        match self.rule {
            NumberingRule::C6 => self.near(c),
            NumberingRule::Quasi => {
                if let Some(p) = self.principal.get(&c) {
                    return p.clone();
                }
                let nbrs: Vec<usize> = self.near(c).into_iter().collect();
                let p: BTreeSet<usize> = principal_neighbors(self.x, c, &nbrs).into_iter().collect();
                self.principal.insert(c, p.clone());
                p
            }
        }
    }

    /// `A_{i,j}` or `A'_i ∩ A_j`.
    fn inner(&mut self, ci: usize, cj: usize) -> BTreeSet<usize> {
        match self.rule {
            NumberingRule::C6 => {
                let x = self.x;
                self.near(ci)
                    .into_iter()
                    .filter(|&c| c != cj && !x.intersection(&[c, ci, cj]).is_empty())
                    .collect()
            }
            NumberingRule::Quasi => {
                let aj = self.near(cj);
                self.outer(ci).intersection(&aj).copied().collect()
            }
        }
    }
}

/// Runs the numbering rule from the seed `(C0, C1, C2)` on the faces of `e`
/// for at most `n` cells. The run stops early when the rule would need the
/// neighbours of a rim face, or when every set is exhausted.
pub fn numbering(
    x: &TwoComplex,
    e: &Subcomplex<'_>,
    rule: NumberingRule,
    seed: [&str; 3],
    n: usize,
) -> Result<Numbering> {
    let [c0, c1, c2] = seed.map(|id| x.face(id)).map(|r| r.map_err(|_| ()));
    let (c0, c1, c2) = match (c0, c1, c2) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return Err(Error::Seed(format!("unknown face in seed {seed:?}"))),
    };
    if seed.iter().any(|id| !e.contains_face(x.face(id).expect("checked"))) {
        return Err(Error::Seed("seed face outside the subcomplex".into()));
    }
    let interior = Interior::of(e);
    let mut sets = Sets {
        x,
        e,
        rule,
        near: BTreeMap::new(),
        principal: BTreeMap::new(),
    };
    if !sets.outer(c0).contains(&c1) {
        let set = if rule == NumberingRule::C6 { "A_0" } else { "A'_0" };
        return Err(Error::Seed(format!("{} is not in {set}", x.face_id(c1))));
    }
    let start = match rule {
        NumberingRule::C6 => sets.inner(c0, c1),
        NumberingRule::Quasi => {
            let a1 = sets.near(c1);
            sets.outer(c0).intersection(&a1).copied().collect()
        }
    };
    if !start.contains(&c2) || start.len() != 2 {
        return Err(Error::Seed(format!(
            "{} is not one of exactly two cells adjacent to both {} and {}",
            x.face_id(c2),
            x.face_id(c0),
            x.face_id(c1)
        )));
    }
    let c3 = *start.iter().find(|&&c| c != c2).expect("two cells");
    let mut cells = vec![c0, c1, c2, c3];
    let mut placed: BTreeSet<usize> = cells.iter().copied().collect();
    cells.truncate(n);
    while cells.len() < n {
        let k = cells.len() - 1;
        let Some(i) = (0..=k).find(|&i| !sets.outer(cells[i]).is_subset(&placed)) else {
            break;
        };
        if interior.depth(cells[i]) == Some(0) {
            break;
        }
        let j = (i + 1..=k)
            .find(|&j| !sets.inner(cells[i], cells[j]).is_subset(&placed))
            .ok_or_else(|| Error::Ambiguous {
                step: k + 1,
                message: format!("no index j completes {}", x.face_id(cells[i])),
            })?;
        let remaining: Vec<usize> = sets.inner(cells[i], cells[j]).difference(&placed).copied().collect();
        if remaining.len() != 1 {
            return Err(Error::Ambiguous {
                step: k + 1,
                message: format!("{} candidates remain for i = {i}, j = {j}", remaining.len()),
            });
        }
        cells.push(remaining[0]);
        placed.insert(remaining[0]);
    }
    Ok(Numbering {
        rule,
        seed: seed.map(String::from),
        cells: cells.iter().map(|&c| x.face_id(c).to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, Family, KeepRule, PatchSpec};

    fn patch(family: Family, radius: usize) -> TwoComplex {
        generate(PatchSpec { family, radius }).unwrap().complex
    }

    #[test]
    fn hexagonal_numbering_is_reproducible_and_injective() {
        let x = patch(Family::Hexagonal, 4);
        let e = Subcomplex::whole(&x);
        let a = numbering(&x, &e, NumberingRule::C6, ["h_0_0", "h_1_0", "h_1_-1"], 30).unwrap();
        let b = numbering(&x, &e, NumberingRule::C6, ["h_0_0", "h_1_0", "h_1_-1"], 30).unwrap();
        assert_eq!(a, b);
        assert!(a.cells.len() >= 19);
        let distinct: BTreeSet<&String> = a.cells.iter().collect();
        assert_eq!(distinct.len(), a.cells.len());
    }

    #[test]
    fn square_seed_must_share_an_edge() {
        let x = patch(Family::Square, 3);
        let e = Subcomplex::whole(&x);
        let err = numbering(&x, &e, NumberingRule::Quasi, ["f_0_0", "f_1_1", "f_0_1"], 10);
        assert!(matches!(err, Err(Error::Seed(_))));
        let ok = numbering(&x, &e, NumberingRule::Quasi, ["f_0_0", "f_1_0", "f_0_1"], 10).unwrap();
        assert_eq!(&ok.cells[..5], ["f_0_0", "f_1_0", "f_0_1", "f_0_-1", "f_-1_0"]);
    }

    #[test]
    fn paper_example_matches_the_uncollapsed_plane() {
        let x = patch(Family::PaperExample, 4);
        let y = patch(Family::QuasiFlat(KeepRule::All), 4);
        let seed = ["f_0_0", "f_1_0", "f_0_1"];
        let phi = numbering(&x, &Subcomplex::whole(&x), NumberingRule::Quasi, seed, 25).unwrap();
        let psi = numbering(&y, &Subcomplex::whole(&y), NumberingRule::Quasi, seed, 25).unwrap();
        assert_eq!(phi.cells.len(), 25);
        assert_eq!(psi.cells.len(), 25);
        for a in 0..25 {
            for b in 0..25 {
                let fx = [x.face(&phi.cells[a]).unwrap(), x.face(&phi.cells[b]).unwrap()];
                let fy = [y.face(&psi.cells[a]).unwrap(), y.face(&psi.cells[b]).unwrap()];
                assert_eq!(x.intersection(&fx).is_empty(), y.intersection(&fy).is_empty());
            }
        }
    }
}
