use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::complex::{validate_complex, TwoComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::CheckReport;

/// A simplicial complex stored by its maximal simplices.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    name: String,
    vertices: Vec<String>,
    facets: Vec<BTreeSet<usize>>,
    vertex_facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds from any generating family of simplices; non-maximal ones are
    /// dropped. Vertices not in any simplex become isolated 0-simplices.
    pub fn new(name: impl Into<String>, vertices: Vec<String>, simplices: Vec<BTreeSet<usize>>) -> Self {
        let mut simplices: Vec<BTreeSet<usize>> = simplices.into_iter().filter(|s| !s.is_empty()).collect();
        simplices.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        simplices.dedup();
        let mut facets: Vec<BTreeSet<usize>> = Vec::new();
        for s in simplices {
            if !facets.iter().any(|f| s.is_subset(f)) {
                facets.push(s);
            }
        }
        for v in 0..vertices.len() {
            if !facets.iter().any(|f| f.contains(&v)) {
                facets.push(BTreeSet::from([v]));
            }
        }
        facets.sort();
        let mut vertex_facets = vec![Vec::new(); vertices.len()];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                vertex_facets[v].push(i);
            }
        }
        Self {
            name: name.into(),
            vertices,
            facets,
            vertex_facets,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownCell(format!("simplicial vertex `{label}`")))
    }

    pub fn dimension(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn contains(&self, simplex: &BTreeSet<usize>) -> bool {
        match simplex.iter().next() {
            None => true,
            Some(&v) => self.vertex_facets[v]
                .iter()
                .any(|&i| simplex.is_subset(&self.facets[i])),
        }
    }

    /// Number of simplices of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            let items: Vec<usize> = f.iter().copied().collect();
            for mask in 1u64..(1u64 << items.len()) {
                let s: Vec<usize> = (0..items.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| items[i])
                    .collect();
                all.insert(s);
            }
        }
        let mut counts = vec![0; self.dimension() + 1];
        for s in all {
            counts[s.len() - 1] += 1;
        }
        counts
    }

    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::new(self.vertices.clone());
        for f in &self.facets {
            for &a in f {
                for &b in f.range(a + 1..) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Link of a vertex, on the vertex labels of its neighbours.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        let neighbors: BTreeSet<usize> = self.vertex_facets[v]
            .iter()
            .flat_map(|&i| self.facets[i].iter().copied())
            .filter(|&w| w != v)
            .collect();
        let order: Vec<usize> = neighbors.iter().copied().collect();
        let local = |w: usize| order.binary_search(&w).expect("neighbor");
        let simplices = self.vertex_facets[v]
            .iter()
            .map(|&i| self.facets[i].iter().filter(|&&w| w != v).map(|&w| local(w)).collect())
            .collect();
        SimplicialComplex::new(
            format!("link_{}", self.vertices[v]),
            order.iter().map(|&w| self.vertices[w].clone()).collect(),
            simplices,
        )
    }

    /// Line-based form: `vertex <id>` lines then `simplex <id> <v ...>` for
    /// each maximal simplex.
    pub fn serialize(&self) -> String {
        let mut out = format!("simplicial {}\n", self.name);
        for v in &self.vertices {
            writeln!(out, "vertex {v}").unwrap();
        }
        for (i, f) in self.facets.iter().enumerate() {
            let labels: Vec<&str> = f.iter().map(|&v| self.vertices[v].as_str()).collect();
            writeln!(out, "simplex s{i} {}", labels.join(" ")).unwrap();
        }
        out
    }
}

/// Requires embedded 2-cells and no free edges.
pub(crate) fn dual_preconditions(x: &TwoComplex) -> Result<()> {
    let report = validate_complex(x, true);
    if let Some(w) = report.witnesses.first() {
        return Err(Error::Precondition(w.clone()));
    }
    if let Some(e) = (0..x.edge_count()).find(|&e| x.faces_at_edge(e).is_empty()) {
        return Err(Error::Precondition(format!("edge {} lies in no face", x.edge_id(e))));
    }
    Ok(())
}

/// Nerve of the cover by closed 2-cells: vertices are faces, and a family of
/// faces spans a simplex iff the faces share a point. Any common point is
/// shared with a common vertex, so the maximal simplices are the maximal
/// vertex stars.
pub fn build_nerve(x: &TwoComplex) -> Result<SimplicialComplex> {
    dual_preconditions(x)?;
    let simplices = (0..x.vertex_count())
        .map(|v| x.faces_at_vertex(v).iter().copied().collect())
        .collect();
    Ok(SimplicialComplex::new(
        format!("nerve_{}", x.name()),
        x.faces().iter().map(|f| f.id.clone()).collect(),
        simplices,
    ))
}

fn labels(k: &SimplicialComplex, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| k.vertices()[v].clone())
        .collect::<Vec<_>>()
        .join(", ")
}

/// k-large: flag, and every embedded cycle shorter than `k` has a diagonal.
pub fn check_k_large(complex: &SimplicialComplex, k: usize) -> CheckReport {
    let g = complex.skeleton();
    let mut witnesses = Vec::new();
    for clique in g.maximal_cliques() {
        if !complex.contains(&clique) {
            witnesses.push(format!("non-flag clique [{}]", labels(complex, clique)));
        }
    }
    if k > 4 {
        for cycle in g.induced_cycles(k - 1) {
            witnesses.push(format!(
                "cycle of length {} without diagonal [{}]",
                cycle.len(),
                labels(complex, cycle.iter().copied())
            ));
        }
    }
    CheckReport::from_witnesses(witnesses)
}

/// Every vertex link is 6-large. Simple connectedness is the caller's
/// responsibility.
pub fn check_systolic_links(complex: &SimplicialComplex) -> CheckReport {
    let mut witnesses = Vec::new();
    for v in 0..complex.vertices().len() {
        let report = check_k_large(&complex.link(v), 6);
        for w in report.witnesses {
            witnesses.push(format!("vertex {}: link has {w}", complex.vertices()[v]));
        }
    }
    CheckReport::from_witnesses(witnesses)
}
