//! Undirected simple graphs with breadth-first distances.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let adj = vec![BTreeSet::new(); labels.len()];
        Self { labels, index, adj }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn node(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownCell(format!("graph vertex `{label}`")))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        self.distances_from(a)[b].ok_or_else(|| Error::Disconnected(self.labels[a].clone(), self.labels[b].clone()))
    }

    /// Induced subgraph on `keep`, preserving labels.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> Graph {
        let order: Vec<usize> = keep.iter().copied().collect();
        let mut g = Graph::new(order.iter().map(|&v| self.labels[v].clone()).collect());
        let pos: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (&v, &i) in &pos {
            for w in &self.adj[v] {
                if let Some(&j) = pos.get(w) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting).
    pub fn maximal_cliques(&self) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        let all: BTreeSet<usize> = (0..self.len()).collect();
        self.bron_kerbosch(BTreeSet::new(), all, BTreeSet::new(), &mut out);
        out
    }

    fn bron_kerbosch(
        &self,
        r: BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(&x)
            .max_by_key(|&&u| self.adj[u].intersection(&p).count())
            .copied();
        let candidates: Vec<usize> = match pivot {
            Some(u) => p.difference(&self.adj[u]).copied().collect(),
            None => p.iter().copied().collect(),
        };
        for v in candidates {
            let mut r2 = r.clone();
            r2.insert(v);
            let p2 = p.intersection(&self.adj[v]).copied().collect();
            let x2 = x.intersection(&self.adj[v]).copied().collect();
            self.bron_kerbosch(r2, p2, x2, out);
            p.remove(&v);
            x.insert(v);
        }
    }

    /// Induced (chordless) cycles with `4..=max_len` vertices.
    pub fn induced_cycles(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.len() {
            let mut path = vec![s];
            self.grow_induced(&mut path, max_len, &mut out);
        }
        out
    }

    fn grow_induced(&self, path: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w <= s || path.contains(&w) {
                continue;
            }
            // w may touch only `last` among the interior path vertices
            if path.len() > 2 && path[1..path.len() - 1].iter().any(|&p| self.adjacent(p, w)) {
                continue;
            }
            let closes = path.len() > 1 && self.adjacent(s, w);
            if closes {
                if path.len() >= 3 && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                continue;
            }
            if path.len() + 1 >= max_len {
                continue;
            }
            path.push(w);
            self.grow_induced(path, max_len, out);
            path.pop();
        }
    }
}
