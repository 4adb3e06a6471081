//! Simple undirected graphs and edge colorings.
//!
//! Vertices are `0..vertex_count` internally. Files use 1-based ids and the
//! conversion happens in [`crate::io`] only.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u32;

/// Normalizes an unordered pair so that the smaller endpoint comes first.
#[inline]
pub fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with optional vertex labels.
///
/// Edge ids are positions in the sorted `(u, v)` edge list with `u < v`, so
/// two graphs built from the same edge set number their edges identically.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbor, edge id), sorted by neighbor
    adj: Vec<Vec<(Vertex, usize)>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ends.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "endpoint out of range",
                });
            }
            list.push(edge_key(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                u: w[0].0,
                v: w[0].1,
                reason: "duplicate edge",
            });
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate pairs.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(u != v && u < n && v < n);
                edge_key(u, v)
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unique(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its 1-based id.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    /// Maximum vertex degree. Errors on the graph with no vertices.
    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    /// `n_e > Δ·⌊n_v/2⌋`, the counting certificate for class 2.
    pub fn is_overfull(&self) -> bool {
        let delta = self.max_degree().unwrap_or(0);
        self.edge_count() > delta * (self.n / 2)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            let mut it = self.adj[u].iter().map(|&(w, _)| w).peekable();
            for v in (u + 1)..self.n {
                while it.peek().is_some_and(|&w| w < v) {
                    it.next();
                }
                if it.peek() != Some(&v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_unique(self.n, edges)
    }

    /// Subgraph induced on `keep` (in the given order); returns the mapping
    /// from new ids to old ids alongside.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                edges.push(edge_key(pos[u], pos[v]));
            }
        }
        edges.sort_unstable();
        (Self::from_sorted_unique(keep.len(), edges), keep.to_vec())
    }

    /// The graph with edge `id` deleted.
    pub fn without_edge(&self, id: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &e)| e)
            .collect();
        let mut g = Self::from_sorted_unique(self.n, edges);
        g.labels = self.labels.clone();
        g
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }
}

/// Edge → color map with a declared palette size.
///
/// Colors are positive integers. The map is keyed by normalized vertex pairs
/// so that a coloring can describe edges the host graph does not have; the
/// verifier reports those.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    assignment: BTreeMap<(Vertex, Vertex), Color>,
    declared: u32,
}

impl EdgeColoring {
    pub fn new(declared_color_count: u32) -> Self {
        EdgeColoring {
            assignment: BTreeMap::new(),
            declared: declared_color_count,
        }
    }

    /// Builds a coloring from a dense per-edge-id vector; `0` means uncolored.
    pub fn from_edge_colors(g: &Graph, colors: &[Color]) -> Self {
        assert_eq!(colors.len(), g.edge_count());
        let mut c = EdgeColoring::new(colors.iter().copied().max().unwrap_or(0));
        for (id, &col) in colors.iter().enumerate() {
            if col != 0 {
                let (u, v) = g.edge(id);
                c.assignment.insert((u, v), col);
            }
        }
        c
    }

    /// Dense per-edge-id vector for `g`; edges without a color map to `0`.
    pub fn to_edge_colors(&self, g: &Graph) -> Vec<Color> {
        g.edges().iter().map(|&(u, v)| self.get(u, v).unwrap_or(0)).collect()
    }

    pub fn declared_color_count(&self) -> u32 {
        self.declared
    }

    pub fn set_declared_color_count(&mut self, k: u32) {
        self.declared = k;
    }

    pub fn set(&mut self, u: Vertex, v: Vertex, color: Color) {
        debug_assert!(color > 0, "colors are positive");
        self.assignment.insert(edge_key(u, v), color);
    }

    pub fn remove(&mut self, u: Vertex, v: Vertex) -> Option<Color> {
        self.assignment.remove(&edge_key(u, v))
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.assignment.get(&edge_key(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((Vertex, Vertex), Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_color(&self) -> Color {
        self.assignment.values().copied().max().unwrap_or(0)
    }

    pub fn colors_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    /// Color → number of edges carrying it.
    pub fn histogram(&self) -> BTreeMap<Color, usize> {
        let mut h = BTreeMap::new();
        for &c in self.assignment.values() {
            *h.entry(c).or_insert(0) += 1;
        }
        h
    }

    /// Count of the least frequent color in use.
    pub fn rarest_count(&self) -> Option<usize> {
        self.histogram().values().copied().min()
    }

    /// Applies `f` to every color.
    pub fn map_colors(&self, mut f: impl FnMut(Color) -> Color) -> EdgeColoring {
        let assignment: BTreeMap<_, _> = self.assignment.iter().map(|(&e, &c)| (e, f(c))).collect();
        let declared = assignment.values().copied().max().unwrap_or(0).max(self.declared);
        EdgeColoring { assignment, declared }
    }

    /// Relabels colors to `1..=colors_used` preserving their order.
    pub fn compacted(&self) -> EdgeColoring {
        let used: Vec<Color> = self.histogram().into_keys().collect();
        let mut c = self.map_colors(|x| used.binary_search(&x).unwrap() as Color + 1);
        c.declared = used.len() as u32;
        c
    }

    /// Merges two colorings of edge-disjoint graphs. Overlapping keys keep
    /// `other`'s color.
    pub fn union(&self, other: &EdgeColoring) -> EdgeColoring {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.assignment.insert(e, c);
        }
        out.declared = self.declared.max(other.declared);
        out
    }
}

/// Structured verifier output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub colors_used: usize,
    pub delta: usize,
    pub detail: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn from_violations(colors_used: usize, delta: usize, detail: Vec<String>) -> Self {
        VerificationReport {
            ok: detail.is_empty(),
            colors_used,
            delta,
            detail,
        }
    }
}

/// Complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges_dedup(n, edges)
}

/// Cycle `C_n` on `0 → 1 → … → n-1 → 0`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

/// The Petersen graph (outer 5-cycle 0..5, inner pentagram 5..10).
pub fn petersen_graph() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_dedup(10, e)
}

/// True when the vertices of maximum degree induce a forest, which is a
/// sufficient condition for class 1.
pub fn fournier_forest_check(g: &Graph) -> bool {
    let Ok(delta) = g.max_degree() else {
        return true;
    };
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in g.edges() {
        if g.degree(u) == delta && g.degree(v) == delta {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}
