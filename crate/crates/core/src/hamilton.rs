//! Backtracking Hamiltonian path search for small graphs.

use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamSearch {
    pub path: Option<Vec<Vertex>>,
    /// Partial paths extended during the search.
    pub nodes: u64,
}

struct Search<'g> {
    g: &'g Graph,
    to: Vertex,
    used: Vec<bool>,
    path: Vec<Vertex>,
    nodes: u64,
}

impl Search<'_> {
    /// A vertex other than the current end and the target needs two free
    /// neighbors to be passed through later.
    fn dead_end(&self) -> bool {
        let end = *self.path.last().unwrap();
        for w in 0..self.g.vertex_count() {
            if self.used[w] {
                continue;
            }
            let free = self.g.neighbors(w).filter(|&x| !self.used[x] || x == end).count();
            let need = if w == self.to { 1 } else { 2 };
            if free < need {
                return true;
            }
        }
        false
    }

    fn extend(&mut self) -> bool {
        let n = self.g.vertex_count();
        let end = *self.path.last().unwrap();
        if self.path.len() == n {
            return end == self.to;
        }
        if self.dead_end() {
            return false;
        }
        let next: Vec<Vertex> = self.g.neighbors(end).filter(|&w| !self.used[w]).collect();
        for w in next {
            if w == self.to && self.path.len() + 1 < n {
                continue;
            }
            self.nodes += 1;
            self.used[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.used[w] = false;
        }
        false
    }
}

/// Exhaustive search for a Hamiltonian path from `from` to `to`.
pub fn hamiltonian_path(g: &Graph, from: Vertex, to: Vertex) -> HamSearch {
    let n = g.vertex_count();
    assert!(from < n && to < n);
    if from == to {
        let path = (n == 1).then(|| vec![from]);
        return HamSearch { path, nodes: 0 };
    }
    let mut s = Search {
        g,
        to,
        used: vec![false; n],
        path: vec![from],
        nodes: 0,
    };
    s.used[from] = true;
    let found = s.extend();
    HamSearch {
        path: found.then_some(s.path),
        nodes: s.nodes,
    }
}

/// Exhaustive search for a Hamiltonian cycle, returned starting at vertex 0.
pub fn hamiltonian_cycle(g: &Graph) -> HamSearch {
    let n = g.vertex_count();
    let mut nodes = 0;
    if n < 3 {
        return HamSearch { path: None, nodes };
    }
    for w in g.neighbors(0).collect::<Vec<_>>() {
        let r = hamiltonian_path(g, 0, w);
        nodes += r.nodes;
        if r.path.is_some() {
            return HamSearch { path: r.path, nodes };
        }
    }
    HamSearch { path: None, nodes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, petersen_graph};
    use crate::verify::{verify_hamiltonian_cycle, verify_hamiltonian_path};

    #[test]
    fn cycles_have_only_adjacent_paths() {
        let g = cycle_graph(7);
        assert!(hamiltonian_path(&g, 0, 1).path.is_some());
        assert!(hamiltonian_path(&g, 0, 3).path.is_none());
    }

    #[test]
    fn complete_graph_paths() {
        let g = complete_graph(6);
        let p = hamiltonian_path(&g, 2, 4).path.unwrap();
        assert!(verify_hamiltonian_path(&g, &p, 2, 4).ok);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let g = petersen_graph();
        assert!(hamiltonian_cycle(&g).path.is_none());
        let c = hamiltonian_cycle(&complete_graph(5)).path.unwrap();
        assert!(verify_hamiltonian_cycle(&complete_graph(5), &c).ok);
    }
}
