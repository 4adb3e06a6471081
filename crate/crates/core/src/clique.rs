//! Exact maximum clique / maximum independent set.
//!
//! Bitset branch-and-bound with a greedy coloring bound, vertices renumbered
//! in degeneracy order so that color classes stay small near the root.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex cap for the exact solvers.
pub const DEFAULT_CAP: usize = 4096;

#[derive(Clone)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and_into(&self, other: &Bits, out: &mut Bits) {
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = a & b;
        }
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
}

struct Solver {
    adj: Vec<Bits>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
}

impl Solver {
    // Greedy sequential coloring of `p`; returns vertices with their color,
    // sorted by nondecreasing color. Vertices whose color cannot lift the
    // clique past the incumbent are omitted.
    fn color_sort(&self, p: &Bits, out: &mut Vec<(usize, usize)>) {
        out.clear();
        let kmin = (self.best.len() + 1).saturating_sub(self.current.len());
        let mut u = p.clone();
        let mut q = p.clone();
        let mut k = 0;
        while !u.is_empty() {
            k += 1;
            q.words.copy_from_slice(&u.words);
            while let Some(v) = q.first() {
                u.clear(v);
                q.clear(v);
                q.and_not_assign(&self.adj[v]);
                if k >= kmin {
                    out.push((v, k));
                }
            }
        }
    }

    fn expand(&mut self, mut p: Bits) {
        self.nodes += 1;
        let mut order = Vec::new();
        self.color_sort(&p, &mut order);
        let mut child = Bits::new(self.adj.len());
        while let Some((v, k)) = order.pop() {
            if self.current.len() + k <= self.best.len() {
                return;
            }
            self.current.push(v);
            p.and_into(&self.adj[v], &mut child);
            if child.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(child.clone());
            }
            self.current.pop();
            p.clear(v);
        }
    }
}

fn degeneracy_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    // high-core vertices first
    order.reverse();
    order
}

/// Maximum clique of `g`. Errors when `g` has more than `cap` vertices.
pub fn max_clique_with_cap(g: &Graph, cap: usize) -> Result<(usize, Vec<Vertex>)> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge(format!("{n} vertices exceeds exact-solver cap {cap}")));
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj = vec![Bits::new(n); n];
    for &(u, v) in g.edges() {
        adj[pos[u]].set(pos[v]);
        adj[pos[v]].set(pos[u]);
    }
    let mut all = Bits::new(n);
    for i in 0..n {
        all.set(i);
    }
    let mut s = Solver {
        adj,
        best: vec![0],
        current: Vec::new(),
        nodes: 0,
    };
    s.expand(all);
    let mut clique: Vec<Vertex> = s.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    Ok((clique.len(), clique))
}

/// Maximum clique size and a witness, using [`DEFAULT_CAP`].
pub fn exact_omega(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    max_clique_with_cap(g, DEFAULT_CAP)
}

/// Maximum independent set size and a witness, using [`DEFAULT_CAP`].
pub fn exact_alpha(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    exact_alpha_with_cap(g, DEFAULT_CAP)
}

pub fn exact_alpha_with_cap(g: &Graph, cap: usize) -> Result<(usize, Vec<Vertex>)> {
    if g.vertex_count() > cap {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds exact-solver cap {cap}",
            g.vertex_count()
        )));
    }
    max_clique_with_cap(&g.complement(), cap)
}
