//! Independence square, bit-string automorphisms, independence number and
//! clique covers of Keller graphs.

use super::{add, check_dim, digit, is_adjacent, ones, vertex_count, ColorKernel};
use crate::clique::exact_alpha_with_cap;
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verify::{is_independent, verify_clique_cover};

/// `2^d × 2^d` arrangement of the vertices of `G_d`.
///
/// Row bits map digits `{0,1} → 0`, `{2,3} → 1`; column bits map
/// `{0,3} → 0`, `{1,2} → 1`. Both are read as binary numbers, most
/// significant digit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceSquare {
    pub d: usize,
    pub cells: Vec<Vec<Vertex>>,
}

fn row_of(d: usize, v: Vertex) -> usize {
    (0..d).fold(0, |acc, i| acc * 2 + (digit(d, v, i) >> 1))
}

fn col_of(d: usize, v: Vertex) -> usize {
    (0..d).fold(0, |acc, i| {
        let x = digit(d, v, i);
        acc * 2 + usize::from(x == 1 || x == 2)
    })
}

impl IndependenceSquare {
    pub fn new(d: usize) -> Result<Self> {
        check_dim(d, 8)?;
        let side = 1 << d;
        let mut cells = vec![vec![usize::MAX; side]; side];
        for v in 0..vertex_count(d) {
            let cell = &mut cells[row_of(d, v)][col_of(d, v)];
            if *cell != usize::MAX {
                return Err(Error::Internal("two vertices share a square cell".into()));
            }
            *cell = v;
        }
        Ok(IndependenceSquare { d, cells })
    }

    pub fn side(&self) -> usize {
        self.cells.len()
    }

    pub fn column(&self, c: usize) -> Vec<Vertex> {
        self.cells.iter().map(|r| r[c]).collect()
    }

    /// Checks that every vertex appears once and that all rows and columns
    /// are independent in `g`.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = vec![false; g.vertex_count()];
        for &v in self.cells.iter().flatten() {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} missing or repeated"));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err("not every vertex is placed".into());
        }
        for (r, row) in self.cells.iter().enumerate() {
            if !is_independent(g, row) {
                return Err(format!("row {r} is not independent"));
            }
        }
        for c in 0..self.side() {
            if !is_independent(g, &self.column(c)) {
                return Err(format!("column {c} is not independent"));
            }
        }
        Ok(())
    }
}

/// Proper vertex coloring with `2^d` colors: a vertex's color is its row
/// in the independence square.
pub fn independence_square_coloring(d: usize) -> Result<Vec<u32>> {
    check_dim(d, 12)?;
    Ok((0..vertex_count(d)).map(|v| row_of(d, v) as u32).collect())
}

/// Permutation swapping `0 ↔ 1` and `2 ↔ 3` in the positions where `bits`
/// has a 1. Accepts a string of `0`/`1` of length `d`.
pub fn bitstring_automorphism(d: usize, bits: &str) -> Result<Vec<Vertex>> {
    check_dim(d, 8)?;
    if bits.len() != d || !bits.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(precondition(format!("{bits:?} is not a bit string of length {d}")));
    }
    let mask = bits.bytes().fold(0, |acc, b| acc * 4 + usize::from(b == b'1'));
    Ok((0..vertex_count(d)).map(|v| v ^ mask).collect())
}

pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// Independence number of `G_d`. By vertex-transitivity vertex 0 may be
/// assumed in a maximum independent set, so the search runs on the graph
/// induced by the non-neighbors of 0.
pub fn alpha_exact(d: usize) -> Result<usize> {
    check_dim(d, 7)?;
    let kernel = ColorKernel::new(d)?;
    let rest: Vec<Vertex> = (1..vertex_count(d))
        .filter(|v| kernel.s.binary_search(v).is_err())
        .collect();
    let mut edges = Vec::new();
    for (i, &u) in rest.iter().enumerate() {
        for (j, &v) in rest.iter().enumerate().skip(i + 1) {
            if is_adjacent(d, u, v) {
                edges.push((i, j));
            }
        }
    }
    let h = Graph::from_edges(rest.len(), edges)?;
    let (a, _) = exact_alpha_with_cap(&h, rest.len().max(crate::clique::DEFAULT_CAP))?;
    Ok(a + 1)
}

/// Clique numbers from the literature for `2 ≤ d ≤ 7`; `2^d` beyond.
pub fn known_omega(d: usize) -> Option<usize> {
    match d {
        2 => Some(2),
        3 => Some(5),
        4 => Some(12),
        5 => Some(28),
        6 => Some(60),
        7 => Some(124),
        d if (8..=31).contains(&d) => Some(1 << d),
        _ => None,
    }
}

/// `⌈4^d / ω⌉`, a lower bound on the clique covering number.
pub fn theta_lower_bound(d: usize, omega: usize) -> usize {
    vertex_count(d).div_ceil(omega)
}

/// Doubles a clique cover of `G_d` into one of `G_{d+1}`: each clique `C`
/// yields `0C ∪ 2(C+1…1)` and `1C ∪ 3(C+1…1)`.
pub fn double_clique_cover(d: usize, cover: &[Vec<Vertex>]) -> Result<Vec<Vec<Vertex>>> {
    check_dim(d, 11)?;
    let g = super::build(d).ok();
    if let Some(g) = &g {
        let r = verify_clique_cover(g, cover);
        if !r.ok {
            return Err(precondition(format!(
                "input is not a clique cover of G_{d}: {}",
                r.detail.join("; ")
            )));
        }
    }
    let shift = vertex_count(d);
    let one = ones(d);
    let mut out = Vec::with_capacity(2 * cover.len());
    for (lo, hi) in [(0, 2), (1, 3)] {
        for c in cover {
            let mut k: Vec<Vertex> = c.iter().map(|&v| lo * shift + v).collect();
            k.extend(c.iter().map(|&v| hi * shift + add(d, v, one)));
            out.push(k);
        }
    }
    Ok(out)
}
