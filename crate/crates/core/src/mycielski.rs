//! Mycielskians and explicit Hamiltonian paths in the Mycielskian of an odd
//! cycle.
//!
//! Vertex ids of `μ(G)` for `G` on `0..n`: `x_i = i-1`, `y_i = n+i-1`,
//! `z = 2n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{complete_graph, Graph, Vertex};
use crate::hamilton::hamiltonian_path;
use crate::verify::verify_hamiltonian_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MycielskiVertex {
    X(usize),
    Y(usize),
    Z,
}

use MycielskiVertex::{X, Y, Z};

impl MycielskiVertex {
    pub fn id(self, n: usize) -> Vertex {
        match self {
            X(i) => i - 1,
            Y(i) => n + i - 1,
            Z => 2 * n,
        }
    }

    pub fn from_id(n: usize, v: Vertex) -> Self {
        if v < n {
            X(v + 1)
        } else if v < 2 * n {
            Y(v - n + 1)
        } else {
            Z
        }
    }

    fn check(self, n: usize) -> Result<Self> {
        match self {
            X(i) | Y(i) if i == 0 || i > n => Err(precondition(format!("{self} is out of range for n = {n}"))),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for MycielskiVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            X(i) => write!(f, "x{i}"),
            Y(i) => write!(f, "y{i}"),
            Z => write!(f, "z"),
        }
    }
}

impl FromStr for MycielskiVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || precondition(format!("bad Mycielski vertex {s:?}; expected x<i>, y<i> or z"));
        let s = s.trim();
        if s == "z" {
            return Ok(Z);
        }
        let (kind, idx) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let i: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "x" => Ok(X(i)),
            "y" => Ok(Y(i)),
            _ => Err(bad()),
        }
    }
}

pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut e: Vec<(Vertex, Vertex)> = Vec::with_capacity(3 * g.edge_count() + n);
    for &(i, j) in g.edges() {
        e.push((i, j));
        e.push((i, n + j));
        e.push((j, n + i));
    }
    e.extend((0..n).map(|i| (n + i, 2 * n)));
    let labels = (0..=2 * n)
        .map(|v| MycielskiVertex::from_id(n, v).to_string())
        .collect();
    Graph::from_edges(2 * n + 1, e)
        .expect("Mycielskian edges are distinct")
        .with_labels(labels)
}

pub const MAX_MYCIELSKI_INDEX: usize = 14;

/// `M_1 = K_1`, `M_2 = K_2`, `M_k = μ(M_{k-1})`.
pub fn mycielski_graph(k: usize) -> Result<Graph> {
    match k {
        0 => Err(precondition("Mycielski graphs start at M_1")),
        1 => Ok(Graph::empty(1)),
        k if k > MAX_MYCIELSKI_INDEX => Err(Error::TooLarge(format!(
            "M_{k} has {} vertices",
            3usize.saturating_mul(1 << (k - 2).min(60)) - 1
        ))),
        _ => {
            let mut g = complete_graph(2);
            for _ in 2..k {
                g = mycielskian(&g);
            }
            Ok(g)
        }
    }
}

/// Element `i ↦ s·i + t (mod n)` of the dihedral group acting on 0-based
/// cycle positions; `z` is fixed.
#[derive(Clone, Copy)]
struct Dihedral {
    n: usize,
    reflect: bool,
    shift: usize,
}

impl Dihedral {
    fn idx(&self, i: usize) -> usize {
        let i0 = i - 1;
        let j = if self.reflect { (self.n - i0) % self.n } else { i0 };
        (j + self.shift) % self.n + 1
    }

    fn inv_idx(&self, i: usize) -> usize {
        let j = (i - 1 + self.n - self.shift) % self.n;
        let j = if self.reflect { (self.n - j) % self.n } else { j };
        j + 1
    }

    fn apply(&self, v: MycielskiVertex) -> MycielskiVertex {
        match v {
            X(i) => X(self.idx(i)),
            Y(i) => Y(self.idx(i)),
            Z => Z,
        }
    }

    fn invert(&self, v: MycielskiVertex) -> MycielskiVertex {
        match v {
            X(i) => X(self.inv_idx(i)),
            Y(i) => Y(self.inv_idx(i)),
            Z => Z,
        }
    }
}

struct Templates {
    n: usize,
}

impl Templates {
    fn wrap(&self, i: isize) -> usize {
        (i - 1).rem_euclid(self.n as isize) as usize + 1
    }

    fn x(&self, i: isize) -> MycielskiVertex {
        X(self.wrap(i))
    }

    fn y(&self, i: isize) -> MycielskiVertex {
        Y(self.wrap(i))
    }

    /// Alternate X and Y while stepping the index by `dir`, wrapping around,
    /// until `stop` has been emitted.
    fn zig(&self, start: MycielskiVertex, dir: isize, stop: MycielskiVertex) -> Vec<MycielskiVertex> {
        let mut out = vec![start];
        let mut cur = start;
        while cur != stop {
            cur = match cur {
                X(i) => self.y(i as isize + dir),
                Y(i) => self.x(i as isize + dir),
                Z => unreachable!(),
            };
            out.push(cur);
            assert!(out.len() <= 2 * self.n, "zigzag from {start} never reaches {stop}");
        }
        out
    }

    /// The Hamiltonian cycle `y_1 x_2 y_3 … y_n x_1 x_n y_{n-1} … y_2 z`.
    fn base_cycle(&self) -> Vec<MycielskiVertex> {
        let n = self.n as isize;
        let mut c = self.zig(self.y(1), 1, self.y(n));
        c.push(self.x(1));
        c.extend(self.zig(self.x(n), -1, self.y(2)));
        c.push(Z);
        c
    }

    fn along_cycle(&self, a: MycielskiVertex, b: MycielskiVertex) -> Option<Vec<MycielskiVertex>> {
        let c = self.base_cycle();
        let len = c.len();
        let p = c.iter().position(|&v| v == a)?;
        let step = if c[(p + 1) % len] == b {
            len - 1
        } else if c[(p + len - 1) % len] == b {
            1
        } else {
            return None;
        };
        Some((0..len).map(|t| c[(p + t * step) % len]).collect())
    }

    /// Templates for a pair already in canonical position; `None` when
    /// this orientation is not one of them.
    fn canonical(&self, a: MycielskiVertex, b: MycielskiVertex) -> Option<Vec<MycielskiVertex>> {
        if let Some(p) = self.along_cycle(a, b) {
            return Some(p);
        }
        let n = self.n as isize;
        let cat = |parts: Vec<Vec<MycielskiVertex>>| Some(parts.concat());
        match (a, b) {
            // x_1 to x_j
            (X(1), X(j)) if (3..self.n).contains(&j) => {
                let j = j as isize;
                cat(vec![
                    self.zig(self.x(1), 1, self.y(j - 1)),
                    vec![Z],
                    self.zig(self.y(n), -1, self.x(j)),
                ])
            }
            // x_1 to y_j, j even
            (X(1), Y(j)) if j % 2 == 0 && j >= 4 => {
                let j = j as isize;
                cat(vec![
                    self.zig(self.x(1), 1, self.x(j - 1)),
                    self.zig(self.x(j), 1, self.y(n)),
                    vec![Z],
                    self.zig(self.y(j - 1), -1, self.y(j)),
                ])
            }
            // x_1 to y_j, j odd
            (X(1), Y(j)) if j % 2 == 1 && j + 2 <= self.n => {
                let j = j as isize;
                cat(vec![
                    self.zig(self.x(1), 1, self.x(j)),
                    self.zig(self.x(j - 1), -1, self.y(j + 1)),
                    vec![Z],
                    self.zig(self.y(n), -1, self.y(j)),
                ])
            }
            (X(1), Z) => cat(vec![self.zig(self.x(1), 1, self.y(n)), vec![Z]]),
            // y_1 to y_j, j even
            (Y(1), Y(j)) if j % 2 == 0 => {
                let j = j as isize;
                cat(vec![
                    self.zig(self.y(1), 1, self.y(j - 1)),
                    vec![Z, self.y(n)],
                    self.zig(self.x(1), 1, self.x(j - 1)),
                    self.zig(self.x(j), 1, self.x(n - 1)),
                    self.zig(self.x(n), -1, self.y(j)),
                ])
            }
            // y_1 to y_j, j odd
            (Y(1), Y(j)) if j >= 3 && j + 2 <= self.n => {
                let j = j as isize;
                cat(vec![
                    self.zig(self.y(1), 1, self.x(j - 1)),
                    self.zig(self.x(j - 2), -1, self.x(1)),
                    vec![self.y(n), Z],
                    self.zig(self.y(j - 1), 1, self.x(n)),
                    self.zig(self.x(n - 1), -1, self.y(j)),
                ])
            }
            _ => None,
        }
    }
}

/// Hamiltonian path from `a` to `b` in `μ(C_n)`, `n` odd.
///
/// The pair is moved by a rotation or reflection of the cycle (and, if
/// needed, by swapping its ends) onto one of the fixed templates; the
/// template path is mapped back.
pub fn ham_path_mu_odd_cycle(n: usize, a: MycielskiVertex, b: MycielskiVertex) -> Result<Vec<MycielskiVertex>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(precondition(format!(
            "μ(C_{n}) is handled only for odd n >= 3; even cycles do not give Hamilton-connected Mycielskians"
        )));
    }
    let (a, b) = (a.check(n)?, b.check(n)?);
    if a == b {
        return Err(precondition("path endpoints must differ"));
    }
    let t = Templates { n };
    for swapped in [false, true] {
        let (p, q) = if swapped { (b, a) } else { (a, b) };
        for reflect in [false, true] {
            for shift in 0..n {
                let g = Dihedral { n, reflect, shift };
                if let Some(path) = t.canonical(g.apply(p), g.apply(q)) {
                    let mut out: Vec<MycielskiVertex> = path.into_iter().map(|v| g.invert(v)).collect();
                    if swapped {
                        out.reverse();
                    }
                    return Ok(out);
                }
            }
        }
    }
    Err(Error::Internal(format!("no template covers {a} -> {b} for n = {n}")))
}

/// Same as [`ham_path_mu_odd_cycle`] but on vertex ids of `mycielskian(cycle_graph(n))`.
pub fn ham_path_mu_odd_cycle_ids(n: usize, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
    if a > 2 * n || b > 2 * n {
        return Err(precondition("vertex id out of range"));
    }
    let p = ham_path_mu_odd_cycle(n, MycielskiVertex::from_id(n, a), MycielskiVertex::from_id(n, b))?;
    Ok(p.into_iter().map(|v| v.id(n)).collect())
}

fn is_mu_cycle_edge(n: usize, a: MycielskiVertex, b: MycielskiVertex) -> bool {
    let near = |i: usize, j: usize| (i % n + 1 == j) || (j % n + 1 == i);
    match (a, b) {
        (X(i), X(j)) | (X(i), Y(j)) | (Y(i), X(j)) => near(i, j),
        (Y(_), Z) | (Z, Y(_)) => true,
        _ => false,
    }
}

/// Hamiltonian path from `a` to `b` in `μ(g)`, for `g` with an odd number
/// of vertices and the given Hamiltonian cycle. Only edges of `μ(C)` are
/// used, where `C` is the cycle.
pub fn ham_path_mu_of_hc_graph(g: &Graph, ham_cycle: &[Vertex], a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
    let n = g.vertex_count();
    if n < 3 || n.is_multiple_of(2) {
        return Err(precondition(format!("need an odd vertex count >= 3, got {n}")));
    }
    let r = verify_hamiltonian_cycle(g, ham_cycle);
    if !r.ok {
        return Err(precondition(format!(
            "not a Hamiltonian cycle: {}",
            r.detail.join("; ")
        )));
    }
    if a > 2 * n || b > 2 * n {
        return Err(precondition("vertex id out of range"));
    }
    let mut pos = vec![0; n];
    for (p, &v) in ham_cycle.iter().enumerate() {
        pos[v] = p;
    }
    let to_cycle = |v: Vertex| match MycielskiVertex::from_id(n, v) {
        X(i) => X(pos[i - 1] + 1),
        Y(i) => Y(pos[i - 1] + 1),
        Z => Z,
    };
    let from_cycle = |v: MycielskiVertex| match v {
        X(i) => ham_cycle[i - 1],
        Y(i) => n + ham_cycle[i - 1],
        Z => 2 * n,
    };
    let path = ham_path_mu_odd_cycle(n, to_cycle(a), to_cycle(b))?;
    for w in path.windows(2) {
        assert!(
            is_mu_cycle_edge(n, w[0], w[1]),
            "{} - {} is not an edge of μ(C)",
            w[0],
            w[1]
        );
    }
    Ok(path.into_iter().map(from_cycle).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityWitness {
    pub n: usize,
    pub from: String,
    pub to: String,
    pub path_exists: bool,
    pub nodes: u64,
}

/// Exhaustive search for a Hamiltonian `x_1`–`z` path in `μ(C_n)`, `n` even.
pub fn even_cycle_parity_witness(n: usize) -> Result<ParityWitness> {
    if n < 4 || n % 2 == 1 {
        return Err(precondition(format!("parity witness needs even n >= 4, got {n}")));
    }
    let g = mycielskian(&crate::graph::cycle_graph(n));
    let r = hamiltonian_path(&g, X(1).id(n), Z.id(n));
    Ok(ParityWitness {
        n,
        from: X(1).to_string(),
        to: Z.to_string(),
        path_exists: r.path.is_some(),
        nodes: r.nodes,
    })
}

pub const MAX_HC_VERTICES: usize = 30;

/// First pair (in lexicographic order) with no Hamiltonian path between
/// its ends, or `None` if the graph is Hamilton-connected.
pub fn non_hc_pair(g: &Graph) -> Result<Option<(Vertex, Vertex)>> {
    let n = g.vertex_count();
    if n > MAX_HC_VERTICES {
        return Err(Error::TooLarge(format!(
            "all-pairs Hamiltonian search limited to {MAX_HC_VERTICES} vertices"
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            if hamiltonian_path(g, a, b).path.is_none() {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn hc_check_all_pairs(g: &Graph) -> Result<bool> {
    Ok(non_hc_pair(g)?.is_none())
}
