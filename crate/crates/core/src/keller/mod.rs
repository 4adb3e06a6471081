//! Keller graphs `G_d`: vertices are `d`-tuples over `Z_4`, adjacent when
//! they differ in at least two coordinates and by exactly 2 in at least one.
//!
//! A vertex is stored as the base-4 integer of its digits, most significant
//! digit first, so `23` in G_2 is `2·4 + 3 = 11`.

mod decompose;
mod fixtures;
mod kernel;
mod square;

use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex};

pub use decompose::{
    ham_decomposition_search, perfect_one_factorization_check, HamDecomposition, PerfectFactorizationCheck,
};
pub use fixtures::{load_fixture, parse_clique_table, parse_cycle_table, verify_fixture, FixtureReport, FixtureTable};
pub use kernel::{class1_coloring, ColorKernel};
pub use square::{
    alpha_exact, bitstring_automorphism, double_clique_cover, independence_square_coloring, is_automorphism,
    known_omega, theta_lower_bound, IndependenceSquare,
};

/// Largest dimension for which the whole graph is materialized.
pub const MAX_BUILD_DIM: usize = 6;

pub fn vertex_count(d: usize) -> usize {
    1 << (2 * d)
}

pub fn degree(d: usize) -> usize {
    4usize.pow(d as u32) - 3usize.pow(d as u32) - d
}

/// Digit `i` of `v`, counting from the most significant.
pub fn digit(d: usize, v: Vertex, i: usize) -> usize {
    (v >> (2 * (d - 1 - i))) & 3
}

fn from_digits(digits: impl IntoIterator<Item = usize>) -> Vertex {
    digits.into_iter().fold(0, |acc, x| acc * 4 + x)
}

fn digitwise(d: usize, u: Vertex, v: Vertex, f: impl Fn(usize, usize) -> usize) -> Vertex {
    from_digits((0..d).map(|i| f(digit(d, u, i), digit(d, v, i)) & 3))
}

pub fn add(d: usize, u: Vertex, v: Vertex) -> Vertex {
    digitwise(d, u, v, |a, b| a + b)
}

pub fn sub(d: usize, u: Vertex, v: Vertex) -> Vertex {
    digitwise(d, u, v, |a, b| a + 4 - b)
}

/// The all-ones tuple.
pub fn ones(d: usize) -> Vertex {
    from_digits(std::iter::repeat_n(1, d))
}

pub fn is_adjacent(d: usize, u: Vertex, v: Vertex) -> bool {
    let diff = sub(d, u, v);
    let nonzero = (0..d).filter(|&i| digit(d, diff, i) != 0).count();
    nonzero >= 2 && (0..d).any(|i| digit(d, diff, i) == 2)
}

fn check_dim(d: usize, max: usize) -> Result<()> {
    if d < 2 {
        return Err(precondition("Keller graphs start at d = 2"));
    }
    if d > max {
        return Err(Error::TooLarge(format!(
            "G_{d} has {} vertices; limit is d <= {max}",
            vertex_count(d)
        )));
    }
    Ok(())
}

/// A Keller vertex with its dimension, printed as a digit string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KellerVertex {
    pub d: usize,
    pub value: Vertex,
}

impl KellerVertex {
    pub fn new(d: usize, value: Vertex) -> Result<Self> {
        if value >= vertex_count(d) {
            return Err(precondition(format!("{value} is not a vertex of G_{d}")));
        }
        Ok(KellerVertex { d, value })
    }

    /// Parses a digit string such as `0213`; the dimension is its length.
    pub fn parse_digits(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| (b'0'..=b'3').contains(&b)) {
            return Err(precondition(format!("{s:?} is not a string of digits 0-3")));
        }
        Ok(KellerVertex {
            d: s.len(),
            value: from_digits(s.bytes().map(|b| (b - b'0') as usize)),
        })
    }

    /// Parses a base-4 integer encoding such as `41` (= `221` in G_3).
    pub fn parse_int(d: usize, s: &str) -> Result<Self> {
        let value: Vertex = s
            .trim()
            .parse()
            .map_err(|_| precondition(format!("{s:?} is not an integer")))?;
        Self::new(d, value)
    }

    pub fn digits(&self) -> String {
        (0..self.d)
            .map(|i| char::from(b'0' + digit(self.d, self.value, i) as u8))
            .collect()
    }
}

impl fmt::Display for KellerVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

pub fn digits(d: usize, v: Vertex) -> String {
    KellerVertex { d, value: v }.digits()
}

/// The Keller graph, built from its kernel: `v`'s neighbors are `v + S`.
pub fn build(d: usize) -> Result<Graph> {
    check_dim(d, MAX_BUILD_DIM)?;
    let kernel = ColorKernel::new(d)?;
    let n = vertex_count(d);
    let mut edges = Vec::with_capacity(n * kernel.s.len() / 2);
    for u in 0..n {
        for &s in &kernel.s {
            let v = add(d, u, s);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    Ok(if d <= 4 {
        g.with_labels((0..n).map(|v| digits(d, v)).collect())
    } else {
        g
    })
}

const G2_CYCLE: [&str; 16] = [
    "00", "23", "01", "20", "02", "21", "03", "22", "10", "33", "11", "30", "12", "31", "13", "32",
];

/// Explicit Hamiltonian cycle: the 16-cycle of G_2 with every suffix in
/// `Z_4^{d-2}` appended in turn, suffixes in lexicographic order.
pub fn ham_cycle(d: usize) -> Result<Vec<Vertex>> {
    check_dim(d, 12)?;
    let tail = vertex_count(d - 2);
    let base: Vec<Vertex> = G2_CYCLE
        .iter()
        .map(|s| KellerVertex::parse_digits(s).unwrap().value)
        .collect();
    Ok((0..tail)
        .flat_map(|x| base.iter().map(move |&p| p * tail + x))
        .collect())
}
