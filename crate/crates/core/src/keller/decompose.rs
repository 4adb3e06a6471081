//! Hamiltonian decompositions by pairing color classes of a class-1
//! coloring, and the perfect 1-factorization check.
//!
//! In a class-1 coloring of a regular graph every color class is a perfect
//! matching, and two classes together form disjoint even cycles. A pair is
//! usable when that union is a single Hamiltonian cycle. The search keeps a
//! maximum matching of the "usable pair" relation on classes and applies
//! Kempe switches ranked by three keys: more usable pairs, then fewer
//! cycles in the worst leftover pair, then fewer cycles over all leftover
//! pairs.

use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{build, check_dim, class1_coloring};
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::kempe::SearchBudget;
use crate::matching::maximum_matching;
use crate::verify::verify_hamiltonian_decomposition;

#[derive(Clone, Debug, Serialize)]
pub struct HamDecomposition {
    pub cycles: Vec<Vec<Vertex>>,
    /// Present when the degree is odd.
    pub matching: Option<Vec<(Vertex, Vertex)>>,
    pub restarts_used: u32,
    pub moves: u64,
}

/// `mate[c][v]`: the partner of `v` in color class `c`.
struct Classes {
    mate: Vec<Vec<Vertex>>,
}

impl Classes {
    fn from_graph_coloring(g: &Graph, c: &crate::graph::EdgeColoring, k: usize) -> Option<Self> {
        let n = g.vertex_count();
        let mut mate = vec![vec![usize::MAX; n]; k];
        for ((u, v), col) in c.iter() {
            let row = mate.get_mut(col as usize - 1)?;
            row[u] = v;
            row[v] = u;
        }
        mate.iter()
            .all(|r| r.iter().all(|&x| x != usize::MAX))
            .then_some(Classes { mate })
    }

    fn k(&self) -> usize {
        self.mate.len()
    }

    fn n(&self) -> usize {
        self.mate[0].len()
    }

    /// Cycle through `v` alternating classes `a` and `b`, starting with `a`.
    fn cycle(&self, a: usize, b: usize, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut cur = v;
        let mut use_a = true;
        loop {
            cur = if use_a { self.mate[a][cur] } else { self.mate[b][cur] };
            use_a = !use_a;
            if cur == v {
                return out;
            }
            out.push(cur);
        }
    }

    fn cycle_count(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for v in 0..self.n() {
            if !seen[v] {
                count += 1;
                for w in self.cycle(a, b, v) {
                    seen[w] = true;
                }
            }
        }
        count
    }

    fn kempe(&mut self, a: usize, b: usize, v: Vertex) {
        for w in self.cycle(a, b, v) {
            let (x, y) = (self.mate[a][w], self.mate[b][w]);
            self.mate[a][w] = y;
            self.mate[b][w] = x;
        }
    }
}

type Score = (usize, Reverse<usize>, Reverse<usize>);

struct Pairing {
    counts: Vec<Vec<usize>>,
    partner: Vec<Option<usize>>,
    score: Score,
}

impl Pairing {
    #[allow(clippy::needless_range_loop)]
    fn new(cl: &Classes) -> Self {
        let k = cl.k();
        let mut counts = vec![vec![0; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let c = cl.cycle_count(a, b);
                counts[a][b] = c;
                counts[b][a] = c;
            }
        }
        let mut p = Pairing {
            counts,
            partner: Vec::new(),
            score: (0, Reverse(0), Reverse(0)),
        };
        p.rescore();
        p
    }

    fn refresh(&mut self, cl: &Classes, changed: [usize; 2]) {
        for &a in &changed {
            for b in 0..cl.k() {
                if a != b {
                    let c = cl.cycle_count(a, b);
                    self.counts[a][b] = c;
                    self.counts[b][a] = c;
                }
            }
        }
        self.rescore();
    }

    fn rescore(&mut self) {
        let k = self.counts.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|a| (0..k).filter(|&b| b != a && self.counts[a][b] == 1).collect())
            .collect();
        self.partner = maximum_matching(&adj);
        let paired = self.partner.iter().filter(|p| p.is_some()).count() / 2;
        let rest: Vec<usize> = (0..k).filter(|&a| self.partner[a].is_none()).collect();
        let (mut worst, mut total) = (0, 0);
        let mut first = true;
        for (i, &a) in rest.iter().enumerate() {
            for &b in &rest[i + 1..] {
                let c = self.counts[a][b];
                worst = if first { c } else { worst.min(c) };
                first = false;
                total += c;
            }
        }
        self.score = (paired, Reverse(worst), Reverse(total));
    }

    fn complete(&self) -> bool {
        self.score.0 == self.counts.len() / 2
    }
}

fn extract(cl: &Classes, p: &Pairing, restarts_used: u32, moves: u64) -> HamDecomposition {
    let k = cl.k();
    let mut cycles = Vec::new();
    for a in 0..k {
        if let Some(b) = p.partner[a] {
            if a < b {
                cycles.push(cl.cycle(a, b, 0));
            }
        }
    }
    let matching = (0..k).find(|&a| p.partner[a].is_none()).map(|a| {
        (0..cl.n())
            .filter(|&v| v < cl.mate[a][v])
            .map(|v| (v, cl.mate[a][v]))
            .collect()
    });
    HamDecomposition {
        cycles,
        matching,
        restarts_used,
        moves,
    }
}

/// Searches for a Hamiltonian decomposition of `G_d` starting from the
/// kernel coloring; later restarts scramble it with random Kempe switches
/// first. Returns `None` when the budget runs out.
pub fn ham_decomposition_search(d: usize, budget: &SearchBudget) -> Result<Option<HamDecomposition>> {
    check_dim(d, 4)?;
    let g = build(d)?;
    let (coloring, kernel) = class1_coloring(d)?;
    let k = kernel.s.len();
    let base = Classes::from_graph_coloring(&g, &coloring, k)
        .ok_or_else(|| Error::Internal("kernel coloring is not a 1-factorization".into()))?;
    let n = g.vertex_count();
    let mut moves = 0;
    for restart in 0..budget.max_restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed.wrapping_add(restart as u64));
        let mut cl = Classes {
            mate: base.mate.clone(),
        };
        if restart > 0 {
            for _ in 0..4 * n {
                let (a, b) = distinct_pair(&mut rng, k);
                cl.kempe(a, b, rng.gen_range(0..n));
            }
        }
        let mut p = Pairing::new(&cl);
        for _ in 0..budget.max_switches {
            if p.complete() {
                break;
            }
            moves += 1;
            let (a, b) = distinct_pair(&mut rng, k);
            let v = rng.gen_range(0..n);
            let before = p.score;
            cl.kempe(a, b, v);
            p.refresh(&cl, [a, b]);
            if p.score < before && !rng.gen_bool(0.05) {
                cl.kempe(a, b, v);
                p.refresh(&cl, [a, b]);
            }
        }
        if p.complete() {
            let dec = extract(&cl, &p, restart + 1, moves);
            let r = verify_hamiltonian_decomposition(&g, &dec.cycles, dec.matching.as_deref());
            if !r.ok {
                return Err(Error::Internal(format!(
                    "decomposition failed verification: {}",
                    r.detail.join("; ")
                )));
            }
            return Ok(Some(dec));
        }
    }
    Ok(None)
}

fn distinct_pair(rng: &mut ChaCha8Rng, k: usize) -> (usize, usize) {
    let a = rng.gen_range(0..k);
    let mut b = rng.gen_range(0..k - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectFactorizationCheck {
    pub exists: bool,
    pub perfect_matchings: usize,
    pub nodes: u64,
}

fn perfect_matchings(g: &Graph) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, mate: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let Some(v) = mate.iter().position(|&m| m == usize::MAX) else {
            out.push(mate.clone());
            return;
        };
        for w in g.neighbors(v).collect::<Vec<_>>() {
            if mate[w] == usize::MAX && w != v {
                mate[v] = w;
                mate[w] = v;
                go(g, mate, out);
                mate[v] = usize::MAX;
                mate[w] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![usize::MAX; g.vertex_count()], &mut out);
    out
}

pub const MAX_FACTORIZATION_VERTICES: usize = 20;

/// Exhaustive search for a perfect 1-factorization (a 1-factorization in
/// which every two classes form a Hamiltonian cycle) of a regular graph.
///
/// Classes are indexed by the neighbor of vertex 0 they contain, so every
/// factorization is visited once.
pub fn perfect_one_factorization_check(g: &Graph) -> Result<PerfectFactorizationCheck> {
    let n = g.vertex_count();
    if n > MAX_FACTORIZATION_VERTICES {
        return Err(Error::TooLarge(format!(
            "exhaustive check limited to {MAX_FACTORIZATION_VERTICES} vertices"
        )));
    }
    if n == 0 || n % 2 == 1 || g.is_regular().is_none() {
        return Err(precondition("need a regular graph on an even number of vertices"));
    }
    let all = perfect_matchings(g);
    let nbrs: Vec<Vertex> = g.neighbors(0).collect();
    let by_first: Vec<Vec<usize>> = nbrs
        .iter()
        .map(|&w| (0..all.len()).filter(|&i| all[i][0] == w).collect())
        .collect();
    let hamiltonian = |a: &[Vertex], b: &[Vertex]| {
        let mut cur = 0;
        let mut len = 0;
        loop {
            let next = b[a[cur]];
            len += 2;
            cur = next;
            if cur == 0 {
                return len == n;
            }
            if a[cur] == b[cur] {
                return false;
            }
        }
    };
    let mut nodes = 0u64;
    fn go(
        i: usize,
        chosen: &mut Vec<usize>,
        all: &[Vec<Vertex>],
        by_first: &[Vec<usize>],
        ham: &dyn Fn(&[Vertex], &[Vertex]) -> bool,
        nodes: &mut u64,
    ) -> bool {
        if i == by_first.len() {
            return true;
        }
        for &m in &by_first[i] {
            *nodes += 1;
            let ok = chosen.iter().all(|&c| {
                let (a, b) = (&all[c], &all[m]);
                (0..a.len()).all(|v| a[v] != b[v]) && ham(a, b)
            });
            if ok {
                chosen.push(m);
                if go(i + 1, chosen, all, by_first, ham, nodes) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let exists = go(0, &mut Vec::new(), &all, &by_first, &hamiltonian, &mut nodes);
    Ok(PerfectFactorizationCheck {
        exists,
        perfect_matchings: all.len(),
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn g2_decomposes() {
        let dec = ham_decomposition_search(2, &SearchBudget::default()).unwrap().unwrap();
        assert_eq!(dec.cycles.len(), 2);
        assert_eq!(dec.matching.as_ref().unwrap().len(), 8);
    }

    #[test]
    fn opposite_kernel_colors_form_four_cycles() {
        let g = build(2).unwrap();
        let (c, k) = class1_coloring(2).unwrap();
        let cl = Classes::from_graph_coloring(&g, &c, k.s.len()).unwrap();
        let p = Pairing::new(&cl);
        for &s in &k.s1 {
            let a = k.color_of(s).unwrap() as usize - 1;
            let b = k.color_of(k.neg(s)).unwrap() as usize - 1;
            assert_eq!(p.counts[a][b], 4);
        }
    }

    #[test]
    fn perfect_factorizations() {
        assert!(perfect_one_factorization_check(&complete_graph(4)).unwrap().exists);
        assert!(perfect_one_factorization_check(&complete_graph(6)).unwrap().exists);
        let r = perfect_one_factorization_check(&build(2).unwrap()).unwrap();
        assert!(!r.exists);
        assert!(r.perfect_matchings > 0);
    }
}
