//! Kempe-chain local search for class-1 edge colorings.
//!
//! `eliminate_color` removes one color from a proper coloring. All edges of
//! the target color are uncolored first; each is then recolored from the
//! remaining palette, directly when a color is free at both ends, otherwise
//! after swapping a two-colored chain. The candidate moves for an uncolored
//! edge are scored as `reduction * 1000 - chain_length` with ties broken by
//! the seeded generator. When no move reduces the number of uncolored edges
//! the edge is forced into a random non-tabu color and the (at most two)
//! clashing edges are uncolored instead.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Result};
use crate::graph::{Color, EdgeColoring, Graph, Vertex};
use crate::state::ColorState;
use crate::verify::verify_edge_coloring;
use crate::vizing::vizing_state;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Moves (recolorings, chain swaps or forced moves) per restart.
    pub max_switches: u64,
    pub max_restarts: u32,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_switches: 2_000_000,
            max_restarts: 8,
            seed: 0x5eed,
        }
    }
}

/// Swaps `a` and `b` along the maximal `(a, b)`-component through `start`.
pub fn kempe_switch(g: &Graph, c: &EdgeColoring, start: Vertex, a: Color, b: Color) -> Result<EdgeColoring> {
    if a == b || a == 0 || b == 0 {
        return Err(precondition("a Kempe switch needs two distinct colors"));
    }
    if start >= g.vertex_count() {
        return Err(precondition("start vertex out of range"));
    }
    let k = c.max_color().max(a).max(b) as usize;
    let mut s = ColorState::from_colors(g, k, &c.to_edge_colors(g))
        .ok_or_else(|| precondition("input coloring is not proper"))?;
    let comp = s.component(start, a, b);
    s.swap(&comp, a, b);
    let mut out = s.to_coloring();
    out.set_declared_color_count(c.declared_color_count().max(k as u32));
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub restarts_used: u32,
    pub moves: u64,
    pub forced_moves: u64,
}

struct Eliminator<'g> {
    s: ColorState<'g>,
    palette: Vec<Color>,
    uncolored: Vec<usize>,
    // position of each edge in `uncolored`, usize::MAX if colored
    slot: Vec<usize>,
    tabu: Vec<u64>,
    rng: ChaCha8Rng,
    moves: u64,
    forced: u64,
}

impl<'g> Eliminator<'g> {
    fn push_uncolored(&mut self, e: usize) {
        self.slot[e] = self.uncolored.len();
        self.uncolored.push(e);
    }

    fn drop_uncolored(&mut self, e: usize) {
        let i = self.slot[e];
        let last = self.uncolored.pop().unwrap();
        if last != e {
            self.uncolored[i] = last;
            self.slot[last] = i;
        }
        self.slot[e] = usize::MAX;
    }

    fn free_colors(&self, v: Vertex) -> Vec<Color> {
        self.palette.iter().copied().filter(|&c| self.s.is_free(v, c)).collect()
    }

    fn tabu_key(&self, e: usize, c: Color) -> usize {
        e * (self.s.k + 1) + c as usize
    }

    /// One move on the uncolored edge `e`; afterwards `e` is colored.
    fn step(&mut self, e: usize) {
        self.moves += 1;
        let (u, v) = self.s.g.edge(e);
        let fu = self.free_colors(u);
        let fv = self.free_colors(v);
        let common: Vec<Color> = fu.iter().copied().filter(|c| fv.contains(c)).collect();
        if let Some(&c) = common.choose(&mut self.rng) {
            self.drop_uncolored(e);
            self.s.assign(e, c);
            return;
        }

        // chain candidates: (score, tie, start, a, b, color for e)
        let mut best: Option<(i64, u32, Vertex, Color, Color, Color)> = None;
        for &alpha in &fu {
            for &beta in &fv {
                // from v along alpha; afterwards alpha is free at v
                for (start, other, a, b) in [(v, u, alpha, beta), (u, v, beta, alpha)] {
                    let (chain, _) = self.s.chain_from(start, a, b);
                    let end_hits_other = chain.last().is_some_and(|&last| {
                        let (x, y) = self.s.g.edge(last);
                        x == other || y == other
                    });
                    if end_hits_other {
                        continue;
                    }
                    let score = 1000 - chain.len() as i64;
                    let tie: u32 = self.rng.gen();
                    if best.is_none_or(|b| (score, tie) > (b.0, b.1)) {
                        best = Some((score, tie, start, a, b, a));
                    }
                }
            }
        }
        if let Some((_, _, start, a, b, col)) = best {
            let (chain, _) = self.s.chain_from(start, a, b);
            self.s.swap(&chain, a, b);
            self.drop_uncolored(e);
            self.s.assign(e, col);
            return;
        }

        // impasse: force a random non-tabu color, uncolor the clashes
        self.forced += 1;
        let candidates: Vec<Color> = self
            .palette
            .iter()
            .copied()
            .filter(|&c| self.tabu[self.tabu_key(e, c)] <= self.moves)
            .collect();
        let pool = if candidates.is_empty() {
            &self.palette
        } else {
            &candidates
        };
        let c = *pool.choose(&mut self.rng).unwrap();
        for w in [u, v] {
            let clash = self.s.edge_at(w, c);
            if clash != crate::state::NONE {
                self.s.unassign(clash);
                let tenure = 10 + self.rng.gen_range(0..10) + self.uncolored.len() as u64;
                let key = self.tabu_key(clash, c);
                self.tabu[key] = self.moves + tenure;
                self.push_uncolored(clash);
            }
        }
        self.drop_uncolored(e);
        self.s.assign(e, c);
    }
}

/// Removes color `target` from the proper total coloring `c`. Returns
/// `None` when `max_switches` moves are spent without success.
pub fn eliminate_color(g: &Graph, c: &EdgeColoring, target: Color, budget: &SearchBudget) -> Option<EdgeColoring> {
    eliminate_with_stats(g, c, target, budget.max_switches, budget.seed).0
}

fn eliminate_with_stats(
    g: &Graph,
    c: &EdgeColoring,
    target: Color,
    max_moves: u64,
    seed: u64,
) -> (Option<EdgeColoring>, SearchStats) {
    let mut stats = SearchStats::default();
    let k = c.max_color() as usize;
    let Some(mut s) = ColorState::from_colors(g, k.max(target as usize), &c.to_edge_colors(g)) else {
        return (None, stats);
    };
    if s.uncolored() > 0 {
        return (None, stats);
    }
    let palette: Vec<Color> = (1..=k as Color)
        .filter(|&x| x != target && s.count[x as usize] > 0)
        .collect();
    let mut el = Eliminator {
        palette,
        uncolored: Vec::new(),
        slot: vec![usize::MAX; g.edge_count()],
        tabu: vec![0; g.edge_count() * (s.k + 1)],
        rng: ChaCha8Rng::seed_from_u64(seed),
        moves: 0,
        forced: 0,
        s: {
            for e in 0..g.edge_count() {
                if s.color[e] == target {
                    s.unassign(e);
                }
            }
            s
        },
    };
    for e in 0..g.edge_count() {
        if el.s.color[e] == 0 {
            el.push_uncolored(e);
        }
    }
    while !el.uncolored.is_empty() {
        if el.moves >= max_moves {
            stats.moves = el.moves;
            stats.forced_moves = el.forced;
            return (None, stats);
        }
        let e = el.uncolored[el.rng.gen_range(0..el.uncolored.len())];
        el.step(e);
        #[cfg(debug_assertions)]
        if el.moves.is_multiple_of(4096) {
            el.s.assert_proper();
        }
    }
    stats.moves = el.moves;
    stats.forced_moves = el.forced;
    let mut out = el.s.to_coloring();
    out.set_declared_color_count(c.declared_color_count().max(k as u32));
    debug_assert!(verify_edge_coloring(g, &out, true).ok);
    (Some(out), stats)
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A proper total coloring with `Δ` colors labeled `1..=Δ`.
    Found { coloring: EdgeColoring, stats: SearchStats },
    /// The graph is overfull, so no `Δ`-coloring exists.
    Overfull,
    /// Budget spent without success; inconclusive.
    Exhausted { stats: SearchStats },
}

impl SearchOutcome {
    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match self {
            SearchOutcome::Found { coloring, .. } => Some(coloring),
            _ => None,
        }
    }
}

/// One restart of [`find_class1`]: the start coloring comes from `warm`
/// on restart 0 when given, otherwise from a Vizing pass over a shuffled
/// edge order. Colors are eliminated from the rarest upward until `Δ`
/// remain.
pub fn run_restart(
    g: &Graph,
    budget: &SearchBudget,
    index: u32,
    warm: Option<&EdgeColoring>,
) -> (Option<EdgeColoring>, SearchStats) {
    let delta = g.max_degree().unwrap_or(0);
    let seed = budget.seed.wrapping_add(index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let start = match warm {
        Some(w) if index == 0 && verify_edge_coloring(g, w, true).ok => w.compacted(),
        _ => {
            let mut order: Vec<usize> = (0..g.edge_count()).collect();
            order.shuffle(&mut rng);
            let mut c = vizing_state(g, &order).to_coloring().compacted();
            c.set_declared_color_count(c.colors_used() as u32);
            c
        }
    };
    let mut current = start;
    let mut stats = SearchStats {
        restarts_used: index + 1,
        ..SearchStats::default()
    };
    let mut remaining = budget.max_switches;
    while current.colors_used() > delta {
        let hist = current.histogram();
        let (&target, _) = hist.iter().min_by_key(|&(&c, &n)| (n, std::cmp::Reverse(c))).unwrap();
        let (res, st) = eliminate_with_stats(
            g,
            &current,
            target,
            remaining,
            seed.wrapping_mul(31).wrapping_add(target as u64),
        );
        stats.moves += st.moves;
        stats.forced_moves += st.forced_moves;
        remaining = remaining.saturating_sub(st.moves);
        match res {
            Some(next) => current = next.compacted(),
            None => return (None, stats),
        }
    }
    (Some(current), stats)
}

/// Searches for a `Δ`-edge-coloring. Overfull graphs are rejected without
/// search. Restarts run in index order; the first success wins.
pub fn find_class1(g: &Graph, budget: &SearchBudget, warm: Option<&EdgeColoring>) -> SearchOutcome {
    if g.is_overfull() {
        return SearchOutcome::Overfull;
    }
    let mut total = SearchStats::default();
    for index in 0..budget.max_restarts.max(1) {
        let (res, st) = run_restart(g, budget, index, warm);
        total.moves += st.moves;
        total.forced_moves += st.forced_moves;
        total.restarts_used = index + 1;
        if let Some(c) = res {
            return SearchOutcome::Found {
                coloring: c,
                stats: total,
            };
        }
    }
    SearchOutcome::Exhausted { stats: total }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriticalityReport {
    /// True iff every single-edge deletion was shown class 1.
    pub critical: bool,
    /// Deletions where the search ran out of budget (inconclusive).
    pub failures: Vec<(Vertex, Vertex)>,
    /// Deletions that are still overfull, hence provably class 2.
    pub overfull_deletions: Vec<(Vertex, Vertex)>,
}

/// For every edge `e`, tries to show `g − e` is class 1.
pub fn edge_critical_check(g: &Graph, budget: &SearchBudget) -> CriticalityReport {
    let mut rep = CriticalityReport::default();
    for id in 0..g.edge_count() {
        let h = g.without_edge(id);
        match find_class1(&h, budget, None) {
            SearchOutcome::Found { .. } => {}
            SearchOutcome::Overfull => rep.overfull_deletions.push(g.edge(id)),
            SearchOutcome::Exhausted { .. } => rep.failures.push(g.edge(id)),
        }
    }
    rep.critical = rep.failures.is_empty() && rep.overfull_deletions.is_empty();
    rep
}
