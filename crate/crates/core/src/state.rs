//! Dense mutable edge-coloring state shared by the Vizing constructor and
//! the Kempe searches.

use crate::graph::{Color, EdgeColoring, Graph, Vertex};

pub(crate) const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub(crate) struct ColorState<'g> {
    pub g: &'g Graph,
    /// Palette is `1..=k`.
    pub k: usize,
    /// `at[v * (k + 1) + c]` = edge id colored `c` at `v`, or [`NONE`].
    at: Vec<usize>,
    /// Color per edge id; 0 = uncolored.
    pub color: Vec<Color>,
    /// Number of edges per color.
    pub count: Vec<usize>,
}

impl<'g> ColorState<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Self {
        ColorState {
            g,
            k,
            at: vec![NONE; g.vertex_count() * (k + 1)],
            color: vec![0; g.edge_count()],
            count: vec![0; k + 1],
        }
    }

    /// Loads a dense per-edge vector; colors above `k` are an error.
    pub fn from_colors(g: &'g Graph, k: usize, colors: &[Color]) -> Option<Self> {
        let mut s = ColorState::new(g, k);
        for (e, &c) in colors.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c as usize > k {
                return None;
            }
            let (u, v) = g.edge(e);
            if !s.is_free(u, c) || !s.is_free(v, c) {
                return None;
            }
            s.assign(e, c);
        }
        Some(s)
    }

    #[inline]
    fn slot(&self, v: Vertex, c: Color) -> usize {
        v * (self.k + 1) + c as usize
    }

    #[inline]
    pub fn edge_at(&self, v: Vertex, c: Color) -> usize {
        self.at[self.slot(v, c)]
    }

    #[inline]
    pub fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.edge_at(v, c) == NONE
    }

    pub fn first_free(&self, v: Vertex) -> Option<Color> {
        (1..=self.k as Color).find(|&c| self.is_free(v, c))
    }

    pub fn assign(&mut self, e: usize, c: Color) {
        debug_assert_eq!(self.color[e], 0);
        let (u, v) = self.g.edge(e);
        let (su, sv) = (self.slot(u, c), self.slot(v, c));
        debug_assert!(self.at[su] == NONE && self.at[sv] == NONE);
        self.at[su] = e;
        self.at[sv] = e;
        self.color[e] = c;
        self.count[c as usize] += 1;
    }

    pub fn unassign(&mut self, e: usize) -> Color {
        let c = self.color[e];
        if c == 0 {
            return 0;
        }
        let (u, v) = self.g.edge(e);
        let (su, sv) = (self.slot(u, c), self.slot(v, c));
        self.at[su] = NONE;
        self.at[sv] = NONE;
        self.color[e] = 0;
        self.count[c as usize] -= 1;
        c
    }

    /// Edges of the maximal `(a, b)` alternating walk leaving `start` on its
    /// `a`-edge, in order, and whether the walk closed back at `start`.
    pub fn chain_from(&self, start: Vertex, a: Color, b: Color) -> (Vec<usize>, bool) {
        let mut edges = Vec::new();
        let mut v = start;
        let mut c = a;
        loop {
            let e = self.edge_at(v, c);
            if e == NONE {
                return (edges, false);
            }
            edges.push(e);
            let (x, y) = self.g.edge(e);
            v = if x == v { y } else { x };
            if v == start {
                return (edges, true);
            }
            c = if c == a { b } else { a };
        }
    }

    /// The whole `(a, b)` component containing `start`.
    pub fn component(&self, start: Vertex, a: Color, b: Color) -> Vec<usize> {
        let (mut edges, closed) = self.chain_from(start, a, b);
        if !closed {
            let (mut back, _) = self.chain_from(start, b, a);
            back.reverse();
            back.extend(edges);
            edges = back;
        }
        edges
    }

    /// Exchanges colors `a` and `b` on `edges` (each must carry one of them).
    pub fn swap(&mut self, edges: &[usize], a: Color, b: Color) {
        let old: Vec<Color> = edges.iter().map(|&e| self.unassign(e)).collect();
        for (&e, &c) in edges.iter().zip(&old) {
            debug_assert!(c == a || c == b);
            self.assign(e, if c == a { b } else { a });
        }
    }

    pub fn uncolored(&self) -> usize {
        self.color.iter().filter(|&&c| c == 0).count()
    }

    pub fn to_coloring(&self) -> EdgeColoring {
        let mut c = EdgeColoring::from_edge_colors(self.g, &self.color);
        c.set_declared_color_count(self.k as u32);
        c
    }

    #[cfg(debug_assertions)]
    pub fn assert_proper(&self) {
        for v in 0..self.g.vertex_count() {
            for &(_, e) in self.g.incident(v) {
                let c = self.color[e];
                if c != 0 {
                    assert_eq!(self.edge_at(v, c), e, "index out of sync at vertex {v}");
                }
            }
        }
    }
}
