//! Δ+1 edge coloring by the Misra–Gries fan rotation.

use crate::graph::{Color, EdgeColoring, Graph, Vertex};
use crate::state::ColorState;

/// Colors every edge with at most Δ+1 colors, processing edges in id
/// (sorted `(u, v)`) order.
pub fn vizing_delta_plus_one(g: &Graph) -> EdgeColoring {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    vizing_with_order(g, &order)
}

/// Same as [`vizing_delta_plus_one`] with an explicit edge order.
pub fn vizing_with_order(g: &Graph, order: &[usize]) -> EdgeColoring {
    vizing_state(g, order).to_coloring()
}

pub(crate) fn vizing_state<'g>(g: &'g Graph, order: &[usize]) -> ColorState<'g> {
    let k = g.max_degree().unwrap_or(0) + 1;
    let mut s = ColorState::new(g, k);
    for &e in order {
        color_edge(&mut s, e);
    }
    s.k = s.k.max(1);
    s
}

/// Extends a partial coloring by one edge, never exceeding `s.k` colors.
/// `s.k` must be at least Δ+1.
pub(crate) fn color_edge(s: &mut ColorState<'_>, e: usize) {
    if s.color[e] != 0 {
        return;
    }
    let (u, v) = s.g.edge(e);
    let fan = build_fan(s, u, v);
    let c = s.first_free(u).expect("palette has Δ+1 colors");
    let last = *fan.last().unwrap();
    let d = s.first_free(last).expect("palette has Δ+1 colors");

    if c != d {
        // invert the cd-path that starts at u (c is free at u, so it leaves on d)
        let (path, _) = s.chain_from(u, d, c);
        s.swap(&path, c, d);
    }

    // the longest prefix that is still a fan, up to the first member where d is free
    let mut w = None;
    for (i, &x) in fan.iter().enumerate() {
        if i > 0 {
            let ex = s.g.edge_id(u, x).unwrap();
            if !s.is_free(fan[i - 1], s.color[ex]) {
                break;
            }
        }
        if s.is_free(x, d) {
            w = Some(i);
            break;
        }
    }
    let w = w.expect("fan lemma guarantees a rotation point");

    // rotate: edge (u, fan[i]) takes the color of (u, fan[i+1])
    let ids: Vec<usize> = fan[..=w].iter().map(|&x| s.g.edge_id(u, x).unwrap()).collect();
    let shifted: Vec<Color> = (0..w).map(|i| s.color[ids[i + 1]]).collect();
    for &id in &ids {
        s.unassign(id);
    }
    for (i, &col) in shifted.iter().enumerate() {
        s.assign(ids[i], col);
    }
    s.assign(ids[w], d);
}

fn build_fan(s: &ColorState<'_>, u: Vertex, v: Vertex) -> Vec<Vertex> {
    let mut fan = vec![v];
    let mut in_fan = vec![false; s.g.degree(u)];
    let nbrs = s.g.incident(u);
    let pos_v = nbrs.iter().position(|&(x, _)| x == v).unwrap();
    in_fan[pos_v] = true;
    loop {
        let tip = *fan.last().unwrap();
        let next = nbrs
            .iter()
            .enumerate()
            .find(|&(i, &(_, e))| !in_fan[i] && s.color[e] != 0 && s.is_free(tip, s.color[e]));
        match next {
            Some((i, &(x, _))) => {
                in_fan[i] = true;
                fan.push(x);
            }
            None => return fan,
        }
    }
}
