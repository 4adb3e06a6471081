//! Independent checkers. None of these trust the constructors; they only look
//! at the graph and the claimed certificate.

use std::collections::{BTreeSet, HashSet};

use crate::graph::{edge_key, EdgeColoring, Graph, VerificationReport, Vertex};

const MAX_DETAIL: usize = 32;

fn push(detail: &mut Vec<String>, overflow: &mut usize, msg: String) {
    if detail.len() < MAX_DETAIL {
        detail.push(msg);
    } else {
        *overflow += 1;
    }
}

fn finish(mut detail: Vec<String>, overflow: usize) -> Vec<String> {
    if overflow > 0 {
        detail.push(format!("... and {overflow} more violations"));
    }
    detail
}

/// Checks properness (and optionally totality) of an edge coloring.
pub fn verify_edge_coloring(g: &Graph, c: &EdgeColoring, require_total: bool) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    let delta = g.max_degree().unwrap_or(0);

    for ((u, v), col) in c.iter() {
        if !g.has_edge(u, v) {
            push(
                &mut detail,
                &mut overflow,
                format!("color {col} assigned to non-edge ({}, {})", u + 1, v + 1),
            );
        }
        if col == 0 {
            push(
                &mut detail,
                &mut overflow,
                format!("edge ({}, {}) has color 0", u + 1, v + 1),
            );
        }
        if col > c.declared_color_count() {
            push(
                &mut detail,
                &mut overflow,
                format!(
                    "edge ({}, {}) has color {col} above declared count {}",
                    u + 1,
                    v + 1,
                    c.declared_color_count()
                ),
            );
        }
    }

    for v in 0..g.vertex_count() {
        let mut seen: Vec<(u32, Vertex)> = Vec::with_capacity(g.degree(v));
        for (w, _) in g.incident(v) {
            match c.get(v, *w) {
                Some(col) => seen.push((col, *w)),
                None => {
                    if require_total && v < *w {
                        push(
                            &mut detail,
                            &mut overflow,
                            format!("edge ({}, {}) is uncolored", v + 1, w + 1),
                        );
                    }
                }
            }
        }
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0].0 == pair[1].0 {
                push(
                    &mut detail,
                    &mut overflow,
                    format!(
                        "vertex {} sees color {} on edges to {} and {}",
                        v + 1,
                        pair[0].0,
                        pair[0].1 + 1,
                        pair[1].1 + 1
                    ),
                );
            }
        }
    }

    VerificationReport::from_violations(c.colors_used(), delta, finish(detail, overflow))
}

fn check_permutation(g: &Graph, seq: &[Vertex], detail: &mut Vec<String>, overflow: &mut usize) {
    let n = g.vertex_count();
    if seq.len() != n {
        push(
            detail,
            overflow,
            format!("sequence has {} entries, graph has {n} vertices", seq.len()),
        );
    }
    let mut seen = vec![false; n];
    for &v in seq {
        if v >= n {
            push(detail, overflow, format!("vertex {} out of range", v + 1));
        } else if seen[v] {
            push(detail, overflow, format!("vertex {} repeated", v + 1));
        } else {
            seen[v] = true;
        }
    }
    for (v, s) in seen.iter().enumerate() {
        if !s {
            push(detail, overflow, format!("vertex {} missing", v + 1));
        }
    }
}

fn check_steps(g: &Graph, seq: &[Vertex], wrap: bool, detail: &mut Vec<String>, overflow: &mut usize) {
    let steps = if wrap { seq.len() } else { seq.len().saturating_sub(1) };
    for i in 0..steps {
        let a = seq[i];
        let b = seq[(i + 1) % seq.len()];
        if !g.has_edge(a, b) {
            push(detail, overflow, format!("step {} -> {} is not an edge", a + 1, b + 1));
        }
    }
}

pub fn verify_hamiltonian_cycle(g: &Graph, seq: &[Vertex]) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    check_permutation(g, seq, &mut detail, &mut overflow);
    if seq.len() < 3 {
        push(&mut detail, &mut overflow, "a cycle needs at least 3 vertices".into());
    } else {
        check_steps(g, seq, true, &mut detail, &mut overflow);
    }
    VerificationReport::from_violations(0, g.max_degree().unwrap_or(0), finish(detail, overflow))
}

pub fn verify_hamiltonian_path(g: &Graph, seq: &[Vertex], from: Vertex, to: Vertex) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    check_permutation(g, seq, &mut detail, &mut overflow);
    check_steps(g, seq, false, &mut detail, &mut overflow);
    if seq.first() != Some(&from) {
        push(
            &mut detail,
            &mut overflow,
            format!("path does not start at {}", from + 1),
        );
    }
    if seq.last() != Some(&to) {
        push(&mut detail, &mut overflow, format!("path does not end at {}", to + 1));
    }
    VerificationReport::from_violations(0, g.max_degree().unwrap_or(0), finish(detail, overflow))
}

/// Every cycle must be Hamiltonian; cycles plus the optional matching must
/// partition the edge set.
pub fn verify_hamiltonian_decomposition(
    g: &Graph,
    cycles: &[Vec<Vertex>],
    matching: Option<&[(Vertex, Vertex)]>,
) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    let mut used: HashSet<(Vertex, Vertex)> = HashSet::with_capacity(g.edge_count());
    let mut claim = |u: Vertex, v: Vertex, what: &str, detail: &mut Vec<String>, overflow: &mut usize| {
        if !g.has_edge(u, v) {
            push(
                detail,
                overflow,
                format!("{what}: ({}, {}) is not an edge", u + 1, v + 1),
            );
        } else if !used.insert(edge_key(u, v)) {
            push(
                detail,
                overflow,
                format!("{what}: edge ({}, {}) used twice", u + 1, v + 1),
            );
        }
    };

    for (i, cyc) in cycles.iter().enumerate() {
        let r = verify_hamiltonian_cycle(g, cyc);
        for d in r.detail {
            push(&mut detail, &mut overflow, format!("cycle {}: {d}", i + 1));
        }
        for j in 0..cyc.len() {
            claim(
                cyc[j],
                cyc[(j + 1) % cyc.len()],
                &format!("cycle {}", i + 1),
                &mut detail,
                &mut overflow,
            );
        }
    }
    if let Some(m) = matching {
        let mut covered = vec![false; g.vertex_count()];
        for &(u, v) in m {
            claim(u, v, "matching", &mut detail, &mut overflow);
            for w in [u, v] {
                if w < covered.len() {
                    if covered[w] {
                        push(
                            &mut detail,
                            &mut overflow,
                            format!("matching: vertex {} covered twice", w + 1),
                        );
                    }
                    covered[w] = true;
                }
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            push(
                &mut detail,
                &mut overflow,
                format!("matching is not perfect: vertex {} uncovered", v + 1),
            );
        }
    }
    let missing = g.edge_count().saturating_sub(used.len());
    if missing > 0 {
        push(&mut detail, &mut overflow, format!("{missing} edges are not covered"));
    }
    VerificationReport::from_violations(0, g.max_degree().unwrap_or(0), finish(detail, overflow))
}

/// Sets must be disjoint cliques whose union is the vertex set.
/// `colors_used` carries the number of cliques.
pub fn verify_clique_cover(g: &Graph, cover: &[Vec<Vertex>]) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    let n = g.vertex_count();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, set) in cover.iter().enumerate() {
        let distinct: BTreeSet<Vertex> = set.iter().copied().collect();
        if distinct.len() != set.len() {
            push(&mut detail, &mut overflow, format!("set {} repeats a vertex", i + 1));
        }
        for &v in &distinct {
            if v >= n {
                push(
                    &mut detail,
                    &mut overflow,
                    format!("set {}: vertex {} out of range", i + 1, v + 1),
                );
                continue;
            }
            if let Some(j) = owner[v] {
                push(
                    &mut detail,
                    &mut overflow,
                    format!("vertex {} in sets {} and {}", v + 1, j + 1, i + 1),
                );
            }
            owner[v] = Some(i);
        }
        let members: Vec<Vertex> = distinct.into_iter().filter(|&v| v < n).collect();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                if !g.has_edge(u, v) {
                    push(
                        &mut detail,
                        &mut overflow,
                        format!("set {}: {} and {} are not adjacent", i + 1, u + 1, v + 1),
                    );
                }
            }
        }
    }
    for (v, o) in owner.iter().enumerate() {
        if o.is_none() {
            push(&mut detail, &mut overflow, format!("vertex {} not covered", v + 1));
        }
    }
    VerificationReport::from_violations(cover.len(), g.max_degree().unwrap_or(0), finish(detail, overflow))
}

/// Proper vertex coloring check; `colors_used` is the number of distinct colors.
pub fn verify_vertex_coloring(g: &Graph, colors: &[u32]) -> VerificationReport {
    let mut detail = Vec::new();
    let mut overflow = 0;
    if colors.len() != g.vertex_count() {
        push(
            &mut detail,
            &mut overflow,
            format!("{} colors for {} vertices", colors.len(), g.vertex_count()),
        );
    } else {
        for &(u, v) in g.edges() {
            if colors[u] == colors[v] {
                push(
                    &mut detail,
                    &mut overflow,
                    format!("adjacent {} and {} share color {}", u + 1, v + 1, colors[u]),
                );
            }
        }
    }
    let used = colors.iter().collect::<BTreeSet<_>>().len();
    VerificationReport::from_violations(used, g.max_degree().unwrap_or(0), finish(detail, overflow))
}

/// True iff `set` is pairwise non-adjacent.
pub fn is_independent(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// True iff `set` is pairwise adjacent.
pub fn is_clique(g: &Graph, set: &[Vertex]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}
