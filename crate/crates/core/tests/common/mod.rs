//! Oracles shared by the integration tests. Deliberately naive and
//! independent of the library's own solvers.

#![allow(dead_code)]

use std::collections::HashMap;

/// Minimum number of matchings (sets of pairwise non-adjacent positions of
/// the odd cycle) whose multiset union is `mult`.
pub fn multicycle_chi_oracle(mult: &[usize]) -> usize {
    let m = mult.len();
    let r: Vec<u8> = mult.iter().map(|&x| x as u8).collect();
    let delta = (0..m).map(|i| mult[i] + mult[(i + 1) % m]).max().unwrap();
    let mut memo = HashMap::new();
    (delta..).find(|&c| decompose(&r, c, &mut memo)).unwrap()
}

fn decompose(r: &[u8], c: usize, memo: &mut HashMap<(Vec<u8>, usize), bool>) -> bool {
    let m = r.len();
    let Some(p0) = r.iter().position(|&x| x > 0) else {
        return true;
    };
    if c == 0 {
        return false;
    }
    let sigma: usize = r.iter().map(|&x| x as usize).sum();
    let k = (m - 1) / 2;
    let delta = (0..m).map(|i| (r[i] + r[(i + 1) % m]) as usize).max().unwrap();
    if delta > c || sigma > c * k {
        return false;
    }
    if let Some(&v) = memo.get(&(r.to_vec(), c)) {
        return v;
    }
    let mut found = false;
    // every class containing p0 is some independent subset of the support
    let others: Vec<usize> = (0..m).filter(|&p| p != p0 && r[p] > 0).collect();
    for mask in 0u32..(1 << others.len()) {
        let mut set = vec![p0];
        set.extend(
            others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        );
        let indep = set
            .iter()
            .enumerate()
            .all(|(i, &p)| set[i + 1..].iter().all(|&q| (p + 1) % m != q && (q + 1) % m != p));
        if !indep {
            continue;
        }
        let mut next = r.to_vec();
        for &p in &set {
            next[p] -= 1;
        }
        if decompose(&next, c - 1, memo) {
            found = true;
            break;
        }
    }
    memo.insert((r.to_vec(), c), found);
    found
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Rook,
    Bishop,
    Queen,
}

/// Whether a piece on `a` attacks `b` on an empty board; squares are
/// `(col, row)`.
pub fn attacks(p: Piece, a: (i64, i64), b: (i64, i64)) -> bool {
    if a == b {
        return false;
    }
    let straight = a.0 == b.0 || a.1 == b.1;
    let diagonal = (a.0 - b.0).abs() == (a.1 - b.1).abs();
    match p {
        Piece::Rook => straight,
        Piece::Bishop => diagonal,
        Piece::Queen => straight || diagonal,
    }
}

/// All attacking pairs on an `m`-row, `n`-column board, vertex id
/// `(row-1)·n + (col-1)`, each pair once with the smaller id first.
pub fn board_edges(p: Piece, m: usize, n: usize) -> Vec<(usize, usize)> {
    let sq = |v: usize| ((v % n) as i64 + 1, (v / n) as i64 + 1);
    let mut out = Vec::new();
    for u in 0..m * n {
        for v in u + 1..m * n {
            if attacks(p, sq(u), sq(v)) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn max_degree(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut deg = vec![0; vertices];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Checks a list of `(edge, color)` assignments against an edge list: every
/// edge colored exactly once, nothing else colored, no two edges at a vertex
/// share a color. Returns the number of distinct colors.
pub fn check_edge_coloring(
    vertices: usize,
    edges: &[(usize, usize)],
    colored: impl IntoIterator<Item = ((usize, usize), u32)>,
) -> Result<usize, String> {
    let mut want: HashMap<(usize, usize), Option<u32>> =
        edges.iter().map(|&(u, v)| ((u.min(v), u.max(v)), None)).collect();
    let mut at: Vec<Vec<u32>> = vec![Vec::new(); vertices];
    for ((u, v), c) in colored {
        let key = (u.min(v), u.max(v));
        match want.get_mut(&key) {
            None => return Err(format!("{key:?} is not an edge")),
            Some(Some(_)) => return Err(format!("{key:?} colored twice")),
            Some(slot) => *slot = Some(c),
        }
        at[u].push(c);
        at[v].push(c);
    }
    if let Some((e, _)) = want.iter().find(|(_, c)| c.is_none()) {
        return Err(format!("{e:?} is uncolored"));
    }
    for (v, cs) in at.iter_mut().enumerate() {
        cs.sort_unstable();
        if cs.windows(2).any(|w| w[0] == w[1]) {
            return Err(format!("color repeated at vertex {v}"));
        }
    }
    let mut all: Vec<u32> = want.values().map(|c| c.unwrap()).collect();
    all.sort_unstable();
    all.dedup();
    Ok(all.len())
}

/// Path check against an adjacency predicate: a permutation of `0..n`
/// with consecutive entries adjacent, from `a` to `b`.
pub fn is_ham_path(n: usize, adj: impl Fn(usize, usize) -> bool, seq: &[usize], a: usize, b: usize) -> bool {
    let mut seen = vec![false; n];
    seq.len() == n
        && seq.first() == Some(&a)
        && seq.last() == Some(&b)
        && seq.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && seq.windows(2).all(|w| adj(w[0], w[1]))
}

pub fn is_ham_cycle(n: usize, adj: impl Fn(usize, usize) -> bool, seq: &[usize]) -> bool {
    n >= 3 && is_ham_path(n, &adj, seq, seq[0], seq[n - 1]) && adj(seq[n - 1], seq[0])
}

/// Adjacency in the Mycielskian of the `n`-cycle: `x_i = i-1`,
/// `y_i = n+i-1`, `z = 2n`.
pub fn mu_cycle_adjacent(n: usize, u: usize, v: usize) -> bool {
    let (u, v) = (u.min(v), u.max(v));
    let cyc = |i: usize, j: usize| (i + 1) % n == j || (j + 1) % n == i;
    if v == 2 * n {
        return (n..2 * n).contains(&u);
    }
    match (u < n, v < n) {
        (true, true) => cyc(u, v),
        (true, false) => cyc(u, v - n),
        _ => false,
    }
}

/// Keller adjacency straight from the definition, digit by digit.
pub fn keller_adjacent(d: usize, u: usize, v: usize) -> bool {
    let (mut differ, mut by_two) = (0, false);
    for i in 0..d {
        let (a, b) = ((u >> (2 * i)) & 3, (v >> (2 * i)) & 3);
        if a != b {
            differ += 1;
            by_two |= (a + 4 - b) % 4 == 2;
        }
    }
    differ >= 2 && by_two
}

/// Plain depth-first search for a Hamiltonian `a`–`b` path.
pub fn ham_path_exists(n: usize, adj: impl Fn(usize, usize) -> bool, a: usize, b: usize) -> bool {
    fn go(n: usize, adj: &dyn Fn(usize, usize) -> bool, v: usize, b: usize, seen: &mut Vec<bool>, len: usize) -> bool {
        if len == n {
            return v == b;
        }
        if v == b {
            return false;
        }
        for w in 0..n {
            if !seen[w] && adj(v, w) {
                seen[w] = true;
                if go(n, adj, w, b, seen, len + 1) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    let mut seen = vec![false; n];
    seen[a] = true;
    go(n, &adj, a, b, &mut seen, 1)
}
