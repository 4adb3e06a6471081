//! Explicit colorings of complete graphs, bishop graphs and rook graphs.

use std::fmt;

use crate::chess::{Board, BoardCoord};
use crate::error::{precondition, Error, Result};
use crate::graph::{edge_key, Color, EdgeColoring, Vertex};

fn inv2(n: usize) -> usize {
    // n odd
    n.div_ceil(2)
}

/// Base scheme for `K_n` on vertices `0..n`; colors are `0..n` (odd n) or
/// `0..n-1` (even n).
///
/// Odd n: `{u, v}` gets `(u+v)/2 mod n`, so vertex `u` misses color `u`.
/// Even n: the odd scheme on `0..n-1` plus `{u, n-1}` colored `u`.
fn base_color(n: usize, u: usize, v: usize) -> usize {
    if n % 2 == 1 {
        (u + v) * inv2(n) % n
    } else {
        let h = n - 1;
        if v == h {
            u
        } else if u == h {
            v
        } else {
            (u + v) * inv2(h) % h
        }
    }
}

/// The base class that gets replaced by a prescribed matching: the pairs
/// `{j, -j}` (plus `{0, n-1}` for even n), i.e. color 0 of [`base_color`].
fn base_matching(n: usize) -> Vec<(usize, usize)> {
    if n % 2 == 1 {
        (1..=n / 2).map(|j| (j, n - j)).collect()
    } else {
        let h = n - 1;
        let mut m = vec![(0, h)];
        m.extend((1..=h / 2).map(|j| (j, h - j)));
        m
    }
}

/// Proper edge coloring of `K_n` (vertices `0..n`) with `n` colors for odd
/// `n` and `n-1` colors for even `n`. Colors start at 1.
///
/// For odd `n` vertex `v` misses exactly color `v+1` unless a matching is
/// prescribed. With `matching_as_class = Some(M)`, `M` must be a maximum
/// matching; the coloring is relabeled so that `M` is exactly the class of
/// the last color, and dropping that color colors `K_n \ M`.
pub fn complete_graph_coloring(n: usize, matching_as_class: Option<&[(Vertex, Vertex)]>) -> Result<EdgeColoring> {
    let k = if n % 2 == 1 { n } else { n.saturating_sub(1) };
    let mut c = EdgeColoring::new(k as u32);
    if n < 2 {
        return Ok(c);
    }
    let pi: Vec<Vertex> = match matching_as_class {
        None => (0..n).collect(),
        Some(mm) => matching_relabel(n, mm)?,
    };
    // with a prescribed matching, base class 0 maps onto it and becomes color k
    let label = |x: usize| -> Color {
        if matching_as_class.is_some() {
            if x == 0 {
                k as Color
            } else {
                x as Color
            }
        } else {
            x as Color + 1
        }
    };
    for u in 0..n {
        for v in (u + 1)..n {
            c.set(pi[u], pi[v], label(base_color(n, u, v)));
        }
    }
    Ok(c)
}

/// Bijection `π` of `0..n` sending the base matching onto `mm`.
fn matching_relabel(n: usize, mm: &[(Vertex, Vertex)]) -> Result<Vec<Vertex>> {
    if mm.len() != n / 2 {
        return Err(precondition(format!(
            "matching has {} edges, a maximum matching of K_{n} has {}",
            mm.len(),
            n / 2
        )));
    }
    let mut covered = vec![false; n];
    for &(a, b) in mm {
        if a == b || a >= n || b >= n {
            return Err(precondition(format!("invalid matching edge ({a}, {b})")));
        }
        for x in [a, b] {
            if covered[x] {
                return Err(precondition(format!("vertex {x} covered twice by matching")));
            }
            covered[x] = true;
        }
    }
    let mut pi = vec![usize::MAX; n];
    for (&(bu, bv), &(a, b)) in base_matching(n).iter().zip(mm) {
        pi[bu] = a;
        pi[bv] = b;
    }
    if n % 2 == 1 {
        pi[0] = covered.iter().position(|&c| !c).unwrap();
    }
    Ok(pi)
}

/// Colors of `1..=k` not present at `v` among the given incident colors.
pub fn missing(k: Color, present: impl IntoIterator<Item = Color>) -> Vec<Color> {
    let mut seen = vec![false; k as usize + 1];
    for c in present {
        if (c as usize) <= k as usize {
            seen[c as usize] = true;
        }
    }
    (1..=k).filter(|&c| !seen[c as usize]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSign {
    Plus,
    Minus,
    /// The two groups of index `m/2` coincide when `m` is even.
    Merged,
}

/// One group of the bishop path decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathGroup {
    pub index: usize,
    pub sign: GroupSign,
    /// Length of the negative-slope edges in this group.
    pub neg_len: usize,
    /// Length of the positive-slope edges in this group.
    pub pos_len: usize,
    pub colors: Vec<Color>,
    /// Each path listed from its leftmost vertex.
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub m: usize,
    pub n: usize,
    pub groups: Vec<PathGroup>,
}

impl fmt::Display for PathDecomposition {
    /// One line per path: `G<i><sign>: v1 v2 ...` with 1-based vertex ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            let sign = match g.sign {
                GroupSign::Plus => "+",
                GroupSign::Minus => "-",
                GroupSign::Merged => "+-",
            };
            for p in &g.paths {
                write!(f, "G{}{sign}:", g.index)?;
                for v in p {
                    write!(f, " {}", v + 1)?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn right_of(b: Board, c: BoardCoord, neg: usize, pos: usize) -> Option<BoardCoord> {
    // neg-slope step goes down-right, pos-slope step goes up-right
    if c.row > neg && c.col + neg <= b.n {
        return Some(BoardCoord {
            col: c.col + neg,
            row: c.row - neg,
        });
    }
    if c.row + pos <= b.m && c.col + pos <= b.n {
        return Some(BoardCoord {
            col: c.col + pos,
            row: c.row + pos,
        });
    }
    None
}

fn left_of(b: Board, c: BoardCoord, neg: usize, pos: usize) -> Option<BoardCoord> {
    if c.row + neg <= b.m && c.col > neg {
        return Some(BoardCoord {
            col: c.col - neg,
            row: c.row + neg,
        });
    }
    if c.row > pos && c.col > pos {
        return Some(BoardCoord {
            col: c.col - pos,
            row: c.row - pos,
        });
    }
    None
}

/// The canonical class-1 coloring of the bishop graph `B_{m,n}` together
/// with its path decomposition.
///
/// Group `(i,+)` holds negative-slope edges of length `i` and positive-slope
/// edges of length `m-i` and uses colors `4i-3, 4i-2`; group `(i,-)` swaps
/// the slopes and uses `4i-1, 4i`. Each path alternates its two colors with
/// the first one on the leftmost edge.
pub fn canonical_bishop_coloring(m: usize, n: usize) -> Result<(EdgeColoring, PathDecomposition)> {
    let b = Board::new(m, n)?;
    let mut coloring = EdgeColoring::new(crate::chess::bishop_delta(m, n) as u32);
    let mut groups = Vec::new();
    for i in 1..=m / 2 {
        let merged = 2 * i == m;
        let specs: Vec<(GroupSign, usize, usize, Color)> = if merged {
            vec![(GroupSign::Merged, i, i, (4 * i - 3) as Color)]
        } else {
            vec![
                (GroupSign::Plus, i, m - i, (4 * i - 3) as Color),
                (GroupSign::Minus, m - i, i, (4 * i - 1) as Color),
            ]
        };
        for (sign, neg, pos, first) in specs {
            let mut paths = Vec::new();
            for v in 0..b.squares() {
                let c = b.coord(v);
                if left_of(b, c, neg, pos).is_some() || right_of(b, c, neg, pos).is_none() {
                    continue;
                }
                let mut path = vec![v];
                let mut cur = c;
                while let Some(nx) = right_of(b, cur, neg, pos) {
                    path.push(b.id(nx.col, nx.row));
                    cur = nx;
                }
                for (j, w) in path.windows(2).enumerate() {
                    coloring.set(w[0], w[1], first + (j % 2) as Color);
                }
                paths.push(path);
            }
            let used_second = paths.iter().any(|p| p.len() > 2);
            let colors = if used_second {
                vec![first, first + 1]
            } else {
                vec![first]
            };
            groups.push(PathGroup {
                index: i,
                sign,
                neg_len: neg,
                pos_len: pos,
                colors,
                paths,
            });
        }
    }
    Ok((coloring, PathDecomposition { m, n, groups }))
}

/// Color used by the canonical coloring on the last group's second class.
pub fn cyan(m: usize) -> Color {
    (2 * m - 2) as Color
}

/// Class-1 coloring of `R_{m,n}` with `m+n-2` colors; not both odd.
pub fn rook_class1_coloring(m: usize, n: usize) -> Result<EdgeColoring> {
    let b = Board::new(m, n)?;
    if m % 2 == 1 && n % 2 == 1 {
        return Err(Error::Inapplicable(format!(
            "R_{{{m},{n}}} with both sides odd is class 2; use the ladder coloring"
        )));
    }
    let mut c = EdgeColoring::new((m + n - 2) as u32);
    // rows are K_n on columns, columns are K_m on rows
    let row_edge = |c1: usize, c2: usize, r: usize| (b.id(c1 + 1, r + 1), b.id(c2 + 1, r + 1));
    let col_edge = |r1: usize, r2: usize, col: usize| (b.id(col + 1, r1 + 1), b.id(col + 1, r2 + 1));

    if m.is_multiple_of(2) && n.is_multiple_of(2) {
        for r in 0..m {
            for c1 in 0..n {
                for c2 in (c1 + 1)..n {
                    let (u, v) = row_edge(c1, c2, r);
                    c.set(u, v, base_color(n, c1, c2) as Color + 1);
                }
            }
        }
        for col in 0..n {
            for r1 in 0..m {
                for r2 in (r1 + 1)..m {
                    let (u, v) = col_edge(r1, r2, col);
                    c.set(u, v, (n + base_color(m, r1, r2)) as Color);
                }
            }
        }
    } else if m.is_multiple_of(2) {
        // rows: odd K_n, column i misses color i+1; column i: {i+1} ∪ {n+1..}
        for r in 0..m {
            for c1 in 0..n {
                for c2 in (c1 + 1)..n {
                    let (u, v) = row_edge(c1, c2, r);
                    c.set(u, v, base_color(n, c1, c2) as Color + 1);
                }
            }
        }
        for col in 0..n {
            let palette: Vec<Color> = std::iter::once(col as Color + 1)
                .chain((n + 1..=n + m - 2).map(|x| x as Color))
                .collect();
            for r1 in 0..m {
                for r2 in (r1 + 1)..m {
                    let (u, v) = col_edge(r1, r2, col);
                    c.set(u, v, palette[base_color(m, r1, r2)]);
                }
            }
        }
    } else {
        // m odd, n even: columns odd K_m, row r misses color r+1
        for col in 0..n {
            for r1 in 0..m {
                for r2 in (r1 + 1)..m {
                    let (u, v) = col_edge(r1, r2, col);
                    c.set(u, v, base_color(m, r1, r2) as Color + 1);
                }
            }
        }
        for r in 0..m {
            let palette: Vec<Color> = std::iter::once(r as Color + 1)
                .chain((m + 1..=m + n - 2).map(|x| x as Color))
                .collect();
            for c1 in 0..n {
                for c2 in (c1 + 1)..n {
                    let (u, v) = row_edge(c1, c2, r);
                    c.set(u, v, palette[base_color(n, c1, c2)]);
                }
            }
        }
    }
    Ok(c)
}

/// Per-row prescription of the missing A-colors of a ladder coloring,
/// `A = {m+1, …, m+n-1}`.
///
/// `rows[r][j]` is the A-color missing at the square in row `r+1`,
/// column `j+2`. Column 1 misses no A-color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingColorPlan {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<Vec<Color>>,
}

impl MissingColorPlan {
    pub fn identity(m: usize, n: usize) -> Self {
        let row: Vec<Color> = (m + 1..m + n).map(|x| x as Color).collect();
        MissingColorPlan {
            m,
            n,
            rows: vec![row; m],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows.len() != self.m {
            return Err(precondition(format!(
                "plan has {} rows, expected {}",
                self.rows.len(),
                self.m
            )));
        }
        let lo = self.m as Color + 1;
        let hi = (self.m + self.n - 1) as Color;
        for (r, row) in self.rows.iter().enumerate() {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            if sorted != (lo..=hi).collect::<Vec<_>>() {
                return Err(precondition(format!(
                    "plan row {} is not a permutation of {lo}..={hi}",
                    r + 1
                )));
            }
        }
        Ok(())
    }
}

/// The class-2 ladder coloring of `R_{m,n}` (m, n odd, m ≤ n) with
/// `m+n-1` colors.
///
/// Columns use colors `1..=m` with row `r` missing color `r`. In row `r`
/// the matching on columns 2-3, 4-5, …, (n-1)-n gets color `r`; the rest of
/// the row uses `A` and realizes `plan`.
pub fn ladder_coloring(m: usize, n: usize, plan: &MissingColorPlan) -> Result<EdgeColoring> {
    let b = Board::new(m, n)?;
    if m.is_multiple_of(2) || n.is_multiple_of(2) {
        return Err(precondition("ladder coloring needs both sides odd"));
    }
    if plan.m != m || plan.n != n {
        return Err(precondition("plan shape does not match the board"));
    }
    plan.validate()?;
    let mut c = EdgeColoring::new((m + n - 1) as u32);
    for col in 1..=n {
        for r1 in 0..m {
            for r2 in (r1 + 1)..m {
                c.set(b.id(col, r1 + 1), b.id(col, r2 + 1), base_color(m, r1, r2) as Color + 1);
            }
        }
    }
    // K_n on columns 0..n with the ladder matching as the dropped class
    let ladder: Vec<(usize, usize)> = (0..n / 2).map(|t| (2 * t + 1, 2 * t + 2)).collect();
    let kn = complete_graph_coloring(n, Some(&ladder))?;
    let dropped = n as Color;
    // natural missing color at each column once the ladder class is dropped
    let mut natural = vec![0 as Color; n];
    for (x, slot) in natural.iter_mut().enumerate().skip(1) {
        let present = (0..n)
            .filter(|&y| y != x)
            .map(|y| kn.get(x, y).unwrap())
            .filter(|&c| c != dropped);
        let miss = missing(n as Color - 1, present);
        debug_assert_eq!(miss.len(), 1);
        *slot = miss[0];
    }
    for r in 1..=m {
        let mut relabel = vec![0 as Color; n];
        for col in 1..n {
            relabel[natural[col] as usize] = plan.rows[r - 1][col - 1];
        }
        for ((x, y), col) in kn.iter() {
            let color = if col == dropped {
                r as Color
            } else {
                relabel[col as usize]
            };
            c.set(b.id(x + 1, r), b.id(y + 1, r), color);
        }
    }
    Ok(c)
}

/// For a coloring of some graph, the sorted list of colors missing at `v`
/// from the palette `1..=k`.
pub fn missing_at(c: &EdgeColoring, g: &crate::graph::Graph, v: Vertex, k: Color) -> Vec<Color> {
    missing(k, g.neighbors(v).filter_map(|w| c.get(v, w)))
}

/// Normalized key for a board edge given in coordinates.
pub fn board_edge(b: Board, a: BoardCoord, z: BoardCoord) -> (Vertex, Vertex) {
    edge_key(b.id(a.col, a.row), b.id(z.col, z.row))
}
