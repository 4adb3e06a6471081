//! Rook, bishop and queen graphs on an `m × n` board (m rows, n columns).
//!
//! Square `(col, row)` with `1 ≤ col ≤ n`, `1 ≤ row ≤ m` gets vertex id
//! `(row-1)·n + (col-1)`. The lower-left square is white, so a square is
//! white iff `col + row` is even.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardCoord {
    pub col: usize,
    pub row: usize,
}

impl BoardCoord {
    pub fn is_white(self) -> bool {
        (self.col + self.row).is_multiple_of(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Board {
    pub m: usize,
    pub n: usize,
}

impl Board {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::BoardShape { m, n });
        }
        Ok(Board { m, n })
    }

    pub fn squares(&self) -> usize {
        self.m * self.n
    }

    pub fn id(&self, col: usize, row: usize) -> Vertex {
        debug_assert!((1..=self.n).contains(&col) && (1..=self.m).contains(&row));
        (row - 1) * self.n + (col - 1)
    }

    pub fn coord(&self, v: Vertex) -> BoardCoord {
        BoardCoord {
            col: v % self.n + 1,
            row: v / self.n + 1,
        }
    }

    fn labels(&self) -> Vec<String> {
        (0..self.squares())
            .map(|v| {
                let c = self.coord(v);
                format!("({},{})", c.col, c.row)
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareFilter {
    All,
    White,
    Black,
}

fn rook_edges(b: Board) -> Vec<(Vertex, Vertex)> {
    let mut e = Vec::new();
    for row in 1..=b.m {
        for c1 in 1..=b.n {
            for c2 in (c1 + 1)..=b.n {
                e.push((b.id(c1, row), b.id(c2, row)));
            }
        }
    }
    for col in 1..=b.n {
        for r1 in 1..=b.m {
            for r2 in (r1 + 1)..=b.m {
                e.push((b.id(col, r1), b.id(col, r2)));
            }
        }
    }
    e
}

fn bishop_edges(b: Board, filter: SquareFilter) -> Vec<(Vertex, Vertex)> {
    let mut e = Vec::new();
    for row in 1..=b.m {
        for col in 1..=b.n {
            let here = BoardCoord { col, row };
            let keep = match filter {
                SquareFilter::All => true,
                SquareFilter::White => here.is_white(),
                SquareFilter::Black => !here.is_white(),
            };
            if !keep {
                continue;
            }
            // only look upward so each edge appears once
            for step in 1..=(b.m - row) {
                let r2 = row + step;
                if col + step <= b.n {
                    e.push((b.id(col, row), b.id(col + step, r2)));
                }
                if col > step {
                    e.push((b.id(col, row), b.id(col - step, r2)));
                }
            }
        }
    }
    e
}

pub fn build_rook(m: usize, n: usize) -> Result<Graph> {
    let b = Board::new(m, n)?;
    Ok(Graph::from_edges(b.squares(), rook_edges(b))?.with_labels(b.labels()))
}

/// Bishop graph. With a color filter the graph keeps all `m·n` vertices and
/// only the edges among squares of that color.
pub fn build_bishop(m: usize, n: usize, filter: SquareFilter) -> Result<Graph> {
    let b = Board::new(m, n)?;
    Ok(Graph::from_edges(b.squares(), bishop_edges(b, filter))?.with_labels(b.labels()))
}

pub fn build_queen(m: usize, n: usize) -> Result<Graph> {
    let b = Board::new(m, n)?;
    let mut e = rook_edges(b);
    e.extend(bishop_edges(b, SquareFilter::All));
    Ok(Graph::from_edges(b.squares(), e)?.with_labels(b.labels()))
}

/// Closed-form maximum degree of the `m × n` queen graph.
pub fn queen_delta(m: usize, n: usize) -> usize {
    assert!(1 <= m && m <= n);
    if m == n && m.is_multiple_of(2) {
        3 * m + n - 5
    } else {
        3 * m + n - 4
    }
}

/// Closed-form edge count of the `m × n` queen graph.
pub fn queen_edge_count(m: usize, n: usize) -> usize {
    assert!(1 <= m && m <= n);
    let (m, n) = (m as i128, n as i128);
    let num = m * (2 - 2 * m * m - 12 * n + 9 * m * n + 3 * n * n);
    assert_eq!(num % 6, 0, "edge-count formula must be integral");
    (num / 6) as usize
}

/// Maximum degree of the bishop graph `B_{m,n}`.
pub fn bishop_delta(m: usize, n: usize) -> usize {
    assert!(1 <= m && m <= n);
    if m == n && m.is_multiple_of(2) {
        2 * m - 3
    } else {
        2 * m - 2
    }
}

/// Maximum degree of the rook graph `R_{m,n}`.
pub fn rook_delta(m: usize, n: usize) -> usize {
    m + n - 2
}

/// Smallest odd `n` for which `Q_{m,n}` (m odd) is overfull:
/// `n ≥ (2m³ − 11m + 18)/3`.
pub fn overfull_threshold(m: usize) -> usize {
    let m = m as i64;
    let t = (2 * m * m * m - 11 * m + 18 + 2).div_euclid(3).max(m);
    let t = t as usize;
    if t.is_multiple_of(2) {
        t + 1
    } else {
        t
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QueenStatus {
    Class1Proved,
    Class2Overfull,
    Class1Conjectured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueenClassPrediction {
    pub status: QueenStatus,
    pub reason: &'static str,
}

/// Predicted Vizing class of `Q_{m,n}` from the known theorems and the
/// overfull conjecture.
pub fn classify_queen_prediction(m: usize, n: usize) -> Result<QueenClassPrediction> {
    Board::new(m, n)?;
    let p = |status, reason| Ok(QueenClassPrediction { status, reason });
    if m.is_multiple_of(2) || n.is_multiple_of(2) {
        return p(QueenStatus::Class1Proved, "even-dimension");
    }
    if m == n {
        return p(QueenStatus::Class1Proved, "odd-square");
    }
    if 2 * n + 3 * m <= m * m + 2 {
        return p(QueenStatus::Class1Proved, "ladder-multicycle-range");
    }
    if 3 * n + 11 * m >= 2 * m * m * m + 18 {
        return p(QueenStatus::Class2Overfull, "overfull");
    }
    p(QueenStatus::Class1Conjectured, "class-2-iff-overfull conjecture")
}
