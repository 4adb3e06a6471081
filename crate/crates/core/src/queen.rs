//! Class-1 and class-2 edge colorings of queen graphs.
//!
//! Bishop and rook colorings are combined on disjoint color ranges; the
//! odd cases then move the bishop's cyan edges onto rook colors that are
//! free at both ends.

use serde::Serialize;

use crate::bishop_rook::{canonical_bishop_coloring, cyan, ladder_coloring, rook_class1_coloring, MissingColorPlan};
use crate::chess::{bishop_delta, build_queen, queen_delta, Board};
use crate::error::{precondition, Error, Result};
use crate::graph::{Color, EdgeColoring, VerificationReport, Vertex};
use crate::kempe::{find_class1, SearchBudget, SearchOutcome};
use crate::multicycle::{chromatic_index, derive_with_edges};
use crate::verify::verify_edge_coloring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    EvenUnion,
    SquareOdd,
    LadderMulticycle,
    OverfullDeltaPlusOne,
    KempeSearch,
    Trivial,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::EvenUnion => "even-union",
            Construction::SquareOdd => "square-odd",
            Construction::LadderMulticycle => "ladder-multicycle",
            Construction::OverfullDeltaPlusOne => "overfull",
            Construction::KempeSearch => "kempe",
            Construction::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Debug)]
pub struct QueenColoringCertificate {
    pub m: usize,
    pub n: usize,
    pub coloring: EdgeColoring,
    pub claimed_class: u8,
    pub construction: Construction,
}

impl QueenColoringCertificate {
    fn new(m: usize, n: usize, coloring: EdgeColoring, claimed_class: u8, construction: Construction) -> Self {
        QueenColoringCertificate {
            m,
            n,
            coloring: coloring.compacted(),
            claimed_class,
            construction,
        }
    }

    pub fn colors(&self) -> usize {
        self.coloring.colors_used()
    }

    /// Rebuilds `Q_{m,n}` and checks properness, totality and the color
    /// count demanded by the claimed class.
    pub fn verify(&self) -> Result<VerificationReport> {
        let g = build_queen(self.m, self.n)?;
        let mut r = verify_edge_coloring(&g, &self.coloring, true);
        let delta = g.max_degree().unwrap_or(0);
        let want = match self.claimed_class {
            1 => delta,
            2 => delta + 1,
            c => {
                r.detail.push(format!("claimed class {c} is not 1 or 2"));
                r.ok = false;
                return Ok(r);
            }
        };
        if r.colors_used != want && !(g.edge_count() == 0 && r.colors_used == 0) {
            r.detail.push(format!(
                "class {} needs {want} colors, coloring uses {}",
                self.claimed_class, r.colors_used
            ));
        }
        if self.claimed_class == 2 && !g.is_overfull() {
            r.detail.push("class 2 claimed for a graph that is not overfull".into());
        }
        r.ok = r.detail.is_empty();
        Ok(r)
    }

    /// JSON sidecar `{m, n, class, construction, colors}`.
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            m: self.m,
            n: self.n,
            class: self.claimed_class,
            construction: self.construction.tag(),
            colors: self.colors(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sidecar {
    pub m: usize,
    pub n: usize,
    pub class: u8,
    pub construction: &'static str,
    pub colors: usize,
}

fn union(bishop: &EdgeColoring, rook: &EdgeColoring, shift: Color) -> EdgeColoring {
    bishop.union(&rook.map_colors(|c| c + shift))
}

/// Bishop colors `1..Δ_B` plus a class-1 rook coloring shifted past them.
pub fn class1_even(m: usize, n: usize) -> Result<QueenColoringCertificate> {
    Board::new(m, n)?;
    if m % 2 == 1 && n % 2 == 1 {
        return Err(precondition("class1_even needs an even side"));
    }
    let (bishop, _) = canonical_bishop_coloring(m, n)?;
    let rook = rook_class1_coloring(m, n)?;
    let c = union(&bishop, &rook, bishop_delta(m, n) as Color);
    Ok(QueenColoringCertificate::new(m, n, c, 1, Construction::EvenUnion))
}

/// Builds a missing-color plan from `(vertex, A-color)` requirements,
/// filling every row with the unused A-colors in ascending order.
fn plan_from_requirements(b: Board, reqs: &[(Vertex, Color)]) -> Result<MissingColorPlan> {
    let (m, n) = (b.m, b.n);
    let mut rows: Vec<Vec<Color>> = vec![vec![0; n - 1]; m];
    for &(v, a) in reqs {
        let c = b.coord(v);
        if c.col == 1 {
            return Err(Error::Internal(format!("A-color {a} requested at column 1")));
        }
        let slot = &mut rows[c.row - 1][c.col - 2];
        if *slot != 0 && *slot != a {
            return Err(Error::Internal(format!(
                "two A-colors requested at ({}, {})",
                c.col, c.row
            )));
        }
        *slot = a;
    }
    let a_colors: Vec<Color> = (m + 1..m + n).map(|x| x as Color).collect();
    for (r, row) in rows.iter_mut().enumerate() {
        let mut taken: Vec<Color> = row.iter().copied().filter(|&x| x != 0).collect();
        taken.sort_unstable();
        if taken.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Internal(format!("A-color requested twice in row {}", r + 1)));
        }
        let mut spare = a_colors.iter().copied().filter(|x| !taken.contains(x));
        for slot in row.iter_mut().filter(|x| **x == 0) {
            *slot = spare.next().unwrap();
        }
    }
    let plan = MissingColorPlan { m, n, rows };
    plan.validate()?;
    Ok(plan)
}

/// Reflects a board vertex left-right.
fn mirror(b: Board, v: Vertex) -> Vertex {
    let c = b.coord(v);
    b.id(b.n + 1 - c.col, c.row)
}

/// Ladder rook coloring where each requested A-color is missing at its
/// vertex. Requirements in column 1 are handled by mirroring the board.
fn ladder_with_requirements(b: Board, reqs: &[(Vertex, Color)]) -> Result<EdgeColoring> {
    let in_first = reqs.iter().any(|&(v, _)| b.coord(v).col == 1);
    if !in_first {
        return ladder_coloring(b.m, b.n, &plan_from_requirements(b, reqs)?);
    }
    let flipped: Vec<(Vertex, Color)> = reqs.iter().map(|&(v, a)| (mirror(b, v), a)).collect();
    if flipped.iter().any(|&(v, _)| b.coord(v).col == 1) {
        return Err(Error::Internal("requirements touch both outer columns".into()));
    }
    let c = ladder_coloring(b.m, b.n, &plan_from_requirements(b, &flipped)?)?;
    let mut out = EdgeColoring::new(c.declared_color_count());
    for ((u, v), col) in c.iter() {
        out.set(mirror(b, u), mirror(b, v), col);
    }
    Ok(out)
}

/// `Q_{n,n}` for odd `n`: the canonical bishop coloring has a single cyan
/// edge; a ladder rook coloring leaves its largest color free at both ends
/// of that edge, which then takes it.
pub fn class1_square_odd(n: usize) -> Result<QueenColoringCertificate> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(precondition("class1_square_odd needs odd n >= 3"));
    }
    let b = Board::new(n, n)?;
    let (mut bishop, _) = canonical_bishop_coloring(n, n)?;
    let cyan_edges: Vec<(Vertex, Vertex)> = bishop.iter().filter(|&(_, c)| c == cyan(n)).map(|(e, _)| e).collect();
    if cyan_edges.len() != 1 {
        return Err(Error::Internal(format!(
            "expected one cyan edge, found {}",
            cyan_edges.len()
        )));
    }
    let (x, z) = cyan_edges[0];
    let top = (2 * n - 1) as Color;
    let rook = ladder_with_requirements(b, &[(x, top), (z, top)])?;
    let shift = cyan(n);
    bishop.set(x, z, top + shift);
    let c = union(&bishop, &rook, shift);
    let cert = QueenColoringCertificate::new(n, n, c, 1, Construction::SquareOdd);
    check(&cert)?;
    Ok(cert)
}

/// The ladder-and-multicycle construction for odd `m ≤ n`: color the
/// derived multicycle with at most `n − 1` colors, turn the colors into
/// missing rook colors at the cyan endpoints, and move each cyan edge onto
/// its missing color.
pub fn class1_ladder_multicycle(m: usize, n: usize) -> Result<QueenColoringCertificate> {
    let b = Board::new(m, n)?;
    if m.is_multiple_of(2) || n.is_multiple_of(2) || m < 3 {
        return Err(precondition("ladder-multicycle needs odd 3 <= m <= n"));
    }
    let derived = derive_with_edges(m, n)?;
    let ci = chromatic_index(&derived.multicycle);
    if ci.upper > n - 1 {
        return Err(Error::Inapplicable(format!(
            "derived multicycle needs {} colors, only {} A-colors available",
            ci.upper,
            n - 1
        )));
    }
    // the j-th distinct multicycle color becomes A-color m + j
    let mut used: Vec<Color> = ci.coloring.colors.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let a_color = |c: Color| m as Color + 1 + used.binary_search(&c).unwrap() as Color;
    let mut next_at = vec![0usize; m];
    let mut reqs = Vec::new();
    let mut recolor = Vec::new();
    for &((u, v), pos) in &derived.edges {
        let col = a_color(ci.coloring.colors[pos][next_at[pos]]);
        next_at[pos] += 1;
        reqs.push((u, col));
        reqs.push((v, col));
        recolor.push(((u, v), col));
    }
    let rook = ladder_with_requirements(b, &reqs)?;
    let shift = cyan(m);
    let (mut bishop, _) = canonical_bishop_coloring(m, n)?;
    for ((u, v), col) in recolor {
        bishop.set(u, v, col + shift);
    }
    let c = union(&bishop, &rook, shift);
    let cert = QueenColoringCertificate::new(m, n, c, 1, Construction::LadderMulticycle);
    check(&cert)?;
    Ok(cert)
}

/// The `Δ + 1` union of the canonical bishop coloring and the identity
/// ladder coloring, for any odd `m ≤ n`.
pub fn delta_plus_one_union(m: usize, n: usize) -> Result<EdgeColoring> {
    Board::new(m, n)?;
    if m.is_multiple_of(2) || n.is_multiple_of(2) {
        return Err(precondition("ladder union needs both sides odd"));
    }
    let (bishop, _) = canonical_bishop_coloring(m, n)?;
    let rook = ladder_coloring(m, n, &MissingColorPlan::identity(m, n))?;
    Ok(union(&bishop, &rook, bishop_delta(m, n) as Color))
}

/// Class-2 certificate for overfull odd boards.
pub fn class2_overfull_coloring(m: usize, n: usize) -> Result<QueenColoringCertificate> {
    let g = build_queen(m, n)?;
    if !g.is_overfull() {
        return Err(precondition(format!("Q_{{{m},{n}}} is not overfull")));
    }
    let c = delta_plus_one_union(m, n)?;
    let cert = QueenColoringCertificate::new(m, n, c, 2, Construction::OverfullDeltaPlusOne);
    check(&cert)?;
    Ok(cert)
}

fn check(cert: &QueenColoringCertificate) -> Result<()> {
    let r = cert.verify()?;
    if r.ok {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "{} certificate for Q_{{{},{}}} failed: {}",
            cert.construction.tag(),
            cert.m,
            cert.n,
            r.detail.join("; ")
        )))
    }
}

/// Picks the first applicable construction, falling back to Kempe search
/// warm-started from the `Δ + 1` union. Boards with `m > n` are transposed.
pub fn classify_and_color(m: usize, n: usize, budget: &SearchBudget) -> Result<QueenColoringCertificate> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    Board::new(m, n)?;
    if m * n == 1 {
        return Ok(QueenColoringCertificate::new(
            1,
            1,
            EdgeColoring::new(0),
            1,
            Construction::Trivial,
        ));
    }
    if m % 2 == 0 || n % 2 == 0 {
        return class1_even(m, n);
    }
    if m == n {
        return class1_square_odd(n);
    }
    if build_queen(m, n)?.is_overfull() {
        return class2_overfull_coloring(m, n);
    }
    if m >= 3 {
        match class1_ladder_multicycle(m, n) {
            Ok(c) => return Ok(c),
            Err(Error::Inapplicable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let g = build_queen(m, n)?;
    let warm = delta_plus_one_union(m, n)?;
    match find_class1(&g, budget, Some(&warm)) {
        SearchOutcome::Found { coloring, .. } => {
            let cert = QueenColoringCertificate::new(m, n, coloring, 1, Construction::KempeSearch);
            check(&cert)?;
            Ok(cert)
        }
        SearchOutcome::Overfull => Err(Error::Internal("overfull graph reached the search".into())),
        SearchOutcome::Exhausted { stats } => Err(Error::BudgetExhausted(format!(
            "no {}-coloring of Q_{{{m},{n}}} after {} moves in {} restarts",
            queen_delta(m, n),
            stats.moves,
            stats.restarts_used
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_examples() {
        for (m, n, k) in [(4, 5, 13), (2, 2, 3), (4, 4, 11), (3, 4, 9)] {
            let cert = class1_even(m, n).unwrap();
            assert!(cert.verify().unwrap().ok, "({m},{n})");
            assert_eq!(cert.colors(), k, "({m},{n})");
        }
    }

    #[test]
    fn square_odd_examples() {
        let c7 = class1_square_odd(7).unwrap();
        assert_eq!(c7.colors(), 24);
        let c3 = class1_square_odd(3).unwrap();
        assert_eq!(c3.colors(), queen_delta(3, 3));
    }

    #[test]
    fn ladder_multicycle_examples() {
        assert_eq!(class1_ladder_multicycle(7, 9).unwrap().colors(), 26);
        assert_eq!(class1_ladder_multicycle(5, 11).unwrap().colors(), queen_delta(5, 11));
    }

    #[test]
    fn overfull_examples() {
        let c = class2_overfull_coloring(3, 13).unwrap();
        assert_eq!(c.colors(), 19);
        assert!(class2_overfull_coloring(3, 11).is_err());
    }

    #[test]
    fn dispatch() {
        let b = SearchBudget::default();
        let c = classify_and_color(3, 7, &b).unwrap();
        assert_eq!((c.claimed_class, c.colors()), (1, 12));
        let c = classify_and_color(13, 3, &b).unwrap();
        assert_eq!((c.claimed_class, c.colors()), (2, 19));
        assert_eq!(
            classify_and_color(5, 5, &b).unwrap().construction,
            Construction::SquareOdd
        );
        assert_eq!(classify_and_color(1, 1, &b).unwrap().colors(), 0);
    }

    #[test]
    fn sidecar_fields() {
        let c = class1_even(2, 3).unwrap();
        let s = c.sidecar();
        assert_eq!((s.m, s.n, s.class, s.construction), (2, 3, 1, "even-union"));
    }
}
