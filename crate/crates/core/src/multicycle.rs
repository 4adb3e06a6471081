//! Edge colorings of odd multicycles and multipaths, and the multicycle
//! derived from the last color of the canonical bishop coloring.
//!
//! A multicycle on `m` vertices (m odd) is stored by position: position `i`
//! is the bundle of `mult[i]` parallel edges between `order[i]` and
//! `order[i+1 mod m]`. A color class is therefore a set of pairwise
//! non-adjacent positions, and a class has at most `k = (m-1)/2` edges.

use serde::Serialize;

use crate::bishop_rook::{canonical_bishop_coloring, cyan};
use crate::chess::Board;
use crate::error::{precondition, Error, Result};
use crate::graph::{Color, VerificationReport};

/// Default cap on `σ` for the exact solver.
pub const DEFAULT_SIGMA_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicycle {
    m: usize,
    mult: Vec<usize>,
}

impl Multicycle {
    pub fn new(mult: Vec<usize>) -> Result<Self> {
        let m = mult.len();
        if m < 3 || m.is_multiple_of(2) {
            return Err(precondition(format!("multicycle length must be odd and >= 3, got {m}")));
        }
        Ok(Multicycle { m, mult })
    }

    /// The regular multicycle `C_{m,a}`.
    pub fn regular(m: usize, a: usize) -> Result<Self> {
        Multicycle::new(vec![a; m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        (self.m - 1) / 2
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    /// Cyclic row order `1, 1+k, 1+2k, … (mod m)`, values in `1..=m`.
    pub fn order(&self) -> Vec<usize> {
        row_order(self.m)
    }

    pub fn sigma(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn mu_min(&self) -> usize {
        *self.mult.iter().min().unwrap()
    }

    pub fn mu_max(&self) -> usize {
        *self.mult.iter().max().unwrap()
    }

    /// Degree of the vertex between positions `i-1` and `i`.
    pub fn degree_at(&self, i: usize) -> usize {
        self.mult[(i + self.m - 1) % self.m] + self.mult[i]
    }

    pub fn delta(&self) -> usize {
        (0..self.m).map(|i| self.degree_at(i)).max().unwrap()
    }

    /// `⌈σ/k⌉`: every color class has at most `k` edges.
    pub fn tau(&self) -> usize {
        self.sigma().div_ceil(self.k())
    }

    pub fn lower_bound(&self) -> usize {
        self.delta().max(self.tau())
    }

    pub fn is_multipath(&self) -> bool {
        self.mult.contains(&0)
    }
}

fn row_order(m: usize) -> Vec<usize> {
    let k = (m - 1) / 2;
    (0..m).map(|i| (i * k) % m + 1).collect()
}

/// Colors per position; `colors[i].len() == mult[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticycleColoring {
    pub colors: Vec<Vec<Color>>,
}

impl MulticycleColoring {
    pub fn color_count(&self) -> usize {
        let mut all: Vec<Color> = self.colors.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Checks multiplicities and per-vertex color disjointness.
pub fn verify_multicycle_coloring(mc: &Multicycle, c: &MulticycleColoring) -> VerificationReport {
    let mut detail = Vec::new();
    if c.colors.len() != mc.m {
        detail.push(format!("{} positions colored, multicycle has {}", c.colors.len(), mc.m));
    } else {
        for (i, cols) in c.colors.iter().enumerate() {
            if cols.len() != mc.mult[i] {
                detail.push(format!(
                    "position {i}: {} colors for multiplicity {}",
                    cols.len(),
                    mc.mult[i]
                ));
            }
            if cols.contains(&0) {
                detail.push(format!("position {i}: color 0"));
            }
        }
        for i in 0..mc.m {
            let prev = &c.colors[(i + mc.m - 1) % mc.m];
            let mut at: Vec<Color> = prev.iter().chain(&c.colors[i]).copied().collect();
            at.sort_unstable();
            if at.windows(2).any(|w| w[0] == w[1]) {
                detail.push(format!("vertex before position {i} repeats a color"));
            }
        }
    }
    VerificationReport::from_violations(c.color_count(), mc.delta(), detail)
}

/// A derived multicycle together with the cyan edges it came from.
#[derive(Clone, Debug)]
pub struct DerivedMulticycle {
    pub multicycle: Multicycle,
    /// Cyan bishop edges as `(u, v)` board vertex ids with their position.
    pub edges: Vec<((usize, usize), usize)>,
}

/// Projects the cyan edges of the canonical coloring of `B_{m,n}` onto rows.
pub fn derive(m: usize, n: usize) -> Result<Multicycle> {
    derive_with_edges(m, n).map(|d| d.multicycle)
}

pub fn derive_with_edges(m: usize, n: usize) -> Result<DerivedMulticycle> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) || m < 3 {
        return Err(precondition("derived multicycle needs odd m >= 3 and odd n"));
    }
    let b = Board::new(m, n)?;
    let (coloring, _) = canonical_bishop_coloring(m, n)?;
    let order = row_order(m);
    let mut pos_of_row = vec![0; m + 1];
    for (i, &r) in order.iter().enumerate() {
        pos_of_row[r] = i;
    }
    let mut mult = vec![0; m];
    let mut edges = Vec::new();
    let target = cyan(m);
    for ((u, v), c) in coloring.iter() {
        if c != target {
            continue;
        }
        let (pu, pv) = (pos_of_row[b.coord(u).row], pos_of_row[b.coord(v).row]);
        let pos = if (pu + 1) % m == pv {
            pu
        } else if (pv + 1) % m == pu {
            pv
        } else {
            return Err(Error::Internal(format!(
                "cyan edge joins rows {} and {}, not adjacent in the cyclic order",
                b.coord(u).row,
                b.coord(v).row
            )));
        };
        mult[pos] += 1;
        edges.push(((u, v), pos));
    }
    Ok(DerivedMulticycle {
        multicycle: Multicycle { m, mult },
        edges,
    })
}

/// Coloring of `C_{m,a}` with `2a + ⌈a/k⌉` colors.
///
/// The `a` simple cycles are split into groups of at most `k`; cycle `t` of a
/// group puts the group's extra color at position `2t` and alternates its two
/// own colors around the rest.
pub fn regular_coloring(m: usize, a: usize) -> Result<MulticycleColoring> {
    let mc = Multicycle::regular(m, a)?;
    let k = mc.k();
    let mut colors = vec![Vec::with_capacity(a); m];
    let mut next: Color = 1;
    let mut remaining = a;
    while remaining > 0 {
        let s = remaining.min(k);
        let extra = next + 2 * s as Color;
        for t in 0..s {
            let (c1, c2) = (next + 2 * t as Color, next + 2 * t as Color + 1);
            place_cycle(&mut colors, 2 * t, extra, c1, c2);
        }
        next = extra + 1;
        remaining -= s;
    }
    Ok(MulticycleColoring { colors })
}

/// One simple odd cycle: `extra` at position `x`, then `c1, c2, c1, …`.
fn place_cycle(colors: &mut [Vec<Color>], x: usize, extra: Color, c1: Color, c2: Color) {
    let m = colors.len();
    colors[x].push(extra);
    for j in 1..m {
        colors[(x + j) % m].push(if j % 2 == 1 { c1 } else { c2 });
    }
}

/// Multipath coloring with exactly `Δ` colors: walk the edges starting just
/// after a zero position and give the `i`-th edge color `i mod Δ`.
pub fn multipath_coloring(mc: &Multicycle) -> Result<MulticycleColoring> {
    let z = mc
        .mult
        .iter()
        .position(|&x| x == 0)
        .ok_or_else(|| precondition("multipath coloring needs a zero multiplicity"))?;
    Ok(multipath_with_palette(
        mc,
        z,
        &(1..=mc.delta() as Color).collect::<Vec<_>>(),
    ))
}

fn multipath_with_palette(mc: &Multicycle, zero: usize, palette: &[Color]) -> MulticycleColoring {
    let m = mc.m;
    let mut colors = vec![Vec::new(); m];
    let mut i = 0;
    for j in 1..m {
        let p = (zero + j) % m;
        for _ in 0..mc.mult[p] {
            colors[p].push(palette[i % palette.len()]);
            i += 1;
        }
    }
    MulticycleColoring { colors }
}

/// Cyclic enumeration with `d` colors, tried from every starting position;
/// `None` if every start leaves a conflict.
pub fn greedy_cyclic(mc: &Multicycle, d: usize) -> Option<MulticycleColoring> {
    if d == 0 {
        return (mc.sigma() == 0).then(|| MulticycleColoring {
            colors: vec![Vec::new(); mc.m],
        });
    }
    for start in 0..mc.m {
        let mut colors = vec![Vec::new(); mc.m];
        let mut i = 0;
        for j in 0..mc.m {
            let p = (start + j) % mc.m;
            for _ in 0..mc.mult[p] {
                colors[p].push((i % d) as Color + 1);
                i += 1;
            }
        }
        let c = MulticycleColoring { colors };
        if verify_multicycle_coloring(mc, &c).ok {
            return Some(c);
        }
    }
    None
}

/// Kernel `C_{m,μ⁻}` plus residual multipath, using at most
/// `Δ + ⌈μ⁻/k⌉` colors and one fewer when the last kernel group's extra
/// color can be shared with the residual. Returns the coloring and the
/// number of colors it uses.
pub fn kernel_residual_coloring(mc: &Multicycle) -> Result<(MulticycleColoring, usize)> {
    let plain = kernel_residual_plain(mc)?;
    if let Some(better) = kernel_residual_shared(mc) {
        if verify_multicycle_coloring(mc, &better).ok && better.color_count() < plain.color_count() {
            let n = better.color_count();
            return Ok((better, n));
        }
    }
    let n = plain.color_count();
    Ok((plain, n))
}

fn residual_of(mc: &Multicycle, a: usize) -> Multicycle {
    Multicycle {
        m: mc.m,
        mult: mc.mult.iter().map(|&x| x - a).collect(),
    }
}

fn kernel_residual_plain(mc: &Multicycle) -> Result<MulticycleColoring> {
    let a = mc.mu_min();
    let mut kernel = regular_coloring(mc.m, a)?;
    let used = kernel.max_color();
    let res = residual_of(mc, a);
    if res.sigma() > 0 {
        let rc = multipath_coloring(&res)?;
        for (p, cols) in rc.colors.into_iter().enumerate() {
            kernel.colors[p].extend(cols.into_iter().map(|c| c + used));
        }
    }
    Ok(kernel)
}

/// The shared-extra-color refinement. The last kernel group has `s` cycles
/// whose extra color `X` sits on `s` pairwise non-adjacent positions. If we
/// can find a set `P` of pairwise non-adjacent positions containing a set
/// `F` of residual-positive positions that touches every vertex of maximum
/// residual degree, with `|P| - |F| ≥ s`, then `X` also colors one residual
/// edge at each position of `F` and the rest of the residual needs one
/// color fewer.
fn kernel_residual_shared(mc: &Multicycle) -> Option<MulticycleColoring> {
    let m = mc.m;
    let k = mc.k();
    let a = mc.mu_min();
    if a == 0 || m > 25 {
        return None;
    }
    let res = residual_of(mc, a);
    let dr = res.delta();
    if dr == 0 {
        return None;
    }
    let s = if a.is_multiple_of(k) { k } else { a % k };
    let majors: Vec<usize> = (0..m).filter(|&i| res.degree_at(i) == dr).collect();
    let positive: Vec<usize> = (0..m).filter(|&p| res.mult[p] > 0).collect();

    let adjacent = |p: usize, q: usize| (p + 1) % m == q || (q + 1) % m == p;
    // vertex i sits between positions i-1 and i
    let touches = |p: usize, v: usize| p == v || (p + 1) % m == v;

    for mask in 1u32..(1 << positive.len()) {
        let f: Vec<usize> = positive
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if f.iter()
            .enumerate()
            .any(|(i, &p)| f[i + 1..].iter().any(|&q| adjacent(p, q)))
        {
            continue;
        }
        if !majors.iter().all(|&v| f.iter().any(|&p| touches(p, v))) {
            continue;
        }
        // free positions: not in F and not adjacent to F
        let blocked: Vec<bool> = (0..m).map(|p| f.iter().any(|&q| q == p || adjacent(p, q))).collect();
        let extra = pick_independent(m, &blocked, s);
        if extra.len() < s {
            continue;
        }
        return Some(build_shared(mc, a, s, &f, &extra));
    }
    None
}

/// Greedy maximum independent set of positions on the cycle avoiding
/// `blocked`, truncated to `want` entries.
fn pick_independent(m: usize, blocked: &[bool], want: usize) -> Vec<usize> {
    let start = match blocked.iter().position(|&b| b) {
        Some(p) => p,
        // nothing blocked: floor(m/2) alternating positions
        None => return (0..m / 2).map(|i| 2 * i).take(want).collect(),
    };
    let mut out = Vec::new();
    let mut last_taken = false;
    for j in 1..=m {
        let p = (start + j) % m;
        if blocked[p] {
            last_taken = false;
            continue;
        }
        if !last_taken {
            out.push(p);
            last_taken = true;
        } else {
            last_taken = false;
        }
    }
    out.truncate(want);
    out
}

fn build_shared(mc: &Multicycle, a: usize, s: usize, f: &[usize], extra_pos: &[usize]) -> MulticycleColoring {
    let m = mc.m;
    let k = mc.k();
    let mut colors = vec![Vec::new(); m];
    let mut next: Color = 1;
    let full_groups = (a - s) / k;
    for _ in 0..full_groups {
        let extra = next + 2 * k as Color;
        for t in 0..k {
            place_cycle(
                &mut colors,
                2 * t,
                extra,
                next + 2 * t as Color,
                next + 2 * t as Color + 1,
            );
        }
        next = extra + 1;
    }
    let x = next + 2 * s as Color;
    for (t, &p) in extra_pos.iter().enumerate().take(s) {
        place_cycle(&mut colors, p, x, next + 2 * t as Color, next + 2 * t as Color + 1);
    }
    let base = x;
    // residual: one edge at each F position takes X, the rest get Δ_R - 1 colors
    let mut rest = residual_of(mc, a);
    for &p in f {
        colors[p].push(x);
        rest.mult[p] -= 1;
    }
    if rest.sigma() > 0 {
        let zero = rest.mult.iter().position(|&v| v == 0).expect("residual keeps a zero");
        let palette: Vec<Color> = (1..=rest.delta() as Color).map(|c| c + base).collect();
        let rc = multipath_with_palette(&rest, zero, &palette);
        for (p, cols) in rc.colors.into_iter().enumerate() {
            colors[p].extend(cols);
        }
    }
    MulticycleColoring { colors }
}

/// `C_{m,a}` kernel for every `a ≤ μ⁻` with the residual colored greedily.
fn recombination(mc: &Multicycle, limit: usize) -> Option<MulticycleColoring> {
    let mut best: Option<MulticycleColoring> = None;
    for a in 0..=mc.mu_min() {
        let mut kernel = regular_coloring(mc.m, a).ok()?;
        let used = kernel.max_color();
        let res = residual_of(mc, a);
        let budget = limit.saturating_sub(used as usize);
        let rc = if res.sigma() == 0 {
            Some(MulticycleColoring {
                colors: vec![Vec::new(); mc.m],
            })
        } else {
            (res.lower_bound()..budget).find_map(|d| greedy_cyclic(&res, d))
        };
        if let Some(rc) = rc {
            for (p, cols) in rc.colors.into_iter().enumerate() {
                kernel.colors[p].extend(cols.into_iter().map(|c| c + used));
            }
            let better = best.as_ref().is_none_or(|b| kernel.color_count() < b.color_count());
            if better && verify_multicycle_coloring(mc, &kernel).ok {
                best = Some(kernel);
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Multipath,
    Greedy,
    KernelResidual,
    Recombination,
    Oracle,
    Bracket,
}

/// Result of [`chromatic_index`]. When `method` is `Bracket`, `lower` and
/// `upper` differ and `coloring` uses `upper` colors.
#[derive(Clone, Debug, Serialize)]
pub struct ChromaticIndex {
    pub lower: usize,
    pub upper: usize,
    pub coloring: MulticycleColoring,
    pub method: Method,
}

impl ChromaticIndex {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Composite chromatic-index computation: closed forms and constructive
/// upper bounds first, then the exact solver when the bounds disagree.
pub fn chromatic_index(mc: &Multicycle) -> ChromaticIndex {
    chromatic_index_with_cap(mc, DEFAULT_SIGMA_CAP)
}

pub fn chromatic_index_with_cap(mc: &Multicycle, sigma_cap: usize) -> ChromaticIndex {
    let done = |c: MulticycleColoring, method| {
        let n = c.color_count();
        ChromaticIndex {
            lower: n,
            upper: n,
            coloring: c,
            method,
        }
    };
    if mc.sigma() == 0 {
        return done(
            MulticycleColoring {
                colors: vec![Vec::new(); mc.m],
            },
            Method::Multipath,
        );
    }
    if mc.is_multipath() {
        return done(multipath_coloring(mc).expect("has a zero"), Method::Multipath);
    }
    let lower = mc.lower_bound();

    let (kr, kr_count) = kernel_residual_coloring(mc).expect("odd length checked on construction");
    let mut best = (kr, kr_count, Method::KernelResidual);
    if best.1 > lower {
        if let Some(g) = (lower..best.1).find_map(|d| greedy_cyclic(mc, d)) {
            let n = g.color_count();
            best = (g, n, Method::Greedy);
        }
    }
    if best.1 > lower {
        if let Some(r) = recombination(mc, best.1) {
            let n = r.color_count();
            if n < best.1 {
                best = (r, n, Method::Recombination);
            }
        }
    }
    if best.1 == lower {
        return ChromaticIndex {
            lower,
            upper: lower,
            coloring: best.0,
            method: best.2,
        };
    }
    if mc.sigma() > sigma_cap {
        return ChromaticIndex {
            lower,
            upper: best.1,
            coloring: best.0,
            method: Method::Bracket,
        };
    }
    for d in lower..best.1 {
        if let Some(c) = exact_coloring(mc, d) {
            return ChromaticIndex {
                lower: d,
                upper: d,
                coloring: c,
                method: Method::Oracle,
            };
        }
    }
    let n = best.1;
    ChromaticIndex {
        lower: n,
        upper: n,
        coloring: best.0,
        method: Method::Oracle,
    }
}

/// Exact `d`-colorability of a multicycle, with a witness.
///
/// Fix the colors at position 0 to `S_0 = {1..mult[0]}`. Colors inside and
/// outside `S_0` are interchangeable among themselves, so the only state
/// that matters at position `p` is `x = |S_p ∩ S_0|`; the last position must
/// reach `x = 0`.
#[allow(clippy::needless_range_loop)]
pub fn exact_coloring(mc: &Multicycle, d: usize) -> Option<MulticycleColoring> {
    let m = mc.m;
    let a0 = mc.mult[0];
    if mc.delta() > d {
        return None;
    }
    let outside = d - a0;
    // reach[p][x]: predecessor x at p-1 (usize::MAX = unreachable)
    let mut reach = vec![vec![usize::MAX; a0 + 1]; m];
    reach[0][a0] = a0;
    for p in 0..m - 1 {
        let (cur, nxt) = (mc.mult[p], mc.mult[p + 1]);
        for x in 0..=a0 {
            if reach[p][x] == usize::MAX {
                continue;
            }
            let out_used = cur - x;
            for x2 in 0..=nxt.min(a0 - x) {
                let need_out = nxt - x2;
                if need_out <= outside - out_used && reach[p + 1][x2] == usize::MAX {
                    reach[p + 1][x2] = x;
                }
            }
        }
    }
    if reach[m - 1][0] == usize::MAX {
        return None;
    }
    let mut xs = vec![0; m];
    for p in (1..m).rev() {
        xs[p - 1] = reach[p][xs[p]];
    }
    // materialize sets
    let inside: Vec<Color> = (1..=a0 as Color).collect();
    let outside_cols: Vec<Color> = (a0 as Color + 1..=d as Color).collect();
    let mut colors: Vec<Vec<Color>> = vec![inside.clone()];
    for p in 1..m {
        let prev = &colors[p - 1];
        let mut set: Vec<Color> = inside
            .iter()
            .filter(|c| !prev.contains(c))
            .take(xs[p])
            .copied()
            .collect();
        set.extend(
            outside_cols
                .iter()
                .filter(|c| !prev.contains(c))
                .take(mc.mult[p] - xs[p]),
        );
        debug_assert_eq!(set.len(), mc.mult[p]);
        colors.push(set);
    }
    let c = MulticycleColoring { colors };
    debug_assert!(verify_multicycle_coloring(mc, &c).ok);
    Some(c)
}

/// One row of the survey table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub m: usize,
    pub n: usize,
    pub sigma: usize,
    pub mu_min: usize,
    pub delta: usize,
    pub tau: usize,
    pub chi: Option<usize>,
    /// `χ′ = ⌈2σ/(m-1)⌉`
    pub conjecture4_ok: bool,
    /// `mn/2 − (m²/2 − 1) ≤ σ ≤ mn/2 − (m²+1)/4`
    pub conjecture5_ok: bool,
}

impl SurveyRow {
    pub const CSV_HEADER: &'static str = "m,n,sigma,mu_min,delta,tau,chi,conjecture4_ok,conjecture5_ok";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.sigma,
            self.mu_min,
            self.delta,
            self.tau,
            self.chi.map_or("bracket".to_string(), |c| c.to_string()),
            self.conjecture4_ok,
            self.conjecture5_ok
        )
    }
}

/// `σ` bounds check in integers: `2mn − 2m² + 4 ≤ 4σ ≤ 2mn − m² − 1`.
/// Integer range `[lo, hi]` that the conjectured σ bounds allow.
pub fn sigma_bounds(m: usize, n: usize) -> (i64, i64) {
    let (m, n) = (m as i64, n as i64);
    (
        (2 * m * n - 2 * m * m + 4 + 3).div_euclid(4),
        (2 * m * n - m * m - 1).div_euclid(4),
    )
}

pub fn sigma_bounds_hold(m: usize, n: usize, sigma: usize) -> bool {
    let (lo, hi) = sigma_bounds(m, n);
    (lo..=hi).contains(&(sigma as i64))
}

pub fn survey_row(m: usize, n: usize) -> Result<SurveyRow> {
    let mc = derive(m, n)?;
    let ci = chromatic_index(&mc);
    let tau = mc.tau();
    let chi = ci.exact();
    Ok(SurveyRow {
        m,
        n,
        sigma: mc.sigma(),
        mu_min: mc.mu_min(),
        delta: mc.delta(),
        tau,
        chi,
        conjecture4_ok: chi == Some(tau),
        conjecture5_ok: sigma_bounds_hold(m, n, mc.sigma()),
    })
}

/// Survey over odd `m` in `m_range` and odd `n ≥ m` in `n_range`, rows in
/// `(m, n)` order.
pub fn survey(
    m_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<SurveyRow>> {
    let mut rows = Vec::new();
    for m in m_range.filter(|m| m % 2 == 1 && *m >= 3) {
        for n in n_range.clone().filter(|&n| n % 2 == 1 && n >= m) {
            rows.push(survey_row(m, n)?);
        }
    }
    Ok(rows)
}

/// Whether `2σ(m,n) − mn` repeats with period `m² − 1` in `n` at `n`.
pub fn sigma_offset_periodic_at(m: usize, n: usize) -> Result<bool> {
    let p = m * m - 1;
    let a = derive(m, n)?.sigma() as i64 * 2 - (m * n) as i64;
    let b = derive(m, n + p)?.sigma() as i64 * 2 - (m * (n + p)) as i64;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_5_11() {
        let mc = derive(5, 11).unwrap();
        assert_eq!(mc.order(), vec![1, 3, 5, 2, 4]);
        assert_eq!(mc.mult(), &[3, 5, 3, 4, 4]);
        assert_eq!(mc.sigma(), 19);
    }

    #[test]
    fn sigma_matches_cyan_count() {
        let (c, _) = canonical_bishop_coloring(5, 11).unwrap();
        assert_eq!(c.histogram()[&8], 19);
    }

    #[test]
    fn regular_counts() {
        for (m, a, want) in [(9, 9, 21), (5, 1, 3), (7, 3, 7), (3, 2, 6), (5, 0, 0)] {
            let c = regular_coloring(m, a).unwrap();
            let mc = Multicycle::regular(m, a).unwrap();
            let r = verify_multicycle_coloring(&mc, &c);
            assert!(r.ok, "({m},{a}) {:?}", r.detail);
            assert_eq!(c.color_count(), want, "({m},{a})");
        }
    }

    #[test]
    fn multipath_examples() {
        for (mult, want) in [
            (vec![0, 0, 0, 1, 2], 3),
            (vec![0, 1, 1, 1, 1], 2),
            (vec![0, 4, 4, 0, 2], 8),
        ] {
            let mc = Multicycle::new(mult).unwrap();
            let c = multipath_coloring(&mc).unwrap();
            assert!(verify_multicycle_coloring(&mc, &c).ok);
            assert_eq!(c.color_count(), want);
        }
        assert!(multipath_coloring(&Multicycle::regular(5, 1).unwrap()).is_err());
    }

    #[test]
    fn kernel_residual_examples() {
        let mc = Multicycle::new(vec![1, 1, 1, 1, 2]).unwrap();
        let (c, n) = kernel_residual_coloring(&mc).unwrap();
        assert!(verify_multicycle_coloring(&mc, &c).ok);
        assert_eq!(n, 3);

        let mc = derive(5, 11).unwrap();
        let (c, n) = kernel_residual_coloring(&mc).unwrap();
        assert!(verify_multicycle_coloring(&mc, &c).ok);
        assert!(n <= 10);

        let mc = Multicycle::regular(9, 9).unwrap();
        assert_eq!(kernel_residual_coloring(&mc).unwrap().1, 21);
    }

    #[test]
    fn greedy_examples() {
        let c5 = Multicycle::regular(5, 1).unwrap();
        assert!(greedy_cyclic(&c5, 3).is_some());
        assert!(greedy_cyclic(&c5, 2).is_none());
        assert!(greedy_cyclic(&derive(5, 11).unwrap(), 10).is_some());
    }

    #[test]
    fn chromatic_index_examples() {
        let ci = chromatic_index(&derive(5, 11).unwrap());
        assert_eq!(ci.exact(), Some(10));
        assert_eq!(
            chromatic_index(&Multicycle::new(vec![0, 0, 0, 1, 2]).unwrap()).exact(),
            Some(3)
        );
        assert_eq!(chromatic_index(&Multicycle::regular(9, 9).unwrap()).exact(), Some(21));
    }

    #[test]
    fn survey_5_11() {
        let row = survey_row(5, 11).unwrap();
        assert_eq!(row.sigma, 19);
        assert!(row.conjecture4_ok && row.conjecture5_ok);
        assert!(row.to_csv().starts_with("5,11,19,"));
    }

    #[test]
    fn exact_coloring_rejects_below_delta() {
        let mc = Multicycle::new(vec![2, 3, 2, 2, 2]).unwrap();
        assert!(exact_coloring(&mc, 4).is_none());
    }
}
