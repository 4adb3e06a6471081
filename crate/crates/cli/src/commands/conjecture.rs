use std::collections::BTreeMap;

use graphcert::chess::build_queen;
use graphcert::keller::{self, double_clique_cover, known_omega, load_fixture, theta_lower_bound, FixtureTable};
use graphcert::kempe::edge_critical_check;
use graphcert::matching::{matching_size, maximum_matching};
use graphcert::queen::classify_and_color;
use graphcert::Error;
use rayon::prelude::*;
use serde_json::json;

use super::keller::cover_check;
use super::multicycle::{range_report, survey_rows};
use super::usage;
use crate::report::{emit, Report};
use crate::{ConjectureArgs, Ctx};

pub fn run(ctx: &Ctx, a: ConjectureArgs) -> anyhow::Result<Report> {
    match a.which.as_str() {
        "2" => class_iff_overfull(ctx, &a),
        "3" => criticality(ctx, &a),
        "4" | "5" => survey(ctx, &a),
        "9" => covers(&a),
        other => Err(usage(format!("no experiment for conjecture {other}"))),
    }
}

/// Odd boards `m < n`: class 2 exactly when overfull.
fn class_iff_overfull(ctx: &Ctx, a: &ConjectureArgs) -> anyhow::Result<Report> {
    let range = &a.range;
    if range.m_max >= 11 && !ctx.long_run {
        return Err(usage("m >= 11 needs --long-run"));
    }
    let pairs: Vec<(usize, usize)> = (range.m_min.max(3)..=range.m_max)
        .filter(|m| m % 2 == 1)
        .flat_map(|m| {
            (range.n_min.max(m + 2)..=range.n_max)
                .filter(|n| n % 2 == 1)
                .map(move |n| (m, n))
        })
        .collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let overfull = build_queen(m, n).map(|g| g.is_overfull());
            let cert = classify_and_color(m, n, &ctx.budget);
            (m, n, overfull, cert)
        })
        .collect();
    let mut r = range_report("queen", range);
    r.seed = Some(ctx.budget.seed);
    let mut by_construction: BTreeMap<&str, usize> = BTreeMap::new();
    let mut exhausted = Vec::new();
    for (m, n, overfull, cert) in results {
        let overfull = overfull?;
        match cert {
            Ok(c) => {
                if (c.claimed_class == 2) != overfull {
                    r.fail(format!(
                        "Q_{{{m},{n}}}: class {} but overfull = {overfull}",
                        c.claimed_class
                    ));
                }
                *by_construction.entry(c.construction.tag()).or_default() += 1;
            }
            Err(Error::BudgetExhausted(_)) => exhausted.push(format!("Q_{{{m},{n}}}")),
            Err(e) => return Err(e.into()),
        }
    }
    r.field("size", pairs.len());
    r.field("constructions", json!(by_construction));
    r.field("exhausted", json!(exhausted));
    r.line(format!("{} odd boards; constructions {by_construction:?}", pairs.len()));
    if !exhausted.is_empty() {
        r.fail(format!("search budget ran out on {}", exhausted.join(", ")));
    }
    Ok(r)
}

fn criticality(ctx: &Ctx, a: &ConjectureArgs) -> anyhow::Result<Report> {
    if !ctx.long_run {
        return Err(usage("the criticality check runs one search per edge; pass --long-run"));
    }
    let (m, n) = (a.m.min(a.n), a.m.max(a.n));
    let g = build_queen(m, n)?;
    if !g.is_overfull() {
        return Err(usage(format!("Q_{{{m},{n}}} is not overfull")));
    }
    let rep = edge_critical_check(&g, &ctx.budget);
    let mut r = Report::new("queen").param("m", m).param("n", n);
    r.seed = Some(ctx.budget.seed);
    r.field("size", g.edge_count());
    r.field("critical", rep.critical);
    r.field("inconclusive", rep.failures.len());
    r.field("still_overfull", rep.overfull_deletions.len());
    if rep.critical {
        r.line(format!(
            "all {} single-edge deletions of Q_{{{m},{n}}} are class 1",
            g.edge_count()
        ));
    } else if !rep.overfull_deletions.is_empty() {
        r.fail(format!("{} deletions stay overfull", rep.overfull_deletions.len()));
    } else {
        return Err(Error::BudgetExhausted(format!("{} deletions inconclusive", rep.failures.len())).into());
    }
    Ok(r)
}

fn survey(ctx: &Ctx, a: &ConjectureArgs) -> anyhow::Result<Report> {
    let rows = survey_rows(&a.range)?;
    let mut r = range_report("multicycle", &a.range);
    r.field("size", rows.len());
    if a.which == "4" {
        let bracket = rows.iter().filter(|x| x.chi.is_none()).count();
        for x in rows.iter().filter(|x| !x.conjecture4_ok && x.chi.is_some()) {
            r.fail(format!(
                "({}, {}): chromatic index {:?}, predicted {}",
                x.m, x.n, x.chi, x.tau
            ));
        }
        if bracket > 0 {
            r.fail(format!("{bracket} rows only bracketed"));
        }
        let mut text = String::from(graphcert::multicycle::SurveyRow::CSV_HEADER);
        text.push('\n');
        rows.iter().for_each(|x| text.push_str(&(x.to_csv() + "\n")));
        emit(a.range.out.as_deref(), ctx.json, &text)?;
        r.line(format!("{} boards checked", rows.len()));
    } else {
        let mut text = String::from("m,n,sigma,sigma_lo,sigma_hi,ok\n");
        for x in &rows {
            let (lo, hi) = graphcert::multicycle::sigma_bounds(x.m, x.n);
            text.push_str(&format!("{},{},{},{lo},{hi},{}\n", x.m, x.n, x.sigma, x.conjecture5_ok));
            if !x.conjecture5_ok {
                r.fail(format!("({}, {}): sigma {} outside [{lo}, {hi}]", x.m, x.n, x.sigma));
            }
        }
        emit(a.range.out.as_deref(), ctx.json, &text)?;
        r.line(format!("{} boards checked", rows.len()));
    }
    Ok(r)
}

/// Clique-cover bounds: `⌈4^d/ω⌉` against the best verified cover.
fn covers(a: &ConjectureArgs) -> anyhow::Result<Report> {
    if a.d_max > 7 {
        return Err(usage("covers are tracked for d <= 7"));
    }
    let mut r = Report::new("keller").param("d_max", a.d_max);
    let mut best: BTreeMap<usize, (usize, &str)> = BTreeMap::new();
    let g2 = keller::build(2)?;
    let adj: Vec<Vec<usize>> = (0..16).map(|v| g2.neighbors(v).collect()).collect();
    best.insert(2, (16 - matching_size(&maximum_matching(&adj)), "matching"));
    let mut cover = Vec::new();
    for (t, d) in [
        (FixtureTable::G3Cover, 3),
        (FixtureTable::G4Cover, 4),
        (FixtureTable::G5Cover, 5),
    ] {
        cover = load_fixture(t)?;
        best.insert(d, (cover.len(), "table"));
    }
    for d in 5..a.d_max {
        cover = double_clique_cover(d, &cover)?;
        for b in cover_check(d + 1, &cover) {
            r.fail(format!("doubled cover of G_{}: {b}", d + 1));
        }
        best.insert(d + 1, (cover.len(), "doubled"));
    }
    let mut rows = Vec::new();
    for d in 2..=a.d_max {
        let Some(&(upper, source)) = best.get(&d) else { continue };
        let lower = theta_lower_bound(d, known_omega(d).expect("d <= 7"));
        if lower > upper {
            r.fail(format!("d = {d}: lower bound {lower} exceeds cover {upper}"));
        }
        r.line(format!("d = {d}: {lower} <= θ <= {upper} ({source})"));
        rows.push(json!({ "d": d, "lower": lower, "upper": upper, "source": source }));
    }
    r.field("bounds", rows);
    Ok(r)
}
