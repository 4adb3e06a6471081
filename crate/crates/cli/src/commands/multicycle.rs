use graphcert::chess::Board;
use graphcert::multicycle::{chromatic_index, derive, derive_with_edges, survey_row, Multicycle, SurveyRow};
use rayon::prelude::*;
use serde_json::json;

use super::usage;
use crate::report::{emit, Report};
use crate::{Ctx, MulticycleCmd, RangeArgs};

pub fn run(ctx: &Ctx, cmd: MulticycleCmd) -> anyhow::Result<Report> {
    match cmd {
        MulticycleCmd::Derive { m, n, edges } => {
            let d = derive_with_edges(m, n)?;
            let mc = &d.multicycle;
            let mut r = Report::new("multicycle").param("m", m).param("n", n);
            r.field("mult", mc.mult());
            r.field("order", mc.order());
            r.field("size", mc.sigma());
            r.field("delta", mc.delta());
            r.field("mu_min", mc.mu_min());
            r.line(format!(
                "B^_{{{m},{n}}}: rows {:?}, multiplicities {:?}, sigma {}, max degree {}",
                mc.order(),
                mc.mult(),
                mc.sigma(),
                mc.delta()
            ));
            if edges {
                let b = Board::new(m, n)?;
                let list: Vec<_> = d
                    .edges
                    .iter()
                    .map(|&((u, v), pos)| {
                        let (cu, cv) = (b.coord(u), b.coord(v));
                        json!({ "from": [cu.col, cu.row], "to": [cv.col, cv.row], "position": pos })
                    })
                    .collect();
                for e in &list {
                    r.line(e.to_string());
                }
                r.field("edges", list);
            }
            Ok(r)
        }
        MulticycleCmd::Chi { mult, m, n } => {
            let (mc, mut r) = match (mult, m, n) {
                (Some(v), _, _) => {
                    let r = Report::new("multicycle").param("mult", v.clone());
                    (Multicycle::new(v)?, r)
                }
                (None, Some(m), Some(n)) => (derive(m, n)?, Report::new("multicycle").param("m", m).param("n", n)),
                _ => return Err(usage("give --mult or both --m and --n")),
            };
            let ci = chromatic_index(&mc);
            r.field("lower", ci.lower);
            r.field("upper", ci.upper);
            r.field("colors", ci.exact());
            r.field("method", serde_json::to_value(ci.method)?);
            r.field("coloring", serde_json::to_value(&ci.coloring.colors)?);
            match ci.exact() {
                Some(c) => r.line(format!("chromatic index {c} ({:?})", ci.method)),
                None => r.line(format!("chromatic index in [{}, {}]", ci.lower, ci.upper)),
            }
            Ok(r)
        }
        MulticycleCmd::Survey(range) => {
            let rows = survey_rows(&range)?;
            let mut text = String::from(SurveyRow::CSV_HEADER);
            text.push('\n');
            for row in &rows {
                text.push_str(&row.to_csv());
                text.push('\n');
            }
            emit(range.out.as_deref(), ctx.json, &text)?;
            let mut r = range_report("multicycle", &range);
            r.field("size", rows.len());
            r.line(format!("{} rows", rows.len()));
            Ok(r)
        }
    }
}

pub(crate) fn range_report(family: &str, range: &RangeArgs) -> Report {
    Report::new(family)
        .param("m_min", range.m_min)
        .param("m_max", range.m_max)
        .param("n_min", range.n_min)
        .param("n_max", range.n_max)
}

/// Survey rows over odd `m ≥ 3` and odd `n ≥ m`, in `(m, n)` order.
pub(crate) fn survey_rows(range: &RangeArgs) -> anyhow::Result<Vec<SurveyRow>> {
    let pairs: Vec<(usize, usize)> = (range.m_min.max(3)..=range.m_max)
        .filter(|m| m % 2 == 1)
        .flat_map(|m| {
            (range.n_min.max(m)..=range.n_max)
                .filter(|n| n % 2 == 1)
                .map(move |n| (m, n))
        })
        .collect();
    let rows: Result<Vec<SurveyRow>, _> = pairs.par_iter().map(|&(m, n)| survey_row(m, n)).collect();
    Ok(rows?)
}
