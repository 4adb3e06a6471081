use anyhow::Context;
use graphcert::chess::{build_queen, classify_queen_prediction};
use graphcert::io::{parse_coloring, write_coloring};
use graphcert::kempe::{find_class1, SearchOutcome};
use graphcert::queen::{
    class1_even, class1_ladder_multicycle, class1_square_odd, class2_overfull_coloring, classify_and_color,
    delta_plus_one_union, Construction, QueenColoringCertificate,
};
use graphcert::Error;

use super::{absorb, read_text, usage};
use crate::report::{emit, Report};
use crate::{ColorArgs, ConstructionArg, Ctx};

fn kempe(ctx: &Ctx, a: &ColorArgs, m: usize, n: usize) -> anyhow::Result<QueenColoringCertificate> {
    let g = build_queen(m, n)?;
    let warm = match &a.warm_start {
        Some(p) => Some(parse_coloring(&read_text(p)?).with_context(|| format!("parsing {}", p.display()))?),
        None if m % 2 == 1 && n % 2 == 1 => Some(delta_plus_one_union(m, n)?),
        None => None,
    };
    match find_class1(&g, &ctx.budget, warm.as_ref()) {
        SearchOutcome::Found { coloring, .. } => Ok(QueenColoringCertificate {
            m,
            n,
            coloring: coloring.compacted(),
            claimed_class: 1,
            construction: Construction::KempeSearch,
        }),
        SearchOutcome::Overfull => Err(Error::Inapplicable(format!("Q_{{{m},{n}}} is overfull, hence class 2")).into()),
        SearchOutcome::Exhausted { stats } => Err(Error::BudgetExhausted(format!(
            "no class-1 coloring of Q_{{{m},{n}}} after {} moves in {} restarts",
            stats.moves, stats.restarts_used
        ))
        .into()),
    }
}

pub fn color(ctx: &Ctx, a: ColorArgs) -> anyhow::Result<Report> {
    let (m, n) = if a.m <= a.n { (a.m, a.n) } else { (a.n, a.m) };
    if a.warm_start.is_some() && a.construction != ConstructionArg::Kempe {
        return Err(usage("--warm-start only applies to --construction kempe"));
    }
    let cert = match a.construction {
        ConstructionArg::Auto => classify_and_color(m, n, &ctx.budget)?,
        ConstructionArg::EvenUnion => class1_even(m, n)?,
        ConstructionArg::SquareOdd => {
            if m != n {
                return Err(usage("square-odd needs m = n"));
            }
            class1_square_odd(n)?
        }
        ConstructionArg::LadderMulticycle => class1_ladder_multicycle(m, n)?,
        ConstructionArg::Overfull => class2_overfull_coloring(m, n)?,
        ConstructionArg::Kempe => kempe(ctx, &a, m, n)?,
    };
    let mut r = Report::new("queen").param("m", m).param("n", n);
    let v = cert.verify()?;
    absorb(&mut r, &v);
    if !r.ok {
        return Err(Error::Internal(format!("certificate failed verification: {}", r.lines.join("; "))).into());
    }
    r.field("class", cert.claimed_class);
    r.field("colors", cert.colors());
    r.field("delta", v.delta);
    r.construction = Some(cert.construction.tag().to_string());
    if cert.construction == Construction::KempeSearch {
        r.seed = Some(ctx.budget.seed);
    }
    r.line(format!(
        "Q_{{{m},{n}}}: class {}, {} colors (max degree {}), {}",
        cert.claimed_class,
        cert.colors(),
        v.delta,
        cert.construction.tag()
    ));
    let meta = [
        ("family", "queen".to_string()),
        ("m", m.to_string()),
        ("n", n.to_string()),
        ("class", cert.claimed_class.to_string()),
        ("construction", cert.construction.tag().to_string()),
    ];
    emit(a.out.as_deref(), ctx.json, &write_coloring(&cert.coloring, &meta))?;
    if let Some(p) = &a.sidecar {
        let text = serde_json::to_string_pretty(&cert.sidecar())?;
        std::fs::write(p, text + "\n").map_err(Error::Io)?;
    }
    Ok(r)
}

pub fn predict(m: usize, n: usize) -> anyhow::Result<Report> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let p = classify_queen_prediction(m, n)?;
    let mut r = Report::new("queen").param("m", m).param("n", n);
    r.field("status", serde_json::to_value(p.status)?);
    r.field("reason", p.reason);
    r.line(format!("Q_{{{m},{n}}}: {:?} ({})", p.status, p.reason));
    Ok(r)
}
