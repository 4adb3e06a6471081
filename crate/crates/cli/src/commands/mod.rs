mod conjecture;
mod keller;
mod multicycle;
mod mycielski;
mod queen;

use std::path::Path;

use anyhow::Context;
use graphcert::chess::{build_bishop, build_queen, build_rook, SquareFilter};
use graphcert::graph::{complete_graph, cycle_graph};
use graphcert::io::{parse_coloring, parse_dimacs, parse_vertex_lists, write_dimacs};
use graphcert::keller::parse_clique_table;
use graphcert::mycielski::{mycielski_graph, mycielskian};
use graphcert::verify::{
    verify_clique_cover, verify_edge_coloring, verify_hamiltonian_cycle, verify_hamiltonian_decomposition,
    verify_hamiltonian_path,
};
use graphcert::{Error, Graph, VerificationReport};

use crate::report::{emit, Report};
use crate::{Cmd, Ctx, Family, GenArgs, QueenCmd, VerifyCmd, VertexEncoding};

pub fn run(ctx: &Ctx, cmd: Cmd) -> anyhow::Result<Report> {
    match cmd {
        Cmd::Gen(a) => gen(ctx, a),
        Cmd::Color(a) | Cmd::Queen(QueenCmd::Color(a)) => queen::color(ctx, a),
        Cmd::Queen(QueenCmd::Predict { m, n }) => queen::predict(m, n),
        Cmd::Verify(v) => verify(v),
        Cmd::Multicycle(c) => multicycle::run(ctx, c),
        Cmd::Mycielski(c) => mycielski::run(ctx, c),
        Cmd::Keller(c) => keller::run(ctx, c),
        Cmd::Conjecture(a) => conjecture::run(ctx, a),
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::Precondition(msg.into()).into()
}

pub(crate) fn need(v: Option<usize>, flag: &str) -> anyhow::Result<usize> {
    v.ok_or_else(|| usage(format!("this family needs --{flag}")))
}

pub(crate) fn read_text(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(Error::Io)
        .with_context(|| format!("reading {}", path.display()))
}

pub(crate) fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read_text(path)?;
    Ok(parse_dimacs(&text)
        .with_context(|| format!("parsing {}", path.display()))?
        .graph)
}

/// Copies a verifier's findings into the report.
pub(crate) fn absorb(r: &mut Report, v: &VerificationReport) {
    if !v.ok {
        r.ok = false;
    }
    for d in &v.detail {
        r.line(d.clone());
    }
}

fn gen(ctx: &Ctx, a: GenArgs) -> anyhow::Result<Report> {
    let (name, g, params): (&str, Graph, Vec<(&str, usize)>) = match a.family {
        Family::Queen | Family::Rook | Family::Bishop | Family::WhiteBishop => {
            let (m, n) = (need(a.m, "m")?, need(a.n, "n")?);
            let (name, g) = match a.family {
                Family::Queen => ("queen", build_queen(m, n)?),
                Family::Rook => ("rook", build_rook(m, n)?),
                Family::Bishop => ("bishop", build_bishop(m, n, SquareFilter::All)?),
                _ => ("white-bishop", build_bishop(m, n, SquareFilter::White)?),
            };
            (name, g, vec![("m", m), ("n", n)])
        }
        Family::Keller => {
            let d = need(a.d, "d")?;
            ("keller", graphcert::keller::build(d)?, vec![("d", d)])
        }
        Family::Mycielski => {
            let k = need(a.k, "k")?;
            ("mycielski", mycielski_graph(k)?, vec![("k", k)])
        }
        Family::MuCycle => {
            let n = need(a.n, "n")?;
            if n < 3 {
                return Err(usage("a cycle needs n >= 3"));
            }
            ("mu-cycle", mycielskian(&cycle_graph(n)), vec![("n", n)])
        }
        Family::Cycle => {
            let n = need(a.n, "n")?;
            if n < 3 {
                return Err(usage("a cycle needs n >= 3"));
            }
            ("cycle", cycle_graph(n), vec![("n", n)])
        }
        Family::Complete => {
            let n = need(a.n, "n")?;
            ("complete", complete_graph(n), vec![("n", n)])
        }
    };
    let mut meta = vec![("family", name.to_string())];
    meta.extend(params.iter().map(|&(k, v)| (k, v.to_string())));
    emit(a.out.as_deref(), ctx.json, &write_dimacs(&g, &meta))?;
    let mut r = Report::new(name);
    for (k, v) in params {
        r = r.param(k, v);
    }
    let delta = g.max_degree().unwrap_or(0);
    r.field(
        "size",
        serde_json::json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }),
    );
    r.field("delta", delta);
    r.line(format!(
        "{name}: {} vertices, {} edges, max degree {delta}",
        g.vertex_count(),
        g.edge_count()
    ));
    Ok(r)
}

fn first_list(path: &Path) -> anyhow::Result<Vec<usize>> {
    let lists = parse_vertex_lists(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    lists
        .into_iter()
        .next()
        .ok_or_else(|| usage(format!("{} holds no vertex list", path.display())))
}

fn verify(cmd: VerifyCmd) -> anyhow::Result<Report> {
    match cmd {
        VerifyCmd::Coloring {
            graph,
            coloring,
            partial,
            colors,
        } => {
            let g = read_graph(&graph)?;
            let c =
                parse_coloring(&read_text(&coloring)?).with_context(|| format!("parsing {}", coloring.display()))?;
            let v = verify_edge_coloring(&g, &c, !partial);
            let mut r = Report::new("edge-coloring").param("total", !partial);
            absorb(&mut r, &v);
            if let Some(k) = colors {
                if v.colors_used != k {
                    r.fail(format!("uses {} colors, expected {k}", v.colors_used));
                }
            }
            r.field("colors", v.colors_used);
            r.field("delta", v.delta);
            r.line(format!("{} colors, max degree {}", v.colors_used, v.delta));
            Ok(r)
        }
        VerifyCmd::Hamcycle { graph, path } => {
            let g = read_graph(&graph)?;
            let seq = first_list(&path)?;
            let mut r = Report::new("hamiltonian-cycle");
            absorb(&mut r, &verify_hamiltonian_cycle(&g, &seq));
            r.field("size", seq.len());
            Ok(r)
        }
        VerifyCmd::Hampath { graph, path, from, to } => {
            if from == 0 || to == 0 {
                return Err(usage("vertices are 1-based"));
            }
            let g = read_graph(&graph)?;
            let seq = first_list(&path)?;
            let mut r = Report::new("hamiltonian-path").param("from", from).param("to", to);
            absorb(&mut r, &verify_hamiltonian_path(&g, &seq, from - 1, to - 1));
            r.field("size", seq.len());
            Ok(r)
        }
        VerifyCmd::Decomposition {
            graph,
            cycles,
            matching,
        } => {
            let g = read_graph(&graph)?;
            let cyc = parse_vertex_lists(&read_text(&cycles)?)?;
            let pm = match matching {
                Some(p) => {
                    let pairs = parse_vertex_lists(&read_text(&p)?)?;
                    let mut out = Vec::new();
                    for (i, l) in pairs.iter().enumerate() {
                        if l.len() != 2 {
                            return Err(usage(format!("matching line {} does not hold a pair", i + 1)));
                        }
                        out.push((l[0], l[1]));
                    }
                    Some(out)
                }
                None => None,
            };
            let mut r = Report::new("hamiltonian-decomposition");
            absorb(&mut r, &verify_hamiltonian_decomposition(&g, &cyc, pm.as_deref()));
            r.field("size", cyc.len());
            r.line(format!(
                "{} cycles{}",
                cyc.len(),
                if pm.is_some() { " and a matching" } else { "" }
            ));
            Ok(r)
        }
        VerifyCmd::Cover {
            graph,
            cover,
            keller_d,
            encoding,
        } => {
            let g = read_graph(&graph)?;
            let text = read_text(&cover)?;
            let sets = match keller_d {
                Some(d) => parse_clique_table(d, &text, matches!(encoding, VertexEncoding::Digits))?,
                None => parse_vertex_lists(&text)?,
            };
            let mut r = Report::new("clique-cover");
            absorb(&mut r, &verify_clique_cover(&g, &sets));
            r.field("size", sets.len());
            r.line(format!("{} cliques", sets.len()));
            Ok(r)
        }
    }
}
