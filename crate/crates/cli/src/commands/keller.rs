use graphcert::io::{write_coloring, write_dimacs, write_vertex_list};
use graphcert::keller::{
    self, alpha_exact, class1_coloring, double_clique_cover, ham_cycle, ham_decomposition_search,
    independence_square_coloring, known_omega, load_fixture, parse_clique_table, theta_lower_bound, verify_fixture,
    FixtureTable, IndependenceSquare, MAX_BUILD_DIM,
};
use graphcert::verify::{verify_clique_cover, verify_edge_coloring, verify_hamiltonian_cycle, verify_vertex_coloring};
use graphcert::Error;

use super::{absorb, read_text, usage};
use crate::report::{emit, Report};
use crate::{Ctx, KellerCmd, VertexEncoding};

/// Largest dimension handled without `--long-run`.
const DESK_DIM: usize = 5;

fn gate(ctx: &Ctx, d: usize, limit: usize) -> anyhow::Result<()> {
    if d > limit && !ctx.long_run {
        return Err(usage(format!(
            "d = {d} is beyond desk scale (d <= {limit}); pass --long-run"
        )));
    }
    Ok(())
}

/// Clique-cover check straight from the adjacency rule, for dimensions too
/// large to materialize.
pub(crate) fn cover_check(d: usize, cover: &[Vec<usize>]) -> Vec<String> {
    let n = keller::vertex_count(d);
    let mut seen = vec![false; n];
    let mut bad = Vec::new();
    for (i, c) in cover.iter().enumerate() {
        for (j, &u) in c.iter().enumerate() {
            if u >= n || std::mem::replace(&mut seen[u], true) {
                bad.push(format!("clique {}: vertex {u} out of range or repeated", i + 1));
            }
            if c[j + 1..].iter().any(|&v| !keller::is_adjacent(d, u, v)) {
                bad.push(format!("clique {} is not a clique", i + 1));
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        bad.push("cover misses a vertex".into());
    }
    bad.truncate(20);
    bad
}

fn clique_table(d: usize, cover: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (i, c) in cover.iter().enumerate() {
        let members: Vec<String> = c.iter().map(|&v| keller::digits(d, v)).collect();
        out.push_str(&format!("{} {}\n", i + 1, members.join(" ")));
    }
    out
}

pub fn run(ctx: &Ctx, cmd: KellerCmd) -> anyhow::Result<Report> {
    match cmd {
        KellerCmd::Build { d, out } => {
            gate(ctx, d, DESK_DIM)?;
            let g = keller::build(d)?;
            emit(
                out.as_deref(),
                ctx.json,
                &write_dimacs(&g, &[("family", "keller".into()), ("d", d.to_string())]),
            )?;
            let mut r = Report::new("keller").param("d", d);
            r.field(
                "size",
                serde_json::json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }),
            );
            r.field("delta", keller::degree(d));
            r.line(format!(
                "G_{d}: {} vertices, {} edges, degree {}",
                g.vertex_count(),
                g.edge_count(),
                keller::degree(d)
            ));
            Ok(r)
        }
        KellerCmd::Hamcycle { d, out } => {
            gate(ctx, d, DESK_DIM)?;
            let cyc = ham_cycle(d)?;
            let g = keller::build(d)?;
            let mut r = Report::new("keller").param("d", d);
            absorb(&mut r, &verify_hamiltonian_cycle(&g, &cyc));
            r.field("size", cyc.len());
            r.line(format!("Hamiltonian cycle of G_{d}, {} vertices", cyc.len()));
            emit(out.as_deref(), ctx.json, &(write_vertex_list(&cyc) + "\n"))?;
            Ok(r)
        }
        KellerCmd::Edgecolor { d, out } => {
            gate(ctx, d, DESK_DIM)?;
            let (c, _) = class1_coloring(d)?;
            let g = keller::build(d)?;
            let v = verify_edge_coloring(&g, &c, true);
            let mut r = Report::new("keller").param("d", d);
            absorb(&mut r, &v);
            if v.colors_used != v.delta {
                r.fail(format!("{} colors for degree {}", v.colors_used, v.delta));
            }
            r.field("class", 1);
            r.field("colors", v.colors_used);
            r.line(format!("G_{d}: {} colors, degree {}", v.colors_used, v.delta));
            let meta = [("family", "keller".to_string()), ("d", d.to_string())];
            emit(out.as_deref(), ctx.json, &write_coloring(&c, &meta))?;
            Ok(r)
        }
        KellerCmd::Square { d, out } => {
            gate(ctx, d, DESK_DIM)?;
            let sq = IndependenceSquare::new(d)?;
            let g = keller::build(d)?;
            let mut r = Report::new("keller").param("d", d);
            if let Err(e) = sq.verify(&g) {
                r.fail(e);
            }
            let vc = verify_vertex_coloring(&g, &independence_square_coloring(d)?);
            absorb(&mut r, &vc);
            r.field("colors", vc.colors_used);
            r.line(format!(
                "{0}×{0} independence square; proper vertex coloring with {1} colors",
                sq.side(),
                vc.colors_used
            ));
            let text: String = sq
                .cells
                .iter()
                .map(|row| row.iter().map(|&v| keller::digits(d, v)).collect::<Vec<_>>().join(" ") + "\n")
                .collect();
            emit(out.as_deref(), ctx.json, &text)?;
            Ok(r)
        }
        KellerCmd::Alpha { d } => {
            gate(ctx, d, DESK_DIM)?;
            let a = alpha_exact(d)?;
            let mut r = Report::new("keller").param("d", d);
            r.field("size", a);
            r.line(format!("α(G_{d}) = {a}"));
            Ok(r)
        }
        KellerCmd::DoubleCover {
            d,
            cover,
            encoding,
            table,
            out,
        } => {
            let (d, sets) = match (table, cover) {
                (Some(t), None) => {
                    let t = FixtureTable::from_number(t)?;
                    if t == FixtureTable::G3Decomposition {
                        return Err(usage("table 1 is a decomposition, not a clique cover"));
                    }
                    (t.dimension(), load_fixture(t)?)
                }
                (None, Some(p)) => {
                    let d = d.ok_or_else(|| usage("--cover needs --d"))?;
                    let digits = matches!(encoding, VertexEncoding::Digits);
                    (d, parse_clique_table(d, &read_text(&p)?, digits)?)
                }
                _ => return Err(usage("give --table or --cover")),
            };
            gate(ctx, d + 1, DESK_DIM)?;
            let doubled = double_clique_cover(d, &sets)?;
            let mut r = Report::new("keller").param("d", d);
            if d < MAX_BUILD_DIM {
                absorb(&mut r, &verify_clique_cover(&keller::build(d + 1)?, &doubled));
            } else {
                for e in cover_check(d + 1, &doubled) {
                    r.fail(e);
                }
            }
            r.field("size", doubled.len());
            r.line(format!("{} cliques covering G_{}", doubled.len(), d + 1));
            emit(out.as_deref(), ctx.json, &clique_table(d + 1, &doubled))?;
            Ok(r)
        }
        KellerCmd::Decompose { d, out, matching_out } => {
            gate(ctx, d, 3)?;
            let mut r = Report::new("keller").param("d", d);
            r.seed = Some(ctx.budget.seed);
            let Some(dec) = ham_decomposition_search(d, &ctx.budget)? else {
                return Err(Error::BudgetExhausted(format!("no Hamiltonian decomposition of G_{d} found")).into());
            };
            r.field("size", dec.cycles.len());
            r.field("matching", dec.matching.is_some());
            r.field("moves", dec.moves);
            r.line(format!(
                "{} Hamiltonian cycles{} after {} moves",
                dec.cycles.len(),
                if dec.matching.is_some() {
                    " and a perfect matching"
                } else {
                    ""
                },
                dec.moves
            ));
            let cycles: String = dec.cycles.iter().map(|c| write_vertex_list(c) + "\n").collect();
            emit(out.as_deref(), ctx.json, &cycles)?;
            if let (Some(p), Some(m)) = (matching_out, &dec.matching) {
                let text: String = m.iter().map(|&(u, v)| format!("{} {}\n", u + 1, v + 1)).collect();
                std::fs::write(&p, text).map_err(Error::Io)?;
            }
            Ok(r)
        }
        KellerCmd::VerifyFixture { table } => {
            let t = FixtureTable::from_number(table)?;
            let rep = verify_fixture(t)?;
            let mut r = Report::new("keller").param("table", table).param("d", rep.d);
            r.field("kind", rep.kind);
            r.field("size", rep.size);
            if rep.kind == "clique-cover" {
                if let Some(w) = known_omega(rep.d) {
                    r.field("lower_bound", theta_lower_bound(rep.d, w));
                }
            }
            r.ok = rep.ok;
            r.lines.extend(rep.detail);
            r.line(format!(
                "table {table}: {} with {} parts on G_{}",
                rep.kind, rep.size, rep.d
            ));
            Ok(r)
        }
    }
}
