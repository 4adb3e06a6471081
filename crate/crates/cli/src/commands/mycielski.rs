use graphcert::graph::cycle_graph;
use graphcert::io::write_vertex_list;
use graphcert::mycielski::{
    even_cycle_parity_witness, ham_path_mu_odd_cycle, mycielski_graph, mycielskian, non_hc_pair, MycielskiVertex,
};
use graphcert::verify::verify_hamiltonian_path;

use super::{absorb, usage};
use crate::report::{emit, Report};
use crate::{Ctx, MycielskiCmd};

pub fn run(ctx: &Ctx, cmd: MycielskiCmd) -> anyhow::Result<Report> {
    match cmd {
        MycielskiCmd::Hampath { n, from, to, out } => {
            let a: MycielskiVertex = from.parse()?;
            let b: MycielskiVertex = to.parse()?;
            let path = ham_path_mu_odd_cycle(n, a, b)?;
            let ids: Vec<usize> = path.iter().map(|v| v.id(n)).collect();
            let g = mycielskian(&cycle_graph(n));
            let mut r = Report::new("mu-cycle")
                .param("n", n)
                .param("from", from)
                .param("to", to);
            absorb(&mut r, &verify_hamiltonian_path(&g, &ids, a.id(n), b.id(n)));
            let names: Vec<String> = path.iter().map(|v| v.to_string()).collect();
            r.field("size", ids.len());
            r.field("path", names.clone());
            r.line(names.join(" "));
            emit(out.as_deref(), ctx.json, &(write_vertex_list(&ids) + "\n"))?;
            Ok(r)
        }
        MycielskiCmd::Witness { n } => {
            let w = even_cycle_parity_witness(n)?;
            let mut r = Report::new("mu-cycle").param("n", n);
            r.field("from", w.from.clone());
            r.field("to", w.to.clone());
            r.field("path_exists", w.path_exists);
            r.field("nodes", w.nodes);
            if w.path_exists {
                r.fail(format!("found a {}-{} path", w.from, w.to));
            } else {
                r.line(format!(
                    "no Hamiltonian {}-{} path in μ(C_{n}); {} search nodes",
                    w.from, w.to, w.nodes
                ));
            }
            Ok(r)
        }
        MycielskiCmd::Hc { k } => {
            if k > 4 && !ctx.long_run {
                return Err(usage("all-pairs check beyond M_4 needs --long-run"));
            }
            let g = mycielski_graph(k)?;
            let mut r = Report::new("mycielski").param("k", k);
            r.field("size", g.vertex_count());
            match non_hc_pair(&g)? {
                None => r.line(format!("M_{k} is Hamilton-connected")),
                Some((a, b)) => r.fail(format!("no Hamiltonian path between {} and {}", g.label(a), g.label(b))),
            }
            r.field("hamilton_connected", r.ok);
            Ok(r)
        }
    }
}
