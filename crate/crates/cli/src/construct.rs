use std::path::Path;

use specx_core::families::{
    build_digraph_extremal, build_undirected_extremal, closed_form_digraph_rho, quotient_char_poly_digraph, theorem1_bound, FamilySpec,
};
use specx_core::io::{write_digraph6, write_graph6};
use specx_core::verifier::format_number;

use crate::output::Block;
use crate::{Failure, Format, RunConfig};

pub fn run(cfg: &RunConfig, family: &str, output: Option<&Path>) -> Result<(), Failure> {
    let spec: FamilySpec = family.parse()?;
    let mut b = Block::default();
    let encoding = match spec {
        FamilySpec::Undirected(p) => {
            let g = build_undirected_extremal(&p)?;
            let bound = theorem1_bound(&p)?;
            b.push("family", p);
            b.push("n", p.n);
            b.push("kappa_e", p.kappa_e);
            b.push("delta", p.delta);
            b.push("edges", g.edge_count());
            b.push("rho", format_number(bound.rho));
            b.push("char_poly", &bound.char_poly);
            write_graph6(&g)
        }
        FamilySpec::Directed(p) => {
            let d = build_digraph_extremal(&p)?;
            let cp = quotient_char_poly_digraph(&p)?;
            let rho = cp.largest_real_root().ok_or_else(|| Failure::Runtime(format!("{p}: quotient polynomial has no real root")))?;
            b.push("family", p);
            b.push("n", p.n);
            b.push("k", p.k);
            b.push("m", p.m);
            b.push("arcs", d.arc_count());
            b.push("rho", format_number(rho));
            b.push("closed_form_rho", format_number(closed_form_digraph_rho(&p)?));
            b.push("char_poly", &cp);
            write_digraph6(&d)
        }
    };
    let encoding = String::from_utf8(encoding).expect("graph6 is ASCII");
    let text = match cfg.format {
        Format::Text => {
            let fields: Vec<String> = b.render(Format::Kv).lines().filter(|l| !l.is_empty()).map(str::to_string).collect();
            format!("# {}\n{encoding}\n", fields.join(" "))
        }
        Format::Kv => {
            b.push("encoding", &encoding);
            b.render(Format::Kv)
        }
    };
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
