use std::path::Path;

use specx_core::connectivity::{
    components, edge_connectivity, essential_connectivity, essential_connectivity_digraph, strongly_connected_components,
    vertex_connectivity, Essential,
};
use specx_core::io::{detect_format, parse_arc_list, parse_digraph6, parse_edge_list, parse_graph6, GraphFormat};
use specx_core::spectral::{algebraic_connectivity, spectral_radius, spectral_radius_any, spectral_radius_digraph, DEFAULT_TOL};
use specx_core::verifier::format_number;
use specx_core::{Digraph, Graph};

use crate::output::Block;
use crate::{Failure, RunConfig};

enum Input {
    Graph(Graph),
    Digraph(Digraph),
}

fn is_content(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with('#')
}

fn read_inputs(path: &Path, text: &str, directed: bool) -> Result<Vec<Input>, Failure> {
    let first = text.lines().find(|l| is_content(l)).ok_or_else(|| Failure::Parse(format!("{}: no graph found", path.display())))?;
    let located = |line: usize, e: specx_core::Error| Failure::Parse(format!("{}:{}: {e}", path.display(), line + 1));
    match detect_format(first.as_bytes()) {
        GraphFormat::EdgeList | GraphFormat::Dot => {
            let at = |e: specx_core::Error| Failure::Parse(format!("{}: {e}", path.display()));
            Ok(vec![if directed {
                Input::Digraph(parse_arc_list(text, false).map_err(at)?)
            } else {
                Input::Graph(parse_edge_list(text, false).map_err(at)?)
            }])
        }
        _ => text
            .lines()
            .enumerate()
            .filter(|(_, l)| is_content(l))
            .map(|(i, l)| match detect_format(l.as_bytes()) {
                GraphFormat::Digraph6 => parse_digraph6(l.as_bytes()).map(Input::Digraph).map_err(|e| located(i, e)),
                _ => parse_graph6(l.as_bytes()).map(Input::Graph).map_err(|e| located(i, e)),
            })
            .collect(),
    }
}

fn essential_fields(b: &mut Block, e: Essential) {
    match e {
        Essential::Cut(cert) => {
            b.push("essential_connectivity", cert.cut.len());
            b.push("certificate", cert);
        }
        Essential::Absent(reason) => {
            b.push("essential_connectivity", "none");
            b.push("certificate", reason);
        }
    }
}

fn analyze_graph(b: &mut Block, g: &Graph) -> Result<(), Failure> {
    let n = g.order();
    b.push("kind", "graph");
    b.push("n", n);
    b.push("edges", g.edge_count());
    if n == 0 {
        return Ok(());
    }
    b.push("min_degree", g.min_degree()?);
    b.push("max_degree", g.max_degree()?);
    if g.is_connected() {
        b.push("connected", "yes");
        b.push("kappa", vertex_connectivity(g)?.kappa);
        b.push("lambda", edge_connectivity(g)?);
        match essential_connectivity(g) {
            Ok(e) => essential_fields(b, e),
            Err(specx_core::Error::OutOfRange(m)) => b.push("essential_connectivity", format!("unavailable ({m})")),
            Err(e) => return Err(e.into()),
        }
        if n >= 2 {
            b.push("mu2", format_number(algebraic_connectivity(g)?));
        }
        b.push("rho", format_number(spectral_radius(g, DEFAULT_TOL)?.radius));
    } else {
        b.push("connected", "no");
        b.push("components", components(g).len());
        b.push("kappa", 0);
        b.push("lambda", 0);
        b.push("essential_connectivity", "n/a (disconnected input)");
        b.push("mu2", format_number(algebraic_connectivity(g)?));
        b.push("rho", format_number(spectral_radius_any(g, DEFAULT_TOL)?));
        b.push("note", "input is disconnected; rho is the maximum over components");
    }
    Ok(())
}

fn analyze_digraph(b: &mut Block, d: &Digraph) -> Result<(), Failure> {
    let n = d.order();
    b.push("kind", "digraph");
    b.push("n", n);
    b.push("arcs", d.arc_count());
    if n == 0 {
        return Ok(());
    }
    let outs: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let ins: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    b.push("min_out_degree", outs.iter().min().expect("n > 0"));
    b.push("max_out_degree", outs.iter().max().expect("n > 0"));
    b.push("min_in_degree", ins.iter().min().expect("n > 0"));
    b.push("max_in_degree", ins.iter().max().expect("n > 0"));
    let sccs = strongly_connected_components(d);
    b.push("strongly_connected", if sccs.len() == 1 { "yes" } else { "no" });
    b.push("strong_components", sccs.len());
    if sccs.len() == 1 {
        match essential_connectivity_digraph(d) {
            Ok(e) => essential_fields(b, e),
            Err(specx_core::Error::OutOfRange(m)) => b.push("essential_connectivity", format!("unavailable ({m})")),
            Err(e) => return Err(e.into()),
        }
    } else {
        b.push("essential_connectivity", "n/a (not strongly connected)");
    }
    let mut rho: f64 = 0.0;
    for c in sccs.iter().filter(|c| c.len() >= 2) {
        rho = rho.max(spectral_radius_digraph(&d.induced(c), DEFAULT_TOL)?.radius);
    }
    b.push("rho", format_number(rho));
    Ok(())
}

pub fn run(cfg: &RunConfig, path: &Path, directed: bool) -> Result<(), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|e| Failure::Parse(format!("{}: not UTF-8 at byte {}", path.display(), e.utf8_error().valid_up_to())))?;
    for (i, input) in read_inputs(path, &text, directed)?.iter().enumerate() {
        let mut block = Block::default();
        block.push("input", format!("{}#{}", path.display(), i + 1));
        match input {
            Input::Graph(g) => analyze_graph(&mut block, g)?,
            Input::Digraph(d) => analyze_digraph(&mut block, d)?,
        }
        print!("{}", block.render(cfg.format));
    }
    Ok(())
}
