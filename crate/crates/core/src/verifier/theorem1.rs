//! Exhaustive check of the undirected bound over all connected graphs of a
//! given order.

use std::time::Instant;

use crate::canon::canonical_form;
use crate::connectivity::essential_connectivity;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::families::{build_undirected_extremal, theorem1_bound, UndirectedFamilyParams};
use crate::graph::Graph;
use crate::spectral::{spectral_radius, DEFAULT_TOL};

use super::enumerate::enumerate_connected_graphs;
use super::report::{VerificationReport, Verdict};

pub const MAX_THEOREM1_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifiedGraph {
    pub graph: Graph,
    pub delta: usize,
    pub kappa_e: Option<usize>,
    pub rho: f64,
}

/// Every connected class on `n` vertices with its invariants, computed once
/// and shared by all `(δ, κ′)` queries at that order.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub n: usize,
    pub graphs: Vec<ClassifiedGraph>,
}

fn classify(g: &Graph) -> Result<ClassifiedGraph> {
    Ok(ClassifiedGraph {
        graph: g.clone(),
        delta: g.min_degree().unwrap_or(0),
        kappa_e: essential_connectivity(g)?.value(),
        rho: spectral_radius(g, DEFAULT_TOL)?.radius,
    })
}

pub fn classify_corpus(n: usize, exec: Execution) -> Result<Corpus> {
    if n > MAX_THEOREM1_ORDER {
        return Err(Error::OutOfRange(format!("exhaustive undirected verification supports n <= {MAX_THEOREM1_ORDER}")));
    }
    let graphs = enumerate_connected_graphs(n, exec)?;
    let graphs = exec::map(exec, &graphs, classify).into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Corpus { n, graphs })
}

fn check_params(n: usize, delta: usize, kappa_e: usize) -> Result<()> {
    if delta < 1 || kappa_e < 1 {
        return Err(Error::InvalidParameters("delta >= 1 and kappa' >= 1 required".into()));
    }
    if n < kappa_e + 4 {
        return Err(Error::InvalidParameters(format!("n >= kappa' + 4 violated ({n} < {})", kappa_e + 4)));
    }
    Ok(())
}

/// Compares the class `A(n, κ′, δ)` inside `corpus` with the construction.
pub fn verify_theorem1_in(corpus: &Corpus, delta: usize, kappa_e: usize, tol: f64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = corpus.n;
    check_params(n, delta, kappa_e)?;
    let feasible: Vec<&ClassifiedGraph> =
        corpus.graphs.iter().filter(|c| c.delta == delta && c.kappa_e == Some(kappa_e)).collect();
    let params = UndirectedFamilyParams { n, kappa_e, delta };
    let (construction_rho, construction) = match params.validate() {
        Ok(()) => {
            let bound = theorem1_bound(&params)?;
            let form = canonical_form(&build_undirected_extremal(&params)?).as_str().to_string();
            (Some(bound.rho), Some(form))
        }
        Err(_) => (None, None),
    };
    let max_rho = feasible.iter().map(|c| c.rho).fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))));
    let mut maximizers: Vec<String> = match max_rho {
        Some(max) => feasible.iter().filter(|c| c.rho >= max - tol).map(|c| canonical_form(&c.graph).as_str().to_string()).collect(),
        None => Vec::new(),
    };
    maximizers.sort();
    maximizers.dedup();

    let (verdict, counterexample) = if feasible.is_empty() {
        (Verdict::EmptyClass, None)
    } else {
        let max = max_rho.expect("nonempty class has a maximum");
        let rho_ok = construction_rho.is_some_and(|c| (max - c).abs() <= tol);
        let unique_ok = maximizers.len() == 1 && construction.as_deref() == Some(maximizers[0].as_str());
        if rho_ok && unique_ok {
            (Verdict::Confirmed, None)
        } else {
            let offender = maximizers.iter().find(|m| Some(m.as_str()) != construction.as_deref()).or(maximizers.first()).cloned();
            (Verdict::Counterexample, offender)
        }
    };
    Ok(VerificationReport {
        theorem: "t1",
        params: vec![("n", n.to_string()), ("delta", delta.to_string()), ("kappa", kappa_e.to_string())],
        mode: "exhaustive",
        space_size: corpus.graphs.len() as u64,
        feasible_count: feasible.len() as u64,
        max_rho,
        maximizers,
        construction_rho,
        constructions: construction.into_iter().collect(),
        verdict,
        counterexample,
        tol,
        elapsed: start.elapsed(),
    })
}

pub fn verify_theorem1(n: usize, delta: usize, kappa_e: usize, tol: f64, exec: Execution) -> Result<VerificationReport> {
    check_params(n, delta, kappa_e)?;
    let start = Instant::now();
    let corpus = classify_corpus(n, exec)?;
    let mut report = verify_theorem1_in(&corpus, delta, kappa_e, tol)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// One report per non-empty class `(n, δ, κ′)` with `n` in `orders`,
/// ordered by `n`, then `δ`, then `κ′`.
pub fn sweep_theorem1(orders: impl IntoIterator<Item = usize>, tol: f64, exec: Execution) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in orders {
        if n < 5 {
            return Err(Error::OutOfRange("sweep needs n >= 5".into()));
        }
        let corpus = classify_corpus(n, exec)?;
        for delta in 1..n {
            for kappa_e in 1..=n - 4 {
                let report = verify_theorem1_in(&corpus, delta, kappa_e, tol)?;
                if report.verdict != Verdict::EmptyClass {
                    out.push(report);
                }
            }
        }
    }
    Ok(out)
}
