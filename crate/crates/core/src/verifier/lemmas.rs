//! Perron-entry ordering, edge rotation, and seeded property suites for the
//! monotonicity and join inequalities.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_strongly_connected;
use crate::error::{Error, Result};
use crate::families::build_join_family;
use crate::graph::{Digraph, Graph};
use crate::spectral::{spectral_radius, spectral_radius_any};

use super::digraph_radius;

const PERRON_TOL: f64 = 1e-12;
/// Minimum gap for a strict spectral inequality to count as satisfied.
const STRICT: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerronRelation {
    /// `N(v) \ {u}` is a proper subset of `N(u) \ {v}`: `x_u > x_v`.
    Greater,
    /// `N(v) ⊆ N[u]` and `N(u) ⊆ N[v]`: `x_u = x_v`.
    Equal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma1Check {
    pub relation: PerronRelation,
    pub x_u: f64,
    pub x_v: f64,
    pub holds: bool,
}

pub fn lemma1_hypothesis(g: &Graph, u: usize, v: usize) -> Option<PerronRelation> {
    let nu = g.neighbor_mask(u) & !(1u64 << v);
    let nv = g.neighbor_mask(v) & !(1u64 << u);
    if nv & !nu == 0 && nv != nu {
        Some(PerronRelation::Greater)
    } else if nv == nu {
        Some(PerronRelation::Equal)
    } else {
        None
    }
}

/// Checks the Perron entries of `u` and `v` against the applicable
/// hypothesis, with `margin` separating strict from equal.
pub fn check_lemma1(g: &Graph, u: usize, v: usize, margin: f64) -> Result<Lemma1Check> {
    let n = g.order();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidParameters("u and v must be distinct vertices".into()));
    }
    let relation = lemma1_hypothesis(g, u, v).ok_or_else(|| Error::InvalidParameters("neither neighborhood hypothesis holds".into()))?;
    let x = spectral_radius(g, PERRON_TOL)?.perron;
    let (x_u, x_v) = (x[u], x[v]);
    let holds = match relation {
        PerronRelation::Greater => x_u - x_v > margin,
        PerronRelation::Equal => (x_u - x_v).abs() <= margin,
    };
    Ok(Lemma1Check { relation, x_u, x_v, holds })
}

/// Deletes `v t` and adds `u t` for every `t` in `targets`.
pub fn rotate_edges(g: &Graph, u: usize, v: usize, targets: &[usize]) -> Result<Graph> {
    let n = g.order();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidParameters("u and v must be distinct vertices".into()));
    }
    if targets.is_empty() {
        return Err(Error::InvalidParameters("target set must be nonempty".into()));
    }
    let mut seen = 0u64;
    for &t in targets {
        if t >= n || t == u || !g.has_edge(v, t) || g.has_edge(u, t) || seen >> t & 1 == 1 {
            return Err(Error::InvalidParameters(format!("target {t} is not a distinct vertex of N(v) \\ N(u) other than u")));
        }
        seen |= 1 << t;
    }
    let mut out = g.clone();
    for &t in targets {
        out.remove_edge(v, t);
        out.add_edge(u, t);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma3Check {
    /// `x_u >= x_v` in the Perron vector of the original graph.
    pub precondition: bool,
    pub rho_before: f64,
    pub rho_after: f64,
    /// The strict increase holds, or the precondition fails.
    pub holds: bool,
}

pub fn check_lemma3(g: &Graph, u: usize, v: usize, targets: &[usize]) -> Result<Lemma3Check> {
    let rotated = rotate_edges(g, u, v, targets)?;
    let before = spectral_radius(g, PERRON_TOL)?;
    let precondition = before.perron[u] >= before.perron[v];
    let rho_after = spectral_radius_any(&rotated, PERRON_TOL)?;
    let holds = !precondition || rho_after > before.radius + STRICT;
    Ok(Lemma3Check { precondition, rho_before: before.radius, rho_after, holds })
}

/// Outcome of a seeded property suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, instances: 0, violations: 0, first_violation: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} instances, {} violations", self.name, self.instances, self.violations)?;
        if let Some(v) = &self.first_violation {
            write!(f, " (first: {v})")?;
        }
        Ok(())
    }
}

/// Uniform random connected graph: `G(n, p)` with `p` drawn per attempt,
/// resampled until connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p: f64 = rng.gen_range(0.2..0.9);
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(a, b);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_strong_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    loop {
        let p: f64 = rng.gen_range(0.2..0.8);
        let mut d = Digraph::new(n);
        for a in 0..n {
            for b in 0..n {
                if a != b && rng.gen_bool(p) {
                    d.add_arc(a, b);
                }
            }
        }
        if is_strongly_connected(&d) {
            return d;
        }
    }
}

fn describe(g: &Graph) -> String {
    String::from_utf8_lossy(&crate::io::write_graph6(g)).into_owned()
}

/// Perron-entry orderings on random graphs until `instances` applicable
/// pairs have been checked.
pub fn lemma1_suite(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma1");
    while report.instances < instances {
        let n = rng.gen_range(3..=10);
        let g = random_connected_graph(&mut rng, n);
        for u in 0..n {
            for v in 0..n {
                if u == v || report.instances >= instances || lemma1_hypothesis(&g, u, v).is_none() {
                    continue;
                }
                let c = check_lemma1(&g, u, v, 1e-9)?;
                report.record(c.holds, || format!("{} u={u} v={v} x_u={} x_v={}", describe(&g), c.x_u, c.x_v));
            }
        }
    }
    Ok(report)
}

/// Proper subgraphs (edges removed, possibly a vertex deleted) of random
/// connected graphs have strictly smaller spectral radius.
pub fn lemma2_suite(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma2");
    while report.instances < instances {
        let n = rng.gen_range(3..=10);
        let g = random_connected_graph(&mut rng, n);
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.shuffle(&mut rng);
        let drop = rng.gen_range(0..=edges.len().min(3));
        let mut h = g.clone();
        for &(a, b) in &edges[..drop] {
            h.remove_edge(a, b);
        }
        if drop == 0 || rng.gen_bool(0.3) {
            let gone = rng.gen_range(0..n);
            let keep: Vec<usize> = (0..n).filter(|&x| x != gone).collect();
            h = h.induced(&keep);
        }
        let rho = spectral_radius(&g, PERRON_TOL)?.radius;
        let rho_sub = spectral_radius_any(&h, PERRON_TOL)?;
        report.record(rho - rho_sub > STRICT, || format!("{} sub {} rho={rho} sub={rho_sub}", describe(&g), describe(&h)));
    }
    Ok(report)
}

/// Edge rotations toward the vertex with the larger Perron entry strictly
/// increase the spectral radius.
pub fn lemma3_suite(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma3");
    while report.instances < instances {
        let n = rng.gen_range(3..=10);
        let g = random_connected_graph(&mut rng, n);
        let x = spectral_radius(&g, PERRON_TOL)?.perron;
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let (u, v) = if x[a] >= x[b] { (a, b) } else { (b, a) };
        let mut pool: Vec<usize> = g.neighbors(v).filter(|&t| t != u && !g.has_edge(u, t)).collect();
        if pool.is_empty() {
            continue;
        }
        pool.shuffle(&mut rng);
        let s = rng.gen_range(1..=pool.len());
        let targets = &pool[..s];
        let c = check_lemma3(&g, u, v, targets)?;
        if !c.precondition {
            continue;
        }
        report.record(c.holds, || format!("{} u={u} v={v} targets={targets:?} {} -> {}", describe(&g), c.rho_before, c.rho_after));
    }
    Ok(report)
}

/// `ρ(K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})) < ρ(K_s ∨ (K_{n−s−p(t−1)} ∪ (t−1)K_p))`
/// whenever `n_1 ≥ … ≥ n_t ≥ p` and `n_1 < n − s − p(t−1)`.
pub fn lemma4_suite(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma4");
    while report.instances < instances {
        let s = rng.gen_range(1..=4);
        let t = rng.gen_range(2..=4);
        let p = rng.gen_range(1..=3);
        let mut parts: Vec<usize> = (0..t).map(|_| rng.gen_range(p..=p + 5)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = s + parts.iter().sum::<usize>();
        let big = n - s - p * (t - 1);
        if parts[0] >= big {
            continue;
        }
        let mut extreme = vec![big];
        extreme.extend(std::iter::repeat_n(p, t - 1));
        let lhs = spectral_radius(&build_join_family(s, &parts)?, PERRON_TOL)?.radius;
        let rhs = spectral_radius(&build_join_family(s, &extreme)?, PERRON_TOL)?.radius;
        report.record(rhs - lhs > STRICT, || format!("s={s} parts={parts:?} p={p}: {lhs} vs {rhs}"));
    }
    Ok(report)
}

/// Proper subdigraphs of random strongly connected digraphs have strictly
/// smaller spectral radius.
pub fn lemma7_suite(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("lemma7");
    while report.instances < instances {
        let n = rng.gen_range(2..=8);
        let d = random_strong_digraph(&mut rng, n);
        let mut arcs: Vec<(usize, usize)> = d.arcs().collect();
        arcs.shuffle(&mut rng);
        let drop = rng.gen_range(0..=arcs.len().min(3));
        let mut h = d.clone();
        for &(a, b) in &arcs[..drop] {
            h.remove_arc(a, b);
        }
        if drop == 0 || rng.gen_bool(0.3) {
            let gone = rng.gen_range(0..n);
            let keep: Vec<usize> = (0..n).filter(|&x| x != gone).collect();
            h = h.induced(&keep);
        }
        let rho = digraph_radius(&d);
        let rho_sub = digraph_radius(&h);
        report.record(rho - rho_sub > STRICT, || {
            let s = |x: &Digraph| String::from_utf8_lossy(&crate::io::write_digraph6(x)).into_owned();
            format!("{} sub {} rho={rho} sub={rho_sub}", s(&d), s(&h))
        });
    }
    Ok(report)
}
