//! The extremal constructions and their closed forms.
//!
//! Undirected, essential connectivity `κ′`, minimum degree `δ`:
//!
//! * `κ′ ≥ δ`: a vertex `u` joined to `δ − 1` vertices of a clique `S` of
//!   size `κ′` and to one vertex `z`, where `S` is joined to `{z}` and to a
//!   clique on the remaining `n − κ′ − 2` vertices. Labels: `u = 0`,
//!   `S = 1..=κ′`, `z = κ′ + 1`, large clique last.
//! * `κ′ ≤ δ − 1`: `K_κ′ ∨ (K_{n−δ−1} ∪ K_{δ−κ′+1})`, blocks in that order.
//!
//! Directed, essential connectivity `k`, first clique size `m`:
//! `K⃗_k ∇ (K⃗_m ∪ K⃗_{n−k−m})` plus every arc from the `m`-clique to the
//! `(n−k−m)`-clique. Labels: `K⃗_k`, then `K⃗_m`, then the last clique.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{complete_digraph, complete_graph, digraph_nabla, digraph_union, disjoint_union, join, Digraph, Graph};
use crate::poly::{largest_real_root, IntPoly};
use crate::quotient::{char_poly, coarsest_equitable_refinement, EquitablePartition};
use crate::spectral::{spectral_radius, spectral_radius_digraph, DEFAULT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedFamilyParams {
    pub n: usize,
    pub kappa_e: usize,
    pub delta: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UndirectedCase {
    /// `κ′ > δ − 1`
    PendantPath,
    /// `κ′ ≤ δ − 1`
    Join,
}

impl UndirectedFamilyParams {
    pub fn new(n: usize, kappa_e: usize, delta: usize) -> Result<Self> {
        let p = UndirectedFamilyParams { n, kappa_e, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn case(&self) -> UndirectedCase {
        if self.kappa_e + 1 > self.delta {
            UndirectedCase::PendantPath
        } else {
            UndirectedCase::Join
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        let UndirectedFamilyParams { n, kappa_e, delta } = *self;
        if kappa_e < 1 {
            return bad("kappa' >= 1 violated".into());
        }
        if delta < 1 {
            return bad("delta >= 1 violated".into());
        }
        if n < kappa_e + 4 {
            return bad(format!("n >= kappa' + 4 violated ({n} < {})", kappa_e + 4));
        }
        if self.case() == UndirectedCase::Join && n < 2 * delta + 2 - kappa_e {
            // K_{n-δ-1} would have vertices of degree below δ
            return bad(format!("n - delta - 1 >= delta - kappa' + 1 violated ({} < {})", n as isize - delta as isize - 1, delta - kappa_e + 1));
        }
        Ok(())
    }
}

impl fmt::Display for UndirectedFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({},{},{})", self.n, self.kappa_e, self.delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DigraphFamilyParams {
    pub n: usize,
    pub k: usize,
    pub m: usize,
}

impl DigraphFamilyParams {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self> {
        let p = DigraphFamilyParams { n, k, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let DigraphFamilyParams { n, k, m } = *self;
        if k < 1 {
            return Err(Error::InvalidParameters("k >= 1 violated".into()));
        }
        if n < k + 4 {
            return Err(Error::InvalidParameters(format!("n >= k + 4 violated ({n} < {})", k + 4)));
        }
        if m < 2 || m + k + 2 > n {
            return Err(Error::InvalidParameters(format!("2 <= m <= n - k - 2 violated (m = {m}, n - k - 2 = {})", n - k - 2)));
        }
        Ok(())
    }

    /// Every valid `m` for this `(n, k)`.
    pub fn all_m(n: usize, k: usize) -> impl Iterator<Item = DigraphFamilyParams> {
        (2..=n.saturating_sub(k + 2)).filter_map(move |m| DigraphFamilyParams::new(n, k, m).ok())
    }
}

impl fmt::Display for DigraphFamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dg({},{},{})", self.n, self.k, self.m)
    }
}

/// Family selector as written on the command line: `g(n,kappa,delta)` or `dg(n,k,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Undirected(UndirectedFamilyParams),
    Directed(DigraphFamilyParams),
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameters(format!("expected g(n,kappa,delta) or dg(n,k,m), got {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args.split(',').map(|a| a.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
        let [a, b, c] = nums[..] else { return Err(bad()) };
        match name.trim() {
            "g" => Ok(FamilySpec::Undirected(UndirectedFamilyParams::new(a, b, c)?)),
            "dg" => Ok(FamilySpec::Directed(DigraphFamilyParams::new(a, b, c)?)),
            _ => Err(bad()),
        }
    }
}

/// `K_s ∨ (K_{p1} ∪ K_{p2} ∪ …)`, join set first.
pub fn build_join_family(s: usize, parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidParameters("parts must be nonempty and positive".into()));
    }
    let cliques = parts.iter().fold(Graph::new(0), |acc, &p| disjoint_union(&acc, &complete_graph(p)));
    Ok(join(&complete_graph(s), &cliques))
}

pub fn build_undirected_extremal(p: &UndirectedFamilyParams) -> Result<Graph> {
    p.validate()?;
    let UndirectedFamilyParams { n, kappa_e, delta } = *p;
    match p.case() {
        UndirectedCase::Join => build_join_family(kappa_e, &[n - delta - 1, delta - kappa_e + 1]),
        UndirectedCase::PendantPath => {
            let rest = join(&complete_graph(kappa_e), &disjoint_union(&complete_graph(1), &complete_graph(n - kappa_e - 2)));
            let mut g = disjoint_union(&complete_graph(1), &rest);
            for s in 1..delta {
                g.add_edge(0, s);
            }
            g.add_edge(0, kappa_e + 1);
            Ok(g)
        }
    }
}

/// Cells of the natural equitable partition of the undirected construction.
pub fn undirected_extremal_cells(p: &UndirectedFamilyParams) -> Vec<Vec<usize>> {
    let UndirectedFamilyParams { n, kappa_e, delta } = *p;
    match p.case() {
        UndirectedCase::Join => {
            let a = n - delta - 1;
            vec![(0..kappa_e).collect(), (kappa_e..kappa_e + a).collect(), (kappa_e + a..n).collect()]
        }
        UndirectedCase::PendantPath => {
            let mut cells = vec![vec![0]];
            if delta > 1 {
                cells.push((1..delta).collect());
            }
            if kappa_e + 1 > delta {
                cells.push((delta..=kappa_e).collect());
            }
            cells.push(vec![kappa_e + 1]);
            cells.push((kappa_e + 2..n).collect());
            cells
        }
    }
}

pub fn build_digraph_extremal(p: &DigraphFamilyParams) -> Result<Digraph> {
    p.validate()?;
    let DigraphFamilyParams { n, k, m } = *p;
    let mut d = digraph_nabla(&complete_digraph(k), &digraph_union(&complete_digraph(m), &complete_digraph(n - k - m)));
    for v in k..k + m {
        for u in k + m..n {
            d.add_arc(v, u);
        }
    }
    Ok(d)
}

pub fn digraph_extremal_cells(p: &DigraphFamilyParams) -> Vec<Vec<usize>> {
    let DigraphFamilyParams { n, k, m } = *p;
    vec![(0..k).collect(), (k..k + m).collect(), (k + m..n).collect()]
}

/// `4m² − 4(n−k)m + n²`, computed exactly.
pub fn digraph_discriminant(p: &DigraphFamilyParams) -> i128 {
    let (n, k, m) = (p.n as i128, p.k as i128, p.m as i128);
    4 * m * m - 4 * (n - k) * m + n * n
}

/// `(n − 2 + √(4m² − 4(n−k)m + n²)) / 2`. The discriminant is exact; the
/// square root carries a one-term correction (`fma`) so the sum is formed
/// from a double-double value before the final rounding.
pub fn closed_form_digraph_rho(p: &DigraphFamilyParams) -> Result<f64> {
    p.validate()?;
    let disc = digraph_discriminant(p);
    if disc < 0 {
        return Err(Error::InvalidParameters(format!("negative discriminant {disc} for {p}")));
    }
    let f = disc as f64;
    let s = f.sqrt();
    let corr = if s > 0.0 { (-s).mul_add(s, f) / (2.0 * s) } else { 0.0 };
    let base = (p.n - 2) as f64;
    Ok(((base + s) + corr) / 2.0)
}

/// `f(x) = 4x² − 4(n−k)x + n²`.
pub fn lemma8_f(n: usize, k: usize, x: usize) -> Result<i128> {
    if k < 1 || x < 2 || x + k + 2 > n {
        return Err(Error::InvalidParameters(format!("need k >= 1 and 2 <= x <= n - k - 2 (n={n}, k={k}, x={x})")));
    }
    let (n, k, x) = (n as i128, k as i128, x as i128);
    Ok(4 * x * x - 4 * (n - k) * x + n * n)
}

/// Maximum of `f` over the integer range and every argument attaining it.
pub fn lemma8_max(n: usize, k: usize) -> Result<(i128, Vec<usize>)> {
    let values: Vec<(usize, i128)> = (2..=n.saturating_sub(k + 2)).map(|x| lemma8_f(n, k, x).map(|v| (x, v))).collect::<Result<_>>()?;
    let max = values.iter().map(|&(_, v)| v).max().ok_or_else(|| Error::InvalidParameters(format!("empty range for n={n}, k={k}")))?;
    Ok((max, values.into_iter().filter(|&(_, v)| v == max).map(|(x, _)| x).collect()))
}

/// `(λ + 1)(λ² + (2 − n)λ + mn − mk − m² − n + 1)`, expanded.
pub fn quotient_char_poly_digraph(p: &DigraphFamilyParams) -> Result<IntPoly> {
    p.validate()?;
    let (n, k, m) = (p.n as i128, p.k as i128, p.m as i128);
    let quad = IntPoly::new(vec![1, 2 - n, m * n - m * k - m * m - n + 1]);
    Ok(IntPoly::new(vec![1, 1]).mul(&quad))
}

/// Spectral radius of the undirected construction by the quotient route,
/// cross-checked against power iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct Theorem1Bound {
    pub params: UndirectedFamilyParams,
    pub partition: EquitablePartition,
    pub char_poly: IntPoly,
    pub rho: f64,
    pub power_rho: f64,
}

pub fn theorem1_bound(p: &UndirectedFamilyParams) -> Result<Theorem1Bound> {
    let g = build_undirected_extremal(p)?;
    let partition = coarsest_equitable_refinement(&g, &undirected_extremal_cells(p))?;
    let cp = char_poly(&partition.quotient);
    let rho = largest_real_root(&cp.to_f64()).ok_or(Error::EigenMismatch { quotient: f64::NAN, full: f64::NAN, tol: 1e-9 })?;
    let power_rho = spectral_radius(&g, DEFAULT_TOL)?.radius;
    if (rho - power_rho).abs() > 1e-9 {
        return Err(Error::EigenMismatch { quotient: rho, full: power_rho, tol: 1e-9 });
    }
    Ok(Theorem1Bound { params: *p, partition, char_poly: cp, rho, power_rho })
}

/// Power-iteration radius of the digraph construction.
pub fn digraph_extremal_power_rho(p: &DigraphFamilyParams) -> Result<f64> {
    Ok(spectral_radius_digraph(&build_digraph_extremal(p)?, DEFAULT_TOL)?.radius)
}
