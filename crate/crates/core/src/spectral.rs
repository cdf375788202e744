//! Adjacency spectral radius with Perron vector, symmetric full spectra via
//! cyclic Jacobi, and Laplacian spectra.

use crate::connectivity::is_strongly_connected;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    /// Positive, unit 2-norm eigenvector for `radius`.
    pub perron: Vec<f64>,
    /// `‖Ax − ρx‖∞` of the returned pair.
    pub residual: f64,
    pub iterations: usize,
}

/// Power iteration on `A + I` from the all-ones vector. The shift keeps the
/// iteration convergent for bipartite graphs and periodic digraphs while
/// leaving the Perron vector unchanged. The radius is the Rayleigh quotient
/// of the final iterate.
fn power_iterate(n: usize, tol: f64, max_iter: usize, mul: impl Fn(&[f64], &mut [f64])) -> Result<SpectralResult> {
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        mul(&x, &mut y);
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() / x.iter().map(|a| a * a).sum::<f64>();
        residual = x.iter().zip(&y).map(|(a, b)| (b - rho * a).abs()).fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult { radius: rho, perron: x, residual, iterations: it });
        }
        let norm = x.iter().zip(&y).map(|(a, b)| (a + b) * (a + b)).sum::<f64>().sqrt();
        for (a, b) in x.iter_mut().zip(&y) {
            *a = (*a + b) / norm;
        }
    }
    Err(Error::NoConvergence { iterations: max_iter, residual })
}

fn neighbor_lists(n: usize, f: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
    (0..n).map(f).collect()
}

pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with_cap(g, tol, DEFAULT_MAX_ITER)
}

pub fn spectral_radius_with_cap(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let nbrs = neighbor_lists(n, |u| g.neighbors(u).collect());
    power_iterate(n, tol, max_iter, |x, y| {
        for (yu, list) in y.iter_mut().zip(&nbrs) {
            *yu = list.iter().map(|&v| x[v]).sum();
        }
    })
}

/// Perron root of a strongly connected digraph, with the right Perron vector.
/// The left eigenvector is iterated too and must reach the same tolerance.
pub fn spectral_radius_digraph(d: &Digraph, tol: f64) -> Result<SpectralResult> {
    let n = d.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    let out = neighbor_lists(n, |u| d.out_neighbors(u).collect());
    let inn = neighbor_lists(n, |v| d.in_neighbors(v).collect());
    let right = power_iterate(n, tol, DEFAULT_MAX_ITER, |x, y| {
        for (yu, list) in y.iter_mut().zip(&out) {
            *yu = list.iter().map(|&v| x[v]).sum();
        }
    })?;
    let left = power_iterate(n, tol, DEFAULT_MAX_ITER, |x, y| {
        for (yu, list) in y.iter_mut().zip(&inn) {
            *yu = list.iter().map(|&v| x[v]).sum();
        }
    })?;
    Ok(SpectralResult {
        radius: right.radius,
        residual: right.residual.max(left.residual),
        iterations: right.iterations.max(left.iterations),
        perron: right.perron,
    })
}

/// Eigenvalues (ascending) of a real symmetric matrix by cyclic Jacobi rotations.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Vec<f64> {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let frob: f64 = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let eps = 1e-15 * frob.max(1.0);
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off.sqrt() <= eps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eig
}

pub fn adjacency_spectrum(g: &Graph) -> Vec<f64> {
    symmetric_eigenvalues(&g.adjacency_matrix())
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaplacianSpectrum {
    /// μ₁ ≤ … ≤ μₙ.
    pub eigenvalues: Vec<f64>,
}

impl LaplacianSpectrum {
    pub fn algebraic_connectivity(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }
}

pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        g.degree(u) as f64
                    } else if g.has_edge(u, v) {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn laplacian_spectrum(g: &Graph) -> LaplacianSpectrum {
    LaplacianSpectrum { eigenvalues: symmetric_eigenvalues(&laplacian_matrix(g)) }
}

/// Second-smallest Laplacian eigenvalue μ₂.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::InvalidParameters("algebraic connectivity needs n >= 2".into()));
    }
    Ok(laplacian_spectrum(g).eigenvalues[1])
}

/// Largest eigenvalue of `A` as the maximum over connected components, for
/// callers that may produce disconnected graphs. Isolated vertices give 0.
pub fn spectral_radius_any(g: &Graph, tol: f64) -> Result<f64> {
    let mut best: f64 = 0.0;
    for comp in crate::connectivity::components(g) {
        if comp.len() > 1 {
            best = best.max(spectral_radius(&g.induced(&comp), tol)?.radius);
        }
    }
    Ok(best)
}
