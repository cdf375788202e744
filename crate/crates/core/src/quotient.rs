//! Equitable partitions, quotient matrices and their characteristic
//! polynomials. For digraphs rows count out-neighbors.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::poly::IntPoly;
use crate::spectral::{spectral_radius, spectral_radius_digraph};

/// Read-only adjacency shared by graphs and digraphs.
pub trait Adjacency {
    fn order(&self) -> usize;
    /// `u -> v` (symmetric for graphs).
    fn adjacent(&self, u: usize, v: usize) -> bool;
    fn directed(&self) -> bool;
    /// Perron root of the full adjacency matrix.
    fn perron_root(&self, tol: f64) -> Result<f64>;
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
    fn directed(&self) -> bool {
        false
    }
    fn perron_root(&self, tol: f64) -> Result<f64> {
        Ok(spectral_radius(self, tol)?.radius)
    }
}

impl Adjacency for Digraph {
    fn order(&self) -> usize {
        Digraph::order(self)
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v)
    }
    fn directed(&self) -> bool {
        true
    }
    fn perron_root(&self, tol: f64) -> Result<f64> {
        Ok(spectral_radius_digraph(self, tol)?.radius)
    }
}

/// Square integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    pub cells: Vec<Vec<usize>>,
    /// `quotient[i][j]`: neighbors in cell `j` of any vertex of cell `i`.
    pub quotient: IntMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquitableCheck {
    Equitable,
    /// `vertex` disagrees with the first vertex of its cell on the count into `cell`.
    Violation { vertex: usize, cell: usize },
}

impl EquitableCheck {
    pub fn is_equitable(&self) -> bool {
        matches!(self, EquitableCheck::Equitable)
    }
}

fn check_partition(n: usize, cells: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for cell in cells {
        if cell.is_empty() {
            return Err(Error::NotPartition("empty cell".into()));
        }
        for &v in cell {
            if v >= n {
                return Err(Error::NotPartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPartition(format!("vertex {v} appears twice")));
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(Error::NotPartition(format!("vertex {v} is not covered"))),
        None => Ok(()),
    }
}

fn count_into<A: Adjacency + ?Sized>(g: &A, v: usize, cell: &[usize]) -> i64 {
    cell.iter().filter(|&&w| g.adjacent(v, w)).count() as i64
}

pub fn is_equitable<A: Adjacency + ?Sized>(g: &A, cells: &[Vec<usize>]) -> Result<EquitableCheck> {
    check_partition(g.order(), cells)?;
    for cell in cells {
        for (j, target) in cells.iter().enumerate() {
            let expected = count_into(g, cell[0], target);
            if let Some(&v) = cell[1..].iter().find(|&&v| count_into(g, v, target) != expected) {
                return Ok(EquitableCheck::Violation { vertex: v, cell: j });
            }
        }
    }
    Ok(EquitableCheck::Equitable)
}

pub fn quotient_matrix<A: Adjacency + ?Sized>(g: &A, cells: &[Vec<usize>]) -> Result<IntMatrix> {
    if let EquitableCheck::Violation { vertex, cell } = is_equitable(g, cells)? {
        return Err(Error::NotEquitable { vertex, cell });
    }
    Ok(cells.iter().map(|ci| cells.iter().map(|cj| count_into(g, ci[0], cj)).collect()).collect())
}

/// Polynomial with ascending coefficients, used internally for cofactor expansion.
type Asc = Vec<i128>;

fn asc_mul(a: &Asc, b: &Asc) -> Asc {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn asc_add(a: &mut Asc, b: &Asc, sign: i128) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x += sign * y;
    }
}

fn poly_det(m: &[Vec<Asc>]) -> Asc {
    let k = m.len();
    if k == 0 {
        return vec![1];
    }
    if k == 1 {
        return m[0][0].clone();
    }
    let mut total = vec![0];
    for col in 0..k {
        if m[0][col].iter().all(|&c| c == 0) {
            continue;
        }
        let minor: Vec<Vec<Asc>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, e)| e.clone()).collect()).collect();
        let term = asc_mul(&m[0][col], &poly_det(&minor));
        asc_add(&mut total, &term, if col % 2 == 0 { 1 } else { -1 });
    }
    total
}

/// `det(λI − B)` by cofactor expansion over integer polynomials.
pub fn char_poly_cofactor(b: &IntMatrix) -> IntPoly {
    let k = b.len();
    let m: Vec<Vec<Asc>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { vec![-(b[i][j] as i128), 1] } else { vec![-(b[i][j] as i128)] }).collect())
        .collect();
    let mut asc = poly_det(&m);
    asc.reverse();
    IntPoly::new(asc)
}

/// `det(λI − B)` by the Faddeev–LeVerrier recurrence (exact over integers).
pub fn char_poly_leverrier(b: &IntMatrix) -> IntPoly {
    let k = b.len();
    let a: Vec<Vec<i128>> = b.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut coeffs = vec![0i128; k + 1];
    coeffs[0] = 1;
    let mut m = vec![vec![0i128; k]; k];
    for step in 1..=k {
        // M_step = A M_{step-1} + c_{step-1} I
        let mut next = vec![vec![0i128; k]; k];
        for i in 0..k {
            for j in 0..k {
                next[i][j] = (0..k).map(|t| a[i][t] * m[t][j]).sum();
            }
            next[i][i] += coeffs[step - 1];
        }
        m = next;
        let trace: i128 = (0..k).map(|i| (0..k).map(|t| a[i][t] * m[t][i]).sum::<i128>()).sum();
        coeffs[step] = -trace / step as i128;
    }
    IntPoly::new(coeffs)
}

/// Exact characteristic polynomial: cofactor expansion up to 6×6,
/// Faddeev–LeVerrier beyond.
pub fn char_poly(b: &IntMatrix) -> IntPoly {
    if b.len() <= 6 {
        char_poly_cofactor(b)
    } else {
        char_poly_leverrier(b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenInclusionReport {
    pub char_poly: IntPoly,
    /// Largest real root of the quotient's characteristic polynomial.
    pub quotient_root: f64,
    /// Perron root of the full adjacency matrix by power iteration.
    pub full_radius: f64,
    pub difference: f64,
}

pub fn verify_eigen_inclusion<A: Adjacency + ?Sized>(g: &A, cells: &[Vec<usize>], tol: f64) -> Result<EigenInclusionReport> {
    let b = quotient_matrix(g, cells)?;
    let cp = char_poly(&b);
    let quotient_root = cp.largest_real_root().ok_or(Error::EigenMismatch { quotient: f64::NAN, full: f64::NAN, tol })?;
    let full_radius = g.perron_root(crate::spectral::DEFAULT_TOL)?;
    let difference = (quotient_root - full_radius).abs();
    if difference > tol {
        return Err(Error::EigenMismatch { quotient: quotient_root, full: full_radius, tol });
    }
    Ok(EigenInclusionReport { char_poly: cp, quotient_root, full_radius, difference })
}

/// Splits cells by neighbor counts (out and in for digraphs) into each
/// splitter cell until nothing changes. Sub-cells are ordered by ascending
/// count; vertices stay sorted inside each cell.
pub fn coarsest_equitable_refinement<A: Adjacency + ?Sized>(g: &A, seed: &[Vec<usize>]) -> Result<EquitablePartition> {
    check_partition(g.order(), seed)?;
    let mut cells: Vec<Vec<usize>> = seed.iter().map(|c| {
        let mut c = c.clone();
        c.sort_unstable();
        c
    }).collect();
    let directed = g.directed();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].clone();
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<((usize, usize), usize)> = cell
                    .iter()
                    .map(|&v| {
                        let out = splitter.iter().filter(|&&w| g.adjacent(v, w)).count();
                        let inn = if directed { splitter.iter().filter(|&&w| g.adjacent(w, v)).count() } else { 0 };
                        ((out, inn), v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut group = vec![keyed[0].1];
                for w in keyed.windows(2) {
                    if w[1].0 != w[0].0 {
                        group.sort_unstable();
                        next.push(std::mem::take(&mut group));
                        changed = true;
                    }
                    group.push(w[1].1);
                }
                group.sort_unstable();
                next.push(group);
            }
            cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
    let quotient = quotient_matrix(g, &cells)?;
    Ok(EquitablePartition { cells, quotient })
}
