//! Brute-force oracles on dense adjacency matrices, independent of the
//! library's bit-set code paths.
#![allow(dead_code)]

use specx_core::{Digraph, Graph};

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn digraph_matrix(d: &Digraph) -> Matrix {
    let n = d.order();
    (0..n).map(|u| (0..n).map(|v| d.has_arc(u, v)).collect()).collect()
}

/// All labeled graphs on `n` vertices, edge `(i, j)` with `i < j` in
/// lexicographic order selected by successive bits.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e))
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every permutation.
pub fn brute_isomorphic(a: &Matrix, b: &Matrix) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    permutations(n).iter().any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
}

/// Connected components of the subgraph induced by `alive`, by DFS.
pub fn components_among(a: &Matrix, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for v in 0..n {
                if alive[v] && !seen[v] && a[u][v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn reach(a: &Matrix, alive: &[bool], s: usize) -> Vec<bool> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if alive[v] && !seen[v] && a[u][v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Strong components among `alive` by mutual reachability.
pub fn strong_components_among(a: &Matrix, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = a.len();
    let r: Vec<Vec<bool>> = (0..n).map(|s| if alive[s] { reach(a, alive, s) } else { vec![false; n] }).collect();
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !alive[s] || done[s] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&v| alive[v] && r[s][v] && r[v][s]).collect();
        for &v in &comp {
            done[v] = true;
        }
        out.push(comp);
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

fn alive_without(n: usize, cut: &[usize]) -> Vec<bool> {
    (0..n).map(|v| !cut.contains(&v)).collect()
}

/// Smallest essential cut size, or `None`.
pub fn brute_essential(a: &Matrix) -> Option<usize> {
    let n = a.len();
    (0..n).find(|&k| {
        subsets(n, k).iter().any(|cut| components_among(a, &alive_without(n, cut)).iter().filter(|c| c.len() >= 2).count() >= 2)
    })
}

pub fn brute_essential_digraph(a: &Matrix) -> Option<usize> {
    let n = a.len();
    (0..n).find(|&k| {
        subsets(n, k).iter().any(|cut| strong_components_among(a, &alive_without(n, cut)).iter().filter(|c| c.len() >= 2).count() >= 2)
    })
}

/// Vertex connectivity: fewest deletions leaving a disconnected graph or a
/// single vertex.
pub fn brute_kappa(a: &Matrix) -> usize {
    let n = a.len();
    (0..n)
        .find(|&k| k == n - 1 || subsets(n, k).iter().any(|cut| components_among(a, &alive_without(n, cut)).len() >= 2))
        .unwrap_or(n - 1)
}

/// Edge connectivity as the minimum edge boundary over proper vertex subsets.
pub fn brute_lambda(a: &Matrix) -> usize {
    let n = a.len();
    (1u64..(1 << n) - 1)
        .filter(|m| m & 1 == 1)
        .map(|m| {
            let inside = |v: usize| m >> v & 1 == 1;
            (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| inside(u) && !inside(v) && a[u][v]).count()
        })
        .min()
        .unwrap_or(0)
}

pub fn is_strong(a: &Matrix) -> bool {
    let n = a.len();
    n == 0 || strong_components_among(a, &vec![true; n]).len() == 1
}

/// Largest eigenvalue by plain (unshifted on `A + I`) dense power iteration
/// run to a fixed, generous count.
pub fn dense_perron(a: &Matrix) -> f64 {
    let n = a.len();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..20000 {
        let y: Vec<f64> = (0..n).map(|i| x[i] + (0..n).filter(|&j| a[i][j]).map(|j| x[j]).sum::<f64>()).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        lambda = y.iter().zip(&x).map(|(p, q)| p * q).sum::<f64>() / x.iter().map(|v| v * v).sum::<f64>() - 1.0;
        x = y.into_iter().map(|v| v / norm).collect();
    }
    lambda
}
