//! Simple undirected graphs and loopless digraphs stored as per-vertex bit rows.
//!
//! Vertices are always labeled `0..n`. Every constructor that combines two
//! graphs places the first operand's block first and shifts the second
//! operand's labels by its order.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order handled by the single-word fast paths (canonical labeling,
/// subset-enumerating connectivity searches, exhaustive enumeration).
pub const MAX_WORD_ORDER: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Dense bit matrix with `n` rows of `words` 64-bit words each.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitRows {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = words_for(n);
        BitRows { n, words, bits: vec![0; n * words] }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, on: bool) {
        let w = &mut self.bits[r * self.words + c / 64];
        if on {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter_row(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }
}

/// Iterator over the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitRows,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: BitRows::new(n) }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Adds `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order() && v < self.order(), "vertex out of range");
        if u != v {
            self.adj.set(u, v, true);
            self.adj.set(v, u, true);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, false);
        self.adj.set(v, u, false);
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj.row_count(u)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter_row(u)
    }

    /// Neighborhood of `u` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn neighbor_mask(&self, u: usize) -> u64 {
        debug_assert!(self.order() <= MAX_WORD_ORDER);
        self.adj.row(u)[0]
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.order()).map(|u| self.degree(u)).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        (0..self.order()).map(|u| self.degree(u)).max().ok_or(Error::EmptyGraph)
    }

    pub fn is_regular(&self) -> bool {
        let mut d = (0..self.order()).map(|u| self.degree(u));
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Graph on `vertices` (relabeled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Returns the graph with one extra vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: impl IntoIterator<Item = usize>) -> Graph {
        let n = self.order();
        let mut g = Graph::from_edges(n + 1, self.edges());
        for v in nbrs {
            g.add_edge(n, v);
        }
        g
    }

    /// Adjacency matrix as rows of `f64`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        (0..n).map(|u| (0..n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect()).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

/// Loopless digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: BitRows,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { out: BitRows::new(n) }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out.get(u, v)
    }

    /// Adds the arc `u -> v`. Loops are ignored.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.order() && v < self.order(), "vertex out of range");
        if u != v {
            self.out.set(u, v, true);
        }
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out.set(u, v, false);
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out.iter_row(u)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&u| self.has_arc(u, v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out.row_count(u)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).count()
    }

    /// Out-neighborhood as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        debug_assert!(self.order() <= MAX_WORD_ORDER);
        self.out.row(u)[0]
    }

    pub fn arc_count(&self) -> usize {
        (0..self.order()).map(|u| self.out_degree(u)).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut d = Digraph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_arc(a, b) {
                    d.add_arc(i, j);
                }
            }
        }
        d
    }

    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.order());
        Digraph::from_arcs(self.order(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn reversed(&self) -> Digraph {
        Digraph::from_arcs(self.order(), self.arcs().map(|(u, v)| (v, u)))
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        (0..n).map(|u| (0..n).map(|v| if self.has_arc(u, v) { 1.0 } else { 0.0 }).collect()).collect()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order(), self.arcs().collect::<Vec<_>>())
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,leaves}` with the center labeled 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `G1 ∪ G2`, with `G2` shifted by `|G1|`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = Graph::from_edges(n1 + g2.order(), g1.edges());
    for (u, v) in g2.edges() {
        g.add_edge(u + n1, v + n1);
    }
    g
}

/// `G1 ∨ G2`: the union plus every edge between the two blocks.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = disjoint_union(g1, g2);
    for u in 0..n1 {
        for v in n1..g.order() {
            g.add_edge(u, v);
        }
    }
    g
}

/// Complete digraph `K⃗_n`.
pub fn complete_digraph(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            d.add_arc(u, v);
        }
    }
    d
}

pub fn directed_cycle(n: usize) -> Digraph {
    assert!(n >= 2);
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn directed_path(n: usize) -> Digraph {
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

pub fn digraph_union(d1: &Digraph, d2: &Digraph) -> Digraph {
    let n1 = d1.order();
    let mut d = Digraph::from_arcs(n1 + d2.order(), d1.arcs());
    for (u, v) in d2.arcs() {
        d.add_arc(u + n1, v + n1);
    }
    d
}

/// `D1 ∇ D2`: the union plus both arcs of every cross pair.
pub fn digraph_nabla(d1: &Digraph, d2: &Digraph) -> Digraph {
    let n1 = d1.order();
    let mut d = digraph_union(d1, d2);
    for u in 0..n1 {
        for v in n1..d.order() {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(complete_graph(0).edge_count(), 0);
        let k4 = complete_graph(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn union_and_join() {
        let k1 = complete_graph(1);
        let two = disjoint_union(&k1, &k1);
        assert_eq!((two.order(), two.edge_count()), (2, 0));
        let u = disjoint_union(&complete_graph(2), &complete_graph(3));
        assert_eq!((u.order(), u.edge_count()), (5, 4));

        let p3 = join(&k1, &two);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degrees(), vec![2, 1, 1]);

        let bowtie = join(&k1, &disjoint_union(&complete_graph(2), &complete_graph(2)));
        assert_eq!((bowtie.order(), bowtie.edge_count()), (5, 6));
    }

    #[test]
    fn degrees_of_fixtures() {
        let k4 = complete_graph(4);
        assert_eq!((k4.min_degree().unwrap(), k4.max_degree().unwrap()), (3, 3));
        let p4 = path_graph(4);
        assert_eq!((p4.min_degree().unwrap(), p4.max_degree().unwrap()), (1, 2));
        assert_eq!(Graph::new(0).min_degree(), Err(Error::EmptyGraph));
        let g = join(&complete_graph(2), &disjoint_union(&complete_graph(4), &complete_graph(2)));
        assert_eq!(g.min_degree().unwrap(), 3);
    }

    #[test]
    fn digraph_constructors() {
        assert_eq!(complete_digraph(2).arc_count(), 2);
        assert_eq!(complete_digraph(4).arc_count(), 12);
        let k1 = complete_digraph(1);
        assert_eq!(digraph_nabla(&k1, &k1), complete_digraph(2));
        let d = digraph_nabla(&complete_digraph(1), &digraph_union(&complete_digraph(2), &complete_digraph(2)));
        assert_eq!(d.arc_count(), 12);
    }

    #[test]
    fn large_orders_use_multiple_words() {
        let g = complete_graph(130);
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert!(g.has_edge(0, 129) && g.has_edge(127, 64));
        assert_eq!(g.neighbors(5).count(), 129);
    }
}
