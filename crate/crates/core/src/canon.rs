//! Canonical labeling by equitable refinement plus backtracking over
//! individualizations, keeping the lexicographically smallest relabeled
//! adjacency matrix.
//!
//! Branches that individualize a vertex which is a twin of an already tried
//! vertex of the same cell are skipped: swapping two twins is an automorphism
//! fixing everything individualized so far, so both subtrees produce the same
//! set of leaf encodings. All routines here work on single-word bit rows and
//! require `n <= 64`.

use std::cmp::Ordering;

use crate::graph::{BitIter, Digraph, Graph, MAX_WORD_ORDER};
use crate::io;

/// Out- and in-neighborhood words of a (di)graph.
struct Rows {
    out: Vec<u64>,
    inn: Vec<u64>,
    directed: bool,
}

impl Rows {
    fn of_graph(g: &Graph) -> Rows {
        assert!(g.order() <= MAX_WORD_ORDER, "canonical labeling supports n <= 64");
        let out: Vec<u64> = (0..g.order()).map(|u| g.neighbor_mask(u)).collect();
        Rows { inn: out.clone(), out, directed: false }
    }

    fn of_digraph(d: &Digraph) -> Rows {
        assert!(d.order() <= MAX_WORD_ORDER, "canonical labeling supports n <= 64");
        let n = d.order();
        let out: Vec<u64> = (0..n).map(|u| d.out_mask(u)).collect();
        let mut inn = vec![0u64; n];
        for (u, &row) in out.iter().enumerate() {
            for v in BitIter(row) {
                inn[v] |= 1 << u;
            }
        }
        Rows { out, inn, directed: true }
    }

    fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    fn key(&self, v: usize, splitter: u64) -> (u32, u32) {
        let o = (self.out[v] & splitter).count_ones();
        if self.directed {
            (o, (self.inn[v] & splitter).count_ones())
        } else {
            (o, 0)
        }
    }

    /// Transposing `a` and `b` is an automorphism.
    fn twins(&self, a: usize, b: usize) -> bool {
        let mask = !((1u64 << a) | (1u64 << b));
        if self.out[a] & mask != self.out[b] & mask || self.inn[a] & mask != self.inn[b] & mask {
            return false;
        }
        // arc a->b must match b->a
        !self.directed || ((self.out[a] >> b) & 1) == ((self.out[b] >> a) & 1)
    }

    fn encode(&self, order: &[usize]) -> Vec<u64> {
        order
            .iter()
            .map(|&u| {
                let row = self.out[u];
                order.iter().enumerate().fold(0u64, |acc, (j, &v)| acc | (((row >> v) & 1) << (63 - j)))
            })
            .collect()
    }
}

/// Refines an ordered partition (cells as bit masks) until it is equitable.
/// Splits order sub-cells by ascending neighbor-count key, so the result is
/// invariant under relabeling.
fn refine(rows: &Rows, cells: &mut Vec<u64>) {
    let mut keyed: Vec<((u32, u32), usize)> = Vec::with_capacity(rows.n());
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                keyed.clear();
                keyed.extend(BitIter(cell).map(|v| (rows.key(v, splitter), v)));
                keyed.sort_unstable();
                let mut mask = 0u64;
                let mut current = keyed[0].0;
                for &(k, v) in keyed.iter() {
                    if k != current {
                        next.push(mask);
                        mask = 0;
                        current = k;
                        changed = true;
                    }
                    mask |= 1 << v;
                }
                next.push(mask);
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a Rows,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>) {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let enc = self.rows.encode(&order);
            let better = match &self.best {
                None => true,
                Some((b, _)) => enc.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some((enc, order));
            }
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in BitIter(cell) {
            if tried.iter().any(|&a| self.rows.twins(a, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.run(child);
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Returns (encoding, order) where `order[i]` is the vertex placed at position `i`.
fn canonical_order(rows: &Rows, initial: Vec<u64>) -> (Vec<u64>, Vec<usize>) {
    if rows.n() == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut search = Search { rows, best: None };
    search.run(initial);
    search.best.expect("search visits at least one leaf")
}

fn order_to_labeling(order: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

/// Canonical relabeling: vertex `v` of `g` becomes `perm[v]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let rows = Rows::of_graph(g);
    let cells = if g.order() == 0 { vec![] } else { vec![full_mask(g.order())] };
    order_to_labeling(&canonical_order(&rows, cells).1)
}

pub fn digraph_canonical_labeling(d: &Digraph) -> Vec<usize> {
    let rows = Rows::of_digraph(d);
    let cells = if d.order() == 0 { vec![] } else { vec![full_mask(d.order())] };
    order_to_labeling(&canonical_order(&rows, cells).1)
}

/// Byte string equal for two graphs iff they are isomorphic: the graph6
/// encoding of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6/digraph6 is ASCII")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(io::write_graph6(&canonical_graph(g)))
}

pub fn digraph_canonical_form(d: &Digraph) -> CanonicalForm {
    CanonicalForm(io::write_digraph6(&d.permuted(&digraph_canonical_labeling(d))))
}

/// Opaque canonical key of `g` with vertex `v` individualized. Two vertices
/// get the same key iff some automorphism maps one to the other.
pub(crate) fn marked_key(g: &Graph, v: usize, within: u64) -> Vec<u64> {
    let rows = Rows::of_graph(g);
    let cells = vec![1u64 << v, within & !(1u64 << v), full_mask(g.order()) & !within];
    let cells: Vec<u64> = cells.into_iter().filter(|&c| c != 0).collect();
    canonical_order(&rows, cells).0
}

/// Coarsest equitable partition of `g` (single-word graphs only).
pub(crate) fn equitable_cells(g: &Graph) -> Vec<u64> {
    let rows = Rows::of_graph(g);
    let mut cells = vec![full_mask(g.order())];
    if g.order() > 0 {
        refine(&rows, &mut cells);
    }
    cells
}

/// Bijection between the vertex sets of two isomorphic (di)graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// `mapping[v]` is the image in the target of source vertex `v`.
    pub mapping: Vec<usize>,
}

impl Isomorphism {
    pub fn is_valid_for(&self, source: &Graph, target: &Graph) -> bool {
        is_bijection(&self.mapping, source.order()) && source.order() == target.order() && source.permuted(&self.mapping) == *target
    }

    pub fn is_valid_for_digraphs(&self, source: &Digraph, target: &Digraph) -> bool {
        is_bijection(&self.mapping, source.order()) && source.order() == target.order() && source.permuted(&self.mapping) == *target
    }
}

fn is_bijection(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

fn compose_through_canonical(p1: &[usize], p2: &[usize]) -> Vec<usize> {
    // v -> p1[v] (canonical position) -> the target vertex at that position
    let mut inv2 = vec![0; p2.len()];
    for (v, &pos) in p2.iter().enumerate() {
        inv2[pos] = v;
    }
    p1.iter().map(|&pos| inv2[pos]).collect()
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Option<Isomorphism> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let p1 = canonical_labeling(g1);
    let p2 = canonical_labeling(g2);
    if g1.permuted(&p1) != g2.permuted(&p2) {
        return None;
    }
    Some(Isomorphism { mapping: compose_through_canonical(&p1, &p2) })
}

pub fn digraph_is_isomorphic(d1: &Digraph, d2: &Digraph) -> Option<Isomorphism> {
    if d1.order() != d2.order() || d1.arc_count() != d2.arc_count() {
        return None;
    }
    let p1 = digraph_canonical_labeling(d1);
    let p2 = digraph_canonical_labeling(d2);
    if d1.permuted(&p1) != d2.permuted(&p2) {
        return None;
    }
    Some(Isomorphism { mapping: compose_through_canonical(&p1, &p2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph};

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn p3_labelings_share_form() {
        let p3 = path_graph(3);
        let forms: Vec<_> = all_perms(3).iter().map(|p| canonical_form(&p3.permuted(p))).collect();
        assert!(forms.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(canonical_form(&complete_graph(3)), canonical_form(&p3));
    }

    #[test]
    fn star_is_p3() {
        let iso = is_isomorphic(&path_graph(3), &star_graph(2)).expect("isomorphic");
        assert!(iso.is_valid_for(&path_graph(3), &star_graph(2)));
        assert!(is_isomorphic(&complete_graph(3), &path_graph(3)).is_none());
    }

    #[test]
    fn symmetric_graphs_terminate() {
        // vertex-transitive, twin-free
        let c8 = cycle_graph(8);
        let rotated = c8.permuted(&[3, 4, 5, 6, 7, 0, 1, 2]);
        assert_eq!(canonical_form(&c8), canonical_form(&rotated));
        let k12 = complete_graph(12);
        assert_eq!(canonical_form(&k12), canonical_form(&k12));
        assert!(canonical_form(&Graph::new(0)).0.len() == 1);
    }

    #[test]
    fn digraph_iso_distinguishes_orientation() {
        use crate::graph::{directed_cycle, directed_path};
        let c = directed_cycle(4);
        let r = c.reversed();
        assert!(digraph_is_isomorphic(&c, &r).is_some());
        let p = directed_path(3);
        let mut q = Digraph::new(3);
        q.add_arc(0, 1);
        q.add_arc(2, 1);
        assert!(digraph_is_isomorphic(&p, &q).is_none());
        let iso = digraph_is_isomorphic(&c, &r).unwrap();
        assert!(iso.is_valid_for_digraphs(&c, &r));
    }
}
