//! Isomorph-free generation of graphs by canonical augmentation, and
//! labeled enumeration of small strongly connected digraphs.
//!
//! A child is formed from a parent on `n − 1` vertices by adding vertex
//! `n − 1` with an arbitrary neighborhood. It is kept only if the new vertex
//! lies in the canonical deletion orbit: the orbit, within the last cell of
//! the coarsest equitable partition, whose individualized canonical key is
//! smallest. Isomorphic children of one parent are then merged by canonical
//! form. Every level keeps all graphs (connected or not); connectivity is a
//! final filter.

use std::collections::HashSet;

use crate::canon::{canonical_form, canonical_graph, equitable_cells, marked_key};
use crate::connectivity::scc_masks;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::graph::{BitIter, Digraph, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 10;
pub const MAX_LABELED_DIGRAPH_ORDER: usize = 5;

fn accepts(child: &Graph) -> bool {
    let n = child.order();
    let new = n - 1;
    let cells = equitable_cells(child);
    let last = *cells.last().expect("nonempty graph has a cell");
    if last >> new & 1 == 0 {
        return false;
    }
    if last.count_ones() == 1 {
        return true;
    }
    let twins = |a: usize, b: usize| child.neighbor_mask(a) & !(1u64 << b) == child.neighbor_mask(b) & !(1u64 << a);
    let key_new = marked_key(child, new, last);
    let mut checked: Vec<usize> = vec![new];
    for w in BitIter(last & !(1u64 << new)) {
        // twins of a checked vertex share its orbit
        if checked.iter().any(|&c| twins(c, w)) {
            continue;
        }
        checked.push(w);
        if marked_key(child, w, last) < key_new {
            return false;
        }
    }
    true
}

fn children(parent: &Graph) -> Vec<Graph> {
    let n = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let child = parent.with_vertex(BitIter(mask));
        if !accepts(&child) {
            continue;
        }
        let cf = canonical_form(&child);
        if seen.insert(cf) {
            out.push(canonical_graph(&child));
        }
    }
    out
}

/// One canonical representative of every isomorphism class on `n` vertices.
pub fn enumerate_graphs(n: usize, exec: Execution) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange(format!("enumeration supports n <= {MAX_ENUMERATION_ORDER}")));
    }
    let mut level = vec![Graph::new(0)];
    for _ in 0..n {
        level = exec::map(exec, &level, children).into_iter().flatten().collect();
    }
    Ok(level)
}

/// One canonical representative of every connected isomorphism class.
pub fn enumerate_connected_graphs(n: usize, exec: Execution) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::OutOfRange(format!("connected enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}")));
    }
    Ok(enumerate_graphs(n, exec)?.into_iter().filter(Graph::is_connected).collect())
}

/// Ordered pairs `(i, j)`, `i != j`, in row-major order; bit `b` of an arc
/// mask selects `pairs[b]`.
pub(crate) fn arc_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// Out- and in-neighborhood words of the labeled digraph selected by `mask`.
pub(crate) fn rows_from_mask(slots: &[(usize, usize)], n: usize, mask: u64) -> (Vec<u64>, Vec<u64>) {
    let mut out = vec![0u64; n];
    let mut inn = vec![0u64; n];
    for b in BitIter(mask) {
        let (i, j) = slots[b];
        out[i] |= 1 << j;
        inn[j] |= 1 << i;
    }
    (out, inn)
}

pub(crate) fn strongly_connected_rows(out: &[u64], inn: &[u64], n: usize) -> bool {
    n <= 1 || scc_masks(out, inn, (1u64 << n) - 1).nth(1).is_none()
}

pub(crate) fn digraph_from_rows(out: &[u64]) -> Digraph {
    let n = out.len();
    Digraph::from_arcs(n, (0..n).flat_map(|i| BitIter(out[i]).map(move |j| (i, j))))
}

/// Every labeled strongly connected digraph on `n <= 5` vertices, in the
/// order of their arc bit masks.
pub fn enumerate_strong_digraphs_labeled(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > MAX_LABELED_DIGRAPH_ORDER {
        return Err(Error::OutOfRange(format!("labeled digraph enumeration supports n <= {MAX_LABELED_DIGRAPH_ORDER}")));
    }
    let slots = arc_slots(n);
    let total = 1u64 << slots.len();
    Ok((0..total).filter_map(move |mask| {
        let (out, inn) = rows_from_mask(&slots, n, mask);
        strongly_connected_rows(&out, &inn, n).then(|| digraph_from_rows(&out))
    }))
}

/// Number of labeled candidates (arc subsets) on `n` vertices.
pub fn labeled_digraph_space(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1))
}
