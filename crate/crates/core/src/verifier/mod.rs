//! Exhaustive and sampled certification of the extremal bounds, plus
//! property suites for the supporting lemmas.

pub mod enumerate;
pub mod lemmas;
pub mod report;
pub mod theorem1;
pub mod theorem2;

pub use enumerate::{enumerate_connected_graphs, enumerate_graphs, enumerate_strong_digraphs_labeled, labeled_digraph_space};
pub use lemmas::{check_lemma1, check_lemma3, rotate_edges, Lemma1Check, Lemma3Check, PerronRelation, SuiteReport};
pub use report::{format_number, VerificationReport, Verdict};
pub use theorem1::{classify_corpus, sweep_theorem1, verify_theorem1, verify_theorem1_in, ClassifiedGraph, Corpus};
pub use theorem2::{verify_theorem2, Theorem2Mode};

use crate::connectivity::scc_masks;
use crate::graph::{BitIter, Digraph};
use crate::quotient::char_poly_leverrier;

/// Spectral radius of any digraph on at most 64 vertices given by its
/// out-neighborhood rows: the largest Perron root over its strong
/// components, each taken as the largest real root of the exact integer
/// characteristic polynomial.
pub(crate) fn rows_radius(out: &[u64]) -> f64 {
    let n = out.len();
    let mut inn = vec![0u64; n];
    for (u, &row) in out.iter().enumerate() {
        for v in BitIter(row) {
            inn[v] |= 1 << u;
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    scc_masks(out, &inn, all)
        .filter(|c| c.count_ones() >= 2)
        .map(|c| {
            let verts: Vec<usize> = BitIter(c).collect();
            let m: Vec<Vec<i64>> = verts.iter().map(|&a| verts.iter().map(|&b| (out[a] >> b & 1) as i64).collect()).collect();
            char_poly_leverrier(&m).largest_real_root().unwrap_or(0.0)
        })
        .fold(0.0, f64::max)
}

/// Spectral radius of an arbitrary digraph (0 when acyclic).
pub fn digraph_radius(d: &Digraph) -> f64 {
    rows_radius(&(0..d.order()).map(|u| d.out_mask(u)).collect::<Vec<_>>())
}
