//! Vertex, edge and essential connectivity with replayable certificates;
//! strongly connected components and condensation orderings for digraphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Digraph, Graph, MAX_WORD_ORDER};

/// A vertex cut together with the decomposition of the remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub cut: Vec<usize>,
    /// Components of `G - S` (or strong components of `D - S`), each sorted.
    pub pieces: Vec<Vec<usize>>,
    /// `pieces[i].len() >= 2`.
    pub nontrivial: Vec<bool>,
}

impl CutCertificate {
    fn new(cut: Vec<usize>, mut pieces: Vec<Vec<usize>>) -> Self {
        for p in pieces.iter_mut() {
            p.sort_unstable();
        }
        pieces.sort();
        let nontrivial = pieces.iter().map(|p| p.len() >= 2).collect();
        CutCertificate { cut, pieces, nontrivial }
    }

    pub fn nontrivial_count(&self) -> usize {
        self.nontrivial.iter().filter(|&&b| b).count()
    }

    pub fn is_essential(&self) -> bool {
        self.nontrivial_count() >= 2
    }

    /// Checks that deleting `cut` from `g` yields exactly `pieces`.
    pub fn replays_on(&self, g: &Graph) -> bool {
        let alive: Vec<usize> = (0..g.order()).filter(|v| !self.cut.contains(v)).collect();
        let sub = g.induced(&alive);
        let got: Vec<Vec<usize>> = components(&sub).into_iter().map(|c| c.into_iter().map(|i| alive[i]).collect()).collect();
        CutCertificate::new(self.cut.clone(), got) == *self
    }

    /// Checks that deleting `cut` from `d` yields exactly `pieces` as strong components.
    pub fn replays_on_digraph(&self, d: &Digraph) -> bool {
        let alive: Vec<usize> = (0..d.order()).filter(|v| !self.cut.contains(v)).collect();
        let sub = d.induced(&alive);
        let got: Vec<Vec<usize>> =
            strongly_connected_components(&sub).into_iter().map(|c| c.into_iter().map(|i| alive[i]).collect()).collect();
        CutCertificate::new(self.cut.clone(), got) == *self
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, s: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// `S=(0,1); pieces=(2,3)|(4,5,6)`
impl fmt::Display for CutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S=")?;
        write_set(f, &self.cut)?;
        write!(f, "; pieces=")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write_set(f, p)?;
        }
        Ok(())
    }
}

impl FromStr for CutCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse { offset: 0, message: format!("certificate: {m}") };
        let set = |t: &str| -> Result<Vec<usize>> {
            let inner = t.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| bad("expected (..)"))?;
            if inner.trim().is_empty() {
                return Ok(Vec::new());
            }
            inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad("bad vertex"))).collect()
        };
        let (cut, pieces) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let cut = set(cut.trim().strip_prefix("S=").ok_or_else(|| bad("missing S="))?)?;
        let pieces = pieces.trim().strip_prefix("pieces=").ok_or_else(|| bad("missing pieces="))?;
        let pieces = if pieces.is_empty() { Vec::new() } else { pieces.split('|').map(set).collect::<Result<_>>()? };
        Ok(CutCertificate::new(cut, pieces))
    }
}

/// Outcome of an essential-connectivity search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Essential {
    /// Minimum essential cut; its size is the essential connectivity.
    Cut(CutCertificate),
    Absent(AbsentReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbsentReason {
    /// Fewer than four vertices: two non-trivial pieces cannot fit.
    TooSmall,
    /// Every vertex subset leaves at most one non-trivial piece.
    NoEssentialCut,
}

impl Essential {
    pub fn value(&self) -> Option<usize> {
        match self {
            Essential::Cut(c) => Some(c.cut.len()),
            Essential::Absent(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&CutCertificate> {
        match self {
            Essential::Cut(c) => Some(c),
            Essential::Absent(_) => None,
        }
    }
}

impl fmt::Display for AbsentReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbsentReason::TooSmall => write!(f, "fewer than four vertices"),
            AbsentReason::NoEssentialCut => write!(f, "no vertex set leaves two non-trivial pieces"),
        }
    }
}

/// Connected components, each sorted, ordered by least label.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for v in g.neighbors(u) {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Components of the subgraph induced on `alive` (single-word graphs).
#[inline]
pub(crate) fn component_masks(nbr: &[u64], alive: u64) -> impl Iterator<Item = u64> + '_ {
    let mut rest = alive;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= nbr[v];
            }
            next &= rest & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        Some(comp)
    })
}

/// Strong components of the subdigraph induced on `alive` (single-word digraphs).
#[inline]
pub(crate) fn scc_masks<'a>(out: &'a [u64], inn: &'a [u64], alive: u64) -> impl Iterator<Item = u64> + 'a {
    let reach = move |rows: &[u64], start: u64, within: u64| {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    };
    let mut rest = alive;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let start = rest & rest.wrapping_neg();
        let comp = reach(out, start, rest) & reach(inn, start, rest);
        rest &= !comp;
        Some(comp)
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_vec(m: u64) -> Vec<usize> {
    BitIter(m).collect()
}

/// Unit-capacity max-flow network (Edmonds–Karp).
struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

const INF: i32 = i32::MAX / 4;

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, u: usize, v: usize, c: i32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Max flow, stopping early once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        while flow < limit {
            let mut prev = vec![usize::MAX; self.head.len()];
            let mut q = VecDeque::from([s]);
            prev[s] = usize::MAX - 1;
            while let Some(u) = q.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && prev[v] == usize::MAX {
                        prev[v] = e;
                        q.push_back(v);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let e = prev[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Vertex connectivity and, for non-complete graphs, a minimum separating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexConnectivity {
    pub kappa: usize,
    /// `None` marks a complete graph, where κ = n − 1 by convention.
    pub certificate: Option<CutCertificate>,
}

/// Minimum `s`–`t` vertex separator for non-adjacent `s`, `t`.
fn min_vertex_separator(g: &Graph, s: usize, t: usize, limit: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, INF);
        net.add(2 * v + 1, 2 * u, INF);
    }
    let flow = net.max_flow(2 * s + 1, 2 * t, limit as i32) as usize;
    if flow >= limit {
        return None;
    }
    let seen = net.reachable(2 * s + 1);
    Some((0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect())
}

pub fn vertex_connectivity(g: &Graph) -> Result<VertexConnectivity> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |b| b.len());
            if let Some(sep) = min_vertex_separator(g, s, t, limit) {
                best = Some(sep);
            }
        }
    }
    Ok(match best {
        None => VertexConnectivity { kappa: n.saturating_sub(1), certificate: None },
        Some(cut) => {
            let alive: Vec<usize> = (0..n).filter(|v| !cut.contains(v)).collect();
            let pieces = components(&g.induced(&alive)).into_iter().map(|c| c.into_iter().map(|i| alive[i]).collect()).collect();
            VertexConnectivity { kappa: cut.len(), certificate: Some(CutCertificate::new(cut, pieces)) }
        }
    })
}

/// Edge connectivity via max flows from vertex 0 to every other vertex.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut best = g.min_degree()?;
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, v) in g.edges() {
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best as i32) as usize);
    }
    Ok(best)
}

/// Iterates `k`-subsets of `0..n` as bit masks in lexicographic order of
/// their sorted element lists.
pub(crate) fn subsets_lex(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

/// Smallest-size, then lexicographically first, vertex set whose removal
/// leaves at least two pieces of size >= 2. Needs `n <= 64`.
pub fn essential_connectivity(g: &Graph) -> Result<Essential> {
    let n = g.order();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n > MAX_WORD_ORDER {
        return Err(Error::OutOfRange(format!("essential connectivity search supports n <= {MAX_WORD_ORDER}")));
    }
    if n < 4 {
        return Ok(Essential::Absent(AbsentReason::TooSmall));
    }
    let nbr: Vec<u64> = (0..n).map(|u| g.neighbor_mask(u)).collect();
    Ok(match essential_cut_mask(&nbr, n) {
        Some(cut) => {
            let alive = full_mask(n) & !cut;
            let pieces = component_masks(&nbr, alive).map(mask_to_vec).collect();
            Essential::Cut(CutCertificate::new(mask_to_vec(cut), pieces))
        }
        None => Essential::Absent(AbsentReason::NoEssentialCut),
    })
}

/// Mask-level essential cut search shared with the verifier's hot loop.
pub(crate) fn essential_cut_mask(nbr: &[u64], n: usize) -> Option<u64> {
    essential_cut_mask_upto(nbr, n, n.saturating_sub(4))
}

pub(crate) fn essential_cut_mask_upto(nbr: &[u64], n: usize, max_size: usize) -> Option<u64> {
    let all = full_mask(n);
    (1..=max_size.min(n.saturating_sub(4))).find_map(|size| {
        subsets_lex(n, size).find(|&cut| component_masks(nbr, all & !cut).filter(|c| c.count_ones() >= 2).nth(1).is_some())
    })
}

/// Strong components in Tarjan emission order (reverse topological order of
/// the condensation: sink components first). Each component is sorted.
pub fn strongly_connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.order();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next_index = 0;
    let succ: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).collect()).collect();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // explicit DFS stack of (vertex, next successor position)
        let mut call = vec![(root, 0usize)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.order() <= 1 || strongly_connected_components(d).len() == 1
}

/// Strong components of `D - S` listed in a topological order of the
/// condensation: every arc between two listed components goes from the
/// lower index to the higher one, so `sccs[0]` is a source component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccOrdering {
    pub removed: Vec<usize>,
    pub sccs: Vec<Vec<usize>>,
}

impl SccOrdering {
    /// Checks the ordering contract against `d`.
    pub fn respects(&self, d: &Digraph) -> bool {
        let mut owner = vec![usize::MAX; d.order()];
        for (i, c) in self.sccs.iter().enumerate() {
            for &v in c {
                owner[v] = i;
            }
        }
        d.arcs().all(|(u, v)| owner[u] == usize::MAX || owner[v] == usize::MAX || owner[u] <= owner[v])
    }
}

pub fn condensation_ordering(d: &Digraph, removed: &[usize]) -> Result<SccOrdering> {
    let n = d.order();
    if removed.iter().any(|&v| v >= n) {
        return Err(Error::InvalidParameters("removed vertex out of range".into()));
    }
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    if alive.is_empty() {
        return Err(Error::InvalidParameters("cannot remove every vertex".into()));
    }
    let sub = d.induced(&alive);
    let mut sccs: Vec<Vec<usize>> =
        strongly_connected_components(&sub).into_iter().map(|c| c.into_iter().map(|i| alive[i]).collect()).collect();
    sccs.reverse();
    let mut removed = removed.to_vec();
    removed.sort_unstable();
    removed.dedup();
    Ok(SccOrdering { removed, sccs })
}

fn digraph_rows(d: &Digraph) -> (Vec<u64>, Vec<u64>) {
    let n = d.order();
    let out: Vec<u64> = (0..n).map(|u| d.out_mask(u)).collect();
    let mut inn = vec![0u64; n];
    for (u, &row) in out.iter().enumerate() {
        for v in BitIter(row) {
            inn[v] |= 1 << u;
        }
    }
    (out, inn)
}

pub(crate) fn essential_cut_mask_digraph(out: &[u64], inn: &[u64], n: usize, max_size: usize) -> Option<u64> {
    let all = full_mask(n);
    (1..=max_size.min(n.saturating_sub(4))).find_map(|size| {
        subsets_lex(n, size).find(|&cut| scc_masks(out, inn, all & !cut).filter(|c| c.count_ones() >= 2).nth(1).is_some())
    })
}

/// Smallest vertex set whose removal leaves at least two strong components
/// with two or more vertices. Needs a strongly connected input and `n <= 64`.
pub fn essential_connectivity_digraph(d: &Digraph) -> Result<Essential> {
    let n = d.order();
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    if n > MAX_WORD_ORDER {
        return Err(Error::OutOfRange(format!("essential connectivity search supports n <= {MAX_WORD_ORDER}")));
    }
    if n < 4 {
        return Ok(Essential::Absent(AbsentReason::TooSmall));
    }
    let (out, inn) = digraph_rows(d);
    Ok(match essential_cut_mask_digraph(&out, &inn, n, n) {
        Some(cut) => {
            let pieces = scc_masks(&out, &inn, full_mask(n) & !cut).map(mask_to_vec).collect();
            Essential::Cut(CutCertificate::new(mask_to_vec(cut), pieces))
        }
        None => Essential::Absent(AbsentReason::NoEssentialCut),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn component_examples() {
        let g = disjoint_union(&complete_graph(2), &complete_graph(3));
        let sizes: Vec<usize> = components(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(components(&cycle_graph(5)).len(), 1);
        assert_eq!(components(&Graph::new(4)), vec![vec![0], vec![1], vec![2], vec![3]]);
        let p = disjoint_union(&path_graph(3), &path_graph(3));
        assert_eq!(components(&p), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn vertex_and_edge_connectivity_examples() {
        assert_eq!(vertex_connectivity(&cycle_graph(5)).unwrap().kappa, 2);
        let k5 = vertex_connectivity(&complete_graph(5)).unwrap();
        assert_eq!((k5.kappa, k5.certificate), (4, None));
        assert_eq!(vertex_connectivity(&Graph::new(2)), Err(Error::Disconnected));
        let g = join(&complete_graph(2), &disjoint_union(&complete_graph(4), &complete_graph(2)));
        let vc = vertex_connectivity(&g).unwrap();
        assert_eq!(vc.kappa, 2);
        assert_eq!(vc.certificate.unwrap().cut, vec![0, 1]);

        assert_eq!(edge_connectivity(&path_graph(5)).unwrap(), 1);
        assert_eq!(edge_connectivity(&cycle_graph(6)).unwrap(), 2);
        assert_eq!(edge_connectivity(&complete_graph(4)).unwrap(), 3);
    }

    #[test]
    fn essential_examples() {
        let p6 = essential_connectivity(&path_graph(6)).unwrap();
        let cert = p6.certificate().unwrap();
        assert_eq!(p6.value(), Some(1));
        assert!(cert.is_essential() && cert.replays_on(&path_graph(6)));
        assert_eq!(cert.to_string(), "S=(2); pieces=(0,1)|(3,4,5)");

        let c6 = essential_connectivity(&cycle_graph(6)).unwrap();
        assert_eq!(c6.value(), Some(2));
        assert_eq!(essential_connectivity(&complete_graph(4)).unwrap(), Essential::Absent(AbsentReason::NoEssentialCut));
        assert_eq!(essential_connectivity(&path_graph(3)).unwrap(), Essential::Absent(AbsentReason::TooSmall));

        let g = join(&complete_graph(2), &disjoint_union(&complete_graph(4), &complete_graph(2)));
        assert_eq!(essential_connectivity(&g).unwrap().value(), Some(2));
    }

    #[test]
    fn certificate_text_round_trip() {
        let c: CutCertificate = "S=(0,1); pieces=(2,3)|(4,5,6)".parse().unwrap();
        assert_eq!(c.cut, vec![0, 1]);
        assert_eq!(c.nontrivial, vec![true, true]);
        assert_eq!(c.to_string(), "S=(0,1); pieces=(2,3)|(4,5,6)");
        assert!("S=0; pieces=".parse::<CutCertificate>().is_err());
    }

    #[test]
    fn scc_examples() {
        assert_eq!(strongly_connected_components(&directed_cycle(5)).len(), 1);
        assert_eq!(strongly_connected_components(&directed_path(4)).len(), 4);
        assert!(is_strongly_connected(&complete_digraph(4)));
        // acyclic tournament 0 -> 1 -> 2, 0 -> 2
        let t = Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]);
        let ord = condensation_ordering(&t, &[]).unwrap();
        assert_eq!(ord.sccs, vec![vec![0], vec![1], vec![2]]);
        assert!(ord.respects(&t));
        assert_eq!(condensation_ordering(&directed_cycle(4), &[]).unwrap().sccs.len(), 1);
        assert!(condensation_ordering(&t, &[0, 1, 2]).is_err());
    }

    #[test]
    fn digraph_essential_examples() {
        assert_eq!(
            essential_connectivity_digraph(&directed_cycle(5)).unwrap(),
            Essential::Absent(AbsentReason::NoEssentialCut)
        );
        assert_eq!(essential_connectivity_digraph(&complete_digraph(6)).unwrap().value(), None);
        assert_eq!(essential_connectivity_digraph(&directed_path(4)), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn subsets_in_lex_order() {
        let all: Vec<u64> = subsets_lex(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(subsets_lex(5, 0).count(), 1);
        assert_eq!(subsets_lex(3, 4).count(), 0);
    }
}
