//! The digraph bound: exhaustive over labeled digraphs at `n = 5`, seeded
//! sampling with hill climbing for `6 <= n <= 8`.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::digraph_canonical_form;
use crate::connectivity::essential_cut_mask_digraph;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::families::{build_digraph_extremal, closed_form_digraph_rho, DigraphFamilyParams};
use crate::graph::BitIter;

use super::enumerate::{arc_slots, digraph_from_rows, rows_from_mask, strongly_connected_rows, MAX_LABELED_DIGRAPH_ORDER};
use super::report::{VerificationReport, Verdict};
use super::rows_radius;

pub const MIN_SAMPLED_ORDER: usize = 6;
pub const MAX_SAMPLED_ORDER: usize = 8;
const CHUNK: u64 = 1 << 14;
const STREAM_TRIALS: u64 = 1000;
const CLIMB_PATIENCE: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem2Mode {
    Exhaustive,
    /// `trials` counts candidate evaluations, fresh samples and hill-climbing moves alike.
    Sampled { seed: u64, trials: u64 },
}

/// Partial result of one work item. Merging keeps the larger maximum and
/// every candidate within `tol` of it, so any split gives the same result.
#[derive(Clone, Debug, Default)]
struct Tally {
    space: u64,
    feasible: u64,
    best: Option<f64>,
    /// Out-neighborhood rows of candidates within `tol` of `best`.
    near: Vec<(f64, Vec<u64>)>,
}

impl Tally {
    fn offer(&mut self, rho: f64, out: &[u64], tol: f64) {
        match self.best {
            Some(b) if rho < b - tol => return,
            Some(b) if rho > b => {
                self.best = Some(rho);
                self.near.retain(|(r, _)| *r >= rho - tol);
            }
            None => self.best = Some(rho),
            _ => {}
        }
        if !self.near.iter().any(|(_, rows)| rows == out) {
            self.near.push((rho, out.to_vec()));
        }
    }

    fn merge(mut self, other: Tally, tol: f64) -> Tally {
        self.space += other.space;
        self.feasible += other.feasible;
        for (rho, rows) in other.near {
            self.offer(rho, &rows, tol);
        }
        self
    }
}

/// Exact essential connectivity `k` of a strongly connected digraph given by rows.
fn has_essential_connectivity(out: &[u64], inn: &[u64], n: usize, k: usize) -> bool {
    essential_cut_mask_digraph(out, inn, n, k).is_some_and(|cut| cut.count_ones() as usize == k)
}

fn feasible(out: &[u64], inn: &[u64], n: usize, k: usize) -> bool {
    strongly_connected_rows(out, inn, n) && has_essential_connectivity(out, inn, n, k)
}

fn exhaustive_tally(n: usize, k: usize, tol: f64, exec: Execution) -> Tally {
    let slots = arc_slots(n);
    let total = 1u64 << slots.len();
    let parts = exec::map_chunks(exec, 0..total, CHUNK, |range| {
        let mut t = Tally::default();
        for mask in range {
            t.space += 1;
            let (out, inn) = rows_from_mask(&slots, n, mask);
            if feasible(&out, &inn, n, k) {
                t.feasible += 1;
                t.offer(rows_radius(&out), &out, tol);
            }
        }
        t
    });
    parts.into_iter().fold(Tally::default(), |a, b| a.merge(b, tol))
}

fn inn_from_out(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (u, &row) in out.iter().enumerate() {
        for v in BitIter(row) {
            inn[v] |= 1 << u;
        }
    }
    inn
}

/// A random digraph built around a `k`-set `S` whose removal leaves ordered
/// blocks, at least two of them with two or more vertices; arcs between
/// blocks only go forward. Strong connectivity and the exact essential
/// connectivity are checked by the caller.
fn random_candidate(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let (s, rest) = verts.split_at(k);
    let rest_len = rest.len();
    let first = rng.gen_range(2..=rest_len - 2);
    let mut blocks: Vec<&[usize]> = vec![&rest[..first]];
    let mut tail = &rest[first..];
    // optionally split the tail into more blocks
    while tail.len() > 2 && rng.gen_bool(0.3) {
        let cut = rng.gen_range(1..tail.len() - 1);
        blocks.push(&tail[..cut]);
        tail = &tail[cut..];
    }
    blocks.push(tail);
    let p: f64 = rng.gen_range(0.3..1.0);
    let mut out = vec![0u64; n];
    let arc = |out: &mut Vec<u64>, a: usize, b: usize| out[a] |= 1 << b;
    for block in &blocks {
        if block.len() >= 2 {
            for i in 0..block.len() {
                arc(&mut out, block[i], block[(i + 1) % block.len()]);
            }
        }
        for &a in *block {
            for &b in *block {
                if a != b && rng.gen_bool(p) {
                    arc(&mut out, a, b);
                }
            }
        }
    }
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[i + 1..] {
            for &a in *bi {
                for &b in *bj {
                    if rng.gen_bool(p) {
                        arc(&mut out, a, b);
                    }
                }
            }
        }
    }
    for &a in s {
        for b in 0..n {
            if a != b {
                if rng.gen_bool(p) {
                    arc(&mut out, a, b);
                }
                if !s.contains(&b) && rng.gen_bool(p) {
                    arc(&mut out, b, a);
                }
            }
        }
    }
    out
}

fn sampled_stream(n: usize, k: usize, tol: f64, seed: u64, stream: u64, budget: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut t = Tally::default();
    let evaluate = |out: &[u64], t: &mut Tally| -> Option<f64> {
        t.space += 1;
        let inn = inn_from_out(out);
        if !feasible(out, &inn, n, k) {
            return None;
        }
        t.feasible += 1;
        let rho = rows_radius(out);
        t.offer(rho, out, tol);
        Some(rho)
    };
    while t.space < budget {
        let mut current = random_candidate(n, k, &mut rng);
        let Some(mut rho) = evaluate(&current, &mut t) else { continue };
        let mut stale = 0;
        while stale < CLIMB_PATIENCE && t.space < budget {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let mut next = current.clone();
            next[a] ^= 1 << b;
            match evaluate(&next, &mut t) {
                Some(r) if r > rho + 1e-12 => {
                    current = next;
                    rho = r;
                    stale = 0;
                }
                Some(r) if r >= rho - 1e-12 => {
                    current = next;
                    stale += 1;
                }
                _ => stale += 1,
            }
        }
    }
    t
}

fn sampled_tally(n: usize, k: usize, tol: f64, seed: u64, trials: u64, exec: Execution) -> Tally {
    let streams = trials.div_ceil(STREAM_TRIALS);
    let parts = exec::map_chunks(exec, 0..streams, 1, |r| {
        let stream = r.start;
        let budget = STREAM_TRIALS.min(trials - stream * STREAM_TRIALS);
        sampled_stream(n, k, tol, seed, stream, budget)
    });
    parts.into_iter().fold(Tally::default(), |a, b| a.merge(b, tol))
}

pub fn verify_theorem2(n: usize, k: usize, tol: f64, mode: Theorem2Mode, exec: Execution) -> Result<VerificationReport> {
    let start = Instant::now();
    if k < 1 || n < k + 4 {
        return Err(Error::InvalidParameters(format!("n >= k + 4 with k >= 1 required (n = {n}, k = {k})")));
    }
    match mode {
        Theorem2Mode::Exhaustive if n > MAX_LABELED_DIGRAPH_ORDER => {
            return Err(Error::OutOfRange(format!("exhaustive digraph verification supports n <= {MAX_LABELED_DIGRAPH_ORDER}")))
        }
        Theorem2Mode::Sampled { .. } if !(MIN_SAMPLED_ORDER..=MAX_SAMPLED_ORDER).contains(&n) => {
            return Err(Error::OutOfRange(format!("sampled digraph verification supports {MIN_SAMPLED_ORDER} <= n <= {MAX_SAMPLED_ORDER}")))
        }
        _ => {}
    }
    let ends = [DigraphFamilyParams::new(n, k, 2)?, DigraphFamilyParams::new(n, k, n - k - 2)?];
    let construction_rho = closed_form_digraph_rho(&ends[0])?;
    let constructions: BTreeSet<String> =
        ends.iter().map(|p| build_digraph_extremal(p).map(|d| digraph_canonical_form(&d).as_str().to_string())).collect::<Result<_>>()?;
    let constructions: Vec<String> = constructions.into_iter().collect();

    let (tally, mode_name) = match mode {
        Theorem2Mode::Exhaustive => (exhaustive_tally(n, k, tol, exec), "exhaustive"),
        Theorem2Mode::Sampled { seed, trials } => (sampled_tally(n, k, tol, seed, trials, exec), "sampled"),
    };
    let maximizers: BTreeSet<String> =
        tally.near.iter().map(|(_, rows)| digraph_canonical_form(&digraph_from_rows(rows)).as_str().to_string()).collect();
    let maximizers: Vec<String> = maximizers.into_iter().collect();

    let exceeds = tally.best.is_some_and(|b| b > construction_rho + tol);
    let (verdict, counterexample) = match (mode, tally.best) {
        (_, None) => (Verdict::EmptyClass, None),
        (Theorem2Mode::Sampled { .. }, Some(_)) if !exceeds => (Verdict::InconclusiveSampled, None),
        (_, Some(best)) => {
            let offender = maximizers.iter().find(|m| !constructions.contains(m)).cloned();
            if (best - construction_rho).abs() <= tol && offender.is_none() {
                (Verdict::Confirmed, None)
            } else {
                (Verdict::Counterexample, offender.or_else(|| maximizers.first().cloned()))
            }
        }
    };
    let mut params = vec![("n", n.to_string()), ("k", k.to_string())];
    if let Theorem2Mode::Sampled { seed, trials } = mode {
        params.push(("seed", seed.to_string()));
        params.push(("trials", trials.to_string()));
    }
    Ok(VerificationReport {
        theorem: "t2",
        params,
        mode: mode_name,
        space_size: tally.space,
        feasible_count: tally.feasible,
        max_rho: tally.best,
        maximizers,
        construction_rho: Some(construction_rho),
        constructions,
        verdict,
        counterexample,
        tol,
        elapsed: start.elapsed(),
    })
}
