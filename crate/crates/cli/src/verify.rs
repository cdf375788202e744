use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use specx_core::verifier::{sweep_theorem1, verify_theorem1, verify_theorem2, Theorem2Mode, VerificationReport, Verdict};

use crate::{Failure, Format, Mode, RunConfig, Status};

/// Parses `key=value` tokens, where a value is `a` or `a..b`.
fn parse_params(tokens: &[String], allowed: &[&str]) -> Result<BTreeMap<String, RangeInclusive<usize>>, Failure> {
    let mut out = BTreeMap::new();
    for t in tokens {
        let (k, v) = t.split_once('=').ok_or_else(|| Failure::Usage(format!("expected key=value, got {t:?}")))?;
        if !allowed.contains(&k) {
            return Err(Failure::Usage(format!("unknown parameter {k:?} (expected one of {})", allowed.join(", "))));
        }
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad value in {t:?}")));
        let range = match v.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => num(v)?..=num(v)?,
        };
        if range.is_empty() {
            return Err(Failure::Usage(format!("empty range in {t:?}")));
        }
        if out.insert(k.to_string(), range).is_some() {
            return Err(Failure::Usage(format!("parameter {k:?} given twice")));
        }
    }
    Ok(out)
}

fn single(params: &BTreeMap<String, RangeInclusive<usize>>, key: &str) -> Result<usize, Failure> {
    let r = params.get(key).ok_or_else(|| Failure::Usage(format!("missing parameter {key}=")))?;
    if r.start() != r.end() {
        return Err(Failure::Usage(format!("{key} must be a single value here")));
    }
    Ok(*r.start())
}

fn emit(cfg: &RunConfig, reports: &[VerificationReport]) -> Status {
    for r in reports {
        match cfg.format {
            Format::Text => print!("{}", r.to_text()),
            Format::Kv => print!("{}", r.to_kv()),
        }
        eprintln!("# {} {}: {:.3}s", r.theorem, r.params_string(), r.elapsed.as_secs_f64());
    }
    if reports.iter().any(|r| r.verdict == Verdict::Counterexample) {
        Status::Counterexample
    } else {
        Status::Ok
    }
}

fn t2_mode(cfg: &RunConfig, mode: Mode, trials: u64) -> Theorem2Mode {
    match mode {
        Mode::Exhaustive => Theorem2Mode::Exhaustive,
        Mode::Sampled => Theorem2Mode::Sampled { seed: cfg.seed, trials },
    }
}

pub fn verify(cfg: &RunConfig, theorem: &str, tokens: &[String], mode: Mode, trials: u64) -> Result<Status, Failure> {
    let report = match theorem {
        "t1" => {
            let p = parse_params(tokens, &["n", "delta", "kappa"])?;
            if mode == Mode::Sampled {
                return Err(Failure::Usage("t1 supports only --mode exhaustive".into()));
            }
            verify_theorem1(single(&p, "n")?, single(&p, "delta")?, single(&p, "kappa")?, cfg.tol, cfg.execution())?
        }
        "t2" => {
            let p = parse_params(tokens, &["n", "k"])?;
            verify_theorem2(single(&p, "n")?, single(&p, "k")?, cfg.tol, t2_mode(cfg, mode, trials), cfg.execution())?
        }
        other => return Err(Failure::Usage(format!("unknown theorem {other:?} (expected t1 or t2)"))),
    };
    Ok(emit(cfg, &[report]))
}

pub fn sweep(cfg: &RunConfig, theorem: &str, tokens: &[String], mode: Mode, trials: u64) -> Result<Status, Failure> {
    let start = Instant::now();
    let reports = match theorem {
        "t1" => {
            let p = parse_params(tokens, &["n", "delta", "kappa"])?;
            if mode == Mode::Sampled {
                return Err(Failure::Usage("t1 supports only --mode exhaustive".into()));
            }
            let orders = p.get("n").cloned().ok_or_else(|| Failure::Usage("missing parameter n=".into()))?;
            let keep = |key: &str, v: &str| p.get(key).is_none_or(|r| v.parse().is_ok_and(|x| r.contains(&x)));
            sweep_theorem1(orders, cfg.tol, cfg.execution())?
                .into_iter()
                .filter(|r| r.params.iter().all(|(k, v)| keep(k, v)))
                .collect::<Vec<_>>()
        }
        "t2" => {
            let p = parse_params(tokens, &["n", "k"])?;
            let orders = p.get("n").cloned().ok_or_else(|| Failure::Usage("missing parameter n=".into()))?;
            let mut out = Vec::new();
            for n in orders {
                let ks = p.get("k").cloned().unwrap_or(1..=n.saturating_sub(4));
                for k in ks.filter(|&k| k >= 1 && n >= k + 4) {
                    out.push(verify_theorem2(n, k, cfg.tol, t2_mode(cfg, mode, trials), cfg.execution())?);
                }
            }
            out
        }
        other => return Err(Failure::Usage(format!("unknown theorem {other:?} (expected t1 or t2)"))),
    };
    let status = emit(cfg, &reports);
    eprintln!("# sweep: {} reports in {:.3}s", reports.len(), start.elapsed().as_secs_f64());
    Ok(status)
}
