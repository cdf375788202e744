//! Integer polynomials and real-root location by bisection.
//!
//! Coefficient lists are ordered from the leading term down, so
//! `λ² − 6λ + 3` is `[1, -6, 3]`.

use std::fmt;

use crate::error::{Error, Result};

/// Polynomial with exact integer coefficients, highest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<i128>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len().saturating_sub(1));
        coeffs.drain(..lead);
        IntPoly(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_int(&self, x: i128) -> i128 {
        self.0.iter().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&c| c as f64).collect()
    }

    /// Largest real root, located without a user-supplied bracket.
    pub fn largest_real_root(&self) -> Option<f64> {
        largest_real_root(&self.to_f64())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 && !(d == 0) {
                continue;
            }
            let p = d - i;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (p, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match p {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let d = coeffs.len() - 1;
    coeffs[..d].iter().enumerate().map(|(i, &c)| c * (d - i) as f64).collect()
}

/// Bisection for a root of `coeffs` inside `[lo, hi]`, which must bracket a
/// sign change. Runs until the bracket stops shrinking in double precision,
/// so the answer is within one ulp-scale step of a true sign change (always
/// well under `1e-12` for moderate magnitudes).
pub fn bisect(coeffs: &[f64], lo: f64, hi: f64) -> Result<f64> {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let fa = eval(coeffs, a);
    let fb = eval(coeffs, b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let neg_at_a = fa < 0.0;
    for _ in 0..2000 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = eval(coeffs, m);
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == neg_at_a {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Root of the polynomial on `[lo, hi]` by bisection. The caller is
/// responsible for choosing a bracket that isolates the largest real root.
pub fn real_poly_largest_root(coeffs: &[f64], lo: f64, hi: f64) -> Result<f64> {
    bisect(coeffs, lo, hi)
}

/// Cauchy bound: every root has modulus below this.
fn root_bound(coeffs: &[f64]) -> f64 {
    let lead = coeffs[0].abs();
    1.0 + coeffs[1..].iter().map(|c| c.abs() / lead).fold(0.0, f64::max)
}

/// All real roots in ascending order. Critical points (real roots of the
/// derivative, found recursively) split the line into monotone pieces with
/// at most one root each; roots of even multiplicity are caught by checking
/// the polynomial at the critical points.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let start = coeffs.iter().position(|&c| c != 0.0).unwrap_or(coeffs.len());
    let coeffs = &coeffs[start..];
    match coeffs.len() {
        0 | 1 => return Vec::new(),
        2 => return vec![-coeffs[1] / coeffs[0]],
        _ => {}
    }
    let bound = root_bound(coeffs);
    let crit = real_roots(&derivative(coeffs));
    let mut points = vec![-bound];
    points.extend(crit.into_iter().filter(|c| c.abs() < bound));
    points.push(bound);
    let scale = coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max) * bound.powi(coeffs.len() as i32 - 1);
    let tiny = 1e-12 * scale.max(1.0);
    let mut roots: Vec<f64> = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(coeffs, a), eval(coeffs, b));
        if fa.signum() != fb.signum() && fa != 0.0 && fb != 0.0 {
            if let Ok(r) = bisect(coeffs, a, b) {
                roots.push(r);
            }
        }
    }
    for &c in points[1..points.len() - 1].iter() {
        if eval(coeffs, c).abs() <= tiny && !roots.iter().any(|r| (r - c).abs() < 1e-9) {
            roots.push(c);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    roots
}

pub fn largest_real_root(coeffs: &[f64]) -> Option<f64> {
    real_roots(coeffs).last().copied()
}
