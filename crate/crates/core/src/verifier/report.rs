//! Verification reports and their two serializations.

use std::fmt::Write as _;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Confirmed,
    Counterexample,
    InconclusiveSampled,
    /// No candidate meets the constraints; not a failure.
    EmptyClass,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Counterexample => "counterexample",
            Verdict::InconclusiveSampled => "inconclusive-sampled",
            Verdict::EmptyClass => "empty-class",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// `t1` or `t2`.
    pub theorem: &'static str,
    /// Parameter tuple in display order, e.g. `[("n", "6"), ("delta", "2")]`.
    pub params: Vec<(&'static str, String)>,
    pub mode: &'static str,
    pub space_size: u64,
    pub feasible_count: u64,
    pub max_rho: Option<f64>,
    /// Canonical graph6/digraph6 forms of every candidate within `tol` of `max_rho`.
    pub maximizers: Vec<String>,
    pub construction_rho: Option<f64>,
    /// Canonical forms of the constructions the maximizers are compared to.
    pub constructions: Vec<String>,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    pub tol: f64,
    /// Wall time; never serialized so that reports stay reproducible.
    pub elapsed: Duration,
}

/// Fixed 10 significant digits.
pub fn format_number(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0.000000000".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    let digits = s.chars().filter(char::is_ascii_digit).count();
    let leading_zeros = s.trim_start_matches('-').chars().take_while(|&c| c == '0' || c == '.').filter(|&c| c == '0').count();
    if digits - leading_zeros > 10 && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

fn opt_number(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_else(|| "none".into())
}

impl VerificationReport {
    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }

    /// Line-oriented text form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} mode={}", self.theorem, self.params_string(), self.mode);
        let _ = writeln!(s, "  space_size       {}", self.space_size);
        let _ = writeln!(s, "  feasible_count   {}", self.feasible_count);
        let _ = writeln!(s, "  max_rho          {}", opt_number(self.max_rho));
        let _ = writeln!(s, "  construction_rho {}", opt_number(self.construction_rho));
        let _ = writeln!(s, "  tol              {:e}", self.tol);
        for c in &self.constructions {
            let _ = writeln!(s, "  construction     {c}");
        }
        for m in &self.maximizers {
            let _ = writeln!(s, "  maximizer        {m}");
        }
        if let Some(c) = &self.counterexample {
            let _ = writeln!(s, "  counterexample   {c}");
        }
        let _ = writeln!(s, "  verdict          {}", self.verdict.as_str());
        s
    }

    /// Machine-readable `key=value` block terminated by an empty line.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "theorem={}", self.theorem);
        for (k, v) in &self.params {
            let _ = writeln!(s, "{k}={v}");
        }
        let _ = writeln!(s, "mode={}", self.mode);
        let _ = writeln!(s, "space_size={}", self.space_size);
        let _ = writeln!(s, "feasible_count={}", self.feasible_count);
        let _ = writeln!(s, "max_rho={}", opt_number(self.max_rho));
        let _ = writeln!(s, "construction_rho={}", opt_number(self.construction_rho));
        let _ = writeln!(s, "tol={:e}", self.tol);
        let _ = writeln!(s, "constructions={}", self.constructions.join(","));
        let _ = writeln!(s, "maximizers={}", self.maximizers.join(","));
        let _ = writeln!(s, "counterexample={}", self.counterexample.as_deref().unwrap_or(""));
        let _ = writeln!(s, "verdict={}", self.verdict.as_str());
        s.push('\n');
        s
    }
}
