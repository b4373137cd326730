//! Seeded random graphs and the degeneracy-method experiment.
//!
//! All randomness comes from ChaCha8 (`rand_chacha` 0.3). Trial `t` of spec
//! line `s` draws its seed from `ChaCha8Rng::seed_from_u64(seed)` switched
//! to stream `(s << 32) | t`, so trials are independent of each other and
//! of evaluation order.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::{ceil_ln, decompose_degeneracy};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, girth, Girth, Graph};

/// Name and version of the generator behind every random choice here.
pub const GENERATOR: &str = "chacha8 (rand_chacha 0.3)";

/// Each pair becomes an edge independently with probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::contract(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// A uniformly random graph with exactly `m` edges.
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::contract(format!(
            "{m} edges do not fit in {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for idx in sample(&mut rng, total, m) {
        let (u, v) = unrank_pair(idx, n);
        g.insert_edge(u, v);
    }
    Ok(g)
}

/// The `idx`-th pair `(u, v)`, `u < v`, in row-major order.
fn unrank_pair(mut idx: usize, n: usize) -> (usize, usize) {
    let mut u = 0;
    while idx >= n - 1 - u {
        idx -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + idx)
}

/// One line of the experiment spec: `trials` graphs from `G(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentSpec {
    pub n: usize,
    pub m: usize,
    pub trials: usize,
}

/// Parses lines `<n> <m> <trials>`; `#` starts a comment.
pub fn parse_experiment_spec(text: &str) -> Result<Vec<ExperimentSpec>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::parse(idx + 1, format!("`{s}` is not a number")))
            })
            .collect::<Result<_>>()?;
        let [n, m, trials] = nums[..] else {
            return Err(Error::parse(idx + 1, "expected `<n> <m> <trials>`"));
        };
        out.push(ExperimentSpec { n, m, trials });
    }
    Ok(out)
}

/// Result of one trial.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub spec_index: usize,
    pub n: usize,
    pub m: usize,
    pub trial: usize,
    pub seed: u64,
    pub k: usize,
    pub d_av: f64,
    /// `None` when the decomposition failed.
    pub factors: Option<usize>,
    /// `10 k ⌈ln n⌉` with `k` raised to 1 for edgeless graphs.
    pub bound: usize,
    /// `factors / (d_av ln n)`; `None` when undefined.
    pub ratio: Option<f64>,
    pub verified: bool,
    pub note: String,
}

impl ExperimentRow {
    pub fn within_bound(&self) -> bool {
        self.factors.is_some_and(|f| f <= self.bound)
    }
}

/// Median and maximum ratio for one spec line.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub n: usize,
    pub m: usize,
    pub trials: usize,
    pub verified: usize,
    pub median_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    pub max_factors: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentTable {
    pub rows: Vec<ExperimentRow>,
    pub aggregates: Vec<Aggregate>,
}

pub const CSV_HEADER: &str = "row,n,m,trial,seed,k,d_av,factors,bound,ratio,status,note";

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "na".to_string(), |v| format!("{v:.4}"))
}

impl ExperimentTable {
    /// Comma-separated output: header, one row per trial, then one `agg`
    /// row per spec line (`trial` holds the trial count, `factors` the
    /// maximum, `ratio` the median, `note` the maximum ratio).
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(CSV_HEADER);
        s.push('\n');
        for (i, r) in self.rows.iter().enumerate() {
            let status = if r.verified && r.within_bound() {
                "ok"
            } else {
                "fail"
            };
            let _ = writeln!(
                s,
                "{i},{},{},{},{},{},{:.4},{},{},{},{status},{}",
                r.n,
                r.m,
                r.trial,
                r.seed,
                r.k,
                r.d_av,
                r.factors.map_or_else(|| "na".into(), |f| f.to_string()),
                r.bound,
                fmt_opt(r.ratio),
                r.note
            );
        }
        for a in &self.aggregates {
            let _ = writeln!(
                s,
                "agg,{},{},{},,,{:.4},{},,{},{}/{},max_ratio={}",
                a.n,
                a.m,
                a.trials,
                2.0 * a.m as f64 / a.n.max(1) as f64,
                a.max_factors,
                fmt_opt(a.median_ratio),
                a.verified,
                a.trials,
                fmt_opt(a.max_ratio)
            );
        }
        s
    }

    pub fn all_verified(&self) -> bool {
        self.rows.iter().all(|r| r.verified && r.within_bound())
    }
}

/// The seed of trial `trial` of spec line `spec_index`.
pub fn trial_seed(seed: u64, spec_index: usize, trial: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((spec_index as u64) << 32) | trial as u64);
    rng.next_u64()
}

pub const BELOW_HYPOTHESIS: &str = "below m >= n/2 hypothesis";

/// For every trial: draw `G(n, m)`, measure the degeneracy, run the
/// degeneracy method and record the outcome. Failures stay in their row.
pub fn run_experiment(specs: &[ExperimentSpec], seed: u64) -> Result<ExperimentTable> {
    let mut rows = Vec::new();
    let mut aggregates = Vec::new();
    for (si, spec) in specs.iter().enumerate() {
        let ExperimentSpec { n, m, trials } = *spec;
        let mut spec_rows = Vec::with_capacity(trials);
        for trial in 0..trials {
            let tseed = trial_seed(seed, si, trial);
            let g = gen_gnm(n, m, tseed)?;
            let (k, _) = degeneracy_ordering(&g);
            let d_av = if n == 0 {
                0.0
            } else {
                2.0 * m as f64 / n as f64
            };
            let bound = 10 * k.max(1) * ceil_ln(n);
            let mut notes = Vec::new();
            if 2 * m < n {
                notes.push(BELOW_HYPOTHESIS.to_string());
            }
            let (factors, verified) = match decompose_degeneracy(&g, tseed) {
                Ok(d) => (Some(d.len()), d.is_verified()),
                Err(e) => {
                    notes.push(format!("failed: {e}").replace(',', ";"));
                    (None, false)
                }
            };
            let denom = d_av * (n as f64).ln();
            let ratio = factors.filter(|_| denom > 0.0).map(|f| f as f64 / denom);
            spec_rows.push(ExperimentRow {
                spec_index: si,
                n,
                m,
                trial,
                seed: tseed,
                k,
                d_av,
                factors,
                bound,
                ratio,
                verified,
                note: notes.join("; "),
            });
        }
        let mut ratios: Vec<f64> = spec_rows.iter().filter_map(|r| r.ratio).collect();
        ratios.sort_by(f64::total_cmp);
        let median_ratio = match ratios.len() {
            0 => None,
            l if l % 2 == 1 => Some(ratios[l / 2]),
            l => Some((ratios[l / 2 - 1] + ratios[l / 2]) / 2.0),
        };
        aggregates.push(Aggregate {
            n,
            m,
            trials,
            verified: spec_rows
                .iter()
                .filter(|r| r.verified && r.within_bound())
                .count(),
            median_ratio,
            max_ratio: ratios.last().copied(),
            max_factors: spec_rows
                .iter()
                .filter_map(|r| r.factors)
                .max()
                .unwrap_or(0),
        });
        rows.extend(spec_rows);
    }
    Ok(ExperimentTable { rows, aggregates })
}

/// `⌈n^(1/⌊g/2⌋)⌉`, computed exactly as the least `x` with `x^⌊g/2⌋ >= n`.
pub fn girth_degeneracy_bound(n: usize, g: usize) -> usize {
    assert!(g >= 2, "the girth parameter must be at least 2");
    let e = (g / 2) as u32;
    let mut x = (n as f64).powf(1.0 / e as f64).floor().max(1.0) as u128;
    while x > 1 && (x - 1).checked_pow(e).is_some_and(|p| p >= n as u128) {
        x -= 1;
    }
    while x.checked_pow(e).is_some_and(|p| p < n as u128) {
        x += 1;
    }
    x as usize
}

/// Degeneracy against `⌈n^(1/⌊g/2⌋)⌉` for every `g >= 2` with girth `> g + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthCheck {
    pub girth: Girth,
    pub degeneracy: usize,
    /// `(g, bound)` pairs that apply to this graph.
    pub checks: Vec<(usize, usize)>,
}

impl GirthCheck {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|&(_, b)| self.degeneracy <= b)
    }
}

/// Applies the girth bound for every admissible `g`. Forests are checked for
/// `g` up to `2⌈log2 n⌉ + 2`, past which every bound is 1 or 2.
pub fn girth_check(graph: &Graph) -> GirthCheck {
    let n = graph.n();
    let gi = girth(graph);
    let (k, _) = degeneracy_ordering(graph);
    let top = match gi {
        Girth::Finite(c) => c.saturating_sub(2),
        Girth::Infinite => 2 * (usize::BITS - n.leading_zeros()) as usize + 2,
    };
    let checks = (2..=top)
        .map(|g| (g, girth_degeneracy_bound(n, g)))
        .collect();
    GirthCheck {
        girth: gi,
        degeneracy: k,
        checks,
    }
}
