//! Integer linear threshold functions `Σ a_i x_i <= b` and their
//! verification against a graph's clique indicator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::ThresholdGraph;

/// Largest arity for exhaustive verification.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Random vectors drawn in sampled verification.
pub const DEFAULT_SAMPLES: usize = 100_000;

/// `x` satisfies the gate iff `Σ weights[i] * x[i] <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtfWitness {
    pub weights: Vec<BigInt>,
    pub bound: BigInt,
}

impl LtfWitness {
    pub fn new(weights: Vec<BigInt>, bound: BigInt) -> Self {
        LtfWitness { weights, bound }
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn accepts(&self, x: &[bool]) -> bool {
        assert_eq!(x.len(), self.arity(), "input arity mismatch");
        let sum: BigInt = self
            .weights
            .iter()
            .zip(x)
            .filter(|(_, &b)| b)
            .map(|(a, _)| a)
            .sum();
        sum <= self.bound
    }

    /// Accepts the vector with ones exactly at `support`.
    pub fn accepts_support(&self, support: &[usize]) -> bool {
        let sum: BigInt = support.iter().map(|&i| &self.weights[i]).sum();
        sum <= self.bound
    }

    /// Weights and bound as `i128` when every partial sum is guaranteed to fit.
    pub(crate) fn as_i128(&self) -> Option<(Vec<i128>, i128)> {
        let limit = i128::MAX / (self.arity() as i128 + 2);
        let fits = |v: &BigInt| v.to_i128().filter(|x| x.abs() <= limit);
        let weights: Option<Vec<i128>> = self.weights.iter().map(fits).collect();
        Some((weights?, fits(&self.bound)?))
    }

    /// Checks that the accepted 0-1 vectors are exactly the clique vectors
    /// of `g`.
    pub fn verify_against(
        &self,
        g: &Graph,
        mode: &VerifyMode,
    ) -> std::result::Result<Checked, Mismatch> {
        verify_gates(g, std::slice::from_ref(self), mode)
    }
}

impl fmt::Display for LtfWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.weights.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{a}*x{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= {}", self.bound)
    }
}

/// How to compare gates with a clique indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyMode {
    /// All `2^n` vectors; requires `n <= EXHAUSTIVE_LIMIT`.
    Exhaustive,
    /// The zero vector, all singletons and pairs, then `samples` uniformly
    /// random vectors from `ChaCha8Rng::seed_from_u64(seed)`.
    Sampled { seed: u64, samples: usize },
}

impl VerifyMode {
    pub fn sampled(seed: u64) -> Self {
        VerifyMode::Sampled {
            seed,
            samples: DEFAULT_SAMPLES,
        }
    }

    /// Exhaustive when `n <= limit`, otherwise sampled.
    pub fn auto(n: usize, limit: usize, seed: u64) -> Self {
        if n <= limit.min(EXHAUSTIVE_LIMIT) {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::sampled(seed)
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Sampled { .. } => "sampled",
        }
    }
}

/// Successful verification summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checked {
    pub vectors: u64,
    pub exhaustive: bool,
}

/// A vector on which the conjunction of gates disagrees with the clique
/// indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub support: Vec<usize>,
    pub is_clique: bool,
    pub accepted: bool,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "support {:?}: clique = {}, circuit = {}",
            self.support, self.is_clique, self.accepted
        )
    }
}

/// Checks that `AND_gates [Σ a_i x_i <= b]` equals the clique indicator of
/// `g`. Every gate must have arity `g.n()`.
pub fn verify_gates(
    g: &Graph,
    gates: &[LtfWitness],
    mode: &VerifyMode,
) -> std::result::Result<Checked, Mismatch> {
    let n = g.n();
    assert!(
        gates.iter().all(|t| t.arity() == n),
        "gate arity differs from graph order"
    );
    match mode {
        VerifyMode::Exhaustive => {
            assert!(
                n <= EXHAUSTIVE_LIMIT,
                "exhaustive verification needs n <= {EXHAUSTIVE_LIMIT}"
            );
            exhaustive(g, gates)
        }
        VerifyMode::Sampled { seed, samples } => sampled(g, gates, *seed, *samples),
    }
}

/// `table[m]` is true iff the vertex mask `m` is a clique.
pub(crate) fn clique_table(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.row(v).first().copied().unwrap_or(0))
        .collect();
    let size = 1usize << n;
    let mut table = vec![true; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        table[m] = table[rest] && (rest as u64) & !adj[low] == 0;
    }
    table
}

fn support_of(m: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| m >> i & 1 == 1).collect()
}

fn exhaustive(g: &Graph, gates: &[LtfWitness]) -> std::result::Result<Checked, Mismatch> {
    let n = g.n();
    let size = 1usize << n;
    let cliques = clique_table(g);
    let mut value = vec![true; size];
    for gate in gates {
        match gate.as_i128() {
            Some((w, b)) => {
                let mut sum = vec![0i128; size];
                for m in 1..size {
                    let low = m.trailing_zeros() as usize;
                    sum[m] = sum[m & (m - 1)] + w[low];
                    if sum[m] > b {
                        value[m] = false;
                    }
                }
                if 0 > b {
                    value[0] = false;
                }
            }
            None => {
                for (m, v) in value.iter_mut().enumerate() {
                    if *v && !gate.accepts_support(&support_of(m, n)) {
                        *v = false;
                    }
                }
            }
        }
    }
    for m in 0..size {
        if value[m] != cliques[m] {
            return Err(Mismatch {
                support: support_of(m, n),
                is_clique: cliques[m],
                accepted: value[m],
            });
        }
    }
    Ok(Checked {
        vectors: size as u64,
        exhaustive: true,
    })
}

fn sampled(
    g: &Graph,
    gates: &[LtfWitness],
    seed: u64,
    samples: usize,
) -> std::result::Result<Checked, Mismatch> {
    let n = g.n();
    let mut checked = 0u64;
    let mut check = |support: &[usize]| -> std::result::Result<(), Mismatch> {
        checked += 1;
        let is_clique = g.is_clique(support);
        let accepted = gates.iter().all(|t| t.accepts_support(support));
        if is_clique == accepted {
            Ok(())
        } else {
            Err(Mismatch {
                support: support.to_vec(),
                is_clique,
                accepted,
            })
        }
    };
    check(&[])?;
    for i in 0..n {
        check(&[i])?;
    }
    for i in 0..n {
        for j in i + 1..n {
            check(&[i, j])?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut support = Vec::with_capacity(n);
    for _ in 0..samples {
        support.clear();
        support.extend((0..n).filter(|_| rng.gen::<bool>()));
        check(&support)?;
    }
    Ok(Checked {
        vectors: checked,
        exhaustive: false,
    })
}

/// Integer weights for a threshold graph by a positional scheme in base
/// `N = n + 1`. With independent side `u_1..u_k` (nested neighborhoods) and
/// `s(v)` the number of `u`'s a clique vertex `v` sees:
///
/// * `a(v) = N^(k - s(v))` for clique vertices,
/// * `a(u_j) = M - (N^(k - j + 1) - 1)`,
/// * `b = M = 2 N^(k+1) - 1`.
///
/// Two independent vertices overshoot `M`; one `u_j` fits exactly with clique
/// vertices of rank at least `j`. The result is verified exhaustively for
/// `n <= 20` and by sampling above that.
pub fn extract_ltf(t: &ThresholdGraph) -> Result<LtfWitness> {
    let n = t.n();
    let k = t.independent().len();
    let base = BigInt::from(n + 1);
    let pow = |e: usize| -> BigInt { num_traits::pow(base.clone(), e) };
    let big_m = BigInt::from(2) * pow(k + 1) - BigInt::one();
    let ranks = t.independent_ranks();
    let mut weights = vec![BigInt::zero(); n];
    for &v in t.clique() {
        weights[v] = pow(k - ranks[v]);
    }
    for (idx, &u) in t.independent().iter().enumerate() {
        let j = idx + 1;
        weights[u] = &big_m - (pow(k - j + 1) - BigInt::one());
    }
    let witness = LtfWitness::new(weights, big_m);
    let mode = VerifyMode::auto(n, EXHAUSTIVE_LIMIT, 0);
    witness.verify_against(t.graph(), &mode).map_err(|m| {
        Error::Internal(format!(
            "LTF weights do not realize the threshold graph: {m}"
        ))
    })?;
    Ok(witness)
}
