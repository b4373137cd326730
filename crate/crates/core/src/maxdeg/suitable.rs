use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Above this many `(k-subset, element)` pairs verification is sampled.
pub const EXHAUSTIVE_PAIR_LIMIT: u128 = 10_000_000;
/// Number of random `(S, x)` checks in sampled verification.
pub const SAMPLED_CHECKS: usize = 1_000_000;

/// Permutations of `0..ground` such that for every `k`-subset `S` and every
/// `x ∈ S` some permutation places `x` after all of `S \ {x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitableFamily {
    ground: usize,
    k: usize,
    perms: Vec<Vec<usize>>,
    exhaustive: bool,
}

impl SuitableFamily {
    /// Wraps and verifies a family. Fails when the family is not
    /// `k`-suitable (exhaustively or by sampling, depending on size).
    pub fn new(ground: usize, k: usize, perms: Vec<Vec<usize>>, seed: u64) -> Result<Self> {
        check_params(ground, k)?;
        for p in &perms {
            let mut seen = vec![false; ground];
            if p.len() != ground
                || p.iter()
                    .any(|&x| x >= ground || std::mem::replace(&mut seen[x], true))
            {
                return Err(Error::contract(format!(
                    "{p:?} is not a permutation of 0..{ground}"
                )));
            }
        }
        let positions = positions(ground, &perms);
        let exhaustive = exhaustive_feasible(ground, k);
        let failure = if exhaustive {
            first_failure_exhaustive(ground, k, &positions)
        } else {
            first_failure_sampled(ground, k, &positions, seed)
        };
        match failure {
            None => Ok(SuitableFamily {
                ground,
                k,
                perms,
                exhaustive,
            }),
            Some((s, x)) => Err(Error::contract(format!("{x} never comes last among {s:?}"))),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// True when every `(S, x)` pair was checked.
    pub fn exhaustively_verified(&self) -> bool {
        self.exhaustive
    }
}

fn check_params(ground: usize, k: usize) -> Result<()> {
    if k < 2 || k > ground {
        return Err(Error::contract(format!(
            "suitability needs 2 <= k <= n, got k = {k}, n = {ground}"
        )));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

fn exhaustive_feasible(ground: usize, k: usize) -> bool {
    binomial(ground, k).saturating_mul(k as u128) <= EXHAUSTIVE_PAIR_LIMIT
}

fn positions(ground: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|p| {
            let mut pos = vec![0; ground];
            for (i, &x) in p.iter().enumerate() {
                pos[x] = i;
            }
            pos
        })
        .collect()
}

/// Elements of `s` that come last in at least one permutation.
fn leaders(s: &[usize], positions: &[Vec<usize>]) -> Vec<usize> {
    let mut out: Vec<usize> = positions
        .iter()
        .map(|pos| *s.iter().max_by_key(|&&x| pos[x]).expect("non-empty subset"))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn first_failure_exhaustive(
    ground: usize,
    k: usize,
    positions: &[Vec<usize>],
) -> Option<(Vec<usize>, usize)> {
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        let led = leaders(&s, positions);
        if let Some(&x) = s.iter().find(|x| led.binary_search(x).is_err()) {
            return Some((s, x));
        }
        // next combination in lexicographic order
        let mut i = k;
        while i > 0 && s[i - 1] == ground - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        s[i - 1] += 1;
        for j in i..k {
            s[j] = s[j - 1] + 1;
        }
    }
}

fn first_failure_sampled(
    ground: usize,
    k: usize,
    positions: &[Vec<usize>],
    seed: u64,
) -> Option<(Vec<usize>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5u64);
    let all: Vec<usize> = (0..ground).collect();
    for _ in 0..SAMPLED_CHECKS {
        let mut s: Vec<usize> = all.choose_multiple(&mut rng, k).copied().collect();
        s.sort_unstable();
        let x = s[rng.gen_range(0..k)];
        if !positions
            .iter()
            .any(|pos| s.iter().all(|&y| y == x || pos[y] < pos[x]))
        {
            return Some((s, x));
        }
    }
    None
}

/// Starts from `⌈k 2^k ln ln max(n, 16)⌉` random permutations and adds one
/// random permutation at a time until the family verifies, up to four times
/// the initial size. Verification is exhaustive when `C(n, k) k <= 10^7`,
/// otherwise sampled and flagged as such.
pub fn build_suitable_family(n: usize, k: usize, seed: u64) -> Result<SuitableFamily> {
    check_params(n, k)?;
    let initial = initial_size(n, k);
    let cap = 4 * initial;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(cap);
    let random_perm = |rng: &mut ChaCha8Rng| {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    };
    for _ in 0..initial {
        perms.push(random_perm(&mut rng));
    }
    let exhaustive = exhaustive_feasible(n, k);
    let mut last_failure;
    loop {
        let pos = positions(n, &perms);
        last_failure = if exhaustive {
            first_failure_exhaustive(n, k, &pos)
        } else {
            first_failure_sampled(n, k, &pos, seed)
        };
        if last_failure.is_none() {
            return Ok(SuitableFamily {
                ground: n,
                k,
                perms,
                exhaustive,
            });
        }
        if perms.len() >= cap {
            break;
        }
        perms.push(random_perm(&mut rng));
    }
    let (s, x) = last_failure.expect("failing family");
    Err(Error::Exhausted {
        what: "suitable permutation family",
        attempts: perms.len(),
        detail: format!("{x} never comes last among {s:?} (cap {cap})"),
    })
}

pub(crate) fn initial_size(n: usize, k: usize) -> usize {
    let lnln = (n.max(16) as f64).ln().ln();
    ((k as f64) * 2f64.powi(k as i32) * lnln).ceil() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Definition check over every subset of every size `k`, by bitmask.
    fn brute_suitable(n: usize, k: usize, perms: &[Vec<usize>]) -> bool {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .all(|m| {
                let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                s.iter().all(|&x| {
                    perms.iter().any(|p| {
                        let px = p.iter().position(|&z| z == x).unwrap();
                        s.iter()
                            .all(|&y| y == x || p.iter().position(|&z| z == y).unwrap() < px)
                    })
                })
            })
    }

    #[test]
    fn identity_and_reverse_are_two_suitable() {
        let f = SuitableFamily::new(3, 2, vec![vec![0, 1, 2], vec![2, 1, 0]], 0).unwrap();
        assert!(f.exhaustively_verified());
        assert_eq!(f.len(), 2);
        assert!(SuitableFamily::new(2, 2, vec![vec![0, 1], vec![1, 0]], 0).is_ok());
        assert!(SuitableFamily::new(2, 2, vec![vec![0, 1]], 0).is_err());
    }

    #[test]
    fn two_orders_are_not_three_suitable() {
        assert!(SuitableFamily::new(3, 3, vec![vec![0, 1, 2], vec![2, 1, 0]], 0).is_err());
    }

    #[test]
    fn built_family_on_eight() {
        let f = build_suitable_family(8, 3, 42).unwrap();
        assert!(f.exhaustively_verified());
        assert!(f.len() <= 4 * initial_size(8, 3));
        assert!(brute_suitable(8, 3, f.perms()));
    }

    #[test]
    fn parameter_checks() {
        assert!(build_suitable_family(3, 1, 0).is_err());
        assert!(build_suitable_family(3, 4, 0).is_err());
        assert!(SuitableFamily::new(3, 2, vec![vec![0, 0, 1]], 0).is_err());
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=7 {
            for k in 2..=n {
                for count in 1..6 {
                    let perms: Vec<Vec<usize>> = (0..count)
                        .map(|_| {
                            let mut p: Vec<usize> = (0..n).collect();
                            p.shuffle(&mut rng);
                            p
                        })
                        .collect();
                    let pos = positions(n, &perms);
                    assert_eq!(
                        first_failure_exhaustive(n, k, &pos).is_none(),
                        brute_suitable(n, k, &perms),
                        "n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!(binomial(50, 25), 126_410_606_437_752);
    }
}
