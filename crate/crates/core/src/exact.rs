//! Ground truth on small graphs: exhaustive threshold dimension by set cover
//! over all threshold supergraphs, plus the clique-chromatic lower bound and
//! the `n - max(omega, alpha)` upper bound.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, exact_small_invariants, maximal_cliques, ExactLimits, Graph};
use crate::threshold::{Tag, ThresholdGraph};

/// Largest `n` for the exhaustive routines in this module.
pub const EXACT_DIMENSION_LIMIT: usize = 8;

fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

/// Edge set as a bitmask over pairs, `n <= 8`.
pub(crate) fn edge_mask(g: &Graph) -> u32 {
    g.edges().fold(0u32, |m, (u, v)| m | 1 << pair_index(u, v))
}

fn full_pairs(n: usize) -> u32 {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs == 32 {
        u32::MAX
    } else {
        (1u32 << pairs) - 1
    }
}

fn unpack(n: usize, packed: u64) -> Vec<(usize, Tag)> {
    (0..n)
        .map(|p| {
            let nibble = packed >> (4 * p) & 0xf;
            let tag = if nibble & 8 != 0 {
                Tag::Dominating
            } else {
                Tag::Isolated
            };
            ((nibble & 7) as usize, tag)
        })
        .collect()
}

/// All labelled threshold graphs on `n <= 8` vertices as `(edge mask,
/// creation sequence)`, sorted by mask. Creation sequences are replayed level
/// by level; two partial sequences that added the same vertices and produced
/// the same edges have identical extensions, so only one is kept.
pub(crate) fn all_threshold_edge_masks(n: usize) -> Vec<(u32, Vec<(usize, Tag)>)> {
    assert!(n <= EXACT_DIMENSION_LIMIT);
    cached_masks(n)
        .iter()
        .map(|&(mask, packed)| (mask, unpack(n, packed)))
        .collect()
}

fn cached_masks(n: usize) -> &'static [(u32, u64)] {
    static CACHE: [OnceLock<Vec<(u32, u64)>>; EXACT_DIMENSION_LIMIT + 1] =
        [const { OnceLock::new() }; EXACT_DIMENSION_LIMIT + 1];
    CACHE[n].get_or_init(|| build_masks(n))
}

fn build_masks(n: usize) -> Vec<(u32, u64)> {
    // (added vertices, edge mask) -> packed creation prefix
    let mut level: HashMap<(u8, u32), u64> = HashMap::from([((0u8, 0u32), 0u64)]);
    for depth in 0..n {
        let mut next: HashMap<(u8, u32), u64> = HashMap::with_capacity(level.len() * 4);
        for (&(added, mask), &packed) in &level {
            for v in (0..n).filter(|&v| added >> v & 1 == 0) {
                for tag in [Tag::Isolated, Tag::Dominating] {
                    let mut m = mask;
                    if tag == Tag::Dominating {
                        for u in (0..n).filter(|&u| added >> u & 1 == 1) {
                            m |= 1 << pair_index(u, v);
                        }
                    }
                    let tag_bit = u64::from(tag == Tag::Dominating) << 3;
                    let entry = packed | ((v as u64) | tag_bit) << (4 * depth);
                    next.entry((added | 1 << v, m)).or_insert(entry);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<(u32, u64)> = level.into_iter().map(|((_, m), p)| (m, p)).collect();
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0));
    out
}

fn limit_check(what: &'static str, n: usize) -> Result<()> {
    if n > EXACT_DIMENSION_LIMIT {
        Err(Error::LimitExceeded {
            what,
            n,
            limit: EXACT_DIMENSION_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Every labelled threshold graph on `V(g)` whose edge set contains `E(g)`.
pub fn enumerate_threshold_supergraphs(g: &Graph) -> Result<Vec<ThresholdGraph>> {
    limit_check("threshold supergraph enumeration", g.n())?;
    let n = g.n();
    let e = edge_mask(g);
    Ok(cached_masks(n)
        .iter()
        .filter(|&&(m, _)| m & e == e)
        .map(|&(_, packed)| {
            ThresholdGraph::from_creation(n, unpack(n, packed)).expect("valid sequence")
        })
        .collect())
}

/// Minimum threshold intersection of a small graph, with one optimal set of
/// factors.
#[derive(Debug, Clone)]
pub struct ExactDimension {
    pub dimension: usize,
    pub factors: Vec<ThresholdGraph>,
}

/// Threshold dimension of `g` (`n <= 8`) by minimum set cover: the universe
/// is the non-edges of `g`, and each threshold supergraph covers the
/// non-edges it omits. Threshold graphs, including `K_n`, have dimension 1.
pub fn exact_dimension(g: &Graph) -> Result<ExactDimension> {
    limit_check("exact threshold dimension", g.n())?;
    let n = g.n();
    let e = edge_mask(g);
    let universe = full_pairs(n) & !e;

    let mut candidates: Vec<(u32, u64)> = cached_masks(n)
        .iter()
        .filter(|&&(m, _)| m & e == e)
        .map(|&(m, packed)| (universe & !m, packed))
        .collect();
    // Dominance: keep only inclusion-maximal omitted sets.
    candidates.sort_unstable_by_key(|&(cover, _)| (std::cmp::Reverse(cover.count_ones()), cover));
    let mut kept: Vec<(u32, u64)> = Vec::new();
    for (cover, packed) in candidates {
        if !kept.iter().any(|&(k, _)| cover & !k == 0) {
            kept.push((cover, packed));
        }
    }

    let chosen = if universe == 0 {
        vec![kept[0].1]
    } else {
        let sets: Vec<u32> = kept.iter().map(|&(c, _)| c).collect();
        let picks = min_set_cover(universe, &sets);
        picks.into_iter().map(|i| kept[i].1).collect()
    };
    let factors: Vec<ThresholdGraph> = chosen
        .into_iter()
        .map(|p| ThresholdGraph::from_creation(n, unpack(n, p)).expect("valid sequence"))
        .collect();
    Ok(ExactDimension {
        dimension: factors.len(),
        factors,
    })
}

/// Minimum cover of `universe` by `sets`, by iterative deepening with
/// branching on the element covered by the fewest sets.
fn min_set_cover(universe: u32, sets: &[u32]) -> Vec<usize> {
    let elements: Vec<usize> = (0..32).filter(|&b| universe >> b & 1 == 1).collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); 32];
    for &b in &elements {
        containing[b] = (0..sets.len()).filter(|&i| sets[i] >> b & 1 == 1).collect();
        assert!(
            !containing[b].is_empty(),
            "non-edge cannot be omitted by any supergraph"
        );
    }
    let max_size = sets
        .iter()
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut picks = Vec::new();
    for budget in 1..=elements.len() {
        if search(universe, 0, budget, sets, &containing, max_size, &mut picks) {
            return picks;
        }
    }
    unreachable!("each element alone is coverable")
}

fn search(
    universe: u32,
    covered: u32,
    budget: usize,
    sets: &[u32],
    containing: &[Vec<usize>],
    max_size: u32,
    picks: &mut Vec<usize>,
) -> bool {
    let left = universe & !covered;
    if left == 0 {
        return true;
    }
    let remaining = budget - picks.len();
    if remaining == 0 || (left.count_ones()).div_ceil(max_size) as usize > remaining {
        return false;
    }
    let pivot = (0..32)
        .filter(|&b| left >> b & 1 == 1)
        .min_by_key(|&b| containing[b].len())
        .expect("uncovered element");
    for &i in &containing[pivot] {
        picks.push(i);
        if search(
            universe,
            covered | sets[i],
            budget,
            sets,
            containing,
            max_size,
            picks,
        ) {
            return true;
        }
        picks.pop();
    }
    false
}

/// `min { chi(G - C) : C a clique }`. The minimum is attained at a maximal
/// clique because deleting more vertices cannot raise the chromatic number.
pub fn lower_bound_clique_chromatic(g: &Graph, limits: &ExactLimits) -> Result<usize> {
    if g.n() > limits.chromatic {
        return Err(Error::LimitExceeded {
            what: "clique-chromatic lower bound",
            n: g.n(),
            limit: limits.chromatic,
        });
    }
    let mut best = usize::MAX;
    for clique in maximal_cliques(g, limits)? {
        let rest: Vec<usize> = (0..g.n()).filter(|v| !clique.contains(v)).collect();
        best = best.min(chromatic_number(&g.induced(&rest), limits)?);
    }
    Ok(best)
}

/// `n - max(omega, alpha)`, floored at 1.
pub fn upper_bound_ramsey_style(g: &Graph, limits: &ExactLimits) -> Result<usize> {
    let inv = exact_small_invariants(
        g,
        &ExactLimits {
            chromatic: 0,
            ..*limits
        },
    )?;
    Ok(g.n().saturating_sub(inv.omega.max(inv.alpha)).max(1))
}

/// Minimum number of threshold graphs whose union is `g`: the threshold
/// dimension of the complement.
pub fn threshold_cover_number(g: &Graph) -> Result<usize> {
    Ok(exact_dimension(&g.complement())?.dimension)
}
