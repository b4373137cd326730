//! Exact independence, clique, vertex-cover and chromatic numbers for small
//! graphs. Everything here works on `u64` vertex masks.

use super::Graph;
use crate::error::{Error, Result};

/// Size limits for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    /// Largest `n` for alpha, omega and beta.
    pub clique: usize,
    /// Largest `n` for the chromatic number.
    pub chromatic: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            clique: 24,
            chromatic: 16,
        }
    }
}

/// Exact small-graph invariants. `chi` is `None` when `n` exceeds the
/// chromatic limit but not the clique limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallInvariants {
    pub alpha: usize,
    pub omega: usize,
    pub beta: usize,
    pub chi: Option<usize>,
}

pub fn exact_small_invariants(g: &Graph, limits: &ExactLimits) -> Result<SmallInvariants> {
    let alpha = max_independent_set(g, limits)?.len();
    let omega = max_clique(g, limits)?.len();
    let chi = if g.n() <= limits.chromatic {
        Some(chromatic_number(g, limits)?)
    } else {
        None
    };
    Ok(SmallInvariants {
        alpha,
        omega,
        beta: g.n() - alpha,
        chi,
    })
}

fn check(what: &'static str, g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if g.n() > limit {
        Err(Error::LimitExceeded {
            what,
            n: g.n(),
            limit,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "mask routines need n <= 64");
    (0..g.n())
        .map(|v| g.row(v).first().copied().unwrap_or(0))
        .collect()
}

fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A maximum clique, by branch and bound with a greedy-coloring bound.
pub fn max_clique(g: &Graph, limits: &ExactLimits) -> Result<Vec<usize>> {
    check("maximum clique", g, limits.clique)?;
    let adj = masks(g);
    let mut best = 0u64;
    expand(&adj, 0, full(g.n()), &mut best);
    Ok(mask_to_vec(best))
}

/// A maximum independent set (a maximum clique of the complement).
pub fn max_independent_set(g: &Graph, limits: &ExactLimits) -> Result<Vec<usize>> {
    check("maximum independent set", g, limits.clique)?;
    max_clique(&g.complement(), limits)
}

/// A minimum vertex cover: the complement of a maximum independent set.
pub fn minimum_vertex_cover(g: &Graph, limits: &ExactLimits) -> Result<Vec<usize>> {
    let independent = max_independent_set(g, limits)?;
    Ok((0..g.n()).filter(|v| !independent.contains(v)).collect())
}

fn expand(adj: &[u64], current: u64, candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    // Greedy color the candidates; a vertex with color c can extend the
    // clique by at most c more vertices.
    let mut order = Vec::new();
    let mut uncolored = candidates;
    let mut color = 0u32;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v);
            avail &= !adj[v];
            uncolored &= !(1u64 << v);
            order.push((v, color));
        }
    }
    let mut candidates = candidates;
    for &(v, c) in order.iter().rev() {
        if current.count_ones() + c <= best.count_ones() {
            return;
        }
        expand(adj, current | (1 << v), candidates & adj[v], best);
        candidates &= !(1u64 << v);
    }
}

/// All maximal cliques (Bron-Kerbosch with pivoting), as ascending vertex lists.
pub fn maximal_cliques(g: &Graph, limits: &ExactLimits) -> Result<Vec<Vec<usize>>> {
    check("maximal clique enumeration", g, limits.clique)?;
    let adj = masks(g);
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, full(g.n()), 0, &mut out);
    Ok(out.into_iter().map(mask_to_vec).collect())
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot_pool = p | x;
    let pivot = mask_to_vec(pivot_pool)
        .into_iter()
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("non-empty pool");
    let mut branch = p & !adj[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        bron_kerbosch(adj, r | (1 << v), p & adj[v], x & adj[v], out);
        p &= !(1u64 << v);
        x |= 1 << v;
    }
}

/// Chromatic number by iterative deepening over `k` with backtracking.
pub fn chromatic_number(g: &Graph, limits: &ExactLimits) -> Result<usize> {
    check("chromatic number", g, limits.chromatic)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    let lower = max_clique(g, limits)?.len().max(1);
    for k in lower..=n {
        let mut class_masks = vec![0u64; k];
        if color_with(&adj, &order, 0, &mut class_masks, 0) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn color_with(adj: &[u64], order: &[usize], idx: usize, classes: &mut [u64], used: usize) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // Opening at most one new class at a time breaks color symmetry.
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            if color_with(adj, order, idx + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !(1u64 << v);
        }
    }
    false
}
