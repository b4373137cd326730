use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ceil_ln, Decomposition, Method};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, Graph, ProperColoring, VertexOrdering};
use crate::threshold::tau_ordered;

/// Retry policy for [`build_desirable_family_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyConfig {
    /// Full resamples of the `r` colorings before extending the family.
    pub max_resamples: usize,
    /// The family may grow to `max_growth * r` colorings.
    pub max_growth: usize,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        FamilyConfig {
            max_resamples: 64,
            max_growth: 3,
        }
    }
}

/// Colorings `f_1..f_m` over a `10k` palette such that every non-adjacent
/// pair `(v_i, v_j)`, `i < j` in `order`, has some `f` where `f(v_j)` differs
/// from `f(v_t)` for every neighbor `v_t` of `v_i` with `t > j`.
#[derive(Debug, Clone)]
pub struct DesirableColoringFamily {
    colorings: Vec<ProperColoring>,
    order: VertexOrdering,
    k: usize,
    attempts: usize,
}

impl DesirableColoringFamily {
    pub fn colorings(&self) -> &[ProperColoring] {
        &self.colorings
    }

    pub fn order(&self) -> &VertexOrdering {
        &self.order
    }

    /// The degeneracy parameter the palette was sized for.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn palette(&self) -> usize {
        10 * self.k
    }

    /// Total number of colorings drawn, including discarded ones.
    pub fn attempts(&self) -> usize {
        self.attempts
    }

    /// The first non-adjacent pair no coloring handles, or `None`.
    pub fn first_uncovered(&self, g: &Graph) -> Option<(usize, usize)> {
        first_uncovered(g, &self.order, &self.colorings)
    }
}

fn first_uncovered(
    g: &Graph,
    order: &VertexOrdering,
    colorings: &[ProperColoring],
) -> Option<(usize, usize)> {
    let n = g.n();
    let seq = order.order();
    let palette = colorings
        .iter()
        .map(|c| c.palette_size())
        .max()
        .unwrap_or(0);
    let mut covered = vec![false; n];
    let mut count = vec![0usize; palette];
    for i in 0..n {
        let vi = seq[i];
        covered.iter_mut().for_each(|c| *c = false);
        for f in colorings {
            // Walk j downwards; `count` holds colors of neighbors of v_i
            // placed after v_j.
            count.iter_mut().for_each(|c| *c = 0);
            for j in (i + 1..n).rev() {
                let vj = seq[j];
                if count[f.color(vj)] == 0 {
                    covered[j] = true;
                }
                if g.has_edge(vi, vj) {
                    count[f.color(vj)] += 1;
                }
            }
        }
        if let Some(j) = (i + 1..n).find(|&j| !covered[j] && !g.has_edge(vi, seq[j])) {
            return Some((vi, seq[j]));
        }
    }
    None
}

/// Colors `v_n` down to `v_1`, each uniformly from the palette colors not
/// used by its already-colored forward neighbors.
fn backward_coloring(
    g: &Graph,
    order: &VertexOrdering,
    palette: usize,
    rng: &mut ChaCha8Rng,
) -> ProperColoring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut blocked = vec![false; palette];
    let mut free = Vec::with_capacity(palette);
    for &v in order.order().iter().rev() {
        let fwd: Vec<usize> = order.forward_neighbors(g, v).map(|w| colors[w]).collect();
        for &c in &fwd {
            blocked[c] = true;
        }
        free.clear();
        free.extend((0..palette).filter(|&c| !blocked[c]));
        colors[v] = free[rng.gen_range(0..free.len())];
        for &c in &fwd {
            blocked[c] = false;
        }
    }
    ProperColoring::new(g, colors, palette).expect("backward coloring is proper")
}

/// [`build_desirable_family_with`] under the default retry policy.
pub fn build_desirable_family(
    g: &Graph,
    k: usize,
    order: &VertexOrdering,
    seed: u64,
) -> Result<DesirableColoringFamily> {
    build_desirable_family_with(g, k, order, seed, &FamilyConfig::default())
}

/// Draws `r = ⌈ln n⌉` backward random colorings over `10k` colors and checks
/// desirability explicitly. A failing family is redrawn with the next seed
/// up to `max_resamples` times; after that the last family is extended one
/// coloring at a time up to `max_growth * r`.
pub fn build_desirable_family_with(
    g: &Graph,
    k: usize,
    order: &VertexOrdering,
    seed: u64,
    config: &FamilyConfig,
) -> Result<DesirableColoringFamily> {
    let n = g.n();
    if n < 2 {
        return Err(Error::contract(
            "desirable colorings need at least two vertices",
        ));
    }
    if k == 0 {
        return Err(Error::contract("the degeneracy parameter must be positive"));
    }
    if order.len() != n {
        return Err(Error::contract("ordering and graph differ in size"));
    }
    let fwd = order.max_forward_degree(g);
    if fwd > k {
        return Err(Error::contract(format!(
            "ordering is not {k}-degenerate (a vertex has {fwd} forward neighbors)"
        )));
    }
    let r = ceil_ln(n);
    let palette = 10 * k;
    let mut attempts = 0;
    let mut colorings = Vec::new();
    for resample in 0..config.max_resamples.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(resample as u64));
        colorings = (0..r)
            .map(|_| backward_coloring(g, order, palette, &mut rng))
            .collect();
        attempts += r;
        if first_uncovered(g, order, &colorings).is_none() {
            return Ok(DesirableColoringFamily {
                colorings,
                order: order.clone(),
                k,
                attempts,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(config.max_resamples as u64));
    while colorings.len() < config.max_growth * r {
        colorings.push(backward_coloring(g, order, palette, &mut rng));
        attempts += 1;
        if first_uncovered(g, order, &colorings).is_none() {
            return Ok(DesirableColoringFamily {
                colorings,
                order: order.clone(),
                k,
                attempts,
            });
        }
    }
    let (u, v) = first_uncovered(g, order, &colorings).expect("family still failing");
    Err(Error::Exhausted {
        what: "desirable coloring family",
        attempts,
        detail: format!(
            "{} colorings over {palette} colors leave pair ({u}, {v}) uncovered",
            colorings.len()
        ),
    })
}

/// One factor `tau(g, C, sigma|_C)` per non-empty color class `C` of each
/// coloring in a desirable family built on a degeneracy ordering. An
/// edgeless graph uses `k = 1`.
pub fn decompose_degeneracy(g: &Graph, seed: u64) -> Result<Decomposition> {
    let n = g.n();
    if n < 2 {
        return Err(Error::contract(
            "the degeneracy method needs at least two vertices",
        ));
    }
    let (k, order) = degeneracy_ordering(g);
    let k = k.max(1);
    let family = build_desirable_family(g, k, &order, seed)?;
    let mut factors = Vec::new();
    for f in family.colorings() {
        for class in f.classes().into_iter().filter(|c| !c.is_empty()) {
            factors.push(tau_ordered(g, &order.restrict(&class))?);
        }
    }
    let bound = 10 * k * ceil_ln(n).max(family.colorings().len());
    Decomposition::verified(g, factors, Method::Degeneracy, bound)
}
