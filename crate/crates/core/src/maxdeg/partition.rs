use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of `0..n` into numbered parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    part_of: Vec<usize>,
    parts: usize,
}

impl VertexPartition {
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn num_parts(&self) -> usize {
        self.parts
    }

    /// Members of every part, ascending.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.parts];
        for (v, &p) in self.part_of.iter().enumerate() {
            out[p].push(v);
        }
        out
    }

    /// `max over (v, i) of |N(v) ∩ V_i|`.
    pub fn max_load(&self, g: &Graph) -> usize {
        loads(g, &self.part_of, self.parts)
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }
}

fn loads(g: &Graph, part_of: &[usize], parts: usize) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut row = vec![0; parts];
            for w in g.neighbors(v) {
                row[part_of[w]] += 1;
            }
            row
        })
        .collect()
}

/// Partition with `|N(v) ∩ V_i| <= d` for every vertex `v` and part `i`.
///
/// Starts from a uniform random assignment. While some `(v, i)` is over
/// `d`, a random neighbor of `v` in `V_i` moves to the part that keeps its
/// neighbors' loads lowest (ties: fewer members, then smaller index).
/// Fails after `64 (n + 1)` moves, reporting the worst violation.
pub fn bounded_partition(g: &Graph, d: usize, parts: usize, seed: u64) -> Result<VertexPartition> {
    if parts == 0 || d == 0 {
        return Err(Error::contract(
            "bounded partition needs parts >= 1 and d >= 1",
        ));
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut part_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
    let mut load = loads(g, &part_of, parts);
    let mut size = vec![0usize; parts];
    for &p in &part_of {
        size[p] += 1;
    }
    let cap = 64 * (n + 1);
    let mut moves = 0;
    loop {
        let violation = (0..n).find_map(|v| load[v].iter().position(|&c| c > d).map(|i| (v, i)));
        let Some((v, i)) = violation else {
            return Ok(VertexPartition { part_of, parts });
        };
        if moves == cap {
            break;
        }
        moves += 1;
        let inside: Vec<usize> = g.neighbors(v).filter(|&w| part_of[w] == i).collect();
        let w = inside[rng.gen_range(0..inside.len())];
        let target = (0..parts).filter(|&j| j != i).min_by_key(|&j| {
            (
                g.neighbors(w).map(|x| load[x][j]).max().unwrap_or(0),
                size[j],
                j,
            )
        });
        let Some(j) = target else { break };
        for x in g.neighbors(w) {
            load[x][i] -= 1;
            load[x][j] += 1;
        }
        size[i] -= 1;
        size[j] += 1;
        part_of[w] = j;
    }
    let (v, i, c) = (0..n)
        .flat_map(|v| load[v].iter().enumerate().map(move |(i, &c)| (v, i, c)))
        .max_by_key(|&(_, _, c)| c)
        .expect("a violation exists");
    Err(Error::Exhausted {
        what: "bounded partition",
        attempts: cap,
        detail: format!("vertex {v} keeps {c} > {d} neighbors in part {i}"),
    })
}

/// Colorings of the `A` side of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteColorings {
    /// `colorings[c][v]` is the color of `v ∈ A` under coloring `c`
    /// (entries for vertices outside `A` are unused and set to `usize::MAX`).
    pub colorings: Vec<Vec<usize>>,
    pub colors: usize,
    pub r: usize,
    /// For each `v ∈ B`, the first coloring under which every color appears
    /// on at most `r` of its `A`-neighbors.
    pub first_good: Vec<(usize, usize)>,
}

fn first_good_coloring(
    g: &Graph,
    in_a: &[bool],
    v: usize,
    colorings: &[Vec<usize>],
    ell: usize,
    r: usize,
) -> Option<usize> {
    let mut count = vec![0usize; ell];
    colorings.iter().position(|c| {
        count.iter_mut().for_each(|x| *x = 0);
        g.neighbors(v).filter(|&w| in_a[w]).all(|w| {
            count[c[w]] += 1;
            count[c[w]] <= r
        })
    })
}

/// `t` uniform random colorings of `A` with `ell` colors, such that every
/// `v ∈ B` has a coloring under which each color hits at most `r` of its
/// neighbors in `A`. Grows one coloring at a time up to `3t` if needed.
pub fn bipartite_coloring_family(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    r: usize,
    t: usize,
    ell: usize,
    seed: u64,
) -> Result<BipartiteColorings> {
    if r == 0 || t == 0 || ell == 0 {
        return Err(Error::contract("r, t and ell must be positive"));
    }
    let n = g.n();
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for &v in a {
        if v >= n || std::mem::replace(&mut in_a[v], true) {
            return Err(Error::contract(format!(
                "A-side entry {v} is invalid or repeated"
            )));
        }
    }
    for &v in b {
        if v >= n || in_a[v] || std::mem::replace(&mut in_b[v], true) {
            return Err(Error::contract(format!(
                "B-side entry {v} is invalid or overlaps A"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<usize> {
        (0..n)
            .map(|v| {
                if in_a[v] {
                    rng.gen_range(0..ell)
                } else {
                    usize::MAX
                }
            })
            .collect()
    };
    let mut colorings: Vec<Vec<usize>> = (0..t).map(|_| draw(&mut rng)).collect();
    loop {
        let found: Vec<Option<usize>> = b
            .iter()
            .map(|&v| first_good_coloring(g, &in_a, v, &colorings, ell, r))
            .collect();
        if found.iter().all(Option::is_some) {
            let first_good = b
                .iter()
                .zip(found)
                .map(|(&v, j)| (v, j.expect("covered")))
                .collect();
            return Ok(BipartiteColorings {
                colorings,
                colors: ell,
                r,
                first_good,
            });
        }
        if colorings.len() >= 3 * t {
            let missing: Vec<usize> = b
                .iter()
                .zip(&found)
                .filter(|(_, j)| j.is_none())
                .map(|(&v, _)| v)
                .collect();
            return Err(Error::Exhausted {
                what: "bipartite coloring family",
                attempts: colorings.len(),
                detail: format!("B-vertices {missing:?} have no good coloring"),
            });
        }
        colorings.push(draw(&mut rng));
    }
}
