use std::fmt;

use super::derive_seed;
use super::partition::bipartite_coloring_family;
use super::suitable::build_suitable_family;
use crate::decompose::{Decomposition, Method};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, greedy_coloring, Graph};
use crate::threshold::{tau_ordered, Tag, ThresholdGraph};

/// `G*[A, B]`: the `A`-`B` edges of `base` with `B` made a clique. `A` and
/// `B` partition the vertex set.
#[derive(Debug, Clone)]
pub struct SplitExtension {
    base: Graph,
    a_side: Vec<usize>,
    b_side: Vec<usize>,
}

impl SplitExtension {
    pub fn new(base: Graph, mut a_side: Vec<usize>, mut b_side: Vec<usize>) -> Result<Self> {
        let n = base.n();
        let mut seen = vec![false; n];
        for &v in a_side.iter().chain(&b_side) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::contract(format!(
                    "split sides overlap or contain invalid vertex {v}"
                )));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::contract(format!("vertex {v} is on neither side")));
        }
        a_side.sort_unstable();
        b_side.sort_unstable();
        Ok(SplitExtension {
            base,
            a_side,
            b_side,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn a_side(&self) -> &[usize] {
        &self.a_side
    }

    pub fn b_side(&self) -> &[usize] {
        &self.b_side
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.base.n());
        for (i, &u) in self.b_side.iter().enumerate() {
            for &v in &self.b_side[i + 1..] {
                g.insert_edge(u, v);
            }
            for &a in &self.a_side {
                if self.base.has_edge(u, a) {
                    g.insert_edge(u, a);
                }
            }
        }
        g
    }

    /// Largest number of `A`-neighbors of a `B`-vertex.
    pub fn b_degree(&self) -> usize {
        let in_a = self.membership(&self.a_side);
        self.b_side
            .iter()
            .map(|&v| self.base.neighbors(v).filter(|&w| in_a[w]).count())
            .max()
            .unwrap_or(0)
    }

    /// Largest number of `B`-neighbors of an `A`-vertex.
    pub fn a_degree(&self) -> usize {
        let in_b = self.membership(&self.b_side);
        self.a_side
            .iter()
            .map(|&v| self.base.neighbors(v).filter(|&w| in_b[w]).count())
            .max()
            .unwrap_or(0)
    }

    fn membership(&self, side: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.base.n()];
        for &v in side {
            m[v] = true;
        }
        m
    }
}

/// `(ground, k, size, exhaustive)` of one suitable family.
pub type FamilyUse = (usize, usize, usize, bool);

/// Parameters and outcomes of one split decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitReport {
    pub a_size: usize,
    pub b_size: usize,
    /// `B`-side degree into `A`, clamped to at least 2.
    pub d: usize,
    /// `A`-side degree into `B`, clamped to at least `d`.
    pub delta: usize,
    pub r: usize,
    pub ell: usize,
    /// Colorings drawn (the formula's `t`, possibly grown).
    pub t: usize,
    pub families: Vec<FamilyUse>,
    pub factors: usize,
    pub bound: usize,
}

impl fmt::Display for SplitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p_max = self.families.iter().map(|x| x.2).max().unwrap_or(0);
        write!(
            f,
            "|A|={} |B|={} d={} delta={} r={} ell={} t={} families={} p_max={} factors={} bound={}",
            self.a_size,
            self.b_size,
            self.d,
            self.delta,
            self.r,
            self.ell,
            self.t,
            self.families.len(),
            p_max,
            self.factors,
            self.bound
        )
    }
}

/// Split parameters `(r, ell, t)` for degrees `d` and `delta`.
pub fn split_parameters(d: usize, delta: usize) -> (usize, usize, usize) {
    let e = std::f64::consts::E;
    let df = d as f64;
    let r = df.ln().sqrt().ceil().max(1.0) as usize;
    let rf = r as f64;
    let ell = (e * (e * df / (rf + 1.0)).powf(1.0 + 1.0 / rf)).ceil() as usize;
    let t = (4.0 * df * delta as f64).ln().ceil() as usize;
    (r, ell, t.max(1))
}

/// Decomposes `G*[A, B]` as `H` plus, for each coloring `c_j` and color
/// `k`, the `2p` supergraphs `tau(G_jk, A_jk, sigma_a^1)` and
/// `tau(G_jk, A_jk, sigma_a^2)`.
pub fn decompose_split(ext: &SplitExtension, seed: u64) -> Result<Decomposition> {
    decompose_split_detailed(ext, seed).map(|(d, _)| d)
}

pub fn decompose_split_detailed(
    ext: &SplitExtension,
    seed: u64,
) -> Result<(Decomposition, SplitReport)> {
    let n = ext.base().n();
    let target = ext.graph();
    let a = ext.a_side();
    let b = ext.b_side();
    let d = ext.b_degree().max(2);
    let delta = ext.a_degree().max(d);
    let (r, ell, t) = split_parameters(d, delta);

    let creation: Vec<(usize, Tag)> = a
        .iter()
        .map(|&v| (v, Tag::Isolated))
        .chain(b.iter().map(|&v| (v, Tag::Dominating)))
        .collect();
    let mut factors = vec![ThresholdGraph::from_creation(n, creation)?];
    let mut families = Vec::new();

    let colorings = bipartite_coloring_family(ext.base(), a, b, r, t, ell, derive_seed(seed, 0))?;
    let t_used = colorings.colorings.len();
    for (j, coloring) in colorings.colorings.iter().enumerate() {
        let b_j: Vec<usize> = colorings
            .first_good
            .iter()
            .filter(|&&(_, c)| c == j)
            .map(|&(v, _)| v)
            .collect();
        if b_j.is_empty() {
            continue;
        }
        for k in 0..ell {
            let a_jk: Vec<usize> = a.iter().copied().filter(|&v| coloring[v] == k).collect();
            if a_jk.is_empty() {
                continue;
            }
            let stream = 1 + (j * ell + k) as u64;
            let (pair, family) =
                split_piece(ext.base(), &a_jk, &b_j, r, delta, derive_seed(seed, stream))?;
            factors.extend(pair);
            families.push(family);
        }
    }

    let p_max = families.iter().map(|f| f.2).max().unwrap_or(0);
    let bound = 1 + 2 * p_max * t_used * ell;
    let report = SplitReport {
        a_size: a.len(),
        b_size: b.len(),
        d,
        delta,
        r,
        ell,
        t: t_used,
        families,
        factors: factors.len(),
        bound,
    };
    let dec = Decomposition::verified(&target, factors, Method::MaxDegree, bound)?;
    Ok((dec, report))
}

/// The `2p` factors for one `G_jk`, plus `(ground, k, size, exhaustive)` of
/// the suitable family used.
fn split_piece(
    base: &Graph,
    a_jk: &[usize],
    b_j: &[usize],
    r: usize,
    delta: usize,
    seed: u64,
) -> Result<(Vec<ThresholdGraph>, FamilyUse)> {
    let n = base.n();
    // G_jk: everything outside A_jk ∪ B_j is universal.
    let mut g_jk = Graph::complete(n);
    for (i, &u) in a_jk.iter().enumerate() {
        for &v in &a_jk[i + 1..] {
            g_jk.remove_edge(u, v);
        }
        for &v in b_j {
            if !base.has_edge(u, v) {
                g_jk.remove_edge(u, v);
            }
        }
    }

    // Conflict graph on A_jk: common neighbor in B_j.
    let m = a_jk.len();
    let mut conflict = Graph::empty(m);
    for &v in b_j {
        let local: Vec<usize> = (0..m).filter(|&i| base.has_edge(a_jk[i], v)).collect();
        for (x, &i) in local.iter().enumerate() {
            for &j in &local[x + 1..] {
                conflict.insert_edge(i, j);
            }
        }
    }
    let (_, peel) = degeneracy_ordering(&conflict);
    let classes_coloring = greedy_coloring(&conflict, &peel.reversed());
    let q = classes_coloring.palette_size();
    if q > r * delta + 1 {
        return Err(Error::Internal(format!(
            "conflict graph used {q} colors, more than r*delta + 1 = {}",
            r * delta + 1
        )));
    }
    // psi blocks: members of each class in ascending vertex order
    let blocks: Vec<Vec<usize>> = classes_coloring
        .classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| a_jk[i]).collect())
        .collect();

    let k = (r + 1).min(q);
    let (perms, exhaustive) = if k < 2 {
        (vec![(0..q).collect::<Vec<_>>()], true)
    } else {
        let fam = build_suitable_family(q, k, seed)?;
        (fam.perms().to_vec(), fam.exhaustively_verified())
    };
    let mut out = Vec::with_capacity(2 * perms.len());
    for perm in &perms {
        let sigma1: Vec<usize> = perm
            .iter()
            .flat_map(|&c| blocks[c].iter().copied())
            .collect();
        let sigma2: Vec<usize> = perm
            .iter()
            .flat_map(|&c| blocks[c].iter().rev().copied())
            .collect();
        out.push(tau_ordered(&g_jk, &sigma1)?);
        out.push(tau_ordered(&g_jk, &sigma2)?);
    }
    Ok((out, (q, k, perms.len(), exhaustive)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::verify;
    use crate::graph::named::*;
    use crate::threshold::recognize_threshold;

    #[test]
    fn parameters_for_small_degrees() {
        // d = 2: r = 1, ell = ceil(e * e^2) = 21, t = ceil(ln 24) = 4
        assert_eq!(split_parameters(2, 3), (1, 21, 4));
        let (r, _, _) = split_parameters(100, 100);
        assert_eq!(r, 3);
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(SplitExtension::new(path(3), vec![0], vec![1]).is_err());
        assert!(SplitExtension::new(path(3), vec![0, 1], vec![1, 2]).is_err());
    }

    #[test]
    fn low_degree_b_side_still_verifies() {
        let ext = SplitExtension::new(path(6), vec![0, 2, 4], vec![1, 3, 5]).unwrap();
        let (d, rep) = decompose_split_detailed(&ext, 0).unwrap();
        assert!(d.is_verified());
        assert_eq!(rep.d, 2);
        assert!(d.len() <= d.bound_claimed());
    }

    #[test]
    fn two_centers_over_four_leaves() {
        let g = complete_bipartite(4, 2);
        let a: Vec<usize> = (0..4).collect();
        let ext = SplitExtension::new(g, a, vec![4, 5]).unwrap();
        let (d, rep) = decompose_split_detailed(&ext, 3).unwrap();
        assert_eq!(rep.d, 4);
        assert!(verify(&ext.graph(), &d).unwrap().is_valid());
        for f in d.factors() {
            assert!(recognize_threshold(f.graph()).is_threshold());
        }
    }

    #[test]
    fn extension_graph_shape() {
        // A = {0, 2}, B = {1, 3} on P4: edges 01, 12, 23 plus the B-clique 13
        let ext = SplitExtension::new(path(4), vec![0, 2], vec![1, 3]).unwrap();
        let g = ext.graph();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn h_alone_leaves_cross_non_edges() {
        let ext = SplitExtension::new(path(4), vec![0, 2], vec![1, 3]).unwrap();
        let (d, _) = decompose_split_detailed(&ext, 0).unwrap();
        let only_h =
            Decomposition::unverified(d.factors()[..1].to_vec(), Method::Manual, 1).unwrap();
        assert!(!verify(&ext.graph(), &only_h).unwrap().is_valid());
    }
}
