use std::collections::VecDeque;
use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// How a [`VertexOrdering`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingKind {
    Degeneracy,
    PreorderDerived,
    Arbitrary,
}

/// A permutation of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    kind: OrderingKind,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>, kind: OrderingKind) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::contract(format!(
                    "ordering is not a permutation of 0..{n} (offending entry {v})"
                )));
            }
            position[v] = i;
        }
        Ok(VertexOrdering {
            order,
            position,
            kind,
        })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering::new((0..n).collect(), OrderingKind::Arbitrary).expect("identity")
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Index of `v` in the ordering.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// The members of `set` listed in the order they appear here.
    pub fn restrict(&self, set: &[usize]) -> Vec<usize> {
        let mut out = set.to_vec();
        out.sort_by_key(|&v| self.position[v]);
        out
    }

    pub fn reversed(&self) -> VertexOrdering {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::new(order, self.kind).expect("reverse of a permutation")
    }

    /// Neighbors of `v` placed after it.
    pub fn forward_neighbors<'a>(
        &'a self,
        g: &'a Graph,
        v: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        let p = self.position[v];
        g.neighbors(v).filter(move |&w| self.position[w] > p)
    }

    /// Largest number of forward neighbors over all vertices.
    pub fn max_forward_degree(&self, g: &Graph) -> usize {
        (0..g.n())
            .map(|v| self.forward_neighbors(g, v).count())
            .max()
            .unwrap_or(0)
    }
}

/// A proper vertex coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl ProperColoring {
    /// Checks properness and the palette bound.
    pub fn new(g: &Graph, colors: Vec<usize>, palette_size: usize) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::contract(format!(
                "coloring covers {} vertices, graph has {}",
                colors.len(),
                g.n()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette_size) {
            return Err(Error::contract(format!(
                "color {c} outside palette of size {palette_size}"
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::contract(format!(
                "adjacent vertices {u} and {v} share color {}",
                colors[u]
            )));
        }
        Ok(ProperColoring {
            colors,
            palette_size,
        })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Color classes indexed by color; classes may be empty.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.palette_size];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Greedy min-degree peeling. Returns the degeneracy `k` and the removal
/// order, in which every vertex has at most `k` later neighbors. Ties go to
/// the smallest index.
pub fn degeneracy_ordering(g: &Graph) -> (usize, VertexOrdering) {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        k = k.max(degree[v]);
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let ordering = VertexOrdering::new(order, OrderingKind::Degeneracy).expect("peeling order");
    (k, ordering)
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Shortest cycle length by BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// First-fit coloring along `order`. Uses at most `max_degree + 1` colors.
pub fn greedy_coloring(g: &Graph, order: &VertexOrdering) -> ProperColoring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut used = vec![usize::MAX; n + 1];
    let mut palette = 0;
    for &v in order.order() {
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                used[colors[w]] = v;
            }
        }
        let c = (0..).find(|&c| used[c] != v).expect("a free color exists");
        colors[v] = c;
        palette = palette.max(c + 1);
    }
    ProperColoring::new(g, colors, palette).expect("first-fit coloring is proper")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Shortest cycle by enumerating vertex sequences; only for tiny graphs.
    fn brute_force_girth(g: &Graph) -> Girth {
        fn extend(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
            let first = path[0];
            let last = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(last, first) {
                *best = (*best).min(path.len());
            }
            if path.len() >= *best {
                return;
            }
            for w in g.neighbors(last) {
                if w > first && !path.contains(&w) {
                    path.push(w);
                    extend(g, path, best);
                    path.pop();
                }
            }
        }
        let mut best = usize::MAX;
        for s in 0..g.n() {
            extend(g, &mut vec![s], &mut best);
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_ordering(&cycle(10)).0, 2);
        assert_eq!(degeneracy_ordering(&Graph::complete(5)).0, 4);
        assert_eq!(degeneracy_ordering(&petersen()).0, 3);
        assert_eq!(degeneracy_ordering(&path(6)).0, 1);
        assert_eq!(degeneracy_ordering(&Graph::empty(4)).0, 0);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&path(7)), Girth::Infinite);
        assert_eq!(girth(&star(5)), Girth::Infinite);
        assert_eq!(girth(&petersen()), Girth::Finite(5));
        assert_eq!(girth(&cycle(4)), Girth::Finite(4));
        assert_eq!(girth(&Graph::complete(4)), Girth::Finite(3));
        assert_eq!(brute_force_girth(&petersen()), Girth::Finite(5));
    }

    #[test]
    fn greedy_examples() {
        let id = |n| VertexOrdering::identity(n);
        assert_eq!(greedy_coloring(&Graph::empty(4), &id(4)).palette_size(), 1);
        assert_eq!(
            greedy_coloring(&Graph::complete(4), &id(4)).palette_size(),
            4
        );
        let rev = id(4).reversed();
        assert_eq!(greedy_coloring(&Graph::complete(4), &rev).palette_size(), 4);
        assert!(greedy_coloring(&cycle(5), &id(5)).palette_size() <= 3);
    }

    #[test]
    fn ordering_rejects_non_permutations() {
        assert!(VertexOrdering::new(vec![0, 0, 1], OrderingKind::Arbitrary).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1], OrderingKind::Arbitrary).is_err());
    }

    #[test]
    fn coloring_rejects_conflicts() {
        let g = path(3);
        assert!(ProperColoring::new(&g, vec![0, 0, 1], 2).is_err());
        assert!(ProperColoring::new(&g, vec![0, 1, 2], 2).is_err());
        assert!(ProperColoring::new(&g, vec![0, 1, 0], 2).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (0..=max_n).prop_flat_map(|n| {
                let pairs = n * n.saturating_sub(1) / 2;
                proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    let mut it = bits.into_iter();
                    for u in 0..n {
                        for v in u + 1..n {
                            if it.next().unwrap() {
                                g.insert_edge(u, v);
                            }
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn complement_is_involution(g in arb_graph(20)) {
                prop_assert_eq!(g.complement().complement(), g);
            }

            #[test]
            fn peeling_order_respects_k(g in arb_graph(20)) {
                let (k, order) = degeneracy_ordering(&g);
                prop_assert!(order.max_forward_degree(&g) <= k);
            }

            #[test]
            fn girth_matches_cycle_enumeration(g in arb_graph(8)) {
                prop_assert_eq!(girth(&g), brute_force_girth(&g));
            }

            #[test]
            fn greedy_is_proper_within_delta_plus_one(g in arb_graph(20), seed in any::<u64>()) {
                let mut order: Vec<usize> = (0..g.n()).collect();
                // deterministic shuffle
                let mut s = seed;
                for i in (1..order.len()).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    order.swap(i, (s >> 33) as usize % (i + 1));
                }
                let order = VertexOrdering::new(order, OrderingKind::Arbitrary).unwrap();
                let c = greedy_coloring(&g, &order);
                prop_assert!(ProperColoring::new(&g, c.colors().to_vec(), c.palette_size()).is_ok());
                prop_assert!(c.palette_size() <= g.max_degree() + 1);
            }
        }
    }
}
