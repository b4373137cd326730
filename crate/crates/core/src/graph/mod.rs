//! Simple undirected graphs on vertices `0..n`, stored as adjacency bit rows.

mod exact;
mod order;
mod parse;

pub use exact::{
    chromatic_number, exact_small_invariants, max_clique, max_independent_set, maximal_cliques,
    minimum_vertex_cover, ExactLimits, SmallInvariants,
};
pub use order::{
    degeneracy_ordering, girth, greedy_coloring, Girth, OrderingKind, ProperColoring,
    VertexOrdering,
};
pub use parse::parse_edge_list;

use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A simple undirected graph. Vertex identity is the 0-based index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicates collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::contract(format!(
                "edge {u}-{v} out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::contract(format!("self-loop at vertex {u}")));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    /// Adjacency row of `v` as bit words.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    /// The complement graph (no self-loops).
    pub fn complement(&self) -> Graph {
        let mut h = self.clone();
        for v in 0..self.n {
            let words = self.words;
            let row = h.row_mut(v);
            for (i, w) in row.iter_mut().enumerate() {
                *w = !*w & full_word(self.n, i, words);
            }
            row[v / WORD] &= !(1 << (v % WORD));
        }
        h
    }

    /// Whether every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Edge-set intersection with another graph on the same vertex set.
    pub fn intersect_with(&mut self, other: &Graph) {
        assert_eq!(
            self.n, other.n,
            "intersection of graphs on different vertex sets"
        );
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            *a &= b;
        }
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Induced subgraph on `keep` (relabelled in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut h = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.insert_edge(i, j);
                }
            }
        }
        h
    }

    /// Disjoint union of `copies` copies of `self` (e.g. `2K_n`).
    pub fn disjoint_copies(&self, copies: usize) -> Graph {
        let n = self.n;
        let mut h = Graph::empty(n * copies);
        for c in 0..copies {
            for (u, v) in self.edges() {
                h.insert_edge(c * n + u, c * n + v);
            }
        }
        h
    }

    /// Serializes in the `p <n> <m>` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("p {} {}\n", self.n, self.num_edges());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn full_word(n: usize, i: usize, words: usize) -> u64 {
    if i + 1 < words || n.is_multiple_of(WORD) {
        u64::MAX
    } else {
        (1u64 << (n % WORD)) - 1
    }
}

/// Iterates the set bits of a word slice in ascending order.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            }
        })
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Named graphs used throughout tests, examples and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid complete bipartite graph")
    }

    /// Disjoint union of two copies of `K_n`.
    pub fn two_cliques(n: usize) -> Graph {
        Graph::complete(n).disjoint_copies(2)
    }

    /// The graph whose complement is the tightness example on `2n` vertices:
    /// `a_i = i` form a clique and each `a_i` is matched to `b_i = n + i`.
    pub fn clique_with_pendant_matching(n: usize) -> Graph {
        let clique = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let matching = (0..n).map(|i| (i, n + i));
        Graph::from_edges(2 * n, clique.chain(matching)).expect("valid graph")
    }

    /// Complement of [`clique_with_pendant_matching`]: `a`-side independent,
    /// `b`-side a clique, `a_i b_j` adjacent iff `i != j`.
    pub fn tight_example(n: usize) -> Graph {
        clique_with_pendant_matching(n).complement()
    }
}
