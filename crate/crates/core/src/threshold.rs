//! Threshold graphs: recognition by vertex peeling, the threshold supergraph
//! `tau(G, A, sigma)`, and the creation-sequence text format.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// How a vertex enters a creation sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Added with no neighbors.
    Isolated,
    /// Added adjacent to every vertex already present.
    Dominating,
}

impl Tag {
    fn symbol(self) -> char {
        match self {
            Tag::Isolated => 'i',
            Tag::Dominating => 'd',
        }
    }
}

/// A threshold graph together with a creation sequence and its split
/// partition.
///
/// `independent` lists the independent side `u_1, ..., u_k` so that
/// `N(u_k) ⊆ ... ⊆ N(u_1)`; `clique` is the complementary clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    graph: Graph,
    creation: Vec<(usize, Tag)>,
    independent: Vec<usize>,
    clique: Vec<usize>,
}

impl ThresholdGraph {
    /// Replays a creation sequence over vertices `0..n`.
    pub fn from_creation(n: usize, creation: Vec<(usize, Tag)>) -> Result<Self> {
        if creation.len() != n {
            return Err(Error::contract(format!(
                "creation sequence has {} entries for n = {n}",
                creation.len()
            )));
        }
        let mut present = vec![false; n];
        let mut graph = Graph::empty(n);
        let mut added = Vec::with_capacity(n);
        for &(v, tag) in &creation {
            if v >= n || present[v] {
                return Err(Error::contract(format!(
                    "creation sequence is not a permutation of 0..{n} (entry {v})"
                )));
            }
            if tag == Tag::Dominating {
                for &u in &added {
                    graph.insert_edge(u, v);
                }
            }
            present[v] = true;
            added.push(v);
        }
        let (independent, clique) = split_from_tags(&creation);
        Ok(ThresholdGraph {
            graph,
            creation,
            independent,
            clique,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn creation(&self) -> &[(usize, Tag)] {
        &self.creation
    }

    /// The independent side, ordered by non-increasing neighborhoods.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Checks every structural invariant: the creation sequence replays to
    /// the stored graph, the split is valid, and the independent side has
    /// nested neighborhoods.
    pub fn check_invariants(&self) -> Result<()> {
        let replay = ThresholdGraph::from_creation(self.n(), self.creation.clone())?;
        if replay.graph != self.graph {
            return Err(Error::Internal(
                "creation sequence does not replay to the graph".into(),
            ));
        }
        if !self.graph.is_independent(&self.independent) || !self.graph.is_clique(&self.clique) {
            return Err(Error::Internal(
                "split partition is not independent + clique".into(),
            ));
        }
        let mut seen = vec![false; self.n()];
        for &v in self.independent.iter().chain(&self.clique) {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Internal(format!(
                    "vertex {v} on both sides of the split"
                )));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Internal("split partition misses a vertex".into()));
        }
        for pair in self.independent.windows(2) {
            let (wide, narrow) = (pair[0], pair[1]);
            if self
                .graph
                .neighbors(narrow)
                .any(|w| !self.graph.has_edge(wide, w))
            {
                return Err(Error::Internal(format!(
                    "N({narrow}) is not contained in N({wide})"
                )));
            }
        }
        Ok(())
    }

    /// Number of independent-side vertices adjacent to each vertex; for a
    /// clique vertex `v` this is `s(v)`, the length of the prefix
    /// `u_1..u_s(v)` it sees.
    pub(crate) fn independent_ranks(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| {
                self.independent
                    .iter()
                    .take_while(|&&u| self.graph.has_edge(u, v))
                    .count()
            })
            .collect()
    }

    /// Text form: `ts <n> <v><tag> ...` in creation order.
    pub fn to_line(&self) -> String {
        let mut s = format!("ts {}", self.n());
        for &(v, tag) in &self.creation {
            s.push_str(&format!(" {v}{}", tag.symbol()));
        }
        s
    }

    /// Parses `ts <n> <tok>...`. A token is `<v><tag>` or a bare tag, in which
    /// case the vertex is the token's position.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("ts") {
            return Err(Error::parse(line_no, "expected `ts <n> ...`"));
        }
        let n: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(line_no, "missing vertex count"))?;
        let mut creation = Vec::with_capacity(n);
        for (pos, tok) in tokens.enumerate() {
            let (head, last) = tok.split_at(tok.len().saturating_sub(1));
            let tag = match last {
                "i" => Tag::Isolated,
                "d" => Tag::Dominating,
                _ => return Err(Error::parse(line_no, format!("bad creation token `{tok}`"))),
            };
            let v = if head.is_empty() {
                pos
            } else {
                head.parse()
                    .map_err(|_| Error::parse(line_no, format!("bad creation token `{tok}`")))?
            };
            creation.push((v, tag));
        }
        ThresholdGraph::from_creation(n, creation).map_err(|e| Error::parse(line_no, e.to_string()))
    }
}

impl fmt::Display for ThresholdGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

fn split_from_tags(creation: &[(usize, Tag)]) -> (Vec<usize>, Vec<usize>) {
    let mut independent = Vec::new();
    let mut clique = Vec::new();
    for &(v, tag) in creation {
        match tag {
            Tag::Isolated => independent.push(v),
            Tag::Dominating => clique.push(v),
        }
    }
    (independent, clique)
}

/// The three minimal non-threshold graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenKind {
    TwoK2,
    P4,
    C4,
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenKind::TwoK2 => "2K2",
            ForbiddenKind::P4 => "P4",
            ForbiddenKind::C4 => "C4",
        })
    }
}

/// An induced 4-vertex obstruction. Vertex order: for `P4` and `C4` the
/// path/cycle order; for `2K2` the edges are `v0 v1` and `v2 v3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbiddenSubgraph {
    pub kind: ForbiddenKind,
    pub vertices: [usize; 4],
}

impl ForbiddenSubgraph {
    /// Classifies the subgraph induced on four distinct vertices.
    pub fn classify(g: &Graph, quad: [usize; 4]) -> Option<Self> {
        let deg = |i: usize| {
            (0..4)
                .filter(|&j| j != i && g.has_edge(quad[i], quad[j]))
                .count()
        };
        let degrees: Vec<usize> = (0..4).map(deg).collect();
        let edges: usize = degrees.iter().sum::<usize>() / 2;
        let kind = match (
            edges,
            degrees.iter().all(|&d| d == 1),
            degrees.iter().all(|&d| d == 2),
        ) {
            (2, true, _) => ForbiddenKind::TwoK2,
            (4, _, true) => ForbiddenKind::C4,
            (3, _, _)
                if degrees.iter().filter(|&&d| d == 1).count() == 2
                    && degrees.iter().filter(|&&d| d == 2).count() == 2 =>
            {
                ForbiddenKind::P4
            }
            _ => return None,
        };
        let vertices = match kind {
            ForbiddenKind::TwoK2 => {
                let a = quad[0];
                let b = *quad[1..]
                    .iter()
                    .find(|&&x| g.has_edge(a, x))
                    .expect("2K2 partner");
                let mut rest = quad.iter().copied().filter(|&x| x != a && x != b);
                let (c, d) = (rest.next().unwrap(), rest.next().unwrap());
                [a, b, c, d]
            }
            ForbiddenKind::P4 | ForbiddenKind::C4 => {
                let start = match kind {
                    ForbiddenKind::P4 => (0..4)
                        .filter(|&i| degrees[i] == 1)
                        .map(|i| quad[i])
                        .min()
                        .unwrap(),
                    _ => *quad.iter().min().unwrap(),
                };
                let mut walk = vec![start];
                while walk.len() < 4 {
                    let last = *walk.last().unwrap();
                    let next = quad
                        .iter()
                        .copied()
                        .filter(|&x| !walk.contains(&x) && g.has_edge(last, x))
                        .min()
                        .expect("connected obstruction");
                    walk.push(next);
                }
                [walk[0], walk[1], walk[2], walk[3]]
            }
        };
        Some(ForbiddenSubgraph { kind, vertices })
    }
}

impl fmt::Display for ForbiddenSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.vertices;
        write!(f, "{} on {a} {b} {c} {d}", self.kind)
    }
}

/// Outcome of [`recognize_threshold`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Threshold(ThresholdGraph),
    NotThreshold(ForbiddenSubgraph),
}

impl Recognition {
    pub fn is_threshold(&self) -> bool {
        matches!(self, Recognition::Threshold(_))
    }

    pub fn threshold(self) -> Option<ThresholdGraph> {
        match self {
            Recognition::Threshold(t) => Some(t),
            Recognition::NotThreshold(_) => None,
        }
    }
}

/// Graphs up to this size get their refusal witness from a full scan of all
/// 4-subsets.
pub const FULL_WITNESS_SCAN_LIMIT: usize = 12;

/// Recognizes threshold graphs by repeatedly deleting a universal or an
/// isolated vertex (smallest index first, universal preferred). The
/// deletion order reversed is the creation sequence; its first vertex is
/// recorded as isolated.
pub fn recognize_threshold(g: &Graph) -> Recognition {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed: Vec<(usize, Tag)> = Vec::with_capacity(n);
    let mut remaining = n;
    while remaining > 0 {
        let universal = (0..n).find(|&v| alive[v] && degree[v] + 1 == remaining);
        let pick = universal.map(|v| (v, Tag::Dominating)).or_else(|| {
            (0..n)
                .find(|&v| alive[v] && degree[v] == 0)
                .map(|v| (v, Tag::Isolated))
        });
        let Some((v, tag)) = pick else {
            let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            return Recognition::NotThreshold(find_witness(g, &rest));
        };
        alive[v] = false;
        remaining -= 1;
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        removed.push((v, tag));
    }
    removed.reverse();
    if let Some(first) = removed.first_mut() {
        first.1 = Tag::Isolated;
    }
    let t = ThresholdGraph::from_creation(n, removed).expect("peeling order is a permutation");
    debug_assert_eq!(t.graph(), g);
    Recognition::Threshold(t)
}

/// Finds an induced 2K2, P4 or C4. `stuck` is the vertex set on which
/// peeling stalled (no isolated or universal vertex); it must be non-threshold.
fn find_witness(g: &Graph, stuck: &[usize]) -> ForbiddenSubgraph {
    if g.n() <= FULL_WITNESS_SCAN_LIMIT {
        scan_all_quads(g).expect("a non-threshold graph has an obstruction")
    } else {
        incomparable_pair_witness(g, stuck)
    }
}

/// First obstruction among 4-subsets in lexicographic order.
pub fn scan_all_quads(g: &Graph) -> Option<ForbiddenSubgraph> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(w) = ForbiddenSubgraph::classify(g, [a, b, c, d]) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Inside a non-threshold vertex set some pair `u, v` has incomparable
/// neighborhoods: `x ∈ N(u) \ N[v]` and `y ∈ N(v) \ N[u]`. Then
/// `{u, v, x, y}` induces 2K2, P4 or C4 depending on `uv` and `xy`.
fn incomparable_pair_witness(g: &Graph, set: &[usize]) -> ForbiddenSubgraph {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            let x = set
                .iter()
                .copied()
                .find(|&x| x != v && g.has_edge(u, x) && !g.has_edge(v, x));
            let y = set
                .iter()
                .copied()
                .find(|&y| y != u && g.has_edge(v, y) && !g.has_edge(u, y));
            if let (Some(x), Some(y)) = (x, y) {
                return ForbiddenSubgraph::classify(g, [u, x, y, v])
                    .expect("incomparable neighborhoods induce an obstruction");
            }
        }
    }
    panic!("peeling stalled on a vertex set with comparable neighborhoods")
}

/// `tau(G, A, sigma)`: the threshold supergraph of `g` in which `a` stays
/// independent, `B = V \ a` becomes a clique, and each `v ∈ B` is joined to
/// the prefix `u_1..u_s(v)` of `sigma`, where `s(v)` is the last position in
/// `sigma` of a `g`-neighbor of `v` (0 when `v` has no neighbor in `a`).
pub fn tau(g: &Graph, a: &[usize], sigma: &[usize]) -> Result<ThresholdGraph> {
    let mut in_a = vec![false; g.n()];
    for &u in a {
        if u >= g.n() || std::mem::replace(&mut in_a[u], true) {
            return Err(Error::contract(format!(
                "independent set entry {u} is invalid or repeated"
            )));
        }
    }
    let mut in_sigma = vec![false; g.n()];
    if sigma.len() != a.len()
        || sigma
            .iter()
            .any(|&u| u >= g.n() || !in_a[u] || std::mem::replace(&mut in_sigma[u], true))
    {
        return Err(Error::contract(
            "sigma is not a permutation of the independent set",
        ));
    }
    tau_ordered(g, sigma)
}

/// [`tau`] with the independent set given directly in its order.
pub fn tau_ordered(g: &Graph, sigma: &[usize]) -> Result<ThresholdGraph> {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    for (i, &u) in sigma.iter().enumerate() {
        if u >= n || position[u] != usize::MAX {
            return Err(Error::contract(format!(
                "ordering entry {u} is invalid or repeated"
            )));
        }
        position[u] = i;
    }
    if !g.is_independent(sigma) {
        return Err(Error::contract(
            "the vertex set given to tau is not independent",
        ));
    }

    // rank[v] = s(v) for v in B
    let mut rank = vec![0usize; n];
    let b: Vec<usize> = (0..n).filter(|&v| position[v] == usize::MAX).collect();
    for &v in &b {
        rank[v] = g
            .neighbors(v)
            .filter(|&w| position[w] != usize::MAX)
            .map(|w| position[w] + 1)
            .max()
            .unwrap_or(0);
    }

    let mut graph = Graph::empty(n);
    let words = graph.words();
    let mut b_mask = vec![0u64; words];
    for &v in &b {
        b_mask[v / 64] |= 1 << (v % 64);
    }
    let mut prefix = vec![0u64; words];
    let mut prefixes = Vec::with_capacity(sigma.len() + 1);
    prefixes.push(prefix.clone());
    for &u in sigma {
        prefix[u / 64] |= 1 << (u % 64);
        prefixes.push(prefix.clone());
    }
    for &v in &b {
        let row = graph.row_mut(v);
        for (w, (bm, pm)) in row.iter_mut().zip(b_mask.iter().zip(&prefixes[rank[v]])) {
            *w = bm | pm;
        }
        row[v / 64] &= !(1 << (v % 64));
    }
    for (i, &u) in sigma.iter().enumerate() {
        let row = graph.row_mut(u);
        for &v in &b {
            if rank[v] > i {
                row[v / 64] |= 1 << (v % 64);
            }
        }
    }

    // Creation: B_0, u_1, B_1, u_2, B_2, ..., u_k, B_k with B_s = {v : s(v) = s}.
    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); sigma.len() + 1];
    for &v in &b {
        by_rank[rank[v]].push(v);
    }
    let mut creation = Vec::with_capacity(n);
    creation.extend(by_rank[0].iter().map(|&v| (v, Tag::Dominating)));
    for (i, &u) in sigma.iter().enumerate() {
        creation.push((u, Tag::Isolated));
        creation.extend(by_rank[i + 1].iter().map(|&v| (v, Tag::Dominating)));
    }
    let (independent, clique) = split_from_tags(&creation);
    debug_assert_eq!(independent, sigma);
    let t = ThresholdGraph {
        graph,
        creation,
        independent,
        clique,
    };
    debug_assert!(g.is_subgraph_of(t.graph()));
    Ok(t)
}

/// Every labelled threshold graph on `n` vertices, as edge-set graphs, by
/// replaying all creation sequences and deduplicating by edge set. The
/// result is sorted for determinism. Intended for `n <= 8`.
pub fn enumerate_threshold_graphs(n: usize) -> Vec<ThresholdGraph> {
    assert!(n <= 8, "threshold graph enumeration is limited to n <= 8");
    crate::exact::all_threshold_edge_masks(n)
        .iter()
        .map(|&(mask, ref creation)| {
            let t = ThresholdGraph::from_creation(n, creation.clone()).expect("valid sequence");
            debug_assert_eq!(crate::exact::edge_mask(t.graph()), mask);
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Independent oracle: forbidden-subgraph scan over all 4-subsets.
    fn brute_is_threshold(g: &Graph) -> bool {
        scan_all_quads(g).is_none()
    }

    #[test]
    fn complete_graph_is_threshold() {
        let t = recognize_threshold(&Graph::complete(5))
            .threshold()
            .unwrap();
        assert_eq!(t.creation()[0].1, Tag::Isolated);
        assert!(t.creation()[1..]
            .iter()
            .all(|&(_, tag)| tag == Tag::Dominating));
        t.check_invariants().unwrap();
    }

    #[test]
    fn star_is_threshold() {
        let t = recognize_threshold(&star(4)).threshold().unwrap();
        assert_eq!(t.graph(), &star(4));
        t.check_invariants().unwrap();
    }

    #[test]
    fn path_refused_with_itself() {
        match recognize_threshold(&path(4)) {
            Recognition::NotThreshold(w) => {
                assert_eq!(w.kind, ForbiddenKind::P4);
                assert_eq!(w.vertices, [0, 1, 2, 3]);
            }
            other => panic!("P4 accepted: {other:?}"),
        }
        match recognize_threshold(&cycle(4)) {
            Recognition::NotThreshold(w) => assert_eq!(w.kind, ForbiddenKind::C4),
            other => panic!("C4 accepted: {other:?}"),
        }
        match recognize_threshold(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()) {
            Recognition::NotThreshold(w) => {
                assert_eq!(w.kind, ForbiddenKind::TwoK2);
                assert_eq!(w.vertices, [0, 1, 2, 3]);
            }
            other => panic!("2K2 accepted: {other:?}"),
        }
    }

    #[test]
    fn large_graph_witness_uses_targeted_search() {
        // P4 hidden among 20 vertices: everything else universal.
        let mut g = Graph::complete(20);
        for (u, v) in [(0, 2), (0, 3), (1, 3)] {
            g.remove_edge(u, v);
        }
        match recognize_threshold(&g) {
            Recognition::NotThreshold(w) => {
                let again = ForbiddenSubgraph::classify(&g, w.vertices).unwrap();
                assert_eq!(again, w);
                assert_eq!(w.kind, ForbiddenKind::P4);
            }
            other => panic!("accepted: {other:?}"),
        }
        let c = cycle(30);
        let w = match recognize_threshold(&c) {
            Recognition::NotThreshold(w) => w,
            other => panic!("accepted: {other:?}"),
        };
        assert_eq!(ForbiddenSubgraph::classify(&c, w.vertices), Some(w));
    }

    #[test]
    fn tau_on_edgeless() {
        let g = Graph::empty(3);
        let t = tau(&g, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(t.graph(), &Graph::empty(3));
        assert_eq!(t.independent(), &[0, 1]);
        assert_eq!(t.clique(), &[2]);
    }

    #[test]
    fn tau_on_path() {
        let t = tau(&path(4), &[0, 3], &[0, 3]).unwrap();
        let want = Graph::from_edges(4, [(1, 2), (1, 0), (2, 0), (2, 3)]).unwrap();
        assert_eq!(t.graph(), &want);
        t.check_invariants().unwrap();
    }

    #[test]
    fn tau_with_empty_set_is_complete() {
        let t = tau(&cycle(5), &[], &[]).unwrap();
        assert_eq!(t.graph(), &Graph::complete(5));
    }

    #[test]
    fn tau_contract_violations() {
        let g = path(4);
        assert!(matches!(tau(&g, &[0, 1], &[0, 1]), Err(Error::Contract(_))));
        assert!(matches!(tau(&g, &[0, 3], &[0, 2]), Err(Error::Contract(_))));
        assert!(matches!(tau(&g, &[0, 3], &[0]), Err(Error::Contract(_))));
        assert!(matches!(tau(&g, &[0, 3], &[3, 3]), Err(Error::Contract(_))));
    }

    #[test]
    fn text_round_trip_and_bare_tags() {
        let t = tau(&path(4), &[0, 3], &[0, 3]).unwrap();
        let back = ThresholdGraph::parse_line(&t.to_line(), 1).unwrap();
        assert_eq!(back, t);
        let bare = ThresholdGraph::parse_line("ts 3 i d d", 1).unwrap();
        assert_eq!(bare.graph(), &Graph::complete(3));
        assert!(ThresholdGraph::parse_line("ts 3 0i 0d 1d", 4).is_err());
        assert!(ThresholdGraph::parse_line("ts 2 0x 1d", 4).is_err());
    }

    /// Every graph on `n` vertices by edge bitmask.
    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len()).map(move |m| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
    }

    #[test]
    fn recognition_agrees_with_forbidden_scan_up_to_six() {
        for n in 0..=6 {
            for g in all_graphs(n) {
                let r = recognize_threshold(&g);
                assert_eq!(r.is_threshold(), brute_is_threshold(&g), "{g:?}");
                match r {
                    Recognition::Threshold(t) => {
                        assert_eq!(t.graph(), &g);
                        t.check_invariants().unwrap();
                    }
                    Recognition::NotThreshold(w) => {
                        assert_eq!(ForbiddenSubgraph::classify(&g, w.vertices), Some(w));
                    }
                }
                assert_eq!(
                    recognize_threshold(&g.complement()).is_threshold(),
                    brute_is_threshold(&g)
                );
            }
        }
    }

    #[test]
    fn labelled_threshold_counts() {
        // Cross-enumeration: filter all graphs by the forbidden scan.
        for n in 0..=5 {
            let filtered = all_graphs(n).filter(brute_is_threshold).count();
            assert_eq!(enumerate_threshold_graphs(n).len(), filtered, "n = {n}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
            fn tau_is_threshold_supergraph(g in arb_graph(14), seed in any::<u64>()) {
                // independent set: greedy in a seeded order
                let n = g.n();
                let mut order: Vec<usize> = (0..n).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                    order.swap(i, (s >> 33) as usize % (i + 1));
                }
                let mut a: Vec<usize> = Vec::new();
                for &v in &order {
                    if a.iter().all(|&u| !g.has_edge(u, v)) && (s >> (v % 60)) & 1 == 1 {
                        a.push(v);
                    }
                }
                let t = tau(&g, &a, &a).unwrap();
                prop_assert!(g.is_subgraph_of(t.graph()));
                prop_assert!(recognize_threshold(t.graph()).is_threshold());
                prop_assert!(t.check_invariants().is_ok());
                prop_assert_eq!(t.independent(), &a[..]);
            }
        }
    }
}
