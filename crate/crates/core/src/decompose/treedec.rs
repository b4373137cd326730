use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree decomposition over vertices `0..n`. Nodes are indexed from 0
/// internally and from 1 in the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<Vec<usize>>,
    tree: Vec<Vec<usize>>,
    root: usize,
}

impl TreeDecomposition {
    /// Builds a decomposition from bags and tree edges (0-based node ids).
    /// Checks that the edges form a tree, that the bags cover `0..n`
    /// (condition 1) and that every vertex's bags are connected (condition 3).
    pub fn new(
        n: usize,
        bags: Vec<Vec<usize>>,
        edges: &[(usize, usize)],
        root: usize,
    ) -> Result<Self> {
        let nodes = bags.len();
        if nodes == 0 {
            return Err(Error::contract(
                "a tree decomposition needs at least one bag",
            ));
        }
        if root >= nodes {
            return Err(Error::contract(format!("root {root} is not a node")));
        }
        let mut tree = vec![Vec::new(); nodes];
        for &(a, b) in edges {
            if a >= nodes || b >= nodes || a == b {
                return Err(Error::contract(format!(
                    "tree edge {}-{} is invalid",
                    a + 1,
                    b + 1
                )));
            }
            tree[a].push(b);
            tree[b].push(a);
        }
        if edges.len() + 1 != nodes || reachable(&tree, root, |_| true).iter().any(|&r| !r) {
            return Err(Error::contract("the bag graph is not a tree"));
        }
        for adj in &mut tree {
            adj.sort_unstable();
        }
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(Error::contract(format!("bag vertex {v} is out of range")));
            }
        }
        let td = TreeDecomposition {
            n,
            bags,
            tree,
            root,
        };
        td.check_cover()?;
        td.check_connected()?;
        Ok(td)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_bags(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    /// Tree neighbors of `node`, ascending.
    pub fn tree_neighbors(&self, node: usize) -> &[usize] {
        &self.tree[node]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Checks all three conditions against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::contract(format!(
                "tree decomposition is over {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        self.check_cover()?;
        let mut inside = Graph::empty(self.n);
        for bag in &self.bags {
            for (i, &u) in bag.iter().enumerate() {
                for &v in &bag[i + 1..] {
                    inside.insert_edge(u, v);
                }
            }
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !inside.has_edge(u, v)) {
            return Err(Error::TreeDecomposition {
                condition: 2,
                msg: format!("edge {u}-{v} lies in no bag"),
            });
        }
        self.check_connected()
    }

    fn check_cover(&self) -> Result<()> {
        let mut seen = vec![false; self.n];
        for bag in &self.bags {
            for &v in bag {
                seen[v] = true;
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(Error::TreeDecomposition {
                condition: 1,
                msg: format!("vertex {v} is in no bag"),
            }),
            None => Ok(()),
        }
    }

    fn check_connected(&self) -> Result<()> {
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (node, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                holders[v].push(node);
            }
        }
        for (v, nodes) in holders.iter().enumerate() {
            let Some(&start) = nodes.first() else {
                continue;
            };
            let seen = reachable(&self.tree, start, |x| {
                self.bags[x].binary_search(&v).is_ok()
            });
            if let Some(&bad) = nodes.iter().find(|&&x| !seen[x]) {
                return Err(Error::TreeDecomposition {
                    condition: 3,
                    msg: format!(
                        "bags containing vertex {v} are disconnected (bags {} and {})",
                        start + 1,
                        bad + 1
                    ),
                });
            }
        }
        Ok(())
    }

    /// Depth of every node below the root.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![usize::MAX; self.bags.len()];
        depth[self.root] = 0;
        let mut queue = VecDeque::from([self.root]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.tree[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        depth
    }

    /// Nodes in depth-first preorder from the root, children ascending.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.bags.len());
        let mut seen = vec![false; self.bags.len()];
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            out.push(x);
            for &y in self.tree[x].iter().rev() {
                if !seen[y] {
                    stack.push(y);
                }
            }
        }
        out
    }

    /// PACE-style text with 1-based bag ids and 0-based vertices. The root
    /// is written as bag 1.
    pub fn to_text(&self) -> String {
        // Renumber so that the root becomes node 1.
        let mut id: Vec<usize> = (0..self.bags.len()).collect();
        id.swap(0, self.root);
        let mut label = vec![0; self.bags.len()];
        for (new, &old) in id.iter().enumerate() {
            label[old] = new + 1;
        }
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let mut s = format!("s td {} {} {}\n", self.bags.len(), max_bag, self.n);
        for &old in &id {
            s.push_str(&format!("b {}", label[old]));
            for v in &self.bags[old] {
                s.push_str(&format!(" {v}"));
            }
            s.push('\n');
        }
        for (x, adj) in self.tree.iter().enumerate() {
            for &y in adj.iter().filter(|&&y| x < y) {
                s.push_str(&format!("{} {}\n", label[x], label[y]));
            }
        }
        s
    }
}

fn reachable(tree: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; tree.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &tree[x] {
            if !seen[y] && allowed(y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Parses the PACE-style format:
///
/// ```text
/// c comment
/// s td <#bags> <max bag size> <n>
/// b <id> <v> <v> ...     (ids 1-based, vertices 0-based)
/// <id> <id>              (tree edges)
/// ```
///
/// The root is bag 1. Conditions 1 and 3 are checked here; condition 2
/// needs the graph and is checked by [`TreeDecomposition::validate`].
pub fn parse_tree_decomposition(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('#') {
            continue;
        }
        let tok: Vec<&str> = t.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("`{s}` is not a number")))
        };
        let Some((nb, _, n)) = header else {
            if tok.len() != 5 || tok[0] != "s" || tok[1] != "td" {
                return Err(Error::parse(
                    line,
                    "expected `s td <#bags> <max bag size> <n>`",
                ));
            }
            let h = (num(tok[2])?, num(tok[3])?, num(tok[4])?);
            bags = vec![None; h.0];
            header = Some(h);
            continue;
        };
        if tok[0] == "b" {
            let id = num(tok
                .get(1)
                .ok_or_else(|| Error::parse(line, "bag line without id"))?)?;
            if id == 0 || id > nb {
                return Err(Error::parse(line, format!("bag id {id} outside 1..={nb}")));
            }
            let verts = tok[2..]
                .iter()
                .map(|s| num(s))
                .collect::<Result<Vec<_>>>()?;
            if let Some(&v) = verts.iter().find(|&&v| v >= n) {
                return Err(Error::parse(line, format!("vertex {v} outside 0..{n}")));
            }
            if bags[id - 1].replace(verts).is_some() {
                return Err(Error::parse(line, format!("bag {id} defined twice")));
            }
        } else {
            if tok.len() != 2 {
                return Err(Error::parse(line, "expected a tree edge `<id> <id>`"));
            }
            let (a, b) = (num(tok[0])?, num(tok[1])?);
            if a == 0 || b == 0 || a > nb || b > nb || a == b {
                return Err(Error::parse(line, format!("tree edge {a} {b} is invalid")));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let Some((_, max_bag, n)) = header else {
        return Err(Error::parse(last.max(1), "missing `s td` header"));
    };
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| Error::parse(last.max(1), format!("bag {} is never defined", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    if bags.iter().any(|b| b.len() > max_bag) {
        return Err(Error::parse(1, "a bag exceeds the declared maximum size"));
    }
    TreeDecomposition::new(n, bags, &edges, 0).map_err(|e| match e {
        Error::Contract(msg) => Error::parse(last.max(1), msg),
        other => other,
    })
}

/// Min-fill elimination (ties: smaller current degree, then smaller index).
/// Each eliminated vertex `v` yields the bag `{v} ∪ N(v)`; its parent is
/// the bag of the earliest-eliminated vertex of `N(v)`. Bags with empty
/// `N(v)` hang off the last bag, which is the root.
pub fn heuristic_tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(0, vec![Vec::new()], &[], 0).expect("single empty bag");
    }
    let mut h = g.clone();
    let mut alive = vec![true; n];
    let mut step = vec![0usize; n];
    let mut bags = Vec::with_capacity(n);
    let mut later = Vec::with_capacity(n);
    for s in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill_in(&h, v), h.degree(v), v))
            .expect("a live vertex");
        let nbrs: Vec<usize> = h.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                h.insert_edge(a, b);
            }
        }
        for &w in &nbrs {
            h.remove_edge(v, w);
        }
        alive[v] = false;
        step[v] = s;
        let mut bag = nbrs.clone();
        bag.push(v);
        bags.push(bag);
        later.push(nbrs);
    }
    let root = n - 1;
    let edges: Vec<(usize, usize)> = (0..n - 1)
        .map(|s| {
            let parent = later[s].iter().map(|&w| step[w]).min().unwrap_or(root);
            (s, parent)
        })
        .collect();
    TreeDecomposition::new(n, bags, &edges, root)
        .expect("elimination yields a valid tree decomposition")
}

fn fill_in(h: &Graph, v: usize) -> usize {
    let nbrs: Vec<usize> = h.neighbors(v).collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        missing += nbrs[i + 1..].iter().filter(|&&b| !h.has_edge(a, b)).count();
    }
    missing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use proptest::prelude::*;

    #[test]
    fn single_bag_triangle() {
        let td = parse_tree_decomposition("s td 1 3 3\nb 1 0 1 2\n").unwrap();
        assert_eq!(td.width(), 2);
        td.validate(&Graph::complete(3)).unwrap();
    }

    #[test]
    fn path_of_bags() {
        let text = "c P4\ns td 3 2 4\nb 1 0 1\nb 2 1 2\nb 3 2 3\n1 2\n2 3\n";
        let td = parse_tree_decomposition(text).unwrap();
        assert_eq!(td.width(), 1);
        td.validate(&path(4)).unwrap();
        assert_eq!(parse_tree_decomposition(&td.to_text()).unwrap(), td);
    }

    #[test]
    fn disconnected_trace_names_condition_three() {
        let text = "s td 3 2 4\nb 1 0 1\nb 2 2 3\nb 3 1 2\n1 2\n2 3\n";
        assert!(matches!(
            parse_tree_decomposition(text),
            Err(Error::TreeDecomposition { condition: 3, .. })
        ));
    }

    #[test]
    fn other_conditions_and_shape() {
        let uncovered = "s td 1 2 3\nb 1 0 1\n";
        assert!(matches!(
            parse_tree_decomposition(uncovered),
            Err(Error::TreeDecomposition { condition: 1, .. })
        ));
        let td = parse_tree_decomposition("s td 2 2 3\nb 1 0 1\nb 2 1 2\n1 2\n").unwrap();
        assert!(matches!(
            td.validate(&cycle(3)),
            Err(Error::TreeDecomposition { condition: 2, .. })
        ));
        assert!(matches!(
            parse_tree_decomposition("s td 2 1 2\nb 1 0\nb 2 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_tree_decomposition("s td 1 1 2\nb 1 0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn heuristic_widths() {
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(heuristic_tree_decomposition(&tree).width(), 1);
        assert_eq!(heuristic_tree_decomposition(&Graph::complete(5)).width(), 4);
        assert_eq!(heuristic_tree_decomposition(&cycle(6)).width(), 2);
        assert_eq!(heuristic_tree_decomposition(&Graph::empty(3)).width(), 0);
    }

    #[test]
    fn preorder_children_ascending() {
        let bags = vec![vec![0], vec![0], vec![0], vec![0]];
        let td = TreeDecomposition::new(1, bags, &[(0, 2), (0, 1), (1, 3)], 0).unwrap();
        assert_eq!(td.preorder(), vec![0, 1, 3, 2]);
        assert_eq!(td.depths(), vec![0, 1, 1, 2]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..14).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn heuristic_is_valid_and_round_trips(g in arb_graph()) {
            let td = heuristic_tree_decomposition(&g);
            prop_assert!(td.validate(&g).is_ok());
            let back = parse_tree_decomposition(&td.to_text()).unwrap();
            prop_assert!(back.validate(&g).is_ok());
            prop_assert_eq!(back.width(), td.width());
        }
    }
}
