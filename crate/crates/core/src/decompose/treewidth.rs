use super::{Decomposition, Method, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{greedy_coloring, Graph, OrderingKind, ProperColoring, VertexOrdering};
use crate::threshold::tau_ordered;

/// The intermediate objects of the treewidth construction.
#[derive(Debug, Clone)]
pub struct TreewidthLayout {
    /// `top_bag[v]`: the bag containing `v` closest to the root.
    pub top_bag: Vec<usize>,
    /// Tree nodes in preorder.
    pub preorder: Vec<usize>,
    /// Vertices sorted by the preorder position of `top_bag`, ties by index.
    pub sigma: VertexOrdering,
    /// Coloring with distinct colors inside every bag.
    pub theta: ProperColoring,
}

/// Computes `b(v)`, the preorder, `sigma` and `theta` for a valid `td`.
pub fn treewidth_layout(g: &Graph, td: &TreeDecomposition) -> Result<TreewidthLayout> {
    td.validate(g)?;
    let n = g.n();
    let depth = td.depths();
    let mut top_bag = vec![usize::MAX; n];
    for (node, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            if top_bag[v] == usize::MAX || (depth[node], node) < (depth[top_bag[v]], top_bag[v]) {
                top_bag[v] = node;
            }
        }
    }
    let preorder = td.preorder();
    let mut pre_pos = vec![0; td.num_bags()];
    for (i, &x) in preorder.iter().enumerate() {
        pre_pos[x] = i;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (pre_pos[top_bag[v]], v));
    let sigma = VertexOrdering::new(order, OrderingKind::PreorderDerived)?;

    let mut completed = g.clone();
    for bag in td.bags() {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                completed.insert_edge(u, v);
            }
        }
    }
    let theta = greedy_coloring(&completed, &sigma);
    if theta.palette_size() > td.width() + 1 {
        return Err(Error::Internal(format!(
            "bag coloring used {} colors for width {}",
            theta.palette_size(),
            td.width()
        )));
    }
    Ok(TreewidthLayout {
        top_bag,
        preorder,
        sigma,
        theta,
    })
}

/// For each color class `C` of `theta`, the pair `tau(g, C, sigma|_C)` and
/// `tau(g, C, reverse(sigma)|_C)`. At most `2(w + 1)` factors.
pub fn decompose_treewidth(g: &Graph, td: &TreeDecomposition) -> Result<Decomposition> {
    let layout = treewidth_layout(g, td)?;
    let reversed = layout.sigma.reversed();
    let mut factors = Vec::new();
    for class in layout.theta.classes().into_iter().filter(|c| !c.is_empty()) {
        factors.push(tau_ordered(g, &layout.sigma.restrict(&class))?);
        factors.push(tau_ordered(g, &reversed.restrict(&class))?);
    }
    if factors.is_empty() {
        factors.push(tau_ordered(g, &[])?);
    }
    Decomposition::verified(g, factors, Method::Treewidth, 2 * (td.width() + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::heuristic_tree_decomposition;
    use crate::exact::exact_dimension;
    use crate::graph::named::*;
    use proptest::prelude::*;

    fn example_td(n: usize) -> TreeDecomposition {
        // a_i = i, b_i = n + i; bag 0 = B, bag i = {a_i} ∪ B \ {b_i}.
        let b: Vec<usize> = (n..2 * n).collect();
        let mut bags = vec![b.clone()];
        for i in 0..n {
            let mut bag: Vec<usize> = b.iter().copied().filter(|&x| x != n + i).collect();
            bag.push(i);
            bags.push(bag);
        }
        let edges: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
        TreeDecomposition::new(2 * n, bags, &edges, 0).unwrap()
    }

    #[test]
    fn tight_example_with_its_decomposition() {
        let h = tight_example(3);
        let td = example_td(3);
        assert_eq!(td.width(), 2);
        td.validate(&h).unwrap();
        let d = decompose_treewidth(&h, &td).unwrap();
        assert!(d.len() <= 6);
    }

    #[test]
    fn trees_need_at_most_four() {
        let tree =
            Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)]).unwrap();
        let td = heuristic_tree_decomposition(&tree);
        assert_eq!(td.width(), 1);
        assert!(decompose_treewidth(&tree, &td).unwrap().len() <= 4);
    }

    #[test]
    fn two_triangles_between_exact_and_bound() {
        let g = two_cliques(3);
        let td = heuristic_tree_decomposition(&g);
        assert_eq!(td.width(), 2);
        let d = decompose_treewidth(&g, &td).unwrap();
        let exact = exact_dimension(&g).unwrap().dimension;
        assert_eq!(exact, 3);
        assert!(exact <= d.len() && d.len() <= 6);
    }

    #[test]
    fn invalid_decomposition_is_rejected() {
        let td = TreeDecomposition::new(4, vec![vec![0, 1, 2, 3]], &[], 0).unwrap();
        assert!(decompose_treewidth(&path(3), &td).is_err());
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![2]], &[(0, 1)], 0).unwrap();
        assert!(matches!(
            decompose_treewidth(&path(3), &td),
            Err(Error::TreeDecomposition { condition: 2, .. })
        ));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..13).prop_flat_map(|n| {
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
        fn layout_invariants(g in arb_graph()) {
            let td = heuristic_tree_decomposition(&g);
            let lay = treewidth_layout(&g, &td).unwrap();
            let mut pre_pos = vec![0; td.num_bags()];
            for (i, &x) in lay.preorder.iter().enumerate() {
                pre_pos[x] = i;
            }
            let s = lay.sigma.order();
            for w in s.windows(2) {
                prop_assert!(pre_pos[lay.top_bag[w[0]]] <= pre_pos[lay.top_bag[w[1]]]);
            }
            for bag in td.bags() {
                let mut seen: Vec<usize> = bag.iter().map(|&v| lay.theta.color(v)).collect();
                seen.sort_unstable();
                seen.dedup();
                prop_assert_eq!(seen.len(), bag.len());
            }
            let depth = td.depths();
            for v in 0..g.n() {
                let b = lay.top_bag[v];
                prop_assert!(td.bag(b).contains(&v));
                prop_assert!(td.bags().iter().enumerate().all(|(x, bag)| !bag.contains(&v) || depth[x] >= depth[b]));
            }
            let d = decompose_treewidth(&g, &td).unwrap();
            prop_assert!(d.len() <= 2 * (td.width() + 1));
        }
    }
}
