use super::{Decomposition, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::tau_ordered;

/// Decomposes `g` into `|cover|` threshold supergraphs.
///
/// With `cover = v_1..v_b` and `A = V \ cover`: the first `b - 1` factors
/// isolate one cover vertex each (`tau(g, {v_i})`), and the last is
/// `tau(g, A, pi)` where `pi` lists `N(v_b) ∩ A` before the rest of `A`.
/// An edgeless graph yields the single factor `tau(g, V)`.
pub fn decompose_vertex_cover(g: &Graph, cover: &[usize]) -> Result<Decomposition> {
    let n = g.n();
    let mut in_cover = vec![false; n];
    for &v in cover {
        if v >= n || std::mem::replace(&mut in_cover[v], true) {
            return Err(Error::contract(format!(
                "cover entry {v} is out of range or repeated"
            )));
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !in_cover[u] && !in_cover[v]) {
        return Err(Error::contract(format!("edge {u}-{v} is not covered")));
    }

    if g.num_edges() == 0 {
        let all: Vec<usize> = (0..n).collect();
        let factor = tau_ordered(g, &all)?;
        return Decomposition::verified(g, vec![factor], Method::VertexCover, cover.len().max(1));
    }

    let (&last, rest) = cover
        .split_last()
        .expect("a graph with edges has a non-empty cover");
    let mut factors = Vec::with_capacity(cover.len());
    for &v in rest {
        factors.push(tau_ordered(g, &[v])?);
    }
    let outside: Vec<usize> = (0..n).filter(|&v| !in_cover[v]).collect();
    let (mut pi, later): (Vec<usize>, Vec<usize>) =
        outside.iter().partition(|&&a| g.has_edge(last, a));
    pi.extend(later);
    factors.push(tau_ordered(g, &pi)?);
    Decomposition::verified(g, factors, Method::VertexCover, cover.len())
}

/// Vertex cover by repeatedly taking a vertex of maximum remaining degree
/// (smallest index on ties).
pub fn greedy_vertex_cover(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut h = g.clone();
    let mut cover = Vec::new();
    loop {
        let best = (0..n).max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)));
        match best {
            Some(v) if h.degree(v) > 0 => {
                let nbrs: Vec<usize> = h.neighbors(v).collect();
                for w in nbrs {
                    h.remove_edge(v, w);
                }
                cover.push(v);
            }
            _ => break,
        }
    }
    cover.sort_unstable();
    cover
}
