//! Decompositions of a graph into an intersection of threshold supergraphs.

mod degeneracy;
mod treedec;
mod treewidth;
mod vertex_cover;

pub use degeneracy::{
    build_desirable_family, build_desirable_family_with, decompose_degeneracy,
    DesirableColoringFamily, FamilyConfig,
};
pub use treedec::{heuristic_tree_decomposition, parse_tree_decomposition, TreeDecomposition};
pub use treewidth::{decompose_treewidth, treewidth_layout, TreewidthLayout};
pub use vertex_cover::{decompose_vertex_cover, greedy_vertex_cover};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::ThresholdGraph;

/// Which construction produced a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    VertexCover,
    Degeneracy,
    Treewidth,
    MaxDegree,
    Exact,
    Manual,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::VertexCover => "vc",
            Method::Degeneracy => "degeneracy",
            Method::Treewidth => "treewidth",
            Method::MaxDegree => "maxdeg",
            Method::Exact => "exact",
            Method::Manual => "manual",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vc" | "vertex-cover" => Method::VertexCover,
            "degeneracy" => Method::Degeneracy,
            "treewidth" => Method::Treewidth,
            "maxdeg" => Method::MaxDegree,
            "exact" => Method::Exact,
            "manual" => Method::Manual,
            other => return Err(Error::contract(format!("unknown method `{other}`"))),
        })
    }
}

/// An ordered, non-empty list of threshold supergraphs whose edge-set
/// intersection is meant to equal the input graph.
#[derive(Debug, Clone)]
pub struct Decomposition {
    factors: Vec<ThresholdGraph>,
    method: Method,
    bound_claimed: usize,
    verified: bool,
}

impl Decomposition {
    /// Verifies `factors` against `g` and records the result. A failed
    /// verification is an [`Error::Internal`]: constructions never emit an
    /// unverified decomposition.
    pub fn verified(
        g: &Graph,
        factors: Vec<ThresholdGraph>,
        method: Method,
        bound_claimed: usize,
    ) -> Result<Self> {
        let d = Decomposition {
            factors,
            method,
            bound_claimed,
            verified: false,
        };
        match verify(g, &d)? {
            Verdict::Valid => Ok(Decomposition {
                verified: true,
                ..d
            }),
            Verdict::Invalid(c) => Err(Error::Internal(format!(
                "{method} decomposition failed verification: {c}"
            ))),
        }
    }

    /// A decomposition that has not been checked against any graph.
    pub fn unverified(
        factors: Vec<ThresholdGraph>,
        method: Method,
        bound_claimed: usize,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::contract("a decomposition needs at least one factor"));
        }
        Ok(Decomposition {
            factors,
            method,
            bound_claimed,
            verified: false,
        })
    }

    pub fn factors(&self) -> &[ThresholdGraph] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn bound_claimed(&self) -> usize {
        self.bound_claimed
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Text form: `td-decomp <method> <k>` followed by one creation-sequence
    /// line per factor.
    pub fn to_text(&self) -> String {
        let mut s = format!("td-decomp {} {}\n", self.method, self.factors.len());
        for f in &self.factors {
            s.push_str(&f.to_line());
            s.push('\n');
        }
        s
    }

    /// Parses [`Decomposition::to_text`] output. The result is unverified and
    /// claims its own length as bound.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty decomposition"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        if h.len() != 3 || h[0] != "td-decomp" {
            return Err(Error::parse(hline, "expected `td-decomp <method> <k>`"));
        }
        let method: Method = h[1]
            .parse()
            .map_err(|e: Error| Error::parse(hline, e.to_string()))?;
        let k: usize = h[2]
            .parse()
            .map_err(|_| Error::parse(hline, "bad factor count"))?;
        let factors = lines
            .map(|(no, l)| ThresholdGraph::parse_line(l, no))
            .collect::<Result<Vec<_>>>()?;
        if factors.len() != k {
            return Err(Error::parse(
                hline,
                format!("header announces {k} factors, found {}", factors.len()),
            ));
        }
        if let Some(first) = factors.first() {
            if factors.iter().any(|f| f.n() != first.n()) {
                return Err(Error::parse(hline, "factors live on different vertex sets"));
            }
        }
        Decomposition::unverified(factors, method, k)
            .map_err(|e| Error::parse(hline, e.to_string()))
    }
}

/// The first reason a decomposition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// An edge of the graph is absent from `factor`.
    EdgeMissing { factor: usize, u: usize, v: usize },
    /// A non-edge of the graph survives in every factor.
    NonEdgeKept { u: usize, v: usize },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::EdgeMissing { factor, u, v } => {
                write!(f, "edge {u}-{v} missing from factor {factor}")
            }
            Counterexample::NonEdgeKept { u, v } => {
                write!(f, "non-edge {u}-{v} present in every factor")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Counterexample),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks that every factor contains `g` and that every non-edge of `g` is
/// missing from some factor.
pub fn verify(g: &Graph, d: &Decomposition) -> Result<Verdict> {
    verify_factors(g, d.factors())
}

pub fn verify_factors(g: &Graph, factors: &[ThresholdGraph]) -> Result<Verdict> {
    if factors.is_empty() {
        return Err(Error::contract("a decomposition needs at least one factor"));
    }
    if let Some((i, f)) = factors.iter().enumerate().find(|(_, f)| f.n() != g.n()) {
        return Err(Error::contract(format!(
            "factor {i} has {} vertices, graph has {}",
            f.n(),
            g.n()
        )));
    }
    let mut meet = Graph::complete(g.n());
    for (i, f) in factors.iter().enumerate() {
        if !g.is_subgraph_of(f.graph()) {
            let (u, v) = g
                .edges()
                .find(|&(u, v)| !f.graph().has_edge(u, v))
                .expect("missing edge");
            return Ok(Verdict::Invalid(Counterexample::EdgeMissing {
                factor: i,
                u,
                v,
            }));
        }
        meet.intersect_with(f.graph());
    }
    let kept = meet.edges().find(|&(u, v)| !g.has_edge(u, v));
    Ok(match kept {
        Some((u, v)) => Verdict::Invalid(Counterexample::NonEdgeKept { u, v }),
        None => Verdict::Valid,
    })
}

/// `⌈ln n⌉` as an integer (0 for `n <= 1`).
pub(crate) fn ceil_ln(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (n as f64).ln().ceil() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::threshold::recognize_threshold;

    fn th(g: &Graph) -> ThresholdGraph {
        recognize_threshold(g).threshold().expect("threshold input")
    }

    #[test]
    fn path_two_supergraphs() {
        let p4 = path(4);
        let f1 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let f2 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2), (0, 3)]).unwrap();
        let d = Decomposition::unverified(vec![th(&f1), th(&f2)], Method::Manual, 2).unwrap();
        assert_eq!(verify(&p4, &d).unwrap(), Verdict::Valid);
    }

    #[test]
    fn complete_factor_keeps_a_non_edge() {
        let d =
            Decomposition::unverified(vec![th(&Graph::complete(4))], Method::Manual, 1).unwrap();
        assert_eq!(
            verify(&path(4), &d).unwrap(),
            Verdict::Invalid(Counterexample::NonEdgeKept { u: 0, v: 2 })
        );
    }

    #[test]
    fn threshold_graph_is_its_own_decomposition() {
        let g = star(5);
        let d = Decomposition::verified(&g, vec![th(&g)], Method::Manual, 1).unwrap();
        assert!(d.is_verified());
    }

    #[test]
    fn missing_edge_is_reported() {
        let d = Decomposition::unverified(vec![th(&Graph::empty(4))], Method::Manual, 1).unwrap();
        assert_eq!(
            verify(&path(4), &d).unwrap(),
            Verdict::Invalid(Counterexample::EdgeMissing {
                factor: 0,
                u: 0,
                v: 1
            })
        );
    }

    #[test]
    fn vertex_set_mismatch_is_an_error() {
        let d =
            Decomposition::unverified(vec![th(&Graph::complete(3))], Method::Manual, 1).unwrap();
        assert!(verify(&path(4), &d).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = cycle(7);
        let d = decompose_degeneracy(&g, 3).unwrap();
        let back = Decomposition::parse(&d.to_text()).unwrap();
        assert_eq!(back.method(), Method::Degeneracy);
        assert_eq!(back.factors(), d.factors());
        assert!(verify(&g, &back).unwrap().is_valid());
        assert!(Decomposition::parse("td-decomp vc 2\nts 2 0i 1d\n").is_err());
        assert!(Decomposition::parse("td-decomp vc 2\nts 2 0i 1d\nts 3 0i 1d 2d\n").is_err());
    }

    #[test]
    fn ceil_ln_values() {
        assert_eq!(ceil_ln(1), 0);
        assert_eq!(ceil_ln(2), 1);
        assert_eq!(ceil_ln(8), 3);
        assert_eq!(ceil_ln(10), 3);
        assert_eq!(ceil_ln(50), 4);
    }
}
