//! Everything known about one graph's threshold dimension: the exact value
//! when small enough, lower bounds, and the factor count of every method.

use std::fmt;

use crate::decompose::{
    decompose_degeneracy, decompose_treewidth, decompose_vertex_cover, greedy_vertex_cover,
    heuristic_tree_decomposition, Method,
};
use crate::error::{Error, Result};
use crate::exact::{
    exact_dimension, lower_bound_clique_chromatic, upper_bound_ramsey_style, EXACT_DIMENSION_LIMIT,
};
use crate::graph::{minimum_vertex_cover, ExactLimits, Graph};
use crate::maxdeg::decompose_maxdeg;
use crate::threshold::recognize_threshold;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportConfig {
    /// Largest `n` for the exact dimension (at most 8).
    pub exact_cap: usize,
    pub seed: u64,
    pub limits: ExactLimits,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            exact_cap: EXACT_DIMENSION_LIMIT,
            seed: 0,
            limits: ExactLimits::default(),
        }
    }
}

/// Factor count and claimed bound of one constructive method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MethodResult {
    pub method: Method,
    pub factors: usize,
    pub bound_claimed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: usize,
    pub edges: usize,
    pub exact: Option<usize>,
    pub lower_bounds: Vec<(&'static str, usize)>,
    /// Method factor counts plus `n - max(omega, alpha)`.
    pub upper_bounds: Vec<(&'static str, usize)>,
    pub methods: Vec<MethodResult>,
    /// Bounds or methods that were not computed, with the reason.
    pub skipped: Vec<(&'static str, String)>,
}

impl DimensionReport {
    pub fn max_lower(&self) -> usize {
        self.lower_bounds.iter().map(|b| b.1).max().unwrap_or(1)
    }

    pub fn min_upper(&self) -> Option<usize> {
        self.upper_bounds.iter().map(|b| b.1).min()
    }

    /// Every lower bound is at most every upper bound, and the exact value
    /// (if any) lies between them.
    pub fn is_consistent(&self) -> bool {
        let lo = self.max_lower();
        let hi = self.min_upper().unwrap_or(usize::MAX);
        lo <= hi && self.exact.is_none_or(|e| lo <= e && e <= hi)
    }

    /// `kind,name,value` lines.
    pub fn to_rows(&self) -> String {
        let mut s = String::from("kind,name,value\n");
        s.push_str(&format!(
            "graph,vertices,{}\ngraph,edges,{}\n",
            self.n, self.edges
        ));
        if let Some(e) = self.exact {
            s.push_str(&format!("exact,dimension,{e}\n"));
        }
        for (name, v) in &self.lower_bounds {
            s.push_str(&format!("lower,{name},{v}\n"));
        }
        for (name, v) in &self.upper_bounds {
            s.push_str(&format!("upper,{name},{v}\n"));
        }
        for m in &self.methods {
            s.push_str(&format!("claimed,{},{}\n", m.method, m.bound_claimed));
        }
        for (name, why) in &self.skipped {
            s.push_str(&format!("skipped,{name},{}\n", why.replace(',', ";")));
        }
        s
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<(String, String)> = vec![
            ("vertices".into(), self.n.to_string()),
            ("edges".into(), self.edges.to_string()),
            (
                "exact".into(),
                self.exact
                    .map_or_else(|| "not computed".into(), |e| e.to_string()),
            ),
        ];
        for (name, v) in &self.lower_bounds {
            lines.push((format!("lower {name}"), v.to_string()));
        }
        for (name, v) in &self.upper_bounds {
            lines.push((format!("upper {name}"), v.to_string()));
        }
        for m in &self.methods {
            lines.push((format!("claimed {}", m.method), m.bound_claimed.to_string()));
        }
        for (name, why) in &self.skipped {
            lines.push((format!("skipped {name}"), why.clone()));
        }
        let width = lines.iter().map(|l| l.0.len()).max().unwrap_or(0);
        for (k, v) in lines {
            writeln!(f, "{k:<width$}  {v}")?;
        }
        Ok(())
    }
}

fn skip_reason(e: &Error) -> String {
    e.to_string()
}

/// Computes every bound that applies within the configured limits.
pub fn dimension_report(g: &Graph, config: &ReportConfig) -> Result<DimensionReport> {
    let n = g.n();
    let mut lower_bounds = Vec::new();
    let mut upper_bounds = Vec::new();
    let mut methods = Vec::new();
    let mut skipped = Vec::new();

    let exact = if n <= config.exact_cap.min(EXACT_DIMENSION_LIMIT) {
        Some(exact_dimension(g)?.dimension)
    } else {
        skipped.push((
            "exact",
            format!("n = {n} exceeds the exact cap {}", config.exact_cap),
        ));
        None
    };

    match lower_bound_clique_chromatic(g, &config.limits) {
        Ok(v) => lower_bounds.push(("clique-chromatic", v)),
        Err(e) => skipped.push(("clique-chromatic", skip_reason(&e))),
    }
    let threshold = recognize_threshold(g).is_threshold();
    lower_bounds.push(("non-threshold", if threshold { 1 } else { 2 }));

    let mut record = |name: &'static str, r: Result<crate::decompose::Decomposition>| match r {
        Ok(d) => {
            upper_bounds.push((name, d.len()));
            methods.push(MethodResult {
                method: d.method(),
                factors: d.len(),
                bound_claimed: d.bound_claimed(),
            });
            Ok(())
        }
        Err(Error::Internal(msg)) => Err(Error::Internal(msg)),
        Err(e) => {
            skipped.push((name, skip_reason(&e)));
            Ok(())
        }
    };
    let cover = minimum_vertex_cover(g, &config.limits).unwrap_or_else(|_| greedy_vertex_cover(g));
    record("vertex-cover", decompose_vertex_cover(g, &cover))?;
    record("degeneracy", decompose_degeneracy(g, config.seed))?;
    record(
        "treewidth",
        decompose_treewidth(g, &heuristic_tree_decomposition(g)),
    )?;
    record("maxdeg", decompose_maxdeg(g, config.seed))?;

    match upper_bound_ramsey_style(g, &config.limits) {
        Ok(v) => upper_bounds.push(("n-max(omega,alpha)", v)),
        Err(e) => skipped.push(("n-max(omega,alpha)", skip_reason(&e))),
    }
    if let Some(e) = exact {
        upper_bounds.push(("exact", e));
    }

    Ok(DimensionReport {
        n,
        edges: g.num_edges(),
        exact,
        lower_bounds,
        upper_bounds,
        methods,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn report(g: &Graph) -> DimensionReport {
        dimension_report(g, &ReportConfig::default()).unwrap()
    }

    #[test]
    fn two_triangles() {
        let r = report(&two_cliques(3));
        assert_eq!(r.exact, Some(3));
        assert!(r.lower_bounds.contains(&("clique-chromatic", 3)));
        assert!(r.is_consistent());
    }

    #[test]
    fn complete_graph() {
        let r = report(&Graph::complete(5));
        assert_eq!(r.exact, Some(1));
        assert!(r.lower_bounds.contains(&("non-threshold", 1)));
        assert!(r.upper_bounds.contains(&("n-max(omega,alpha)", 1)));
        assert!(r.is_consistent());
    }

    #[test]
    fn five_cycle() {
        // a threshold graph inside the complement C5 has at most two edges
        let r = report(&cycle(5));
        assert_eq!(r.exact, Some(3));
        assert!(r.max_lower() >= 2);
        assert!(r.upper_bounds.contains(&("n-max(omega,alpha)", 3)));
        assert!(r.is_consistent());
        assert!(r.to_string().contains("exact"));
        assert!(r.to_rows().contains("exact,dimension,3\n"));
    }

    #[test]
    fn large_graph_skips_exact() {
        let r = report(&cycle(30));
        assert_eq!(r.exact, None);
        assert!(r.skipped.iter().any(|s| s.0 == "exact"));
        assert!(r.skipped.iter().any(|s| s.0 == "clique-chromatic"));
        assert!(r.is_consistent());
    }

    #[test]
    fn method_preconditions_are_skips() {
        let r = report(&Graph::empty(1));
        assert!(r.skipped.iter().any(|s| s.0 == "degeneracy"));
        assert!(r.skipped.iter().any(|s| s.0 == "maxdeg"));
        assert_eq!(r.exact, Some(1));
    }
}
