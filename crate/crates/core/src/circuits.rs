//! Graphic Boolean functions, their 2-CNF form, and AND-of-LTF circuits
//! compiled from decompositions.

use std::fmt;

use num_bigint::BigInt;

use crate::decompose::{verify, Decomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ltf::{
    extract_ltf, verify_gates, Checked, LtfWitness, Mismatch, VerifyMode, EXHAUSTIVE_LIMIT,
};

/// `f_G(x) = 1` iff the support of `x` is a clique of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicFunction {
    graph: Graph,
}

impl GraphicFunction {
    pub fn new(graph: Graph) -> Self {
        GraphicFunction { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arity(&self) -> usize {
        self.graph.n()
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        check_arity(self.arity(), x.len())?;
        let support: Vec<usize> = (0..x.len()).filter(|&i| x[i]).collect();
        Ok(self.graph.is_clique(&support))
    }
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::contract(format!(
            "input has {got} bits, function arity is {expected}"
        )));
    }
    Ok(())
}

/// A possibly negated variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn eval(self, x: &[bool]) -> bool {
        x[self.var] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// A disjunction of literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(pub Vec<Literal>);

impl Clause {
    pub fn eval(&self, x: &[bool]) -> bool {
        self.0.iter().any(|l| l.eval(x))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// One clause `(~x_i | ~x_j)` per non-edge `i < j`.
pub fn to_2cnf(g: &Graph) -> Vec<Clause> {
    g.non_edges()
        .map(|(i, j)| Clause(vec![Literal::neg(i), Literal::neg(j)]))
        .collect()
}

/// The graph on `n` vertices whose non-edges are exactly the clause pairs.
/// Every clause must be `(~x_i | ~x_j)` with `i != j`.
pub fn from_2cnf(n: usize, clauses: &[Clause]) -> Result<Graph> {
    let mut g = Graph::complete(n);
    for (idx, c) in clauses.iter().enumerate() {
        match c.0.as_slice() {
            [a, b] if a.negated && b.negated && a.var != b.var && a.var < n && b.var < n => {
                g.remove_edge(a.var, b.var);
            }
            _ => {
                return Err(Error::contract(format!(
                    "clause {idx} {c} is not of the form (~x_i | ~x_j) over distinct variables below {n}"
                )))
            }
        }
    }
    Ok(g)
}

/// Conjunction of clauses at `x`.
pub fn eval_cnf(clauses: &[Clause], x: &[bool]) -> bool {
    clauses.iter().all(|c| c.eval(x))
}

/// Output is the AND over gates of `[Σ a_i x_i <= b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityCircuit {
    arity: usize,
    gates: Vec<LtfWitness>,
}

impl MajorityCircuit {
    pub fn new(arity: usize, gates: Vec<LtfWitness>) -> Result<Self> {
        if let Some(i) = gates.iter().position(|g| g.arity() != arity) {
            return Err(Error::contract(format!(
                "gate {i} has arity {}, circuit has {arity}",
                gates[i].arity()
            )));
        }
        Ok(MajorityCircuit { arity, gates })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gates(&self) -> &[LtfWitness] {
        &self.gates
    }

    pub fn gates_mut(&mut self) -> &mut [LtfWitness] {
        &mut self.gates
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        check_arity(self.arity, x.len())?;
        Ok(self.gates.iter().all(|g| g.accepts(x)))
    }

    /// `ltf-and <arity> <count>`, then `gate <b> <a_0> ... <a_{n-1}>`.
    pub fn to_text(&self) -> String {
        let mut s = format!("ltf-and {} {}\n", self.arity, self.gates.len());
        for g in &self.gates {
            s.push_str(&format!("gate {}", g.bound));
            for a in &g.weights {
                s.push_str(&format!(" {a}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty circuit"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        if h.len() != 3 || h[0] != "ltf-and" {
            return Err(Error::parse(
                hline,
                "expected `ltf-and <arity> <gate count>`",
            ));
        }
        let arity: usize = h[1].parse().map_err(|_| Error::parse(hline, "bad arity"))?;
        let count: usize = h[2]
            .parse()
            .map_err(|_| Error::parse(hline, "bad gate count"))?;
        let mut gates = Vec::with_capacity(count);
        for (no, line) in lines {
            let tok: Vec<&str> = line.split_whitespace().collect();
            if tok[0] != "gate" || tok.len() != arity + 2 {
                return Err(Error::parse(
                    no,
                    format!("expected `gate <b>` followed by {arity} weights"),
                ));
            }
            let num = |s: &str| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::parse(no, format!("`{s}` is not an integer")))
            };
            let bound = num(tok[1])?;
            let weights = tok[2..]
                .iter()
                .map(|s| num(s))
                .collect::<Result<Vec<_>>>()?;
            gates.push(LtfWitness::new(weights, bound));
        }
        if gates.len() != count {
            return Err(Error::parse(
                hline,
                format!("header announces {count} gates, found {}", gates.len()),
            ));
        }
        MajorityCircuit::new(arity, gates)
    }
}

/// One gate per factor of a verified decomposition.
pub fn compile_circuit(g: &Graph, d: &Decomposition) -> Result<MajorityCircuit> {
    if !d.is_verified() && !verify(g, d)?.is_valid() {
        return Err(Error::contract(
            "refusing to compile a decomposition that does not verify",
        ));
    }
    if d.factors().first().map(|f| f.n()) != Some(g.n()) {
        return Err(Error::contract(
            "decomposition and graph differ in vertex count",
        ));
    }
    let gates = d
        .factors()
        .iter()
        .map(extract_ltf)
        .collect::<Result<Vec<_>>>()?;
    MajorityCircuit::new(g.n(), gates)
}

/// Outcome of [`verify_circuit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitVerdict {
    Valid(Checked),
    Invalid(Mismatch),
}

impl CircuitVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, CircuitVerdict::Valid(_))
    }
}

/// Compares the circuit with `f` on every vector (exhaustive) or on the
/// zero vector, singletons, pairs and seeded random vectors (sampled).
pub fn verify_circuit(
    f: &GraphicFunction,
    c: &MajorityCircuit,
    mode: &VerifyMode,
) -> Result<CircuitVerdict> {
    check_arity(f.arity(), c.arity())?;
    if matches!(mode, VerifyMode::Exhaustive) && c.arity() > EXHAUSTIVE_LIMIT {
        return Err(Error::LimitExceeded {
            what: "exhaustive circuit verification",
            n: c.arity(),
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(match verify_gates(f.graph(), c.gates(), mode) {
        Ok(ch) => CircuitVerdict::Valid(ch),
        Err(m) => CircuitVerdict::Invalid(m),
    })
}

/// The graph with edge `ij` iff every gate accepts the pair vector `v^{ij}`.
pub fn ltfs_to_graph(gates: &[LtfWitness]) -> Result<Graph> {
    let Some(first) = gates.first() else {
        return Err(Error::contract(
            "at least one gate is needed to fix the arity",
        ));
    };
    let n = first.arity();
    if gates.iter().any(|g| g.arity() != n) {
        return Err(Error::contract("gates disagree on arity"));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if gates.iter().all(|t| t.accepts_support(&[i, j])) {
                g.insert_edge(i, j);
            }
        }
    }
    Ok(g)
}
