//! Finite automata with rational-function edge weights.

use num_traits::Zero;

use crate::algebra::{solve_linear_system, RatFun, Solution};
use crate::error::{Error, Result};

use super::gf::{piece_gf, Piece};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: RatFun,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAutomaton {
    states: usize,
    edges: Vec<Edge>,
    start: usize,
    accept: usize,
}

impl WeightedAutomaton {
    pub fn new(states: usize, start: usize, accept: usize) -> Result<Self> {
        if start >= states || accept >= states {
            return Err(Error::InvalidArgument(format!(
                "start {start} / accept {accept} out of range for {states} states"
            )));
        }
        Ok(WeightedAutomaton {
            states,
            edges: Vec::new(),
            start,
            accept,
        })
    }

    /// Weights must have a Maclaurin expansion.
    pub fn add_edge(&mut self, from: usize, to: usize, weight: RatFun) -> Result<()> {
        if from >= self.states || to >= self.states {
            return Err(Error::InvalidArgument(format!("edge {from} -> {to} out of range")));
        }
        if weight.den().coeff(0).is_zero() {
            return Err(Error::BadEdgeWeight);
        }
        self.edges.push(Edge { from, to, weight });
        Ok(())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sum over all start-to-accept paths of the product of edge weights.
    ///
    /// With `x_s` the path sum from `s` to the accept state,
    /// `x_s = [s = accept] + sum_{s -> q} w * x_q`; this linear system is
    /// solved exactly over the field of rational functions.
    pub fn path_gf(&self) -> Result<RatFun> {
        let n = self.states;
        let mut a: Vec<Vec<RatFun>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { RatFun::one() } else { RatFun::zero() })
                    .collect()
            })
            .collect();
        for e in &self.edges {
            a[e.from][e.to] = &a[e.from][e.to] - &e.weight;
        }
        let b: Vec<RatFun> = (0..n)
            .map(|i| if i == self.accept { RatFun::one() } else { RatFun::zero() })
            .collect();
        match solve_linear_system(&a, &b)? {
            Solution::Unique(x) => Ok(x[self.start].clone()),
            _ => Err(Error::DivergentAutomaton),
        }
    }
}

/// The chain `q0 -U-> q1 (-L-> q1)* -I-> q2 -U'-> accept`.
pub fn grammar_automaton() -> WeightedAutomaton {
    let mut a = WeightedAutomaton::new(4, 0, 3).expect("valid states");
    let edges = [
        (0, 1, Piece::U),
        (1, 1, Piece::LSingle),
        (1, 2, Piece::I),
        (2, 3, Piece::UPrime),
    ];
    for (from, to, piece) in edges {
        a.add_edge(from, to, piece_gf(piece)).expect("piece gfs expand at 0");
    }
    a
}

pub fn gf_via_weighted_automaton() -> Result<RatFun> {
    grammar_automaton().path_gf()
}
