//! Exact domination number by branch and bound over bitmask neighborhoods.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_VERTEX_LIMIT: usize = 24;
/// Hard ceiling imposed by the `u64` bitmask representation.
pub const MAX_VERTEX_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub gamma: usize,
    /// A minimum dominating set, sorted.
    pub witness: Vec<Vertex>,
    pub nodes_explored: u64,
}

struct Search {
    closed: Vec<u64>,
    /// Vertices by descending degree, ties by id.
    order: Vec<Vertex>,
    full: u64,
    max_cover: u32,
    best: Vec<Vertex>,
    nodes: u64,
}

impl Search {
    fn greedy_incumbent(&self) -> Vec<Vertex> {
        let mut dominated = 0u64;
        let mut set = Vec::new();
        while dominated != self.full {
            let v = self
                .order
                .iter()
                .copied()
                .max_by_key(|&v| ((self.closed[v] & !dominated).count_ones(), std::cmp::Reverse(v)))
                .expect("non-empty graph");
            dominated |= self.closed[v];
            set.push(v);
        }
        set
    }

    fn branch(&mut self, dominated: u64, partial: &mut Vec<Vertex>) {
        self.nodes += 1;
        if dominated == self.full {
            if partial.len() < self.best.len() {
                self.best = partial.clone();
            }
            return;
        }
        let remaining = (self.full & !dominated).count_ones();
        let lower = remaining.div_ceil(self.max_cover) as usize;
        if partial.len() + lower >= self.best.len() {
            return;
        }
        // branch on the undominated vertex with the fewest possible dominators
        let mut undominated = self.full & !dominated;
        let mut target = None;
        let mut fewest = u32::MAX;
        while undominated != 0 {
            let u = undominated.trailing_zeros() as usize;
            undominated &= undominated - 1;
            let options = self.closed[u].count_ones();
            if options < fewest {
                fewest = options;
                target = Some(u);
            }
        }
        let target = target.expect("some vertex is undominated");
        let candidates: Vec<Vertex> = self
            .order
            .iter()
            .copied()
            .filter(|&w| self.closed[target] >> w & 1 == 1)
            .collect();
        for w in candidates {
            partial.push(w);
            self.branch(dominated | self.closed[w], partial);
            partial.pop();
        }
    }
}

/// Exact `γ(g)`. Refuses graphs above `vertex_limit` vertices rather than
/// approximating.
pub fn exact_domination_number(g: &Graph, vertex_limit: usize) -> Result<OracleResult> {
    if vertex_limit > MAX_VERTEX_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "vertex limit {vertex_limit} exceeds the supported maximum {MAX_VERTEX_LIMIT}"
        )));
    }
    let n = g.n();
    if n > vertex_limit {
        return Err(Error::OracleLimit { n, limit: vertex_limit });
    }
    if n == 0 {
        return Ok(OracleResult { gamma: 0, witness: Vec::new(), nodes_explored: 0 });
    }

    let closed: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |acc, &u| acc | 1u64 << u))
        .collect();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut search = Search {
        closed,
        order,
        full,
        max_cover: g.max_degree() as u32 + 1,
        best: Vec::new(),
        nodes: 0,
    };
    search.best = search.greedy_incumbent();
    search.branch(0, &mut Vec::new());

    let mut witness = search.best;
    witness.sort_unstable();
    Ok(OracleResult {
        gamma: witness.len(),
        witness,
        nodes_explored: search.nodes,
    })
}
