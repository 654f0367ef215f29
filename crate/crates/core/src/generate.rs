//! Deterministic generators for test families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Complete { n: usize },
    Cycle { n: usize },
    CompleteBipartite { p: usize, q: usize },
    /// Vertex `i` is joined to `i ± k (mod n)` for every offset `k`.
    Circulant { n: usize, offsets: Vec<usize> },
    RandomRegular { n: usize, d: usize, seed: u64 },
    RandomMinDegree { n: usize, d: usize, extra: usize, seed: u64 },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    generate_with_cap(kind, DEFAULT_MAX_ATTEMPTS)
}

/// Like [`generate`], with an explicit restart cap for the random regular
/// sampler.
pub fn generate_with_cap(kind: &GraphKind, max_attempts: usize) -> Result<Graph> {
    match *kind {
        GraphKind::Complete { n } => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges)
        }
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::CompleteBipartite { p, q } => {
            let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
            Graph::from_edges(p + q, edges)
        }
        GraphKind::Circulant { n, ref offsets } => circulant(n, offsets),
        GraphKind::RandomRegular { n, d, seed } => random_regular(n, d, seed, max_attempts),
        GraphKind::RandomMinDegree { n, d, extra, seed } => random_min_degree(n, d, extra, seed),
    }
}

fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("circulant needs n >= 3, got {n}")));
    }
    if let Some(&k) = offsets.iter().find(|&&k| k == 0 || k > n / 2) {
        return Err(Error::InvalidParameter(format!(
            "circulant offset {k} outside 1..={}",
            n / 2
        )));
    }
    let edges = (0..n).flat_map(|i| offsets.iter().map(move |&k| (i, (i + k) % n)));
    Graph::from_edges(n, edges)
}

/// Configuration model: `d` stubs per vertex, paired uniformly at random.
/// A draw that would create a loop or a repeated edge is rejected and
/// redrawn; when no admissible pair can be found the whole pairing restarts.
fn random_regular(n: usize, d: usize, seed: u64, max_attempts: usize) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n*d must be even (n={n}, d={d})")));
    }
    if d >= n && !(n == 0 && d == 0) {
        return Err(Error::InvalidParameter(format!(
            "a {d}-regular graph needs more than {d} vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..max_attempts {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut adj = vec![BTreeSet::new(); n];
        let mut edges = Vec::with_capacity(n * d / 2);
        while !stubs.is_empty() {
            let mut found = None;
            // redraw budget proportional to the remaining stubs
            for _ in 0..(50 * stubs.len()).max(100) {
                let i = rng.gen_range(0..stubs.len());
                let j = rng.gen_range(0..stubs.len());
                let (u, v) = (stubs[i], stubs[j]);
                if i != j && u != v && !adj[u].contains(&v) {
                    found = Some((i, j));
                    break;
                }
            }
            let Some((i, j)) = found else {
                continue 'attempt;
            };
            let (u, v) = (stubs[i], stubs[j]);
            adj[u].insert(v);
            adj[v].insert(u);
            edges.push((u, v));
            let (hi, lo) = if i > j { (i, j) } else { (j, i) };
            stubs.swap_remove(hi);
            stubs.swap_remove(lo);
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::RetryCapExceeded { attempts: max_attempts })
}

/// Starts from the empty graph and repeatedly joins a uniformly chosen
/// deficient vertex (degree < d) to a uniformly chosen non-neighbor until the
/// minimum degree reaches `d`, then adds `extra` uniformly random non-edges.
fn random_min_degree(n: usize, d: usize, extra: usize, seed: u64) -> Result<Graph> {
    if d >= n && n > 0 {
        return Err(Error::InvalidParameter(format!(
            "minimum degree {d} impossible on {n} vertices"
        )));
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![BTreeSet::new(); n];
    let mut m = 0;

    loop {
        let deficient: Vec<Vertex> = (0..n).filter(|&v| adj[v].len() < d).collect();
        let Some(&u) = deficient.choose(&mut rng) else {
            break;
        };
        let candidates: Vec<Vertex> = (0..n).filter(|&v| v != u && !adj[u].contains(&v)).collect();
        let &v = candidates.choose(&mut rng).expect("d < n leaves a non-neighbor");
        adj[u].insert(v);
        adj[v].insert(u);
        m += 1;
    }

    if m + extra > max_edges {
        return Err(Error::InvalidParameter(format!(
            "cannot add {extra} extra edges: only {} non-edges left",
            max_edges - m
        )));
    }
    for _ in 0..extra {
        let non_edges: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !adj[u].contains(&v))
            .collect();
        let &(u, v) = non_edges.choose(&mut rng).expect("checked above");
        adj[u].insert(v);
        adj[v].insert(u);
    }

    let edges: Vec<(Vertex, Vertex)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().map(move |&v| (u, v)))
        .collect();
    Graph::from_edges(n, edges)
}
