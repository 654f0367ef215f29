//! Potential-function greedy domination.
//!
//! Every vertex carries a value: `a` while white (undominated), `b_k` while
//! blue (dominated with `k` white neighbors, capped at `d`), and 0 once red
//! (its whole closed neighborhood is dominated). The potential `p(G)` is the
//! sum of the values; it starts at `n·a`, ends at 0, and the coefficient
//! conditions guarantee each greedy step lowers it by at least `s` on graphs
//! of minimum degree at least `d`. This module runs the greedy procedure and
//! checks that guarantee step by step in exact arithmetic.
//!
//! Values are held internally as integers after scaling the coefficient set
//! to its smallest integral multiple; reported gains and potentials are
//! converted back to the caller's units.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::coefficients::CoefficientSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{Fraction, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Blue,
    Red,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::White => 'W',
            Color::Blue => 'B',
            Color::Red => 'R',
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Strategy {
    /// Pick among the vertices whose closed neighborhood holds the most
    /// white vertices, preferring white ones.
    #[default]
    PhasePreference,
    /// Pick the vertex whose selection lowers the potential the most.
    MaxGain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub index: usize,
    pub phase: usize,
    pub chosen: Vertex,
    pub chosen_prior_color: Color,
    pub gain: Rational,
    pub potential_after: Rational,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step={} phase={} vertex={} prior={} gain={} potential={}",
            self.index,
            self.phase,
            self.chosen,
            self.chosen_prior_color.letter(),
            Fraction(&self.gain),
            Fraction(&self.potential_after),
        )
    }
}

/// Vertex values in integer units, indexed by level: 0 is red, `k` in
/// `1..=d` is blue with `min(deg_W, d) = k`, and `d + 1` is white.
#[derive(Clone, Debug)]
struct ValueTable {
    units: Vec<BigInt>,
    /// Integer units per caller unit.
    factor: Rational,
}

impl ValueTable {
    fn new(c: &CoefficientSet) -> Self {
        let scaled = c.integer_scaled();
        let mut units = Vec::with_capacity(c.d() + 2);
        units.push(BigInt::zero());
        units.extend(scaled.bs().iter().map(|b| b.to_integer()));
        units.push(scaled.a().to_integer());
        Self {
            units,
            factor: scaled.s() / c.s(),
        }
    }

    fn to_rational(&self, units: &BigInt) -> Rational {
        Rational::from_integer(units.clone()) / &self.factor
    }
}

/// Vertices grouped by white cover, split by whether they are white.
#[derive(Clone, Debug)]
struct CoverBuckets {
    white: Vec<BTreeSet<Vertex>>,
    other: Vec<BTreeSet<Vertex>>,
    max: usize,
}

impl CoverBuckets {
    fn new(size: usize) -> Self {
        Self {
            white: vec![BTreeSet::new(); size],
            other: vec![BTreeSet::new(); size],
            max: 0,
        }
    }

    fn insert(&mut self, v: Vertex, cover: usize, white: bool) {
        if white {
            self.white[cover].insert(v);
        } else {
            self.other[cover].insert(v);
        }
        self.max = self.max.max(cover);
    }

    fn remove(&mut self, v: Vertex, cover: usize, white: bool) {
        let removed = if white {
            self.white[cover].remove(&v)
        } else {
            self.other[cover].remove(&v)
        };
        debug_assert!(removed, "vertex {v} missing from cover bucket {cover}");
    }

    /// Largest non-zero cover present (cover never increases, so the
    /// pointer only moves down).
    fn max_cover(&mut self) -> usize {
        while self.max > 0 && self.white[self.max].is_empty() && self.other[self.max].is_empty() {
            self.max -= 1;
        }
        self.max
    }
}

/// Effect of a selection on one vertex.
#[derive(Clone, Copy, Debug)]
struct Change {
    vertex: Vertex,
    lost_white: usize,
    newly_dominated: bool,
}

/// The evolving coloring for one greedy run.
#[derive(Clone, Debug)]
pub struct DominatorState<'g> {
    graph: &'g Graph,
    coeffs: CoefficientSet,
    values: ValueTable,
    color: Vec<Color>,
    white_deg: Vec<usize>,
    white_cover: Vec<usize>,
    chosen: Vec<Vertex>,
    potential: BigInt,
    buckets: CoverBuckets,
    white_left: usize,
}

impl<'g> DominatorState<'g> {
    /// All vertices white, `p(G) = n·a`. Fails when the minimum degree is
    /// below `c.d()` unless `force` is set.
    pub fn new(graph: &'g Graph, coeffs: &CoefficientSet, force: bool) -> Result<Self> {
        let required = coeffs.d();
        if graph.min_degree() < required && !force {
            return Err(Error::MinDegree {
                found: graph.min_degree(),
                required,
            });
        }
        let n = graph.n();
        let values = ValueTable::new(coeffs);
        let white_deg: Vec<usize> = graph.vertices().map(|v| graph.degree(v)).collect();
        let white_cover: Vec<usize> = white_deg.iter().map(|d| d + 1).collect();
        let mut buckets = CoverBuckets::new(graph.max_degree() + 2);
        for v in graph.vertices() {
            buckets.insert(v, white_cover[v], true);
        }
        let potential = &values.units[required + 1] * BigInt::from(n);
        Ok(Self {
            graph,
            coeffs: coeffs.clone(),
            values,
            color: vec![Color::White; n],
            white_deg,
            white_cover,
            chosen: Vec::new(),
            potential,
            buckets,
            white_left: n,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn coefficients(&self) -> &CoefficientSet {
        &self.coeffs
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.color[v]
    }

    pub fn white_deg(&self, v: Vertex) -> usize {
        self.white_deg[v]
    }

    pub fn white_cover(&self, v: Vertex) -> usize {
        self.white_cover[v]
    }

    pub fn chosen(&self) -> &[Vertex] {
        &self.chosen
    }

    pub fn is_done(&self) -> bool {
        self.white_left == 0
    }

    pub fn potential(&self) -> Rational {
        self.values.to_rational(&self.potential)
    }

    fn level(&self, color: Color, white_deg: usize) -> usize {
        match color {
            Color::White => self.coeffs.d() + 1,
            Color::Blue => white_deg.clamp(1, self.coeffs.d()),
            Color::Red => 0,
        }
    }

    /// `p(v)` for the current coloring.
    pub fn value(&self, v: Vertex) -> Rational {
        let level = self.level(self.color[v], self.white_deg[v]);
        self.values.to_rational(&self.values.units[level])
    }

    /// `Σ p(v)` recomputed from the coloring, independent of the running total.
    pub fn potential_from_scratch(&self) -> Rational {
        let total: BigInt = self
            .graph
            .vertices()
            .map(|v| &self.values.units[self.level(self.color[v], self.white_deg[v])])
            .sum();
        self.values.to_rational(&total)
    }

    fn max_cover(&mut self) -> usize {
        self.buckets.max_cover()
    }

    /// Phase index in `0..=d+1` determined by the largest white cover `M`:
    /// phase 0 when `M >= d + 2`, otherwise `d + 2 - M`.
    pub fn current_phase(&mut self) -> Result<usize> {
        let m = self.max_cover();
        if m == 0 {
            return Err(Error::FullyDominated);
        }
        Ok(phase_for_cover(m, self.coeffs.d()))
    }

    pub fn select_vertex(&mut self, strategy: Strategy) -> Result<Vertex> {
        let m = self.max_cover();
        if m == 0 {
            return Err(Error::FullyDominated);
        }
        match strategy {
            Strategy::PhasePreference => {
                let v = self.buckets.white[m]
                    .first()
                    .or_else(|| self.buckets.other[m].first())
                    .copied()
                    .expect("max cover bucket is non-empty");
                Ok(v)
            }
            Strategy::MaxGain => {
                let mut best: Option<(BigInt, Vertex)> = None;
                for v in self.graph.vertices().filter(|&v| self.white_cover[v] > 0) {
                    let gain = self.gain_units(&self.plan(v));
                    if best.as_ref().is_none_or(|(g, _)| gain > *g) {
                        best = Some((gain, v));
                    }
                }
                Ok(best.expect("some vertex has positive white cover").1)
            }
        }
    }

    /// Potential drop that selecting `v` would cause, without changing state.
    pub fn gain_if_selected(&self, v: Vertex) -> Rational {
        self.values.to_rational(&self.gain_units(&self.plan(v)))
    }

    fn plan(&self, v: Vertex) -> Vec<Change> {
        let mut lost: BTreeMap<Vertex, (usize, bool)> = BTreeMap::new();
        let closed = std::iter::once(v).chain(self.graph.neighbors(v).iter().copied());
        for u in closed.filter(|&u| self.color[u] == Color::White) {
            lost.entry(u).or_insert((0, false)).1 = true;
            for &w in self.graph.neighbors(u) {
                lost.entry(w).or_insert((0, false)).0 += 1;
            }
        }
        lost.into_iter()
            .map(|(vertex, (lost_white, newly_dominated))| Change {
                vertex,
                lost_white,
                newly_dominated,
            })
            .collect()
    }

    fn after(&self, ch: &Change) -> (Color, usize) {
        let wd = self.white_deg[ch.vertex] - ch.lost_white;
        let color = match self.color[ch.vertex] {
            Color::White if !ch.newly_dominated => Color::White,
            _ if wd == 0 => Color::Red,
            _ => Color::Blue,
        };
        (color, wd)
    }

    fn gain_units(&self, plan: &[Change]) -> BigInt {
        let mut gain = BigInt::zero();
        for ch in plan {
            let before = self.level(self.color[ch.vertex], self.white_deg[ch.vertex]);
            let (color, wd) = self.after(ch);
            let after = self.level(color, wd);
            if before != after {
                gain += &self.values.units[before];
                gain -= &self.values.units[after];
            }
        }
        gain
    }

    /// Adds `v` to the dominating set and updates colors, counters and the
    /// potential.
    pub fn apply_selection(&mut self, v: Vertex) -> Result<StepRecord> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        if self.white_cover[v] == 0 {
            return Err(Error::NoProgress { vertex: v });
        }
        let phase = self.current_phase()?;
        let prior = self.color[v];
        let plan = self.plan(v);
        let gain = self.gain_units(&plan);

        for ch in &plan {
            let x = ch.vertex;
            let was_white = self.color[x] == Color::White;
            self.buckets.remove(x, self.white_cover[x], was_white);
            let (color, wd) = self.after(ch);
            self.white_deg[x] = wd;
            self.white_cover[x] -= ch.lost_white + usize::from(ch.newly_dominated);
            self.color[x] = color;
            if ch.newly_dominated {
                self.white_left -= 1;
            }
            self.buckets.insert(x, self.white_cover[x], color == Color::White);
        }
        debug_assert_eq!(self.color[v], Color::Red);

        self.potential -= &gain;
        self.chosen.push(v);
        Ok(StepRecord {
            index: self.chosen.len(),
            phase,
            chosen: v,
            chosen_prior_color: prior,
            gain: self.values.to_rational(&gain),
            potential_after: self.potential(),
        })
    }

    /// Whether `gain` (in the caller's units) meets the per-step guarantee.
    pub fn meets_guarantee(&self, gain: &Rational) -> bool {
        gain >= self.coeffs.s()
    }

    /// Checks the coloring invariants against a from-scratch recount.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let g = self.graph;
        let d = self.coeffs.d();
        let mut dominated = vec![false; g.n()];
        for &c in &self.chosen {
            dominated[c] = true;
            for &u in g.neighbors(c) {
                dominated[u] = true;
            }
        }
        let applies = g.min_degree() >= d;
        for v in g.vertices() {
            let wd = g.neighbors(v).iter().filter(|&&u| !dominated[u]).count();
            if wd != self.white_deg[v] {
                return Err(format!("vertex {v}: white degree {} but recount {wd}", self.white_deg[v]));
            }
            let cover = wd + usize::from(!dominated[v]);
            if cover != self.white_cover[v] {
                return Err(format!("vertex {v}: white cover {} but recount {cover}", self.white_cover[v]));
            }
            let expected = if !dominated[v] {
                Color::White
            } else if wd == 0 {
                Color::Red
            } else {
                Color::Blue
            };
            if expected != self.color[v] {
                return Err(format!("vertex {v}: color {:?}, expected {expected:?}", self.color[v]));
            }
            if applies && expected == Color::White {
                let blue = g.neighbors(v).iter().filter(|&&u| self.color[u] == Color::Blue).count();
                let red = g.neighbors(v).len() - blue - wd;
                if red > 0 || blue + wd < d {
                    return Err(format!("white vertex {v} has {red} red and {blue} blue neighbors"));
                }
            }
        }
        if self.potential_from_scratch() != self.potential() {
            return Err(format!(
                "running potential {} differs from recomputed {}",
                Fraction(&self.potential()),
                Fraction(&self.potential_from_scratch())
            ));
        }
        Ok(())
    }
}

fn phase_for_cover(max_cover: usize, d: usize) -> usize {
    (d + 2).saturating_sub(max_cover)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub strategy: Strategy,
    /// Check every step against the guarantee and recount invariants.
    pub audit: bool,
    /// Run even when the minimum degree is below `d`; disables the audit.
    pub force: bool,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub dominating_set: Vec<Vertex>,
    pub log: Vec<StepRecord>,
    /// Whether the graph satisfies the minimum-degree hypothesis.
    pub theorem_applies: bool,
    /// `⌊a·n/s⌋` when the hypothesis holds.
    pub size_cap: Option<usize>,
}

impl RunOutcome {
    /// Whether the phase index never decreased over the run. Observed, not
    /// guaranteed.
    pub fn phases_monotone(&self) -> bool {
        self.log.windows(2).all(|w| w[0].phase <= w[1].phase)
    }
}

/// `⌊a·n/s⌋`.
pub fn size_cap(c: &CoefficientSet, n: usize) -> usize {
    (c.bound() * Rational::from_integer(BigInt::from(n)))
        .floor()
        .to_integer()
        .to_usize()
        .expect("cap fits in usize")
}

pub fn run(graph: &Graph, coeffs: &CoefficientSet, opts: RunOptions) -> Result<RunOutcome> {
    let mut state = DominatorState::new(graph, coeffs, opts.force)?;
    let theorem_applies = graph.min_degree() >= coeffs.d();
    let audit = opts.audit && theorem_applies;
    let mut log = Vec::new();

    while !state.is_done() {
        let v = state.select_vertex(opts.strategy)?;
        let record = state.apply_selection(v)?;
        if audit {
            if !state.meets_guarantee(&record.gain) {
                return Err(Error::AuditFailure {
                    record: Box::new(record),
                    s: Fraction(coeffs.s()).to_string(),
                });
            }
            state.check_invariants().map_err(Error::AuditInvariant)?;
        }
        log.push(record);
    }

    let dominating_set = state.chosen().to_vec();
    if !state.potential().is_zero() {
        return Err(Error::AuditInvariant(format!(
            "final potential {} is not zero",
            Fraction(&state.potential())
        )));
    }
    if !graph.is_dominating(&dominating_set)? {
        return Err(Error::AuditInvariant("selected set does not dominate".into()));
    }
    let size_cap = theorem_applies.then(|| size_cap(coeffs, graph.n()));
    if audit {
        let cap = size_cap.expect("audit implies the hypothesis holds");
        if dominating_set.len() > cap {
            return Err(Error::AuditInvariant(format!(
                "{} vertices selected, above the bound {cap}",
                dominating_set.len()
            )));
        }
    }
    Ok(RunOutcome {
        dominating_set,
        log,
        theorem_applies,
        size_cap,
    })
}
