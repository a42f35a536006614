//! Algorithms producing feasible colorings.
//!
//! Every solver returns colorings that respect the scheme: proper colors
//! (indices `r..k`) never appear on both endpoints of an edge. The reported
//! `value` is always the covered-edge count, whichever objective drove the
//! search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conflict::{covered_unchecked, kappa_power_sum, CostParams};
use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph};

/// Upper bound on `k^n` for exhaustive search.
pub const ENUMERATION_LIMIT: f64 = 1e8;

/// Largest graph accepted by the independent-set based (1, 2) solver.
pub const STRUCTURAL_MAX_VERTICES: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Structural12,
    HalfApprox,
    Greedy,
    LocalSearch,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Structural12 => "structural12",
            Method::HalfApprox => "half",
            Method::Greedy => "greedy",
            Method::LocalSearch => "local",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub coloring: Coloring,
    /// Covered edges, with multiplicity.
    pub value: u64,
    pub feasible: bool,
    pub method: Method,
}

impl Solution {
    fn new<G: EdgeSet>(g: &G, coloring: Coloring, method: Method) -> Self {
        let value = covered_unchecked(g, coloring.as_slice());
        Solution {
            coloring,
            value,
            feasible: true,
            method,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveOutcome {
    Solved(Solution),
    /// No coloring satisfies the scheme (only possible when `r = 0`).
    Infeasible,
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn into_solution(self) -> Option<Solution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn value(&self) -> Option<u64> {
        self.solution().map(|s| s.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of candidate moves evaluated, across all restarts.
    pub max_iterations: u64,
    pub random_seed: u64,
    pub restarts: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_iterations: 100_000,
            random_seed: 0,
            restarts: 4,
        }
    }
}

/// What local search minimizes (or maximizes, for `Covered`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Covered,
    Generalized(CostParams),
    Defective,
}

pub(crate) fn enumeration_guard(n: usize, k: usize) -> Result<()> {
    let size = (k as f64).powi(n as i32);
    if size > ENUMERATION_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "k^n",
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// For each vertex, its neighbors with smaller index and the edge multiplicity.
fn earlier_neighbors<G: EdgeSet>(g: &G) -> Vec<Vec<(usize, u64)>> {
    (0..g.vertex_count())
        .map(|v| g.weighted_neighbors(v).filter(|&(u, _)| u < v).collect())
        .collect()
}

struct ExactSearch<'a> {
    scheme: ColorScheme,
    earlier: &'a [Vec<(usize, u64)>],
    assignment: Vec<usize>,
    best_conflicts: u64,
    best: Option<Vec<usize>>,
}

impl ExactSearch<'_> {
    // Within each color group only the next unused color may be opened, so
    // every explored coloring is the canonical representative of its class
    // under permutations of same-group colors.
    fn descend(&mut self, v: usize, conflicts: u64, relaxed_open: usize, proper_open: usize) {
        if v == self.assignment.len() {
            if conflicts < self.best_conflicts {
                self.best_conflicts = conflicts;
                self.best = Some(self.assignment.clone());
            }
            return;
        }
        let (r, k) = (self.scheme.r(), self.scheme.k());
        let relaxed = 0..(relaxed_open + 1).min(r);
        let proper = r..r + (proper_open + 1).min(k - r);
        for color in relaxed.chain(proper) {
            let added: u64 = self.earlier[v]
                .iter()
                .filter(|&&(u, _)| self.assignment[u] == color)
                .map(|&(_, t)| t)
                .sum();
            if added > 0 && self.scheme.is_proper(color) {
                continue;
            }
            let total = conflicts + added;
            if total >= self.best_conflicts {
                continue;
            }
            self.assignment[v] = color;
            let (ro, po) = if color < r {
                (relaxed_open.max(color + 1), proper_open)
            } else {
                (relaxed_open, proper_open.max(color - r + 1))
            };
            self.descend(v + 1, total, ro, po);
            if self.best_conflicts == 0 {
                return;
            }
        }
    }
}

/// Exact optimum by depth-first search in lexicographic order.
///
/// Among optimal colorings the lexicographically smallest one is returned.
/// Refuses instances with `k^n > 10^8`.
pub fn solve_exact<G: EdgeSet>(g: &G, s: ColorScheme) -> Result<SolveOutcome> {
    let n = g.vertex_count();
    enumeration_guard(n, s.k())?;
    let earlier = earlier_neighbors(g);
    let mut search = ExactSearch {
        scheme: s,
        earlier: &earlier,
        assignment: vec![0; n],
        best_conflicts: u64::MAX,
        best: None,
    };
    search.descend(0, 0, 0, 0);
    Ok(match search.best {
        Some(best) => SolveOutcome::Solved(Solution::new(g, Coloring::new(best), Method::Exact)),
        None => SolveOutcome::Infeasible,
    })
}

/// Maximum-weight independent set by branch and bound.
///
/// Returns the chosen vertices (ascending) and their total weight. Ties are
/// broken toward the first set found when branching include-before-exclude
/// in vertex order.
pub fn max_weight_independent_set(g: &Graph, weights: &[u64]) -> Result<(Vec<usize>, u64)> {
    let n = g.vertex_count();
    if n > STRUCTURAL_MAX_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "vertex count",
            size: n as f64,
            limit: STRUCTURAL_MAX_VERTICES as f64,
        });
    }
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: weights.len(),
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();

    struct Search<'a> {
        masks: &'a [u64],
        weights: &'a [u64],
        best: Option<(u64, u64)>,
    }

    impl Search<'_> {
        fn descend(&mut self, v: usize, chosen: u64, blocked: u64, weight: u64) {
            let n = self.masks.len();
            if v == n {
                if self.best.is_none_or(|(w, _)| weight > w) {
                    self.best = Some((weight, chosen));
                }
                return;
            }
            let bound: u64 = weight
                + (v..n)
                    .filter(|&u| blocked & (1 << u) == 0)
                    .map(|u| self.weights[u])
                    .sum::<u64>();
            if self.best.is_some_and(|(w, _)| bound <= w) {
                return;
            }
            if blocked & (1 << v) == 0 {
                self.descend(
                    v + 1,
                    chosen | (1 << v),
                    blocked | self.masks[v],
                    weight + self.weights[v],
                );
            }
            self.descend(v + 1, chosen, blocked, weight);
        }
    }

    let mut search = Search {
        masks: &masks,
        weights,
        best: None,
    };
    search.descend(0, 0, 0, 0);
    let (weight, chosen) = search.best.unwrap_or((0, 0));
    Ok(((0..n).filter(|&v| chosen & (1 << v) != 0).collect(), weight))
}

/// Optimal (1, 2) coloring.
///
/// With one relaxed color (0) and one proper color (1), the proper class `I`
/// is independent, so exactly the edges incident to `I` are covered and the
/// value is the degree sum over `I`. The optimum is a maximum-weight
/// independent set with degrees as weights.
pub fn solve_r12_structural(g: &Graph) -> Result<Solution> {
    let degrees: Vec<u64> = (0..g.vertex_count()).map(|v| g.degree(v) as u64).collect();
    let (set, _) = max_weight_independent_set(g, &degrees)?;
    let mut coloring = Coloring::uniform(g.vertex_count(), 0);
    for v in set {
        coloring.set(v, 1);
    }
    Ok(Solution::new(g, coloring, Method::Structural12))
}

/// Deterministic cut covering at least half of all edges, using relaxed
/// colors 0 and 1.
///
/// Vertices are placed in ascending order on the side holding fewer of their
/// already-placed neighbors (ties go to side 0); each placement covers at
/// least half of the edges it closes.
pub fn solve_half_approx<G: EdgeSet>(g: &G, s: ColorScheme) -> Result<Solution> {
    if s.r() < 2 {
        return Err(Error::InvalidParameter(format!(
            "half approximation needs at least 2 relaxed colors, scheme has r = {}",
            s.r()
        )));
    }
    let n = g.vertex_count();
    let mut side = vec![0usize; n];
    for v in 0..n {
        let mut placed = [0u64; 2];
        for (u, t) in g.weighted_neighbors(v) {
            if u < v {
                placed[side[u]] += t;
            }
        }
        side[v] = usize::from(placed[1] < placed[0]);
    }
    Ok(Solution::new(g, Coloring::new(side), Method::HalfApprox))
}

/// Greedy coloring in descending degree order.
///
/// Each vertex takes the feasible color covering the most edges to
/// already-colored neighbors (ties to the lowest index). With `r = 0` the
/// greedy pass can dead-end on a colorable graph; it then falls back to a
/// backtracking search for a proper `k`-coloring so that `Infeasible` is
/// only reported when none exists.
pub fn solve_greedy<G: EdgeSet>(g: &G, s: ColorScheme) -> Result<SolveOutcome> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.weighted_degree(v)));

    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &v in &order {
        let mut gain = vec![0u64; s.k()];
        let mut blocked = vec![false; s.k()];
        for (u, t) in g.weighted_neighbors(v) {
            if let Some(cu) = colors[u] {
                blocked[cu] = true;
                for (c, gc) in gain.iter_mut().enumerate() {
                    if c != cu {
                        *gc += t;
                    }
                }
            }
        }
        let choice = (0..s.k())
            .filter(|&c| s.is_relaxed(c) || !blocked[c])
            .fold(None, |best: Option<usize>, c| match best {
                Some(b) if gain[b] >= gain[c] => Some(b),
                _ => Some(c),
            });
        match choice {
            Some(c) => colors[v] = Some(c),
            None => {
                return Ok(match proper_coloring_search(g, s.k(), &order) {
                    Some(c) => SolveOutcome::Solved(Solution::new(g, c, Method::Greedy)),
                    None => SolveOutcome::Infeasible,
                });
            }
        }
    }
    let coloring = Coloring::new(colors.into_iter().map(|c| c.expect("all colored")).collect());
    Ok(SolveOutcome::Solved(Solution::new(g, coloring, Method::Greedy)))
}

/// Backtracking search for a conflict-free `k`-coloring, visiting vertices
/// in `order` and opening at most one new color per step.
fn proper_coloring_search<G: EdgeSet>(g: &G, k: usize, order: &[usize]) -> Option<Coloring> {
    fn descend<G: EdgeSet>(
        g: &G,
        k: usize,
        order: &[usize],
        i: usize,
        opened: usize,
        colors: &mut [Option<usize>],
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..(opened + 1).min(k) {
            if g.weighted_neighbors(v).any(|(u, _)| colors[u] == Some(c)) {
                continue;
            }
            colors[v] = Some(c);
            if descend(g, k, order, i + 1, opened.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = None;
        false
    }
    let mut colors = vec![None; g.vertex_count()];
    descend(g, k, order, 0, 0, &mut colors)
        .then(|| Coloring::new(colors.into_iter().map(|c| c.expect("all colored")).collect()))
}

/// Score to minimize, compared lexicographically.
type Score = (f64, u64, u64);

struct LocalState<'a, G: EdgeSet> {
    g: &'a G,
    scheme: ColorScheme,
    objective: Objective,
    colors: Vec<usize>,
    kappa: Vec<u64>,
    conflicts: u64,
}

impl<'a, G: EdgeSet> LocalState<'a, G> {
    fn new(g: &'a G, scheme: ColorScheme, objective: Objective, colors: Vec<usize>) -> Self {
        let mut state = LocalState {
            g,
            scheme,
            objective,
            colors,
            kappa: Vec::new(),
            conflicts: 0,
        };
        state.recount();
        state
    }

    fn recount(&mut self) {
        self.kappa = vec![0; self.colors.len()];
        self.conflicts = 0;
        for (u, v, t) in self.g.weighted_edges() {
            if self.colors[u] == self.colors[v] {
                self.kappa[u] += t;
                self.kappa[v] += t;
                self.conflicts += t;
            }
        }
    }

    fn score(&self) -> Score {
        match self.objective {
            Objective::Covered => (self.conflicts as f64, 0, 0),
            Objective::Generalized(params) => (kappa_power_sum(&self.kappa, params), self.conflicts, 0),
            Objective::Defective => {
                let max = self.kappa.iter().copied().max().unwrap_or(0);
                let at_max = self.kappa.iter().filter(|&&x| x == max).count() as u64;
                (max as f64, at_max, self.conflicts)
            }
        }
    }

    fn can_take(&self, v: usize, color: usize) -> bool {
        self.scheme.is_relaxed(color) || self.g.weighted_neighbors(v).all(|(u, _)| self.colors[u] != color)
    }

    fn recolor(&mut self, v: usize, color: usize) {
        let old = self.colors[v];
        for (u, t) in self.g.weighted_neighbors(v) {
            if self.colors[u] == old {
                self.kappa[u] -= t;
                self.kappa[v] -= t;
                self.conflicts -= t;
            }
            if self.colors[u] == color {
                self.kappa[u] += t;
                self.kappa[v] += t;
                self.conflicts += t;
            }
        }
        self.colors[v] = color;
    }
}

fn improves(candidate: Score, current: Score) -> bool {
    let tol = 1e-9 * current.0.abs().max(1.0);
    if candidate.0 < current.0 - tol {
        return true;
    }
    if candidate.0 > current.0 + tol {
        return false;
    }
    (candidate.1, candidate.2) < (current.1, current.2)
}

/// First-improvement descent; returns when no single recolor improves or
/// the iteration budget runs out.
fn descend<G: EdgeSet>(state: &mut LocalState<'_, G>, rng: &mut ChaCha8Rng, iterations: &mut u64, limit: u64) {
    let n = state.colors.len();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.shuffle(rng);
        let mut improved = false;
        for &v in &order {
            let current = state.score();
            let original = state.colors[v];
            for color in 0..state.scheme.k() {
                if color == original {
                    continue;
                }
                if *iterations >= limit {
                    return;
                }
                *iterations += 1;
                if !state.can_take(v, color) {
                    continue;
                }
                state.recolor(v, color);
                if improves(state.score(), current) {
                    improved = true;
                    break;
                }
                state.recolor(v, original);
            }
        }
        if !improved {
            return;
        }
    }
}

/// Single-vertex recoloring local search seeded from [`solve_greedy`].
///
/// Moves never leave the feasible region. After the first descent, each
/// restart perturbs the best coloring found with random feasible recolors
/// and descends again; a restart result replaces the incumbent only when it
/// is strictly better, so the output never scores worse than the greedy
/// start. Identical inputs and seed give identical output.
pub fn solve_local_search<G: EdgeSet>(
    g: &G,
    s: ColorScheme,
    objective: Objective,
    budget: SearchBudget,
) -> Result<SolveOutcome> {
    let Some(start) = solve_greedy(g, s)?.into_solution() else {
        return Ok(SolveOutcome::Infeasible);
    };
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.random_seed);
    let mut iterations = 0u64;
    let limit = budget.max_iterations;

    let mut best = LocalState::new(g, s, objective, start.coloring.into_vec());
    descend(&mut best, &mut rng, &mut iterations, limit);

    for _ in 0..budget.restarts {
        if iterations >= limit || n == 0 {
            break;
        }
        let mut trial = LocalState::new(g, s, objective, best.colors.clone());
        for _ in 0..(n / 4).max(1) {
            let v = rng.gen_range(0..n);
            let color = rng.gen_range(0..s.k());
            if trial.can_take(v, color) {
                trial.recolor(v, color);
            }
        }
        descend(&mut trial, &mut rng, &mut iterations, limit);
        if improves(trial.score(), best.score()) {
            best = trial;
        }
    }
    Ok(SolveOutcome::Solved(Solution::new(
        g,
        Coloring::new(best.colors),
        Method::LocalSearch,
    )))
}
