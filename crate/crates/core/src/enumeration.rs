//! Exhaustive generation of small labeled graphs and the scans built on it.
//!
//! Graphs are generated by assigning the upper-triangle adjacency bits one
//! at a time, in graph6 order, with `0` tried before `1`. A partial
//! assignment is abandoned as soon as some vertex exceeds the maximum degree
//! or can no longer reach the minimum degree with the pairs still open.
//!
//! Parallel runs fix the first `k` bits of the assignment; each prefix is an
//! independent subtree, and per-prefix results are merged with an
//! associative, commutative merge, so output does not depend on the number
//! of workers.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    decomposition_from_profile, lower_bound, star_bound, upper_bound, DecompositionCheck,
};
use crate::constructions::family_f_with_degrees;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::numeric::{serialize_real, Tolerances};
use crate::profile::DegreeProfile;
use crate::randic::{caporossi_with_degrees, direct_with_degrees};

/// Largest order accepted by the enumerator.
pub const MAX_ORDER: usize = 8;

/// Orders at or above this take tens of minutes to scan exhaustively.
pub const SLOW_ORDER: usize = 8;

/// Upper bound on the number of prefix bits used to split parallel work.
const MAX_PARTITION_BITS: usize = 8;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constraints {
    pub connected: bool,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

impl Constraints {
    pub fn admits(&self, g: &Graph) -> bool {
        let degrees = g.degrees();
        self.min_degree
            .is_none_or(|lo| degrees.iter().all(|&k| k >= lo))
            && self
                .max_degree
                .is_none_or(|hi| degrees.iter().all(|&k| k <= hi))
            && (!self.connected || g.is_connected())
    }
}

/// Vertex pairs in graph6 bit order: `(i, j)` for `j = 1..n`, `i = 0..j`.
pub fn upper_triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Precondition(format!(
            "enumeration supports 1 <= n <= {MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Every labeled simple graph on `n` vertices satisfying `constraints`,
/// exactly once, in a fixed order.
pub fn enumerate_graphs(n: usize, constraints: Constraints) -> Result<GraphStream> {
    GraphStream::with_prefix(n, constraints, &[])
}

/// Depth-first stream over edge assignments. See the module docs.
#[derive(Debug, Clone)]
pub struct GraphStream {
    pairs: Vec<(usize, usize)>,
    n: usize,
    constraints: Constraints,
    min_degree: usize,
    max_degree: usize,
    prefix: Vec<bool>,
    bits: Vec<bool>,
    degree: Vec<usize>,
    /// Unassigned pairs touching each vertex.
    open: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl GraphStream {
    /// Restricts the stream to graphs whose first `prefix.len()` adjacency
    /// bits (in graph6 order) equal `prefix`.
    pub fn with_prefix(n: usize, constraints: Constraints, prefix: &[bool]) -> Result<Self> {
        check_order(n)?;
        let pairs = upper_triangle_pairs(n);
        if prefix.len() > pairs.len() {
            return Err(Error::Precondition(format!(
                "prefix of {} bits exceeds the {} vertex pairs",
                prefix.len(),
                pairs.len()
            )));
        }
        Ok(GraphStream {
            n,
            constraints,
            min_degree: constraints.min_degree.unwrap_or(0),
            max_degree: constraints.max_degree.unwrap_or(usize::MAX),
            prefix: prefix.to_vec(),
            bits: Vec::with_capacity(pairs.len()),
            degree: vec![0; n],
            open: vec![n - 1; n],
            pairs,
            started: false,
            exhausted: false,
        })
    }

    fn try_push(&mut self, bit: bool) -> bool {
        let (u, v) = self.pairs[self.bits.len()];
        let feasible = if bit {
            self.degree[u] < self.max_degree && self.degree[v] < self.max_degree
        } else {
            self.degree[u] + self.open[u] > self.min_degree
                && self.degree[v] + self.open[v] > self.min_degree
                || self.min_degree == 0
        };
        if !feasible {
            return false;
        }
        self.open[u] -= 1;
        self.open[v] -= 1;
        if bit {
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
        self.bits.push(bit);
        true
    }

    fn pop(&mut self) -> bool {
        let bit = self.bits.pop().expect("pop below the prefix");
        let (u, v) = self.pairs[self.bits.len()];
        self.open[u] += 1;
        self.open[v] += 1;
        if bit {
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        bit
    }

    /// Extends the assignment to a full leaf, preferring 0 at each pair.
    fn descend(&mut self) -> bool {
        while self.bits.len() < self.pairs.len() {
            if !(self.try_push(false) || self.try_push(true)) {
                return false;
            }
        }
        true
    }

    /// Moves to the next leaf after the current assignment.
    fn advance(&mut self) -> bool {
        while self.bits.len() > self.prefix.len() {
            if !self.pop() && self.try_push(true) && self.descend() {
                return true;
            }
        }
        false
    }

    fn start(&mut self) -> bool {
        let prefix = std::mem::take(&mut self.prefix);
        let ok = prefix.iter().all(|&b| self.try_push(b));
        self.prefix = prefix;
        ok && (self.descend() || self.advance())
    }

    fn leaf_graph(&self) -> Graph {
        let mut edges: Vec<_> = self
            .pairs
            .iter()
            .zip(&self.bits)
            .filter_map(|(&e, &b)| b.then_some(e))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_unchecked(self.n, edges)
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if self.exhausted {
                return None;
            }
            let found = if self.started {
                self.advance()
            } else {
                self.started = true;
                self.start()
            };
            if !found {
                self.exhausted = true;
                return None;
            }
            if self.degree.iter().any(|&k| k < self.min_degree) {
                continue;
            }
            let g = self.leaf_graph();
            if self.constraints.connected && !g.is_connected() {
                continue;
            }
            return Some(g);
        }
    }
}

fn resolve_jobs(jobs: usize) -> usize {
    if jobs == 0 {
        std::thread::available_parallelism().map_or(1, usize::from)
    } else {
        jobs
    }
}

/// Folds `visit` over every graph of order `n` admitted by `constraints`.
/// With more than one job the search tree is split on its first adjacency
/// bits and the pieces are folded on a dedicated pool.
fn fold_graphs<A, I, V, M>(
    n: usize,
    constraints: Constraints,
    jobs: usize,
    init: I,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &Graph) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let jobs = resolve_jobs(jobs);
    let pair_count = n * n.saturating_sub(1) / 2;
    let bits = if jobs <= 1 {
        0
    } else {
        pair_count.min(MAX_PARTITION_BITS)
    };
    fold_partitioned(n, constraints, bits, jobs, init, visit, merge)
}

fn fold_partitioned<A, I, V, M>(
    n: usize,
    constraints: Constraints,
    partition_bits: usize,
    jobs: usize,
    init: I,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &Graph) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let run_prefix = |mask: usize| -> Result<A> {
        let prefix: Vec<bool> = (0..partition_bits)
            .map(|k| mask >> (partition_bits - 1 - k) & 1 == 1)
            .collect();
        let mut acc = init();
        for g in GraphStream::with_prefix(n, constraints, &prefix)? {
            visit(&mut acc, &g);
        }
        Ok(acc)
    };
    if partition_bits == 0 {
        return run_prefix(0);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        (0..1usize << partition_bits)
            .into_par_iter()
            .map(run_prefix)
            .try_reduce(&init, |a, b| Ok(merge(a, b)))
    })
}

/// Everything the scans need to know about one graph.
struct Evaluation {
    n: usize,
    min_degree: usize,
    max_degree: usize,
    connected: bool,
    randic: f64,
    caporossi: f64,
    handshake: bool,
    star: bool,
    biregular: bool,
    family: bool,
    decomposition: Option<DecompositionCheck>,
}

impl Evaluation {
    /// `None` for graphs with an isolated vertex.
    fn of(g: &Graph, with_identities: bool) -> Option<Self> {
        let degrees = g.degrees();
        let profile = DegreeProfile::from_degrees(g, &degrees).ok()?;
        let (d, big_d) = (profile.min_degree(), profile.max_degree());
        let irregular = d < big_d;
        let biregular = irregular
            && g.biregular_certificate()
                .is_some_and(|c| (c.low_degree, c.high_degree) == (d, big_d));
        Some(Evaluation {
            n: g.order(),
            min_degree: d,
            max_degree: big_d,
            connected: g.is_connected(),
            randic: direct_with_degrees(g, &degrees).value,
            caporossi: if with_identities {
                caporossi_with_degrees(g, &degrees)
            } else {
                f64::NAN
            },
            handshake: !with_identities || profile.satisfies_handshake(),
            star: g.is_star(),
            biregular,
            family: irregular && family_f_with_degrees(g, &degrees, &profile).is_some(),
            decomposition: if with_identities && irregular {
                decomposition_from_profile(&profile).ok()
            } else {
                None
            },
        })
    }

    fn lower(&self) -> Option<f64> {
        lower_bound(self.n, self.min_degree, self.max_degree).ok()
    }

    /// Only for connected graphs with distinct extreme degrees.
    fn upper(&self) -> Option<f64> {
        if self.connected {
            upper_bound(self.n, self.min_degree, self.max_degree).ok()
        } else {
            None
        }
    }
}

/// Extremal statistics for one `(n, d, D)` class.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationSummary {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "D")]
    pub big_d: usize,
    pub class_count: u64,
    #[serde(serialize_with = "serialize_real")]
    pub min_r: f64,
    #[serde(serialize_with = "serialize_real")]
    pub max_r: f64,
    /// graph6 of a minimizer, canonically relabeled.
    pub argmin: String,
    /// graph6 of a maximizer, canonically relabeled.
    pub argmax: String,
    pub lower_violations: u64,
    pub upper_violations: u64,
    pub lower_equality_witnesses: u64,
    pub upper_equality_witnesses: u64,
}

/// A graph ranked by `(value, graph6)`; the order is total, so min/max are
/// independent of visiting order.
#[derive(Debug, Clone)]
struct Witness {
    value: f64,
    code: String,
    graph: Graph,
}

impl Witness {
    fn key(&self) -> (f64, &str) {
        (self.value, &self.code)
    }

    fn less(&self, other: &Witness) -> bool {
        self.key().partial_cmp(&other.key()) == Some(std::cmp::Ordering::Less)
    }
}

#[derive(Debug, Clone)]
struct ClassAccumulator {
    count: u64,
    min: Witness,
    max: Witness,
    lower_violations: u64,
    upper_violations: u64,
    lower_equality: u64,
    upper_equality: u64,
}

impl ClassAccumulator {
    fn merge(mut self, other: ClassAccumulator) -> Self {
        self.count += other.count;
        if other.min.less(&self.min) {
            self.min = other.min;
        }
        if self.max.less(&other.max) {
            self.max = other.max;
        }
        self.lower_violations += other.lower_violations;
        self.upper_violations += other.upper_violations;
        self.lower_equality += other.lower_equality;
        self.upper_equality += other.upper_equality;
        self
    }
}

type ScanState = BTreeMap<(usize, usize, usize), ClassAccumulator>;

fn merge_scan(mut a: ScanState, b: ScanState) -> ScanState {
    for (key, acc) in b {
        let merged = match a.remove(&key) {
            Some(existing) => existing.merge(acc),
            None => acc,
        };
        a.insert(key, merged);
    }
    a
}

fn graph6_unchecked(g: &Graph) -> String {
    to_graph6(g).expect("enumerated graphs fit graph6")
}

fn scan_visit(state: &mut ScanState, g: &Graph, slack: f64) {
    let Some(ev) = Evaluation::of(g, false) else {
        return;
    };
    let Some(lower) = ev.lower() else {
        return;
    };
    let key = (ev.n, ev.min_degree, ev.max_degree);
    let lower_violation = ev.randic < lower - slack;
    let upper = ev.upper();
    let upper_violation = upper.is_some_and(|u| ev.randic > u + slack);

    let candidate = |graph: &Graph| Witness {
        value: ev.randic,
        code: graph6_unchecked(graph),
        graph: graph.clone(),
    };
    let acc = state.entry(key).or_insert_with(|| {
        let w = candidate(g);
        ClassAccumulator {
            count: 0,
            min: w.clone(),
            max: w,
            lower_violations: 0,
            upper_violations: 0,
            lower_equality: 0,
            upper_equality: 0,
        }
    });
    acc.count += 1;
    if ev.randic <= acc.min.value || ev.randic >= acc.max.value {
        let w = candidate(g);
        if w.less(&acc.min) {
            acc.min = w.clone();
        }
        if acc.max.less(&w) {
            acc.max = w;
        }
    }
    acc.lower_violations += u64::from(lower_violation);
    acc.upper_violations += u64::from(upper_violation);
    acc.lower_equality += u64::from(ev.biregular);
    acc.upper_equality += u64::from(upper.is_some() && ev.family);
}

/// Per-`(n, d, D)` extremal statistics over every graph with
/// `2 <= n <= max_n`, no isolated vertices and `d < D`.
pub fn extremal_scan(
    max_n: usize,
    connected_only: bool,
    jobs: usize,
) -> Result<Vec<EnumerationSummary>> {
    extremal_scan_with(max_n, connected_only, jobs, Tolerances::default())
}

pub fn extremal_scan_with(
    max_n: usize,
    connected_only: bool,
    jobs: usize,
    tolerances: Tolerances,
) -> Result<Vec<EnumerationSummary>> {
    check_order(max_n)?;
    let mut state = ScanState::new();
    for n in 2..=max_n {
        let constraints = Constraints {
            connected: connected_only,
            min_degree: Some(1),
            max_degree: None,
        };
        let part = fold_graphs(
            n,
            constraints,
            jobs,
            ScanState::new,
            |s, g| scan_visit(s, g, tolerances.slack),
            merge_scan,
        )?;
        state = merge_scan(state, part);
    }
    Ok(summaries(state))
}

fn summaries(state: ScanState) -> Vec<EnumerationSummary> {
    state
        .into_iter()
        .map(|((n, d, big_d), acc)| EnumerationSummary {
            n,
            d,
            big_d,
            class_count: acc.count,
            min_r: acc.min.value,
            max_r: acc.max.value,
            argmin: graph6_unchecked(&acc.min.graph.canonical_form()),
            argmax: graph6_unchecked(&acc.max.graph.canonical_form()),
            lower_violations: acc.lower_violations,
            upper_violations: acc.upper_violations,
            lower_equality_witnesses: acc.lower_equality,
            upper_equality_witnesses: acc.upper_equality,
        })
        .collect()
}

/// Names of the per-graph checks run by [`verify_theorems`].
pub mod checks {
    /// Edge-sum definition agrees with the `n/2 - ...` identity.
    pub const INDEX_IDENTITY: &str = "index-identity";
    /// Degree-class counts satisfy the handshake relations.
    pub const HANDSHAKE: &str = "degree-handshake";
    /// Degree-class decomposition residual and coefficient signs.
    pub const DECOMPOSITION: &str = "decomposition-identity";
    pub const LOWER_BOUND: &str = "lower-bound";
    /// Lower bound tight iff a `(d, D)`-biregular certificate exists.
    pub const LOWER_EQUALITY: &str = "lower-equality";
    pub const UPPER_BOUND: &str = "upper-bound";
    /// Upper bound tight iff the class-chain certificate exists.
    pub const UPPER_EQUALITY: &str = "upper-equality";
    /// `R >= sqrt(n - 1)` for graphs without isolated vertices.
    pub const STAR_BOUND: &str = "star-bound";
    /// `R = sqrt(n - 1)` iff the graph is a star.
    pub const STAR_EQUALITY: &str = "star-equality";

    pub const ALL: [&str; 9] = [
        INDEX_IDENTITY,
        HANDSHAKE,
        DECOMPOSITION,
        LOWER_BOUND,
        LOWER_EQUALITY,
        UPPER_BOUND,
        UPPER_EQUALITY,
        STAR_BOUND,
        STAR_EQUALITY,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckTally {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    /// graph6 of the smallest failing graph, ordered by `(n, graph6)`.
    pub first_counterexample: Option<String>,
}

impl CheckTally {
    fn new(name: &str) -> Self {
        CheckTally {
            name: name.to_string(),
            checked: 0,
            failed: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, g: &Graph) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            let code = graph6_unchecked(g);
            if self
                .first_counterexample
                .as_ref()
                .is_none_or(|c| counterexample_key(&code) < counterexample_key(c))
            {
                self.first_counterexample = Some(code);
            }
        }
    }

    fn merge(mut self, other: CheckTally) -> Self {
        self.checked += other.checked;
        self.failed += other.failed;
        self.first_counterexample = match (self.first_counterexample, other.first_counterexample) {
            (Some(a), Some(b)) => Some(if counterexample_key(&b) < counterexample_key(&a) {
                b
            } else {
                a
            }),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn counterexample_key(code: &str) -> (usize, &str) {
    (code.len(), code)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub max_n: usize,
    pub graphs_examined: u64,
    pub checks: Vec<CheckTally>,
    #[serde(serialize_with = "serialize_real")]
    pub elapsed_seconds: f64,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckTally::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone)]
struct VerifyState {
    graphs: u64,
    tallies: Vec<CheckTally>,
}

impl VerifyState {
    fn new() -> Self {
        VerifyState {
            graphs: 0,
            tallies: checks::ALL.iter().map(|n| CheckTally::new(n)).collect(),
        }
    }

    fn tally(&mut self, name: &str) -> &mut CheckTally {
        self.tallies
            .iter_mut()
            .find(|t| t.name == name)
            .expect("known check name")
    }

    fn merge(mut self, other: VerifyState) -> Self {
        self.graphs += other.graphs;
        self.tallies = self
            .tallies
            .into_iter()
            .zip(other.tallies)
            .map(|(a, b)| a.merge(b))
            .collect();
        self
    }
}

fn verify_visit(state: &mut VerifyState, g: &Graph, tol: Tolerances) {
    let Some(ev) = Evaluation::of(g, true) else {
        return;
    };
    state.graphs += 1;

    let residual = (ev.randic - ev.caporossi).abs();
    state
        .tally(checks::INDEX_IDENTITY)
        .record(residual <= tol.identity, g);
    state.tally(checks::HANDSHAKE).record(ev.handshake, g);

    let star = star_bound(ev.n).expect("n >= 2 without isolated vertices");
    state
        .tally(checks::STAR_BOUND)
        .record(ev.randic >= star - tol.slack, g);
    let star_tight = (ev.randic - star).abs() <= tol.slack;
    state
        .tally(checks::STAR_EQUALITY)
        .record(star_tight == ev.star, g);

    let Some(lower) = ev.lower() else {
        return;
    };
    let decomposition_ok = ev
        .decomposition
        .as_ref()
        .is_some_and(|c| c.holds(tol.identity));
    state
        .tally(checks::DECOMPOSITION)
        .record(decomposition_ok, g);

    state
        .tally(checks::LOWER_BOUND)
        .record(ev.randic >= lower - tol.slack, g);
    let lower_tight = (ev.randic - lower).abs() <= tol.slack;
    state
        .tally(checks::LOWER_EQUALITY)
        .record(lower_tight == ev.biregular, g);

    if let Some(upper) = ev.upper() {
        state
            .tally(checks::UPPER_BOUND)
            .record(ev.randic <= upper + tol.slack, g);
        let upper_tight = (ev.randic - upper).abs() <= tol.slack;
        state
            .tally(checks::UPPER_EQUALITY)
            .record(upper_tight == ev.family, g);
    }
}

/// Runs every per-graph check over all graphs with `2 <= n <= max_n` and no
/// isolated vertices. Failures are report content, not errors.
pub fn verify_theorems(
    max_n: usize,
    jobs: usize,
    tolerances: Tolerances,
) -> Result<VerificationReport> {
    check_order(max_n)?;
    let started = Instant::now();
    let mut state = VerifyState::new();
    for n in 2..=max_n {
        let constraints = Constraints {
            connected: false,
            min_degree: Some(1),
            max_degree: None,
        };
        let part = fold_graphs(
            n,
            constraints,
            jobs,
            VerifyState::new,
            |s, g| verify_visit(s, g, tolerances),
            VerifyState::merge,
        )?;
        state = state.merge(part);
    }
    Ok(VerificationReport {
        max_n,
        graphs_examined: state.graphs,
        checks: state.tallies,
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}

/// Scan with an explicit partition depth, for checking partition invariance.
#[doc(hidden)]
pub fn extremal_scan_partitioned(
    max_n: usize,
    connected_only: bool,
    partition_bits: usize,
    jobs: usize,
) -> Result<Vec<EnumerationSummary>> {
    check_order(max_n)?;
    let slack = Tolerances::default().slack;
    let mut state = ScanState::new();
    for n in 2..=max_n {
        let constraints = Constraints {
            connected: connected_only,
            min_degree: Some(1),
            max_degree: None,
        };
        let bits = partition_bits.min(n * (n - 1) / 2);
        let part = fold_partitioned(
            n,
            constraints,
            bits,
            resolve_jobs(jobs),
            ScanState::new,
            |s, g| scan_visit(s, g, slack),
            merge_scan,
        )?;
        state = merge_scan(state, part);
    }
    Ok(summaries(state))
}
