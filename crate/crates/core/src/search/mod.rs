//! Minimum spectral radius searches over a fixed order and diameter.
//!
//! Every search funnels its candidates through one pipeline: a guaranteed
//! floating-point bracket for each candidate, exact certification of the
//! near-minimal ones, an exact tournament that keeps all ties, and a seeded
//! exact audit of a sample of everything pruned along the way.

pub mod brute;
mod theorem;
pub mod trees;

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::SearchError;
use crate::exec::Exec;
use crate::float::rho_float;
use crate::graph::Graph;
use crate::graph6;
use crate::poly::{rat, rational_to_string, Rational};
use crate::quipu::{classify, diameter_bound_ok, enumerate_quipus, screen, Kinds, QuipuSpec};
use crate::root::{comparison_width, compare_roots, compare_to_three_over_root_two, rho, CertifiedRoot};

pub use theorem::{verify_exceptions, verify_theorem, Check, Verdict};

/// Largest order accepted by the tree and unicyclic search.
pub const SPARSE_MAX_ORDER: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchSpace {
    AllGraphs,
    Sparse,
    QuipuFamily,
}

impl fmt::Display for SearchSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchSpace::AllGraphs => "all-graphs",
            SearchSpace::Sparse => "sparse",
            SearchSpace::QuipuFamily => "quipu-family",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub exec: Exec,
    /// Width of the reported `min_rho` interval.
    pub tolerance: Rational,
    /// Candidates whose float lower bound exceeds the best upper bound by more
    /// than this are pruned without exact work.
    pub float_margin: f64,
    /// Fraction of pruned candidates re-checked exactly.
    pub audit_rate: f64,
    pub audit_seed: u64,
    pub budget: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exec: Exec::from_env(),
            tolerance: rat(1, 1_000_000_000_000),
            float_margin: 1e-3,
            audit_rate: 0.01,
            audit_seed: 0x5eed,
            budget: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub graph: Graph,
    pub spec: Option<QuipuSpec>,
}

impl Candidate {
    fn classified(graph: Graph) -> Self {
        let spec = classify(&graph).map(|s| s.canonicalize());
        Candidate { graph, spec }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Winner {
    pub code: CanonicalCode,
    pub graph: Graph,
    pub spec: Option<QuipuSpec>,
}

impl Winner {
    pub fn graph6(&self) -> String {
        graph6::encode(&self.graph)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub candidates_examined: usize,
    /// Removed by the closed-form quipu conditions.
    pub screened_out: usize,
    pub float_pruned: usize,
    pub exactly_certified: usize,
    pub audited: usize,
    pub audit_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labeled_graphs_scanned: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct MinimizerReport {
    pub n: usize,
    pub d: usize,
    pub search_space: SearchSpace,
    /// False when a restricted search found nothing below `3/√2`, in which case
    /// the restriction to trees, unicyclic graphs or quipus is not justified.
    pub sound: bool,
    pub min_rho: CertifiedRoot,
    /// Sorted by canonical code.
    pub winners: Vec<Winner>,
    pub stats: SearchStats,
}

impl MinimizerReport {
    pub fn winner_codes(&self) -> Vec<CanonicalCode> {
        self.winners.iter().map(|w| w.code.clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        let winners: Vec<Value> = self
            .winners
            .iter()
            .map(|w| json!({ "graph6": w.graph6(), "spec": w.spec.as_ref().map(ToString::to_string) }))
            .collect();
        json!({
            "n": self.n,
            "d": self.d,
            "search_space": self.search_space,
            "sound": self.sound,
            "min_rho": {
                "lo": rational_to_string(&self.min_rho.lo()),
                "hi": rational_to_string(&self.min_rho.hi()),
                "poly": self.min_rho.poly(),
            },
            "winners": winners,
            "stats": self.stats,
        })
    }

    pub const CSV_HEADER: &'static str = "n,d,search_space,sound,winners,rho_lo,rho_hi";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.d,
            self.search_space,
            self.sound,
            self.winners.len(),
            rational_to_string(&self.min_rho.lo()),
            rational_to_string(&self.min_rho.hi())
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} d={} space={}{}\nmin rho {}\n",
            self.n,
            self.d,
            self.search_space,
            if self.sound { "" } else { " (UNSOUND)" },
            self.min_rho
        );
        for w in &self.winners {
            match &w.spec {
                Some(s) => out.push_str(&format!("  {}  {}\n", w.graph6(), s)),
                None => out.push_str(&format!("  {}\n", w.graph6())),
            }
        }
        let s = &self.stats;
        out.push_str(&format!(
            "examined {} screened {} float-pruned {} certified {} audited {} (failures {})\n",
            s.candidates_examined, s.screened_out, s.float_pruned, s.exactly_certified, s.audited, s.audit_failures
        ));
        out
    }
}

struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    fn new(limit: Option<Duration>) -> Self {
        Budget { start: Instant::now(), limit }
    }

    fn check(&self, phase: &str, examined: usize) -> Result<(), SearchError> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => {
                Err(SearchError::BudgetExceeded { phase: phase.to_string(), examined })
            }
            _ => Ok(()),
        }
    }
}

/// Shared tail of every search. `discarded` holds candidates already removed
/// by closed-form conditions; they only take part in the audit.
#[allow(clippy::too_many_arguments)]
fn select_minimizers(
    n: usize,
    d: usize,
    space: SearchSpace,
    candidates: Vec<Candidate>,
    discarded: Vec<Candidate>,
    opts: &SearchOptions,
    budget: &Budget,
    mut stats: SearchStats,
) -> Result<MinimizerReport, SearchError> {
    if candidates.is_empty() {
        return Err(SearchError::NoCandidates { n, d });
    }
    stats.candidates_examined = candidates.len() + discarded.len();
    stats.screened_out = discarded.len();

    let brackets = opts.exec.map(&candidates, |c| rho_float(&c.graph));
    let best_hi = brackets.iter().map(|b| b.hi).fold(f64::INFINITY, f64::min);
    let cut = best_hi + opts.float_margin;
    let mut survivors: Vec<usize> = (0..candidates.len()).filter(|&i| brackets[i].lo <= cut).collect();
    let pruned: Vec<usize> = (0..candidates.len()).filter(|&i| brackets[i].lo > cut).collect();
    stats.float_pruned = pruned.len();
    budget.check("float screen", candidates.len())?;

    survivors.sort_by(|&a, &b| brackets[a].estimate.total_cmp(&brackets[b].estimate).then(a.cmp(&b)));
    let tol = comparison_width();
    let roots: Vec<CertifiedRoot> = opts.exec.map(&survivors, |&i| rho(&candidates[i].graph, &tol));
    stats.exactly_certified = roots.len();
    let mut best_root = roots[0].clone();
    let mut best = vec![survivors[0]];
    for (k, &i) in survivors.iter().enumerate().skip(1) {
        let mut r = roots[k].clone();
        match compare_roots(&mut r, &mut best_root) {
            Ordering::Less => {
                best_root = r;
                best = vec![i];
            }
            Ordering::Equal => best.push(i),
            Ordering::Greater => {}
        }
        budget.check("exact tournament", candidates.len())?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.audit_seed);
    let mut audit: Vec<&Graph> = Vec::new();
    for pool in [pruned.iter().map(|&i| &candidates[i].graph).collect::<Vec<_>>(), discarded.iter().map(|c| &c.graph).collect()] {
        if pool.is_empty() {
            continue;
        }
        let amount = ((pool.len() as f64 * opts.audit_rate).ceil() as usize).clamp(1, pool.len());
        let mut picks = sample(&mut rng, pool.len(), amount).into_vec();
        picks.sort_unstable();
        audit.extend(picks.into_iter().map(|i| pool[i]));
    }
    let audit_ok = opts.exec.map(&audit, |g| {
        let mut r = rho(g, &tol);
        compare_roots(&mut r, &mut best_root.clone()) == Ordering::Greater
    });
    stats.audited = audit.len();
    stats.audit_failures = audit_ok.iter().filter(|ok| !**ok).count();

    let mut winners: Vec<Winner> = best
        .into_iter()
        .map(|i| {
            let c = &candidates[i];
            Winner {
                code: canonical_code(&c.graph).expect("candidates have canonical codes"),
                graph: c.graph.clone(),
                spec: c.spec.clone(),
            }
        })
        .collect();
    winners.sort_by(|a, b| a.code.cmp(&b.code));
    winners.dedup_by(|a, b| a.code == b.code);

    let mut min_rho = rho(&winners[0].graph, &opts.tolerance);
    let sound = space == SearchSpace::AllGraphs || compare_to_three_over_root_two(&mut min_rho.clone()) == Ordering::Less;
    min_rho.refine(&opts.tolerance);
    Ok(MinimizerReport { n, d, search_space: space, sound, min_rho, winners, stats })
}

fn diameter_is(g: &Graph, d: usize) -> bool {
    g.diameter().ok().and_then(|x| x.finite()) == Some(d)
}

/// Exhaustive search over every labeled graph on `n ≤ 7` vertices.
pub fn brute_force_all_graphs(n: usize, d: usize, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    let budget = Budget::new(opts.budget);
    let (graphs, scanned) = brute::connected_with_diameter(n, d, opts.exec)
        .ok_or(SearchError::TooLarge { n, max: brute::ALL_GRAPHS_MAX_ORDER })?;
    budget.check("labeled enumeration", 0)?;
    let candidates = graphs.into_iter().map(Candidate::classified).collect();
    let stats = SearchStats { labeled_graphs_scanned: Some(scanned), ..SearchStats::default() };
    select_minimizers(n, d, SearchSpace::AllGraphs, candidates, Vec::new(), opts, &budget, stats)
}

/// Search over all free trees and connected unicyclic graphs of order `n ≤ 14`.
pub fn brute_force_sparse(n: usize, d: usize, opts: &SearchOptions) -> Result<MinimizerReport, SearchError> {
    if n > SPARSE_MAX_ORDER {
        return Err(SearchError::TooLarge { n, max: SPARSE_MAX_ORDER });
    }
    let budget = Budget::new(opts.budget);
    let mut graphs = trees::free_trees(n);
    graphs.extend(trees::unicyclic_graphs(n));
    let keep = opts.exec.map(&graphs, |g| diameter_is(g, d));
    let candidates: Vec<Candidate> = graphs
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then(|| Candidate::classified(g)))
        .collect();
    budget.check("sparse enumeration", candidates.len())?;
    select_minimizers(n, d, SearchSpace::Sparse, candidates, Vec::new(), opts, &budget, SearchStats::default())
}

/// Whether the closed-form conditions force `ρ > 3/√2` for this quipu.
fn exceeds_threshold_by_screen(spec: &QuipuSpec, n: usize, d: usize) -> bool {
    if diameter_bound_ok(spec, n, d) == Some(false) {
        return true;
    }
    match spec {
        QuipuSpec::Open(q) => {
            let rep = screen(q);
            rep.necessary_ok == Some(false) || rep.sufficient_violation == Some(true)
        }
        _ => false,
    }
}

/// Search over open quipus, closed quipus and daggers of order `n` and diameter `d`.
///
/// With a `reference` graph of the same order and diameter whose certified
/// radius is below `3/√2`, quipus that the closed-form conditions place above
/// `3/√2` are dropped before the float screen.
pub fn minimize_over_quipus(
    n: usize,
    d: usize,
    reference: Option<&Graph>,
    opts: &SearchOptions,
) -> Result<MinimizerReport, SearchError> {
    let budget = Budget::new(opts.budget);
    let specs = enumerate_quipus(n, d, Kinds::ALL);
    budget.check("quipu enumeration", specs.len())?;
    let screening = reference.is_some_and(|g| {
        g.order() == n
            && diameter_is(g, d)
            && compare_to_three_over_root_two(&mut rho(g, &comparison_width())) == Ordering::Less
    });
    let drop = if screening {
        opts.exec.map(&specs, |s| exceeds_threshold_by_screen(s, n, d))
    } else {
        vec![false; specs.len()]
    };
    let (mut candidates, mut discarded) = (Vec::new(), Vec::new());
    for (spec, dropped) in specs.into_iter().zip(drop) {
        let c = Candidate { graph: spec.realize(), spec: Some(spec) };
        if dropped {
            discarded.push(c);
        } else {
            candidates.push(c);
        }
    }
    select_minimizers(n, d, SearchSpace::QuipuFamily, candidates, discarded, opts, &budget, SearchStats::default())
}
