//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use quipu_core::graph::Graph;
use quipu_core::poly::{rat, IntPoly};
use quipu_core::quipu::{boundary_closed_quipu, enumerate_quipus, theorem_family, Kinds, OpenQuipu, QuipuSpec};
use quipu_core::root::{compare_to_three_over_root_two, comparison_width};
use quipu_core::search::trees::{free_trees, naive_free_trees};
use quipu_core::suites::{run_suite, DEFAULT_SEED};
use quipu_core::{
    brute_force_all_graphs, brute_force_sparse, canonical_code, equal_rho_certificate, minimize_over_quipus,
    rho, verify_exceptions, verify_theorem, CanonicalCode, Exec, MinimizerReport, SearchOptions,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn codes<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> BTreeSet<CanonicalCode> {
    graphs.into_iter().map(|g| canonical_code(g).expect("sparse graph")).collect()
}

fn family_codes(k: usize) -> BTreeSet<CanonicalCode> {
    let graphs: Vec<Graph> = theorem_family(k).iter().map(OpenQuipu::realize).collect();
    codes(&graphs)
}

fn winner_set(r: &MinimizerReport) -> BTreeSet<CanonicalCode> {
    r.winner_codes().into_iter().collect()
}

fn suite(name: &str) -> Result<usize, String> {
    let r = run_suite(name, DEFAULT_SEED, Exec::from_env()).ok_or_else(|| format!("unknown suite {name}"))?;
    ensure(r.pass(), || format!("{name}: {}", r.failures.join("; ")))?;
    Ok(r.cases)
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn all_graphs_at_two() -> Outcome {
    let r = brute_force_all_graphs(7, 4, &opts()).map_err(|e| e.to_string())?;
    ensure(r.sound, || "report not sound".into())?;
    ensure(r.winners.len() == 2, || format!("{} winners", r.winners.len()))?;
    ensure(winner_set(&r) == family_codes(2), || "winners differ from the predicted family".into())?;
    let two = rat(2, 1);
    ensure(r.min_rho.contains(&two) && r.min_rho.is_exactly(&two), || format!("min_rho {}", r.min_rho))?;
    let w = equal_rho_certificate(&r.winners[0].graph, &r.winners[1].graph).ok_or("winners not certified equal")?;
    ensure(w.factor.div_exact(&IntPoly::from_i64(&[-2, 1])).is_some(), || format!("gcd factor {} lacks x - 2", w.factor))?;
    let scanned = r.stats.labeled_graphs_scanned.unwrap_or(0);
    Ok(format!("2 winners, rho = 2 exactly, {scanned} labeled graphs scanned"))
}

fn theorem_three_to_eight() -> Outcome {
    let sizes = [2, 3, 3, 4, 4, 5];
    for (k, &size) in (3..=8).zip(&sizes) {
        let v = verify_theorem(k, &opts()).map_err(|e| format!("k={k}: {e}"))?;
        let bad: Vec<String> = v.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        ensure(v.pass, || format!("k={k}: {}", bad.join("; ")))?;
        let r = v.report.as_ref().ok_or_else(|| format!("k={k}: no report"))?;
        ensure(r.winners.len() == size && winner_set(r) == family_codes(k), || {
            format!("k={k}: {} winners", r.winners.len())
        })?;
    }
    Ok(format!("winner counts {sizes:?} for k = 3..8"))
}

fn known_sparse_minimizers() -> Outcome {
    let cases = [
        (10, 9, OpenQuipu::path(10).realize()),
        (10, 8, OpenQuipu::of(&[1, 7], &[1]).realize()),
        (10, 7, OpenQuipu::of(&[1, 4, 1], &[1, 1]).realize()),
        (9, 4, Graph::cycle(9)),
    ];
    for (n, d, want) in cases {
        let r = brute_force_sparse(n, d, &opts()).map_err(|e| e.to_string())?;
        ensure(r.sound && winner_set(&r) == codes([&want]), || format!("({n}, {d}): {:?}", r.winner_codes()))?;
        ensure(r.min_rho.verify(), || format!("({n}, {d}) certificate does not verify"))?;
    }
    for n in 3..=14 {
        let r = brute_force_sparse(n, n - 1, &opts()).map_err(|e| e.to_string())?;
        ensure(winner_set(&r) == codes([&Graph::path(n)]), || format!("({n}, {}) is not the path", n - 1))?;
    }
    Ok("path, one-pendant, two-pendant and C9 minimizers reproduced".into())
}

fn near_miss_quipus() -> Outcome {
    for k in 7..=12 {
        let v = verify_exceptions(k);
        let bad: Vec<String> = v.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        ensure(v.pass, || format!("k={k}: {}", bad.join("; ")))?;
    }
    Ok("all seven near-miss families lose for k = 7..12".into())
}

fn monotone_radius() -> Outcome {
    let cases = suite("monotone-family")?;
    Ok(format!("{cases} checks: rho_k strictly increasing below 3/sqrt(2), rho_1 = sqrt(3), rho_2 = 2"))
}

fn diameter_window() -> Outcome {
    suite("diameter-bound")?;
    // Independent of the enumerator's diameter bookkeeping: recompute by BFS.
    let n = 16;
    let mut below = 0;
    for d in 1..n {
        for spec in enumerate_quipus(n, d, Kinds::ALL) {
            let QuipuSpec::Open(q) = &spec else { continue };
            let g = q.realize();
            if compare_to_three_over_root_two(&mut rho(&g, &comparison_width())) != Ordering::Less {
                continue;
            }
            below += 1;
            let bfs = g.diameter().ok().and_then(|x| x.finite()).ok_or("disconnected quipu")?;
            ensure(3 * bfs + 4 >= 2 * n, || format!("{spec} has diameter {bfs}"))?;
        }
    }
    for k in [4, 5] {
        let g = boundary_closed_quipu(k).realize();
        let bfs = g.diameter().ok().and_then(|x| x.finite());
        ensure(bfs == Some(2 * k + 2) && 3 * (2 * k + 2) == 2 * (g.order() - 1), || format!("k={k}: {bfs:?}"))?;
        let ord = compare_to_three_over_root_two(&mut rho(&g, &comparison_width()));
        ensure(ord == Ordering::Less, || format!("boundary closed quipu k={k}: {ord:?}"))?;
    }
    Ok(format!("{below} open quipus on 16 vertices below 3/sqrt(2), all in the window"))
}

fn transfer_identities() -> Outcome {
    let mut total = 0;
    for name in ["pq-identities", "t-inequality", "composition", "composition-symmetry", "equal-radius"] {
        total += suite(name)?;
    }
    Ok(format!("{total} identity, inequality, composition and isomorphism cases"))
}

fn edge_transfer() -> Outcome {
    let cases = suite("edge-transfer")?;
    Ok(format!("{} random instances match their predicted ordering", cases - 1))
}

fn oracle_agreement() -> Outcome {
    let naive = naive_free_trees(10).ok_or("naive generator unavailable")?;
    let fast = free_trees(10);
    ensure(fast.len() == 106 && naive.len() == 106, || format!("{} vs {}", fast.len(), naive.len()))?;
    ensure(codes(&fast) == codes(&naive), || "tree catalogues differ".into())?;
    let brute = brute_force_all_graphs(7, 4, &opts()).map_err(|e| e.to_string())?;
    let pairs = [(7, 4), (7, 5), (7, 6), (9, 4), (10, 6), (10, 7), (10, 8), (10, 9), (13, 8)];
    let mut compared = 0;
    for (n, d) in pairs {
        let sparse = brute_force_sparse(n, d, &opts()).map_err(|e| e.to_string())?;
        let quipu = minimize_over_quipus(n, d, None, &opts()).map_err(|e| e.to_string())?;
        if !(sparse.sound && quipu.sound) {
            continue;
        }
        ensure(winner_set(&sparse) == winner_set(&quipu), || format!("({n}, {d}) winner sets differ"))?;
        if (n, d) == (7, 4) {
            ensure(winner_set(&brute) == winner_set(&sparse), || "all-graphs search disagrees at (7, 4)".into())?;
        }
        compared += 1;
    }
    ensure(compared == pairs.len(), || format!("only {compared} sound pairs"))?;
    Ok(format!("106 free trees on 10 vertices; {compared} (n, d) pairs agree across searches"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("all graphs on 7 vertices, diameter 4", all_graphs_at_two),
        ("predicted minimizers for k = 3..8", theorem_three_to_eight),
        ("known sparse minimizers", known_sparse_minimizers),
        ("near-miss quipus", near_miss_quipus),
        ("monotone reference radius", monotone_radius),
        ("diameter window below 3/sqrt(2)", diameter_window),
        ("transfer identities", transfer_identities),
        ("edge transfer", edge_transfer),
        ("oracle cross-validation", oracle_agreement),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
