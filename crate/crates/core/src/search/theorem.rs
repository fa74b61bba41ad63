//! End-to-end checks of the minimizer classification at order `3k + 1` and
//! diameter `2k`, and of the near-miss quipus that the classification rules out.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::{brute_force_all_graphs, minimize_over_quipus, MinimizerReport, SearchOptions};
use crate::canon::canonical_code;
use crate::error::SearchError;
use crate::quipu::{closed_equal_radius_quipu, exceptional_comparator, exceptional_specs, screen, spider, theorem_family};
use crate::root::{compare_rho, compare_to_three_over_root_two, comparison_width, equal_rho_certificate, rho};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub k: usize,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub report: Option<MinimizerReport>,
}

impl Verdict {
    fn from_checks(k: usize, checks: Vec<Check>, report: Option<MinimizerReport>) -> Self {
        Verdict { k, pass: checks.iter().all(|c| c.pass), checks, report }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "pass": self.pass,
            "checks": self.checks,
            "report": self.report.as_ref().map(MinimizerReport::to_json),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("k={} {}\n", self.k, if self.pass { "PASS" } else { "FAIL" });
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}: {}\n", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail));
        }
        if let Some(r) = &self.report {
            out.push_str(&r.to_text());
        }
        out
    }
}

/// Runs the quipu search at `(3k + 1, 2k)` and checks that the winners are
/// exactly the family `P^(i,j)_(i,i+j-1,j)`, `i + j = k`, all tied exactly,
/// that the radius grows with `k`, and for `k = 2` that the all-graphs search agrees.
pub fn verify_theorem(k: usize, opts: &SearchOptions) -> Result<Verdict, SearchError> {
    if k < 2 {
        let check = Check::new("order at least seven", false, format!("k = {k} is below 2"));
        return Ok(Verdict::from_checks(k, vec![check], None));
    }
    let (n, d) = (3 * k + 1, 2 * k);
    let reference = spider(k).realize();
    let report = minimize_over_quipus(n, d, Some(&reference), opts)?;
    let mut checks = Vec::new();

    checks.push(Check::new("restriction justified", report.sound, "minimum certified below 3/sqrt(2)"));

    let expected: BTreeSet<_> =
        theorem_family(k).iter().map(|q| canonical_code(&q.realize()).expect("trees have codes")).collect();
    let found: BTreeSet<_> = report.winner_codes().into_iter().collect();
    let missing = expected.difference(&found).count();
    let extra: Vec<String> = report
        .winners
        .iter()
        .filter(|w| !expected.contains(&w.code))
        .map(|w| w.spec.as_ref().map_or_else(|| w.graph6(), ToString::to_string))
        .collect();
    checks.push(Check::new(
        "winners are the predicted family",
        missing == 0 && extra.is_empty(),
        format!("{} winners, expected {}, missing {missing}, unexpected [{}]", found.len(), k / 2 + 1, extra.join(" ")),
    ));

    let ties = report.winners.iter().skip(1).filter(|w| equal_rho_certificate(&w.graph, &report.winners[0].graph).is_some()).count();
    checks.push(Check::new(
        "winners tie exactly",
        ties + 1 == report.winners.len(),
        format!("{} of {} certified equal by common factor", ties + 1, report.winners.len()),
    ));

    let companions: Vec<(usize, usize)> = (1..k).map(|i| (i, k - i)).collect();
    let companion_ties = companions
        .iter()
        .filter(|&&(i, j)| equal_rho_certificate(&closed_equal_radius_quipu(i, j).realize(), &reference).is_some())
        .count();
    checks.push(Check::new(
        "closed companions share the radius",
        companion_ties == companions.len(),
        format!("{companion_ties} of {} closed quipus tied", companions.len()),
    ));

    let next = compare_rho(&spider(k + 1).realize(), &reference);
    checks.push(Check::new("radius increases with k", next == Ordering::Greater, format!("{next:?}")));

    let below = compare_to_three_over_root_two(&mut rho(&reference, &comparison_width()));
    checks.push(Check::new("radius below 3/sqrt(2)", below == Ordering::Less, format!("{below:?}")));

    checks.push(Check::new(
        "pruning audit clean",
        report.stats.audit_failures == 0,
        format!("{} audited, {} failures", report.stats.audited, report.stats.audit_failures),
    ));

    if k == 2 {
        let brute = brute_force_all_graphs(n, d, opts)?;
        checks.push(Check::new(
            "all-graphs search agrees",
            brute.winner_codes() == report.winner_codes(),
            format!("{} labeled graphs scanned", brute.stats.labeled_graphs_scanned.unwrap_or(0)),
        ));
    }
    Ok(Verdict::from_checks(k, checks, Some(report)))
}

/// Checks that each near-miss quipu at `(3k + 1, 2k)` has radius strictly
/// above `ρ_k`, and that the comparator used for the last one exceeds `3/√2`
/// and fails the closed-form lower bound for its right end. Needs `k ≥ 7`.
pub fn verify_exceptions(k: usize) -> Verdict {
    if k < 7 {
        let check = Check::new("k at least seven", false, format!("k = {k}"));
        return Verdict::from_checks(k, vec![check], None);
    }
    let reference = spider(k).realize();
    let mut checks: Vec<Check> = exceptional_specs(k)
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let ord = compare_rho(&q.realize(), &reference);
            Check::new(format!("near-miss {} above rho_k", i + 1), ord == Ordering::Greater, format!("{q}: {ord:?}"))
        })
        .collect();
    let comp = exceptional_comparator(k);
    let ord = compare_to_three_over_root_two(&mut rho(&comp.realize(), &comparison_width()));
    checks.push(Check::new("comparator above 3/sqrt(2)", ord == Ordering::Greater, format!("{comp}: {ord:?}")));
    let necessary = screen(&comp).necessary_ok;
    checks.push(Check::new(
        "comparator fails the lower bounds",
        necessary == Some(false),
        format!("necessary conditions: {necessary:?}"),
    ));
    Verdict::from_checks(k, checks, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;

    #[test]
    fn theorem_small_k() {
        let opts = SearchOptions { exec: Exec::Parallel, ..SearchOptions::default() };
        for k in 3..=4 {
            let v = verify_theorem(k, &opts).unwrap();
            assert!(v.pass, "{}", v.to_text());
            assert_eq!(v.report.unwrap().winners.len(), k / 2 + 1);
        }
    }

    #[test]
    fn exceptions_at_seven() {
        let v = verify_exceptions(7);
        assert!(v.pass, "{}", v.to_text());
        assert!(!verify_exceptions(6).pass);
    }
}
