//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Runs as a plain binary (`harness = false`) so the summary lines are
//! always shown:
//!
//! ```text
//! cargo test --release --test acceptance
//! ```

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{brute_connect, p2_naive, range, rng};
use rand_core::RngCore;
use tsubdiv::finder_hk::{ball_decomposition, decomposition_is_valid, Mode};
use tsubdiv::finder_kk::{greedy_independent_set, regularity_hypothesis_holds};
use tsubdiv::generators::{blowup_construction, random_tournament, rotational_tournament};
use tsubdiv::oracle::ScanBudget;
use tsubdiv::tournament::partition_thirds;
use tsubdiv::{
    build_aux_graph, connect_pairs, degree_spread, find_hk, find_kk, oracle_contains, p2, p2_by_paths, ramsey_scan,
    verify_embedding, FinderConfig, OracleAnswer, Pattern, ScanMode, SubdivisionEmbedding, Tournament,
};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

/// Embeddings returned anywhere in the suite, re-verified under criterion 9.
#[derive(Default)]
struct Returned(Vec<(Tournament, SubdivisionEmbedding)>);

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.pass && in_time;
    let timing = if in_time {
        format!("{:.2?}", elapsed)
    } else {
        format!("{:.2?} exceeds {:?}", elapsed, limit)
    };
    println!(
        "{} [{id:>2}] {name}: {} ({timing})",
        if pass { "PASS" } else { "FAIL" },
        out.detail
    );
    pass
}

fn identity() -> Outcome {
    let mut r = rng(1);
    let mut pairs = 0u64;
    let mut bad = 0u64;
    for _ in 0..1000 {
        let n = range(&mut r, 10, 200);
        let t = random_tournament(n, r.next_u64()).unwrap();
        let deg: Vec<i64> = (0..n)
            .map(|u| (0..n).filter(|&w| w != u && t.has_arc(u, w)).count() as i64)
            .collect();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let lhs = p2(&t, u, v).unwrap() as i64 - p2(&t, v, u).unwrap() as i64;
                pairs += 1;
                if lhs != deg[u] - deg[v] {
                    bad += 1;
                }
            }
        }
    }
    Outcome::new(bad == 0, format!("{bad} mismatches over {pairs} ordered pairs"))
}

fn triangle() -> Outcome {
    let mut r = rng(2);
    let mut triples = 0u64;
    let mut bad = 0u64;
    for _ in 0..200 {
        let n = range(&mut r, 3, 60);
        let t = random_tournament(n, r.next_u64()).unwrap();
        let m: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|v| p2_naive(&t, u, v)).collect()).collect();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    triples += 1;
                    if m[u][v] > m[u][w] + m[w][v] {
                        bad += 1;
                    }
                }
            }
        }
    }
    Outcome::new(bad == 0, format!("{bad} violations over {triples} triples"))
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(3);
    let mut pairs = 0u64;
    let mut bad = 0u64;
    for i in 0..100 {
        let n = range(&mut r, 2, 200);
        let t = random_tournament(n, r.next_u64()).unwrap();
        for u in 0..n {
            for v in 0..n {
                let fast = p2(&t, u, v).unwrap();
                pairs += 1;
                if fast != p2_by_paths(&t, u, v).unwrap() {
                    bad += 1;
                }
                // The definition itself, on a subset of instances.
                if i % 10 == 0 && fast != p2_naive(&t, u, v) {
                    bad += 1;
                }
            }
        }
    }
    Outcome::new(bad == 0, format!("{bad} mismatches over {pairs} ordered pairs"))
}

/// Some directed path `a→m→b` on three distinct vertices.
fn has_two_path(t: &Tournament) -> bool {
    let n = t.n();
    (0..n).any(|a| (0..n).any(|m| (0..n).any(|b| a != b && a != m && m != b && t.has_arc(a, m) && t.has_arc(m, b))))
}

fn ramsey_h2() -> Outcome {
    let budget = ScanBudget::default();
    let two = ramsey_scan(Pattern::Hk, 2, 2, ScanMode::Exhaustive, 0, budget).unwrap();
    let three = ramsey_scan(Pattern::Hk, 2, 3, ScanMode::Exhaustive, 0, budget).unwrap();
    let brute_three = common::all_tournaments(3).iter().filter(|t| has_two_path(t)).count() as u64;
    let pass = two.first_counterexample.is_some()
        && two.containing == 0
        && three.total == 8
        && three.containing == 8
        && brute_three == 8;
    Outcome::new(
        pass,
        format!(
            "n=2: {}/{} contain; n=3: {}/{} contain (brute force {brute_three}/8)",
            two.containing, two.total, three.containing, three.total
        ),
    )
}

/// Independent H₃ test: an ordered branch triple `(a, b, c)` with distinct midpoints for `ab`, `ac`, `bc`, all six vertices distinct.
fn has_h3_naive(t: &Tournament) -> bool {
    let n = t.n();
    let via = |x: usize, y: usize| -> Vec<usize> {
        (0..n)
            .filter(|&m| m != x && m != y && t.has_arc(x, m) && t.has_arc(m, y))
            .collect()
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || a == c || b == c {
                    continue;
                }
                let branch = [a, b, c];
                let ab = via(a, b);
                let ac = via(a, c);
                let bc = via(b, c);
                for &x in &ab {
                    for &y in &ac {
                        for &z in &bc {
                            let mids = [x, y, z];
                            let distinct = x != y && x != z && y != z;
                            if distinct && mids.iter().all(|m| !branch.contains(m)) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

fn ramsey_h3() -> Outcome {
    let budget = ScanBudget::default();
    let six = ramsey_scan(Pattern::Hk, 3, 6, ScanMode::Exhaustive, 0, budget).unwrap();
    let brute_six = common::all_tournaments(6).iter().filter(|t| has_h3_naive(t)).count() as u64;
    let seven = ramsey_scan(Pattern::Hk, 3, 7, ScanMode::Exhaustive, 0, budget).unwrap();
    let pass = seven.total == 1 << 21 && six.containing == brute_six && seven.fraction() >= six.fraction();
    Outcome::new(
        pass,
        format!(
            "n=6: {}/{} ({:.4}, brute force {brute_six}); n=7: {}/{} ({:.4})",
            six.containing,
            six.total,
            six.fraction(),
            seven.containing,
            seven.total,
            seven.fraction()
        ),
    )
}

fn regular_kk(returned: &mut Returned) -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (n, k) in [(271, 3), (1001, 4)] {
        let start = Instant::now();
        let t = rotational_tournament(n).unwrap();
        let hyp = regularity_hypothesis_holds(&t, k) && degree_spread(&t) == 0;
        let ok = match find_kk(&t, k) {
            Ok(e) => {
                let valid = verify_embedding(&t, &e).is_empty() && e.k == k;
                returned.0.push((t, e));
                valid
            }
            Err(_) => false,
        };
        let in_time = start.elapsed() < Duration::from_secs(120);
        pass &= hyp && ok && in_time;
        details.push(format!(
            "(n={n}, k={k}) {} in {:.2?}",
            if ok { "found+verified" } else { "FAILED" },
            start.elapsed()
        ));
    }
    Outcome::new(pass, details.join("; "))
}

fn blowup_tightness() -> Outcome {
    let t = blowup_construction(30, 4).unwrap();
    let degs: Vec<usize> = (0..30).map(|u| (0..30).filter(|&w| t.has_arc(u, w)).count()).collect();
    let spread = degs.iter().max().unwrap() - degs.iter().min().unwrap();
    let answer = oracle_contains(&t, Pattern::Kk, 4, tsubdiv::oracle::DEFAULT_ORACLE_BUDGET).unwrap();
    let absent = answer == OracleAnswer::Absent;
    Outcome::new(
        spread <= 10 && spread == degree_spread(&t) && absent,
        format!("spread {spread}, oracle {}", if absent { "absent" } else { "FOUND" }),
    )
}

/// Longest run of `verts`, in degree order, whose out-degrees differ by less
/// than `k²`.
fn degree_window(t: &Tournament, verts: &[usize], k: usize) -> Vec<usize> {
    let mut sorted = verts.to_vec();
    sorted.sort_by_key(|&v| t.out_degree(v));
    let (mut best, mut lo) = ((0, 0), 0);
    for hi in 0..sorted.len() {
        while t.out_degree(sorted[hi]) - t.out_degree(sorted[lo]) >= k * k {
            lo += 1;
        }
        if hi + 1 - lo > best.1 - best.0 {
            best = (lo, hi + 1);
        }
    }
    let mut w = sorted[best.0..best.1].to_vec();
    w.sort_unstable();
    w
}

fn ball_growth() -> Outcome {
    use tsubdiv::finder_hk::{check_ball_growth, degree_difference_holds};
    let k = 3;
    let mut r = rng(8);
    let mut in_contract = 0;
    let mut violations = 0;
    let mut worst: f64 = 0.0;
    let mut middle_hyp = 0;
    for _ in 0..20 {
        let t = random_tournament(2000, r.next_u64()).unwrap();
        let v2 = partition_thirds(&t).v2;
        // The middle half as is, and its largest sub-window that satisfies
        // the degree-difference hypothesis.
        let window = degree_window(&t, &v2, k);
        for verts in [v2, window] {
            let g = build_aux_graph(&t, &verts, k * k).unwrap();
            let report = check_ball_growth(&g, k, 20.0);
            if degree_difference_holds(&t, &verts, k) {
                if verts.len() == 1000 {
                    middle_hyp += 1;
                }
                in_contract += 1;
                violations += report.violations;
                worst = worst.max(report.worst_ratio);
            }
        }
    }
    Outcome::new(
        violations == 0 && in_contract >= 20,
        format!(
            "{violations} violations over {in_contract} graphs satisfying the hypothesis \
             ({middle_hyp} full middle halves), worst ratio {worst:.4}"
        ),
    )
}

fn soundness(returned: &Returned) -> Outcome {
    let mut unsound = 0;
    let mut checked = 0;
    for (t, e) in &returned.0 {
        checked += 1;
        if !verify_embedding(t, e).is_empty() {
            unsound += 1;
        }
    }

    // Practical find_hk, seeds 1..=100.
    let practical = FinderConfig::practical();
    let faithful = FinderConfig::faithful();
    let (mut ok_practical, mut ok_faithful) = (0, 0);
    let mut decompositions = 0;
    let mut bad_decompositions = 0;
    for seed in 1..=100u64 {
        let t = random_tournament(500, seed).unwrap();
        for (cfg, tally) in [(&practical, &mut ok_practical), (&faithful, &mut ok_faithful)] {
            if let Ok(e) = find_hk(&t, 4, cfg) {
                checked += 1;
                *tally += 1;
                if !verify_embedding(&t, &e).is_empty() || e.k != 4 {
                    unsound += 1;
                }
            }
        }
        // Decomposition invariants, including thresholds dense enough to
        // give non-trivial balls.
        if seed <= 20 {
            let v2 = partition_thirds(&t).v2;
            for theta in [16, 100, 115, 125] {
                let g = build_aux_graph(&t, &v2, theta).unwrap();
                if let Ok(parts) = ball_decomposition(&g, 500, 4, Mode::Practical) {
                    decompositions += 1;
                    if !decomposition_is_valid(&g, &parts) {
                        bad_decompositions += 1;
                    }
                }
                if let Ok(parts) = ball_decomposition(&g, 500, 4, Mode::Faithful) {
                    decompositions += 1;
                    if !decomposition_is_valid(&g, &parts) {
                        bad_decompositions += 1;
                    }
                }
            }
        }
    }

    // Connector under the counting hypothesis: every demand has at least
    // k² − 1 paths of length exactly two.
    let mut r = rng(9);
    let (mut hyp_instances, mut hyp_failures) = (0, 0);
    for _ in 0..300 {
        let n = range(&mut r, 30, 160);
        let k = range(&mut r, 2, 5);
        let t = random_tournament(n, r.next_u64()).unwrap();
        let all: Vec<usize> = (0..n).collect();
        let g = build_aux_graph(&t, &all, k * k).unwrap();
        let independent = greedy_independent_set(&g);
        if independent.len() < k {
            continue;
        }
        let start = range(&mut r, 0, independent.len() - k);
        let branch = &independent[start..start + k];
        for pattern in [Pattern::Hk, Pattern::Kk] {
            let demands: Vec<(usize, usize)> = pattern.pairs(k).iter().map(|&(i, j)| (branch[i], branch[j])).collect();
            let paths = |u: usize, v: usize| {
                (0..n)
                    .filter(|&m| m != u && m != v && t.has_arc(u, m) && t.has_arc(m, v))
                    .count()
            };
            if demands.iter().all(|&(u, v)| paths(u, v) + 1 >= k * k) {
                hyp_instances += 1;
                let forbidden = tsubdiv::VertexSet::from_iter_bounded(n, branch.iter().copied());
                if connect_pairs(&t, &demands, &forbidden).is_err() {
                    hyp_failures += 1;
                }
            }
        }
    }

    let rate = ok_practical as f64 / 100.0;
    let pass = unsound == 0 && rate >= 0.95 && bad_decompositions == 0 && hyp_failures == 0 && hyp_instances > 0;
    Outcome::new(
        pass,
        format!(
            "{unsound} unsound of {checked} embeddings; practical success {ok_practical}/100, \
             faithful {ok_faithful}/100; {bad_decompositions} invalid of {decompositions} decompositions; \
             connector failed {hyp_failures} of {hyp_instances} instances meeting the path-count hypothesis"
        ),
    )
}

fn connector_exactness() -> Outcome {
    let mut r = rng(10);
    let (mut feasible, mut infeasible, mut discrepancies, mut bad_assignments) = (0, 0, 0, 0);
    for _ in 0..500 {
        let n = range(&mut r, 3, 30);
        let t = random_tournament(n, r.next_u64()).unwrap();
        let max_pairs = n * (n - 1);
        let want = range(&mut r, 1, 12.min(max_pairs));
        let mut demands = BTreeSet::new();
        while demands.len() < want {
            let u = range(&mut r, 0, n - 1);
            let v = range(&mut r, 0, n - 1);
            if u != v {
                demands.insert((u, v));
            }
        }
        let demands: Vec<(usize, usize)> = demands.into_iter().collect();
        let forbidden: BTreeSet<usize> = (0..n).filter(|_| r.next_u64().is_multiple_of(8)).collect();
        let brute = brute_connect(&t, &demands, &forbidden);
        let fast = connect_pairs(&t, &demands, &common::to_set(n, &forbidden));
        match (&brute, &fast) {
            (Some(_), Ok(a)) => {
                feasible += 1;
                let endpoints: BTreeSet<usize> = demands.iter().flat_map(|&(u, v)| [u, v]).collect();
                let mids: BTreeSet<usize> = a.values().copied().collect();
                let valid = a.len() == demands.len()
                    && mids.len() == demands.len()
                    && demands.iter().all(|&(u, v)| {
                        let m = a[&(u, v)];
                        t.has_arc(u, m) && t.has_arc(m, v) && !forbidden.contains(&m) && !endpoints.contains(&m)
                    });
                if !valid {
                    bad_assignments += 1;
                }
            }
            (None, Err(_)) => infeasible += 1,
            _ => discrepancies += 1,
        }
    }
    Outcome::new(
        discrepancies == 0 && bad_assignments == 0,
        format!(
            "{discrepancies} discrepancies ({feasible} feasible, {infeasible} infeasible), \
             {bad_assignments} invalid assignments"
        ),
    )
}

fn main() {
    // `cargo test -- --list` and filters are not meaningful here.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut returned = Returned::default();
    let secs = Duration::from_secs;
    let results = [
        run(1, "P2 identity", secs(10), identity),
        run(2, "triangle inequality", secs(30), triangle),
        run(3, "p2 equals path enumeration", secs(60), oracle_equivalence),
        run(4, "Ramsey number of H2 is 3", secs(1), ramsey_h2),
        run(5, "exhaustive H3 scan n=6,7", secs(30 * 60), ramsey_h3),
        run(6, "find_kk on regular tournaments", secs(240), || {
            regular_kk(&mut returned)
        }),
        run(7, "blow-up avoids K4 subdivision", secs(300), blowup_tightness),
        run(8, "ball growth on middle-half graphs", secs(600), ball_growth),
        run(9, "finder soundness", secs(1800), || soundness(&returned)),
        run(10, "connector exactness", secs(600), connector_exactness),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
