//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

use std::time::Instant;

use mexlab::experiment;
use mexlab_core::bounds::*;
use mexlab_core::construct::{norm_graph, NormGraphParams};
use mexlab_core::experiment::{fit_slope, ExperimentSpec, Family};
use mexlab_core::extraction::{extract_dense, ExtractionParams, GuaranteeStatus};
use mexlab_core::generate::{complete, complete_multipartite, cycle, gnp, path, petersen, star};
use mexlab_core::oracle::{mex_brute, OracleQuery, CANON_MAX};
use mexlab_core::{count_cliques, is_free, Graph, Pattern, Rational};

/// Agreement of the two lemma-constant evaluations, and of the identity suites.
const IDENTITY_TOL: f64 = 1e-12;
/// Closed-form constants compared with their exact values.
const EXACT_TOL: f64 = 1e-15;
const AC1_GRAPHS: u64 = 500;
const AC1_MAX_N: u64 = 12;
const AC1_PS: [f64; 3] = [0.3, 0.5, 0.8];
const AC3_INSTANCES: usize = 50;
const AC5_RATIO: (f64, f64) = (0.5, 1.5);
const AC5_SLOPE: (f64, f64) = (0.85, 1.15);
const AC6_SLOPE_TOL: f64 = 0.1;
const AC8_MIN_SLOPE: f64 = 0.8;

type Check = Result<String, String>;

fn pat(g: Graph) -> Pattern {
    Pattern::new(g).unwrap()
}

fn kst(s: usize, t: usize) -> Pattern {
    pat(complete_multipartite(&[s, t]).unwrap())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Check {
    let mut pairs = 0;
    for i in 0..AC1_GRAPHS {
        let n = (1 + i % AC1_MAX_N) as usize;
        let p = AC1_PS[(i / AC1_MAX_N) as usize % AC1_PS.len()];
        let g = gnp(n, p, 0x5eed_0000 + i).map_err(|e| e.to_string())?;
        let k = count_cliques(&g, 5);
        for r in 2..=5 {
            for u in 1..r {
                let ku = k.k(u);
                if ku == 0 {
                    continue;
                }
                let cap = lemma_constant(u, r).map_err(|e| e.to_string())? * (ku as f64).powf(r as f64 / u as f64);
                ensure((k.k(r) as f64) < cap, || format!("graph {i} (n={n}, p={p}): k_{r}={} not below {cap}", k.k(r)))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{AC1_GRAPHS} graphs, {pairs} (u, r) checks"))
}

fn ac2() -> Check {
    let mut worst: f64 = 0.0;
    for r in 2..=10 {
        for u in 1..r {
            let a = lemma_constant(u, r).map_err(|e| e.to_string())?;
            let b = lemma_constant_recursive(u, r).map_err(|e| e.to_string())?;
            worst = worst.max((a - b).abs());
            ensure((a - b).abs() <= IDENTITY_TOL, || format!("u={u} r={r}: {a} vs {b}"))?;
        }
    }
    let c12 = lemma_constant(1, 2).unwrap();
    let c23 = lemma_constant(2, 3).unwrap();
    ensure((c12 - 0.5).abs() <= EXACT_TOL, || format!("C(1,2) = {c12}"))?;
    ensure((c23 - 2f64.sqrt() / 3.0).abs() <= EXACT_TOL, || format!("C(2,3) = {c23}"))?;
    Ok(format!("max recursion gap {worst:.1e}; C(1,2)={c12}, C(2,3)={c23:.15}"))
}

fn clique_plus_matching(n: usize, extra: usize) -> Graph {
    let mut g = complete(n).disjoint_union(&Graph::empty(2 * extra));
    for i in 0..extra {
        g.add_edge(n + 2 * i, n + 2 * i + 1);
    }
    g
}

fn ac3() -> Check {
    let mut checked = 0;
    'outer: for n in 5..=16usize {
        for extra in [0, 3, 8, 15, 25] {
            for (r, alpha, c) in [(3, 1.0, 0.05), (4, 1.0, 0.02)] {
                let g = clique_plus_matching(n, extra);
                let p = ExtractionParams::new(r, alpha, c).map_err(|e| e.to_string())?;
                let (_, rep) = extract_dense(&g, &p).map_err(|e| e.to_string())?;
                if !rep.hypothesis_met {
                    continue;
                }
                for gu in &rep.guarantees {
                    ensure(gu.status == GuaranteeStatus::Pass, || {
                        format!("K_{n} + {extra} edges, r={r}: flag {} is {:?} ({} vs {})", gu.name, gu.status, gu.observed, gu.bound)
                    })?;
                }
                checked += 1;
                if checked == AC3_INSTANCES {
                    break 'outer;
                }
            }
        }
    }
    ensure(checked == AC3_INSTANCES, || format!("only {checked} instances met the hypothesis"))?;
    let p = ExtractionParams::new(3, 1.0, 0.2).unwrap();
    let (out, rep) = extract_dense(&clique_plus_matching(10, 20), &p).map_err(|e| e.to_string())?;
    ensure(out == complete(10), || format!("K10 + 20 edges gave n0={} m={}", out.n(), out.m()))?;
    Ok(format!("{checked} instances, all flags pass; K10+20 -> K10 (tau={:.3})", rep.threshold))
}

fn h(q: u32, s: usize) -> Result<Graph, String> {
    norm_graph(NormGraphParams::new(q, s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn ac4() -> Check {
    for q in [3, 5, 7, 11, 13] {
        ensure(is_free(&kst(2, 2), &h(q, 2)?), || format!("H({q},2) contains C4"))?;
    }
    ensure(is_free(&kst(3, 3), &h(5, 3)?), || "H(5,3) contains K_{3,3}".into())?;
    Ok("H(q,2) C4-free for q in 3,5,7,11,13; H(5,3) K33-free".into())
}

fn ac5() -> Check {
    let g = h(5, 3)?;
    let n = g.n() as f64;
    let ratio = count_cliques(&g, 3).k(3) as f64 / (n * n / 6.0);
    ensure((AC5_RATIO.0..=AC5_RATIO.1).contains(&ratio), || format!("H(5,3) ratio {ratio}"))?;
    let mut pts = Vec::new();
    for q in [5, 7, 11, 13] {
        let g = h(q, 2)?;
        pts.push(((g.m() as f64).ln(), (count_cliques(&g, 3).k(3) as f64).ln()));
    }
    let slope = fit_slope(&pts).map_err(|e| e.to_string())?;
    ensure((AC5_SLOPE.0..=AC5_SLOPE.1).contains(&slope), || {
        format!("H(5,3) ratio {ratio:.4} ok; s=2 slope {slope:.4} outside [{}, {}]", AC5_SLOPE.0, AC5_SLOPE.1)
    })?;
    Ok(format!("H(5,3) ratio {ratio:.4}; s=2 slope {slope:.4} (predicted 1)"))
}

fn ac6() -> Check {
    let spec = ExperimentSpec {
        family: Family::Tripartite { ns: vec![64, 256, 1024] },
        u: 2,
        r: 3,
    };
    let res = experiment::run(&spec).map_err(|e| e.to_string())?;
    let target = 11.0 / 9.0;
    ensure((res.slope - target).abs() <= AC6_SLOPE_TOL, || format!("slope {} vs 11/9", res.slope))?;
    Ok(format!("slope {:.4} vs 11/9 = {target:.4}", res.slope))
}

fn ac7() -> Check {
    for m in 2..=6u64 {
        let v = OracleQuery::mex(m as usize, pat(star(2)), kst(2, 2)).run().map_err(|e| e.to_string())?.value;
        ensure(v == m * (m - 1) / 2, || format!("mex({m}, K_1,2, K_2,2) = {v}"))?;
    }
    let targets = [pat(complete(3)), pat(star(2)), pat(cycle(4).unwrap()), pat(path(4))];
    let forbidden = [kst(2, 2), pat(complete(4)), pat(cycle(5).unwrap()), pat(complete(3)), pat(star(3))];
    let mut queries = 0;
    for m in 1..=5usize {
        for t in &targets {
            for f in &forbidden {
                let fast = OracleQuery::mex(m, t.clone(), f.clone()).run().map(|r| r.value);
                let slow = mex_brute(m, t, f, CANON_MAX);
                ensure(fast == slow, || format!("m={m}: orderly {fast:?} vs brute {slow:?}"))?;
                queries += 1;
            }
        }
    }
    Ok(format!("mex(m, K_1,2, K_2,2) = C(m,2) for m=2..6; {queries} cross-strategy queries agree"))
}

fn ac8() -> Check {
    let f = kst(3, 4);
    let spec = ExperimentSpec {
        family: Family::Deletion {
            pattern: f.clone(),
            ns: vec![60, 120, 240],
            seeds: vec![1, 2, 3, 4, 5],
            c: 1.0,
        },
        u: 2,
        r: 3,
    };
    for (n, seed) in [60, 120, 240].into_iter().flat_map(|n| (1..=5).map(move |s| (n, s))) {
        let (g, _) = mexlab_core::construct::deletion_method(&f, 2, 3, n, seed, 1.0).map_err(|e| e.to_string())?;
        ensure(is_free(&f, &g), || format!("n={n} seed={seed}: output contains K_3,4"))?;
    }
    let res = experiment::run(&spec).map_err(|e| e.to_string())?;
    for row in &res.rows {
        ensure(row.cliques.k(3) > 0, || format!("{}: no triangles", row.param))?;
    }
    ensure(res.slope >= AC8_MIN_SLOPE, || format!("slope {}", res.slope))?;
    Ok(format!("15 outputs K_3,4-free with k3 > 0; slope {:.4} (predicted {:.4})", res.slope, res.predicted))
}

fn ac9() -> Check {
    let mut checks = 0;
    for r in 3..=6usize {
        for s in r..=10usize {
            let (rf, sf) = (r as f64, s as f64);
            let via = thm13_f(2.0 - 1.0 / sf, (rf - 1.0) - (rf - 1.0) * (rf - 2.0) / (2.0 * (sf - 1.0))).map_err(|e| e.to_string())?;
            let direct = cor14_kst(r, s, None).map_err(|e| e.to_string())?.real().unwrap_or(f64::NAN);
            ensure((via - direct).abs() <= IDENTITY_TOL, || format!("composition r={r} s={s}: {via} vs {direct}"))?;
            checks += 1;
        }
    }
    for u in 2..=3usize {
        for r in u + 1..=5usize {
            for s in 1..=8usize {
                for t in s.max(2)..=8usize {
                    let madc = Rational::new(2 * (s * t) as i64, (s + t) as i64);
                    let a = if s + t <= mexlab_core::pattern::PATTERN_MAX {
                        thm15_general(u, r, &kst(s, t))
                    } else {
                        thm15_from_invariants(u, r, s + t, s * t, Some(madc))
                    }
                    .map_err(|e| e.to_string())?;
                    let b = thm41_kst_lower(u, r, s, t).map_err(|e| e.to_string())?;
                    let same = match (a.real(), b.real()) {
                        (Some(x), Some(y)) => (x - y).abs() <= IDENTITY_TOL,
                        (x, y) => x.is_none() && y.is_none(),
                    };
                    ensure(same && a.value_rational == b.value_rational, || {
                        format!("specialization u={u} r={r} s={s} t={t}: {:?} vs {:?}", a.value_rational, b.value_rational)
                    })?;
                    checks += 1;
                }
            }
        }
    }
    let k33 = thm15_general(2, 3, &kst(3, 3)).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = k33.failed_conditions().collect();
    ensure(failed == [COND_MADC], || format!("K33 failed conditions {failed:?}"))?;
    let k22 = thm15_general(2, 3, &kst(2, 2)).map_err(|e| e.to_string())?;
    let first = k22.failed_conditions().next();
    ensure(first == Some(COND_EDGE_COUNT), || format!("K22 first failed condition {first:?}"))?;
    Ok(format!("{checks} identity checks; K33 -> \"{COND_MADC}\", K22 -> \"{COND_EDGE_COUNT}\""))
}

fn corpus() -> Vec<(String, Pattern)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("K4".into(), complete(4)),
        ("K3".into(), complete(3)),
        ("K5".into(), complete(5)),
        ("C4".into(), cycle(4).unwrap()),
        ("C5".into(), cycle(5).unwrap()),
        ("C6".into(), cycle(6).unwrap()),
        ("C7".into(), cycle(7).unwrap()),
        ("P4".into(), path(4)),
        ("S4".into(), star(4)),
        ("Petersen".into(), petersen()),
        ("K2+C5".into(), complete(2).join(&cycle(5).unwrap())),
        ("K1+C4".into(), complete(1).join(&cycle(4).unwrap())),
        ("K1+C5".into(), complete(1).join(&cycle(5).unwrap())),
    ];
    for parts in [vec![2, 2], vec![2, 3], vec![3, 3], vec![3, 4], vec![2, 2, 2], vec![1, 2, 2], vec![2, 3, 3], vec![1, 1, 2, 2], vec![2, 2, 2, 2]] {
        let name = format!("K{}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("_"));
        out.push((name, complete_multipartite(&parts).unwrap()));
    }
    out.into_iter().map(|(n, g)| (n, pat(g))).collect()
}

fn ac10() -> Check {
    let pats = corpus();
    ensure(pats.len() >= 20, || format!("corpus has {} patterns", pats.len()))?;
    for (name, f) in &pats {
        for t in 2..=5 {
            let got = cor17_classifier(f, t).map_err(|e| e.to_string())?;
            ensure(got == (f.chromatic_number() > t), || format!("{name}, t={t}: classifier says {got}"))?;
        }
    }
    Ok(format!("{} patterns x t=2..5 agree with chromatic number", pats.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("lemma inequality on random graphs", ac1),
        ("lemma constant recursion", ac2),
        ("extraction guarantees", ac3),
        ("norm-graph freeness", ac4),
        ("norm-graph triangle scaling", ac5),
        ("tripartite slope", ac6),
        ("oracle values and cross-strategy", ac7),
        ("deletion-method soundness", ac8),
        ("bounds identities and conditions", ac9),
        ("chromatic classifier", ac10),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = check();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("AC{:<2} PASS  {name} [{secs:.1}s]: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("AC{:<2} FAIL  {name} [{secs:.1}s]: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
