use mexlab_core::bounds::*;
use mexlab_core::generate::{complete, complete_multipartite, cycle, path, petersen, star};
use mexlab_core::{Graph, Pattern, Rational};

const TOL: f64 = 1e-12;

fn kst(s: usize, t: usize) -> Pattern {
    Pattern::new(complete_multipartite(&[s, t]).unwrap()).unwrap()
}

fn corpus() -> Vec<Pattern> {
    let mut gs: Vec<Graph> = vec![
        complete(3),
        complete(4),
        complete(5),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        cycle(6).unwrap(),
        path(4),
        star(4),
        petersen(),
        complete(2).join(&cycle(5).unwrap()),
        complete(1).join(&cycle(4).unwrap()),
    ];
    for parts in [vec![2, 2], vec![2, 3], vec![3, 3], vec![3, 4], vec![3, 5], vec![4, 4], vec![4, 5], vec![2, 2, 2], vec![1, 2, 2], vec![2, 2, 3], vec![2, 3, 3]] {
        gs.push(complete_multipartite(&parts).unwrap());
    }
    gs.into_iter().map(|g| Pattern::new(g).unwrap()).collect()
}

#[test]
fn composition_identity() {
    for r in 3..=6usize {
        for s in r..=10usize {
            let (rf, sf) = (r as f64, s as f64);
            let via = thm13_f(2.0 - 1.0 / sf, (rf - 1.0) - (rf - 1.0) * (rf - 2.0) / (2.0 * (sf - 1.0))).unwrap();
            let direct = cor14_kst(r, s, None).unwrap().real().unwrap();
            assert!((via - direct).abs() <= TOL, "r={r} s={s}: {via} vs {direct}");
        }
    }
}

#[test]
fn specialization_identity() {
    for u in 2..=3usize {
        for r in u + 1..=5usize {
            for s in 1..=8usize {
                for t in s.max(2)..=8usize {
                    // above the pattern cap, madc(K_{s,t}) = 2st/(s+t) is taken in closed form
                    let a = if s + t <= 12 {
                        let f = kst(s, t);
                        assert_eq!(f.max_avg_degree(), Some(Rational::new(2 * (s * t) as i64, (s + t) as i64)));
                        thm15_general(u, r, &f).unwrap()
                    } else {
                        let madc = Rational::new(2 * (s * t) as i64, (s + t) as i64);
                        thm15_from_invariants(u, r, s + t, s * t, Some(madc)).unwrap()
                    };
                    let b = thm41_kst_lower(u, r, s, t).unwrap();
                    assert_eq!(a.value_rational, b.value_rational, "u={u} r={r} s={s} t={t}");
                    if let (Some(x), Some(y)) = (a.real(), b.real()) {
                        assert!((x - y).abs() <= TOL);
                    }
                }
            }
        }
    }
}

#[test]
fn lower_exponent_below_upper_in_tight_range() {
    for r in 3..=5usize {
        for s in 2..=9usize {
            let upper = cor14_kst(r, s, None).unwrap();
            if !upper.tight {
                continue;
            }
            for t in s..=12usize {
                if let Some(lower) = thm41_kst_lower(2, r, s, t).unwrap().value_rational {
                    if lower > Rational::from_integer(0) {
                        assert!(lower <= upper.value_rational.unwrap(), "r={r} s={s} t={t}");
                    }
                }
            }
        }
    }
}

#[test]
fn hypotheses_make_phi_positive() {
    let mut checked = 0;
    for f in corpus() {
        for r in 3..=5usize {
            let Ok(rep) = thm15_general(2, r, &f) else { continue };
            if !rep.conditions_pass() {
                continue;
            }
            let cr = (r * (r - 1) / 2) as i64;
            let rho = Rational::new(f.order() as i64 - 2, f.size() as i64 - cr);
            assert!(phi_exponent(&f, rho).unwrap() > Rational::from_integer(0));
            checked += 1;
        }
    }
    assert!(checked >= 3, "only {checked} pattern/r pairs satisfy both hypotheses");
}

#[test]
fn condition_checkers_name_the_failure() {
    let rep = thm15_general(2, 3, &kst(3, 3)).unwrap();
    assert_eq!(rep.failed_conditions().collect::<Vec<_>>(), vec![COND_MADC]);
    let rep = thm15_general(2, 3, &kst(2, 2)).unwrap();
    assert_eq!(rep.failed_conditions().next(), Some(COND_EDGE_COUNT));
}

#[test]
fn multipartite_matches_cor12() {
    for r in 3..=5usize {
        for a in 1..=3usize {
            for b in a..=3usize {
                let mut parts = vec![a; r];
                parts[r - 1] = b;
                let rep = thm43_multipartite(r, &parts).unwrap();
                let sp = rep.extra("s_prime").unwrap().rational.unwrap();
                assert_eq!(rep.value_rational, Some(cor12_exponent_exact(r, sp).unwrap()));
            }
        }
    }
}

#[test]
fn tripartite_bounds_agree_with_general_results() {
    for (s1, s2, s3) in [(1, 2, 2), (2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3), (2, 3, 5)] {
        let rep = cor44_tripartite_lower(s1, s2, s3).unwrap();
        let upper = thm43_multipartite(3, &[s1, s2, s3]).unwrap();
        assert_eq!(rep.value_rational, upper.value_rational);
        if let Some(lower) = rep.extra("lower") {
            let f = Pattern::new(complete_multipartite(&[s1, s2, s3]).unwrap()).unwrap();
            let general = thm15_general(2, 3, &f).unwrap();
            assert_eq!(lower.rational, general.value_rational);
        }
    }
}

#[test]
fn join_cycle_case_split_follows_colouring() {
    for r in 3..=6usize {
        for s in 1..=4usize {
            for l in 4..=(12 - s).min(9) {
                let f = Pattern::new(complete(s).join(&cycle(l).unwrap())).unwrap();
                let rep = thm46_join_cycle(r, s, l).unwrap();
                assert_eq!(rep.tight, cor17_classifier(&f, r).unwrap(), "r={r} s={s} l={l}");
            }
        }
    }
}

#[test]
fn classifier_matches_chromatic_number() {
    let pats = corpus();
    assert!(pats.len() >= 20);
    for f in &pats {
        for t in 2..=5 {
            assert_eq!(cor17_classifier(f, t).unwrap(), f.chromatic_number() > t);
        }
    }
}

#[test]
fn lemma_constants_agree() {
    for r in 2..=10 {
        for u in 1..r {
            let a = lemma_constant(u, r).unwrap();
            let b = lemma_constant_recursive(u, r).unwrap();
            assert!((a - b).abs() <= TOL && (a - b).abs() <= TOL * a, "u={u} r={r}");
        }
    }
}
