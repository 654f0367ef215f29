use domset::coefficients::{solve_coefficients, verify_conditions, CoefficientSet};
use domset::generate::{generate, GraphKind};
use domset::graph::{edge_list_string, parse_edge_list_str, Graph};
use domset::greedy::{run, Color, DominatorState, RunOptions, Strategy as Pick};
use domset::oracle::exact_domination_number;
use domset::rational::{frac, int, Rational};
use domset::Error;
use proptest::prelude::*;

fn color_rank(c: Color) -> u8 {
    match c {
        Color::White => 0,
        Color::Blue => 1,
        Color::Red => 2,
    }
}

fn arb_min_degree_graph() -> impl Strategy<Value = (Graph, usize)> {
    (5usize..=7, 0usize..30, any::<u64>(), 0usize..20).prop_map(|(d, extra_n, seed, extra)| {
        let n = d + 8 + extra_n;
        let g = generate(&GraphKind::RandomMinDegree { n, d, extra, seed }).unwrap();
        (g, d)
    })
}

fn strategy_of(max_gain: bool) -> Pick {
    if max_gain {
        Pick::MaxGain
    } else {
        Pick::PhasePreference
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coloring_and_potential_invariants((g, d) in arb_min_degree_graph(), max_gain in any::<bool>()) {
        let c = solve_coefficients(d).unwrap();
        let mut st = DominatorState::new(&g, &c, false).unwrap();
        prop_assert_eq!(st.potential(), c.a() * int(g.n() as i64));
        let mut colors: Vec<Color> = g.vertices().map(|v| st.color(v)).collect();
        let mut wdeg: Vec<usize> = g.vertices().map(|v| st.white_deg(v)).collect();
        while !st.is_done() {
            let before = st.potential();
            let v = st.select_vertex(strategy_of(max_gain)).unwrap();
            let predicted = st.gain_if_selected(v);
            let rec = st.apply_selection(v).unwrap();
            prop_assert_eq!(&rec.gain, &predicted);
            prop_assert_eq!(&before - &rec.gain, st.potential());
            prop_assert!(rec.gain >= *c.s(), "{}", rec);
            prop_assert!(rec.phase <= d + 1);
            prop_assert_eq!(st.potential_from_scratch(), st.potential());
            st.check_invariants().map_err(TestCaseError::fail)?;
            for u in g.vertices() {
                prop_assert!(color_rank(st.color(u)) >= color_rank(colors[u]));
                prop_assert!(st.white_deg(u) <= wdeg[u]);
                if st.color(u) == Color::Blue {
                    prop_assert!(st.white_deg(u) >= 1);
                }
                colors[u] = st.color(u);
                wdeg[u] = st.white_deg(u);
            }
            prop_assert_eq!(st.color(v), Color::Red);
        }
        prop_assert_eq!(st.potential(), int(0));
        prop_assert!(g.is_dominating(st.chosen()).unwrap());
    }

    #[test]
    fn greedy_never_beats_the_oracle(n in 10usize..=16, seed in any::<u64>(), extra in 0usize..8) {
        let g = generate(&GraphKind::RandomMinDegree { n, d: 5, extra, seed }).unwrap();
        let exact = exact_domination_number(&g, 24).unwrap();
        prop_assert!(g.is_dominating(&exact.witness).unwrap());
        prop_assert_eq!(exact.witness.len(), exact.gamma);
        let c = solve_coefficients(5).unwrap();
        let out = run(&g, &c, RunOptions { audit: true, ..Default::default() }).unwrap();
        prop_assert!(exact.gamma <= out.dominating_set.len());
        prop_assert!(out.dominating_set.len() <= out.size_cap.unwrap());
    }

    #[test]
    fn oracle_ignores_labels(n in 8usize..=14, seed in any::<u64>(), perm_seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let g = generate(&GraphKind::RandomMinDegree { n, d: 3, extra: 2, seed }).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(
            exact_domination_number(&g, 24).unwrap().gamma,
            exact_domination_number(&h, 24).unwrap().gamma
        );
    }

    #[test]
    fn rescaling_preserves_conditions_and_ratio(d in 3usize..=20, num in 1i64..10_000, den in 1i64..10_000) {
        let c = solve_coefficients(d).unwrap();
        let scaled = c.rescaled(&frac(num, den));
        prop_assert_eq!(verify_conditions(&c).pass, verify_conditions(&scaled).pass);
        prop_assert_eq!(c.bound(), scaled.bound());
        prop_assert_eq!(c.integer_scaled().bound(), c.bound());
    }

    #[test]
    fn edge_list_round_trip(n in 10usize..40, seed in any::<u64>(), extra in 0usize..10) {
        let g = generate(&GraphKind::RandomMinDegree { n, d: 2, extra, seed }).unwrap();
        let text = edge_list_string(&g);
        let back = parse_edge_list_str(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(edge_list_string(&back), text);
    }

    #[test]
    fn random_regular_always_regular(n in 8usize..120, d in 3usize..8, seed in any::<u64>()) {
        let n = if n * d % 2 == 1 { n + 1 } else { n };
        let g = generate(&GraphKind::RandomRegular { n, d, seed }).unwrap();
        prop_assert!(g.vertices().all(|v| g.degree(v) == d));
        prop_assert_eq!(g.m(), n * d / 2);
    }

    #[test]
    fn domination_of_trivial_sets(n in 3usize..30, seed in any::<u64>()) {
        let g = generate(&GraphKind::RandomMinDegree { n, d: 1, extra: 0, seed }).unwrap();
        let all: Vec<usize> = g.vertices().collect();
        prop_assert!(g.is_dominating(&all).unwrap());
        prop_assert!(!g.is_dominating(&[]).unwrap());
    }
}

#[test]
fn solved_systems_are_exact_through_fifty() {
    for d in 3..=50 {
        let c = solve_coefficients(d).unwrap();
        for (name, r) in c.residuals() {
            assert_eq!(r, int(0), "d={d} {name}");
        }
        let report = verify_conditions(&c);
        assert!(report.pass, "d={d}: {:?}", report.failures());
        // differences b_k - b_{k-1} are non-negative and grow toward k = 1
        let diffs: Vec<Rational> = (2..=d).map(|k| c.b(k) - c.b(k - 1)).collect();
        assert!(diffs.iter().all(|x| *x >= int(0)));
        assert!(diffs.windows(2).all(|w| w[1] <= w[0]));
    }
}

#[test]
fn understated_gain_guarantee_is_caught() {
    // Same a and b-values but s inflated: the first step on K_{5,5} gains
    // exactly the true s, which falls short of the inflated one.
    let c = solve_coefficients(5).unwrap();
    let inflated = CoefficientSet::from_parts(5, c.a().clone(), c.s() + int(1), c.bs().to_vec()).unwrap();
    let g = generate(&GraphKind::CompleteBipartite { p: 5, q: 5 }).unwrap();
    let err = run(&g, &inflated, RunOptions { audit: true, ..Default::default() }).unwrap_err();
    assert!(err.is_claim_failure());
    match err {
        Error::AuditFailure { record, s } => {
            assert_eq!(record.index, 1);
            assert_eq!(record.gain, int(7766));
            assert_eq!(s, "7767/1");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn phase_sequence_is_reported() {
    let g = generate(&GraphKind::RandomRegular { n: 120, d: 6, seed: 5 }).unwrap();
    let c = solve_coefficients(6).unwrap();
    let out = run(&g, &c, RunOptions { audit: true, ..Default::default() }).unwrap();
    let phases: Vec<usize> = out.log.iter().map(|r| r.phase).collect();
    assert_eq!(out.phases_monotone(), phases.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(out.log.first().unwrap().phase, 1);
}
