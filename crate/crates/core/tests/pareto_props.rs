use pareto_sum::exact::{bucketsort_compare, sort_compare, successive_sweep};
use pareto_sum::generators::{gen_monotone_sequence, generate, GenKind, GenSpec};
use pareto_sum::io::{format_instance, parse_instance};
use pareto_sum::pareto::{points_of, validate_pareto_set};
use pareto_sum::*;
use proptest::prelude::*;

fn point_set(max_len: usize, w: i64) -> impl Strategy<Value = ParetoSet> {
    prop::collection::vec((0..=w, 0..=w), 1..=max_len).prop_map(|raw| {
        let pts: Vec<Point> = raw.into_iter().map(Point::from).collect();
        pareto_front(&pts).unwrap()
    })
}

fn check_witnesses(p: &ParetoSet, q: &ParetoSet, out: &[WitnessedPoint]) {
    for w in out {
        let wit = w.witness.expect("witness");
        assert_eq!(w.point, p[wit.p] + q[wit.q]);
    }
}

proptest! {
    #[test]
    fn front_is_valid_and_covers(raw in prop::collection::vec((-50i64..50, -50i64..50), 1..60)) {
        let pts: Vec<Point> = raw.into_iter().map(Point::from).collect();
        let front = pareto_front(&pts).unwrap();
        prop_assert!(validate_pareto_set(front.points()));
        for u in &pts {
            prop_assert!(front.iter().any(|f| f == u || dominates(*f, *u)));
        }
    }

    #[test]
    fn sum_is_commutative(p in point_set(20, 100), q in point_set(20, 100)) {
        let pq = points_of(&brute_force_pareto_sum(&p, &q));
        let qp = points_of(&brute_force_pareto_sum(&q, &p));
        prop_assert_eq!(pq, qp);
    }

    #[test]
    fn exact_algorithms_match_oracle(p in point_set(30, 200), q in point_set(30, 200)) {
        let want = brute_force_pareto_sum(&p, &q);
        prop_assert!(validate_pareto_set(&points_of(&want)));
        check_witnesses(&p, &q, &want);
        for out in [sort_compare(&p, &q), successive_sweep(&p, &q), bucketsort_compare(&p, &q).unwrap()] {
            prop_assert_eq!(points_of(&out), points_of(&want));
            check_witnesses(&p, &q, &out);
        }
    }

    #[test]
    fn all_algorithms_match_oracle(p in point_set(16, 60), q in point_set(16, 60)) {
        let want = points_of(&brute_force_pareto_sum(&p, &q));
        for algo in Algorithm::all_default() {
            let out = pareto_sum(&p, &q, &algo).unwrap();
            prop_assert_eq!(&points_of(&out.points), &want, "{}", algo);
            if algo.reports_witnesses() {
                check_witnesses(&p, &q, &out.points);
            }
        }
    }

    #[test]
    fn monotone_sequence_shape(n in 1usize..60, extra in 0u64..200, seed: u64) {
        let w = n as u64 - 1 + extra;
        let s = gen_monotone_sequence(n, w, seed).unwrap();
        prop_assert_eq!(s.len(), n);
        prop_assert!(s.windows(2).all(|v| v[0] < v[1]));
        prop_assert!(*s.last().unwrap() <= w);
        prop_assert_eq!(s, gen_monotone_sequence(n, w, seed).unwrap());
    }

    #[test]
    fn generators_are_valid_and_deterministic(kind_idx in 0usize..3, n in 1usize..80, seed: u64) {
        let kind = [GenKind::Range, GenKind::NearLinear, GenKind::NearCurved][kind_idx];
        let spec = GenSpec::with_range_factor(kind, n, 2, seed);
        let (p, q) = generate(&spec).unwrap();
        prop_assert!(validate_pareto_set(p.points()));
        prop_assert!(validate_pareto_set(q.points()));
        let again = generate(&spec).unwrap();
        prop_assert_eq!(format_instance(&p, &q), format_instance(&again.0, &again.1));
    }

    #[test]
    fn instance_text_round_trip(p in point_set(20, 1000), q in point_set(20, 1000)) {
        let (p2, q2) = parse_instance(&format_instance(&p, &q)).unwrap();
        prop_assert_eq!(p, p2);
        prop_assert_eq!(q, q2);
    }
}
