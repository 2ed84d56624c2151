use gbcolor::algorithms::{is_k_colorable, is_uniquely_k_colorable, Certificate, Method, SolveOptions};
use gbcolor::coloring::{coloring_ideal, ideal_i_gk, nu_basis};
use gbcolor::field::{FieldConfig, Rationals};
use gbcolor::graph::{enumerate_colorings, ColorPartition, Graph, OracleBudget};
use gbcolor::groebner::{is_groebner_basis, reduced_basis};
use gbcolor::ideal::ideals_equal;
use gbcolor::poly::{OrderKind, TermOrder};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut b = bits.into_iter();
            for i in 1..=n {
                for j in i + 1..=n {
                    if b.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

fn dim(v: &gbcolor::algorithms::Verdict) -> u64 {
    match v.certificate {
        Some(Certificate::Dimension(d)) => d,
        ref other => panic!("expected a dimension, got {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dimension_independent_of_order_and_field(g in graph_strategy(6), k in 2usize..=3) {
        let expected = enumerate_colorings(&g, k, OracleBudget::default()).unwrap().count as u64;
        let fields = [FieldConfig::Rationals, FieldConfig::PrimeField(if k == 2 { 3 } else { 2 })];
        for order in OrderKind::ALL {
            for field in fields {
                let v = is_k_colorable(&g, k, Method::QuotientDim, &SolveOptions::new(order, field)).unwrap();
                prop_assert_eq!(dim(&v), expected);
                prop_assert_eq!(v.answer, expected > 0);
            }
        }
    }

    #[test]
    fn relabeling_preserves_answers(
        (g, perm) in graph_strategy(6).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) }),
        k in 2usize..=3,
    ) {
        let h = g.relabel(&perm);
        let opts = SolveOptions::default();
        let a = is_k_colorable(&g, k, Method::QuotientDim, &opts).unwrap();
        let b = is_k_colorable(&h, k, Method::QuotientDim, &opts).unwrap();
        prop_assert_eq!(dim(&a), dim(&b));
        let ua = is_uniquely_k_colorable(&g, k, Method::GbShape, None, &opts).unwrap();
        let ub = is_uniquely_k_colorable(&h, k, Method::GbShape, None, &opts).unwrap();
        prop_assert_eq!(ua.answer, ub.answer);
    }

    #[test]
    fn gb_shape_certificate_is_the_coloring(g in graph_strategy(6), k in 2usize..=3) {
        let census = enumerate_colorings(&g, k, OracleBudget::default()).unwrap();
        let v = is_uniquely_k_colorable(&g, k, Method::GbShape, None, &SolveOptions::default()).unwrap();
        prop_assert_eq!(v.answer, census.is_uniquely_colorable(k));
        if let Some(Certificate::Partition(p)) = &v.certificate {
            prop_assert!(p.is_proper_for(&g));
            prop_assert_eq!(Some(p), census.partitions.iter().next());
        } else {
            prop_assert!(!v.answer);
        }
    }

    #[test]
    fn nu_basis_is_a_groebner_basis(labels in prop::collection::vec(0usize..4, 1..8), k in 1usize..=4) {
        let p = ColorPartition::from_coloring(&labels);
        prop_assume!(p.len() <= k);
        for reduced in [false, p.len() == k] {
            let basis = nu_basis(Rationals, &p, k, reduced).unwrap();
            prop_assert!(is_groebner_basis(&basis.polys, TermOrder::DEGREVLEX));
            let recomputed = reduced_basis(&basis.polys, TermOrder::LEX);
            prop_assert!(is_groebner_basis(recomputed.polys(), TermOrder::LEX));
        }
    }

    #[test]
    fn graph_ideal_equals_coloring_ideal_for_unique_colorings(g in graph_strategy(5)) {
        let census = enumerate_colorings(&g, 3, OracleBudget::default()).unwrap();
        prop_assume!(census.surjective_partition(3).is_some() && census.is_uniquely_colorable(3));
        let p = census.partitions.iter().next().unwrap();
        let a = coloring_ideal(Rationals, p, 3).unwrap();
        let igk = ideal_i_gk(Rationals, &g, 3);
        prop_assert!(ideals_equal(&a, &igk, TermOrder::DEGREVLEX).unwrap());
    }
}
