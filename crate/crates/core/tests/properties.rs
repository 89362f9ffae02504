use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

use schern::chern::{
    c2, c2_closed_form, c2_enumeration, c2_truncated_product, dual_partition, gcd_all, ChernConfig,
    MethodChoice,
};
use schern::combinatorics::{binomial, schur_dimension, ssyt_count, ssyt_stream, Partition};
use schern::repring::{generator_table, image_index, RepConfig};
use schern::weights::{
    decompose, descends, hilbert_basis, is_reducible, monoid_members_up_to, partition_of,
    weight_of, GroupSpec, Weight,
};

const CEILING: u64 = 10_000_000;

/// A partition with at most `max_len` rows and at most `max_size` cells.
fn partition_strategy(max_len: usize, max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=max_size, 0..=max_len).prop_filter_map(
        "too many cells",
        move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let p = Partition::new(v).unwrap();
            (p.size() <= max_size).then_some(p)
        },
    )
}

/// (n, λ) with n ≤ 9, |λ| ≤ 8, length(λ) ≤ n and dim ≤ 10⁵.
fn small_pair() -> impl Strategy<Value = (usize, Partition)> {
    (2usize..=9)
        .prop_flat_map(|n| (Just(n), partition_strategy(n, 8)))
        .prop_filter("dimension above 1e5", |(n, p)| {
            schur_dimension(*n, p) <= BigUint::from(100_000u32)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn count_equals_hook_content((n, lambda) in small_pair()) {
        prop_assert_eq!(ssyt_count(n, &lambda), schur_dimension(n, &lambda));
    }

    #[test]
    fn contents_sum_to_size((n, lambda) in small_pair()) {
        let size = lambda.size();
        for c in ssyt_stream(n, &lambda).take(2000) {
            prop_assert_eq!(c.total(), size);
        }
    }

    #[test]
    fn stream_is_deterministic((n, lambda) in small_pair()) {
        let a: Vec<_> = ssyt_stream(n, &lambda).collect();
        let b: Vec<_> = ssyt_stream(n, &lambda).collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn streaming_sum_equals_truncated_product((n, lambda) in small_pair()) {
        prop_assume!(schur_dimension(n, &lambda) <= BigUint::from(5_000u32));
        let streamed = c2_enumeration(n, &lambda, CEILING).unwrap();
        let product = c2_truncated_product(n, &lambda, CEILING).unwrap();
        prop_assert_eq!(streamed.n_lambda, product.n_lambda);
    }

    #[test]
    fn enumeration_equals_closed_form((n, lambda) in small_pair()) {
        let e = c2_enumeration(n, &lambda, CEILING).unwrap();
        let c = c2_closed_form(n, &lambda).unwrap();
        prop_assert_eq!(&e.n_lambda, &c.n_lambda);
        prop_assert_eq!(&e.dim, &c.dim);
    }

    #[test]
    fn dual_has_equal_c2((n, lambda) in small_pair()) {
        let dual = dual_partition(n, &lambda).unwrap();
        let a = c2_closed_form(n, &lambda).unwrap().n_lambda;
        let b = c2_closed_form(n, &dual).unwrap().n_lambda;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn closed_form_is_integral(n in 2usize..=12, lambda in partition_strategy(12, 14)) {
        prop_assume!(lambda.len() <= n);
        prop_assert!(c2_closed_form(n, &lambda).is_ok());
    }

    #[test]
    fn zero_exactly_for_trivial(n in 2usize..=9, lambda in partition_strategy(9, 12)) {
        prop_assume!(lambda.len() <= n);
        let v = c2_closed_form(n, &lambda).unwrap().n_lambda;
        let trivial = lambda.is_empty() || (lambda.len() == n && lambda.parts().iter().all(|&p| p == lambda.part(0)));
        prop_assert_eq!(v.is_zero(), trivial);
    }

    #[test]
    fn weight_round_trip(n in 2usize..=10, seed in prop::collection::vec(0u32..4, 9)) {
        let w = Weight::new(seed[..n - 1].to_vec());
        prop_assert_eq!(weight_of(&partition_of(&w), n).unwrap(), w);
    }

    /// Any element of M with d + 1 tokens has a proper nonzero sub-weight in M.
    #[test]
    fn token_bound_forces_split(
        (n, d) in prop::sample::select(vec![(4usize, 2usize), (6, 3), (8, 2), (8, 4), (9, 3), (10, 5), (25, 5)]),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 8),
    ) {
        let spec = GroupSpec::new(n, d).unwrap();
        let mut coeffs = vec![0u32; n - 1];
        for ix in &picks[..d + 1] {
            coeffs[ix.index(n - 1)] += 1;
        }
        let w = Weight::new(coeffs);
        prop_assume!(spec.contains(&w));
        prop_assert!(is_reducible(&w, &spec));
    }
}

#[test]
fn exterior_power_identity() {
    for n in 2..=10u64 {
        for k in 1..n {
            let r = c2(
                n as usize,
                &Partition::column(k as usize),
                MethodChoice::Auto,
                &ChernConfig::default(),
            )
            .unwrap();
            assert_eq!(r.n_lambda, binomial(n - 2, k - 1), "n={n} k={k}");
        }
    }
}

#[test]
fn column_dimension_is_binomial() {
    for n in 1..=12u64 {
        for k in 0..=n {
            assert_eq!(
                schur_dimension(n as usize, &Partition::column(k as usize)),
                binomial(n, k)
            );
        }
    }
}

#[test]
fn adjoint_is_twice_n() {
    for n in 2..=12usize {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        let r = c2_closed_form(n, &Partition::new(parts).unwrap()).unwrap();
        assert_eq!(r.n_lambda, BigUint::from(2 * n as u64), "n={n}");
        assert_eq!(r.dim, BigUint::from((n * n - 1) as u64));
    }
}

fn basis_specs() -> Vec<GroupSpec> {
    [(4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3), (5, 5)]
        .into_iter()
        .map(|(n, d)| GroupSpec::new(n, d).unwrap())
        .collect()
}

#[test]
fn basis_elements_descend_and_are_irreducible() {
    for spec in basis_specs() {
        for w in hilbert_basis(&spec) {
            assert!(descends(&partition_of(&w), &spec), "{spec} {w}");
            assert!(!is_reducible(&w, &spec), "{spec} {w}");
            assert!(w.tokens() <= spec.d() as u64);
        }
    }
}

#[test]
fn basis_generates_small_members() {
    for spec in basis_specs() {
        let basis = hilbert_basis(&spec);
        for w in monoid_members_up_to(&spec, 3, 1 << 20).unwrap() {
            assert!(decompose(&w, &basis).is_some(), "{spec}: {w} not generated");
        }
    }
}

/// Brute force over every candidate with coordinates ≤ d: the irreducible
/// ones are exactly the basis.
#[test]
fn basis_matches_exhaustive_search() {
    for (n, d) in [(4, 2), (6, 3), (5, 5), (9, 3)] {
        let spec = GroupSpec::new(n, d).unwrap();
        let mut brute: Vec<Weight> = monoid_members_up_to(&spec, d as u32, 1 << 24)
            .unwrap()
            .into_iter()
            .filter(|w| !w.is_zero() && !is_reducible(w, &spec))
            .collect();
        brute.sort();
        assert_eq!(brute, hilbert_basis(&spec), "{spec}");
    }
}

#[test]
fn image_index_divides_larger_sample() {
    let config = RepConfig::default();
    for spec in [(4, 2), (6, 2), (6, 3), (8, 2), (9, 3)].map(|(n, d)| GroupSpec::new(n, d).unwrap())
    {
        let index = image_index(&spec, &config).unwrap();
        let values: Vec<BigUint> = monoid_members_up_to(&spec, 2, 1 << 20)
            .unwrap()
            .iter()
            .map(|w| c2_closed_form(spec.n(), &partition_of(w)).unwrap().n_lambda)
            .collect();
        for v in &values {
            assert!(
                (v % &index).is_zero(),
                "{spec}: {index} does not divide {v}"
            );
        }
        assert_eq!(gcd_all(std::iter::once(&index).chain(&values)), index);
    }
}

#[test]
fn gcd_is_invariant_under_redundant_generators() {
    let config = RepConfig::default();
    for spec in [(8, 2), (9, 3), (6, 3)].map(|(n, d)| GroupSpec::new(n, d).unwrap()) {
        let table = generator_table(&spec, &config).unwrap();
        let basis: Vec<_> = table.rows.iter().map(|r| r.weight.clone()).collect();
        let mut values: Vec<BigUint> = table
            .rows
            .iter()
            .map(|r| r.n_lambda.clone().unwrap())
            .collect();
        for (i, a) in basis.iter().enumerate().take(6) {
            for b in &basis[i..i + 3.min(basis.len() - i)] {
                let sum = a.add(b);
                values.push(
                    c2_closed_form(spec.n(), &partition_of(&sum))
                        .unwrap()
                        .n_lambda,
                );
            }
        }
        assert_eq!(gcd_all(&values), table.gcd, "{spec}");
    }
}
