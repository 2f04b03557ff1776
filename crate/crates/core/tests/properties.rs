use num_traits::{One, Zero};
use proptest::prelude::*;
use stirbern::identities::{self, IdentityChecker};
use stirbern::num::{rat, rat_pow, ExactInt, ExactRat};
use stirbern::oracles;
use stirbern::sequences::{self, SeqCache};
use stirbern::RatPoly;

fn small_rational() -> impl Strategy<Value = ExactRat> {
    (-60i64..60, 1i64..25).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sum_identities_hold(n in 0usize..80) {
        prop_assert!(identities::identity_one_sides(n).equal);
        prop_assert!(identities::identity_two_sides(n).equal);
        prop_assert!(identities::identity_three_sides(n).equal);
    }

    #[test]
    fn forward_difference_pointwise(k in 0usize..40, x in small_rational()) {
        prop_assert!(identities::check_forward_difference(k, &x));
    }

    #[test]
    fn falling_factorial_expansion(n in 0usize..60, x in small_rational()) {
        prop_assert!(identities::check_stirling_expansion(n, &x));
    }

    #[test]
    fn telescoped_identity(n in 0usize..30, y in 0u64..40) {
        prop_assert!(identities::check_telescoped(n, y));
    }

    #[test]
    fn bernoulli_poly_reflection_pointwise(n in 0usize..40, x in small_rational()) {
        let one_minus = ExactRat::one() - &x;
        let sign = if n % 2 == 0 { ExactRat::one() } else { -ExactRat::one() };
        prop_assert_eq!(
            sequences::bernoulli_poly_eval(n, &one_minus),
            sign * sequences::bernoulli_poly_eval(n, &x)
        );
    }

    #[test]
    fn stirling_row_is_product_expansion(n in 0usize..40) {
        prop_assert_eq!(sequences::stirling_row(n), oracles::stirling_row_by_product(n).unwrap());
    }

    #[test]
    fn cold_and_warm_caches_agree(n in 0usize..70, warm_to in 0usize..90) {
        let warm = SeqCache::new();
        warm.bernoulli(warm_to);
        warm.euler_number(warm_to);
        warm.stirling_row(warm_to);
        let cold = SeqCache::new();
        prop_assert_eq!(warm.bernoulli(n), cold.bernoulli(n));
        prop_assert_eq!(warm.euler_number(n), cold.euler_number(n));
        prop_assert_eq!(warm.stirling_row(n), cold.stirling_row(n));
    }
}

#[test]
fn power_sums_match_bernoulli_difference() {
    // (B_{k+1}(y) - B_{k+1}) / (k+1) is the power sum 0^k + ... + (y-1)^k,
    // computed here by direct summation.
    let checker = IdentityChecker::default();
    for k in 0..=15usize {
        for y in 0..=12i64 {
            let direct: ExactRat = (0..y).map(|x| rat_pow(&rat(x, 1), k)).sum();
            assert_eq!(
                checker.telescoped_term(k, &rat(y, 1)),
                direct,
                "k = {k}, y = {y}"
            );
        }
    }
}

#[test]
fn forward_difference_as_polynomial() {
    for k in 0..=40 {
        assert!(identities::check_forward_difference_poly(k), "k = {k}");
    }
    // Sanity: the polynomial check would notice a wrong constant term.
    let p = &sequences::bernoulli_poly_coeffs(3) + &RatPoly::constant(rat(1, 5));
    let diff = &p.shift(&ExactRat::one()) - &p;
    assert_eq!(diff.scale(&rat(1, 3)), RatPoly::monomial(2));
    let broken = &p.shift(&ExactRat::one()) - &sequences::bernoulli_poly_coeffs(2);
    assert_ne!(broken.scale(&rat(1, 3)), RatPoly::monomial(2));
}

#[test]
fn odd_bernoulli_and_euler_vanish() {
    for n in (3..=201).step_by(2) {
        assert!(sequences::bernoulli(n).is_zero());
        assert!(sequences::euler_number(n).is_zero());
    }
    assert!(!sequences::euler_number(200).is_zero());
    assert_eq!(sequences::bernoulli(1), rat(-1, 2));
}

#[test]
fn large_index_values_stay_exact() {
    // E_20 and B_30 are well known; both far exceed 64-bit ranges elsewhere
    // in the table.
    assert_eq!(
        sequences::euler_number(20),
        "370371188237525".parse::<ExactInt>().unwrap()
    );
    assert_eq!(
        sequences::bernoulli(30),
        ExactRat::new("8615841276005".parse().unwrap(), "14322".parse().unwrap())
    );
    let s = sequences::stirling_s1(30, 1);
    assert_eq!(s, -sequences::factorial(29));
}
