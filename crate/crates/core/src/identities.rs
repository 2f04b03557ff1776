//! Both sides of the three Stirling–Bernoulli–Euler sum identities, the
//! finite identities their derivation rests on, and range sweeps that
//! collect the results into reports.
//!
//! The three sum identities, for every `n >= 0`:
//!
//! ```text
//! sum_k s(n,k) B_k                                   = (-1)^n n! / (n+1)
//! sum_k s(n,k) (2^-k - 2) B_{k+1} / (k+1)            = (-1)^n / (n+1) * (2n-1)!! / 2^(n+1)
//! sum_k s(n,k) [(1 + 2^-(k+1) (1 - 2^-k)) B_{k+1}
//!               + 4^-(k+1) (k+1) E_k] / (k+1)        = (-1)^(n-1) / (4(n+1)) * (3/4)^(n rising)
//! ```
//!
//! At `n = 0` the empty products are one and `(-1)^(n-1) = -1`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::num::{inv_pow2, rat, rat_pow, sign_pow, ExactInt, ExactRat};
use crate::poly::RatPoly;
use crate::sequences::{
    binomial_int, double_factorial_odd, factorial, falling_factorial, rising_factorial, SeqCache,
};

/// Largest `y` used when a sweep checks the telescoped identity at row `n`.
pub const TELESCOPE_Y_MAX: u64 = 50;

/// Points at which a sweep checks the falling-factorial expansion.
pub fn stirling_sample_points() -> Vec<ExactRat> {
    vec![rat(-2, 1), rat(-1, 2), rat(0, 1), rat(1, 3), rat(5, 1)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// Stirling-weighted sum of Bernoulli numbers.
    First,
    /// Stirling-weighted sum tied to `B_{k+1}(1/2)`.
    Second,
    /// Stirling-weighted sum tied to `B_{k+1}(1/4)` and Euler numbers.
    Third,
    /// Forward difference of Bernoulli polynomials, as a polynomial identity.
    Recur,
    /// Falling factorial expanded in Stirling numbers.
    Stirdef,
    /// Summed forward difference: `n! C(y, n+1)` as a Bernoulli-polynomial sum.
    Telescoped,
    /// `B_{k+1}(1/2)` in terms of `B_{k+1}`.
    Half,
    /// `B_{k+1}(1/4)` in terms of `B_{k+1}` and `E_k`.
    Quarter,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::First,
        IdentityId::Second,
        IdentityId::Third,
        IdentityId::Recur,
        IdentityId::Stirdef,
        IdentityId::Telescoped,
        IdentityId::Half,
        IdentityId::Quarter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::First => "first",
            IdentityId::Second => "second",
            IdentityId::Third => "third",
            IdentityId::Recur => "recur",
            IdentityId::Stirdef => "stirdef",
            IdentityId::Telescoped => "telescoped",
            IdentityId::Half => "half",
            IdentityId::Quarter => "quarter",
        }
    }

    /// Whether rows carry both sides (as opposed to a pass flag).
    pub fn has_sides(self) -> bool {
        matches!(
            self,
            IdentityId::First | IdentityId::Second | IdentityId::Third
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Both sides of an identity at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    pub n: usize,
    pub lhs: ExactRat,
    pub rhs: ExactRat,
    pub equal: bool,
}

impl IdentitySides {
    fn new(n: usize, lhs: ExactRat, rhs: ExactRat) -> Self {
        let equal = lhs == rhs;
        IdentitySides { n, lhs, rhs, equal }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportRow {
    Sides(IdentitySides),
    Check { n: usize, pass: bool },
}

impl ReportRow {
    pub fn n(&self) -> usize {
        match self {
            ReportRow::Sides(s) => s.n,
            ReportRow::Check { n, .. } => *n,
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            ReportRow::Sides(s) => s.equal,
            ReportRow::Check { pass, .. } => *pass,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub n_min: usize,
    pub n_max: usize,
    /// One row per `n`, ascending.
    pub rows: Vec<ReportRow>,
    pub all_pass: bool,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Evaluates identities against the values held by a [`SeqCache`].
#[derive(Debug, Clone, Copy)]
pub struct IdentityChecker<'a> {
    cache: &'a SeqCache,
}

impl Default for IdentityChecker<'static> {
    fn default() -> Self {
        IdentityChecker::new(SeqCache::global())
    }
}

impl<'a> IdentityChecker<'a> {
    pub fn new(cache: &'a SeqCache) -> Self {
        IdentityChecker { cache }
    }

    pub fn cache(&self) -> &'a SeqCache {
        self.cache
    }

    fn stirling_weighted_sum<F>(&self, n: usize, mut term: F) -> ExactRat
    where
        F: FnMut(usize) -> ExactRat,
    {
        let row = self.cache.stirling_row_shared(n);
        let mut sum = ExactRat::zero();
        for (k, s) in row.iter().enumerate() {
            if !s.is_zero() {
                sum += term(k) * s;
            }
        }
        sum
    }

    /// Summands `t_k` (for `k < len`) of `sum_k s(n,k) t_k` on the left of a
    /// sum identity. They do not depend on `n`.
    pub fn summands(&self, identity: IdentityId, len: usize) -> Option<Vec<ExactRat>> {
        let terms = match identity {
            IdentityId::First => self.cache.bernoulli_prefix(len),
            IdentityId::Second => {
                let b = self.cache.bernoulli_prefix(len + 1);
                let two = rat(2, 1);
                (0..len)
                    .map(|k| (inv_pow2(k) - &two) * &b[k + 1] / ExactInt::from(k + 1))
                    .collect()
            }
            IdentityId::Third => {
                let b = self.cache.bernoulli_prefix(len + 1);
                let e = self.cache.euler_prefix(len);
                (0..len)
                    .map(|k| {
                        let kp1 = ExactInt::from(k + 1);
                        let b_coeff =
                            ExactRat::one() + inv_pow2(k + 1) * (ExactRat::one() - inv_pow2(k));
                        let e_term = inv_pow2(2 * (k + 1)) * &kp1 * &e[k];
                        (b_coeff * &b[k + 1] + e_term) / kp1
                    })
                    .collect()
            }
            _ => return None,
        };
        Some(terms)
    }

    /// Closed-form right-hand side of a sum identity at `n`.
    pub fn closed_form(identity: IdentityId, n: usize) -> Option<ExactRat> {
        let rhs = match identity {
            IdentityId::First => {
                ExactRat::new(sign_pow(n as i64) * factorial(n), ExactInt::from(n + 1))
            }
            IdentityId::Second => ExactRat::new(
                sign_pow(n as i64) * double_factorial_odd(n),
                ExactInt::from(n + 1) << (n + 1),
            ),
            IdentityId::Third => {
                ExactRat::new(sign_pow(n as i64 - 1), ExactInt::from(4 * (n + 1)))
                    * rising_factorial(&rat(3, 4), n)
            }
            _ => return None,
        };
        Some(rhs)
    }

    fn sides_from_summands(
        &self,
        identity: IdentityId,
        n: usize,
        terms: &ScaledTerms,
    ) -> IdentitySides {
        let lhs = terms.weighted_sum(&self.cache.stirling_row_shared(n));
        let rhs = Self::closed_form(identity, n).expect("sum identity");
        IdentitySides::new(n, lhs, rhs)
    }

    /// Both sides of a sum identity at `n`; `None` for the other identities.
    pub fn sides(&self, identity: IdentityId, n: usize) -> Option<IdentitySides> {
        let terms = ScaledTerms::new(&self.summands(identity, n + 1)?);
        Some(self.sides_from_summands(identity, n, &terms))
    }

    /// `sum_k s(n,k) B_k` against `(-1)^n n! / (n+1)`.
    pub fn identity_one_sides(&self, n: usize) -> IdentitySides {
        self.sides(IdentityId::First, n).expect("sum identity")
    }

    /// `sum_k s(n,k) (2^-k - 2) B_{k+1} / (k+1)` against
    /// `(-1)^n / (n+1) * (2n-1)!! / 2^(n+1)`.
    pub fn identity_two_sides(&self, n: usize) -> IdentitySides {
        self.sides(IdentityId::Second, n).expect("sum identity")
    }

    /// The Euler-number identity; see the module docs.
    pub fn identity_three_sides(&self, n: usize) -> IdentitySides {
        self.sides(IdentityId::Third, n).expect("sum identity")
    }

    /// `(B_{k+1}(x+1) - B_{k+1}(x)) / (k+1) == x^k` at one point.
    pub fn check_forward_difference(&self, k: usize, x: &ExactRat) -> bool {
        let shifted = x + ExactRat::one();
        let diff = self.cache.bernoulli_poly_eval(k + 1, &shifted)
            - self.cache.bernoulli_poly_eval(k + 1, x);
        diff / ExactInt::from(k + 1) == rat_pow(x, k)
    }

    /// The forward difference as an identity of polynomial coefficients.
    pub fn check_forward_difference_poly(&self, k: usize) -> bool {
        let p = self.cache.bernoulli_poly_coeffs(k + 1);
        let diff = &p.shift(&ExactRat::one()) - &p;
        diff.scale(&ExactRat::new(ExactInt::one(), ExactInt::from(k + 1))) == RatPoly::monomial(k)
    }

    /// `(x)_n == sum_k s(n,k) x^k`
    pub fn check_stirling_expansion(&self, n: usize, x: &ExactRat) -> bool {
        let expanded = self.stirling_weighted_sum(n, |k| rat_pow(x, k));
        falling_factorial(x, n) == expanded
    }

    /// `(B_{k+1}(y) - B_{k+1}) / (k+1)`
    pub fn telescoped_term(&self, k: usize, y: &ExactRat) -> ExactRat {
        (self.cache.bernoulli_poly_eval(k + 1, y) - self.cache.bernoulli(k + 1))
            / ExactInt::from(k + 1)
    }

    /// `n! C(y, n+1) == sum_k s(n,k) (B_{k+1}(y) - B_{k+1}) / (k+1)`
    pub fn check_telescoped(&self, n: usize, y: u64) -> bool {
        let y_rat = ExactRat::from_integer(ExactInt::from(y));
        let rhs = self.stirling_weighted_sum(n, |k| self.telescoped_term(k, &y_rat));
        telescoped_lhs(n, y) == rhs
    }

    /// `B_{k+1}(1/2) == (2^-k - 1) B_{k+1}`
    pub fn check_half_value(&self, k: usize) -> bool {
        let lhs = self.cache.bernoulli_poly_eval(k + 1, &rat(1, 2));
        let rhs = (inv_pow2(k) - ExactRat::one()) * self.cache.bernoulli(k + 1);
        lhs == rhs
    }

    /// `B_{k+1}(1/4) == -2^-(k+1) (1 - 2^-k) B_{k+1} - 4^-(k+1) (k+1) E_k`
    pub fn check_quarter_value(&self, k: usize) -> bool {
        let lhs = self.cache.bernoulli_poly_eval(k + 1, &rat(1, 4));
        let b = self.cache.bernoulli(k + 1);
        let e = ExactRat::from_integer(self.cache.euler_number(k));
        let rhs = -(inv_pow2(k + 1) * (ExactRat::one() - inv_pow2(k)) * b)
            - inv_pow2(2 * (k + 1)) * ExactInt::from(k + 1) * e;
        lhs == rhs
    }

    /// Runs one identity for every `n` in `n_min..=n_max`.
    ///
    /// Rows are evaluated in parallel but always come back in ascending `n`.
    /// Every row is evaluated; failures do not stop the sweep.
    pub fn verify_range(
        &self,
        identity: IdentityId,
        n_min: usize,
        n_max: usize,
    ) -> Result<IdentityReport> {
        if n_min > n_max {
            return Err(Error::InvalidRange { n_min, n_max });
        }
        let start = Instant::now();
        // Fill the memo tables once, serially, so the parallel phase only reads.
        self.cache.bernoulli_prefix(n_max + 2);
        self.cache.euler_prefix(n_max + 1);
        self.cache.stirling_row_shared(n_max);

        let summands = self
            .summands(identity, n_max + 1)
            .map(|t| ScaledTerms::new(&t));
        let telescope_table =
            (identity == IdentityId::Telescoped).then(|| self.telescope_table(n_max));
        let samples = stirling_sample_points();

        let rows: Vec<ReportRow> = (n_min..=n_max)
            .into_par_iter()
            .map(|n| match identity {
                IdentityId::First | IdentityId::Second | IdentityId::Third => {
                    let terms = summands.as_ref().expect("sum identity");
                    ReportRow::Sides(self.sides_from_summands(identity, n, terms))
                }
                IdentityId::Recur => ReportRow::Check {
                    n,
                    pass: self.check_forward_difference_poly(n),
                },
                IdentityId::Stirdef => ReportRow::Check {
                    n,
                    pass: samples.iter().all(|x| self.check_stirling_expansion(n, x)),
                },
                IdentityId::Telescoped => {
                    let table = telescope_table.as_ref().expect("built above");
                    ReportRow::Check {
                        n,
                        pass: self.check_telescoped_row(n, table),
                    }
                }
                IdentityId::Half => ReportRow::Check {
                    n,
                    pass: self.check_half_value(n),
                },
                IdentityId::Quarter => ReportRow::Check {
                    n,
                    pass: self.check_quarter_value(n),
                },
            })
            .collect();

        let all_pass = rows.iter().all(ReportRow::passed);
        Ok(IdentityReport {
            identity,
            n_min,
            n_max,
            rows,
            all_pass,
            elapsed: start.elapsed(),
        })
    }

    /// `table[y][k] = telescoped_term(k, y)` for `y <= TELESCOPE_Y_MAX`, `k <= n_max`.
    fn telescope_table(&self, n_max: usize) -> Vec<Vec<ExactRat>> {
        (0..=TELESCOPE_Y_MAX)
            .into_par_iter()
            .map(|y| {
                let y_rat = ExactRat::from_integer(ExactInt::from(y));
                (0..=n_max)
                    .map(|k| self.telescoped_term(k, &y_rat))
                    .collect()
            })
            .collect()
    }

    fn check_telescoped_row(&self, n: usize, table: &[Vec<ExactRat>]) -> bool {
        let row = self.cache.stirling_row_shared(n);
        table.iter().enumerate().all(|(y, terms)| {
            let lhs = telescoped_lhs(n, y as u64);
            let terms = &terms[..=n];
            if terms.iter().all(ExactRat::is_integer) {
                // Same sum, without a gcd per step.
                let rhs: ExactInt = row.iter().zip(terms).map(|(s, t)| s * t.numer()).sum();
                *lhs.numer() == rhs
            } else {
                lhs == self.stirling_weighted_sum(n, |k| terms[k].clone())
            }
        })
    }

    pub fn verify_all(&self, n_max: usize) -> Vec<IdentityReport> {
        IdentityId::ALL
            .into_iter()
            .map(|id| self.verify_range(id, 0, n_max).expect("0 <= n_max"))
            .collect()
    }
}

/// Rationals `t_k` written as `N_k / D` over one common denominator, so a
/// weighted sum needs a single reduction instead of one per term.
struct ScaledTerms {
    den: ExactInt,
    numers: Vec<ExactInt>,
}

impl ScaledTerms {
    fn new(terms: &[ExactRat]) -> Self {
        let den = terms
            .iter()
            .fold(ExactInt::one(), |acc, t| acc.lcm(t.denom()));
        let numers = terms
            .iter()
            .map(|t| t.numer() * (&den / t.denom()))
            .collect();
        ScaledTerms { den, numers }
    }

    /// `sum_k w_k t_k` for `k < weights.len()`.
    fn weighted_sum(&self, weights: &[ExactInt]) -> ExactRat {
        let num: ExactInt = weights
            .iter()
            .zip(&self.numers)
            .filter(|(w, _)| !w.is_zero())
            .map(|(w, n)| w * n)
            .sum();
        ExactRat::new(num, self.den.clone())
    }
}

/// `n! C(y, n+1)`
fn telescoped_lhs(n: usize, y: u64) -> ExactRat {
    let y = usize::try_from(y).expect("y fits in usize");
    ExactRat::from_integer(factorial(n) * binomial_int(y, n + 1))
}

pub fn identity_one_sides(n: usize) -> IdentitySides {
    IdentityChecker::default().identity_one_sides(n)
}

pub fn identity_two_sides(n: usize) -> IdentitySides {
    IdentityChecker::default().identity_two_sides(n)
}

pub fn identity_three_sides(n: usize) -> IdentitySides {
    IdentityChecker::default().identity_three_sides(n)
}

pub fn check_forward_difference(k: usize, x: &ExactRat) -> bool {
    IdentityChecker::default().check_forward_difference(k, x)
}

pub fn check_forward_difference_poly(k: usize) -> bool {
    IdentityChecker::default().check_forward_difference_poly(k)
}

pub fn check_stirling_expansion(n: usize, x: &ExactRat) -> bool {
    IdentityChecker::default().check_stirling_expansion(n, x)
}

pub fn check_telescoped(n: usize, y: u64) -> bool {
    IdentityChecker::default().check_telescoped(n, y)
}

pub fn check_half_value(k: usize) -> bool {
    IdentityChecker::default().check_half_value(k)
}

pub fn check_quarter_value(k: usize) -> bool {
    IdentityChecker::default().check_quarter_value(k)
}

pub fn verify_range(identity: IdentityId, n_min: usize, n_max: usize) -> Result<IdentityReport> {
    IdentityChecker::default().verify_range(identity, n_min, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::BernoulliConvention;

    fn assert_sides(s: &IdentitySides, lhs: ExactRat, rhs: ExactRat) {
        assert_eq!(s.lhs, lhs, "lhs at n = {}", s.n);
        assert_eq!(s.rhs, rhs, "rhs at n = {}", s.n);
        assert!(s.equal);
    }

    #[test]
    fn first_identity_small_n() {
        assert_sides(&identity_one_sides(0), rat(1, 1), rat(1, 1));
        assert_sides(&identity_one_sides(1), rat(-1, 2), rat(-1, 2));
        assert_sides(&identity_one_sides(2), rat(2, 3), rat(2, 3));
    }

    #[test]
    fn second_identity_small_n() {
        assert_sides(&identity_two_sides(0), rat(1, 2), rat(1, 2));
        assert_sides(&identity_two_sides(1), rat(-1, 8), rat(-1, 8));
        assert_sides(&identity_two_sides(2), rat(1, 8), rat(1, 8));
    }

    #[test]
    fn third_identity_small_n() {
        assert_sides(&identity_three_sides(0), rat(-1, 4), rat(-1, 4));
        assert_sides(&identity_three_sides(1), rat(3, 32), rat(3, 32));
        // -(1/12)(3/4)(7/4)
        assert_sides(&identity_three_sides(2), rat(-7, 64), rat(-7, 64));
    }

    #[test]
    fn plus_half_breaks_first_identity() {
        let cache = SeqCache::with_convention(BernoulliConvention::PlusHalf);
        let checker = IdentityChecker::new(&cache);
        let s = checker.identity_one_sides(1);
        assert_eq!(s.lhs, rat(1, 2));
        assert_eq!(s.rhs, rat(-1, 2));
        assert!(!s.equal);
        assert!(checker.identity_one_sides(0).equal);
    }

    #[test]
    fn forward_difference_examples() {
        assert!(check_forward_difference(0, &rat(7, 3)));
        assert!(check_forward_difference(2, &rat(1, 2)));
        for k in 0..=40 {
            assert!(check_forward_difference_poly(k), "k = {k}");
            for x in [(-3, 2), (0, 1), (1, 7), (5, 1), (-11, 4)] {
                assert!(check_forward_difference(k, &rat(x.0, x.1)));
            }
        }
    }

    #[test]
    fn stirling_expansion_examples() {
        assert!(check_stirling_expansion(0, &rat(-9, 5)));
        assert!(check_stirling_expansion(4, &rat(1, 2)));
        for n in 0..=60 {
            for x in stirling_sample_points() {
                assert!(check_stirling_expansion(n, &x), "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn telescoped_examples() {
        assert!(check_telescoped(0, 0));
        assert!(check_telescoped(2, 5));
        assert_eq!(telescoped_lhs(2, 5), rat(20, 1));
        assert!(check_telescoped(7, 3));
    }

    #[test]
    fn half_and_quarter_examples() {
        assert!(check_half_value(0));
        assert!(check_half_value(1));
        assert!(check_quarter_value(0));
        assert!(check_quarter_value(1));
        for k in 0..=30 {
            assert!(check_half_value(k));
            assert!(check_quarter_value(k));
        }
    }

    #[test]
    fn broken_relations_are_detected() {
        // Dropping the Euler term from the quarter value must fail at k = 0.
        let k = 0;
        let lhs = crate::sequences::bernoulli_poly_eval(k + 1, &rat(1, 4));
        let b = crate::sequences::bernoulli(k + 1);
        let without_euler = -(inv_pow2(k + 1) * (ExactRat::one() - inv_pow2(k)) * b);
        assert_ne!(lhs, without_euler);
    }

    #[test]
    fn verify_range_shapes() {
        let r = verify_range(IdentityId::First, 0, 2).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.all_pass);
        assert_eq!(
            r.rows.iter().map(ReportRow::n).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );

        let single = verify_range(IdentityId::First, 5, 5).unwrap();
        assert_eq!(single.rows.len(), 1);
        assert_eq!(single.rows[0].n(), 5);

        assert_eq!(
            verify_range(IdentityId::Half, 3, 2).unwrap_err(),
            Error::InvalidRange { n_min: 3, n_max: 2 }
        );
    }

    #[test]
    fn verify_collects_every_failure() {
        let cache = SeqCache::with_convention(BernoulliConvention::PlusHalf);
        let report = IdentityChecker::new(&cache)
            .verify_range(IdentityId::First, 0, 12)
            .unwrap();
        assert!(!report.all_pass);
        assert_eq!(report.rows.len(), 13);
        // B_1 enters through s(n,1), which is nonzero for every n >= 1.
        let failing: Vec<usize> = report.failures().map(ReportRow::n).collect();
        assert_eq!(failing, (1..=12).collect::<Vec<_>>());
    }

    #[test]
    fn every_identity_passes_at_small_n() {
        for report in IdentityChecker::default().verify_all(12) {
            assert!(report.all_pass, "{}", report.identity);
            assert_eq!(report.rows.len(), 13);
        }
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!("fourth".parse::<IdentityId>().is_err());
    }
}
