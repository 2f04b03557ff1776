//! Brute-force algorithms used only to cross-check [`crate::sequences`].
//!
//! Each oracle takes a route that shares no recurrence with the primary
//! implementation: the Akiyama–Tanigawa triangle for Bernoulli numbers,
//! literal polynomial multiplication for Stirling rows, and a truncated
//! power-series reciprocal of `cosh t` for Euler numbers. They are slower
//! on purpose.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{format_rat, ExactInt, ExactRat};
use crate::poly::RatPoly;
use crate::sequences::SeqCache;

/// `[B_0, ..., B_n]` from one pass of the Akiyama–Tanigawa triangle,
/// with `B_1 = -1/2`.
pub fn bernoulli_akiyama_tanigawa_prefix(n: usize) -> Vec<ExactRat> {
    let mut row: Vec<ExactRat> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(ExactRat::new(ExactInt::one(), ExactInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * ExactInt::from(j);
        }
        // The triangle yields B_1 = +1/2.
        out.push(if m == 1 {
            -row[0].clone()
        } else {
            row[0].clone()
        });
    }
    out
}

pub fn bernoulli_akiyama_tanigawa(n: usize) -> ExactRat {
    bernoulli_akiyama_tanigawa_prefix(n)
        .pop()
        .expect("non-empty")
}

/// Rows `0..=n` of Stirling numbers by expanding `x (x-1) ... (x-m+1)`.
pub fn stirling_rows_by_product(n: usize) -> Result<Vec<Vec<ExactInt>>> {
    let mut poly = RatPoly::one();
    let mut rows = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m > 0 {
            poly = &poly * &RatPoly::linear_root(ExactRat::from_integer(ExactInt::from(m - 1)));
        }
        rows.push(integral_row(&poly, m)?);
    }
    Ok(rows)
}

pub fn stirling_row_by_product(n: usize) -> Result<Vec<ExactInt>> {
    let poly = (0..n).fold(RatPoly::one(), |acc, j| {
        &acc * &RatPoly::linear_root(ExactRat::from_integer(ExactInt::from(j)))
    });
    integral_row(&poly, n)
}

fn integral_row(poly: &RatPoly, n: usize) -> Result<Vec<ExactInt>> {
    poly.integer_coeffs().map_err(|k| Error::NonIntegral {
        what: "falling factorial coefficient",
        index: n,
        value: format_rat(&poly.coeff(k)),
    })
}

/// `cosh t` truncated after `t^order`.
pub fn cosh_series(order: usize) -> RatPoly {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = ExactInt::one();
    for k in 0..=order {
        if k > 0 {
            fact *= k;
        }
        coeffs.push(if k % 2 == 0 {
            ExactRat::new(ExactInt::one(), fact.clone())
        } else {
            ExactRat::zero()
        });
    }
    RatPoly::new(coeffs)
}

/// Reciprocal of a power series with nonzero constant term, truncated
/// after `t^order`.
pub fn series_reciprocal(series: &RatPoly, order: usize) -> RatPoly {
    let c0 = series.coeff(0);
    assert!(!c0.is_zero(), "series has no reciprocal");
    let inv_c0 = c0.recip();
    let mut r: Vec<ExactRat> = Vec::with_capacity(order + 1);
    r.push(inv_c0.clone());
    for i in 1..=order {
        let mut acc = ExactRat::zero();
        for j in 1..=i {
            let c = series.coeff(j);
            if !c.is_zero() {
                acc += c * &r[i - j];
            }
        }
        r.push(-acc * &inv_c0);
    }
    RatPoly::new(r)
}

/// `[E_0, ..., E_n]` read off `1 / cosh t`.
pub fn euler_by_series_reciprocal_prefix(n: usize) -> Result<Vec<ExactInt>> {
    let sech = series_reciprocal(&cosh_series(n), n);
    let mut fact = ExactInt::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            fact *= k;
        }
        let scaled = sech.coeff(k) * &fact;
        if !scaled.is_integer() {
            return Err(Error::NonIntegral {
                what: "Euler number",
                index: k,
                value: format_rat(&scaled),
            });
        }
        out.push(scaled.to_integer());
    }
    Ok(out)
}

pub fn euler_by_series_reciprocal(n: usize) -> Result<ExactInt> {
    Ok(euler_by_series_reciprocal_prefix(n)?
        .pop()
        .expect("non-empty"))
}

/// Primes up to `limit` by trial division.
fn primes_upto(limit: usize) -> Vec<usize> {
    (2..=limit)
        .filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// Product of the primes `p` with `(p - 1) | 2m`: the predicted
/// denominator of `B_{2m}`.
pub fn von_staudt_clausen_denominator(m: usize) -> ExactInt {
    assert!(m >= 1);
    primes_upto(2 * m + 1)
        .into_iter()
        .filter(|p| (2 * m).is_multiple_of(p - 1))
        .fold(ExactInt::one(), |acc, p| acc * p)
}

/// First index at which two sequences differ, comparing up to the shorter.
pub fn first_divergence<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Outcome of one oracle cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: &'static str,
    pub checked: usize,
    pub first_mismatch: Option<usize>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn cross_check_bernoulli(cache: &SeqCache, n_max: usize) -> CrossCheck {
    let primary = cache.bernoulli_prefix(n_max + 1);
    let oracle = bernoulli_akiyama_tanigawa_prefix(n_max);
    CrossCheck {
        name: "bernoulli",
        checked: n_max + 1,
        first_mismatch: first_divergence(&primary, &oracle),
    }
}

pub fn cross_check_euler(cache: &SeqCache, n_max: usize) -> Result<CrossCheck> {
    let primary = cache.euler_prefix(n_max + 1);
    let oracle = euler_by_series_reciprocal_prefix(n_max)?;
    Ok(CrossCheck {
        name: "euler",
        checked: n_max + 1,
        first_mismatch: first_divergence(&primary, &oracle),
    })
}

pub fn cross_check_stirling(cache: &SeqCache, n_max: usize) -> Result<CrossCheck> {
    let oracle = stirling_rows_by_product(n_max)?;
    let first_mismatch = oracle
        .iter()
        .enumerate()
        .position(|(n, row)| *cache.stirling_row_shared(n) != row[..]);
    Ok(CrossCheck {
        name: "stirling",
        checked: n_max + 1,
        first_mismatch,
    })
}

/// Denominator of `B_{2m}` against the von Staudt–Clausen prediction for
/// `1 <= m <= m_max`. Mismatches are reported by `m`.
pub fn cross_check_von_staudt_clausen(cache: &SeqCache, m_max: usize) -> CrossCheck {
    let first_mismatch =
        (1..=m_max).find(|&m| *cache.bernoulli(2 * m).denom() != von_staudt_clausen_denominator(m));
    CrossCheck {
        name: "von-staudt-clausen",
        checked: m_max,
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    #[test]
    fn akiyama_tanigawa_small() {
        assert_eq!(bernoulli_akiyama_tanigawa(0), rat(1, 1));
        assert_eq!(bernoulli_akiyama_tanigawa(1), rat(-1, 2));
        assert_eq!(bernoulli_akiyama_tanigawa(2), rat(1, 6));
        assert_eq!(bernoulli_akiyama_tanigawa(12), rat(-691, 2730));
    }

    #[test]
    fn product_rows_small() {
        assert_eq!(stirling_row_by_product(0).unwrap(), vec![int(1)]);
        assert_eq!(
            stirling_row_by_product(3).unwrap(),
            vec![int(0), int(2), int(-3), int(1)]
        );
        let rows = stirling_rows_by_product(6).unwrap();
        assert_eq!(rows[6], stirling_row_by_product(6).unwrap());
    }

    #[test]
    fn euler_small() {
        assert_eq!(euler_by_series_reciprocal(0).unwrap(), int(1));
        assert_eq!(euler_by_series_reciprocal(2).unwrap(), int(-1));
        assert_eq!(
            euler_by_series_reciprocal_prefix(10).unwrap(),
            [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521]
                .map(int)
                .to_vec()
        );
    }

    #[test]
    fn reciprocal_times_series_is_one() {
        for order in [0, 1, 2, 7, 30] {
            let c = cosh_series(order);
            let r = series_reciprocal(&c, order);
            assert_eq!(c.mul_truncated(&r, order), RatPoly::one(), "order {order}");
        }
    }

    #[test]
    fn von_staudt_clausen_small() {
        // B_2 = 1/6, B_4 = -1/30, B_12 = -691/2730
        assert_eq!(von_staudt_clausen_denominator(1), int(6));
        assert_eq!(von_staudt_clausen_denominator(2), int(30));
        assert_eq!(von_staudt_clausen_denominator(6), int(2730));
    }

    #[test]
    fn primes() {
        assert_eq!(primes_upto(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(primes_upto(1).is_empty());
    }

    #[test]
    fn oracles_agree_with_primary() {
        let cache = SeqCache::new();
        assert!(cross_check_bernoulli(&cache, 120).passed());
        assert!(cross_check_euler(&cache, 120).unwrap().passed());
        assert!(cross_check_stirling(&cache, 120).unwrap().passed());
        assert!(cross_check_von_staudt_clausen(&cache, 50).passed());
    }

    #[test]
    fn divergence_is_located() {
        assert_eq!(first_divergence(&[1, 2, 3], &[1, 2, 4]), Some(2));
        assert_eq!(first_divergence(&[1, 2], &[1, 2, 4]), None);
    }
}
