//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::num::{format_rat, ExactInt, ExactRat};

/// Coefficients in ascending degree. The zero polynomial is `[0]`; any
/// other polynomial has a nonzero last coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<ExactRat>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<ExactRat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = ExactInt>,
    {
        Self::new(coeffs.into_iter().map(ExactRat::from_integer).collect())
    }

    pub fn zero() -> Self {
        RatPoly {
            coeffs: vec![ExactRat::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(ExactRat::one())
    }

    pub fn constant(c: ExactRat) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![ExactRat::zero(); k + 1];
        coeffs[k] = ExactRat::one();
        RatPoly { coeffs }
    }

    /// `x - a`
    pub fn linear_root(a: ExactRat) -> Self {
        Self::new(vec![-a, ExactRat::one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(ExactRat::zero());
        }
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRat> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> ExactRat {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> &ExactRat {
        self.coeffs.last().expect("never empty")
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactRat) -> ExactRat {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRat::zero(), |acc, c| acc * x + c)
    }

    /// `p(x + a)` by repeated synthetic division (Taylor shift).
    pub fn shift(&self, a: &ExactRat) -> RatPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        RatPoly::new(c)
    }

    /// `p(-x)`
    pub fn reflect(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, s: &ExactRat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Product truncated to terms of degree `<= order`.
    pub fn mul_truncated(&self, other: &RatPoly, order: usize) -> RatPoly {
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut out = vec![ExactRat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Integer coefficients, or the index of the first non-integral one.
    pub fn integer_coeffs(&self) -> Result<Vec<ExactInt>, usize> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.numer().clone())
                } else {
                    Err(k)
                }
            })
            .collect()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let order = self.coeffs.len() + rhs.coeffs.len() - 2;
        self.mul_truncated(rhs, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(RatPoly::new(vec![]), RatPoly::zero());
        assert_eq!(p(&[(0, 1), (0, 1)]), RatPoly::zero());
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(p(&[(1, 2), (3, 1), (0, 1)]).coeffs().len(), 2);
    }

    #[test]
    fn falling_factorial_cubic() {
        let prod = (0..3).fold(RatPoly::one(), |acc, j| {
            &acc * &RatPoly::linear_root(rat(j, 1))
        });
        assert_eq!(
            prod.integer_coeffs().unwrap(),
            vec![int(0), int(2), int(-3), int(1)]
        );
    }

    #[test]
    fn shift_and_reflect() {
        // x^2 - x + 1/6 shifted by 1 is x^2 + x + 1/6
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.shift(&rat(1, 1)), p(&[(1, 6), (1, 1), (1, 1)]));
        assert_eq!(b2.reflect(), p(&[(1, 6), (1, 1), (1, 1)]));
        assert_eq!(b2.eval(&rat(1, 4)), rat(-1, 48));
    }

    #[test]
    fn truncation_drops_high_terms() {
        let a = p(&[(1, 1), (1, 1)]);
        let sq = a.mul_truncated(&a, 1);
        assert_eq!(sq, p(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn non_integral_coefficient_is_reported() {
        assert_eq!(p(&[(1, 1), (1, 2)]).integer_coeffs(), Err(1));
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-50i64..50, 1i64..20), 1..7)
            .prop_map(|c| RatPoly::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn product_degree_adds(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), n in -30i64..30, d in 1i64..9) {
            let x = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
            prop_assert_eq!(a.shift(&x).eval(&rat(1, 3)), a.eval(&(x + rat(1, 3))));
        }
    }
}
