//! Stirling numbers of the first kind, Bernoulli and Euler numbers,
//! Bernoulli polynomials, and the factorial-type products used alongside
//! them.
//!
//! The recurrences are iterative and memoized in a [`SeqCache`]. Tables only
//! ever grow by appending, and each append happens under a write lock, so a
//! reader always sees a consistent prefix.

use std::sync::{Arc, OnceLock, PoisonError, RwLock};

use num_traits::{One, Zero};

use crate::num::{ExactInt, ExactRat};
use crate::poly::RatPoly;

/// Stirling rows past this index are computed on demand from the last
/// cached row instead of being stored. Row `n` holds `n + 1` integers of
/// roughly `n log n` bits each, so storing every row up to 1000 would need
/// hundreds of megabytes.
pub const STIRLING_ROW_CACHE_LIMIT: usize = 512;

/// Which value `B_1` takes.
///
/// `MinusHalf` is the value produced by the generating function
/// `t / (e^t - 1)` and is what every identity in this crate assumes.
/// `PlusHalf` exists to demonstrate that the identities are sensitive to
/// the choice. Only index 1 differs between the two; `B_n` for `n >= 2`
/// and all Euler and Stirling values are unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BernoulliConvention {
    #[default]
    MinusHalf,
    PlusHalf,
}

/// Memo tables for the recursively defined sequences.
///
/// Safe to share between threads. Values read from a warm cache are
/// identical to those computed by a fresh instance.
#[derive(Debug, Default)]
pub struct SeqCache {
    convention: BernoulliConvention,
    stirling_rows: RwLock<Vec<Arc<[ExactInt]>>>,
    // Stored under the MinusHalf convention regardless of `convention`.
    bernoulli_prefix: RwLock<Vec<ExactRat>>,
    euler_prefix: RwLock<Vec<ExactInt>>,
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_convention(convention: BernoulliConvention) -> Self {
        SeqCache {
            convention,
            ..Self::default()
        }
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static SeqCache {
        static GLOBAL: OnceLock<SeqCache> = OnceLock::new();
        GLOBAL.get_or_init(SeqCache::new)
    }

    pub fn convention(&self) -> BernoulliConvention {
        self.convention
    }

    /// Signed Stirling number of the first kind `s(n, k)`.
    pub fn stirling_s1(&self, n: usize, k: usize) -> ExactInt {
        if k > n {
            return ExactInt::zero();
        }
        self.stirling_row_shared(n)[k].clone()
    }

    /// `[s(n, 0), ..., s(n, n)]`
    pub fn stirling_row(&self, n: usize) -> Vec<ExactInt> {
        self.stirling_row_shared(n).to_vec()
    }

    pub fn stirling_row_shared(&self, n: usize) -> Arc<[ExactInt]> {
        if let Some(row) = read(&self.stirling_rows).get(n) {
            return row.clone();
        }
        let cached_upto = n.min(STIRLING_ROW_CACHE_LIMIT);
        let last = {
            let mut rows = write(&self.stirling_rows);
            if rows.is_empty() {
                rows.push(Arc::from(vec![ExactInt::one()]));
            }
            while rows.len() <= cached_upto {
                let m = rows.len() - 1;
                let next = next_stirling_row(&rows[m], m);
                rows.push(Arc::from(next));
            }
            rows[cached_upto].clone()
        };
        if cached_upto == n {
            return last;
        }
        let mut row = last.to_vec();
        for m in cached_upto..n {
            row = next_stirling_row(&row, m);
        }
        Arc::from(row)
    }

    /// Bernoulli number `B_n` under this cache's convention.
    pub fn bernoulli(&self, n: usize) -> ExactRat {
        self.ensure_bernoulli(n);
        let b = read(&self.bernoulli_prefix)[n].clone();
        self.apply_convention(n, b)
    }

    /// `[B_0, ..., B_{len-1}]` under this cache's convention.
    pub fn bernoulli_prefix(&self, len: usize) -> Vec<ExactRat> {
        if len == 0 {
            return Vec::new();
        }
        self.ensure_bernoulli(len - 1);
        let table = read(&self.bernoulli_prefix);
        table[..len]
            .iter()
            .enumerate()
            .map(|(k, b)| self.apply_convention(k, b.clone()))
            .collect()
    }

    fn apply_convention(&self, n: usize, b: ExactRat) -> ExactRat {
        match self.convention {
            BernoulliConvention::PlusHalf if n == 1 => -b,
            _ => b,
        }
    }

    fn ensure_bernoulli(&self, n: usize) {
        if read(&self.bernoulli_prefix).len() > n {
            return;
        }
        let mut table = write(&self.bernoulli_prefix);
        if table.is_empty() {
            table.push(ExactRat::one());
        }
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        while table.len() <= n {
            let m = table.len();
            let top = ExactInt::from(m + 1);
            let mut binom = ExactInt::one();
            let mut sum = ExactRat::zero();
            for (k, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    sum += b * &binom;
                }
                binom = binom * (&top - k) / (k + 1);
            }
            let b_m = -sum / top;
            table.push(b_m);
        }
    }

    /// Euler number `E_n` (coefficients of `1 / cosh t`).
    pub fn euler_number(&self, n: usize) -> ExactInt {
        self.ensure_euler(n);
        read(&self.euler_prefix)[n].clone()
    }

    /// `[E_0, ..., E_{len-1}]`
    pub fn euler_prefix(&self, len: usize) -> Vec<ExactInt> {
        if len == 0 {
            return Vec::new();
        }
        self.ensure_euler(len - 1);
        read(&self.euler_prefix)[..len].to_vec()
    }

    fn ensure_euler(&self, n: usize) {
        if read(&self.euler_prefix).len() > n {
            return;
        }
        let mut table = write(&self.euler_prefix);
        if table.is_empty() {
            table.push(ExactInt::one());
        }
        // E_{2m} = -sum_{k<m} C(2m, 2k) E_{2k}; odd indices vanish.
        while table.len() <= n {
            let m = table.len();
            if m % 2 == 1 {
                table.push(ExactInt::zero());
                continue;
            }
            let top = ExactInt::from(m);
            let mut binom = ExactInt::one();
            let mut sum = ExactInt::zero();
            for j in 0..m {
                if j % 2 == 0 {
                    sum += &table[j] * &binom;
                }
                binom = binom * (&top - j) / (j + 1);
            }
            table.push(-sum);
        }
    }

    /// Coefficients of `B_n(x) = sum_k C(n, k) B_k x^(n-k)`, ascending.
    pub fn bernoulli_poly_coeffs(&self, n: usize) -> RatPoly {
        let b = self.bernoulli_prefix(n + 1);
        let mut coeffs = vec![ExactRat::zero(); n + 1];
        let mut binom = ExactInt::one();
        for (k, bk) in b.iter().enumerate() {
            coeffs[n - k] = bk * &binom;
            binom = binom * (n - k) / (k + 1);
        }
        RatPoly::new(coeffs)
    }

    /// `B_n(x)` evaluated directly from the umbral sum.
    pub fn bernoulli_poly_eval(&self, n: usize, x: &ExactRat) -> ExactRat {
        self.with_bernoulli_prefix(n + 1, |b| {
            // Walk k downward so the power of x grows: term_k = C(n,k) B_k x^(n-k).
            let mut binom = ExactInt::one(); // C(n, n)
            let mut power = ExactRat::one();
            let mut sum = ExactRat::zero();
            for k in (0..=n).rev() {
                if !b[k].is_zero() {
                    let num = b[k].numer() * &binom * power.numer();
                    let den = b[k].denom() * power.denom();
                    sum += ExactRat::new(num, den);
                }
                if k > 0 {
                    binom = binom * k / (n - k + 1);
                    power *= x;
                }
            }
            sum
        })
    }

    /// Runs `f` on `[B_0, ..., B_{len-1}]` without copying the table when
    /// the convention allows. `f` must not call back into this cache.
    fn with_bernoulli_prefix<R>(&self, len: usize, f: impl FnOnce(&[ExactRat]) -> R) -> R {
        match self.convention {
            BernoulliConvention::MinusHalf => {
                if len > 0 {
                    self.ensure_bernoulli(len - 1);
                }
                f(&read(&self.bernoulli_prefix)[..len])
            }
            BernoulliConvention::PlusHalf => f(&self.bernoulli_prefix(len)),
        }
    }
}

/// Memo table that [`SeqCache::inject_fault`] can corrupt.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultTarget {
    Bernoulli,
    Euler,
    Stirling,
}

impl SeqCache {
    /// Corrupts one memoized value so that cross-checks have something to
    /// catch. Bernoulli entries get `+1/7`, Euler entries `+1`, and Stirling
    /// row `index` gets `+1` on its last coefficient.
    #[doc(hidden)]
    pub fn inject_fault(&self, target: FaultTarget, index: usize) {
        match target {
            FaultTarget::Bernoulli => {
                self.ensure_bernoulli(index);
                write(&self.bernoulli_prefix)[index] +=
                    ExactRat::new(ExactInt::one(), ExactInt::from(7));
            }
            FaultTarget::Euler => {
                self.ensure_euler(index);
                write(&self.euler_prefix)[index] += 1;
            }
            FaultTarget::Stirling => {
                assert!(
                    index <= STIRLING_ROW_CACHE_LIMIT,
                    "row {index} is not memoized"
                );
                self.stirling_row_shared(index);
                let mut rows = write(&self.stirling_rows);
                let mut row = rows[index].to_vec();
                row[index] += 1;
                rows[index] = Arc::from(row);
            }
        }
    }
}

fn next_stirling_row(row: &[ExactInt], m: usize) -> Vec<ExactInt> {
    // s(m+1, k) = s(m, k-1) - m s(m, k)
    let mut next = Vec::with_capacity(m + 2);
    for k in 0..=m + 1 {
        let mut v = if k > 0 {
            row[k - 1].clone()
        } else {
            ExactInt::zero()
        };
        if k <= m && m > 0 {
            v -= &row[k] * m;
        }
        next.push(v);
    }
    next
}

fn read<T>(lock: &RwLock<T>) -> std::sync::RwLockReadGuard<'_, T> {
    lock.read().unwrap_or_else(PoisonError::into_inner)
}

fn write<T>(lock: &RwLock<T>) -> std::sync::RwLockWriteGuard<'_, T> {
    lock.write().unwrap_or_else(PoisonError::into_inner)
}

pub fn stirling_s1(n: usize, k: usize) -> ExactInt {
    SeqCache::global().stirling_s1(n, k)
}

pub fn stirling_row(n: usize) -> Vec<ExactInt> {
    SeqCache::global().stirling_row(n)
}

pub fn bernoulli(n: usize) -> ExactRat {
    SeqCache::global().bernoulli(n)
}

pub fn euler_number(n: usize) -> ExactInt {
    SeqCache::global().euler_number(n)
}

pub fn bernoulli_poly_coeffs(n: usize) -> RatPoly {
    SeqCache::global().bernoulli_poly_coeffs(n)
}

pub fn bernoulli_poly_eval(n: usize, x: &ExactRat) -> ExactRat {
    SeqCache::global().bernoulli_poly_eval(n, x)
}

/// `x (x-1) ... (x-n+1)`; one when `n == 0`.
pub fn falling_factorial(x: &ExactRat, n: usize) -> ExactRat {
    (0..n).fold(ExactRat::one(), |acc, j| acc * (x - ExactInt::from(j)))
}

/// `x (x+1) ... (x+n-1)`; one when `n == 0`.
pub fn rising_factorial(x: &ExactRat, n: usize) -> ExactRat {
    (0..n).fold(ExactRat::one(), |acc, j| acc * (x + ExactInt::from(j)))
}

pub fn factorial(n: usize) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, j| acc * j)
}

/// `1 * 3 * 5 * ... * (2n-1)`; one when `n == 0`.
pub fn double_factorial_odd(n: usize) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, j| acc * (2 * j - 1))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial_int(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the
    // division is exact at every step.
    (0..k).fold(ExactInt::one(), |acc, j| acc * (n - j) / (j + 1))
}

/// `C(x, n) = (x)_n / n!` for rational `x`.
pub fn binomial_rat(x: &ExactRat, n: usize) -> ExactRat {
    falling_factorial(x, n) / ExactRat::from_integer(factorial(n))
}
