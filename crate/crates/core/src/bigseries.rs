//! Truncated power series in one variable with exact rational coefficients.
//!
//! Every transform works coefficient by coefficient on [`BigRational`]
//! values, so the results are exact at any truncation order. Binary
//! operations refuse operands of different orders instead of silently
//! re-truncating.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// A power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, BigRational::one(), 0)
    }

    /// `c t^degree`, or zero when the degree lies beyond the order.
    pub fn monomial(order: usize, c: BigRational, degree: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds a series from leading coefficients. Missing terms are zero and
    /// terms beyond `order` are dropped.
    pub fn from_coeffs<I>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_integers<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            order,
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into())),
        )
    }

    /// The geometric series `1 + t + t^2 + ...`.
    pub fn geometric(order: usize) -> Self {
        Self::from_coeffs(order, std::iter::repeat_n(BigRational::one(), order + 1))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; zero past the order.
    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `exp(f)` through the recurrence `n g_n = sum_k k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp requires a zero constant term".to_string(),
            ));
        }
        let n = self.order();
        let weighted: Vec<BigRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        let mut g = Vec::with_capacity(n + 1);
        g.push(BigRational::one());
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !weighted[k].is_zero() && !g[m - k].is_zero() {
                    acc += &weighted[k] * &g[m - k];
                }
            }
            g.push(acc / BigInt::from(m));
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// `log(g)` for `g_0 = 1`, the inverse of [`TruncSeries::exp`].
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(
                "log requires a constant term equal to 1".to_string(),
            ));
        }
        Ok(TruncSeries {
            coeffs: log_coeffs(&self.coeffs),
        })
    }

    /// `f(t^k)`, truncated at the same order.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("power substitution needs k >= 1".to_string()));
        }
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate().take(n / k + 1) {
            out.coeffs[i * k] = c.clone();
        }
        Ok(out)
    }

    /// `t d/dt f`: the coefficient of `t^n` is multiplied by `n`.
    pub fn euler_operator(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * BigInt::from(n))
                .collect(),
        }
    }

    /// Inverse Euler transform: `sum_n mu(n)/n log(g(t^n))`.
    ///
    /// Takes the types series of a species of sets of structures back to
    /// the types series of the connected structures.
    pub fn moebius_log_transform(&self) -> Result<Self> {
        let log = self.log()?;
        let order = self.order();
        let mut out = Self::zero(order);
        for n in 1..=order {
            let mu = mobius(n as u64);
            if mu == 0 {
                continue;
            }
            let weight = BigRational::new(BigInt::from(mu), BigInt::from(n));
            for (m, c) in log.coeffs.iter().enumerate().skip(1) {
                if n * m > order {
                    break;
                }
                if !c.is_zero() {
                    out.coeffs[n * m] += c * &weight;
                }
            }
        }
        Ok(out)
    }

    /// Euler transform: `exp(sum_n f(t^n)/n)`.
    pub fn exp_sum_transform(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "Euler transform requires a zero constant term".to_string(),
            ));
        }
        let order = self.order();
        let mut sum = Self::zero(order);
        for n in 1..=order {
            let weight = BigRational::new(BigInt::one(), BigInt::from(n));
            for (m, c) in self.coeffs.iter().enumerate().skip(1) {
                if n * m > order {
                    break;
                }
                if !c.is_zero() {
                    sum.coeffs[n * m] += c * &weight;
                }
            }
        }
        sum.exp()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, or an invariant error naming the first
    /// fractional one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Invariant(format!(
                        "coefficient of t^{n} is not an integer: {c}"
                    )))
                }
            })
            .collect()
    }
}

/// Logarithm coefficients of a sequence with leading term 1.
pub(crate) fn log_coeffs(g: &[BigRational]) -> Vec<BigRational> {
    let n = g.len() - 1;
    // k * f_k, kept to avoid re-multiplying in the inner loop
    let mut weighted: Vec<BigRational> = Vec::with_capacity(n + 1);
    weighted.push(BigRational::zero());
    for m in 1..=n {
        let mut acc = &g[m] * BigInt::from(m);
        for k in 1..m {
            if !weighted[k].is_zero() && !g[m - k].is_zero() {
                acc -= &weighted[k] * &g[m - k];
            }
        }
        weighted.push(acc);
    }
    weighted
        .into_iter()
        .enumerate()
        .map(|(m, c)| if m == 0 { c } else { c / BigInt::from(m) })
        .collect()
}

/// Logarithm of a series with integer coefficients and constant term 1.
/// Same recurrence as [`log_coeffs`] but carried out in integers.
pub fn log_integer_coeffs(g: &[BigInt]) -> Vec<BigRational> {
    let n = g.len() - 1;
    // m f_m = m g_m - sum_{k<m} (k f_k) g_{m-k}, an integer by induction.
    let mut weighted: Vec<BigInt> = Vec::with_capacity(n + 1);
    weighted.push(BigInt::zero());
    for m in 1..=n {
        let mut acc = &g[m] * BigInt::from(m);
        for k in 1..m {
            if !weighted[k].is_zero() && !g[m - k].is_zero() {
                acc -= &weighted[k] * &g[m - k];
            }
        }
        weighted.push(acc);
    }
    weighted
        .into_iter()
        .enumerate()
        .map(|(m, c)| {
            if m == 0 {
                BigRational::zero()
            } else {
                BigRational::new(c, BigInt::from(m))
            }
        })
        .collect()
}

/// Logarithm of an exponential generating function with integer
/// coefficients `b_n` (so `b_0 = 1`), returned as the integers `c_n` with
/// `log(sum b_n x^n/n!) = sum c_n x^n/n!`.
pub fn egf_log_integers(b: &[BigInt]) -> Result<Vec<BigInt>> {
    if b.first().is_none_or(|b0| !b0.is_one()) {
        return Err(Error::Domain("egf log needs b_0 = 1".to_string()));
    }
    let n = b.len() - 1;
    let mut c = vec![BigInt::zero(); n + 1];
    // binom holds C(m-1, j) for j = 0..m-1
    let mut binom = vec![BigInt::one()];
    for m in 1..=n {
        if m > 1 {
            let mut next = vec![BigInt::one(); m];
            for j in 1..m - 1 {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
        }
        let mut acc = b[m].clone();
        for j in 1..m {
            if !c[j].is_zero() && !b[m - j].is_zero() {
                acc -= &binom[j - 1] * &c[j] * &b[m - j];
            }
        }
        c[m] = acc;
    }
    Ok(c)
}

pub(crate) fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

pub(crate) fn mobius(n: u64) -> i8 {
    let mut rest = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    sign
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("euler_phi is undefined at 0".to_string()));
    }
    Ok(totient(n))
}

/// The Möbius function.
pub fn moebius_mu(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Domain("moebius_mu is undefined at 0".to_string()));
    }
    Ok(mobius(n))
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Renders an exact rational as `a` or `a/b`, and integers of any size in
/// plain decimal.
pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Small helper for tests and examples: `a/b` as a [`BigRational`].
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Coefficient extraction as machine integers, when they fit.
pub fn small_integers(s: &TruncSeries) -> Option<Vec<i64>> {
    s.coeffs
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

/// `true` when every coefficient is a nonnegative integer.
pub fn is_counting_series(s: &TruncSeries) -> bool {
    s.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
}
