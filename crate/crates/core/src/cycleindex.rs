//! Cycle index series in the variables `x_1, x_2, ...` (`x_k` of weight `k`).
//!
//! Two representations are provided. [`DenseCycleIndex`] stores one
//! coefficient per cycle type and is only practical at small weight; it is
//! kept for validation. [`FactoredCycleIndex`] stores a separable series
//!
//! ```text
//! Z = prod_k ( sum_n a_{k,n} / (k^n n!) x_k^n ),   a_{k,0} = 1
//! ```
//!
//! which has `O(N log N)` coefficients up to weight `N` and supports the
//! Hadamard product termwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigseries::{factorial, is_prime, totient, TruncSeries};
use crate::error::{Error, Result};

/// Largest weight for which dense cycle indices may be built.
pub const DENSE_WEIGHT_CAP: usize = 24;

/// A cycle type `1^{k_1} 2^{k_2} ...`, stored as sorted `(length, count)`
/// pairs with nonzero counts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartitionType {
    parts: Vec<(usize, usize)>,
}

impl PartitionType {
    /// From the count vector `(k_1, ..., k_n)`; trailing zeros are allowed.
    pub fn from_counts(counts: &[usize]) -> Self {
        PartitionType {
            parts: counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| (i + 1, c))
                .collect(),
        }
    }

    /// From arbitrary `(length, count)` pairs; repeated lengths are merged.
    pub fn from_parts(parts: &[(usize, usize)]) -> Self {
        let mut merged: BTreeMap<usize, usize> = BTreeMap::new();
        for &(len, count) in parts {
            assert!(len > 0, "cycle length must be positive");
            *merged.entry(len).or_default() += count;
        }
        PartitionType {
            parts: merged.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    /// Cycle type of a permutation given as an image array.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut counts = vec![0usize; perm.len()];
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = perm[a];
                len += 1;
            }
            counts[len - 1] += 1;
        }
        Self::from_counts(&counts)
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// Number of cycles of the given length.
    pub fn count(&self, len: usize) -> usize {
        self.parts
            .iter()
            .find(|&&(l, _)| l == len)
            .map_or(0, |&(_, c)| c)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&(l, c)| l * c).sum()
    }

    /// Size of the centralizer of a permutation of this type,
    /// `prod_j j^{k_j} k_j!`.
    pub fn centralizer_order(&self) -> BigInt {
        self.parts.iter().fold(BigInt::one(), |acc, &(l, c)| {
            acc * BigInt::from(l).pow(c as u32) * factorial(c)
        })
    }

    /// All cycle types of weight exactly `n`.
    pub fn all_of_weight(n: usize) -> Vec<PartitionType> {
        fn rec(rest: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<PartitionType>) {
            if rest == 0 {
                let mut counts = vec![0; acc.first().copied().unwrap_or(0)];
                for &p in acc.iter() {
                    counts[p - 1] += 1;
                }
                out.push(PartitionType::from_counts(&counts));
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                acc.push(p);
                rec(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartitionType {
    /// Monomial notation, e.g. `x1^2*x3`; the empty type prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        for (i, &(l, c)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if c == 1 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{l}^{c}")?;
            }
        }
        Ok(())
    }
}

/// A cycle index truncated at `max_weight`, one coefficient per type.
///
/// Coefficients include the `1/(1^{k_1} k_1! ...)` normalisation, so the
/// coefficient of type `λ` is `fix(λ) / z_λ` with `fix(λ)` the number of
/// structures fixed by any permutation of type `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseCycleIndex {
    max_weight: usize,
    terms: BTreeMap<PartitionType, BigRational>,
}

fn check_dense_cap(weight: usize) -> Result<()> {
    if weight > DENSE_WEIGHT_CAP {
        return Err(Error::Resource {
            what: "dense cycle index weight",
            requested: weight,
            cap: DENSE_WEIGHT_CAP,
        });
    }
    Ok(())
}

impl DenseCycleIndex {
    pub fn new(max_weight: usize) -> Result<Self> {
        check_dense_cap(max_weight)?;
        Ok(DenseCycleIndex {
            max_weight,
            terms: BTreeMap::new(),
        })
    }

    /// Builds the series from the fixed-point count of each cycle type.
    pub fn from_fixed_points<F>(max_weight: usize, mut fix: F) -> Result<Self>
    where
        F: FnMut(&PartitionType) -> Result<BigInt>,
    {
        let mut z = Self::new(max_weight)?;
        for w in 0..=max_weight {
            for ty in PartitionType::all_of_weight(w) {
                let count = fix(&ty)?;
                let c = BigRational::new(count, ty.centralizer_order());
                z.insert(ty, c);
            }
        }
        Ok(z)
    }

    /// Sets a coefficient. Zero coefficients are not stored.
    pub fn insert(&mut self, ty: PartitionType, c: BigRational) {
        assert!(ty.weight() <= self.max_weight, "type beyond max weight");
        if c.is_zero() {
            self.terms.remove(&ty);
        } else {
            self.terms.insert(ty, c);
        }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn coeff(&self, ty: &PartitionType) -> BigRational {
        self.terms
            .get(ty)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Number of fixed structures for the type, `coeff * z_λ`.
    pub fn fixed_points(&self, ty: &PartitionType) -> BigRational {
        self.coeff(ty) * BigRational::from_integer(ty.centralizer_order())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionType, &BigRational)> {
        self.terms.iter()
    }

    /// The homogeneous component of the given weight.
    pub fn homogeneous(&self, weight: usize) -> Self {
        DenseCycleIndex {
            max_weight: self.max_weight,
            terms: self
                .terms
                .iter()
                .filter(|(ty, _)| ty.weight() == weight)
                .map(|(ty, c)| (ty.clone(), c.clone()))
                .collect(),
        }
    }

    /// Cycle index of the cartesian product: fixed-point counts multiply.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.max_weight != other.max_weight {
            return Err(Error::OrderMismatch {
                left: self.max_weight,
                right: other.max_weight,
            });
        }
        let mut out = Self::new(self.max_weight)?;
        for (ty, a) in &self.terms {
            if let Some(b) = other.terms.get(ty) {
                let z = BigRational::from_integer(ty.centralizer_order());
                out.insert(ty.clone(), a * b * z);
            }
        }
        Ok(out)
    }

    /// `Z(t, t^2, t^3, ...)`: the types generating series.
    pub fn condense_types(&self) -> TruncSeries {
        let mut coeffs = vec![BigRational::zero(); self.max_weight + 1];
        for (ty, c) in &self.terms {
            coeffs[ty.weight()] += c;
        }
        TruncSeries::from_coeffs(self.max_weight, coeffs)
    }

    /// `Z(t, 0, 0, ...)`: the exponential generating series of labelled
    /// structures.
    pub fn condense_labelled(&self) -> TruncSeries {
        let mut coeffs = vec![BigRational::zero(); self.max_weight + 1];
        for (ty, c) in &self.terms {
            if let [(1, k)] = ty.parts() {
                coeffs[*k] = c.clone();
            } else if ty.parts().is_empty() {
                coeffs[0] = c.clone();
            }
        }
        TruncSeries::from_coeffs(self.max_weight, coeffs)
    }
}

impl fmt::Display for DenseCycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (ty, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", crate::bigseries::format_rational(c), ty)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Cycle index of the species of cycles, `sum_{r,s} phi(r) x_r^s / (rs)`.
pub fn zc_dense(max_weight: usize) -> Result<DenseCycleIndex> {
    let mut z = DenseCycleIndex::new(max_weight)?;
    for n in 1..=max_weight {
        for (ty, c) in zcn_dense(n)?.terms {
            z.insert(ty, c);
        }
    }
    Ok(z)
}

/// Cycle index of the species of `n`-cycles, `sum_{rs=n} phi(r) x_r^s / n`.
pub fn zcn_dense(n: usize) -> Result<DenseCycleIndex> {
    if n == 0 {
        return Err(Error::Domain("cycle length must be positive".to_string()));
    }
    let mut z = DenseCycleIndex::new(n)?;
    for r in (1..=n).filter(|r| n.is_multiple_of(*r)) {
        let s = n / r;
        let c = BigRational::new(BigInt::from(totient(r as u64)), BigInt::from(n));
        z.insert(PartitionType::from_parts(&[(r, s)]), c);
    }
    Ok(z)
}

/// Dense cycle index of permutations of prime order `p`, each coefficient
/// taken from [`fixed_order_p_commuting`].
pub fn zs_prime_dense(p: u64, max_weight: usize) -> Result<DenseCycleIndex> {
    DenseCycleIndex::from_fixed_points(max_weight, |ty| fixed_order_p_commuting(p, ty))
}

/// Dense cycle index of the species of all permutations: every
/// coefficient is 1.
pub fn zs_full_dense(max_weight: usize) -> Result<DenseCycleIndex> {
    DenseCycleIndex::from_fixed_points(max_weight, |ty| Ok(ty.centralizer_order()))
}

/// Separable cycle index in factored form.
///
/// `factors[k - 1][n]` holds `a_{k,n}` for `n <= max_weight / k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredCycleIndex {
    max_weight: usize,
    factors: Vec<Vec<BigRational>>,
}

impl FactoredCycleIndex {
    /// Builds the factored form from its `a_{k,n}` coefficients.
    ///
    /// `a(k)` must return at least `max_weight / k + 1` values with
    /// `a_{k,0} = 1`; extra values are dropped.
    pub fn from_coefficients<F>(max_weight: usize, mut a: F) -> Result<Self>
    where
        F: FnMut(usize) -> Vec<BigRational>,
    {
        let mut factors = Vec::with_capacity(max_weight);
        for k in 1..=max_weight {
            let len = max_weight / k + 1;
            let mut row = a(k);
            if row.len() < len {
                return Err(Error::Domain(format!(
                    "factor {k} has {} coefficients, needs {len}",
                    row.len()
                )));
            }
            row.truncate(len);
            if !row[0].is_one() {
                return Err(Error::Domain(format!("a_{{{k},0}} must equal 1")));
            }
            factors.push(row);
        }
        Ok(FactoredCycleIndex {
            max_weight,
            factors,
        })
    }

    /// Builds the factored form from the plain Taylor coefficients of each
    /// univariate factor (coefficient of `x_k^n`).
    pub fn from_factor_series<F>(max_weight: usize, mut series: F) -> Result<Self>
    where
        F: FnMut(usize) -> Vec<BigRational>,
    {
        Self::from_coefficients(max_weight, |k| {
            let kk = BigInt::from(k);
            series(k)
                .into_iter()
                .enumerate()
                .map(|(n, c)| c * BigRational::from_integer(kk.pow(n as u32) * factorial(n)))
                .collect()
        })
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// `a_{k,n}`; zero beyond the truncation.
    pub fn a(&self, k: usize, n: usize) -> BigRational {
        if k == 0 || k > self.max_weight {
            return if n == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
        }
        self.factors[k - 1]
            .get(n)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The row `a_{k,0..}`.
    pub fn row(&self, k: usize) -> &[BigRational] {
        &self.factors[k - 1]
    }

    /// Taylor coefficients of the factor in `x_k`: `a_{k,n} / (k^n n!)`.
    pub fn factor_series(&self, k: usize) -> Vec<BigRational> {
        let kk = BigInt::from(k);
        self.row(k)
            .iter()
            .enumerate()
            .map(|(n, a)| a / BigRational::from_integer(kk.pow(n as u32) * factorial(n)))
            .collect()
    }

    /// Hadamard product: the `a_{k,n}` multiply termwise.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.max_weight != other.max_weight {
            return Err(Error::OrderMismatch {
                left: self.max_weight,
                right: other.max_weight,
            });
        }
        Ok(FactoredCycleIndex {
            max_weight: self.max_weight,
            factors: self
                .factors
                .iter()
                .zip(&other.factors)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x * y).collect())
                .collect(),
        })
    }

    /// Expands into the dense form up to `max_weight`.
    pub fn to_dense(&self, max_weight: usize) -> Result<DenseCycleIndex> {
        if max_weight > self.max_weight {
            return Err(Error::OrderMismatch {
                left: max_weight,
                right: self.max_weight,
            });
        }
        let series: Vec<Vec<BigRational>> =
            (1..=max_weight).map(|k| self.factor_series(k)).collect();
        let mut z = DenseCycleIndex::new(max_weight)?;
        for w in 0..=max_weight {
            for ty in PartitionType::all_of_weight(w) {
                let c = ty
                    .parts()
                    .iter()
                    .fold(BigRational::one(), |acc, &(l, k)| acc * &series[l - 1][k]);
                z.insert(ty, c);
            }
        }
        Ok(z)
    }

    /// `Z(t, t^2, t^3, ...)`, as a product over `k` of series in `t^k`.
    pub fn condense_types(&self) -> TruncSeries {
        let n = self.max_weight;
        let mut acc = TruncSeries::one(n);
        for k in 1..=n {
            let factor = TruncSeries::from_coeffs(n, spread(&self.factor_series(k), k, n));
            acc = acc
                .checked_mul(&factor)
                .expect("factors share the truncation order");
        }
        acc
    }

    /// `Z(t, 0, 0, ...)`: only the `x_1` factor survives.
    pub fn condense_labelled(&self) -> TruncSeries {
        if self.max_weight == 0 {
            return TruncSeries::one(0);
        }
        TruncSeries::from_coeffs(self.max_weight, self.factor_series(1))
    }
}

/// Places `coeffs[i]` at position `i * step`, up to `order`.
pub(crate) fn spread(coeffs: &[BigRational], step: usize, order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if i * step > order {
            break;
        }
        out[i * step] = c.clone();
    }
    out
}

/// Cycle index of the species `S_n` of permutations `σ` with `σ^n = 1`.
///
/// The factor in `x_k` is `prod exp(phi(r) x_k^s / (k s))` over pairs with
/// `rs | n` and `r | k`; the exponents are summed into one polynomial and
/// exponentiated as a univariate series.
pub fn zs_order_n_factored(n: usize, max_weight: usize) -> Result<FactoredCycleIndex> {
    if n == 0 {
        return Err(Error::Domain(
            "permutation order must be positive".to_string(),
        ));
    }
    FactoredCycleIndex::from_factor_series(max_weight, |k| {
        let len = max_weight / k;
        let mut exponent = vec![BigRational::zero(); len + 1];
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            for r in (1..=d).filter(|r| d % r == 0 && k % r == 0) {
                let s = d / r;
                if s <= len {
                    exponent[s] +=
                        BigRational::new(BigInt::from(totient(r as u64)), BigInt::from(k * s));
                }
            }
        }
        TruncSeries::from_coeffs(len, exponent)
            .exp()
            .expect("exponent has no constant term")
            .into_coeffs()
    })
}

/// `a_{k,m}` for permutations of prime order `p`, by the integer recurrence
/// `a_m = χ a_{m-1} + k^{p-1} (m-1)!/(m-p)! a_{m-p}` with `χ = p` when
/// `p | k` and `1` otherwise.
pub fn prime_order_row(p: usize, k: usize, len: usize) -> Vec<BigInt> {
    let chi = BigInt::from(if k.is_multiple_of(p) { p } else { 1 });
    let kp = BigInt::from(k).pow(p as u32 - 1);
    let mut a: Vec<BigInt> = Vec::with_capacity(len + 1);
    a.push(BigInt::one());
    for m in 1..=len {
        let mut next = &chi * &a[m - 1];
        if m >= p {
            let falling = ((m - p + 1)..m).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
            next += &kp * falling * &a[m - p];
        }
        a.push(next);
    }
    a
}

/// Factored cycle index of `S_p`, `p` prime, through [`prime_order_row`].
pub fn zs_prime_factored(p: u64, max_weight: usize) -> Result<FactoredCycleIndex> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    FactoredCycleIndex::from_coefficients(max_weight, |k| {
        prime_order_row(p as usize, k, max_weight / k)
            .into_iter()
            .map(BigRational::from_integer)
            .collect()
    })
}

/// Factored cycle index of all permutations, `prod_k 1/(1 - x_k)`:
/// `a_{k,m} = k^m m!`.
pub fn zs_full_factored(max_weight: usize) -> Result<FactoredCycleIndex> {
    FactoredCycleIndex::from_coefficients(max_weight, |k| {
        let kk = BigInt::from(k);
        (0..=max_weight / k)
            .map(|m| BigRational::from_integer(kk.pow(m as u32) * factorial(m)))
            .collect()
    })
}

/// Number of permutations `τ` with `τ^p = 1` that commute with a fixed
/// permutation of the given cycle type (`p` prime).
///
/// Evaluates `prod_k sum_{n1 + p n2 = σ_k} σ_k! k^{σ_k} χ^{n1} /
/// (n1! n2! k^{n1+n2} p^{n2})` exactly.
pub fn fixed_order_p_commuting(p: u64, sigma_type: &PartitionType) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let pp = BigInt::from(p);
    let mut total = BigRational::one();
    for &(k, count) in sigma_type.parts() {
        let kk = BigInt::from(k);
        let chi = if (k as u64).is_multiple_of(p) {
            pp.clone()
        } else {
            BigInt::one()
        };
        let numerator = factorial(count) * kk.pow(count as u32);
        let mut sum = BigRational::zero();
        for n2 in 0..=count / p as usize {
            let n1 = count - p as usize * n2;
            let den = factorial(n1) * factorial(n2) * kk.pow((n1 + n2) as u32) * pp.pow(n2 as u32);
            sum += BigRational::new(&numerator * chi.pow(n1 as u32), den);
        }
        total *= sum;
    }
    if !total.is_integer() {
        return Err(Error::Invariant(format!(
            "commuting count for {sigma_type} is fractional: {total}"
        )));
    }
    Ok(total.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigseries::rat;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        b.iter().map(|&x| a[x]).collect()
    }

    fn power(a: &[usize], e: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..a.len()).collect();
        for _ in 0..e {
            out = compose(a, &out);
        }
        out
    }

    fn perm_of_type(ty: &PartitionType) -> Vec<usize> {
        let mut perm = Vec::new();
        for &(len, count) in ty.parts() {
            for _ in 0..count {
                let base = perm.len();
                for i in 0..len {
                    perm.push(base + (i + 1) % len);
                }
            }
        }
        perm
    }

    fn brute_commuting(p: usize, ty: &PartitionType) -> u64 {
        let sigma = perm_of_type(ty);
        let id: Vec<usize> = (0..sigma.len()).collect();
        all_perms(sigma.len())
            .iter()
            .filter(|tau| power(tau, p) == id)
            .filter(|tau| compose(tau, &sigma) == compose(&sigma, tau))
            .count() as u64
    }

    /// Brute-force cycle index of the species of n-cycles: for each σ count
    /// the cyclic orders (as successor maps) fixed by conjugation.
    fn brute_zcn(n: usize) -> DenseCycleIndex {
        let perms = all_perms(n);
        let cycles: Vec<&Vec<usize>> = perms
            .iter()
            .filter(|c| PartitionType::of_permutation(c) == PartitionType::from_parts(&[(n, 1)]))
            .collect();
        let mut z = DenseCycleIndex::new(n).unwrap();
        let mut acc: BTreeMap<PartitionType, BigRational> = BTreeMap::new();
        for sigma in &perms {
            let fixed = cycles
                .iter()
                .filter(|c| compose(sigma, c) == compose(c, sigma))
                .count();
            *acc.entry(PartitionType::of_permutation(sigma))
                .or_insert_with(BigRational::zero) += rat(fixed as i64, 1);
        }
        let nfact = BigRational::from_integer(factorial(n));
        for (ty, c) in acc {
            z.insert(ty, c / &nfact);
        }
        z
    }

    fn ty(parts: &[(usize, usize)]) -> PartitionType {
        PartitionType::from_parts(parts)
    }

    #[test]
    fn partition_types() {
        let t = PartitionType::from_counts(&[1, 0, 2, 0]);
        assert_eq!(t.weight(), 7);
        assert_eq!(t.count(3), 2);
        assert_eq!(t.to_string(), "x1*x3^2");
        assert_eq!(t.centralizer_order(), BigInt::from(18));
        let counts: Vec<usize> = (0..=10)
            .map(|n| PartitionType::all_of_weight(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            PartitionType::of_permutation(&[1, 2, 0, 3, 5, 4]),
            ty(&[(1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn cycles_species() {
        let z = zc_dense(6).unwrap();
        assert_eq!(z.coeff(&ty(&[(1, 1)])), rat(1, 1));
        assert_eq!(z.coeff(&ty(&[(2, 1)])), rat(1, 2));
        // the two cyclic orders of a 3-set are both fixed by the identity
        assert_eq!(z.coeff(&ty(&[(1, 3)])), rat(1, 3));
        assert_eq!(z.coeff(&ty(&[(1, 1), (2, 1)])), rat(0, 1));

        let z3 = zcn_dense(3).unwrap();
        assert_eq!(z3.coeff(&ty(&[(1, 3)])), rat(1, 3));
        assert_eq!(z3.coeff(&ty(&[(3, 1)])), rat(2, 3));
        assert_eq!(z3.terms().count(), 2);
        let z1 = zcn_dense(1).unwrap();
        assert_eq!(z1.terms().count(), 1);
        assert_eq!(z1.coeff(&ty(&[(1, 1)])), rat(1, 1));
        let z4 = zcn_dense(4).unwrap();
        assert_eq!(z4.coeff(&ty(&[(1, 4)])), rat(1, 4));
        assert_eq!(z4.coeff(&ty(&[(2, 2)])), rat(1, 4));
        assert_eq!(z4.coeff(&ty(&[(4, 1)])), rat(1, 2));
        assert!(zcn_dense(0).is_err());
    }

    #[test]
    fn cycles_species_against_brute_force() {
        for n in 1..=6 {
            assert_eq!(zcn_dense(n).unwrap().terms, brute_zcn(n).terms, "n = {n}");
        }
        let z = zc_dense(6).unwrap();
        for n in 1..=6 {
            assert_eq!(z.homogeneous(n).terms, zcn_dense(n).unwrap().terms);
        }
    }

    #[test]
    fn dense_cap() {
        assert!(matches!(
            DenseCycleIndex::new(DENSE_WEIGHT_CAP + 1),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn factored_order_two_and_three() {
        let z2 = zs_order_n_factored(2, 8).unwrap();
        assert_eq!(z2.a(1, 4), rat(10, 1));
        assert_eq!(z2.factor_series(1)[4], rat(10, 24));
        let z3 = zs_order_n_factored(3, 8).unwrap();
        assert_eq!(z3.factor_series(1)[4], rat(9, 24));
        // n = 1 is the species of sets: every a_{k,m} is 1
        let ens = zs_order_n_factored(1, 8).unwrap();
        for k in 1..=8 {
            assert!(ens.row(k).iter().all(|a| a.is_one()));
        }
        assert!(zs_order_n_factored(0, 3).is_err());
    }

    #[test]
    fn prime_recurrence_matches_exponential_product() {
        for p in [2u64, 3, 5, 7] {
            let via_exp = zs_order_n_factored(p as usize, 30).unwrap();
            let via_rec = zs_prime_factored(p, 30).unwrap();
            assert_eq!(via_exp, via_rec, "p = {p}");
        }
        assert!(zs_prime_factored(4, 5).is_err());
    }

    #[test]
    fn prime_recurrence_matches_double_sum() {
        // a_{k,n} = k^n n! sum_{n1 + p n2 = n} χ^{n1} / (n1! n2! k^{n1+n2} p^{n2})
        for p in [2usize, 3] {
            for k in 1..=6usize {
                let row = prime_order_row(p, k, 10);
                for (n, a) in row.iter().enumerate() {
                    let chi = if k % p == 0 { p } else { 1 };
                    let mut sum = rat(0, 1);
                    for n2 in 0..=n / p {
                        let n1 = n - p * n2;
                        sum += BigRational::new(
                            BigInt::from(chi).pow(n1 as u32),
                            factorial(n1)
                                * factorial(n2)
                                * BigInt::from(k).pow((n1 + n2) as u32)
                                * BigInt::from(p).pow(n2 as u32),
                        );
                    }
                    let expected = sum
                        * BigRational::from_integer(BigInt::from(k).pow(n as u32) * factorial(n));
                    assert_eq!(
                        BigRational::from_integer(a.clone()),
                        expected,
                        "p={p} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn linear_coefficient_is_chi() {
        for p in [2u64, 3, 5] {
            let z = zs_order_n_factored(p as usize, 20).unwrap();
            for k in 1..=20 {
                let expected = if (k as u64).is_multiple_of(p) {
                    p as i64
                } else {
                    1
                };
                assert_eq!(z.a(k, 1), rat(expected, 1), "p={p} k={k}");
            }
        }
    }

    #[test]
    fn full_permutations() {
        let z = zs_full_factored(10).unwrap();
        assert_eq!(z.a(1, 2), rat(2, 1));
        assert_eq!(z.factor_series(1)[2], rat(1, 1));
        assert_eq!(z.a(2, 1), rat(2, 1));
        assert_eq!(z.factor_series(2)[1], rat(1, 1));
        let partitions = crate::bigseries::small_integers(&z.condense_types()).unwrap();
        assert_eq!(partitions, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        // condensation of the cycle index of sets
        let ens = zs_order_n_factored(1, 10).unwrap();
        assert_eq!(ens.condense_types(), TruncSeries::geometric(10));
    }

    #[test]
    fn hadamard_factored_examples() {
        let z2 = zs_prime_factored(2, 10).unwrap();
        let z3 = zs_prime_factored(3, 10).unwrap();
        let prod = z2.hadamard(&z3).unwrap();
        assert_eq!(prod.factor_series(1)[4], rat(90, 24));
        assert_eq!(
            prod.to_dense(6).unwrap().coeff(&ty(&[(2, 3)])),
            rat(2700, 720)
        );
        // sets (one structure, fixed by everything) are the unit for ⊙
        let ens = zs_order_n_factored(1, 10).unwrap();
        assert_eq!(prod.hadamard(&ens).unwrap(), prod);
        assert_ne!(prod.hadamard(&zs_full_factored(10).unwrap()).unwrap(), prod);
        assert!(z2.hadamard(&zs_full_factored(9).unwrap()).is_err());
    }

    #[test]
    fn hadamard_dense_examples() {
        let d2 = zs_prime_dense(2, 7).unwrap();
        let d3 = zs_prime_dense(3, 7).unwrap();
        let prod = d2.hadamard(&d3).unwrap();
        assert_eq!(prod.coeff(&ty(&[(7, 1)])), rat(720, 5040));
        let f = zs_prime_factored(2, 7)
            .unwrap()
            .hadamard(&zs_prime_factored(3, 7).unwrap())
            .unwrap();
        assert_eq!(prod, f.to_dense(7).unwrap());
        let ens = zs_order_n_factored(1, 7).unwrap().to_dense(7).unwrap();
        assert_eq!(prod.hadamard(&ens).unwrap(), prod);
        assert!(d2.hadamard(&zs_full_dense(6).unwrap()).is_err());
    }

    #[test]
    fn separability_consistency() {
        let w = 10;
        let factored = [
            zs_prime_factored(2, w).unwrap(),
            zs_prime_factored(3, w).unwrap(),
            zs_full_factored(w).unwrap(),
        ];
        for a in &factored {
            for b in &factored {
                let dense_first = a
                    .to_dense(w)
                    .unwrap()
                    .hadamard(&b.to_dense(w).unwrap())
                    .unwrap();
                let factored_first = a.hadamard(b).unwrap().to_dense(w).unwrap();
                assert_eq!(dense_first, factored_first);
            }
        }
    }

    #[test]
    fn expansion_at_weight_three() {
        let z2 = zs_order_n_factored(2, 3)
            .unwrap()
            .to_dense(3)
            .unwrap()
            .homogeneous(3);
        assert_eq!(z2.coeff(&ty(&[(1, 3)])), rat(4, 6));
        assert_eq!(z2.coeff(&ty(&[(1, 1), (2, 1)])), rat(6, 6));
        assert_eq!(z2.coeff(&ty(&[(3, 1)])), rat(2, 6));
        let z3 = zs_order_n_factored(3, 3)
            .unwrap()
            .to_dense(3)
            .unwrap()
            .homogeneous(3);
        assert_eq!(z3.coeff(&ty(&[(1, 3)])), rat(3, 6));
        assert_eq!(z3.coeff(&ty(&[(1, 1), (2, 1)])), rat(3, 6));
        assert_eq!(z3.coeff(&ty(&[(3, 1)])), rat(6, 6));
        let z0 = zs_full_factored(5).unwrap().to_dense(0).unwrap();
        assert_eq!(z0.terms().count(), 1);
        assert_eq!(z0.coeff(&PartitionType::default()), rat(1, 1));
        assert!(zs_full_factored(5).unwrap().to_dense(6).is_err());
    }

    #[test]
    fn condensations() {
        let prod = zs_prime_factored(2, 7)
            .unwrap()
            .hadamard(&zs_prime_factored(3, 7).unwrap())
            .unwrap();
        assert_eq!(
            crate::bigseries::small_integers(&prod.condense_types()).unwrap(),
            vec![1, 1, 2, 4, 7, 10, 24, 37]
        );
        // involution classes in S_n are partitions into parts <= 2
        let z2 = zs_prime_factored(2, 3).unwrap();
        assert_eq!(
            crate::bigseries::small_integers(&z2.condense_types()).unwrap(),
            vec![1, 1, 2, 2]
        );

        let t = |order: usize, c: &[BigRational]| TruncSeries::from_coeffs(order, c.to_vec());
        let exp_of = |c: &[BigRational]| t(8, c).exp().unwrap();
        assert_eq!(
            zs_prime_factored(2, 8).unwrap().condense_labelled(),
            exp_of(&[rat(0, 1), rat(1, 1), rat(1, 2)])
        );
        assert_eq!(
            zs_prime_factored(3, 8).unwrap().condense_labelled(),
            exp_of(&[rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3)])
        );
        assert_eq!(
            zs_order_n_factored(1, 8).unwrap().condense_labelled(),
            exp_of(&[rat(0, 1), rat(1, 1)])
        );
        // dense and factored condensations agree
        let dense = prod.to_dense(7).unwrap();
        assert_eq!(dense.condense_types(), prod.condense_types());
        assert_eq!(dense.condense_labelled(), prod.condense_labelled());
    }

    #[test]
    fn commuting_counts() {
        assert_eq!(
            fixed_order_p_commuting(2, &ty(&[(1, 4)])).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            fixed_order_p_commuting(3, &ty(&[(1, 4)])).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(
            fixed_order_p_commuting(2, &ty(&[(5, 1)])).unwrap(),
            BigInt::from(1)
        );
        assert!(fixed_order_p_commuting(6, &ty(&[(1, 1)])).is_err());
    }

    #[test]
    fn commuting_counts_against_brute_force() {
        for n in 0..=7 {
            for t in PartitionType::all_of_weight(n) {
                for p in [2u64, 3] {
                    let fast = fixed_order_p_commuting(p, &t).unwrap();
                    assert_eq!(
                        fast,
                        BigInt::from(brute_commuting(p as usize, &t)),
                        "p={p} {t}"
                    );
                }
            }
        }
    }
}
