//! Generating series counting subgroups of finite index.
//!
//! Trivalent diagrams not necessarily connected are pairs (involution,
//! permutation of order dividing three) on a finite set, i.e. structures of
//! the cartesian product `S_2 x S_3`. Connected ones are recovered with a
//! logarithm (labelled, then pointed via the Euler operator) or with the
//! Möbius-weighted logarithm of the types series (unpointed).
//!
//! The general variant replaces `S_3` by the species of all permutations
//! and counts subgroups of the free product `Z * Z/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bigseries::{egf_log_integers, factorial, mobius, TruncSeries};
use crate::cycleindex::{
    zs_full_factored, zs_prime_dense, zs_prime_factored, FactoredCycleIndex, DENSE_WEIGHT_CAP,
};
use crate::error::{Error, Result};

/// Which count a caller wants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// Subgroups of each index: pointed connected diagrams.
    Pointed,
    /// Conjugacy classes of subgroups: unpointed connected diagrams.
    Classes,
}

impl CountKind {
    pub fn name(self) -> &'static str {
        match self {
            CountKind::Pointed => "pointed",
            CountKind::Classes => "classes",
        }
    }
}

/// Every series of the trivalent pipeline at one truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesBundle {
    pub order: usize,
    /// `sum a*_n t^n` with `a*_n = I_2(n) I_3(n) / n!`.
    pub d3_star_egf: TruncSeries,
    /// `log` of the above: labelled connected diagrams, exponential.
    pub d3_labelled_log: TruncSeries,
    pub pointed_types: TruncSeries,
    pub unpointed_types: TruncSeries,
    pub disconnected_types: TruncSeries,
}

impl SeriesBundle {
    pub fn new(order: usize) -> Result<Self> {
        let d3_star_egf = d3star_closed_form(order);
        let pointed_types = pointed_from_egf(&d3_star_egf)?;
        let d3_labelled_log = TruncSeries::from_coeffs(
            order,
            pointed_types
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    if n == 0 {
                        c.clone()
                    } else {
                        c / BigInt::from(n)
                    }
                })
                .collect::<Vec<_>>(),
        );
        let disconnected_types = disconnected_types(order)?;
        let unpointed_types = unpointed_series_fast(order)?;
        Ok(SeriesBundle {
            order,
            d3_star_egf,
            d3_labelled_log,
            pointed_types,
            unpointed_types,
            disconnected_types,
        })
    }

    /// Integer coefficients `c_1..=c_order` of the requested count.
    pub fn counts(&self, kind: CountKind) -> Result<Vec<BigInt>> {
        let series = match kind {
            CountKind::Pointed => &self.pointed_types,
            CountKind::Classes => &self.unpointed_types,
        };
        Ok(series.to_integers()?.split_off(1))
    }
}

/// `n! / (n1! n2! p^n2)` summed over `n1 + p n2 = n`: the number of
/// permutations of an `n`-set whose order divides the prime `p`.
fn order_dividing_prime(n: usize, p: usize) -> BigInt {
    // consecutive terms differ by n1 (n1-1)...(n1-p+1) / (p (n2+1))
    let mut term = BigInt::one();
    let mut total = BigInt::zero();
    let mut n2 = 0;
    loop {
        total += &term;
        let n1 = n - p * n2;
        if n1 < p {
            break;
        }
        for j in 0..p {
            term *= BigInt::from(n1 - j);
        }
        term /= BigInt::from(p * (n2 + 1));
        n2 += 1;
    }
    total
}

/// `a*_n = sum n! / (n1! n2! n3! n4! 2^n2 3^n4)` over `n1 + 2 n2 = n` and
/// `n3 + 3 n4 = n`.
pub fn d3star_closed_form(order: usize) -> TruncSeries {
    let mut fact = BigInt::one();
    let coeffs = (0..=order).map(|n| {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        BigRational::new(
            order_dividing_prime(n, 2) * order_dividing_prime(n, 3),
            fact.clone(),
        )
    });
    TruncSeries::from_coeffs(order, coeffs.collect::<Vec<_>>())
}

/// The same coefficients through the six-term linear recurrence with
/// polynomial coefficients, seeded by `a*_0..a*_5`.
pub fn d3star_recurrence(order: usize) -> Result<TruncSeries> {
    if order < 5 {
        return Err(Error::Domain(format!(
            "the recurrence needs order >= 5, got {order}"
        )));
    }
    let seeds = [(1, 1), (1, 1), (1, 1), (2, 1), (15, 4), (91, 20)];
    let mut a: Vec<BigRational> = seeds
        .iter()
        .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect();
    let poly = |n: i64, c: &[i64]| -> BigInt {
        // Horner, highest degree first
        BigInt::from(c.iter().fold(0i128, |acc, &x| acc * n as i128 + x as i128))
    };
    for m in 6..=order {
        let n = (m - 6) as i64;
        let lead = poly(n, &[1, 18, 119, 343, 366]);
        let terms: [(&[i64], usize); 6] = [
            (&[1, 18, 121, 373, 511, 242], 0),
            (&[3, 15, 18], 1),
            (&[2, 33, 205, 566, 582], 2),
            (&[3, 52, 333, 938, 982], 3),
            (&[1, 12, 53, 85], 4),
            (&[1, 9, 20, 1], 5),
        ];
        let mut rhs = BigRational::zero();
        for (c, shift) in terms {
            rhs += &a[m - 6 + shift] * poly(n, c);
        }
        a.push(rhs / lead);
    }
    Ok(TruncSeries::from_coeffs(order, a))
}

/// Integer numerators `n! a_n` of an exponential series.
fn egf_numerators(s: &TruncSeries) -> Result<Vec<BigInt>> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let b = c * BigRational::from_integer(factorial(n));
            if b.is_integer() {
                Ok(b.to_integer())
            } else {
                Err(Error::Invariant(format!(
                    "n! a_n is not an integer at n = {n}"
                )))
            }
        })
        .collect()
}

/// `t d/dt log(f)` for an exponential series `f` with integer numerators.
/// The logarithm runs on integers: `log(sum b_n t^n/n!) = sum c_n t^n/n!`.
fn pointed_from_egf(star: &TruncSeries) -> Result<TruncSeries> {
    let c = egf_log_integers(&egf_numerators(star)?)?;
    let mut fact = BigInt::one();
    let coeffs: Vec<BigRational> = c
        .into_iter()
        .enumerate()
        .map(|(n, cn)| {
            if n > 1 {
                fact *= BigInt::from(n - 1);
            }
            // n c_n / n! = c_n / (n-1)!
            if n == 0 {
                BigRational::zero()
            } else {
                BigRational::new(cn, fact.clone())
            }
        })
        .collect();
    Ok(TruncSeries::from_coeffs(star.order(), coeffs))
}

/// Pointed connected trivalent diagrams: `t d/dt log(D3*(t))`.
///
/// Pointed diagrams have no automorphisms, so the labelled and types
/// series coincide.
pub fn pointed_series(order: usize) -> Result<TruncSeries> {
    let star = if order >= 5 {
        d3star_recurrence(order)?
    } else {
        d3star_closed_form(order)
    };
    pointed_from_egf(&star)
}

/// Types series of all (not necessarily connected) trivalent diagrams,
/// by condensing the Hadamard product of the factored cycle indices.
pub fn disconnected_types(order: usize) -> Result<TruncSeries> {
    let z = zs_prime_factored(2, order)?.hadamard(&zs_prime_factored(3, order)?)?;
    Ok(z.condense_types())
}

/// Unpointed connected trivalent diagrams through dense cycle indices
/// (one coefficient per cycle type). Limited to small orders.
pub fn unpointed_series_dense(order: usize) -> Result<TruncSeries> {
    if order > DENSE_WEIGHT_CAP {
        return Err(Error::Resource {
            what: "dense method order",
            requested: order,
            cap: DENSE_WEIGHT_CAP,
        });
    }
    let z = zs_prime_dense(2, order)?.hadamard(&zs_prime_dense(3, order)?)?;
    z.condense_types().moebius_log_transform()
}

/// `sum_r mu(r)/r sum_k log(F_k(t^{rk}))` where `F_k(x) = sum_n
/// a_{k,n}/(k^n n!) x^n` is the `k`-th factor of a separable cycle index.
///
/// This is the inverse Euler transform of the condensed types series,
/// computed one factor at a time: each logarithm has only `order / k`
/// terms. The coefficients `a_{k,n}` must be integers.
pub fn connected_types_from_factored(z: &FactoredCycleIndex) -> Result<TruncSeries> {
    let order = z.max_weight();
    let contributions: Vec<Vec<BigRational>> = (1..=order)
        .into_par_iter()
        .map(|k| -> Result<Vec<BigRational>> {
            // F_k(x) = sum a_{k,n} (x/k)^n / n!, an exponential series in x/k
            let row: Vec<BigInt> = z
                .row(k)
                .iter()
                .enumerate()
                .map(|(n, a)| {
                    if a.is_integer() {
                        Ok(a.to_integer())
                    } else {
                        Err(Error::Invariant(format!(
                            "a_({k},{n}) = {a} is not an integer"
                        )))
                    }
                })
                .collect::<Result<_>>()?;
            let kk = BigInt::from(k);
            let mut scale = BigInt::one();
            let log: Vec<BigRational> = egf_log_integers(&row)?
                .into_iter()
                .enumerate()
                .map(|(n, c)| {
                    if n > 0 {
                        scale *= &kk * BigInt::from(n);
                    }
                    BigRational::new(c, scale.clone())
                })
                .collect();
            let mut out = vec![BigRational::zero(); order + 1];
            for r in 1..=order / k {
                let mu = mobius(r as u64);
                if mu == 0 {
                    continue;
                }
                let weight = BigRational::new(BigInt::from(mu), BigInt::from(r));
                for (n, c) in log.iter().enumerate().skip(1) {
                    let deg = r * k * n;
                    if deg > order {
                        break;
                    }
                    if !c.is_zero() {
                        out[deg] += c * &weight;
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut total = vec![BigRational::zero(); order + 1];
    for contribution in contributions {
        for (slot, c) in total.iter_mut().zip(contribution) {
            if !c.is_zero() {
                *slot += c;
            }
        }
    }
    Ok(TruncSeries::from_coeffs(order, total))
}

/// Unpointed connected trivalent diagrams through the factored form of
/// `Z_{S_2} ⊙ Z_{S_3}`, whose factors are `sum_n n! k^n u_{k,n} v_{k,n} x^n`.
pub fn unpointed_series_fast(order: usize) -> Result<TruncSeries> {
    let z = zs_prime_factored(2, order)?.hadamard(&zs_prime_factored(3, order)?)?;
    connected_types_from_factored(&z)
}

/// Counts for subgroups of `Z * Z/2`: diagrams whose rotation is any
/// permutation.
pub fn general_series(order: usize, pointed: bool) -> Result<TruncSeries> {
    if pointed {
        // labelled pairs: I_2(n) n!, so the exponential coefficient is I_2(n)
        let star =
            TruncSeries::from_integers(order, (0..=order).map(|n| order_dividing_prime(n, 2)));
        pointed_from_egf(&star)
    } else {
        let z = zs_prime_factored(2, order)?.hadamard(&zs_full_factored(order)?)?;
        connected_types_from_factored(&z)
    }
}

/// Counts `c_1..=c_max` of the requested kind, trivalent or general.
pub fn counts(kind: CountKind, max: usize, general: bool) -> Result<Vec<BigInt>> {
    let series = match (kind, general) {
        (CountKind::Pointed, false) => pointed_series(max)?,
        (CountKind::Classes, false) => unpointed_series_fast(max)?,
        (CountKind::Pointed, true) => general_series(max, true)?,
        (CountKind::Classes, true) => general_series(max, false)?,
    };
    let mut ints = series.to_integers()?;
    if ints.iter().any(|c| c < &BigInt::zero()) {
        return Err(Error::Invariant("negative count".to_string()));
    }
    Ok(ints.split_off(1))
}
