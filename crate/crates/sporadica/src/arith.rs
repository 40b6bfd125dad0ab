//! Exact integer utilities shared across the crate: primality testing,
//! factorization, and integers carried together with their prime
//! factorization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// Deterministic Miller-Rabin for u64 (valid for all n < 2^64 with this
/// witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Factor `n` by trial division up to 10^6, then Miller-Rabin on the
/// remainder. Panics if a composite remainder survives (never happens for
/// the magnitudes this crate produces: remainders are either prime or have
/// a factor below 10^6 for n < 10^12).
pub fn factor_u128(mut n: u128) -> BTreeMap<u64, u32> {
    let mut factors = BTreeMap::new();
    if n <= 1 {
        return factors;
    }
    let mut p = 2u128;
    while p * p <= n && p < 1_000_000 {
        while n % p == 0 {
            *factors.entry(p as u64).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let r = u64::try_from(n).expect("residual factor exceeds u64");
        assert!(
            is_prime_u64(r),
            "composite residual {r} beyond trial-division range"
        );
        *factors.entry(r).or_insert(0) += 1;
    }
    factors
}

/// If `q` is a prime power p^f, return (p, f).
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = factor_u128(q as u128);
    if factors.len() == 1 {
        let (&p, &f) = factors.iter().next().unwrap();
        Some((p, f))
    } else {
        None
    }
}

/// An arbitrary-precision integer stored with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredInteger {
    pub value: BigUint,
    /// prime -> exponent; product of prime powers equals `value`.
    pub factors: BTreeMap<u64, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger {
            value: BigUint::one(),
            factors: BTreeMap::new(),
        }
    }

    /// Factor a machine-sized integer by trial division.
    pub fn from_u128(n: u128) -> Self {
        assert!(n > 0, "factored integer must be positive");
        FactoredInteger {
            value: BigUint::from(n),
            factors: factor_u128(n),
        }
    }

    /// Build from an explicit factorization; validates primality of each
    /// listed prime and recomputes the value.
    pub fn from_factors(factors: &[(u64, u32)]) -> Self {
        let mut map = BTreeMap::new();
        let mut value = BigUint::one();
        for &(p, e) in factors {
            assert!(is_prime_u64(p), "{p} is not prime");
            assert!(e > 0);
            *map.entry(p).or_insert(0) += e;
            value *= BigUint::from(p).pow(e);
        }
        FactoredInteger {
            value,
            factors: map,
        }
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        FactoredInteger {
            value: &self.value * &other.value,
            factors,
        }
    }

    /// Exact division; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.get_mut(&p).expect("division not exact");
            assert!(*slot >= e, "division not exact");
            *slot -= e;
            if *slot == 0 {
                factors.remove(&p);
            }
        }
        FactoredInteger {
            value: &self.value / &other.value,
            factors,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        u128::try_from(&self.value).ok()
    }

    pub fn divisible_by(&self, d: u64) -> bool {
        (&self.value % BigUint::from(d)).is_zero()
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// "2^46 * 3^20 * ..." rendering of the factorization.
    pub fn factorization_string(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    format!("{p}")
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }

    /// Internal consistency: expansion of the factorization equals the value.
    pub fn verify(&self) -> bool {
        let mut prod = BigUint::one();
        for (&p, &e) in &self.factors {
            prod *= BigUint::from(p).pow(e);
        }
        prod == self.value
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn factor_round_trip() {
        for n in [2u128, 12, 60, 7920, 95040, 244823040, 20158709760] {
            let f = FactoredInteger::from_u128(n);
            assert!(f.verify());
            assert_eq!(f.to_u128(), Some(n));
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn division_tracks_factors() {
        let a = FactoredInteger::from_u128(95040);
        let b = FactoredInteger::from_u128(12);
        let q = a.div_exact(&b);
        assert_eq!(q.to_u128(), Some(7920));
        assert!(q.verify());
    }
}
