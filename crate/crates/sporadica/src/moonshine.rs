//! The q-expansion of the modular j-function, exact to any order, the
//! decomposition of its first coefficients into the three smallest
//! dimensions 1, 196883 and 21296876, and a fixed-point evaluation of
//! exp(pi sqrt(163)) showing the famous near-integer.
//!
//! j = E4^3 / Delta with E4 = 1 + 240 sum sigma_3(n) q^n and
//! Delta = q prod (1 - q^n)^24. Delta is computed by two independent
//! routes (direct product sweep, and Euler's pentagonal-number series
//! raised to the 24th power) which must agree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoonshineError {
    #[error("series order {0} outside the supported range {1}..={2}")]
    OrderOutOfRange(i64, i64, i64),
    #[error("divisor must have a unit (+-1) leading coefficient")]
    NonUnitDivisor,
    #[error("no decomposition of {0} with multiplicities at most {1}")]
    NoDecomposition(u64, u64),
}

/// A truncated Laurent series with integer coefficients: coeffs[i] is
/// the coefficient of q^(lead + i), and the series is known exactly for
/// all exponents up to and including `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    pub lead: i64,
    pub trunc: i64,
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn from_coeffs(lead: i64, coeffs: Vec<BigInt>) -> Self {
        let trunc = lead + coeffs.len() as i64 - 1;
        IntSeries { lead, trunc, coeffs }
    }

    pub fn zero(trunc: i64) -> Self {
        IntSeries {
            lead: 0,
            trunc,
            coeffs: vec![BigInt::zero()],
        }
    }

    /// Coefficient of q^n; panics beyond the truncation order where the
    /// value is unknown.
    pub fn coeff(&self, n: i64) -> BigInt {
        assert!(n <= self.trunc, "coefficient of q^{n} beyond truncation");
        if n < self.lead {
            return BigInt::zero();
        }
        self.coeffs
            .get((n - self.lead) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, rhs: &IntSeries) -> IntSeries {
        let lead = self.lead.min(rhs.lead);
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (lead..=trunc)
            .map(|n| self.coeff(n) + rhs.coeff(n))
            .collect();
        IntSeries { lead, trunc, coeffs }
    }

    pub fn mul(&self, rhs: &IntSeries) -> IntSeries {
        let lead = self.lead + rhs.lead;
        let trunc = (self.trunc + rhs.lead).min(rhs.trunc + self.lead);
        let mut coeffs = vec![BigInt::zero(); (trunc - lead + 1).max(1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let e = lead + (i + j) as i64;
                if e > trunc {
                    break;
                }
                coeffs[(i + j) as usize] += a * b;
            }
        }
        IntSeries { lead, trunc, coeffs }
    }

    /// Long division; the divisor's leading nonzero coefficient must be
    /// a unit so that quotients stay integral.
    pub fn div(&self, rhs: &IntSeries) -> Result<IntSeries, MoonshineError> {
        let dlead = rhs
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(MoonshineError::NonUnitDivisor)? as i64
            + rhs.lead;
        let unit = rhs.coeff(dlead);
        if !unit.abs().is_one() {
            return Err(MoonshineError::NonUnitDivisor);
        }
        let lead = self.lead - dlead;
        let trunc = (self.trunc - dlead).min(rhs.trunc - dlead + lead);
        let n = (trunc - lead + 1).max(1) as usize;
        let mut out = vec![BigInt::zero(); n];
        for k in 0..n {
            let mut acc = self.coeff(lead + k as i64 + dlead);
            for (t, q) in out.iter().enumerate().take(k) {
                if !q.is_zero() {
                    acc -= q * rhs.coeff(dlead + (k - t) as i64);
                }
            }
            out[k] = acc * &unit; // unit is +-1, so * == /
        }
        Ok(IntSeries {
            lead,
            trunc,
            coeffs: out,
        })
    }
}

/// E4 = 1 + 240 sum_{n>=1} sigma_3(n) q^n, with sigma_3 sieved.
pub fn eisenstein_e4(order: i64) -> IntSeries {
    let n = order as usize;
    let mut sigma3 = vec![BigInt::zero(); n + 1];
    for d in 1..=n {
        let cube = BigInt::from(d) * d * d;
        for m in (d..=n).step_by(d) {
            sigma3[m] += &cube;
        }
    }
    let mut coeffs = vec![BigInt::one()];
    coeffs.extend(sigma3.into_iter().skip(1).map(|s| s * 240));
    IntSeries::from_coeffs(0, coeffs)
}

/// Delta = q prod (1 - q^n)^24 by direct repeated multiplication with
/// the sparse binomials; quadratic, intended as the independent check.
pub fn delta_direct(order: i64) -> IntSeries {
    let mut f = IntSeries::from_coeffs(0, vec![BigInt::one()]);
    f.trunc = order;
    f.coeffs.resize(order as usize + 1, BigInt::zero());
    for n in 1..order {
        let binom = IntSeries {
            lead: 0,
            trunc: order,
            coeffs: {
                let mut c = vec![BigInt::zero(); order as usize + 1];
                c[0] = BigInt::one();
                c[n as usize] = BigInt::from(-1);
                c
            },
        };
        for _ in 0..24 {
            f = binom.mul(&f);
        }
    }
    shift_by_q(f, order)
}

/// Delta via Euler's pentagonal-number theorem:
/// prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, raised to the 24th
/// power by repeated squaring.
pub fn delta_eta(order: i64) -> IntSeries {
    let mut eta = vec![BigInt::zero(); order as usize + 1];
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in [k, -k] {
            let e = kk * (3 * kk - 1) / 2;
            if (0..=order).contains(&e) {
                eta[e as usize] += if k % 2 == 0 { 1 } else { -1 };
                hit = true;
            }
            if kk == 0 {
                break;
            }
        }
        if !hit && k > 0 {
            break;
        }
        k += 1;
    }
    let eta = IntSeries {
        lead: 0,
        trunc: order,
        coeffs: eta,
    };
    // eta^24 = ((eta^2)^2)^2 * ((eta^2)^2)^2)^2... : 24 = 16 + 8
    let e2 = eta.mul(&eta);
    let e4 = e2.mul(&e2);
    let e8 = e4.mul(&e4);
    let e16 = e8.mul(&e8);
    shift_by_q(e16.mul(&e8), order)
}

/// Multiply by q (shift exponents up by one) and re-truncate.
fn shift_by_q(mut f: IntSeries, order: i64) -> IntSeries {
    f.lead += 1;
    f.trunc = order;
    f.coeffs.truncate((order - f.lead + 1).max(0) as usize);
    f
}

/// The j-function: 1/q + 744 + 196884 q + 21493760 q^2 + ...
pub fn j_expansion(order: i64) -> Result<IntSeries, MoonshineError> {
    if !(1..=1000).contains(&order) {
        return Err(MoonshineError::OrderOutOfRange(order, 1, 1000));
    }
    // two extra working orders absorb the shift by 1/q and the division
    // truncation loss
    let e4 = eisenstein_e4(order + 2);
    let delta = delta_eta(order + 2);
    let j = e4.mul(&e4).mul(&e4).div(&delta)?;
    debug_assert_eq!(j.lead, -1);
    debug_assert!(j.trunc >= order);
    Ok(j)
}

/// The three smallest dimensions in the decomposition game.
pub const MOONSHINE_DIMS: [u64; 3] = [1, 196_883, 21_296_876];
/// Largest multiplicity tried per dimension.
pub const DECOMPOSE_MULT_BOUND: u64 = 10;

/// Express `coeff` as a nonnegative combination of [`MOONSHINE_DIMS`]
/// with multiplicities at most [`DECOMPOSE_MULT_BOUND`], if possible.
pub fn moonshine_decompose(coeff: u64) -> Result<BTreeMap<u64, u64>, MoonshineError> {
    let [d1, d2, d3] = MOONSHINE_DIMS;
    for c in 0..=DECOMPOSE_MULT_BOUND {
        for b in 0..=DECOMPOSE_MULT_BOUND {
            let partial = c * d3 + b * d2;
            if partial > coeff {
                continue;
            }
            let a = coeff - partial;
            if a <= DECOMPOSE_MULT_BOUND {
                let mut m = BTreeMap::new();
                if a > 0 {
                    m.insert(d1, a);
                }
                if b > 0 {
                    m.insert(d2, b);
                }
                if c > 0 {
                    m.insert(d3, c);
                }
                return Ok(m);
            }
        }
    }
    Err(MoonshineError::NoDecomposition(coeff, DECOMPOSE_MULT_BOUND))
}

// --- fixed-point evaluation of exp(pi sqrt 163) ---

const GUARD_DIGITS: usize = 25;

fn pow10(n: usize) -> BigInt {
    BigInt::from(10u32).pow(n as u32)
}

/// arctan(1/x) at scale 10^s, by the alternating series.
fn arctan_inv(x: u64, s: usize) -> BigInt {
    let scale = pow10(s);
    let x2 = BigInt::from(x) * x;
    let mut power = &scale / x; // (1/x)^(2k+1) * 10^s
    let mut total = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        power /= &x2;
        k += 1;
    }
    total
}

/// pi at scale 10^s by Machin's formula.
fn pi_fixed(s: usize) -> BigInt {
    arctan_inv(5, s) * 16 - arctan_inv(239, s) * 4
}

/// floor(sqrt(163) * 10^s) via integer Newton iteration.
fn sqrt163_fixed(s: usize) -> BigInt {
    let target = BigInt::from(163) * pow10(2 * s);
    num_integer::Roots::sqrt(&target)
}

/// exp(t) for fixed-point t at scale 10^s, by halving t below 1 and
/// squaring the Taylor value back up.
fn exp_fixed(t: &BigInt, s: usize) -> BigInt {
    let scale = pow10(s);
    let mut halvings = 0u32;
    let mut u = t.clone();
    while u > scale {
        u /= 2;
        halvings += 1;
    }
    let mut total = scale.clone();
    let mut term = scale.clone();
    let mut n = 1u64;
    while !term.is_zero() {
        term = &term * &u / &scale / n;
        total += &term;
        n += 1;
    }
    for _ in 0..halvings {
        total = &total * &total / &scale;
    }
    total
}

/// exp(pi sqrt 163) as a decimal string with `digits` significant
/// digits (the integer part has 18).
pub fn ramanujan_constant(digits: usize) -> Result<String, MoonshineError> {
    if !(30..=200).contains(&digits) {
        return Err(MoonshineError::OrderOutOfRange(digits as i64, 30, 200));
    }
    let s = digits + GUARD_DIGITS;
    let scale = pow10(s);
    let t = pi_fixed(s) * sqrt163_fixed(s) / &scale;
    let v = exp_fixed(&t, s);
    let int_part = (&v / &scale).to_string();
    let frac = (&v % &scale).to_string();
    let frac = format!("{frac:0>width$}", width = s);
    let frac_digits = digits.saturating_sub(int_part.len());
    Ok(format!("{int_part}.{}", &frac[..frac_digits]))
}
