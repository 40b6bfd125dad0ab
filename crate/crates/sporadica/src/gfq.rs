//! Galois fields F_q, q = p^f, in Zech-logarithm representation.
//!
//! The additive group is (Z_p)^f and the multiplicative group is cyclic of
//! order q-1; the field is fully materialized: a power table for a fixed
//! multiplicative generator, its inverse log table, and the Zech table
//! mapping log(x) to log(1+x). Addition then costs one table lookup and
//! multiplication one modular addition of exponents.
//!
//! Elements are encoded as integers in [0, q): the polynomial
//! c_0 + c_1 x + ... + c_{f-1} x^{f-1} over Z_p encodes as sum c_i p^i.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Table size bound: q = p^f must not exceed 2^20.
pub const MAX_Q: u64 = 1 << 20;

const ZECH_NONE: u32 = u32::MAX;

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfqError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field size {0} exceeds the table bound 2^20")]
    FieldTooLarge(u64),
    #[error("element belongs to a different field table")]
    ForeignElement,
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub f: u32,
    pub q: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    /// Discrete log with respect to the field's generator, in [0, q-1).
    Log(u32),
}

/// An element of a specific [`FieldTable`]. Carries the table id so that
/// mixing elements of different fields is caught at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field_id: u64,
    repr: Repr,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.repr == Repr::Zero
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self) -> Option<u32> {
        match self.repr {
            Repr::Zero => None,
            Repr::Log(i) => Some(i),
        }
    }
}

/// A fully materialized finite field F_{p^f}.
pub struct FieldTable {
    id: u64,
    spec: FieldSpec,
    /// Monic modulus polynomial, coefficients c_0..c_f over Z_p (c_f = 1).
    /// For f = 1 this is x - g with g the least primitive root mod p.
    modulus: Vec<u64>,
    /// pow[i] = encoding of g^i for i in [0, q-1).
    pow: Vec<u32>,
    /// log[enc] for enc in [1, q); log[0] is unused.
    log: Vec<u32>,
    /// zech[i] = log(1 + g^i), or ZECH_NONE when 1 + g^i = 0.
    zech: Vec<u32>,
}

fn trial_division_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Construct F_{p^f}. Deterministic: the modulus is the least monic
/// polynomial of degree f over Z_p (by integer encoding of its non-leading
/// coefficients) whose residue class x has multiplicative order exactly
/// q - 1, which forces both irreducibility and primitivity.
pub fn make_field(p: u64, f: u32) -> Result<FieldTable, GfqError> {
    if !trial_division_prime(p) {
        return Err(GfqError::NonPrime(p));
    }
    assert!(f >= 1, "exponent must be positive");
    let mut q: u64 = 1;
    for _ in 0..f {
        q = q.checked_mul(p).ok_or(GfqError::FieldTooLarge(u64::MAX))?;
        if q > MAX_Q {
            return Err(GfqError::FieldTooLarge(q));
        }
    }
    let spec = FieldSpec { p, f, q };
    let id = NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed);

    let (modulus, pow) = if f == 1 {
        let g = least_primitive_root(p);
        let mut pow = Vec::with_capacity((q - 1) as usize);
        let mut x = 1u64;
        for _ in 0..q - 1 {
            pow.push(x as u32);
            x = x * g % p;
        }
        (vec![(p - g) % p, 1], pow)
    } else {
        find_primitive_modulus(p, f, q)
    };

    let mut log = vec![0u32; q as usize];
    for (i, &enc) in pow.iter().enumerate() {
        log[enc as usize] = i as u32;
    }

    // zech[i] = log(enc(g^i) + 1) where +1 acts on the constant coefficient.
    let mut zech = vec![ZECH_NONE; (q - 1) as usize];
    for i in 0..(q - 1) as usize {
        let enc = pow[i] as u64;
        let c0 = enc % p;
        let enc1 = enc - c0 + (c0 + 1) % p;
        if enc1 != 0 {
            zech[i] = log[enc1 as usize];
        }
    }

    Ok(FieldTable {
        id,
        spec,
        modulus,
        pow,
        log,
        zech,
    })
}

fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = crate::arith::factor_u128((p - 1) as u128);
    'g: for g in 2..p {
        for &r in factors.keys() {
            if pow_mod(g, (p - 1) / r, p) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("no primitive root found for prime {p}")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Scan monic degree-f polynomials in increasing coefficient encoding for
/// the first whose residue class x has order q - 1; returns the modulus and
/// the completed power table of x.
fn find_primitive_modulus(p: u64, f: u32, q: u64) -> (Vec<u64>, Vec<u32>) {
    let fu = f as usize;
    'candidate: for code in 1..q {
        // Non-leading coefficients from the code; constant term must be
        // nonzero or x would be a zero divisor.
        if code % p == 0 {
            continue;
        }
        let mut modulus = Vec::with_capacity(fu + 1);
        let mut c = code;
        for _ in 0..fu {
            modulus.push(c % p);
            c /= p;
        }
        modulus.push(1);

        // Powers of x modulo the candidate. x has order q-1 in the quotient
        // ring iff the candidate is irreducible with x primitive: a unit of
        // order q-1 cannot exist otherwise (the unit group is too small).
        let mut pow = Vec::with_capacity((q - 1) as usize);
        let mut coeffs = vec![0u64; fu];
        coeffs[0] = 1; // x^0
        for step in 0..q - 1 {
            pow.push(encode(&coeffs, p));
            // multiply by x
            let top = coeffs[fu - 1];
            for k in (1..fu).rev() {
                coeffs[k] = coeffs[k - 1];
            }
            coeffs[0] = 0;
            if top != 0 {
                for k in 0..fu {
                    coeffs[k] = (coeffs[k] + (p - modulus[k] % p) * top) % p;
                }
            }
            let is_one = coeffs[0] == 1 && coeffs[1..].iter().all(|&c| c == 0);
            if is_one && step + 1 < q - 1 {
                continue 'candidate; // order too small
            }
            if !is_one && step + 1 == q - 1 {
                continue 'candidate; // x^{q-1} != 1: not even a unit cycle
            }
        }
        return (modulus, pow);
    }
    unreachable!("no primitive polynomial of degree {f} over F_{p}")
}

fn encode(coeffs: &[u64], p: u64) -> u32 {
    let mut enc = 0u64;
    for &c in coeffs.iter().rev() {
        enc = enc * p + c;
    }
    enc as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

impl FieldTable {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn f(&self) -> u32 {
        self.spec.f
    }

    pub fn modulus_polynomial(&self) -> &[u64] {
        &self.modulus
    }

    /// "F(p^f)" descriptor.
    pub fn descriptor(&self) -> String {
        if self.spec.f == 1 {
            format!("F({})", self.spec.p)
        } else {
            format!("F({}^{})", self.spec.p, self.spec.f)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field_id: self.id,
            repr: Repr::Zero,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field_id: self.id,
            repr: Repr::Log(0),
        }
    }

    /// The fixed multiplicative generator.
    pub fn generator(&self) -> FieldElement {
        FieldElement {
            field_id: self.id,
            repr: Repr::Log(if self.spec.q == 2 { 0 } else { 1 }),
        }
    }

    pub fn generator_power(&self, k: u64) -> FieldElement {
        if self.spec.q == 2 {
            return self.one();
        }
        FieldElement {
            field_id: self.id,
            repr: Repr::Log((k % (self.spec.q - 1)) as u32),
        }
    }

    /// Element from its integer encoding in [0, q).
    pub fn element(&self, enc: u64) -> FieldElement {
        assert!(enc < self.spec.q, "encoding out of range");
        if enc == 0 {
            self.zero()
        } else {
            FieldElement {
                field_id: self.id,
                repr: Repr::Log(self.log[enc as usize]),
            }
        }
    }

    /// Integer encoding of an element, in [0, q).
    pub fn encoding(&self, a: FieldElement) -> u64 {
        match a.repr {
            Repr::Zero => 0,
            Repr::Log(i) => self.pow[i as usize] as u64,
        }
    }

    /// All q elements in encoding order (0 first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.spec.q).map(move |enc| self.element(enc))
    }

    fn check(&self, a: FieldElement) -> Result<(), GfqError> {
        if a.field_id != self.id {
            Err(GfqError::ForeignElement)
        } else {
            Ok(())
        }
    }

    pub fn arith(
        &self,
        op: BinOp,
        a: FieldElement,
        b: FieldElement,
    ) -> Result<FieldElement, GfqError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            BinOp::Add => self.add(a, b),
            BinOp::Sub => self.add(a, self.neg(b)),
            BinOp::Mul => self.mul(a, b),
        })
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (i, j) = match (a.repr, b.repr) {
            (Repr::Zero, _) => return b,
            (_, Repr::Zero) => return a,
            (Repr::Log(i), Repr::Log(j)) => (i as u64, j as u64),
        };
        let m = self.spec.q - 1;
        // g^i + g^j = g^i (1 + g^{j-i})
        let d = (j + m - i) % m;
        let z = self.zech[d as usize];
        if z == ZECH_NONE {
            self.zero()
        } else {
            FieldElement {
                field_id: self.id,
                repr: Repr::Log(((i + z as u64) % m) as u32),
            }
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.spec.p == 2 {
            return a;
        }
        match a.repr {
            Repr::Zero => a,
            Repr::Log(i) => {
                let m = self.spec.q - 1;
                FieldElement {
                    field_id: self.id,
                    repr: Repr::Log(((i as u64 + m / 2) % m) as u32),
                }
            }
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a.repr, b.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => self.zero(),
            (Repr::Log(i), Repr::Log(j)) => {
                let m = self.spec.q - 1;
                FieldElement {
                    field_id: self.id,
                    repr: Repr::Log(((i as u64 + j as u64) % m) as u32),
                }
            }
        }
    }

    pub fn invert(&self, a: FieldElement) -> Result<FieldElement, GfqError> {
        self.check(a)?;
        match a.repr {
            Repr::Zero => Err(GfqError::DivisionByZero),
            Repr::Log(i) => {
                let m = self.spec.q - 1;
                Ok(FieldElement {
                    field_id: self.id,
                    repr: Repr::Log(((m - i as u64) % m) as u32),
                })
            }
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfqError> {
        Ok(self.mul(a, self.invert(b)?))
    }

    /// The field automorphism a -> a^(p^k), 0 <= k < f.
    pub fn frobenius(&self, k: u32, a: FieldElement) -> Result<FieldElement, GfqError> {
        self.check(a)?;
        assert!(k < self.spec.f, "frobenius power out of range");
        match a.repr {
            Repr::Zero => Ok(a),
            Repr::Log(i) => {
                let m = self.spec.q - 1;
                let mut e = i as u64;
                for _ in 0..k {
                    e = e * self.spec.p % m;
                }
                Ok(FieldElement {
                    field_id: self.id,
                    repr: Repr::Log(e as u32),
                })
            }
        }
    }

    /// "0" or "g^k" textual form.
    pub fn format_element(&self, a: FieldElement) -> String {
        match a.repr {
            Repr::Zero => "0".to_string(),
            Repr::Log(0) => "1".to_string(),
            Repr::Log(i) => format!("g^{i}"),
        }
    }
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTable({})", self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_addition_table() {
        let f2 = make_field(2, 1).unwrap();
        let one = f2.one();
        assert!(f2.add(one, one).is_zero());
        assert_eq!(f2.mul(one, one), one);
    }

    #[test]
    fn f4_omega_table() {
        // F_4 = {0, 1, w, wbar}: w*w = wbar, w*wbar = 1, w + wbar = 1.
        let f4 = make_field(2, 2).unwrap();
        let w = f4.generator();
        let wbar = f4.mul(w, w);
        assert_ne!(wbar, w);
        assert_eq!(f4.mul(w, wbar), f4.one());
        assert_eq!(f4.add(w, wbar), f4.one());
        assert!(f4.add(w, w).is_zero());
        // Frobenius swaps w and wbar; applied twice it is the identity.
        assert_eq!(f4.frobenius(1, w).unwrap(), wbar);
        assert_eq!(f4.frobenius(1, wbar).unwrap(), w);
    }

    #[test]
    fn f9_multiplicative_order() {
        let f9 = make_field(3, 2).unwrap();
        for a in f9.elements().skip(1) {
            let mut x = f9.one();
            for _ in 0..8 {
                x = f9.mul(x, a);
            }
            assert_eq!(x, f9.one(), "x^8 = 1 must hold for nonzero x");
        }
        // invert(g^3) = g^5
        let g3 = f9.generator_power(3);
        assert_eq!(f9.invert(g3).unwrap(), f9.generator_power(5));
    }

    #[test]
    fn f5_product() {
        let f5 = make_field(5, 1).unwrap();
        let two = f5.element(2);
        let three = f5.element(3);
        assert_eq!(f5.encoding(f5.mul(two, three)), 1);
    }

    #[test]
    fn prime_field_frobenius_is_identity() {
        let f7 = make_field(7, 1).unwrap();
        for a in f7.elements() {
            assert_eq!(f7.frobenius(0, a).unwrap(), a);
        }
        assert_eq!(f7.invert(f7.one()).unwrap(), f7.one());
    }

    #[test]
    fn foreign_element_rejected() {
        let a = make_field(3, 1).unwrap();
        let b = make_field(3, 1).unwrap();
        let x = a.one();
        assert_eq!(
            b.arith(BinOp::Add, x, b.one()),
            Err(GfqError::ForeignElement)
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(6, 1).unwrap_err(), GfqError::NonPrime(6));
        assert!(matches!(
            make_field(2, 21).unwrap_err(),
            GfqError::FieldTooLarge(_)
        ));
    }

    #[test]
    fn generator_order_is_q_minus_1() {
        for (p, f) in [(2, 3), (3, 2), (5, 2), (2, 6), (7, 1)] {
            let t = make_field(p, f).unwrap();
            let g = t.generator();
            let mut x = t.one();
            let mut order = 0u64;
            loop {
                x = t.mul(x, g);
                order += 1;
                if x == t.one() {
                    break;
                }
            }
            assert_eq!(order, t.q() - 1);
        }
    }
}
