//! Ordinary character tables for small permutation groups via Dixon's
//! method, plus the classical numerical checks: Burnside's sum of
//! squares, the divisor property of irreducible dimensions, and the
//! linear character count |G / G'|.
//!
//! Dixon's method works modulo a prime l = 1 (mod exponent(G)): the
//! class-multiplication matrices are simultaneously diagonalized over
//! F_l, dimensions are recovered from the orthogonality relation, and
//! the mod-l character values are lifted to exact cyclotomic integers
//! (multiplicity vectors of e-th roots of unity). All table checks are
//! exact, in Z[x]/Phi_e(x); the complex view is display only.

use std::f64::consts::TAU;

use serde::Serialize;
use thiserror::Error;

use crate::arith::is_prime_u64;
use crate::permgrp::{conjugacy_classes, derived_subgroup, GroupBsgs, PermGrpError, Permutation};

/// Largest group order accepted by [`dixon_table`].
pub const DIXON_ORDER_BOUND: u128 = 2000;
/// Guard on the class count (the eigen machinery is cubic in it).
pub const DIXON_CLASS_BOUND: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepsError {
    #[error("group order {0} exceeds the character-table bound {DIXON_ORDER_BOUND}")]
    OrderBoundExceeded(u128),
    #[error("class count {0} exceeds the bound {DIXON_CLASS_BOUND}")]
    TooManyClasses(usize),
    #[error(transparent)]
    PermGrp(#[from] PermGrpError),
}

/// An element of Z[zeta_e], stored redundantly in Z[x]/(x^e - 1);
/// equality and orthogonality checks reduce mod the cyclotomic
/// polynomial Phi_e.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cyclotomic {
    pub order: u64,
    /// coefficient of zeta^t at index t
    pub coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn integer(order: u64, n: i64) -> Self {
        let mut coeffs = vec![0; order as usize];
        coeffs[0] = n;
        Cyclotomic { order, coeffs }
    }

    /// Complex conjugate: zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        let e = self.order as usize;
        let mut coeffs = vec![0; e];
        for (t, &c) in self.coeffs.iter().enumerate() {
            coeffs[(e - t) % e] = c;
        }
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    pub fn complex(&self) -> (f64, f64) {
        let e = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (t, &c) in self.coeffs.iter().enumerate() {
            let a = TAU * t as f64 / e;
            re += c as f64 * a.cos();
            im += c as f64 * a.sin();
        }
        (re, im)
    }

    /// Is this value the rational integer n (as an element of Z[zeta_e])?
    pub fn is_integer(&self, n: i64) -> bool {
        let mut diff: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        diff[0] -= n as i128;
        reduce_mod_cyclotomic(&mut diff, self.order);
        diff.iter().all(|&c| c == 0)
    }
}

/// Phi_e as an integer polynomial (ascending coefficients), by dividing
/// x^e - 1 by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i128> {
    let mut num: Vec<i128> = vec![0; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (monic divisor).
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i128; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division not exact");
    quot
}

/// Reduce a polynomial (coefficients of x^t, length e) modulo Phi_e,
/// in place; afterwards only the first deg(Phi_e) entries are
/// meaningful and the rest are zero.
fn reduce_mod_cyclotomic(coeffs: &mut Vec<i128>, e: u64) {
    let phi = cyclotomic_polynomial(e);
    let d = phi.len() - 1;
    while coeffs.len() < d {
        coeffs.push(0);
    }
    for k in (d..coeffs.len()).rev() {
        let c = coeffs[k];
        if c != 0 {
            coeffs[k] = 0;
            for (i, &p) in phi.iter().enumerate().take(d) {
                coeffs[k - d + i] -= c * p;
            }
        }
    }
    coeffs.truncate(d.max(1));
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassInfo {
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub group_order: u128,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    /// dims[i] = value of character i at the identity.
    pub dims: Vec<u64>,
    /// values[i][k] = chi_i on class k.
    pub values: Vec<Vec<Cyclotomic>>,
}

// --- modular arithmetic helpers ---

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc as u128 as u64;
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

/// Least prime l = 1 mod e with l > 2|G|.
fn dixon_prime(e: u64, order: u64) -> u64 {
    let mut l = (2 * order / e + 1) * e + 1;
    loop {
        if l % e == 1 && l > 2 * order && is_prime_u64(l) {
            return l;
        }
        l += e;
    }
}

/// Primitive e-th root of unity mod l (l = 1 mod e).
fn primitive_root_of_unity(e: u64, l: u64) -> u64 {
    let factors = crate::arith::factor_u128((l - 1) as u128);
    let g = (2..l)
        .find(|&g| factors.keys().all(|&r| pow_mod(g, (l - 1) / r, l) != 1))
        .expect("F_l^* is cyclic");
    pow_mod(g, (l - 1) / e, l)
}

// --- linear algebra over F_l ---

struct ModMatrix {
    n: usize,
    a: Vec<u64>,
    l: u64,
}

/// Characteristic polynomial (monic, ascending coefficients) via
/// Hessenberg reduction and the standard recurrence.
fn char_poly(m: &ModMatrix) -> Vec<u64> {
    let n = m.n;
    let l = m.l;
    let mut h = m.a.clone();
    let idx = |i: usize, j: usize| i * n + j;
    // reduce to upper Hessenberg by similarity transforms
    for col in 0..n.saturating_sub(2) {
        let Some(pivot) = (col + 1..n).find(|&r| h[idx(r, col)] != 0) else {
            continue;
        };
        if pivot != col + 1 {
            for j in 0..n {
                h.swap(idx(pivot, j), idx(col + 1, j));
            }
            for i in 0..n {
                h.swap(idx(i, pivot), idx(i, col + 1));
            }
        }
        let pinv = inv_mod(h[idx(col + 1, col)], l);
        for r in col + 2..n {
            let factor = (h[idx(r, col)] as u128 * pinv as u128 % l as u128) as u64;
            if factor == 0 {
                continue;
            }
            // row r -= factor * row col+1; column col+1 += factor * column r
            for j in 0..n {
                let sub = (factor as u128 * h[idx(col + 1, j)] as u128 % l as u128) as u64;
                h[idx(r, j)] = (h[idx(r, j)] + l - sub) % l;
            }
            for i in 0..n {
                let add = (factor as u128 * h[idx(i, r)] as u128 % l as u128) as u64;
                h[idx(i, col + 1)] = (h[idx(i, col + 1)] + add) % l;
            }
        }
    }
    // p_0 = 1; p_k from the Hessenberg recurrence
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // (x - h[k-1][k-1]) * p_{k-1}
        let prev = &polys[k - 1];
        let mut p = vec![0u64; k + 1];
        for (t, &c) in prev.iter().enumerate() {
            p[t + 1] = (p[t + 1] + c) % l;
            let sub = (h[idx(k - 1, k - 1)] as u128 * c as u128 % l as u128) as u64;
            p[t] = (p[t] + l - sub) % l;
        }
        let mut beta = 1u64;
        for i in (1..k).rev() {
            beta = (beta as u128 * h[idx(i, i - 1)] as u128 % l as u128) as u64;
            let factor = (h[idx(i - 1, k - 1)] as u128 * beta as u128 % l as u128) as u64;
            if factor == 0 {
                continue;
            }
            for (t, &c) in polys[i - 1].iter().enumerate() {
                let sub = (factor as u128 * c as u128 % l as u128) as u64;
                p[t] = (p[t] + l - sub) % l;
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

fn poly_eval(p: &[u64], x: u64, l: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = ((acc as u128 * x as u128 + c as u128) % l as u128) as u64;
    }
    acc
}

/// Kernel basis of a (rows x cols) matrix over F_l, as row vectors.
fn kernel(rows: usize, cols: usize, mat: &[u64], l: u64) -> Vec<Vec<u64>> {
    let mut a = mat.to_vec();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(pr * cols + j, rank * cols + j);
        }
        let pinv = inv_mod(a[rank * cols + col], l);
        for j in 0..cols {
            a[rank * cols + j] = (a[rank * cols + j] as u128 * pinv as u128 % l as u128) as u64;
        }
        for r in 0..rows {
            if r == rank || a[r * cols + col] == 0 {
                continue;
            }
            let f = a[r * cols + col];
            for j in 0..cols {
                let sub = (f as u128 * a[rank * cols + j] as u128 % l as u128) as u64;
                a[r * cols + j] = (a[r * cols + j] + l - sub) % l;
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for col in 0..cols {
            let p = pivot_of_col[col];
            if p != usize::MAX {
                v[col] = (l - a[p * cols + free]) % l;
            }
        }
        basis.push(v);
    }
    basis
}

/// Coordinates of `w` in the row-reduced basis `basis` (each row has a
/// distinct pivot column with value 1 and zeros above/below). Panics if
/// w is outside the span.
fn coords_in_basis(basis: &[Vec<u64>], pivots: &[usize], w: &[u64], l: u64) -> Vec<u64> {
    let mut w = w.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (b, &p) in basis.iter().zip(pivots) {
        let c = w[p];
        coords.push(c);
        if c != 0 {
            for (wi, &bi) in w.iter_mut().zip(b) {
                let sub = (c as u128 * bi as u128 % l as u128) as u64;
                *wi = (*wi + l - sub) % l;
            }
        }
    }
    assert!(w.iter().all(|&x| x == 0), "vector outside subspace");
    coords
}

/// Row-reduce vectors into RREF; returns (basis, pivot columns).
fn rref(vectors: Vec<Vec<u64>>, l: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in vectors {
        for (b, &p) in basis.iter().zip(&pivots) {
            let c = v[p];
            if c != 0 {
                for (vi, &bi) in v.iter_mut().zip(b) {
                    let sub = (c as u128 * bi as u128 % l as u128) as u64;
                    *vi = (*vi + l - sub) % l;
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            let pinv = inv_mod(v[p], l);
            for vi in v.iter_mut() {
                *vi = (*vi as u128 * pinv as u128 % l as u128) as u64;
            }
            for (b, _) in basis.iter_mut().zip(&pivots) {
                let c = b[p];
                if c != 0 {
                    for (bi, &vi) in b.iter_mut().zip(&v) {
                        let sub = (c as u128 * vi as u128 % l as u128) as u64;
                        *bi = (*bi + l - sub) % l;
                    }
                }
            }
            basis.push(v);
            pivots.push(p);
        }
    }
    (basis, pivots)
}

/// Dixon's algorithm. Deterministic; exact output.
pub fn dixon_table(g: &GroupBsgs) -> Result<CharacterTable, RepsError> {
    let order = g.order_u128();
    if order > DIXON_ORDER_BOUND {
        return Err(RepsError::OrderBoundExceeded(order));
    }
    let order = order as u64;
    let data = conjugacy_classes(g)?;
    let r = data.classes.len();
    if r > DIXON_CLASS_BOUND {
        return Err(RepsError::TooManyClasses(r));
    }

    let exponent = data
        .classes
        .iter()
        .fold(1u64, |acc, c| num_integer::lcm(acc, c.element_order));
    let l = dixon_prime(exponent, order);
    let theta = primitive_root_of_unity(exponent, l);

    // class sizes, identity class, inverse-class map, power maps
    let sizes: Vec<u64> = data.classes.iter().map(|c| c.size as u64).collect();
    let id_class = data
        .classes
        .iter()
        .position(|c| c.element_order == 1)
        .unwrap();
    let inv_class: Vec<usize> = data
        .classes
        .iter()
        .map(|c| data.class_of[&c.representative.inverse()])
        .collect();

    // a[i][j][k]: with z a fixed representative of class k, the number of
    // x in C_i with x^{-1} z in C_j; organized as r matrices B_i with
    // B_i[j][k] = a_ijk so that the eigenvector of B_i with eigenvalue
    // omega_i is (omega_k)_k.
    let mut b_mats: Vec<Vec<u64>> = vec![vec![0u64; r * r]; r];
    for (k, class_k) in data.classes.iter().enumerate() {
        let z = &class_k.representative;
        for x in &data.elements {
            let i = data.class_of[x];
            let y = x.inverse().mul(z);
            let j = data.class_of[&y];
            b_mats[i][j * r + k] += 1;
        }
    }
    for m in &mut b_mats {
        for v in m.iter_mut() {
            *v %= l;
        }
    }

    // simultaneous eigenspace splitting
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![rref(full, l)];
    for b in &b_mats {
        if spaces.iter().all(|(s, _)| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            // restriction of B to the subspace
            let mut m = vec![0u64; d * d];
            for (col, u) in basis.iter().enumerate() {
                let mut w = vec![0u64; r];
                for (jj, wj) in w.iter_mut().enumerate() {
                    let mut acc: u128 = 0;
                    for (kk, &uk) in u.iter().enumerate() {
                        acc += b[jj * r + kk] as u128 * uk as u128;
                    }
                    *wj = (acc % l as u128) as u64;
                }
                let coords = coords_in_basis(&basis, &pivots, &w, l);
                for (row, &c) in coords.iter().enumerate() {
                    m[row * d + col] = c;
                }
            }
            let poly = char_poly(&ModMatrix { n: d, a: m.clone(), l });
            for lambda in 0..l {
                if poly_eval(&poly, lambda, l) != 0 {
                    continue;
                }
                // kernel of (M - lambda I) in subspace coordinates
                let mut shifted = m.clone();
                for t in 0..d {
                    shifted[t * d + t] = (shifted[t * d + t] + l - lambda) % l;
                }
                let ker = kernel(d, d, &shifted, l);
                let lifted: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (cj, u) in c.iter().zip(&basis) {
                            for (vi, &ui) in v.iter_mut().zip(u) {
                                *vi = ((*vi as u128 + *cj as u128 * ui as u128) % l as u128) as u64;
                            }
                        }
                        v
                    })
                    .collect();
                if !lifted.is_empty() {
                    next.push(rref(lifted, l));
                }
            }
        }
        spaces = next;
    }
    assert!(
        spaces.len() == r && spaces.iter().all(|(s, _)| s.len() == 1),
        "class algebra must split into {r} one-dimensional eigenspaces"
    );

    // normalize eigenvectors to omega vectors (identity component 1) and
    // recover dimensions and mod-l character values
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::new(); // (dim, chi mod l per class)
    for (basis, _) in &spaces {
        let v = &basis[0];
        assert!(v[id_class] != 0, "omega at the identity class is 1");
        let scale = inv_mod(v[id_class], l);
        let omega: Vec<u64> = v
            .iter()
            .map(|&x| (x as u128 * scale as u128 % l as u128) as u64)
            .collect();
        // |G| / d^2 = sum_k omega_k omega_{k-bar} / |C_k|
        let mut s: u64 = 0;
        for k in 0..r {
            let t = (omega[k] as u128 * omega[inv_class[k]] as u128 % l as u128) as u64;
            let t = (t as u128 * inv_mod(sizes[k] % l, l) as u128 % l as u128) as u64;
            s = (s + t) % l;
        }
        let d2 = (order % l) as u128 * inv_mod(s, l) as u128 % l as u128;
        let dim = (1..=order)
            .take_while(|&d| d * d <= order)
            .find(|&d| (d as u128 * d as u128) % l as u128 == d2)
            .expect("dimension is an integer at most sqrt(|G|)");
        let chi: Vec<u64> = (0..r)
            .map(|k| {
                let t = (dim as u128 * omega[k] as u128 % l as u128) as u64;
                (t as u128 * inv_mod(sizes[k] % l, l) as u128 % l as u128) as u64
            })
            .collect();
        rows.push((dim, chi));
    }
    rows.sort();

    // lift to exact cyclotomic values
    let chi_mod = |rows: &Vec<(u64, Vec<u64>)>, i: usize, k: usize| rows[i].1[k];
    let mut values: Vec<Vec<Cyclotomic>> = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = data.classes[k].element_order;
            // classes of the powers rep_k^s
            let rep = &data.classes[k].representative;
            let mut power_class = Vec::with_capacity(o as usize);
            let mut p = Permutation::identity(g.degree());
            for _ in 0..o {
                power_class.push(data.class_of[&p]);
                p = p.mul(rep);
            }
            let theta_o = pow_mod(theta, exponent / o, l);
            let o_inv = inv_mod(o % l, l);
            let mut coeffs = vec![0i64; exponent as usize];
            for j in 0..o {
                // multiplicity of zeta_o^j among the eigenvalues of rho(g_k)
                let mut acc: u64 = 0;
                for (s, &pc) in power_class.iter().enumerate() {
                    let w = pow_mod(theta_o, (j as u128 * s as u128 % o as u128) as u64, l);
                    let w_inv = inv_mod(w, l);
                    acc = ((acc as u128 + chi_mod(&rows, i, pc) as u128 * w_inv as u128)
                        % l as u128) as u64;
                }
                let m = (acc as u128 * o_inv as u128 % l as u128) as u64;
                assert!(
                    m <= rows[i].0,
                    "eigenvalue multiplicity exceeds the dimension"
                );
                coeffs[(j * (exponent / o)) as usize] += m as i64;
            }
            row.push(Cyclotomic {
                order: exponent,
                coeffs,
            });
        }
        values.push(row);
    }

    let table = CharacterTable {
        group_order: order as u128,
        exponent,
        classes: data
            .classes
            .iter()
            .map(|c| ClassInfo {
                representative: crate::permgrp::format_cycles(&c.representative),
                size: c.size,
                element_order: c.element_order,
            })
            .collect(),
        dims: rows.iter().map(|(d, _)| *d).collect(),
        values,
    };
    assert!(table.verify_orthogonality(), "orthogonality must hold");
    Ok(table)
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Exact inner product sum_k |C_k| chi_i(k) conj(chi_j(k)), reduced
    /// mod Phi_e; must equal |G| delta_ij.
    fn row_inner(&self, i: usize, j: usize) -> Vec<i128> {
        let e = self.exponent as usize;
        let mut total = vec![0i128; e];
        for (k, class) in self.classes.iter().enumerate() {
            let a = &self.values[i][k];
            let b = self.values[j][k].conj();
            for (s, &ca) in a.coeffs.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for (t, &cb) in b.coeffs.iter().enumerate() {
                    if cb != 0 {
                        total[(s + t) % e] += class.size as i128 * ca as i128 * cb as i128;
                    }
                }
            }
        }
        reduce_mod_cyclotomic(&mut total, self.exponent);
        total
    }

    pub fn verify_orthogonality(&self) -> bool {
        let r = self.class_count();
        for i in 0..r {
            for j in 0..r {
                let mut inner = self.row_inner(i, j);
                if i == j {
                    inner[0] -= self.group_order as i128;
                }
                if inner.iter().any(|&c| c != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Fixed-width text grid.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("{}[{}]", c.element_order, c.size))
            .collect();
        out.push_str(&format!("{:>8}", "class"));
        for h in &header {
            out.push_str(&format!("{h:>12}"));
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            out.push_str(&format!("{:>8}", format!("X{}", i + 1)));
            for v in row {
                let (re, im) = v.complex();
                let text = if im.abs() < 1e-9 && (re - re.round()).abs() < 1e-9 {
                    format!("{}", re.round() as i64)
                } else if im.abs() < 1e-9 {
                    format!("{re:.3}")
                } else {
                    format!("{re:.2}{im:+.2}i")
                };
                out.push_str(&format!("{text:>12}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Burnside: sum of squared irreducible dimensions equals the order.
pub fn burnside_check(order: u128, dims: &[u64]) -> bool {
    dims.iter().map(|&d| d as u128 * d as u128).sum::<u128>() == order
}

/// Number of 1-dimensional characters: |G / G'|.
pub fn linear_char_count(g: &GroupBsgs) -> Result<u128, PermGrpError> {
    let derived = derived_subgroup(g)?;
    Ok(g.order_u128() / derived.order_u128())
}
