//! The Leech lattice in the integer scaling where the minimal norm is 32.
//!
//! A vector x in Z^24 belongs to the (scaled) lattice iff
//!   1. all coordinates share a parity m in {0, 1},
//!   2. the set S = { i : x_i = m + 2 (mod 4) } is a Golay codeword
//!      (coordinates as code positions, bit 0 = coordinate 0),
//!   3. sum x_i = 4m (mod 8).
//!
//! The 196560 minimal vectors split into three shapes:
//!   (+-2)^8 on an octad, evenly many minus signs      759 * 128 =  97152
//!   (+-4)^2 on any coordinate pair, free signs       C(24,2)*4 =   1104
//!   (-+3, +-1^23), one sign flip pattern per
//!     codeword/special-position pair                 4096 * 24 =  98304
//!
//! and there are no vectors of norm 16 at all (the lattice has no roots).

use thiserror::Error;

use crate::codes::golay;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LeechError {
    #[error("vector must have 24 coordinates, got {0}")]
    WrongDimension(usize),
    #[error("coordinates have mixed parity")]
    MixedParity,
    #[error("mod-4 residue set {0:06x} is not a Golay codeword")]
    ResidueNotCodeword(u32),
    #[error("coordinate sum {0} is not 4m mod 8")]
    BadCoordinateSum(i64),
}

pub fn norm(x: &[i64]) -> i64 {
    x.iter().map(|&c| c * c).sum()
}

/// Membership test against the three congruence conditions.
pub fn check_membership(x: &[i64]) -> Result<(), LeechError> {
    if x.len() != 24 {
        return Err(LeechError::WrongDimension(x.len()));
    }
    let m = x[0].rem_euclid(2);
    if x.iter().any(|&c| c.rem_euclid(2) != m) {
        return Err(LeechError::MixedParity);
    }
    let mut s = 0u32;
    for (i, &c) in x.iter().enumerate() {
        if c.rem_euclid(4) == (m + 2).rem_euclid(4) {
            s |= 1 << i;
        }
    }
    if !golay().contains(s) {
        return Err(LeechError::ResidueNotCodeword(s));
    }
    let sum: i64 = x.iter().sum();
    if sum.rem_euclid(8) != (4 * m).rem_euclid(8) {
        return Err(LeechError::BadCoordinateSum(sum));
    }
    Ok(())
}

pub fn contains(x: &[i64]) -> bool {
    check_membership(x).is_ok()
}

/// Norm of a lattice vector; errors when the congruences fail. For
/// members the norm is always a multiple of 16 in this scaling.
pub fn norm_check(x: &[i64]) -> Result<i64, LeechError> {
    check_membership(x)?;
    let n = norm(x);
    debug_assert_eq!(n % 16, 0, "lattice norms are multiples of 16");
    Ok(n)
}

/// Census of the minimal vectors, counted shape by shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalVectorCensus {
    /// (+-2^8, 0^16)
    pub octad_type: usize,
    /// (+-4^2, 0^22)
    pub pair_type: usize,
    /// (-+3, +-1^23)
    pub odd_type: usize,
    pub total: usize,
}

/// Visit all k-subsets of 0..n.
fn for_each_subset<F: FnMut(&[usize])>(n: usize, k: usize, f: &mut F) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Enumerate and count the norm-32 vectors. The possible uniform-parity
/// shapes with sum of squares 32 are (4^2), (4, 2^4), (2^8) and
/// (3, 1^23); every shape family is swept and filtered through the
/// membership test, and the (4, 2^4) family is checked to contribute
/// nothing.
pub fn minimal_vector_census() -> MinimalVectorCensus {
    let code = golay();

    // (+-2)^8: the mod-4 residue set is the support regardless of signs,
    // so non-codeword supports die on condition 2; codeword supports are
    // swept over all 256 sign patterns.
    let mut octad_type = 0usize;
    for_each_subset(24, 8, &mut |support| {
        let mask: u32 = support.iter().map(|&i| 1u32 << i).sum();
        if !code.contains(mask) {
            return;
        }
        for signs in 0u32..256 {
            let mut x = [0i64; 24];
            for (b, &i) in support.iter().enumerate() {
                x[i] = if signs >> b & 1 == 1 { -2 } else { 2 };
            }
            if contains(&x) {
                octad_type += 1;
            }
        }
    });

    // (4, 2^4): the residue set is the four +-2 positions, weight 4 <
    // minimum distance 8, so nothing survives; verified per support.
    let mut quad_type = 0usize;
    for_each_subset(24, 5, &mut |support| {
        for (slot, &four_pos) in support.iter().enumerate() {
            for signs in 0u32..32 {
                let mut x = [0i64; 24];
                for (b, &i) in support.iter().enumerate() {
                    let mag = if i == four_pos { 4 } else { 2 };
                    x[i] = if signs >> b & 1 == 1 { -mag } else { mag };
                }
                if contains(&x) {
                    quad_type += 1;
                }
            }
            let _ = slot;
        }
    });
    assert_eq!(quad_type, 0, "(4, 2^4) vectors cannot satisfy the congruences");

    // (+-4)^2: all pairs, all signs.
    let mut pair_type = 0usize;
    for_each_subset(24, 2, &mut |pair| {
        for signs in 0u32..4 {
            let mut x = [0i64; 24];
            for (b, &i) in pair.iter().enumerate() {
                x[i] = if signs >> b & 1 == 1 { -4 } else { 4 };
            }
            if contains(&x) {
                pair_type += 1;
            }
        }
    });

    // (3, 1^23): all coordinates odd, so the residue set must be a
    // codeword c; given c and the position j of the magnitude-3 entry the
    // signs are forced (x_i = -1 exactly on c \ {j}, x_j = 3 if j in c
    // else -3), so the family is parametrized by (c, j) and everything
    // else fails condition 2 outright.
    let mut odd_type = 0usize;
    for &c in code.words() {
        for j in 0..24usize {
            let mut x = [1i64; 24];
            for i in 0..24 {
                if c >> i & 1 == 1 {
                    x[i] = -1;
                }
            }
            x[j] = if c >> j & 1 == 1 { 3 } else { -3 };
            debug_assert_eq!(norm(&x), 32);
            if contains(&x) {
                odd_type += 1;
            }
        }
    }

    MinimalVectorCensus {
        octad_type,
        pair_type,
        odd_type,
        total: octad_type + pair_type + odd_type,
    }
}

/// Count vectors of norm 16; the answer is zero (there are no roots).
/// The uniform-parity shapes with sum of squares 16 are (4) and (2^4);
/// odd vectors have norm at least 24.
pub fn norm16_vector_count() -> usize {
    let mut count = 0usize;
    for i in 0..24usize {
        for s in [4i64, -4] {
            let mut x = [0i64; 24];
            x[i] = s;
            if contains(&x) {
                count += 1;
            }
        }
    }
    for_each_subset(24, 4, &mut |support| {
        for signs in 0u32..16 {
            let mut x = [0i64; 24];
            for (b, &i) in support.iter().enumerate() {
                x[i] = if signs >> b & 1 == 1 { -2 } else { 2 };
            }
            if contains(&x) {
                count += 1;
            }
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_basics() {
        // 4e_i + 4e_j with i, j arbitrary
        let mut x = [0i64; 24];
        x[0] = 4;
        x[5] = 4;
        assert!(contains(&x));
        // twice an octad
        let octad = golay().octads()[0];
        let mut y = [0i64; 24];
        for i in 0..24 {
            if octad >> i & 1 == 1 {
                y[i] = 2;
            }
        }
        assert!(contains(&y));
        assert_eq!(norm(&y), 32);
    }

    #[test]
    fn rejection_reasons() {
        let mut x = [0i64; 24];
        x[0] = 1;
        assert_eq!(check_membership(&x), Err(LeechError::MixedParity));
        let mut y = [0i64; 24];
        y[0] = 2;
        assert!(matches!(
            check_membership(&y),
            Err(LeechError::ResidueNotCodeword(1))
        ));
        let mut z = [0i64; 24];
        z[0] = 4;
        assert_eq!(check_membership(&z), Err(LeechError::BadCoordinateSum(4)));
        assert_eq!(
            check_membership(&[0i64; 23]),
            Err(LeechError::WrongDimension(23))
        );
    }

    #[test]
    fn lattice_closed_under_addition_spot_check() {
        let census_vec_a = {
            let mut x = [1i64; 24];
            x[0] = -3;
            x
        };
        assert!(contains(&census_vec_a));
        let mut b = [0i64; 24];
        b[0] = 4;
        b[1] = 4;
        let sum: Vec<i64> = census_vec_a.iter().zip(&b).map(|(p, q)| p + q).collect();
        assert!(contains(&sum));
    }

    #[test]
    fn minimal_vector_count() {
        let census = minimal_vector_census();
        assert_eq!(census.octad_type, 97_152);
        assert_eq!(census.pair_type, 1_104);
        assert_eq!(census.odd_type, 98_304);
        assert_eq!(census.total, 196_560);
    }

    #[test]
    fn norm_check_values() {
        let mut x = [0i64; 24];
        x[3] = 4;
        x[17] = 4;
        assert_eq!(norm_check(&x), Ok(32));
        assert_eq!(norm_check(&[0i64; 24]), Ok(0));
        let mut quad = [0i64; 24];
        for i in 0..4 {
            quad[i] = 4;
        }
        assert_eq!(norm_check(&quad), Ok(64));
        let mut bad = [0i64; 24];
        bad[0] = 1;
        assert_eq!(norm_check(&bad), Err(LeechError::MixedParity));
    }

    #[test]
    fn no_roots() {
        assert_eq!(norm16_vector_count(), 0);
    }

    #[test]
    fn subset_iterator_counts() {
        let mut n = 0;
        for_each_subset(24, 2, &mut |_| n += 1);
        assert_eq!(n, 276);
        let mut m = 0;
        for_each_subset(5, 3, &mut |_| m += 1);
        assert_eq!(m, 10);
    }
}
