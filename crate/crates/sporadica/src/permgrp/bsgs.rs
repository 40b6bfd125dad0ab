//! Base and strong generating sets via a deterministic Schreier-Sims
//! construction.
//!
//! The chain certifies the group order (product of basic orbit lengths)
//! and gives a polynomial-time membership test by sifting. Base points are
//! the smallest moved point at each level unless a base prefix is
//! prescribed; Schreier generators are processed in generator-index then
//! orbit-discovery order, so the strong generating set is reproducible.

use thiserror::Error;

use super::perm::Permutation;
use crate::arith::FactoredInteger;

/// Default cap on certified group order; large enough for every group this
/// crate constructs (the largest is PGL_2(q) at q near 10^4, ~10^12).
pub const DEFAULT_ORDER_BOUND: u128 = 10u128.pow(13);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermGrpError {
    #[error("generator degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order {0} exceeds the bound {1}")]
    OrderBoundExceeded(u128, u128),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("operation requires order at most {0}")]
    OrderTooLargeFor(u128),
}

struct Level {
    point: usize,
    /// Orbit of `point` under the strong generators fixing all earlier
    /// base points, in BFS discovery order.
    orbit: Vec<usize>,
    /// transversal[x] maps `point` to `x` for x in the orbit.
    transversal: Vec<Option<Permutation>>,
}

/// A permutation group given by generators plus a base-and-strong-
/// generating-set certificate of its order.
pub struct GroupBsgs {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
    order_u128: u128,
    order: FactoredInteger,
}

impl std::fmt::Debug for GroupBsgs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupBsgs")
            .field("degree", &self.degree)
            .field("order", &self.order_u128)
            .field("base", &self.base)
            .finish()
    }
}

impl GroupBsgs {
    /// Build with automatic base selection (smallest moved point at each
    /// level).
    pub fn new(gens: &[Permutation]) -> Result<Self, PermGrpError> {
        Self::with_base_and_bound(gens, &[], DEFAULT_ORDER_BOUND)
    }

    /// Like [`GroupBsgs::new`] but with the degree pinned, so an empty
    /// generator list yields the trivial group on the right point set.
    pub fn new_with_degree(gens: &[Permutation], degree: usize) -> Result<Self, PermGrpError> {
        if gens.is_empty() {
            return Self::new(&[Permutation::identity(degree)]);
        }
        for g in gens {
            if g.degree() != degree {
                return Err(PermGrpError::DegreeMismatch(degree, g.degree()));
            }
        }
        Self::new(gens)
    }

    /// Build with a prescribed initial base segment; levels for fixed
    /// prescribed points get singleton orbits.
    pub fn with_base(gens: &[Permutation], base_prefix: &[usize]) -> Result<Self, PermGrpError> {
        Self::with_base_and_bound(gens, base_prefix, DEFAULT_ORDER_BOUND)
    }

    pub fn with_base_and_bound(
        gens: &[Permutation],
        base_prefix: &[usize],
        order_bound: u128,
    ) -> Result<Self, PermGrpError> {
        let degree = gens.first().map(|g| g.degree()).unwrap_or(1);
        for g in gens {
            if g.degree() != degree {
                return Err(PermGrpError::DegreeMismatch(degree, g.degree()));
            }
        }
        for &b in base_prefix {
            if b >= degree {
                return Err(PermGrpError::PointOutOfRange(b, degree));
            }
        }

        let mut builder = Builder {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for &b in base_prefix {
            if !builder.base.contains(&b) {
                builder.push_base_point(b);
            }
        }
        for g in gens {
            if !g.is_identity() && !builder.strong.contains(g) {
                builder.strong.push(g.clone());
            }
        }
        // Every strong generator must move a base point.
        for idx in 0..builder.strong.len() {
            let g = &builder.strong[idx];
            if builder.base.iter().all(|&b| g.apply(b) == b) {
                let b = g.smallest_moved_point().unwrap();
                builder.push_base_point(b);
            }
        }
        builder.schreier_sims();

        let mut order_u128: u128 = 1;
        for level in &builder.levels {
            order_u128 = order_u128
                .checked_mul(level.orbit.len() as u128)
                .ok_or(PermGrpError::OrderBoundExceeded(u128::MAX, order_bound))?;
        }
        if order_u128 > order_bound {
            return Err(PermGrpError::OrderBoundExceeded(order_u128, order_bound));
        }

        Ok(GroupBsgs {
            degree,
            generators: gens.to_vec(),
            base: builder.base,
            strong: builder.strong,
            levels: builder.levels,
            order_u128,
            order: FactoredInteger::from_u128(order_u128),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn order_u128(&self) -> u128 {
        self.order_u128
    }

    pub fn order(&self) -> &FactoredInteger {
        &self.order
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Strong generators fixing the first `k` base points pointwise; they
    /// generate the pointwise stabilizer of those base points.
    pub fn stabilizer_generators(&self, k: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|g| self.base[..k.min(self.base.len())].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    /// Transversal element mapping base[level] to x, if x is in the basic
    /// orbit.
    pub fn transversal_element(&self, level: usize, x: usize) -> Option<&Permutation> {
        self.levels[level].transversal[x].as_ref()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        matches!(self.strip(p), None)
    }

    /// Sift through the chain; None means membership, Some gives the
    /// non-identity residue and the level where sifting failed.
    pub fn strip(&self, p: &Permutation) -> Option<(Permutation, usize)> {
        let mut h = p.clone();
        for (k, level) in self.levels.iter().enumerate() {
            let x = h.apply(level.point);
            match &level.transversal[x] {
                None => return Some((h, k)),
                Some(t) => h = t.inverse().mul(&h),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((h, self.levels.len()))
        }
    }

    /// Orbits of the whole group on {0..degree-1}, each sorted, ordered by
    /// smallest element.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Visit every group element exactly once, in the deterministic order
    /// given by the transversal product decomposition.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, f: &mut F) {
        let id = Permutation::identity(self.degree);
        self.element_rec(0, &id, f);
    }

    fn element_rec<F: FnMut(&Permutation)>(&self, level: usize, prefix: &Permutation, f: &mut F) {
        if level == self.levels.len() {
            f(prefix);
            return;
        }
        for &x in &self.levels[level].orbit {
            let t = self.levels[level].transversal[x].as_ref().unwrap();
            self.element_rec(level + 1, &prefix.mul(t), f);
        }
    }

    /// All elements as a vector; guarded by `cap` on the order.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>, PermGrpError> {
        if self.order_u128 > cap {
            return Err(PermGrpError::OrderTooLargeFor(cap));
        }
        let mut out = Vec::with_capacity(self.order_u128 as usize);
        self.for_each_element(&mut |p| out.push(p.clone()));
        Ok(out)
    }
}

struct Builder {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Builder {
    fn push_base_point(&mut self, b: usize) {
        self.base.push(b);
        self.levels.push(Level {
            point: b,
            orbit: Vec::new(),
            transversal: Vec::new(),
        });
    }

    fn gens_at(&self, k: usize) -> Vec<usize> {
        (0..self.strong.len())
            .filter(|&i| {
                self.base[..k]
                    .iter()
                    .all(|&b| self.strong[i].apply(b) == b)
            })
            .collect()
    }

    fn recompute_orbit(&mut self, k: usize) {
        let gens = self.gens_at(k);
        let point = self.base[k];
        let mut orbit = vec![point];
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[point] = Some(Permutation::identity(self.degree));
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &gi in &gens {
                let y = self.strong[gi].apply(x);
                if transversal[y].is_none() {
                    let t = self.strong[gi].mul(transversal[x].as_ref().unwrap());
                    transversal[y] = Some(t);
                    orbit.push(y);
                }
            }
        }
        self.levels[k].orbit = orbit;
        self.levels[k].transversal = transversal;
    }

    fn strip_from(&self, p: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = p.clone();
        for k in from..self.levels.len() {
            let x = h.apply(self.base[k]);
            match &self.levels[k].transversal[x] {
                None => return (h, k),
                Some(t) => h = t.inverse().mul(&h),
            }
        }
        (h, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        if self.base.is_empty() {
            return; // trivial group
        }
        for k in 0..self.levels.len() {
            self.recompute_orbit(k);
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            self.recompute_orbit(iu);
            match self.verify_level(iu) {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Check all Schreier generators at level `iu`; on finding one that
    /// does not sift, record its residue as a strong generator and return
    /// the level to reprocess.
    fn verify_level(&mut self, iu: usize) -> Option<usize> {
        let gens = self.gens_at(iu);
        for oi in 0..self.levels[iu].orbit.len() {
            let x = self.levels[iu].orbit[oi];
            for &gi in &gens {
                let g = &self.strong[gi];
                let gx = g.apply(x);
                let tx = self.levels[iu].transversal[x].as_ref().unwrap();
                let tgx = self.levels[iu].transversal[gx].as_ref().unwrap();
                let schreier = tgx.inverse().mul(g).mul(tx);
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.strip_from(&schreier, iu + 1);
                if h.is_identity() {
                    continue;
                }
                if j == self.levels.len() {
                    let b = h.smallest_moved_point().unwrap();
                    self.push_base_point(b);
                }
                self.strong.push(h);
                for k in iu + 1..=j.min(self.levels.len() - 1) {
                    self.recompute_orbit(k);
                }
                return Some(j);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::perm::parse_perm;

    fn group(degree: usize, gens: &[&str]) -> GroupBsgs {
        let gens: Vec<_> = gens
            .iter()
            .map(|t| parse_perm(t, degree).unwrap())
            .collect();
        GroupBsgs::new(&gens).unwrap()
    }

    #[test]
    fn s3_order() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(g.order_u128(), 6);
    }

    #[test]
    fn alt5_order_and_membership() {
        let g = group(5, &["(1 2 3)", "(3 4 5)"]);
        assert_eq!(g.order_u128(), 60);
        assert!(g.contains(&parse_perm("(1 2)(3 4)", 5).unwrap()));
        assert!(!g.contains(&parse_perm("(1 2)", 5).unwrap()));
        assert!(g.contains(&Permutation::identity(5)));
    }

    #[test]
    fn trivial_group() {
        let g = GroupBsgs::new(&[Permutation::identity(4)]).unwrap();
        assert_eq!(g.order_u128(), 1);
        assert!(g.contains(&Permutation::identity(4)));
    }

    #[test]
    fn prescribed_base_stabilizer() {
        let g = GroupBsgs::with_base(
            &[
                parse_perm("(1 2)", 4).unwrap(),
                parse_perm("(1 2 3 4)", 4).unwrap(),
            ],
            &[0],
        )
        .unwrap();
        assert_eq!(g.order_u128(), 24);
        assert_eq!(g.base()[0], 0);
        // Stabilizer of point 0 in S_4 is S_3 on the rest.
        let stab = GroupBsgs::new(&g.stabilizer_generators(1)).unwrap();
        assert_eq!(stab.order_u128(), 6);
    }

    #[test]
    fn element_enumeration_matches_order() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let elems = g.elements(1 << 20).unwrap();
        assert_eq!(elems.len(), 24);
        let mut sorted: Vec<_> = elems.iter().map(|p| p.images().to_vec()).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24, "elements must be pairwise distinct");
    }

    #[test]
    fn order_bound_enforced() {
        let gens = vec![
            parse_perm("(1 2)", 6).unwrap(),
            parse_perm("(1 2 3 4 5 6)", 6).unwrap(),
        ];
        let err = GroupBsgs::with_base_and_bound(&gens, &[], 100).unwrap_err();
        assert_eq!(err, PermGrpError::OrderBoundExceeded(720, 100));
    }

    #[test]
    fn degree_mismatch_detected() {
        let gens = vec![
            parse_perm("(1 2)", 3).unwrap(),
            parse_perm("(1 2)", 4).unwrap(),
        ];
        assert!(matches!(
            GroupBsgs::new(&gens).unwrap_err(),
            PermGrpError::DegreeMismatch(3, 4)
        ));
    }

    #[test]
    fn point_orbits_partition() {
        let g = group(6, &["(1 2 3)", "(4 5)"]);
        let orbits = g.point_orbits();
        assert_eq!(orbits, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
    }
}
