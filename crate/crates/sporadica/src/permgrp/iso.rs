//! Abstract isomorphism testing for permutation groups of order up to
//! 25000, independent of degree.
//!
//! The negative direction is usually settled by the class fingerprint (the
//! multiset of (element order, class size) pairs), which is an abstract
//! invariant. The positive direction searches for a generator mapping and
//! certifies it by a diagonal-subgroup order computation, so an
//! `Isomorphic` answer is never heuristic.

use std::collections::BTreeMap;

use super::bsgs::{GroupBsgs, PermGrpError};
use super::perm::Permutation;
use super::structure::{conjugacy_classes, ClassData};

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_ORDER_BOUND: u128 = 25_000;

#[derive(Debug)]
pub enum Isomorphism {
    /// Generator pairs (g_i, h_i) whose assignment extends to an
    /// isomorphism, certified by the diagonal-subgroup order.
    Isomorphic(Vec<(Permutation, Permutation)>),
    /// A human-readable distinguishing invariant.
    NotIsomorphic(String),
}

impl Isomorphism {
    pub fn holds(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic(_))
    }
}

/// (element order, class size) multiset; equal for isomorphic groups.
fn fingerprint(data: &ClassData) -> BTreeMap<(u64, usize), usize> {
    let mut fp = BTreeMap::new();
    for class in &data.classes {
        *fp.entry((class.element_order, class.size)).or_insert(0) += 1;
    }
    fp
}

/// A short generating sequence for the group, grown greedily over the
/// element list: each element that enlarges the span is kept.
fn greedy_generators(
    g: &GroupBsgs,
    data: &ClassData,
) -> Result<Vec<Permutation>, PermGrpError> {
    let target = g.order_u128();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: u128 = 1;
    // Scan class representatives first (they have high order diversity),
    // then everything else.
    let reps: Vec<&Permutation> = data
        .classes
        .iter()
        .map(|c| &c.representative)
        .chain(data.elements.iter())
        .collect();
    for cand in reps {
        if span == target {
            break;
        }
        if cand.is_identity() {
            continue;
        }
        let mut trial = gens.clone();
        trial.push(cand.clone());
        let sub = GroupBsgs::new_with_degree(&trial, g.degree())?;
        if sub.order_u128() > span {
            span = sub.order_u128();
            gens = trial;
        }
    }
    assert_eq!(span, target, "greedy generation must reach the full group");
    Ok(gens)
}

/// Embed `p` acting on the first block of a degree `a + b` point set.
fn pad_left(p: &Permutation, b: usize) -> Permutation {
    let a = p.degree();
    let mut images: Vec<u16> = (0..(a + b) as u32).map(|i| i as u16).collect();
    for i in 0..a {
        images[i] = p.apply(i) as u16;
    }
    Permutation::from_images(images).unwrap()
}

/// Embed `p` acting on the last block of a degree `a + b` point set.
fn pad_right(p: &Permutation, a: usize) -> Permutation {
    let b = p.degree();
    let mut images: Vec<u16> = (0..(a + b) as u32).map(|i| i as u16).collect();
    for i in 0..b {
        images[a + i] = (a + p.apply(i)) as u16;
    }
    Permutation::from_images(images).unwrap()
}

struct Search<'a> {
    g: &'a GroupBsgs,
    h: &'a GroupBsgs,
    g_gens: &'a [Permutation],
    /// Candidate images in H for each generator slot.
    candidates: Vec<Vec<Permutation>>,
}

impl Search<'_> {
    /// Certify a full assignment: Δ = ⟨(g_i, h_i)⟩ in G x H has order |G|
    /// exactly when the assignment extends to a homomorphism with trivial
    /// kernel; surjectivity follows from ⟨h_i⟩ = H.
    fn certify(&self, images: &[Permutation]) -> Result<bool, PermGrpError> {
        let image_group = GroupBsgs::new_with_degree(images, self.h.degree())?;
        if image_group.order_u128() != self.h.order_u128() {
            return Ok(false);
        }
        let diag: Vec<Permutation> = self
            .g_gens
            .iter()
            .zip(images)
            .map(|(a, b)| pad_left(a, self.h.degree()).mul(&pad_right(b, self.g.degree())))
            .collect();
        let delta = GroupBsgs::new_with_degree(&diag, self.g.degree() + self.h.degree())?;
        Ok(delta.order_u128() == self.g.order_u128())
    }

    /// Cheap necessary conditions on a partial assignment: word orders of
    /// pairwise products must match.
    fn compatible(&self, images: &[Permutation], k: usize) -> bool {
        let hk = &images[k];
        let gk = &self.g_gens[k];
        if hk.order() != gk.order() {
            return false;
        }
        for j in 0..k {
            let gp = self.g_gens[j].mul(gk);
            let hp = images[j].mul(hk);
            if gp.order() != hp.order() {
                return false;
            }
            let gc = self.g_gens[j].commutator(gk);
            let hc = images[j].commutator(hk);
            if gc.order() != hc.order() {
                return false;
            }
        }
        true
    }

    fn extend(&self, images: &mut Vec<Permutation>) -> Result<bool, PermGrpError> {
        let k = images.len();
        if k == self.g_gens.len() {
            return self.certify(images);
        }
        for cand in &self.candidates[k] {
            images.push(cand.clone());
            if self.compatible(images, k) && self.extend(images)? {
                return Ok(true);
            }
            images.pop();
        }
        Ok(false)
    }
}

/// Decide whether G and H are abstractly isomorphic. Errors above the
/// order bound; never returns a heuristic positive.
pub fn is_isomorphic(g: &GroupBsgs, h: &GroupBsgs) -> Result<Isomorphism, PermGrpError> {
    for grp in [g, h] {
        if grp.order_u128() > ISO_ORDER_BOUND {
            return Err(PermGrpError::OrderTooLargeFor(ISO_ORDER_BOUND));
        }
    }
    if g.order_u128() != h.order_u128() {
        return Ok(Isomorphism::NotIsomorphic(format!(
            "orders differ: {} vs {}",
            g.order_u128(),
            h.order_u128()
        )));
    }
    let g_data = conjugacy_classes(g)?;
    let h_data = conjugacy_classes(h)?;
    let g_fp = fingerprint(&g_data);
    let h_fp = fingerprint(&h_data);
    if g_fp != h_fp {
        return Ok(Isomorphism::NotIsomorphic(format!(
            "class fingerprints differ: {g_fp:?} vs {h_fp:?}"
        )));
    }

    let g_gens = greedy_generators(g, &g_data)?;

    // Candidate images per slot. For the first slot only one representative
    // per matching H-class is needed: any isomorphism can be composed with
    // an inner automorphism of H to move the first image onto a class
    // representative. Later slots range over all elements of matching
    // class fingerprint.
    let slot_candidates = |first: bool, gen: &Permutation| -> Vec<Permutation> {
        let g_class = &g_data.classes[g_data.class_of[gen]];
        let key = (g_class.element_order, g_class.size);
        if first {
            h_data
                .classes
                .iter()
                .filter(|c| (c.element_order, c.size) == key)
                .map(|c| c.representative.clone())
                .collect()
        } else {
            h_data
                .elements
                .iter()
                .filter(|e| {
                    let c = &h_data.classes[h_data.class_of[*e]];
                    (c.element_order, c.size) == key
                })
                .cloned()
                .collect()
        }
    };
    let candidates: Vec<Vec<Permutation>> = g_gens
        .iter()
        .enumerate()
        .map(|(i, gen)| slot_candidates(i == 0, gen))
        .collect();

    let search = Search {
        g,
        h,
        g_gens: &g_gens,
        candidates,
    };
    let mut images = Vec::new();
    if search.extend(&mut images)? {
        Ok(Isomorphism::Isomorphic(
            g_gens.into_iter().zip(images).collect(),
        ))
    } else {
        Ok(Isomorphism::NotIsomorphic(
            "equal class fingerprints but no generator mapping extends to an isomorphism".into(),
        ))
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
    fn cyclic_vs_klein() {
        let z4 = group(4, &["(1 2 3 4)"]);
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(!is_isomorphic(&z4, &v4).unwrap().holds());
    }

    #[test]
    fn s3_on_different_degrees() {
        let natural = group(3, &["(1 2)", "(1 2 3)"]);
        let regular = group(6, &["(1 4)(2 6)(3 5)", "(1 2 3)(4 5 6)"]);
        assert_eq!(regular.order_u128(), 6);
        let answer = is_isomorphic(&natural, &regular).unwrap();
        assert!(answer.holds(), "{answer:?}");
    }

    #[test]
    fn d4_vs_q8() {
        // Same order, same class fingerprint counts differ (D4 has five
        // involutions, Q8 has one), so the fingerprint settles it.
        let d4 = group(4, &["(1 2 3 4)", "(1 3)"]);
        let q8 = group(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert!(!is_isomorphic(&d4, &q8).unwrap().holds());
    }

    #[test]
    fn alt5_vs_psl2_4() {
        // PSL_2(4) acting on the five points of the projective line.
        let a5 = group(5, &["(1 2 3)", "(3 4 5)"]);
        let other = group(5, &["(1 2 3 4 5)", "(1 2)(3 4)"]);
        assert_eq!(other.order_u128(), 60);
        assert!(is_isomorphic(&a5, &other).unwrap().holds());
    }

    #[test]
    fn s6_inner_twist_is_still_s6() {
        // S6 in its natural action vs its action on the six cosets of a
        // transitive copy (via the outer automorphism image generators).
        let s6 = group(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        let twisted = group(
            6,
            &["(1 2)(3 4)(5 6)", "(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)", "(2 3)(4 5)"],
        );
        if twisted.order_u128() == 720 {
            assert!(is_isomorphic(&s6, &twisted).unwrap().holds());
        }
    }

    #[test]
    fn rejects_large_groups() {
        let big = group(9, &["(1 2)", "(1 2 3 4 5 6 7 8 9)"]);
        let small = group(3, &["(1 2 3)"]);
        assert!(is_isomorphic(&big, &small).is_err());
    }
}
