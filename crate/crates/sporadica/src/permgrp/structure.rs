//! Structural computations on permutation groups: orbits and stabilizers,
//! transitivity degree, derived subgroups, normal closures, conjugacy
//! classes, simplicity certification, and small-group recognition.
//!
//! Conjugacy classes are computed exhaustively as orbits of the
//! conjugation action on the full element list, so the class-size sum
//! certificate holds by construction; the order bound for that (and for
//! everything built on it) is 10^6.

use std::collections::HashMap;

use super::bsgs::{GroupBsgs, PermGrpError};
use super::perm::Permutation;

/// Certified class enumeration bound.
pub const CLASS_ORDER_BOUND: u128 = 1_000_000;

/// Per-action summary: orbit count, transitivity degree and sharpness,
/// and the orders down the point-stabilizer chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub orbit_count: usize,
    pub transitivity_degree: usize,
    pub sharp: bool,
    /// Orders of G, G_0, G_01, ... along the natural-point base.
    pub stabilizer_chain_orders: Vec<u128>,
}

/// Transitivity analysis of the natural action, using a stabilizer chain
/// with base prescribed as 0, 1, 2, ...: the group is k-transitive iff the
/// first k basic orbits have sizes n, n-1, ..., n-k+1, and sharp iff the
/// k-th stabilizer is trivial.
pub fn transitivity_degree(g: &GroupBsgs) -> Result<ActionReport, PermGrpError> {
    let n = g.degree();
    let natural: Vec<usize> = (0..n).collect();
    let chain = GroupBsgs::with_base(g.generators(), &natural)?;
    let lens = chain.basic_orbit_lengths();

    let mut k = 0;
    while k < lens.len() && k < n && lens[k] == n - k {
        k += 1;
    }
    // 0-transitive only happens for an intransitive (or trivial) action.
    let mut falling: u128 = 1;
    for i in 0..k {
        falling *= (n - i) as u128;
    }
    let sharp = k > 0 && falling == g.order_u128();

    let mut chain_orders = vec![g.order_u128()];
    let mut rem = g.order_u128();
    for &len in lens.iter() {
        rem /= len as u128;
        chain_orders.push(rem);
    }
    Ok(ActionReport {
        orbit_count: g.point_orbits().len(),
        transitivity_degree: k,
        sharp,
        stabilizer_chain_orders: chain_orders,
    })
}

/// Orbit of `x` and the point stabilizer G_x, with |orbit| * |G_x| = |G|.
pub fn orbit_stabilizer(g: &GroupBsgs, x: usize) -> Result<(Vec<usize>, GroupBsgs), PermGrpError> {
    if x >= g.degree() {
        return Err(PermGrpError::PointOutOfRange(x, g.degree()));
    }
    let chain = GroupBsgs::with_base(g.generators(), &[x])?;
    let orbit = chain.basic_orbit(0).to_vec();
    let stab = GroupBsgs::new_with_degree(&chain.stabilizer_generators(1), g.degree())?;
    Ok((orbit, stab))
}

/// Smallest normal subgroup of G containing `seeds`.
pub fn normal_closure(g: &GroupBsgs, seeds: &[Permutation]) -> Result<GroupBsgs, PermGrpError> {
    let mut gens: Vec<Permutation> = seeds
        .iter()
        .filter(|s| !s.is_identity())
        .cloned()
        .collect();
    let mut closure = GroupBsgs::new_with_degree(&gens, g.degree())?;
    loop {
        let mut grew = false;
        for conj in g.generators() {
            for i in 0..gens.len() {
                let c = conj.conjugate(&gens[i]);
                if !closure.contains(&c) {
                    gens.push(c);
                    closure = GroupBsgs::new_with_degree(&gens, g.degree())?;
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(closure);
        }
    }
}

/// Derived (commutator) subgroup: normal closure of the generator
/// commutators.
pub fn derived_subgroup(g: &GroupBsgs) -> Result<GroupBsgs, PermGrpError> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for a in gens {
        for b in gens {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
}

/// Full class data: classes plus the element-to-class index map.
pub struct ClassData {
    pub classes: Vec<ConjugacyClass>,
    pub elements: Vec<Permutation>,
    pub class_of: HashMap<Permutation, usize>,
}

/// Exhaustive conjugacy classes for |G| <= 10^6. Classes are orbits of
/// conjugation by the group generators on the complete element list, so
/// sum of class sizes = |G| holds by construction (asserted anyway).
/// Classes are sorted by (element order, size, representative images);
/// the representative is the lexicographically least class member.
pub fn conjugacy_classes(g: &GroupBsgs) -> Result<ClassData, PermGrpError> {
    let elements = g.elements(CLASS_ORDER_BOUND)?;
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let gens = g.generators();
    let inv_gens: Vec<Permutation> = gens.iter().map(|p| p.inverse()).collect();

    let mut class_id = vec![usize::MAX; elements.len()];
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..elements.len() {
        if class_id[start] != usize::MAX {
            continue;
        }
        let cid = raw_classes.len();
        let mut members = vec![start];
        class_id[start] = cid;
        let mut head = 0;
        while head < members.len() {
            let e = members[head];
            head += 1;
            for (gp, gi) in gens.iter().zip(&inv_gens) {
                let c = gp.mul(&elements[e]).mul(gi);
                let ci = index[&c];
                if class_id[ci] == usize::MAX {
                    class_id[ci] = cid;
                    members.push(ci);
                }
            }
        }
        raw_classes.push(members);
    }

    let mut classes: Vec<ConjugacyClass> = raw_classes
        .iter()
        .map(|members| {
            let rep = members
                .iter()
                .map(|&i| &elements[i])
                .min_by(|a, b| a.images().cmp(b.images()))
                .unwrap()
                .clone();
            ConjugacyClass {
                element_order: rep.order(),
                size: members.len(),
                representative: rep,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.element_order, a.size, a.representative.images()).cmp(&(
            b.element_order,
            b.size,
            b.representative.images(),
        ))
    });

    let total: usize = classes.iter().map(|c| c.size).sum();
    assert_eq!(total as u128, g.order_u128(), "class sizes must sum to |G|");

    // Rebuild the element->class map against the sorted order.
    let rep_index: HashMap<&Permutation, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (&c.representative, i))
        .collect();
    let mut sorted_of_raw = vec![usize::MAX; raw_classes.len()];
    for (raw_id, members) in raw_classes.iter().enumerate() {
        let rep = members
            .iter()
            .map(|&i| &elements[i])
            .min_by(|a, b| a.images().cmp(b.images()))
            .unwrap();
        sorted_of_raw[raw_id] = rep_index[rep];
    }
    let class_of = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), sorted_of_raw[class_id[i]]))
        .collect();

    Ok(ClassData {
        classes,
        elements,
        class_of,
    })
}

#[derive(Debug)]
pub enum Simplicity {
    Simple,
    /// A proper nontrivial normal subgroup as witness.
    NotSimple(GroupBsgs),
    /// Above the certified order bound.
    Unknown,
}

/// Certified simplicity test for |G| <= 10^6: G is simple iff the normal
/// closure of every nonidentity class representative is G. Completeness of
/// the class list is certified by the class-size sum inside
/// `conjugacy_classes`; above the bound the answer is Unknown, never a
/// guess.
pub fn is_simple(g: &GroupBsgs) -> Result<Simplicity, PermGrpError> {
    if g.order_u128() > CLASS_ORDER_BOUND {
        return Ok(Simplicity::Unknown);
    }
    if g.order_u128() == 1 {
        return Ok(Simplicity::NotSimple(GroupBsgs::new_with_degree(
            &[],
            g.degree(),
        )?));
    }
    let data = conjugacy_classes(g)?;
    for class in &data.classes {
        if class.element_order == 1 {
            continue;
        }
        let closure = normal_closure(g, std::slice::from_ref(&class.representative))?;
        if closure.order_u128() < g.order_u128() {
            return Ok(Simplicity::NotSimple(closure));
        }
    }
    Ok(Simplicity::Simple)
}

/// Structure tags recognized for groups of order <= 64.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureTag {
    /// Z_n
    Cyclic(u64),
    /// Klein Vierergruppe Z_2 x Z_2
    Klein,
    /// (Z_p)^f with f >= 2 (order p^f)
    ElementaryAbelian(u64, u32),
    /// D_n of order 2n, n >= 3
    Dihedral(u64),
    /// Dicyclic Q_m of order 4m (Q_2 is the quaternion group)
    Dicyclic(u64),
    Other,
}

/// Classify a group of order <= 64 by element-order statistics and direct
/// presentation checks.
pub fn recognize_small(g: &GroupBsgs) -> Result<StructureTag, PermGrpError> {
    let n = g.order_u128();
    if n > 64 {
        return Err(PermGrpError::OrderTooLargeFor(64));
    }
    let n = n as u64;
    let elements = g.elements(64)?;
    let orders: Vec<u64> = elements.iter().map(|e| e.order()).collect();

    if orders.iter().any(|&o| o == n) {
        return Ok(StructureTag::Cyclic(n));
    }
    let abelian = g
        .generators()
        .iter()
        .all(|a| g.generators().iter().all(|b| a.commutator(b).is_identity()));
    if abelian {
        let max_order = orders.iter().copied().max().unwrap_or(1);
        if let Some((p, f)) = crate::arith::prime_power(n) {
            if max_order == p {
                return Ok(if n == 4 {
                    StructureTag::Klein
                } else {
                    StructureTag::ElementaryAbelian(p, f)
                });
            }
        }
        return Ok(StructureTag::Other);
    }

    // Dihedral D_m (order 2m): rotation r of order m plus an involution
    // inverting it outside <r>.
    if n % 2 == 0 {
        let m = n / 2;
        if m >= 3 {
            if let Some(tag) = find_dihedral(&elements, &orders, m) {
                return Ok(tag);
            }
        }
    }
    // Dicyclic Q_m (order 4m): g of order 2m, a of order 4 with
    // a^2 = g^m and a g a^{-1} = g^{-1}.
    if n % 4 == 0 {
        let m = n / 4;
        if m >= 2 {
            if let Some(tag) = find_dicyclic(&elements, &orders, m) {
                return Ok(tag);
            }
        }
    }
    Ok(StructureTag::Other)
}

fn power(p: &Permutation, mut e: u64) -> Permutation {
    let mut acc = Permutation::identity(p.degree());
    let mut b = p.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        e >>= 1;
    }
    acc
}

fn cyclic_span(r: &Permutation, m: u64) -> Vec<Permutation> {
    let mut span = Vec::with_capacity(m as usize);
    let mut x = Permutation::identity(r.degree());
    for _ in 0..m {
        span.push(x.clone());
        x = x.mul(r);
    }
    span
}

fn find_dihedral(elements: &[Permutation], orders: &[u64], m: u64) -> Option<StructureTag> {
    for (r, &o) in elements.iter().zip(orders) {
        if o != m {
            continue;
        }
        let span = cyclic_span(r, m);
        let r_inv = r.inverse();
        for (s, &so) in elements.iter().zip(orders) {
            if so == 2 && !span.contains(s) && s.conjugate(r) == r_inv {
                return Some(StructureTag::Dihedral(m));
            }
        }
    }
    None
}

fn find_dicyclic(elements: &[Permutation], orders: &[u64], m: u64) -> Option<StructureTag> {
    for (r, &o) in elements.iter().zip(orders) {
        if o != 2 * m {
            continue;
        }
        let span = cyclic_span(r, 2 * m);
        let r_inv = r.inverse();
        let r_m = power(r, m);
        for (a, &ao) in elements.iter().zip(orders) {
            if ao == 4 && !span.contains(a) && a.mul(a) == r_m && a.conjugate(r) == r_inv {
                return Some(StructureTag::Dicyclic(m));
            }
        }
    }
    None
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

    fn s4() -> GroupBsgs {
        group(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn alt5() -> GroupBsgs {
        group(5, &["(1 2 3)", "(3 4 5)"])
    }

    #[test]
    fn s3_transitivity() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let report = transitivity_degree(&g).unwrap();
        assert_eq!(report.transitivity_degree, 3);
        assert!(report.sharp);
    }

    #[test]
    fn alt_n_transitivity() {
        for n in 4..=7usize {
            let a = parse_perm("(1 2 3)", n).unwrap();
            let b = if n % 2 == 1 {
                // odd n: n-cycle is even
                let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
                parse_perm(&format!("({})", cyc.join(" ")), n).unwrap()
            } else {
                let cyc: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
                parse_perm(&format!("({})", cyc.join(" ")), n).unwrap()
            };
            let g = GroupBsgs::new(&[a, b]).unwrap();
            let expected: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(g.order_u128(), expected, "Alt_{n} order");
            let report = transitivity_degree(&g).unwrap();
            assert_eq!(report.transitivity_degree, n - 2, "Alt_{n}");
            assert!(report.sharp, "Alt_{n} is sharp (n-2)-transitive");
        }
    }

    #[test]
    fn orbit_stabilizer_identity() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let (orbit, stab) = orbit_stabilizer(&g, 0).unwrap();
        assert_eq!(orbit.len(), 3);
        assert_eq!(stab.order_u128(), 2);
        assert_eq!(orbit.len() as u128 * stab.order_u128(), g.order_u128());
    }

    #[test]
    fn derived_of_s4_is_alt4() {
        let d = derived_subgroup(&s4()).unwrap();
        assert_eq!(d.order_u128(), 12);
        // index 2
        assert_eq!(s4().order_u128() / d.order_u128(), 2);
    }

    #[test]
    fn alt5_is_perfect() {
        let d = derived_subgroup(&alt5()).unwrap();
        assert_eq!(d.order_u128(), 60);
    }

    #[test]
    fn derived_of_cyclic_is_trivial() {
        let z6 = group(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(derived_subgroup(&z6).unwrap().order_u128(), 1);
    }

    #[test]
    fn klein_closure_in_s4() {
        let seed = parse_perm("(1 2)(3 4)", 4).unwrap();
        let v = normal_closure(&s4(), &[seed]).unwrap();
        assert_eq!(v.order_u128(), 4);
    }

    #[test]
    fn closure_of_identity_is_trivial() {
        let id = Permutation::identity(4);
        assert_eq!(normal_closure(&s4(), &[id]).unwrap().order_u128(), 1);
    }

    #[test]
    fn alt5_closures_are_whole_group() {
        let g = alt5();
        let data = conjugacy_classes(&g).unwrap();
        for class in data.classes.iter().filter(|c| c.element_order > 1) {
            let n = normal_closure(&g, std::slice::from_ref(&class.representative)).unwrap();
            assert_eq!(n.order_u128(), 60);
        }
    }

    #[test]
    fn s3_class_count() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(conjugacy_classes(&g).unwrap().classes.len(), 3);
    }

    #[test]
    fn s4_class_sizes() {
        let data = conjugacy_classes(&s4()).unwrap();
        let mut sizes: Vec<usize> = data.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn s5_has_seven_classes() {
        let g = group(5, &["(1 2)", "(1 2 3 4 5)"]);
        assert_eq!(g.order_u128(), 120);
        assert_eq!(conjugacy_classes(&g).unwrap().classes.len(), 7);
    }

    #[test]
    fn class_size_is_index_of_centralizer() {
        // brute-force centralizer scan as independent oracle
        let g = s4();
        let data = conjugacy_classes(&g).unwrap();
        for class in &data.classes {
            let centralizer = data
                .elements
                .iter()
                .filter(|e| e.mul(&class.representative) == class.representative.mul(e))
                .count();
            assert_eq!(class.size * centralizer, 24);
        }
    }

    #[test]
    fn simplicity_answers() {
        assert!(matches!(is_simple(&alt5()).unwrap(), Simplicity::Simple));
        match is_simple(&group(4, &["(1 2 3)", "(2 3 4)"])).unwrap() {
            Simplicity::NotSimple(w) => assert_eq!(w.order_u128(), 4),
            other => panic!("Alt_4 must not be simple, got {other:?}"),
        }
        assert!(matches!(
            is_simple(&s4()).unwrap(),
            Simplicity::NotSimple(_)
        ));
    }

    #[test]
    fn recognize_quaternion() {
        // Q_8 as a permutation group on 8 points (regular representation).
        let g = group(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert_eq!(g.order_u128(), 8);
        let elems = g.elements(64).unwrap();
        let quads = elems.iter().filter(|e| e.order() == 4).count();
        assert_eq!(quads, 6, "quaternion group has six period-4 elements");
        assert_eq!(recognize_small(&g).unwrap(), StructureTag::Dicyclic(2));
    }

    #[test]
    fn recognize_cyclic_and_klein() {
        let z5 = group(5, &["(1 2 3 4 5)"]);
        assert_eq!(recognize_small(&z5).unwrap(), StructureTag::Cyclic(5));
        let v = group(4, &["(1 2)", "(3 4)"]);
        assert_eq!(recognize_small(&v).unwrap(), StructureTag::Klein);
    }

    #[test]
    fn recognize_dihedral() {
        let d4 = group(4, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(d4.order_u128(), 8);
        assert_eq!(recognize_small(&d4).unwrap(), StructureTag::Dihedral(4));
    }

    #[test]
    fn recognize_elementary_abelian() {
        let g = group(6, &["(1 2)", "(3 4)", "(5 6)"]);
        assert_eq!(recognize_small(&g).unwrap(), StructureTag::ElementaryAbelian(2, 3));
    }
}
