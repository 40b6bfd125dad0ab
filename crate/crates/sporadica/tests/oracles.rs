//! Independent brute-force cross-checks for the group machinery: the
//! fast structured algorithms must agree with dumb exhaustive ones on
//! groups small enough to enumerate outright.

use std::collections::{HashMap, HashSet};

use sporadica::permgrp::{
    conjugacy_classes, is_simple, parse_perm, GroupBsgs, Permutation, Simplicity,
};

fn group(degree: usize, gens: &[&str]) -> GroupBsgs {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|t| parse_perm(t, degree).unwrap())
        .collect();
    GroupBsgs::new(&gens).unwrap()
}

/// Exhaustive closure under multiplication, no stabilizer chains.
fn brute_force_elements(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

#[test]
fn bsgs_order_matches_brute_force_closure() {
    let cases: Vec<(&str, usize, Vec<&str>, u128)> = vec![
        ("S4", 4, vec!["(1 2)", "(1 2 3 4)"], 24),
        ("A5", 5, vec!["(1 2 3)", "(3 4 5)"], 60),
        ("D12", 12, vec!["(1 2 3 4 5 6 7 8 9 10 11 12)", "(2 12)(3 11)(4 10)(5 9)(6 8)"], 24),
        ("S6", 6, vec!["(1 2)", "(1 2 3 4 5 6)"], 720),
        ("A6", 6, vec!["(1 2 3)", "(2 3 4 5 6)"], 360),
        ("A7", 7, vec!["(1 2 3)", "(3 4 5 6 7)"], 2520),
    ];
    for (name, degree, gens, want) in cases {
        let g = group(degree, &gens);
        let brute = brute_force_elements(g.generators(), degree);
        assert_eq!(brute.len() as u128, want, "{name} brute-force count");
        assert_eq!(g.order_u128(), want, "{name} stabilizer-chain order");
        // and every brute-force element sifts through the chain
        for x in brute.iter().take(200) {
            assert!(g.contains(x), "{name}: element rejected by the chain");
        }
    }
}

#[test]
fn class_sizes_by_full_conjugation() {
    // S4: conjugate every element by every element, no orbit tricks
    let g = group(4, &["(1 2)", "(1 2 3 4)"]);
    let elements = brute_force_elements(g.generators(), 4);
    let mut sizes: HashMap<Permutation, HashSet<Permutation>> = HashMap::new();
    for x in &elements {
        let rep = sizes
            .keys()
            .find(|r| {
                elements
                    .iter()
                    .any(|t| t.mul(x).mul(&t.inverse()) == **r)
            })
            .cloned();
        match rep {
            Some(r) => {
                sizes.get_mut(&r).unwrap().insert(x.clone());
            }
            None => {
                sizes.insert(x.clone(), HashSet::from([x.clone()]));
            }
        }
    }
    let mut brute: Vec<usize> = sizes.values().map(|c| c.len()).collect();
    brute.sort_unstable();
    assert_eq!(brute, vec![1, 3, 6, 6, 8]);

    let mut fast: Vec<usize> = conjugacy_classes(&g)
        .unwrap()
        .classes
        .iter()
        .map(|c| c.size)
        .collect();
    fast.sort_unstable();
    assert_eq!(fast, brute);
}

/// Normal subgroups are unions of conjugacy classes containing the
/// identity, with order dividing |G| and closed under products; for
/// groups this small all class unions can be tried.
fn brute_force_normal_subgroup_orders(g: &GroupBsgs) -> Vec<u128> {
    let data = conjugacy_classes(g).unwrap();
    let classes: Vec<Vec<Permutation>> = {
        let mut per_class: Vec<Vec<Permutation>> = vec![Vec::new(); data.classes.len()];
        for x in &data.elements {
            per_class[data.class_of[x]].push(x.clone());
        }
        per_class
    };
    let id_class = data
        .classes
        .iter()
        .position(|c| c.element_order == 1)
        .unwrap();
    let order = g.order_u128();
    let r = classes.len();
    let mut found = Vec::new();
    for mask in 0u32..(1 << r) {
        if mask & (1 << id_class) == 0 {
            continue;
        }
        let members: Vec<&Permutation> = (0..r)
            .filter(|k| mask & (1 << k) != 0)
            .flat_map(|k| classes[k].iter())
            .collect();
        if order % members.len() as u128 != 0 {
            continue;
        }
        let set: HashSet<&Permutation> = members.iter().copied().collect();
        if members
            .iter()
            .all(|a| members.iter().all(|b| set.contains(&a.mul(b))))
        {
            found.push(members.len() as u128);
        }
    }
    found.sort_unstable();
    found
}

#[test]
fn simplicity_against_normal_subgroup_enumeration() {
    // simple: only the trivial subgroup and the whole group
    let a5 = group(5, &["(1 2 3)", "(3 4 5)"]);
    assert_eq!(brute_force_normal_subgroup_orders(&a5), vec![1, 60]);
    assert!(matches!(is_simple(&a5).unwrap(), Simplicity::Simple));

    // x -> x+1 and x -> -1/x on the projective line over the 7-element
    // field, points 1..7 = 0..6 and 8 = infinity
    let psl27 = group(
        8,
        &["(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"],
    );
    assert_eq!(psl27.order_u128(), 168);
    assert_eq!(brute_force_normal_subgroup_orders(&psl27), vec![1, 168]);
    assert!(matches!(is_simple(&psl27).unwrap(), Simplicity::Simple));

    // not simple: A4 has the Klein subgroup, S4 has A4 and the Klein
    let a4 = group(4, &["(1 2 3)", "(2 3 4)"]);
    assert_eq!(brute_force_normal_subgroup_orders(&a4), vec![1, 4, 12]);
    let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
    assert_eq!(brute_force_normal_subgroup_orders(&s4), vec![1, 4, 12, 24]);
    for g in [&a4, &s4] {
        match is_simple(g).unwrap() {
            Simplicity::NotSimple(witness) => {
                let n = witness.order_u128();
                assert!(n > 1 && n < g.order_u128());
                assert!(brute_force_normal_subgroup_orders(g).contains(&n));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }
}
