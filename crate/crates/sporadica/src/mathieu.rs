//! The large Mathieu groups, constructed rather than copied in: M24 is
//! found as the automorphism group of the Golay code by a backtracking
//! search over coordinate permutations with octad forcing, M12 as the
//! stabilizer of a dodecad, and the rest of both chains as point
//! stabilizers.
//!
//! Octad forcing: once five images of an octad's points are fixed, the
//! image octad is determined (Steiner property), which both forces the
//! remaining images into it and bars every other assigned point from it.
//! This prunes the 24! tree to a few thousand nodes per automorphism.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::codes::{golay, GolayCode};
use crate::permgrp::{GroupBsgs, PermGrpError, Permutation, StructureTag};

pub const M24_ORDER: u128 = 244_823_040;
pub const M23_ORDER: u128 = 10_200_960;
pub const M22_ORDER: u128 = 443_520;
pub const M21_ORDER: u128 = 20_160;
pub const M20_ORDER: u128 = 960;
pub const M12_ORDER: u128 = 95_040;
pub const M11_ORDER: u128 = 7_920;

/// Default node budget for the automorphism search; the real build uses
/// well under a million nodes.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MathieuError {
    #[error("search budget of {0} nodes exhausted")]
    SearchBudgetExceeded(u64),
    #[error(transparent)]
    PermGrp(#[from] PermGrpError),
}

/// Backtracking search for code automorphisms with a fixed assignment
/// prefix.
struct AutoSearch<'a> {
    code: &'a GolayCode,
    /// 5-subset mask -> the unique octad containing it.
    octad_of: HashMap<u32, u32>,
    /// Octads through each point.
    by_point: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl<'a> AutoSearch<'a> {
    fn new(code: &'a GolayCode, budget: u64) -> Self {
        let octads = code.octads();
        let mut octad_of = HashMap::with_capacity(42_504);
        let mut by_point = vec![Vec::new(); 24];
        for &o in &octads {
            let pts: Vec<u32> = (0..24).filter(|&b| o >> b & 1 == 1).collect();
            for p in &pts {
                by_point[*p as usize].push(o);
            }
            for a in 0..8 {
                for b in a + 1..8 {
                    for c in b + 1..8 {
                        for d in c + 1..8 {
                            for e in d + 1..8 {
                                let m = (1u32 << pts[a])
                                    | (1 << pts[b])
                                    | (1 << pts[c])
                                    | (1 << pts[d])
                                    | (1 << pts[e]);
                                octad_of.insert(m, o);
                            }
                        }
                    }
                }
            }
        }
        AutoSearch {
            code,
            octad_of,
            by_point,
            nodes: 0,
            budget,
        }
    }

    /// Consistency of assigning sigma(k) = v on top of `state`. `assigned`
    /// and `image` masks must already include k and v.
    fn consistent(&self, sigma: &[usize; 24], assigned: u32, image: u32, k: usize) -> bool {
        for &o in &self.by_point[k] {
            let a = o & assigned;
            if a.count_ones() < 5 {
                continue;
            }
            // image of the assigned part of the octad
            let mut sa = 0u32;
            let mut bits = a;
            while bits != 0 {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                sa |= 1 << sigma[p];
            }
            // forced image octad: the one through any five image points
            let mut five = 0u32;
            let mut taken = 0;
            let mut b = sa;
            while taken < 5 {
                let p = b.trailing_zeros();
                b &= b - 1;
                five |= 1 << p;
                taken += 1;
            }
            let target = self.octad_of[&five];
            // all assigned octad points map in; nothing else maps in
            if sa & !target != 0 || image & target != sa {
                return false;
            }
        }
        true
    }

    /// First automorphism (in lexicographic image order) extending the
    /// prefix sigma(i) = prefix[i], or None if no extension exists.
    fn find(&mut self, prefix: &[usize]) -> Result<Option<Permutation>, MathieuError> {
        let mut sigma = [usize::MAX; 24];
        let mut assigned = 0u32;
        let mut image = 0u32;
        for (k, &v) in prefix.iter().enumerate() {
            if image & (1 << v) != 0 {
                return Ok(None); // repeated image in prefix
            }
            sigma[k] = v;
            assigned |= 1 << k;
            image |= 1 << v;
            if !self.consistent(&sigma, assigned, image, k) {
                return Ok(None);
            }
        }
        self.extend(&mut sigma, assigned, image, prefix.len())
    }

    fn extend(
        &mut self,
        sigma: &mut [usize; 24],
        assigned: u32,
        image: u32,
        k: usize,
    ) -> Result<Option<Permutation>, MathieuError> {
        if k == 24 {
            // octad constraints held throughout; certify on the basis
            let ok = self.code.basis().iter().all(|&b| {
                let mut w = 0u32;
                let mut bits = b;
                while bits != 0 {
                    let p = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    w |= 1 << sigma[p];
                }
                self.code.contains(w)
            });
            if !ok {
                return Ok(None);
            }
            let images: Vec<u16> = sigma.iter().map(|&v| v as u16).collect();
            return Ok(Some(Permutation::from_images(images).unwrap()));
        }
        for v in 0..24usize {
            if image & (1 << v) != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(MathieuError::SearchBudgetExceeded(self.budget));
            }
            sigma[k] = v;
            let a = assigned | (1 << k);
            let im = image | (1 << v);
            if self.consistent(sigma, a, im, k) {
                if let Some(found) = self.extend(sigma, a, im, k + 1)? {
                    return Ok(Some(found));
                }
            }
        }
        sigma[k] = usize::MAX;
        Ok(None)
    }
}

/// Build M24 as the automorphism group of the Golay code. Generators are
/// accumulated level by level: at stabilizer level i, each point not yet
/// in the basic orbit of i is tried as an image, and every automorphism
/// found extends the orbit; the build stops once the stabilizer chain
/// certifies the full order 244823040.
pub fn m24_build(budget: u64) -> Result<GroupBsgs, MathieuError> {
    let code = golay();
    let mut search = AutoSearch::new(code, budget);
    let full_base: Vec<usize> = (0..24).collect();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = GroupBsgs::with_base(&[Permutation::identity(24)], &full_base)?;

    'levels: for level in 0..24 {
        // Candidates proven unreachable at this level (exhausted search);
        // never retried.
        let mut dead = [false; 24];
        loop {
            if chain.order_u128() == M24_ORDER {
                break 'levels;
            }
            let orbit = chain.basic_orbit(level);
            let mut progressed = false;
            // Points below `level` are prefix images and cannot be hit.
            for c in level..24 {
                if dead[c] || orbit.contains(&c) {
                    continue;
                }
                let mut prefix: Vec<usize> = (0..level).collect();
                prefix.push(c);
                match search.find(&prefix)? {
                    Some(p) => {
                        gens.push(p);
                        chain = GroupBsgs::with_base(&gens, &full_base)?;
                        progressed = true;
                        break;
                    }
                    None => dead[c] = true,
                }
            }
            if !progressed {
                continue 'levels;
            }
        }
    }
    assert_eq!(
        chain.order_u128(),
        M24_ORDER,
        "stabilizer chain failed to certify the order of M24"
    );

    // Shrink to a small generating set so downstream induced actions stay
    // cheap.
    let mut kept: Vec<Permutation> = Vec::new();
    let mut span: u128 = 1;
    for g in &gens {
        if span == M24_ORDER {
            break;
        }
        let mut trial = kept.clone();
        trial.push(g.clone());
        let t = GroupBsgs::new(&trial)?;
        if t.order_u128() > span {
            span = t.order_u128();
            kept = trial;
        }
    }
    let group = GroupBsgs::new(&kept)?;
    assert_eq!(group.order_u128(), M24_ORDER);
    Ok(group)
}

fn m24_cached() -> &'static GroupBsgs {
    static M24: OnceLock<GroupBsgs> = OnceLock::new();
    M24.get_or_init(|| m24_build(DEFAULT_BUDGET).expect("default budget suffices for M24"))
}

/// The cached M24 (built on first use with the default budget).
pub fn m24() -> &'static GroupBsgs {
    m24_cached()
}

/// One group in a stabilizer chain.
pub struct ChainLink {
    pub name: &'static str,
    pub group: GroupBsgs,
}

pub struct MathieuChain {
    pub links: Vec<ChainLink>,
}

impl MathieuChain {
    pub fn orders(&self) -> Vec<u128> {
        self.links.iter().map(|l| l.group.order_u128()).collect()
    }
}

/// Build the chain of successive point stabilizers, each acting on the
/// points it actually moves: the k-th link fixes 0..k and is relabeled
/// onto the remaining degree - k points.
fn stabilizer_chain(
    top: &GroupBsgs,
    names: &[&'static str],
) -> Result<MathieuChain, MathieuError> {
    let degree = top.degree();
    let chain = GroupBsgs::with_base(top.generators(), &[0, 1, 2, 3])?;
    let mut links = Vec::new();
    for (k, name) in names.iter().copied().enumerate() {
        let gens = if k == 0 {
            top.generators().to_vec()
        } else {
            chain.stabilizer_generators(k)
        };
        let rest: Vec<usize> = (k..degree).collect();
        let gens: Vec<Permutation> = gens.iter().map(|g| g.restrict(&rest)).collect();
        links.push(ChainLink {
            name,
            group: GroupBsgs::new_with_degree(&gens, degree - k)?,
        });
    }
    Ok(MathieuChain { links })
}

/// M24 > M23 > M22 > M21 > M20 as successive point stabilizers on
/// 24, 23, 22, 21, 20 points.
pub fn chain_m24(m24: &GroupBsgs) -> Result<MathieuChain, MathieuError> {
    stabilizer_chain(m24, &["M24", "M23", "M22", "M21", "M20"])
}

/// M12 as the setwise stabilizer in M24 of the lexicographically least
/// dodecad, acting on that dodecad's 12 points.
///
/// Rather than a backtrack set-stabilizer search, the stabilizer comes
/// out of a stabilizer chain for the combined action on the 24 points
/// plus the 2576 dodecads, with the chosen dodecad's point first in the
/// base: the strong generators fixing it generate the setwise stabilizer.
pub fn m12_build(m24: &GroupBsgs) -> Result<GroupBsgs, MathieuError> {
    let code = golay();
    let mut dodecads = code.dodecads();
    dodecads.sort_unstable();
    let dodecad = dodecads[0];
    let index: HashMap<u32, usize> = dodecads.iter().enumerate().map(|(i, &d)| (d, i)).collect();

    let degree = 24 + dodecads.len();
    let combined: Vec<Permutation> = m24
        .generators()
        .iter()
        .map(|g| {
            let mut images: Vec<u16> = (0..degree as u32).map(|i| i as u16).collect();
            for p in 0..24 {
                images[p] = g.apply(p) as u16;
            }
            for (i, &d) in dodecads.iter().enumerate() {
                let mut img = 0u32;
                let mut bits = d;
                while bits != 0 {
                    let p = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    img |= 1 << g.apply(p);
                }
                images[24 + i] = (24 + index[&img]) as u16;
            }
            Permutation::from_images(images).unwrap()
        })
        .collect();

    let chain = GroupBsgs::with_base(&combined, &[24 + index[&dodecad]])?;
    let stab_gens = chain.stabilizer_generators(1);
    let points: Vec<usize> = (0..24).filter(|&p| dodecad >> p & 1 == 1).collect();
    let restricted: Vec<Permutation> = stab_gens.iter().map(|g| g.restrict(&points)).collect();
    let m12 = GroupBsgs::new_with_degree(&restricted, 12)?;

    // The restriction to the dodecad must be faithful: the setwise
    // stabilizer has index = orbit size, and no element may act trivially
    // on the dodecad's points.
    let stab_order = chain.order_u128() / chain.basic_orbit(0).len() as u128;
    assert_eq!(m12.order_u128(), stab_order, "restriction must be faithful");
    Ok(m12)
}

/// M12 > M11 > M10 > M9 > M8 as successive point stabilizers on
/// 12, 11, 10, 9, 8 points.
pub fn chain_m12(m12: &GroupBsgs) -> Result<MathieuChain, MathieuError> {
    stabilizer_chain(m12, &["M12", "M11", "M10", "M9", "M8"])
}

/// The terminal M8 is the quaternion group.
pub fn m8_is_quaternion(m8: &GroupBsgs) -> Result<bool, PermGrpError> {
    Ok(crate::permgrp::recognize_small(m8)? == StructureTag::Dicyclic(2))
}
