//! Property-based checks on the serialization layers and the series
//! arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;

use sporadica::codes;
use sporadica::gfq::make_field;
use sporadica::matgrp::ProjectiveSpace;
use sporadica::moonshine::IntSeries;
use sporadica::permgrp::{format_cycles, parse_perm, Permutation};

fn series(coeffs: Vec<i64>, lead: i64) -> IntSeries {
    IntSeries::from_coeffs(lead, coeffs.into_iter().map(BigInt::from).collect())
}

proptest! {
    #[test]
    fn series_multiplication_associates(
        a in prop::collection::vec(-50i64..50, 1..8),
        b in prop::collection::vec(-50i64..50, 1..8),
        c in prop::collection::vec(-50i64..50, 1..8),
        la in -2i64..3,
        lb in -2i64..3,
        lc in -2i64..3,
    ) {
        let (a, b, c) = (series(a, la), series(b, lb), series(c, lc));
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        prop_assert_eq!(left.trunc, right.trunc);
        let low = left.lead.min(right.lead);
        for n in low..=left.trunc {
            prop_assert_eq!(left.coeff(n), right.coeff(n), "q^{}", n);
        }
    }

    #[test]
    fn series_division_inverts_multiplication(
        a in prop::collection::vec(-50i64..50, 1..8),
        b in prop::collection::vec(-50i64..50, 0..7),
        unit in prop::sample::select(vec![-1i64, 1]),
    ) {
        // divisor with a unit leading coefficient
        let mut d = vec![unit];
        d.extend(b);
        let (a, d) = (series(a, 0), series(d, 0));
        let quotient = a.mul(&d).div(&d).unwrap();
        for n in 0..=quotient.trunc {
            prop_assert_eq!(quotient.coeff(n), a.coeff(n.min(a.trunc)), "q^{}", n);
        }
    }

    #[test]
    fn permutation_text_round_trip(images in prop::collection::vec(0usize..12, 12..=12)) {
        // turn an arbitrary image list into a permutation by ranking
        let mut order: Vec<usize> = (0..12).collect();
        order.sort_by_key(|&i| (images[i], i));
        let mut imgs = vec![0u16; 12];
        for (rank, &i) in order.iter().enumerate() {
            imgs[i] = rank as u16;
        }
        let p = Permutation::from_images(imgs).unwrap();
        let text = format_cycles(&p);
        let back = parse_perm(&text, 12).unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn golay_word_text_round_trip(w in 0u32..(1 << 24)) {
        let text = codes::format_word(w);
        prop_assert_eq!(codes::parse_word(&text).unwrap(), w);
    }

    #[test]
    fn projective_canonical_form_is_scale_invariant(
        v in prop::collection::vec(0u64..9, 3..=3),
        scale in 1u64..9,
    ) {
        let field = make_field(3, 2).unwrap();
        prop_assume!(v.iter().any(|&c| c != 0));
        let space = ProjectiveSpace::new(&field, 3).unwrap();
        let vec_el: Vec<_> = v.iter().map(|&c| field.element(c)).collect();
        let s = field.element(scale);
        let scaled: Vec<_> = vec_el.iter().map(|&c| field.mul(c, s)).collect();
        let canon = space.canonicalize(&field, &vec_el);
        prop_assert_eq!(space.canonicalize(&field, &scaled), canon.clone());
        // canonical form is a fixed point
        let canon_el: Vec<_> = canon.iter().map(|&c| field.element(c)).collect();
        prop_assert_eq!(space.canonicalize(&field, &canon_el), canon);
    }
}
