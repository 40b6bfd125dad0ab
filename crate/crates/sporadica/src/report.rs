//! The verification report: a fixed battery of checks, each comparing a
//! computed value against its expected one, with pass / fail / unknown
//! status. "unknown" is reserved for results that a budget or an
//! explicit scope bound puts out of reach; it never counts as a failure.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{self, Family};
use crate::codes::golay;
use crate::gfq::make_field;
use crate::leech;
use crate::mathieu;
use crate::matgrp;
use crate::moonshine;
use crate::permgrp::{
    conjugacy_classes, is_isomorphic, parse_perm, transitivity_degree, GroupBsgs, Isomorphism,
    Permutation, Simplicity,
};
use crate::reps;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected key=value, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key}: {value:?}")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
}

/// Runtime knobs. `seed` is accepted for interface stability; the whole
/// suite is deterministic and does not consume randomness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub budget: u64,
    pub seed: u64,
    pub terms: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budget: mathieu::DEFAULT_BUDGET,
            seed: 0,
            terms: 20,
        }
    }
}

/// Parse a `key=value` config file; `#` starts a comment. Keys:
/// budget, seed, terms.
pub fn parse_config(text: &str) -> Result<Config, ConfigError> {
    let mut config = Config::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let stripped = raw.split('#').next().unwrap().trim();
        if stripped.is_empty() {
            continue;
        }
        let Some((key, value)) = stripped.split_once('=') else {
            return Err(ConfigError::BadLine {
                line,
                text: raw.to_string(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let bad = |_| ConfigError::BadValue {
            line,
            key: key.to_string(),
            value: value.to_string(),
        };
        match key {
            "budget" => config.budget = value.parse().map_err(bad)?,
            "seed" => config.seed = value.parse().map_err(bad)?,
            "terms" => config.terms = value.parse().map_err(bad)?,
            _ => {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                })
            }
        }
    }
    Ok(config)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    /// seconds
    pub wall_time: f64,
}

enum Outcome {
    Value(String),
    Unknown(String),
}

fn val(s: impl Into<String>) -> Outcome {
    Outcome::Value(s.into())
}

struct Suite {
    results: Vec<CheckResult>,
}

impl Suite {
    fn run(&mut self, id: &str, anchor: &str, expected: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let (computed, status) = match f() {
            Outcome::Value(v) => {
                let status = if v == expected { Status::Pass } else { Status::Fail };
                (v, status)
            }
            Outcome::Unknown(why) => (why, Status::Unknown),
        };
        self.results.push(CheckResult {
            check_id: id.to_string(),
            anchor: anchor.to_string(),
            expected: expected.to_string(),
            computed,
            status,
            wall_time: start.elapsed().as_secs_f64(),
        });
    }
}

fn group(degree: usize, gens: &[&str]) -> GroupBsgs {
    let gens: Vec<Permutation> = gens
        .iter()
        .map(|t| parse_perm(t, degree).unwrap())
        .collect();
    GroupBsgs::new(&gens).unwrap()
}

fn field_axioms_ok(p: u64, f: u32) -> bool {
    let field = make_field(p, f).unwrap();
    let els: Vec<_> = field.elements().collect();
    for &a in &els {
        for &b in &els {
            if field.mul(a, b) != field.mul(b, a) || field.add(a, b) != field.add(b, a) {
                return false;
            }
        }
        if !a.is_zero() {
            let inv = field.invert(a).unwrap();
            if field.mul(a, inv) != field.one() {
                return false;
            }
        }
    }
    for &a in &els {
        for &b in &els {
            for &c in &els {
                if field.mul(a, field.mul(b, c)) != field.mul(field.mul(a, b), c)
                    || field.add(a, field.add(b, c)) != field.add(field.add(a, b), c)
                    || field.mul(a, field.add(b, c))
                        != field.add(field.mul(a, b), field.mul(a, c))
                {
                    return false;
                }
            }
        }
    }
    true
}

fn psl_group(n: usize, q: u64) -> GroupBsgs {
    let (p, f) = crate::arith::prime_power(q).unwrap();
    let field = make_field(p, f).unwrap();
    let (_, gens) = matgrp::psl_action(&field, n).unwrap();
    GroupBsgs::new(&gens).unwrap()
}

fn pgl2_group(q: u64) -> GroupBsgs {
    let (p, f) = crate::arith::prime_power(q).unwrap();
    let field = make_field(p, f).unwrap();
    let (_, gens) = matgrp::pgl2_action(&field).unwrap();
    GroupBsgs::new(&gens).unwrap()
}

fn orders_string(orders: &[u128]) -> String {
    orders
        .iter()
        .map(|o| o.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Execute the whole battery in a fixed order.
pub fn run_all(config: &Config) -> Vec<CheckResult> {
    let mut suite = Suite { results: Vec::new() };
    let s = &mut suite;

    // --- finite fields ---
    s.run(
        "field.f4_table",
        "multiplication table of the 4-element field",
        "w^2=w+1, w^3=1",
        || {
            let f4 = make_field(2, 2).unwrap();
            let w = f4.generator();
            let sq = f4.mul(w, w);
            let ok = sq == f4.add(w, f4.one()) && f4.mul(sq, w) == f4.one();
            if ok {
                val("w^2=w+1, w^3=1")
            } else {
                val("table mismatch")
            }
        },
    );
    s.run(
        "field.axioms",
        "field axioms, exhaustive over all triples",
        "10 fields ok",
        || {
            let qs = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)];
            let ok = qs.iter().filter(|&&(p, f)| field_axioms_ok(p, f)).count();
            val(format!("{ok} fields ok"))
        },
    );
    s.run(
        "field.frobenius_f9",
        "Frobenius order equals the extension degree",
        "x^(p^2)=x on F9",
        || {
            let f9 = make_field(3, 2).unwrap();
            let ok = f9
                .elements()
                .all(|a| f9.frobenius(1, f9.frobenius(1, a).unwrap()).unwrap() == a);
            if ok {
                val("x^(p^2)=x on F9")
            } else {
                val("frobenius order mismatch")
            }
        },
    );

    // --- linear groups ---
    s.run(
        "group.psl2_orders",
        "orders of PSL_2(q) on the projective line",
        "60 60 168 504 360 660 1092",
        || {
            let orders: Vec<u128> = [4u64, 5, 7, 8, 9, 11, 13]
                .iter()
                .map(|&q| psl_group(2, q).order_u128())
                .collect();
            val(orders_string(&orders))
        },
    );
    s.run(
        "group.psl34_order",
        "order of PSL_3(4)",
        "20160",
        || val(psl_group(3, 4).order_u128().to_string()),
    );
    s.run(
        "group.pgl2_sharp",
        "PGL_2(q) sharply 3-transitive on q+1 points",
        "q=5,7,9 sharp 3-transitive",
        || {
            for q in [5u64, 7, 9] {
                let g = pgl2_group(q);
                let r = transitivity_degree(&g).unwrap();
                let expect = (q + 1) as u128 * q as u128 * (q - 1) as u128;
                if r.transitivity_degree != 3 || !r.sharp || g.order_u128() != expect {
                    return val(format!("q={q} not sharp"));
                }
            }
            val("q=5,7,9 sharp 3-transitive")
        },
    );
    s.run(
        "group.alt5_simple",
        "simplicity of the alternating group on 5 letters",
        "Simple",
        || {
            let g = group(5, &["(1 2 3)", "(3 4 5)"]);
            val(discriminant_name(&crate::permgrp::is_simple(&g).unwrap()))
        },
    );
    s.run(
        "group.alt4_not_simple",
        "Alt_4 has a proper normal subgroup",
        "NotSimple",
        || {
            let g = group(4, &["(1 2 3)", "(2 3 4)"]);
            val(discriminant_name(&crate::permgrp::is_simple(&g).unwrap()))
        },
    );
    s.run(
        "group.s4_classes",
        "conjugacy class sizes of Sym_4",
        "1 3 6 6 8",
        || {
            let g = group(4, &["(1 2)", "(1 2 3 4)"]);
            let mut sizes: Vec<usize> = conjugacy_classes(&g)
                .unwrap()
                .classes
                .iter()
                .map(|c| c.size)
                .collect();
            sizes.sort_unstable();
            val(sizes
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "))
        },
    );
    s.run(
        "group.simple_under_2000",
        "the six non-Abelian simple groups below order 2000",
        "6 groups certified",
        || match catalog::verify_simple_under_2000() {
            Ok(()) => val("6 groups certified"),
            Err(e) => val(e),
        },
    );
    s.run(
        "perm.alt7_transitivity",
        "Alt_7 sharply 5-transitive on 7 points",
        "5 sharp",
        || {
            let g = group(7, &["(1 2 3)", "(3 4 5 6 7)"]);
            let r = transitivity_degree(&g).unwrap();
            val(format!(
                "{}{}",
                r.transitivity_degree,
                if r.sharp { " sharp" } else { "" }
            ))
        },
    );

    // --- Golay code ---
    s.run(
        "codes.golay_parameters",
        "lexicode parameters [24, 12, 8]",
        "4096 words, dim 12, d=8",
        || {
            let c = golay();
            val(format!(
                "{} words, dim {}, d={}",
                c.words().len(),
                c.basis().len(),
                c.min_distance()
            ))
        },
    );
    s.run(
        "codes.golay_weights",
        "weight distribution of the Golay code",
        "0:1 8:759 12:2576 16:759 24:1",
        || {
            let dist = golay().weight_distribution();
            val(dist
                .iter()
                .map(|(w, n)| format!("{w}:{n}"))
                .collect::<Vec<_>>()
                .join(" "))
        },
    );
    s.run(
        "codes.golay_steiner",
        "octads form a Steiner system on the 5-subsets",
        "42504 5-subsets covered once",
        || match golay().steiner_check() {
            Ok(n) => val(format!("{n} 5-subsets covered once")),
            Err(e) => val(e.to_string()),
        },
    );

    // --- Mathieu groups (budget-gated) ---
    let m24 = if config.budget == 0 {
        None
    } else {
        mathieu::m24_build(config.budget).ok()
    };
    let skip = || Outcome::Unknown("skipped: search budget exhausted".into());

    s.run(
        "mathieu.m24_order",
        "order of the Golay code automorphism group",
        "244823040",
        || match &m24 {
            Some(g) => val(g.order_u128().to_string()),
            None => skip(),
        },
    );
    s.run(
        "mathieu.m24_transitivity",
        "M24 acts 5-transitively on 24 points",
        "5-transitive",
        || match &m24 {
            Some(g) => {
                let r = transitivity_degree(g).unwrap();
                val(format!("{}-transitive", r.transitivity_degree))
            }
            None => skip(),
        },
    );

    let m24_chain = m24.as_ref().and_then(|g| mathieu::chain_m24(g).ok());
    s.run(
        "mathieu.m24_chain",
        "point-stabilizer chain M24 > M23 > M22 > M21 > M20",
        "244823040 10200960 443520 20160 960",
        || match &m24_chain {
            Some(c) => val(orders_string(&c.orders())),
            None => skip(),
        },
    );
    s.run(
        "mathieu.m21_is_psl34",
        "M21 is PSL_3(4), by explicit isomorphism",
        "isomorphic",
        || match &m24_chain {
            Some(c) => {
                let m21 = &c.links[3].group;
                let psl34 = psl_group(3, 4);
                match is_isomorphic(m21, &psl34).unwrap() {
                    Isomorphism::Isomorphic(_) => val("isomorphic"),
                    Isomorphism::NotIsomorphic(w) => val(format!("not isomorphic: {w}")),
                }
            }
            None => skip(),
        },
    );

    let m12 = m24.as_ref().and_then(|g| mathieu::m12_build(g).ok());
    let m12_chain = m12.as_ref().and_then(|g| mathieu::chain_m12(g).ok());
    s.run(
        "mathieu.m12_chain",
        "point-stabilizer chain M12 > M11 > M10 > M9 > M8",
        "95040 7920 720 72 8",
        || match &m12_chain {
            Some(c) => val(orders_string(&c.orders())),
            None => skip(),
        },
    );
    s.run(
        "mathieu.m12_sharp",
        "M12 sharply 5-transitive on 12 points",
        "5 sharp",
        || match &m12 {
            Some(g) => {
                let r = transitivity_degree(g).unwrap();
                val(format!(
                    "{}{}",
                    r.transitivity_degree,
                    if r.sharp { " sharp" } else { "" }
                ))
            }
            None => skip(),
        },
    );
    s.run(
        "mathieu.m8_structure",
        "the chain terminates in the quaternion group",
        "quaternion of order 8",
        || match &m12_chain {
            Some(c) => {
                let m8 = &c.links[4].group;
                match mathieu::m8_is_quaternion(m8) {
                    Ok(true) => val("quaternion of order 8"),
                    Ok(false) => val("not quaternion"),
                    Err(e) => val(e.to_string()),
                }
            }
            None => skip(),
        },
    );
    s.run(
        "mathieu.m24_simplicity",
        "simplicity of M24 itself",
        "certified",
        || Outcome::Unknown("out of certified range (class enumeration bound)".into()),
    );

    // --- Leech lattice ---
    s.run(
        "leech.minimal_vectors",
        "196560 minimal vectors by shape",
        "97152+1104+98304=196560",
        || {
            let c = leech::minimal_vector_census();
            val(format!(
                "{}+{}+{}={}",
                c.octad_type, c.pair_type, c.odd_type, c.total
            ))
        },
    );
    s.run(
        "leech.no_roots",
        "no vectors at the root norm",
        "0 vectors of norm 16",
        || val(format!("{} vectors of norm 16", leech::norm16_vector_count())),
    );

    // --- sporadic catalog ---
    s.run(
        "catalog.entries",
        "all 26 sporadic groups present",
        "26 entries",
        || val(format!("{} entries", catalog::sporadic_table().len())),
    );
    s.run(
        "catalog.global_laws",
        "every exact order divisible by 12 with >= 3 distinct primes",
        "19 exact orders pass",
        || match catalog::check_all_global_laws() {
            Ok(names) => val(format!("{} exact orders pass", names.len())),
            Err(e) => val(e.to_string()),
        },
    );
    s.run(
        "catalog.monster_order",
        "the Monster's order from its prime factorization",
        "808017424794512875886459904961710757005754368000000000",
        || {
            let t = catalog::sporadic_table();
            let m = t.iter().find(|e| e.name == "M").unwrap();
            match m.exact_order() {
                Some(o) => val(o.value.to_string()),
                None => val("no exact order"),
            }
        },
    );
    s.run(
        "catalog.monster_primes",
        "prime census of the Monster's order",
        "15 of first 20, first omitted 37",
        || {
            let c = catalog::monster_prime_census();
            val(format!(
                "{} of first 20, first omitted {}",
                c.dividing.len(),
                c.first_omitted
            ))
        },
    );
    s.run(
        "catalog.monster_dims_divide",
        "1, 196883, 21296876 divide the Monster's order",
        "all divide",
        || {
            if catalog::monster_irrep_dims_divide() {
                val("all divide")
            } else {
                val("divisibility fails")
            }
        },
    );
    s.run(
        "catalog.j4_digit_check",
        "J4 order as tabulated fails the divisibility-by-12 law",
        "flagged: not divisible by 12",
        || {
            if catalog::j4_digits_divisible_by_12() {
                val("divisible by 12")
            } else {
                val("flagged: not divisible by 12")
            }
        },
    );
    s.run(
        "catalog.co0_order",
        "order of the Leech lattice automorphism group (2.Co1)",
        "8315553613086720000",
        || val(catalog::co0_order().value.to_string()),
    );
    s.run(
        "catalog.abelian_f100",
        "Abelian groups of order p^100, one per partition",
        "190569292",
        || match catalog::abelian_count(2, 100) {
            Ok(n) => val(n.to_string()),
            Err(e) => val(e.to_string()),
        },
    );
    s.run(
        "catalog.family_orders",
        "formula orders for Zp, Alt, GL, PSL, G2",
        "7 60 11232 168 4245696",
        || {
            let parts: Vec<String> = [
                catalog::family_order(Family::Zp, 0, 7),
                catalog::family_order(Family::Alt, 5, 0),
                catalog::family_order(Family::Gl, 3, 3),
                catalog::family_order(Family::Psl, 2, 7),
                catalog::family_order(Family::G2, 0, 3),
            ]
            .into_iter()
            .map(|r| match r {
                Ok(o) => o.value.to_string(),
                Err(e) => e.to_string(),
            })
            .collect();
            val(parts.join(" "))
        },
    );

    // --- character tables ---
    s.run(
        "reps.s3_table",
        "character table of Sym_3",
        "dims 1 1 2, values exact",
        || {
            let t = reps::dixon_table(&group(3, &["(1 2)", "(1 2 3)"])).unwrap();
            let expected: [[i64; 3]; 3] = [[1, 1, 1], [1, -1, 1], [2, 0, -1]];
            let ok = t.dims == vec![1, 1, 2]
                && t.values
                    .iter()
                    .zip(expected)
                    .all(|(row, e)| row.iter().zip(e).all(|(v, x)| v.is_integer(x)));
            if ok {
                val("dims 1 1 2, values exact")
            } else {
                val("table mismatch")
            }
        },
    );
    s.run(
        "reps.s4_dims",
        "irreducible dimensions of Sym_4",
        "1 1 2 3 3",
        || {
            let t = reps::dixon_table(&group(4, &["(1 2)", "(1 2 3 4)"])).unwrap();
            val(t
                .dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" "))
        },
    );
    s.run(
        "reps.corpus",
        "Burnside + class count + divisor + orthogonality for small groups",
        "11 groups ok",
        || {
            let corpus: Vec<(&str, GroupBsgs)> = vec![
                ("Z5", group(5, &["(1 2 3 4 5)"])),
                ("Z6", group(6, &["(1 2 3 4 5 6)"])),
                ("S3", group(3, &["(1 2)", "(1 2 3)"])),
                ("D4", group(4, &["(1 2 3 4)", "(1 3)"])),
                ("Q8", group(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"])),
                ("A4", group(4, &["(1 2 3)", "(2 3 4)"])),
                ("D6", group(6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"])),
                ("S4", group(4, &["(1 2)", "(1 2 3 4)"])),
                ("F20", group(5, &["(1 2 3 4 5)", "(2 3 5 4)"])),
                ("A5", group(5, &["(1 2 3)", "(3 4 5)"])),
                ("S5", group(5, &["(1 2)", "(1 2 3 4 5)"])),
            ];
            let mut ok = 0;
            for (name, g) in &corpus {
                let t = match reps::dixon_table(g) {
                    Ok(t) => t,
                    Err(_) => return val(format!("{name} failed")),
                };
                let order = g.order_u128();
                let burnside = reps::burnside_check(order, &t.dims);
                let divisor = t.dims.iter().all(|&d| order % d as u128 == 0);
                // orthogonality is asserted inside dixon_table; re-check
                let orth = t.verify_orthogonality();
                if burnside && divisor && orth {
                    ok += 1;
                } else {
                    return val(format!("{name} failed a check"));
                }
            }
            val(format!("{ok} groups ok"))
        },
    );
    s.run(
        "reps.linear_counts",
        "number of linear characters equals the Abelianization order",
        "S4:2 A5:1 Z6:6",
        || {
            let s4 = reps::linear_char_count(&group(4, &["(1 2)", "(1 2 3 4)"])).unwrap();
            let a5 = reps::linear_char_count(&group(5, &["(1 2 3)", "(3 4 5)"])).unwrap();
            let z6 = reps::linear_char_count(&group(6, &["(1 2 3 4 5 6)"])).unwrap();
            val(format!("S4:{s4} A5:{a5} Z6:{z6}"))
        },
    );

    // --- moonshine ---
    s.run(
        "moonshine.j_coefficients",
        "q-expansion of the j-function",
        "1 744 196884 21493760",
        || {
            let j = moonshine::j_expansion(3).unwrap();
            val(format!(
                "{} {} {} {}",
                j.coeff(-1),
                j.coeff(0),
                j.coeff(1),
                j.coeff(2)
            ))
        },
    );
    s.run(
        "moonshine.j_q3",
        "frozen regression value for the q^3 coefficient",
        "864299970",
        || val(moonshine::j_expansion(3).unwrap().coeff(3).to_string()),
    );
    s.run(
        "moonshine.decompose_196884",
        "196884 = 1 + 196883",
        "1*1 + 1*196883",
        || match moonshine::moonshine_decompose(196_884) {
            Ok(m) => val(format_decomposition(&m)),
            Err(e) => val(e.to_string()),
        },
    );
    s.run(
        "moonshine.decompose_21493760",
        "21493760 = 1 + 196883 + 21296876",
        "1*1 + 1*196883 + 1*21296876",
        || match moonshine::moonshine_decompose(21_493_760) {
            Ok(m) => val(format_decomposition(&m)),
            Err(e) => val(e.to_string()),
        },
    );
    s.run(
        "moonshine.delta_routes",
        "two independent discriminant expansions agree",
        "equal to order 200",
        || {
            let a = moonshine::delta_direct(200);
            let b = moonshine::delta_eta(200);
            for n in 0..=200 {
                if a.coeff(n) != b.coeff(n) {
                    return val(format!("first mismatch at q^{n}"));
                }
            }
            val("equal to order 200")
        },
    );
    s.run(
        "moonshine.ramanujan",
        "exp(pi sqrt 163) to 32 significant digits",
        "262537412640768743.99999999999925",
        || val(moonshine::ramanujan_constant(32).unwrap()),
    );

    // --- order-720 trio ---
    s.run(
        "iso.order720_distinct",
        "Sym_6, PGL_2(9), M10: pairwise non-isomorphic at order 720",
        "3 groups, pairwise distinct",
        || {
            let s6 = group(6, &["(1 2)", "(1 2 3 4 5 6)"]);
            let pgl29 = pgl2_group(9);
            let Some(c) = &m12_chain else {
                return Outcome::Unknown("skipped: search budget exhausted".into());
            };
            let m10 = &c.links[2].group;
            for g in [&s6, &pgl29, m10] {
                if g.order_u128() != 720 {
                    return val("order mismatch");
                }
            }
            for (a, b) in [(&s6, &pgl29), (&s6, m10), (&pgl29, m10)] {
                if let Isomorphism::Isomorphic(_) = is_isomorphic(a, b).unwrap() {
                    return val("unexpected isomorphism");
                }
            }
            val("3 groups, pairwise distinct")
        },
    );
    s.run(
        "iso.pgammal29_order",
        "PGammaL_2(9) has order 1440",
        "1440",
        || {
            let f9 = make_field(3, 2).unwrap();
            let (_, gens) = matgrp::pgammal2_action(&f9).unwrap();
            val(GroupBsgs::new(&gens).unwrap().order_u128().to_string())
        },
    );

    suite.results
}

fn format_decomposition(m: &std::collections::BTreeMap<u64, u64>) -> String {
    m.iter()
        .map(|(d, k)| format!("{k}*{d}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn discriminant_name(s: &Simplicity) -> &'static str {
    match s {
        Simplicity::Simple => "Simple",
        Simplicity::NotSimple(_) => "NotSimple",
        Simplicity::Unknown => "Unknown",
    }
}

/// Human-readable report.
pub fn render(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let mark = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Unknown => "????",
        };
        let _ = writeln!(
            out,
            "[{mark}] {:<28} expected {:?}, computed {:?} ({:.3}s)",
            r.check_id, r.expected, r.computed, r.wall_time
        );
    }
    let fails = results.iter().filter(|r| r.status == Status::Fail).count();
    let unknown = results
        .iter()
        .filter(|r| r.status == Status::Unknown)
        .count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} unknown",
        results.len(),
        results.len() - fails - unknown,
        fails,
        unknown
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let c = parse_config("budget = 5\n# comment\nseed=7\n\nterms=30\n").unwrap();
        assert_eq!(
            c,
            Config {
                budget: 5,
                seed: 7,
                terms: 30
            }
        );
        assert_eq!(
            parse_config("nonsense\n"),
            Err(ConfigError::BadLine {
                line: 1,
                text: "nonsense".to_string()
            })
        );
        assert_eq!(
            parse_config("budget=1\nwhat=2\n"),
            Err(ConfigError::UnknownKey {
                line: 2,
                key: "what".to_string()
            })
        );
        assert!(matches!(
            parse_config("budget=x"),
            Err(ConfigError::BadValue { line: 1, .. })
        ));
    }

    #[test]
    fn zero_budget_marks_mathieu_unknown() {
        let config = Config {
            budget: 0,
            ..Config::default()
        };
        let results = run_all(&config);
        assert!(results.len() >= 40);
        for r in &results {
            assert_ne!(r.status, Status::Fail, "{} failed: {}", r.check_id, r.computed);
        }
        let m24 = results
            .iter()
            .find(|r| r.check_id == "mathieu.m24_order")
            .unwrap();
        assert_eq!(m24.status, Status::Unknown);
    }
}
