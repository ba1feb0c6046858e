//! Structural invariants over random inputs.

use std::sync::Arc;

use drinfeld_hecke::classification::{build_h_mu, extract_mu, scale_params, MuParams};
use drinfeld_hecke::convert::convert;
use drinfeld_hecke::format::{deformation_to_string, mu_to_string, parse_deformation, parse_mu};
use drinfeld_hecke::parameters::{random_params, Profile};
use drinfeld_hecke::pbw::{check_pbw, condition_discrepancy, kappa_is_invariant, CheckOptions};
use drinfeld_hecke::rewrite::{rank, NcSum, RewriteSystem, Strategy as Order, Token};
use drinfeld_hecke::{AlgebraElement, Deformation, FieldSpec, GroupTable, Scalar};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rationals()),
        proptest::sample::select(PRIMES.to_vec())
            .prop_map(|p| FieldSpec::with_char2_override(p).unwrap()),
    ]
}

fn mu_from(n: usize, field: FieldSpec, raw: &[i64]) -> MuParams {
    let mut it = raw.iter().cycle();
    let mut next = || field.from_i64(*it.next().unwrap());
    let mut mu = MuParams::zero(n, field);
    for i in 1..=n {
        for j in i + 1..=n {
            mu.set_a(i, j, next());
        }
    }
    for k in 1..n {
        mu.set_b(k, next());
    }
    mu.c = next();
    mu
}

fn mu_strategy(n: usize) -> impl Strategy<Value = MuParams> {
    let f = proptest::sample::select(vec![0u64, 3, 5, 7]).prop_map(|p| FieldSpec::new(p).unwrap());
    (f, proptest::collection::vec(-4i64..5, 1..12)).prop_map(move |(field, raw)| mu_from(n, field, &raw))
}

fn element_strategy(order: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    proptest::collection::vec((0..order, -3i64..4), 0..5)
}

fn element(grp: &GroupTable, raw: &[(usize, i64)]) -> AlgebraElement {
    let ids: Vec<_> = grp.ids().collect();
    AlgebraElement::from_terms(raw.iter().map(|&(g, c)| (ids[g], grp.field().from_i64(c))))
}

fn word_strategy(n: usize, order: usize) -> impl Strategy<Value = Vec<(bool, usize)>> {
    proptest::collection::vec((any::<bool>(), 0..(n.max(order))), 0..6)
}

fn word(grp: &GroupTable, raw: &[(bool, usize)]) -> Vec<Token> {
    let ids: Vec<_> = grp.ids().filter(|&g| g != grp.identity()).collect();
    raw.iter()
        .map(|&(is_v, k)| if is_v { Token::V(k % grp.n() + 1) } else { Token::G(ids[k % ids.len()]) })
        .collect()
}

fn s3(p: u64) -> Arc<GroupTable> {
    Arc::new(GroupTable::symmetric(3, FieldSpec::new(p).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(field in field_strategy(), x in -50i64..50, y in -50i64..50, z in -50i64..50) {
        let (a, b, c) = (field.from_i64(x), field.from_i64(y), field.from_i64(z));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        // Integers reduce the same way either side of the ring map.
        prop_assert_eq!(field.from_i64(x * y), &a * &b);
    }

    #[test]
    fn group_algebra_is_associative(
        p in proptest::sample::select(vec![0u64, 3, 5]),
        x in element_strategy(6), y in element_strategy(6), z in element_strategy(6),
    ) {
        let grp = s3(p);
        let (a, b, c) = (element(&grp, &x), element(&grp, &y), element(&grp, &z));
        prop_assert_eq!(a.mul(&b, &grp).mul(&c, &grp), a.mul(&b.mul(&c, &grp), &grp));
        prop_assert_eq!(a.mul(&b.add(&c), &grp), a.mul(&b, &grp).add(&a.mul(&c, &grp)));
    }

    #[test]
    fn action_is_a_left_action(g in 0usize..24, h in 0usize..24, v in proptest::collection::vec(-5i64..6, 4)) {
        let grp = GroupTable::symmetric(4, FieldSpec::new(7).unwrap()).unwrap();
        let ids: Vec<_> = grp.ids().collect();
        let (g, h) = (ids[g], ids[h]);
        let v: Vec<Scalar> = v.iter().map(|&x| grp.field().from_i64(x)).collect();
        prop_assert_eq!(grp.act(g, &grp.act(h, &v)), grp.act(grp.mul(g, h), &v));
        prop_assert_eq!(grp.act(grp.identity(), &v), v);
    }

    #[test]
    fn mu_family_is_pbw_and_round_trips(mu in mu_strategy(3)) {
        let d = build_h_mu(&mu).unwrap();
        prop_assert!(check_pbw(&d, CheckOptions::default()).unwrap().is_pbw());
        let back = extract_mu(&d).unwrap();
        prop_assert_eq!(build_h_mu(&back).unwrap(), d);
        prop_assert_eq!(back, mu);
    }

    #[test]
    fn scaling_preserves_pbw(mu in mu_strategy(3), s in -4i64..5) {
        let d = build_h_mu(&mu).unwrap();
        let scaled = scale_params(&mu.field().from_i64(s), &d);
        prop_assert!(check_pbw(&scaled, CheckOptions::default()).unwrap().is_pbw());
    }

    #[test]
    fn file_formats_round_trip(mu in mu_strategy(4)) {
        let d = build_h_mu(&mu).unwrap();
        prop_assert_eq!(parse_deformation(&deformation_to_string(&d)).unwrap(), d);
        prop_assert_eq!(parse_mu(&mu_to_string(&mu)).unwrap(), mu);
    }

    #[test]
    fn every_rule_lowers_the_rank(seed in any::<u64>(), raw in word_strategy(3, 6)) {
        let d = random_params(3, FieldSpec::new(5).unwrap(), seed, Profile::General).unwrap();
        let rs = RewriteSystem::new(d);
        let w = word(rs.group(), &raw);
        for strategy in [Order::Leftmost, Order::Rightmost] {
            if let Some(out) = rs.step(&w, strategy) {
                for (u, _) in out.terms() {
                    prop_assert!(rank(u) < rank(&w), "{:?} -> {:?}", w, u);
                }
            }
        }
    }

    #[test]
    fn reduction_order_does_not_matter_when_pbw(mu in mu_strategy(3), raw in word_strategy(3, 6)) {
        let rs = RewriteSystem::new(build_h_mu(&mu).unwrap());
        let x = NcSum::word(word(rs.group(), &raw), mu.field().one());
        let left = rs.normal_form_with(&x, Order::Leftmost).unwrap();
        let right = rs.normal_form_with(&x, Order::Rightmost).unwrap();
        prop_assert_eq!(&left, &right);
        // Normal forms are fixed points.
        let again = rs.normal_form(&left.to_sum(rs.group())).unwrap();
        prop_assert_eq!(&again, &left);
        for (u, _) in left.to_sum(rs.group()).terms() {
            prop_assert!(rs.step(u, Order::Leftmost).is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn checker_agrees_with_oracle(
        seed in any::<u64>(),
        p in proptest::sample::select(vec![0u64, 3, 5, 7]),
        profile in proptest::sample::select(Profile::ALL.to_vec()),
    ) {
        let d = random_params(3, FieldSpec::new(p).unwrap(), seed, profile).unwrap();
        let checker = check_pbw(&d, CheckOptions::default()).unwrap();
        let oracle = RewriteSystem::new(d.clone()).check_confluence().unwrap();
        prop_assert_eq!(checker.is_pbw(), oracle.confluent);
        // Witnesses are genuine failures.
        if let Some(w) = checker.witness() {
            let again = condition_discrepancy(&d, w.condition, w.g, w.h, &w.indices);
            prop_assert!(!again.is_zero());
            prop_assert_eq!(&again, &w.discrepancy);
        }
        if let Some(o) = &oracle.witness {
            prop_assert!(!o.difference().is_zero());
        }
    }

    #[test]
    fn conversion_has_invariant_kappa(mu in mu_strategy(3).prop_filter("nonmodular", |m| m.field().characteristic() != 3)) {
        let d: Deformation = build_h_mu(&mu).unwrap();
        let result = convert(&d).unwrap();
        let converted = result.converted();
        prop_assert!(kappa_is_invariant(&converted));
        prop_assert!(check_pbw(&converted, CheckOptions::default()).unwrap().is_pbw());
    }
}
