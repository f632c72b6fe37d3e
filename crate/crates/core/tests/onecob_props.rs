use cobkit_core::gen::{GenParams, Generator};
use cobkit_core::onecob::{
    compose_execution, compose_pushout, factorize1, from_matching, is_cofibration1, is_fibration1, lift1, phi_to_2cob,
    to_matching,
};
use cobkit_core::twocob::{factorize, lift};
use cobkit_core::{Cobordism1, Cobordism2};
use proptest::prelude::*;

fn gen(seed: u64) -> Generator {
    Generator::new(
        GenParams { max_circles: 8, max_components: 3, loop_rate: 0.3, ..GenParams::default() }.with_seed(seed),
    )
}

fn pair(g: &mut Generator) -> (Cobordism1, Cobordism1) {
    let (m, k) = g.signed_pair();
    let n = g.signed_target_for(&k);
    (g.cobordism1(&m, &k).unwrap(), g.cobordism1(&k, &n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn execution_agrees_with_pushout(seed in any::<u64>()) {
        let (f, h) = pair(&mut gen(seed));
        let a = compose_pushout(&f, &h).unwrap();
        let b = compose_execution(&f, &h).unwrap();
        prop_assert!(a.strict_equals(&b));
        prop_assert_eq!(a.loops(), b.loops());
    }

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut g = gen(seed);
        let (f, h) = pair(&mut g);
        let n = g.signed_target_for(h.target());
        let k = g.cobordism1(h.target(), &n).unwrap();
        let left = f.then(&h).unwrap().then(&k).unwrap();
        let right = f.then(&h.then(&k).unwrap()).unwrap();
        prop_assert!(left.strict_equals(&right));
    }

    #[test]
    fn composites_stay_valid(seed in any::<u64>()) {
        let (f, h) = pair(&mut gen(seed));
        prop_assert!(f.then(&h).unwrap().validate().is_ok());
    }

    #[test]
    fn matching_round_trip(seed in any::<u64>()) {
        let c = gen(seed).any_cobordism1();
        let back = from_matching(&to_matching(&c).unwrap(), c.source(), c.target()).unwrap();
        prop_assert!(back.strict_equals(&c));
    }

    #[test]
    fn functor_on_loop_free_composites(seed in any::<u64>()) {
        let (f, h) = pair(&mut gen(seed));
        let whole = f.then(&h).unwrap();
        let new_loops = whole.loops() - f.loops() - h.loops();
        let via = phi_to_2cob(&f).then(&phi_to_2cob(&h)).unwrap();
        prop_assert_eq!(phi_to_2cob(&whole).strict_equals(&via), new_loops == 0);
    }

    #[test]
    fn functor_preserves_identities(seed in any::<u64>()) {
        let mut g = gen(seed);
        let len = g.size();
        let s = g.signed_set(len);
        prop_assert!(phi_to_2cob(&Cobordism1::identity(&s)).strict_equals(&Cobordism2::identity(s.len())));
    }

    #[test]
    fn class_predicates_agree_with_image(seed in any::<u64>()) {
        let c = gen(seed).any_cobordism1();
        let image = phi_to_2cob(&c);
        prop_assert_eq!(is_cofibration1(&c), image.is_cofibration());
        prop_assert_eq!(is_fibration1(&c), image.is_fibration());
    }

    #[test]
    fn factorization_commutes_with_functor(seed in any::<u64>()) {
        let c = gen(seed).any_cobordism1();
        let f1 = factorize1(&c).unwrap();
        let f2 = factorize(&phi_to_2cob(&c)).unwrap();
        prop_assert!(f1.composite().unwrap().strict_equals(&c));
        prop_assert!(is_cofibration1(&f1.cofib) && is_fibration1(&f1.fib));
        prop_assert!(phi_to_2cob(&f1.cofib).strict_equals(&f2.cofib));
        prop_assert!(phi_to_2cob(&f1.fib).strict_equals(&f2.fib));
    }

    #[test]
    fn lift_recovers_planted_diagonal(seed in any::<u64>()) {
        let s = gen(seed).square1();
        let w = lift1(&s.e, &s.m, &s.u, &s.v).unwrap();
        prop_assert!(w.strict_equals(&s.w));
        let image = lift(&phi_to_2cob(&s.e), &phi_to_2cob(&s.m), &phi_to_2cob(&s.u), &phi_to_2cob(&s.v)).unwrap();
        prop_assert!(phi_to_2cob(&w).strict_equals(&image));
    }

    #[test]
    fn interchange(seed in any::<u64>()) {
        let mut g = gen(seed);
        let (f1, h1) = pair(&mut g);
        let (f2, h2) = pair(&mut g);
        let lhs = f1.disjoint_union(&f2).then(&h1.disjoint_union(&h2)).unwrap();
        let rhs = f1.then(&h1).unwrap().disjoint_union(&f2.then(&h2).unwrap());
        prop_assert!(lhs.strict_equals(&rhs));
    }
}
