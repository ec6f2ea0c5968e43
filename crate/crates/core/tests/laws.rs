//! Algebraic laws of the semigroup and of its structure maps.

use idinf::finverse::{conjugate_idempotent, f_embed, f_unembed};
use idinf::quotient::{group_image, sigma_eq, sigma_max, sigma_witness};
use idinf::semidirect::{from_semidirect, h_action, pair_to_unit, to_semidirect, units_as_pairs};
use idinf::{FinSet, Isometry, PartialIsometry, Sign};
use proptest::prelude::*;

fn isometry() -> impl Strategy<Value = Isometry> {
    (any::<bool>(), -50i64..=50).prop_map(|(neg, a)| Isometry::new(if neg { Sign::Neg } else { Sign::Pos }, a))
}

fn finset() -> impl Strategy<Value = FinSet> {
    prop::collection::vec(-50i64..=50, 0..=6).prop_map(FinSet::from)
}

fn element() -> impl Strategy<Value = PartialIsometry> {
    (isometry(), finset()).prop_map(|(g, x)| PartialIsometry::new(g, x))
}

fn idempotent() -> impl Strategy<Value = PartialIsometry> {
    finset().prop_map(PartialIsometry::idempotent)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn associative(p in element(), q in element(), r in element()) {
        let left = p.mul(&q).unwrap().mul(&r).unwrap();
        let right = p.mul(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_axioms(p in element()) {
        let inv = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&inv).unwrap().mul(&p).unwrap(), p.clone());
        prop_assert_eq!(inv.mul(&p).unwrap().mul(&inv).unwrap(), inv.clone());
        prop_assert_eq!(inv.inverse().unwrap(), p);
    }

    #[test]
    fn idempotents_commute_and_form_the_union_semilattice(e in idempotent(), f in idempotent()) {
        let ef = e.mul(&f).unwrap();
        prop_assert_eq!(&ef, &f.mul(&e).unwrap());
        prop_assert_eq!(ef.excl(), &e.excl().union(f.excl()));
        // natural order on idempotents is reverse inclusion of excluded sets
        prop_assert_eq!(e.leq(&f), e.excl().is_superset(f.excl()));
        prop_assert_eq!(e.leq(&f), e.mul(&f).unwrap() == e);
    }

    #[test]
    fn leq_is_restriction_by_an_idempotent(p in element(), q in element(), e in idempotent()) {
        let restricted = q.mul(&e).unwrap();
        prop_assert!(restricted.leq(&q));
        if p.leq(&q) {
            let (_, right) = p.idempotents().unwrap();
            prop_assert_eq!(q.mul(&right).unwrap(), p);
        }
    }

    #[test]
    fn leq_is_a_partial_order(p in element(), e in idempotent(), f in idempotent()) {
        let q = p.mul(&e).unwrap();
        let r = q.mul(&f).unwrap();
        prop_assert!(p.leq(&p));
        prop_assert!(q.leq(&p) && r.leq(&q) && r.leq(&p));
        if p.leq(&q) && q.leq(&p) {
            prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn e_unitary(p in element(), e in idempotent()) {
        if e.leq(&p) {
            prop_assert!(p.is_idempotent());
        }
        let below = p.mul(&e).unwrap();
        if below.is_idempotent() {
            prop_assert!(p.is_idempotent());
        }
    }

    #[test]
    fn group_image_is_a_homomorphism(p in element(), q in element()) {
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(group_image(&pq), group_image(&p).then(&group_image(&q)).unwrap());
    }

    #[test]
    fn sigma_is_a_congruence(p in element(), e in idempotent(), f in idempotent(), c in element()) {
        let (a, b) = (p.mul(&e).unwrap(), f.mul(&p).unwrap());
        prop_assert!(sigma_eq(&a, &b));
        let w = sigma_witness(&a, &b).unwrap();
        prop_assert_eq!(w.mul(&a).unwrap(), w.mul(&b).unwrap());
        prop_assert!(sigma_eq(&c.mul(&a).unwrap(), &c.mul(&b).unwrap()));
        prop_assert!(sigma_eq(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()));
    }

    #[test]
    fn f_inverse_and_factorizable(p in element()) {
        let top = sigma_max(&p);
        prop_assert!(p.leq(&top));
        prop_assert!(top.is_unit());
    }

    #[test]
    fn semidirect_is_an_isomorphism(p in element(), q in element()) {
        let (sp, sq) = (to_semidirect(&p).unwrap(), to_semidirect(&q).unwrap());
        prop_assert_eq!(to_semidirect(&p.mul(&q).unwrap()).unwrap(), sp.mul(&sq).unwrap());
        prop_assert_eq!(from_semidirect(&sp).unwrap(), p);
    }

    #[test]
    fn h_is_an_action_by_automorphisms(e in finset(), f in finset(), g in isometry(), h in isometry()) {
        prop_assert_eq!(
            h_action(&e.union(&f), &g).unwrap(),
            h_action(&e, &g).unwrap().union(&h_action(&f, &g).unwrap())
        );
        prop_assert_eq!(
            h_action(&e, &g.then(&h).unwrap()).unwrap(),
            h_action(&h_action(&e, &g).unwrap(), &h).unwrap()
        );
        let back = h_action(&h_action(&e, &g).unwrap(), &g.inverse().unwrap()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn f_embedding_is_an_isomorphism(p in element(), q in element()) {
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(f_embed(&pq), f_embed(&p).mul(&f_embed(&q)).unwrap());
        prop_assert_eq!(f_unembed(&f_embed(&p)).unwrap(), p.clone());
        // domain-excluded vs range-excluded data agree under E = (X)gamma
        let fe = f_embed(&p);
        let sd = to_semidirect(&p).unwrap();
        prop_assert_eq!(fe.t, sd.gamma);
        prop_assert_eq!(fe.idem_excl.image(&fe.t).unwrap(), sd.ran_excl);
    }

    #[test]
    fn conjugation_is_the_inverse_action(t in isometry(), f in finset()) {
        prop_assert_eq!(conjugate_idempotent(&t, &f).unwrap(), h_action(&f, &t.inverse().unwrap()).unwrap());
    }

    #[test]
    fn pair_encoding_is_a_group_isomorphism(g in isometry(), h in isometry()) {
        let (pg, ph) = (units_as_pairs(&g), units_as_pairs(&h));
        prop_assert_eq!(pair_to_unit(pg.mul(&ph).unwrap()), g.then(&h).unwrap());
        prop_assert_eq!(pair_to_unit(pg), g);
    }
}
