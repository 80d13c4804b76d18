use num_bigint::BigInt;
use proptest::prelude::*;
use treemaps::{
    enumerate_all_maps, monomial_type, phi, prufer_decode, prufer_encode, set_partitions_of_range,
    Monomial, Partition, PruferCode, RangeMap, SparsePoly,
};

const VARS: usize = 3;

fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, VARS), -5i64..=5), 0..5).prop_map(
        |terms| {
            SparsePoly::from_terms(
                VARS,
                terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(c))),
            )
            .unwrap()
        },
    )
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..6).prop_map(Partition::from_parts)
}

fn code() -> impl Strategy<Value = PruferCode> {
    (2u32..10).prop_flat_map(|n| {
        prop::collection::vec(1..=n, (n - 2) as usize)
            .prop_map(move |seq| PruferCode::new(n, seq).unwrap())
    })
}

fn range_map() -> impl Strategy<Value = RangeMap> {
    (2u32..7).prop_flat_map(|n| {
        (2..=n).prop_flat_map(move |k| {
            prop::collection::vec(1..=n, (n + 1 - k) as usize)
                .prop_map(move |v| RangeMap::new(k, n, v).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(
            ab.checked_mul(&c).unwrap(),
            a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
            ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.checked_mul(&SparsePoly::one(VARS)).unwrap(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in prop::collection::vec(-3i64..=3, VARS)) {
        let pt: Vec<BigInt> = pt.into_iter().map(BigInt::from).collect();
        let prod = a.checked_mul(&b).unwrap().evaluate(&pt).unwrap();
        prop_assert_eq!(prod, a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
    }

    #[test]
    fn type_ignores_order(mut e in prop::collection::vec(0u32..5, 0..8), seed in any::<u64>()) {
        let before = monomial_type(&e);
        let len = e.len().max(1);
        e.rotate_left((seed as usize) % len);
        e.reverse();
        prop_assert_eq!(monomial_type(&e), before.clone());
        prop_assert_eq!(before.weight(), e.iter().map(|&x| x as u64).sum::<u64>());
    }

    #[test]
    fn partition_grammar_round_trip(p in partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn polynomial_json_round_trip(a in poly()) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(SparsePoly::from_json(VARS, &json).unwrap(), a);
    }

    #[test]
    fn prufer_round_trip(c in code()) {
        let tree = prufer_decode(&c);
        prop_assert_eq!(tree.edges().len() as u32, c.n() - 1);
        prop_assert_eq!(prufer_encode(&tree).unwrap(), c);
    }

    #[test]
    fn phi_is_idempotent_and_dominates(g in range_map()) {
        let f = phi(&g);
        prop_assert_eq!(phi(&f), f.clone());
        prop_assert!(f.is_monotone_above_diagonal());
        for r in g.k()..=g.n() {
            prop_assert!(f.get(r) >= r);
            prop_assert!(f.get(r) == g.get(r) || g.get(r) < r);
        }
    }
}

#[test]
fn set_partitions_cover_the_interval() {
    for n in 1..=6u32 {
        for k in 1..=n {
            for a in set_partitions_of_range(k, n).unwrap() {
                let mut all: Vec<u32> = a.blocks().iter().flatten().copied().collect();
                all.sort_unstable();
                assert_eq!(all, (k..=n).collect::<Vec<_>>());
                assert!(a.blocks().iter().all(|b| !b.is_empty()));
                assert_eq!(a.part_type().weight(), (n + 1 - k) as u64);
            }
        }
    }
}

#[test]
fn all_maps_are_counted_once() {
    assert_eq!(enumerate_all_maps(3, 5).unwrap().count(), 125);
}
