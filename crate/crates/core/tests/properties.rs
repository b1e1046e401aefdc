//! Algebraic laws on random moduli.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use zmod::{
    complement, enumerate_idempotents, factor, from_support, is_nilpotent, join,
    lift_by_projection, lift_idempotent, meet, support, xor_add, Residue,
};

fn residues(m: u64) -> Vec<Residue> {
    let f = factor(&BigUint::from(m)).unwrap();
    enumerate_idempotents(&f)
        .unwrap()
        .members()
        .iter()
        .map(|v| Residue::from_natural(v, f.modulus()).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_stay_in_the_enumerated_set(m in 1u64..200_000, i in any::<usize>(), j in any::<usize>()) {
        let all = residues(m);
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        for r in [meet(a, b).unwrap(), join(a, b).unwrap(), xor_add(a, b).unwrap(), complement(a).unwrap()] {
            prop_assert!(all.contains(&r));
        }
        prop_assert_eq!(complement(&complement(a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(xor_add(a, b).unwrap(), join(&meet(a, &complement(b).unwrap()).unwrap(),
                                                      &meet(&complement(a).unwrap(), b).unwrap()).unwrap());
    }

    #[test]
    fn support_is_a_lattice_isomorphism(m in 1u64..200_000, i in any::<usize>(), j in any::<usize>()) {
        let f = factor(&BigUint::from(m)).unwrap();
        let all = residues(m);
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let (sa, sb) = (support(a, &f).unwrap(), support(b, &f).unwrap());
        prop_assert_eq!(support(&meet(a, b).unwrap(), &f).unwrap(), &sa & &sb);
        prop_assert_eq!(support(&join(a, b).unwrap(), &f).unwrap(), &sa | &sb);
        prop_assert_eq!(support(&xor_add(a, b).unwrap(), &f).unwrap(), &sa ^ &sb);
        let full: BTreeSet<usize> = (0..f.num_primes()).collect();
        prop_assert_eq!(support(&complement(a).unwrap(), &f).unwrap(), &full - &sa);
        prop_assert_eq!(from_support(&sa, &f).unwrap(), a.clone());
    }

    #[test]
    fn newton_and_projection_lifts_agree(m in 1u64..10_000_000, v in any::<u64>()) {
        let f = factor(&BigUint::from(m)).unwrap();
        let r = Residue::new(v % m, m).unwrap();
        match lift_idempotent(&r) {
            Ok(out) => {
                prop_assert_eq!(&lift_by_projection(&r, &f).unwrap(), &out.lifted);
                prop_assert!(is_nilpotent(&out.difference));
            }
            Err(_) => prop_assert!(lift_by_projection(&r, &f).is_err()),
        }
    }

    #[test]
    fn perturbing_an_idempotent_by_a_nilpotent_lifts_back(
        m in 2u64..10_000_000, i in any::<usize>(), k in any::<u64>()
    ) {
        let f = factor(&BigUint::from(m)).unwrap();
        let all = residues(m);
        let e = &all[i % all.len()];
        let rad = f.radical();
        let nil = Residue::from_natural(&(&rad * BigUint::from(k)), f.modulus()).unwrap();
        let out = lift_idempotent(&e.add(&nil).unwrap()).unwrap();
        prop_assert_eq!(&out.lifted, e);
        prop_assert_eq!(out.difference, nil);
        let c = f.max_exponent();
        let bound = if c <= 1 { 0 } else { 32 - (c - 1).leading_zeros() } + 1;
        prop_assert!(out.iterations <= bound);
    }
}
