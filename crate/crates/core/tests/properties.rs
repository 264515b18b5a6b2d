use heis::additivity::{enumerate_h_matrices, h_class_sizes, is_h_additive, is_k_additive, HMatrix, KMatrix};
use heis::coefficients::{
    h_basis_heisenberg_product, heisenberg_coeff, heisenberg_coeff_by_sextuples, kron_coeff, lr_coeff,
};
use heis::ratfeas::StrictSystem;
use heis::{Composition, Partition};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = heis::partition::partitions_of(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(p in partition(6, 9)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn lr_symmetries(lambda in partition(4, 4), mu in partition(3, 3)) {
        if lambda.contains(&mu) {
            let k = lambda.size() - mu.size();
            for nu in heis::partition::partitions_of(k).iter() {
                let c = lr_coeff(&lambda, &mu, nu);
                prop_assert_eq!(&c, &lr_coeff(&lambda, nu, &mu));
                prop_assert_eq!(&c, &lr_coeff(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
            }
        }
    }

    #[test]
    fn kronecker_conjugation(n in 1usize..=7, seed in any::<u64>()) {
        let all = heis::partition::partitions_of(n);
        let pick = |k: u64| all[(seed.rotate_left(k as u32 * 21) % all.len() as u64) as usize].clone();
        let (l, m, v) = (pick(0), pick(1), pick(2));
        let g = kron_coeff(&l, &m, &v).unwrap();
        prop_assert_eq!(&g, &kron_coeff(&l.conjugate(), &m.conjugate(), &v).unwrap());
        prop_assert_eq!(&g, &kron_coeff(&l.conjugate(), &m, &v.conjugate()).unwrap());
    }

    #[test]
    fn heisenberg_commutes_and_matches_term_sum(mu in partition_of(3), nu in partition_of(2), extra in 0usize..=2) {
        let l = 3 + extra;
        for lambda in heis::partition::partitions_of(l).iter() {
            let h = heisenberg_coeff(lambda, &mu, &nu);
            prop_assert_eq!(&h, &heisenberg_coeff(lambda, &nu, &mu));
            prop_assert_eq!(&h, &heisenberg_coeff_by_sextuples(lambda, &mu, &nu));
        }
    }

    #[test]
    fn additivity_survives_scaling(rows in prop::collection::vec(prop::collection::vec(0usize..4, 3), 2), n in 1usize..4) {
        let mut rows = rows;
        rows[0][0] = 0;
        let a = HMatrix::new(rows.clone()).unwrap();
        prop_assert_eq!(is_h_additive(&a).unwrap().is_some(), is_h_additive(&a.scaled(n)).unwrap().is_some());
        let k = KMatrix::new(rows).unwrap();
        prop_assert_eq!(is_k_additive(&k).unwrap().is_some(), is_k_additive(&k.scaled(n)).unwrap().is_some());
    }

    #[test]
    fn solutions_satisfy_their_systems(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..6)) {
        let mut sys = StrictSystem::new(3);
        for r in rows {
            sys.push(r);
        }
        if let Some(z) = sys.solve().unwrap() {
            prop_assert!(sys.is_satisfied_by(&z));
        }
    }
}

#[test]
fn class_sizes_match_h_basis_products() {
    for beta in ["1", "2", "1,1", "2,1", "1,2", "3", "2,0,1"] {
        for gamma in ["1", "2", "1,1", "2,1", "0,2"] {
            let (b, g): (Composition, Composition) = (beta.parse().unwrap(), gamma.parse().unwrap());
            assert_eq!(
                h_class_sizes(&b, &g),
                h_basis_heisenberg_product(&b, &g),
                "{beta} / {gamma}"
            );
            let total: u64 = h_class_sizes(&b, &g).values().sum();
            assert_eq!(total as usize, enumerate_h_matrices(&b, &g).count());
        }
    }
}
