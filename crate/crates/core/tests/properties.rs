use proptest::prelude::*;

use cores::betaset::{a_coords, is_s_core, t_core};
use cores::coords::{a_to_z, is_self_conjugate_a, is_st_core_a, u_to_z, z_to_a, z_to_u};
use cores::enumerate::canonical_cyclic_rep;
use cores::modular::coprime;
use cores::stats::{size_from_a, size_from_c};
use cores::{ATuple, BetaSet, CTuple, Partition, ZTuple};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u64..9, 0..9).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(&v).unwrap()
    })
}

/// Zero-sum charge tuples of length `s`, i.e. all `s`-cores in a box.
fn charge(s: u64, bound: i64) -> impl Strategy<Value = CTuple> {
    prop::collection::vec(-bound..=bound, (s - 1) as usize).prop_map(|mut c| {
        let last = -c.iter().sum::<i64>();
        c.push(last);
        CTuple { c }
    })
}

fn coprime_pair(max: u64) -> impl Strategy<Value = (u64, u64)> {
    (1..=max, 1..=max).prop_filter("coprime", |&(s, t)| coprime(s, t))
}

fn core_with_pair(max: u64, bound: i64) -> impl Strategy<Value = (u64, u64, ATuple)> {
    coprime_pair(max).prop_flat_map(move |(s, t)| (Just(s), Just(t), charge(t, bound).prop_map(|c| c.to_a().unwrap())))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn hooks_survive_conjugation(p in partition()) {
        prop_assert_eq!(p.hook_lengths(), p.conjugate().hook_lengths());
    }

    #[test]
    fn beta_sets_round_trip(p in partition()) {
        let b = BetaSet::from_partition(&p);
        prop_assert_eq!(b.to_partition().unwrap(), p.clone());
        prop_assert_eq!(b.conjugate(), BetaSet::from_partition(&p.conjugate()));
    }

    #[test]
    fn diagram_and_abacus_cores_agree(p in partition(), t in 1u64..7) {
        let core = t_core(&p, t).unwrap();
        prop_assert_eq!(p.t_core_by_diagram(t).unwrap(), core.clone());
        prop_assert!(core.avoids_hook_multiples(&[t]));
        prop_assert_eq!(t_core(&core, t).unwrap(), core);
    }

    #[test]
    fn hook_count_matches_removable_beads(p in partition(), s in 1u64..7) {
        let cells = p.hook_lengths().iter().filter(|&&h| h == s).count();
        prop_assert_eq!(cells, BetaSet::from_partition(&p).count_removable(s));
    }

    #[test]
    fn push_preserves_charge(p in partition(), s in 1u64..7) {
        let b = BetaSet::from_partition(&p);
        let pushed = b.s_push(s).unwrap();
        prop_assert!(pushed.is_s_core(s));
        prop_assert_eq!(pushed.charge(s).unwrap(), b.charge(s).unwrap());
    }

    #[test]
    fn charges_and_a_coordinates_round_trip(c in (1u64..8).prop_flat_map(|s| charge(s, 5))) {
        let a = c.to_a().unwrap();
        prop_assert_eq!(a.to_c(), c.clone());
        let p = a.to_partition();
        prop_assert!(is_s_core(&p, c.modulus()));
        prop_assert_eq!(a_coords(&p, c.modulus()).unwrap(), a.clone());
        prop_assert_eq!(size_from_a(&a), p.size());
        prop_assert_eq!(size_from_c(&c), p.size());
    }

    #[test]
    fn a_and_z_round_trip((s, t, a) in core_with_pair(9, 5)) {
        let z = a_to_z(&a, s).unwrap();
        prop_assert_eq!(z_to_a(&z).unwrap(), a.clone());
        prop_assert_eq!(z.as_slice().iter().sum::<i64>(), s as i64);
        prop_assert_eq!(z.t(), t);
    }

    #[test]
    fn nonnegative_z_means_st_core((s, _t, a) in core_with_pair(7, 2)) {
        let z = a_to_z(&a, s).unwrap();
        let p = a.to_partition();
        prop_assert_eq!(z.is_nonnegative(), is_st_core_a(&a, s));
        prop_assert_eq!(z.is_nonnegative(), p.avoids_hook_multiples(&[s]));
    }

    #[test]
    fn symmetry_in_z_is_self_conjugacy((s, _t, a) in core_with_pair(9, 3)) {
        let z = a_to_z(&a, s).unwrap();
        prop_assert_eq!(z.is_symmetric(), is_self_conjugate_a(&a));
        prop_assert_eq!(z.is_symmetric(), a.to_partition().is_self_conjugate());
        prop_assert_eq!(a.conjugate().to_partition(), a.to_partition().conjugate());
    }

    #[test]
    fn u_and_z_round_trip(
        ((s, t), raw) in (coprime_pair(9), prop::collection::vec(-4i64..=4, 5))
    ) {
        let len = (t / 2) as usize;
        let mut u: Vec<i64> = raw.into_iter().cycle().take(len).collect();
        u.push((s / 2) as i64 - u.iter().sum::<i64>());
        let z = u_to_z(&u, t, s).unwrap();
        prop_assert!(z.is_symmetric());
        let back = z_to_u(&z).unwrap();
        prop_assert_eq!(back.as_slice(), &u[..]);
    }

    #[test]
    fn exactly_one_rotation_is_canonical(
        ((s, t), seed) in (coprime_pair(9), prop::collection::vec(0u64..100, 9))
    ) {
        // spread s units over t slots using the seed as cut points
        let mut x = vec![0i64; t as usize];
        for unit in 0..s as usize {
            x[(seed[unit % seed.len()] as usize + unit) % t as usize] += 1;
        }
        let r = canonical_cyclic_rep(&x, s).unwrap();
        let n = x.len();
        let hits: Vec<usize> = (0..n)
            .filter(|&q| {
                let y: Vec<i64> = (0..n).map(|j| x[(q + j) % n]).collect();
                ZTuple::new(s, y).is_ok()
            })
            .collect();
        prop_assert_eq!(hits, vec![r]);
    }
}
