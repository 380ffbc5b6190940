use gyre_core::enumeration::{count_asms, enumerate_asms, Cap, Workers};
use gyre_core::orbits::{factorize, orbit_of, orbit_partition, order_of, NamedMap};
use gyre_core::{Asm, Error};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use std::collections::{BTreeMap, BTreeSet};

const BIG: Cap = Cap(1_000_000);

/// Orbit sizes of `map` found by walking each element with a visited set.
fn oracle_sizes(n: usize, map: NamedMap) -> BTreeMap<u64, u64> {
    let mut seen = BTreeSet::new();
    let mut sizes = BTreeMap::new();
    for a in enumerate_asms(n) {
        if seen.contains(&a) {
            continue;
        }
        let mut len = 0;
        let mut b = a.clone();
        loop {
            seen.insert(b.clone());
            len += 1;
            b = map.apply_asm(&b);
            if b == a {
                break;
            }
        }
        *sizes.entry(len).or_default() += 1;
    }
    sizes
}

#[test]
fn partitions_match_the_walk_oracle() {
    for n in 1..=5 {
        for map in NamedMap::ALL {
            for workers in [Workers(1), Workers(3)] {
                let r = orbit_partition(n, map, BIG, workers).unwrap();
                assert_eq!(r.sizes, oracle_sizes(n, map), "{map} n={n}");
                assert_eq!(BigUint::from(r.elements), count_asms(n, Workers(1)));
            }
        }
    }
}

#[test]
fn reflections_have_orbits_of_size_at_most_two() {
    for n in 1..=6 {
        for map in [NamedMap::ReflOdd, NamedMap::ReflEven] {
            let r = orbit_partition(n, map, BIG, Workers(2)).unwrap();
            assert!(r.sizes.keys().all(|&s| s <= 2));
        }
    }
}

#[test]
fn gyration_order_is_a_multiple_of_2n() {
    for n in 1..=6 {
        let g = order_of(n, NamedMap::G, BIG, Workers(4)).unwrap();
        let m = BigUint::from(2 * n as u64);
        // at n = 2 both link patterns have rotational period 2, so G has order 2
        if n >= 3 {
            assert!(g.is_multiple_of(&m), "n={n} order {g}");
        } else if n == 2 {
            assert_eq!(g, BigUint::from(2u32));
        }
        let g2n = order_of(n, NamedMap::G2n, BIG, Workers(4)).unwrap();
        // order of G^(2n) is order(G) / gcd(order(G), 2n)
        assert_eq!(g2n, &g / g.gcd(&m));
        assert_eq!(order_of(n, NamedMap::Ginv, BIG, Workers(1)).unwrap(), g);
    }
}

#[test]
fn inverse_has_the_same_orbit_structure() {
    for n in 1..=6 {
        let a = orbit_partition(n, NamedMap::G, BIG, Workers(2)).unwrap();
        let b = orbit_partition(n, NamedMap::Ginv, BIG, Workers(2)).unwrap();
        assert_eq!(a.sizes, b.sizes);
    }
}

#[test]
fn order_is_lcm_and_factorization_multiplies_back() {
    for n in 1..=6 {
        let r = orbit_partition(n, NamedMap::GnRot, BIG, Workers(2)).unwrap();
        let lcm = r
            .sizes
            .keys()
            .fold(BigUint::one(), |acc, &s| acc.lcm(&BigUint::from(s)));
        assert_eq!(r.order, lcm);
        let product = factorize(&r.order)
            .into_iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * BigUint::from(p).pow(e));
        assert_eq!(product, r.order);
    }
}

#[test]
fn single_orbit_walks() {
    let a = Asm::identity(4);
    let walk = orbit_of(&a, NamedMap::G, 1000);
    let period = walk.period().unwrap() as u64;
    let r = orbit_partition(4, NamedMap::G, BIG, Workers(1)).unwrap();
    assert!(r.sizes.contains_key(&period));
    assert_eq!(walk.states()[0], a);
    let distinct: BTreeSet<&Asm> = walk.states().iter().collect();
    assert_eq!(distinct.len() as u64, period);
    assert!(orbit_of(&a, NamedMap::G, 1).period().is_none() || period == 1);
    let order = r.order.to_u64().unwrap();
    assert_eq!(order % period, 0);
}

#[test]
fn reports_are_identical_across_worker_counts() {
    for n in 1..=6 {
        let one = orbit_partition(n, NamedMap::G, BIG, Workers(1))
            .unwrap()
            .to_text();
        let many = orbit_partition(n, NamedMap::G, BIG, Workers(5))
            .unwrap()
            .to_text();
        assert_eq!(one, many);
    }
}

#[test]
fn cap_is_enforced() {
    let e = orbit_partition(6, NamedMap::G, Cap(1000), Workers(1)).unwrap_err();
    assert!(matches!(e, Error::CapExceeded { n: 6, .. }));
}
