use gyre_core::enumeration::{enumerate_asms, formula_count, to_u64};
use gyre_core::grid::{Asm, Bits, Grid, HeightFunction, IceOrientation};
use gyre_core::gyration::{gyrate, gyrate_height, gyrate_inverse, SweepOrder};
use gyre_core::BoundaryParity;
use gyre_core::EdgeColoring;
use proptest::prelude::*;
use std::collections::BTreeSet;

/// All matrices over {-1, 0, 1} of order n that satisfy the ASM conditions,
/// by checking every one of the 3^(n^2) candidates.
fn brute_force_asms(n: usize) -> BTreeSet<Vec<i8>> {
    let cells = n * n;
    let mut out = BTreeSet::new();
    for code in 0..3u64.pow(cells as u32) {
        let mut m = vec![0i8; cells];
        let mut c = code;
        for v in m.iter_mut() {
            *v = (c % 3) as i8 - 1;
            c /= 3;
        }
        let line_ok = |get: &dyn Fn(usize) -> i8| {
            let mut s = 0;
            for k in 0..n {
                s += get(k);
                if !(0..=1).contains(&s) {
                    return false;
                }
            }
            s == 1
        };
        let ok = (0..n).all(|r| line_ok(&|k| m[r * n + k]))
            && (0..n).all(|col| line_ok(&|k| m[k * n + col]));
        if ok {
            out.insert(m);
        }
    }
    out
}

fn enumerated(n: usize) -> BTreeSet<Vec<i8>> {
    enumerate_asms(n).map(|a| a.entries().to_vec()).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        let brute = brute_force_asms(n);
        assert_eq!(brute.len() as u64, to_u64(&formula_count(n)));
        assert_eq!(enumerated(n), brute, "n = {n}");
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for n in 1..=6 {
        let list: Vec<Asm> = enumerate_asms(n).collect();
        let set: BTreeSet<&Asm> = list.iter().collect();
        assert_eq!(set.len(), list.len());
        assert_eq!(list.len() as u64, to_u64(&formula_count(n)));
    }
}

/// Orientations of the grid edges with inward horizontal and outward
/// vertical boundary edges and in-degree 2 at each interior vertex, found by
/// trying every orientation of the interior edges. Each is returned with the
/// matrix read off its vertices.
fn brute_force_ice(n: usize) -> Vec<(Bits, Vec<i8>)> {
    let g = Grid::new(n);
    let m = g.num_edges();
    let mut boundary = Bits::zeros(m);
    let mut free = Vec::new();
    for y in 1..=n {
        // left boundary edge points right, right boundary edge points left
        boundary.set(g.h(0, y), true);
        boundary.set(g.h(n, y), false);
        free.extend((1..n).map(|x| g.h(x, y)));
    }
    for x in 1..=n {
        // bottom boundary edge points down, top boundary edge points up
        boundary.set(g.v(x, 0), false);
        boundary.set(g.v(x, n), true);
        free.extend((1..n).map(|y| g.v(x, y)));
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut bits = boundary.clone();
        for (k, &e) in free.iter().enumerate() {
            bits.set(e, (mask >> k) & 1 == 1);
        }
        let mut entries = vec![0i8; n * n];
        let mut ok = true;
        'vertices: for y in 1..=n {
            for x in 1..=n {
                let h_in = [!bits.get(g.h(x, y)), bits.get(g.h(x - 1, y))];
                let v_in = [!bits.get(g.v(x, y)), bits.get(g.v(x, y - 1))];
                let indeg = h_in.iter().chain(&v_in).filter(|&&b| b).count();
                if indeg != 2 {
                    ok = false;
                    break 'vertices;
                }
                entries[(n - y) * n + x - 1] = match (h_in, v_in) {
                    ([true, true], _) => 1,
                    (_, [true, true]) => -1,
                    _ => 0,
                };
            }
        }
        if ok {
            out.push((bits, entries));
        }
    }
    out
}

#[test]
fn ice_oracle() {
    for n in 1..=3 {
        let ice = brute_force_ice(n);
        assert_eq!(ice.len() as u64, to_u64(&formula_count(n)));
        let mut seen = BTreeSet::new();
        for (bits, entries) in ice {
            let o = IceOrientation::from_bits(n, bits.clone()).unwrap();
            let a = o.to_asm();
            assert_eq!(a.entries(), &entries[..]);
            assert_eq!(a.to_ice().bits(), &bits);
            seen.insert(entries);
        }
        assert_eq!(seen, enumerated(n));
    }
}

#[test]
fn coloring_oracle() {
    for n in 1..=3 {
        let g = Grid::new(n);
        // blue exactly when the orientation bit agrees with the parity of the
        // lower or left end of the edge
        for (bits, entries) in brute_force_ice(n) {
            let a = Asm::new(n, entries).unwrap();
            let c = a.to_coloring();
            for y in 1..=n {
                for x in 0..=n {
                    assert_eq!(
                        c.is_blue(g.h(x, y)),
                        bits.get(g.h(x, y)) == ((x + y) % 2 == 1)
                    );
                }
            }
            for x in 1..=n {
                for y in 0..=n {
                    assert_eq!(
                        c.is_blue(g.v(x, y)),
                        bits.get(g.v(x, y)) == ((x + y) % 2 == 1)
                    );
                }
            }
        }
        // every coloring with those boundary colors and two blue edges per
        // interior vertex comes from an ASM
        let template = Asm::identity(n).to_coloring();
        let free: Vec<usize> = (0..g.num_edges())
            .filter(|&e| {
                let (p, q) = g.edge(e).ends();
                g.is_interior(p) && g.is_interior(q)
            })
            .collect();
        let mut found = BTreeSet::new();
        for mask in 0u64..1 << free.len() {
            let mut bits = template.bits().clone();
            for (k, &e) in free.iter().enumerate() {
                bits.set(e, (mask >> k) & 1 == 1);
            }
            let degrees_ok = g
                .interior_vertices()
                .all(|p| g.incident(p).iter().filter(|(e, _)| bits.get(*e)).count() == 2);
            let parsed = EdgeColoring::from_bits(n, BoundaryParity::Standard, bits);
            assert_eq!(degrees_ok, parsed.is_ok());
            if let Ok(c) = parsed {
                found.insert(c.to_asm().unwrap().entries().to_vec());
            }
        }
        assert_eq!(found, enumerated(n));
    }
}

/// Height matrices with the fixed boundary and unit steps, by trying every
/// interior assignment in 0..=n.
fn brute_force_heights(n: usize) -> BTreeSet<Vec<i32>> {
    let w = n + 1;
    let inner = (n - 1) * (n - 1);
    let mut out = BTreeSet::new();
    for code in 0..((n + 1) as u64).pow(inner as u32) {
        let mut h = vec![0i32; w * w];
        for k in 0..=n {
            h[k] = k as i32;
            h[k * w] = k as i32;
            h[n * w + k] = (n - k) as i32;
            h[k * w + n] = (n - k) as i32;
        }
        let mut c = code;
        for r in 1..n {
            for col in 1..n {
                h[r * w + col] = (c % (n as u64 + 1)) as i32;
                c /= n as u64 + 1;
            }
        }
        let ok = (0..=n).all(|r| {
            (0..=n).all(|col| {
                (col == n || (h[r * w + col] - h[r * w + col + 1]).abs() == 1)
                    && (r == n || (h[r * w + col] - h[(r + 1) * w + col]).abs() == 1)
            })
        });
        if ok {
            out.insert(h);
        }
    }
    out
}

#[test]
fn height_oracle() {
    for n in 1..=4 {
        let brute = brute_force_heights(n);
        let ours: BTreeSet<Vec<i32>> = enumerate_asms(n)
            .map(|a| a.to_height().entries().to_vec())
            .collect();
        assert_eq!(ours, brute, "n = {n}");
        for h in &brute {
            assert!(HeightFunction::new(n, h.clone()).is_ok());
        }
    }
}

#[test]
fn round_trips_exhaustive() {
    for n in 1..=5 {
        for a in enumerate_asms(n) {
            let ice = a.to_ice();
            assert_eq!(ice.to_asm(), a);
            let c = a.to_coloring();
            assert_eq!(c.to_ice().unwrap(), ice);
            assert_eq!(ice.to_coloring(), c);
            assert_eq!(c.to_asm().unwrap(), a);
            assert_eq!(a.to_height().to_asm(), a);
            assert_eq!(Asm::new(n, a.entries().to_vec()).unwrap(), a);
        }
    }
}

#[test]
fn height_gyration_agrees_with_coloring_gyration() {
    for n in 1..=5 {
        for a in enumerate_asms(n) {
            let h = a.to_height();
            assert_eq!(
                gyrate_height(&h, SweepOrder::Forward),
                gyrate(&a).to_height()
            );
            assert_eq!(
                gyrate_height(&h, SweepOrder::Inverse),
                gyrate_inverse(&a).to_height()
            );
        }
    }
}

#[test]
fn invalid_inputs_rejected() {
    assert!(Asm::new(2, vec![1, 1, 0, 0]).is_err());
    assert!(Asm::new(3, vec![0, 1, 0, 1, -1, 1, 0, 1, -1]).is_err());
    assert!(Asm::new(0, vec![]).is_err());
    assert!(HeightFunction::from_rows(&[vec![0, 1], vec![1, 1]]).is_err());
    let g = Grid::new(2);
    assert!(IceOrientation::from_bits(2, Bits::zeros(g.num_edges())).is_err());
    let mut bits = Asm::identity(2).to_coloring().bits().clone();
    bits.flip(g.h(1, 1));
    assert!(EdgeColoring::from_bits(2, BoundaryParity::Standard, bits).is_err());
}

fn asm_of_order(n: usize) -> impl Strategy<Value = Asm> {
    let all: Vec<Asm> = enumerate_asms(n).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

/// A random ASM of order `n` reached by `steps` random local height flips
/// starting from the identity.
fn random_walk_asm(n: usize, seed: u64, steps: usize) -> Asm {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let w = n + 1;
    let mut h = Asm::identity(n).to_height().entries().to_vec();
    if n < 2 {
        return Asm::identity(n);
    }
    for _ in 0..steps {
        let (r, c) = (rng.gen_range(1..n), rng.gen_range(1..n));
        let v = h[(r - 1) * w + c];
        if h[(r + 1) * w + c] == v && h[r * w + c - 1] == v && h[r * w + c + 1] == v {
            h[r * w + c] = 2 * v - h[r * w + c];
        }
    }
    HeightFunction::new(n, h).unwrap().to_asm()
}

proptest! {
    #[test]
    fn round_trips_on_random_large_asms(n in 6usize..=8, seed in any::<u64>()) {
        let a = random_walk_asm(n, seed, 40 * n * n);
        prop_assert_eq!(a.to_ice().to_asm(), a.clone());
        prop_assert_eq!(a.to_coloring().to_ice().unwrap(), a.to_ice());
        prop_assert_eq!(a.to_coloring().to_asm().unwrap(), a.clone());
        prop_assert_eq!(a.to_height().to_asm(), a.clone());
        prop_assert_eq!(gyrate_height(&a.to_height(), SweepOrder::Forward), gyrate(&a).to_height());
        prop_assert_eq!(gyrate_inverse(&gyrate(&a)), a);
    }

    #[test]
    fn transpose_and_half_turn_are_involutions(a in (1usize..=6).prop_flat_map(asm_of_order)) {
        prop_assert_eq!(a.transposed().transposed(), a.clone());
        prop_assert_eq!(a.rotated_half_turn().rotated_half_turn(), a.clone());
        prop_assert!(Asm::new(a.n(), a.transposed().entries().to_vec()).is_ok());
    }

    #[test]
    fn height_entries_bounded(a in (1usize..=6).prop_flat_map(asm_of_order)) {
        let h = a.to_height();
        let n = a.n() as i32;
        let w = a.n() + 1;
        for (k, &v) in h.entries().iter().enumerate() {
            let (r, c) = ((k / w) as i32, (k % w) as i32);
            // within distance of both boundary values
            prop_assert!(v >= (r - c).abs() && v <= n - (n - r - c).abs());
        }
    }
}
