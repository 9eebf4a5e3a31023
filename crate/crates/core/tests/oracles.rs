//! The implementation checked against brute-force oracles and against values
//! frozen from those oracles.

mod common;

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::SeedableRng;

use hyparr::lattice::{betti_numbers_of, char_poly_of};
use hyparr::linalg::{smith_normal_form, IntegerMatrix};
use hyparr::{
    braid_arrangement, char_poly, fiber_type, gm_wedge, intersection_poset, mobius, CharPoly,
    IntersectionPoset,
};

// (file, flats including the ambient space, χ ascending) from the Whitney
// subset sum in `common`.
const FROZEN: &[(&str, usize, &[i64])] = &[
    ("affine_grid.arr", 6, &[2, -3, 1]),
    ("affine_triangle.arr", 7, &[3, -3, 1]),
    ("b2_reflection.arr", 6, &[3, -4, 1]),
    ("braid1.arr", 2, &[0, -1, 1]),
    ("braid2.arr", 5, &[0, 2, -3, 1]),
    ("braid3.arr", 15, &[0, -6, 11, -6, 1]),
    ("braid3_deleted.arr", 13, &[0, -4, 8, -5, 1]),
    ("complex_lines.arr", 5, &[2, -3, 1]),
    ("coordinate_lines.arr", 4, &[1, -2, 1]),
    ("empty3.arr", 1, &[0, 0, 0, 1]),
    ("generic4.arr", 12, &[-3, 6, -4, 1]),
    ("point.arr", 2, &[-1, 1]),
    ("rational_plane.arr", 2, &[0, 0, -1, 1]),
    ("three_lines.arr", 5, &[2, -3, 1]),
    ("two_points.arr", 3, &[-2, 1]),
];

fn flat_sets(p: &IntersectionPoset) -> BTreeSet<BTreeSet<usize>> {
    p.flats().iter().map(|f| f.hyperplanes.iter().collect()).collect()
}

#[test]
fn frozen_corpus_values() {
    let corpus = common::corpus();
    assert_eq!(corpus.len(), FROZEN.len());
    for ((name, a), (fname, flats, chi)) in corpus.iter().zip(FROZEN) {
        assert_eq!(name, fname);
        assert_eq!(intersection_poset(a).len(), *flats, "{name}");
        assert_eq!(char_poly(a).coeffs(), *chi, "{name}");
    }
}

#[test]
fn poset_matches_subset_enumeration() {
    for (name, a) in common::corpus() {
        let p = intersection_poset(&a);
        let brute = common::brute_force_flats(&a);
        assert_eq!(flat_sets(&p), brute.keys().cloned().collect(), "{name}");
        for f in p.flats() {
            let key: BTreeSet<usize> = f.hyperplanes.iter().collect();
            assert_eq!(p.dim(f.id), brute[&key], "{name}");
        }
    }
}

#[test]
fn char_poly_matches_whitney_sum() {
    for (name, a) in common::corpus() {
        assert_eq!(char_poly(&a).coeffs(), common::whitney_char_poly(&a), "{name}");
    }
}

#[test]
fn mobius_matches_crosscut_and_chain_counts() {
    for (name, a) in common::corpus() {
        let p = intersection_poset(&a);
        if p.len() > 30 {
            continue;
        }
        let mu = mobius(&p);
        let crosscut = common::crosscut_mobius(&a);
        for f in p.flats() {
            let key: BTreeSet<usize> = f.hyperplanes.iter().collect();
            assert_eq!(mu.get(f.id), crosscut[&key], "{name} flat {}", f.id);
            assert_eq!(mu.get(f.id), common::hall_mobius(&p, f.id), "{name} flat {}", f.id);
        }
    }
}

#[test]
fn mobius_sums_vanish() {
    for (name, a) in common::corpus() {
        let p = intersection_poset(&a);
        let mu = mobius(&p);
        for x in 1..p.len() {
            let sum: i64 = (0..p.len()).filter(|&y| p.leq(y, x)).map(|y| mu.get(y)).sum();
            assert_eq!(sum, 0, "{name} flat {x}");
        }
    }
}

#[test]
fn deletion_restriction_on_random_arrangements() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let a = common::random_arrangement(&mut rng, 3, 6);
        let chi = char_poly(&a);
        assert_eq!(chi.coeffs(), common::whitney_char_poly(&a), "{a:?}");
        for h in 0..a.len() {
            let del = char_poly(&a.deletion(h).unwrap());
            let res = char_poly(&a.restriction(h).unwrap());
            let n = del.coeffs().len().max(res.coeffs().len());
            let diff: Vec<i64> = (0..n)
                .map(|k| del.coeffs().get(k).unwrap_or(&0) - res.coeffs().get(k).unwrap_or(&0))
                .collect();
            assert_eq!(chi, CharPoly::from_coeffs(diff), "{a:?} h={h}");
        }
    }
}

fn assert_tower_factorization(name: &str, p: &IntersectionPoset) {
    if let Some(tower) = hyparr::lattice::fiber_type_of(p) {
        let n = p.ambient_dim();
        let r = tower.len();
        let roots: Vec<i64> = tower.fiber_ranks.iter().map(|&e| e as i64).collect();
        assert_eq!(char_poly_of(p), CharPoly::from_roots(n - r, &roots), "{name}");
        assert_eq!(tower.total(), p.hyperplane_count(), "{name}");
    }
}

#[test]
fn tower_ranks_factor_char_poly() {
    for (name, a) in common::corpus() {
        assert_tower_factorization(&name, &intersection_poset(&a));
    }
    let mut rng = StdRng::seed_from_u64(7);
    for i in 0..100 {
        let a = common::random_arrangement(&mut rng, 3, 6);
        assert_tower_factorization(&format!("random {i}"), &intersection_poset(&a));
    }
    for n in 1..=4 {
        assert_tower_factorization(&format!("braid {n}"), &intersection_poset(&braid_arrangement(n).unwrap()));
    }
}

#[test]
fn fiber_type_verdicts() {
    let expected = [
        ("affine_grid.arr", Some(vec![1, 2])),
        ("affine_triangle.arr", None),
        ("b2_reflection.arr", Some(vec![1, 3])),
        ("braid3.arr", Some(vec![1, 2, 3])),
        ("braid3_deleted.arr", Some(vec![1, 2, 2])),
        ("generic4.arr", None),
        ("two_points.arr", Some(vec![2])),
    ];
    let corpus = common::corpus();
    for (file, ranks) in expected {
        let a = &corpus.iter().find(|(n, _)| n == file).unwrap().1;
        assert_eq!(fiber_type(a).map(|t| t.fiber_ranks), ranks, "{file}");
    }
}

fn assert_gm_matches_betti(name: &str, a: &hyparr::Arrangement) {
    let p = intersection_poset(a);
    let gm = hyparr::topology::gm_wedge_detailed(&p).0;
    let betti = betti_numbers_of(&p);
    assert!(gm.torsion.is_empty(), "{name}");
    for (k, &b) in betti.iter().enumerate().skip(1) {
        assert_eq!(gm.count(k + 1) as u64, b, "{name} degree {k}");
    }
    assert_eq!(gm.len() as u64, betti.iter().skip(1).sum::<u64>(), "{name}");
}

#[test]
fn gm_wedge_counts_match_betti_numbers() {
    for (name, a) in common::corpus() {
        assert_gm_matches_betti(&name, &a);
    }
    let mut rng = StdRng::seed_from_u64(11);
    for i in 0..30 {
        let a = common::random_arrangement(&mut rng, 3, 6);
        assert_gm_matches_betti(&format!("random {i}"), &a);
    }
}

#[test]
fn gm_codim_one_layer_is_the_suspension_wedge() {
    for (name, a) in common::corpus() {
        let p = intersection_poset(&a);
        let (_, contributions) = hyparr::topology::gm_wedge_detailed(&p);
        let mut layer: Vec<usize> = contributions
            .iter()
            .filter(|c| c.codim == 1)
            .flat_map(|c| c.spheres.iter().copied())
            .collect();
        layer.sort_unstable();
        assert_eq!(layer, hyparr::suspension_wedge(&a).sphere_dims, "{name}");
    }
    let braid2 = braid_arrangement(2).unwrap();
    assert_eq!(gm_wedge(&braid2).sphere_dims, vec![2, 2, 2, 3, 3]);
}

#[test]
fn poset_is_invariant_under_permutation() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut inputs: Vec<hyparr::Arrangement> = common::corpus().into_iter().map(|(_, a)| a).collect();
    inputs.extend((0..20).map(|_| common::random_arrangement(&mut rng, 3, 6)));
    for a in inputs {
        let n = a.len();
        let order: Vec<usize> = (0..n).rev().collect();
        let b = a.permuted(&order);
        let pa = intersection_poset(&a);
        let pb = intersection_poset(&b);
        let relabel = |s: BTreeSet<usize>| -> BTreeSet<usize> { s.into_iter().map(|i| n - 1 - i).collect() };
        let sa: BTreeSet<_> = flat_sets(&pa).into_iter().map(relabel).collect();
        assert_eq!(sa, flat_sets(&pb));
        for x in pa.flats() {
            for y in pa.flats() {
                let fx = relabel(x.hyperplanes.iter().collect());
                let fy = relabel(y.hyperplanes.iter().collect());
                let bx = pb.flats().iter().find(|f| f.hyperplanes.iter().collect::<BTreeSet<_>>() == fx).unwrap();
                let by = pb.flats().iter().find(|f| f.hyperplanes.iter().collect::<BTreeSet<_>>() == fy).unwrap();
                assert_eq!(pa.less(x.id, y.id), pb.less(bx.id, by.id));
                assert_eq!(x.subspace, bx.subspace);
            }
        }
        assert_eq!(char_poly(&a), char_poly(&b));
    }
}

#[test]
fn flat_codims_equal_normal_ranks() {
    for (name, a) in common::corpus() {
        let p = intersection_poset(&a);
        for f in p.flats() {
            assert!(f.codim <= a.len().min(a.ambient_dim()), "{name}");
            assert_eq!(f.codim, p.normal_rank(&f.hyperplanes), "{name}");
        }
        for x in p.flats() {
            for y in p.flats() {
                let meets = common::brute_force_flats(&a)
                    .keys()
                    .any(|s| x.hyperplanes.iter().chain(y.hyperplanes.iter()).all(|h| s.contains(&h)));
                assert_eq!(p.join(x.id, y.id).is_some(), meets, "{name}");
            }
        }
    }
}

#[test]
fn braid_invariants() {
    for n in 1..=5 {
        let a = braid_arrangement(n).unwrap();
        assert_eq!(a.len(), n * (n + 1) / 2);
        let p = intersection_poset(&a);
        assert_eq!(p.rank(), n);
        assert_eq!(betti_numbers_of(&p)[1], (n * (n + 1) / 2) as u64);
    }
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    use rand::Rng;
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..200 {
        let entries: Vec<i64> = (0..9).map(|_| rng.gen_range(-6..=6)).collect();
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let m = IntegerMatrix::from_i64_rows(&rows);
        let d = smith_normal_form(&m);
        let divisors = common::determinantal_divisors(&m);
        let mut prod = num_bigint::BigInt::from(1);
        for (k, dk) in divisors.iter().enumerate() {
            if dk == &num_bigint::BigInt::from(0) {
                assert!(d[k..].iter().all(|x| x == dk), "{rows:?}");
                break;
            }
            prod *= &d[k];
            assert_eq!(&prod, dk, "{rows:?} {d:?} {divisors:?}");
        }
    }
}
