//! Structural properties checked exhaustively at small orders against the
//! independent oracles in `support`.

mod support;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use meander_lattice::meander::{lattice_geodesic, MeanderSystem};
use meander_lattice::noncross::{enumerate_nc, hasse, in_interval, NoncrossingPartition};
use meander_lattice::perm::{cayley_distance, Permutation};
use meander_lattice::surface::{build_surface, genus, MarkedPoint};

fn lattice_perms(n: usize) -> Vec<Permutation> {
    enumerate_nc(n).iter().map(|p| p.to_permutation()).collect()
}

fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

#[test]
fn distance_is_a_metric_exhaustively() {
    for n in 1..=5 {
        let (perms, _) = support::indexed_symmetric_group(n);
        let d = support::distance_matrix(&perms);
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                assert_eq!(d[i][j] == 0, a == b, "identity of indiscernibles at n={n}");
                assert_eq!(d[i][j], d[j][i], "symmetry at n={n}");
            }
        }
        for i in 0..perms.len() {
            for j in 0..perms.len() {
                for k in 0..perms.len() {
                    assert!(
                        d[i][k] <= d[i][j] + d[j][k],
                        "triangle inequality at n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn distance_is_bi_invariant() {
    for n in 1..=5 {
        let (perms, index) = support::indexed_symmetric_group(n);
        let d = support::distance_matrix(&perms);
        for g in &perms {
            for (i, a) in perms.iter().enumerate() {
                for (j, b) in perms.iter().enumerate() {
                    let left = d[index[&g.compose(a)]][index[&g.compose(b)]];
                    let right = d[index[&a.compose(g)]][index[&b.compose(g)]];
                    assert_eq!(left, d[i][j], "left invariance at n={n}");
                    assert_eq!(right, d[i][j], "right invariance at n={n}");
                }
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for n in 6..=8 {
        for _ in 0..2000 {
            let g = random_permutation(n, &mut rng);
            let a = random_permutation(n, &mut rng);
            let b = random_permutation(n, &mut rng);
            let d = cayley_distance(&a, &b);
            assert_eq!(cayley_distance(&g.compose(&a), &g.compose(&b)), d);
            assert_eq!(cayley_distance(&a.compose(&g), &b.compose(&g)), d);
        }
    }
}

#[test]
fn distance_formula_matches_graph_search() {
    for n in 1..=5 {
        let e = Permutation::identity(n);
        let reached = support::graph_distances_from(&e);
        let (perms, _) = support::indexed_symmetric_group(n);
        assert_eq!(reached.len(), perms.len(), "graph on S_{n} is connected");
        for p in &perms {
            assert_eq!(cayley_distance(&e, p), reached[p]);
        }
    }
    // The order-6 spot check: two cycles, so distance 6 - 2 = 4.
    let sigma = Permutation::parse("(1 5)(2 4 3 6)", 6).unwrap();
    let reached = support::graph_distances_from(&Permutation::identity(6));
    assert_eq!(reached[&sigma], 4);
    assert_eq!(cayley_distance(&Permutation::identity(6), &sigma), 4);
}

#[test]
fn interval_membership_matches_label_construction() {
    for n in 1..=7 {
        for p in meander_lattice::perm::all_permutations(n) {
            match NoncrossingPartition::from_permutation(&p) {
                Ok(partition) => {
                    assert!(in_interval(&p), "accepted label {p} must lie in the interval");
                    assert_eq!(partition.to_permutation(), p, "label round trip");
                }
                Err(_) => assert!(!in_interval(&p), "rejected label {p} must fall outside"),
            }
        }
    }
}

#[test]
fn duality_reverses_refinement() {
    for n in 1..=5 {
        let partitions = enumerate_nc(n);
        let duals: Vec<NoncrossingPartition> = partitions.iter().map(|p| p.dual()).collect();
        for (i, p) in partitions.iter().enumerate() {
            for (j, q) in partitions.iter().enumerate() {
                assert_eq!(p.refines(q), duals[j].refines(&duals[i]));
            }
        }
    }
}

#[test]
fn double_dual_is_conjugation_by_the_successor() {
    for n in 1..=6 {
        let s = Permutation::successor(n);
        for p in enumerate_nc(n) {
            let rotated = p.dual().dual().to_permutation();
            let conjugated = s.inverse().compose(&p.to_permutation().compose(&s));
            assert_eq!(rotated, conjugated);
        }
    }
}

#[test]
fn dual_iterated_two_n_times_is_identity() {
    for n in 1..=5 {
        for p in enumerate_nc(n) {
            let mut q = p.clone();
            for _ in 0..2 * n {
                q = q.dual();
            }
            assert_eq!(q, p);
            assert_eq!(p.dual().undual(), p);
            assert_eq!(p.undual().dual(), p);
        }
    }
}

#[test]
fn grades_of_dual_pairs_sum_to_n_minus_one() {
    for n in 1..=6 {
        for p in enumerate_nc(n) {
            assert_eq!(p.grade() + p.dual().grade(), n - 1);
        }
    }
}

#[test]
fn lattice_laws_hold_exhaustively() {
    for n in 1..=5 {
        let partitions = enumerate_nc(n);
        for p in &partitions {
            for q in &partitions {
                let join = p.join(q);
                let meet = p.meet(q);
                assert_eq!(join, q.join(p), "join commutes");
                assert_eq!(meet, q.meet(p), "meet commutes");
                assert_eq!(p.join(p), *p, "join idempotent");
                assert_eq!(p.meet(p), *p, "meet idempotent");
                assert_eq!(p.join(&meet), *p, "absorption");
                assert_eq!(p.meet(&join), *p, "absorption");
                assert_eq!(p.refines(q), join == *q, "order compatibility");
                assert_eq!(join, support::brute_lub(&partitions, p, q));
                assert_eq!(meet, support::brute_glb(&partitions, p, q));
            }
        }
    }
    // Associativity: every triple through order 4, a seeded sample at 5.
    for n in 1..=4 {
        let partitions = enumerate_nc(n);
        for a in &partitions {
            for b in &partitions {
                for c in &partitions {
                    assert_eq!(a.join(b).join(c), a.join(&b.join(c)));
                    assert_eq!(a.meet(b).meet(c), a.meet(&b.meet(c)));
                }
            }
        }
    }
    let partitions = enumerate_nc(5);
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xa550c);
    for _ in 0..2000 {
        let a = &partitions[rng.random_range(0..partitions.len())];
        let b = &partitions[rng.random_range(0..partitions.len())];
        let c = &partitions[rng.random_range(0..partitions.len())];
        assert_eq!(a.join(b).join(c), a.join(&b.join(c)));
        assert_eq!(a.meet(b).meet(c), a.meet(&b.meet(c)));
    }
}

#[test]
fn meet_is_the_common_refinement() {
    for n in 1..=5 {
        let partitions = enumerate_nc(n);
        for p in &partitions {
            for q in &partitions {
                assert_eq!(p.meet(q).blocks(), support::common_refinement(p, q));
            }
        }
    }
}

#[test]
fn hasse_edges_are_transposition_factors() {
    for n in 1..=6 {
        let graph = hasse(n);
        for &(lower, upper) in graph.edges() {
            let p = graph.vertices()[lower].to_permutation();
            let q = graph.vertices()[upper].to_permutation();
            let factor = q.compose(&p.inverse());
            assert_eq!(factor.reflection_length(), 1, "cover step is a transposition");
            assert_eq!(
                graph.vertices()[upper].grade(),
                graph.vertices()[lower].grade() + 1
            );
        }
    }
}

#[test]
fn vertex_counts_follow_the_catalan_recurrence() {
    for n in 1..=10 {
        assert_eq!(enumerate_nc(n).len() as u64, support::catalan(n));
    }
}

#[test]
fn euler_characteristic_genus_and_parity_agree() {
    for n in 1..=7 {
        let s = Permutation::successor(n);
        for p in meander_lattice::perm::all_permutations(n) {
            let g = genus(&p);
            let chi = build_surface(&p).euler_characteristic();
            assert_eq!(chi, 1 - 2 * g as i64, "chi = 1 - 2g for {p}");
            assert_eq!(g == 0, in_interval(&p), "genus detects membership for {p}");
            let defect = p.reflection_length() + cayley_distance(&p, &s) - (n - 1);
            assert_eq!(defect % 2, 0, "even defect for {p}");
        }
    }
}

#[test]
fn boundary_is_a_single_circle_visiting_points_in_order() {
    for n in 1..=6 {
        let expected: Vec<MarkedPoint> = (1..=n)
            .flat_map(|i| [MarkedPoint::Odd(i), MarkedPoint::Even(i)])
            .collect();
        for p in meander_lattice::perm::all_permutations(n) {
            let trace = build_surface(&p).boundary_components();
            assert_eq!(trace.components, 1, "single boundary circle for {p}");
            let order = trace.marked_order.expect("single circle has an order");
            let start = order
                .iter()
                .position(|&m| m == MarkedPoint::Odd(1))
                .expect("⌐1 appears");
            let rotated: Vec<MarkedPoint> = order[start..]
                .iter()
                .chain(&order[..start])
                .copied()
                .collect();
            assert_eq!(rotated, expected, "marked order for {p}");
        }
    }
}

#[test]
fn glued_surfaces_are_connected() {
    for n in 1..=6 {
        for p in meander_lattice::perm::all_permutations(n) {
            let surface = build_surface(&p);
            surface.check_gluing().unwrap();
            assert!(surface.is_connected(), "surface of {p} is connected");
        }
    }
}

#[test]
fn separation_measures_tell_one_story() {
    for n in 1..=6 {
        let graph = hasse(n);
        let labels = lattice_perms(n);
        for (i, upper) in labels.iter().enumerate() {
            let row = graph.bfs_distances(i);
            let inverse = upper.inverse();
            for (j, lower) in labels.iter().enumerate() {
                let k = inverse.compose(lower).cycle_count();
                assert_eq!(cayley_distance(upper, lower), n - k);
                assert_eq!(row[j], n - k);
            }
        }
    }
}

#[test]
fn components_match_the_curve_tracing_oracle() {
    for n in 1..=5 {
        let labels = lattice_perms(n);
        for upper in &labels {
            for lower in &labels {
                let m = MeanderSystem::new(upper.clone(), lower.clone()).unwrap();
                assert_eq!(m.components(), support::traced_components(upper, lower));
            }
        }
    }
}

#[test]
fn meander_set_is_closed_under_swapping_halves() {
    for n in 1..=5 {
        let labels = lattice_perms(n);
        let mut meanders = HashSet::new();
        for (i, upper) in labels.iter().enumerate() {
            for (j, lower) in labels.iter().enumerate() {
                if MeanderSystem::new(upper.clone(), lower.clone())
                    .unwrap()
                    .is_meander()
                {
                    meanders.insert((i, j));
                }
            }
        }
        for &(i, j) in &meanders {
            assert!(meanders.contains(&(j, i)), "swap closure at n={n}");
        }
    }
}

#[test]
fn geodesic_steps_are_hasse_edges() {
    for n in 1..=5 {
        let graph = hasse(n);
        let labels = lattice_perms(n);
        for from in &labels {
            for to in &labels {
                let path = lattice_geodesic(from, to).unwrap();
                for w in path.vertices().windows(2) {
                    let a = graph
                        .index_of(&NoncrossingPartition::from_permutation(&w[0]).unwrap())
                        .unwrap();
                    let b = graph
                        .index_of(&NoncrossingPartition::from_permutation(&w[1]).unwrap())
                        .unwrap();
                    assert!(
                        graph.neighbors(a).contains(&b),
                        "step {} -> {} must be a cover edge",
                        w[0],
                        w[1]
                    );
                }
            }
        }
    }
}

#[test]
fn maximally_separated_pairs_span_catalan_sized_intervals() {
    for n in 1..=5 {
        let (perms, _) = support::indexed_symmetric_group(n);
        let d = support::distance_matrix(&perms);
        let expected = support::catalan(n) as usize;
        for i in 0..perms.len() {
            for j in 0..perms.len() {
                if usize::from(d[i][j]) != n - 1 {
                    continue;
                }
                let between = (0..perms.len())
                    .filter(|&k| usize::from(d[i][k]) + usize::from(d[k][j]) == n - 1)
                    .count();
                assert_eq!(between, expected, "interval copy size at n={n}");
            }
        }
    }
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(images in (1usize..=10).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
    })) {
        let p = Permutation::from_images(images).unwrap();
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse(&text, p.n()).unwrap(), p);
    }

    #[test]
    fn one_line_notation_round_trips(images in (1usize..=10).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
    })) {
        let p = Permutation::from_images(images.clone()).unwrap();
        let text = images.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(Permutation::parse(&text, p.n()).unwrap(), p);
    }
}
