//! Structural invariants of the network layer that go beyond the named
//! verification suites.

use hecke_traces::network::catalog::catalog;
use hecke_traces::network::{network_of, Retention, ZigzagNetwork};
use hecke_traces::perm::Permutation;
use hecke_traces::poset::Poset;

fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[test]
fn retention_choice_never_matters() {
    for n in 1..=6 {
        let cat = catalog(n).unwrap();
        for w in cat.permutations() {
            let concat = cat.concat_of(&w).unwrap().clone();
            let low = ZigzagNetwork::build_with(concat.clone(), Retention::Lowest).unwrap();
            let high = ZigzagNetwork::build_with(concat, Retention::Highest).unwrap();
            assert_eq!(
                low.path_matrix(),
                high.path_matrix(),
                "retention changed the path matrix at {w}"
            );
            assert_eq!(low.w(), high.w());
        }
    }
}

#[test]
fn linear_extensions_give_isomorphic_networks() {
    use hecke_traces::network::Concatenation;
    for n in 1..=6 {
        let cat = catalog(n).unwrap();
        for w in cat.permutations() {
            let concat = cat.concat_of(&w).unwrap();
            let base = ZigzagNetwork::build(concat.clone()).unwrap();
            let ivs = concat.intervals();
            for ext in concat.cover_order().linear_extensions() {
                let reordered: Vec<_> = ext.iter().map(|&i| ivs[i]).collect();
                let c2 = Concatenation::new(n, reordered)
                    .expect("linear extensions stay valid concatenations");
                let net2 = ZigzagNetwork::build(c2).unwrap();
                assert_eq!(
                    net2.path_matrix(),
                    base.path_matrix(),
                    "extension changed the path matrix at {w}"
                );
                assert_eq!(net2.w(), &w);
            }
        }
    }
}

#[test]
fn decreasing_runs_match_star_sizes() {
    for n in 1..=7 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            let max_star = net
                .concat()
                .intervals()
                .iter()
                .map(|s| s.len())
                .max()
                .unwrap_or(1);
            assert_eq!(
                w.longest_decreasing_run(),
                max_star,
                "decreasing run mismatch at {w}"
            );
        }
    }
}

#[test]
fn path_posets_of_312_avoiders_hit_every_unit_interval_order_once() {
    let p312 = Permutation::parse("312").unwrap();
    for n in 1..=6 {
        let mut posets: Vec<Poset> = Vec::new();
        for v in Permutation::all_smooth(n) {
            if !v.avoids(&p312) {
                continue;
            }
            let p = network_of(&v).unwrap().path_poset();
            assert!(
                p.is_unit_interval_order(),
                "path poset of {v} is not a unit interval order"
            );
            for seen in &posets {
                assert!(
                    !seen.isomorphic_to(&p),
                    "duplicate unit interval order at {v}"
                );
            }
            posets.push(p);
        }
        assert_eq!(posets.len(), catalan(n), "wrong count at n={n}");
    }
}

#[test]
fn type_e_paths_visit_exactly_their_stars() {
    for n in 1..=7 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            for i in 1..=n {
                let visited = net.stars_on_type_e_path(i);
                for (k, star) in net.concat().intervals().iter().enumerate() {
                    assert_eq!(
                        visited.contains(&k),
                        star.contains(i),
                        "star visit mismatch at w={w}, source {i}, star {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn path_matrices_are_zero_one() {
    for n in 1..=7 {
        for w in Permutation::all_smooth(n) {
            let net = network_of(&w).unwrap();
            for row in net.dag().path_matrix() {
                for v in row {
                    assert!(v == 0 || v == 1, "non-boolean path count at {w}");
                }
            }
        }
    }
}
