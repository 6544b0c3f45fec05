use burnside_core::groups::Group;
use burnside_core::lab;
use burnside_core::units::{self, Method};
use burnside_core::{BurnsideRing, Guards};
use proptest::prelude::*;

/// Image list of a permutation of `0..n` as 1-based cycles.
fn to_cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn group_strategy() -> impl Strategy<Value = Group> {
    (4usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 1..=2)))
        .prop_map(|(n, gens)| {
            let cycles: Vec<_> = gens.iter().map(|p| to_cycles(p)).collect();
            Group::from_permutations(n, &cycles, &Guards::default()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn four_methods_describe_the_same_subspace(g in group_strategy()) {
        let guards = Guards::default();
        let ring = BurnsideRing::new(g, &guards).unwrap();
        let oracle = units::units_oracle(&ring, &guards).unwrap();
        for m in [Method::Yoshida, Method::Sections, Method::Limit] {
            let d = units::compute(&ring, m, &guards).unwrap();
            prop_assert!(d.same_subspace(&oracle), "{} disagrees on order {}", m, ring.group().order());
        }
        let (_, k) = lab::kernel_l(&ring, &guards, true).unwrap();
        prop_assert!(k.exactness_ok);
        prop_assert!(lab::image_containment(&ring, &oracle, &guards).unwrap());
    }

    #[test]
    fn units_square_to_one(g in group_strategy()) {
        let guards = Guards::default();
        let ring = BurnsideRing::new(g, &guards).unwrap();
        for u in units::units_oracle(&ring, &guards).unwrap().units.unwrap() {
            prop_assert_eq!(ring.mul(&u, &u).unwrap(), ring.one());
            prop_assert_eq!(units::unit_from_form(&ring, &units::iota(&ring, &u).unwrap()), Some(u));
        }
    }
}

#[test]
fn larger_groups_agree() {
    let guards = Guards::default();
    for spec in ["A5", "S4xC2", "Q8xC3"] {
        let ring = BurnsideRing::from_preset(spec, &guards).unwrap();
        let oracle = units::units_oracle(&ring, &guards).unwrap();
        for m in [Method::Yoshida, Method::Sections, Method::Limit] {
            assert!(
                units::compute(&ring, m, &guards)
                    .unwrap()
                    .same_subspace(&oracle),
                "{spec} {m}"
            );
        }
    }
}

#[test]
fn elementary_abelian_rank_is_number_of_subgroups_of_index_at_most_two() {
    let guards = Guards::default();
    for k in 1..=4u32 {
        let ring = BurnsideRing::new(Group::elementary_abelian2(k), &guards).unwrap();
        assert_eq!(units::units_oracle(&ring, &guards).unwrap().rank, 1 << k);
    }
}
