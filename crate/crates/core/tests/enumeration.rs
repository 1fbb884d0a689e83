use std::collections::BTreeSet;

use proptest::prelude::*;

use tamari_atlas::enumerate::{
    count_formula, enum_degree_trees, enum_dyck, enum_maps_oracle, enum_new_intervals, gf_table, is_planar_pair,
    Family,
};
use tamari_atlas::planar_map::PlanarMap;

#[test]
fn interval_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| enum_new_intervals(n).len()).collect();
    assert_eq!(counts, [1, 1, 3, 12, 56, 288]);
    assert_eq!(count_formula(8).unwrap(), 9152u32.into());
    assert!(count_formula(1).is_err());
}

#[test]
fn catalan_paths() {
    let counts: Vec<usize> = (0..=6).map(|n| enum_dyck(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132]);
}

#[test]
fn size_two_objects() {
    let trees: Vec<String> = enum_degree_trees(2).iter().map(ToString::to_string).collect();
    assert_eq!(trees.len(), 3);
    assert!(trees.contains(&"(1:(0:()))".to_string()));
    let codes: BTreeSet<String> = enum_maps_oracle(2).iter().map(PlanarMap::canonical_code).collect();
    assert_eq!(codes.len(), 3);
    assert_eq!(enum_maps_oracle(0), vec![PlanarMap::edgeless()]);
}

#[test]
fn planarity_filter() {
    assert!(is_planar_pair(&[1, 0], &[1, 0]));
    assert!(!is_planar_pair(&[1, 2, 0], &[1, 2, 0]));
    assert!(!is_planar_pair(&[0, 1], &[0, 1]));
}

#[test]
fn generating_function_spot_check() {
    // t^2 x u v w on the map side and t^2 x u v on the interval side.
    let maps = gf_table(Family::Maps, 1).times([1, 0, 0, 0, 0]);
    let intervals = gf_table(Family::Intervals, 2).times([0, 0, 0, 0, 1]);
    assert_eq!(maps.get(&[2, 1, 1, 1, 1]), 1);
    assert_eq!(intervals.get(&[2, 1, 1, 1, 1]), 1);
    assert_eq!(gf_table(Family::Intervals, 6).total(6), 288);
    assert_eq!(gf_table(Family::Maps, 5).total(5), 288);
}

proptest! {
    #[test]
    fn stats_are_consistent_on_oracle_maps(n in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let maps = enum_maps_oracle(n);
        let m = &maps[pick.index(maps.len())];
        let s = m.stats();
        prop_assert_eq!(s.black + s.white + s.face, n + 2);
        prop_assert!(s.outdeg >= 1 && s.outdeg <= n);
    }
}
