use proptest::prelude::*;

use tamari_atlas::bijection::{
    certificates, interval_to_map, interval_to_tree, map_to_interval, map_to_tree, map_to_tree_traced,
    tree_to_interval, tree_to_map, tree_to_map_traced, StepKind,
};
use tamari_atlas::dyck::NewInterval;
use tamari_atlas::enumerate::degree_labelings;
use tamari_atlas::planar_map::{HypermapCode, PlanarMap};
use tamari_atlas::tree::{DegreeTree, PlaneTree};

fn map(text: &str) -> PlanarMap {
    text.parse::<HypermapCode>().unwrap().try_to_map().unwrap()
}

fn tree(text: &str) -> DegreeTree {
    text.parse().unwrap()
}

// Small cases worked out by hand.
const TRIPLES: &[(&str, &str, &str)] = &[
    ("n=0", "()", "ud;ud"),
    ("n=1 sigma=(1) alpha=(1) root=1", "(0:())", "udud;uudd"),
    ("n=2 sigma=(1 2) alpha=(1 2) root=1", "(1:(0:()))", "uuddud;uuuddd"),
    ("n=2 sigma=(1)(2) alpha=(1 2) root=1", "(0:(0:()))", "ududud;uuuddd"),
    ("n=2 sigma=(1 2) alpha=(1)(2) root=1", "(0:()0:())", "ududud;uududd"),
];

#[test]
fn hand_computed_triples() {
    for &(m, t, i) in TRIPLES {
        let m = map(m);
        let i: NewInterval = i.parse().unwrap();
        assert_eq!(map_to_tree(&m).unwrap().to_string(), t);
        assert_eq!(tree_to_interval(&tree(t)).unwrap(), i);
        assert_eq!(map_to_interval(&m).unwrap(), i);
        assert_eq!(interval_to_tree(&i).unwrap().to_string(), t);
        assert_eq!(tree_to_map(&tree(t)).unwrap().canonical_code(), m.canonical_code());
        assert_eq!(interval_to_map(&i).unwrap().canonical_code(), m.canonical_code());
    }
}

#[test]
fn double_edge_trace_kinds() {
    let (_, forward) = map_to_tree_traced(&map(TRIPLES[2].0)).unwrap();
    let advances: Vec<StepKind> = forward.kinds().into_iter().filter(|k| k.is_advance()).collect();
    assert_eq!(advances, [StepKind::A3, StepKind::A1]);
    let (_, backward) = tree_to_map_traced(&tree(TRIPLES[2].1)).unwrap();
    assert_eq!(backward.kinds(), [StepKind::A1Inv, StepKind::A3Inv]);
    for line in forward.lines().iter().chain(&backward.lines()) {
        assert!(line.split(' ').count() >= 3, "{line}");
    }
}

#[test]
fn certificate_counts_sum_to_node_count() {
    let t = tree("(2:(1:(0:())0:())0:())");
    let c = certificates(&t).unwrap();
    assert_eq!(c.count.iter().sum::<usize>(), t.tree().node_count());
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(tree_to_map(&tree("(1:())")).is_err());
    assert!(tree_to_interval(&tree("(0:(0:())1:())")).is_err());
    assert!("uudd;udud".parse::<NewInterval>().is_err());
    assert!("n=2 sigma=(1)(2) alpha=(1)(2) root=1".parse::<HypermapCode>().unwrap().try_to_map().is_err());
}

/// Any plane tree: each new preorder node hangs off the current rightmost
/// branch at a chosen depth.
fn plane_tree(max_edges: usize) -> impl Strategy<Value = PlaneTree> {
    prop::collection::vec(any::<prop::sample::Index>(), 0..=max_edges).prop_map(|picks| {
        let mut children: Vec<Vec<usize>> = vec![Vec::new()];
        let mut branch = vec![0];
        for pick in picks {
            let depth = pick.index(branch.len());
            branch.truncate(depth + 1);
            let v = children.len();
            children.push(Vec::new());
            children[*branch.last().unwrap()].push(v);
            branch.push(v);
        }
        PlaneTree::from_preorder_children(children).unwrap()
    })
}

fn degree_tree(max_edges: usize) -> impl Strategy<Value = DegreeTree> {
    (plane_tree(max_edges), any::<prop::sample::Index>()).prop_map(|(shape, pick)| {
        let all = degree_labelings(&shape);
        DegreeTree::new(shape, all[pick.index(all.len())].clone()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn tree_map_roundtrip(t in degree_tree(9)) {
        let m = tree_to_map(&t).unwrap();
        prop_assert!(m.is_valid());
        prop_assert_eq!(m.edge_count(), t.size());
        prop_assert_eq!(map_to_tree(&m).unwrap(), t);
    }

    #[test]
    fn tree_interval_roundtrip(t in degree_tree(9)) {
        let i = tree_to_interval(&t).unwrap();
        prop_assert_eq!(i.size(), t.size() + 1);
        prop_assert_eq!(interval_to_tree(&i).unwrap(), t);
    }

    #[test]
    fn statistics_transfer(t in degree_tree(9)) {
        prop_assume!(t.size() > 0);
        let m = tree_to_map(&t).unwrap();
        let s = m.stats();
        let i = map_to_interval(&m).unwrap().stats();
        prop_assert_eq!((s.white, s.black, s.face, s.outdeg + 1), (i.c00, i.c01, 1 + i.c11, i.rcont));
    }

    #[test]
    fn map_roundtrip_through_interval(t in degree_tree(8)) {
        let m = tree_to_map(&t).unwrap();
        let back = interval_to_map(&map_to_interval(&m).unwrap()).unwrap();
        prop_assert_eq!(back.canonical_code(), m.canonical_code());
    }

    #[test]
    fn inverse_runs_steps_backwards(t in degree_tree(7)) {
        let (m, backward) = tree_to_map_traced(&t).unwrap();
        let (_, forward) = map_to_tree_traced(&m).unwrap();
        let forward: Vec<StepKind> = forward.kinds().into_iter().filter(|k| k.is_advance()).collect();
        let mut undone: Vec<StepKind> = backward.kinds().into_iter().filter_map(StepKind::inverse).collect();
        undone.reverse();
        prop_assert_eq!(forward, undone);
    }
}
