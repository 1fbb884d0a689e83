//! Machine checks of every claimed identity, each reporting pass or fail
//! with the first counterexample.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::bijection::{
    certificates, check_exploration_shape, interval_to_tree, map_to_interval, map_to_tree,
    map_to_tree_traced, tree_to_interval, tree_to_map, tree_to_map_traced, StepKind,
};
use crate::dyck::{interval_stats, tamari_leq, DyckPath};
use crate::enumerate::{
    count_formula, enum_degree_trees, enum_dyck, enum_maps_oracle, enum_new_intervals, gf_table,
    Family, GfTable,
};
use crate::planar_map::{HypermapCode, PlanarMap};
use crate::tree::DegreeTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_outcome(id: &str, outcome: Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Self {
            id: id.to_string(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.id, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_trees(max: usize) -> Vec<DegreeTree> {
    (0..=max).flat_map(enum_degree_trees).collect()
}

fn all_maps(min: usize, max: usize) -> Vec<PlanarMap> {
    (min..=max).flat_map(enum_maps_oracle).collect()
}

fn show(map: &PlanarMap) -> String {
    map.canonical_text().map_or_else(|e| e.to_string(), |t| t.replace('\n', " "))
}

/// Intervals of sizes `2..=max`, trees and oracle maps one size smaller and
/// the closed formula all agree.
pub fn counting(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let mut seen = Vec::new();
        for n in 2..=max {
            let intervals = enum_new_intervals(n).len();
            let trees = enum_degree_trees(n - 1).len();
            let maps = enum_maps_oracle(n - 1).len();
            let formula = count_formula(n).map_err(|e| e.to_string())?;
            ensure(
                formula == intervals.into() && trees == intervals && maps == intervals,
                || format!("n={n}: intervals {intervals}, trees {trees}, maps {maps}, formula {formula}"),
            )?;
            seen.push(intervals.to_string());
        }
        Ok(format!("n=2..{max}: {}", seen.join(",")))
    };
    CheckResult::from_outcome("counting", run())
}

pub fn tree_map_tree(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let back = tree_to_map(t).and_then(|m| map_to_tree(&m)).map_err(|e| format!("{t}: {e}"))?;
            ensure(&back == t, || format!("{t} came back as {back}"))?;
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("roundtrip-tree-map-tree", run())
}

pub fn map_tree_map(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps = all_maps(0, max);
        for m in &maps {
            let back = map_to_tree(m).and_then(|t| tree_to_map(&t)).map_err(|e| format!("{}: {e}", show(m)))?;
            ensure(back.canonical_code() == m.canonical_code(), || {
                format!("{} came back as {}", show(m), show(&back))
            })?;
        }
        Ok(format!("{} maps with <= {max} edges", maps.len()))
    };
    CheckResult::from_outcome("roundtrip-map-tree-map", run())
}

pub fn interval_tree_interval(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let mut count = 0;
        for n in 1..=max {
            for i in enum_new_intervals(n) {
                let back = interval_to_tree(&i)
                    .and_then(|t| tree_to_interval(&t))
                    .map_err(|e| format!("{i}: {e}"))?;
                ensure(back == i, || format!("{i} came back as {back}"))?;
                count += 1;
            }
        }
        Ok(format!("{count} intervals of size <= {max}"))
    };
    CheckResult::from_outcome("roundtrip-interval-tree-interval", run())
}

pub fn tree_interval_tree(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let back = tree_to_interval(t)
                .and_then(|i| interval_to_tree(&i))
                .map_err(|e| format!("{t}: {e}"))?;
            ensure(&back == t, || format!("{t} came back as {back}"))?;
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("roundtrip-tree-interval-tree", run())
}

/// `white = c00`, `black = c01`, `face = 1 + c11`, `outdeg = rcont - 1`
/// for maps with `1..=max` edges.
pub fn map_statistics(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps = all_maps(1, max);
        for m in &maps {
            let s = m.stats();
            let i = map_to_interval(m).map_err(|e| e.to_string())?;
            let t = i.stats();
            ensure(
                s.white == t.c00 && s.black == t.c01 && s.face == 1 + t.c11 && s.outdeg + 1 == t.rcont,
                || format!("{} ({s}) -> {i} ({t})", show(m)),
            )?;
        }
        Ok(format!("{} maps with 1..={max} edges", maps.len()))
    };
    CheckResult::from_outcome("map-interval-statistics", run())
}

/// On the edgeless map the first two identities fail and the other two hold.
pub fn edgeless_exception() -> CheckResult {
    let run = || -> Outcome {
        let m = PlanarMap::edgeless();
        let s = m.stats();
        let i = map_to_interval(&m).map_err(|e| e.to_string())?;
        let t = i.stats();
        let pattern = [
            s.white == t.c00,
            s.black == t.c01,
            s.face == 1 + t.c11,
            s.outdeg + 1 == t.rcont,
        ];
        ensure(pattern == [false, false, true, true], || {
            format!("unexpected pattern {pattern:?} for ({s}) vs {i} ({t})")
        })?;
        Ok(format!("({s}) vs {i} ({t}): white/black identities fail, face/outdeg hold"))
    };
    CheckResult::from_outcome("edgeless-exception", run())
}

fn series_sides(max_t: usize) -> (GfTable, GfTable) {
    let maps = gf_table(Family::Maps, max_t.saturating_sub(1)).times([1, 0, 0, 0, 0]);
    let intervals = gf_table(Family::Intervals, max_t).times([0, 0, 0, 0, 1]);
    (maps.truncated(max_t), intervals.truncated(max_t))
}

/// `t F_M = w F_I` up to `t^max_t`.
pub fn series_identity(max_t: usize) -> CheckResult {
    let run = || -> Outcome {
        let (lhs, rhs) = series_sides(max_t);
        let diff = lhs.differences(&rhs);
        ensure(diff.is_empty(), || format!("first difference {:?}", diff[0]))?;
        Ok(format!("{} coefficients up to t^{max_t}", lhs.len()))
    };
    CheckResult::from_outcome("series-identity", run())
}

/// From `t^2` on, `w F_I` at `x = 1` is invariant under every permutation of
/// `(u, v, w)`, and with `x` kept it is invariant under `u <-> v`. The `t^1`
/// term is `t u w`, coming from the edgeless map, and is asserted to be
/// exactly that and not symmetric.
pub fn symmetry(max_t: usize) -> CheckResult {
    let run = || -> Outcome {
        let full = gf_table(Family::Intervals, max_t).times([0, 0, 0, 0, 1]);
        let mut first = GfTable::default();
        let mut rest = GfTable::default();
        let mut flat = GfTable::default();
        for (m, &c) in full.iter() {
            if m[0] == 1 {
                first.add(*m, c);
            } else {
                rest.add(*m, c);
                flat.add([m[0], 0, m[2], m[3], m[4]], c);
            }
        }
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let diff = flat.permute_uvw(p).differences(&flat);
            ensure(diff.is_empty(), || format!("permutation {p:?} at x=1: {:?}", diff[0]))?;
        }
        let diff = rest.permute_uvw([1, 0, 2]).differences(&rest);
        ensure(diff.is_empty(), || format!("u <-> v with x kept: {:?}", diff[0]))?;
        let expected: Vec<([usize; 5], u64)> = vec![([1, 0, 1, 0, 1], 1)];
        let got: Vec<([usize; 5], u64)> = first.iter().map(|(m, &c)| (*m, c)).collect();
        ensure(got == expected, || format!("t^1 term is {got:?}"))?;
        ensure(!first.permute_uvw([0, 2, 1]).differences(&first).is_empty(), || {
            "t^1 term is unexpectedly symmetric".into()
        })?;
        Ok(format!(
            "6 permutations at x=1 and u<->v with x, t^2..t^{max_t}; t^1 term t*u*w is the size-zero exception"
        ))
    };
    CheckResult::from_outcome("symmetry", run())
}

/// The oracle maps and the images of all degree trees are the same sets.
pub fn oracle_equivalence(max: usize) -> CheckResult {
    let run = || -> Outcome {
        for n in 0..=max {
            let oracle: BTreeSet<String> = enum_maps_oracle(n).iter().map(PlanarMap::canonical_code).collect();
            let trees = enum_degree_trees(n);
            let mut image = BTreeSet::new();
            for t in &trees {
                let m = tree_to_map(t).map_err(|e| format!("{t}: {e}"))?;
                m.validate().map_err(|e| format!("{t} gives an invalid map: {e}"))?;
                image.insert(m.canonical_code());
            }
            ensure(image.len() == trees.len(), || format!("n={n}: two trees share an image"))?;
            ensure(image == oracle, || {
                format!("n={n}: {} oracle maps vs {} images", oracle.len(), image.len())
            })?;
        }
        Ok(format!("set equality for n <= {max}"))
    };
    CheckResult::from_outcome("oracle-equivalence", run())
}

/// Node labels equal descendants minus the labels below, are non-negative
/// and vanish exactly on leaves.
pub fn node_labels(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let ell = t.node_labels();
            let shape = t.tree();
            let sizes = shape.subtree_sizes();
            for v in 0..shape.node_count() {
                let below: usize = (v + 1..shape.subtree_end(v)).map(|x| t.edge_label(x)).sum();
                ensure(ell[v] == sizes[v] as i64 - below as i64, || format!("{t}: node {v} label formula"))?;
                ensure(ell[v] >= 0 && ((ell[v] == 0) == shape.is_leaf(v)), || {
                    format!("{t}: node {v} has label {}", ell[v])
                })?;
            }
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("node-labels", run())
}

/// A certificate is the node itself, or lies in the leftmost subtree
/// without being its last node.
pub fn certificate_location(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let cert = certificates(t).map_err(|e| e.to_string())?;
            let shape = t.tree();
            for v in 0..shape.node_count() {
                let w = cert.certificate[v];
                if w == v {
                    continue;
                }
                let first = shape.leftmost_child(v).ok_or_else(|| format!("{t}: leaf {v} certified by {w}"))?;
                let end = shape.subtree_end(first);
                ensure(first <= w && w + 1 < end, || format!("{t}: certificate {w} of node {v}"))?;
            }
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("certificate-location", run())
}

/// Certificates nest: for `v` before `v'`, `cert(v)` is not strictly
/// between `v'` and `cert(v')`, and avoids `v'` unless `v'` certifies itself.
pub fn certificate_nesting(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let c = certificates(t).map_err(|e| e.to_string())?.certificate;
            let n = c.len();
            for v in 0..n {
                for v2 in v + 1..n {
                    let (w, w2) = (c[v], c[v2]);
                    ensure(!(v2 < w && w < w2), || format!("{t}: cert({v})={w} inside ({v2},{w2})"))?;
                    ensure(v2 == w2 || w != v2, || format!("{t}: cert({v}) = {v2} but {v2} is not self-certified"))?;
                }
            }
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("certificate-nesting", run())
}

/// Every exploration snapshot has the expected shape, every intermediate
/// map in both directions is planar, and the inverse runs the undoing steps
/// in reverse order.
pub fn exploration_traces(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps = all_maps(0, max);
        let mut snapshots = 0;
        for m in &maps {
            let (t, forward) = map_to_tree_traced(m).map_err(|e| e.to_string())?;
            for step in forward.steps.iter().filter(|s| !s.kind.is_advance()) {
                check_exploration_shape(step).map_err(|e| format!("{}: {e}", show(m)))?;
                snapshots += 1;
            }
            let (_, backward) = tree_to_map_traced(&t).map_err(|e| e.to_string())?;
            for step in forward.steps.iter().chain(&backward.steps) {
                ensure(step.map.is_planar(), || format!("{}: non-planar intermediate", show(m)))?;
            }
            let advances: Vec<StepKind> = forward.kinds().into_iter().filter(|k| k.is_advance()).collect();
            let mut undone: Vec<StepKind> = backward.kinds().into_iter().filter_map(StepKind::inverse).collect();
            undone.reverse();
            ensure(advances == undone, || format!("{}: step kinds do not mirror", show(m)))?;
        }
        Ok(format!("{snapshots} snapshots over {} maps with <= {max} edges", maps.len()))
    };
    CheckResult::from_outcome("exploration-shape", run())
}

/// The lower-path factor at an internal node has as many rising contacts
/// as the label of its leftmost edge.
pub fn rising_contacts(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let i = tree_to_interval(t).map_err(|e| e.to_string())?;
            for v in 0..t.tree().node_count() {
                if let Some(r) = t.leftmost_label(v) {
                    let got = i.lower().factor_between(v + 1).map_err(|e| e.to_string())?.rising_contacts();
                    ensure(got == r, || format!("{t}: node {v} has {got} contacts, label {r}"))?;
                }
            }
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("rising-contacts", run())
}

/// `V_Q(i)` is the subtree size of the `i`-th node in preorder.
pub fn upper_subtree_sizes(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let i = tree_to_interval(t).map_err(|e| e.to_string())?;
            let vq = i.upper().bracket_vector();
            ensure(vq.0 == t.tree().subtree_sizes(), || format!("{t}: V_Q = {:?}", vq.0))?;
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("upper-subtree-sizes", run())
}

fn sorted_nonzero(values: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = values.into_iter().filter(|&x| x > 0).collect();
    out.sort_unstable();
    out
}

/// Inner-face half-degrees, nonzero tree labels and rising-contact counts of
/// lower-path factors form the same multiset.
pub fn face_multiset(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps = all_maps(0, max);
        for m in &maps {
            let faces = sorted_nonzero(m.inner_faces().iter().map(|f| f.len() / 2));
            let t = map_to_tree(m).map_err(|e| e.to_string())?;
            let labels = sorted_nonzero(t.edge_labels().iter().copied());
            let i = tree_to_interval(&t).map_err(|e| e.to_string())?;
            let contacts = sorted_nonzero(
                (1..=i.size()).map(|k| i.lower().factor_between(k).expect("in range").rising_contacts()),
            );
            ensure(faces == labels && labels == contacts, || {
                format!("{}: faces {faces:?}, labels {labels:?}, contacts {contacts:?}", show(m))
            })?;
        }
        Ok(format!("{} maps with <= {max} edges", maps.len()))
    };
    CheckResult::from_outcome("face-multiset", run())
}

/// One-face maps (plane trees) give all-zero labelings.
pub fn plane_tree_specialization(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps: Vec<PlanarMap> = all_maps(0, max).into_iter().filter(|m| m.face_count() == 1).collect();
        for m in &maps {
            let t = map_to_tree(m).map_err(|e| e.to_string())?;
            ensure(t.edge_labels().iter().all(|&l| l == 0), || format!("{} -> {t}", show(m)))?;
        }
        Ok(format!("{} one-face maps with <= {max} edges", maps.len()))
    };
    CheckResult::from_outcome("plane-tree-specialization", run())
}

/// Matchings nest, the Tamari order is a partial order, intervals avoid the
/// `(1,0)` type pair, and the plane-tree encoding round-trips with root
/// degree equal to rising contacts.
pub fn dyck_properties(max: usize) -> CheckResult {
    let run = || -> Outcome {
        for n in 0..=max {
            for p in enum_dyck(n) {
                let m = p.matchings();
                let ups = p.up_positions();
                for a in 0..n {
                    for b in 0..n {
                        let (ua, da, ub, db) = (ups[a], m[a], ups[b], m[b]);
                        ensure(!(ua < ub && ub < da && da < db), || format!("{p}: crossing matches"))?;
                    }
                }
                let tree = p.to_plane_tree();
                ensure(DyckPath::from_plane_tree(&tree) == p, || format!("{p}: tree roundtrip"))?;
                ensure(tree.children(0).len() == p.rising_contacts(), || format!("{p}: root degree"))?;
            }
        }
        for n in 1..=max.min(6) {
            let paths = enum_dyck(n);
            let leq = |a: &DyckPath, b: &DyckPath| tamari_leq(a, b).expect("same size");
            for a in &paths {
                ensure(leq(a, a), || format!("{a} not reflexive"))?;
                for b in &paths {
                    ensure(a == b || !(leq(a, b) && leq(b, a)), || format!("{a}, {b} antisymmetry"))?;
                    if leq(a, b) {
                        for c in paths.iter().filter(|c| leq(b, c)) {
                            ensure(leq(a, c), || format!("{a} {b} {c} transitivity"))?;
                        }
                    }
                }
            }
            for i in enum_new_intervals(n) {
                interval_stats(i.lower(), i.upper()).map_err(|e| format!("{i}: {e}"))?;
            }
        }
        Ok(format!("paths of size <= {max}, order checks <= {}", max.min(6)))
    };
    CheckResult::from_outcome("dyck-properties", run())
}

/// Tree statistics add up and node labelings determine edge labelings.
pub fn tree_properties(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let trees = all_trees(max);
        for t in &trees {
            let s = t.stats();
            ensure(s.lnode + s.znode + s.pnode == t.size() + 1, || format!("{t}: {s}"))?;
            let back = DegreeTree::from_node_labels(t.tree().clone(), &t.node_labels()).map_err(|e| e.to_string())?;
            ensure(&back == t, || format!("{t}: node labels give {back}"))?;
        }
        Ok(format!("{} trees of size <= {max}", trees.len()))
    };
    CheckResult::from_outcome("tree-properties", run())
}

fn disconnects(m: &PlanarMap, edge: usize) -> bool {
    let (a, b) = m.edges()[edge];
    let mut seen = vec![false; m.vertex_count()];
    let mut queue = VecDeque::from([m.vertex(a)]);
    seen[m.vertex(a)] = true;
    while let Some(v) = queue.pop_front() {
        for d in 0..m.dart_count() {
            if m.vertex(d) == v && d != a && d != b {
                let x = m.vertex(m.mate(d));
                if !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    !seen[m.vertex(b)]
}

/// Euler, even faces, three agreeing bridge tests, hypermap round-trips and
/// the outer degree read from the permutations.
pub fn map_properties(max: usize) -> CheckResult {
    let run = || -> Outcome {
        let maps = all_maps(0, max);
        for m in &maps {
            m.validate().map_err(|e| format!("{}: {e}", show(m)))?;
            ensure(m.face_orbits().iter().all(|f| f.len() % 2 == 0), || format!("{}: odd face", show(m)))?;
            for e in 0..m.edge_count() {
                let by_faces = m.is_bridge(e).map_err(|x| x.to_string())?;
                let (a, b) = m.edges()[e];
                let by_orbit = m.face_of(b).contains(&a);
                ensure(by_faces == by_orbit && by_faces == disconnects(m, e), || {
                    format!("{}: bridge tests disagree on edge {e}", show(m))
                })?;
            }
            let code = m.to_hypermap().map_err(|e| e.to_string())?;
            ensure(code.to_map().canonical_code() == m.canonical_code(), || format!("{}: code roundtrip", show(m)))?;
            let reparsed: HypermapCode = code.to_string().parse().map_err(|e: crate::planar_map::MapError| e.to_string())?;
            ensure(reparsed == code, || format!("{}: text roundtrip", show(m)))?;
            if m.edge_count() > 0 {
                let face = code.face_permutation();
                let mut len = 1;
                let mut x = face[code.root()];
                while x != code.root() {
                    x = face[x];
                    len += 1;
                }
                ensure(len == m.stats().outdeg, || format!("{}: outdeg {} vs cycle {len}", show(m), m.stats().outdeg))?;
            }
        }
        Ok(format!("{} maps with <= {max} edges", maps.len()))
    };
    CheckResult::from_outcome("map-properties", run())
}

/// Enumerations are reproducible.
pub fn determinism(max: usize) -> CheckResult {
    let run = || -> Outcome {
        for n in 0..=max {
            let a: Vec<String> = enum_maps_oracle(n).iter().map(show).collect();
            let b: Vec<String> = enum_maps_oracle(n).iter().map(show).collect();
            ensure(a == b, || format!("map stream differs at n={n}"))?;
            let a: Vec<String> = enum_degree_trees(n).iter().map(ToString::to_string).collect();
            let b: Vec<String> = enum_degree_trees(n).iter().map(ToString::to_string).collect();
            ensure(a == b, || format!("tree stream differs at n={n}"))?;
        }
        Ok(format!("streams for n <= {max}"))
    };
    CheckResult::from_outcome("determinism", run())
}

/// Runs every check: maps and trees up to `max` edges, intervals up to size
/// `max + 1`. Checks run in parallel; the report is sorted by check id.
pub fn verify_suite(max: usize) -> Report {
    let jobs: Vec<Box<dyn Fn() -> CheckResult + Send + Sync>> = vec![
        Box::new(move || counting(max + 1)),
        Box::new(move || tree_map_tree(max)),
        Box::new(move || map_tree_map(max)),
        Box::new(move || interval_tree_interval(max + 1)),
        Box::new(move || tree_interval_tree(max)),
        Box::new(move || map_statistics(max)),
        Box::new(edgeless_exception),
        Box::new(move || series_identity(max + 1)),
        Box::new(move || symmetry(max + 1)),
        Box::new(move || oracle_equivalence(max)),
        Box::new(move || node_labels(max)),
        Box::new(move || certificate_location(max)),
        Box::new(move || certificate_nesting(max)),
        Box::new(move || exploration_traces(max)),
        Box::new(move || rising_contacts(max)),
        Box::new(move || upper_subtree_sizes(max)),
        Box::new(move || face_multiset(max)),
        Box::new(move || plane_tree_specialization(max)),
        Box::new(move || dyck_properties(max + 1)),
        Box::new(move || tree_properties(max)),
        Box::new(move || map_properties(max)),
        Box::new(move || determinism(max)),
    ];
    let mut checks: Vec<CheckResult> = jobs.par_iter().map(|job| job()).collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Report { checks }
}
