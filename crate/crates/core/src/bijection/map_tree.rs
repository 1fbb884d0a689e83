//! Maps to degree trees by exploration, and degree trees back to maps by
//! postorder surgery. Both run on one tagged [`WorkingMap`].
//!
//! A tree embedded in the working map keeps the rotation
//! `[parent, c_k, ..., c_1]` clockwise around every non-root node, and
//! `[c_k, ..., c_1]` around the root with the root dart on `c_k`. Children
//! are therefore created right to left by the exploration, and the part of
//! the map still to explore always sits just after the leftmost child.

use std::fmt;

use crate::planar_map::{Color, Corner, EdgeTag, PlanarMap, WorkingMap};
use crate::tree::{DegreeTree, PlaneTree};

use super::BijectionError;

fn mate(d: usize) -> usize {
    d ^ 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    A1,
    A2,
    A3,
    A1Inv,
    A2Inv,
    A3Inv,
    Prepare,
    Backtrack,
}

impl StepKind {
    pub fn is_advance(self) -> bool {
        matches!(self, StepKind::A1 | StepKind::A2 | StepKind::A3)
    }

    /// The step undoing this one (advance steps only).
    pub fn inverse(self) -> Option<StepKind> {
        match self {
            StepKind::A1 => Some(StepKind::A1Inv),
            StepKind::A2 => Some(StepKind::A2Inv),
            StepKind::A3 => Some(StepKind::A3Inv),
            StepKind::A1Inv => Some(StepKind::A1),
            StepKind::A2Inv => Some(StepKind::A2),
            StepKind::A3Inv => Some(StepKind::A3),
            _ => None,
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::A1 => "A1",
            StepKind::A2 => "A2",
            StepKind::A3 => "A3",
            StepKind::A1Inv => "A1'",
            StepKind::A2Inv => "A2'",
            StepKind::A3Inv => "A3'",
            StepKind::Prepare => "prepare",
            StepKind::Backtrack => "backtrack",
        })
    }
}

/// A snapshot taken after one step.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub kind: StepKind,
    pub map: WorkingMap,
    /// Current vertex and pending dart of the exploration, when defined.
    pub current: Option<usize>,
    pub pending: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    fn push(&mut self, kind: StepKind, map: &WorkingMap, current: Option<usize>, pending: Option<usize>) {
        self.steps.push(TraceStep {
            kind,
            map: map.clone(),
            current,
            pending,
        });
    }

    pub fn kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(|s| s.kind).collect()
    }

    /// `<index> <kind> <working map>` per step.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{i} {} {}", s.kind, s.map.to_line()))
            .collect()
    }
}

/// First map dart strictly after `from`, clockwise around its vertex.
fn next_map_dart(w: &WorkingMap, from: usize) -> Option<usize> {
    let mut d = w.next_cw(from);
    while d != from {
        if w.tag(d) == Some(EdgeTag::Map) {
            return Some(d);
        }
        d = w.next_cw(d);
    }
    None
}

/// `T_M`.
pub fn map_to_tree(map: &PlanarMap) -> Result<DegreeTree, BijectionError> {
    explore(map, None)
}

/// `T_M`, recording every advance and prepare step.
pub fn map_to_tree_traced(map: &PlanarMap) -> Result<(DegreeTree, Trace), BijectionError> {
    let mut trace = Trace::default();
    let tree = explore(map, Some(&mut trace))?;
    Ok((tree, trace))
}

fn explore(map: &PlanarMap, mut trace: Option<&mut Trace>) -> Result<DegreeTree, BijectionError> {
    map.validate()?;
    let Some(root) = map.root() else {
        return Ok(DegreeTree::single_node());
    };
    let mut w = WorkingMap::from_map(map);
    let mut u = map.vertex(root);
    let mut pending = root;
    // (vertex, dart at it leading down the leftmost branch)
    let mut branch: Vec<(usize, usize)> = Vec::new();
    loop {
        let e = pending;
        let v = w.vertex(mate(e));
        let (kind, next_vertex, from) = if w.is_bridge(e) && w.degree(v) == 1 {
            w.set_tag(e / 2, EdgeTag::Tree(0))?;
            (StepKind::A1, u, e)
        } else if w.is_bridge(e) {
            let g = w.next_cw(mate(e));
            let target = w.vertex(mate(g));
            let t = w.add_edge(
                Corner::Before(e),
                Corner::Before(w.next_cw(mate(g))),
                EdgeTag::Tree(0),
            )?;
            if w.root() == Some(e) {
                w.set_root(Some(2 * t));
            }
            w.delete_edge(e / 2)?;
            branch.push((u, 2 * t));
            (StepKind::A2, target, 2 * t + 1)
        } else {
            let m = w.face_of(mate(e)).len() / 2;
            let rot = w.rotation_from(e);
            let arc = rot.iter().take_while(|&&d| w.tag(d) == Some(EdgeTag::Map)).count();
            let keep = if arc < rot.len() {
                Corner::Before(rot[arc])
            } else {
                Corner::Isolated(u)
            };
            let child = w.split_vertex(e, arc)?;
            let t = w.add_edge(Corner::Before(e), keep, EdgeTag::Tree(m))?;
            if w.root() == Some(e) {
                w.set_root(Some(2 * t + 1));
            }
            w.delete_edge(e / 2)?;
            branch.push((u, 2 * t + 1));
            (StepKind::A3, child, 2 * t)
        };
        u = next_vertex;
        if let Some(t) = trace.as_deref_mut() {
            t.push(kind, &w, Some(u), None);
        }

        let mut found = next_map_dart(&w, from);
        let mut backtracked = false;
        while found.is_none() {
            let Some((parent, down)) = branch.pop() else { break };
            backtracked = true;
            u = parent;
            found = next_map_dart(&w, down);
        }
        let step = if backtracked { StepKind::Backtrack } else { StepKind::Prepare };
        if let Some(t) = trace.as_deref_mut() {
            t.push(step, &w, Some(u), found);
        }
        match found {
            Some(d) => pending = d,
            None => break,
        }
    }
    read_tree(&w)
}

/// Reads the degree tree off a working map whose edges are all tree edges.
fn read_tree(w: &WorkingMap) -> Result<DegreeTree, BijectionError> {
    let root = w.root().expect("non-empty exploration has a root");
    let root_vertex = w.vertex(root);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); w.vertex_slots()];
    let mut label = vec![0; w.vertex_slots()];
    let mut stack = vec![(root_vertex, None::<usize>)];
    while let Some((v, up)) = stack.pop() {
        let rot = match up {
            None => w.rotation_from(root),
            Some(p) => w.rotation_from(p)[1..].to_vec(),
        };
        for &d in rot.iter().rev() {
            let c = w.vertex(mate(d));
            children[v].push(c);
            label[c] = match w.tag(d) {
                Some(EdgeTag::Tree(l)) => l,
                _ => unreachable!("exploration leaves only tree edges"),
            };
            stack.push((c, Some(mate(d))));
        }
    }
    // compact the vertex slots (all alive here) into a preorder tree
    let (tree, order) = PlaneTree::from_children(root_vertex, &children)?;
    let mut labels = vec![0; tree.node_count()];
    for (v, &i) in order.iter().enumerate() {
        labels[i] = label[v];
    }
    let result = DegreeTree::new(tree, labels)?;
    result.validate()?;
    Ok(result)
}

/// Embeds a degree tree as a working map of tree edges. Returns the map and
/// the edge id of every non-root node's parent edge (`2e` at the parent).
fn embed_tree(tree: &DegreeTree) -> Result<(WorkingMap, Vec<usize>), BijectionError> {
    let t = tree.tree();
    let colors = (0..t.node_count())
        .map(|v| {
            if v == t.root() || !t.is_leaf(v) {
                Color::Black
            } else {
                Color::White
            }
        })
        .collect();
    let mut w = WorkingMap::with_vertices(colors);
    let mut edge_of = vec![usize::MAX; t.node_count()];
    for v in t.preorder() {
        let mut previous: Option<usize> = t.parent(v).map(|_| 2 * edge_of[v] + 1);
        for &c in t.children(v) {
            let at = previous.map_or(Corner::Isolated(v), Corner::Before);
            let e = w.add_edge(at, Corner::Isolated(c), EdgeTag::Tree(tree.edge_label(c)))?;
            edge_of[c] = e;
            previous = Some(2 * e);
        }
        if v == t.root() {
            w.set_root(t.children(v).last().map(|&c| 2 * edge_of[c]));
        }
    }
    Ok((w, edge_of))
}

/// `M_T`.
pub fn tree_to_map(tree: &DegreeTree) -> Result<PlanarMap, BijectionError> {
    rebuild(tree, None)
}

/// `M_T`, recording one step per processed node.
pub fn tree_to_map_traced(tree: &DegreeTree) -> Result<(PlanarMap, Trace), BijectionError> {
    let mut trace = Trace::default();
    let map = rebuild(tree, Some(&mut trace))?;
    Ok((map, trace))
}

fn rebuild(tree: &DegreeTree, mut trace: Option<&mut Trace>) -> Result<PlanarMap, BijectionError> {
    tree.validate()?;
    if tree.size() == 0 {
        return Ok(PlanarMap::edgeless());
    }
    let (mut w, edge_of) = embed_tree(tree)?;
    let t = tree.tree();
    for u in t.postorder() {
        if u == t.root() {
            continue;
        }
        let e = edge_of[u];
        let (q, p) = (2 * e, 2 * e + 1);
        let r = tree.edge_label(u);
        let kind = if t.is_leaf(u) {
            w.set_tag(e, EdgeTag::Map)?;
            StepKind::A1Inv
        } else if r == 0 {
            let side = w.prev_cw(p);
            let a = w.add_edge(
                Corner::Before(w.next_cw(q)),
                Corner::Before(mate(side)),
                EdgeTag::Map,
            )?;
            if w.root() == Some(q) {
                w.set_root(Some(2 * a));
            }
            w.delete_edge(e)?;
            StepKind::A2Inv
        } else {
            let start = w.next_cw(p);
            let orbit = w.face_of(start);
            let have = orbit.iter().position(|&d| d == p).expect("parent dart bounds the outer face");
            if 2 * r > have {
                return Err(BijectionError::WalkTooLong { need: 2 * r, have });
            }
            let target = orbit[2 * r - 1];
            let a = w.add_edge(Corner::Before(start), Corner::Before(target), EdgeTag::Map)?;
            if w.root() == Some(q) {
                w.set_root(Some(2 * a));
            }
            w.contract_edge(q)?;
            StepKind::A3Inv
        };
        if let Some(tr) = trace.as_deref_mut() {
            tr.push(kind, &w, None, None);
        }
    }
    Ok(w.to_map()?)
}

/// Checks the shape of an exploration snapshot taken after a prepare or
/// backtrack step: tree edges form a tree, every remaining map component
/// hangs off exactly one node of the leftmost branch (on the left of it),
/// the current vertex is the deepest such node and the pending dart is the
/// first map dart after the branch there.
pub fn check_exploration_shape(step: &TraceStep) -> Result<(), String> {
    let w = &step.map;
    if !w.is_planar() {
        return Err("intermediate map is not planar".into());
    }
    let root = w.root().ok_or("missing root")?;
    let root_vertex = w.vertex(root);

    // parent dart and depth of every tree vertex, by search from the root
    let mut parent_dart: Vec<Option<usize>> = vec![None; w.vertex_slots()];
    let mut in_tree = vec![false; w.vertex_slots()];
    let mut depth = vec![0usize; w.vertex_slots()];
    in_tree[root_vertex] = true;
    let mut stack = vec![root_vertex];
    let mut tree_vertices = 1;
    while let Some(v) = stack.pop() {
        let Some(a) = w.anchor(v) else { continue };
        for d in w.rotation_from(a) {
            if !w.tag(d).is_some_and(EdgeTag::is_tree) || Some(d) == parent_dart[v] {
                continue;
            }
            let c = w.vertex(mate(d));
            if in_tree[c] {
                return Err("tree edges contain a cycle".into());
            }
            in_tree[c] = true;
            parent_dart[c] = Some(mate(d));
            depth[c] = depth[v] + 1;
            tree_vertices += 1;
            stack.push(c);
        }
    }
    let tree_edges = w.live_edges().filter(|&e| w.tag(2 * e).is_some_and(EdgeTag::is_tree)).count();
    if tree_edges + 1 != tree_vertices {
        return Err("tree edges do not form a tree through the root".into());
    }

    // leftmost branch and, on it, the dart after which the map part hangs
    let tree_darts_from = |start: usize| -> Vec<usize> {
        w.rotation_from(start)
            .into_iter()
            .filter(|&d| w.tag(d).is_some_and(EdgeTag::is_tree))
            .collect()
    };
    let mut on_branch = vec![false; w.vertex_slots()];
    let mut branch_dart = vec![None; w.vertex_slots()];
    let mut v = root_vertex;
    let mut entry = None::<usize>;
    loop {
        on_branch[v] = true;
        let darts = match entry {
            None => tree_darts_from(root),
            Some(p) => tree_darts_from(p),
        };
        let down = darts.iter().copied().rfind(|&d| Some(d) != entry);
        branch_dart[v] = down.or(entry);
        match down {
            Some(d) => {
                entry = Some(mate(d));
                v = w.vertex(mate(d));
            }
            None => break,
        }
    }

    // map components and their attachment vertices
    let (comp, count) = w.components(EdgeTag::is_map);
    let mut attached_at = vec![None::<usize>; count];
    let mut has_edges = vec![false; count];
    for e in w.live_edges() {
        if w.tag(2 * e) == Some(EdgeTag::Map) {
            has_edges[comp[w.vertex(2 * e)]] = true;
        }
    }
    for v in w.live_vertices() {
        let c = comp[v];
        if !has_edges[c] || !in_tree[v] {
            continue;
        }
        if attached_at[c].replace(v).is_some() {
            return Err(format!("a map component touches the tree twice (at {v})"));
        }
    }
    let mut deepest = None::<usize>;
    let mut used = vec![false; w.vertex_slots()];
    for c in (0..count).filter(|&c| has_edges[c]) {
        let v = attached_at[c].ok_or("a map component is detached from the tree")?;
        if !on_branch[v] {
            return Err(format!("map component attached off the leftmost branch at {v}"));
        }
        if std::mem::replace(&mut used[v], true) {
            return Err(format!("two map components attached at {v}"));
        }
        // map darts at v must form one run right after the branch dart
        let after = w.next_cw(branch_dart[v].expect("branch vertex has a tree dart"));
        let total = w.rotation_from(after).into_iter().filter(|&x| w.tag(x) == Some(EdgeTag::Map)).count();
        let run = w
            .rotation_from(after)
            .into_iter()
            .take_while(|&x| w.tag(x) == Some(EdgeTag::Map))
            .count();
        if run != total {
            return Err(format!("map darts at {v} are not on the left of the branch"));
        }
        if deepest.is_none_or(|x| depth[v] > depth[x]) {
            deepest = Some(v);
        }
    }
    match (deepest, step.pending) {
        (None, None) => Ok(()),
        (Some(v), Some(pending)) => {
            if step.current != Some(v) {
                return Err("current vertex is not the deepest attachment".into());
            }
            if w.next_cw(branch_dart[v].expect("tree dart")) != pending {
                return Err("pending dart is not the first map dart after the branch".into());
            }
            Ok(())
        }
        _ => Err("pending edge disagrees with the remaining map".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::HypermapCode;

    fn code(sigma: Vec<usize>, alpha: Vec<usize>) -> PlanarMap {
        HypermapCode::new(sigma, alpha, 0).unwrap().to_map()
    }

    #[test]
    fn worked_examples_map_to_tree() {
        assert_eq!(map_to_tree(&PlanarMap::edgeless()).unwrap().to_string(), "()");
        assert_eq!(map_to_tree(&code(vec![0], vec![0])).unwrap().to_string(), "(0:())");
        assert_eq!(map_to_tree(&code(vec![1, 0], vec![1, 0])).unwrap().to_string(), "(1:(0:()))");
        assert_eq!(map_to_tree(&code(vec![0, 1], vec![1, 0])).unwrap().to_string(), "(0:(0:()))");
        // w - b - w rooted at the middle vertex
        assert_eq!(map_to_tree(&code(vec![1, 0], vec![0, 1])).unwrap().to_string(), "(0:()0:())");
    }

    #[test]
    fn worked_examples_tree_to_map() {
        for (tree, sigma, alpha) in [
            ("(0:())", vec![0], vec![0]),
            ("(1:(0:()))", vec![1, 0], vec![1, 0]),
            ("(0:(0:()))", vec![0, 1], vec![1, 0]),
            ("(0:()0:())", vec![1, 0], vec![0, 1]),
        ] {
            let t: DegreeTree = tree.parse().unwrap();
            let m = tree_to_map(&t).unwrap();
            assert!(m.is_valid(), "{tree}");
            assert_eq!(m.canonical_code(), code(sigma, alpha).canonical_code(), "{tree}");
        }
        assert_eq!(tree_to_map(&DegreeTree::single_node()).unwrap(), PlanarMap::edgeless());
    }

    #[test]
    fn traces_run_in_opposite_orders() {
        let m = code(vec![1, 0], vec![1, 0]);
        let (t, forward) = map_to_tree_traced(&m).unwrap();
        let (_, backward) = tree_to_map_traced(&t).unwrap();
        let advances: Vec<_> = forward.kinds().into_iter().filter(|k| k.is_advance()).collect();
        assert_eq!(advances, vec![StepKind::A3, StepKind::A1]);
        let mut undone: Vec<_> = backward.kinds().into_iter().filter_map(StepKind::inverse).collect();
        undone.reverse();
        assert_eq!(undone, advances);
        for step in forward.steps.iter().filter(|s| !s.kind.is_advance()) {
            check_exploration_shape(step).unwrap();
        }
        assert!(forward.lines()[0].starts_with("0 A3 n=2"));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let bad: DegreeTree = "(1:())".parse().unwrap();
        assert!(tree_to_map(&bad).is_err());
        let torus = PlanarMap::from_parts(
            vec![1, 0, 3, 2, 5, 4],
            vec![2, 3, 4, 5, 0, 1],
            vec![0, 1, 0, 1, 0, 1],
            vec![Color::Black, Color::White],
            Some(0),
        )
        .unwrap();
        assert!(map_to_tree(&torus).is_err());
    }
}
