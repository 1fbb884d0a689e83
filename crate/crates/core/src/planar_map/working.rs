//! The tagged working structure shared by the map/tree transformations.
//!
//! Edge `e` owns darts `2e` and `2e + 1`, so `mate(d) = d ^ 1`. Deleted
//! edges and contracted vertices leave dead slots behind; ids are stable
//! for the lifetime of a working map. Every edge is tagged either as a map
//! edge or as a tree edge carrying a label.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use super::{Color, MapError, PlanarMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    Map,
    Tree(usize),
}

impl EdgeTag {
    pub fn is_map(self) -> bool {
        self == EdgeTag::Map
    }

    pub fn is_tree(self) -> bool {
        !self.is_map()
    }
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeTag::Map => f.write_str("M"),
            EdgeTag::Tree(label) => write!(f, "T{label}"),
        }
    }
}

/// A place where a new dart can be inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    /// The corner just before this dart in clockwise order.
    Before(usize),
    /// The unique corner of a vertex without darts.
    Isolated(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingMap {
    next: Vec<usize>,
    prev: Vec<usize>,
    vert: Vec<usize>,
    tags: Vec<Option<EdgeTag>>,
    colors: Vec<Color>,
    alive: Vec<bool>,
    anchor: Vec<Option<usize>>,
    root: Option<usize>,
}

pub fn mate(d: usize) -> usize {
    d ^ 1
}

impl WorkingMap {
    /// A map with the given vertices and no edges.
    pub fn with_vertices(colors: Vec<Color>) -> Self {
        let n = colors.len();
        Self {
            next: Vec::new(),
            prev: Vec::new(),
            vert: Vec::new(),
            tags: Vec::new(),
            colors,
            alive: vec![true; n],
            anchor: vec![None; n],
            root: None,
        }
    }

    /// Copies `map`, tagging every edge as a map edge. Edge `i` of
    /// [`PlanarMap::edges`] becomes edge `i` here.
    pub fn from_map(map: &PlanarMap) -> Self {
        let edges = map.edges();
        let mut id = vec![0; map.dart_count()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            id[a] = 2 * i;
            id[b] = 2 * i + 1;
        }
        let mut w = Self::with_vertices(map.colors().to_vec());
        let n = map.dart_count();
        w.next = vec![0; n];
        w.prev = vec![0; n];
        w.vert = vec![0; n];
        w.tags = vec![Some(EdgeTag::Map); edges.len()];
        for d in 0..n {
            w.next[id[d]] = id[map.next_cw(d)];
            w.prev[id[map.next_cw(d)]] = id[d];
            w.vert[id[d]] = map.vertex(d);
            w.anchor[map.vertex(d)] = Some(id[d]);
        }
        w.root = map.root().map(|r| id[r]);
        w
    }

    pub fn dart_slots(&self) -> usize {
        self.next.len()
    }

    pub fn vertex_slots(&self) -> usize {
        self.colors.len()
    }

    pub fn is_live_dart(&self, d: usize) -> bool {
        self.tags.get(d / 2).is_some_and(Option::is_some)
    }

    pub fn is_live_vertex(&self, v: usize) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn live_darts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.next.len()).filter(|&d| self.is_live_dart(d))
    }

    pub fn live_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.tags.len()).filter(|&e| self.tags[e].is_some())
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(|&v| self.alive[v])
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges().count()
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices().count()
    }

    pub fn next_cw(&self, d: usize) -> usize {
        self.next[d]
    }

    pub fn prev_cw(&self, d: usize) -> usize {
        self.prev[d]
    }

    pub fn vertex(&self, d: usize) -> usize {
        self.vert[d]
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn tag(&self, d: usize) -> Option<EdgeTag> {
        self.tags[d / 2]
    }

    pub fn set_tag(&mut self, e: usize, tag: EdgeTag) -> Result<(), MapError> {
        self.check_edge(e)?;
        self.tags[e] = Some(tag);
        Ok(())
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn set_root(&mut self, root: Option<usize>) {
        self.root = root;
    }

    /// Some dart at `v`, if any.
    pub fn anchor(&self, v: usize) -> Option<usize> {
        self.anchor[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.anchor[v].map_or(0, |d| self.rotation_from(d).len())
    }

    pub fn rotation_from(&self, d: usize) -> Vec<usize> {
        let mut out = vec![d];
        let mut x = self.next[d];
        while x != d {
            out.push(x);
            x = self.next[x];
        }
        out
    }

    pub fn face_next(&self, d: usize) -> usize {
        self.next[mate(d)]
    }

    pub fn face_of(&self, d: usize) -> Vec<usize> {
        let mut orbit = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            orbit.push(x);
            x = self.face_next(x);
        }
        orbit
    }

    pub fn corner_walk_cw(&self, d: usize, k: usize) -> usize {
        (0..k).fold(d, |x, _| self.face_next(x))
    }

    /// Whether removing the edge of `d` disconnects its component.
    pub fn is_bridge(&self, d: usize) -> bool {
        self.face_of(d).contains(&mate(d))
    }

    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.next.len()];
        let mut faces = Vec::new();
        for d in self.live_darts().collect::<Vec<_>>() {
            if !seen[d] {
                let orbit = self.face_of(d);
                for &x in &orbit {
                    seen[x] = true;
                }
                faces.push(orbit);
            }
        }
        faces
    }

    /// Connected component id per vertex slot (dead slots get `usize::MAX`),
    /// and the number of components.
    pub fn components(&self, edge_filter: impl Fn(EdgeTag) -> bool) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.colors.len()];
        let mut count = 0;
        for v in self.live_vertices().collect::<Vec<_>>() {
            if comp[v] != usize::MAX {
                continue;
            }
            comp[v] = count;
            let mut queue = VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                let Some(a) = self.anchor[x] else { continue };
                for d in self.rotation_from(a) {
                    if !edge_filter(self.tag(d).expect("live dart")) {
                        continue;
                    }
                    let y = self.vert[mate(d)];
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Every component is a genus-0 embedding: `V - E + F = 2` for each
    /// component with edges, with isolated vertices counted separately.
    pub fn is_planar(&self) -> bool {
        let (comp, count) = self.components(|_| true);
        let mut euler = vec![0i64; count];
        for v in self.live_vertices() {
            euler[comp[v]] += if self.anchor[v].is_some() { 1 } else { 2 };
        }
        for e in self.live_edges() {
            euler[comp[self.vert[2 * e]]] -= 1;
        }
        for face in self.face_orbits() {
            euler[comp[self.vert[face[0]]]] += 1;
        }
        euler.iter().all(|&x| x == 2)
    }

    fn check_edge(&self, e: usize) -> Result<(), MapError> {
        if self.tags.get(e).is_some_and(Option::is_some) {
            Ok(())
        } else {
            Err(MapError::UnknownEdge(e))
        }
    }

    fn check_dart(&self, d: usize) -> Result<(), MapError> {
        if self.is_live_dart(d) {
            Ok(())
        } else {
            Err(MapError::UnknownDart(d))
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), MapError> {
        if self.is_live_vertex(v) {
            Ok(())
        } else {
            Err(MapError::UnknownVertex(v))
        }
    }

    fn unlink(&mut self, d: usize) {
        let v = self.vert[d];
        let (p, n) = (self.prev[d], self.next[d]);
        if n == d {
            self.anchor[v] = None;
        } else {
            self.next[p] = n;
            self.prev[n] = p;
            if self.anchor[v] == Some(d) {
                self.anchor[v] = Some(n);
            }
        }
    }

    fn link(&mut self, d: usize, corner: Corner) {
        match corner {
            Corner::Isolated(v) => {
                self.next[d] = d;
                self.prev[d] = d;
                self.vert[d] = v;
                self.anchor[v] = Some(d);
            }
            Corner::Before(x) => {
                let p = self.prev[x];
                self.next[p] = d;
                self.prev[d] = p;
                self.next[d] = x;
                self.prev[x] = d;
                self.vert[d] = self.vert[x];
            }
        }
    }

    pub fn add_vertex(&mut self, color: Color) -> usize {
        self.colors.push(color);
        self.alive.push(true);
        self.anchor.push(None);
        self.colors.len() - 1
    }

    pub fn delete_edge(&mut self, e: usize) -> Result<(), MapError> {
        self.check_edge(e)?;
        for d in [2 * e, 2 * e + 1] {
            self.unlink(d);
        }
        self.tags[e] = None;
        if let Some(r) = self.root.filter(|r| r / 2 == e) {
            self.root = Some(self.next[r]).filter(|&x| x / 2 != e);
        }
        Ok(())
    }

    /// Whether two vertices lie in the same component.
    fn connected(&self, u: usize, v: usize) -> bool {
        let (comp, _) = self.components(|_| true);
        comp[u] == comp[v]
    }

    fn corner_vertex(&self, c: Corner) -> Result<usize, MapError> {
        match c {
            Corner::Before(d) => {
                self.check_dart(d)?;
                Ok(self.vert[d])
            }
            Corner::Isolated(v) => {
                self.check_vertex(v)?;
                if self.anchor[v].is_some() {
                    return Err(MapError::Malformed(format!("vertex {v} is not isolated")));
                }
                Ok(v)
            }
        }
    }

    /// Adds an edge with dart `2e` at `c1` and `2e + 1` at `c2`. The corners
    /// must share a face unless they lie in different components, so the
    /// result stays planar.
    pub fn add_edge(&mut self, c1: Corner, c2: Corner, tag: EdgeTag) -> Result<usize, MapError> {
        let u = self.corner_vertex(c1)?;
        let v = self.corner_vertex(c2)?;
        if let (Corner::Before(a), Corner::Before(b)) = (c1, c2) {
            if self.connected(u, v) && !self.face_of(a).contains(&b) {
                return Err(MapError::CornersOnDifferentFaces);
            }
        }
        if c1 == c2 && matches!(c1, Corner::Isolated(_)) {
            return Err(MapError::Malformed("cannot attach both ends to one isolated corner".into()));
        }
        let e = self.tags.len();
        self.tags.push(Some(tag));
        self.next.extend([0, 0]);
        self.prev.extend([0, 0]);
        self.vert.extend([u, v]);
        self.link(2 * e, c1);
        // the second end may share the first end's isolated vertex
        let c2 = match c2 {
            Corner::Isolated(w) if w == u => Corner::Before(2 * e),
            other => other,
        };
        self.link(2 * e + 1, c2);
        Ok(e)
    }

    /// Contracts the edge of `d`; the vertex of `d` survives and the darts
    /// around the other end take the place of `d` in its rotation.
    pub fn contract_edge(&mut self, d: usize) -> Result<(), MapError> {
        self.check_dart(d)?;
        let m = mate(d);
        let (u, v) = (self.vert[d], self.vert[m]);
        if u == v {
            return Err(MapError::ContractLoop(d / 2));
        }
        let others = self.rotation_from(m)[1..].to_vec();
        let after = self.next[d];
        let before = self.prev[d];
        if others.is_empty() {
            self.unlink(d);
        } else {
            for &x in &others {
                self.vert[x] = u;
            }
            let (first, last) = (others[0], *others.last().expect("non-empty"));
            if after == d {
                self.next[last] = first;
                self.prev[first] = last;
            } else {
                self.next[before] = first;
                self.prev[first] = before;
                self.next[last] = after;
                self.prev[after] = last;
            }
            self.anchor[u] = Some(first);
        }
        self.tags[d / 2] = None;
        self.alive[v] = false;
        self.anchor[v] = None;
        if self.root.is_some_and(|r| r / 2 == d / 2) {
            self.root = others.first().copied().or(Some(after).filter(|&x| x != d));
        }
        Ok(())
    }

    /// Moves the `len` darts starting at `first` (clockwise) to a new vertex
    /// of the same color and returns it. Both parts keep their cyclic order.
    pub fn split_vertex(&mut self, first: usize, len: usize) -> Result<usize, MapError> {
        self.check_dart(first)?;
        let v = self.vert[first];
        let rot = self.rotation_from(first);
        if len > rot.len() {
            return Err(MapError::BadArc {
                len,
                degree: rot.len(),
            });
        }
        let w = self.add_vertex(self.colors[v]);
        let (arc, rest) = rot.split_at(len);
        for part in [arc, rest] {
            for (i, &x) in part.iter().enumerate() {
                let nx = part[(i + 1) % part.len()];
                self.next[x] = nx;
                self.prev[nx] = x;
            }
        }
        for &x in arc {
            self.vert[x] = w;
        }
        self.anchor[w] = arc.first().copied();
        self.anchor[v] = rest.first().copied();
        Ok(w)
    }

    /// Compacts the live part into a [`PlanarMap`]. Tags are dropped.
    pub fn to_map(&self) -> Result<PlanarMap, MapError> {
        let mut dart_id = vec![usize::MAX; self.next.len()];
        let darts: Vec<usize> = self.live_darts().collect();
        for (i, &d) in darts.iter().enumerate() {
            dart_id[d] = i;
        }
        let mut vertex_id = vec![usize::MAX; self.colors.len()];
        let mut colors = Vec::new();
        for v in self.live_vertices() {
            vertex_id[v] = colors.len();
            colors.push(self.colors[v]);
        }
        let mate_v = darts.iter().map(|&d| dart_id[mate(d)]).collect();
        let next_v = darts.iter().map(|&d| dart_id[self.next[d]]).collect();
        let vert_v = darts.iter().map(|&d| vertex_id[self.vert[d]]).collect();
        let root = self.root.map(|r| dart_id[r]);
        PlanarMap::from_parts(mate_v, next_v, vert_v, colors, root)
    }

    /// One-line form: darts `2k-1, 2k` belong to edge `k` (live edges
    /// renumbered from 1), `rot` lists each live vertex's clockwise
    /// rotation (`()` when isolated), then vertex colors, edge tags and the
    /// root dart (`-` when absent).
    pub fn to_line(&self) -> String {
        let mut edge_id = vec![usize::MAX; self.tags.len()];
        for (i, e) in self.live_edges().enumerate() {
            edge_id[e] = i;
        }
        let label = |d: usize| 2 * edge_id[d / 2] + d % 2 + 1;
        let mut out = format!("n={} rot=", self.edge_count());
        for v in self.live_vertices() {
            out.push('(');
            if let Some(a) = self.anchor[v] {
                let names: Vec<String> =
                    self.rotation_from(a).into_iter().map(|d| label(d).to_string()).collect();
                out.push_str(&names.join(" "));
            }
            out.push(')');
        }
        out.push_str(" col=");
        for v in self.live_vertices() {
            out.push(self.colors[v].as_char());
        }
        out.push_str(" tag=");
        let tags: Vec<String> = self
            .live_edges()
            .map(|e| self.tags[e].expect("live edge").to_string())
            .collect();
        out.push_str(&tags.join(","));
        match self.root {
            Some(r) => {
                let _ = write!(out, " root={}", label(r));
            }
            None => out.push_str(" root=-"),
        }
        out
    }

    /// Graphviz frame: map edges solid, tree edges dashed with their label.
    pub fn to_dot(&self, highlight: Option<usize>) -> String {
        let mut out = String::from("graph frame {\n  node [shape=circle, label=\"\", width=0.25];\n");
        for v in self.live_vertices() {
            let fill = match self.colors[v] {
                Color::Black => "black",
                Color::White => "white",
            };
            let ring = if Some(v) == highlight { ", color=red, penwidth=2" } else { "" };
            let _ = writeln!(out, "  v{v} [style=filled, fillcolor={fill}{ring}];");
        }
        for e in self.live_edges() {
            let (a, b) = (self.vert[2 * e], self.vert[2 * e + 1]);
            let style = match self.tags[e].expect("live edge") {
                EdgeTag::Map => String::from("style=solid"),
                EdgeTag::Tree(l) => format!("style=dashed, label=\"{l}\""),
            };
            let _ = writeln!(out, "  v{a} -- v{b} [{style}];");
        }
        out.push_str("}\n");
        out
    }
}
