//! Rooted bipartite planar maps as half-edge structures.
//!
//! Orientation conventions used throughout the crate:
//!
//! * `next_cw(d)` is the next dart clockwise around the vertex of `d`.
//! * A corner is named by the dart that follows it in clockwise order, so the
//!   root corner is stored as a dart.
//! * Faces are the orbits of `d ↦ next_cw(mate(d))`. The face of a dart `d`
//!   is the face on the left of `d` when leaving its vertex along it, which is
//!   also the face containing the corner named by `d`. On the outer face this
//!   walk goes clockwise around the map.

mod hypermap;
mod working;

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use thiserror::Error;

pub use hypermap::HypermapCode;
pub use working::{Corner, EdgeTag, WorkingMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("malformed map: {0}")]
    Malformed(String),
    #[error("edge {0} joins two vertices of the same color")]
    NotBipartite(usize),
    #[error("map is not connected")]
    Disconnected,
    #[error("Euler characteristic V - E + F = {0}, expected 2")]
    NotPlanar(i64),
    #[error("root vertex is not black")]
    RootNotBlack,
    #[error("edgeless map must consist of a single black vertex")]
    BadEdgelessMap,
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("unknown dart {0}")]
    UnknownDart(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("corners lie on different faces")]
    CornersOnDifferentFaces,
    #[error("cannot contract loop {0}")]
    ContractLoop(usize),
    #[error("arc of length {len} does not fit around a vertex of degree {degree}")]
    BadArc { len: usize, degree: usize },
    #[error("invalid hypermap code: {0}")]
    InvalidCode(String),
    #[error("hypermap parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::Black => 'b',
            Color::White => 'w',
        }
    }

    pub fn flipped(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Vertex counts by color, face count and outer-face half-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MapStats {
    pub black: usize,
    pub white: usize,
    pub face: usize,
    pub outdeg: usize,
}

impl fmt::Display for MapStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "black={} white={} face={} outdeg={}",
            self.black, self.white, self.face, self.outdeg
        )
    }
}

/// A rooted map given by a dart involution and a clockwise rotation.
///
/// Darts live in `0..dart_count()`. Vertices are indices into the color
/// table; a vertex without darts is isolated. The root is a dart (the one
/// right after the root corner) and is absent only when there are no edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarMap {
    mate: Vec<usize>,
    next_cw: Vec<usize>,
    prev_cw: Vec<usize>,
    dart_vertex: Vec<usize>,
    colors: Vec<Color>,
    root: Option<usize>,
}

impl PlanarMap {
    /// The map with no edge: a single black vertex.
    pub fn edgeless() -> Self {
        Self {
            mate: Vec::new(),
            next_cw: Vec::new(),
            prev_cw: Vec::new(),
            dart_vertex: Vec::new(),
            colors: vec![Color::Black],
            root: None,
        }
    }

    /// Checks structural well-formedness only; see [`PlanarMap::validate`]
    /// for the map invariants.
    pub fn from_parts(
        mate: Vec<usize>,
        next_cw: Vec<usize>,
        dart_vertex: Vec<usize>,
        colors: Vec<Color>,
        root: Option<usize>,
    ) -> Result<Self, MapError> {
        let n = mate.len();
        let bad = |msg: String| Err(MapError::Malformed(msg));
        if next_cw.len() != n || dart_vertex.len() != n {
            return bad("mate, next_cw and dart_vertex lengths differ".into());
        }
        for (d, &m) in mate.iter().enumerate() {
            if m >= n || m == d || mate[m] != d {
                return bad(format!("mate is not a fixed-point-free involution at dart {d}"));
            }
        }
        let mut prev_cw = vec![usize::MAX; n];
        for (d, &nx) in next_cw.iter().enumerate() {
            if nx >= n || prev_cw[nx] != usize::MAX {
                return bad("next_cw is not a permutation".into());
            }
            prev_cw[nx] = d;
        }
        for d in 0..n {
            if dart_vertex[d] >= colors.len() {
                return bad(format!("dart {d} refers to unknown vertex"));
            }
            if dart_vertex[next_cw[d]] != dart_vertex[d] {
                return bad(format!("next_cw leaves the vertex of dart {d}"));
            }
        }
        // one rotation orbit per vertex
        let mut seen_orbit = vec![false; colors.len()];
        let mut visited = vec![false; n];
        for d in 0..n {
            if visited[d] {
                continue;
            }
            let v = dart_vertex[d];
            if seen_orbit[v] {
                return bad(format!("vertex {v} carries more than one rotation cycle"));
            }
            seen_orbit[v] = true;
            let mut x = d;
            while !visited[x] {
                visited[x] = true;
                x = next_cw[x];
            }
        }
        match root {
            None if n > 0 => return bad("missing root dart".into()),
            Some(r) if r >= n => return bad("root dart out of range".into()),
            _ => {}
        }
        Ok(Self {
            mate,
            next_cw,
            prev_cw,
            dart_vertex,
            colors,
            root,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.mate.len()
    }

    pub fn edge_count(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn mate(&self, d: usize) -> usize {
        self.mate[d]
    }

    pub fn next_cw(&self, d: usize) -> usize {
        self.next_cw[d]
    }

    pub fn prev_cw(&self, d: usize) -> usize {
        self.prev_cw[d]
    }

    pub fn vertex(&self, d: usize) -> usize {
        self.dart_vertex[d]
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn root_vertex(&self) -> usize {
        self.root.map_or(0, |r| self.dart_vertex[r])
    }

    /// Next dart along the boundary of the face containing `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.next_cw[self.mate[d]]
    }

    /// Edges as `(d, mate(d))` with `d < mate(d)`, ordered by `d`. Edge ids
    /// used by the rest of the API index into this list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.dart_count())
            .filter(|&d| d < self.mate[d])
            .map(|d| (d, self.mate[d]))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.dart_vertex.iter().filter(|&&x| x == v).count()
    }

    /// Darts around `d`'s vertex in clockwise order, starting at `d`.
    pub fn rotation_from(&self, d: usize) -> Vec<usize> {
        let mut out = vec![d];
        let mut x = self.next_cw[d];
        while x != d {
            out.push(x);
            x = self.next_cw[x];
        }
        out
    }

    /// Face orbits; each starts at its smallest dart, listed by that dart.
    pub fn face_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for d in 0..self.dart_count() {
            if seen[d] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = self.face_next(x);
            }
            faces.push(orbit);
        }
        faces
    }

    /// The face orbit containing `d`, starting at `d`.
    pub fn face_of(&self, d: usize) -> Vec<usize> {
        let mut orbit = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            orbit.push(x);
            x = self.face_next(x);
        }
        orbit
    }

    /// The face containing the root corner (empty for the edgeless map).
    pub fn outer_face(&self) -> Vec<usize> {
        self.root.map(|r| self.face_of(r)).unwrap_or_default()
    }

    /// Corners of the faces other than the outer one.
    pub fn inner_faces(&self) -> Vec<Vec<usize>> {
        let Some(r) = self.root else {
            return Vec::new();
        };
        self.face_orbits()
            .into_iter()
            .filter(|f| !f.contains(&r))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        if self.dart_count() == 0 {
            1
        } else {
            self.face_orbits().len()
        }
    }

    /// Advances `k` corners along the boundary of the face containing `c`.
    pub fn corner_walk_cw(&self, c: usize, k: usize) -> usize {
        (0..k).fold(c, |x, _| self.face_next(x))
    }

    pub fn is_bridge(&self, edge: usize) -> Result<bool, MapError> {
        let (a, b) = *self
            .edges()
            .get(edge)
            .ok_or(MapError::UnknownEdge(edge))?;
        Ok(self.face_of(a).contains(&b))
    }

    pub fn stats(&self) -> MapStats {
        let black = self.colors.iter().filter(|&&c| c == Color::Black).count();
        MapStats {
            black,
            white: self.colors.len() - black,
            face: self.face_count(),
            outdeg: self.outer_face().len() / 2,
        }
    }

    pub fn validate(&self) -> Result<(), MapError> {
        if self.dart_count() == 0 {
            if self.colors != [Color::Black] {
                return Err(MapError::BadEdgelessMap);
            }
            return Ok(());
        }
        for (i, &(a, b)) in self.edges().iter().enumerate() {
            if self.colors[self.dart_vertex[a]] == self.colors[self.dart_vertex[b]] {
                return Err(MapError::NotBipartite(i));
            }
        }
        // connectivity over darts (also rules out isolated vertices)
        let mut seen = vec![false; self.dart_count()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(d) = queue.pop_front() {
            for x in [self.next_cw[d], self.mate[d]] {
                if !seen[x] {
                    seen[x] = true;
                    reached += 1;
                    queue.push_back(x);
                }
            }
        }
        let isolated = (0..self.vertex_count()).any(|v| !self.dart_vertex.contains(&v));
        if reached != self.dart_count() || isolated {
            return Err(MapError::Disconnected);
        }
        let euler = self.vertex_count() as i64 - self.edge_count() as i64
            + self.face_orbits().len() as i64;
        if euler != 2 {
            return Err(MapError::NotPlanar(euler));
        }
        if self.colors[self.root_vertex()] != Color::Black {
            return Err(MapError::RootNotBlack);
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Darts in breadth-first order from the root, following `next_cw` then
    /// `mate` at each dart.
    fn canonical_dart_order(&self) -> Vec<usize> {
        let Some(root) = self.root else {
            return Vec::new();
        };
        let mut seen = vec![false; self.dart_count()];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for x in [self.next_cw[d], self.mate[d]] {
                if !seen[x] {
                    seen[x] = true;
                    order.push(x);
                }
            }
            i += 1;
        }
        order
    }

    /// A string that is equal for two maps iff they are isomorphic by a
    /// root-preserving isomorphism. Assumes a connected map.
    pub fn canonical_code(&self) -> String {
        let order = self.canonical_dart_order();
        let mut label = vec![usize::MAX; self.dart_count()];
        for (i, &d) in order.iter().enumerate() {
            label[d] = i;
        }
        let mut code = format!("{}", self.edge_count());
        if order.is_empty() {
            for c in &self.colors {
                code.push(c.as_char());
            }
        }
        for &d in &order {
            let _ = write!(
                code,
                "|{},{},{}",
                label[self.next_cw[d]],
                label[self.mate[d]],
                self.colors[self.dart_vertex[d]].as_char()
            );
        }
        code
    }

    /// The same map with darts renamed by `perm` (old dart `d` becomes
    /// `perm[d]`) and vertices renamed by `vperm`.
    pub fn relabeled(&self, perm: &[usize], vperm: &[usize]) -> Result<Self, MapError> {
        let n = self.dart_count();
        if perm.len() != n || vperm.len() != self.vertex_count() {
            return Err(MapError::Malformed("relabeling has the wrong length".into()));
        }
        let mut mate = vec![0; n];
        let mut next_cw = vec![0; n];
        let mut dart_vertex = vec![0; n];
        for d in 0..n {
            mate[perm[d]] = perm[self.mate[d]];
            next_cw[perm[d]] = perm[self.next_cw[d]];
            dart_vertex[perm[d]] = vperm[self.dart_vertex[d]];
        }
        let mut colors = vec![Color::Black; self.vertex_count()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[vperm[v]] = c;
        }
        Self::from_parts(mate, next_cw, dart_vertex, colors, self.root.map(|r| perm[r]))
    }

    /// Hypermap code with edges renumbered canonically; the root edge is 1.
    pub fn canonical_hypermap(&self) -> Result<HypermapCode, MapError> {
        self.validate()?;
        let order = self.canonical_dart_order();
        let mut edge_id = vec![usize::MAX; self.dart_count()];
        let mut next_id = 0;
        for &d in &order {
            if edge_id[d] == usize::MAX {
                edge_id[d] = next_id;
                edge_id[self.mate[d]] = next_id;
                next_id += 1;
            }
        }
        self.hypermap_with_ids(&edge_id)
    }

    /// Hypermap code using the edge ids of [`PlanarMap::edges`].
    pub fn to_hypermap(&self) -> Result<HypermapCode, MapError> {
        self.validate()?;
        let mut edge_id = vec![usize::MAX; self.dart_count()];
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            edge_id[a] = i;
            edge_id[b] = i;
        }
        self.hypermap_with_ids(&edge_id)
    }

    fn hypermap_with_ids(&self, edge_id: &[usize]) -> Result<HypermapCode, MapError> {
        let n = self.edge_count();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..self.dart_count() {
            let e = edge_id[d];
            let next = edge_id[self.next_cw[d]];
            match self.colors[self.dart_vertex[d]] {
                Color::Black => sigma[e] = next,
                Color::White => alpha[e] = next,
            }
        }
        let root = self.root.map_or(0, |r| edge_id[r]);
        HypermapCode::new(sigma, alpha, root)
    }

    /// Canonical text form: the hypermap format with canonical edge ids.
    pub fn canonical_text(&self) -> Result<String, MapError> {
        Ok(self.canonical_hypermap()?.to_string())
    }

    /// Graphviz rendering. Black vertices are filled, white ones open; the
    /// root corner is marked by a dashed pointer next to the root edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph map {\n  node [shape=circle, label=\"\", width=0.25];\n");
        for (v, c) in self.colors.iter().enumerate() {
            let style = match c {
                Color::Black => "style=filled, fillcolor=black",
                Color::White => "style=solid, fillcolor=white",
            };
            let _ = writeln!(out, "  v{v} [{style}];");
        }
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            let bold = if Some(a) == self.root || Some(b) == self.root {
                ", penwidth=2.5"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{}\"{}];",
                self.dart_vertex[a],
                self.dart_vertex[b],
                i + 1,
                bold
            );
        }
        let _ = writeln!(
            out,
            "  root [shape=point, width=0.05];\n  root -- v{} [style=dashed, label=\"root\"];",
            self.root_vertex()
        );
        out.push_str("}\n");
        out
    }
}
