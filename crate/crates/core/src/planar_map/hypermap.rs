//! Permutation-pair encoding of bipartite maps.
//!
//! Edges are the points permuted. `sigma` rotates edges clockwise around
//! their black end, `alpha` around their white end, and the faces are the
//! cycles of `e ↦ sigma(alpha(e))`, each of length half the face degree.
//! Internally everything is 0-based; the text form is 1-based:
//!
//! ```text
//! n=2
//! sigma=(1 2)
//! alpha=(1 2)
//! root=1
//! ```

use std::fmt;
use std::str::FromStr;

use super::{Color, MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypermapCode {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    root: usize,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Disjoint cycles, each starting at its least element, ordered by it.
pub(crate) fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

pub(crate) fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if !seen[start] {
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    count
}

/// Whether the group generated by two permutations acts transitively.
pub(crate) fn is_transitive(a: &[usize], b: &[usize]) -> bool {
    if a.is_empty() {
        return true;
    }
    let mut seen = vec![false; a.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for y in [a[x], b[x]] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == a.len()
}

impl HypermapCode {
    /// Checks both permutations and the root; does not check transitivity or
    /// genus (see [`HypermapCode::validate`]).
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>, root: usize) -> Result<Self, MapError> {
        if sigma.len() != alpha.len() {
            return Err(MapError::InvalidCode("sigma and alpha sizes differ".into()));
        }
        if !is_permutation(&sigma) || !is_permutation(&alpha) {
            return Err(MapError::InvalidCode("not a permutation".into()));
        }
        if !sigma.is_empty() && root >= sigma.len() {
            return Err(MapError::InvalidCode("root edge out of range".into()));
        }
        Ok(Self { sigma, alpha, root })
    }

    pub fn edgeless() -> Self {
        Self {
            sigma: Vec::new(),
            alpha: Vec::new(),
            root: 0,
        }
    }

    /// The text form with fields separated by single spaces.
    pub fn to_line(&self) -> String {
        self.to_string().replace('\n', " ")
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// 0-based root edge.
    pub fn root(&self) -> usize {
        self.root
    }

    /// `e ↦ sigma(alpha(e))`.
    pub fn face_permutation(&self) -> Vec<usize> {
        self.alpha.iter().map(|&a| self.sigma[a]).collect()
    }

    pub fn validate(&self) -> Result<(), MapError> {
        if !is_transitive(&self.sigma, &self.alpha) {
            return Err(MapError::InvalidCode("permutations do not act transitively".into()));
        }
        let total = cycle_count(&self.sigma)
            + cycle_count(&self.alpha)
            + cycle_count(&self.face_permutation());
        if !self.sigma.is_empty() && total != self.edge_count() + 2 {
            return Err(MapError::InvalidCode(format!(
                "cycle count {total} != n + 2 (genus is not 0)"
            )));
        }
        Ok(())
    }

    /// Builds the map: edge `e` has black dart `2e` and white dart `2e + 1`.
    /// Black vertices are the cycles of `sigma`, followed by the white
    /// vertices, the cycles of `alpha`.
    pub fn to_map(&self) -> PlanarMap {
        let n = self.edge_count();
        if n == 0 {
            return PlanarMap::edgeless();
        }
        let mut next_cw = vec![0; 2 * n];
        let mut dart_vertex = vec![0; 2 * n];
        let mut colors = Vec::new();
        for (perm, parity, color) in [(&self.sigma, 0, Color::Black), (&self.alpha, 1, Color::White)] {
            for cycle in cycles(perm) {
                let v = colors.len();
                colors.push(color);
                for e in cycle {
                    next_cw[2 * e + parity] = 2 * perm[e] + parity;
                    dart_vertex[2 * e + parity] = v;
                }
            }
        }
        let mate = (0..2 * n).map(|d| d ^ 1).collect();
        PlanarMap::from_parts(mate, next_cw, dart_vertex, colors, Some(2 * self.root))
            .expect("hypermap codes describe well-formed maps")
    }

    /// Validates, then builds the map.
    pub fn try_to_map(&self) -> Result<PlanarMap, MapError> {
        self.validate()?;
        Ok(self.to_map())
    }
}

fn write_cycles(f: &mut fmt::Formatter<'_>, p: &[usize]) -> fmt::Result {
    for cycle in cycles(p) {
        f.write_str("(")?;
        for (i, x) in cycle.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for HypermapCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.edge_count())?;
        if self.edge_count() == 0 {
            return Ok(());
        }
        f.write_str("\nsigma=")?;
        write_cycles(f, &self.sigma)?;
        f.write_str("\nalpha=")?;
        write_cycles(f, &self.alpha)?;
        write!(f, "\nroot={}", self.root + 1)
    }
}

fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>, MapError> {
    let err = |m: &str| MapError::Parse(format!("{m} in {text:?}"));
    let mut perm = vec![usize::MAX; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let items = body[..close]
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                _ => Err(err("bad cycle entry")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if items.is_empty() {
            return Err(err("empty cycle"));
        }
        for (i, &x) in items.iter().enumerate() {
            if perm[x] != usize::MAX {
                return Err(err("repeated entry"));
            }
            perm[x] = items[(i + 1) % items.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    if perm.contains(&usize::MAX) {
        return Err(err("missing entry (fixed points must be written)"));
    }
    Ok(perm)
}

impl FromStr for HypermapCode {
    type Err = MapError;

    /// Accepts the four `key=value` fields on separate lines (or `n=0`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut text = s.to_string();
        for key in ["sigma=", "alpha=", "root="] {
            text = text.replace(key, &format!("\n{key}"));
        }
        let mut fields = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let mut field = |key: &str| -> Result<String, MapError> {
            let line = fields
                .next()
                .ok_or_else(|| MapError::Parse(format!("missing {key}= line")))?;
            line.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| MapError::Parse(format!("expected {key}=, got {line:?}")))
        };
        let n: usize = field("n")?
            .trim()
            .parse()
            .map_err(|_| MapError::Parse("bad edge count".into()))?;
        if n == 0 {
            if fields.next().is_some() {
                return Err(MapError::Parse("trailing input after n=0".into()));
            }
            return Ok(Self::edgeless());
        }
        let sigma = parse_cycles(&field("sigma")?, n)?;
        let alpha = parse_cycles(&field("alpha")?, n)?;
        let root: usize = field("root")?
            .trim()
            .parse()
            .map_err(|_| MapError::Parse("bad root".into()))?;
        if fields.next().is_some() {
            return Err(MapError::Parse("trailing input".into()));
        }
        if root == 0 || root > n {
            return Err(MapError::Parse("root edge out of range".into()));
        }
        Self::new(sigma, alpha, root - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let single = HypermapCode::new(vec![0], vec![0], 0).unwrap();
        assert_eq!(single.to_string(), "n=1\nsigma=(1)\nalpha=(1)\nroot=1");
        let m = single.to_map();
        assert_eq!(m.stats().outdeg, 1);
        assert_eq!(m.to_hypermap().unwrap(), single);

        let double = HypermapCode::new(vec![1, 0], vec![1, 0], 0).unwrap();
        assert_eq!(double.to_string(), "n=2\nsigma=(1 2)\nalpha=(1 2)\nroot=1");
        assert_eq!(double.to_map().to_hypermap().unwrap(), double);

        let path = HypermapCode::new(vec![0, 1], vec![1, 0], 0).unwrap();
        assert_eq!(path.to_string(), "n=2\nsigma=(1)(2)\nalpha=(1 2)\nroot=1");
        assert_eq!(path.to_map().stats().outdeg, 2);

        assert_eq!(HypermapCode::edgeless().to_string(), "n=0");
        assert_eq!(double.to_line(), "n=2 sigma=(1 2) alpha=(1 2) root=1");
        assert_eq!(double.to_line().parse::<HypermapCode>().unwrap(), double);
        assert_eq!(HypermapCode::edgeless().to_map(), PlanarMap::edgeless());
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let text = "n=3\nsigma=(1 3)(2)\nalpha=(1)(2 3)\nroot=2";
        let code: HypermapCode = text.parse().unwrap();
        assert_eq!(code.to_string(), text);
        assert_eq!("n=0".parse::<HypermapCode>().unwrap(), HypermapCode::edgeless());
        assert!("n=2\nsigma=(1 2)\nalpha=(1)\nroot=1".parse::<HypermapCode>().is_err());
        assert!("n=2\nsigma=(1 2)\nalpha=(1 1)\nroot=1".parse::<HypermapCode>().is_err());
        assert!("n=2\nsigma=(1 2)\nalpha=(1 2)\nroot=3".parse::<HypermapCode>().is_err());
        assert!("n=1\nalpha=(1)\nsigma=(1)\nroot=1".parse::<HypermapCode>().is_err());
        assert!("n=0\nroot=1".parse::<HypermapCode>().is_err());
    }

    #[test]
    fn validation() {
        assert!(HypermapCode::new(vec![0], vec![0], 0).unwrap().validate().is_ok());
        // two disjoint single edges: not transitive
        let split = HypermapCode::new(vec![0, 1], vec![0, 1], 0).unwrap();
        assert!(split.validate().is_err());
        // sigma = alpha = (1 2 3): faces are cycles of (1 3 2), one face, genus 1
        let torus = HypermapCode::new(vec![1, 2, 0], vec![1, 2, 0], 0).unwrap();
        assert!(torus.validate().is_err());
        assert!(HypermapCode::new(vec![0, 0], vec![0, 1], 0).is_err());
    }
}
