//! Dyck paths, bracket vectors, the Tamari order and new intervals.
//!
//! Up steps are indexed from 1, step positions inside a word are also
//! 1-based. Words are written over the ASCII alphabet `{u, d}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::PlaneTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("invalid character {0:?} in Dyck word (expected 'u' or 'd')")]
    InvalidChar(char),
    #[error("not a Dyck path: height drops below zero at step {0}")]
    BelowAxis(usize),
    #[error("not a Dyck path: ends at height {0}")]
    Unbalanced(usize),
    #[error("up-step index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation requires a non-empty path")]
    EmptyPath,
    #[error("malformed interval {0:?} (expected <lower>;<upper>)")]
    MalformedInterval(String),
    #[error("not a new interval: {0}")]
    NotNewInterval(&'static str),
    #[error("type pair (1,0) at index {0}: not a Tamari interval")]
    ForbiddenTypePair(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// A balanced word over `{u, d}` whose prefixes never go below the axis.
///
/// The derived ordering is lexicographic with `u < d`, which is the order
/// used by all enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut height = 0usize;
        for (pos, step) in steps.iter().enumerate() {
            match step {
                Step::Up => height += 1,
                Step::Down => {
                    if height == 0 {
                        return Err(DyckError::BelowAxis(pos + 1));
                    }
                    height -= 1;
                }
            }
        }
        if height != 0 {
            return Err(DyckError::Unbalanced(height));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Half the length.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// 1-based positions of the up steps, in order.
    pub fn up_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::Up)
            .map(|(p, _)| p + 1)
            .collect()
    }

    /// For each up step (in order), the 1-based position of its matching
    /// down step.
    pub fn matchings(&self) -> Vec<usize> {
        let mut result = vec![0; self.size()];
        let mut open: Vec<usize> = Vec::new();
        let mut up_index = 0;
        for (pos, step) in self.steps.iter().enumerate() {
            match step {
                Step::Up => {
                    open.push(up_index);
                    up_index += 1;
                }
                Step::Down => {
                    let i = open.pop().expect("validated Dyck path");
                    result[i] = pos + 1;
                }
            }
        }
        result
    }

    fn check_index(&self, i: usize) -> Result<(), DyckError> {
        if i == 0 || i > self.size() {
            return Err(DyckError::IndexOutOfRange {
                index: i,
                size: self.size(),
            });
        }
        Ok(())
    }

    /// Position of the down step matching the `i`-th up step.
    pub fn match_index(&self, i: usize) -> Result<usize, DyckError> {
        self.check_index(i)?;
        Ok(self.matchings()[i - 1])
    }

    pub fn bracket_vector(&self) -> BracketVector {
        let ups = self.up_positions();
        let values = self
            .matchings()
            .into_iter()
            .zip(ups)
            .map(|(down, up)| (down - up - 1) / 2)
            .collect();
        BracketVector(values)
    }

    /// The factor strictly between the `i`-th up step and its match.
    pub fn factor_between(&self, i: usize) -> Result<DyckPath, DyckError> {
        self.check_index(i)?;
        let up = self.up_positions()[i - 1];
        let down = self.matchings()[i - 1];
        Ok(DyckPath {
            steps: self.steps[up..down - 1].to_vec(),
        })
    }

    /// `w_i = 1` iff the `i`-th up step is immediately followed by an up step.
    pub fn type_word(&self) -> Result<Vec<u8>, DyckError> {
        if self.is_empty() {
            return Err(DyckError::EmptyPath);
        }
        Ok(self
            .up_positions()
            .into_iter()
            .map(|p| u8::from(self.steps.get(p) == Some(&Step::Up)))
            .collect())
    }

    /// Number of up steps starting on the x-axis.
    pub fn rising_contacts(&self) -> usize {
        let mut height = 0usize;
        let mut count = 0;
        for step in &self.steps {
            match step {
                Step::Up => {
                    if height == 0 {
                        count += 1;
                    }
                    height += 1;
                }
                Step::Down => height -= 1,
            }
        }
        count
    }

    /// Reads the path as the depth evolution of a preorder traversal.
    pub fn to_plane_tree(&self) -> PlaneTree {
        let mut children: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![0usize];
        for step in &self.steps {
            match step {
                Step::Up => {
                    let node = children.len();
                    children.push(Vec::new());
                    children[*stack.last().expect("non-empty stack")].push(node);
                    stack.push(node);
                }
                Step::Down => {
                    stack.pop();
                }
            }
        }
        PlaneTree::from_preorder_children(children).expect("preorder construction")
    }

    pub fn from_plane_tree(tree: &PlaneTree) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * tree.size());
        fn walk(tree: &PlaneTree, v: usize, steps: &mut Vec<Step>) {
            for &c in tree.children(v) {
                steps.push(Step::Up);
                walk(tree, c, steps);
                steps.push(Step::Down);
            }
        }
        walk(tree, tree.root(), &mut steps);
        DyckPath { steps }
    }

    /// `u P d`.
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        DyckPath { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'u' => Ok(Step::Up),
                'd' => Ok(Step::Down),
                other => Err(DyckError::InvalidChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::from_steps(steps)
    }
}

/// `V_P(i)`: size of the factor matched by the `i`-th up step. Stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketVector(pub Vec<usize>);

impl BracketVector {
    /// 1-based access.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Pointwise comparison of bracket vectors.
pub fn tamari_leq(lower: &DyckPath, upper: &DyckPath) -> Result<bool, DyckError> {
    if lower.size() != upper.size() {
        return Err(DyckError::SizeMismatch(lower.size(), upper.size()));
    }
    let (vp, vq) = (lower.bracket_vector(), upper.bracket_vector());
    Ok(vp.0.iter().zip(&vq.0).all(|(a, b)| a <= b))
}

/// The new-interval predicate.
///
/// Besides the Tamari comparison, the first up step of `upper` must match
/// its final down step (`V_Q(1) = n - 1`), and `V_P(i) <= V_Q(i+1)` whenever
/// `V_Q(i) > 0`.
pub fn is_new_interval(lower: &DyckPath, upper: &DyckPath) -> Result<bool, DyckError> {
    Ok(new_interval_violation(lower, upper)?.is_none())
}

fn new_interval_violation(
    lower: &DyckPath,
    upper: &DyckPath,
) -> Result<Option<&'static str>, DyckError> {
    if lower.size() != upper.size() {
        return Err(DyckError::SizeMismatch(lower.size(), upper.size()));
    }
    let n = lower.size();
    if n == 0 {
        return Err(DyckError::EmptyPath);
    }
    let (vp, vq) = (lower.bracket_vector(), upper.bracket_vector());
    if vp.0.iter().zip(&vq.0).any(|(a, b)| a > b) {
        return Ok(Some("lower path is not below upper path in the Tamari order"));
    }
    if vq.get(1) != n - 1 {
        return Ok(Some("first up step of the upper path does not match its last step"));
    }
    for i in 1..=n {
        if vq.get(i) > 0 && vp.get(i) > vq.get(i + 1) {
            return Ok(Some("V_P(i) > V_Q(i+1) for some i with V_Q(i) > 0"));
        }
    }
    Ok(None)
}

/// Statistics of a new interval: counts of type pairs and rising contacts
/// of the lower path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalStats {
    pub c00: usize,
    pub c01: usize,
    pub c11: usize,
    pub rcont: usize,
}

impl fmt::Display for IntervalStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c00={} c01={} c11={} rcont={}",
            self.c00, self.c01, self.c11, self.rcont
        )
    }
}

/// Computes the statistics of a pair of paths; a `(1,0)` type pair is
/// reported as an error since it cannot occur in a Tamari interval.
pub fn interval_stats(lower: &DyckPath, upper: &DyckPath) -> Result<IntervalStats, DyckError> {
    if lower.size() != upper.size() {
        return Err(DyckError::SizeMismatch(lower.size(), upper.size()));
    }
    let tp = lower.type_word()?;
    let tq = upper.type_word()?;
    let mut stats = IntervalStats {
        c00: 0,
        c01: 0,
        c11: 0,
        rcont: lower.rising_contacts(),
    };
    for (i, pair) in tp.into_iter().zip(tq).enumerate() {
        match pair {
            (0, 0) => stats.c00 += 1,
            (0, 1) => stats.c01 += 1,
            (1, 1) => stats.c11 += 1,
            _ => return Err(DyckError::ForbiddenTypePair(i + 1)),
        }
    }
    Ok(stats)
}

/// A pair of Dyck paths of equal size `n >= 1` forming a new interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewInterval {
    lower: DyckPath,
    upper: DyckPath,
}

impl NewInterval {
    pub fn new(lower: DyckPath, upper: DyckPath) -> Result<Self, DyckError> {
        if let Some(why) = new_interval_violation(&lower, &upper)? {
            return Err(DyckError::NotNewInterval(why));
        }
        Ok(Self { lower, upper })
    }

    /// The unique interval of size 1, `[ud; ud]`.
    pub fn unit() -> Self {
        let ud = DyckPath {
            steps: vec![Step::Up, Step::Down],
        };
        Self {
            lower: ud.clone(),
            upper: ud,
        }
    }

    pub fn lower(&self) -> &DyckPath {
        &self.lower
    }

    pub fn upper(&self) -> &DyckPath {
        &self.upper
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }

    pub fn stats(&self) -> IntervalStats {
        interval_stats(&self.lower, &self.upper).expect("new intervals have no (1,0) type pair")
    }
}

impl fmt::Display for NewInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.lower, self.upper)
    }
}

impl FromStr for NewInterval {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, up) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| DyckError::MalformedInterval(s.to_string()))?;
        NewInterval::new(lo.parse()?, up.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    // Oracle: the match of the up step at `up_pos` is the first later down
    // step such that the word strictly between is balanced and never dips.
    fn brute_match(word: &str, up_pos: usize) -> usize {
        let chars: Vec<char> = word.chars().collect();
        (up_pos + 1..=chars.len())
            .find(|&j| {
                if chars[j - 1] != 'd' {
                    return false;
                }
                let inner: String = chars[up_pos..j - 1].iter().collect();
                DyckPath::from_str(&inner).is_ok()
            })
            .unwrap()
    }

    fn brute_up_position(word: &str, i: usize) -> usize {
        word.char_indices()
            .filter(|(_, c)| *c == 'u')
            .nth(i - 1)
            .unwrap()
            .0
            + 1
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert_eq!(DyckPath::from_str("ux"), Err(DyckError::InvalidChar('x')));
        assert_eq!(DyckPath::from_str("du"), Err(DyckError::BelowAxis(1)));
        assert_eq!(DyckPath::from_str("uud"), Err(DyckError::Unbalanced(1)));
        assert!(DyckPath::from_str("").unwrap().is_empty());
    }

    #[test]
    fn match_index_examples() {
        for (word, i, expected) in [("ud", 1, 2), ("uudd", 1, 4), ("uuddud", 2, 3)] {
            let oracle = brute_match(word, brute_up_position(word, i));
            assert_eq!(oracle, expected);
            assert_eq!(p(word).match_index(i).unwrap(), expected);
        }
        assert_eq!(
            p("ud").match_index(2),
            Err(DyckError::IndexOutOfRange { index: 2, size: 1 })
        );
        assert!(p("ud").match_index(0).is_err());
    }

    #[test]
    fn bracket_vector_examples() {
        assert_eq!(p("ud").bracket_vector().0, vec![0]);
        assert_eq!(p("uudd").bracket_vector().0, vec![1, 0]);
        assert_eq!(p("uuuddd").bracket_vector().0, vec![2, 1, 0]);
        assert!(p("").bracket_vector().is_empty());
    }

    #[test]
    fn tamari_examples() {
        let q = p("uuddud");
        assert!(tamari_leq(&q, &q).unwrap());
        assert!(tamari_leq(&p("udud"), &p("uudd")).unwrap());
        assert!(!tamari_leq(&p("uudd"), &p("udud")).unwrap());
        assert_eq!(
            tamari_leq(&p("ud"), &p("udud")),
            Err(DyckError::SizeMismatch(1, 2))
        );
    }

    #[test]
    fn type_word_examples() {
        assert_eq!(p("ud").type_word().unwrap(), vec![0]);
        assert_eq!(p("uudd").type_word().unwrap(), vec![1, 0]);
        assert_eq!(p("uuddud").type_word().unwrap(), vec![1, 0, 0]);
        assert_eq!(p("").type_word(), Err(DyckError::EmptyPath));
    }

    #[test]
    fn rising_contact_examples() {
        assert_eq!(p("ud").rising_contacts(), 1);
        assert_eq!(p("udud").rising_contacts(), 2);
        assert_eq!(p("uuddud").rising_contacts(), 2);
        assert_eq!(p("").rising_contacts(), 0);
    }

    #[test]
    fn new_interval_examples() {
        assert!(is_new_interval(&p("ud"), &p("ud")).unwrap());
        assert!(is_new_interval(&p("udud"), &p("uudd")).unwrap());
        assert!(!is_new_interval(&p("uudd"), &p("uudd")).unwrap());
        // Tamari interval whose upper path has two rising contacts.
        assert!(!is_new_interval(&p("udud"), &p("udud")).unwrap());
        assert_eq!(
            is_new_interval(&p(""), &p("")),
            Err(DyckError::EmptyPath)
        );
        assert!(is_new_interval(&p("ud"), &p("uudd")).is_err());
    }

    #[test]
    fn interval_stats_examples() {
        let s = NewInterval::unit().stats();
        assert_eq!((s.c00, s.c01, s.c11, s.rcont), (1, 0, 0, 1));
        let s: IntervalStats = "udud;uudd".parse::<NewInterval>().unwrap().stats();
        assert_eq!((s.c00, s.c01, s.c11, s.rcont), (1, 1, 0, 2));
        let s = "uuddud;uuuddd".parse::<NewInterval>().unwrap().stats();
        assert_eq!((s.c00, s.c01, s.c11, s.rcont), (1, 1, 1, 2));
        assert_eq!(
            interval_stats(&p("uudd"), &p("udud")),
            Err(DyckError::ForbiddenTypePair(1))
        );
    }

    #[test]
    fn factor_examples() {
        assert_eq!(p("uudd").factor_between(1).unwrap(), p("ud"));
        assert_eq!(p("ud").factor_between(1).unwrap(), p(""));
        assert_eq!(p("uuddud").factor_between(1).unwrap(), p("ud"));
        assert!(p("ud").factor_between(3).is_err());
    }

    #[test]
    fn plane_tree_examples() {
        let single = p("").to_plane_tree();
        assert_eq!(single.node_count(), 1);
        let chain = p("uudd").to_plane_tree();
        assert_eq!(chain.children(0), &[1]);
        assert_eq!(chain.children(1), &[2]);
        let cherry = p("udud").to_plane_tree();
        assert_eq!(cherry.children(0), &[1, 2]);
        assert!(cherry.is_leaf(1) && cherry.is_leaf(2));
    }

    #[test]
    fn interval_text_form() {
        let i: NewInterval = "uuddud;uuuddd".parse().unwrap();
        assert_eq!(i.to_string(), "uuddud;uuuddd");
        assert!(matches!(
            "uudd".parse::<NewInterval>(),
            Err(DyckError::MalformedInterval(_))
        ));
        assert!(matches!(
            "uudd;uudd".parse::<NewInterval>(),
            Err(DyckError::NotNewInterval(_))
        ));
    }

    fn arb_dyck(max_size: usize) -> impl Strategy<Value = DyckPath> {
        // Random walk with reflection, then closed off.
        prop::collection::vec(any::<bool>(), 0..=2 * max_size).prop_map(|bits| {
            let mut steps = Vec::new();
            let mut h = 0usize;
            for b in bits {
                if b || h == 0 {
                    steps.push(Step::Up);
                    h += 1;
                } else {
                    steps.push(Step::Down);
                    h -= 1;
                }
            }
            steps.extend(std::iter::repeat_n(Step::Down, h));
            DyckPath::from_steps(steps).unwrap()
        })
    }

    proptest! {
        #[test]
        fn plane_tree_roundtrip(path in arb_dyck(12)) {
            let tree = path.to_plane_tree();
            prop_assert_eq!(tree.node_count(), path.size() + 1);
            prop_assert_eq!(DyckPath::from_plane_tree(&tree), path.clone());
            prop_assert_eq!(path.rising_contacts(), tree.children(tree.root()).len());
        }

        #[test]
        fn bracket_vector_matches_brute_force(path in arb_dyck(10)) {
            let word = path.to_string();
            let v = path.bracket_vector();
            for i in 1..=path.size() {
                let up = brute_up_position(&word, i);
                let down = brute_match(&word, up);
                prop_assert_eq!(v.get(i), (down - up - 1) / 2);
                prop_assert!(v.get(i) <= path.size() - i);
            }
        }

        #[test]
        fn text_roundtrip(path in arb_dyck(12)) {
            prop_assert_eq!(path.to_string().parse::<DyckPath>().unwrap(), path);
        }
    }
}
