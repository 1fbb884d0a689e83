//! Exhaustive generators, the permutation-pair oracle for maps, the closed
//! counting formula and generating-function coefficient tables.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::dyck::{is_new_interval, DyckPath, NewInterval, Step};
use crate::planar_map::{HypermapCode, PlanarMap};
use crate::tree::{DegreeTree, PlaneTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("the counting formula needs n >= 2, got {0}")]
    FormulaDomain(usize),
}

/// All Dyck paths of size `n`, lexicographic with `u < d`.
pub fn enum_dyck(n: usize) -> Vec<DyckPath> {
    fn extend(prefix: &mut Vec<Step>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
        if downs == n {
            out.push(DyckPath::from_steps(prefix.clone()).expect("balanced by construction"));
            return;
        }
        if ups < n {
            prefix.push(Step::Up);
            extend(prefix, ups + 1, downs, n, out);
            prefix.pop();
        }
        if downs < ups {
            prefix.push(Step::Down);
            extend(prefix, ups, downs + 1, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

/// All new intervals of size `n >= 1`, by filtering pairs of Dyck paths;
/// ordered by lower path, then upper path.
pub fn enum_new_intervals(n: usize) -> Vec<NewInterval> {
    if n == 0 {
        return Vec::new();
    }
    let paths = enum_dyck(n);
    paths
        .par_iter()
        .flat_map_iter(|lower| {
            paths
                .iter()
                .filter(move |upper| is_new_interval(lower, upper).expect("same size"))
                .map(move |upper| NewInterval::new(lower.clone(), upper.clone()).expect("checked"))
        })
        .collect()
}

/// All plane trees with `n` edges, in the order of their Dyck paths.
pub fn enum_plane_trees(n: usize) -> Vec<PlaneTree> {
    enum_dyck(n).iter().map(DyckPath::to_plane_tree).collect()
}

/// All valid edge labelings of one plane tree, sorted by label vector.
pub fn degree_labelings(tree: &PlaneTree) -> Vec<Vec<usize>> {
    let internal: Vec<usize> = tree.reverse_preorder().into_iter().filter(|&v| !tree.is_leaf(v)).collect();
    let mut labels = vec![0; tree.node_count()];
    let mut ell = vec![0usize; tree.node_count()];
    let mut out = Vec::new();

    fn assign(
        tree: &PlaneTree,
        internal: &[usize],
        labels: &mut Vec<usize>,
        ell: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some((&v, rest)) = internal.split_first() else {
            out.push(labels.clone());
            return;
        };
        let kids = tree.children(v);
        let first = kids[0];
        let base = kids.len() + kids.iter().map(|&c| ell[c]).sum::<usize>();
        for a in 0..=ell[first] {
            labels[first] = a;
            ell[v] = base - a;
            assign(tree, rest, labels, ell, out);
        }
        labels[first] = 0;
    }

    assign(tree, &internal, &mut labels, &mut ell, &mut out);
    out.sort();
    out
}

/// All degree trees of size `n`: plane trees in Dyck order, each with its
/// labelings in increasing order.
pub fn enum_degree_trees(n: usize) -> Vec<DegreeTree> {
    enum_plane_trees(n)
        .into_iter()
        .flat_map(|t| {
            degree_labelings(&t)
                .into_iter()
                .map(move |labels| DegreeTree::new(t.clone(), labels).expect("label count matches"))
        })
        .collect()
}

/// Whether a permutation pair describes a connected genus-0 map.
pub fn is_planar_pair(sigma: &[usize], alpha: &[usize]) -> bool {
    HypermapCode::new(sigma.to_vec(), alpha.to_vec(), 0).is_ok_and(|h| h.validate().is_ok())
}

/// Every rooted bipartite planar map with `n` edges, found by scanning all
/// permutation pairs with the root on edge 1 and keeping one map per
/// canonical code. Sorted by canonical code.
pub fn enum_maps_oracle(n: usize) -> Vec<PlanarMap> {
    if n == 0 {
        return vec![PlanarMap::edgeless()];
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let found: BTreeMap<String, PlanarMap> = perms
        .par_iter()
        .flat_map_iter(|sigma| {
            perms.iter().filter_map(move |alpha| {
                let code = HypermapCode::new(sigma.clone(), alpha.clone(), 0).expect("permutations");
                code.validate().ok()?;
                let map = code.to_map();
                Some((map.canonical_code(), map))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// `3 * 2^(n-2) * (2n-2)! / ((n-1)! (n+1)!)`, the number of new intervals
/// of size `n`.
pub fn count_formula(n: usize) -> Result<BigUint, EnumError> {
    if n < 2 {
        return Err(EnumError::FormulaDomain(n));
    }
    let factorial = |k: usize| (1..=k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i));
    let numerator = BigUint::from(3u32) * (BigUint::from(1u32) << (n - 2)) * factorial(2 * n - 2);
    Ok(numerator / (factorial(n - 1) * factorial(n + 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Intervals,
    Maps,
}

/// Exponent vector `(n, i, j, k, l)` of `t^n x^i u^j v^k w^l`.
pub type Monomial = [usize; 5];

/// Coefficients of a generating function, zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GfTable {
    coeffs: BTreeMap<Monomial, u64>,
}

impl GfTable {
    pub fn add(&mut self, m: Monomial, count: u64) {
        if count > 0 {
            *self.coeffs.entry(m).or_default() += count;
        }
    }

    pub fn get(&self, m: &Monomial) -> u64 {
        self.coeffs.get(m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &u64)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of coefficients at `t^n`.
    pub fn total(&self, n: usize) -> u64 {
        self.coeffs.iter().filter(|(m, _)| m[0] == n).map(|(_, c)| c).sum()
    }

    /// Multiplies by a monomial.
    pub fn times(&self, by: Monomial) -> GfTable {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, &c)| (std::array::from_fn(|i| m[i] + by[i]), c))
            .collect();
        GfTable { coeffs }
    }

    /// Keeps the terms of degree at most `max_n` in `t`.
    pub fn truncated(&self, max_n: usize) -> GfTable {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(m, _)| m[0] <= max_n)
            .map(|(m, &c)| (*m, c))
            .collect();
        GfTable { coeffs }
    }

    /// Renames `(u, v, w)`: the exponent of variable `2 + i` moves to
    /// position `2 + perm[i]`.
    pub fn permute_uvw(&self, perm: [usize; 3]) -> GfTable {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, &c)| {
                let mut out = *m;
                for i in 0..3 {
                    out[2 + perm[i]] = m[2 + i];
                }
                (out, c)
            })
            .collect();
        GfTable { coeffs }
    }

    /// Monomials whose coefficients differ, with both values.
    pub fn differences(&self, other: &GfTable) -> Vec<(Monomial, u64, u64)> {
        let keys: std::collections::BTreeSet<&Monomial> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter()
            .filter(|m| self.get(m) != other.get(m))
            .map(|m| (*m, self.get(m), other.get(m)))
            .collect()
    }
}

/// Sorted lines `n i j k l count`.
impl fmt::Display for GfTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.coeffs {
            writeln!(f, "{} {} {} {} {} {}", m[0], m[1], m[2], m[3], m[4], c)?;
        }
        Ok(())
    }
}

/// Intervals contribute `t^n x^(rcont-1) u^c00 v^c01 w^c11` (sizes
/// `1..=max_n`); maps contribute `t^n x^outdeg u^black v^white w^face`
/// (edge counts `0..=max_n`, from the oracle).
pub fn gf_table(family: Family, max_n: usize) -> GfTable {
    let mut table = GfTable::default();
    match family {
        Family::Intervals => {
            for n in 1..=max_n {
                for i in enum_new_intervals(n) {
                    let s = i.stats();
                    table.add([n, s.rcont - 1, s.c00, s.c01, s.c11], 1);
                }
            }
        }
        Family::Maps => {
            for n in 0..=max_n {
                for m in enum_maps_oracle(n) {
                    let s = m.stats();
                    table.add([n, s.outdeg, s.black, s.white, s.face], 1);
                }
            }
        }
    }
    table
}
