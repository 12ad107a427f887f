//! Exhaustive listing of X-trees for small leaf sets.

use std::collections::{BTreeMap, BTreeSet};

use super::{EdgeId, TreeError, VertexId, XTree};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ENUMERATION_LEAVES: usize = 8;

/// One representative of every equivalence class of X-trees on `labels`,
/// sorted by canonical Newick string.
///
/// Binary trees come from inserting leaves one at a time on every edge; the
/// remaining trees are obtained by contracting sets of interior edges.
pub fn enumerate_xtrees<S: AsRef<str>>(labels: &[S], max_leaves: usize) -> Result<Vec<XTree>> {
    let mut labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    labels.sort();
    let n = labels.len();
    if n > max_leaves {
        return Err(Error::ScaleBound {
            what: "leaves for tree enumeration",
            limit: max_leaves,
            actual: n,
        });
    }
    if n < 3 {
        return Err(TreeError::TooFewLeaves(n).into());
    }
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Err(TreeError::DuplicateLeaf(labels[0].clone()).into());
    }

    let mut found: BTreeMap<String, XTree> = BTreeMap::new();
    for edges in binary_shapes(n) {
        let leaves = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), VertexId(i)))
            .collect();
        let edge_list = edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| (EdgeId(k), VertexId(u), VertexId(v)))
            .collect();
        let binary = XTree::from_parts(leaves, edge_list)?;
        let interior = binary.interior_edges();
        for mask in 0u64..(1u64 << interior.len()) {
            let f: BTreeSet<EdgeId> = interior
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let t = binary.contract(&f)?;
            found.entry(t.canonical_newick()).or_insert(t);
        }
    }
    Ok(found.into_values().collect())
}

/// Edge lists of all binary trees with leaves `0..n` (leaf `i` is vertex `i`).
fn binary_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    // vertex ids: leaves 0..n, interior n..
    let mut shapes = vec![vec![(0, n), (1, n), (2, n)]];
    for leaf in 3..n {
        let mut next = Vec::with_capacity(shapes.len() * (2 * leaf - 3));
        for edges in &shapes {
            let fresh = n + leaf - 2;
            for k in 0..edges.len() {
                let (u, v) = edges[k];
                let mut e = edges.clone();
                e[k] = (u, fresh);
                e.push((fresh, v));
                e.push((leaf, fresh));
                next.push(e);
            }
        }
        shapes = next;
    }
    shapes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_xtrees(&labels(3), 8).unwrap().len(), 1);
        assert_eq!(enumerate_xtrees(&labels(4), 8).unwrap().len(), 4);
        assert_eq!(enumerate_xtrees(&labels(5), 8).unwrap().len(), 26);
        assert_eq!(enumerate_xtrees(&labels(6), 8).unwrap().len(), 236);
    }

    #[test]
    fn binary_shape_counts_are_double_factorials() {
        assert_eq!(binary_shapes(4).len(), 3);
        assert_eq!(binary_shapes(5).len(), 15);
        assert_eq!(binary_shapes(6).len(), 105);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_xtrees(&labels(9), 8),
            Err(Error::ScaleBound {
                limit: 8,
                actual: 9,
                ..
            })
        ));
        assert!(enumerate_xtrees(&labels(2), 8).is_err());
    }
}
