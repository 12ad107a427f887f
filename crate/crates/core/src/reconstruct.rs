//! Recovering a tree from the rank function of its matroid, comparing
//! matroids, and testing whether a tree matroid is binary.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::TreeMatroid;
use crate::tree::{enumerate_xtrees, Cord, CordSet, Quartet, QuartetTopology, TreeError, XTree};

pub const DEFAULT_MAX_CIRCUIT_LEAVES: usize = 6;

/// The resolved quartets `ab|cd` of a tree, at most one per 4-subset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuartetSet {
    pub resolved: BTreeSet<Quartet>,
}

impl QuartetSet {
    /// Read off path lengths in the tree itself.
    pub fn of_tree(tree: &XTree) -> Self {
        let mut resolved = BTreeSet::new();
        for four in four_subsets(tree.labels()) {
            let q = tree
                .quartet_topology([&four[0], &four[1], &four[2], &four[3]])
                .expect("four distinct leaves of the tree");
            if let QuartetTopology::Resolved(q) = q {
                resolved.insert(q);
            }
        }
        QuartetSet { resolved }
    }

    pub fn len(&self) -> usize {
        self.resolved.len()
    }

    pub fn is_empty(&self) -> bool {
        self.resolved.is_empty()
    }
}

fn four_subsets(labels: &[String]) -> Vec<[String; 4]> {
    let n = labels.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    out.push([
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[k].clone(),
                        labels[l].clone(),
                    ]);
                }
            }
        }
    }
    out
}

fn cord(x: &str, y: &str) -> Cord {
    Cord::new(x, y).expect("distinct labels")
}

fn four_cycle(w: &str, x: &str, y: &str, z: &str) -> CordSet {
    [cord(w, x), cord(x, y), cord(y, z), cord(z, w)]
        .into_iter()
        .collect()
}

/// Quartets from rank queries only.
///
/// On four leaves `a, b, c, d` there are three 4-cycles of cords. In a tree
/// displaying `ab|cd` the cycle `ac, cb, bd, da` (which avoids `ab` and `cd`)
/// is dependent and the other two are independent; on a star quartet all
/// three are dependent. Any other pattern means the oracle is not the rank
/// function of a tree matroid.
pub fn quartet_set_from_oracle<F, S>(rank: F, labels: &[S]) -> Result<QuartetSet>
where
    F: Fn(&CordSet) -> usize,
    S: AsRef<str>,
{
    let mut labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    labels.sort();
    let mut resolved = BTreeSet::new();
    for [a, b, c, d] in four_subsets(&labels) {
        // each split paired with the cycle that avoids its two cords
        let options = [
            ((&a, &b, &c, &d), four_cycle(&a, &c, &b, &d)),
            ((&a, &c, &b, &d), four_cycle(&a, &b, &c, &d)),
            ((&a, &d, &b, &c), four_cycle(&a, &b, &d, &c)),
        ];
        let dependent: Vec<_> = options
            .iter()
            .filter(|(_, cycle)| rank(cycle) < 4)
            .collect();
        match dependent.as_slice() {
            [((w, x, y, z), _)] => {
                resolved.insert(Quartet::new(cord(w, x), cord(y, z)));
            }
            [_, _, _] => {}
            _ => {
                return Err(Error::Inconsistent(format!(
                    "{} dependent 4-cycles on {a}{b}{c}{d}",
                    dependent.len()
                )))
            }
        }
    }
    Ok(QuartetSet { resolved })
}

/// The unique enumerated tree whose quartets match those read from `rank`.
pub fn tree_from_oracle<F, S>(rank: F, labels: &[S], max_leaves: usize) -> Result<XTree>
where
    F: Fn(&CordSet) -> usize,
    S: AsRef<str>,
{
    let target = quartet_set_from_oracle(&rank, labels)?;
    let mut matches = enumerate_xtrees(labels, max_leaves)?
        .into_iter()
        .filter(|t| QuartetSet::of_tree(t) == target);
    let first = matches
        .next()
        .ok_or_else(|| Error::Inconsistent("no tree displays the quartets of the oracle".into()))?;
    if let Some(second) = matches.next() {
        return Err(Error::Inconsistent(format!(
            "both {first} and {second} display the quartets of the oracle"
        )));
    }
    let total = rank(&first.all_cords());
    if total != first.edge_count() {
        return Err(Error::Inconsistent(format!(
            "oracle gives all cords rank {total}, but {first} has {} edges",
            first.edge_count()
        )));
    }
    Ok(first)
}

/// Rebuild a tree from the rank function of its own matroid.
pub fn reconstruct(tree: &XTree, max_leaves: usize) -> Result<XTree> {
    let m = TreeMatroid::new(tree);
    tree_from_oracle(
        |s| m.rank_of(s).expect("cords of the tree"),
        tree.labels(),
        max_leaves,
    )
}

/// A cord set of least depth-first order on which the two rank functions
/// differ, or `None` if the matroids coincide.
pub fn rank_difference(t1: &XTree, t2: &XTree) -> Result<Option<CordSet>> {
    if t1.labels() != t2.labels() {
        return Err(TreeError::LeafSetsDiffer.into());
    }
    let m1 = TreeMatroid::new(t1);
    let m2 = TreeMatroid::new(t2);
    let max_size = m1.full_rank().max(m2.full_rank()) + 1;
    Ok(m1
        .first_rank_difference(&m2, max_size)
        .map(|idx| m1.cord_set(&idx)))
}

/// Whether the two trees have the same matroid, comparing ranks of all
/// cord sets up to one more than the larger edge count.
pub fn matroids_equal(t1: &XTree, t2: &XTree) -> Result<bool> {
    Ok(rank_difference(t1, t2)?.is_none())
}

/// Three cord sets that certify a non-binary matroid: two circuits whose
/// symmetric difference is independent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonbinaryWitness {
    /// `x1, ..., x6`, where `x1x4`, `x2x5` and `x3x6` are cherries.
    pub leaves: [String; 6],
    /// The 6-cycle `x1x2, x2x3, ..., x6x1`.
    pub hexagon: CordSet,
    /// The 4-cycle `x1x3, x3x4, x4x6, x6x1`.
    pub square: CordSet,
    /// Their symmetric difference: triangles on `x1x2x3` and `x4x5x6`.
    pub triangles: CordSet,
    pub hexagon_is_circuit: bool,
    pub square_is_circuit: bool,
    pub triangles_independent: bool,
}

impl NonbinaryWitness {
    pub fn confirmed(&self) -> bool {
        self.hexagon_is_circuit && self.square_is_circuit && self.triangles_independent
    }
}

/// Build the witness from the first three pairwise disjoint cherries, if
/// the tree has them.
pub fn nonbinary_witness(tree: &XTree) -> Option<NonbinaryWitness> {
    let cherries: Vec<Cord> = tree.cherries().into_iter().map(|c| c.cord).collect();
    let disjoint = |p: &Cord, q: &Cord| !q.contains(p.a()) && !q.contains(p.b());
    let mut triple = None;
    'search: for (i, p) in cherries.iter().enumerate() {
        for (j, q) in cherries.iter().enumerate().skip(i + 1) {
            if !disjoint(p, q) {
                continue;
            }
            for r in &cherries[j + 1..] {
                if disjoint(p, r) && disjoint(q, r) {
                    triple = Some((p.clone(), q.clone(), r.clone()));
                    break 'search;
                }
            }
        }
    }
    let (p, q, r) = triple?;
    let leaves = [p.a(), q.a(), r.a(), p.b(), q.b(), r.b()].map(str::to_string);
    let x = |i: usize| leaves[i - 1].as_str();
    let hexagon: CordSet = (1..=6).map(|i| cord(x(i), x(i % 6 + 1))).collect();
    let square = four_cycle(x(1), x(3), x(4), x(6));
    let triangles = hexagon.symmetric_difference(&square);
    let m = TreeMatroid::new(tree);
    let check = |s: &CordSet| m.indices(s).expect("cords of the tree");
    Some(NonbinaryWitness {
        hexagon_is_circuit: m.is_circuit_indices(&check(&hexagon)),
        square_is_circuit: m.is_circuit_indices(&check(&square)),
        triangles_independent: m.is_independent_indices(&check(&triangles)),
        leaves,
        hexagon,
        square,
        triangles,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCheck {
    pub binary: bool,
    pub circuit_count: usize,
    /// Two circuits whose symmetric difference is not a disjoint union of
    /// circuits.
    pub violation: Option<(CordSet, CordSet)>,
}

/// Decide binariness from the full circuit list: the matroid is binary iff
/// the symmetric difference of any two distinct circuits is a disjoint
/// union of circuits.
pub fn is_binary_matroid(tree: &XTree, max_leaves: usize, parallel: bool) -> Result<BinaryCheck> {
    let n = tree.leaf_count();
    if n > max_leaves {
        return Err(Error::ScaleBound {
            what: "leaves for circuit enumeration",
            limit: max_leaves,
            actual: n,
        });
    }
    let m = TreeMatroid::new(tree);
    if m.cords().len() > 64 {
        return Err(Error::ScaleBound {
            what: "cords for the binary check",
            limit: 64,
            actual: m.cords().len(),
        });
    }
    let circuits: Vec<u64> = m
        .circuit_indices(usize::MAX, parallel)
        .iter()
        .map(|c| c.iter().fold(0u64, |acc, &i| acc | 1 << i))
        .collect();
    let mut by_low: Vec<Vec<u64>> = vec![Vec::new(); m.cords().len()];
    for &c in &circuits {
        by_low[c.trailing_zeros() as usize].push(c);
    }
    let check_from = |i: usize| -> Option<(u64, u64)> {
        let mut memo = HashMap::new();
        circuits[i + 1..]
            .iter()
            .find(|&&d| !decomposes(circuits[i] ^ d, &by_low, &mut memo))
            .map(|&d| (circuits[i], d))
    };
    let violation = if parallel {
        (0..circuits.len())
            .into_par_iter()
            .find_map_first(check_from)
    } else {
        (0..circuits.len()).find_map(check_from)
    };
    let to_set = |mask: u64| -> CordSet {
        let idx: Vec<usize> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
        m.cord_set(&idx)
    };
    Ok(BinaryCheck {
        binary: violation.is_none(),
        circuit_count: circuits.len(),
        violation: violation.map(|(a, b)| (to_set(a), to_set(b))),
    })
}

fn decomposes(set: u64, by_low: &[Vec<u64>], memo: &mut HashMap<u64, bool>) -> bool {
    if set == 0 {
        return true;
    }
    if let Some(&v) = memo.get(&set) {
        return v;
    }
    // the lowest cord of the set is the lowest cord of its circuit
    let low = set.trailing_zeros() as usize;
    let result = by_low[low]
        .iter()
        .any(|&c| c & !set == 0 && decomposes(set & !c, by_low, memo));
    memo.insert(set, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_newick;

    fn tree(s: &str) -> XTree {
        parse_newick(s).unwrap().0
    }

    fn oracle(t: &XTree) -> impl Fn(&CordSet) -> usize {
        let m = TreeMatroid::new(t);
        move |s| m.rank_of(s).unwrap()
    }

    #[test]
    fn quartets_from_ranks() {
        let q = tree("((a,b),(c,d));");
        let qs = quartet_set_from_oracle(oracle(&q), q.labels()).unwrap();
        assert_eq!(qs.resolved.len(), 1);
        assert_eq!(qs.resolved.iter().next().unwrap().to_string(), "ab|cd");
        let s = XTree::star(&["a", "b", "c", "d"]).unwrap();
        assert!(quartet_set_from_oracle(oracle(&s), s.labels())
            .unwrap()
            .is_empty());
        let cat = tree("(((a1,a2),a3),a4,a5);");
        let qs = quartet_set_from_oracle(oracle(&cat), cat.labels()).unwrap();
        assert_eq!(qs.len(), 5);
        assert_eq!(qs, QuartetSet::of_tree(&cat));
    }

    #[test]
    fn rebuild() {
        for s in ["((a,b),(c,d));", "(a,b,c,d,e);", "((a,b),c,(d,(e,f)));"] {
            let t = tree(s);
            assert_eq!(
                reconstruct(&t, 8).unwrap().canonical_newick(),
                t.canonical_newick()
            );
        }
    }

    #[test]
    fn equality() {
        let q = tree("((a,b),(c,d));");
        assert!(matroids_equal(&q, &q).unwrap());
        assert!(!matroids_equal(&q, &tree("((a,c),(b,d));")).unwrap());
        assert!(!matroids_equal(&q, &XTree::star(&["a", "b", "c", "d"]).unwrap()).unwrap());
        assert!(matroids_equal(&q, &XTree::star(&["a", "b", "c", "e"]).unwrap()).is_err());
    }

    #[test]
    fn snowflake_witness() {
        let t = tree("((a,b),(c,d),(e,f));");
        let w = nonbinary_witness(&t).unwrap();
        assert!(w.confirmed(), "{w:?}");
        assert_eq!(w.triangles.len(), 6);
        assert!(nonbinary_witness(&tree("((a,b),c,(d,(e,f)));")).is_none());
        assert!(
            nonbinary_witness(&XTree::star(&["a", "b", "c", "d", "e", "f"]).unwrap())
                .unwrap()
                .confirmed()
        );
    }

    #[test]
    fn binary_checks() {
        let t = tree("((a,b),(c,d),(e,f));");
        let r = is_binary_matroid(&t, 6, false).unwrap();
        assert!(!r.binary);
        assert!(r.violation.is_some());
        assert!(
            is_binary_matroid(&XTree::star(&["a", "b", "c", "d"]).unwrap(), 6, false)
                .unwrap()
                .binary
        );
        assert!(is_binary_matroid(
            &XTree::star(&["a", "b", "c", "d", "e", "f", "g"]).unwrap(),
            6,
            false
        )
        .is_err());
    }
}
