//! Phylogenetic X-trees: unrooted trees whose degree-1 vertices carry distinct
//! labels and which have no vertex of degree 2.
//!
//! Vertices and edges carry stable integer ids. Contraction keeps the ids of
//! surviving edges, and restriction names each condensed edge after the
//! smallest original edge it absorbs, so weightings can be carried across.

mod canonical;
mod cord;
mod enumerate;
mod newick;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;

pub use cord::{Cord, CordSet};
pub use enumerate::{enumerate_xtrees, DEFAULT_MAX_ENUMERATION_LEAVES};
pub use newick::{parse_newick, NewickError, NewickErrorKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown leaf label {0:?}")]
    UnknownLeaf(String),
    #[error("duplicate leaf label {0:?}")]
    DuplicateLeaf(String),
    #[error("invalid leaf label {0:?} (expected [A-Za-z0-9_]+)")]
    InvalidLabel(String),
    #[error("vertex {0} has degree 2")]
    DegreeTwo(VertexId),
    #[error("an X-tree needs at least 3 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("leaf labelling does not match the degree-1 vertices: {0}")]
    LeafMismatch(String),
    #[error("edge {0} is a pendant edge and cannot be contracted")]
    PendantEdge(EdgeId),
    #[error("leaf sets differ")]
    LeafSetsDiffer,
    #[error("invalid cord {0:?}")]
    InvalidCord(String),
    #[error("tree is not binary")]
    NotBinary,
    #[error("expected {expected} distinct leaves, got {actual:?}")]
    NotDistinct {
        expected: usize,
        actual: Vec<String>,
    },
    #[error("weighting does not cover exactly the edges of the tree")]
    WeightDomain,
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite X-tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XTree {
    /// Leaf labels in lexicographic order; a leaf's index is its position here.
    labels: Vec<String>,
    leaf_vertex: Vec<VertexId>,
    vertex_leaf: BTreeMap<VertexId, usize>,
    adjacency: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

/// A T-cherry with its properness flag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cherry {
    pub cord: Cord,
    pub proper: bool,
}

/// A resolved quartet `ab|cd`, stored with `left < right`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quartet {
    pub left: Cord,
    pub right: Cord,
}

impl Quartet {
    pub fn new(left: Cord, right: Cord) -> Self {
        if left <= right {
            Quartet { left, right }
        } else {
            Quartet {
                left: right,
                right: left,
            }
        }
    }
}

impl fmt::Display for Quartet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuartetTopology {
    Resolved(Quartet),
    Star,
}

/// Exact weights on the edges of one tree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EdgeWeighting {
    weights: BTreeMap<EdgeId, Rational>,
}

impl EdgeWeighting {
    pub fn new(tree: &XTree, weights: BTreeMap<EdgeId, Rational>) -> Result<Self, TreeError> {
        if weights.len() != tree.edge_count() || weights.keys().any(|e| !tree.edges.contains_key(e))
        {
            return Err(TreeError::WeightDomain);
        }
        Ok(EdgeWeighting { weights })
    }

    pub fn uniform(tree: &XTree, value: Rational) -> Self {
        EdgeWeighting {
            weights: tree.edge_ids().map(|e| (e, value.clone())).collect(),
        }
    }

    pub fn zero(tree: &XTree) -> Self {
        Self::uniform(tree, Rational::zero())
    }

    pub fn get(&self, e: EdgeId) -> Option<&Rational> {
        self.weights.get(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &Rational)> + '_ {
        self.weights.iter().map(|(e, w)| (*e, w))
    }

    /// Strictly positive on interior edges.
    pub fn is_proper(&self, tree: &XTree) -> bool {
        self.weights
            .iter()
            .all(|(e, w)| !tree.is_interior_edge(*e) || *w > Rational::zero())
    }
}

/// `T|_Y` together with the edges of `T` each of its edges condenses.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub tree: XTree,
    pub condensed: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl Restriction {
    /// The induced weighting: each edge of `T|_Y` gets the sum over the edges
    /// it condenses.
    pub fn induced_weighting(&self, w: &EdgeWeighting) -> EdgeWeighting {
        EdgeWeighting {
            weights: self
                .condensed
                .iter()
                .map(|(e, parts)| {
                    let sum = parts.iter().fold(Rational::zero(), |acc, p| {
                        acc + w.get(*p).cloned().unwrap_or_default()
                    });
                    (*e, sum)
                })
                .collect(),
        }
    }
}

impl XTree {
    /// Assemble and validate a tree from labelled leaves and an edge list.
    pub fn from_parts(
        leaves: Vec<(String, VertexId)>,
        edge_list: Vec<(EdgeId, VertexId, VertexId)>,
    ) -> Result<Self, TreeError> {
        let mut edges = BTreeMap::new();
        let mut adjacency: BTreeMap<VertexId, Vec<(VertexId, EdgeId)>> = BTreeMap::new();
        let mut seen_pairs = BTreeSet::new();
        for (e, u, v) in edge_list {
            if u == v {
                return Err(TreeError::NotATree(format!("loop at {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen_pairs.insert(key) {
                return Err(TreeError::NotATree(format!(
                    "parallel edges between {u} and {v}"
                )));
            }
            if edges.insert(e, key).is_some() {
                return Err(TreeError::NotATree(format!("edge id {e} used twice")));
            }
            adjacency.entry(u).or_default().push((v, e));
            adjacency.entry(v).or_default().push((u, e));
        }
        for nbrs in adjacency.values_mut() {
            nbrs.sort();
        }
        if adjacency.len() != edges.len() + 1 {
            return Err(TreeError::NotATree(format!(
                "{} vertices but {} edges",
                adjacency.len(),
                edges.len()
            )));
        }
        // connectivity (with |E| = |V| - 1 this also rules out cycles)
        if let Some(&start) = adjacency.keys().next() {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for (v, _) in &adjacency[&u] {
                    if seen.insert(*v) {
                        queue.push_back(*v);
                    }
                }
            }
            if seen.len() != adjacency.len() {
                return Err(TreeError::NotATree("disconnected".into()));
            }
        }

        let mut sorted = leaves;
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(TreeError::DuplicateLeaf(w[0].0.clone()));
            }
        }
        if sorted.len() < 3 {
            return Err(TreeError::TooFewLeaves(sorted.len()));
        }
        let mut vertex_leaf = BTreeMap::new();
        for (i, (label, v)) in sorted.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(TreeError::InvalidLabel(label.clone()));
            }
            match adjacency.get(v) {
                None => return Err(TreeError::UnknownVertex(*v)),
                Some(n) if n.len() != 1 => {
                    return Err(TreeError::LeafMismatch(format!(
                        "leaf {label:?} sits on a vertex of degree {}",
                        n.len()
                    )))
                }
                _ => {}
            }
            if vertex_leaf.insert(*v, i).is_some() {
                return Err(TreeError::LeafMismatch(format!(
                    "vertex {v} carries two labels"
                )));
            }
        }
        for (v, nbrs) in &adjacency {
            match nbrs.len() {
                1 if !vertex_leaf.contains_key(v) => {
                    return Err(TreeError::LeafMismatch(format!(
                        "unlabelled degree-1 vertex {v}"
                    )))
                }
                2 => return Err(TreeError::DegreeTwo(*v)),
                _ => {}
            }
        }
        let labels: Vec<String> = sorted.iter().map(|(l, _)| l.clone()).collect();
        let leaf_vertex = sorted.iter().map(|(_, v)| *v).collect();
        Ok(XTree {
            labels,
            leaf_vertex,
            vertex_leaf,
            adjacency,
            edges,
        })
    }

    /// The star tree `T*(X)`.
    pub fn star<S: AsRef<str>>(labels: &[S]) -> Result<Self, TreeError> {
        let center = VertexId(labels.len());
        let leaves = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_ref().to_string(), VertexId(i)))
            .collect();
        let edges = (0..labels.len())
            .map(|i| (EdgeId(i), VertexId(i), center))
            .collect();
        XTree::from_parts(leaves, edges)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leaf_count(&self) -> usize {
        self.labels.len()
    }

    pub fn leaf_index(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn leaf_vertex(&self, label: &str) -> Result<VertexId, TreeError> {
        self.leaf_index(label)
            .map(|i| self.leaf_vertex[i])
            .ok_or_else(|| TreeError::UnknownLeaf(label.to_string()))
    }

    pub fn leaf_label(&self, v: VertexId) -> Option<&str> {
        self.vertex_leaf.get(&v).map(|&i| self.labels[i].as_str())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| !self.is_leaf(*v))
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.vertex_leaf.contains_key(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, Vec::len)
    }

    /// Neighbours with the connecting edge, sorted by vertex id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        self.adjacency.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Edge ids in increasing order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), TreeError> {
        self.edges.get(&e).copied().ok_or(TreeError::UnknownEdge(e))
    }

    pub fn is_interior_edge(&self, e: EdgeId) -> bool {
        self.edges
            .get(&e)
            .is_some_and(|(u, v)| !self.is_leaf(*u) && !self.is_leaf(*v))
    }

    pub fn interior_edges(&self) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|e| self.is_interior_edge(*e))
            .collect()
    }

    /// The pendant edge `e_x`.
    pub fn pendant_edge(&self, label: &str) -> Result<EdgeId, TreeError> {
        let v = self.leaf_vertex(label)?;
        Ok(self.adjacency[&v][0].1)
    }

    pub fn is_binary(&self) -> bool {
        self.interior_vertices().all(|v| self.degree(v) == 3)
    }

    pub fn is_star(&self) -> bool {
        self.interior_vertices().count() == 1
    }

    /// Edge sequence of the path from `u` to `v`; empty when `u == v`.
    pub fn path_edges(&self, u: VertexId, v: VertexId) -> Result<Vec<EdgeId>, TreeError> {
        if !self.adjacency.contains_key(&u) {
            return Err(TreeError::UnknownVertex(u));
        }
        if !self.adjacency.contains_key(&v) {
            return Err(TreeError::UnknownVertex(v));
        }
        let parents = self.parents_from(v);
        let mut path = Vec::new();
        let mut cur = u;
        while cur != v {
            let (p, e) = parents[&cur];
            path.push(e);
            cur = p;
        }
        Ok(path)
    }

    /// Path between two leaves, by label.
    pub fn leaf_path(&self, x: &str, y: &str) -> Result<Vec<EdgeId>, TreeError> {
        self.path_edges(self.leaf_vertex(x)?, self.leaf_vertex(y)?)
    }

    /// BFS parent pointers towards `root`.
    fn parents_from(&self, root: VertexId) -> BTreeMap<VertexId, (VertexId, EdgeId)> {
        let mut parents = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        let mut seen = BTreeSet::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in self.neighbors(u) {
                if seen.insert(w) {
                    parents.insert(w, (u, e));
                    queue.push_back(w);
                }
            }
        }
        parents
    }

    /// For every leaf index, the edges on its path to every other leaf.
    /// `paths[i][j]` lists the path edges between leaves `i` and `j`.
    pub fn all_leaf_paths(&self) -> Vec<Vec<Vec<EdgeId>>> {
        let n = self.leaf_count();
        let mut out = vec![vec![Vec::new(); n]; n];
        for j in 0..n {
            let parents = self.parents_from(self.leaf_vertex[j]);
            for (i, row) in out.iter_mut().enumerate() {
                if i == j {
                    continue;
                }
                let mut cur = self.leaf_vertex[i];
                let mut path = Vec::new();
                while cur != self.leaf_vertex[j] {
                    let (p, e) = parents[&cur];
                    path.push(e);
                    cur = p;
                }
                row[j] = path;
            }
        }
        out
    }

    /// Leaf labels on either side of an edge; the first set is the side of the
    /// smaller endpoint id.
    pub fn split_of_edge(
        &self,
        e: EdgeId,
    ) -> Result<(BTreeSet<String>, BTreeSet<String>), TreeError> {
        let (u, v) = self.endpoints(e)?;
        let mut side = BTreeSet::new();
        let mut stack = vec![(u, v)];
        while let Some((x, from)) = stack.pop() {
            if let Some(l) = self.leaf_label(x) {
                side.insert(l.to_string());
            }
            for &(w, _) in self.neighbors(x) {
                if w != from {
                    stack.push((w, x));
                }
            }
        }
        let other = self
            .labels
            .iter()
            .filter(|l| !side.contains(*l))
            .cloned()
            .collect();
        Ok((side, other))
    }

    /// The edge separating `side` from the remaining leaves, if any.
    pub fn edge_for_split<S: AsRef<str>>(&self, side: &[S]) -> Option<EdgeId> {
        let wanted: BTreeSet<String> = side.iter().map(|s| s.as_ref().to_string()).collect();
        self.edge_ids().find(|&e| {
            let (a, b) = self.split_of_edge(e).expect("edge exists");
            a == wanted || b == wanted
        })
    }

    /// Collapse every edge of `f`, which must all be interior.
    pub fn contract(&self, f: &BTreeSet<EdgeId>) -> Result<XTree, TreeError> {
        for &e in f {
            if !self.edges.contains_key(&e) {
                return Err(TreeError::UnknownEdge(e));
            }
            if !self.is_interior_edge(e) {
                return Err(TreeError::PendantEdge(e));
            }
        }
        if f.is_empty() {
            return Ok(self.clone());
        }
        // union-find, representative = smallest vertex id
        let mut rep: BTreeMap<VertexId, VertexId> = self.vertices().map(|v| (v, v)).collect();
        fn find(rep: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
            let p = rep[&v];
            if p == v {
                return v;
            }
            let r = find(rep, p);
            rep.insert(v, r);
            r
        }
        for &e in f {
            let (u, v) = self.edges[&e];
            let (ru, rv) = (find(&mut rep, u), find(&mut rep, v));
            let (lo, hi) = (ru.min(rv), ru.max(rv));
            rep.insert(hi, lo);
        }
        let edge_list = self
            .edges
            .iter()
            .filter(|(e, _)| !f.contains(e))
            .map(|(&e, &(u, v))| (e, find(&mut rep, u), find(&mut rep, v)))
            .collect();
        XTree::from_parts(self.leaf_pairs(), edge_list)
    }

    fn leaf_pairs(&self) -> Vec<(String, VertexId)> {
        self.labels
            .iter()
            .cloned()
            .zip(self.leaf_vertex.iter().copied())
            .collect()
    }

    /// `T|_Y`: the minimal subtree spanning `Y` with degree-2 vertices
    /// suppressed.
    pub fn restrict<S: AsRef<str>>(&self, y: &[S]) -> Result<Restriction, TreeError> {
        let keep: BTreeSet<&str> = y.iter().map(|s| s.as_ref()).collect();
        if keep.len() < 3 {
            return Err(TreeError::TooFewLeaves(keep.len()));
        }
        for l in &keep {
            self.leaf_vertex(l)?;
        }
        // prune leaves outside Y until none remain
        let mut degree: BTreeMap<VertexId, usize> =
            self.adjacency.iter().map(|(v, n)| (*v, n.len())).collect();
        let mut alive: BTreeSet<VertexId> = self.vertices().collect();
        let mut queue: VecDeque<VertexId> = self
            .vertex_leaf
            .iter()
            .filter(|(_, &i)| !keep.contains(self.labels[i].as_str()))
            .map(|(v, _)| *v)
            .collect();
        while let Some(v) = queue.pop_front() {
            if !alive.remove(&v) {
                continue;
            }
            for (w, _) in self.neighbors(v) {
                if alive.contains(w) {
                    let d = degree.get_mut(w).expect("vertex");
                    *d -= 1;
                    if *d == 1 && !self.is_leaf(*w) {
                        queue.push_back(*w);
                    }
                }
            }
        }
        let live_neighbors = |v: VertexId| -> Vec<(VertexId, EdgeId)> {
            self.neighbors(v)
                .iter()
                .filter(|(w, _)| alive.contains(w))
                .copied()
                .collect()
        };
        let anchors: BTreeSet<VertexId> = alive
            .iter()
            .copied()
            .filter(|&v| live_neighbors(v).len() != 2)
            .collect();
        let mut condensed: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
        let mut edge_list = Vec::new();
        for &a in &anchors {
            for (first, e0) in live_neighbors(a) {
                let mut parts = vec![e0];
                let (mut prev, mut cur) = (a, first);
                while !anchors.contains(&cur) {
                    let next = live_neighbors(cur)
                        .into_iter()
                        .find(|(w, _)| *w != prev)
                        .expect("degree-2 vertex has a second neighbour");
                    parts.push(next.1);
                    prev = cur;
                    cur = next.0;
                }
                if a < cur {
                    parts.sort();
                    let id = parts[0];
                    edge_list.push((id, a, cur));
                    condensed.insert(id, parts);
                }
            }
        }
        let leaves = keep
            .iter()
            .map(|l| Ok((l.to_string(), self.leaf_vertex(l)?)))
            .collect::<Result<Vec<_>, TreeError>>()?;
        Ok(Restriction {
            tree: XTree::from_parts(leaves, edge_list)?,
            condensed,
        })
    }

    /// All T-cherries, sorted by cord.
    pub fn cherries(&self) -> Vec<Cherry> {
        let mut out = Vec::new();
        for v in self.interior_vertices() {
            let leaves: Vec<&str> = self
                .neighbors(v)
                .iter()
                .filter_map(|(w, _)| self.leaf_label(*w))
                .collect();
            let proper = self.degree(v) == 3;
            for (i, x) in leaves.iter().enumerate() {
                for y in &leaves[i + 1..] {
                    out.push(Cherry {
                        cord: Cord::new(*x, *y).expect("distinct leaves"),
                        proper,
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Binary, with all interior vertices on one path.
    pub fn is_caterpillar(&self) -> bool {
        self.is_binary()
            && self.interior_vertices().all(|v| {
                self.neighbors(v)
                    .iter()
                    .filter(|(w, _)| !self.is_leaf(*w))
                    .count()
                    <= 2
            })
    }

    /// Canonical Newick string: equal for two trees iff they are equivalent.
    pub fn canonical_newick(&self) -> String {
        canonical::canonical_newick(self, None)
    }

    /// Canonical Newick with `:weight` on every edge.
    pub fn to_newick_weighted(&self, w: &EdgeWeighting) -> String {
        canonical::canonical_newick(self, Some(w))
    }

    /// Topology of `T` restricted to four distinct leaves, read off path
    /// lengths: `ab|cd` iff `d(a,b) + d(c,d)` is strictly the smallest of the
    /// three pair sums.
    pub fn quartet_topology(&self, four: [&str; 4]) -> Result<QuartetTopology, TreeError> {
        let distinct: BTreeSet<&str> = four.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(TreeError::NotDistinct {
                expected: 4,
                actual: four.iter().map(|s| s.to_string()).collect(),
            });
        }
        let d = |x: &str, y: &str| -> Result<usize, TreeError> { Ok(self.leaf_path(x, y)?.len()) };
        let [a, b, c, e] = four;
        let sums = [
            (d(a, b)? + d(c, e)?, (a, b, c, e)),
            (d(a, c)? + d(b, e)?, (a, c, b, e)),
            (d(a, e)? + d(b, c)?, (a, e, b, c)),
        ];
        let min = sums.iter().map(|s| s.0).min().expect("three sums");
        let winners: Vec<_> = sums.iter().filter(|s| s.0 == min).collect();
        if winners.len() == 1 {
            let (w, x, y, z) = winners[0].1;
            Ok(QuartetTopology::Resolved(Quartet::new(
                Cord::new(w, x)?,
                Cord::new(y, z)?,
            )))
        } else {
            Ok(QuartetTopology::Star)
        }
    }

    /// `D_w(x, y)`: the sum of weights along the path between the cord's ends.
    pub fn distance(&self, w: &EdgeWeighting, c: &Cord) -> Result<Rational, TreeError> {
        let path = self.leaf_path(c.a(), c.b())?;
        let mut total = Rational::zero();
        for e in path {
            total += w.get(e).ok_or(TreeError::WeightDomain)?;
        }
        Ok(total)
    }

    /// Check that every cord joins two leaves of this tree.
    pub fn check_cords(&self, cords: &CordSet) -> Result<(), TreeError> {
        for c in cords {
            self.leaf_vertex(c.a())?;
            self.leaf_vertex(c.b())?;
        }
        Ok(())
    }

    /// All cords over the leaf set.
    pub fn all_cords(&self) -> CordSet {
        CordSet::complete(&self.labels)
    }
}

impl fmt::Display for XTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_newick())
    }
}

/// Leaf-fixing equivalence of two X-trees on the same leaf set.
pub fn are_equivalent(t1: &XTree, t2: &XTree) -> Result<bool, TreeError> {
    if t1.labels != t2.labels {
        return Err(TreeError::LeafSetsDiffer);
    }
    Ok(t1.canonical_newick() == t2.canonical_newick())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn tree(s: &str) -> XTree {
        parse_newick(s).unwrap().0
    }

    #[test]
    fn quartet_shape() {
        let t = tree("((a,b),(c,d));");
        assert_eq!(t.vertex_count(), 6);
        assert_eq!(t.edge_count(), 5);
        assert_eq!(t.interior_edges().len(), 1);
    }

    #[test]
    fn paths_in_quartet() {
        let t = tree("((a,b),(c,d));");
        let f = t.edge_for_split(&["a", "b"]).unwrap();
        assert_eq!(
            t.leaf_path("a", "b").unwrap(),
            vec![t.pendant_edge("a").unwrap(), t.pendant_edge("b").unwrap()]
        );
        assert_eq!(
            t.leaf_path("a", "c").unwrap(),
            vec![
                t.pendant_edge("a").unwrap(),
                f,
                t.pendant_edge("c").unwrap()
            ]
        );
        let a = t.leaf_vertex("a").unwrap();
        assert!(t.path_edges(a, a).unwrap().is_empty());
        assert_eq!(
            t.path_edges(a, VertexId(99)),
            Err(TreeError::UnknownVertex(VertexId(99)))
        );
    }

    #[test]
    fn contracting_the_central_edge_gives_the_star() {
        let t = tree("((a,b),(c,d));");
        let f = t.edge_for_split(&["a", "b"]).unwrap();
        let s = t.contract(&BTreeSet::from([f])).unwrap();
        assert!(are_equivalent(&s, &XTree::star(&["a", "b", "c", "d"]).unwrap()).unwrap());
        // surviving ids are kept
        assert_eq!(s.pendant_edge("c").unwrap(), t.pendant_edge("c").unwrap());
        assert_eq!(t.contract(&BTreeSet::new()).unwrap(), t);
        let pendant = t.pendant_edge("a").unwrap();
        assert_eq!(
            t.contract(&BTreeSet::from([pendant])),
            Err(TreeError::PendantEdge(pendant))
        );
    }

    #[test]
    fn caterpillar_contracts_to_star() {
        let t = tree("(a1,a2,(a3,(a4,a5)));");
        let all: BTreeSet<EdgeId> = t.interior_edges().into_iter().collect();
        let s = t.contract(&all).unwrap();
        assert!(s.is_star());
        // one edge at a time reaches the same tree
        let mut step = t.clone();
        for e in t.interior_edges() {
            step = step.contract(&BTreeSet::from([e])).unwrap();
        }
        assert!(are_equivalent(&step, &s).unwrap());
    }

    #[test]
    fn restriction_examples() {
        let t = tree("((a,b),(c,d));");
        let r = t.restrict(&["a", "b", "c"]).unwrap();
        assert!(r.tree.is_star());
        assert_eq!(r.tree.leaf_count(), 3);

        let cat = tree("(a1,a2,(a3,(a4,a5)));");
        let r = cat.restrict(&["a1", "a2", "a4", "a5"]).unwrap();
        assert!(are_equivalent(&r.tree, &tree("((a1,a2),(a4,a5));")).unwrap());
        // the central edge condenses the two interior edges around a3
        let central = r.tree.interior_edges()[0];
        assert_eq!(r.condensed[&central].len(), 2);

        let full = cat.restrict(cat.labels()).unwrap();
        assert!(are_equivalent(&full.tree, &cat).unwrap());

        assert_eq!(
            t.restrict(&["a", "b"]).unwrap_err(),
            TreeError::TooFewLeaves(2)
        );
        assert!(matches!(
            t.restrict(&["a", "b", "z"]),
            Err(TreeError::UnknownLeaf(_))
        ));
    }

    #[test]
    fn induced_weighting_preserves_distances() {
        let (cat, w) = parse_newick("(a1:1,a2:2,(a3:3,(a4:4,a5:5):6):7);").unwrap();
        let w = w.unwrap();
        let r = cat.restrict(&["a1", "a2", "a4", "a5"]).unwrap();
        let wy = r.induced_weighting(&w);
        for c in r.tree.all_cords() {
            assert_eq!(
                cat.distance(&w, &c).unwrap(),
                r.tree.distance(&wy, &c).unwrap()
            );
        }
    }

    #[test]
    fn cherries_and_properness() {
        let t = tree("((a,b),(c,d));");
        let ch = t.cherries();
        assert_eq!(ch.len(), 2);
        assert!(ch.iter().all(|c| c.proper));
        assert_eq!(ch[0].cord.to_string(), "ab");
        assert_eq!(ch[1].cord.to_string(), "cd");

        let s4 = XTree::star(&["a", "b", "c", "d"]).unwrap();
        let ch = s4.cherries();
        assert_eq!(ch.len(), 6);
        assert!(ch.iter().all(|c| !c.proper));

        let s3 = XTree::star(&["a", "b", "c"]).unwrap();
        let ch = s3.cherries();
        assert_eq!(ch.len(), 3);
        assert!(ch.iter().all(|c| c.proper));
    }

    #[test]
    fn caterpillars() {
        assert!(tree("(a1,a2,(a3,(a4,(a5,a6))));").is_caterpillar());
        assert!(!tree("((a,b),(c,d),(e,f));").is_caterpillar());
        assert!(XTree::star(&["a", "b", "c"]).unwrap().is_caterpillar());
        assert!(!XTree::star(&["a", "b", "c", "d"]).unwrap().is_caterpillar());
    }

    #[test]
    fn equivalence() {
        assert!(are_equivalent(&tree("((a,b),(c,d));"), &tree("((c,d),(b,a));")).unwrap());
        assert!(!are_equivalent(&tree("((a,b),(c,d));"), &tree("((a,c),(b,d));")).unwrap());
        let t = tree("((a,b),(c,d));");
        let s = t
            .contract(&t.interior_edges().into_iter().collect())
            .unwrap();
        assert!(!are_equivalent(&t, &s).unwrap());
        assert_eq!(
            are_equivalent(&t, &tree("((a,b),(c,e));")),
            Err(TreeError::LeafSetsDiffer)
        );
    }

    #[test]
    fn quartet_topologies() {
        let t = tree("((a,b),(c,d));");
        assert_eq!(
            t.quartet_topology(["c", "a", "d", "b"]).unwrap(),
            QuartetTopology::Resolved(Quartet::new(
                Cord::new("a", "b").unwrap(),
                Cord::new("c", "d").unwrap()
            ))
        );
        let s = XTree::star(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(
            s.quartet_topology(["a", "b", "c", "d"]).unwrap(),
            QuartetTopology::Star
        );
        assert!(t.quartet_topology(["a", "a", "c", "d"]).is_err());
        let cat = tree("(a1,a2,(a3,(a4,a5)));");
        assert_eq!(
            cat.quartet_topology(["a1", "a2", "a4", "a5"])
                .unwrap()
                .to_owned(),
            QuartetTopology::Resolved(Quartet::new(
                Cord::new("a1", "a2").unwrap(),
                Cord::new("a4", "a5").unwrap()
            ))
        );
    }

    #[test]
    fn distances_with_unit_and_zero_weights() {
        let t = tree("((a,b),(c,d));");
        let ones = EdgeWeighting::uniform(&t, int(1));
        assert_eq!(
            t.distance(&ones, &Cord::new("a", "b").unwrap()).unwrap(),
            int(2)
        );
        assert_eq!(
            t.distance(&ones, &Cord::new("a", "c").unwrap()).unwrap(),
            int(3)
        );
        let zero = EdgeWeighting::zero(&t);
        for c in t.all_cords() {
            assert_eq!(t.distance(&zero, &c).unwrap(), int(0));
        }
        assert!(t.distance(&ones, &Cord::new("a", "z").unwrap()).is_err());
    }

    #[test]
    fn validation_rejects_degree_two() {
        let leaves = vec![
            ("a".into(), VertexId(0)),
            ("b".into(), VertexId(1)),
            ("c".into(), VertexId(2)),
        ];
        let edges = vec![
            (EdgeId(0), VertexId(0), VertexId(3)),
            (EdgeId(1), VertexId(1), VertexId(3)),
            (EdgeId(2), VertexId(2), VertexId(4)),
            (EdgeId(3), VertexId(3), VertexId(4)),
        ];
        assert_eq!(
            XTree::from_parts(leaves, edges),
            Err(TreeError::DegreeTwo(VertexId(4)))
        );
    }
}
