//! The cord matroid of an X-tree.
//!
//! Each cord `xy` is represented by the 0/1 vector over the edge set marking
//! the edges on the path from `x` to `y`; the matroid is the linear matroid of
//! these vectors over ℚ.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, CoordinateSolver, Rational, RationalMatrix, SpanBasis};
use crate::tree::{Cord, CordSet, EdgeId, EdgeWeighting, TreeError, XTree};

pub const DEFAULT_MAX_BASIS_LEAVES: usize = 7;

/// The path-incidence vector of one cord.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    pub cord: Cord,
    /// Column order: edge ids ascending.
    pub edges: Vec<EdgeId>,
    pub entries: Vec<i64>,
}

impl LambdaVector {
    pub fn get(&self, e: EdgeId) -> Option<i64> {
        self.edges.binary_search(&e).ok().map(|i| self.entries[i])
    }

    pub fn support(&self) -> Vec<EdgeId> {
        self.edges
            .iter()
            .zip(&self.entries)
            .filter(|(_, x)| **x != 0)
            .map(|(e, _)| *e)
            .collect()
    }

    /// Value of the linear form at a weighting, i.e. the weighted distance.
    pub fn eval(&self, w: &EdgeWeighting) -> Rational {
        self.support().iter().fold(Rational::zero(), |acc, e| {
            acc + w.get(*e).cloned().unwrap_or_default()
        })
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.entries.iter().map(|&x| exact::int(x)).collect()
    }
}

pub fn lambda_vector(tree: &XTree, cord: &Cord) -> Result<LambdaVector, TreeError> {
    let path: BTreeSet<EdgeId> = tree.leaf_path(cord.a(), cord.b())?.into_iter().collect();
    let edges: Vec<EdgeId> = tree.edge_ids().collect();
    let entries = edges.iter().map(|e| i64::from(path.contains(e))).collect();
    Ok(LambdaVector {
        cord: cord.clone(),
        edges,
        entries,
    })
}

/// Rank and lasso flags of one cord set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidVerdict {
    pub rank: usize,
    pub independent: bool,
    /// Spanning: the distances on the set determine every edge weight.
    pub lasso: bool,
    pub basis: bool,
}

/// The three terms of the contraction rank identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDecomposition {
    pub rank: usize,
    pub contracted_rank: usize,
    pub kernel_dim: usize,
}

/// The matroid of one tree, with every cord vector precomputed.
#[derive(Clone, Debug)]
pub struct TreeMatroid {
    tree: XTree,
    edges: Vec<EdgeId>,
    cords: Vec<Cord>,
    rows: Vec<Vec<i64>>,
    index: HashMap<Cord, usize>,
}

impl TreeMatroid {
    pub fn new(tree: &XTree) -> Self {
        let edges: Vec<EdgeId> = tree.edge_ids().collect();
        let column: HashMap<EdgeId, usize> =
            edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let paths = tree.all_leaf_paths();
        let labels = tree.labels();
        let mut cords = Vec::new();
        let mut rows = Vec::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                let mut row = vec![0i64; edges.len()];
                for e in &paths[i][j] {
                    row[column[e]] = 1;
                }
                cords.push(
                    Cord::new(labels[i].as_str(), labels[j].as_str()).expect("distinct labels"),
                );
                rows.push(row);
            }
        }
        let index = cords
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        TreeMatroid {
            tree: tree.clone(),
            edges,
            cords,
            rows,
            index,
        }
    }

    pub fn tree(&self) -> &XTree {
        &self.tree
    }

    pub fn edge_columns(&self) -> &[EdgeId] {
        &self.edges
    }

    /// `|E|`, the rank of the matroid.
    pub fn full_rank(&self) -> usize {
        self.edges.len()
    }

    /// All cords in lexicographic order; positions are the cord indices used
    /// by the index-based methods.
    pub fn cords(&self) -> &[Cord] {
        &self.cords
    }

    pub fn cord_index(&self, c: &Cord) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    pub fn lambda(&self, c: &Cord) -> Result<LambdaVector, TreeError> {
        let i = self.index_of(c)?;
        Ok(LambdaVector {
            cord: c.clone(),
            edges: self.edges.clone(),
            entries: self.rows[i].clone(),
        })
    }

    fn index_of(&self, c: &Cord) -> Result<usize, TreeError> {
        self.cord_index(c).ok_or_else(|| {
            let missing = if self.tree.leaf_index(c.a()).is_none() {
                c.a()
            } else {
                c.b()
            };
            TreeError::UnknownLeaf(missing.to_string())
        })
    }

    pub fn indices(&self, set: &CordSet) -> Result<Vec<usize>, TreeError> {
        set.iter().map(|c| self.index_of(c)).collect()
    }

    pub fn cord_set(&self, indices: &[usize]) -> CordSet {
        indices.iter().map(|&i| self.cords[i].clone()).collect()
    }

    pub fn all_cords(&self) -> CordSet {
        self.cords.iter().cloned().collect()
    }

    pub fn rank_of_indices(&self, indices: &[usize]) -> usize {
        let mut span = SpanBasis::new(self.edges.len());
        for &i in indices {
            span.insert(&self.rows[i]);
        }
        span.rank()
    }

    pub fn span_of_indices(&self, indices: &[usize]) -> SpanBasis {
        let mut span = SpanBasis::new(self.edges.len());
        for &i in indices {
            span.insert(&self.rows[i]);
        }
        span
    }

    pub fn rank_of(&self, set: &CordSet) -> Result<usize, TreeError> {
        Ok(self.rank_of_indices(&self.indices(set)?))
    }

    pub fn is_independent_indices(&self, indices: &[usize]) -> bool {
        self.rank_of_indices(indices) == indices.len()
    }

    pub fn verdict(&self, set: &CordSet) -> Result<MatroidVerdict, TreeError> {
        let rank = self.rank_of(set)?;
        let independent = rank == set.len();
        let lasso = rank == self.full_rank();
        Ok(MatroidVerdict {
            rank,
            independent,
            lasso,
            basis: independent && lasso,
        })
    }

    /// Cords whose vector lies in the span of the set.
    pub fn closure(&self, set: &CordSet) -> Result<CordSet, TreeError> {
        let span = self.span_of_indices(&self.indices(set)?);
        Ok(self
            .cords
            .iter()
            .zip(&self.rows)
            .filter(|(_, row)| span.contains(row))
            .map(|(c, _)| c.clone())
            .collect())
    }

    /// Minimal dependent: rank `|C| - 1` and every single deletion independent.
    pub fn is_circuit_indices(&self, indices: &[usize]) -> bool {
        if indices.is_empty() || self.rank_of_indices(indices) != indices.len() - 1 {
            return false;
        }
        (0..indices.len()).all(|skip| {
            let rest: Vec<usize> = indices
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &i)| i)
                .collect();
            self.is_independent_indices(&rest)
        })
    }

    pub fn is_circuit(&self, set: &CordSet) -> Result<bool, TreeError> {
        Ok(self.is_circuit_indices(&self.indices(set)?))
    }

    /// Every circuit with at most `max_size` cords, ordered by size and then
    /// lexicographically. Sizes above `|E| + 1` are treated as `|E| + 1`.
    pub fn circuit_indices(&self, max_size: usize, parallel: bool) -> Vec<Vec<usize>> {
        let max_size = max_size.min(self.full_rank() + 1);
        let m = self.cords.len();
        let root = SpanBasis::new(self.edges.len());
        let run = |first: usize| {
            let mut out = Vec::new();
            if max_size == 0 {
                return out;
            }
            let mut span = root.clone();
            span.insert(&self.rows[first]);
            let mut chosen = vec![first];
            let blocked = vec![false; m];
            self.circuit_search(&mut chosen, &span, &blocked, max_size, &mut out);
            out
        };
        let mut all: Vec<Vec<usize>> = if parallel {
            (0..m).into_par_iter().map(run).collect::<Vec<_>>().concat()
        } else {
            (0..m).flat_map(run).collect()
        };
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// `chosen` is independent and sorted. A circuit `C` is found from the
    /// node `C - max(C)`; `blocked` marks cords already dependent on a proper
    /// prefix of `chosen`, which cannot close a circuit here.
    fn circuit_search(
        &self,
        chosen: &mut Vec<usize>,
        span: &SpanBasis,
        blocked: &[bool],
        max_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let next = chosen.last().map_or(0, |&l| l + 1);
        let m = self.cords.len();
        let mut dependent = blocked.to_vec();
        let mut free = Vec::new();
        for i in next..m {
            if span.contains(&self.rows[i]) {
                if !blocked[i] {
                    let mut cand = chosen.clone();
                    cand.push(i);
                    if self.is_circuit_indices(&cand) {
                        out.push(cand);
                    }
                }
                dependent[i] = true;
            } else {
                free.push(i);
            }
        }
        if chosen.len() + 2 > max_size {
            return;
        }
        for i in free {
            let mut s = span.clone();
            s.insert(&self.rows[i]);
            chosen.push(i);
            self.circuit_search(chosen, &s, &dependent, max_size, out);
            chosen.pop();
        }
    }

    pub fn circuits(&self, max_size: usize) -> Vec<CordSet> {
        self.circuit_indices(max_size, false)
            .iter()
            .map(|c| self.cord_set(c))
            .collect()
    }

    /// Every basis, as sorted cord-index lists in lexicographic order.
    pub fn basis_indices(&self, max_leaves: usize, parallel: bool) -> Result<Vec<Vec<usize>>> {
        let n = self.tree.leaf_count();
        if n > max_leaves {
            return Err(Error::ScaleBound {
                what: "leaves for basis enumeration",
                limit: max_leaves,
                actual: n,
            });
        }
        let target = self.full_rank();
        let m = self.cords.len();
        let run = |first: usize| {
            let mut out = Vec::new();
            if m - first < target {
                return out;
            }
            let mut span = SpanBasis::new(self.edges.len());
            span.insert(&self.rows[first]);
            let mut chosen = vec![first];
            self.basis_search(&mut chosen, &span, target, &mut out);
            out
        };
        Ok(if parallel {
            (0..m).into_par_iter().map(run).collect::<Vec<_>>().concat()
        } else {
            (0..m).flat_map(run).collect()
        })
    }

    fn basis_search(
        &self,
        chosen: &mut Vec<usize>,
        span: &SpanBasis,
        target: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == target {
            out.push(chosen.clone());
            return;
        }
        let m = self.cords.len();
        let need = target - chosen.len();
        let next = chosen.last().map_or(0, |&l| l + 1);
        for i in next..m {
            if m - i < need {
                break;
            }
            let mut s = span.clone();
            if s.insert(&self.rows[i]) {
                chosen.push(i);
                self.basis_search(chosen, &s, target, out);
                chosen.pop();
            }
        }
    }

    pub fn bases(&self, max_leaves: usize) -> Result<Vec<CordSet>> {
        Ok(self
            .basis_indices(max_leaves, false)?
            .iter()
            .map(|b| self.cord_set(b))
            .collect())
    }

    /// Cords contained in every basis: removing one drops the rank.
    pub fn coloops(&self) -> CordSet {
        let m = self.cords.len();
        (0..m)
            .filter(|&c| {
                let rest: Vec<usize> = (0..m).filter(|&i| i != c).collect();
                self.rank_of_indices(&rest) < self.full_rank()
            })
            .map(|c| self.cords[c].clone())
            .collect()
    }

    /// Rank of every cord subset of size at most `max_size`, compared against
    /// another matroid on the same cords; returns the first subset (in
    /// depth-first order) on which the two ranks differ.
    pub fn first_rank_difference(
        &self,
        other: &TreeMatroid,
        max_size: usize,
    ) -> Option<Vec<usize>> {
        assert_eq!(self.cords, other.cords, "matroids on different cord sets");
        let mut chosen = Vec::new();
        let a = SpanBasis::new(self.edges.len());
        let b = SpanBasis::new(other.edges.len());
        self.difference_search(other, &mut chosen, &a, &b, max_size)
    }

    fn difference_search(
        &self,
        other: &TreeMatroid,
        chosen: &mut Vec<usize>,
        a: &SpanBasis,
        b: &SpanBasis,
        max_size: usize,
    ) -> Option<Vec<usize>> {
        if chosen.len() == max_size {
            return None;
        }
        let next = chosen.last().map_or(0, |&l| l + 1);
        for i in next..self.cords.len() {
            let mut a2 = a.clone();
            let mut b2 = b.clone();
            a2.insert(&self.rows[i]);
            b2.insert(&other.rows[i]);
            chosen.push(i);
            if a2.rank() != b2.rank() {
                return Some(chosen.clone());
            }
            if let Some(found) = self.difference_search(other, chosen, &a2, &b2, max_size) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    /// The set of cords `c` outside `basis` for which `basis ∪ {c}` is a basis
    /// of the matroid of the tree before contracting `f`, computed from
    /// coordinates over `basis` in the contracted tree.
    fn contraction_extensions_indices(
        &self,
        contracted: &TreeMatroid,
        f_col: usize,
        basis: &[usize],
    ) -> Result<Vec<usize>> {
        let rows: Vec<Vec<i64>> = basis.iter().map(|&b| contracted.rows[b].clone()).collect();
        let solver = CoordinateSolver::new(&rows, contracted.edges.len())?;
        let weights: Vec<i64> = basis.iter().map(|&b| self.rows[b][f_col]).collect();
        let small = solver.weighted_coordinate_sum_small(&weights);
        let mut big = None;
        let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
        let mut out = Vec::new();
        for c in 0..self.cords.len() {
            if in_basis.contains(&c) {
                continue;
            }
            let target = &contracted.rows[c];
            let expected = self.rows[c][f_col];
            let same = match small.as_ref().and_then(|s| s.takes_value(target, expected)) {
                Some(v) => v,
                None => big
                    .get_or_insert_with(|| solver.weighted_coordinate_sum(&weights))
                    .takes_value(target, expected),
            };
            if !same {
                out.push(c);
            }
        }
        Ok(out)
    }

    fn interior_column(&self, f: EdgeId) -> Result<usize> {
        if !self.tree.is_interior_edge(f) {
            return Err(match self.tree.endpoints(f) {
                Err(e) => e.into(),
                Ok(_) => TreeError::PendantEdge(f).into(),
            });
        }
        Ok(self.edges.binary_search(&f).expect("edge of the tree"))
    }

    /// Cords addable to a basis of the contracted tree `T/f` to give a basis
    /// of `T`.
    pub fn contraction_extensions(&self, f: EdgeId, basis: &CordSet) -> Result<CordSet> {
        let col = self.interior_column(f)?;
        let contracted = TreeMatroid::new(&self.tree.contract(&BTreeSet::from([f]))?);
        let idx = contracted.indices(basis)?;
        if idx.len() != contracted.full_rank() || !contracted.is_independent_indices(&idx) {
            return Err(Error::InvalidInput(format!(
                "{basis} is not a basis of the contracted tree"
            )));
        }
        let ext = self.contraction_extensions_indices(&contracted, col, &idx)?;
        Ok(self.cord_set(&ext))
    }

    /// All bases of `T` assembled from bases of `T/f` plus one cord, sorted
    /// and deduplicated.
    pub fn contraction_basis_indices(
        &self,
        f: EdgeId,
        max_leaves: usize,
        parallel: bool,
    ) -> Result<Vec<Vec<usize>>> {
        let col = self.interior_column(f)?;
        let contracted = TreeMatroid::new(&self.tree.contract(&BTreeSet::from([f]))?);
        let small_bases = contracted.basis_indices(max_leaves, parallel)?;
        let extend = |b: &Vec<usize>| -> Result<Vec<Vec<usize>>> {
            Ok(self
                .contraction_extensions_indices(&contracted, col, b)?
                .into_iter()
                .map(|c| {
                    let mut v = b.clone();
                    v.push(c);
                    v.sort_unstable();
                    v
                })
                .collect())
        };
        let parts: Vec<Vec<Vec<usize>>> = if parallel {
            small_bases.par_iter().map(extend).collect::<Result<_>>()?
        } else {
            small_bases.iter().map(extend).collect::<Result<_>>()?
        };
        let set: BTreeSet<Vec<usize>> = parts.into_iter().flatten().collect();
        Ok(set.into_iter().collect())
    }

    pub fn contraction_bases(&self, f: EdgeId, max_leaves: usize) -> Result<Vec<CordSet>> {
        let mut out: Vec<CordSet> = self
            .contraction_basis_indices(f, max_leaves, false)?
            .iter()
            .map(|b| self.cord_set(b))
            .collect();
        out.sort();
        Ok(out)
    }

    fn matrix(&self, indices: &[usize], columns: &[usize]) -> RationalMatrix {
        let rows: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| columns.iter().map(|&c| self.rows[i][c]).collect())
            .collect();
        RationalMatrix::from_integer_rows(columns.len(), &rows).expect("consistent row lengths")
    }

    /// Ranks of `set` in `T` and in `T/F`, and the dimension of the space of
    /// forms in its span that vanish off `F`. The first equals the sum of the
    /// other two, and the last is at most `|F|`.
    pub fn contract_rank_decomposition(
        &self,
        f: &BTreeSet<EdgeId>,
        set: &CordSet,
    ) -> Result<RankDecomposition> {
        let contracted_tree = self.tree.contract(f)?;
        let contracted = TreeMatroid::new(&contracted_tree);
        let idx = self.indices(set)?;
        let rank = self.rank_of_indices(&idx);
        let contracted_rank = contracted.rank_of_indices(&contracted.indices(set)?);

        let keep: Vec<usize> = (0..self.edges.len())
            .filter(|c| !f.contains(&self.edges[*c]))
            .collect();
        let all: Vec<usize> = (0..self.edges.len()).collect();
        let full = self.matrix(&idx, &all);
        let outside = self.matrix(&idx, &keep);
        // y with y^T M_{E-F} = 0, then the span of y^T M
        let left_kernel = exact::kernel_basis(&outside.transpose());
        let images: Vec<Vec<Rational>> = left_kernel
            .iter()
            .map(|y| full.left_mul_vec(y))
            .collect::<std::result::Result<_, _>>()?;
        let kernel_dim = if images.is_empty() {
            0
        } else {
            exact::rank(&RationalMatrix::from_rows(self.edges.len(), images)?)
        };
        if rank != contracted_rank + kernel_dim || kernel_dim > f.len() {
            return Err(Error::Inconsistent(format!(
                "rank {rank}, contracted rank {contracted_rank}, kernel {kernel_dim}, |F| = {}",
                f.len()
            )));
        }
        Ok(RankDecomposition {
            rank,
            contracted_rank,
            kernel_dim,
        })
    }

    /// Rank of `set` in `T` and in `T|_Y`; the two always agree.
    pub fn restriction_rank<S: AsRef<str>>(
        &self,
        y: &[S],
        set: &CordSet,
    ) -> Result<(usize, usize)> {
        let keep: BTreeSet<&str> = y.iter().map(|s| s.as_ref()).collect();
        if let Some(c) = set
            .iter()
            .find(|c| !keep.contains(c.a()) || !keep.contains(c.b()))
        {
            return Err(Error::InvalidInput(format!("cord {c} leaves the subset")));
        }
        let restricted = self.tree.restrict(y)?;
        let sub = TreeMatroid::new(&restricted.tree);
        let full = self.rank_of(set)?;
        let local = sub.rank_of(set)?;
        if full != local {
            return Err(Error::Inconsistent(format!(
                "rank {full} in the tree but {local} after restriction"
            )));
        }
        Ok((full, local))
    }
}
