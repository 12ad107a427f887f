//! Lassos: cord sets whose distances determine the edge weights, the shape,
//! or both, of an X-tree.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, int, LinearSystem, Rational, Relation, DEFAULT_MAX_VARIABLES};
use crate::matroid::TreeMatroid;
use crate::stargraph::analyze;
use crate::tree::{
    enumerate_xtrees, Cord, CordSet, EdgeId, EdgeWeighting, TreeError, VertexId, XTree,
};

pub const DEFAULT_MAX_TOPOLOGY_LEAVES: usize = 6;

/// Whether every incident edge pair at every interior vertex lies on the
/// path of some cord.
pub fn is_t_cover(tree: &XTree, cords: &CordSet) -> Result<bool> {
    tree.check_cords(cords)?;
    let mut covered: BTreeSet<(EdgeId, EdgeId)> = BTreeSet::new();
    for c in cords {
        let path = tree.leaf_path(c.a(), c.b())?;
        for w in path.windows(2) {
            covered.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    for v in tree.interior_vertices() {
        let edges: Vec<EdgeId> = tree.neighbors(v).iter().map(|(_, e)| *e).collect();
        for (i, &e) in edges.iter().enumerate() {
            for &g in &edges[i + 1..] {
                if !covered.contains(&(e.min(g), e.max(g))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_bipartition<S: AsRef<str>>(
    tree: &XTree,
    a: &[S],
    b: &[S],
) -> Result<(Vec<String>, Vec<String>)> {
    let sa: BTreeSet<String> = a.iter().map(|s| s.as_ref().to_string()).collect();
    let sb: BTreeSet<String> = b.iter().map(|s| s.as_ref().to_string()).collect();
    let all: BTreeSet<String> = tree.labels().iter().cloned().collect();
    if sa.is_empty()
        || sb.is_empty()
        || !sa.is_disjoint(&sb)
        || sa.union(&sb).cloned().collect::<BTreeSet<_>>() != all
    {
        return Err(Error::InvalidInput(
            "the two parts must be non-empty and partition the leaves".into(),
        ));
    }
    Ok((sa.into_iter().collect(), sb.into_iter().collect()))
}

/// Every T-cherry has one leaf in each part. Also checks that this agrees
/// with `A ∨ B` being a t-cover, which holds for four or more leaves.
pub fn split_check<S: AsRef<str>>(tree: &XTree, a: &[S], b: &[S]) -> Result<bool> {
    let (a, b) = check_bipartition(tree, a, b)?;
    if tree.leaf_count() < 4 {
        return Err(Error::InvalidInput(
            "the split criterion needs at least four leaves".into(),
        ));
    }
    let in_a: BTreeSet<&str> = a.iter().map(String::as_str).collect();
    let verdict = tree
        .cherries()
        .iter()
        .all(|ch| in_a.contains(ch.cord.a()) != in_a.contains(ch.cord.b()));
    let cover = is_t_cover(tree, &CordSet::join(&a, &b))?;
    if cover != verdict {
        return Err(Error::Inconsistent(format!(
            "cherry criterion says {verdict} but t-cover says {cover}"
        )));
    }
    Ok(verdict)
}

/// Leaves in the component of `T - v` that contains `w`.
fn leaves_beyond(tree: &XTree, v: VertexId, w: VertexId) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![(w, v)];
    while let Some((x, from)) = stack.pop() {
        if let Some(l) = tree.leaf_label(x) {
            out.push(l.to_string());
        }
        for &(y, _) in tree.neighbors(x) {
            if y != from {
                stack.push((y, x));
            }
        }
    }
    out.sort();
    out
}

/// All pointed `x`-covers of a binary tree: the cords `ax` for every other
/// leaf `a`, plus for each interior vertex `v` one cord joining the two
/// components of `T - v` that avoid `x`.
pub fn pointed_covers(tree: &XTree, x: &str) -> Result<Vec<CordSet>> {
    if !tree.is_binary() {
        return Err(TreeError::NotBinary.into());
    }
    let xv = tree.leaf_vertex(x)?;
    let base: CordSet = tree
        .labels()
        .iter()
        .filter(|a| a.as_str() != x)
        .map(|a| Cord::new(a.as_str(), x))
        .collect::<Result<_, _>>()?;
    let mut choices: Vec<Vec<Cord>> = Vec::new();
    for v in tree.interior_vertices() {
        let sides: Vec<Vec<String>> = tree
            .neighbors(v)
            .iter()
            .map(|(w, _)| leaves_beyond(tree, v, *w))
            .filter(|side| !side.iter().any(|l| tree.leaf_vertex(l).ok() == Some(xv)))
            .collect();
        debug_assert_eq!(sides.len(), 2);
        let mut options = Vec::new();
        for y in &sides[0] {
            for z in &sides[1] {
                options.push(Cord::new(y.as_str(), z.as_str())?);
            }
        }
        choices.push(options);
    }
    let mut out = BTreeSet::new();
    let mut current = base.clone();
    fn expand(choices: &[Vec<Cord>], current: &mut CordSet, out: &mut BTreeSet<CordSet>) {
        match choices.split_first() {
            None => {
                out.insert(current.clone());
            }
            Some((first, rest)) => {
                for c in first {
                    current.insert(c.clone());
                    expand(rest, current, out);
                    current.remove(c);
                }
            }
        }
    }
    expand(&choices, &mut current, &mut out);
    Ok(out.into_iter().collect())
}

/// Knobs for the brute-force topology decider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyOptions {
    /// Require pendant edges to be strictly positive too. By default only
    /// interior edges must be positive and pendant edges are non-negative.
    pub strict_pendant: bool,
    /// Answer `false` at once for a disconnected cord graph (four or more
    /// leaves).
    pub connectivity_shortcut: bool,
    pub max_leaves: usize,
    pub max_variables: usize,
    pub parallel: bool,
}

impl Default for TopologyOptions {
    fn default() -> Self {
        TopologyOptions {
            strict_pendant: false,
            connectivity_shortcut: true,
            max_leaves: DEFAULT_MAX_TOPOLOGY_LEAVES,
            max_variables: DEFAULT_MAX_VARIABLES,
            parallel: false,
        }
    }
}

/// A second tree and proper weightings of both trees that agree on every
/// cord of the set.
#[derive(Clone, Debug)]
pub struct Competitor {
    pub tree: XTree,
    pub weights: EdgeWeighting,
    pub target_weights: EdgeWeighting,
}

/// Decides topological lassos for one tree by checking every other tree on
/// the same leaves.
#[derive(Clone, Debug)]
pub struct TopologicalDecider {
    target: TreeMatroid,
    others: Vec<TreeMatroid>,
    options: TopologyOptions,
}

impl TopologicalDecider {
    pub fn new(tree: &XTree, options: TopologyOptions) -> Result<Self> {
        let n = tree.leaf_count();
        if n > options.max_leaves {
            return Err(Error::ScaleBound {
                what: "leaves for the topological lasso check",
                limit: options.max_leaves,
                actual: n,
            });
        }
        let own = tree.canonical_newick();
        let others = enumerate_xtrees(tree.labels(), options.max_leaves)?
            .into_iter()
            .filter(|t| t.canonical_newick() != own)
            .map(|t| TreeMatroid::new(&t))
            .collect();
        Ok(TopologicalDecider {
            target: TreeMatroid::new(tree),
            others,
            options,
        })
    }

    pub fn tree(&self) -> &XTree {
        self.target.tree()
    }

    pub fn matroid(&self) -> &TreeMatroid {
        &self.target
    }

    pub fn options(&self) -> &TopologyOptions {
        &self.options
    }

    /// Number of competing trees.
    pub fn competitor_count(&self) -> usize {
        self.others.len()
    }

    pub fn is_lasso(&self, cords: &CordSet) -> Result<bool> {
        Ok(self.competitor(cords)?.is_none())
    }

    /// Some other tree that is compatible with the distances on `cords`, or
    /// `None` when `cords` is a topological lasso.
    pub fn competitor(&self, cords: &CordSet) -> Result<Option<Competitor>> {
        let idx = self.target.indices(cords)?;
        let tree = self.target.tree();
        if self.options.connectivity_shortcut
            && tree.leaf_count() >= 4
            && !analyze(tree.labels(), cords)?.is_connected()
        {
            // still produce a concrete competitor so the answer is checkable
            return self.search(&idx, true);
        }
        self.search(&idx, false)
    }

    fn search(&self, idx: &[usize], expect_some: bool) -> Result<Option<Competitor>> {
        let check =
            |other: &TreeMatroid| -> Result<Option<Competitor>> { self.against(other, idx) };
        let found = if self.options.parallel {
            self.others
                .par_iter()
                .map(check)
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                })
        } else {
            self.others
                .iter()
                .map(check)
                .find(|r| !matches!(r, Ok(None)))
        };
        match found {
            Some(r) => r,
            None if expect_some => Err(Error::Inconsistent(
                "disconnected cord set, yet no competing tree was found".into(),
            )),
            None => Ok(None),
        }
    }

    fn against(&self, other: &TreeMatroid, idx: &[usize]) -> Result<Option<Competitor>> {
        let m1 = other.full_rank();
        let m2 = self.target.full_rank();
        let dim = m1 + m2;
        let mut system = LinearSystem::new(dim);
        for &c in idx {
            let mut row: Vec<Rational> = other.row(c).iter().map(|&x| int(x)).collect();
            row.extend(self.target.row(c).iter().map(|&x| int(-x)));
            system.equal(row, Rational::zero())?;
        }
        let sign = |system: &mut LinearSystem, var: usize, strict: bool| -> Result<()> {
            let mut row = vec![Rational::zero(); dim];
            row[var] = Rational::one();
            let rel = if strict { Relation::Gt } else { Relation::Ge };
            system.push(row, rel, Rational::zero())?;
            Ok(())
        };
        for (k, e) in other.edge_columns().iter().enumerate() {
            sign(
                &mut system,
                k,
                self.options.strict_pendant || other.tree().is_interior_edge(*e),
            )?;
        }
        for (k, e) in self.target.edge_columns().iter().enumerate() {
            sign(
                &mut system,
                m1 + k,
                self.options.strict_pendant || self.target.tree().is_interior_edge(*e),
            )?;
        }
        let Some(point) = exact::find_point(&system, self.options.max_variables)? else {
            return Ok(None);
        };
        let weights = |tree: &XTree, cols: &[EdgeId], vals: &[Rational]| -> Result<EdgeWeighting> {
            let map: BTreeMap<EdgeId, Rational> =
                cols.iter().copied().zip(vals.iter().cloned()).collect();
            Ok(EdgeWeighting::new(tree, map)?)
        };
        Ok(Some(Competitor {
            tree: other.tree().clone(),
            weights: weights(other.tree(), other.edge_columns(), &point[..m1])?,
            target_weights: weights(self.target.tree(), self.target.edge_columns(), &point[m1..])?,
        }))
    }

    /// Edge-weight lasso and topological lasso.
    pub fn is_strong_lasso(&self, cords: &CordSet) -> Result<bool> {
        Ok(self.target.verdict(cords)?.lasso && self.is_lasso(cords)?)
    }

    /// A strong lasso none of whose single-cord deletions is one.
    pub fn is_minimal_strong_lasso(&self, cords: &CordSet) -> Result<bool> {
        if !self.is_strong_lasso(cords)? {
            return Ok(false);
        }
        for c in cords {
            if self.is_strong_lasso(&cords.without(c))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_topological_lasso(
    tree: &XTree,
    cords: &CordSet,
    options: &TopologyOptions,
) -> Result<bool> {
    TopologicalDecider::new(tree, options.clone())?.is_lasso(cords)
}

pub fn is_minimal_strong_lasso(
    tree: &XTree,
    cords: &CordSet,
    options: &TopologyOptions,
) -> Result<bool> {
    TopologicalDecider::new(tree, options.clone())?.is_minimal_strong_lasso(cords)
}

/// A yes/no answer, or no answer because the instance is above the
/// configured size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

impl Decision {
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Undecided,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LassoReport {
    pub edge_weight: bool,
    pub topological: Decision,
    pub strong: Decision,
    pub rank: usize,
    pub full_rank: usize,
    /// Colour classes when the cord graph is connected and bipartite.
    pub bipartition: Option<(Vec<String>, Vec<String>)>,
}

pub fn lasso_report(
    tree: &XTree,
    cords: &CordSet,
    options: &TopologyOptions,
) -> Result<LassoReport> {
    let m = TreeMatroid::new(tree);
    let v = m.verdict(cords)?;
    let topological = match TopologicalDecider::new(tree, options.clone()) {
        Ok(d) => Decision::from(d.is_lasso(cords)?),
        Err(Error::ScaleBound { .. }) => Decision::Undecided,
        Err(e) => return Err(e),
    };
    let report = analyze(tree.labels(), cords)?;
    let bipartition = match report.components.as_slice() {
        [only] if only.bipartite => only.parts.clone(),
        _ => None,
    };
    Ok(LassoReport {
        edge_weight: v.lasso,
        topological,
        strong: Decision::from(v.lasso).and(topological),
        rank: v.rank,
        full_rank: m.full_rank(),
        bipartition,
    })
}

/// The weighting that is `+1` on pendant edges of `A`, `-1` on pendant
/// edges of `B` and `0` on interior edges.
pub fn split_weighting<S: AsRef<str>>(tree: &XTree, a: &[S], b: &[S]) -> Result<EdgeWeighting> {
    let (a, _) = check_bipartition(tree, a, b)?;
    let in_a: BTreeSet<&str> = a.iter().map(String::as_str).collect();
    let mut map = BTreeMap::new();
    for e in tree.edge_ids() {
        map.insert(e, Rational::zero());
    }
    for l in tree.labels() {
        let value = if in_a.contains(l.as_str()) {
            int(1)
        } else {
            int(-1)
        };
        map.insert(tree.pendant_edge(l)?, value);
    }
    Ok(EdgeWeighting::new(tree, map)?)
}

#[derive(Clone, Debug)]
pub struct HyperplaneReport {
    pub parts: (Vec<String>, Vec<String>),
    pub split_weighting: EdgeWeighting,
    pub closure: CordSet,
    /// The closure is `A ∨ B`.
    pub closure_is_join: bool,
    /// The closure is a maximal set of rank below `|E|`.
    pub is_hyperplane: bool,
    /// Cords whose addition gives an edge-weight lasso.
    pub lasso_extensions: CordSet,
    /// Cords whose addition makes the cord graph non-bipartite.
    pub non_bipartite_extensions: CordSet,
}

#[derive(Clone, Debug)]
pub struct BipartiteReport {
    pub rank: usize,
    pub full_rank: usize,
    /// Present when the rank is `|E| - 1`.
    pub hyperplane: Option<HyperplaneReport>,
}

/// Rank facts for a bipartite cord set. Fails on a non-bipartite set, and
/// reports an inconsistency if the set has rank `|E|` or, at rank `|E| - 1`,
/// if the lasso extensions differ from the non-bipartite ones.
pub fn bipartite_analysis(tree: &XTree, cords: &CordSet) -> Result<BipartiteReport> {
    let report = analyze(tree.labels(), cords)?;
    if report.components.iter().any(|c| !c.bipartite) {
        return Err(Error::InvalidInput(format!("{cords} is not bipartite")));
    }
    let m = TreeMatroid::new(tree);
    let rank = m.rank_of(cords)?;
    let full_rank = m.full_rank();
    if rank >= full_rank {
        return Err(Error::Inconsistent(format!(
            "bipartite set {cords} has full rank {rank}"
        )));
    }
    if rank + 1 < full_rank {
        return Ok(BipartiteReport {
            rank,
            full_rank,
            hyperplane: None,
        });
    }
    let [only] = report.components.as_slice() else {
        return Err(Error::Inconsistent(format!(
            "bipartite set {cords} of rank |E| - 1 is not connected"
        )));
    };
    let (a, b) = only.parts.clone().expect("bipartite component");
    let join = CordSet::join(&a, &b);
    let closure = m.closure(cords)?;
    let outside = m.all_cords().difference(&closure);
    let is_hyperplane = m.rank_of(&closure)? + 1 == full_rank
        && outside
            .iter()
            .all(|c| m.rank_of(&closure.with(c)).ok() == Some(full_rank));
    let candidates = m.all_cords().difference(cords);
    let lasso_extensions: CordSet = candidates
        .iter()
        .filter(|c| m.rank_of(&cords.with(c)).ok() == Some(full_rank))
        .cloned()
        .collect();
    let mut non_bipartite_extensions = CordSet::new();
    for c in &candidates {
        if analyze(tree.labels(), &cords.with(c))?.bipartite_count() == 0 {
            non_bipartite_extensions.insert(c.clone());
        }
    }
    if lasso_extensions != non_bipartite_extensions {
        return Err(Error::Inconsistent(format!(
            "lasso extensions {lasso_extensions} differ from non-bipartite extensions {non_bipartite_extensions}"
        )));
    }
    Ok(BipartiteReport {
        rank,
        full_rank,
        hyperplane: Some(HyperplaneReport {
            split_weighting: split_weighting(tree, &a, &b)?,
            parts: (a, b),
            closure_is_join: closure == join,
            closure,
            is_hyperplane,
            lasso_extensions,
            non_bipartite_extensions,
        }),
    })
}

/// Consequences that must hold for a topological lasso that is not an
/// edge-weight lasso, evaluated on one cord set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowRankReport {
    pub topological: bool,
    pub rank: usize,
    pub full_rank: usize,
    /// The set is a topological lasso of rank below `|E|`.
    pub premise: bool,
    pub bipartite: bool,
    pub rank_is_full_minus_one: bool,
    pub cherries_proper: bool,
    /// Present under the premise: whether adding any cord that breaks
    /// bipartiteness yields a strong lasso.
    pub extensions_strong: Option<bool>,
    /// For a bipartite set of rank `|E| - 1`: whether its closure is a
    /// topological lasso.
    pub closure_topological: Option<bool>,
}

impl LowRankReport {
    /// All conclusions hold whenever the premise does.
    pub fn consistent(&self) -> bool {
        let low_rank = !self.premise
            || (self.bipartite
                && self.rank_is_full_minus_one
                && self.cherries_proper
                && self.extensions_strong == Some(true));
        let closure = self
            .closure_topological
            .is_none_or(|t| t == self.cherries_proper);
        low_rank && closure
    }
}

pub fn low_rank_report(decider: &TopologicalDecider, cords: &CordSet) -> Result<LowRankReport> {
    let tree = decider.tree();
    let m = decider.matroid();
    let topological = decider.is_lasso(cords)?;
    let rank = m.rank_of(cords)?;
    let full_rank = m.full_rank();
    let graph = analyze(tree.labels(), cords)?;
    let bipartite = graph.bipartite_count() == graph.components.len();
    let cherries_proper = tree.cherries().iter().all(|c| c.proper);
    let premise = topological && rank < full_rank;
    let extensions_strong = if premise {
        let mut all = true;
        for c in m.all_cords().difference(cords) {
            let ext = cords.with(&c);
            let g = analyze(tree.labels(), &ext)?;
            if g.bipartite_count() < g.components.len() && !decider.is_strong_lasso(&ext)? {
                all = false;
                break;
            }
        }
        Some(all)
    } else {
        None
    };
    let closure_topological = if bipartite && rank + 1 == full_rank {
        Some(decider.is_lasso(&m.closure(cords)?)?)
    } else {
        None
    };
    Ok(LowRankReport {
        topological,
        rank,
        full_rank,
        premise,
        bipartite,
        rank_is_full_minus_one: rank + 1 == full_rank,
        cherries_proper,
        extensions_strong,
        closure_topological,
    })
}

/// Four properties of a tree that are equivalent, each computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperCherryReport {
    /// Some bipartition `A, B` with `A ∨ B` a topological lasso.
    pub bipartite_lasso: Option<(Vec<String>, Vec<String>)>,
    /// Some hyperplane (rank `|E| - 1`, maximal) that is a topological lasso.
    pub low_rank_lasso: Option<CordSet>,
    /// A topological lasso of rank exactly `|E| - 1`, minimal under deletion.
    pub corank_one_lasso: Option<CordSet>,
    pub cherries_proper: bool,
}

impl ProperCherryReport {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.bipartite_lasso.is_some(),
            self.low_rank_lasso.is_some(),
            self.corank_one_lasso.is_some(),
            self.cherries_proper,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|x| *x == f[0])
    }
}

/// All bipartitions `(A, B)` of the leaves with the smallest leaf in `A`.
pub fn bipartitions(labels: &[String]) -> Vec<(Vec<String>, Vec<String>)> {
    let n = labels.len();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        // leaf 0 always in A; mask bit i puts leaf i + 1 in B
        if mask == 0 {
            continue;
        }
        let mut a = vec![labels[0].clone()];
        let mut b = Vec::new();
        for (i, label) in labels.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                b.push(label.clone());
            } else {
                a.push(label.clone());
            }
        }
        out.push((a, b));
    }
    out
}

/// All hyperplanes of the matroid, from the closures of bases minus one cord.
pub fn hyperplanes(m: &TreeMatroid, max_leaves: usize) -> Result<Vec<CordSet>> {
    let mut found = BTreeSet::new();
    for basis in m.basis_indices(max_leaves, false)? {
        for skip in 0..basis.len() {
            let rest: Vec<usize> = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &i)| i)
                .collect();
            let span = m.span_of_indices(&rest);
            let flat: Vec<usize> = (0..m.cords().len())
                .filter(|&i| span.contains(m.row(i)))
                .collect();
            found.insert(flat);
        }
    }
    Ok(found.into_iter().map(|f| m.cord_set(&f)).collect())
}

pub fn proper_cherry_report(decider: &TopologicalDecider) -> Result<ProperCherryReport> {
    let tree = decider.tree();
    let m = decider.matroid();
    let mut bipartite_lasso = None;
    for (a, b) in bipartitions(tree.labels()) {
        if decider.is_lasso(&CordSet::join(&a, &b))? {
            bipartite_lasso = Some((a, b));
            break;
        }
    }
    let mut low_rank_lasso = None;
    for h in hyperplanes(m, decider.options().max_leaves.max(tree.leaf_count()))? {
        if decider.is_lasso(&h)? {
            low_rank_lasso = Some(h);
            break;
        }
    }
    let corank_one_lasso = match &low_rank_lasso {
        None => None,
        Some(h) => {
            let mut current = h.clone();
            loop {
                let mut shrunk = false;
                for c in current.clone().iter() {
                    let smaller = current.without(c);
                    if decider.is_lasso(&smaller)? {
                        current = smaller;
                        shrunk = true;
                        break;
                    }
                }
                if !shrunk {
                    break;
                }
            }
            if m.rank_of(&current)? + 1 == m.full_rank() {
                Some(current)
            } else {
                return Err(Error::Inconsistent(format!(
                    "topological lasso {current} inside a hyperplane has rank {}",
                    m.rank_of(&current)?
                )));
            }
        }
    };
    Ok(ProperCherryReport {
        bipartite_lasso,
        low_rank_lasso,
        corank_one_lasso,
        cherries_proper: tree.cherries().iter().all(|c| c.proper),
    })
}

/// The low-rank consequences for one cord set together with the four
/// proper-cherry conditions for its tree.
#[derive(Clone, Debug)]
pub struct TopologicalRankReport {
    pub low_rank: LowRankReport,
    pub proper_cherries: ProperCherryReport,
}

impl TopologicalRankReport {
    pub fn consistent(&self) -> bool {
        self.low_rank.consistent() && self.proper_cherries.all_agree()
    }
}

pub fn topological_rank_theorems(
    tree: &XTree,
    cords: &CordSet,
    options: &TopologyOptions,
) -> Result<TopologicalRankReport> {
    let decider = TopologicalDecider::new(tree, options.clone())?;
    Ok(TopologicalRankReport {
        low_rank: low_rank_report(&decider, cords)?,
        proper_cherries: proper_cherry_report(&decider)?,
    })
}
