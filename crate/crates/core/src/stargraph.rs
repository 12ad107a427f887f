//! Graph characterizations of the star-tree matroid.
//!
//! For the star tree on `X` the vector of cord `xy` is `e_x + e_y`, so the
//! matroid is the even-cycle (signed-graphic, all edges negative) matroid of
//! the graph `(X, L)`. Everything here is pure graph code on that graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::tree::{Cord, CordSet, TreeError};

/// One connected component of `(X, L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: Vec<String>,
    pub edges: CordSet,
    pub bipartite: bool,
    /// `|edges| - |vertices| + 1`.
    pub cycle_count: usize,
    pub odd_cycle: bool,
    /// The two colour classes when bipartite; the first holds the smallest
    /// vertex.
    pub parts: Option<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Ordered by smallest vertex; isolated vertices are singleton components.
    pub components: Vec<Component>,
}

impl ComponentReport {
    pub fn bipartite_count(&self) -> usize {
        self.components.iter().filter(|c| c.bipartite).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

struct Graph<'a> {
    labels: Vec<&'a str>,
    adj: BTreeMap<&'a str, Vec<&'a str>>,
}

impl<'a> Graph<'a> {
    fn new<S: AsRef<str>>(labels: &'a [S], cords: &'a CordSet) -> Result<Self, TreeError> {
        let mut labels: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
        labels.sort_unstable();
        labels.dedup();
        let mut adj: BTreeMap<&str, Vec<&str>> = labels.iter().map(|l| (*l, Vec::new())).collect();
        for c in cords {
            for (u, v) in [(c.a(), c.b()), (c.b(), c.a())] {
                adj.get_mut(u)
                    .ok_or_else(|| TreeError::UnknownLeaf(u.to_string()))?
                    .push(v);
            }
        }
        Ok(Graph { labels, adj })
    }

    fn degree(&self, v: &str) -> usize {
        self.adj[v].len()
    }
}

/// Components of `(X, L)` with bipartiteness and cycle counts.
pub fn analyze<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<ComponentReport, TreeError> {
    let g = Graph::new(labels, cords)?;
    let mut colour: BTreeMap<&str, u8> = BTreeMap::new();
    let mut components = Vec::new();
    for &start in &g.labels {
        if colour.contains_key(start) {
            continue;
        }
        colour.insert(start, 0);
        let mut queue = VecDeque::from([start]);
        let mut verts = vec![start];
        let mut bipartite = true;
        while let Some(u) = queue.pop_front() {
            for &w in &g.adj[u] {
                match colour.get(w) {
                    None => {
                        colour.insert(w, 1 - colour[u]);
                        verts.push(w);
                        queue.push_back(w);
                    }
                    Some(&cw) if cw == colour[u] => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        verts.sort_unstable();
        let members: BTreeSet<&str> = verts.iter().copied().collect();
        let edges: CordSet = cords
            .iter()
            .filter(|c| members.contains(c.a()))
            .cloned()
            .collect();
        let parts = bipartite.then(|| {
            let side = |k: u8| -> Vec<String> {
                verts
                    .iter()
                    .filter(|v| colour[**v] == k)
                    .map(|v| v.to_string())
                    .collect()
            };
            let (zero, one) = (side(0), side(1));
            if zero.first() <= one.first() || one.is_empty() {
                (zero, one)
            } else {
                (one, zero)
            }
        });
        components.push(Component {
            cycle_count: edges.len() + 1 - verts.len(),
            vertices: verts.iter().map(|v| v.to_string()).collect(),
            edges,
            bipartite,
            odd_cycle: !bipartite,
            parts,
        });
    }
    Ok(ComponentReport { components })
}

/// Rank in the star-tree matroid: `n` minus the number of bipartite
/// components, isolated vertices included.
pub fn star_rank<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<usize, TreeError> {
    let r = analyze(labels, cords)?;
    Ok(r.components.iter().map(|c| c.vertices.len()).sum::<usize>() - r.bipartite_count())
}

/// No component is bipartite.
pub fn star_is_lasso<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<bool, TreeError> {
    Ok(analyze(labels, cords)?.bipartite_count() == 0)
}

/// Every component is a tree or contains exactly one circle, of odd length.
pub fn star_is_independent<S: AsRef<str>>(
    labels: &[S],
    cords: &CordSet,
) -> Result<bool, TreeError> {
    Ok(analyze(labels, cords)?
        .components
        .iter()
        .all(|c| c.cycle_count == 0 || (c.cycle_count == 1 && c.odd_cycle)))
}

/// Every component contains exactly one circle, of odd length.
pub fn star_is_basis<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<bool, TreeError> {
    Ok(analyze(labels, cords)?
        .components
        .iter()
        .all(|c| c.cycle_count == 1 && c.odd_cycle))
}

/// An even circle, or two odd circles that share one vertex or are joined by
/// a path.
pub fn star_is_circuit<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<bool, TreeError> {
    let g = Graph::new(labels, cords)?;
    let touched: Vec<&str> = g
        .labels
        .iter()
        .copied()
        .filter(|v| g.degree(v) > 0)
        .collect();
    if touched.is_empty() {
        return Ok(false);
    }
    let report = analyze(labels, cords)?;
    let nontrivial: Vec<&Component> = report
        .components
        .iter()
        .filter(|c| !c.edges.is_empty())
        .collect();
    if nontrivial.len() != 1 {
        return Ok(false);
    }
    let comp = nontrivial[0];
    if touched.iter().any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    match comp.cycle_count {
        1 => Ok(comp.edges.len().is_multiple_of(2)),
        2 => {
            let big: Vec<&str> = touched
                .iter()
                .copied()
                .filter(|v| g.degree(v) > 2)
                .collect();
            if big.len() == 1 {
                // two circles through one vertex of degree 4
                let lengths = circles_through(&g, big[0]);
                return Ok(lengths.len() == 2 && lengths.iter().all(|l| l % 2 == 1));
            }
            let bridges = bridges(&g, &touched);
            if bridges.is_empty() {
                // theta graph: always contains an even circle
                return Ok(false);
            }
            let rest: CordSet = comp.edges.difference(&bridges);
            let rest_report = analyze(labels, &rest)?;
            let circles: Vec<&Component> = rest_report
                .components
                .iter()
                .filter(|c| !c.edges.is_empty())
                .collect();
            Ok(circles.len() == 2
                && circles.iter().all(|c| {
                    c.cycle_count == 1 && c.odd_cycle && c.edges.len() == c.vertices.len()
                }))
        }
        _ => Ok(false),
    }
}

/// Lengths of the closed walks leaving `v` along unused edges, in a graph
/// where every other vertex has degree 2.
fn circles_through(g: &Graph<'_>, v: &str) -> Vec<usize> {
    let mut used: BTreeSet<(String, String)> = BTreeSet::new();
    let key = |a: &str, b: &str| {
        if a < b {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        }
    };
    let mut lengths = Vec::new();
    for &first in &g.adj[v] {
        if used.contains(&key(v, first)) {
            continue;
        }
        used.insert(key(v, first));
        let (mut cur, mut len) = (first, 1);
        while cur != v {
            let next = g.adj[cur]
                .iter()
                .copied()
                .find(|&w| !used.contains(&key(cur, w)));
            match next {
                Some(w) => {
                    used.insert(key(cur, w));
                    cur = w;
                    len += 1;
                }
                None => return Vec::new(),
            }
        }
        lengths.push(len);
    }
    lengths
}

/// Bridges of the graph induced on `verts`.
fn bridges(g: &Graph<'_>, verts: &[&str]) -> CordSet {
    let index: BTreeMap<&str, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let n = verts.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = CordSet::new();
    let mut timer = 0;
    // iterative DFS: (vertex, parent, next neighbour position)
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            let nbrs = &g.adj[verts[u]];
            if *pos < nbrs.len() {
                let w = index[nbrs[*pos]];
                *pos += 1;
                if Some(w) == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(u), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.insert(Cord::new(verts[p], verts[u]).expect("distinct"));
                    }
                }
            }
        }
    }
    out
}

/// Closure in the star-tree matroid: the complete graph on the vertices of
/// the non-bipartite components, plus `A ∨ B` for each bipartite component
/// with colour classes `A`, `B`.
pub fn star_closure<S: AsRef<str>>(labels: &[S], cords: &CordSet) -> Result<CordSet, TreeError> {
    let report = analyze(labels, cords)?;
    let odd: Vec<&String> = report
        .components
        .iter()
        .filter(|c| !c.bipartite)
        .flat_map(|c| c.vertices.iter())
        .collect();
    let mut out = CordSet::complete(&odd);
    for c in &report.components {
        if let Some((a, b)) = &c.parts {
            out = out.union(&CordSet::join(a, b));
        }
    }
    Ok(out)
}
