//! Shared fixtures and brute-force oracles, written without the library's
//! linear algebra so they can check it.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lasso_matroid::tree::{enumerate_xtrees, parse_newick, Cord, CordSet, XTree};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn tree(newick: &str) -> XTree {
    parse_newick(newick).unwrap().0
}

pub fn cords(text: &str) -> CordSet {
    CordSet::parse_compact(text).unwrap()
}

pub fn labels(n: usize) -> Vec<String> {
    "abcdefghij"
        .chars()
        .take(n)
        .map(|c| c.to_string())
        .collect()
}

pub fn trees(n: usize) -> Vec<XTree> {
    enumerate_xtrees(&labels(n), 8).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random subset of all cords.
pub fn random_cords<R: Rng>(rng: &mut R, labels: &[String]) -> CordSet {
    CordSet::complete(labels)
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .cloned()
        .collect()
}

/// A random subset of all cords of a random size.
pub fn random_cords_any_size<R: Rng>(rng: &mut R, labels: &[String]) -> CordSet {
    let mut all: Vec<Cord> = CordSet::complete(labels).iter().cloned().collect();
    all.shuffle(rng);
    let k = rng.gen_range(0..=all.len());
    all.into_iter().take(k).collect()
}

/// Path-incidence rows, built from the bipartition each edge induces: edge
/// `e` lies on the path between `x` and `y` iff it separates them.
pub struct PathMatrix {
    pub cords: Vec<Cord>,
    pub rows: Vec<Vec<i128>>,
}

impl PathMatrix {
    pub fn new(t: &XTree) -> Self {
        let sides: Vec<BTreeSet<String>> = t
            .edge_ids()
            .map(|e| t.split_of_edge(e).unwrap().0)
            .collect();
        let cords: Vec<Cord> = t.all_cords().iter().cloned().collect();
        let rows = cords
            .iter()
            .map(|c| {
                sides
                    .iter()
                    .map(|s| (s.contains(c.a()) != s.contains(c.b())) as i128)
                    .collect()
            })
            .collect();
        PathMatrix { cords, rows }
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rank(&self, set: &CordSet) -> usize {
        let rows: Vec<Vec<i128>> = self
            .cords
            .iter()
            .zip(&self.rows)
            .filter(|(c, _)| set.contains(c))
            .map(|(_, r)| r.clone())
            .collect();
        bareiss_rank(rows)
    }

    pub fn full_rank(&self) -> usize {
        bareiss_rank(self.rows.clone())
    }

    pub fn subset(&self, mask: u64) -> CordSet {
        self.cords
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c.clone())
            .collect()
    }
}

/// Fraction-free elimination; every intermediate entry is a minor, so the
/// divisions are exact.
pub fn bareiss_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&p| m[p][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Colour classes of the cord graph on `labels`, or `None` if it has an odd
/// cycle. Computed by brute force over all 2-colourings.
pub fn brute_bipartite(labels: &[String], set: &CordSet) -> bool {
    let n = labels.len();
    let idx = |l: &str| labels.iter().position(|x| x == l).unwrap();
    (0u32..1 << n).any(|colour| {
        set.iter()
            .all(|c| (colour >> idx(c.a()) & 1) != (colour >> idx(c.b()) & 1))
    })
}

/// Number of connected components of the cord graph, isolated leaves included.
pub fn brute_components(labels: &[String], set: &CordSet) -> Vec<Vec<String>> {
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let idx = |l: &str| labels.iter().position(|x| x == l).unwrap();
    for c in set {
        let (a, b) = (find(&mut parent, idx(c.a())), find(&mut parent, idx(c.b())));
        parent[a] = b;
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<String>> = Default::default();
    for (i, l) in labels.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(l.clone());
    }
    groups.into_values().collect()
}

/// The cords of `set` with both ends in `part`.
pub fn induced(set: &CordSet, part: &[String]) -> CordSet {
    set.iter()
        .filter(|c| part.iter().any(|p| p == c.a()) && part.iter().any(|p| p == c.b()))
        .cloned()
        .collect()
}

pub fn cord(text: &str) -> Cord {
    Cord::parse_compact(text).unwrap()
}
