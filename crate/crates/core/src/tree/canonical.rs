//! Canonical Newick strings, rooted next to the smallest leaf.

use super::newick::format_rational;
use super::{EdgeId, EdgeWeighting, VertexId, XTree};

pub(super) fn canonical_newick(tree: &XTree, weights: Option<&EdgeWeighting>) -> String {
    let first = tree.leaf_vertex[0];
    let root = tree.neighbors(first)[0].0;
    let mut parts: Vec<(String, String)> = tree
        .neighbors(root)
        .iter()
        .map(|&(child, e)| subtree(tree, child, root, e, weights))
        .collect();
    parts.sort();
    let body: Vec<String> = parts.into_iter().map(|(_, text)| text).collect();
    format!("({});", body.join(","))
}

/// Returns `(sort key, text)`; the key ignores weights so that weighted and
/// unweighted output list children in the same order.
fn subtree(
    tree: &XTree,
    v: VertexId,
    parent: VertexId,
    via: EdgeId,
    weights: Option<&EdgeWeighting>,
) -> (String, String) {
    let suffix = match weights.and_then(|w| w.get(via)) {
        Some(w) => format!(":{}", format_rational(w)),
        None => String::new(),
    };
    if let Some(label) = tree.leaf_label(v) {
        return (label.to_string(), format!("{label}{suffix}"));
    }
    let mut parts: Vec<(String, String)> = tree
        .neighbors(v)
        .iter()
        .filter(|(w, _)| *w != parent)
        .map(|&(w, e)| subtree(tree, w, v, e, weights))
        .collect();
    parts.sort();
    let key = format!(
        "({})",
        parts
            .iter()
            .map(|p| p.0.as_str())
            .collect::<Vec<_>>()
            .join(",")
    );
    let text = format!(
        "({}){suffix}",
        parts
            .iter()
            .map(|p| p.1.as_str())
            .collect::<Vec<_>>()
            .join(",")
    );
    (key, text)
}
