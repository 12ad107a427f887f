//! Topological lassos: cord sets whose distances pin down the tree shape.
//! A negative answer comes with a competing tree and weightings.

use lasso_matroid::lasso::{is_t_cover, split_check, TopologicalDecider, TopologyOptions};
use lasso_matroid::tree::{parse_newick, CordSet};

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("((a,b),(c,d));")?;
    let decider = TopologicalDecider::new(&tree, TopologyOptions::default())?;
    for (a, b) in [(["a", "c"], ["b", "d"]), (["a", "b"], ["c", "d"])] {
        let join = CordSet::join(&a, &b);
        println!(
            "{join}: topological {}, t-cover {}, cherries split {}",
            decider.is_lasso(&join)?,
            is_t_cover(&tree, &join)?,
            split_check(&tree, &a, &b)?
        );
    }
    let set = CordSet::parse_compact("ab,ac,ad")?;
    if let Some(c) = decider.competitor(&set)? {
        println!(
            "{set} also fits {} (weights {}) with {} weighted as {}",
            c.tree,
            c.tree.to_newick_weighted(&c.weights),
            tree,
            tree.to_newick_weighted(&c.target_weights)
        );
    }
    Ok(())
}
