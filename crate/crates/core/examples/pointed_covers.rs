//! Pointed covers: cheap bases that are strong lassos for binary trees.

use lasso_matroid::lasso::{pointed_covers, TopologicalDecider, TopologyOptions};
use lasso_matroid::matroid::TreeMatroid;
use lasso_matroid::tree::parse_newick;

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("(((a,b),c),d,e);")?;
    let m = TreeMatroid::new(&tree);
    let decider = TopologicalDecider::new(&tree, TopologyOptions::default())?;
    for cover in pointed_covers(&tree, "e")? {
        println!(
            "{cover}: basis {}, strong lasso {}",
            m.verdict(&cover)?.basis,
            decider.is_strong_lasso(&cover)?
        );
    }
    Ok(())
}
