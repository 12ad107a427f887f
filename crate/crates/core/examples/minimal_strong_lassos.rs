//! Two minimal strong lassos of different sizes on one 6-leaf tree, showing
//! that strong lassos do not form the bases of a matroid.

use lasso_matroid::lasso::{TopologicalDecider, TopologyOptions};
use lasso_matroid::tree::{parse_newick, CordSet};

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("(a,b,c,d,(e,f));")?;
    let first = CordSet::parse_compact("ab,ac,ad,bc,bd,cd,ef,ae,be,ce,de,df")?;
    let second = CordSet::parse_compact("ab,ac,ad,bc,bd,cd,ef,ae,be,cf,df")?;
    let decider = TopologicalDecider::new(
        &tree,
        TopologyOptions {
            parallel: true,
            ..TopologyOptions::default()
        },
    )?;
    for set in [&first, &second] {
        println!(
            "{set} ({} cords): minimal strong lasso = {}",
            set.len(),
            decider.is_minimal_strong_lasso(set)?
        );
    }
    Ok(())
}
