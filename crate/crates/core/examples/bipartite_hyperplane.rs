//! A bipartite cord set of corank one that is still a topological lasso.

use lasso_matroid::lasso::{bipartite_analysis, topological_rank_theorems, TopologyOptions};
use lasso_matroid::tree::{parse_newick, CordSet};

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("((a,b),c,(d,(e,f)));")?;
    let set = CordSet::join(&["a", "d", "f"], &["b", "c", "e"]);
    let report = bipartite_analysis(&tree, &set)?;
    println!("{set}: rank {} of {}", report.rank, report.full_rank);
    if let Some(h) = &report.hyperplane {
        println!("parts {:?} | {:?}", h.parts.0, h.parts.1);
        println!(
            "kernel weighting {}",
            tree.to_newick_weighted(&h.split_weighting)
        );
        println!(
            "closed: {}, hyperplane: {}",
            h.closure_is_join, h.is_hyperplane
        );
        println!("cords completing a lasso: {}", h.lasso_extensions);
    }
    let theorems = topological_rank_theorems(&tree, &set, &TopologyOptions::default())?;
    println!("{:#?}", theorems.low_rank);
    println!(
        "proper-cherry conditions: {:?}",
        theorems.proper_cherries.flags()
    );
    Ok(())
}
