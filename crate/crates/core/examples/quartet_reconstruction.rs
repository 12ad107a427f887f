//! Recover a tree from nothing but the rank function of its matroid.

use lasso_matroid::matroid::TreeMatroid;
use lasso_matroid::reconstruct::{matroids_equal, quartet_set_from_oracle, tree_from_oracle};
use lasso_matroid::tree::parse_newick;

fn main() -> lasso_matroid::Result<()> {
    let (hidden, _) = parse_newick("((a,(b,c)),d,(e,f));")?;
    let m = TreeMatroid::new(&hidden);
    let rank = |s: &_| m.rank_of(s).expect("cords of the tree");
    let quartets = quartet_set_from_oracle(rank, hidden.labels())?;
    let shown: Vec<String> = quartets.resolved.iter().map(ToString::to_string).collect();
    println!("{} quartets: {}", quartets.len(), shown.join(" "));
    let rebuilt = tree_from_oracle(rank, hidden.labels(), 8)?;
    println!(
        "rebuilt {rebuilt}, same matroid: {}",
        matroids_equal(&rebuilt, &hidden)?
    );
    Ok(())
}
