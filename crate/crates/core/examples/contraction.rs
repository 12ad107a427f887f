//! Bases of a tree rebuilt from bases of the tree with an interior edge
//! contracted, by adding one cord to each.

use lasso_matroid::matroid::TreeMatroid;
use lasso_matroid::tree::{parse_newick, CordSet};

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("((a,b),(c,d));")?;
    let m = TreeMatroid::new(&tree);
    let central = tree.edge_for_split(&["a", "b"]).expect("interior edge");
    for text in ["ab,bc,ca,da", "ab,bc,ca,dc"] {
        let base = CordSet::parse_compact(text)?;
        println!(
            "{base} extends by {}",
            m.contraction_extensions(central, &base)?
        );
    }
    let rebuilt = m.contraction_bases(central, 7)?;
    println!(
        "{} bases rebuilt, equal to direct enumeration: {}",
        rebuilt.len(),
        rebuilt == m.bases(7)?
    );

    let (bigger, _) = parse_newick("((a,b),c,(d,(e,f)));")?;
    let m = TreeMatroid::new(&bigger);
    for f in bigger.interior_edges() {
        let d = m.contract_rank_decomposition(&[f].into(), &bigger.all_cords())?;
        println!(
            "contract {f}: rank {} = {} + {}",
            d.rank, d.contracted_rank, d.kernel_dim
        );
    }
    Ok(())
}
