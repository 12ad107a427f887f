//! Rank, lasso verdict and closure of cord sets on the quartet tree ab|cd.

use lasso_matroid::matroid::TreeMatroid;
use lasso_matroid::tree::{parse_newick, CordSet};

fn main() -> lasso_matroid::Result<()> {
    let (tree, _) = parse_newick("((a,b),(c,d));")?;
    let m = TreeMatroid::new(&tree);
    println!("tree {tree} has {} edges", m.full_rank());
    for text in ["ab,cd", "ab,cd,ac,ad,bc", "ac,ad,bc,bd"] {
        let set = CordSet::parse_compact(text)?;
        let v = m.verdict(&set)?;
        println!(
            "{set}: rank {}, independent {}, lasso {}, basis {}, closure {}",
            v.rank,
            v.independent,
            v.lasso,
            v.basis,
            m.closure(&set)?
        );
    }
    for c in m.all_cords().iter() {
        println!("lambda({c}) = {:?}", m.lambda(c)?.entries);
    }
    Ok(())
}
