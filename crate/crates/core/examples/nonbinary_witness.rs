//! Three disjoint cherries make the matroid non-binary: two circuits whose
//! symmetric difference is independent.

use lasso_matroid::reconstruct::{is_binary_matroid, nonbinary_witness};
use lasso_matroid::tree::parse_newick;

fn main() -> lasso_matroid::Result<()> {
    for text in [
        "((a,b),(c,d),(e,f));",
        "(((a,b),c),d,(e,f));",
        "(a,b,c,d);",
        "(a,b,c,d,e);",
    ] {
        let (tree, _) = parse_newick(text)?;
        let check = is_binary_matroid(&tree, 6, true)?;
        print!(
            "{tree}: binary {} ({} circuits)",
            check.binary, check.circuit_count
        );
        if let Some(w) = nonbinary_witness(&tree) {
            print!(
                ", witness {} + {} = {} confirmed {}",
                w.hexagon,
                w.square,
                w.triangles,
                w.confirmed()
            );
        }
        println!();
    }
    Ok(())
}
