//! Bases, circuits and co-loops of the quartet tree and the 4-leaf star.

use lasso_matroid::matroid::TreeMatroid;
use lasso_matroid::tree::parse_newick;

fn main() -> lasso_matroid::Result<()> {
    for text in ["((a,b),(c,d));", "(a,b,c,d);"] {
        let (tree, _) = parse_newick(text)?;
        let m = TreeMatroid::new(&tree);
        let bases = m.bases(7)?;
        println!("{tree}: {} bases", bases.len());
        for b in &bases {
            println!("  {b}");
        }
        let circuits = m.circuits(usize::MAX);
        println!("  {} circuits, smallest {}", circuits.len(), circuits[0]);
        println!("  co-loops {}", m.coloops());
    }
    Ok(())
}
