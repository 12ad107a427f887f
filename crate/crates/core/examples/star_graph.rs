//! On a star tree, rank and circuits are read off the graph the cords form
//! on the leaves: odd cycles add rank, bipartite components lose one.

use lasso_matroid::stargraph::{analyze, star_is_circuit, star_rank};
use lasso_matroid::tree::CordSet;

fn main() -> lasso_matroid::Result<()> {
    let leaves = ["a", "b", "c", "d", "e", "f"];
    for text in [
        "ab,bc,ca",
        "ab,bc,cd,da",
        "ab,bc,ca,cd,de,ec",
        "ab,bc,ca,cd,de,ef,fd",
        "ab,bc,ca,bd,cd",
    ] {
        let set = CordSet::parse_compact(text)?;
        let report = analyze(&leaves, &set)?;
        println!(
            "{set}: rank {}, circuit {}, {} components ({} bipartite)",
            star_rank(&leaves, &set)?,
            star_is_circuit(&leaves, &set)?,
            report.components.len(),
            report.bipartite_count()
        );
    }
    Ok(())
}
