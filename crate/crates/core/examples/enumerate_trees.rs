//! Every X-tree on small leaf sets, up to equivalence.

use lasso_matroid::tree::enumerate_xtrees;

fn main() -> lasso_matroid::Result<()> {
    for n in 3..=7 {
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let trees = enumerate_xtrees(&labels, 8)?;
        let binary = trees.iter().filter(|t| t.is_binary()).count();
        println!("{n} leaves: {} trees, {binary} binary", trees.len());
    }
    for t in enumerate_xtrees(&["a", "b", "c", "d"], 8)? {
        println!("  {t}");
    }
    Ok(())
}
