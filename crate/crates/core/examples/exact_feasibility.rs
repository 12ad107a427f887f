//! Exact feasibility of linear systems with strict inequalities.

use lasso_matroid::exact::{find_point, int, LinearSystem, Relation};

fn main() -> lasso_matroid::Result<()> {
    // x > 0, y > 0, x + y = 1, x - 2y >= 0
    let mut sys = LinearSystem::new(2);
    sys.push(vec![int(1), int(0)], Relation::Gt, int(0))?;
    sys.push(vec![int(0), int(1)], Relation::Gt, int(0))?;
    sys.push(vec![int(1), int(1)], Relation::Eq, int(1))?;
    sys.push(vec![int(1), int(-2)], Relation::Ge, int(0))?;
    let point = find_point(&sys, 24)?.expect("feasible");
    println!("point: x = {}, y = {}", point[0], point[1]);

    // adding y >= 1/2 leaves nothing
    sys.push(vec![int(0), int(2)], Relation::Ge, int(1))?;
    println!("after y >= 1/2: {:?}", find_point(&sys, 24)?);
    Ok(())
}
