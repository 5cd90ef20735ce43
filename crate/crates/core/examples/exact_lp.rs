//! Solve a small LP exactly and check its dual certificate, then do the
//! same for an infeasible system and its Farkas ray.

use std::collections::BTreeMap;

use cwbounds::constraints::{LinearConstraint, Provenance, Sense};
use cwbounds::lp::{solve, verify_certificate, LpProblem, Variable};
use cwbounds::rational::{frac, int};

fn main() -> cwbounds::Result<()> {
    let vars = vec![Variable { key: 0, label: "x".into() }, Variable { key: 1, label: "y".into() }];
    let row = |a: i64, b: i64, s: Sense, rhs| LinearConstraint::new(s, [(0, int(a)), (1, int(b))], rhs, Provenance::TCap { i: 0 });
    let rows = vec![row(3, 2, Sense::Le, int(12)), row(1, 3, Sense::Le, frac(21, 2)), row(1, -1, Sense::Ge, int(-2))];
    let objective = BTreeMap::from([(0, int(2)), (1, int(3))]);
    let p = LpProblem::new(vars.clone(), objective, rows.clone())?;
    let s = solve(&p);
    println!("status {}, optimum {:?}, pivots {}", s.status, s.optimum.as_ref().map(|o| o.to_string()), s.pivots);
    println!("primal {:?}", s.primal.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("dual   {:?}", s.dual.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("certificate: {:?}", verify_certificate(&p, &s));

    let mut infeasible = rows;
    infeasible.push(row(1, 1, Sense::Ge, int(10)));
    let p = LpProblem::maximize_sum(vars, infeasible)?;
    let s = solve(&p);
    println!("status {}, ray {:?}", s.status, s.dual.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("certificate: {:?}", verify_certificate(&p, &s));
    Ok(())
}
