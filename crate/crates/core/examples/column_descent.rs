//! Column constraints for A(27, 12, 12): the max-form value at M = 140 and
//! the infeasibility descent starting from the known bound.

use std::time::Instant;

use cwbounds::constraints::{column_constraints, CodeParams, ColumnSides, Family};
use cwbounds::engine::{max_form_optimum, DescentMode, Engine, EngineConfig};
use cwbounds::rational::floor_plus_one;
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let p = CodeParams::new(27, 12, 12)?;
    for c in column_constraints(&p, 140, &[1, 2, 3], ColumnSides::Minus)? {
        println!("{}: {} (rhs {})", c.provenance, c.display_with(2), c.rhs);
    }

    let start = Instant::now();
    let mut config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Columns]);
    config.column_ks = Some(vec![1, 2, 3]);
    config.column_sides = ColumnSides::Minus;
    config.descent_mode = DescentMode::MaxForm;
    let engine = Engine::new(TBoundTable::seed(), config);
    let (opt, _) = max_form_optimum(&engine, &p, 140)?;
    let opt = opt.expect("max-form LP is feasible at M = 140");
    println!("max-form optimum at M = 140: {opt}, bound {}", floor_plus_one(&opt).unwrap());

    let mut config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Columns]);
    config.column_ks = Some(vec![1, 2, 3]);
    config.known_bound = Some(140);
    let engine = Engine::new(TBoundTable::seed(), config);
    let result = engine.bound(27, 12, 12)?;
    println!("descent: {} <= {} ({})", result.query, result.bound, result.method);
    for node in result.derivation.lp_nodes.iter().skip(1) {
        println!("  size {:?}: {:?}", node.size.unwrap(), node.solution.status);
    }
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
