//! Bound A(27, 8, 13) with T-caps, pair and distance-d constraints.

use std::time::Instant;

use cwbounds::constraints::Family;
use cwbounds::engine::{Engine, EngineConfig};
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Pairs, Family::DPairs]);
    let engine = Engine::new(TBoundTable::seed(), config);
    let start = Instant::now();
    let result = engine.bound(27, 8, 13)?;
    println!("{} <= {} ({})", result.query, result.bound, result.method);
    for (method, value) in &result.derivation.candidates {
        println!("  candidate {method}: {value}");
    }
    if let Some(node) = result.derivation.lp_nodes.first() {
        if let Some(opt) = &node.solution.optimum {
            println!("  LP optimum {opt}");
        }
        for c in &node.problem.constraints {
            if !c.provenance.to_string().starts_with("delsarte") {
                println!("  {}", c.display_with(2));
            }
        }
    }
    println!("  elapsed {:.2?}", start.elapsed());
    Ok(())
}
