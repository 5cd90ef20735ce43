//! Compare engine bounds with exhaustive maxima for small lengths and with
//! randomized greedy codes for mid-size lengths.

use cwbounds::constraints::Family;
use cwbounds::engine::{Engine, EngineConfig};
use cwbounds::oracle::{exhaustive_max, greedy_lower_bound, CodeKind};
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let engine = Engine::new(TBoundTable::seed(), EngineConfig::with_families(Family::ALL));
    println!("{:>12} {:>6} {:>6}", "query", "lower", "upper");
    for (n, d, w) in [(8, 4, 3), (8, 4, 4), (9, 4, 4), (10, 4, 5), (10, 6, 5)] {
        let code = exhaustive_max(n, d, CodeKind::ConstantWeight { w })?;
        let bound = engine.bound(n, d, w)?;
        println!("{:>12} {:>6} {:>6}  exhaustive", bound.query.to_string(), code.len(), bound.bound);
    }
    for (n, d, w) in [(14, 6, 6), (16, 6, 8), (16, 8, 7)] {
        let mut best = 0;
        for seed in 0..8 {
            best = best.max(greedy_lower_bound(n, d, CodeKind::ConstantWeight { w }, seed)?.len());
        }
        let bound = engine.bound(n, d, w)?;
        println!("{:>12} {:>6} {:>6}  greedy", bound.query.to_string(), best, bound.bound);
    }
    Ok(())
}
