//! Unrestricted binary codes: the Delsarte bound, then the split
//! constraints with size descent.

use cwbounds::constraints::Family;
use cwbounds::engine::{Engine, EngineConfig};
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let plain = Engine::new(TBoundTable::seed(), EngineConfig::with_families([Family::Delsarte]));
    let split = Engine::new(TBoundTable::seed(), EngineConfig::with_families([Family::Delsarte, Family::Columns]));
    for (n, d) in [(9, 4), (10, 3), (12, 4), (13, 5), (16, 6), (17, 4)] {
        let a = plain.binary_bound(n, d)?;
        let b = split.binary_bound(n, d)?;
        println!("{}: delsarte {} ({}), with split rows {} ({})", a.query, a.bound, a.method, b.bound, b.method);
    }
    Ok(())
}
