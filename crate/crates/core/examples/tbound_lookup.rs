//! Answer doubly-constant-weight queries from identities, the shipped table
//! and the fallbacks, then override one entry from a user table.

use cwbounds::tbound::{DoublyParams, TBoundTable};

fn main() -> cwbounds::Result<()> {
    let mut table = TBoundTable::seed();
    let queries = [(2, 13, 3, 14, 8), (11, 13, 3, 14, 8), (2, 12, 3, 12, 8), (1, 4, 1, 5, 6), (0, 5, 3, 9, 4), (3, 8, 3, 8, 6)];
    for &(w1, n1, w2, n2, d) in &queries {
        let t = table.lookup(DoublyParams::new(w1, n1, w2, n2, d)?);
        println!("T({w1},{n1},{w2},{n2},{d}) -> {} <= {}  [{}]", t.key, t.bound, t.source);
    }
    table.merge(TBoundTable::parse("3,8,3,8,6,12,local search\n")?);
    let t = table.lookup(DoublyParams::new(3, 8, 3, 8, 6)?);
    println!("after merge: {} <= {}  [{}]", t.key, t.bound, t.source);
    Ok(())
}
