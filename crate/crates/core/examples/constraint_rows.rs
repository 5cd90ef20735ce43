//! Print every constraint family for one parameter set, scaled to `A_{2i}`
//! labels, together with the peer bounds the T-dependent rows use.

use cwbounds::constraints::{
    column_constraints, d_equal_constraints, delsarte_constraints, pair_and_set_constraints, t_cap_constraints,
    CodeParams, ColumnSides, PeerBoundSet,
};
use cwbounds::tbound::TBoundTable;

fn main() -> cwbounds::Result<()> {
    let p = CodeParams::new(18, 6, 8)?;
    let (peers, used) = PeerBoundSet::from_table(&p, &TBoundTable::seed());
    println!("{p}: {} T lookups", used.len());
    for t in &used {
        println!("  {} <= {}  [{}]", t.key, t.bound, t.source);
    }
    let mut rows = delsarte_constraints(&p);
    rows.extend(t_cap_constraints(&p, &peers)?);
    rows.extend(pair_and_set_constraints(&p, &peers)?);
    rows.extend(d_equal_constraints(&p, &peers)?);
    rows.extend(column_constraints(&p, 428, &[1, 2], ColumnSides::Both)?);
    for r in &rows {
        println!("{}", r.display_with(2));
    }
    Ok(())
}
