//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use cwbounds::constraints::{
    column_constraints, d_equal_constraints, delsarte_constraints, pair_and_set_constraints, size_equality,
    t_cap_constraints, CodeParams, ColumnSides, Family, LinearConstraint, PeerBoundSet,
};
use cwbounds::engine::{Engine, EngineConfig};
use cwbounds::tbound::TBoundTable;

/// Published improved rows for n <= 28: `(n, d, w, improved, previous)`.
pub const IMPROVED_ROWS: [(u32, u32, u32, u64, u64); 23] = [
    (18, 6, 8, 427, 428),
    (18, 6, 9, 424, 425),
    (20, 6, 10, 1420, 1421),
    (27, 6, 11, 66078, 66079),
    (27, 6, 12, 84573, 84574),
    (27, 6, 13, 91079, 91080),
    (28, 6, 11, 104230, 104231),
    (28, 6, 13, 164219, 164220),
    (28, 6, 14, 169739, 169740),
    (27, 8, 13, 11897, 11981),
    (24, 10, 10, 170, 171),
    (24, 10, 11, 222, 223),
    (24, 10, 12, 246, 247),
    (26, 10, 9, 213, 214),
    (27, 10, 9, 298, 299),
    (28, 10, 14, 2628, 2629),
    (26, 12, 10, 47, 48),
    (27, 12, 12, 139, 140),
    (27, 12, 13, 155, 156),
    (28, 12, 11, 148, 149),
    (28, 12, 12, 198, 199),
    (28, 12, 13, 244, 245),
    (28, 12, 14, 264, 265),
];

/// Families used for the (27,8,13) instance.
pub fn pair_families_engine() -> Engine {
    let config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Pairs, Family::DPairs]);
    Engine::new(TBoundTable::seed(), config)
}

/// Families and column sizes used for the (27,12,12) instance.
pub fn column_config() -> EngineConfig {
    let mut config = EngineConfig::with_families([Family::Delsarte, Family::TCap, Family::Columns]);
    config.column_ks = Some(vec![1, 2, 3]);
    config
}

/// Every canonical `(n, d, w)` with `n <= max_n`.
pub fn canonical_params(max_n: u32) -> Vec<CodeParams> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in (4..=n).step_by(2) {
            for w in 1..=n / 2 {
                if let Ok(p) = CodeParams::new(n, d, w) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Every constant-weight row the generators emit for a code of size `m`.
pub fn all_rows(p: &CodeParams, m: u64) -> Vec<LinearConstraint> {
    let (peers, _) = PeerBoundSet::from_table(p, &TBoundTable::seed());
    let mut rows = delsarte_constraints(p);
    rows.extend(t_cap_constraints(p, &peers).unwrap());
    rows.extend(pair_and_set_constraints(p, &peers).unwrap());
    rows.extend(d_equal_constraints(p, &peers).unwrap());
    if m >= 2 {
        let ks: Vec<u32> = (1..=p.n.min(8)).collect();
        rows.extend(column_constraints(p, m, &ks, ColumnSides::Both).unwrap());
    }
    rows.push(size_equality(p, m));
    rows
}
