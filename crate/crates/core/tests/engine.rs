mod common;

use proptest::prelude::*;

use cwbounds::certificate::CertificateBundle;
use cwbounds::constraints::Family;
use cwbounds::engine::{normalize, DescentMode, Engine, EngineConfig, Method, Normalized};
use cwbounds::oracle::{exhaustive_max, CodeKind};
use cwbounds::tbound::TBoundTable;

fn engine(families: impl IntoIterator<Item = Family>) -> Engine {
    Engine::new(TBoundTable::seed(), EngineConfig::with_families(families))
}

#[test]
fn sandwich_up_to_length_ten() {
    let full = engine(Family::ALL);
    let mut tight = 0;
    let mut total = 0;
    for n in 1..=10u32 {
        for d in 1..=n {
            for w in 0..=n {
                let truth = exhaustive_max(n, d, CodeKind::ConstantWeight { w }).unwrap().len() as u64;
                let r = full.bound(n, d, w).unwrap();
                assert!(r.bound >= truth, "A({n},{d},{w}): {} < {truth}", r.bound);
                if matches!(r.method, Method::Exact | Method::Trivial) {
                    assert_eq!(r.bound, truth, "A({n},{d},{w}) claimed exact");
                }
                assert!(r.certificates_verify());
                tight += usize::from(r.bound == truth);
                total += 1;
            }
        }
    }
    assert!(tight * 10 >= total * 9, "only {tight} of {total} tight");
}

#[test]
fn binary_sandwich_and_exact_cases() {
    let full = engine(Family::ALL);
    for n in 1..=7u32 {
        for d in 1..=n + 1 {
            let truth = exhaustive_max(n, d, CodeKind::Binary).unwrap().len() as u64;
            let r = full.binary_bound(n, d).unwrap();
            assert!(r.bound >= truth, "A({n},{d}): {} < {truth}", r.bound);
            assert!(r.certificates_verify());
        }
        assert_eq!(full.binary_bound(n, 1).unwrap().bound, 1 << n);
    }
}

#[test]
fn adding_families_never_weakens() {
    let all = Family::ALL;
    for (n, d, w) in [(14, 6, 6), (16, 6, 7), (18, 8, 8)] {
        let mut bounds = Vec::new();
        for mask in 0u32..1 << all.len() {
            let fams: Vec<Family> = (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| all[b]).collect();
            bounds.push(engine(fams).bound(n, d, w).unwrap().bound);
        }
        for small in 0..bounds.len() {
            for big in 0..bounds.len() {
                if small & big == small {
                    assert!(bounds[big] <= bounds[small], "({n},{d},{w}): mask {big:b} gives {} > mask {small:b} {}", bounds[big], bounds[small]);
                }
            }
        }
    }
}

#[test]
fn descent_modes_agree_on_published_rows() {
    for (n, d, w, _, previous) in common::IMPROVED_ROWS.iter().copied().filter(|r| r.0 <= 24) {
        let mut a = EngineConfig::with_families(Family::ALL);
        a.known_bound = Some(previous);
        let mut b = a.clone();
        b.descent_mode = DescentMode::MaxForm;
        let x = Engine::new(TBoundTable::seed(), a).bound(n, d, w).unwrap().bound;
        let y = Engine::new(TBoundTable::seed(), b).bound(n, d, w).unwrap().bound;
        assert!(y >= x, "({n},{d},{w}): max form {y} below infeasibility form {x}");
        assert!(x <= previous && y <= previous);
    }
}

#[test]
fn results_are_deterministic() {
    let a = engine(Family::ALL).bound(20, 6, 10).unwrap();
    let b = engine(Family::ALL).bound(20, 6, 10).unwrap();
    assert_eq!(a.bound, b.bound);
    let json = |r| CertificateBundle::from_result(r).unwrap().to_json().unwrap();
    assert_eq!(json(&a), json(&b));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalization_is_a_fixed_point(n in 1u32..40, d in 1u32..40, w in 0u32..40) {
        prop_assume!(w <= n);
        if let Normalized::Canonical { params, .. } = normalize(n, d, w).unwrap() {
            let again = normalize(params.n, params.d, params.w).unwrap();
            prop_assert!(again.steps().is_empty());
            let same = matches!(again, Normalized::Canonical { params: q, .. } if q == params);
            prop_assert!(same);
        }
    }

    #[test]
    fn complement_and_odd_distance_are_free(n in 5u32..14, d in 2u32..8, w in 0u32..14) {
        prop_assume!(w <= n);
        let e = engine([Family::Delsarte, Family::TCap]);
        let base = e.bound(n, d, w).unwrap().bound;
        prop_assert_eq!(e.bound(n, d, n - w).unwrap().bound, base);
        if d % 2 == 1 {
            prop_assert_eq!(e.bound(n, d + 1, w).unwrap().bound, base);
        }
    }
}
