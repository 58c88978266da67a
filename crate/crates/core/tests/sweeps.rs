//! GW and CB divisors on M̄₀,₄ agree on larger boxes. The full list runs in
//! about a minute with optimizations and is ignored by default.

use schubert_core::verify::{sweep_conjecture, Direct};
use schubert_core::Rect;

fn assert_clean(r: usize, l: usize) {
    let report = sweep_conjecture(&Direct, Rect::new(r, l), 4, true).unwrap();
    assert!(report.tuples_checked > 0);
    assert!(report.verified(), "({r},{l}): {:?}", report.mismatches);
}

#[test]
fn medium_boxes() {
    for (r, l) in [(1, 3), (3, 1), (2, 4), (3, 3), (4, 2)] {
        assert_clean(r, l);
    }
}

#[test]
#[ignore = "slow; run with --ignored"]
fn full_list() {
    for l in 2..=11 {
        assert_clean(2, l);
    }
    assert_clean(3, 3);
    assert_clean(3, 4);
}

#[test]
fn sweeps_are_deterministic() {
    let a = sweep_conjecture(&Direct, Rect::new(2, 3), 4, true).unwrap();
    let b = sweep_conjecture(&Direct, Rect::new(2, 3), 4, false).unwrap();
    assert!(b.tuples_checked > a.tuples_checked);
    let c = sweep_conjecture(&Direct, Rect::new(2, 3), 4, true).unwrap();
    assert_eq!((a.tuples_checked, &a.mismatches), (c.tuples_checked, &c.mismatches));
}
