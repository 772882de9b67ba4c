//! Acceptance criteria. Each prints one `PASS`/`FAIL` line; the test fails if
//! any criterion fails.
//!
//! Pinned tolerances: exact integer and rational arithmetic for Wiener-type
//! values and closed forms; floating indices compare equal within 1e-9
//! relative to max(|a|, |b|, 1).

use edv_core::verify::{equivalent_nonisomorphic, reference_pair, verify_claim, Status, VerificationReport, VerifyOptions};
use edv_core::{compare_trees, edge_division_vector, OrderRelation};

const TOLERANCE: f64 = 1e-9;

fn opts(n_min: usize, n_max: usize) -> VerifyOptions {
    VerifyOptions { n_min, n_max: Some(n_max), tolerance: TOLERANCE, ..VerifyOptions::default() }
}

/// Runs claims and returns (all passed, checks, failure summary).
fn claims(list: &[(&str, usize, usize)]) -> (bool, usize, Vec<String>) {
    let mut ok = true;
    let mut checked = 0;
    let mut bad = Vec::new();
    for &(id, lo, hi) in list {
        let r: VerificationReport = verify_claim(id, &opts(lo, hi)).unwrap_or_else(|e| panic!("{id}: {e}"));
        checked += r.checked;
        if r.status != Status::Pass {
            ok = false;
            bad.push(format!("{id}: {} ({} failures)", r.status, r.failures.len()));
        }
    }
    (ok, checked, bad)
}

fn line(results: &mut Vec<bool>, number: usize, name: &str, ok: bool, detail: String) {
    println!("criterion {number} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    results.push(ok);
}

fn from_claims(results: &mut Vec<bool>, number: usize, name: &str, list: &[(&str, usize, usize)]) {
    let (ok, checked, bad) = claims(list);
    let detail = if bad.is_empty() { format!("{checked} checks") } else { bad.join("; ") };
    line(results, number, name, ok, detail);
}

#[test]
fn acceptance() {
    let mut results = Vec::new();

    from_claims(&mut results, 1, "table4-three-ways", &[("Table-4", 5, 11)]);
    from_claims(
        &mut results,
        2,
        "closed-forms-n5-40",
        &[("Prop-8.1", 5, 40), ("Prop-8.2", 5, 40), ("Prop-8.3", 5, 40)],
    );
    from_claims(
        &mut results,
        3,
        "extremal-classes-n12",
        &[
            ("Thm-4.1", 4, 12),
            ("Thm-4.2", 4, 12),
            ("Thm-5.1", 4, 12),
            ("Thm-6.1", 4, 12),
            ("Thm-6.2", 4, 12),
            ("Thm-7.1", 4, 12),
        ],
    );
    from_claims(
        &mut results,
        4,
        "chains-n14",
        &[("Cor-4.1", 4, 14), ("Cor-5.1", 4, 14), ("Cor-6.1", 4, 14), ("Cor-7.1", 4, 14), ("Cor-5.2", 4, 12)],
    );
    from_claims(
        &mut results,
        5,
        "index-identities",
        &[
            ("Id-Wiener", 1, 12),
            ("Id-DegreeDistance", 1, 12),
            ("Id-Gutman", 1, 12),
            ("Id-ModifiedWiener", 1, 12),
            ("Id-Steiner", 2, 10),
        ],
    );
    from_claims(&mut results, 6, "index-transfer-n9", &[("Thm-8.1", 4, 9)]);

    let (a, b) = reference_pair();
    let pairs = equivalent_nonisomorphic(11, 20).expect("n=11 enumerates");
    let (ca, cb) = (a.canonical_code(), b.canonical_code());
    let listed = pairs.iter().any(|p| (p.left == ca && p.right == cb) || (p.left == cb && p.right == ca));
    let ok = listed
        && edge_division_vector(&a).to_string() == "(4,3,2,1,0)"
        && compare_trees(&a, &b).ok() == Some(OrderRelation::Equivalent)
        && !a.is_isomorphic(&b);
    line(&mut results, 7, "equivalent-pair-n11", ok, format!("{} pairs at n=11, reference listed={listed}", pairs.len()));

    from_claims(&mut results, 8, "hyper-wiener-divergence", &[("Div-HW", 4, 8)]);
    from_claims(&mut results, 9, "enumeration-counts", &[("Enum-count", 4, 10)]);

    assert_eq!(results.len(), 9);
    assert!(results.iter().all(|&ok| ok), "acceptance criteria failed");
}
