//! Wiener index bounds over caterpillars, `5 <= n <= 11`, `4 <= k <= n - 1`.

use serde::Serialize;

use crate::families::FamilyParams;
use crate::indices::{caterpillar_max_wiener, caterpillar_min_wiener, index_value, wiener_bruteforce, IndexSpec};

use super::{Failure, Tally};

/// Published `(n, k, min, max)` cells.
pub const PUBLISHED_TABLE4: [(usize, usize, u64, u64); 28] = [
    (5, 4, 18, 20),
    (6, 4, 28, 35),
    (6, 5, 31, 35),
    (7, 4, 40, 52),
    (7, 5, 44, 56),
    (7, 6, 50, 56),
    (8, 4, 54, 74),
    (8, 5, 59, 79),
    (8, 6, 67, 84),
    (8, 7, 75, 84),
    (9, 4, 70, 98),
    (9, 5, 76, 108),
    (9, 6, 86, 114),
    (9, 7, 96, 120),
    (9, 8, 108, 120),
    (10, 4, 88, 127),
    (10, 5, 95, 139),
    (10, 6, 107, 151),
    (10, 7, 119, 158),
    (10, 8, 134, 165),
    (10, 9, 149, 165),
    (11, 4, 108, 158),
    (11, 5, 116, 176),
    (11, 6, 130, 190),
    (11, 7, 144, 204),
    (11, 8, 162, 212),
    (11, 9, 180, 220),
    (11, 10, 200, 220),
];

/// One cell computed three ways: from the edge division vector, by summing
/// pair distances, and by closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table4Row {
    pub n: usize,
    pub k: usize,
    pub min: u64,
    pub max: u64,
    pub min_pairwise: u64,
    pub max_pairwise: u64,
    pub min_closed: i128,
    pub max_closed: i128,
}

fn edge_wiener(p: &FamilyParams) -> u64 {
    let t = p.construct().expect("valid parameters");
    let v = index_value(&t, &IndexSpec::Wiener).expect("defined");
    u64::try_from(v.as_integer().expect("exact")).expect("fits")
}

fn closed(v: num_rational::Ratio<i128>) -> i128 {
    assert!(v.is_integer(), "closed form is integral on the table range");
    v.to_integer()
}

pub fn table4_rows() -> Vec<Table4Row> {
    PUBLISHED_TABLE4
        .iter()
        .map(|&(n, k, _, _)| {
            let (lo, hi) = (FamilyParams::caterpillar_min(n, k), FamilyParams::caterpillar_max(n, k));
            Table4Row {
                n,
                k,
                min: edge_wiener(&lo),
                max: edge_wiener(&hi),
                min_pairwise: wiener_bruteforce(&lo.construct().expect("valid")),
                max_pairwise: wiener_bruteforce(&hi.construct().expect("valid")),
                min_closed: closed(caterpillar_min_wiener(n, k)),
                max_closed: closed(caterpillar_max_wiener(n, k)),
            }
        })
        .collect()
}

pub(super) fn verify() -> Tally {
    let mut tally = Tally::default();
    for (row, &(n, k, min, max)) in table4_rows().iter().zip(PUBLISHED_TABLE4.iter()) {
        for (label, published, edge, pairs, closed) in [
            ("min", min, row.min, row.min_pairwise, row.min_closed),
            ("max", max, row.max, row.max_pairwise, row.max_closed),
        ] {
            tally.check(edge == published && pairs == published && closed == published as i128, || Failure {
                tree: format!("({n},{k}) {label}"),
                vector: "-".into(),
                expected: published.to_string(),
                observed: format!("edge {edge}, pairs {pairs}, closed {closed}"),
            });
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cells_agree() {
        let t = verify();
        assert_eq!(t.checked, 56);
        assert!(t.failures.is_empty(), "{:?}", t.failures);
    }
}
