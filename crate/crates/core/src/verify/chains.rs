//! Strictly increasing chains of named trees.

use std::ops::RangeInclusive;

use crate::division::{compare_trees, OrderRelation};
use crate::families::FamilyParams;
use crate::tree::Tree;

use super::{Failure, Tally};

/// A chain member; `same_as_previous` marks links written as equalities.
struct Link {
    params: FamilyParams,
    same_as_previous: bool,
}

fn strict(params: FamilyParams) -> Link {
    Link { params, same_as_previous: false }
}

fn equal(params: FamilyParams) -> Link {
    Link { params, same_as_previous: true }
}

/// Strict links must compare `StrictlyLess`; equality links must be
/// `Equivalent` and isomorphic.
fn check_chain(links: &[Link]) -> Tally {
    let mut tally = Tally::default();
    let trees: Vec<Tree> = links.iter().map(|l| l.params.construct().expect("chain parameters are valid")).collect();
    for i in 1..links.len() {
        let (a, b) = (&trees[i - 1], &trees[i]);
        let rel = compare_trees(a, b).expect("equal orders");
        let (prev, cur) = (&links[i - 1].params, &links[i].params);
        if links[i].same_as_previous {
            tally.check(rel == OrderRelation::Equivalent && a.is_isomorphic(b), || {
                Failure::for_tree(a, format!("{prev} = {cur}"), format!("{rel}, isomorphic={}", a.is_isomorphic(b)))
            });
        } else {
            tally.check(matches!(rel, OrderRelation::StrictlyLess { .. }), || {
                Failure::for_tree(a, format!("{prev} strictly below {cur}"), rel.to_string())
            });
        }
    }
    tally
}

/// `CP_{n;0,n-k} ≺ CP_{n;1,n-k-1} ≺ .. ≺ CP_{n;floor((n-k)/2),ceil((n-k)/2)}`.
pub(super) fn edge_shift_chain(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range {
        for k in 2..n {
            let links: Vec<Link> = (0..=(n - k) / 2)
                .map(|a| strict(FamilyParams::DoubleStarPath { n, a, b: n - k - a, k }))
                .collect();
            tally.merge(check_chain(&links));
        }
    }
    tally
}

/// `S_n = CP^1_{n,2} = CP^2_{n,3} ≺ CP^2_{n,4} ≺ .. ≺ CP^{ceil((n-1)/2)}_{n,n-1} ≺ P_n`.
pub(super) fn diameter_chain(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range.filter(|&n| n >= 5) {
        let mut links = vec![
            strict(FamilyParams::Star { n }),
            equal(FamilyParams::single_cluster(n, 2, 1)),
            equal(FamilyParams::single_cluster(n, 3, 2)),
        ];
        links.extend((4..n).map(|k| strict(FamilyParams::caterpillar_min(n, k))));
        links.push(strict(FamilyParams::Path { n }));
        tally.merge(check_chain(&links));
    }
    tally
}

/// `S_n = CP_{n;floor((n-1)/2),ceil((n-1)/2)} ≺ .. ≺ CP_{n;1,2} ≺ CP_{n;1,1} = P_n`,
/// the maxima of the pendant classes by decreasing pendant count.
pub(super) fn pendant_chain(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range.filter(|&n| n >= 4) {
        let mut links = vec![strict(FamilyParams::Star { n })];
        links.push(equal(FamilyParams::pendant_max(n, n - 1)));
        links.extend((2..n - 1).rev().map(|q| strict(FamilyParams::pendant_max(n, q))));
        links.push(equal(FamilyParams::Path { n }));
        tally.merge(check_chain(&links));
    }
    tally
}

/// `S_n = CP_{n;1,n-2} ≺ CP_{n;1,n-3} ≺ .. ≺ CP_{n;1,1} = P_n`.
pub(super) fn broom_chain(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range.filter(|&n| n >= 4) {
        let broom = |j: usize| FamilyParams::DoubleStarPath { n, a: 1, b: j, k: n - 1 - j };
        let mut links = vec![strict(FamilyParams::Star { n }), equal(broom(n - 2))];
        links.extend((1..n - 2).rev().map(|j| strict(broom(j))));
        links.push(equal(FamilyParams::Path { n }));
        tally.merge(check_chain(&links));
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_hold_at_small_orders() {
        for t in [edge_shift_chain(4..=10), diameter_chain(5..=10), pendant_chain(4..=10), broom_chain(4..=10)] {
            assert!(t.failures.is_empty(), "{:?}", t.failures);
            assert!(t.checked > 0);
        }
    }

    #[test]
    fn a_reversed_chain_fails() {
        let links = [strict(FamilyParams::Path { n: 6 }), strict(FamilyParams::Star { n: 6 })];
        assert_eq!(check_chain(&links).failures.len(), 1);
    }
}
