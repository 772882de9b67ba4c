//! Sweeps of a tree class against its constructed extremal member.

use crate::division::{compare, edge_division_vector, OrderRelation};
use crate::enumeration::ClassSpec;
use crate::families::FamilyParams;
use crate::tree::Tree;

use super::{Record, Tally};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// Every member lies below the extremal tree.
    Below,
    /// Every member lies above the extremal tree.
    Above,
}

/// Checks `T ⪯ H` (or `T ⪰ H`) for every member `T` of `class`, and, when
/// `unique`, that `T ≈ H` only for `T` isomorphic to `H`.
fn against(records: &[Record], class: ClassSpec, extremal: &FamilyParams, side: Side, unique: bool) -> Tally {
    let mut tally = Tally::default();
    let h: Tree = extremal.construct().expect("extremal parameters are valid");
    let h_vec = edge_division_vector(&h);
    let h_code = h.canonical_code();
    let relation = if side == Side::Below { "below" } else { "above" };
    tally.check(class.contains(&h).unwrap_or(false), || {
        super::Failure::for_tree(&h, format!("{extremal} in {class}"), "not a member")
    });
    for r in records.iter().filter(|r| class.contains(&r.tree).unwrap_or(false)) {
        let rel = compare(&r.vector, &h_vec).expect("equal orders");
        let ok = match side {
            Side::Below => rel.is_le(),
            Side::Above => rel.is_ge(),
        };
        tally.check(ok, || r.failure(format!("{relation} {extremal} r={h_vec} in {class}"), rel.to_string()));
        if unique && rel == OrderRelation::Equivalent {
            tally.check(r.code == h_code, || {
                r.failure(format!("equivalent only to {extremal} itself in {class}"), "equivalent, not isomorphic")
            });
        }
    }
    tally
}

pub(super) fn caterpillar_max(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for k in 2..n {
        tally.merge(against(records, ClassSpec::Caterpillars { n, k }, &FamilyParams::caterpillar_max(n, k), Side::Below, true));
    }
    tally
}

pub(super) fn caterpillar_min(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for k in 2..n {
        tally.merge(against(records, ClassSpec::Caterpillars { n, k }, &FamilyParams::caterpillar_min(n, k), Side::Above, true));
    }
    tally
}

pub(super) fn diameter_min(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for d in 2..n {
        tally.merge(against(records, ClassSpec::Diameter { n, d }, &FamilyParams::caterpillar_min(n, d + 1), Side::Above, true));
    }
    tally
}

pub(super) fn pendant_max(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for q in 3..n.saturating_sub(1) {
        tally.merge(against(records, ClassSpec::Pendants { n, q }, &FamilyParams::pendant_max(n, q), Side::Below, true));
    }
    tally
}

pub(super) fn pendant_min(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for q in 3..n.saturating_sub(1) {
        let sp = FamilyParams::BalancedStarlike { n, q };
        tally.merge(against(records, ClassSpec::Pendants { n, q }, &sp, Side::Above, true));
    }
    tally
}

pub(super) fn max_degree_max(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for max_degree in 3..n.saturating_sub(1) {
        let broom = FamilyParams::Broom { n, max_degree };
        tally.merge(against(records, ClassSpec::MaxDegree { n, max_degree }, &broom, Side::Below, true));
    }
    tally
}

/// `S_n ⪯ T ⪯ P_n` over all trees; no uniqueness is claimed.
pub(super) fn path_star_bounds(records: &[Record], n: usize) -> Tally {
    let mut tally = against(records, ClassSpec::All { n }, &FamilyParams::Star { n }, Side::Above, false);
    tally.merge(against(records, ClassSpec::All { n }, &FamilyParams::Path { n }, Side::Below, false));
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::catalog;

    #[test]
    fn pendant_min_at_seven() {
        let records = catalog(7, 20).unwrap();
        let t = against(&records, ClassSpec::Pendants { n: 7, q: 3 }, &FamilyParams::BalancedStarlike { n: 7, q: 3 }, Side::Above, true);
        assert!(t.failures.is_empty());
        assert!(t.checked > 1);
    }

    #[test]
    fn a_wrong_extremal_is_caught() {
        let records = catalog(7, 20).unwrap();
        let t = against(&records, ClassSpec::Pendants { n: 7, q: 3 }, &FamilyParams::pendant_max(7, 3), Side::Above, true);
        assert!(!t.failures.is_empty());
    }
}
