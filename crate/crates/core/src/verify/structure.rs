//! Structural facts about centroids and center edges, and the single-step
//! transformation results.

use std::ops::RangeInclusive;

use crate::division::{
    center_edges as find_center_edges, centroidal_vertices, compare, compare_trees, edge_mu, proper_centroidal_vertices, EdgeMuMap,
    OrderRelation,
};
use crate::families::{branch_shift, edge_move, edge_shift, FamilyParams, Transformed};
use crate::tree::{Tree, Vertex};

use super::{Failure, Record, Tally};

/// `n_z(e)`: order of the component of `T - e` containing endpoint `z`.
fn side(t: &Tree, map: &EdgeMuMap, e: usize, z: Vertex) -> usize {
    let (a, b) = map.split(e);
    if t.edge(e)[0] == z {
        a
    } else {
        b
    }
}

fn incident(t: &Tree, u: Vertex) -> Vec<usize> {
    t.neighbors(u).iter().map(|&w| t.edge_index(u, w).expect("neighbors share an edge")).collect()
}

pub(super) fn centroid_count(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    for r in records {
        let t = &r.tree;
        let c = centroidal_vertices(t);
        tally.check((1..=2).contains(&c.len()), || r.failure("one or two centroidal vertices", format!("{c:?}")));
        let map = edge_mu(t);
        let balanced = (0..map.len()).find(|&e| map.split(e).0 * 2 == n);
        let two = c.len() == 2;
        let adjacent_balanced = two && balanced.is_some_and(|e| {
            let [a, b] = t.edge(e);
            (c[0] == a && c[1] == b) || (c[0] == b && c[1] == a)
        });
        tally.check(two == balanced.is_some() && (!two || adjacent_balanced), || {
            r.failure("two centroidal vertices iff they span an edge splitting n in halves", format!("centroids {c:?}"))
        });
    }
    tally
}

pub(super) fn center_edges(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    let (lo, hi) = (n / 2, n.div_ceil(2));
    for r in records.iter().filter(|_| n >= 2) {
        let t = &r.tree;
        let map = edge_mu(t);
        let ce = find_center_edges(t);
        let splits: Vec<(usize, usize)> =
            ce.iter().map(|&e| { let (a, b) = map.split(e); (a.min(b), a.max(b)) }).collect();
        if n % 2 == 0 && !ce.is_empty() {
            tally.check(ce.len() == 1 && splits[0] == (lo, lo), || {
                r.failure("even order: one center edge with halves n/2", format!("{splits:?}"))
            });
        }
        if n % 2 == 1 {
            tally.check(splits.iter().all(|&s| s == (lo, hi)), || {
                r.failure("odd order: center edges split floor|ceil", format!("{splits:?}"))
            });
        }
        tally.check(ce.len() <= 2, || r.failure("at most two center edges", ce.len().to_string()));
        if ce.len() == 2 {
            let [a, b] = t.edge(ce[0]);
            let z = [a, b].into_iter().find(|&z| t.edge(ce[1]).contains(&z));
            let ok = z.is_some_and(|z| side(t, &map, ce[0], z) == hi && side(t, &map, ce[1], z) == hi);
            tally.check(ok, || r.failure("two center edges meet at z with n_z = ceil(n/2) on both", format!("common vertex {z:?}")));
        }
    }
    tally
}

pub(super) fn centroid_center_link(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    if n < 2 {
        return tally;
    }
    let hi = n.div_ceil(2);
    for r in records {
        let t = &r.tree;
        let map = edge_mu(t);
        let c = centroidal_vertices(t);
        let ce = find_center_edges(t);
        if let [u, v] = c[..] {
            let uv = t.edge_index(u, v);
            tally.check(uv.is_some() && ce == vec![uv.unwrap()], || {
                r.failure("two centroidal vertices: their edge is the only center edge", format!("center edges {ce:?}"))
            });
        }
        let proper = proper_centroidal_vertices(t);
        tally.check((proper.len() == 1) == ce.is_empty(), || {
            r.failure("one proper centroidal vertex iff no center edge", format!("proper {proper:?}, center edges {ce:?}"))
        });
        if let [u] = c[..] {
            let inc = incident(t, u);
            let heavy: Vec<usize> = inc.iter().copied().filter(|&e| side(t, &map, e, u) == hi).collect();
            let all_heavy = heavy.len() == inc.len();
            let two_at_u = ce.len() == 2 && ce.iter().all(|e| inc.contains(e));
            tally.check(all_heavy == (t.degree(u) == 2 && two_at_u), || {
                r.failure("n_u = ceil(n/2) on every incident edge iff degree 2 with two center edges at u", format!("degree {}, center edges {ce:?}", t.degree(u)))
            });
            if heavy.len() == 1 {
                tally.check(ce == heavy, || {
                    r.failure("the one heavy incident edge is the only center edge", format!("heavy {heavy:?}, center edges {ce:?}"))
                });
            }
        }
    }
    tally
}

/// Outcome of applying the similarity criterion to a transformation.
enum Prediction {
    Relation(OrderRelation),
    /// More than one edge changes `mu`; the criterion says nothing.
    NotSimilar,
}

fn predict(before: &Tree, out: &Transformed) -> Prediction {
    let mu = edge_mu(before);
    let mu2 = edge_mu(&out.tree);
    let diffs: Vec<(usize, usize)> = (0..mu.len())
        .map(|e| (mu.mu()[e], mu2.mu()[out.edge_map[e]]))
        .filter(|(a, b)| a != b)
        .collect();
    match diffs[..] {
        [] => Prediction::Relation(OrderRelation::Equivalent),
        [(a, b)] if a < b => Prediction::Relation(OrderRelation::StrictlyLess { witness_k: 0 }),
        [_] => Prediction::Relation(OrderRelation::StrictlyGreater { witness_k: 0 }),
        _ => Prediction::NotSimilar,
    }
}

fn same_kind(a: &OrderRelation, b: &OrderRelation) -> bool {
    std::mem::discriminant(a) == std::mem::discriminant(b)
}

fn check_instance(tally: &mut Tally, skipped: &mut usize, before: &Tree, out: &Transformed, label: &str) {
    match predict(before, out) {
        Prediction::NotSimilar => *skipped += 1,
        Prediction::Relation(expected) => {
            let observed = compare_trees(before, &out.tree).expect("equal orders");
            tally.check(same_kind(&expected, &observed), || {
                Failure::for_tree(before, format!("{} after {label}", expected.name()), observed.to_string())
            });
        }
    }
}

/// The three-way similarity criterion on every identity, edge move and
/// branch shift (along a diametral path) of every tree, and on every edge
/// shift of a double star path.
pub(super) fn similarity_criterion(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    let mut skipped = 0;
    for r in records {
        let t = &r.tree;
        let identity = Transformed { tree: t.clone(), edge_map: (0..n.saturating_sub(1)).collect() };
        check_instance(&mut tally, &mut skipped, t, &identity, "identity");
        for &[a, b] in t.edges() {
            for (u, v) in [(a, b), (b, a)] {
                if let Ok(out) = edge_move(t, u, v) {
                    check_instance(&mut tally, &mut skipped, t, &out, &format!("edge move {u}-{v}"));
                }
            }
        }
        let mut spine = t.diametral_path();
        for _ in 0..2 {
            for from in 0..spine.len().saturating_sub(1) {
                if let Ok(out) = branch_shift(t, &spine, from) {
                    check_instance(&mut tally, &mut skipped, t, &out, &format!("branch shift at {}", spine[from]));
                }
            }
            spine.reverse();
        }
    }
    for k in 2..n {
        for b in 1..=n - k {
            let p = FamilyParams::DoubleStarPath { n, a: n - k - b, b, k };
            let shift = edge_shift(&p).expect("b >= 1");
            check_instance(&mut tally, &mut skipped, &shift.before, &shift.transformed, &format!("edge shift of {p}"));
        }
    }
    tally.note(format!("n={n}: {} similar instances checked, {skipped} not similar (skipped)", tally.checked));
    tally
}

/// `CP_{n;a,b} ≺ CP_{n;a+1,b-1}` when `a + 2 <= b`, with the edge shift
/// bijection differing in `mu` on exactly one edge.
pub(super) fn edge_shift_step(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range {
        for k in 2..n {
            for a in 0..=n - k {
                let b = n - k - a;
                if a + 2 > b {
                    continue;
                }
                let p = FamilyParams::DoubleStarPath { n, a, b, k };
                let shift = edge_shift(&p).expect("b >= 2");
                let after = shift.after.construct().expect("valid");
                let rel = compare_trees(&shift.before, &after).expect("equal orders");
                tally.check(matches!(rel, OrderRelation::StrictlyLess { .. }), || {
                    Failure::for_tree(&shift.before, format!("{p} strictly below {}", shift.after), rel.to_string())
                });
                let similar = matches!(
                    predict(&shift.before, &shift.transformed),
                    Prediction::Relation(OrderRelation::StrictlyLess { .. })
                );
                tally.check(similar && shift.transformed.tree.is_isomorphic(&after), || {
                    Failure::for_tree(&shift.before, format!("edge shift of {p} similar on one edge"), "bijection changes more than one edge")
                });
            }
        }
    }
    tally
}

/// `CP^s_{n,k} ≻ CP^{s+1}_{n,k}` for `k >= 3`, `s < k/2`, `n > k`, where the
/// right side is the branch shift of the left from `v_s` to `v_{s+1}`.
pub(super) fn cluster_shift_step(range: RangeInclusive<usize>) -> Tally {
    let mut tally = Tally::default();
    for n in range {
        for k in 3..n {
            for s in (1..).take_while(|s| 2 * s < k) {
                let at = |pos: usize| {
                    let mut c = vec![0; k];
                    c[pos - 1] = n - k;
                    FamilyParams::Caterpillar { n, composition: c }
                };
                let (p, q) = (at(s), at(s + 1));
                let t = p.construct().expect("valid");
                let shifted = branch_shift(&t, &p.spine().expect("caterpillar"), s - 1).expect("branch at v_s");
                let expected = q.construct().expect("valid");
                let rel = compare(&crate::division::edge_division_vector(&t), &crate::division::edge_division_vector(&expected))
                    .expect("equal orders");
                tally.check(matches!(rel, OrderRelation::StrictlyGreater { .. }), || {
                    Failure::for_tree(&t, format!("{p} strictly above {q}"), rel.to_string())
                });
                tally.check(shifted.tree.is_isomorphic(&expected), || {
                    Failure::for_tree(&t, format!("branch shift of {p} gives {q}"), "different tree")
                });
            }
        }
    }
    tally
}

/// Every edge move with both sides of order at least two lowers the tree
/// strictly.
pub(super) fn edge_move_step(records: &[Record], n: usize) -> Tally {
    let mut tally = Tally::default();
    if n < 4 {
        return tally;
    }
    for r in records {
        for &[a, b] in r.tree.edges() {
            for (u, v) in [(a, b), (b, a)] {
                let Ok(out) = edge_move(&r.tree, u, v) else { continue };
                let rel = compare(&r.vector, &crate::division::edge_division_vector(&out.tree)).expect("equal orders");
                tally.check(matches!(rel, OrderRelation::StrictlyGreater { .. }), || {
                    r.failure(format!("strictly above its edge move at {u}-{v}"), rel.to_string())
                });
            }
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::catalog;

    #[test]
    fn structural_facts_hold_to_ten() {
        for n in 1..=10 {
            let records = catalog(n, 20).unwrap();
            for t in [centroid_count(&records, n), center_edges(&records, n), centroid_center_link(&records, n)] {
                assert!(t.failures.is_empty(), "n={n}: {:?}", t.failures);
            }
        }
    }

    #[test]
    fn similarity_and_steps_hold_to_eight() {
        for n in 4..=8 {
            let records = catalog(n, 20).unwrap();
            let t = similarity_criterion(&records, n);
            assert!(t.failures.is_empty(), "n={n}: {:?}", t.failures);
            assert!(edge_move_step(&records, n).failures.is_empty());
        }
        assert!(edge_shift_step(4..=10).failures.is_empty());
        assert!(cluster_shift_step(4..=10).failures.is_empty());
    }
}
