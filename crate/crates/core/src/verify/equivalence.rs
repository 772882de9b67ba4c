//! Non-isomorphic trees sharing an edge division vector.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::division::{edge_division_vector, EdgeDivisionVector};
use crate::enumeration::EnumerationError;
use crate::tree::{CanonicalCode, Tree};

use super::{catalog, Failure, Tally};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalentPair {
    pub vector: EdgeDivisionVector,
    pub left: CanonicalCode,
    pub right: CanonicalCode,
}

/// All pairs of distinct trees of order `n` with equal vectors, grouped by
/// vector and ordered by canonical code.
pub fn equivalent_nonisomorphic(n: usize, cap: usize) -> Result<Vec<EquivalentPair>, EnumerationError> {
    let mut buckets: BTreeMap<EdgeDivisionVector, Vec<CanonicalCode>> = BTreeMap::new();
    for r in catalog(n, cap)? {
        buckets.entry(r.vector).or_default().push(r.code);
    }
    let mut out = Vec::new();
    for (vector, mut codes) in buckets {
        codes.sort();
        for i in 0..codes.len() {
            for j in i + 1..codes.len() {
                out.push(EquivalentPair { vector: vector.clone(), left: codes[i].clone(), right: codes[j].clone() });
            }
        }
    }
    Ok(out)
}

/// Two trees of order 11 with vector `(4,3,2,1,0)`.
///
/// The first is the path `0..=7` with a pendant `8` and a two-vertex path
/// `9-10` hanging from vertex 3. The second is the path `0..=6` with a pendant
/// `7` at vertex 2 and a three-vertex path `8-9-10` hanging from vertex 3.
pub fn reference_pair() -> (Tree, Tree) {
    let mut first: Vec<[usize; 2]> = (0..7).map(|i| [i, i + 1]).collect();
    first.extend([[3, 8], [3, 9], [9, 10]]);
    let mut second: Vec<[usize; 2]> = (0..6).map(|i| [i, i + 1]).collect();
    second.extend([[2, 7], [3, 8], [8, 9], [9, 10]]);
    (Tree::new(11, first).expect("tree"), Tree::new(11, second).expect("tree"))
}

pub(super) fn verify(range: RangeInclusive<usize>, cap: usize) -> Result<Tally, EnumerationError> {
    let mut tally = Tally::default();
    let (a, b) = reference_pair();
    let (va, vb) = (edge_division_vector(&a), edge_division_vector(&b));
    tally.check(va == vb && va.to_string() == "(4,3,2,1,0)" && !a.is_isomorphic(&b), || {
        Failure::for_tree(&a, "reference pair: equal vectors (4,3,2,1,0), not isomorphic", format!("{va} vs {vb}"))
    });
    for n in range {
        let pairs = equivalent_nonisomorphic(n, cap)?;
        tally.note(format!("n={n}: {} equivalent non-isomorphic pairs", pairs.len()));
        for p in &pairs {
            let (_, l) = CanonicalCode::parse(p.left.as_str()).expect("valid code");
            let (_, r) = CanonicalCode::parse(p.right.as_str()).expect("valid code");
            tally.check(edge_division_vector(&l) == p.vector && edge_division_vector(&r) == p.vector && p.left != p.right, || {
                Failure::for_tree(&l, format!("shares {} with {}", p.vector, p.right), "mismatch")
            });
        }
        if n == 4 {
            tally.check(pairs.is_empty(), || Failure::for_tree(&Tree::path(4), "no pairs at n=4", pairs.len().to_string()));
        }
        if n == 11 {
            let (ca, cb) = (a.canonical_code(), b.canonical_code());
            let found = pairs.iter().any(|p| (p.left == ca && p.right == cb) || (p.left == cb && p.right == ca));
            tally.check(found, || Failure::for_tree(&a, "reference pair listed at n=11", "missing"));
        }
    }
    Ok(tally)
}
