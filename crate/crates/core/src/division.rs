//! Edge splits, edge division vectors and the preorder they induce on trees.
//!
//! For an edge `e = uv`, removing `e` splits the tree into two components of
//! orders `n_u(e) + n_v(e) = n`; `mu(e)` is the smaller of the two. The edge
//! division vector counts edges by `mu` value, and two trees of the same order
//! compare by dominance of the vectors' suffix sums.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Tree, Vertex};

/// Per-edge split data, indexed like [`Tree::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMuMap {
    n: usize,
    mu: Vec<usize>,
    /// `(n_u, n_v)` for the edge stored as `[u, v]`.
    split: Vec<(usize, usize)>,
}

impl EdgeMuMap {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn split(&self, edge: usize) -> (usize, usize) {
        self.split[edge]
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// One depth-first pass from vertex 0: for a tree edge with child `c`, the
/// child side has `size(c)` vertices.
pub fn edge_mu(t: &Tree) -> EdgeMuMap {
    let n = t.order();
    let (_, parent, size) = t.subtree_sizes(0);
    let mut mu = Vec::with_capacity(n.saturating_sub(1));
    let mut split = Vec::with_capacity(n.saturating_sub(1));
    for &[u, v] in t.edges() {
        let (nu, nv) = if parent[v] == u {
            (n - size[v], size[v])
        } else {
            (size[u], n - size[u])
        };
        mu.push(nu.min(nv));
        split.push((nu, nv));
    }
    EdgeMuMap { n, mu, split }
}

/// Counts `(r_1, .., r_{n/2})` of edges by their `mu` value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeDivisionVector {
    n: usize,
    counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("edge division vector must look like (r1,r2,...)")]
    Syntax,
    #[error("vector of length {len} cannot belong to a tree of order {n} (sum + 1)")]
    Length { len: usize, n: usize },
}

impl EdgeDivisionVector {
    /// Builds a vector for order `n`; the entries must sum to `n - 1` and
    /// there must be exactly `n / 2` of them.
    pub fn new(n: usize, counts: Vec<usize>) -> Result<Self, VectorError> {
        if counts.len() != n / 2 || (n >= 2 && counts.iter().sum::<usize>() != n - 1) {
            return Err(VectorError::Length { len: counts.len(), n });
        }
        Ok(EdgeDivisionVector { n, counts })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `r_i` for `1 <= i <= n/2`.
    pub fn r(&self, i: usize) -> usize {
        self.counts[i - 1]
    }

    /// `s[k-1] = r_k + r_{k+1} + ... + r_{n/2}`.
    pub fn suffix_sums(&self) -> Vec<usize> {
        let mut sums = self.counts.clone();
        for i in (0..sums.len().saturating_sub(1)).rev() {
            sums[i] += sums[i + 1];
        }
        sums
    }
}

pub fn edge_division_vector(t: &Tree) -> EdgeDivisionVector {
    let n = t.order();
    let mut counts = vec![0usize; n / 2];
    for &m in edge_mu(t).mu() {
        counts[m - 1] += 1;
    }
    EdgeDivisionVector { n, counts }
}

impl fmt::Display for EdgeDivisionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for EdgeDivisionVector {
    type Err = VectorError;

    /// The order is recovered from the entry sum (`n = sum + 1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(VectorError::Syntax)?;
        let counts = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| VectorError::Syntax))
                .collect::<Result<Vec<_>, _>>()?
        };
        let n = counts.iter().sum::<usize>() + 1;
        EdgeDivisionVector::new(n, counts)
    }
}

/// Outcome of comparing two edge division vectors of the same order.
///
/// Witness indices are 1-based positions `k` of the suffix sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "relation")]
pub enum OrderRelation {
    StrictlyLess { witness_k: usize },
    StrictlyGreater { witness_k: usize },
    Equivalent,
    /// `less_at`: first `k` where the left suffix sum is smaller;
    /// `greater_at`: first `k` where it is larger.
    Incomparable { less_at: usize, greater_at: usize },
}

impl OrderRelation {
    pub fn name(&self) -> &'static str {
        match self {
            OrderRelation::StrictlyLess { .. } => "StrictlyLess",
            OrderRelation::StrictlyGreater { .. } => "StrictlyGreater",
            OrderRelation::Equivalent => "Equivalent",
            OrderRelation::Incomparable { .. } => "Incomparable",
        }
    }

    /// `a ⪯ b`.
    pub fn is_le(&self) -> bool {
        matches!(self, OrderRelation::StrictlyLess { .. } | OrderRelation::Equivalent)
    }

    /// `a ⪰ b`.
    pub fn is_ge(&self) -> bool {
        matches!(self, OrderRelation::StrictlyGreater { .. } | OrderRelation::Equivalent)
    }

    pub fn is_comparable(&self) -> bool {
        !matches!(self, OrderRelation::Incomparable { .. })
    }

    /// The relation seen from the other operand.
    pub fn reversed(&self) -> Self {
        match *self {
            OrderRelation::StrictlyLess { witness_k } => OrderRelation::StrictlyGreater { witness_k },
            OrderRelation::StrictlyGreater { witness_k } => OrderRelation::StrictlyLess { witness_k },
            OrderRelation::Equivalent => OrderRelation::Equivalent,
            OrderRelation::Incomparable { less_at, greater_at } => OrderRelation::Incomparable {
                less_at: greater_at,
                greater_at: less_at,
            },
        }
    }
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderRelation::StrictlyLess { witness_k } | OrderRelation::StrictlyGreater { witness_k } => {
                write!(f, "{} (witness k={witness_k})", self.name())
            }
            OrderRelation::Equivalent => f.write_str("Equivalent"),
            OrderRelation::Incomparable { less_at, greater_at } => {
                write!(f, "Incomparable (witness k={less_at} <, k={greater_at} >)")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("orders differ: {left} vs {right}")]
pub struct OrderMismatch {
    pub left: usize,
    pub right: usize,
}

pub fn compare(a: &EdgeDivisionVector, b: &EdgeDivisionVector) -> Result<OrderRelation, OrderMismatch> {
    if a.n != b.n {
        return Err(OrderMismatch { left: a.n, right: b.n });
    }
    let (sa, sb) = (a.suffix_sums(), b.suffix_sums());
    let mut less_at = None;
    let mut greater_at = None;
    for (k, (x, y)) in sa.iter().zip(&sb).enumerate() {
        if x < y && less_at.is_none() {
            less_at = Some(k + 1);
        }
        if x > y && greater_at.is_none() {
            greater_at = Some(k + 1);
        }
    }
    Ok(match (less_at, greater_at) {
        (None, None) => OrderRelation::Equivalent,
        (Some(k), None) => OrderRelation::StrictlyLess { witness_k: k },
        (None, Some(k)) => OrderRelation::StrictlyGreater { witness_k: k },
        (Some(l), Some(g)) => OrderRelation::Incomparable { less_at: l, greater_at: g },
    })
}

/// Compares two trees through their edge division vectors.
pub fn compare_trees(a: &Tree, b: &Tree) -> Result<OrderRelation, OrderMismatch> {
    compare(&edge_division_vector(a), &edge_division_vector(b))
}

/// Vertices `u` with `n_u(e) >= n/2` on every incident edge (one or two of
/// them, adjacent when two).
pub fn centroidal_vertices(t: &Tree) -> Vec<Vertex> {
    t.centroids()
}

/// Centroidal vertices with `n_u(e) > ceil(n/2)` on every incident edge.
pub fn proper_centroidal_vertices(t: &Tree) -> Vec<Vertex> {
    let n = t.order();
    let map = edge_mu(t);
    centroidal_vertices(t)
        .into_iter()
        .filter(|&u| {
            t.edges().iter().enumerate().all(|(i, &[a, b])| {
                let (na, nb) = map.split(i);
                if a == u {
                    na > n.div_ceil(2)
                } else if b == u {
                    nb > n.div_ceil(2)
                } else {
                    true
                }
            })
        })
        .collect()
}

/// Edge indices with `mu(e) = floor(n/2)`.
pub fn center_edges(t: &Tree) -> Vec<usize> {
    let half = t.order() / 2;
    edge_mu(t)
        .mu()
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m == half)
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, c: &[usize]) -> EdgeDivisionVector {
        EdgeDivisionVector::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn mu_along_p5() {
        assert_eq!(edge_mu(&Tree::path(5)).mu(), &[1, 2, 2, 1]);
        assert!(edge_mu(&Tree::star(6)).mu().iter().all(|&m| m == 1));
        assert!(edge_mu(&Tree::path(1)).is_empty());
    }

    #[test]
    fn vectors_of_basic_trees() {
        assert_eq!(edge_division_vector(&Tree::star(6)).counts(), &[5, 0, 0]);
        assert_eq!(edge_division_vector(&Tree::path(5)).to_string(), "(2,2)");
    }

    #[test]
    fn comparisons() {
        assert_eq!(
            compare(&v(5, &[4, 0]), &v(5, &[2, 2])).unwrap(),
            OrderRelation::StrictlyLess { witness_k: 2 }
        );
        let f = v(11, &[4, 3, 2, 1, 0]);
        assert_eq!(compare(&f, &f).unwrap(), OrderRelation::Equivalent);
        assert_eq!(
            compare(&v(7, &[3, 3, 0]), &v(7, &[4, 0, 2])).unwrap(),
            OrderRelation::Incomparable { less_at: 3, greater_at: 2 }
        );
        assert_eq!(
            compare(&v(5, &[4, 0]), &v(6, &[5, 0, 0])).unwrap_err(),
            OrderMismatch { left: 5, right: 6 }
        );
    }

    #[test]
    fn vector_text_round_trip() {
        let parsed: EdgeDivisionVector = "(4,3,2,1,0)".parse().unwrap();
        assert_eq!(parsed.order(), 11);
        assert_eq!(parsed.to_string(), "(4,3,2,1,0)");
        assert!("(4,3)".parse::<EdgeDivisionVector>().is_err());
        assert!("4,3".parse::<EdgeDivisionVector>().is_err());
    }

    #[test]
    fn center_edges_of_paths_and_stars() {
        assert_eq!(center_edges(&Tree::path(4)), vec![1]);
        assert_eq!(center_edges(&Tree::path(5)), vec![1, 2]);
        assert!(center_edges(&Tree::star(6)).is_empty());
    }

    #[test]
    fn proper_centroid_of_star() {
        assert_eq!(proper_centroidal_vertices(&Tree::star(6)), vec![0]);
        assert!(proper_centroidal_vertices(&Tree::path(5)).is_empty());
    }
}
