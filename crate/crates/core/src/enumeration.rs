//! Exhaustive generation of unlabeled free trees and the tree classes used by
//! the extremal results.
//!
//! Free trees come from the Wright–Richmond–Odlyzko–McKay successor rule on
//! level sequences of centroid-rooted trees. Each class is emitted exactly
//! once, in generation order, which is deterministic for a given `n`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::Tree;

/// Default soft cap on the order accepted by [`FreeTrees::with_cap`].
pub const DEFAULT_CAP: usize = 20;

/// Number of unlabeled free trees on `n` vertices, `n = 0..=20`.
pub const FREE_TREE_COUNTS: [u64; 21] = [
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065,
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("partition index {index} out of range for {parts} parts")]
    Partition { parts: usize, index: usize },
}

/// Streams the level sequences of all free trees of order `n`.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    next: Option<Vec<usize>>,
    stride: usize,
    offset: usize,
    position: usize,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self, EnumerationError> {
        if n == 0 {
            return Err(EnumerationError::ZeroOrder);
        }
        if n > cap {
            return Err(EnumerationError::CapExceeded { n, cap });
        }
        let first = if n == 1 {
            Some(vec![0])
        } else {
            let layout: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
            next_tree(layout)
        };
        Ok(FreeTrees { next: first, stride: 1, offset: 0, position: 0 })
    }

    /// Restricts the stream to positions `index, index + parts, ...`, so
    /// `parts` workers with distinct indices cover every tree exactly once.
    pub fn partition(mut self, parts: usize, index: usize) -> Result<Self, EnumerationError> {
        if parts == 0 || index >= parts {
            return Err(EnumerationError::Partition { parts, index });
        }
        self.stride = parts;
        self.offset = index;
        Ok(self)
    }

    /// The same stream, converted to trees.
    pub fn trees(self) -> impl Iterator<Item = Tree> {
        self.map(|levels| Tree::from_level_sequence(&levels).expect("generator emits valid sequences"))
    }

    fn advance(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        self.next = if current.len() == 1 { None } else { next_rooted_tree(&current, None).and_then(next_tree) };
        Some(current)
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let levels = self.advance()?;
            let pos = self.position;
            self.position += 1;
            if pos % self.stride == self.offset {
                return Some(levels);
            }
        }
    }
}

/// Successor of a rooted level sequence, altering positions from `p` on.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits at the second vertex of level 1: the first subtree of the root
/// (relabelled from level 0) and the root with its remaining subtrees.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Returns `candidate` if it is the canonical layout of a free tree, otherwise
/// the next canonical layout.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let valid = rh > lh || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut fresh = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&fresh);
        let height = new_left.iter().max().copied().unwrap_or(0);
        let len = fresh.len();
        for (slot, level) in fresh[len - (height + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(fresh)
}

/// The tree classes with extremal results, plus the full set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassSpec {
    All { n: usize },
    /// Caterpillars with a spine representation on exactly `k` vertices.
    Caterpillars { n: usize, k: usize },
    Diameter { n: usize, d: usize },
    Pendants { n: usize, q: usize },
    MaxDegree { n: usize, max_degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("class spec '{0}' is not of the form kind:n[:param]")]
    Syntax(String),
    #[error("unknown class kind '{0}' (expected all, cat, diam, pend or maxdeg)")]
    UnknownKind(String),
    #[error("{0} out of range")]
    Range(String),
    #[error("tree has order {tree} but the class has order {class}")]
    OrderMismatch { tree: usize, class: usize },
}

impl ClassSpec {
    pub fn order(&self) -> usize {
        match *self {
            ClassSpec::All { n }
            | ClassSpec::Caterpillars { n, .. }
            | ClassSpec::Diameter { n, .. }
            | ClassSpec::Pendants { n, .. }
            | ClassSpec::MaxDegree { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), ClassError> {
        let ok = match *self {
            ClassSpec::All { n } => n >= 1,
            ClassSpec::Caterpillars { n, k } => 1 <= k && k <= n,
            ClassSpec::Diameter { n, d } => 1 <= d && d < n,
            ClassSpec::Pendants { n, q } => 2 <= q && q < n,
            ClassSpec::MaxDegree { n, max_degree } => 2 <= max_degree && max_degree < n,
        };
        if ok {
            Ok(())
        } else {
            Err(ClassError::Range(self.to_string()))
        }
    }

    pub fn contains(&self, t: &Tree) -> Result<bool, ClassError> {
        if t.order() != self.order() {
            return Err(ClassError::OrderMismatch { tree: t.order(), class: self.order() });
        }
        let p = t.profile();
        Ok(match *self {
            ClassSpec::All { .. } => true,
            ClassSpec::Caterpillars { n, k } => {
                p.is_caterpillar && p.core_size.max(1) <= k && k <= (p.core_size + 2).min(n)
            }
            ClassSpec::Diameter { d, .. } => p.diameter == d,
            ClassSpec::Pendants { q, .. } => p.pendant_count == q,
            ClassSpec::MaxDegree { max_degree, .. } => p.max_degree == max_degree,
        })
    }

    /// Members in generation order.
    pub fn enumerate(&self, cap: usize) -> Result<impl Iterator<Item = Tree>, EnumerationError> {
        let spec = *self;
        Ok(FreeTrees::with_cap(self.order(), cap)?
            .trees()
            .filter(move |t| spec.contains(t).expect("orders agree")))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassSpec::All { n } => write!(f, "all:{n}"),
            ClassSpec::Caterpillars { n, k } => write!(f, "cat:{n}:{k}"),
            ClassSpec::Diameter { n, d } => write!(f, "diam:{n}:{d}"),
            ClassSpec::Pendants { n, q } => write!(f, "pend:{n}:{q}"),
            ClassSpec::MaxDegree { n, max_degree } => write!(f, "maxdeg:{n}:{max_degree}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').map(str::trim).collect();
        let nums: Vec<usize> = parts[1..]
            .iter()
            .map(|p| p.parse().map_err(|_| ClassError::Syntax(s.to_string())))
            .collect::<Result<_, _>>()?;
        let spec = match (parts[0].to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("all", &[n]) => ClassSpec::All { n },
            ("cat", &[n, k]) => ClassSpec::Caterpillars { n, k },
            ("diam", &[n, d]) => ClassSpec::Diameter { n, d },
            ("pend", &[n, q]) => ClassSpec::Pendants { n, q },
            ("maxdeg", &[n, max_degree]) => ClassSpec::MaxDegree { n, max_degree },
            ("all" | "cat" | "diam" | "pend" | "maxdeg", _) => return Err(ClassError::Syntax(s.to_string())),
            (other, _) => return Err(ClassError::UnknownKind(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Applies `f` to every tree of the stream, in parallel when the `parallel`
/// feature is on. Results keep generation order.
pub fn map_trees<I, T, F>(trees: I, f: F) -> Vec<T>
where
    I: Iterator<Item = Tree>,
    T: Send,
    F: Fn(&Tree) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        const CHUNK: usize = 2048;
        let mut out = Vec::new();
        let mut trees = trees.peekable();
        while trees.peek().is_some() {
            let chunk: Vec<Tree> = trees.by_ref().take(CHUNK).collect();
            out.par_extend(chunk.par_iter().map(&f).collect::<Vec<_>>());
        }
        out
    }
    #[cfg(not(feature = "parallel"))]
    {
        trees.map(|t| f(&t)).collect()
    }
}

/// Number of isomorphism classes among all labeled trees on `n` vertices,
/// found by decoding every Prüfer sequence. Independent of the generator;
/// intended for `n <= 9`.
pub fn prufer_class_count(n: usize) -> usize {
    prufer_classes(n).len()
}

/// Bit-packed canonical forms of all labeled trees on `n <= 32` vertices.
pub fn prufer_classes(n: usize) -> HashSet<u64> {
    assert!((1..=32).contains(&n), "bit-packed forms need 1 <= n <= 32");
    let mut seen = HashSet::new();
    if n <= 2 {
        let edges = if n == 2 { vec![(0, 1)] } else { vec![] };
        seen.insert(packed_form(n, &edges));
        return seen;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        seen.insert(packed_form(n, &decode_prufer(n, &seq)));
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return seen;
        }
        seq[i] += 1;
    }
}

fn decode_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU encoding as a bit string (`1` opens, `0` closes), children ordered by
/// value, minimised over the centroid roots.
fn packed_form(n: usize, edges: &[(usize, usize)]) -> u64 {
    if n == 1 {
        return 0b10;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // subtree sizes from root 0 to locate centroids
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }
    let centroids = (0..n).filter(|&v| {
        let up = n - size[v];
        up <= n / 2 && adj[v].iter().all(|&w| parent[w] != v || size[w] <= n / 2)
    });
    centroids.map(|c| encode(&adj, c, usize::MAX).0).min().expect("every tree has a centroid")
}

fn encode(adj: &[Vec<usize>], v: usize, from: usize) -> (u64, u32) {
    let mut kids: Vec<(u64, u32)> = adj[v].iter().filter(|&&w| w != from).map(|&w| encode(adj, w, v)).collect();
    kids.sort_unstable();
    let (mut value, mut len) = (1u64, 1u32);
    for (kv, kl) in kids {
        value = (value << kl) | kv;
        len += kl;
    }
    (value << 1, len + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const COUNTS: [usize; 14] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

    #[test]
    fn published_table_agrees_with_local_constants() {
        for (i, &c) in COUNTS.iter().enumerate() {
            assert_eq!(FREE_TREE_COUNTS[i + 1], c as u64);
        }
    }

    #[test]
    fn counts_match_the_unlabeled_tree_sequence() {
        for (i, &expected) in COUNTS.iter().enumerate() {
            assert_eq!(FreeTrees::new(i + 1).unwrap().count(), expected, "n={}", i + 1);
        }
    }

    #[test]
    fn no_duplicate_classes() {
        for n in 1..=11 {
            let codes: HashSet<_> = FreeTrees::new(n).unwrap().trees().map(|t| t.canonical_code()).collect();
            assert_eq!(codes.len(), COUNTS[n - 1]);
        }
    }

    #[test]
    fn partitions_cover_the_stream() {
        let all: Vec<_> = FreeTrees::new(10).unwrap().collect();
        let mut merged: Vec<_> =
            (0..3).flat_map(|i| FreeTrees::new(10).unwrap().partition(3, i).unwrap()).collect();
        assert_eq!(merged.len(), all.len());
        merged.sort();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(merged, sorted);
        assert!(FreeTrees::new(5).unwrap().partition(2, 2).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(FreeTrees::with_cap(17, 16).unwrap_err(), EnumerationError::CapExceeded { n: 17, cap: 16 });
        assert_eq!(FreeTrees::new(0).unwrap_err(), EnumerationError::ZeroOrder);
    }

    #[test]
    fn prufer_oracle_small() {
        for n in 1..=8 {
            assert_eq!(prufer_class_count(n), COUNTS[n - 1], "n={n}");
        }
    }

    #[test]
    fn class_membership_examples() {
        let star = Tree::star(6);
        assert!(ClassSpec::Caterpillars { n: 6, k: 3 }.contains(&star).unwrap());
        assert!(!ClassSpec::Caterpillars { n: 6, k: 4 }.contains(&star).unwrap());
        assert!(ClassSpec::Diameter { n: 6, d: 5 }.contains(&Tree::path(6)).unwrap());
        let sp: Tree = "SP(7,3)".parse::<crate::FamilyParams>().unwrap().construct().unwrap();
        assert!((1..=7).all(|k| !ClassSpec::Caterpillars { n: 7, k }.contains(&sp).unwrap()));
        let stars: Vec<_> = ClassSpec::MaxDegree { n: 5, max_degree: 4 }.enumerate(20).unwrap().collect();
        assert_eq!(stars.len(), 1);
        assert!(stars[0].is_isomorphic(&Tree::star(5)));
        assert_eq!(ClassSpec::All { n: 4 }.contains(&Tree::path(5)), Err(ClassError::OrderMismatch { tree: 5, class: 4 }));
    }

    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }

    #[test]
    fn caterpillar_rule_matches_compositions() {
        for n in 3..=12 {
            for k in 2..n {
                let built: HashSet<_> = compositions(n - k, k)
                    .into_iter()
                    .map(|c| crate::FamilyParams::Caterpillar { n, composition: c }.construct().unwrap().canonical_code())
                    .collect();
                let members: HashSet<_> = ClassSpec::Caterpillars { n, k }
                    .enumerate(20)
                    .unwrap()
                    .map(|t| t.canonical_code())
                    .collect();
                assert_eq!(built, members, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn class_spec_strings() {
        for s in ["all:7", "cat:7:4", "diam:7:3", "pend:7:3", "maxdeg:7:3"] {
            assert_eq!(s.parse::<ClassSpec>().unwrap().to_string(), s);
        }
        assert!(matches!("cat:7".parse::<ClassSpec>(), Err(ClassError::Syntax(_))));
        assert!(matches!("pend:7:1".parse::<ClassSpec>(), Err(ClassError::Range(_))));
        assert!(matches!("tree:7".parse::<ClassSpec>(), Err(ClassError::UnknownKind(_))));
    }
}
