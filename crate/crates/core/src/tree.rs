//! Unrooted trees on dense vertex ids.
//!
//! A [`Tree`] is validated once at construction (exactly `n - 1` edges, no
//! loops, no repeated edges, no cycles) and is immutable afterwards. Edge
//! order is preserved: the `i`-th edge passed in stays edge `i`, which the
//! transformations in [`crate::families`] rely on to express edge bijections.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

/// Structural problems found while building a [`Tree`].
///
/// Variants that point at a specific edge carry its index in the input list so
/// that text parsers can translate it back into a line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("a tree on {n} vertices has {expected} edges, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("vertex id {vertex} out of range for n={n}")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: Vertex },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { edge: usize, u: Vertex, v: Vertex },
    #[error("cycle detected: edge {u}-{v} closes a cycle")]
    Cycle { edge: usize, u: Vertex, v: Vertex },
    #[error("graph is disconnected")]
    Disconnected,
}

impl TreeError {
    /// Index of the offending input edge, when the error is tied to one.
    pub fn edge_index(&self) -> Option<usize> {
        match *self {
            TreeError::VertexOutOfRange { edge, .. }
            | TreeError::SelfLoop { edge, .. }
            | TreeError::DuplicateEdge { edge, .. }
            | TreeError::Cycle { edge, .. } => Some(edge),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    adj: Vec<Vec<Vertex>>,
}

/// Summary statistics used by the class filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeProfile {
    pub diameter: usize,
    pub pendant_count: usize,
    pub max_degree: usize,
    pub is_caterpillar: bool,
    /// Vertices left after deleting every leaf once. Zero for `P1` and `P2`.
    pub core_size: usize,
}

impl Tree {
    pub fn new(n: usize, edges: Vec<[Vertex; 2]>) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut dsu = Dsu::new(n);
        for (i, &[u, v]) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { edge: i, vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop { edge: i, vertex: u });
            }
            if !dsu.union(u, v) {
                let duplicate = edges[..i]
                    .iter()
                    .any(|&[a, b]| (a == u && b == v) || (a == v && b == u));
                return Err(if duplicate {
                    TreeError::DuplicateEdge { edge: i, u, v }
                } else {
                    TreeError::Cycle { edge: i, u, v }
                });
            }
        }
        if edges.len() < n - 1 {
            return Err(TreeError::Disconnected);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount { n, expected: n - 1, got: edges.len() });
        }
        let mut adj = vec![Vec::new(); n];
        for &[u, v] in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Tree { n, edges, adj })
    }

    /// Builds a tree from a parent array (`parent[0]` is ignored; vertex `i`
    /// hangs below `parent[i] < i`).
    pub(crate) fn from_parents(parent: &[Vertex]) -> Self {
        let n = parent.len();
        let edges = (1..n).map(|v| [parent[v], v]).collect();
        Tree::new(n, edges).expect("parent array always describes a tree")
    }

    pub fn path(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| [v - 1, v]).collect()).expect("path is a tree")
    }

    pub fn star(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| [0, v]).collect()).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[Vertex; 2]] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> [Vertex; 2] {
        self.edges[i]
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges
            .iter()
            .position(|&[a, b]| (a == u && b == v) || (a == v && b == u))
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.adj[v].len() == 1
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A longest path, found by two breadth-first sweeps.
    pub fn diametral_path(&self) -> Vec<Vertex> {
        let far = |d: &[usize]| {
            (0..self.n).max_by_key(|&v| (d[v], std::cmp::Reverse(v))).unwrap_or(0)
        };
        let a = far(&self.distances_from(0));
        let from_a = self.distances_from(a);
        let b = far(&from_a);
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| from_a[w] + 1 == from_a[cur])
                .expect("bfs layers are consistent");
            path.push(cur);
        }
        path
    }

    /// Vertices of the unique path from `u` to `v`, both ends included.
    pub fn path_between(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let dist = self.distances_from(v);
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| dist[w] + 1 == dist[cur])
                .expect("bfs layers are consistent");
            path.push(cur);
        }
        path
    }

    pub fn profile(&self) -> TreeProfile {
        let degrees = self.degrees();
        let pendant_count = degrees.iter().filter(|&&d| d == 1).count();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let diameter = self.diametral_path().len() - 1;
        let core: Vec<Vertex> = (0..self.n).filter(|&v| degrees[v] >= 2).collect();
        // The core of a tree is connected, so it is a path iff no core vertex
        // has three core neighbours.
        let is_caterpillar = core.iter().all(|&v| {
            self.adj[v].iter().filter(|&&w| degrees[w] >= 2).count() <= 2
        });
        TreeProfile {
            diameter,
            pendant_count,
            max_degree,
            is_caterpillar,
            core_size: core.len(),
        }
    }

    /// Preorder traversal from `root` returning `(order, parent)`; the root's
    /// parent is itself.
    pub(crate) fn rooted_order(&self, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
        let mut parent = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        parent[root] = root;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in self.adj[u].iter().rev() {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Subtree sizes when rooted at `root`, with the preorder and parents.
    pub(crate) fn subtree_sizes(&self, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>, Vec<usize>) {
        let (order, parent) = self.rooted_order(root);
        let mut size = vec![1usize; self.n];
        for &u in order.iter().rev() {
            if u != root {
                size[parent[u]] += size[u];
            }
        }
        (order, parent, size)
    }

    /// Vertices whose removal leaves components of order at most `n / 2`.
    pub fn centroids(&self) -> Vec<Vertex> {
        let (_, parent, size) = self.subtree_sizes(0);
        (0..self.n)
            .filter(|&u| {
                let largest = self.adj[u]
                    .iter()
                    .filter(|&&w| parent[w] == u)
                    .map(|&w| size[w])
                    .fold(self.n - size[u], usize::max);
                2 * largest <= self.n
            })
            .collect()
    }

    /// Rooted encoding: `(` children-in-sorted-order `)`.
    fn rooted_code(&self, root: Vertex) -> String {
        let (order, parent) = self.rooted_order(root);
        let mut codes: Vec<String> = vec![String::new(); self.n];
        for &u in order.iter().rev() {
            let mut children: Vec<String> = self.adj[u]
                .iter()
                .filter(|&&w| parent[w] == u)
                .map(|&w| std::mem::take(&mut codes[w]))
                .collect();
            children.sort_unstable();
            let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
            code.push('(');
            for c in children {
                code.push_str(&c);
            }
            code.push(')');
            codes[u] = code;
        }
        std::mem::take(&mut codes[root])
    }

    /// Isomorphism-invariant code: the tree rooted at its centroid, or the
    /// smaller of the two rootings when it has two.
    pub fn canonical_code(&self) -> CanonicalCode {
        let code = self
            .centroids()
            .into_iter()
            .map(|c| self.rooted_code(c))
            .min()
            .expect("every tree has a centroid");
        CanonicalCode(code)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.n == other.n && self.canonical_code() == other.canonical_code()
    }

    /// The canonical rooted level sequence (root at level 0).
    pub fn level_sequence(&self) -> Vec<usize> {
        self.canonical_code().level_sequence()
    }

    pub fn from_level_sequence(levels: &[usize]) -> Result<Self, LevelSequenceError> {
        let Some(&root) = levels.first() else {
            return Err(LevelSequenceError { position: 0, reason: "empty sequence" });
        };
        let mut parent = vec![0usize; levels.len()];
        // last vertex seen at each depth below the root
        let mut last_at: Vec<Vertex> = vec![0];
        for (i, &l) in levels.iter().enumerate().skip(1) {
            if l <= root {
                return Err(LevelSequenceError { position: i, reason: "second root" });
            }
            let depth = l - root;
            if depth > last_at.len() {
                return Err(LevelSequenceError { position: i, reason: "level jumps by more than one" });
            }
            parent[i] = last_at[depth - 1];
            last_at.truncate(depth);
            last_at.push(i);
        }
        Ok(Tree::from_parents(&parent))
    }

    /// One `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &[u, v] in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid level sequence at position {position}: {reason}")]
pub struct LevelSequenceError {
    pub position: usize,
    pub reason: &'static str,
}

/// Canonical string for an unlabeled tree; equal codes mean isomorphic trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn level_sequence(&self) -> Vec<usize> {
        let mut depth = 0usize;
        let mut levels = Vec::with_capacity(self.0.len() / 2);
        for b in self.0.bytes() {
            if b == b'(' {
                levels.push(depth);
                depth += 1;
            } else {
                depth -= 1;
            }
        }
        levels
    }

    /// Parses a parenthesised code back into a tree (vertex 0 is the root).
    pub fn parse(text: &str) -> Result<(Self, Tree), LevelSequenceError> {
        let text = text.trim();
        let mut depth = 0isize;
        let mut levels = Vec::new();
        for (i, b) in text.bytes().enumerate() {
            match b {
                b'(' => {
                    if depth == 0 && i > 0 {
                        return Err(LevelSequenceError { position: i, reason: "second root" });
                    }
                    levels.push(depth as usize);
                    depth += 1;
                }
                b')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(LevelSequenceError { position: i, reason: "unbalanced ')'" });
                    }
                }
                _ => return Err(LevelSequenceError { position: i, reason: "expected '(' or ')'" }),
            }
        }
        if depth != 0 || levels.is_empty() {
            return Err(LevelSequenceError { position: text.len(), reason: "unbalanced '('" });
        }
        let tree = Tree::from_level_sequence(&levels)?;
        Ok((tree.canonical_code(), tree))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycle() {
        let err = Tree::new(3, vec![[0, 1], [0, 2], [1, 2]]).unwrap_err();
        assert!(matches!(err, TreeError::Cycle { edge: 2, .. }));
    }

    #[test]
    fn rejects_structural_errors() {
        assert_eq!(Tree::new(0, vec![]).unwrap_err(), TreeError::Empty);
        assert!(matches!(
            Tree::new(3, vec![[0, 1], [1, 3]]).unwrap_err(),
            TreeError::VertexOutOfRange { vertex: 3, .. }
        ));
        assert!(matches!(
            Tree::new(3, vec![[0, 0], [1, 2]]).unwrap_err(),
            TreeError::SelfLoop { .. }
        ));
        assert!(matches!(
            Tree::new(3, vec![[0, 1], [1, 0]]).unwrap_err(),
            TreeError::DuplicateEdge { .. }
        ));
        assert_eq!(Tree::new(3, vec![[0, 1]]).unwrap_err(), TreeError::Disconnected);
    }

    #[test]
    fn profile_of_path_and_star() {
        let p5 = Tree::path(5).profile();
        assert_eq!(
            p5,
            TreeProfile { diameter: 4, pendant_count: 2, max_degree: 2, is_caterpillar: true, core_size: 3 }
        );
        let s6 = Tree::star(6).profile();
        assert_eq!(
            s6,
            TreeProfile { diameter: 2, pendant_count: 5, max_degree: 5, is_caterpillar: true, core_size: 1 }
        );
    }

    #[test]
    fn core_size_conventions() {
        assert_eq!(Tree::path(1).profile().core_size, 0);
        assert_eq!(Tree::path(2).profile().core_size, 0);
        assert_eq!(Tree::star(3).profile().core_size, 1);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let a = Tree::path(4);
        let b = Tree::new(4, vec![[2, 0], [0, 3], [3, 1]]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_ne!(Tree::star(5).canonical_code(), Tree::path(5).canonical_code());
    }

    #[test]
    fn centroids_of_small_trees() {
        assert_eq!(Tree::path(4).centroids(), vec![1, 2]);
        assert_eq!(Tree::path(5).centroids(), vec![2]);
        assert_eq!(Tree::star(6).centroids(), vec![0]);
        assert_eq!(Tree::path(1).centroids(), vec![0]);
    }

    #[test]
    fn level_sequence_round_trip() {
        let t = Tree::from_level_sequence(&[0, 1, 2, 2, 1, 2]).unwrap();
        assert_eq!(t.order(), 6);
        let back = Tree::from_level_sequence(&t.level_sequence()).unwrap();
        assert!(back.is_isomorphic(&t));
        // levels may start anywhere
        let shifted = Tree::from_level_sequence(&[1, 2, 3, 3, 2, 3]).unwrap();
        assert!(shifted.is_isomorphic(&t));
        assert!(Tree::from_level_sequence(&[0, 2]).is_err());
        assert!(Tree::from_level_sequence(&[0, 1, 0]).is_err());
    }

    #[test]
    fn code_parse_round_trip() {
        let t = Tree::path(5);
        let code = t.canonical_code();
        let (again, parsed) = CanonicalCode::parse(code.as_str()).unwrap();
        assert_eq!(again, code);
        assert!(parsed.is_isomorphic(&t));
        assert!(CanonicalCode::parse("(()").is_err());
        assert!(CanonicalCode::parse("()()").is_err());
    }
}
