//! Named tree families and the three order-relating transformations.
//!
//! Construction labels vertices deterministically: spine vertices first
//! (`v_1 .. v_k` become `0 .. k-1`), then pendants in spine order. Starlike
//! trees put the hub at 0 followed by the legs in nondecreasing length.
//!
//! Transformations keep edge indices stable where the natural bijection is the
//! identity, and otherwise return the bijection explicitly in
//! [`Transformed::edge_map`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::{Tree, Vertex};

/// Parameters that pin down one member of a family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    Path { n: usize },
    Star { n: usize },
    /// `CP(n; n_1, .., n_k)`: spine `P_k`, `n_i` pendants at `v_i`.
    Caterpillar { n: usize, composition: Vec<usize> },
    /// `CP_{n;a,b}`: spine `P_k`, `a` pendants at `v_1`, `b` at `v_k`.
    DoubleStarPath { n: usize, a: usize, b: usize, k: usize },
    /// `CP^s_{n,k}`: spine `P_k`, all `n - k` pendants at `v_s`.
    SingleClusterCaterpillar { n: usize, k: usize, s: usize },
    /// `SP_{n,q}`: `q` legs from one hub, lengths differing by at most one.
    BalancedStarlike { n: usize, q: usize },
    /// `CP_{n;1,Δ-1}`.
    Broom { n: usize, max_degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("caterpillar needs a spine of at least one vertex")]
    EmptySpine,
    #[error("spine plus pendants must equal n: {spine} + {pendants} != {n}")]
    OrderMismatch { n: usize, spine: usize, pendants: usize },
    #[error("cluster position s={s} must satisfy 1 <= s <= k={k}")]
    ClusterPosition { s: usize, k: usize },
    #[error("spine length k={k} exceeds order n={n}")]
    SpineTooLong { k: usize, n: usize },
    #[error("starlike tree needs 3 <= q <= n-1 (q={q}, n={n})")]
    LegCount { q: usize, n: usize },
    #[error("broom needs 3 <= max degree <= n-1 (max degree={max_degree}, n={n})")]
    BroomDegree { max_degree: usize, n: usize },
}

impl FamilyParams {
    /// `CP^s_{n,k}` with `s` folded onto `min(s, k - s + 1)`.
    pub fn single_cluster(n: usize, k: usize, s: usize) -> Self {
        let s = if s >= 1 && s <= k { s.min(k - s + 1) } else { s };
        FamilyParams::SingleClusterCaterpillar { n, k, s }
    }

    /// `CP^{ceil(k/2)}_{n,k}`, the minimum of the caterpillars on spine `P_k`.
    pub fn caterpillar_min(n: usize, k: usize) -> Self {
        FamilyParams::single_cluster(n, k, k.div_ceil(2))
    }

    /// `CP_{n; floor((n-k)/2), ceil((n-k)/2)}` on spine `P_k`.
    pub fn caterpillar_max(n: usize, k: usize) -> Self {
        let p = n - k;
        FamilyParams::DoubleStarPath { n, a: p / 2, b: p - p / 2, k }
    }

    /// `CP_{n; floor(q/2), ceil(q/2)}` on spine `P_{n-q}`.
    pub fn pendant_max(n: usize, q: usize) -> Self {
        FamilyParams::DoubleStarPath { n, a: q / 2, b: q - q / 2, k: n - q }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilyParams::Path { n }
            | FamilyParams::Star { n }
            | FamilyParams::Caterpillar { n, .. }
            | FamilyParams::DoubleStarPath { n, .. }
            | FamilyParams::SingleClusterCaterpillar { n, .. }
            | FamilyParams::BalancedStarlike { n, .. }
            | FamilyParams::Broom { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.order() == 0 {
            return Err(FamilyError::ZeroOrder);
        }
        match *self {
            FamilyParams::Path { .. } | FamilyParams::Star { .. } => Ok(()),
            FamilyParams::Caterpillar { n, ref composition } => {
                check_spine(n, composition.len(), composition.iter().sum())
            }
            FamilyParams::DoubleStarPath { n, a, b, k } => check_spine(n, k, a + b),
            FamilyParams::SingleClusterCaterpillar { n, k, s } => {
                if k == 0 {
                    return Err(FamilyError::EmptySpine);
                }
                if k > n {
                    return Err(FamilyError::SpineTooLong { k, n });
                }
                if s == 0 || s > k {
                    return Err(FamilyError::ClusterPosition { s, k });
                }
                Ok(())
            }
            FamilyParams::BalancedStarlike { n, q } => {
                if q < 3 || q + 1 > n {
                    return Err(FamilyError::LegCount { q, n });
                }
                Ok(())
            }
            FamilyParams::Broom { n, max_degree } => {
                if max_degree < 3 || max_degree + 1 > n {
                    return Err(FamilyError::BroomDegree { max_degree, n });
                }
                Ok(())
            }
        }
    }

    /// Pendant counts along the spine, for every caterpillar-shaped family.
    pub fn composition(&self) -> Option<Vec<usize>> {
        match *self {
            FamilyParams::Path { n } => Some(vec![0; n]),
            FamilyParams::Star { n } => Some(vec![n - 1]),
            FamilyParams::Caterpillar { ref composition, .. } => Some(composition.clone()),
            FamilyParams::DoubleStarPath { a, b, k, .. } => {
                let mut c = vec![0; k];
                c[0] += a;
                c[k - 1] += b;
                Some(c)
            }
            FamilyParams::SingleClusterCaterpillar { n, k, s } => {
                let mut c = vec![0; k];
                c[s.min(k - s + 1) - 1] = n - k;
                Some(c)
            }
            FamilyParams::Broom { n, max_degree } => {
                FamilyParams::DoubleStarPath { n, a: 1, b: max_degree - 1, k: n - max_degree }
                    .composition()
            }
            FamilyParams::BalancedStarlike { .. } => None,
        }
    }

    pub fn construct(&self) -> Result<Tree, FamilyError> {
        self.validate()?;
        Ok(match *self {
            FamilyParams::BalancedStarlike { n, q } => starlike(n, q),
            _ => caterpillar(&self.composition().expect("caterpillar-shaped family")),
        })
    }

    /// Spine vertices `v_1 .. v_k` of the constructed tree, if it has one.
    pub fn spine(&self) -> Option<Vec<Vertex>> {
        self.composition().map(|c| (0..c.len()).collect())
    }

    /// Re-expresses the parameters by the simplest family the tree belongs
    /// to: paths and stars collapse to `P(n)` / `S(n)`.
    pub fn normalized(&self) -> Result<FamilyParams, FamilyError> {
        let t = self.construct()?;
        let n = t.order();
        let max_degree = t.degrees().into_iter().max().unwrap_or(0);
        Ok(if max_degree <= 2 {
            FamilyParams::Path { n }
        } else if max_degree == n - 1 {
            FamilyParams::Star { n }
        } else if let FamilyParams::SingleClusterCaterpillar { n, k, s } = *self {
            FamilyParams::single_cluster(n, k, s)
        } else {
            self.clone()
        })
    }
}

fn check_spine(n: usize, spine: usize, pendants: usize) -> Result<(), FamilyError> {
    if spine == 0 {
        return Err(FamilyError::EmptySpine);
    }
    if spine + pendants != n {
        return Err(FamilyError::OrderMismatch { n, spine, pendants });
    }
    Ok(())
}

fn caterpillar(composition: &[usize]) -> Tree {
    let k = composition.len();
    let n = k + composition.iter().sum::<usize>();
    let mut edges: Vec<[Vertex; 2]> = (1..k).map(|i| [i - 1, i]).collect();
    let mut next = k;
    for (i, &c) in composition.iter().enumerate() {
        for _ in 0..c {
            edges.push([i, next]);
            next += 1;
        }
    }
    Tree::new(n, edges).expect("caterpillar construction is a tree")
}

fn starlike(n: usize, q: usize) -> Tree {
    let (s, r) = ((n - 1) / q, (n - 1) % q);
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for leg in 0..q {
        let len = if leg < q - r { s } else { s + 1 };
        let mut prev = 0;
        for _ in 0..len {
            edges.push([prev, next]);
            prev = next;
            next += 1;
        }
    }
    Tree::new(n, edges).expect("starlike construction is a tree")
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Path { n } => write!(f, "P({n})"),
            FamilyParams::Star { n } => write!(f, "S({n})"),
            FamilyParams::Caterpillar { n, composition } => {
                let parts: Vec<String> = composition.iter().map(usize::to_string).collect();
                write!(f, "CP({n}; {})", parts.join(","))
            }
            FamilyParams::DoubleStarPath { n, a, b, k } => write!(f, "DSP({n}; {a},{b}; {k})"),
            FamilyParams::SingleClusterCaterpillar { n, k, s } => write!(f, "CP({n},{k})^{s}"),
            FamilyParams::BalancedStarlike { n, q } => write!(f, "SP({n},{q})"),
            FamilyParams::Broom { n, max_degree } => write!(f, "BROOM({n},{max_degree})"),
        }
    }
}

/// Syntax or parameter error in a family expression; `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ExpressionError {
    pub column: usize,
    pub message: String,
}

impl FromStr for FamilyParams {
    type Err = ExpressionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let params = ExprParser { src: s.as_bytes(), pos: 0 }.parse()?;
        params
            .validate()
            .map_err(|e| ExpressionError { column: 1, message: e.to_string() })?;
        Ok(params)
    }
}

/// Recursive-descent parser for
/// `P(n) | S(n) | CP(n; c1,..,ck) | CP(n,k)^s | DSP(n; a,b; k) | SP(n,q) | BROOM(n,d)`.
struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExpressionError> {
        Err(ExpressionError { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExpressionError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn name(&mut self) -> Result<String, ExpressionError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a family name");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_uppercase())
    }

    fn number(&mut self) -> Result<usize, ExpressionError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a non-negative integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| {
                self.pos = start;
                self.err("integer too large")
            })
    }

    fn list(&mut self) -> Result<Vec<usize>, ExpressionError> {
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn parse(mut self) -> Result<FamilyParams, ExpressionError> {
        let name_at = {
            self.skip_ws();
            self.pos
        };
        let name = self.name()?;
        self.expect(b'(')?;
        let n = self.number()?;
        let params = match name.as_str() {
            "P" => {
                self.expect(b')')?;
                FamilyParams::Path { n }
            }
            "S" => {
                self.expect(b')')?;
                FamilyParams::Star { n }
            }
            "SP" | "BROOM" => {
                self.expect(b',')?;
                let x = self.number()?;
                self.expect(b')')?;
                if name == "SP" {
                    FamilyParams::BalancedStarlike { n, q: x }
                } else {
                    FamilyParams::Broom { n, max_degree: x }
                }
            }
            "DSP" => {
                self.expect(b';')?;
                let a = self.number()?;
                self.expect(b',')?;
                let b = self.number()?;
                self.expect(b';')?;
                let k = self.number()?;
                self.expect(b')')?;
                FamilyParams::DoubleStarPath { n, a, b, k }
            }
            "CP" => match self.peek() {
                Some(b';') => {
                    self.pos += 1;
                    let composition = self.list()?;
                    self.expect(b')')?;
                    FamilyParams::Caterpillar { n, composition }
                }
                Some(b',') => {
                    self.pos += 1;
                    let k = self.number()?;
                    self.expect(b')')?;
                    self.expect(b'^')?;
                    let s = self.number()?;
                    FamilyParams::single_cluster(n, k, s)
                }
                _ => return self.err("expected ';' or ','"),
            },
            _ => {
                self.pos = name_at;
                return self.err(format!("unknown family '{name}'"));
            }
        };
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(params)
    }
}

/// A transformed tree with the edge bijection from the input:
/// input edge `i` corresponds to output edge `edge_map[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub tree: Tree,
    pub edge_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("spine is not a path of the tree")]
    InvalidSpine,
    #[error("spine position {index} has no successor")]
    NoSuccessor { index: usize },
    #[error("no branches hang at spine position {index}")]
    EmptyBranch { index: usize },
    #[error("edge shift needs a pendant at v_k (b >= 1)")]
    NothingToShift,
    #[error("edge shift applies to double star paths only")]
    NotDoubleStarPath,
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: Vertex, v: Vertex },
    #[error("transformation requires both sides >= 2 (split {0}|{1})")]
    PendantEdge(usize, usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn rebuild(t: &Tree, edges: Vec<[Vertex; 2]>) -> Tree {
    Tree::new(t.order(), edges).expect("rewiring keeps a tree")
}

/// Moves every branch hanging at `spine[from]` (0-based) to `spine[from + 1]`.
/// Edge indices are preserved, so the bijection is the identity.
pub fn branch_shift(t: &Tree, spine: &[Vertex], from: usize) -> Result<Transformed, TransformError> {
    let on_spine = spine_mask(t, spine)?;
    if from + 1 >= spine.len() {
        return Err(TransformError::NoSuccessor { index: from });
    }
    let (vt, next) = (spine[from], spine[from + 1]);
    let mut moved = false;
    let edges = t
        .edges()
        .iter()
        .map(|&[a, b]| {
            if a == vt && !on_spine[b] {
                moved = true;
                [next, b]
            } else if b == vt && !on_spine[a] {
                moved = true;
                [a, next]
            } else {
                [a, b]
            }
        })
        .collect();
    if !moved {
        return Err(TransformError::EmptyBranch { index: from });
    }
    Ok(Transformed { tree: rebuild(t, edges), edge_map: (0..t.order() - 1).collect() })
}

fn spine_mask(t: &Tree, spine: &[Vertex]) -> Result<Vec<bool>, TransformError> {
    let mut mask = vec![false; t.order()];
    for &v in spine {
        if v >= t.order() || mask[v] {
            return Err(TransformError::InvalidSpine);
        }
        mask[v] = true;
    }
    if spine.is_empty() || spine.windows(2).any(|w| t.edge_index(w[0], w[1]).is_none()) {
        return Err(TransformError::InvalidSpine);
    }
    Ok(mask)
}

/// Result of [`edge_shift`]: the new parameters and the rewired tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeShift {
    pub before: Tree,
    pub after: FamilyParams,
    pub transformed: Transformed,
}

/// Moves one pendant from `v_k` to `v_1` of `CP_{n;a,b}`, giving
/// `CP_{n;a+1,b-1}`.
///
/// The bijection sends pendant edges to themselves, `v_1 v_2` to
/// `v_{k-1} v_k`, and `v_j v_{j+1}` to `v_{j-1} v_j` otherwise.
pub fn edge_shift(p: &FamilyParams) -> Result<EdgeShift, TransformError> {
    let FamilyParams::DoubleStarPath { n, a, b, k } = *p else {
        return Err(TransformError::NotDoubleStarPath);
    };
    p.validate()?;
    if b == 0 {
        return Err(TransformError::NothingToShift);
    }
    let before = p.construct()?;
    // first pendant of v_k, and its edge index (spine edges come first)
    let x = k + a;
    let moved = (k - 1) + a;
    let mut edges = before.edges().to_vec();
    edges[moved] = [0, x];
    let spine_edges = k - 1;
    let edge_map = (0..n - 1)
        .map(|i| match i {
            0 if spine_edges >= 1 => spine_edges - 1,
            i if i < spine_edges => i - 1,
            i => i,
        })
        .collect();
    let tree = rebuild(&before, edges);
    Ok(EdgeShift {
        before,
        after: FamilyParams::DoubleStarPath { n, a: a + 1, b: b - 1, k },
        transformed: Transformed { tree, edge_map },
    })
}

/// Contracts `uv` into `u` and hangs `v` back on `u` as a pendant. Both sides
/// of `uv` must have at least two vertices. Edge indices are preserved.
pub fn edge_move(t: &Tree, u: Vertex, v: Vertex) -> Result<Transformed, TransformError> {
    if u >= t.order() || v >= t.order() {
        return Err(TransformError::NotAnEdge { u, v });
    }
    let e = t.edge_index(u, v).ok_or(TransformError::NotAnEdge { u, v })?;
    let (nu, nv) = crate::division::edge_mu(t).split(e);
    let (nu, nv) = if t.edge(e)[0] == u { (nu, nv) } else { (nv, nu) };
    if nu < 2 || nv < 2 {
        return Err(TransformError::PendantEdge(nu, nv));
    }
    let edges = t
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &[a, b])| {
            if i == e {
                [a, b]
            } else if a == v {
                [u, b]
            } else if b == v {
                [a, u]
            } else {
                [a, b]
            }
        })
        .collect();
    Ok(Transformed { tree: rebuild(t, edges), edge_map: (0..t.order() - 1).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::division::edge_division_vector;

    fn parse(s: &str) -> FamilyParams {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_round_trips() {
        for s in ["P(5)", "S(6)", "CP(6; 1,0,2)", "DSP(9; 1,3; 5)", "CP(7,4)^2", "SP(7,3)", "BROOM(8,3)"] {
            assert_eq!(parse(s).to_string(), s);
        }
        assert_eq!(parse(" cp ( 7 , 4 ) ^ 3 ").to_string(), "CP(7,4)^2");
    }

    #[test]
    fn grammar_errors_carry_columns() {
        let e = "CP(7; 1,x)".parse::<FamilyParams>().unwrap_err();
        assert_eq!(e.column, 9);
        let e = "Q(3)".parse::<FamilyParams>().unwrap_err();
        assert_eq!(e.column, 1);
        assert!("CP(7; 1,0,1)".parse::<FamilyParams>().unwrap_err().message.contains("must equal n"));
        assert!("P(3) x".parse::<FamilyParams>().is_err());
    }

    #[test]
    fn parameter_constraints() {
        assert!(matches!(
            FamilyParams::BalancedStarlike { n: 5, q: 2 }.validate(),
            Err(FamilyError::LegCount { .. })
        ));
        assert!(matches!(
            FamilyParams::Broom { n: 5, max_degree: 5 }.validate(),
            Err(FamilyError::BroomDegree { .. })
        ));
        assert!(matches!(
            FamilyParams::SingleClusterCaterpillar { n: 5, k: 3, s: 4 }.validate(),
            Err(FamilyError::ClusterPosition { .. })
        ));
        assert!(matches!(
            FamilyParams::DoubleStarPath { n: 6, a: 2, b: 2, k: 3 }.validate(),
            Err(FamilyError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn single_cluster_shape() {
        let t = parse("CP(7,4)^2").construct().unwrap();
        assert_eq!(t.order(), 7);
        assert_eq!(t.degree(1), 5);
        assert_eq!(edge_division_vector(&t).counts(), &[5, 1, 0]);
        assert_eq!(FamilyParams::single_cluster(9, 6, 5), FamilyParams::single_cluster(9, 6, 2));
    }

    #[test]
    fn starlike_legs() {
        let t = parse("SP(7,3)").construct().unwrap();
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.profile().diameter, 4);
        let uneven = parse("SP(8,3)").construct().unwrap();
        let mut legs: Vec<usize> = uneven.distances_from(0).into_iter().filter(|_| true).collect();
        legs.sort_unstable();
        assert_eq!(*legs.last().unwrap(), 3);
    }

    #[test]
    fn normalization_collapses_degenerate_members() {
        assert_eq!(parse("CP(6,2)^1").normalized().unwrap(), FamilyParams::Star { n: 6 });
        assert_eq!(parse("DSP(6; 1,1; 4)").normalized().unwrap(), FamilyParams::Path { n: 6 });
        assert_eq!(parse("BROOM(6,5)").normalized().unwrap(), FamilyParams::Star { n: 6 });
        assert_eq!(parse("CP(7,4)^3").normalized().unwrap(), parse("CP(7,4)^2"));
    }

    #[test]
    fn branch_shift_moves_whole_branch() {
        let t = parse("CP(6; 1,2,0)").construct().unwrap();
        let out = branch_shift(&t, &[0, 1, 2], 1).unwrap();
        assert!(out.tree.is_isomorphic(&parse("CP(6; 1,0,2)").construct().unwrap()));
        assert_eq!(branch_shift(&t, &[0, 1, 2], 2).unwrap_err(), TransformError::NoSuccessor { index: 2 });
        assert_eq!(
            branch_shift(&out.tree, &[0, 1, 2], 1).unwrap_err(),
            TransformError::EmptyBranch { index: 1 }
        );
        assert_eq!(branch_shift(&t, &[0, 2], 0).unwrap_err(), TransformError::InvalidSpine);
    }

    #[test]
    fn edge_shift_rewires_one_pendant() {
        let shift = edge_shift(&parse("DSP(9; 1,3; 5)")).unwrap();
        assert_eq!(shift.after, parse("DSP(9; 2,2; 5)"));
        assert!(shift.transformed.tree.is_isomorphic(&shift.after.construct().unwrap()));
        let shift = edge_shift(&parse("DSP(8; 2,2; 4)")).unwrap();
        assert_eq!(shift.after, parse("DSP(8; 3,1; 4)"));
        assert_eq!(
            edge_shift(&parse("DSP(6; 2,0; 4)")).unwrap_err(),
            TransformError::NothingToShift
        );
    }

    #[test]
    fn edge_move_on_p4_gives_star() {
        let out = edge_move(&Tree::path(4), 1, 2).unwrap();
        assert!(out.tree.is_isomorphic(&Tree::star(4)));
        assert!(matches!(edge_move(&Tree::path(4), 0, 1), Err(TransformError::PendantEdge(1, 3))));
        assert!(matches!(edge_move(&Tree::path(4), 0, 2), Err(TransformError::NotAnEdge { .. })));
    }

    #[test]
    fn edge_move_on_starlike_shortens_a_leg() {
        let t = parse("SP(7,3)").construct().unwrap();
        // legs are 0-1-2, 0-3-4, 0-5-6; move along 0-1
        let out = edge_move(&t, 0, 1).unwrap();
        assert_eq!(out.tree.degree(0), 4);
        assert_eq!(out.tree.profile().pendant_count, 4);
    }
}
