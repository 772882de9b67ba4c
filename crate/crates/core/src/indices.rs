//! Edge-additive indices `F(T) = sum_e f(mu(e))`, evaluated from the edge
//! division vector as `sum_i r_i f(i)`.
//!
//! Integer-valued indices use big integers, the hyper-Wiener edge form uses
//! big rationals and the parametrised or square-root indices use `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::division::{edge_division_vector, EdgeDivisionVector};
use crate::families::FamilyParams;
use crate::tree::Tree;

/// Relative tolerance for comparing floating index values.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexSpec {
    Wiener,
    ModifiedWiener { lambda: f64 },
    VariableWiener { lambda: f64 },
    SteinerWiener { k: usize },
    HyperWienerEdge,
    WienerHosoya,
    DegreeDistance,
    Gutman,
    Abc2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    ExactInteger,
    ExactRational,
    Floating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MonotoneClass {
    Increasing,
    Decreasing,
    Neither,
}

impl fmt::Display for MonotoneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonotoneClass::Increasing => "Increasing",
            MonotoneClass::Decreasing => "Decreasing",
            MonotoneClass::Neither => "Neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("Steiner k-Wiener needs 2 <= k <= n (k={k}, n={n})")]
    SteinerOrder { k: usize, n: usize },
    #[error("lambda must be finite")]
    NonFiniteLambda,
    #[error("unknown index '{0}'")]
    UnknownIndex(String),
    #[error("bad parameter for '{name}': {reason}")]
    BadParameter { name: String, reason: String },
}

/// A numeric index value.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Integer(BigInt),
    Rational(BigRational),
    Float(f64),
}

impl IndexValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Integer(v) => v.to_f64().unwrap_or(f64::NAN),
            IndexValue::Rational(v) => v.to_f64().unwrap_or(f64::NAN),
            IndexValue::Float(v) => *v,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            IndexValue::Integer(v) => Some(v.clone()),
            IndexValue::Rational(v) if v.is_integer() => Some(v.to_integer()),
            _ => None,
        }
    }

    /// Exact comparison for exact values; floats (on either side) compare
    /// equal within `tolerance` relative to the larger magnitude.
    pub fn compare(&self, other: &IndexValue, tolerance: f64) -> Ordering {
        match (self, other) {
            (IndexValue::Float(_), _) | (_, IndexValue::Float(_)) => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if approx_eq(a, b, tolerance) {
                    Ordering::Equal
                } else {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                }
            }
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }

    fn to_rational(&self) -> BigRational {
        match self {
            IndexValue::Integer(v) => BigRational::from_integer(v.clone()),
            IndexValue::Rational(v) => v.clone(),
            IndexValue::Float(_) => unreachable!("floats are compared numerically"),
        }
    }
}

pub fn approx_eq(a: f64, b: f64, tolerance: f64) -> bool {
    let scale = a.abs().max(b.abs()).max(1.0);
    (a - b).abs() <= tolerance * scale
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Integer(v) => write!(f, "{v}"),
            IndexValue::Rational(v) if v.is_integer() => write!(f, "{}", v.to_integer()),
            IndexValue::Rational(v) => write!(f, "{}/{}", v.numer(), v.denom()),
            IndexValue::Float(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexValue::Float(v) => s.serialize_f64(*v),
            other => match other.as_integer().and_then(|v| v.to_i64()) {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&other.to_string()),
            },
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl IndexSpec {
    pub fn value_kind(&self) -> ValueKind {
        match self {
            IndexSpec::HyperWienerEdge => ValueKind::ExactRational,
            IndexSpec::ModifiedWiener { .. } | IndexSpec::VariableWiener { .. } | IndexSpec::Abc2 => {
                ValueKind::Floating
            }
            _ => ValueKind::ExactInteger,
        }
    }

    pub fn check(&self, n: usize) -> Result<(), IndexError> {
        match *self {
            IndexSpec::SteinerWiener { k } if k < 2 || k > n => Err(IndexError::SteinerOrder { k, n }),
            IndexSpec::ModifiedWiener { lambda } | IndexSpec::VariableWiener { lambda }
                if !lambda.is_finite() =>
            {
                Err(IndexError::NonFiniteLambda)
            }
            _ => Ok(()),
        }
    }

    /// `f(x)` for an edge splitting an order-`n` tree into `x` and `n - x`.
    pub fn contribution(&self, x: usize, n: usize) -> IndexValue {
        debug_assert!(x >= 1 && x < n);
        let y = n - x;
        let w = BigInt::from(x) * BigInt::from(y);
        match *self {
            IndexSpec::Wiener => IndexValue::Integer(w),
            IndexSpec::WienerHosoya => {
                IndexValue::Integer(w + BigInt::from(x - 1) * BigInt::from(y - 1))
            }
            IndexSpec::DegreeDistance => IndexValue::Integer(w * 4 - n),
            IndexSpec::Gutman => IndexValue::Integer(w * 4 - (2 * n - 1)),
            IndexSpec::SteinerWiener { k } => {
                IndexValue::Integer(binomial(n, k) - binomial(x, k) - binomial(y, k))
            }
            IndexSpec::HyperWienerEdge => {
                let w = BigRational::from_integer(w);
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                IndexValue::Rational(&half * &w + &half * &w * &w)
            }
            IndexSpec::ModifiedWiener { lambda } => IndexValue::Float(((x * y) as f64).powf(lambda)),
            IndexSpec::VariableWiener { lambda } => IndexValue::Float(
                (n as f64).powf(lambda) - (x as f64).powf(lambda) - (y as f64).powf(lambda),
            ),
            IndexSpec::Abc2 => {
                if n <= 2 {
                    IndexValue::Float(0.0)
                } else {
                    IndexValue::Float(((n - 2) as f64 / (x * y) as f64).sqrt())
                }
            }
        }
    }

    /// The type the literature assigns to the contribution function. The
    /// variable Wiener entry for `lambda < 0` disagrees with the numeric
    /// class; see [`monotone_class`].
    pub fn declared_class(&self) -> MonotoneClass {
        match *self {
            IndexSpec::Abc2 => MonotoneClass::Decreasing,
            IndexSpec::ModifiedWiener { lambda } if lambda < 0.0 => MonotoneClass::Decreasing,
            IndexSpec::ModifiedWiener { lambda: 0.0 } => MonotoneClass::Neither,
            IndexSpec::VariableWiener { lambda } if lambda < 1.0 => MonotoneClass::Decreasing,
            IndexSpec::VariableWiener { lambda: 1.0 } => MonotoneClass::Neither,
            _ => MonotoneClass::Increasing,
        }
    }

    /// Every index with a fixed parameter set used by the test harnesses.
    pub fn standard_set() -> Vec<IndexSpec> {
        let mut out = vec![
            IndexSpec::Wiener,
            IndexSpec::HyperWienerEdge,
            IndexSpec::WienerHosoya,
            IndexSpec::DegreeDistance,
            IndexSpec::Gutman,
            IndexSpec::Abc2,
        ];
        for lambda in [-2.0, -1.0, -0.5, 0.5, 2.0] {
            out.push(IndexSpec::ModifiedWiener { lambda });
        }
        for lambda in [-1.0, 0.5, 2.0] {
            out.push(IndexSpec::VariableWiener { lambda });
        }
        for k in [2, 3, 4] {
            out.push(IndexSpec::SteinerWiener { k });
        }
        out
    }
}

impl fmt::Display for IndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSpec::Wiener => f.write_str("wiener"),
            IndexSpec::ModifiedWiener { lambda } => write!(f, "mwiener:{lambda}"),
            IndexSpec::VariableWiener { lambda } => write!(f, "vwiener:{lambda}"),
            IndexSpec::SteinerWiener { k } => write!(f, "steiner:{k}"),
            IndexSpec::HyperWienerEdge => f.write_str("hyperwiener-edge"),
            IndexSpec::WienerHosoya => f.write_str("wiener-hosoya"),
            IndexSpec::DegreeDistance => f.write_str("degree-distance"),
            IndexSpec::Gutman => f.write_str("gutman"),
            IndexSpec::Abc2 => f.write_str("abc2"),
        }
    }
}

/// `sum_i r_i f(i)`.
pub fn index_from_vector(r: &EdgeDivisionVector, spec: &IndexSpec) -> Result<IndexValue, IndexError> {
    let n = r.order();
    spec.check(n)?;
    let terms = r.counts().iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i + 1, c));
    Ok(match spec.value_kind() {
        ValueKind::Floating => IndexValue::Float(
            terms
                .map(|(x, c)| c as f64 * spec.contribution(x, n).to_f64())
                .sum(),
        ),
        ValueKind::ExactInteger => IndexValue::Integer(
            terms
                .map(|(x, c)| match spec.contribution(x, n) {
                    IndexValue::Integer(v) => v * c,
                    _ => unreachable!(),
                })
                .sum(),
        ),
        ValueKind::ExactRational => IndexValue::Rational(terms.fold(BigRational::zero(), |acc, (x, c)| {
            match spec.contribution(x, n) {
                IndexValue::Rational(v) => acc + v * BigRational::from_integer(BigInt::from(c)),
                _ => unreachable!(),
            }
        })),
    })
}

pub fn index_value(t: &Tree, spec: &IndexSpec) -> Result<IndexValue, IndexError> {
    index_from_vector(&edge_division_vector(t), spec)
}

/// Numeric class of `f` on `1..=floor(n/2)`: strictly increasing, strictly
/// decreasing, or neither. Float values within [`FLOAT_TOLERANCE`] count as
/// ties.
pub fn monotone_class(spec: &IndexSpec, n: usize) -> MonotoneClass {
    let values: Vec<IndexValue> = (1..=n / 2).map(|x| spec.contribution(x, n)).collect();
    if values.len() < 2 {
        return MonotoneClass::Neither;
    }
    let steps: Vec<Ordering> =
        values.windows(2).map(|w| w[0].compare(&w[1], FLOAT_TOLERANCE)).collect();
    if steps.iter().all(|&o| o == Ordering::Less) {
        MonotoneClass::Increasing
    } else if steps.iter().all(|&o| o == Ordering::Greater) {
        MonotoneClass::Decreasing
    } else {
        MonotoneClass::Neither
    }
}

fn all_distances(t: &Tree) -> Vec<Vec<usize>> {
    (0..t.order()).map(|v| t.distances_from(v)).collect()
}

/// Sum of distances over unordered vertex pairs, by breadth-first search.
pub fn wiener_bruteforce(t: &Tree) -> u64 {
    let d = all_distances(t);
    let n = t.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).map(|(u, v)| d[u][v] as u64).sum()
}

/// Pair-sum definitions, computed without the edge machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairwiseIndex {
    /// `sum (d + d^2) / 2`
    HyperWiener,
    /// `sum (deg u + deg v) d`
    DegreeDistance,
    /// `sum deg u deg v d`
    Gutman,
}

impl fmt::Display for PairwiseIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairwiseIndex::HyperWiener => "hyperwiener-pairwise",
            PairwiseIndex::DegreeDistance => "degree-distance-pairwise",
            PairwiseIndex::Gutman => "gutman-pairwise",
        })
    }
}

pub fn pairwise_index_oracle(t: &Tree, kind: PairwiseIndex) -> BigInt {
    let d = all_distances(t);
    let deg = t.degrees();
    let n = t.order();
    let mut total = BigInt::zero();
    for u in 0..n {
        for v in u + 1..n {
            let duv = d[u][v] as u64;
            total += match kind {
                PairwiseIndex::HyperWiener => (duv + duv * duv) / 2,
                PairwiseIndex::DegreeDistance => (deg[u] + deg[v]) as u64 * duv,
                PairwiseIndex::Gutman => (deg[u] * deg[v]) as u64 * duv,
            };
        }
    }
    total
}

/// Sum of Steiner distances over all `k`-subsets. Each subset's Steiner tree
/// is found by repeatedly deleting leaves outside the subset.
pub fn steiner_wiener_bruteforce(t: &Tree, k: usize) -> BigInt {
    let n = t.order();
    let mut total = BigInt::zero();
    let mut subset: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return total;
    }
    loop {
        total += steiner_size(t, &subset);
        // next combination in lexicographic order
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return total;
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn steiner_size(t: &Tree, subset: &[usize]) -> usize {
    let n = t.order();
    let mut keep = vec![false; n];
    for &v in subset {
        keep[v] = true;
    }
    let mut deg = t.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1 && !keep[v]).collect();
    let mut remaining = n;
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in t.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !keep[w] {
                    stack.push(w);
                }
            }
        }
    }
    remaining.saturating_sub(1)
}

/// An index named on the command line: edge-additive or pair-sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexSelector {
    Edge(IndexSpec),
    Pairwise(PairwiseIndex),
}

impl IndexSelector {
    pub fn evaluate(&self, t: &Tree) -> Result<IndexValue, IndexError> {
        match self {
            IndexSelector::Edge(spec) => index_value(t, spec),
            IndexSelector::Pairwise(kind) => Ok(IndexValue::Integer(pairwise_index_oracle(t, *kind))),
        }
    }
}

impl fmt::Display for IndexSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSelector::Edge(spec) => spec.fmt(f),
            IndexSelector::Pairwise(kind) => kind.fmt(f),
        }
    }
}

impl FromStr for IndexSelector {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a.trim().to_ascii_lowercase(), Some(b.trim())),
            None => (s.to_ascii_lowercase(), None),
        };
        let bad = |reason: &str| IndexError::BadParameter { name: name.clone(), reason: reason.into() };
        let lambda = || -> Result<f64, IndexError> {
            let v: f64 = param
                .ok_or_else(|| bad("expected ':<lambda>'"))?
                .parse()
                .map_err(|_| bad("lambda is not a number"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(IndexError::NonFiniteLambda)
            }
        };
        let selector = match name.as_str() {
            "mwiener" => return Ok(IndexSelector::Edge(IndexSpec::ModifiedWiener { lambda: lambda()? })),
            "vwiener" => return Ok(IndexSelector::Edge(IndexSpec::VariableWiener { lambda: lambda()? })),
            "steiner" => {
                let k = param
                    .ok_or_else(|| bad("expected ':<k>'"))?
                    .parse()
                    .map_err(|_| bad("k is not a non-negative integer"))?;
                if k < 2 {
                    return Err(IndexError::SteinerOrder { k, n: 0 });
                }
                return Ok(IndexSelector::Edge(IndexSpec::SteinerWiener { k }));
            }
            "wiener" => IndexSelector::Edge(IndexSpec::Wiener),
            "hyperwiener-edge" => IndexSelector::Edge(IndexSpec::HyperWienerEdge),
            "hyperwiener-pairwise" => IndexSelector::Pairwise(PairwiseIndex::HyperWiener),
            "wiener-hosoya" => IndexSelector::Edge(IndexSpec::WienerHosoya),
            "degree-distance" => IndexSelector::Edge(IndexSpec::DegreeDistance),
            "degree-distance-pairwise" => IndexSelector::Pairwise(PairwiseIndex::DegreeDistance),
            "gutman" => IndexSelector::Edge(IndexSpec::Gutman),
            "gutman-pairwise" => IndexSelector::Pairwise(PairwiseIndex::Gutman),
            "abc2" => IndexSelector::Edge(IndexSpec::Abc2),
            _ => return Err(IndexError::UnknownIndex(s.to_string())),
        };
        if param.is_some() {
            return Err(bad("takes no parameter"));
        }
        Ok(selector)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("no closed form for {0}")]
    Unsupported(String),
    #[error("closed form evaluated to a non-integer for {0}")]
    NonIntegral(String),
}

/// Which branch of the broom formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BroomCase {
    /// `Δ` away from the middle values. The published condition for this
    /// branch reads `Δ < floor(n/2)` and `Δ > ceil(n/2)`, which no `Δ`
    /// satisfies; the formula is applied to every `Δ` not covered below.
    OffCenter,
    /// `n` even, `Δ = n/2`.
    EvenHalf,
    /// `n` odd, `Δ = floor(n/2)`.
    OddFloor,
    /// `n` odd, `Δ = ceil(n/2)`.
    OddCeil,
}

pub fn broom_case(n: usize, max_degree: usize) -> BroomCase {
    match (n % 2, max_degree) {
        (0, d) if n >= 4 && d == n / 2 => BroomCase::EvenHalf,
        (1, d) if n >= 5 && d == n / 2 => BroomCase::OddFloor,
        (1, d) if n >= 5 && d == n / 2 + 1 => BroomCase::OddCeil,
        _ => BroomCase::OffCenter,
    }
}

type Q = Ratio<i128>;

fn q(num: i128, den: i128) -> Q {
    Q::new(num, den)
}

fn integral(v: Q, what: &dyn fmt::Display) -> Result<i128, ClosedFormError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(ClosedFormError::NonIntegral(what.to_string()))
    }
}

/// `W(CP^{ceil(k/2)}_{n,k})`, the least Wiener index over caterpillars on
/// spine `P_k`.
pub fn caterpillar_min_wiener(n: usize, k: usize) -> Q {
    let (n, k) = (Q::from(n as i128), Q::from(k as i128));
    let common = -k * k * k * q(1, 12) + n * k * k * q(1, 4) - k * n + n * n;
    if k.to_integer() % 2 == 1 {
        common + k * q(13, 12) - n * q(5, 4)
    } else {
        common + k * q(5, 6) - n
    }
}

/// `W(CP_{n; floor((n-k)/2), ceil((n-k)/2)})`, the greatest Wiener index over
/// caterpillars on spine `P_k`.
pub fn caterpillar_max_wiener(n: usize, k: usize) -> Q {
    let odd = (n - k) % 2 == 1;
    let (n, k) = (Q::from(n as i128), Q::from(k as i128));
    let common = -k * k * k * q(1, 12) + k * k * q(1, 4) + k * n * n * q(1, 4) - k * n
        + n * n * q(3, 4)
        - n;
    if odd {
        common + k * q(7, 12) + q(1, 4)
    } else {
        common + k * q(5, 6)
    }
}

/// `W(SP_{n,q})`, with `n - 1 = sq + r`.
pub fn starlike_min_wiener(n: usize, legs: usize) -> Q {
    let (s, r) = (((n - 1) / legs) as i128, ((n - 1) % legs) as i128);
    let (qq, s, r) = (Q::from(legs as i128), Q::from(s), Q::from(r));
    (qq * 3 - 2) * q(1, 6) * qq * s * s * s
        + (qq * qq * q(1, 2) + qq * r * q(3, 2) - r) * s * s
        + (r * r + qq * r * q(3, 2) + qq * q(1, 3) - r) * s
        + r * r
}

/// `W(CP_{n; floor(q/2), ceil(q/2)})` on spine `P_{n-q}`.
pub fn pendant_max_wiener(n: usize, legs: usize) -> Q {
    let odd = legs % 2 == 1;
    let (n, qq) = (Q::from(n as i128), Q::from(legs as i128));
    let common = n * n * n * q(1, 6) - n * qq * qq * q(1, 4) + n * qq * q(1, 2)
        + qq * qq * qq * q(1, 12)
        + qq * qq * q(1, 4);
    if odd {
        common - n * q(5, 12) - qq * q(7, 12) + q(1, 4)
    } else {
        common - n * q(1, 6) - qq * q(5, 6)
    }
}

/// `W(CP_{n;1,Δ-1})`.
pub fn broom_wiener(n: usize, max_degree: usize) -> Q {
    let (nn, d) = (Q::from(n as i128), Q::from(max_degree as i128));
    match broom_case(n, max_degree) {
        BroomCase::OffCenter => {
            d * d * d * q(1, 3) - (nn + 1) * q(1, 2) * d * d + (nn * 9 - 5) * q(1, 6) * d
                + nn * nn * nn * q(1, 6)
                - nn * q(7, 6)
                + 1
        }
        BroomCase::EvenHalf => nn * nn * nn * q(1, 12) + nn * nn * q(5, 8) - nn * q(19, 12) + 1,
        BroomCase::OddFloor => {
            nn * nn * nn * q(1, 12) + nn * nn * q(3, 4) - nn * q(25, 12) + q(5, 4)
        }
        BroomCase::OddCeil => nn * nn * nn * q(1, 12) + nn * nn * q(1, 2) - nn * q(13, 12) + q(1, 2),
    }
}

/// Closed-form Wiener index for the extremal families that have one.
pub fn closed_form_wiener(p: &FamilyParams) -> Result<i128, ClosedFormError> {
    p.validate().map_err(|e| ClosedFormError::Unsupported(format!("{p}: {e}")))?;
    let value = match *p {
        FamilyParams::SingleClusterCaterpillar { n, k, s } if k >= 2 && s == k.div_ceil(2) => {
            caterpillar_min_wiener(n, k)
        }
        FamilyParams::DoubleStarPath { n, a, b, k } if a == (n - k) / 2 && b == n - k - a => {
            caterpillar_max_wiener(n, k)
        }
        FamilyParams::BalancedStarlike { n, q } => starlike_min_wiener(n, q),
        FamilyParams::Broom { n, max_degree } => broom_wiener(n, max_degree),
        _ => return Err(ClosedFormError::Unsupported(p.to_string())),
    };
    integral(value, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Tree {
        s.parse::<FamilyParams>().unwrap().construct().unwrap()
    }

    fn int(v: i64) -> IndexValue {
        IndexValue::Integer(BigInt::from(v))
    }

    #[test]
    fn small_values() {
        assert_eq!(index_value(&fam("CP(7,4)^2"), &IndexSpec::Wiener).unwrap(), int(40));
        assert_eq!(index_value(&Tree::path(5), &IndexSpec::Wiener).unwrap(), int(20));
        assert_eq!(index_value(&Tree::path(3), &IndexSpec::Gutman).unwrap(), int(6));
        assert_eq!(index_value(&Tree::path(3), &IndexSpec::DegreeDistance).unwrap(), int(10));
        let abc = index_value(&Tree::star(4), &IndexSpec::Abc2).unwrap().to_f64();
        assert!((abc - 3.0 * (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn oracles() {
        assert_eq!(wiener_bruteforce(&Tree::path(5)), 20);
        assert_eq!(wiener_bruteforce(&Tree::star(6)), 25);
        assert_eq!(wiener_bruteforce(&fam("SP(7,3)")), 48);
        assert_eq!(pairwise_index_oracle(&Tree::path(4), PairwiseIndex::HyperWiener), BigInt::from(15));
        assert_eq!(pairwise_index_oracle(&Tree::path(3), PairwiseIndex::DegreeDistance), BigInt::from(10));
        assert_eq!(pairwise_index_oracle(&Tree::path(3), PairwiseIndex::Gutman), BigInt::from(6));
    }

    #[test]
    fn hyper_wiener_forms_diverge_on_p4() {
        assert_eq!(index_value(&Tree::path(4), &IndexSpec::HyperWienerEdge).unwrap().to_string(), "22");
    }

    #[test]
    fn steiner_matches_subset_sum() {
        let t = fam("CP(8; 2,0,3)");
        for k in 2..=8 {
            let edge = index_value(&t, &IndexSpec::SteinerWiener { k }).unwrap();
            assert_eq!(edge.as_integer().unwrap(), steiner_wiener_bruteforce(&t, k), "k={k}");
        }
        assert_eq!(
            index_value(&t, &IndexSpec::SteinerWiener { k: 9 }),
            Err(IndexError::SteinerOrder { k: 9, n: 8 })
        );
    }

    #[test]
    fn monotone_classes() {
        assert_eq!(monotone_class(&IndexSpec::Wiener, 10), MonotoneClass::Increasing);
        assert_eq!(monotone_class(&IndexSpec::Abc2, 10), MonotoneClass::Decreasing);
        assert_eq!(monotone_class(&IndexSpec::VariableWiener { lambda: 1.0 }, 10), MonotoneClass::Neither);
        assert_eq!(monotone_class(&IndexSpec::VariableWiener { lambda: 0.5 }, 10), MonotoneClass::Decreasing);
        assert_eq!(monotone_class(&IndexSpec::VariableWiener { lambda: -1.0 }, 10), MonotoneClass::Increasing);
        assert_eq!(monotone_class(&IndexSpec::SteinerWiener { k: 5 }, 5), MonotoneClass::Neither);
    }

    #[test]
    fn selector_names_round_trip() {
        for s in [
            "wiener", "mwiener:0.5", "vwiener:-1", "steiner:3", "hyperwiener-edge", "hyperwiener-pairwise",
            "wiener-hosoya", "degree-distance", "gutman", "abc2",
        ] {
            assert_eq!(s.parse::<IndexSelector>().unwrap().to_string(), s);
        }
        assert!("mwiener".parse::<IndexSelector>().is_err());
        assert!("mwiener:inf".parse::<IndexSelector>().is_err());
        assert!("wiener:2".parse::<IndexSelector>().is_err());
        assert!("steiner:1".parse::<IndexSelector>().is_err());
        assert!("randic".parse::<IndexSelector>().is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_wiener(&"CP(7,4)^2".parse().unwrap()), Ok(40));
        assert_eq!(closed_form_wiener(&FamilyParams::caterpillar_max(7, 4)), Ok(52));
        assert_eq!(closed_form_wiener(&"SP(7,3)".parse().unwrap()), Ok(48));
        assert!(closed_form_wiener(&"P(5)".parse().unwrap()).is_err());
    }

    #[test]
    fn broom_cases() {
        assert_eq!(broom_case(10, 5), BroomCase::EvenHalf);
        assert_eq!(broom_case(11, 5), BroomCase::OddFloor);
        assert_eq!(broom_case(11, 6), BroomCase::OddCeil);
        assert_eq!(broom_case(11, 3), BroomCase::OffCenter);
    }
}
