//! Exhaustive verification of the order-theoretic claims at small orders.
//!
//! Every check produces a [`VerificationReport`]. Failures are data: each one
//! carries the canonical code and edge division vector of the offending tree
//! so it can be replayed from the command line.

mod chains;
mod equivalence;
mod extremal;
mod index_claims;
mod open;
mod structure;
mod table4;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::division::{edge_division_vector, EdgeDivisionVector};
use crate::enumeration::{map_trees, EnumerationError, FreeTrees};
use crate::indices::{IndexError, IndexSelector, FLOAT_TOLERANCE};
use crate::tree::{CanonicalCode, Tree};

pub use equivalence::{equivalent_nonisomorphic, reference_pair, EquivalentPair};
pub use table4::{table4_rows, Table4Row, PUBLISHED_TABLE4};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Empirical,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Empirical => "empirical",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub tree: String,
    pub vector: String,
    pub expected: String,
    pub observed: String,
}

impl Failure {
    pub fn for_tree(t: &Tree, expected: impl Into<String>, observed: impl Into<String>) -> Self {
        Failure {
            tree: t.canonical_code().to_string(),
            vector: edge_division_vector(t).to_string(),
            expected: expected.into(),
            observed: observed.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub universe: String,
    pub status: Status,
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub runtime_seconds: f64,
}

impl VerificationReport {
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]: {}", self.claim_id, self.universe, self.status)?;
        writeln!(f, "  checked {}, passed {}, failed {}", self.checked, self.passed, self.failures.len())?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for fail in &self.failures {
            writeln!(
                f,
                "  FAIL {} r={} expected {} observed {}",
                fail.tree, fail.vector, fail.expected, fail.observed
            )?;
        }
        write!(f, "  runtime {:.3}s", self.runtime_seconds)
    }
}

/// Accumulates check outcomes; `finish` sorts failures so reports are
/// independent of evaluation order.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(failure());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(mut self, claim_id: &str, universe: String, empirical: bool, started: Instant) -> VerificationReport {
        self.failures.sort();
        self.failures.dedup();
        let status = if empirical {
            Status::Empirical
        } else if !self.failures.is_empty() {
            Status::Fail
        } else if self.checked == 0 {
            Status::NotApplicable
        } else {
            Status::Pass
        };
        VerificationReport {
            claim_id: claim_id.to_string(),
            universe,
            status,
            checked: self.checked,
            passed: self.passed,
            failures: self.failures,
            notes: self.notes,
            runtime_seconds: started.elapsed().as_secs_f64(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Smallest order swept; claims raise it to their own minimum.
    pub n_min: usize,
    /// Largest order swept; `None` uses the claim's default.
    pub n_max: Option<usize>,
    /// Enumeration cap for claims that sweep all trees of an order.
    pub cap: usize,
    pub tolerance: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n_min: 1, n_max: None, cap: crate::enumeration::DEFAULT_CAP, tolerance: FLOAT_TOLERANCE }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// A tree of the sweep with its derived data.
#[derive(Debug, Clone)]
pub(crate) struct Record {
    pub tree: Tree,
    pub code: CanonicalCode,
    pub vector: EdgeDivisionVector,
}

impl Record {
    pub fn new(tree: Tree) -> Self {
        Record {
            code: tree.canonical_code(),
            vector: edge_division_vector(&tree),
            tree,
        }
    }

    pub fn failure(&self, expected: impl Into<String>, observed: impl Into<String>) -> Failure {
        Failure {
            tree: self.code.to_string(),
            vector: self.vector.to_string(),
            expected: expected.into(),
            observed: observed.into(),
        }
    }
}

/// All free trees of order `n` with their vectors, in generation order.
pub(crate) fn catalog(n: usize, cap: usize) -> Result<Vec<Record>, EnumerationError> {
    Ok(map_trees(FreeTrees::with_cap(n, cap)?.trees(), |t| Record::new(t.clone())))
}

/// The claims the harness knows, keyed by stable identifiers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Claim {
    CentroidCount,
    CenterEdges,
    CentroidCenterLink,
    SimilarityCriterion,
    EquivalentPairs,
    EdgeShiftStep,
    EdgeShiftChain,
    CaterpillarMax,
    ClusterShiftStep,
    CaterpillarMin,
    CaterpillarSandwich,
    EdgeMoveStep,
    DiameterMin,
    DiameterChain,
    PathStarBounds,
    PendantMax,
    PendantMin,
    PendantChain,
    MaxDegreeMax,
    BroomChain,
    IndexTransfer(Option<IndexSelector>),
    DeclaredTypes,
    CaterpillarClosedForms,
    PendantClosedForms,
    BroomClosedForms,
    Table4,
    WienerIdentity,
    DegreeDistanceIdentity,
    GutmanIdentity,
    SteinerIdentity,
    ModifiedWienerUnit,
    HyperWienerDivergence,
    EnumerationCount,
    OpenDiameterMax,
    OpenMaxDegreeMin,
}

const NAMED: &[(&str, Claim)] = &[
    ("Lem-2.1", Claim::CentroidCount),
    ("Lem-2.2", Claim::CenterEdges),
    ("Lem-2.3", Claim::CentroidCenterLink),
    ("Lem-3.1", Claim::SimilarityCriterion),
    ("Rem-3.1", Claim::EquivalentPairs),
    ("Lem-4.1", Claim::EdgeShiftStep),
    ("Cor-4.1", Claim::EdgeShiftChain),
    ("Thm-4.1", Claim::CaterpillarMax),
    ("Lem-4.2", Claim::ClusterShiftStep),
    ("Thm-4.2", Claim::CaterpillarMin),
    ("Cor-4.2", Claim::CaterpillarSandwich),
    ("Lem-5.1", Claim::EdgeMoveStep),
    ("Thm-5.1", Claim::DiameterMin),
    ("Cor-5.1", Claim::DiameterChain),
    ("Cor-5.2", Claim::PathStarBounds),
    ("Thm-6.1", Claim::PendantMax),
    ("Thm-6.2", Claim::PendantMin),
    ("Cor-6.1", Claim::PendantChain),
    ("Thm-7.1", Claim::MaxDegreeMax),
    ("Cor-7.1", Claim::BroomChain),
    ("Thm-8.1", Claim::IndexTransfer(None)),
    ("Tab-1", Claim::DeclaredTypes),
    ("Prop-8.1", Claim::CaterpillarClosedForms),
    ("Prop-8.2", Claim::PendantClosedForms),
    ("Prop-8.3", Claim::BroomClosedForms),
    ("Table-4", Claim::Table4),
    ("Id-Wiener", Claim::WienerIdentity),
    ("Id-DegreeDistance", Claim::DegreeDistanceIdentity),
    ("Id-Gutman", Claim::GutmanIdentity),
    ("Id-Steiner", Claim::SteinerIdentity),
    ("Id-ModifiedWiener", Claim::ModifiedWienerUnit),
    ("Div-HW", Claim::HyperWienerDivergence),
    ("Enum-count", Claim::EnumerationCount),
    ("Open-max-diam", Claim::OpenDiameterMax),
    ("Open-min-maxdeg", Claim::OpenMaxDegreeMin),
];

impl Claim {
    /// Every identifier accepted by [`Claim::from_str`], in a stable order.
    pub fn ids() -> impl Iterator<Item = &'static str> {
        NAMED.iter().map(|(id, _)| *id)
    }

    pub fn id(&self) -> String {
        match self {
            Claim::IndexTransfer(Some(sel)) => format!("Thm-8.1:{sel}"),
            other => NAMED.iter().find(|(_, c)| c == other).map(|(id, _)| id.to_string()).unwrap_or_default(),
        }
    }

    /// `(n_min, n_max)` swept when the options leave them open.
    fn default_range(&self) -> (usize, usize) {
        match self {
            Claim::CentroidCount | Claim::CenterEdges | Claim::CentroidCenterLink => (1, 12),
            Claim::SimilarityCriterion => (4, 9),
            Claim::EquivalentPairs => (4, 11),
            Claim::EdgeShiftStep | Claim::ClusterShiftStep | Claim::EdgeMoveStep => (4, 14),
            Claim::EdgeShiftChain | Claim::DiameterChain | Claim::PendantChain | Claim::BroomChain => (4, 14),
            Claim::CaterpillarMax
            | Claim::CaterpillarMin
            | Claim::CaterpillarSandwich
            | Claim::DiameterMin
            | Claim::PathStarBounds
            | Claim::PendantMax
            | Claim::PendantMin
            | Claim::MaxDegreeMax => (4, 12),
            Claim::IndexTransfer(_) => (4, 9),
            Claim::DeclaredTypes => (4, 50),
            Claim::CaterpillarClosedForms | Claim::PendantClosedForms | Claim::BroomClosedForms => (5, 40),
            Claim::Table4 => (5, 11),
            Claim::WienerIdentity
            | Claim::DegreeDistanceIdentity
            | Claim::GutmanIdentity
            | Claim::ModifiedWienerUnit => (1, 12),
            Claim::SteinerIdentity => (2, 10),
            Claim::HyperWienerDivergence => (4, 10),
            Claim::EnumerationCount => (1, 10),
            Claim::OpenDiameterMax | Claim::OpenMaxDegreeMin => (4, 12),
        }
    }

    fn empirical(&self) -> bool {
        matches!(
            self,
            Claim::OpenDiameterMax
                | Claim::OpenMaxDegreeMin
                | Claim::IndexTransfer(Some(IndexSelector::Pairwise(_)))
        )
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("Thm-8.1:") {
            return Ok(Claim::IndexTransfer(Some(rest.parse()?)));
        }
        NAMED
            .iter()
            .find(|(id, _)| id.eq_ignore_ascii_case(s))
            .map(|(_, c)| *c)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Runs one claim over the orders selected by `opts`.
pub fn verify(claim: &Claim, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let (lo, hi) = claim.default_range();
    let n_min = opts.n_min.max(lo);
    let n_max = opts.n_max.unwrap_or(hi);
    let range = n_min..=n_max;
    let sweep = |f: &dyn Fn(&[Record], usize) -> Tally| -> Result<Tally, VerifyError> {
        let mut tally = Tally::default();
        for n in range.clone() {
            tally.merge(f(&catalog(n, opts.cap)?, n));
        }
        Ok(tally)
    };
    let (tally, universe) = match *claim {
        Claim::CentroidCount => (sweep(&structure::centroid_count)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::CenterEdges => (sweep(&structure::center_edges)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::CentroidCenterLink => (sweep(&structure::centroid_center_link)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::SimilarityCriterion => {
            (sweep(&structure::similarity_criterion)?, format!("transformations of all:n, n={n_min}..={n_max}"))
        }
        Claim::EquivalentPairs => (equivalence::verify(range.clone(), opts.cap)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::EdgeShiftStep => (structure::edge_shift_step(range.clone()), format!("DSP(n; a,b; k) with a+2<=b, n={n_min}..={n_max}")),
        Claim::ClusterShiftStep => (structure::cluster_shift_step(range.clone()), format!("CP(n,k)^s with s<k/2, n={n_min}..={n_max}")),
        Claim::EdgeMoveStep => (sweep(&structure::edge_move_step)?, format!("edge moves on all:n, n={n_min}..={n_max}")),
        Claim::EdgeShiftChain => (chains::edge_shift_chain(range.clone()), format!("cat:n:k chains, n={n_min}..={n_max}")),
        Claim::DiameterChain => (chains::diameter_chain(range.clone()), format!("diameter minima, n={n_min}..={n_max}")),
        Claim::PendantChain => (chains::pendant_chain(range.clone()), format!("pendant maxima, n={n_min}..={n_max}")),
        Claim::BroomChain => (chains::broom_chain(range.clone()), format!("brooms, n={n_min}..={n_max}")),
        Claim::CaterpillarMax => (sweep(&extremal::caterpillar_max)?, format!("cat:n:k, 2<=k<=n-1, n={n_min}..={n_max}")),
        Claim::CaterpillarMin => (sweep(&extremal::caterpillar_min)?, format!("cat:n:k, 2<=k<=n-1, n={n_min}..={n_max}")),
        Claim::CaterpillarSandwich => {
            let mut t = sweep(&extremal::caterpillar_min)?;
            t.merge(sweep(&extremal::caterpillar_max)?);
            (t, format!("cat:n:k, 2<=k<=n-1, n={n_min}..={n_max}"))
        }
        Claim::DiameterMin => (sweep(&extremal::diameter_min)?, format!("diam:n:d, 2<=d<=n-1, n={n_min}..={n_max}")),
        Claim::PathStarBounds => (sweep(&extremal::path_star_bounds)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::PendantMax => (sweep(&extremal::pendant_max)?, format!("pend:n:q, 3<=q<=n-2, n={n_min}..={n_max}")),
        Claim::PendantMin => (sweep(&extremal::pendant_min)?, format!("pend:n:q, 3<=q<=n-2, n={n_min}..={n_max}")),
        Claim::MaxDegreeMax => (sweep(&extremal::max_degree_max)?, format!("maxdeg:n:D, 3<=D<=n-2, n={n_min}..={n_max}")),
        Claim::IndexTransfer(sel) => {
            let selectors = match sel {
                Some(s) => vec![s],
                None => crate::indices::IndexSpec::standard_set().into_iter().map(IndexSelector::Edge).collect(),
            };
            let mut tally = Tally::default();
            tally.note(
                "class extremes as built: all (S(n), P(n)); cat:n:k (CP(n,k)^ceil(k/2), DSP(n; floor((n-k)/2),ceil((n-k)/2); k)); \
                 diam:n:d (CP(n,d+1)^ceil((d+1)/2), -); pend:n:q (SP(n,q), DSP(n; floor(q/2),ceil(q/2); n-q)); maxdeg:n:D (-, BROOM(n,D))",
            );
            for n in range.clone() {
                let records = catalog(n, opts.cap)?;
                for s in &selectors {
                    tally.merge(index_claims::transfer(&records, n, s, opts.tolerance)?);
                }
            }
            (tally, format!("all comparable pairs and class extremes, n={n_min}..={n_max}"))
        }
        Claim::DeclaredTypes => (index_claims::declared_types(range.clone()), format!("contribution functions, n={n_min}..={n_max}")),
        Claim::CaterpillarClosedForms => (index_claims::caterpillar_closed_forms(range.clone()), format!("2<=k<=n-1, n={n_min}..={n_max}")),
        Claim::PendantClosedForms => (index_claims::pendant_closed_forms(range.clone()), format!("3<=q<=n-1, n={n_min}..={n_max}")),
        Claim::BroomClosedForms => (index_claims::broom_closed_forms(range.clone()), format!("3<=D<=n-1, n={n_min}..={n_max}")),
        Claim::Table4 => (table4::verify(), "5<=n<=11, 4<=k<=n-1".to_string()),
        Claim::WienerIdentity => (sweep(&index_claims::wiener_identity)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::DegreeDistanceIdentity => (sweep(&index_claims::degree_distance_identity)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::GutmanIdentity => (sweep(&index_claims::gutman_identity)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::SteinerIdentity => (sweep(&index_claims::steiner_identity)?, format!("all:n, 2<=k<=4, n={n_min}..={n_max}")),
        Claim::ModifiedWienerUnit => (sweep(&index_claims::modified_wiener_unit)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::HyperWienerDivergence => (sweep(&index_claims::hyper_wiener_divergence)?, format!("all:n, n={n_min}..={n_max}")),
        Claim::EnumerationCount => (index_claims::enumeration_count(range.clone(), opts.cap)?, format!("n={n_min}..={n_max}")),
        Claim::OpenDiameterMax => (sweep(&open::diameter_max)?, format!("diam:n:d, n={n_min}..={n_max}")),
        Claim::OpenMaxDegreeMin => (sweep(&open::max_degree_min)?, format!("maxdeg:n:D, n={n_min}..={n_max}")),
    };
    Ok(tally.finish(&claim.id(), universe, claim.empirical(), started))
}

/// Convenience wrapper parsing the claim identifier first.
pub fn verify_claim(id: &str, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    verify(&id.parse()?, opts)
}
