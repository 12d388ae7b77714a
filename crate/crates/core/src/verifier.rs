//! Exhaustive verification of the bounds.
//!
//! A suite streams each corpus once. Every graph is profiled (canonical form
//! and the invariants defining the graph classes) and then offered to every
//! case of its order whose class it belongs to. Each case tracks its running
//! extremum together with all graphs tied with it, so nothing beyond the
//! current extremal set is retained.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds::{BoundError, BoundQuery, Extremum, Theorem};
use crate::canonical::{canonical_form, CanonicalForm};
use crate::enumeration::{CorpusSource, EnumerationError, MAX_BUILTIN_ORDER};
use crate::graph::{Graph, GraphError};
use crate::invariants::{zeroth_order_general_randic, InvariantError, InvariantProfile};
use crate::scalar::{approx_eq, GammaExponent};

/// Relative tolerance for bound and tie comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Orders a suite may cover.
pub const SUITE_ORDERS: std::ops::RangeInclusive<usize> = 4..=9;

const CHUNK: usize = 4096;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("corpus graph {index} has order {found}, expected {expected}")]
    OrderMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("no corpus for order {0}: built-in generation stops at {MAX_BUILTIN_ORDER}")]
    NoCorpus(usize),
    #[error("suite orders must lie in 4..=9, got {0}")]
    OrderOutOfRange(usize),
    #[error("tolerance must be positive and finite")]
    Tolerance,
    #[error("thread pool: {0}")]
    Pool(String),
}

/// The graphs a theorem quantifies over, all connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Chromatic(usize),
    Clique(usize),
    CutEdges(usize),
    VertexConnectivity(usize),
    VertexConnectivityAtMost(usize),
    EdgeConnectivity(usize),
    EdgeConnectivityAtMost(usize),
    MinDegree(usize),
}

impl GraphClass {
    pub fn of(theorem: Theorem, c: usize) -> Self {
        match theorem {
            Theorem::ChromaticLower | Theorem::ChromaticUpper => Self::Chromatic(c),
            Theorem::CliqueLower | Theorem::CliqueUpper => Self::Clique(c),
            Theorem::CutedgeUpper => Self::CutEdges(c),
            Theorem::ConnectivityLower => Self::VertexConnectivity(c),
            Theorem::ConnectivityAtmostLower | Theorem::ConnStarUpper => {
                Self::VertexConnectivityAtMost(c)
            }
            Theorem::EdgeConnectivityLower => Self::EdgeConnectivity(c),
            Theorem::EdgeConnectivityAtmostLower | Theorem::EdgeconnStarUpper => {
                Self::EdgeConnectivityAtMost(c)
            }
            Theorem::MinDegreeLower => Self::MinDegree(c),
        }
    }

    pub fn contains(self, p: &InvariantProfile) -> bool {
        match self {
            Self::Chromatic(c) => p.chromatic == c,
            Self::Clique(c) => p.clique == c,
            Self::CutEdges(c) => p.cut_edges == c,
            Self::VertexConnectivity(c) => p.vertex_connectivity == c,
            Self::VertexConnectivityAtMost(c) => p.vertex_connectivity <= c,
            Self::EdgeConnectivity(c) => p.edge_connectivity == c,
            Self::EdgeConnectivityAtMost(c) => p.edge_connectivity <= c,
            Self::MinDegree(c) => p.min_degree == c,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Chromatic(c) => write!(f, "chi = {c}"),
            Self::Clique(c) => write!(f, "omega = {c}"),
            Self::CutEdges(c) => write!(f, "{c} cut edges"),
            Self::VertexConnectivity(c) => write!(f, "kappa = {c}"),
            Self::VertexConnectivityAtMost(c) => write!(f, "kappa <= {c}"),
            Self::EdgeConnectivity(c) => write!(f, "kappa' = {c}"),
            Self::EdgeConnectivityAtMost(c) => write!(f, "kappa' <= {c}"),
            Self::MinDegree(c) => write!(f, "delta = {c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremCase {
    pub theorem: Theorem,
    pub n: usize,
    pub c: usize,
    pub gamma: GammaExponent<f64>,
    pub exploratory: bool,
}

impl TheoremCase {
    pub fn new(theorem: Theorem, n: usize, c: usize, gamma: GammaExponent<f64>) -> Self {
        Self {
            theorem,
            n,
            c,
            gamma,
            exploratory: false,
        }
    }

    pub fn class(&self) -> GraphClass {
        GraphClass::of(self.theorem, self.c)
    }

    pub fn query(&self) -> BoundQuery<f64> {
        BoundQuery::new(self.theorem, self.n, self.c, self.gamma).exploratory(self.exploratory)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL_BOUND")]
    FailBound,
    #[serde(rename = "FAIL_CHARACTERIZATION")]
    FailCharacterization,
    #[serde(rename = "EMPTY_CLASS")]
    EmptyClass,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::FailBound => "FAIL_BOUND",
            Self::FailCharacterization => "FAIL_CHARACTERIZATION",
            Self::EmptyClass => "EMPTY_CLASS",
        })
    }
}

fn gamma_value<S: Serializer>(g: &GammaExponent<f64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(g.value())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub n: usize,
    pub c: usize,
    #[serde(serialize_with = "gamma_value")]
    pub gamma: GammaExponent<f64>,
    pub class_size: usize,
    /// Minimum (lower bounds) or maximum (upper bounds) over the class.
    pub extremum: Option<f64>,
    pub bound: f64,
    /// `extremum - bound` for lower bounds, `bound - extremum` for upper
    /// bounds; negative means the bound is violated.
    pub gap: Option<f64>,
    /// graph6 of the canonical representatives attaining the extremum.
    pub witnesses_found: Vec<String>,
    /// graph6 of the canonical representatives the theorem names.
    pub witnesses_expected: Vec<String>,
    pub verdict: Verdict,
    pub exploratory: bool,
    /// Distance from the extremum to the nearest non-tied value in the class.
    pub separation: Option<f64>,
    /// A graph6 string reproducing the failure, if any.
    pub counterexample: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::EmptyClass)
    }
}

/// Running extremum over a stream, keyed so that smaller is better.
#[derive(Debug, Clone, Default)]
struct Extremes {
    best: Option<f64>,
    ties: Vec<(f64, CanonicalForm)>,
    runner_up: Option<f64>,
    count: usize,
}

impl Extremes {
    fn offer(&mut self, key: f64, form: CanonicalForm, tolerance: f64) {
        self.count += 1;
        let demote = |r: &mut Option<f64>, k: f64| *r = Some(r.map_or(k, |x: f64| x.min(k)));
        match self.best {
            None => {
                self.best = Some(key);
                self.ties.push((key, form));
            }
            Some(best) if approx_eq(key, best, tolerance) || key < best => {
                self.ties.push((key, form));
                if key < best {
                    self.best = Some(key);
                    let mut kept = Vec::with_capacity(self.ties.len());
                    for (k, f) in self.ties.drain(..) {
                        if approx_eq(k, key, tolerance) {
                            kept.push((k, f));
                        } else {
                            demote(&mut self.runner_up, k);
                        }
                    }
                    self.ties = kept;
                }
            }
            Some(_) => demote(&mut self.runner_up, key),
        }
    }
}

/// Everything about one corpus graph that the cases need.
struct GraphRecord {
    form: CanonicalForm,
    graph: Graph,
    profile: InvariantProfile,
}

impl GraphRecord {
    fn new(graph: Graph) -> Result<Self, VerifyError> {
        Ok(Self {
            form: canonical_form(&graph)?,
            profile: InvariantProfile::compute(&graph)?,
            graph,
        })
    }
}

struct CaseState {
    case: TheoremCase,
    bound: f64,
    expected: Vec<CanonicalForm>,
    extremes: Extremes,
}

impl CaseState {
    fn new(case: TheoremCase) -> Result<Self, VerifyError> {
        let query = case.query();
        let bound = query.bound_value()?;
        let expected = match query.extremal_witnesses() {
            Ok(ch) => {
                let mut forms = ch
                    .witnesses
                    .iter()
                    .map(|w| Ok(canonical_form(&w.generate().map_err(BoundError::from)?)?))
                    .collect::<Result<Vec<_>, VerifyError>>()?;
                forms.sort_unstable();
                forms.dedup();
                forms
            }
            Err(e) if case.exploratory => {
                let _ = e;
                Vec::new()
            }
            Err(e) => return Err(e.into()),
        };
        Ok(Self {
            case,
            bound,
            expected,
            extremes: Extremes::default(),
        })
    }

    fn sign(&self) -> f64 {
        match self.case.theorem.extremum() {
            Extremum::Min => 1.0,
            Extremum::Max => -1.0,
        }
    }

    fn offer(&mut self, rec: &GraphRecord, value: f64, tolerance: f64) {
        self.extremes.offer(self.sign() * value, rec.form, tolerance);
    }

    fn finish(self, tolerance: f64) -> VerificationReport {
        let sign = self.sign();
        let case = self.case;
        let expected_g6: Vec<String> = self.expected.iter().map(|f| f.to_graph6()).collect();
        let mut found: Vec<CanonicalForm> = self.extremes.ties.iter().map(|&(_, f)| f).collect();
        found.sort_unstable();
        found.dedup();
        let extremum = self.extremes.best.map(|b| sign * b);
        let gap = extremum.map(|e| sign * (e - self.bound));
        let separation = self
            .extremes
            .best
            .zip(self.extremes.runner_up)
            .map(|(b, r)| r - b);

        let (verdict, counterexample) = match extremum {
            None => (Verdict::EmptyClass, None),
            Some(e) if !approx_eq(e, self.bound, tolerance) => {
                (Verdict::FailBound, found.first().map(|f| f.to_graph6()))
            }
            Some(_) if found != self.expected => {
                let odd = found
                    .iter()
                    .find(|f| !self.expected.contains(f))
                    .or_else(|| self.expected.iter().find(|f| !found.contains(f)));
                (Verdict::FailCharacterization, odd.map(|f| f.to_graph6()))
            }
            Some(_) => (Verdict::Pass, None),
        };

        VerificationReport {
            theorem: case.theorem,
            n: case.n,
            c: case.c,
            gamma: case.gamma,
            class_size: self.extremes.count,
            extremum,
            bound: self.bound,
            gap,
            witnesses_found: found.iter().map(|f| f.to_graph6()).collect(),
            witnesses_expected: expected_g6,
            verdict,
            exploratory: case.exploratory,
            separation,
            counterexample,
        }
    }
}

/// Run all `cases` (each of order `n`) over one corpus stream.
fn sweep(
    n: usize,
    cases: &[TheoremCase],
    source: &CorpusSource,
    tolerance: f64,
) -> Result<Vec<VerificationReport>, VerifyError> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(VerifyError::Tolerance);
    }
    let mut states = cases
        .iter()
        .map(|&c| CaseState::new(c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut gammas: Vec<GammaExponent<f64>> = Vec::new();
    for c in cases {
        if !gammas.contains(&c.gamma) {
            gammas.push(c.gamma);
        }
    }

    let mut stream = source.connected_graphs()?;
    let mut index = 0usize;
    loop {
        let chunk: Vec<Graph> = stream
            .by_ref()
            .take(CHUNK)
            .collect::<Result<_, EnumerationError>>()?;
        if chunk.is_empty() {
            break;
        }
        for (k, g) in chunk.iter().enumerate() {
            if g.order() != n {
                return Err(VerifyError::OrderMismatch {
                    index: index + k,
                    expected: n,
                    found: g.order(),
                });
            }
        }
        index += chunk.len();
        let records: Vec<(GraphRecord, Vec<f64>)> = chunk
            .into_par_iter()
            .map(|g| {
                let rec = GraphRecord::new(g)?;
                let values = gammas
                    .iter()
                    .map(|&gm| zeroth_order_general_randic(&rec.graph, gm))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((rec, values))
            })
            .collect::<Result<_, VerifyError>>()?;
        for (rec, values) in &records {
            for st in states.iter_mut() {
                if st.case.class().contains(&rec.profile) {
                    let gi = gammas
                        .iter()
                        .position(|&g| g == st.case.gamma)
                        .expect("gamma registered");
                    st.offer(rec, values[gi], tolerance);
                }
            }
        }
    }
    Ok(states.into_iter().map(|s| s.finish(tolerance)).collect())
}

/// Verify one case against one corpus.
pub fn verify(
    case: TheoremCase,
    source: &CorpusSource,
    tolerance: f64,
) -> Result<VerificationReport, VerifyError> {
    let mut reports = sweep(case.n, &[case], source, tolerance)?;
    Ok(reports.pop().expect("one case in, one report out"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub orders: Vec<usize>,
    pub gammas: Vec<f64>,
    pub theorems: Vec<Theorem>,
    /// Include cases outside the proven ranges, flagged and excluded from
    /// the overall verdict.
    pub exploratory: bool,
    pub tolerance: f64,
    pub jobs: usize,
    /// graph6 corpora for orders beyond the built-in generator.
    pub corpus_files: BTreeMap<usize, PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            orders: vec![4, 5, 6],
            gammas: vec![-1.0],
            theorems: Theorem::ALL.to_vec(),
            exploratory: false,
            tolerance: DEFAULT_TOLERANCE,
            jobs: 1,
            corpus_files: BTreeMap::new(),
        }
    }
}

/// The cases a suite covers, in report order: by order, then theorem, then
/// `c`, then gamma in the order given.
pub fn plan_cases(config: &SuiteConfig) -> Result<Vec<TheoremCase>, VerifyError> {
    let mut orders = config.orders.clone();
    orders.sort_unstable();
    orders.dedup();
    let mut theorems = config.theorems.clone();
    theorems.sort_unstable();
    theorems.dedup();
    let gammas = config
        .gammas
        .iter()
        .map(|&g| GammaExponent::new(g).map_err(|e| BoundError::Domain(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;

    let mut cases = Vec::new();
    for &n in &orders {
        if !SUITE_ORDERS.contains(&n) {
            return Err(VerifyError::OrderOutOfRange(n));
        }
        for &theorem in &theorems {
            let (lo, hi) = theorem.c_range(n);
            let mut cs: Vec<usize> = (lo..=hi).collect();
            if config.exploratory && theorem == Theorem::CutedgeUpper {
                cs.extend([n - 2, n - 1]);
            }
            for c in cs {
                for &gamma in &gammas {
                    let mut case = TheoremCase::new(theorem, n, c, gamma);
                    let admissible = case.query().validate().is_ok();
                    if !admissible {
                        if !config.exploratory || !gamma.is_negative() {
                            continue;
                        }
                        case.exploratory = true;
                    }
                    cases.push(case);
                }
            }
        }
    }
    Ok(cases)
}

fn source_for(n: usize, config: &SuiteConfig) -> Result<CorpusSource, VerifyError> {
    match config.corpus_files.get(&n) {
        Some(p) => Ok(CorpusSource::File(p.clone())),
        None if n <= MAX_BUILTIN_ORDER => Ok(CorpusSource::Builtin(n)),
        None => Err(VerifyError::NoCorpus(n)),
    }
}

/// Run every planned case, one corpus sweep per order.
pub fn verify_suite(config: &SuiteConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let cases = plan_cases(config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    pool.install(|| {
        let mut reports = Vec::with_capacity(cases.len());
        let mut start = 0;
        while start < cases.len() {
            let n = cases[start].n;
            let end = start + cases[start..].iter().take_while(|c| c.n == n).count();
            let source = source_for(n, config)?;
            reports.extend(sweep(n, &cases[start..end], &source, config.tolerance)?);
            start = end;
        }
        Ok(reports)
    })
}

/// True when every non-exploratory report passed or had an empty class.
pub fn suite_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().filter(|r| !r.exploratory).all(|r| r.passed())
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "theorem",
        "n",
        "c",
        "gamma",
        "class_size",
        "extremum",
        "bound",
        "gap",
        "witnesses_found",
        "witnesses_expected",
        "verdict",
        "exploratory",
    ])?;
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in reports {
        w.write_record([
            r.theorem.id().to_string(),
            r.n.to_string(),
            r.c.to_string(),
            r.gamma.value().to_string(),
            r.class_size.to_string(),
            opt(r.extremum),
            r.bound.to_string(),
            opt(r.gap),
            r.witnesses_found.join(" "),
            r.witnesses_expected.join(" "),
            r.verdict.to_string(),
            r.exploratory.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn reports_to_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let class = GraphClass::of(r.theorem, r.c);
        out.push_str(&format!(
            "{:<21} {:<30} n={} c={} gamma={} [{}] size={} extremum={} bound={:.12} found={} expected={}{}\n",
            r.verdict.to_string(),
            r.theorem.id(),
            r.n,
            r.c,
            r.gamma.value(),
            class,
            r.class_size,
            r.extremum.map_or("-".into(), |v| format!("{v:.12}")),
            r.bound,
            r.witnesses_found.join(","),
            r.witnesses_expected.join(","),
            if r.exploratory { " (exploratory)" } else { "" },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn g(v: f64) -> GammaExponent<f64> {
        GammaExponent::new(v).unwrap()
    }

    fn g6(spec: FamilySpec) -> String {
        canonical_form(&spec.generate().unwrap()).unwrap().to_graph6()
    }

    #[test]
    fn chromatic_lower_n6() {
        let case = TheoremCase::new(Theorem::ChromaticLower, 6, 3, g(-1.0));
        let r = verify(case, &CorpusSource::Builtin(6), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!((r.extremum.unwrap() - 1.5).abs() < 1e-12);
        assert_eq!(r.witnesses_found, vec![g6(FamilySpec::Turan { n: 6, c: 3 })]);
    }

    #[test]
    fn connectivity_lower_multiplicity_n5() {
        let case = TheoremCase::new(Theorem::ConnectivityLower, 5, 1, g(-1.0));
        let r = verify(case, &CorpusSource::Builtin(5), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.witnesses_found.len(), 2);
        assert!((r.extremum.unwrap() - 2.25).abs() < 1e-12);
    }

    #[test]
    fn cutedge_upper_n6() {
        let case = TheoremCase::new(Theorem::CutedgeUpper, 6, 2, g(-0.5));
        let r = verify(case, &CorpusSource::Builtin(6), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let expected = 2.0 + 3.0 * 2f64.powf(-0.5) + 0.5;
        assert!((r.extremum.unwrap() - expected).abs() < 1e-12);
        assert_eq!(r.witnesses_found, vec![g6(FamilySpec::PendantCycle { n: 6, c: 2 })]);
    }

    #[test]
    fn extremes_tracks_ties_and_runner_up() {
        let f = |k: usize| crate::enumeration::connected_canonical_forms(4).unwrap()[k];
        let mut e = Extremes::default();
        e.offer(3.0, f(0), 1e-9);
        e.offer(2.0, f(1), 1e-9);
        e.offer(2.0 + 1e-12, f(2), 1e-9);
        e.offer(5.0, f(3), 1e-9);
        assert_eq!(e.best, Some(2.0));
        assert_eq!(e.ties.len(), 2);
        assert_eq!(e.runner_up, Some(3.0));
        assert_eq!(e.count, 4);
    }

    #[test]
    fn planning_respects_ranges() {
        let config = SuiteConfig {
            orders: vec![5],
            gammas: vec![-2.0, -0.5],
            theorems: vec![Theorem::ChromaticUpper, Theorem::MinDegreeLower],
            ..SuiteConfig::default()
        };
        let cases = plan_cases(&config).unwrap();
        // chromatic_upper admits only -2, min_degree_lower only -0.5
        assert_eq!(cases.len(), 3 + 4);
        assert!(cases.iter().all(|c| !c.exploratory));

        let config = SuiteConfig {
            exploratory: true,
            ..config
        };
        let cases = plan_cases(&config).unwrap();
        assert_eq!(cases.iter().filter(|c| c.exploratory).count(), 3 + 4);

        let bad = SuiteConfig {
            orders: vec![3],
            ..SuiteConfig::default()
        };
        assert!(matches!(plan_cases(&bad), Err(VerifyError::OrderOutOfRange(3))));
    }

    #[test]
    fn empty_class_is_reported() {
        let mut case = TheoremCase::new(Theorem::CutedgeUpper, 6, 4, g(-1.0));
        case.exploratory = true;
        let r = verify(case, &CorpusSource::Builtin(6), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.verdict, Verdict::EmptyClass);
        assert_eq!(r.class_size, 0);
        assert!(r.passed());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let case = TheoremCase::new(Theorem::ChromaticLower, 6, 3, g(-1.0));
        let e = verify(case, &CorpusSource::Builtin(5), DEFAULT_TOLERANCE);
        assert!(matches!(e, Err(VerifyError::OrderMismatch { .. })));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let config = SuiteConfig {
            orders: vec![4],
            theorems: vec![Theorem::ConnStarUpper],
            ..SuiteConfig::default()
        };
        let reports = verify_suite(&config).unwrap();
        let csv = reports_to_csv(&reports).unwrap();
        assert_eq!(csv.lines().count(), 1 + reports.len());
        assert!(csv.starts_with("theorem,n,c,gamma"));
        assert!(reports_to_text(&reports).contains("PASS"));
        assert!(suite_passed(&reports));
    }
}
