//! Closed-form bounds on the index, their extremal graphs, and the auxiliary
//! functions used in establishing them.
//!
//! Bounds are evaluated from `(n, c, gamma)` only; the families module gives
//! an independent route to the same numbers by building the witnesses.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyError, FamilySpec};
use crate::scalar::{power, GammaExponent, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Connected graphs with chromatic number `c`: minimum at the Turán graph.
    ChromaticLower,
    /// Connected graphs with chromatic number `c`: maximum at the pineapple.
    ChromaticUpper,
    /// Connected graphs with clique number `c`: minimum at the Turán graph.
    CliqueLower,
    /// Connected graphs with clique number `c`: maximum at the pineapple.
    CliqueUpper,
    /// Connected graphs with exactly `c` cut edges: maximum at the pendant cycle.
    CutedgeUpper,
    /// Vertex connectivity exactly `c`.
    ConnectivityLower,
    /// Vertex connectivity at most `c`.
    ConnectivityAtmostLower,
    /// Edge connectivity exactly `c`.
    EdgeConnectivityLower,
    /// Edge connectivity at most `c`.
    EdgeConnectivityAtmostLower,
    /// Minimum degree exactly `c`.
    MinDegreeLower,
    /// Vertex connectivity at most `c`: maximum at the star.
    ConnStarUpper,
    /// Edge connectivity at most `c`: maximum at the star.
    EdgeconnStarUpper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaRange {
    /// `gamma < 0`
    Negative,
    /// `gamma <= -1`
    AtMostMinusOne,
    /// `-1 <= gamma < 0`
    MinusOneToZero,
}

impl GammaRange {
    pub fn contains<F: Scalar>(self, gamma: F) -> bool {
        let zero = F::zero();
        match self {
            Self::Negative => gamma < zero,
            Self::AtMostMinusOne => gamma <= -F::one(),
            Self::MinusOneToZero => gamma >= -F::one() && gamma < zero,
        }
    }
}

impl fmt::Display for GammaRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Negative => "gamma < 0",
            Self::AtMostMinusOne => "gamma <= -1",
            Self::MinusOneToZero => "-1 <= gamma < 0",
        })
    }
}

/// Whether a theorem bounds its class from below or above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Self::ChromaticLower,
        Self::ChromaticUpper,
        Self::CliqueLower,
        Self::CliqueUpper,
        Self::CutedgeUpper,
        Self::ConnectivityLower,
        Self::ConnectivityAtmostLower,
        Self::EdgeConnectivityLower,
        Self::EdgeConnectivityAtmostLower,
        Self::MinDegreeLower,
        Self::ConnStarUpper,
        Self::EdgeconnStarUpper,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::ChromaticLower => "chromatic_lower",
            Self::ChromaticUpper => "chromatic_upper",
            Self::CliqueLower => "clique_lower",
            Self::CliqueUpper => "clique_upper",
            Self::CutedgeUpper => "cutedge_upper",
            Self::ConnectivityLower => "connectivity_lower",
            Self::ConnectivityAtmostLower => "connectivity_atmost_lower",
            Self::EdgeConnectivityLower => "edge_connectivity_lower",
            Self::EdgeConnectivityAtmostLower => "edge_connectivity_atmost_lower",
            Self::MinDegreeLower => "min_degree_lower",
            Self::ConnStarUpper => "conn_star_upper",
            Self::EdgeconnStarUpper => "edgeconn_star_upper",
        }
    }

    pub fn gamma_range(self) -> GammaRange {
        match self {
            Self::ChromaticLower | Self::CutedgeUpper | Self::ConnStarUpper | Self::EdgeconnStarUpper => {
                GammaRange::Negative
            }
            Self::ChromaticUpper | Self::CliqueLower | Self::CliqueUpper => GammaRange::AtMostMinusOne,
            Self::ConnectivityLower
            | Self::ConnectivityAtmostLower
            | Self::EdgeConnectivityLower
            | Self::EdgeConnectivityAtmostLower
            | Self::MinDegreeLower => GammaRange::MinusOneToZero,
        }
    }

    /// Admissible `c` for order `n`, inclusive; empty when `hi < lo`.
    pub fn c_range(self, n: usize) -> (usize, usize) {
        match self {
            Self::ChromaticLower | Self::ChromaticUpper | Self::CliqueLower | Self::CliqueUpper => {
                (2, n.saturating_sub(1))
            }
            Self::CutedgeUpper => (1, n.saturating_sub(3)),
            _ => (1, n.saturating_sub(1)),
        }
    }

    pub fn extremum(self) -> Extremum {
        match self {
            Self::ChromaticUpper
            | Self::CliqueUpper
            | Self::CutedgeUpper
            | Self::ConnStarUpper
            | Self::EdgeconnStarUpper => Extremum::Max,
            _ => Extremum::Min,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, BoundError> {
        Self::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| BoundError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("{theorem}: gamma = {gamma} outside the admissible range {range}")]
    GammaOutOfRange {
        theorem: Theorem,
        gamma: f64,
        range: GammaRange,
    },
    #[error("{theorem}: c = {c} outside the admissible range {lo} <= c <= {hi} for n = {n}")]
    COutOfRange {
        theorem: Theorem,
        n: usize,
        c: usize,
        lo: usize,
        hi: usize,
    },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A theorem instantiated at `(n, c, gamma)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundQuery<F> {
    pub theorem: Theorem,
    pub n: usize,
    pub c: usize,
    pub gamma: GammaExponent<F>,
    /// Evaluate outside the proven ranges; no extremality is claimed.
    pub exploratory: bool,
}

/// Graphs expected to attain a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalCharacterization {
    pub witnesses: Vec<FamilySpec>,
}

fn term<F: Scalar>(count: usize, base: usize, gamma: F) -> F {
    if count == 0 {
        F::zero()
    } else {
        F::of(count) * power(F::of(base), gamma)
    }
}

impl<F: Scalar> BoundQuery<F> {
    pub fn new(theorem: Theorem, n: usize, c: usize, gamma: GammaExponent<F>) -> Self {
        Self {
            theorem,
            n,
            c,
            gamma,
            exploratory: false,
        }
    }

    pub fn exploratory(mut self, on: bool) -> Self {
        self.exploratory = on;
        self
    }

    /// `floor(n / c)`
    pub fn q(&self) -> usize {
        self.n / self.c
    }

    /// `n - c * q`
    pub fn r(&self) -> usize {
        self.n % self.c
    }

    pub fn gamma_admissible(&self) -> bool {
        self.theorem.gamma_range().contains(self.gamma.value())
    }

    pub fn c_admissible(&self) -> bool {
        let (lo, hi) = self.theorem.c_range(self.n);
        lo <= self.c && self.c <= hi
    }

    pub fn validate(&self) -> Result<(), BoundError> {
        let (n, c) = (self.n, self.c);
        if n < 2 || c < 1 || c > n {
            return Err(BoundError::Domain(format!(
                "{}: requires n >= 2 and 1 <= c <= n, got n = {n}, c = {c}",
                self.theorem
            )));
        }
        if self.exploratory {
            return Ok(());
        }
        if !self.gamma_admissible() {
            return Err(BoundError::GammaOutOfRange {
                theorem: self.theorem,
                gamma: self.gamma.value().to_f64().unwrap_or(f64::NAN),
                range: self.theorem.gamma_range(),
            });
        }
        if !self.c_admissible() {
            let (lo, hi) = self.theorem.c_range(n);
            return Err(BoundError::COutOfRange {
                theorem: self.theorem,
                n,
                c,
                lo,
                hi,
            });
        }
        Ok(())
    }

    pub fn bound_value(&self) -> Result<F, BoundError> {
        self.validate()?;
        let (n, c, g) = (self.n, self.c, self.gamma.value());
        Ok(match self.theorem {
            Theorem::ChromaticLower | Theorem::CliqueLower => {
                let (q, r) = (self.q(), self.r());
                term((c - r) * q, n - q, g) + term(r * (q + 1), n - q - 1, g)
            }
            Theorem::ChromaticUpper | Theorem::CliqueUpper => {
                F::of(n - c) + power(F::of(n - 1), g) + term(c - 1, c - 1, g)
            }
            Theorem::CutedgeUpper => {
                F::of(c) + term(n.saturating_sub(c + 1), 2, g) + power(F::of(c + 2), g)
            }
            Theorem::ConnectivityLower
            | Theorem::ConnectivityAtmostLower
            | Theorem::EdgeConnectivityLower
            | Theorem::EdgeConnectivityAtmostLower
            | Theorem::MinDegreeLower => {
                term(c, n - 1, g) + term(n - c - 1, n - 2, g) + power(F::of(c), g)
            }
            Theorem::ConnStarUpper | Theorem::EdgeconnStarUpper => {
                F::of(n - 1) + power(F::of(n - 1), g)
            }
        })
    }

    /// The graphs that attain the bound. In exploratory mode the analogous
    /// family is returned when it exists.
    pub fn extremal_witnesses(&self) -> Result<ExtremalCharacterization, BoundError> {
        self.validate()?;
        let (n, c) = (self.n, self.c);
        let minus_one = self.gamma.value() == -F::one();
        let witnesses = match self.theorem {
            Theorem::ChromaticLower | Theorem::CliqueLower => vec![FamilySpec::Turan { n, c }],
            Theorem::ChromaticUpper | Theorem::CliqueUpper => vec![FamilySpec::Pineapple { n, c }],
            Theorem::CutedgeUpper => vec![FamilySpec::PendantCycle { n, c }],
            Theorem::ConnectivityLower | Theorem::ConnectivityAtmostLower if c + 1 < n && c == 1 && minus_one => {
                (1..=(n - 1) / 2)
                    .map(|n1| FamilySpec::ConnectivitySplit { n, c, n1 })
                    .collect()
            }
            Theorem::ConnectivityLower
            | Theorem::ConnectivityAtmostLower
            | Theorem::EdgeConnectivityLower
            | Theorem::EdgeConnectivityAtmostLower
            | Theorem::MinDegreeLower => {
                if c + 1 == n {
                    vec![FamilySpec::Complete { n }]
                } else {
                    vec![FamilySpec::ConnectivitySplit { n, c, n1: 1 }]
                }
            }
            Theorem::ConnStarUpper | Theorem::EdgeconnStarUpper => vec![FamilySpec::Star { n }],
        };
        for w in &witnesses {
            w.validate()?;
        }
        Ok(ExtremalCharacterization { witnesses })
    }
}

fn lemma_domain(msg: String) -> BoundError {
    BoundError::Domain(msg)
}

/// `(n - x) x^gamma - (n - x + 1)(x - 1)^gamma`, strictly increasing on
/// `2 <= x <= n` for `gamma < 0`.
pub fn psi<F: Scalar>(x: F, n: usize, gamma: GammaExponent<F>) -> Result<F, BoundError> {
    let nf = F::of(n);
    let two = F::of(2);
    if !(x >= two && x <= nf) {
        return Err(lemma_domain(format!("psi: requires 2 <= x <= n, got x = {x}, n = {n}")));
    }
    if !gamma.is_negative() {
        return Err(lemma_domain("psi: requires gamma < 0".into()));
    }
    let g = gamma.value();
    Ok((nf - x) * power(x, g) - (nf - x + F::one()) * power(x - F::one(), g))
}

/// `x (x + c - 1)^gamma + (n - c - x)(n - 1 - x)^gamma`, minimised over
/// `1 <= x <= n - c - 1` at both endpoints for `-1 <= gamma < 0`.
pub fn lemma_f<F: Scalar>(x: F, n: usize, c: usize, gamma: GammaExponent<F>) -> Result<F, BoundError> {
    if n < 3 || c < 1 || c + 2 > n {
        return Err(lemma_domain(format!(
            "lemma_f: requires n >= 3 and 1 <= c <= n - 2, got n = {n}, c = {c}"
        )));
    }
    if !GammaRange::MinusOneToZero.contains(gamma.value()) {
        return Err(lemma_domain("lemma_f: requires -1 <= gamma < 0".into()));
    }
    let (nf, cf, one) = (F::of(n), F::of(c), F::one());
    if !(x >= one && x <= nf - cf - one) {
        return Err(lemma_domain(format!(
            "lemma_f: requires 1 <= x <= n - c - 1, got x = {x}"
        )));
    }
    let g = gamma.value();
    Ok(x * power(x + cf - one, g) + (nf - cf - x) * power(nf - one - x, g))
}

/// [`lemma_f`] at `gamma = -1` in exact arithmetic, for rational `x`.
pub fn lemma_f_inverse_exact(x: Ratio<i128>, n: usize, c: usize) -> Result<Ratio<i128>, BoundError> {
    if n < 3 || c < 1 || c + 2 > n {
        return Err(lemma_domain(format!(
            "lemma_f: requires n >= 3 and 1 <= c <= n - 2, got n = {n}, c = {c}"
        )));
    }
    let (nr, cr, one) = (
        Ratio::from_integer(n as i128),
        Ratio::from_integer(c as i128),
        Ratio::from_integer(1),
    );
    if x < one || x > nr - cr - one {
        return Err(lemma_domain(format!("lemma_f: requires 1 <= x <= n - c - 1, got x = {x}")));
    }
    Ok(x / (x + cr - one) + (nr - cr - x) / (nr - one - x))
}

/// Per-step margins of the connectivity chain
/// `R(K_i + (K_1 ∪ K_{n-i-1})) < R(K_{i-1} + (K_1 ∪ K_{n-i}))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainCheck<F> {
    /// `(i, R(K_{i-1}+…) - R(K_i+…))` for `2 <= i <= c_max`.
    pub margins: Vec<(usize, F)>,
}

impl<F: Scalar> ChainCheck<F> {
    pub fn holds(&self) -> bool {
        self.margins.iter().all(|&(_, m)| m > F::zero())
    }
}

pub fn chain_inequality_check<F: Scalar>(
    n: usize,
    c_max: usize,
    gamma: GammaExponent<F>,
) -> Result<ChainCheck<F>, BoundError> {
    if c_max < 2 || c_max + 2 > n {
        return Err(lemma_domain(format!(
            "chain: requires 2 <= c_max <= n - 2, got n = {n}, c_max = {c_max}"
        )));
    }
    if !gamma.is_negative() {
        return Err(lemma_domain("chain: requires gamma < 0".into()));
    }
    let split = |c: usize| FamilySpec::ConnectivitySplit { n, c, n1: 1 }.predicted_index(gamma);
    let margins = (2..=c_max)
        .map(|i| Ok((i, split(i - 1)? - split(i)?)))
        .collect::<Result<_, FamilyError>>()?;
    Ok(ChainCheck { margins })
}
