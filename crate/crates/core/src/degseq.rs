//! Degree sequences: power-law sampling and the realizability test for
//! connected simple graphs.

use std::fmt;
use std::io::Read;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;

use crate::error::{Error, Result};

/// Default cap on whole-sequence rejections in [`sample_realizable`].
pub const DEFAULT_ATTEMPT_CAP: u64 = 1_000_000;

/// A nonincreasing list of node degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    /// Sorts the degrees nonincreasingly.
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { degrees })
    }

    /// Accepts signed input so negative entries can be reported.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(values.len());
        for (index, &degree) in values.iter().enumerate() {
            if degree < 0 {
                return Err(Error::NegativeDegree { index, degree });
            }
            let d = u32::try_from(degree).map_err(|_| Error::Parse {
                line: 0,
                msg: format!("degree {degree} too large"),
            })?;
            degrees.push(d);
        }
        Self::new(degrees)
    }

    /// Parses whitespace-separated decimal integers, ignoring line structure.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            for token in line.split_whitespace() {
                let v: i64 = token.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("not an integer: {token:?}"),
                })?;
                values.push(v);
            }
        }
        Self::from_signed(&values)
    }

    pub fn read_from<R: Read>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        Self::parse(&text)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn max(&self) -> u32 {
        self.degrees[0]
    }

    pub fn min(&self) -> u32 {
        self.degrees[self.degrees.len() - 1]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Outcome of [`is_realizable`]. Conditions are checked in declaration order
/// and the first failure is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realizability {
    Realizable,
    OddSum,
    TooFewEdges,
    /// 1-based index `k` of the first violated prefix inequality.
    ErdosGallaiViolation { k: usize },
    /// All three sum conditions hold but a node of degree zero cannot be
    /// attached to anything (only reachable for `n >= 2`).
    IsolatedNode,
}

impl Realizability {
    pub fn is_realizable(self) -> bool {
        self == Realizability::Realizable
    }
}

impl fmt::Display for Realizability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Realizability::Realizable => f.write_str("Realizable"),
            Realizability::OddSum => f.write_str("OddSum: degree sum is odd"),
            Realizability::TooFewEdges => {
                f.write_str("TooFewEdges: degree sum is below 2(n-1)")
            }
            Realizability::ErdosGallaiViolation { k } => {
                write!(f, "ErdosGallaiViolation: Erdos-Gallai inequality fails at k={k}")
            }
            Realizability::IsolatedNode => {
                f.write_str("IsolatedNode: a zero degree cannot be connected")
            }
        }
    }
}

/// Decides whether `seq` admits a connected simple graph.
///
/// The prefix inequality runs in O(n) with a pointer over the sorted degrees:
/// for each `k`, the right-hand tail splits into degrees `>= k` (each
/// contributing `k`) and the rest (contributing themselves).
pub fn is_realizable(seq: &DegreeSequence) -> Realizability {
    let d = seq.degrees();
    let n = d.len();
    let total = seq.sum();
    if !total.is_multiple_of(2) {
        return Realizability::OddSum;
    }
    if total < 2 * (n as u64 - 1) {
        return Realizability::TooFewEdges;
    }

    // suffix[i] = sum of d[i..]
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + u64::from(d[i]);
    }
    // ge = number of degrees >= k; shrinks as k grows
    let mut ge = n;
    let mut prefix = 0u64;
    for k in 1..=n {
        prefix += u64::from(d[k - 1]);
        while ge > 0 && (d[ge - 1] as usize) < k {
            ge -= 1;
        }
        let kk = k as u64;
        let split = ge.max(k);
        let rhs = kk * (kk - 1) + kk * (split - k) as u64 + suffix[split];
        if prefix > rhs {
            return Realizability::ErdosGallaiViolation { k };
        }
    }

    if n >= 2 && d[n - 1] == 0 {
        return Realizability::IsolatedNode;
    }
    Realizability::Realizable
}

/// Power-law degree distribution `P(a) ∝ a^-tau` on the integers `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawSpec {
    pub tau: f64,
    pub n: usize,
}

impl PowerLawSpec {
    pub fn new(tau: f64, n: usize) -> Result<Self> {
        let spec = Self { tau, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tau.is_finite() && self.tau > 1.0) {
            return Err(Error::InvalidPowerLaw(format!("tau must exceed 1, got {}", self.tau)));
        }
        if self.n < 2 {
            return Err(Error::InvalidPowerLaw(format!(
                "n must be at least 2 for a nonempty support, got {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn max_degree(&self) -> u32 {
        (self.n - 1) as u32
    }

    /// Builds a reusable sampler over the degree support.
    pub fn sampler(&self) -> Result<PowerLawSampler> {
        self.validate()?;
        let weights = (1..=self.max_degree()).map(|a| f64::from(a).powf(-self.tau));
        let index = WeightedIndex::new(weights)
            .map_err(|e| Error::InvalidPowerLaw(e.to_string()))?;
        Ok(PowerLawSampler { spec: *self, index })
    }
}

/// Partial sum `H_k(s) = sum_{a=1..k} a^-s`.
pub fn partial_zeta(k: usize, s: f64) -> f64 {
    // smallest terms first
    (1..=k).rev().map(|a| (a as f64).powf(-s)).sum()
}

/// Precomputed inverse-transform table for a [`PowerLawSpec`].
#[derive(Debug, Clone)]
pub struct PowerLawSampler {
    spec: PowerLawSpec,
    index: WeightedIndex<f64>,
}

impl PowerLawSampler {
    pub fn spec(&self) -> PowerLawSpec {
        self.spec
    }

    pub fn sample_degree<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        self.index.sample(rng) as u32 + 1
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DegreeSequence {
        let degrees = (0..self.spec.n).map(|_| self.sample_degree(rng)).collect();
        DegreeSequence::new(degrees).expect("n >= 2")
    }

    /// Resamples whole sequences until one is realizable. Returns the
    /// sequence and the number of rejected draws.
    pub fn sample_realizable<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        attempt_cap: u64,
    ) -> Result<(DegreeSequence, u64)> {
        for rejected in 0..attempt_cap {
            let seq = self.sample(rng);
            if is_realizable(&seq).is_realizable() {
                return Ok((seq, rejected));
            }
        }
        Err(Error::AttemptCapExceeded { attempts: attempt_cap })
    }
}

/// Draws `n` i.i.d. power-law degrees, sorted nonincreasingly.
pub fn sample_degrees<R: Rng + ?Sized>(spec: &PowerLawSpec, rng: &mut R) -> Result<DegreeSequence> {
    Ok(spec.sampler()?.sample(rng))
}

/// Repeats [`sample_degrees`] until the sequence is realizable.
pub fn sample_realizable<R: Rng + ?Sized>(
    spec: &PowerLawSpec,
    rng: &mut R,
    attempt_cap: u64,
) -> Result<(DegreeSequence, u64)> {
    spec.sampler()?.sample_realizable(rng, attempt_cap)
}
