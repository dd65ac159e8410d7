//! Exhaustive and seeded random search over small Hermitian matrices.
//!
//! Entries are drawn from a finite pool: diagonal entries take the real
//! parts of pool members and the upper triangle takes pool members, the
//! lower triangle following by conjugate symmetry. Random sample `k` uses
//! its own ChaCha stream, so any sample can be regenerated from
//! `(seed, k)` alone.

pub mod census;
pub mod properties;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::Field;
use crate::exact::{GaussianRational, Rational};
use crate::matrix::HermitianMatrix;
use crate::sepr::{compute_sepr, SeprSequence};

pub use census::{attainability_census, CensusReport, CensusRow, SourceKind, Witness};
pub use properties::{hunt_counterexamples, HuntReport, Property, Violation};

/// Largest order the search accepts.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "random" => Ok(SearchMode::Random),
            _ => Err(format!("unknown mode {s:?} (expected exhaustive or random)")),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Random => "random",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub pool: Vec<GaussianRational>,
    pub field: Field,
    pub target: Option<SeprSequence>,
    /// Match the target as a contiguous window rather than the whole sequence.
    pub subsequence: bool,
    pub mode: SearchMode,
    pub budget: u64,
    pub seed: u64,
}

/// `{-2,-1,0,1,2}`, plus `±i, ±2i, 1±i` for Hermitian search.
pub fn default_pool(field: Field) -> Vec<GaussianRational> {
    let mut pool: Vec<GaussianRational> = (-2..=2).map(GaussianRational::from).collect();
    if field == Field::Hermitian {
        for (re, im) in [(0, 1), (0, -1), (0, 2), (0, -2), (1, 1), (1, -1)] {
            pool.push(GaussianRational::from_integers(re, im));
        }
    }
    pool
}

/// Comma-separated scalars, e.g. `-1,0,1,i,1-i`.
pub fn parse_pool(spec: &str) -> Result<Vec<GaussianRational>, SearchError> {
    let pool = spec
        .split(',')
        .map(|t| t.trim().parse::<GaussianRational>().map_err(|e| SearchError::InvalidConfig(format!("pool: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(pool)
}

impl SearchConfig {
    pub fn new(n: usize, field: Field) -> Self {
        SearchConfig {
            n,
            pool: default_pool(field),
            field,
            target: None,
            subsequence: true,
            mode: SearchMode::Random,
            budget: 10_000,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: String| Err(SearchError::InvalidConfig(m));
        if self.n == 0 || self.n > MAX_ORDER {
            return bad(format!("order must be in 1..={MAX_ORDER}, got {}", self.n));
        }
        if self.pool.is_empty() {
            return bad("pool is empty".into());
        }
        if self.field == Field::RealSymmetric {
            if let Some(x) = self.pool.iter().find(|x| !x.is_real()) {
                return bad(format!("pool entry {x} is not real but the field is real symmetric"));
            }
        }
        if let Some(t) = &self.target {
            if !self.subsequence && t.len() != self.n {
                return bad(format!("full-sequence target {t} has length {} but n={}", t.len(), self.n));
            }
        }
        if self.mode == SearchMode::Exhaustive {
            let size = Sampler::new(self).space_size();
            if size.is_none_or(|s| s > self.budget as u128) {
                return bad(format!(
                    "exhaustive space of {} matrices exceeds the budget {}",
                    size.map_or_else(|| "more than 2^128".to_string(), |s| s.to_string()),
                    self.budget
                ));
            }
        }
        Ok(())
    }

    /// Number of matrices a run examines.
    pub fn sample_count(&self) -> u64 {
        match self.mode {
            SearchMode::Random => self.budget,
            SearchMode::Exhaustive => {
                Sampler::new(self).space_size().map_or(self.budget, |s| s.min(self.budget as u128) as u64)
            }
        }
    }

    pub fn sampler(&self) -> Sampler {
        Sampler::new(self)
    }
}

/// Deterministic matrix generator for one configuration.
#[derive(Debug, Clone)]
pub struct Sampler {
    n: usize,
    diagonal: Vec<Rational>,
    pool: Vec<GaussianRational>,
    mode: SearchMode,
    seed: u64,
}

impl Sampler {
    fn new(cfg: &SearchConfig) -> Self {
        let mut diagonal: Vec<Rational> = Vec::new();
        for x in &cfg.pool {
            if !diagonal.contains(&x.re) {
                diagonal.push(x.re.clone());
            }
        }
        let mut pool: Vec<GaussianRational> = Vec::new();
        for x in &cfg.pool {
            if !pool.contains(x) {
                pool.push(x.clone());
            }
        }
        Sampler { n: cfg.n, diagonal, pool, mode: cfg.mode, seed: cfg.seed }
    }

    /// Size of the exhaustive space, `d^n * p^(n(n-1)/2)`.
    pub fn space_size(&self) -> Option<u128> {
        let off = (self.n * (self.n - 1) / 2) as u32;
        (self.diagonal.len() as u128)
            .checked_pow(self.n as u32)?
            .checked_mul((self.pool.len() as u128).checked_pow(off)?)
    }

    /// Sample number `index`: a mixed-radix decoding in exhaustive mode,
    /// stream `index` of the seeded generator in random mode.
    pub fn matrix(&self, index: u64) -> HermitianMatrix {
        let n = self.n;
        let mut diag = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        match self.mode {
            SearchMode::Exhaustive => {
                let mut rest = index as u128;
                for _ in 0..n {
                    let d = self.diagonal.len() as u128;
                    diag.push(self.diagonal[(rest % d) as usize].clone());
                    rest /= d;
                }
                for _ in 0..n * (n - 1) / 2 {
                    let p = self.pool.len() as u128;
                    upper.push(self.pool[(rest % p) as usize].clone());
                    rest /= p;
                }
            }
            SearchMode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(index);
                for _ in 0..n {
                    diag.push(self.pool[rng.gen_range(0..self.pool.len())].re.clone());
                }
                for _ in 0..n * (n - 1) / 2 {
                    upper.push(self.pool[rng.gen_range(0..self.pool.len())].clone());
                }
            }
        }
        let mut rows = vec![vec![GaussianRational::zero(); n]; n];
        let mut k = 0;
        for i in 0..n {
            rows[i][i] = GaussianRational::real(diag[i].clone());
            for j in i + 1..n {
                rows[i][j] = upper[k].clone();
                rows[j][i] = upper[k].conj();
                k += 1;
            }
        }
        HermitianMatrix::new(rows).expect("constructed with conjugate symmetry")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Found {
    pub matrix: HermitianMatrix,
    pub sepr: SeprSequence,
    /// 1-based start of the target window.
    pub position: usize,
    /// Sample index of the witness.
    pub index: u64,
}

/// First sample whose sepr-sequence equals (or, in subsequence mode,
/// contains) the target. `None` when the budget runs out.
pub fn find_witness(cfg: &SearchConfig) -> Result<Option<Found>, SearchError> {
    cfg.validate()?;
    let target = cfg.target.as_ref().ok_or_else(|| SearchError::InvalidConfig("no target given".into()))?;
    let sampler = cfg.sampler();
    for index in 0..cfg.sample_count() {
        let matrix = sampler.matrix(index);
        let sepr = compute_sepr(&matrix);
        let position = if cfg.subsequence { sepr.find(target) } else { (sepr == *target).then_some(1) };
        if let Some(position) = position {
            return Ok(Some(Found { matrix, sepr, position, index }));
        }
    }
    Ok(None)
}
