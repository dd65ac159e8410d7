//! Attainability census for order-2 and order-3 patterns.
//!
//! Witnesses are collected in three stages: windows of catalog matrices,
//! constructions (negation, `B ⊕ O_1`, last row/column duplication,
//! inversion, principal submatrices, and the append recipes that lift a
//! 3x3 witness of the all-`A` form of a pattern), then a search sweep. Every
//! recorded witness is re-verified from its stored matrix.

use std::collections::BTreeMap;
use std::fmt;

use super::{SearchConfig, SearchError, SearchMode};
use crate::catalog::{self, WitnessField, WitnessMatrix};
use crate::classify::{all_sequences, forbidden_order2, forbidden_order3, Field};
use crate::exact::{GaussianRational, Rational};
use crate::matrix::{HermitianMatrix, IndexSet};
use crate::sepr::{compute_sepr, SeprSequence};

/// Patterns lifted by appending a zero row and column to a 3x3 witness of
/// the same pattern with every `S` replaced by `A`.
const APPEND_ZERO_RECIPES: [&str; 15] = [
    "S+NS-", "S*S*S+", "S*S*S-", "S*S-S+", "S*S-S-", "S+S*S-", "S+S+S+", "S+S+S-", "S+S-S+", "S+S-S-", "S-S*S+",
    "S-S+S+", "S-S+S-", "S-S-S+", "S-S-S-",
];

/// Patterns lifted by duplicating the last row and column of such a witness.
const APPEND_LRC_RECIPES: [&str; 16] = [
    "A*S*S+", "A*S*S-", "A*S-S+", "A*S-S-", "A+S*S-", "A+S+S+", "A+S+S-", "A+S-S+", "A+S-S-", "A-S*S+", "A-S+S+",
    "A-S+S-", "A-S-S+", "A-S-S-", "NS-S+", "NS-S-",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SourceKind {
    Catalog,
    Construction,
    Search,
}

impl fmt::Display for SourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceKind::Catalog => "catalog",
            SourceKind::Construction => "construction",
            SourceKind::Search => "search",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub kind: SourceKind,
    pub label: String,
    pub matrix: WitnessMatrix,
    /// 1-based start of the pattern in the witness's sepr-sequence.
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct CensusRow {
    pub pattern: SeprSequence,
    pub witness: Option<Witness>,
}

impl CensusRow {
    /// `pattern<TAB>status<TAB>witness-source`
    pub fn tsv(&self) -> String {
        match &self.witness {
            Some(w) => format!("{}\twitnessed\t{}:{}@{}", self.pattern, w.kind, w.label, w.position),
            None => format!("{}\topen\tsearch-open", self.pattern),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub order: usize,
    pub field: Field,
    pub forbidden: usize,
    pub rows: Vec<CensusRow>,
    /// Search budgets actually spent, one entry per swept order.
    pub budgets: Vec<String>,
    /// Every witness re-derived its pattern from the stored matrix.
    pub all_verified: bool,
}

impl CensusReport {
    pub fn targets(&self) -> usize {
        self.rows.len()
    }

    pub fn witnessed(&self) -> usize {
        self.rows.iter().filter(|r| r.witness.is_some()).count()
    }

    pub fn witnessed_by(&self, kind: SourceKind) -> usize {
        self.rows.iter().filter(|r| r.witness.as_ref().is_some_and(|w| w.kind == kind)).count()
    }

    pub fn open(&self) -> Vec<&SeprSequence> {
        self.rows.iter().filter(|r| r.witness.is_none()).map(|r| &r.pattern).collect()
    }

    pub fn summary(&self) -> String {
        format!(
            "order {} {}: {} forbidden, {} to witness, {} witnessed (catalog {}, construction {}, search {}), {} open",
            self.order,
            self.field.label(),
            self.forbidden,
            self.targets(),
            self.witnessed(),
            self.witnessed_by(SourceKind::Catalog),
            self.witnessed_by(SourceKind::Construction),
            self.witnessed_by(SourceKind::Search),
            self.targets() - self.witnessed(),
        )
    }

    pub fn lines(&self) -> Vec<String> {
        self.rows.iter().map(CensusRow::tsv).collect()
    }
}

struct Collector {
    order: usize,
    field: Field,
    found: BTreeMap<SeprSequence, Option<Witness>>,
}

impl Collector {
    fn remaining(&self) -> usize {
        self.found.values().filter(|w| w.is_none()).count()
    }

    fn offer_with(&mut self, matrix: &WitnessMatrix, s: &SeprSequence, kind: SourceKind, label: impl Fn() -> String) {
        if self.field == Field::RealSymmetric && !matrix.is_real() {
            return;
        }
        for (position, w) in s.windows(self.order) {
            if let Some(slot @ None) = self.found.get_mut(&w) {
                *slot = Some(Witness { kind, label: label(), matrix: matrix.clone(), position });
            }
        }
    }

    fn offer(&mut self, matrix: WitnessMatrix, kind: SourceKind, label: impl Fn() -> String) {
        let s = matrix.sepr();
        self.offer_with(&matrix, &s, kind, label);
    }

    fn offer_hermitian(&mut self, b: &HermitianMatrix, kind: SourceKind, label: impl Fn() -> String) {
        let s = compute_sepr(b);
        if s.windows(self.order).any(|(_, w)| matches!(self.found.get(&w), Some(None))) {
            self.offer_with(&WitnessMatrix::Gaussian(b.clone()), &s, kind, label);
        }
    }
}

fn diag(values: &[i64]) -> HermitianMatrix {
    HermitianMatrix::diagonal(&values.iter().map(|&v| Rational::from(v)).collect::<Vec<_>>()).expect("nonempty")
}

/// Applies the sequence-level constructions to `b`.
fn constructions(c: &mut Collector, b: &HermitianMatrix, name: &str) {
    let zero = HermitianMatrix::zero(1).expect("order 1");
    let mut derived: Vec<(String, HermitianMatrix)> = vec![
        (name.to_string(), b.clone()),
        (format!("append-zero({name})"), b.direct_sum(&zero)),
        (format!("append-lrc({name})"), b.duplicate_last()),
    ];
    if let Ok(inv) = b.inverse() {
        derived.push((format!("inverse({name})"), inv));
    }
    for (label, m) in derived {
        c.offer_hermitian(&m, SourceKind::Construction, || label.clone());
        let neg = m.negate();
        c.offer_hermitian(&neg, SourceKind::Construction, || format!("neg({label})"));
    }
    let n = b.order();
    if n > c.order {
        for mask in 1u64..(1 << n) - 1 {
            if (mask.count_ones() as usize) < c.order {
                continue;
            }
            let set = IndexSet::from_mask(mask);
            let sub = b.principal_submatrix(&set).expect("mask within range");
            c.offer_hermitian(&sub, SourceKind::Construction, || format!("{name}[{set}]"));
        }
    }
}

/// Lifts recipe patterns from 3x3 witnesses of their all-`A` forms, found
/// by exhaustive search over real symmetric matrices with entries in
/// `{-2..2}`.
fn recipes(c: &mut Collector) {
    let mut wanted: BTreeMap<SeprSequence, Vec<(SeprSequence, bool)>> = BTreeMap::new();
    for (list, lrc) in [(&APPEND_ZERO_RECIPES[..], false), (&APPEND_LRC_RECIPES[..], true)] {
        for text in list {
            let sigma: SeprSequence = text.parse().expect("recipe literal");
            let psi = SeprSequence::new(sigma.terms().iter().map(|t| t.strengthen()).collect()).expect("nonempty");
            wanted.entry(psi).or_default().push((sigma, lrc));
        }
    }
    let mut cfg = SearchConfig::new(3, Field::RealSymmetric);
    cfg.mode = SearchMode::Exhaustive;
    cfg.budget = u64::MAX;
    let sampler = cfg.sampler();
    let zero = HermitianMatrix::zero(1).expect("order 1");
    for index in 0..cfg.sample_count() {
        if wanted.is_empty() {
            break;
        }
        let h = sampler.matrix(index);
        let Some(targets) = wanted.remove(&compute_sepr(&h)) else { continue };
        for (sigma, lrc) in targets {
            let (lifted, how) =
                if lrc { (h.duplicate_last(), "append-lrc") } else { (h.direct_sum(&zero), "append-zero") };
            let psi = SeprSequence::new(sigma.terms().iter().map(|t| t.strengthen()).collect()).expect("nonempty");
            c.offer_hermitian(&lifted, SourceKind::Construction, || format!("{how}(3x3 witness of {psi})"));
        }
    }
}

fn sweep(c: &mut Collector, cfg: &SearchConfig, budgets: &mut Vec<String>) -> Result<(), SearchError> {
    for n in c.order.max(2)..=cfg.n {
        if c.remaining() == 0 {
            break;
        }
        let mut sub = cfg.clone();
        sub.n = n;
        sub.field = c.field;
        sub.seed = cfg.seed.wrapping_add(n as u64);
        if c.field == Field::RealSymmetric {
            sub.pool.retain(GaussianRational::is_real);
        }
        sub.target = None;
        sub.validate()?;
        let sampler = sub.sampler();
        let count = sub.sample_count();
        let mut spent = 0;
        for index in 0..count {
            if c.remaining() == 0 {
                break;
            }
            spent += 1;
            let b = sampler.matrix(index);
            let seed = sub.seed;
            c.offer_hermitian(&b, SourceKind::Search, || format!("{} n={n} seed={seed} sample={index}", sub.mode));
        }
        budgets.push(format!("n={n} mode={} seed={} budget={} examined={spent}", sub.mode, sub.seed, count));
    }
    Ok(())
}

/// Witnesses every non-forbidden pattern of length `order` that the catalog,
/// the constructions, or the search sweep (orders `order..=cfg.n`, budget
/// `cfg.budget` each) can reach.
pub fn attainability_census(order: usize, field: Field, cfg: &SearchConfig) -> Result<CensusReport, SearchError> {
    let forbidden = match order {
        2 => forbidden_order2(field),
        3 => forbidden_order3(field).clone(),
        _ => return Err(SearchError::InvalidConfig(format!("census order must be 2 or 3, got {order}"))),
    };
    let found = all_sequences(order).into_iter().filter(|p| !forbidden.contains(p)).map(|p| (p, None)).collect();
    let mut c = Collector { order, field, found };

    for r in catalog::records() {
        if field == Field::RealSymmetric && r.field == WitnessField::Complex {
            continue;
        }
        let m = r.build().expect("catalog entries build");
        c.offer(m, SourceKind::Catalog, || r.id.clone());
    }

    let mut seeds: Vec<(String, HermitianMatrix)> = vec![
        ("O2".into(), HermitianMatrix::zero(2).expect("order 2")),
        ("diag(1,-1,-1,0)".into(), diag(&[1, -1, -1, 0])),
    ];
    for r in catalog::records() {
        if let Ok(WitnessMatrix::Gaussian(b)) = r.build() {
            seeds.push((r.id.clone(), b));
        }
    }
    for (name, b) in &seeds {
        if c.remaining() == 0 {
            break;
        }
        constructions(&mut c, b, name);
    }
    if c.remaining() > 0 && order == 3 {
        recipes(&mut c);
    }

    let mut budgets = Vec::new();
    if c.remaining() > 0 {
        sweep(&mut c, cfg, &mut budgets)?;
    }

    let rows: Vec<CensusRow> = c.found.into_iter().map(|(pattern, witness)| CensusRow { pattern, witness }).collect();
    let all_verified = rows.iter().all(|r| {
        r.witness.as_ref().is_none_or(|w| {
            let s = w.matrix.sepr();
            w.position + order - 1 <= s.len()
                && s.window(w.position, order) == r.pattern
                && (field == Field::Hermitian || w.matrix.is_real())
        })
    });
    Ok(CensusReport { order, field, forbidden: forbidden.len(), rows, budgets, all_verified })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg(n: usize, field: Field) -> SearchConfig {
        let mut cfg = SearchConfig::new(n, field);
        cfg.budget = 200;
        cfg.seed = 5;
        cfg
    }

    #[test]
    fn order2_hermitian_is_complete() {
        let r = attainability_census(2, Field::Hermitian, &quick_cfg(4, Field::Hermitian)).unwrap();
        assert_eq!(r.targets(), 45);
        assert_eq!(r.witnessed(), 45, "{:?}", r.open());
        assert!(r.all_verified);
        let nn = r.rows.iter().find(|x| x.pattern.to_string() == "NN").unwrap();
        assert!(nn.witness.is_some());
    }

    #[test]
    fn recipe_lists_lift() {
        for text in APPEND_ZERO_RECIPES.iter().chain(APPEND_LRC_RECIPES.iter()) {
            let s: SeprSequence = text.parse().unwrap();
            assert_eq!(s.len(), 3);
            assert!(crate::classify::classify_sequence(&s, Field::RealSymmetric).unwrap().rule().is_none(), "{s}");
        }
    }

    #[test]
    fn rejects_other_orders() {
        assert!(attainability_census(4, Field::Hermitian, &quick_cfg(4, Field::Hermitian)).is_err());
    }

    #[test]
    fn rows_format() {
        let row = CensusRow { pattern: "NN".parse().unwrap(), witness: None };
        assert_eq!(row.tsv(), "NN\topen\tsearch-open");
    }
}
