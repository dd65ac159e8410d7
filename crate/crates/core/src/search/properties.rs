//! Structural facts every Hermitian matrix satisfies, checked sample by sample.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{SearchConfig, SearchError};
use crate::classify::fixtures::NOT_INITIAL;
use crate::classify::{scan_for_forbidden, Field};
use crate::exact::Sign;
use crate::matrix::{io, HermitianMatrix, PrincipalMinors};
use crate::sepr::{compute_epr, compute_sepr, sepr_from_table, EprSequence, SeprSequence, SeprTerm};

/// Offset separating the permutation streams from the sampling streams.
const PERMUTATION_SEED_SALT: u64 = 0x5EB1_7A11_D00D_F00D;
const PERMUTATIONS_PER_SAMPLE: usize = 5;
/// Violations beyond this many are counted but not stored.
const MAX_STORED_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    NnTheorem,
    SameSign,
    RankIsPrincipal,
    RankDrop,
    Inheritance,
    InverseTheorem,
    Negation,
    Permutation,
    AppendZero,
    AppendLrc,
    BasicProposition,
    Sna,
    EprConsistency,
    LastTerm,
    ForbiddenScan,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::NnTheorem,
        Property::SameSign,
        Property::RankIsPrincipal,
        Property::RankDrop,
        Property::Inheritance,
        Property::InverseTheorem,
        Property::Negation,
        Property::Permutation,
        Property::AppendZero,
        Property::AppendLrc,
        Property::BasicProposition,
        Property::Sna,
        Property::EprConsistency,
        Property::LastTerm,
        Property::ForbiddenScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::NnTheorem => "nn-theorem",
            Property::SameSign => "same-sign",
            Property::RankIsPrincipal => "rank-is-principal",
            Property::RankDrop => "rank-drop",
            Property::Inheritance => "inheritance",
            Property::InverseTheorem => "inverse-theorem",
            Property::Negation => "negation",
            Property::Permutation => "permutation",
            Property::AppendZero => "append-zero",
            Property::AppendLrc => "append-lrc",
            Property::BasicProposition => "basic-proposition",
            Property::Sna => "sna",
            Property::EprConsistency => "epr-consistency",
            Property::LastTerm => "last-term",
            Property::ForbiddenScan => "forbidden-scan",
        }
    }

    /// Comma-separated names, or `all`.
    pub fn parse_suite(text: &str) -> Result<Vec<Property>, String> {
        if text == "all" {
            return Ok(Property::ALL.to_vec());
        }
        text.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| format!("unknown property {s:?}"))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Sample index within the run.
    pub index: u64,
    pub property: Property,
    pub detail: String,
    /// The offending matrix in the JSON matrix format.
    pub matrix: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sample {}\t{}\t{}\t{}", self.index, self.property, self.detail, self.matrix)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct HuntReport {
    pub examined: u64,
    /// How often each property was applicable and checked.
    pub checks: BTreeMap<Property, u64>,
    /// Inverse Theorem applications by branch: last term `A+`, last term `A-`.
    pub inverse_branches: [u64; 2],
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    /// Forbidden windows reported by the scan (each is also a violation).
    pub forbidden_hits: u64,
    /// Every epr-sequence observed in full.
    pub epr_sequences: BTreeSet<EprSequence>,
    /// Every sepr window of length 2 or 3 observed.
    pub sepr_windows: BTreeSet<SeprSequence>,
}

impl HuntReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    pub fn total_checks(&self) -> u64 {
        self.checks.values().sum()
    }

    /// Order-3 epr windows observed.
    pub fn epr_windows3(&self) -> BTreeSet<EprSequence> {
        let mut out = BTreeSet::new();
        for e in &self.epr_sequences {
            for w in e.terms().windows(3) {
                out.insert(EprSequence::new(w.to_vec()).expect("nonempty"));
            }
        }
        out
    }

    pub fn merge(&mut self, other: HuntReport) {
        self.examined += other.examined;
        for (p, c) in other.checks {
            *self.checks.entry(p).or_default() += c;
        }
        self.inverse_branches[0] += other.inverse_branches[0];
        self.inverse_branches[1] += other.inverse_branches[1];
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_STORED_VIOLATIONS {
                self.violations.push(v);
            }
        }
        self.forbidden_hits += other.forbidden_hits;
        self.epr_sequences.extend(other.epr_sequences);
        self.sepr_windows.extend(other.sepr_windows);
    }

    /// `property<TAB>checks` lines followed by any violations.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!("examined\t{}", self.examined)];
        for (p, c) in &self.checks {
            out.push(format!("{p}\t{c}"));
        }
        out.push(format!("inverse-branches\tA+={}\tA-={}", self.inverse_branches[0], self.inverse_branches[1]));
        out.push(format!("forbidden-hits\t{}", self.forbidden_hits));
        out.push(format!("violations\t{}", self.violation_count));
        out.extend(self.violations.iter().map(|v| format!("violation\t{v}")));
        out
    }

    fn check(&mut self, p: Property) {
        *self.checks.entry(p).or_default() += 1;
    }

    fn violate(&mut self, index: u64, property: Property, detail: String, b: &HermitianMatrix) {
        self.violation_count += 1;
        if self.violations.len() < MAX_STORED_VIOLATIONS {
            self.violations.push(Violation { index, property, detail, matrix: io::to_json(b) });
        }
    }
}

fn field_of(b: &HermitianMatrix) -> Field {
    if b.is_real() {
        Field::RealSymmetric
    } else {
        Field::Hermitian
    }
}

/// Runs `suite` on one matrix, accumulating into `report`.
pub fn check_matrix(
    b: &HermitianMatrix,
    index: u64,
    suite: &[Property],
    rng: &mut ChaCha8Rng,
    report: &mut HuntReport,
) {
    let n = b.order();
    let table = b.principal_minors();
    let full = table.full_mask();
    let s = sepr_from_table(&table, full);
    let epr = compute_epr(b);
    report.examined += 1;
    report.epr_sequences.insert(epr.clone());
    for len in [2, 3] {
        report.sepr_windows.extend(s.windows(len).map(|(_, w)| w));
    }
    let t = s.terms();

    for &p in suite {
        match p {
            Property::NnTheorem => {
                report.check(p);
                if let Some(k) = t.windows(2).position(|w| w == [SeprTerm::N, SeprTerm::N]) {
                    if t[k..].iter().any(|&x| x != SeprTerm::N) {
                        report.violate(index, p, format!("sepr {s} has NN followed by a non-N term"), b);
                    }
                }
                let e = epr.terms();
                let nn = [crate::sepr::EprTerm::N, crate::sepr::EprTerm::N];
                if let Some(k) = e.windows(2).position(|w| w == nn) {
                    if e[k..].iter().any(|&x| x != crate::sepr::EprTerm::N) {
                        report.violate(index, p, format!("epr {epr} has NN followed by a non-N term"), b);
                    }
                }
            }
            Property::SameSign => {
                let r = b.rank();
                if r > 0 {
                    report.check(p);
                    let signs: BTreeSet<Sign> =
                        table.signs_of_order_within(r, full).filter(|&x| x != Sign::Zero).collect();
                    if signs.len() != 1 {
                        report.violate(index, p, format!("nonzero order-{r} minors have signs {signs:?}"), b);
                    }
                }
            }
            Property::RankIsPrincipal => {
                report.check(p);
                let (r, m) = (b.rank(), table.max_nonsingular_order_within(full));
                if r != m {
                    report.violate(index, p, format!("rank {r} but largest nonsingular principal order {m}"), b);
                }
            }
            Property::RankDrop => {
                if n >= 2 {
                    report.check(p);
                    let r = b.rank();
                    'outer: for i in 0..n {
                        let rows: Vec<usize> = (0..n).filter(|&x| x != i).collect();
                        for j in 0..n {
                            let cols: Vec<usize> = (0..n).filter(|&x| x != j).collect();
                            let sr = b.submatrix_rank(&rows, &cols);
                            if sr + 2 < r {
                                let d = format!("deleting row {} and column {} drops rank {r} to {sr}", i + 1, j + 1);
                                report.violate(index, p, d, b);
                                break 'outer;
                            }
                        }
                    }
                }
            }
            Property::Inheritance => {
                report.check(p);
                if let Some(d) = inheritance_violation(&table, &s) {
                    report.violate(index, p, d, b);
                }
            }
            Property::InverseTheorem => {
                if let Some(predicted) = s.of_inverse() {
                    report.check(p);
                    report.inverse_branches[usize::from(s.last() == SeprTerm::AMinus)] += 1;
                    match b.inverse() {
                        Ok(inv) => {
                            let got = compute_sepr(&inv);
                            if got != predicted {
                                report.violate(index, p, format!("sepr(B^-1)={got}, predicted {predicted}"), b);
                            }
                        }
                        Err(e) => {
                            report.violate(index, p, format!("last term {} but inverse failed: {e}", s.last()), b)
                        }
                    }
                }
            }
            Property::Negation => {
                report.check(p);
                let (got, want) = (compute_sepr(&b.negate()), s.of_negated_matrix());
                if got != want {
                    report.violate(index, p, format!("sepr(-B)={got}, predicted {want}"), b);
                }
            }
            Property::Permutation => {
                let mut perm: Vec<usize> = (0..n).collect();
                for _ in 0..PERMUTATIONS_PER_SAMPLE {
                    report.check(p);
                    perm.shuffle(rng);
                    let pb = b.permute(&perm).expect("shuffle yields a permutation");
                    let got = compute_sepr(&pb);
                    if got != s {
                        report.violate(index, p, format!("permutation {perm:?} gives {got}, expected {s}"), b);
                    }
                }
            }
            Property::AppendZero => {
                report.check(p);
                let zero = HermitianMatrix::zero(1).expect("order 1");
                let (got, want) = (compute_sepr(&b.direct_sum(&zero)), s.append_zero());
                if got != want {
                    report.violate(index, p, format!("sepr(B+O1)={got}, predicted {want}"), b);
                }
            }
            Property::AppendLrc => {
                report.check(p);
                let (got, want) = (compute_sepr(&b.duplicate_last()), s.append_last_duplicate());
                if got != want {
                    report.violate(index, p, format!("duplicated last row/column gives {got}, predicted {want}"), b);
                }
            }
            Property::BasicProposition => {
                if n >= 2 {
                    report.check(p);
                    let head = s.window(1, 2).to_string();
                    if NOT_INITIAL.contains(&head.as_str()) {
                        report.violate(index, p, format!("sepr {s} starts with {head}"), b);
                    }
                }
            }
            Property::Sna => {
                if b.is_real() && n >= 5 {
                    report.check(p);
                    let head = epr.prefix(n - 2);
                    if head.find(&"SNA".parse().expect("literal")).is_some() {
                        report.violate(index, p, format!("epr {epr} has SNA within its first {} terms", n - 2), b);
                    }
                }
            }
            Property::EprConsistency => {
                report.check(p);
                if s.uepr() != epr {
                    report.violate(index, p, format!("uepr({s}) differs from epr {epr}"), b);
                }
            }
            Property::LastTerm => {
                report.check(p);
                if matches!(s.last(), SeprTerm::SStar | SeprTerm::SPlus | SeprTerm::SMinus) {
                    report.violate(index, p, format!("sepr {s} ends in {}", s.last()), b);
                }
            }
            Property::ForbiddenScan => {
                report.check(p);
                let field = field_of(b);
                for hit in scan_for_forbidden(&s, field) {
                    report.forbidden_hits += 1;
                    report.violate(index, p, format!("{} in {s}: {hit}", field.label()), b);
                }
            }
        }
    }
}

/// Checks the containments for every principal submatrix against the
/// terms of the whole matrix.
fn inheritance_violation(table: &PrincipalMinors, s: &SeprSequence) -> Option<String> {
    use SeprTerm::*;
    let full = table.full_mask();
    for alpha in 1..full {
        let c = sepr_from_table(table, alpha);
        for (j, (&bt, &ct)) in s.terms().iter().zip(c.terms()).enumerate() {
            let ok = match bt {
                N => ct == N,
                APlus => ct == APlus,
                AMinus => ct == AMinus,
                SPlus => matches!(ct, APlus | N | SPlus),
                SMinus => matches!(ct, AMinus | N | SMinus),
                AStar | SStar => true,
            };
            if !ok {
                let set = crate::matrix::IndexSet::from_mask(alpha);
                return Some(format!("term {} is {bt} but the submatrix on {set} has {ct}", j + 1));
            }
        }
    }
    None
}

/// Samples matrices per `cfg` and runs `suite` on each.
pub fn hunt_counterexamples(cfg: &SearchConfig, suite: &[Property]) -> Result<HuntReport, SearchError> {
    cfg.validate()?;
    let sampler = cfg.sampler();
    let mut report = HuntReport::default();
    for index in 0..cfg.sample_count() {
        let b = sampler.matrix(index);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ PERMUTATION_SEED_SALT);
        rng.set_stream(index);
        check_matrix(&b, index, suite, &mut rng, &mut report);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{parse_pool, SearchMode};

    #[test]
    fn suite_parsing() {
        assert_eq!(Property::parse_suite("all").unwrap().len(), 15);
        assert_eq!(Property::parse_suite("nn-theorem,sna").unwrap(), vec![Property::NnTheorem, Property::Sna]);
        assert!(Property::parse_suite("nn-theorem,bogus").is_err());
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
    }

    #[test]
    fn small_random_runs_are_clean_and_deterministic() {
        for field in [Field::RealSymmetric, Field::Hermitian] {
            let mut cfg = SearchConfig::new(4, field);
            cfg.budget = 60;
            cfg.seed = 11;
            let a = hunt_counterexamples(&cfg, &Property::ALL).unwrap();
            assert!(a.is_clean(), "{:?}", a.violations);
            assert_eq!(a.examined, 60);
            assert_eq!(a, hunt_counterexamples(&cfg, &Property::ALL).unwrap());
        }
    }

    #[test]
    fn exhaustive_complex_2x2() {
        let mut cfg = SearchConfig::new(2, Field::Hermitian);
        cfg.pool = parse_pool("0,1,-1,i,-i").unwrap();
        cfg.mode = SearchMode::Exhaustive;
        cfg.budget = 1_000;
        let r = hunt_counterexamples(&cfg, &Property::ALL).unwrap();
        assert_eq!(r.examined, 45);
        assert!(r.is_clean());
    }

    #[test]
    fn inheritance_detects_a_bad_table() {
        // Whole matrix claims A+ at order 1 while entry 2 is negative.
        let table =
            PrincipalMinors::from_values(2, vec![crate::exact::Rational::one(), 1.into(), (-1).into(), (-1).into()]);
        let s: SeprSequence = "A+A-".parse().unwrap();
        assert!(inheritance_violation(&table, &s).is_some());
        let s: SeprSequence = "A*A-".parse().unwrap();
        assert!(inheritance_violation(&table, &s).is_none());
    }

    #[test]
    fn violations_carry_the_matrix() {
        let b = HermitianMatrix::identity(2).unwrap();
        let mut report = HuntReport::default();
        report.violate(3, Property::Sna, "synthetic".into(), &b);
        assert!(!report.is_clean());
        assert_eq!(io::parse_matrix(&report.violations[0].matrix).unwrap(), b);
        assert!(report.lines().iter().any(|l| l.starts_with("violation\tsample 3\tsna")));
    }
}
