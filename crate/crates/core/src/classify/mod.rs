//! Forbidden subsequences of orders 2 and 3 over Hermitian and real
//! symmetric matrices.
//!
//! The forbidden sets are generated from their rule families; membership
//! queries ([`classify_sequence`]) test the rules directly, in statement
//! order, so each verdict names the first rule that fires.

pub mod fixtures;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::sepr::{EprSequence, EprTerm, SeprSequence, SeprTerm};

use SeprTerm::{AMinus, APlus, AStar, SMinus, SPlus, SStar, N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification is only known for orders 2 and 3, got order {0}")]
    UnsupportedOrder(usize),
    #[error("unknown field {0:?} (expected hermitian or real)")]
    UnknownField(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Hermitian,
    RealSymmetric,
}

impl Field {
    pub fn label(self) -> &'static str {
        match self {
            Field::Hermitian => "hermitian",
            Field::RealSymmetric => "real symmetric",
        }
    }
}

impl FromStr for Field {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hermitian" | "complex" | "h" => Ok(Field::Hermitian),
            "real" | "real-symmetric" | "real_symmetric" | "symmetric" | "r" => Ok(Field::RealSymmetric),
            _ => Err(ClassifyError::UnknownField(s.to_string())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The rule a forbidden verdict rests on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `A*N`, `NA*`, `NS*` or `S*N` (order 2, both fields).
    Order2 { pattern: SeprSequence },
    /// Statement (1): `A+XA+`, `A-XA-`, `S+XA+`, `S-XA-`.
    EndsAgree { x: SeprTerm },
    /// Statement (2): `A+YS+`, `A-YS-`, `S+YS+`, `S-YS-`.
    EndsAgreeSemi { y: SeprTerm },
    /// Statement (3): contains a forbidden order-2 window.
    ContainsOrder2 { window: SeprSequence },
    /// Statement (4): underlying epr-sequence is `NNA`, `NNS` or `NSA`.
    UnderlyingEpr { epr: EprSequence },
    /// Real symmetric only: `NA+Z` or `NA-Z` with `Z` in `{N,S*,S+,S-}`.
    RealNaZ { a: SeprTerm, z: SeprTerm },
    /// Real symmetric only: `NA+A*`.
    RealNaPlusAStar,
    /// A sequence that never starts an sepr-sequence.
    NotInitial { prefix: SeprSequence },
    /// Real symmetric only: `SNA` inside `l_1 ... l_{n-2}`.
    SnaWindow,
}

impl Rule {
    /// Short label of the statement family.
    pub fn family(&self) -> &'static str {
        match self {
            Rule::Order2 { .. } => "order-2",
            Rule::EndsAgree { .. } => "statement (1)",
            Rule::EndsAgreeSemi { .. } => "statement (2)",
            Rule::ContainsOrder2 { .. } => "statement (3)",
            Rule::UnderlyingEpr { .. } => "statement (4)",
            Rule::RealNaZ { .. } => "real statement (2)",
            Rule::RealNaPlusAStar => "real statement (3)",
            Rule::NotInitial { .. } => "initial",
            Rule::SnaWindow => "SNA",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Order2 { pattern } => write!(f, "order-2 rule: {pattern} (A*N, NA*, NS*, S*N)"),
            Rule::EndsAgree { x } => write!(f, "statement (1) {{A+XA+, A-XA-, S+XA+, S-XA-}} with X={x}"),
            Rule::EndsAgreeSemi { y } => write!(f, "statement (2) {{A+YS+, A-YS-, S+YS+, S-YS-}} with Y={y}"),
            Rule::ContainsOrder2 { window } => write!(f, "statement (3): contains {window}"),
            Rule::UnderlyingEpr { epr } => write!(f, "statement (4): underlying epr-sequence {epr}"),
            Rule::RealNaZ { a, z } => write!(f, "real symmetric NA+Z/NA-Z rule: N{a}{z}"),
            Rule::RealNaPlusAStar => write!(f, "Proposition NA+A* rule"),
            Rule::NotInitial { prefix } => write!(f, "Basic Proposition: {prefix} cannot be initial"),
            Rule::SnaWindow => write!(f, "SNA rule: SNA within l_1..l_(n-2)"),
        }
    }
}

/// Outcome of a membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Forbidden { rule: Rule },
    NotForbidden,
}

impl Verdict {
    pub fn is_forbidden(&self) -> bool {
        matches!(self, Verdict::Forbidden { .. })
    }

    pub fn rule(&self) -> Option<&Rule> {
        match self {
            Verdict::Forbidden { rule } => Some(rule),
            Verdict::NotForbidden => None,
        }
    }
}

const ORDER2: [[SeprTerm; 2]; 4] = [[AStar, N], [N, AStar], [N, SStar], [SStar, N]];
const ENDS_AGREE: [(SeprTerm, SeprTerm); 4] = [(APlus, APlus), (AMinus, AMinus), (SPlus, APlus), (SMinus, AMinus)];
const ENDS_AGREE_MIDDLE: [SeprTerm; 5] = [AStar, N, SStar, SPlus, SMinus];
const ENDS_AGREE_SEMI: [(SeprTerm, SeprTerm); 4] = [(APlus, SPlus), (AMinus, SMinus), (SPlus, SPlus), (SMinus, SMinus)];
const ENDS_AGREE_SEMI_MIDDLE: [SeprTerm; 3] = [AStar, N, SStar];
const EPR_HERMITIAN: [[EprTerm; 3]; 3] =
    [[EprTerm::N, EprTerm::N, EprTerm::A], [EprTerm::N, EprTerm::N, EprTerm::S], [EprTerm::N, EprTerm::S, EprTerm::A]];
const EPR_REAL_EXTRA: [[EprTerm; 3]; 2] = [[EprTerm::N, EprTerm::A, EprTerm::N], [EprTerm::N, EprTerm::A, EprTerm::S]];
const REAL_NA_Z: [SeprTerm; 4] = [N, SStar, SPlus, SMinus];

fn seq(terms: &[SeprTerm]) -> SeprSequence {
    SeprSequence::new(terms.to_vec()).expect("nonempty")
}

fn epr(terms: &[EprTerm]) -> EprSequence {
    EprSequence::new(terms.to_vec()).expect("nonempty")
}

fn order2_rule(t: &[SeprTerm]) -> Option<Rule> {
    ORDER2.iter().find(|p| p[..] == *t).map(|p| Rule::Order2 { pattern: seq(p) })
}

fn order3_rule(t: [SeprTerm; 3], field: Field) -> Option<Rule> {
    let [first, middle, last] = t;
    if ENDS_AGREE.contains(&(first, last)) && ENDS_AGREE_MIDDLE.contains(&middle) {
        return Some(Rule::EndsAgree { x: middle });
    }
    if ENDS_AGREE_SEMI.contains(&(first, last)) && ENDS_AGREE_SEMI_MIDDLE.contains(&middle) {
        return Some(Rule::EndsAgreeSemi { y: middle });
    }
    if let Some(w) = t.windows(2).find(|w| ORDER2.iter().any(|p| p[..] == **w)) {
        return Some(Rule::ContainsOrder2 { window: seq(w) });
    }
    let underlying = [first.underlying(), middle.underlying(), last.underlying()];
    if EPR_HERMITIAN.contains(&underlying) {
        return Some(Rule::UnderlyingEpr { epr: epr(&underlying) });
    }
    if field == Field::RealSymmetric && first == N {
        if matches!(middle, APlus | AMinus) && REAL_NA_Z.contains(&last) {
            return Some(Rule::RealNaZ { a: middle, z: last });
        }
        if middle == APlus && last == AStar {
            return Some(Rule::RealNaPlusAStar);
        }
    }
    None
}

/// Verdict for an order-2 or order-3 pattern.
pub fn classify_sequence(pattern: &SeprSequence, field: Field) -> Result<Verdict, ClassifyError> {
    let t = pattern.terms();
    let rule = match t.len() {
        2 => order2_rule(t),
        3 => order3_rule([t[0], t[1], t[2]], field),
        other => return Err(ClassifyError::UnsupportedOrder(other)),
    };
    Ok(rule.map_or(Verdict::NotForbidden, |rule| Verdict::Forbidden { rule }))
}

/// Every sequence of the given order over the seven sepr-terms.
pub fn all_sequences(order: usize) -> Vec<SeprSequence> {
    let mut out: Vec<Vec<SeprTerm>> = vec![Vec::new()];
    for _ in 0..order {
        out = out
            .into_iter()
            .flat_map(|p| {
                SeprTerm::ALL.iter().map(move |&t| {
                    let mut q = p.clone();
                    q.push(t);
                    q
                })
            })
            .collect();
    }
    out.into_iter().filter_map(|t| SeprSequence::new(t).ok()).collect()
}

/// Forbidden order-2 sequences; the same four for both fields.
pub fn forbidden_order2(_field: Field) -> BTreeSet<SeprSequence> {
    ORDER2.iter().map(|p| seq(p)).collect()
}

/// The order-3 rule families, each expanded by substitution.
pub fn order3_families(field: Field) -> Vec<(&'static str, BTreeSet<SeprSequence>)> {
    let mut families = Vec::new();

    let ends_agree =
        ENDS_AGREE.iter().flat_map(|&(a, b)| ENDS_AGREE_MIDDLE.iter().map(move |&x| seq(&[a, x, b]))).collect();
    families.push(("statement (1)", ends_agree));

    let ends_agree_semi = ENDS_AGREE_SEMI
        .iter()
        .flat_map(|&(a, b)| ENDS_AGREE_SEMI_MIDDLE.iter().map(move |&y| seq(&[a, y, b])))
        .collect();
    families.push(("statement (2)", ends_agree_semi));

    let contains = ORDER2
        .iter()
        .flat_map(|&[p, q]| SeprTerm::ALL.iter().flat_map(move |&t| [seq(&[p, q, t]), seq(&[t, p, q])]))
        .collect();
    families.push(("statement (3)", contains));

    let underlying = EPR_HERMITIAN.iter().flat_map(expand_epr).collect();
    families.push(("statement (4)", underlying));

    if field == Field::RealSymmetric {
        let na_z = [APlus, AMinus].iter().flat_map(|&a| REAL_NA_Z.iter().map(move |&z| seq(&[N, a, z]))).collect();
        families.push(("real statement (2)", na_z));
        families.push(("real statement (3)", BTreeSet::from([seq(&[N, APlus, AStar])])));
    }
    families
}

fn expand_epr(e: &[EprTerm; 3]) -> Vec<SeprSequence> {
    let mut out = Vec::new();
    for &a in SeprTerm::refinements(e[0]) {
        for &b in SeprTerm::refinements(e[1]) {
            for &c in SeprTerm::refinements(e[2]) {
                out.push(seq(&[a, b, c]));
            }
        }
    }
    out
}

/// Union of the order-3 rule families: 92 sequences over Hermitian, 101
/// over real symmetric matrices.
pub fn forbidden_order3(field: Field) -> &'static BTreeSet<SeprSequence> {
    static HERMITIAN: OnceLock<BTreeSet<SeprSequence>> = OnceLock::new();
    static REAL: OnceLock<BTreeSet<SeprSequence>> = OnceLock::new();
    let cell = match field {
        Field::Hermitian => &HERMITIAN,
        Field::RealSymmetric => &REAL,
    };
    cell.get_or_init(|| order3_families(field).into_iter().flat_map(|(_, s)| s).collect())
}

/// Forbidden order-3 epr-sequences.
pub fn epr_forbidden_order3(field: Field) -> BTreeSet<EprSequence> {
    let mut set: BTreeSet<EprSequence> = EPR_HERMITIAN.iter().map(|e| epr(e)).collect();
    if field == Field::RealSymmetric {
        set.extend(EPR_REAL_EXTRA.iter().map(|e| epr(e)));
    }
    set
}

/// One forbidden occurrence found by [`scan_for_forbidden`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanHit {
    /// 1-based start of the offending window.
    pub position: usize,
    pub pattern: SeprSequence,
    pub rule: Rule,
}

impl fmt::Display for ScanHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.pattern, self.position, self.rule)
    }
}

/// Every forbidden window of length 2 or 3, every forbidden initial pair,
/// and (real symmetric) every `SNA` inside `l_1 ... l_{n-2}`.
pub fn scan_for_forbidden(s: &SeprSequence, field: Field) -> Vec<ScanHit> {
    let mut hits = Vec::new();
    for len in [2, 3] {
        for (position, window) in s.windows(len) {
            if let Ok(Verdict::Forbidden { rule }) = classify_sequence(&window, field) {
                hits.push(ScanHit { position, pattern: window, rule });
            }
        }
    }
    if s.len() >= 2 {
        let prefix = s.window(1, 2);
        if not_initial().contains(&prefix) {
            hits.push(ScanHit { position: 1, pattern: prefix.clone(), rule: Rule::NotInitial { prefix } });
        }
    }
    if field == Field::RealSymmetric && s.len() >= 5 {
        let head = s.uepr().prefix(s.len() - 2);
        let sna = epr(&[EprTerm::S, EprTerm::N, EprTerm::A]);
        let mut from = 0;
        while let Some(p) = head.terms()[from..].windows(3).position(|w| w == sna.terms()) {
            let position = from + p + 1;
            hits.push(ScanHit { position, pattern: s.window(position, 3), rule: Rule::SnaWindow });
            from += p + 1;
        }
    }
    hits.sort_by_key(|h| (h.position, h.pattern.len()));
    hits
}

fn not_initial() -> &'static BTreeSet<SeprSequence> {
    static SET: OnceLock<BTreeSet<SeprSequence>> = OnceLock::new();
    SET.get_or_init(|| fixtures::NOT_INITIAL.iter().map(|t| t.parse().expect("fixture parses")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> SeprSequence {
        text.parse().unwrap()
    }

    fn parsed(list: &[&str]) -> BTreeSet<SeprSequence> {
        list.iter().map(|t| s(t)).collect()
    }

    #[test]
    fn order2_sets() {
        let expected = parsed(&["A*N", "NA*", "NS*", "S*N"]);
        assert_eq!(forbidden_order2(Field::Hermitian), expected);
        assert_eq!(forbidden_order2(Field::RealSymmetric), expected);
        let all = all_sequences(2);
        assert_eq!(all.len(), 49);
        let attainable: BTreeSet<_> = all.into_iter().filter(|p| !expected.contains(p)).collect();
        assert_eq!(attainable.len(), 45);
        let mut listed = parsed(&fixtures::LISTED_ORDER2_ATTAINABLE);
        listed.insert(s("NN"));
        assert_eq!(attainable, listed);
    }

    #[test]
    fn hermitian_order3_matches_listing() {
        let generated = forbidden_order3(Field::Hermitian);
        assert_eq!(generated.len(), 92);
        assert_eq!(generated, &parsed(&fixtures::LISTED_ORDER3_HERMITIAN));
        assert_eq!(all_sequences(3).len(), 343);
    }

    #[test]
    fn real_order3_adds_nine() {
        let h = forbidden_order3(Field::Hermitian);
        let r = forbidden_order3(Field::RealSymmetric);
        assert_eq!(r.len(), 101);
        assert!(h.is_subset(r));
        let diff: BTreeSet<_> = r.difference(h).cloned().collect();
        assert_eq!(diff, parsed(&fixtures::REAL_ONLY_ORDER3));
    }

    #[test]
    fn family_sizes() {
        let fams = order3_families(Field::Hermitian);
        assert_eq!(fams[0].1.len(), 20);
        assert_eq!(fams[1].1.len(), 12);
    }

    #[test]
    fn predicate_agrees_with_generation() {
        for field in [Field::Hermitian, Field::RealSymmetric] {
            let set = forbidden_order3(field);
            for p in all_sequences(3) {
                let v = classify_sequence(&p, field).unwrap();
                assert_eq!(v.is_forbidden(), set.contains(&p), "{p} over {field}");
            }
            for p in all_sequences(2) {
                let v = classify_sequence(&p, field).unwrap();
                assert_eq!(v.is_forbidden(), forbidden_order2(field).contains(&p));
            }
        }
    }

    #[test]
    fn verdict_examples() {
        let v = classify_sequence(&s("A+NA+"), Field::Hermitian).unwrap();
        assert_eq!(v, Verdict::Forbidden { rule: Rule::EndsAgree { x: N } });
        assert!(classify_sequence(&s("S+S*S+"), Field::Hermitian).unwrap().is_forbidden());
        assert_eq!(classify_sequence(&s("NA+A*"), Field::Hermitian).unwrap(), Verdict::NotForbidden);
        assert_eq!(
            classify_sequence(&s("NA+A*"), Field::RealSymmetric).unwrap(),
            Verdict::Forbidden { rule: Rule::RealNaPlusAStar }
        );
        for field in [Field::Hermitian, Field::RealSymmetric] {
            assert_eq!(classify_sequence(&s("A+A+A+"), field).unwrap(), Verdict::NotForbidden);
        }
        assert_eq!(classify_sequence(&s("N"), Field::Hermitian), Err(ClassifyError::UnsupportedOrder(1)));
        assert_eq!(classify_sequence(&s("NNNN"), Field::Hermitian), Err(ClassifyError::UnsupportedOrder(4)));
    }

    #[test]
    fn precedence_follows_statement_order() {
        // A+A*S+ matches statement (2) only; A+NA+ matches (1) and (3).
        let v = classify_sequence(&s("A+NA+"), Field::Hermitian).unwrap();
        assert_eq!(v.rule().unwrap().family(), "statement (1)");
        let v = classify_sequence(&s("A*NN"), Field::Hermitian).unwrap();
        assert_eq!(v.rule().unwrap().family(), "statement (3)");
        let v = classify_sequence(&s("NS+A+"), Field::Hermitian);
        assert_eq!(v.unwrap().rule().unwrap().family(), "statement (4)");
        let v = classify_sequence(&s("NA-N"), Field::RealSymmetric).unwrap();
        assert_eq!(v.rule().unwrap().family(), "real statement (2)");
    }

    #[test]
    fn epr_sets() {
        let h: Vec<String> = epr_forbidden_order3(Field::Hermitian).iter().map(|e| e.to_string()).collect();
        assert_eq!(h, ["NNA", "NNS", "NSA"]);
        let r: Vec<String> = epr_forbidden_order3(Field::RealSymmetric).iter().map(|e| e.to_string()).collect();
        assert_eq!(r, ["NAN", "NAS", "NNA", "NNS", "NSA"]);
        let e = epr_forbidden_order3(Field::Hermitian);
        for (name, family) in order3_families(Field::Hermitian) {
            if name == "statement (4)" {
                assert!(family.iter().all(|p| e.contains(&p.uepr())));
            }
        }
    }

    #[test]
    fn statement3_closure() {
        let set = forbidden_order3(Field::Hermitian);
        for p in all_sequences(3) {
            let has = ["A*N", "NA*", "S*N", "NS*"].iter().any(|w| p.find(&s(w)).is_some());
            if has {
                assert!(set.contains(&p), "{p}");
            }
        }
    }

    #[test]
    fn scan_examples() {
        assert!(scan_for_forbidden(&s("NN"), Field::Hermitian).is_empty());
        let hits = scan_for_forbidden(&s("A*NS+"), Field::Hermitian);
        assert_eq!(hits[0].position, 1);
        assert_eq!(hits[0].pattern, s("A*N"));
        assert_eq!(hits[0].rule, Rule::Order2 { pattern: s("A*N") });
        // Initial NA+ is excluded even though NA+ is an attainable window.
        let hits = scan_for_forbidden(&s("NA+"), Field::Hermitian);
        assert_eq!(hits.len(), 1);
        assert!(matches!(hits[0].rule, Rule::NotInitial { .. }));
        // SNA counted only inside l_1..l_{n-2}.
        let hits = scan_for_forbidden(&s("A+S+NA+A+A+"), Field::RealSymmetric);
        assert!(hits.iter().any(|h| h.rule == Rule::SnaWindow && h.position == 2));
        let hits = scan_for_forbidden(&s("A+A+S+NA+"), Field::RealSymmetric);
        assert!(hits.iter().all(|h| h.rule != Rule::SnaWindow));
    }
}
