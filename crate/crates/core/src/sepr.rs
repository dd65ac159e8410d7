//! epr- and sepr-sequences: computation from principal minors and the
//! algebra on sequences.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::Sign;
use crate::matrix::{HermitianMatrix, PrincipalMinors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeprError {
    #[error("a sequence needs at least one term")]
    Empty,
    #[error("no minors given for this order")]
    NoMinors,
    #[error("unexpected {found:?} at byte {offset}")]
    Parse { offset: usize, found: String },
}

/// One term of an sepr-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeprTerm {
    AStar,
    APlus,
    AMinus,
    N,
    SStar,
    SPlus,
    SMinus,
}

impl SeprTerm {
    pub const ALL: [SeprTerm; 7] = [
        SeprTerm::AStar,
        SeprTerm::APlus,
        SeprTerm::AMinus,
        SeprTerm::N,
        SeprTerm::SStar,
        SeprTerm::SPlus,
        SeprTerm::SMinus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeprTerm::AStar => "A*",
            SeprTerm::APlus => "A+",
            SeprTerm::AMinus => "A-",
            SeprTerm::N => "N",
            SeprTerm::SStar => "S*",
            SeprTerm::SPlus => "S+",
            SeprTerm::SMinus => "S-",
        }
    }

    pub fn underlying(self) -> EprTerm {
        match self {
            SeprTerm::AStar | SeprTerm::APlus | SeprTerm::AMinus => EprTerm::A,
            SeprTerm::N => EprTerm::N,
            SeprTerm::SStar | SeprTerm::SPlus | SeprTerm::SMinus => EprTerm::S,
        }
    }

    /// Swaps `+` and `-`.
    pub fn neg(self) -> SeprTerm {
        match self {
            SeprTerm::APlus => SeprTerm::AMinus,
            SeprTerm::AMinus => SeprTerm::APlus,
            SeprTerm::SPlus => SeprTerm::SMinus,
            SeprTerm::SMinus => SeprTerm::SPlus,
            t => t,
        }
    }

    /// `A` becomes `S` with the same superscript; other terms are fixed.
    pub fn weaken(self) -> SeprTerm {
        match self {
            SeprTerm::AStar => SeprTerm::SStar,
            SeprTerm::APlus => SeprTerm::SPlus,
            SeprTerm::AMinus => SeprTerm::SMinus,
            t => t,
        }
    }

    /// `S` becomes `A` with the same superscript; other terms are fixed.
    pub fn strengthen(self) -> SeprTerm {
        match self {
            SeprTerm::SStar => SeprTerm::AStar,
            SeprTerm::SPlus => SeprTerm::APlus,
            SeprTerm::SMinus => SeprTerm::AMinus,
            t => t,
        }
    }

    /// The terms an sepr-term may expand to under a given epr-term.
    pub fn refinements(t: EprTerm) -> &'static [SeprTerm] {
        match t {
            EprTerm::A => &[SeprTerm::AStar, SeprTerm::APlus, SeprTerm::AMinus],
            EprTerm::N => &[SeprTerm::N],
            EprTerm::S => &[SeprTerm::SStar, SeprTerm::SPlus, SeprTerm::SMinus],
        }
    }
}

impl fmt::Display for SeprTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One term of an epr-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EprTerm {
    A,
    N,
    S,
}

impl EprTerm {
    pub fn as_char(self) -> char {
        match self {
            EprTerm::A => 'A',
            EprTerm::N => 'N',
            EprTerm::S => 'S',
        }
    }
}

/// Position (1-based) of the first contiguous occurrence of `pattern`.
fn find_window<T: PartialEq>(haystack: &[T], pattern: &[T]) -> Option<usize> {
    if pattern.is_empty() || pattern.len() > haystack.len() {
        return None;
    }
    haystack.windows(pattern.len()).position(|w| w == pattern).map(|p| p + 1)
}

/// A nonempty sepr-sequence `t_1 t_2 ... t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeprSequence(Vec<SeprTerm>);

impl SeprSequence {
    pub fn new(terms: Vec<SeprTerm>) -> Result<Self, SeprError> {
        if terms.is_empty() {
            return Err(SeprError::Empty);
        }
        Ok(SeprSequence(terms))
    }

    pub fn terms(&self) -> &[SeprTerm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> SeprTerm {
        *self.0.last().expect("sequences are nonempty")
    }

    pub fn uepr(&self) -> EprSequence {
        EprSequence(self.0.iter().map(|t| t.underlying()).collect())
    }

    pub fn neg(&self) -> SeprSequence {
        SeprSequence(self.0.iter().map(|t| t.neg()).collect())
    }

    /// First 1-based position where `pattern` occurs as a contiguous run.
    pub fn find(&self, pattern: &SeprSequence) -> Option<usize> {
        find_window(&self.0, &pattern.0)
    }

    /// The contiguous run of `len` terms starting at 1-based `position`.
    pub fn window(&self, position: usize, len: usize) -> SeprSequence {
        SeprSequence(self.0[position - 1..position - 1 + len].to_vec())
    }

    /// Every contiguous run of length `len`, with its 1-based position.
    pub fn windows(&self, len: usize) -> impl Iterator<Item = (usize, SeprSequence)> + '_ {
        self.0.windows(len).enumerate().map(|(i, w)| (i + 1, SeprSequence(w.to_vec())))
    }

    /// Predicted sequence of `-B`: odd orders negated, even orders fixed.
    pub fn of_negated_matrix(&self) -> SeprSequence {
        SeprSequence(self.0.iter().enumerate().map(|(i, t)| if i % 2 == 0 { t.neg() } else { *t }).collect())
    }

    /// Predicted sequence of `B ⊕ O_1`.
    pub fn append_zero(&self) -> SeprSequence {
        let mut terms: Vec<SeprTerm> = self.0.iter().map(|t| t.weaken()).collect();
        terms.push(SeprTerm::N);
        SeprSequence(terms)
    }

    /// Predicted sequence after duplicating the last row and column: the
    /// first term survives, later terms are weakened, and `N` is appended.
    pub fn append_last_duplicate(&self) -> SeprSequence {
        let mut terms: Vec<SeprTerm> =
            self.0.iter().enumerate().map(|(i, t)| if i == 0 { *t } else { t.weaken() }).collect();
        terms.push(SeprTerm::N);
        SeprSequence(terms)
    }

    /// Predicted sequence of `B^{-1}` when the last term is `A+` or `A-`.
    pub fn of_inverse(&self) -> Option<SeprSequence> {
        let (last, head) = self.0.split_last()?;
        let reversed = head.iter().rev().copied();
        let terms: Vec<SeprTerm> = match last {
            SeprTerm::APlus => reversed.chain([SeprTerm::APlus]).collect(),
            SeprTerm::AMinus => reversed.map(SeprTerm::neg).chain([SeprTerm::AMinus]).collect(),
            _ => return None,
        };
        Some(SeprSequence(terms))
    }
}

impl FromStr for SeprSequence {
    type Err = SeprError;

    /// `term := ('A'|'S')('*'|'+'|'-') | 'N'`, one or more, no separators.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bytes = text.as_bytes();
        let mut terms = Vec::new();
        let mut i = 0;
        let err = |offset: usize| SeprError::Parse {
            offset,
            found: text[offset..].chars().next().map_or_else(|| "end of input".to_string(), String::from),
        };
        while i < bytes.len() {
            let term = match bytes[i] {
                b'N' => {
                    i += 1;
                    SeprTerm::N
                }
                letter @ (b'A' | b'S') => {
                    let sup = *bytes.get(i + 1).ok_or_else(|| err(i + 1))?;
                    let t = match (letter, sup) {
                        (b'A', b'*') => SeprTerm::AStar,
                        (b'A', b'+') => SeprTerm::APlus,
                        (b'A', b'-') => SeprTerm::AMinus,
                        (b'S', b'*') => SeprTerm::SStar,
                        (b'S', b'+') => SeprTerm::SPlus,
                        (b'S', b'-') => SeprTerm::SMinus,
                        _ => return Err(err(i + 1)),
                    };
                    i += 2;
                    t
                }
                _ => return Err(err(i)),
            };
            terms.push(term);
        }
        SeprSequence::new(terms)
    }
}

impl fmt::Display for SeprSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| f.write_str(t.as_str()))
    }
}

/// A nonempty epr-sequence `l_1 l_2 ... l_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EprSequence(Vec<EprTerm>);

impl EprSequence {
    pub fn new(terms: Vec<EprTerm>) -> Result<Self, SeprError> {
        if terms.is_empty() {
            return Err(SeprError::Empty);
        }
        Ok(EprSequence(terms))
    }

    pub fn terms(&self) -> &[EprTerm] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn find(&self, pattern: &EprSequence) -> Option<usize> {
        find_window(&self.0, &pattern.0)
    }

    /// Prefix of the first `len` terms (`len` ≥ 1).
    pub fn prefix(&self, len: usize) -> EprSequence {
        EprSequence(self.0[..len].to_vec())
    }
}

impl FromStr for EprSequence {
    type Err = SeprError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let terms = text
            .char_indices()
            .map(|(i, c)| match c {
                'A' => Ok(EprTerm::A),
                'N' => Ok(EprTerm::N),
                'S' => Ok(EprTerm::S),
                other => Err(SeprError::Parse { offset: i, found: other.to_string() }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        EprSequence::new(terms)
    }
}

impl fmt::Display for EprSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{}", t.as_char()))
    }
}

/// The sepr-term of one order from the signs of its principal minors.
pub fn classify_order(signs: impl IntoIterator<Item = Sign>) -> Result<SeprTerm, SeprError> {
    let (mut neg, mut zero, mut pos) = (false, false, false);
    let mut any = false;
    for s in signs {
        any = true;
        match s {
            Sign::Negative => neg = true,
            Sign::Zero => zero = true,
            Sign::Positive => pos = true,
        }
    }
    if !any {
        return Err(SeprError::NoMinors);
    }
    Ok(match (zero, pos, neg) {
        (false, true, true) => SeprTerm::AStar,
        (false, true, false) => SeprTerm::APlus,
        (false, false, true) => SeprTerm::AMinus,
        (true, false, false) => SeprTerm::N,
        (true, true, true) => SeprTerm::SStar,
        (true, true, false) => SeprTerm::SPlus,
        (true, false, true) => SeprTerm::SMinus,
        (false, false, false) => unreachable!("at least one sign was seen"),
    })
}

/// The epr-term of one order: all, none, or some minors nonzero.
pub fn classify_order_epr(signs: impl IntoIterator<Item = Sign>) -> Result<EprTerm, SeprError> {
    let (mut zero, mut nonzero) = (false, false);
    for s in signs {
        if s == Sign::Zero {
            zero = true;
        } else {
            nonzero = true;
        }
    }
    Ok(match (zero, nonzero) {
        (false, true) => EprTerm::A,
        (true, false) => EprTerm::N,
        (true, true) => EprTerm::S,
        (false, false) => return Err(SeprError::NoMinors),
    })
}

/// sepr-sequence of the principal submatrix on `within`, read from a table.
pub fn sepr_from_table(table: &PrincipalMinors, within: u64) -> SeprSequence {
    let m = within.count_ones() as usize;
    let terms = (1..=m).map(|k| classify_order(table.signs_of_order_within(k, within)).expect("k <= order")).collect();
    SeprSequence::new(terms).expect("within is nonempty")
}

/// epr-sequence of the principal submatrix on `within`, read from a table.
pub fn epr_from_table(table: &PrincipalMinors, within: u64) -> EprSequence {
    let m = within.count_ones() as usize;
    let terms =
        (1..=m).map(|k| classify_order_epr(table.signs_of_order_within(k, within)).expect("k <= order")).collect();
    EprSequence::new(terms).expect("within is nonempty")
}

pub fn compute_sepr(b: &HermitianMatrix) -> SeprSequence {
    let table = b.principal_minors();
    sepr_from_table(&table, table.full_mask())
}

pub fn compute_epr(b: &HermitianMatrix) -> EprSequence {
    let table = b.principal_minors();
    epr_from_table(&table, table.full_mask())
}

pub fn uepr(s: &SeprSequence) -> EprSequence {
    s.uepr()
}

pub fn neg_sequence(s: &SeprSequence) -> SeprSequence {
    s.neg()
}

pub fn parse_sequence(text: &str) -> Result<SeprSequence, SeprError> {
    text.parse()
}

pub fn format_sequence(s: &SeprSequence) -> String {
    s.to_string()
}
