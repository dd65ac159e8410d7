//! The witness matrices with their claimed sepr-sequences.
//!
//! Each family is stored as a token template plus parameter rows, so a
//! transcription slip stays confined to one row. One witness needs the entry
//! `2+sqrt5`; it is carried over `Q(sqrt5)` and its minors are signed exactly.

mod table;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::{ExactError, GaussianRational, Rational, Sqrt5};
use crate::matrix::{elimination, k_subsets, HermitianMatrix, MatrixError};
use crate::sepr::{classify_order, compute_sepr, SeprSequence};

use table::{Template, FAMILIES};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown witness id {0:?}")]
    UnknownId(String),
    #[error("unknown witness family {0:?}")]
    UnknownFamily(String),
    #[error("{id}: bad token {token:?}: {reason}")]
    Token { id: String, token: String, reason: String },
    #[error("{id}: base matrix is singular")]
    Singular { id: String },
    #[error("{id}: instantiated matrix is not Hermitian")]
    NotHermitian { id: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessField {
    Real,
    Complex,
}

impl fmt::Display for WitnessField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessField::Real => "real",
            WitnessField::Complex => "complex",
        })
    }
}

#[derive(Debug, Clone)]
pub struct WitnessRecord {
    pub id: String,
    pub family: &'static str,
    pub params: Vec<String>,
    pub field: WitnessField,
    pub claimed: SeprSequence,
    pub source: String,
    /// The listed matrix is the inverse of the instantiated template.
    pub inverse: bool,
    template: Template,
    vars: &'static [&'static str],
}

/// Real symmetric matrix over `Q(sqrt5)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticMatrix {
    rows: Vec<Vec<Sqrt5>>,
}

impl QuadraticMatrix {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Sqrt5>] {
        &self.rows
    }

    pub fn inverse(&self) -> Option<QuadraticMatrix> {
        elimination::inverse(&self.rows).map(|rows| QuadraticMatrix { rows })
    }

    /// Every principal minor by elimination over `Q(sqrt5)`, each sign exact.
    pub fn sepr(&self) -> SeprSequence {
        let n = self.order();
        let terms = (1..=n)
            .map(|k| {
                let signs = k_subsets(n, k).into_iter().map(|s| {
                    let sub: Vec<Vec<Sqrt5>> =
                        s.iter().map(|&i| s.iter().map(|&j| self.rows[i][j].clone()).collect()).collect();
                    elimination::determinant(&sub).sign()
                });
                classify_order(signs).expect("k-subsets are nonempty")
            })
            .collect();
        SeprSequence::new(terms).expect("order is positive")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WitnessMatrix {
    Gaussian(HermitianMatrix),
    Quadratic(QuadraticMatrix),
}

impl WitnessMatrix {
    pub fn order(&self) -> usize {
        match self {
            WitnessMatrix::Gaussian(b) => b.order(),
            WitnessMatrix::Quadratic(q) => q.order(),
        }
    }

    pub fn sepr(&self) -> SeprSequence {
        match self {
            WitnessMatrix::Gaussian(b) => compute_sepr(b),
            WitnessMatrix::Quadratic(q) => q.sepr(),
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            WitnessMatrix::Gaussian(b) => b.is_real(),
            WitnessMatrix::Quadratic(_) => true,
        }
    }

    pub fn as_gaussian(&self) -> Option<&HermitianMatrix> {
        match self {
            WitnessMatrix::Gaussian(b) => Some(b),
            WitnessMatrix::Quadratic(_) => None,
        }
    }

    /// Name of the field the minors were evaluated in.
    pub fn arithmetic(&self) -> &'static str {
        match self {
            WitnessMatrix::Gaussian(_) => "Q(i)",
            WitnessMatrix::Quadratic(_) => "Q(sqrt5)",
        }
    }

    fn inverse(&self, id: &str) -> Result<WitnessMatrix, CatalogError> {
        let singular = || CatalogError::Singular { id: id.to_string() };
        match self {
            WitnessMatrix::Gaussian(b) => b.inverse().map(WitnessMatrix::Gaussian).map_err(|e| match e {
                MatrixError::Singular => singular(),
                _ => CatalogError::NotHermitian { id: id.to_string() },
            }),
            WitnessMatrix::Quadratic(q) => q.inverse().map(WitnessMatrix::Quadratic).ok_or_else(singular),
        }
    }
}

#[derive(Debug, Clone)]
enum Value {
    Gauss(GaussianRational),
    Quad(Sqrt5),
}

impl Value {
    fn conj(&self) -> Value {
        match self {
            Value::Gauss(g) => Value::Gauss(g.conj()),
            Value::Quad(q) => Value::Quad(q.clone()),
        }
    }
}

/// Literal grammar: a rational, `i`, `-i`, or `p+sqrt5` / `p+qsqrt5`.
fn parse_value(text: &str) -> Result<Value, String> {
    match text {
        "i" => return Ok(Value::Gauss(GaussianRational::i())),
        "-i" => return Ok(Value::Gauss(-GaussianRational::i())),
        _ => {}
    }
    if let Some(head) = text.strip_suffix("sqrt5") {
        let split = head.rfind(['+', '-']).filter(|&p| p > 0).ok_or("missing rational part")?;
        let rational: Rational = head[..split].parse().map_err(|e: ExactError| e.to_string())?;
        let coeff = &head[split..];
        let surd = match coeff {
            "+" => Rational::one(),
            "-" => -Rational::one(),
            _ => coeff.trim_start_matches('+').parse().map_err(|e: ExactError| e.to_string())?,
        };
        return Ok(Value::Quad(Sqrt5::new(rational, surd)));
    }
    text.parse::<Rational>().map(|r| Value::Gauss(r.into())).map_err(|e| e.to_string())
}

impl WitnessRecord {
    /// The template instantiated at `params`, before any inversion.
    pub fn base(&self) -> Result<WitnessMatrix, CatalogError> {
        let token_err =
            |token: &str, reason: String| CatalogError::Token { id: self.id.clone(), token: token.to_string(), reason };
        let lookup =
            |name: &str| -> Option<&String> { self.vars.iter().position(|v| *v == name).map(|i| &self.params[i]) };
        let mut cells = Vec::with_capacity(self.template.len());
        for row in self.template {
            let mut out = Vec::with_capacity(row.len());
            for &token in row.iter() {
                let (conj, name) = match token.strip_prefix('~') {
                    Some(rest) => (true, rest),
                    None => (false, token),
                };
                let text = match lookup(name) {
                    Some(p) => p.as_str(),
                    None if conj => return Err(token_err(token, "conjugate of an unknown variable".into())),
                    None => name,
                };
                let v = parse_value(text).map_err(|r| token_err(token, r))?;
                out.push(if conj { v.conj() } else { v });
            }
            cells.push(out);
        }
        let not_hermitian = || CatalogError::NotHermitian { id: self.id.clone() };
        if cells.iter().flatten().any(|v| matches!(v, Value::Quad(_))) {
            let rows = cells
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|v| match v {
                            Value::Quad(q) => Ok(q),
                            Value::Gauss(g) if g.is_real() => Ok(Sqrt5::from_rational(g.re)),
                            Value::Gauss(_) => Err(not_hermitian()),
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let n = rows.len();
            if (0..n).any(|i| rows[i].len() != n || (0..i).any(|j| rows[i][j] != rows[j][i])) {
                return Err(not_hermitian());
            }
            return Ok(WitnessMatrix::Quadratic(QuadraticMatrix { rows }));
        }
        let rows = cells
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| match v {
                        Value::Gauss(g) => g,
                        Value::Quad(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        HermitianMatrix::new(rows).map(WitnessMatrix::Gaussian).map_err(|_| not_hermitian())
    }

    pub fn build(&self) -> Result<WitnessMatrix, CatalogError> {
        let base = self.base()?;
        if self.inverse {
            base.inverse(&self.id)
        } else {
            Ok(base)
        }
    }

    /// Human-readable constructor call, e.g. `F(2,1/2,2)^-1`.
    pub fn constructor(&self) -> String {
        let call =
            if self.params.is_empty() { "explicit".to_string() } else { format!("F({})", self.params.join(",")) };
        if self.inverse {
            format!("{call}^-1")
        } else {
            call
        }
    }
}

/// All catalog entries in table order.
pub fn records() -> &'static [WitnessRecord] {
    static RECORDS: OnceLock<Vec<WitnessRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| {
        let mut out = Vec::new();
        for fam in FAMILIES {
            for (k, entry) in fam.entries.iter().enumerate() {
                let (template, vars) = entry.matrix.unwrap_or((fam.template, fam.vars));
                out.push(WitnessRecord {
                    id: format!("{}.{}", fam.name, k + 1),
                    family: fam.name,
                    params: entry.params.iter().map(|p| p.to_string()).collect(),
                    field: fam.field,
                    claimed: entry.claimed.parse().expect("catalog sequences are well formed"),
                    source: format!("Lemma {} ({})", fam.name, k + 1),
                    inverse: fam.inverse,
                    template,
                    vars,
                });
            }
        }
        out
    })
}

pub fn families() -> impl Iterator<Item = &'static str> {
    FAMILIES.iter().map(|f| f.name)
}

pub fn record(id: &str) -> Result<&'static WitnessRecord, CatalogError> {
    records().iter().find(|r| r.id == id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

pub fn build_witness(id: &str) -> Result<WitnessMatrix, CatalogError> {
    record(id)?.build()
}

#[derive(Debug, Clone)]
pub struct VerificationRow {
    pub id: String,
    pub claimed: SeprSequence,
    pub computed: SeprSequence,
    pub matches: bool,
    pub arithmetic: &'static str,
}

impl VerificationRow {
    /// `id<TAB>claimed<TAB>computed<TAB>pass|fail`
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.id, self.claimed, self.computed, if self.matches { "pass" } else { "fail" })
    }
}

pub fn verify_record(r: &WitnessRecord) -> Result<VerificationRow, CatalogError> {
    let m = r.build()?;
    let computed = m.sepr();
    Ok(VerificationRow {
        id: r.id.clone(),
        matches: computed == r.claimed,
        claimed: r.claimed.clone(),
        computed,
        arithmetic: m.arithmetic(),
    })
}

pub fn verify_witness(id: &str) -> Result<(SeprSequence, bool), CatalogError> {
    let row = verify_record(record(id)?)?;
    Ok((row.computed, row.matches))
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.matches).count()
    }

    pub fn total(&self) -> usize {
        self.rows.len()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

/// Verifies every record matching the optional family and id filters.
pub fn verify_all(family: Option<&str>, id: Option<&str>) -> Result<VerificationReport, CatalogError> {
    if let Some(f) = family {
        if !families().any(|x| x == f) {
            return Err(CatalogError::UnknownFamily(f.to_string()));
        }
    }
    if let Some(i) = id {
        record(i)?;
    }
    let rows = records()
        .iter()
        .filter(|r| family.is_none_or(|f| r.family == f) && id.is_none_or(|i| r.id == i))
        .map(verify_record)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport { rows })
}
