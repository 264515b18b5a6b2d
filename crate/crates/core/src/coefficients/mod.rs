//! Littlewood–Richardson, Kronecker and Heisenberg coefficients, each with
//! a second, independent evaluation path.

mod hbasis;
mod heisenberg;
mod hive;
mod kronecker;
mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{partitions_of, Partition};
use crate::symfun::{SymfunError, MAX_TABLE_DEGREE};

pub use hbasis::{
    h_basis_heisenberg_product, h_basis_kron_product, heisenberg_coeff_oracle, kron_coeff_oracle, PartitionMultiset,
};
pub use heisenberg::{
    degree_split, heisenberg_coeff, heisenberg_coeff_by_sextuples, heisenberg_component, heisenberg_product,
};
pub use kronecker::{dimension, kron_coeff};
pub use lr::{skew_expansion, SkewExpansion};

#[derive(Debug, Error)]
pub enum CoefficientError {
    #[error("{kind} coefficient undefined for sizes |λ|={l}, |μ|={m}, |ν|={n}")]
    SizeMismatch {
        kind: CoefficientKind,
        l: usize,
        m: usize,
        n: usize,
    },
    #[error("compositions of sizes {left} and {right} have no Kronecker product")]
    CompositionSizeMismatch { left: usize, right: usize },
    #[error("degree {l} outside the Heisenberg range {min}..={max}")]
    DegreeOutOfRange { l: usize, min: usize, max: usize },
    #[error("engines disagree on {query}: primary {primary}, oracle {oracle}")]
    EngineMismatch {
        query: Box<CoefficientQuery>,
        primary: BigUint,
        oracle: BigUint,
    },
    #[error(transparent)]
    Symfun(SymfunError),
    #[error("internal consistency failure: {0}")]
    Integrity(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoefficientKind {
    #[serde(rename = "lr")]
    LittlewoodRichardson,
    #[serde(rename = "kron")]
    Kronecker,
    #[serde(rename = "heis")]
    Heisenberg,
}

impl CoefficientKind {
    pub const ALL: [CoefficientKind; 3] = [Self::LittlewoodRichardson, Self::Kronecker, Self::Heisenberg];

    pub fn name(self) -> &'static str {
        match self {
            Self::LittlewoodRichardson => "lr",
            Self::Kronecker => "kron",
            Self::Heisenberg => "heis",
        }
    }

    /// Whether `(|λ|, |μ|, |ν|)` is a size pattern this coefficient is defined on.
    pub fn accepts_sizes(self, l: usize, m: usize, n: usize) -> bool {
        match self {
            Self::LittlewoodRichardson => l == m + n,
            Self::Kronecker => l == m && m == n,
            Self::Heisenberg => degree_split(l, m, n).is_some(),
        }
    }
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
#[error("unknown coefficient kind `{0}` (expected lr, kron or heis)")]
pub struct UnknownKind(pub String);

impl FromStr for CoefficientKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lr" | "c" => Ok(Self::LittlewoodRichardson),
            "kron" | "kronecker" | "k" | "g" => Ok(Self::Kronecker),
            "heis" | "heisenberg" | "h" => Ok(Self::Heisenberg),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// LR tableaux; character table; factorized restriction/induction sum.
    Primary,
    /// Hives; contingency tables in the h-basis.
    Oracle,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Primary => "primary",
            Engine::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "primary" => Ok(Engine::Primary),
            "oracle" => Ok(Engine::Oracle),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoefficientQuery {
    pub kind: CoefficientKind,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl CoefficientQuery {
    pub fn new(kind: CoefficientKind, lambda: Partition, mu: Partition, nu: Partition) -> Self {
        CoefficientQuery { kind, lambda, mu, nu }
    }

    pub fn validate(&self) -> Result<(), CoefficientError> {
        if self
            .kind
            .accepts_sizes(self.lambda.size(), self.mu.size(), self.nu.size())
        {
            Ok(())
        } else {
            Err(CoefficientError::SizeMismatch {
                kind: self.kind,
                l: self.lambda.size(),
                m: self.mu.size(),
                n: self.nu.size(),
            })
        }
    }

    /// Rejects invalid size patterns instead of returning the conventional 0.
    pub fn evaluate(&self, engine: Engine) -> Result<BigUint, CoefficientError> {
        self.validate()?;
        let (l, m, n) = (&self.lambda, &self.mu, &self.nu);
        match (self.kind, engine) {
            (CoefficientKind::LittlewoodRichardson, Engine::Primary) => Ok(lr_coeff(l, m, n)),
            (CoefficientKind::LittlewoodRichardson, Engine::Oracle) => Ok(lr_coeff_hive(l, m, n)),
            (CoefficientKind::Kronecker, Engine::Primary) => kron_coeff(l, m, n),
            (CoefficientKind::Kronecker, Engine::Oracle) => kron_coeff_oracle(l, m, n),
            (CoefficientKind::Heisenberg, Engine::Primary) => {
                let q = m.size() + n.size() - l.size();
                if q > MAX_TABLE_DEGREE {
                    return Err(SymfunError::TableTooLarge(q).into());
                }
                Ok(heisenberg_coeff(l, m, n))
            }
            (CoefficientKind::Heisenberg, Engine::Oracle) => heisenberg_coeff_oracle(l, m, n),
        }
    }

    /// Both engines; an [`CoefficientError::EngineMismatch`] if they differ.
    pub fn evaluate_checked(&self) -> Result<BigUint, CoefficientError> {
        let primary = self.evaluate(Engine::Primary)?;
        let oracle = self.evaluate(Engine::Oracle)?;
        if primary != oracle {
            return Err(CoefficientError::EngineMismatch {
                query: Box::new(self.clone()),
                primary,
                oracle,
            });
        }
        Ok(primary)
    }
}

impl fmt::Display for CoefficientQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.kind, self.lambda, self.mu, self.nu)
    }
}

/// `c^λ_{μ,ν}`, zero when `|λ| != |μ| + |ν|`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    BigUint::from(lr::lr_count(lambda, mu, nu))
}

/// `c^λ_{μ,ν}` counted as integer hives.
pub fn lr_coeff_hive(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    BigUint::from(hive::hive_count(lambda, mu, nu))
}

/// A representation written as multiplicities of irreducibles, graded by
/// degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<Partition, BigUint>,
    degree_range: (usize, usize),
}

impl Decomposition {
    pub fn new(min_degree: usize, max_degree: usize) -> Self {
        assert!(min_degree <= max_degree);
        Decomposition {
            terms: BTreeMap::new(),
            degree_range: (min_degree, max_degree),
        }
    }

    /// The single irreducible `V_λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let mut d = Decomposition::new(lambda.size(), lambda.size());
        d.add(lambda.clone(), BigUint::from(1u8));
        d
    }

    /// Panics if `lambda` falls outside the degree range.
    pub fn add(&mut self, lambda: Partition, multiplicity: BigUint) {
        if multiplicity.is_zero() {
            return;
        }
        let (lo, hi) = self.degree_range;
        assert!(
            (lo..=hi).contains(&lambda.size()),
            "{lambda:?} outside degree range {lo}..={hi}"
        );
        *self.terms.entry(lambda).or_default() += multiplicity;
    }

    /// Adds every term of `other`, widening the range as needed.
    pub fn merge(&mut self, other: &Decomposition) {
        if self.terms.is_empty() && self.degree_range == (0, 0) {
            self.degree_range = other.degree_range;
        }
        self.degree_range = (
            self.degree_range.0.min(other.degree_range.0),
            self.degree_range.1.max(other.degree_range.1),
        );
        for (lambda, m) in &other.terms {
            self.add(lambda.clone(), m.clone());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigUint> {
        &self.terms
    }

    pub fn multiplicity(&self, lambda: &Partition) -> BigUint {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn degree_range(&self) -> (usize, usize) {
        self.degree_range
    }

    /// Total number of irreducible constituents, with multiplicity.
    pub fn length(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Terms of degree `l` only.
    pub fn component(&self, l: usize) -> Decomposition {
        let mut out = Decomposition::new(l, l);
        for (lambda, m) in self.terms.iter().filter(|(k, _)| k.size() == l) {
            out.add(lambda.clone(), m.clone());
        }
        out
    }

    /// `self # other`, extended bilinearly from irreducibles.
    pub fn heisenberg_mul(&self, other: &Decomposition) -> Decomposition {
        let (a, b) = (self.degree_range, other.degree_range);
        let mut out = Decomposition::new(a.0.max(b.0), a.1 + b.1);
        for (mu, x) in &self.terms {
            for (nu, y) in &other.terms {
                for (lambda, z) in heisenberg_product(mu, nu).terms() {
                    out.add(lambda.clone(), x * y * z);
                }
            }
        }
        out
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != BigUint::from(1u8) {
                write!(f, "{m}·")?;
            }
            write!(f, "V({lambda})")?;
        }
        Ok(())
    }
}

/// `Ind(V_μ ⊗ V_ν)`: all `λ ⊢ |μ|+|ν|` with multiplicity `c^λ_{μ,ν}`.
pub fn induction_product(mu: &Partition, nu: &Partition) -> Decomposition {
    let l = mu.size() + nu.size();
    let mut out = Decomposition::new(l, l);
    for lambda in partitions_of(l).iter() {
        out.add(lambda.clone(), lr_coeff(lambda, mu, nu));
    }
    out
}

/// `V_μ ⊗ V_ν` for `|μ| = |ν|`.
pub fn kronecker_product(mu: &Partition, nu: &Partition) -> Result<Decomposition, CoefficientError> {
    let n = mu.size();
    if nu.size() != n {
        return Err(CoefficientError::CompositionSizeMismatch {
            left: n,
            right: nu.size(),
        });
    }
    let mut out = Decomposition::new(n, n);
    for lambda in partitions_of(n).iter() {
        out.add(lambda.clone(), kron_coeff(lambda, mu, nu)?);
    }
    Ok(out)
}
