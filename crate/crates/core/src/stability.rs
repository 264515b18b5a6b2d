//! Triples, their stability verdicts, and stabilization sequences.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::additivity::GeneratedTriple;
use crate::coefficients::{heisenberg_coeff, kron_coeff, lr_coeff, CoefficientKind};
use crate::partition::Partition;

pub const DEFAULT_N_MAX: usize = 8;
pub const DEFAULT_WINDOW: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilityError {
    #[error("{role} sizes ({l}, {m}, {n}) do not fit the {kind} size pattern")]
    SizePattern {
        role: &'static str,
        kind: CoefficientKind,
        l: usize,
        m: usize,
        n: usize,
    },
    #[error("direction is not a {kind} triple: {reason}")]
    DirectionNotATriple { kind: CoefficientKind, reason: NotATriple },
    #[error("window must be at least 2, got {0}")]
    Window(usize),
}

/// The coefficient of `kind` at `(λ; μ, ν)`; zero outside its size pattern.
pub fn coefficient(kind: CoefficientKind, lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    match kind {
        CoefficientKind::LittlewoodRichardson => lr_coeff(lambda, mu, nu),
        CoefficientKind::Kronecker => kron_coeff(lambda, mu, nu).unwrap_or_default(),
        CoefficientKind::Heisenberg => heisenberg_coeff(lambda, mu, nu),
    }
}

fn sizes(a: &Partition, b: &Partition, c: &Partition) -> (usize, usize, usize) {
    (a.size(), b.size(), c.size())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TripleFlags {
    pub k: bool,
    pub lr: bool,
    pub h: bool,
}

/// `(α, β, γ)` with a positive coefficient of its kind. Equal sizes are
/// classified as Kronecker; `|α| = |β| + |γ|` as Littlewood–Richardson;
/// anything else in the Heisenberg range as Heisenberg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub kind: CoefficientKind,
    pub flags: TripleFlags,
}

impl Triple {
    pub fn scaled(&self, n: usize) -> (Partition, Partition, Partition) {
        (self.alpha.scale(n), self.beta.scale(n), self.gamma.scale(n))
    }

    /// The defining coefficient at scale `n`.
    pub fn coefficient_at(&self, n: usize) -> BigUint {
        let (a, b, c) = self.scaled(n);
        coefficient(self.kind, &a, &b, &c)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.alpha, self.beta, self.gamma)
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NotATriple {
    #[error("sizes ({l}, {m}, {n}) fit no coefficient")]
    SizePattern { l: usize, m: usize, n: usize },
    #[error("the {kind} coefficient vanishes")]
    ZeroCoefficient { kind: CoefficientKind },
}

pub fn classify_triple(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Triple, NotATriple> {
    let (l, m, n) = sizes(alpha, beta, gamma);
    let fits = |kind: CoefficientKind| kind.accepts_sizes(l, m, n);
    let positive = |kind: CoefficientKind| fits(kind) && !coefficient(kind, alpha, beta, gamma).is_zero();
    let flags = TripleFlags {
        k: positive(CoefficientKind::Kronecker),
        lr: positive(CoefficientKind::LittlewoodRichardson),
        h: positive(CoefficientKind::Heisenberg),
    };
    let kind = [
        CoefficientKind::Kronecker,
        CoefficientKind::LittlewoodRichardson,
        CoefficientKind::Heisenberg,
    ]
    .into_iter()
    .find(|&k| fits(k))
    .ok_or(NotATriple::SizePattern { l, m, n })?;
    let ok = match kind {
        CoefficientKind::Kronecker => flags.k,
        CoefficientKind::LittlewoodRichardson => flags.lr,
        CoefficientKind::Heisenberg => flags.h,
    };
    if !ok {
        return Err(NotATriple::ZeroCoefficient { kind });
    }
    Ok(Triple {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        kind,
        flags,
    })
}

fn serialize_big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn serialize_sequence<S: Serializer>(v: &[(usize, BigUint)], s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        n: usize,
        #[serde(serialize_with = "serialize_big")]
        value: &'a BigUint,
    }
    s.collect_seq(v.iter().map(|(n, value)| Entry { n: *n, value }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificationBasis {
    /// `c^α_{β,γ} = 1`, which decides LR-stability outright.
    SingleLrCoefficient,
    KAdditiveMatrix,
    HAdditiveMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Certified {
        basis: CertificationBasis,
    },
    Refuted {
        n: usize,
        #[serde(serialize_with = "serialize_big")]
        value: BigUint,
    },
    InconclusiveUpTo {
        n_max: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub triple: Triple,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(serialize_with = "serialize_sequence")]
    pub sequence: Vec<(usize, BigUint)>,
}

impl StabilityReport {
    /// Upgrades an inconclusive verdict with a matching certificate from an
    /// additive matrix of the same kind. Returns `None` if the certificate
    /// does not fit this triple.
    pub fn certify(&self, generated: &GeneratedTriple, basis: CertificationBasis) -> Option<StabilityReport> {
        let t = &self.triple;
        let same_triple = generated.partitions() == (t.alpha.clone(), t.beta.clone(), t.gamma.clone());
        let same_kind = matches!(
            (t.kind, basis),
            (CoefficientKind::Kronecker, CertificationBasis::KAdditiveMatrix)
                | (CoefficientKind::Heisenberg, CertificationBasis::HAdditiveMatrix)
        );
        if !same_triple || !same_kind || matches!(self.verdict, Verdict::Refuted { .. }) {
            return None;
        }
        let mut upgraded = self.clone();
        upgraded.verdict = Verdict::Certified { basis };
        Some(upgraded)
    }
}

/// LR triples are decided by `c^α_{β,γ}` alone. Kronecker and Heisenberg
/// triples are scanned for `n = 1..=n_max`; a value of 2 or more refutes,
/// otherwise the verdict stays inconclusive.
pub fn stability_check(t: &Triple, n_max: usize) -> StabilityReport {
    if t.kind == CoefficientKind::LittlewoodRichardson {
        let c = t.coefficient_at(1);
        let verdict = if c.is_one() {
            Verdict::Certified {
                basis: CertificationBasis::SingleLrCoefficient,
            }
        } else {
            Verdict::Refuted { n: 1, value: c.clone() }
        };
        return StabilityReport {
            triple: t.clone(),
            verdict,
            sequence: vec![(1, c)],
        };
    }
    let mut sequence = Vec::new();
    for n in 1..=n_max {
        let value = t.coefficient_at(n);
        let refuted = value > BigUint::one();
        sequence.push((n, value.clone()));
        if refuted {
            return StabilityReport {
                triple: t.clone(),
                verdict: Verdict::Refuted { n, value },
                sequence,
            };
        }
    }
    StabilityReport {
        triple: t.clone(),
        verdict: Verdict::InconclusiveUpTo { n_max },
        sequence,
    }
}

/// `(λ, μ, ν)` with the product `λ ⊢ l`, factors `μ ⊢ m`, `ν ⊢ n`.
pub type Shape = (Partition, Partition, Partition);

fn check_pattern(kind: CoefficientKind, role: &'static str, t: &Shape) -> Result<(), StabilityError> {
    let (l, m, n) = sizes(&t.0, &t.1, &t.2);
    if kind.accepts_sizes(l, m, n) {
        Ok(())
    } else {
        Err(StabilityError::SizePattern { role, kind, l, m, n })
    }
}

/// `coefficient(λ + kα; μ + kβ, ν + kγ)` for `k` in `range`.
///
/// Both `base` and `direction` must fit the size pattern of `kind`, which
/// keeps every shifted query inside it.
pub fn stabilization_sequence(
    kind: CoefficientKind,
    base: &Shape,
    direction: &Shape,
    range: RangeInclusive<usize>,
) -> Result<Vec<(usize, BigUint)>, StabilityError> {
    check_pattern(kind, "base", base)?;
    check_pattern(kind, "direction", direction)?;
    Ok(range
        .map(|k| {
            let shift = |b: &Partition, d: &Partition| b.add(&d.scale(k));
            let (l, m, n) = (
                shift(&base.0, &direction.0),
                shift(&base.1, &direction.1),
                shift(&base.2, &direction.2),
            );
            (k, coefficient(kind, &l, &m, &n))
        })
        .collect())
}

/// Heuristic: the value and start of the final run, provided the last
/// `window` entries agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableLimit {
    #[serde(serialize_with = "serialize_big")]
    pub value: BigUint,
    pub onset: usize,
}

pub fn detect_stable_limit(seq: &[BigUint], window: usize) -> Result<Option<StableLimit>, StabilityError> {
    if window < 2 {
        return Err(StabilityError::Window(window));
    }
    if seq.len() < window {
        return Ok(None);
    }
    let last = &seq[seq.len() - 1];
    if seq[seq.len() - window..].iter().any(|v| v != last) {
        return Ok(None);
    }
    let onset = seq.iter().rposition(|v| v != last).map_or(0, |i| i + 1);
    Ok(Some(StableLimit {
        value: last.clone(),
        onset,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monotonicity {
    pub weakly_increasing: bool,
    /// First `k` with `value(k) < value(k-1)`.
    pub first_violation: Option<usize>,
    #[serde(serialize_with = "serialize_sequence")]
    pub sequence: Vec<(usize, BigUint)>,
}

/// Whether the stabilization sequence along a genuine triple `direction` is
/// weakly increasing over `range`.
pub fn monotonicity_check(
    kind: CoefficientKind,
    base: &Shape,
    direction: &Shape,
    range: RangeInclusive<usize>,
) -> Result<Monotonicity, StabilityError> {
    check_pattern(kind, "direction", direction)?;
    if coefficient(kind, &direction.0, &direction.1, &direction.2).is_zero() {
        return Err(StabilityError::DirectionNotATriple {
            kind,
            reason: NotATriple::ZeroCoefficient { kind },
        });
    }
    let sequence = stabilization_sequence(kind, base, direction, range)?;
    let first_violation = sequence.windows(2).find(|w| w[1].1 < w[0].1).map(|w| w[1].0);
    Ok(Monotonicity {
        weakly_increasing: first_violation.is_none(),
        first_violation,
        sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(a: &[usize], b: &[usize], c: &[usize]) -> Shape {
        (p(a), p(b), p(c))
    }

    fn values(seq: &[(usize, BigUint)]) -> Vec<u64> {
        seq.iter().map(|(_, v)| v.to_u64().unwrap()).collect()
    }

    #[test]
    fn classification() {
        let t = classify_triple(&p(&[1]), &p(&[1]), &p(&[1])).unwrap();
        assert_eq!(t.kind, CoefficientKind::Kronecker);
        assert!(t.flags.k && t.flags.h && !t.flags.lr);
        let t = classify_triple(&p(&[2, 2, 1]), &p(&[2, 1]), &p(&[2])).unwrap();
        assert_eq!(t.kind, CoefficientKind::LittlewoodRichardson);
        assert!(t.flags.lr && t.flags.h);
        assert_eq!(
            classify_triple(&p(&[3]), &p(&[1]), &p(&[1])),
            Err(NotATriple::SizePattern { l: 3, m: 1, n: 1 })
        );
        assert_eq!(
            classify_triple(&p(&[3]), &p(&[1, 1]), &p(&[1])),
            Err(NotATriple::ZeroCoefficient {
                kind: CoefficientKind::LittlewoodRichardson
            })
        );
        let t = classify_triple(&p(&[2, 1]), &p(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!(t.kind, CoefficientKind::Heisenberg);
    }

    #[test]
    fn verdicts() {
        let unit = classify_triple(&p(&[1]), &p(&[1]), &p(&[1])).unwrap();
        let report = stability_check(&unit, 5);
        assert_eq!(report.verdict, Verdict::InconclusiveUpTo { n_max: 5 });
        assert_eq!(values(&report.sequence), vec![1; 5]);

        let lr = classify_triple(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(
            stability_check(&lr, 5).verdict,
            Verdict::Refuted {
                n: 1,
                value: BigUint::from(2u8)
            }
        );
        let lr = classify_triple(&p(&[2, 2, 1]), &p(&[2, 1]), &p(&[2])).unwrap();
        assert!(matches!(stability_check(&lr, 5).verdict, Verdict::Certified { .. }));

        // g^{(3,2,1)}_{(3,2,1),(3,2,1)} = 5
        let k = classify_triple(&p(&[3, 2, 1]), &p(&[3, 2, 1]), &p(&[3, 2, 1])).unwrap();
        match stability_check(&k, 3).verdict {
            Verdict::Refuted { n, value } => {
                assert_eq!(n, 1);
                assert_eq!(value, BigUint::from(5u8));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn certificate_upgrade() {
        use crate::additivity::{k_additive_stable_triple, KMatrix};
        let unit = classify_triple(&p(&[1]), &p(&[1]), &p(&[1])).unwrap();
        let report = stability_check(&unit, 3);
        let generated = k_additive_stable_triple(&"1".parse::<KMatrix>().unwrap()).unwrap();
        let g = generated.certified().unwrap();
        let upgraded = report.certify(g, CertificationBasis::KAdditiveMatrix).unwrap();
        assert_eq!(
            upgraded.verdict,
            Verdict::Certified {
                basis: CertificationBasis::KAdditiveMatrix
            }
        );
        assert!(report.certify(g, CertificationBasis::HAdditiveMatrix).is_none());
        let other = classify_triple(&p(&[2]), &p(&[2]), &p(&[2])).unwrap();
        assert!(stability_check(&other, 2)
            .certify(g, CertificationBasis::KAdditiveMatrix)
            .is_none());
    }

    #[test]
    fn sequences() {
        let one = shape(&[1], &[1], &[1]);
        let k = stabilization_sequence(CoefficientKind::Kronecker, &one, &one, 0..=4).unwrap();
        assert_eq!(values(&k), vec![1; 5]);
        let h = stabilization_sequence(CoefficientKind::Heisenberg, &shape(&[2], &[1], &[1]), &one, 0..=4).unwrap();
        let hv: Vec<BigUint> = h.iter().map(|(_, v)| v.clone()).collect();
        assert!(detect_stable_limit(&hv, 3).unwrap().is_some());
        // (1,1) ⊄ (2), so c^{(2)+n(2)}_{(1,1)+n(1,1), ∅} vanishes for every n
        let zero = stabilization_sequence(
            CoefficientKind::LittlewoodRichardson,
            &shape(&[2], &[1, 1], &[]),
            &shape(&[2], &[1, 1], &[]),
            0..=4,
        )
        .unwrap();
        assert!(values(&zero).iter().all(|&v| v == 0));
        assert!(matches!(
            stabilization_sequence(CoefficientKind::Kronecker, &shape(&[2], &[1], &[1]), &one, 0..=2),
            Err(StabilityError::SizePattern { role: "base", .. })
        ));
    }

    #[test]
    fn limits() {
        let seq = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(
            detect_stable_limit(&seq(&[0, 1, 2, 2, 2, 2]), 3).unwrap(),
            Some(StableLimit {
                value: BigUint::from(2u8),
                onset: 2
            })
        );
        assert_eq!(detect_stable_limit(&seq(&[1, 2, 1, 2]), 2).unwrap(), None);
        assert_eq!(
            detect_stable_limit(&seq(&[1, 1, 1, 1, 1]), 3).unwrap(),
            Some(StableLimit {
                value: BigUint::from(1u8),
                onset: 0
            })
        );
        assert!(detect_stable_limit(&seq(&[1]), 1).is_err());
    }

    #[test]
    fn monotone_sequences() {
        let dir = shape(&[3, 2, 1], &[2, 1], &[2, 1]);
        let m = monotonicity_check(CoefficientKind::LittlewoodRichardson, &dir, &dir, 0..=3).unwrap();
        assert!(m.weakly_increasing);
        let v = values(&m.sequence);
        assert!(v.windows(2).all(|w| w[0] < w[1]), "{v:?}");
        let zero_base = shape(&[2], &[1, 1], &[]);
        let m = monotonicity_check(
            CoefficientKind::LittlewoodRichardson,
            &zero_base,
            &shape(&[1], &[1], &[]),
            0..=5,
        )
        .unwrap();
        assert!(m.weakly_increasing);
        assert!(monotonicity_check(
            CoefficientKind::LittlewoodRichardson,
            &dir,
            &shape(&[2], &[1], &[1, 1]),
            0..=2
        )
        .is_err());
    }
}
