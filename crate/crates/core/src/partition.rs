//! Integer partitions, weak compositions and exact rational vectors.
//!
//! Partitions are treated as vectors: binary operations zero-pad to a common
//! length and results are renormalized (trailing zeros dropped).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("negative entry {0}")]
    NegativeEntry(i64),
    #[error("coordinatewise result {0:?} is not a partition")]
    NotAPartition(Vec<i64>),
    #[error("shift parameter n = {n} is below |mu| = {mu_size}")]
    ShiftBelowSize { n: usize, mu_size: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Self::from_sorted((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    pub fn scale(&self, n: usize) -> Partition {
        Self::from_sorted(self.parts.iter().map(|&p| p * n).collect())
    }

    /// Coordinatewise difference; fails when the result has a negative
    /// entry or is not weakly decreasing.
    pub fn subtract(&self, other: &Partition) -> Result<Partition, PartitionError> {
        let n = self.len().max(other.len());
        let diff: Vec<i64> = (0..n).map(|i| self.part(i) as i64 - other.part(i) as i64).collect();
        if diff.iter().any(|&d| d < 0) || diff.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(diff));
        }
        Ok(Self::from_sorted(diff.into_iter().map(|d| d as usize).collect()))
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// Young-diagram containment: `inner[i] <= self[i]` for every `i`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Self::from_sorted(
            (0..first)
                .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Dominance order among partitions of the same size: `None` when the
    /// sizes differ or the two are incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.size != other.size {
            return None;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    pub fn to_composition(&self) -> Composition {
        Composition::new(self.parts.clone())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

/// Comma syntax; the empty partition is written `0`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", join(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_list(s)?;
        Partition::new(parts).map_err(|e| PartitionError::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Result<Vec<usize>, PartitionError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|e| PartitionError::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// A weak composition: a finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts sorted into a partition.
    pub fn pi(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.parts))
    }
}

impl FromStr for Composition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list(s).map(Composition::new)
    }
}

/// π-sequence of a collection of integer entries: the entries sorted into a
/// weakly decreasing sequence with zeros dropped.
pub fn pi_sequence<I>(entries: I) -> Result<Partition, PartitionError>
where
    I: IntoIterator<Item = i64>,
{
    let mut parts = Vec::new();
    for e in entries {
        if e < 0 {
            return Err(PartitionError::NegativeEntry(e));
        }
        parts.push(e as usize);
    }
    Ok(Partition::from_unsorted(parts))
}

/// `ν − (n − |μ|)·α`, the shift that appears when a skew shape
/// `(λ + nα)/ν` is pushed back along `α`.
pub fn shifted_partition(
    nu: &Partition,
    mu: &Partition,
    alpha: &Partition,
    n: usize,
) -> Result<Partition, PartitionError> {
    if n < mu.size() {
        return Err(PartitionError::ShiftBelowSize { n, mu_size: mu.size() });
    }
    nu.subtract(&alpha.scale(n - mu.size()))
}

/// A vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers<I: IntoIterator<Item = i64>>(it: I) -> Self {
        RationalVector(
            it.into_iter()
                .map(|v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Entries in weakly decreasing order.
    pub fn sorted_decreasing(&self) -> Vec<BigRational> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Outcome of comparing `a` against `b` under the dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Dominance {
    /// `a ≺ b`: dominated, with different π-sequences.
    StrictlyDominated,
    /// `π(a) = π(b)`.
    EqualPi,
    /// `b ≺ a`.
    Dominates,
    Incomparable,
    DifferentSum,
}

impl Dominance {
    /// `a ⪯ b`.
    pub fn is_dominated(self) -> bool {
        matches!(self, Dominance::StrictlyDominated | Dominance::EqualPi)
    }
}

/// Compares `a` with `b`; the shorter vector is zero-padded.
pub fn dominates(a: &RationalVector, b: &RationalVector) -> Dominance {
    let m = a.len().max(b.len());
    let pad = |v: &RationalVector| {
        let mut s = v.0.clone();
        s.resize(m, BigRational::zero());
        s.sort_unstable_by(|x, y| y.cmp(x));
        s
    };
    let (sa, sb) = (pad(a), pad(b));
    if sa.iter().sum::<BigRational>() != sb.iter().sum::<BigRational>() {
        return Dominance::DifferentSum;
    }
    if sa == sb {
        return Dominance::EqualPi;
    }
    let (mut pa, mut pb) = (BigRational::zero(), BigRational::zero());
    let (mut le, mut ge) = (true, true);
    for (x, y) in sa.iter().zip(&sb) {
        pa += x;
        pb += y;
        le &= pa <= pb;
        ge &= pa >= pb;
    }
    match (le, ge) {
        (true, _) => Dominance::StrictlyDominated,
        (false, true) => Dominance::Dominates,
        (false, false) => Dominance::Incomparable,
    }
}

type PartitionList = Arc<Vec<Partition>>;

fn partition_cache() -> &'static RwLock<HashMap<usize, PartitionList>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, PartitionList>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> PartitionList {
    if let Some(hit) = partition_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_bounded(n, n, usize::MAX, &mut current, &mut out);
    let list = Arc::new(out);
    partition_cache().write().unwrap().entry(n).or_insert(list).clone()
}

/// Partitions of `n` whose diagram fits inside `outer`.
pub fn partitions_inside(outer: &Partition, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n > outer.size() {
        return out;
    }
    let mut current = Vec::new();
    fill_inside(outer.parts(), n, &mut current, &mut out);
    out
}

fn fill_bounded(remaining: usize, max_part: usize, max_len: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_bounded(remaining - part, part, max_len, current, out);
        current.pop();
    }
}

fn fill_inside(outer: &[usize], remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    let i = current.len();
    if i >= outer.len() {
        return;
    }
    let capacity: usize = outer[i..]
        .iter()
        .zip(std::iter::repeat(current.last().copied().unwrap_or(usize::MAX)))
        .map(|(&o, cap)| o.min(cap))
        .sum();
    if capacity < remaining {
        return;
    }
    let cap = outer[i]
        .min(current.last().copied().unwrap_or(usize::MAX))
        .min(remaining);
    for part in (1..=cap).rev() {
        current.push(part);
        fill_inside(outer, remaining - part, current, out);
        current.pop();
    }
}
