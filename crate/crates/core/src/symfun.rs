//! Symmetric-group characters, class sizes, Kostka numbers and the
//! Schur-to-complete-homogeneous basis change.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::memo::global_memo;
use crate::partition::{partitions_of, Composition, Partition};

/// Largest `n` whose character table is kept in machine integers
/// (`n!` must fit in an `i128`).
pub const MAX_TABLE_DEGREE: usize = 33;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfunError {
    #[error("size mismatch: |{shape:?}| = {shape_size} but the second argument has size {other_size}")]
    SizeMismatch {
        shape: Partition,
        shape_size: usize,
        other_size: usize,
    },
    #[error("character table of S_{0} exceeds the supported degree {MAX_TABLE_DEGREE}")]
    TableTooLarge(usize),
}

/// Conjugacy class of `S_n`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// `m_i`: number of cycles of length `i`, indexed from 1.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &part in self.0.parts() {
            *m.entry(part).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z = ∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, m) in self.multiplicities() {
            z *= BigUint::from(i).pow(m as u32) * factorial(m);
        }
        z
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of permutations with cycle type `rho`.
pub fn class_size(rho: &CycleType) -> BigUint {
    factorial(rho.degree()) / rho.centralizer_order()
}

global_memo!(character_memo: (Partition, Partition) => BigInt);

/// Irreducible character `χ^λ(ρ)` by Murnaghan–Nakayama.
pub fn character(lambda: &Partition, rho: &CycleType) -> Result<BigInt, SymfunError> {
    if lambda.size() != rho.degree() {
        return Err(SymfunError::SizeMismatch {
            shape: lambda.clone(),
            shape_size: lambda.size(),
            other_size: rho.degree(),
        });
    }
    Ok(mn_character(lambda, rho.0.parts()))
}

fn mn_character(lambda: &Partition, cycles: &[usize]) -> BigInt {
    let Some((&first, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (lambda.clone(), Partition::from_sorted(cycles.to_vec()));
    if let Some(v) = character_memo().get(&key) {
        return v;
    }
    let mut total = BigInt::zero();
    for (smaller, height) in rim_hooks(lambda, first) {
        let v = mn_character(&smaller, rest);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    character_memo().insert(key, total)
}

/// All ways of removing a border strip of length `r`, with the strip's
/// height (number of rows minus one).
fn rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let k = lambda.len();
    let beta: Vec<usize> = (0..k).map(|i| lambda.part(i) + k - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &c)| c - (k - 1 - i)).collect();
        out.push((Partition::from_sorted(parts), height));
    }
    out
}

/// Character table of `S_n` with classes and irreducibles both indexed by
/// `partitions_of(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Arc<Vec<Partition>>,
    index: HashMap<Partition, usize>,
    /// `values[irrep][class]`.
    values: Vec<Vec<i128>>,
    /// `n! / z_ρ` per class.
    pub class_sizes: Vec<i128>,
    pub order: i128,
}

global_memo!(table_memo: usize => Arc<CharacterTable>);

impl CharacterTable {
    pub fn of(n: usize) -> Result<Arc<CharacterTable>, SymfunError> {
        if n > MAX_TABLE_DEGREE {
            return Err(SymfunError::TableTooLarge(n));
        }
        Ok(table_memo().get_or_compute(n, || Arc::new(Self::build(n))))
    }

    fn build(n: usize) -> CharacterTable {
        let partitions = partitions_of(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|rho| {
                        mn_character(lambda, rho.parts())
                            .to_i128()
                            .expect("character values of S_n for n <= 33 fit in i128")
                    })
                    .collect()
            })
            .collect();
        let class_sizes = partitions
            .iter()
            .map(|rho| class_size(&CycleType(rho.clone())).to_i128().unwrap())
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
            class_sizes,
            order: factorial(n).to_i128().unwrap(),
        }
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Row of `χ^λ` over all classes.
    pub fn row(&self, lambda: &Partition) -> &[i128] {
        &self.values[self.index[lambda]]
    }

    pub fn class_count(&self) -> usize {
        self.partitions.len()
    }
}

global_memo!(kostka_memo: (Partition, Vec<usize>) => BigUint);

/// Kostka number `K_{λ,μ}`: semistandard tableaux of shape `λ` and content
/// `μ`. The content may be any weak composition; only its sorted parts
/// matter.
pub fn kostka(lambda: &Partition, content: &Composition) -> Result<BigUint, SymfunError> {
    if lambda.size() != content.size() {
        return Err(SymfunError::SizeMismatch {
            shape: lambda.clone(),
            shape_size: lambda.size(),
            other_size: content.size(),
        });
    }
    let mu = content.pi();
    Ok(kostka_sorted(lambda, mu.parts()))
}

/// Peels the cells holding the largest letter, which form a horizontal strip.
fn kostka_sorted(lambda: &Partition, mu: &[usize]) -> BigUint {
    let Some((&last, rest)) = mu.split_last() else {
        return if lambda.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    if rest.is_empty() {
        return if lambda.len() <= 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    // a tableau with k letters has at most k rows
    if lambda.len() > mu.len() {
        return BigUint::zero();
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(v) = kostka_memo().get(&key) {
        return v;
    }
    let mut total = BigUint::zero();
    for inner in horizontal_strip_removals(lambda, last) {
        total += kostka_sorted(&inner, rest);
    }
    kostka_memo().insert(key, total)
}

/// Partitions `ν ⊆ λ` with `λ/ν` a horizontal strip of `size` cells.
pub(crate) fn horizontal_strip_removals(lambda: &Partition, size: usize) -> Vec<Partition> {
    fn go(lambda: &[usize], i: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if remaining == 0 {
                out.push(Partition::from_sorted(current.clone()));
            }
            return;
        }
        let floor = lambda.get(i + 1).copied().unwrap_or(0);
        let max_take = (lambda[i] - floor).min(remaining);
        let rest_capacity: usize = (i + 1..lambda.len())
            .map(|t| lambda[t] - lambda.get(t + 1).copied().unwrap_or(0))
            .sum();
        for take in 0..=max_take {
            if remaining - take > rest_capacity {
                continue;
            }
            current.push(lambda[i] - take);
            go(lambda, i + 1, remaining - take, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), 0, size, &mut Vec::new(), &mut out);
    out
}

global_memo!(jacobi_trudi_memo: Partition => Arc<BTreeMap<Partition, BigInt>>);

/// `s_λ = Σ_δ coef_δ h_δ`, from the Jacobi–Trudi determinant
/// `det(h_{λ_i − i + j})`.
pub fn schur_in_h_basis(lambda: &Partition) -> Arc<BTreeMap<Partition, BigInt>> {
    jacobi_trudi_memo().get_or_compute(lambda.clone(), || Arc::new(jacobi_trudi(lambda)))
}

fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let k = lambda.len();
    let mut acc: HashMap<Partition, i64> = HashMap::new();
    let mut used = vec![false; k];
    let mut degrees = Vec::with_capacity(k);
    expand_determinant(lambda.parts(), 0, &mut used, &mut degrees, 0, &mut acc);
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| (p, BigInt::from(c)))
        .collect()
}

fn expand_determinant(
    lambda: &[usize],
    row: usize,
    used: &mut [bool],
    degrees: &mut Vec<usize>,
    inversions: usize,
    acc: &mut HashMap<Partition, i64>,
) {
    if row == lambda.len() {
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        *acc.entry(Partition::from_unsorted(degrees.clone())).or_insert(0) += sign;
        return;
    }
    for col in 0..lambda.len() {
        if used[col] {
            continue;
        }
        // entry h_{λ_row − row + col}, zero when the index is negative
        let Some(degree) = (lambda[row] + col).checked_sub(row) else {
            continue;
        };
        let extra = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        degrees.push(degree);
        expand_determinant(lambda, row + 1, used, degrees, inversions + extra, acc);
        degrees.pop();
        used[col] = false;
    }
}
