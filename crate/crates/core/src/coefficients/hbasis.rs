//! Products of complete homogeneous functions `h_β` through contingency
//! tables, and the Schur-level coefficients recovered from them.
//!
//! `h_β * h_γ = Σ h_{π(A)}` over tables with row sums `β` and column sums
//! `γ`; `h_β # h_γ` sums over the same tables bordered by a free first row
//! and column with a zero corner. Back in the Schur basis, `V_λ` occurs in
//! `h_δ` with multiplicity `K_{λ,δ}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::memo::global_memo;
use crate::partition::{Composition, Partition};
use crate::symfun::{kostka, schur_in_h_basis};

use super::heisenberg::degree_split;
use super::{CoefficientError, CoefficientKind};

/// Partitions with multiplicities.
pub type PartitionMultiset = BTreeMap<Partition, u64>;

/// Calls `leaf` with the entries of every nonnegative integer table whose
/// row sums are at most `rows`, column sums at most `cols`, and, when
/// `exact`, equal to them.
fn walk_tables(rows: &[usize], cols: &[usize], exact: bool, leaf: &mut impl FnMut(&[usize], &[usize], &[usize])) {
    let (p, q) = (rows.len(), cols.len());
    let mut entries = vec![0usize; p * q];
    let mut row_left = rows.to_vec();
    let mut col_left = cols.to_vec();
    fn go(
        cell: usize,
        q: usize,
        exact: bool,
        entries: &mut Vec<usize>,
        row_left: &mut Vec<usize>,
        col_left: &mut Vec<usize>,
        leaf: &mut impl FnMut(&[usize], &[usize], &[usize]),
    ) {
        if cell == entries.len() {
            if !exact || (row_left.iter().all(|&r| r == 0) && col_left.iter().all(|&c| c == 0)) {
                leaf(entries, row_left, col_left);
            }
            return;
        }
        let (i, j) = (cell / q, cell % q);
        let hi = row_left[i].min(col_left[j]);
        let lo = if exact && j + 1 == q { row_left[i] } else { 0 };
        if lo > hi {
            return;
        }
        for x in lo..=hi {
            entries[cell] = x;
            row_left[i] -= x;
            col_left[j] -= x;
            go(cell + 1, q, exact, entries, row_left, col_left, leaf);
            row_left[i] += x;
            col_left[j] += x;
        }
        entries[cell] = 0;
    }
    if p == 0 || q == 0 {
        let zero = |v: &[usize]| v.iter().all(|&x| x == 0);
        if !exact || (zero(rows) && zero(cols)) {
            leaf(&[], rows, cols);
        }
        return;
    }
    go(0, q, exact, &mut entries, &mut row_left, &mut col_left, leaf);
}

fn pi_of(parts: impl IntoIterator<Item = usize>) -> Partition {
    Partition::from_unsorted(parts.into_iter().filter(|&x| x > 0).collect())
}

/// `{π(A) : A ∈ 𝓜(β, γ)}`: the h-expansion of `h_β * h_γ`.
pub fn h_basis_kron_product(beta: &Composition, gamma: &Composition) -> Result<PartitionMultiset, CoefficientError> {
    if beta.size() != gamma.size() {
        return Err(CoefficientError::CompositionSizeMismatch {
            left: beta.size(),
            right: gamma.size(),
        });
    }
    let mut out = PartitionMultiset::new();
    walk_tables(beta.parts(), gamma.parts(), true, &mut |entries, _, _| {
        *out.entry(pi_of(entries.iter().copied())).or_insert(0) += 1;
    });
    Ok(out)
}

/// `{π(A) : A ∈ ℋ(β, γ)}`: the h-expansion of `h_β # h_γ`.
///
/// The inner block is free subject to its row and column sums not exceeding
/// `β` and `γ`; the leftover amounts fill the first column and first row.
pub fn h_basis_heisenberg_product(beta: &Composition, gamma: &Composition) -> PartitionMultiset {
    let mut out = PartitionMultiset::new();
    walk_tables(
        beta.parts(),
        gamma.parts(),
        false,
        &mut |entries, first_col, first_row| {
            let all = entries.iter().chain(first_col).chain(first_row).copied();
            *out.entry(pi_of(all)).or_insert(0) += 1;
        },
    );
    out
}

global_memo!(h_heis_memo: (Partition, Partition) => Arc<PartitionMultiset>);
global_memo!(h_kron_memo: (Partition, Partition) => Arc<PartitionMultiset>);

/// Pairs the h-expansions of `s_μ` and `s_ν` through `product`, then reads
/// off the coefficient of `V_λ`.
fn schur_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    product: impl Fn(&Partition, &Partition) -> Arc<PartitionMultiset>,
) -> Result<BigUint, CoefficientError> {
    let (left, right) = (schur_in_h_basis(mu), schur_in_h_basis(nu));
    let mut total = BigInt::zero();
    for (delta, a) in left.iter() {
        for (epsilon, b) in right.iter() {
            let mut inner = BigInt::zero();
            for (pi, count) in product(delta, epsilon).iter() {
                if pi.size() != lambda.size() {
                    continue;
                }
                let k = kostka(lambda, &Composition::from(pi))?;
                inner += BigInt::from(k) * count;
            }
            total += a * b * inner;
        }
    }
    if total.is_negative() {
        return Err(CoefficientError::Integrity(format!(
            "h-basis expansion gave negative multiplicity {total} for V({lambda}) in V({mu}), V({nu})"
        )));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}

/// `h^λ_{μ,ν}` through [`h_basis_heisenberg_product`]; zero outside the
/// valid degree range.
pub fn heisenberg_coeff_oracle(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigUint, CoefficientError> {
    if degree_split(lambda.size(), mu.size(), nu.size()).is_none() {
        return Ok(BigUint::zero());
    }
    schur_coefficient(lambda, mu, nu, |d, e| {
        h_heis_memo().get_or_compute((d.clone(), e.clone()), || {
            Arc::new(h_basis_heisenberg_product(&Composition::from(d), &Composition::from(e)))
        })
    })
}

/// `g^λ_{μ,ν}` through [`h_basis_kron_product`].
pub fn kron_coeff_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint, CoefficientError> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(CoefficientError::SizeMismatch {
            kind: CoefficientKind::Kronecker,
            l: lambda.size(),
            m: mu.size(),
            n: nu.size(),
        });
    }
    schur_coefficient(lambda, mu, nu, |d, e| {
        h_kron_memo().get_or_compute((d.clone(), e.clone()), || {
            Arc::new(h_basis_kron_product(&Composition::from(d), &Composition::from(e)).expect("equal sizes"))
        })
    })
}
