//! Kronecker coefficients from the character table.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::memo::global_memo;
use crate::partition::Partition;
use crate::symfun::{CharacterTable, SymfunError};

use super::CoefficientError;

global_memo!(kron_memo: [Partition; 3] => BigUint);

/// `g^λ_{μ,ν} = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`.
pub fn kron_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint, CoefficientError> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(CoefficientError::SizeMismatch {
            kind: super::CoefficientKind::Kronecker,
            l: lambda.size(),
            m: mu.size(),
            n: nu.size(),
        });
    }
    let mut key = [lambda.clone(), mu.clone(), nu.clone()];
    key.sort();
    if let Some(v) = kron_memo().get(&key) {
        return Ok(v);
    }
    let table = CharacterTable::of(n).map_err(CoefficientError::from)?;
    let value = triple_pairing(
        &table,
        &[table.row(lambda)],
        &[table.row(mu)],
        &[table.row(nu)],
        &[1],
        &[1],
        &[1],
    )?;
    Ok(kron_memo().insert(key, value))
}

/// `Σ_{β,η,δ} b_β e_η t_δ g(β, η, δ)` for three class functions given as
/// integer combinations of character rows, evaluated as one inner product
/// `(1/n!) Σ_ρ |C_ρ| B(ρ) E(ρ) T(ρ)`.
pub(crate) fn triple_pairing(
    table: &CharacterTable,
    b_rows: &[&[i128]],
    e_rows: &[&[i128]],
    t_rows: &[&[i128]],
    b_coef: &[i128],
    e_coef: &[i128],
    t_coef: &[i128],
) -> Result<BigUint, CoefficientError> {
    let classes = table.class_count();
    let combine = |rows: &[&[i128]], coef: &[i128]| -> Option<Vec<i128>> {
        let mut f = vec![0i128; classes];
        for (row, &c) in rows.iter().zip(coef) {
            for (slot, &x) in f.iter_mut().zip(row.iter()) {
                *slot = slot.checked_add(c.checked_mul(x)?)?;
            }
        }
        Some(f)
    };
    let fast = (|| {
        let (fb, fe, ft) = (
            combine(b_rows, b_coef)?,
            combine(e_rows, e_coef)?,
            combine(t_rows, t_coef)?,
        );
        let mut total = 0i128;
        for c in 0..classes {
            let term = table.class_sizes[c]
                .checked_mul(fb[c])?
                .checked_mul(fe[c])?
                .checked_mul(ft[c])?;
            total = total.checked_add(term)?;
        }
        Some(total)
    })();
    let total = match fast {
        Some(t) => BigInt::from(t),
        None => {
            let combine_big = |rows: &[&[i128]], coef: &[i128]| -> Vec<BigInt> {
                (0..classes)
                    .map(|c| {
                        rows.iter()
                            .zip(coef)
                            .map(|(row, &k)| BigInt::from(k) * BigInt::from(row[c]))
                            .sum()
                    })
                    .collect()
            };
            let (fb, fe, ft) = (
                combine_big(b_rows, b_coef),
                combine_big(e_rows, e_coef),
                combine_big(t_rows, t_coef),
            );
            (0..classes)
                .map(|c| BigInt::from(table.class_sizes[c]) * &fb[c] * &fe[c] * &ft[c])
                .sum()
        }
    };
    let order = BigInt::from(table.order);
    if !(&total % &order).is_zero() || total.is_negative() {
        return Err(CoefficientError::Integrity(format!(
            "class-function pairing {total} is not a nonnegative multiple of {order}"
        )));
    }
    Ok((total / order).to_biguint().expect("nonnegative"))
}

pub(crate) fn table_for(n: usize) -> Result<std::sync::Arc<CharacterTable>, CoefficientError> {
    CharacterTable::of(n).map_err(CoefficientError::from)
}

impl From<SymfunError> for CoefficientError {
    fn from(e: SymfunError) -> Self {
        CoefficientError::Symfun(e)
    }
}

/// `f^λ = χ^λ(id)`.
pub fn dimension(lambda: &Partition) -> BigUint {
    let table = CharacterTable::of(lambda.size()).expect("dimension of a desk-scale irreducible");
    let id = table.index_of(&Partition::column(lambda.size())).unwrap();
    BigUint::from(table.row(lambda)[id].to_u128().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(l: &[usize], m: &[usize], n: &[usize]) -> u64 {
        kron_coeff(&p(l), &p(m), &p(n)).unwrap().to_u64().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(g(&[3], &[2, 1], &[2, 1]), 1);
        assert_eq!(g(&[2, 1], &[2, 1], &[2, 1]), 1);
        assert_eq!(g(&[2], &[1, 1], &[1, 1]), 1);
        assert_eq!(g(&[1, 1], &[1, 1], &[1, 1]), 0);
        assert_eq!(g(&[2, 1], &[3], &[1, 1, 1]), 0);
        assert_eq!(g(&[], &[], &[]), 1);
        assert!(kron_coeff(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=6 {
            for a in partitions_of(n).iter() {
                for b in partitions_of(n).iter() {
                    let with_trivial = kron_coeff(&Partition::row(n), a, b).unwrap();
                    assert_eq!(with_trivial, BigUint::from(u8::from(a == b)));
                    let with_sign = kron_coeff(&Partition::column(n), a, b).unwrap();
                    assert_eq!(with_sign, BigUint::from(u8::from(*a == b.conjugate())));
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p(&[2, 1])), BigUint::from(2u8));
        assert_eq!(dimension(&p(&[3, 2])), BigUint::from(5u8));
        assert_eq!(dimension(&Partition::empty()), BigUint::from(1u8));
    }
}
