//! Heisenberg coefficients through the restriction/Kronecker/induction
//! formula
//!
//! ```text
//! h^λ_{μ,ν} = Σ c^μ_{α,β} c^ν_{η,ρ} g^δ_{β,η} c^τ_{α,δ} c^λ_{τ,ρ}
//! ```
//!
//! with `α ⊢ p = l − n`, `β, η, δ ⊢ q = m + n − l`, `ρ ⊢ r = l − m`,
//! `τ ⊢ m`, where `λ ⊢ l`, `μ ⊢ m`, `ν ⊢ n`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::memo::global_memo;
use crate::partition::{partitions_inside, partitions_of, Partition};

use super::kronecker::{kron_coeff, table_for, triple_pairing};
use super::lr::skew_expansion;
use super::{CoefficientError, Decomposition};

/// Degree parameters `(p, q, r)`, or `None` outside
/// `max(|μ|, |ν|) <= l <= |μ| + |ν|`.
pub fn degree_split(l: usize, m: usize, n: usize) -> Option<(usize, usize, usize)> {
    if l < m.max(n) || l > m + n {
        return None;
    }
    Some((l - n, m + n - l, l - m))
}

global_memo!(heis_memo: (Partition, Partition, Partition) => BigUint);

/// `h^λ_{μ,ν}`; zero outside the valid degree range.
///
/// For each outer pair `(α, ρ)` the three remaining sums collapse into one
/// character inner product over `S_q`, so no individual Kronecker coefficient
/// is formed.
///
/// Panics if `q` exceeds [`crate::symfun::MAX_TABLE_DEGREE`].
pub fn heisenberg_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let Some((p, q, r)) = degree_split(lambda.size(), mu.size(), nu.size()) else {
        return BigUint::zero();
    };
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = heis_memo().get(&key) {
        return v;
    }
    let table = table_for(q).expect("Kronecker degree within the character-table range");
    let mut total = BigUint::zero();
    let rhos: Vec<Partition> = partitions_inside(nu, r)
        .into_iter()
        .filter(|rho| lambda.contains(rho))
        .collect();
    for alpha in partitions_inside(mu, p) {
        let restricted_mu = skew_expansion(mu, &alpha);
        if restricted_mu.is_empty() {
            continue;
        }
        for rho in &rhos {
            let restricted_nu = skew_expansion(nu, rho);
            // T(δ) = Σ_τ c^λ_{τ,ρ} c^τ_{α,δ}
            let mut induced: HashMap<Partition, i128> = HashMap::new();
            for (tau, outer) in skew_expansion(lambda, rho).iter() {
                if !tau.contains(&alpha) {
                    continue;
                }
                for (delta, inner) in skew_expansion(tau, &alpha).iter() {
                    *induced.entry(delta.clone()).or_insert(0) += i128::from(*outer) * i128::from(*inner);
                }
            }
            if induced.is_empty() || restricted_nu.is_empty() {
                continue;
            }
            let split = |m: &dyn Fn() -> Vec<(Partition, i128)>| {
                let terms = m();
                let rows: Vec<&[i128]> = terms.iter().map(|(part, _)| table.row(part)).collect();
                let coef: Vec<i128> = terms.iter().map(|(_, c)| *c).collect();
                (rows, coef)
            };
            let (b_rows, b_coef) = split(&|| restricted_mu.iter().map(|(k, &v)| (k.clone(), i128::from(v))).collect());
            let (e_rows, e_coef) = split(&|| restricted_nu.iter().map(|(k, &v)| (k.clone(), i128::from(v))).collect());
            let (t_rows, t_coef) = split(&|| induced.iter().map(|(k, &v)| (k.clone(), v)).collect());
            total += triple_pairing(&table, &b_rows, &e_rows, &t_rows, &b_coef, &e_coef, &t_coef)
                .expect("pairing of genuine characters is a nonnegative integer");
        }
    }
    heis_memo().insert(key, total)
}

/// The same sum evaluated term by term over sextuples
/// `(α, β, η, ρ, δ, τ)`, with `τ` outermost and every Kronecker factor
/// computed individually. Slower; kept as a cross-check.
pub fn heisenberg_coeff_by_sextuples(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let Some((p, _q, r)) = degree_split(lambda.size(), mu.size(), nu.size()) else {
        return BigUint::zero();
    };
    let mut total = BigUint::zero();
    for rho in partitions_inside(nu, r) {
        let restricted_nu = skew_expansion(nu, &rho);
        for (tau, c_lambda) in skew_expansion(lambda, &rho).iter() {
            for alpha in partitions_inside(tau, p) {
                let restricted_mu = skew_expansion(mu, &alpha);
                if restricted_mu.is_empty() {
                    continue;
                }
                for (delta, c_tau) in skew_expansion(tau, &alpha).iter() {
                    for (beta, c_mu) in restricted_mu.iter() {
                        for (eta, c_nu) in restricted_nu.iter() {
                            let g = kron_coeff(delta, beta, eta).expect("equal sizes");
                            if g.is_zero() {
                                continue;
                            }
                            total += g * (c_lambda * c_tau * c_mu * c_nu);
                        }
                    }
                }
            }
        }
    }
    total
}

/// `(V_μ # V_ν)_l` as a multiplicity map over `λ ⊢ l`.
pub fn heisenberg_component(mu: &Partition, nu: &Partition, l: usize) -> Result<Decomposition, CoefficientError> {
    if degree_split(l, mu.size(), nu.size()).is_none() {
        return Err(CoefficientError::DegreeOutOfRange {
            l,
            min: mu.size().max(nu.size()),
            max: mu.size() + nu.size(),
        });
    }
    let mut out = Decomposition::new(l, l);
    for lambda in partitions_of(l).iter() {
        out.add(lambda.clone(), heisenberg_coeff(lambda, mu, nu));
    }
    Ok(out)
}

/// `V_μ # V_ν` over all degrees `max(|μ|,|ν|) ..= |μ|+|ν|`.
pub fn heisenberg_product(mu: &Partition, nu: &Partition) -> Decomposition {
    let (lo, hi) = (mu.size().max(nu.size()), mu.size() + nu.size());
    let mut out = Decomposition::new(lo, hi);
    for l in lo..=hi {
        let component = heisenberg_component(mu, nu, l).expect("degree in range");
        out.merge(&component);
    }
    out
}
