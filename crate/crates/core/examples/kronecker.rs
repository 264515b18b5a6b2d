//! Kronecker coefficients and the dimension identity.

use heis::coefficients::{dimension, kron_coeff, kronecker_product};
use heis::partition::partitions_of;
use heis::Partition;
use num_bigint::BigUint;

fn main() {
    let mu: Partition = "3,1,1".parse().unwrap();
    let product = kronecker_product(&mu, &mu).unwrap();
    println!("[{mu}] ⊗ [{mu}] = {product}");

    let total: BigUint = partitions_of(5)
        .iter()
        .map(|lambda| kron_coeff(lambda, &mu, &mu).unwrap() * dimension(lambda))
        .sum();
    let f = dimension(&mu);
    println!("Σ g·f^λ = {total}, (f^μ)² = {}", &f * &f);

    let lambda: Partition = "3,2".parse().unwrap();
    for n in 1..=3 {
        let g = kron_coeff(&lambda.scale(n), &mu.scale(n), &mu.scale(n)).unwrap();
        println!("g at scale {n}: {g}");
    }
}
