//! Enumerates matrix classes with fixed margins and prints the linear map
//! from flattened matrices to margins.

use heis::additivity::{
    build_constraint_matrix, enumerate_h_matrices, enumerate_k_matrices, h_class_sizes, is_k_additive,
};
use heis::Composition;

fn main() {
    let beta: Composition = "2,1".parse().unwrap();
    let gamma: Composition = "2,1".parse().unwrap();

    for a in enumerate_k_matrices(&beta, &gamma) {
        let additive = is_k_additive(&a).unwrap().is_some();
        println!("{}  π = {}, additive: {additive}\n", a, a.pi());
    }

    let h = enumerate_h_matrices(&beta, &gamma).count();
    println!("{h} matrices with row margins {beta} and column margins {gamma}");
    for (alpha, size) in h_class_sizes(&beta, &gamma) {
        println!("  π = {:<10} {size}", alpha.to_string());
    }

    let m = build_constraint_matrix(2, 3);
    println!("\nconstraint matrix for p = 2, q = 3 (rank {}):\n{m}", m.rank());
}
