//! An H-additive matrix, its potentials, and the stable triple it yields.

use heis::additivity::{check_certificate, generate_stable_triple, is_h_additive, HMatrix, TripleGeneration};
use heis::stability::{classify_triple, stability_check, CertificationBasis};

fn main() {
    let a: HMatrix = "0 4 6 1\n4 5 7 2\n2 3 5 0".parse().unwrap();
    println!("A =\n{a}");
    println!("margins {} and {}, π = {}", a.row_margins(), a.col_margins(), a.pi());

    let cert = is_h_additive(&a).unwrap().expect("additive");
    assert!(check_certificate(&a, &cert).unwrap());
    println!("potentials: {}", serde_json::to_string(&cert).unwrap());

    let TripleGeneration::Certified(g) = generate_stable_triple(&a).unwrap() else {
        unreachable!()
    };
    println!("stable triple ({}; {}, {})", g.alpha, g.beta, g.gamma);

    let small: HMatrix = "0 1\n1 1".parse().unwrap();
    let g = generate_stable_triple(&small).unwrap().certified().cloned().unwrap();
    let (alpha, beta, gamma) = g.partitions();
    let t = classify_triple(&alpha, &beta, &gamma).unwrap();
    let report = stability_check(&t, 4)
        .certify(&g, CertificationBasis::HAdditiveMatrix)
        .unwrap();
    println!("{}", serde_json::to_string(&report).unwrap());

    let identity: HMatrix = "0 1 0\n1 1 0\n0 0 1".parse().unwrap();
    println!(
        "inner identity additive: {}",
        is_h_additive(&identity).unwrap().is_some()
    );
}
