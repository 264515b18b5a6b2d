//! The Heisenberg product μ # ν, one degree at a time.

use heis::coefficients::{heisenberg_coeff, heisenberg_component, heisenberg_product, kronecker_product};
use heis::Partition;

fn main() {
    let mu: Partition = "2,1".parse().unwrap();
    let nu: Partition = "1,1".parse().unwrap();

    let product = heisenberg_product(&mu, &nu);
    let (lo, hi) = product.degree_range();
    println!(
        "{mu:?} # {nu:?} has {} constituents in degrees {lo}..={hi}",
        product.length()
    );
    for l in lo..=hi {
        println!("  degree {l}: {}", heisenberg_component(&mu, &nu, l).unwrap());
    }

    let square = heisenberg_component(&mu, &mu, 3).unwrap();
    assert_eq!(square, kronecker_product(&mu, &mu).unwrap());
    println!("lowest degree of {mu:?} # {mu:?}: {square}");

    let lambda: Partition = "3,1".parse().unwrap();
    println!(
        "h({lambda:?}; {mu:?}, {nu:?}) = {}",
        heisenberg_coeff(&lambda, &mu, &nu)
    );
}
