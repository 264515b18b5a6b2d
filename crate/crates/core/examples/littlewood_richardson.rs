//! Littlewood–Richardson coefficients by tableaux and by hives, and the
//! induction product s_μ · s_ν.

use heis::coefficients::{induction_product, lr_coeff, lr_coeff_hive};
use heis::Partition;

fn main() {
    let p = |s: &str| s.parse::<Partition>().unwrap();

    for (lambda, mu, nu) in [("3,2,1", "2,1", "2,1"), ("2,2,1", "2,1", "2"), ("4,2", "2,1", "2,1")] {
        let (lambda, mu, nu) = (p(lambda), p(mu), p(nu));
        let c = lr_coeff(&lambda, &mu, &nu);
        assert_eq!(c, lr_coeff_hive(&lambda, &mu, &nu));
        println!("c({lambda:?}; {mu:?}, {nu:?}) = {c}");
    }

    println!("s(2,1) · s(1,1) = {}", induction_product(&p("2,1"), &p("1,1")));

    let (lambda, mu, nu) = (p("3,2,1"), p("2,1"), p("2,1"));
    for n in 1..=4 {
        println!("scale {n}: {}", lr_coeff(&lambda.scale(n), &mu.scale(n), &nu.scale(n)));
    }
}
