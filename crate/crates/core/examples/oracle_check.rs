//! Cross-checks the primary engines against the complete-homogeneous
//! basis oracle on every query of small size.

use heis::coefficients::{CoefficientKind, CoefficientQuery, Engine};
use heis::partition::partitions_of;

fn main() {
    let mut checked = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            for l in m.max(n)..=m + n {
                for lambda in partitions_of(l).iter() {
                    for mu in partitions_of(m).iter() {
                        for nu in partitions_of(n).iter() {
                            for kind in CoefficientKind::ALL {
                                let q = CoefficientQuery::new(kind, lambda.clone(), mu.clone(), nu.clone());
                                if q.validate().is_err() {
                                    continue;
                                }
                                let v = q.evaluate_checked().unwrap();
                                assert_eq!(v, q.evaluate(Engine::Oracle).unwrap());
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    println!("{checked} queries agree across engines");
}
