//! Stabilization sequences and their constant tails.

use heis::coefficients::CoefficientKind;
use heis::stability::{detect_stable_limit, monotonicity_check, stabilization_sequence, DEFAULT_WINDOW};
use heis::Partition;

fn main() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    let unit = (p("1"), p("1"), p("1"));

    for (kind, base) in [
        (CoefficientKind::Kronecker, (p("2,1"), p("2,1"), p("2,1"))),
        (CoefficientKind::Kronecker, (p("1,1,1"), p("2,1"), p("2,1"))),
        (CoefficientKind::Heisenberg, (p("3,1"), p("2,1"), p("2"))),
    ] {
        let seq = stabilization_sequence(kind, &base, &unit, 0..=10).unwrap();
        let values: Vec<_> = seq.into_iter().map(|(_, v)| v).collect();
        let limit = detect_stable_limit(&values, DEFAULT_WINDOW).unwrap();
        let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        println!("{kind} from {base:?}: [{}] -> {limit:?}", shown.join(", "));
    }

    let dir = (p("2,1"), p("1"), p("1,1"));
    let mono = monotonicity_check(CoefficientKind::Heisenberg, &(p("3,1"), p("2,1"), p("2")), &dir, 0..=4).unwrap();
    println!("weakly increasing along {dir:?}: {}", mono.weakly_increasing);
}
