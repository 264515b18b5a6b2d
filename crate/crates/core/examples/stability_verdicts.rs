//! Classifies triples and reports their stability verdicts as JSON.

use heis::stability::{classify_triple, stability_check, DEFAULT_N_MAX};
use heis::Partition;

fn main() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    for (a, b, c) in [
        ("1", "1", "1"),
        ("3,2,1", "3,2,1", "3,2,1"),
        ("2,1", "1", "1,1"),
        ("3,2,1", "2,1", "2,1"),
        ("3", "1,1", "1"),
    ] {
        match classify_triple(&p(a), &p(b), &p(c)) {
            Ok(t) => {
                let report = stability_check(&t, DEFAULT_N_MAX.min(4));
                println!("{}", serde_json::to_string(&report).unwrap());
            }
            Err(e) => println!("({a}; {b}, {c}) is not a triple: {e}"),
        }
    }
}
