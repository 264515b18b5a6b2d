//! Persistent coefficient cache in a temporary file.

use heis::cache::CoefficientCache;
use heis::coefficients::{CoefficientKind, CoefficientQuery, Engine};

fn main() {
    let path = std::env::temp_dir().join(format!("heis-example-{}.tsv", std::process::id()));
    let q = CoefficientQuery::new(
        CoefficientKind::Heisenberg,
        "3,2,1".parse().unwrap(),
        "2,1".parse().unwrap(),
        "2,1".parse().unwrap(),
    );
    {
        let mut cache = CoefficientCache::open(&path).unwrap();
        for engine in [Engine::Primary, Engine::Oracle] {
            let (v, hit) = cache.evaluate(&q, engine).unwrap();
            println!("{q} [{engine}] = {v} (hit: {hit})");
        }
    }
    let mut cache = CoefficientCache::open(&path).unwrap();
    let (v, hit) = cache.evaluate(&q, Engine::Primary).unwrap();
    println!("reopened: {v} (hit: {hit})");
    print!("{}", std::fs::read_to_string(&path).unwrap());
    let _ = std::fs::remove_file(&path);
}
