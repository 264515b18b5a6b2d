use heis::additivity::{generate_stable_triple, k_additive_stable_triple, HMatrix, KMatrix};
use heis::cache::CoefficientCache;
use heis::coefficients::{CoefficientError, CoefficientKind, CoefficientQuery, Engine};
use heis::conformance;
use heis::stability::{classify_triple, stability_check, CertificationBasis, Verdict};
use heis::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn cache_round_trip_preserves_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.tsv");
    let queries: Vec<CoefficientQuery> = [
        (CoefficientKind::LittlewoodRichardson, "4,2,1", "2,1", "2,1,1"),
        (CoefficientKind::Kronecker, "3,2", "3,1,1", "3,1,1"),
        (CoefficientKind::Heisenberg, "3,2,1", "2,1", "2,1"),
        (CoefficientKind::Heisenberg, "0", "0", "0"),
    ]
    .into_iter()
    .map(|(k, l, m, n)| CoefficientQuery::new(k, p(l), p(m), p(n)))
    .collect();
    let direct: Vec<_> = queries.iter().map(|q| q.evaluate_checked().unwrap()).collect();
    for round in 0..2 {
        let mut cache = CoefficientCache::open(&path).unwrap();
        for (q, v) in queries.iter().zip(&direct) {
            for engine in [Engine::Primary, Engine::Oracle] {
                let (got, hit) = cache.evaluate(q, engine).unwrap();
                assert_eq!(&got, v);
                assert_eq!(hit, round == 1);
            }
        }
    }
}

#[test]
fn queries_reject_bad_sizes() {
    let q = CoefficientQuery::new(CoefficientKind::Kronecker, p("3"), p("2"), p("1"));
    assert!(matches!(
        q.evaluate(Engine::Primary),
        Err(CoefficientError::SizeMismatch { .. })
    ));
    let q = CoefficientQuery::new(CoefficientKind::Heisenberg, p("4"), p("1"), p("1"));
    assert!(q.validate().is_err());
}

#[test]
fn additive_matrices_certify_reports() {
    let g = generate_stable_triple(&"0 1\n1 1".parse::<HMatrix>().unwrap()).unwrap();
    let g = g.certified().unwrap();
    let (a, b, c) = g.partitions();
    let report = stability_check(&classify_triple(&a, &b, &c).unwrap(), 3);
    let upgraded = report.certify(g, CertificationBasis::HAdditiveMatrix).unwrap();
    assert_eq!(
        upgraded.verdict,
        Verdict::Certified {
            basis: CertificationBasis::HAdditiveMatrix
        }
    );
    assert!(report.certify(g, CertificationBasis::KAdditiveMatrix).is_none());

    let k = k_additive_stable_triple(&"1 0\n2 1".parse::<KMatrix>().unwrap()).unwrap();
    let k = k.certified().unwrap();
    let (a, b, c) = k.partitions();
    let report = stability_check(&classify_triple(&a, &b, &c).unwrap(), 3);
    assert_eq!(report.verdict, Verdict::InconclusiveUpTo { n_max: 3 });
    assert!(report.certify(k, CertificationBasis::KAdditiveMatrix).is_some());
}

#[test]
fn reference_examples_all_pass() {
    let checks = conformance::run();
    assert!(checks.len() >= 10);
    for c in &checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}
