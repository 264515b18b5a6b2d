//! Reference examples with known answers, run by `heis selftest`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::additivity::{
    build_constraint_matrix, check_certificate, flatten_entries, generate_stable_triple, is_h_additive,
    AdditivityCertificate, HMatrix,
};
use crate::coefficients::{heisenberg_coeff, kron_coeff, lr_coeff, lr_coeff_hive, CoefficientKind};
use crate::partition::{partitions_of, Partition};
use crate::stability::{classify_triple, monotonicity_check, stability_check, stabilization_sequence, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The worked 3×4 matrix with margins `(18, 10)` and `(12, 18, 3)`.
pub fn worked_matrix() -> HMatrix {
    HMatrix::new(vec![vec![0, 4, 6, 1], vec![4, 5, 7, 2], vec![2, 3, 5, 0]]).expect("corner is zero")
}

/// Published potentials for [`worked_matrix`].
pub fn worked_potentials() -> AdditivityCertificate {
    AdditivityCertificate::from_integers(&[0, 1, -1], &[0, 1, 3, -2])
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid literal")
}

fn values(seq: &[(usize, BigUint)]) -> Vec<u64> {
    seq.iter().map(|(_, v)| v.to_u64().unwrap_or(u64::MAX)).collect()
}

fn show(c: &AdditivityCertificate) -> String {
    let join = |v: &[num_rational::BigRational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
    format!("x = ({}), y = ({})", join(&c.x), join(&c.y))
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

pub fn run() -> Vec<Check> {
    let mut out = Vec::new();

    let union = lr_coeff_hive(&p(&[2, 2, 1]), &p(&[2, 1]), &p(&[2]));
    let union_lr = lr_coeff(&p(&[2, 2, 1]), &p(&[2, 1]), &p(&[2]));
    out.push(check(
        "union shape has LR coefficient 1 (hives and tableaux)",
        union == BigUint::from(1u8) && union_lr == union,
        format!("hive {union}, tableaux {union_lr}"),
    ));

    let a = worked_matrix();
    let alpha = p(&[7, 6, 5, 5, 4, 4, 3, 2, 2, 1]);
    let member = a.row_margins().parts() == [18, 10] && a.col_margins().parts() == [12, 18, 3] && a.pi() == alpha;
    out.push(check(
        "worked matrix lies in its class",
        member,
        format!("π = {}", a.pi()),
    ));

    let phi = flatten_entries(&a);
    out.push(check(
        "worked matrix flattens in row order without the corner",
        phi == [4, 6, 1, 4, 5, 7, 2, 2, 3, 5, 0],
        format!("{phi:?}"),
    ));

    let solved = is_h_additive(&a).ok().flatten();
    let solver_ok = solved
        .as_ref()
        .is_some_and(|c| check_certificate(&a, c).unwrap_or(false));
    out.push(check(
        "worked matrix is H-additive (solver)",
        solver_ok,
        solved.map_or("rejected".into(), |c| show(&c)),
    ));

    let published = check_certificate(&a, &worked_potentials()).unwrap_or(false);
    out.push(check(
        "published potentials certify the worked matrix",
        published,
        show(&worked_potentials()),
    ));

    let triple = generate_stable_triple(&a).ok().and_then(|g| g.certified().cloned());
    let triple_ok = triple
        .as_ref()
        .is_some_and(|t| t.alpha == alpha && t.beta.parts() == [18, 10] && t.gamma.parts() == [12, 18, 3]);
    out.push(check(
        "worked matrix generates a certified H-stable triple",
        triple_ok,
        triple.map_or("rejected".into(), |t| format!("({}; {}, {})", t.alpha, t.beta, t.gamma)),
    ));

    let m = build_constraint_matrix(2, 3);
    let printed = "0 0 0 1 1 1 1 0 0 0 0\n0 0 0 0 0 0 0 1 1 1 1\n1 0 0 0 1 0 0 0 1 0 0\n0 1 0 0 0 1 0 0 0 1 0\n0 0 1 0 0 0 1 0 0 0 1\n";
    let full_rank = (1..=4).all(|p| (1..=4).all(|q| build_constraint_matrix(p, q).rank() == p + q));
    out.push(check(
        "constraint matrix for p=2, q=3 and full row rank up to 4×4",
        m.to_string() == printed && full_rank,
        format!("rank {}", m.rank()),
    ));

    let unit = classify_triple(&p(&[1]), &p(&[1]), &p(&[1]));
    let unit_ok = unit.as_ref().is_ok_and(|t| {
        t.flags.k && t.flags.h && {
            let r = stability_check(t, 5);
            r.verdict == Verdict::InconclusiveUpTo { n_max: 5 } && values(&r.sequence) == [1; 5]
        }
    });
    out.push(check(
        "((1),(1),(1)) has g and h equal to 1 at every tested scale",
        unit_ok,
        "n = 1..5",
    ));

    let mut superadditive = true;
    let mut witness = String::new();
    for n in 1..=5 {
        for lambda in partitions_of(n).iter() {
            for mu in partitions_of(n).iter() {
                for nu in partitions_of(n).iter() {
                    let g = kron_coeff(lambda, mu, nu).unwrap_or_default();
                    if g < BigUint::from(2u8) {
                        continue;
                    }
                    let g2 = kron_coeff(&lambda.scale(2), &mu.scale(2), &nu.scale(2)).unwrap_or_default();
                    if g2 < BigUint::from(3u8) {
                        superadditive = false;
                    }
                    if witness.is_empty() {
                        witness = format!("g({lambda:?}; {mu:?}, {nu:?}) = {g}, doubled {g2}");
                    }
                }
            }
        }
    }
    out.push(check(
        "a Kronecker coefficient of 2 or more grows to n+1 at scale n",
        superadditive,
        witness,
    ));

    let zero = stabilization_sequence(
        CoefficientKind::LittlewoodRichardson,
        &(p(&[2]), p(&[1, 1]), Partition::empty()),
        &(p(&[1]), p(&[1]), Partition::empty()),
        0..=6,
    );
    let zero_ok = zero.as_ref().is_ok_and(|s| values(s).iter().all(|&v| v == 0));
    out.push(check(
        "sequence with β not inside α is eventually zero",
        zero_ok,
        "n = 0..6",
    ));

    let dir = (p(&[2, 1]), p(&[1]), p(&[1, 1]));
    let h_dir = heisenberg_coeff(&dir.0, &dir.1, &dir.2);
    let mono = monotonicity_check(
        CoefficientKind::Heisenberg,
        &(p(&[3, 1]), p(&[2, 1]), p(&[2])),
        &dir,
        0..=4,
    );
    out.push(check(
        "Heisenberg sequences along a triple are weakly increasing",
        mono.as_ref().is_ok_and(|m| m.weakly_increasing),
        format!(
            "direction h = {h_dir}, values {:?}",
            mono.map(|m| values(&m.sequence)).unwrap_or_default()
        ),
    ));

    let lr_dir = (p(&[3, 2, 1]), p(&[2, 1]), p(&[2, 1]));
    let lr_seq: Vec<u64> = (1..=3)
        .map(|n| {
            lr_coeff(&lr_dir.0.scale(n), &lr_dir.1.scale(n), &lr_dir.2.scale(n))
                .to_u64()
                .unwrap_or(0)
        })
        .collect();
    out.push(check(
        "c = 2 at (3,2,1),(2,1),(2,1) grows to at least n+1",
        lr_seq.iter().enumerate().all(|(i, &v)| v >= i as u64 + 2),
        format!("{lr_seq:?}"),
    ));

    out
}

/// Aligned text table of check results.
pub struct Table<'a>(pub &'a [Check]);

impl fmt::Display for Table<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.0.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in self.0 {
            let pad = width - c.name.chars().count();
            writeln!(
                f,
                "{}  {}{}  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                " ".repeat(pad),
                c.detail
            )?;
        }
        let passed = self.0.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} passed", self.0.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_reference_examples_pass() {
        let checks = run();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(Table(&checks)
            .to_string()
            .ends_with(&format!("{0}/{0} passed", checks.len())));
    }
}
