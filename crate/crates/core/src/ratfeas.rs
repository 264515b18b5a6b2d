//! Exact feasibility of systems `r · z >= 1` over the rationals, by
//! Fourier–Motzkin elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("row {row} has {len} coefficients, expected {expected}")]
    DimensionMismatch { row: usize, len: usize, expected: usize },
    #[error("intermediate coefficient overflow while eliminating variable {var}")]
    Overflow { var: usize },
    #[error("solution failed re-validation on row {row}")]
    SelfCheck { row: usize },
}

/// Rows `r` over `num_vars` variables, each read as `r · z >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrictSystem {
    pub num_vars: usize,
    pub rows: Vec<Vec<i64>>,
}

impl StrictSystem {
    pub fn new(num_vars: usize) -> Self {
        StrictSystem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<i64>) {
        self.rows.push(row);
    }

    /// Index of the first row `z` violates.
    pub fn first_violation(&self, z: &[BigRational]) -> Option<usize> {
        self.rows.iter().position(|row| {
            let lhs: BigRational = row
                .iter()
                .zip(z)
                .map(|(&c, v)| BigRational::from_integer(c.into()) * v)
                .sum();
            lhs < BigRational::one()
        })
    }

    pub fn is_satisfied_by(&self, z: &[BigRational]) -> bool {
        self.first_violation(z).is_none()
    }

    /// A rational point satisfying every row, or `None` if there is none.
    /// The returned point has been re-checked against the original rows.
    pub fn solve(&self) -> Result<Option<Vec<BigRational>>, SolveError> {
        for (row, r) in self.rows.iter().enumerate() {
            if r.len() != self.num_vars {
                return Err(SolveError::DimensionMismatch {
                    row,
                    len: r.len(),
                    expected: self.num_vars,
                });
            }
        }
        let initial = self
            .rows
            .iter()
            .map(|r| Ineq::new(r.iter().map(|&c| i128::from(c)).collect(), BigRational::one()));
        let Some(mut current) = normalize_all(initial) else {
            return Ok(None);
        };
        // levels[k]: the inequalities whose last nonzero variable is k
        let mut levels: Vec<Vec<Ineq>> = vec![Vec::new(); self.num_vars];
        for var in (0..self.num_vars).rev() {
            let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for ineq in current {
                match ineq.coef[var].signum() {
                    1 => pos.push(ineq),
                    -1 => neg.push(ineq),
                    _ => rest.push(ineq),
                }
            }
            let mut combined = Vec::with_capacity(pos.len() * neg.len());
            for p in &pos {
                for n in &neg {
                    combined.push(p.eliminate(n, var).ok_or(SolveError::Overflow { var })?);
                }
            }
            levels[var] = pos.into_iter().chain(neg).collect();
            let Some(next) = normalize_all(rest.into_iter().chain(combined)) else {
                return Ok(None);
            };
            current = next;
        }
        let mut z = vec![BigRational::zero(); self.num_vars];
        for var in 0..self.num_vars {
            z[var] = pick_value(&levels[var], var, &z);
        }
        if let Some(row) = self.first_violation(&z) {
            return Err(SolveError::SelfCheck { row });
        }
        Ok(Some(z))
    }
}

/// `coef · z >= rhs`.
#[derive(Clone, Debug)]
struct Ineq {
    coef: Vec<i128>,
    rhs: BigRational,
}

impl Ineq {
    fn new(coef: Vec<i128>, rhs: BigRational) -> Self {
        Ineq { coef, rhs }
    }

    /// Divides out the gcd of the coefficients.
    fn normalized(mut self) -> Self {
        let g = self.coef.iter().fold(0i128, |g, &c| g.gcd(&c));
        if g > 1 {
            for c in &mut self.coef {
                *c /= g;
            }
            self.rhs /= BigRational::from_integer(g.into());
        }
        self
    }

    /// Positive combination of `self` (positive in `var`) and `other`
    /// (negative in `var`) that cancels `var`.
    fn eliminate(&self, other: &Ineq, var: usize) -> Option<Ineq> {
        let (a, b) = (self.coef[var], -other.coef[var]);
        let coef = self
            .coef
            .iter()
            .zip(&other.coef)
            .map(|(&x, &y)| b.checked_mul(x)?.checked_add(a.checked_mul(y)?))
            .collect::<Option<Vec<_>>>()?;
        let rhs = BigRational::from_integer(b.into()) * &self.rhs + BigRational::from_integer(a.into()) * &other.rhs;
        Some(Ineq::new(coef, rhs).normalized())
    }
}

/// Normalizes, drops trivially true rows, keeps the strongest of parallel
/// duplicates; `None` on a contradiction `0 >= positive`.
fn normalize_all(ineqs: impl Iterator<Item = Ineq>) -> Option<Vec<Ineq>> {
    let mut best: HashMap<Vec<i128>, BigRational> = HashMap::new();
    for ineq in ineqs {
        let ineq = ineq.normalized();
        if ineq.coef.iter().all(|&c| c == 0) {
            if ineq.rhs.is_positive() {
                return None;
            }
            continue;
        }
        match best.get_mut(&ineq.coef) {
            Some(rhs) if *rhs >= ineq.rhs => {}
            Some(rhs) => *rhs = ineq.rhs,
            None => {
                best.insert(ineq.coef, ineq.rhs);
            }
        }
    }
    let mut out: Vec<Ineq> = best.into_iter().map(|(coef, rhs)| Ineq { coef, rhs }).collect();
    out.sort_by(|a, b| a.coef.cmp(&b.coef));
    Some(out)
}

/// The value for `var` closest to an integer near zero, given the earlier
/// variables already fixed in `z`.
fn pick_value(level: &[Ineq], var: usize, z: &[BigRational]) -> BigRational {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for ineq in level {
        let rest: BigRational = (0..var)
            .map(|k| BigRational::from_integer(ineq.coef[k].into()) * &z[k])
            .sum();
        let a = BigRational::from_integer(ineq.coef[var].into());
        let bound = (&ineq.rhs - rest) / &a;
        if a.is_positive() {
            lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
        } else {
            hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
        }
    }
    match (lo, hi) {
        (None, None) => BigRational::zero(),
        (Some(l), None) => l.ceil().max(BigRational::zero()),
        (None, Some(h)) => h.floor().min(BigRational::zero()),
        (Some(l), Some(h)) => {
            let zero = BigRational::zero();
            if l <= zero && zero <= h {
                zero
            } else if l.is_positive() {
                let c = l.ceil();
                if c <= h {
                    c
                } else {
                    l
                }
            } else {
                let f = h.floor();
                if f >= l {
                    f
                } else {
                    h
                }
            }
        }
    }
}

/// Rank over the rationals of an integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let (a, b) = (m[rank][col].clone(), m[r][col].clone());
                let pivot_row = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x * &a - p * &b;
                }
                let g = m[r].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                if !g.is_zero() && !g.is_one() {
                    for x in &mut m[r] {
                        *x /= &g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Smallest common denominator of `z`, for display.
pub fn common_denominator(z: &[BigRational]) -> BigInt {
    z.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// `z` as plain integers when every entry is integral.
pub fn as_integers(z: &[BigRational]) -> Option<Vec<i64>> {
    z.iter()
        .map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(num_vars: usize, rows: &[&[i64]]) -> StrictSystem {
        StrictSystem {
            num_vars,
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        }
    }

    /// Feasibility by vertex enumeration: a nonempty polyhedron meets some
    /// coordinate subspace in a pointed polyhedron, whose vertices are
    /// solutions of square subsystems drawn from the rows and unit vectors.
    fn feasible_by_vertices(s: &StrictSystem) -> bool {
        let n = s.num_vars;
        if s.rows.is_empty() {
            return true;
        }
        if n == 0 {
            return false;
        }
        let mut candidates: Vec<(Vec<i64>, i64)> = s.rows.iter().map(|r| (r.clone(), 1)).collect();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            candidates.push((e, 0));
        }
        let m = candidates.len();
        let mut chosen = Vec::new();
        fn subsets(
            start: usize,
            m: usize,
            n: usize,
            chosen: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            if chosen.len() == n {
                return f(chosen);
            }
            for i in start..m {
                chosen.push(i);
                if subsets(i + 1, m, n, chosen, f) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        subsets(0, m, n, &mut chosen, &mut |idx| {
            let a: Vec<Vec<BigRational>> = idx
                .iter()
                .map(|&i| {
                    candidates[i]
                        .0
                        .iter()
                        .map(|&c| BigRational::from_integer(c.into()))
                        .collect()
                })
                .collect();
            let b: Vec<BigRational> = idx
                .iter()
                .map(|&i| BigRational::from_integer(candidates[i].1.into()))
                .collect();
            match gauss_solve(a, b) {
                Some(z) => s.is_satisfied_by(&z),
                None => false,
            }
        })
    }

    fn gauss_solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
        let n = b.len();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[col][col];
                    let pivot_row = a[col].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                    let v = &f * &b[col];
                    b[r] -= v;
                }
            }
        }
        Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
    }

    fn grid_witness(s: &StrictSystem) -> bool {
        let values: Vec<BigRational> = (-12..=12)
            .flat_map(|num| (1..=4).map(move |den| BigRational::new(BigInt::from(num), BigInt::from(den))))
            .collect();
        let mut z = vec![BigRational::zero(); s.num_vars];
        fn go(k: usize, z: &mut Vec<BigRational>, values: &[BigRational], s: &StrictSystem) -> bool {
            if k == z.len() {
                return s.is_satisfied_by(z);
            }
            for v in values {
                z[k] = v.clone();
                if go(k + 1, z, values, s) {
                    return true;
                }
            }
            false
        }
        go(0, &mut z, &values, s)
    }

    #[test]
    fn trivial_systems() {
        assert_eq!(sys(2, &[]).solve().unwrap(), Some(vec![BigRational::zero(); 2]));
        assert_eq!(sys(1, &[&[1], &[-1]]).solve().unwrap(), None);
        assert_eq!(sys(0, &[&[]]).solve().unwrap(), None);
        let z = sys(2, &[&[1, 0], &[-1, 2]]).solve().unwrap().unwrap();
        assert!(sys(2, &[&[1, 0], &[-1, 2]]).is_satisfied_by(&z));
        assert!(matches!(
            sys(2, &[&[1]]).solve(),
            Err(SolveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mixed_systems() {
        // 2x >= 1, y - 2x >= 1, -y >= 1
        assert_eq!(sys(2, &[&[2, 0], &[-2, 1], &[0, -1]]).solve().unwrap(), None);
        assert_eq!(sys(1, &[&[3], &[-3]]).solve().unwrap(), None);
        assert_eq!(sys(2, &[&[3, 1], &[-3, 1], &[0, -1]]).solve().unwrap(), None);
        for rows in [&[&[2, 0][..], &[-2, -1]][..], &[&[1, -1], &[1, 1], &[-1, 3]]] {
            let s = sys(2, rows);
            let z = s.solve().unwrap().unwrap();
            assert!(s.is_satisfied_by(&z));
        }
    }

    #[test]
    fn agrees_with_vertex_enumeration() {
        // every system of up to three rows over two variables, coefficients in -2..=2
        let coeffs: Vec<Vec<i64>> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| vec![a, b])).collect();
        let mut checked = 0;
        for (i, r1) in coeffs.iter().enumerate() {
            for (j, r2) in coeffs.iter().enumerate().skip(i) {
                for r3 in coeffs.iter().skip(j).step_by(3) {
                    let s = StrictSystem {
                        num_vars: 2,
                        rows: vec![r1.clone(), r2.clone(), r3.clone()],
                    };
                    let solved = s.solve().unwrap();
                    assert_eq!(solved.is_some(), feasible_by_vertices(&s), "{s:?}");
                    if grid_witness(&s) {
                        assert!(solved.is_some());
                    }
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
